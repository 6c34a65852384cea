# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import collections
import itertools
import logging
import threading
import typing as ty
from dataclasses import dataclass

import numpy as np

from permod.permgrp.exceptions import (
    NotTransitiveError,
    ElementCapExceededError,
    NotABlockError)
from permod.utils.config import element_cap
from permod.utils.validation import validate_points

logger = logging.getLogger(__name__)


class Permutation:
    """
    Permutation of the points {0, ..., n-1}, acting from the right.

    The product g * h applies g first and then h, so that
    i.(g * h) = (i.g).h.

    Parameters
    ----------
    images : sequence(int)
        images[i] is the image of point i

    """
    __slots__ = ("_images", "_key")

    def __init__(self, images: ty.Union[ty.Sequence[int], np.ndarray]) -> None:
        arr = np.array(images, dtype=np.int64).reshape(-1)
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise ValueError(f"images {list(arr)} do not form a permutation "
                             f"of {{0, ..., {arr.size - 1}}}")
        arr.flags.writeable = False
        self._images = arr
        self._key = arr.tobytes()

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(np.arange(n))

    @classmethod
    def from_cycles(cls, n: int,
                    cycles: ty.Iterable[ty.Sequence[int]]) -> Permutation:
        """Creates a permutation from disjoint cycles, e.g. [(0, 1, 2)]"""
        images = list(range(n))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return self._images.size

    @property
    def images(self) -> np.ndarray:
        """Returns the (read-only) image array"""
        return self._images

    def __call__(self, i: int) -> int:
        return int(self._images[i])

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("permutations of different degrees")
        return Permutation(other._images[self._images])

    def __pow__(self, e: int) -> Permutation:
        if e < 0:
            return self.inverse() ** (-e)
        result = Permutation.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> Permutation:
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree)
        return Permutation(inv)

    def is_identity(self) -> bool:
        return bool(np.all(self._images == np.arange(self.degree)))

    def order(self) -> int:
        """Returns the order, the lcm of the cycle lengths"""
        result = 1
        for cycle in self.cycles():
            result = np.lcm(result, len(cycle))
        return int(result)

    def cycles(self) -> ty.List[ty.Tuple[int, ...]]:
        """Returns the nontrivial cycles, each starting at its least point"""
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def apply_to_set(self, points: ty.Iterable[int]) -> ty.FrozenSet[int]:
        """Returns the image of a set of points"""
        return frozenset(int(self._images[x]) for x in points)

    def to_list(self) -> ty.List[int]:
        return [int(x) for x in self._images]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in c) + ")"
                       for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self.to_list()})"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return Permutation, (self.to_list(),)


@dataclass(frozen=True)
class BlockSystem:
    """Partition of the points into blocks permuted by a group."""
    blocks: ty.Tuple[ty.FrozenSet[int], ...]

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def is_trivial(self) -> bool:
        return self.block_size == 1 or len(self.blocks) == 1

    def validate(self, group: PermGroup) -> None:
        """Raises NotABlockError unless every generator maps blocks onto
        blocks and the blocks have equal size"""
        sizes = {len(b) for b in self.blocks}
        if len(sizes) != 1:
            raise NotABlockError("blocks have different sizes")
        cells = set(self.blocks)
        for g in group.generators:
            for block in self.blocks:
                if g.apply_to_set(block) not in cells:
                    raise NotABlockError(f"{g} does not permute the blocks")


class PermGroup:
    """
    Permutation group on {0, ..., n-1} given by generators.

    The full element list is computed on demand by breadth-first closure
    and memoized; the computation is guarded by a lock so that concurrent
    readers enumerate the group only once.

    Parameters
    ----------
    generators : sequence(Permutation or sequence(int))
        generating permutations, all of degree n
    n : int, optional
        degree; required if there are no generators

    """
    def __init__(self,
                 generators: ty.Sequence[ty.Union[Permutation,
                                                  ty.Sequence[int]]],
                 n: ty.Optional[int] = None) -> None:
        gens = [g if isinstance(g, Permutation) else Permutation(g)
                for g in generators]
        if n is None:
            if not gens:
                raise ValueError("<n> is required for a group without "
                                 "generators")
            n = gens[0].degree
        if any(g.degree != n for g in gens):
            raise ValueError(f"all generators must have degree {n}")
        if n < 1:
            raise ValueError("<n> must be at least 1")
        self._n = n
        self._generators = tuple(gens)
        self._elements: ty.Optional[ty.List[Permutation]] = None
        self._lock = threading.Lock()

    def __getstate__(self) -> ty.Dict[str, ty.Any]:
        state = self.__dict__.copy()
        del state["_lock"]
        return state

    def __setstate__(self, state: ty.Dict[str, ty.Any]) -> None:
        self.__dict__.update(state)
        self._lock = threading.Lock()

    @property
    def n(self) -> int:
        """Returns the degree, the number of points"""
        return self._n

    @property
    def generators(self) -> ty.Tuple[Permutation, ...]:
        return self._generators

    def identity(self) -> Permutation:
        return Permutation.identity(self._n)

    def group_elements(self,
                       cap: ty.Optional[int] = None) -> ty.List[Permutation]:
        """
        Enumerates all elements by breadth-first closure over the
        generators, identity first, in order of discovery.

        Parameters
        ----------
        cap : int, optional
            maximal number of elements; defaults to element_cap()

        Returns
        -------
        elements : list(Permutation)

        """
        if cap is None:
            cap = element_cap()
        with self._lock:
            if self._elements is None:
                self._elements = self._enumerate(cap)
            elif len(self._elements) > cap:
                raise ElementCapExceededError(
                    f"group has {len(self._elements)} elements, cap is {cap}")
            return list(self._elements)

    def _enumerate(self, cap: int) -> ty.List[Permutation]:
        identity = self.identity()
        elements = [identity]
        seen = {identity}
        queue = collections.deque([identity])
        while queue:
            g = queue.popleft()
            for s in self._generators:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    elements.append(h)
                    if len(elements) > cap:
                        raise ElementCapExceededError(
                            f"group has more than {cap} elements")
                    queue.append(h)
        logger.debug("enumerated %d elements of a group of degree %d",
                     len(elements), self._n)
        return elements

    def order(self) -> int:
        return len(self.group_elements())

    def orbit(self, x: int) -> ty.List[int]:
        """Returns the orbit of a point in order of discovery"""
        orbit = [x]
        seen = {x}
        queue = collections.deque([x])
        while queue:
            y = queue.popleft()
            for g in self._generators:
                z = g(y)
                if z not in seen:
                    seen.add(z)
                    orbit.append(z)
                    queue.append(z)
        return orbit

    def orbits(self) -> ty.List[ty.List[int]]:
        """Returns all orbits, each sorted, ordered by least point"""
        seen: ty.Set[int] = set()
        result = []
        for x in range(self._n):
            if x not in seen:
                orbit = sorted(self.orbit(x))
                seen.update(orbit)
                result.append(orbit)
        return result

    def set_orbit(self, points: ty.Iterable[int]) -> ty.List[ty.FrozenSet[int]]:
        """Returns the distinct translates X.g of a set of points, in order
        of discovery under the generators"""
        start = frozenset(points)
        orbit = [start]
        seen = {start}
        queue = collections.deque([start])
        while queue:
            s = queue.popleft()
            for g in self._generators:
                image = g.apply_to_set(s)
                if image not in seen:
                    seen.add(image)
                    orbit.append(image)
                    queue.append(image)
        return orbit

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self._n

    def _require_transitive(self) -> None:
        if not self.is_transitive():
            raise NotTransitiveError(f"group of degree {self._n} has "
                                     f"{len(self.orbits())} orbits")

    def minimal_block(self, a: int, b: int) -> ty.FrozenSet[int]:
        """
        Computes the smallest block containing the points a and b by
        union-find refinement: starting from a ~ b, whenever i ~ j is
        merged, the classes of i.g and j.g are merged for every generator g.

        Parameters
        ----------
        a : int
            first point
        b : int
            second point, different from a

        Returns
        -------
        block : frozenset(int)
            the class of a

        """
        self._require_transitive()
        if a == b:
            raise ValueError("<a> and <b> must be different points")
        validate_points((a, b), self._n, "a, b")
        parent = list(range(self._n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(b)] = find(a)
        queue = collections.deque([(a, b)])
        while queue:
            i, j = queue.popleft()
            for g in self._generators:
                ri, rj = find(g(i)), find(g(j))
                if ri != rj:
                    parent[rj] = ri
                    queue.append((ri, rj))
        root = find(a)
        return frozenset(x for x in range(self._n) if find(x) == root)

    def is_block(self, points: ty.Iterable[int]) -> bool:
        """Checks whether a nonempty set of points is a block, i.e. its
        translates are pairwise equal or disjoint"""
        points = validate_points(list(points), self._n)
        if not points:
            return False
        translates = self.set_orbit(points)
        covered: ty.Set[int] = set()
        for t in translates:
            if covered & t:
                return False
            covered |= t
        return True

    def block_system(self, block: ty.Iterable[int]) -> BlockSystem:
        """Returns the system of translates of a block"""
        block = frozenset(block)
        if not self.is_block(block):
            raise NotABlockError(f"{sorted(block)} is not a block")
        translates = sorted(self.set_orbit(block), key=min)
        return BlockSystem(blocks=tuple(translates))

    def is_primitive(self) -> bool:
        """Checks whether the group is transitive and has only trivial
        blocks"""
        self._require_transitive()
        for b in range(1, self._n):
            if len(self.minimal_block(0, b)) < self._n:
                return False
        return True

    def nontrivial_block(self) -> ty.Optional[ty.FrozenSet[int]]:
        """Returns a smallest-found nontrivial block through 0, if any"""
        self._require_transitive()
        for b in range(1, self._n):
            block = self.minimal_block(0, b)
            if len(block) < self._n:
                return block
        return None

    def is_doubly_transitive(self) -> bool:
        """Checks whether the group acts transitively on ordered pairs of
        distinct points"""
        self._require_transitive()
        if self._n < 2:
            raise ValueError("double transitivity needs at least 2 points")
        start = (0, 1)
        seen = {start}
        queue = collections.deque([start])
        while queue:
            i, j = queue.popleft()
            for g in self._generators:
                image = (g(i), g(j))
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return len(seen) == self._n * (self._n - 1)

    def pairs(self) -> ty.List[ty.Tuple[int, int]]:
        """Returns the 2-subsets {i, j}, i < j, in lexicographic order,
        which is the point order of pairs_action()"""
        return list(itertools.combinations(range(self._n), 2))

    def pairs_action(self) -> PermGroup:
        """
        Returns the induced action on the n(n-1)/2 unordered pairs of
        points, indexed lexicographically.

        Returns
        -------
        group : PermGroup

        """
        if self._n < 2:
            raise ValueError("the pairs action needs at least 2 points")
        generators = [pair_permutation(g) for g in self._generators]
        return PermGroup(generators, n=self._n * (self._n - 1) // 2)

    def induced_action(self,
                       sets: ty.Sequence[ty.FrozenSet[int]]) -> PermGroup:
        """
        Returns the action on a G-invariant list of point sets; set k of
        the list becomes point k.

        Parameters
        ----------
        sets : sequence(frozenset(int))
            distinct sets, closed under the group

        Returns
        -------
        group : PermGroup

        """
        index = {frozenset(s): k for k, s in enumerate(sets)}
        if len(index) != len(sets):
            raise ValueError("<sets> must be distinct")
        generators = []
        for g in self._generators:
            images = []
            for s in sets:
                image = g.apply_to_set(s)
                if image not in index:
                    raise ValueError("<sets> is not closed under the group")
                images.append(index[image])
            generators.append(Permutation(images))
        return PermGroup(generators, n=len(sets))

    def point_stabilizer(self, x: int) -> ty.List[Permutation]:
        """Returns all elements fixing the point x"""
        validate_points(x, self._n, "x")
        return [g for g in self.group_elements() if g(x) == x]

    def setwise_stabilizer(self,
                           points: ty.Iterable[int]) -> ty.List[Permutation]:
        """Returns all elements g with X.g = X"""
        points = validate_points(list(points), self._n)
        return [g for g in self.group_elements()
                if g.apply_to_set(points) == points]

    def subgroup(self, elements: ty.Sequence[Permutation]) -> PermGroup:
        """Returns the group generated by the given elements"""
        return PermGroup(list(elements), n=self._n)

    def regular_cyclic_generator(self) -> ty.Optional[Permutation]:
        """Returns the first enumerated n-cycle if the group is cyclic of
        order n acting regularly, else None"""
        elements = self.group_elements()
        if len(elements) != self._n:
            return None
        if self._n == 1:
            return elements[0]
        for g in elements:
            cycles = g.cycles()
            if len(cycles) == 1 and len(cycles[0]) == self._n:
                return g
        return None

    def __repr__(self) -> str:
        return f"PermGroup(n={self._n}, generators=" \
               f"{[g.to_list() for g in self._generators]})"


def pair_index(i: int, j: int, n: int) -> int:
    """Returns the lexicographic index of the pair {i, j} among the
    2-subsets of {0, ..., n-1}"""
    if i > j:
        i, j = j, i
    if i == j:
        raise ValueError("a pair needs two different points")
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def pair_permutation(g: Permutation) -> Permutation:
    """Returns the permutation that g induces on the lexicographically
    indexed 2-subsets"""
    n = g.degree
    return Permutation([pair_index(g(i), g(j), n)
                        for i, j in itertools.combinations(range(n), 2)])
