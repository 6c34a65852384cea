# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import collections
import itertools
import logging
import typing as ty
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from permod.ff.ff import FiniteField, FieldEmbedding, find_element_of_order
from permod.linalg.field import AbstractField
from permod.linalg.linalg import Matrix, RowSpace, subspace_intersect
from permod.modules.enums import EqualityCase
from permod.modules.exceptions import (
    ZeroVectorError,
    PreconditionError,
    NotAnEqualityInstanceError,
    BruteForceCapError)
from permod.permgrp.constructors import affine_group
from permod.permgrp.exceptions import NotTransitiveError, NotABlockError
from permod.permgrp.permgrp import Permutation, PermGroup
from permod.utils.config import DEFAULT_BRUTE_FORCE_CAP
from permod.utils.exceptions import InvariantViolationError
from permod.utils.validation import validate_points

logger = logging.getLogger(__name__)


class ModVector:
    """
    Element of the permutation module F[S] of a group acting on
    S = {0, ..., n-1}: the formal combination sum_x coeffs[x] s_x.

    Parameters
    ----------
    group : PermGroup
        group acting on the points
    field : AbstractField
        coefficient field
    coeffs : sequence
        n coefficients, indexed by point

    """
    __slots__ = ("_group", "_field", "_coeffs")

    def __init__(self,
                 group: PermGroup,
                 field: AbstractField,
                 coeffs: ty.Sequence[ty.Any]) -> None:
        if len(coeffs) != group.n:
            raise ValueError(f"expected {group.n} coefficients, got "
                             f"{len(coeffs)}")
        self._group = group
        self._field = field
        self._coeffs = tuple(field.coerce(c) for c in coeffs)

    @classmethod
    def from_points(cls,
                    group: PermGroup,
                    field: AbstractField,
                    points: ty.Iterable[int],
                    coeff: ty.Any = 1) -> ModVector:
        """Returns coeff * (sum of s_x over the given points)"""
        points = validate_points(list(points), group.n)
        return cls(group, field, [coeff if x in points else 0
                                  for x in range(group.n)])

    @property
    def group(self) -> PermGroup:
        return self._group

    @property
    def field(self) -> AbstractField:
        return self._field

    @property
    def coeffs(self) -> ty.Tuple[ty.Any, ...]:
        return self._coeffs

    @property
    def n(self) -> int:
        return self._group.n

    def support(self) -> ty.FrozenSet[int]:
        """Returns supp v, the points with nonzero coefficient"""
        return frozenset(x for x, c in enumerate(self._coeffs)
                         if not self._field.is_zero(c))

    @property
    def t(self) -> int:
        """Returns t(v) = |supp v|"""
        return len(self.support())

    def is_zero(self) -> bool:
        return not self.support()

    def translate(self, g: Permutation) -> ModVector:
        """Returns v.g, which carries the coefficient of x to x.g"""
        new = [self._field.zero()] * self.n
        for x, c in enumerate(self._coeffs):
            new[g(x)] = c
        return ModVector(self._group, self._field, new)

    def lift(self, embedding: FieldEmbedding) -> ModVector:
        """Returns the same vector with coefficients in a larger field"""
        return ModVector(self._group, embedding.ext,
                         [embedding(c) for c in self._coeffs])

    def __add__(self, other: ModVector) -> ModVector:
        return ModVector(self._group, self._field,
                         [x + y for x, y in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: ModVector) -> ModVector:
        return ModVector(self._group, self._field,
                         [x - y for x, y in zip(self._coeffs, other._coeffs)])

    def __mul__(self, scalar: ty.Any) -> ModVector:
        scalar = self._field.coerce(scalar)
        return ModVector(self._group, self._field,
                         [scalar * c for c in self._coeffs])

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModVector):
            return NotImplemented
        return self._field == other._field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def to_literal(self) -> str:
        return ",".join(str(c) for c in self._coeffs)

    def __repr__(self) -> str:
        return f"ModVector({self._field}, [{self.to_literal()}])"


class SubmoduleBasis:
    """
    Submodule of a permutation module, held as a semi-echelon basis (see
    RowSpace) in insertion order.

    Parameters
    ----------
    group : PermGroup
        group acting on the points
    space : RowSpace
        the subspace; it must be closed under the group

    """
    def __init__(self, group: PermGroup, space: RowSpace) -> None:
        self._group = group
        self._space = space

    @classmethod
    def full(cls, group: PermGroup, field: AbstractField) -> SubmoduleBasis:
        """Returns the whole permutation module F[S]"""
        space = RowSpace(field, group.n)
        for x in range(group.n):
            space.insert([1 if y == x else 0 for y in range(group.n)])
        return cls(group, space)

    @property
    def group(self) -> PermGroup:
        return self._group

    @property
    def field(self) -> AbstractField:
        return self._space.field

    @property
    def n(self) -> int:
        return self._group.n

    @property
    def dim(self) -> int:
        return self._space.dim

    @property
    def space(self) -> RowSpace:
        return self._space

    @property
    def basis(self) -> ty.List[ModVector]:
        return [ModVector(self._group, self.field, row)
                for row in self._space.basis]

    def contains(self, v: ModVector) -> bool:
        return self._space.contains(v.coeffs)

    def is_closed(self) -> bool:
        """Checks that every basis row translated by every generator lies
        in the submodule"""
        return all(self.contains(b.translate(g))
                   for b in self.basis for g in self._group.generators)

    def lift(self, embedding: FieldEmbedding) -> SubmoduleBasis:
        """Returns E M, the submodule spanned over a larger field"""
        return submodule_closure([b.lift(embedding) for b in self.basis],
                                 self._group, embedding.ext)

    def __repr__(self) -> str:
        return f"SubmoduleBasis(dim={self.dim}, n={self.n}, " \
               f"field={self.field})"


def submodule_closure(vectors: ty.Sequence[ModVector],
                      group: PermGroup,
                      field: AbstractField) -> SubmoduleBasis:
    """
    Computes the submodule generated by a set of vectors by worklist
    closure under the generators of the group.

    Parameters
    ----------
    vectors : sequence(ModVector)
        generating vectors
    group : PermGroup
        acting group
    field : AbstractField
        coefficient field

    Returns
    -------
    submodule : SubmoduleBasis

    """
    space = RowSpace(field, group.n)
    queue: ty.Deque[ModVector] = collections.deque()
    for v in vectors:
        if space.insert(v.coeffs):
            queue.append(v)
    while queue:
        w = queue.popleft()
        for g in group.generators:
            u = w.translate(g)
            if space.insert(u.coeffs):
                queue.append(u)
    return SubmoduleBasis(group, space)


def generated_submodule(v: ModVector) -> SubmoduleBasis:
    """
    Computes <v>, the span of all translates v.g, without enumerating the
    group: translates of inserted vectors by the generators are added until
    nothing new appears.

    Parameters
    ----------
    v : ModVector
        nonzero vector

    Returns
    -------
    submodule : SubmoduleBasis
        its dimension is d(v)

    """
    if v.is_zero():
        raise ZeroVectorError()
    return submodule_closure([v], v.group, v.field)


def translate_matrix(v: ModVector) -> Matrix:
    """Returns the |G| x n matrix whose rows are the translates v.g over all
    enumerated elements g; its rank is d(v)"""
    return Matrix(v.field, [v.translate(g).coeffs
                            for g in v.group.group_elements()])


@dataclass
class EqualityReport:
    """Support/dimension data of a vector and the equality case it is in."""
    n: int
    t: int
    d: int
    holds_b: bool
    holds_c: ty.Optional[bool]
    case: EqualityCase
    primitive: bool
    omega: ty.List[ty.FrozenSet[int]] = dc_field(default_factory=list)
    conclusions: ty.Dict[str, bool] = dc_field(default_factory=dict)

    @property
    def omega_size(self) -> ty.Optional[int]:
        return len(self.omega) if self.omega else None

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        """Returns the JSON report"""
        return {"n": self.n,
                "t": self.t,
                "d": self.d,
                "holds_B": self.holds_b,
                "holds_C": self.holds_c,
                "case": self.case.value,
                "omega_size": self.omega_size,
                "conclusions": dict(sorted(self.conclusions.items()))}


def _classify(t: int, d: int, n: int, primitive: bool) -> EqualityCase:
    if t == 1:
        return EqualityCase.SINGLE_POINT
    pair_equality = primitive and (t + 1) * d == 2 * n
    if pair_equality and t == n - 1:
        return EqualityCase.CO_POINT
    if t * d == n:
        return EqualityCase.BLOCK
    if pair_equality and 1 < t < n - 1:
        return EqualityCase.PAIR
    return EqualityCase.NONE


def verify_inequalities(v: ModVector) -> EqualityReport:
    """
    Computes t, d and n for a vector of a transitive permutation module and
    checks td >= n, plus (t+1)d >= 2n when the action is primitive and
    t < n. Equality cases are classified; vectors in the pair-equality
    window are analyzed further with equality_analysis().

    Parameters
    ----------
    v : ModVector
        nonzero vector

    Returns
    -------
    report : EqualityReport
        holds_c is None when the primitive inequality does not apply

    """
    if v.is_zero():
        raise ZeroVectorError()
    group = v.group
    if not group.is_transitive():
        raise NotTransitiveError()
    n, t = v.n, v.t
    d = generated_submodule(v).dim
    primitive = group.is_primitive()

    holds_b = t * d >= n
    if not holds_b:
        raise InvariantViolationError(f"td = {t * d} < n = {n} for {v!r}")
    holds_c = None
    if primitive and 1 <= t < n:
        holds_c = (t + 1) * d >= 2 * n
        if not holds_c:
            raise InvariantViolationError(
                f"(t+1)d = {(t + 1) * d} < 2n = {2 * n} for {v!r} in a "
                f"primitive module")

    case = _classify(t, d, n, primitive)
    report = EqualityReport(n=n, t=t, d=d, holds_b=holds_b, holds_c=holds_c,
                            case=case, primitive=primitive)
    if case is EqualityCase.PAIR:
        analysis = equality_analysis(v)
        report.omega = analysis.omega
        report.conclusions = analysis.conclusions
    logger.debug("t=%d d=%d n=%d case=%s", t, d, n, case.value)
    return report


def _lambda_value(lam: ty.Union[None, ty.Mapping[Permutation, ty.Any],
                                ty.Callable[[Permutation], ty.Any]],
                  h: Permutation,
                  field: AbstractField) -> ty.Any:
    if lam is None:
        return field.one()
    if callable(lam):
        return field.coerce(lam(h))
    return field.coerce(lam[h])


def block_vector(group: PermGroup,
                 block: ty.Iterable[int],
                 lam: ty.Union[None, ty.Mapping[Permutation, ty.Any],
                               ty.Callable[[Permutation], ty.Any]],
                 field: AbstractField) -> ModVector:
    """
    Constructs the vector determined by a block, a homomorphism on the
    block stabilizer and the scalar 1: with x the least point of the block,
    the coefficient of x.h is lam(h^-1) for h in the setwise stabilizer.
    Such vectors satisfy td = n.

    Parameters
    ----------
    group : PermGroup
        transitive group
    block : iterable(int)
        block of imprimitivity (singletons and the whole set allowed)
    lam : mapping or callable, optional
        homomorphism from the setwise stabilizer to the units of the
        field, trivial on the stabilizer of x; None means the trivial one
    field : AbstractField
        coefficient field

    Returns
    -------
    v : ModVector

    """
    block = validate_points(list(block), group.n, "block")
    if not group.is_transitive():
        raise NotTransitiveError()
    if not group.is_block(block):
        raise NotABlockError(f"{sorted(block)} is not a block")

    stabilizer = group.setwise_stabilizer(block)
    values = {h: _lambda_value(lam, h, field) for h in stabilizer}
    if any(field.is_zero(value) for value in values.values()):
        raise ValueError("<lam> must take unit values")
    for h1, h2 in itertools.product(stabilizer, repeat=2):
        if values[h1 * h2] != values[h1] * values[h2]:
            raise ValueError("<lam> is not a homomorphism on the block "
                             "stabilizer")

    x = min(block)
    coeffs: ty.List[ty.Any] = [field.zero()] * group.n
    assigned: ty.Dict[int, ty.Any] = {}
    for h in stabilizer:
        y = h(x)
        value = values[h.inverse()]
        if y in assigned and assigned[y] != value:
            raise ValueError("<lam> is not trivial on the point stabilizer")
        assigned[y] = value
        coeffs[y] = value
    v = ModVector(group, field, coeffs)

    d = generated_submodule(v).dim
    if v.t * d != group.n:
        raise InvariantViolationError(f"block vector has td = {v.t * d} but "
                                      f"n = {group.n}")
    return v


def small_support_vector(m: SubmoduleBasis) -> ModVector:
    """
    Finds a vector v in a nonzero submodule M with t(v) + d(v) <= n + 1 by
    intersecting M with the coordinate subspace on the first n + 1 - dim M
    points.

    Parameters
    ----------
    m : SubmoduleBasis
        nonzero submodule

    Returns
    -------
    v : ModVector
        first basis vector of the intersection

    """
    if m.dim == 0:
        raise ZeroVectorError("submodule must not be zero")
    n, field = m.n, m.field
    points = range(n + 1 - m.dim)
    coordinate = [[1 if y == x else 0 for y in range(n)] for x in points]
    intersection = subspace_intersect(coordinate, m.space.basis, field)
    if not intersection:
        raise InvariantViolationError("dimension count guarantees a nonzero "
                                      "intersection")
    v = ModVector(m.group, field, intersection[0])
    d = generated_submodule(v).dim
    if v.t + d > n + 1:
        raise InvariantViolationError(f"t + d = {v.t + d} exceeds n + 1 = "
                                      f"{n + 1}")
    return v


@dataclass(frozen=True)
class OrbitSumReport:
    """Checks on the orbit-sum vector of an intransitive subgroup K."""
    t: int
    d: int
    n: int
    index: int
    conclusions: ty.Dict[str, bool]


def _generated_orbit(elements: ty.Sequence[Permutation],
                     x: int) -> ty.List[int]:
    orbit = [x]
    seen = {x}
    queue = collections.deque([x])
    while queue:
        y = queue.popleft()
        for k in elements:
            z = k(y)
            if z not in seen:
                seen.add(z)
                orbit.append(z)
                queue.append(z)
    return orbit


def orbit_sum_vector(group: PermGroup,
                     x: int,
                     subgroup: ty.Sequence[Permutation],
                     field: AbstractField) -> ty.Tuple[ModVector,
                                                       OrbitSumReport]:
    """
    Constructs v = sum of s_y over the K-orbit of x for a subgroup K of a
    primitive group G. With H the stabilizer of x, K must satisfy
    1: |H : H n K| = 2, 2: K is not contained in H, 3: K is intransitive.
    Then t = |K : H n K|, t|G:K| = 2n, d is |G:K| or |G:K| - 1, and
    d = |G:K| - 1 in characteristic 2.

    Parameters
    ----------
    group : PermGroup
        primitive group G
    x : int
        point whose stabilizer is H
    subgroup : sequence(Permutation)
        all elements of K
    field : AbstractField
        coefficient field

    Returns
    -------
    v : ModVector
    report : OrbitSumReport

    """
    validate_points(x, group.n, "x")
    if not group.is_primitive():
        raise ValueError("the orbit-sum construction needs a primitive "
                         "group")
    k_set = set(subgroup)
    if any(a * b not in k_set for a in k_set for b in k_set):
        raise ValueError("<subgroup> is not closed under multiplication")
    h_set = set(group.point_stabilizer(x))
    hk = h_set & k_set
    if len(h_set) != 2 * len(hk):
        raise PreconditionError(1, f"|H : H n K| = "
                                   f"{Fraction(len(h_set), len(hk))}, not 2")
    if k_set <= h_set:
        raise PreconditionError(2, "K is contained in H")
    if len(_generated_orbit(list(k_set), 0)) == group.n:
        raise PreconditionError(3, "K is transitive")

    orbit = _generated_orbit(list(k_set), x)
    v = ModVector.from_points(group, field, orbit)
    d = generated_submodule(v).dim
    index = group.order() // len(k_set)
    n, t = group.n, v.t
    conclusions = {
        "a": t == len(k_set) // len(hk),
        "b": t * index == 2 * n,
        "c": d in (index, index - 1),
        "d": field.characteristic != 2 or d == index - 1,
    }
    if not all(conclusions.values()):
        failed = sorted(k for k, ok in conclusions.items() if not ok)
        raise InvariantViolationError(f"orbit-sum conclusions {failed} fail")
    return v, OrbitSumReport(t=t, d=d, n=n, index=index,
                             conclusions=conclusions)


def has_invariant_subgroup(field: FiniteField, unit: ty.Any) -> bool:
    """
    Checks whether multiplication by <unit> leaves a proper nonzero
    additive subgroup of F invariant. Such subgroups are vector spaces over
    the subfield GF(p)(unit), so one exists exactly when that subfield is
    proper.

    Parameters
    ----------
    field : FiniteField
        F = GF(p^k)
    unit : FieldElement or int
        nonzero element of F

    Returns
    -------
    bool
    """
    unit = field.coerce(unit)
    j = 1
    while unit.frobenius(j) != unit:
        j += 1
    return j < field.k


def affine_construction(field: FiniteField,
                        unit: ty.Optional[ty.Any] = None
                        ) -> ty.Tuple[PermGroup, ModVector]:
    """
    Builds the group {x -> a x + b : a in A, b in F} on the points of F
    (A generated by <unit>) and the vector v = sum_x x s_x, which spans a
    2-dimensional submodule together with its translates and has
    t = q - 1. When A leaves no proper nonzero additive subgroup invariant
    the group must be primitive.

    Parameters
    ----------
    field : FiniteField
        F = GF(q), also the coefficient field
    unit : FieldElement or int, optional
        generator of A; defaults to a primitive element

    Returns
    -------
    group : PermGroup
    v : ModVector

    Raises
    ------
    PreconditionError
        condition 1 if A is trivial and q > 2, condition 2 if the group is
        imprimitive although no invariant subgroup exists

    """
    q = field.order
    if unit is None:
        unit = find_element_of_order(field, q - 1)
    unit = field.coerce(unit)
    if unit == 1 and q > 2:
        raise PreconditionError(1, f"A is trivial, so the group of degree "
                                   f"{q} is regular and not primitive")
    group = affine_group(field, unit)
    if has_invariant_subgroup(field, unit):
        logger.debug("A = <%s> leaves a proper subgroup of GF(%d) invariant",
                     unit, q)
    elif not group.is_primitive():
        raise PreconditionError(2, f"affine group of degree {q} is not "
                                   f"primitive")
    v = ModVector(group, field, list(field.elements()))
    d = generated_submodule(v).dim
    if d != 2 or v.t != q - 1:
        raise InvariantViolationError(f"affine vector has t = {v.t}, d = {d}")
    return group, v


def _is_equality_instance(group: PermGroup, t: int, d: int) -> bool:
    n = group.n
    return (t + 1) * d == 2 * n and 1 < t < n - 1


def equality_analysis(v: ModVector) -> EqualityReport:
    """
    Analyzes a vector attaining (t+1)d = 2n with 1 < t < n-1 in a primitive
    module. With Omega the set of distinct translates of supp v, it checks
    (a) every point lies in exactly two members of Omega and distinct
    members meet in exactly one point, (b) the action on Omega is
    2-transitive and primitive on the 2-subsets of Omega,
    (c) d = |Omega| - 1 = t, (d) the stabilizer of each member of Omega
    is transitive on it, (e) v is a multiple of the sum over its support,
    (f) the characteristic is 2.

    Parameters
    ----------
    v : ModVector
        vector of a primitive permutation module

    Returns
    -------
    report : EqualityReport

    """
    if v.is_zero():
        raise ZeroVectorError()
    group = v.group
    if not group.is_transitive() or not group.is_primitive():
        raise NotAnEqualityInstanceError("the action is not primitive")
    t, n = v.t, v.n
    d = generated_submodule(v).dim
    if not _is_equality_instance(group, t, d):
        raise NotAnEqualityInstanceError(
            f"t = {t}, d = {d}, n = {n} is not an equality instance with "
            f"1 < t < n - 1")

    omega = sorted(group.set_orbit(v.support()), key=sorted)
    conclusions: ty.Dict[str, bool] = {}

    counts = collections.Counter(x for member in omega for x in member)
    conclusions["a"] = all(counts[x] == 2 for x in range(n)) and all(
        len(a & b) == 1 for a, b in itertools.combinations(omega, 2))

    induced = group.induced_action(omega)
    conclusions["b"] = induced.is_doubly_transitive() and (
        induced.n < 3 or induced.pairs_action().is_primitive())

    conclusions["c"] = d == len(omega) - 1 == t

    def stabilizer_transitive(member: ty.FrozenSet[int]) -> bool:
        stabilizer = group.setwise_stabilizer(member)
        return set(_generated_orbit(stabilizer, min(member))) == member

    conclusions["d"] = all(stabilizer_transitive(m) for m in omega)

    values = {c for c in v.coeffs if not v.field.is_zero(c)}
    conclusions["e"] = len(values) == 1
    conclusions["f"] = v.field.characteristic == 2

    if not all(conclusions.values()):
        failed = sorted(k for k, ok in conclusions.items() if not ok)
        raise InvariantViolationError(f"equality conclusions {failed} fail "
                                      f"for {v!r}")
    return EqualityReport(n=n, t=t, d=d, holds_b=True, holds_c=True,
                          case=EqualityCase.PAIR, primitive=True,
                          omega=list(omega), conclusions=conclusions)


def _iterate_submodule(m: SubmoduleBasis,
                       cap: int) -> ty.Iterator[ModVector]:
    """Yields the nonzero vectors of a submodule over a finite field,
    coefficient tuples in canonical field order with the first basis
    coefficient varying fastest"""
    field = m.field
    if field.order is None:
        raise TypeError(f"cannot enumerate a submodule over {field}")
    if field.order ** m.dim > cap:
        raise BruteForceCapError(f"{field.order}^{m.dim} vectors exceed the "
                                 f"cap {cap}")
    basis = m.space.basis
    elements = list(field.elements())
    zero = field.zero()
    for combo in itertools.product(elements, repeat=m.dim):
        coords = combo[::-1]
        if not any(coords):
            continue
        coeffs = [zero] * m.n
        for c, row in zip(coords, basis):
            if c:
                coeffs = [a + c * b for a, b in zip(coeffs, row)]
        yield ModVector(m.group, field, coeffs)


def min_support(m: SubmoduleBasis,
                cap: int = DEFAULT_BRUTE_FORCE_CAP
                ) -> ty.Tuple[int, ModVector]:
    """
    Computes t(M), the least support size of a nonzero vector of M, by
    exhaustive enumeration.

    Parameters
    ----------
    m : SubmoduleBasis
        nonzero submodule over a finite field
    cap : int
        maximal number of vectors to enumerate

    Returns
    -------
    t : int
    witness : ModVector
        first minimizer in enumeration order

    """
    if m.dim == 0:
        raise ZeroVectorError("submodule must not be zero")
    best: ty.Optional[ModVector] = None
    for v in _iterate_submodule(m, cap):
        if best is None or v.t < best.t:
            best = v
            if best.t == 1:
                break
    assert best is not None
    return best.t, best


@dataclass(frozen=True)
class RudioReport:
    """Translates of a set separating two points."""
    primitive: bool
    separating: ty.Optional[ty.FrozenSet[int]]
    strong: ty.Optional[ty.FrozenSet[int]]


def rudio_witness(group: PermGroup,
                  points: ty.Iterable[int],
                  u: int,
                  w: int) -> RudioReport:
    """
    Searches the translates X.g for one containing exactly one of u and w
    and for one containing u but not w. For primitive groups both exist;
    for imprimitive groups the search result is reported as is.

    Parameters
    ----------
    group : PermGroup
        acting group
    points : iterable(int)
        nonempty proper subset X
    u : int
        first point
    w : int
        second point, different from u

    Returns
    -------
    report : RudioReport

    """
    points = validate_points(list(points), group.n)
    if not points or len(points) == group.n:
        raise ValueError("<points> must be a nonempty proper subset")
    validate_points((u, w), group.n, "u, w")
    if u == w:
        raise ValueError("<u> and <w> must be different points")
    primitive = group.is_transitive() and group.is_primitive()

    separating = strong = None
    for g in group.group_elements():
        image = g.apply_to_set(points)
        if separating is None and (u in image) != (w in image):
            separating = image
        if strong is None and u in image and w not in image:
            strong = image
        if strong is not None and separating is not None:
            break
    if primitive and (separating is None or strong is None):
        raise InvariantViolationError(f"no translate of {sorted(points)} "
                                      f"separates {u} from {w}")
    if not primitive:
        logger.info("group is not primitive; translate search carries no "
                    "guarantee")
    return RudioReport(primitive=primitive, separating=separating,
                       strong=strong)


@dataclass(frozen=True)
class TwoDimensionalReport:
    """Support sizes in a 2-dimensional submodule of a primitive module."""
    vectors_checked: int
    co_point_vectors: int


def two_dimensional_support_check(
        m: SubmoduleBasis,
        cap: int = DEFAULT_BRUTE_FORCE_CAP) -> TwoDimensionalReport:
    """
    Checks that every nonzero vector of a 2-dimensional submodule of a
    primitive module has t = n or t = n - 1, and that t = n - 1 forces
    d = 2.

    Parameters
    ----------
    m : SubmoduleBasis
        2-dimensional submodule over a finite field
    cap : int
        maximal number of vectors to enumerate

    Returns
    -------
    report : TwoDimensionalReport

    """
    if m.dim != 2:
        raise ValueError(f"submodule has dimension {m.dim}, not 2")
    if not m.group.is_transitive() or not m.group.is_primitive():
        raise ValueError("the action must be primitive")
    n = m.n
    checked = co_point = 0
    for v in _iterate_submodule(m, cap):
        checked += 1
        if v.t < n - 1:
            raise InvariantViolationError(f"t = {v.t} < n - 1 for {v!r}")
        if v.t == n - 1:
            co_point += 1
            if generated_submodule(v).dim != 2:
                raise InvariantViolationError(f"t = n - 1 but d != 2 for "
                                              f"{v!r}")
    return TwoDimensionalReport(vectors_checked=checked,
                                co_point_vectors=co_point)


def reduce_mod(v: ModVector, field: FiniteField) -> ModVector:
    """
    Reduces a vector with rational coefficients modulo the characteristic
    of a finite field.

    Parameters
    ----------
    v : ModVector
        vector over Q whose denominators are prime to the characteristic
    field : FiniteField
        target field

    Returns
    -------
    reduced : ModVector

    """
    p = field.characteristic
    coeffs = []
    for c in v.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise ValueError(f"coefficient {c} is not {p}-integral")
        coeffs.append(field.from_int(c.numerator)
                      / field.from_int(c.denominator))
    return ModVector(v.group, field, coeffs)
