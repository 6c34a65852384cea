# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import functools
import itertools
import logging
import random
import typing as ty

from permod.ff.exceptions import (
    NotPrimeError,
    ReducibleModulusError,
    ExtensionTooLargeError,
    NoElementOfOrderError,
    FieldMismatchError)
from permod.linalg.field import AbstractField
from permod.utils.math import is_prime, prime_factors

logger = logging.getLogger(__name__)

# GF(2^18) and GF(3^18) are needed to factor X^19 - 1 over GF(4) and GF(9)
MAX_EXTENSION_DEGREE = 24

# Fields up to this size are scanned element by element when searching for
# an element of a given order
ELEMENT_SCAN_LIMIT = 4096


def _trim(a: ty.List[int]) -> ty.List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_sub(a: ty.Sequence[int],
            b: ty.Sequence[int],
            p: int) -> ty.List[int]:
    size = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(size)]
    return _trim(out)


def _zp_mul(a: ty.Sequence[int],
            b: ty.Sequence[int],
            p: int) -> ty.List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _zp_divmod(a: ty.Sequence[int],
               b: ty.Sequence[int],
               p: int) -> ty.Tuple[ty.List[int], ty.List[int]]:
    """Division with remainder of polynomials over Z_p (b nonzero, trimmed)"""
    db = len(b) - 1
    if len(a) <= db:
        return [], _trim(list(a))
    inv_lead = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv_lead % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(r[:db])


def _zp_gcd(a: ty.Sequence[int],
            b: ty.Sequence[int],
            p: int) -> ty.List[int]:
    """Monic gcd of two polynomials over Z_p"""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _zp_divmod(a, b, p)[1]
    if not a:
        return a
    inv_lead = pow(a[-1], p - 2, p)
    return [c * inv_lead % p for c in a]


def _zp_powmod(base: ty.Sequence[int],
               e: int,
               m: ty.Sequence[int],
               p: int) -> ty.List[int]:
    result = [1]
    base = _zp_divmod(base, m, p)[1]
    while e:
        if e & 1:
            result = _zp_divmod(_zp_mul(result, base, p), m, p)[1]
        base = _zp_divmod(_zp_mul(base, base, p), m, p)[1]
        e >>= 1
    return result


def is_irreducible(modulus: ty.Sequence[int], p: int) -> bool:
    """
    Checks whether a monic polynomial over GF(p) is irreducible by
    verifying gcd(X^(p^i) - X, modulus) = 1 for 0 < i < k and
    X^(p^k) = X mod modulus, where k is the degree.

    Parameters
    ----------
    modulus : sequence(int)
        coefficients in ascending degree, monic
    p : int
        prime characteristic

    Returns
    -------
    irreducible : bool

    """
    m = _trim(list(modulus))
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(1, k):
        xp = _zp_powmod(xp, p, m, p)
        if len(_zp_gcd(_zp_sub(xp, x, p), m, p)) > 1:
            return False
    xp = _zp_powmod(xp, p, m, p)
    return not _zp_sub(xp, x, p)


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> ty.Tuple[int, ...]:
    """Returns the lexicographically smallest monic irreducible polynomial
    of degree k over GF(p), comparing coefficients from low to high
    degree."""
    for tail in itertools.product(range(p), repeat=k):
        if k > 1 and tail[0] == 0:
            # divisible by X
            continue
        candidate = tail + (1,)
        if is_irreducible(candidate, p):
            logger.debug("modulus for GF(%d^%d): %s", p, k, candidate)
            return candidate
    raise ReducibleModulusError(f"no irreducible polynomial of degree {k} "
                                f"over GF({p})")


class FiniteField(AbstractField):
    """
    The finite field GF(p^k), represented as GF(p)[X] / (modulus).

    Elements are FieldElement values whose representative is the list of
    k coefficients (ascending degree) of a polynomial of degree < k. The
    canonical enumeration order of the field is lexicographic on these
    coefficient lists, lowest degree first.

    Parameters
    ----------
    p : int
        prime characteristic
    k : int
        extension degree, at least 1
    modulus : sequence(int), optional
        monic irreducible polynomial of degree k over GF(p) (ascending
        degree); defaults to the lexicographically smallest one

    """
    def __init__(self,
                 p: int,
                 k: int = 1,
                 modulus: ty.Optional[ty.Sequence[int]] = None) -> None:
        if isinstance(p, bool) or not isinstance(p, int) or p < 2 \
                or not is_prime(p):
            raise NotPrimeError(f"characteristic must be prime but is {p}")
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise ValueError("<k> must be a positive integer")
        if k > MAX_EXTENSION_DEGREE:
            raise ExtensionTooLargeError(
                f"extension degree {k} exceeds the maximum "
                f"{MAX_EXTENSION_DEGREE}")

        if modulus is None:
            modulus = smallest_irreducible(p, k)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != k + 1 or modulus[-1] != 1:
                raise ReducibleModulusError(
                    f"modulus must be monic of degree {k}")
            if any(not 0 <= c < p for c in modulus):
                raise ValueError(f"modulus coefficients must lie in "
                                 f"[0, {p - 1}]")
            if not is_irreducible(modulus, p):
                raise ReducibleModulusError(
                    f"modulus {modulus} is reducible over GF({p})")

        self._p = p
        self._k = k
        self._modulus = tuple(modulus)
        self._order = p ** k
        self._unit_factors: ty.Optional[ty.List[int]] = None
        self._zero = FieldElement(self, (0,) * k)
        self._one = FieldElement(self, (1,) + (0,) * (k - 1))

    @property
    def p(self) -> int:
        """Returns the characteristic"""
        return self._p

    @property
    def k(self) -> int:
        """Returns the extension degree over the prime field"""
        return self._k

    @property
    def modulus(self) -> ty.Tuple[int, ...]:
        """Returns the defining polynomial (ascending degree)"""
        return self._modulus

    @property
    def characteristic(self) -> int:
        return self._p

    @property
    def order(self) -> int:
        return self._order

    def zero(self) -> FieldElement:
        return self._zero

    def one(self) -> FieldElement:
        return self._one

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, (n % self._p,) + (0,) * (self._k - 1))

    def element(self, rep: ty.Sequence[int]) -> FieldElement:
        """
        Creates an element from its coefficient list.

        Parameters
        ----------
        rep : sequence(int)
            coefficients over GF(p) in ascending degree; shorter lists are
            padded with zeros

        Returns
        -------
        element : FieldElement

        """
        rep = tuple(int(c) for c in rep)
        if len(rep) > self._k:
            raise ValueError(f"representative {rep} has more than "
                             f"{self._k} coefficients")
        if any(not 0 <= c < self._p for c in rep):
            raise ValueError(f"coefficients must lie in [0, {self._p - 1}]")
        return FieldElement(self, rep + (0,) * (self._k - len(rep)))

    def generator(self) -> FieldElement:
        """Returns the class of X, which generates the field over GF(p)"""
        if self._k == 1:
            return self.from_int(-self._modulus[0])
        return self.element((0, 1))

    def elements(self) -> ty.Iterator[FieldElement]:
        for rep in itertools.product(range(self._p), repeat=self._k):
            yield FieldElement(self, rep)

    def random_element(self, rng: random.Random) -> FieldElement:
        return FieldElement(self, tuple(rng.randrange(self._p)
                                        for _ in range(self._k)))

    def coerce(self, x: ty.Any) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.owner != self:
                raise FieldMismatchError(f"element of {x.owner} used in "
                                         f"{self}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise TypeError(f"cannot convert {type(x).__name__} into an element "
                        f"of {self}")

    def unit_group_factors(self) -> ty.List[int]:
        """Returns the distinct primes dividing |field| - 1 (computed once)"""
        if self._unit_factors is None:
            self._unit_factors = prime_factors(self._order - 1) \
                if self._order > 2 else []
        return self._unit_factors

    def is_prime_field(self) -> bool:
        return self._k == 1

    def subfield_degrees(self) -> ty.List[int]:
        """Returns the degrees j < k of the proper subfields GF(p^j)"""
        return [j for j in range(1, self._k) if self._k % j == 0]

    def _add(self, a: ty.Tuple[int, ...],
             b: ty.Tuple[int, ...]) -> ty.Tuple[int, ...]:
        p = self._p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: ty.Tuple[int, ...],
             b: ty.Tuple[int, ...]) -> ty.Tuple[int, ...]:
        p = self._p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _mul(self, a: ty.Tuple[int, ...],
             b: ty.Tuple[int, ...]) -> ty.Tuple[int, ...]:
        p, k = self._p, self._k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        m = self._modulus
        # X^k = -(m_0 + ... + m_(k-1) X^(k-1))
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(k):
                    prod[i - k + j] -= c * m[j]
        return tuple(c % p for c in prod[:k])

    def _pow(self, a: ty.Tuple[int, ...], e: int) -> ty.Tuple[int, ...]:
        if self._k == 1:
            return (pow(a[0], e, self._p),)
        result = self._one.rep
        while e:
            if e & 1:
                result = self._mul(result, a)
            a = self._mul(a, a)
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self._p == other._p and self._modulus == other._modulus

    def __hash__(self) -> int:
        return hash((self._p, self._modulus))

    def __str__(self) -> str:
        if self._k == 1:
            return f"GF({self._p})"
        return f"GF({self._p}^{self._k})"

    def __repr__(self) -> str:
        return f"FiniteField(p={self._p}, k={self._k}, " \
               f"modulus={list(self._modulus)})"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return FiniteField, (self._p, self._k, self._modulus)


class FieldElement:
    """
    Element of a FiniteField. Value semantics: instances are immutable and
    compare equal iff they belong to the same field and have the same
    representative.

    Parameters
    ----------
    owner : FiniteField
        field the element belongs to
    rep : tuple(int)
        k coefficients over GF(p), ascending degree

    """
    __slots__ = ("_owner", "_rep")

    def __init__(self, owner: FiniteField, rep: ty.Tuple[int, ...]) -> None:
        self._owner = owner
        self._rep = rep

    @property
    def owner(self) -> FiniteField:
        """Returns the field of the element"""
        return self._owner

    @property
    def rep(self) -> ty.Tuple[int, ...]:
        """Returns the coefficient tuple (ascending degree)"""
        return self._rep

    @property
    def index(self) -> int:
        """Returns the position of the element in the canonical
        enumeration of its field"""
        idx = 0
        for c in self._rep:
            idx = idx * self._owner.p + c
        return idx

    def _other(self, other: ty.Any) -> ty.Optional[ty.Tuple[int, ...]]:
        if isinstance(other, FieldElement):
            if other._owner is not self._owner \
                    and other._owner != self._owner:
                raise FieldMismatchError(
                    f"cannot combine elements of {self._owner} and "
                    f"{other._owner}")
            return other._rep
        if isinstance(other, int) and not isinstance(other, bool):
            return self._owner.from_int(other)._rep
        return None

    def __add__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self._owner, self._owner._add(self._rep, b))

    __radd__ = __add__

    def __sub__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self._owner, self._owner._sub(self._rep, b))

    def __rsub__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self._owner, self._owner._sub(b, self._rep))

    def __mul__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self._owner, self._owner._mul(self._rep, b))

    __rmul__ = __mul__

    def __truediv__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self * FieldElement(self._owner, b).inverse()

    def __rtruediv__(self, other: ty.Any) -> FieldElement:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return FieldElement(self._owner, b) * self.inverse()

    def __neg__(self) -> FieldElement:
        p = self._owner.p
        return FieldElement(self._owner, tuple(-c % p for c in self._rep))

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        if not self and e > 0:
            return self
        e %= self._owner.order - 1 if self._owner.order > 2 else 1
        if e == 0:
            return self._owner.one()
        return FieldElement(self._owner, self._owner._pow(self._rep, e))

    def inverse(self) -> FieldElement:
        """Returns the multiplicative inverse (x^(q-2))"""
        if not self:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        q = self._owner.order
        return FieldElement(self._owner, self._owner._pow(self._rep, q - 2))

    def frobenius(self, times: int = 1) -> FieldElement:
        """Returns x^(p^times)"""
        return FieldElement(self._owner,
                            self._owner._pow(self._rep,
                                             self._owner.p ** times))

    def multiplicative_order(self) -> int:
        """Returns the order of a nonzero element in the unit group"""
        if not self:
            raise ZeroDivisionError("zero has no multiplicative order")
        o = self._owner.order - 1
        for ell in self._owner.unit_group_factors():
            while o % ell == 0 and self ** (o // ell) == 1:
                o //= ell
        return o

    def has_order(self, n: int) -> bool:
        """Checks whether the element has multiplicative order exactly n"""
        if not self or self ** n != 1:
            return False
        return all(self ** (n // ell) != 1 for ell in prime_factors(n))

    def to_literal(self, sep: str = ",") -> str:
        """Renders the representative as <sep>-joined digits"""
        return sep.join(str(c) for c in self._rep)

    def __bool__(self) -> bool:
        return any(self._rep)

    def __int__(self) -> int:
        if self._owner.k != 1:
            raise TypeError("only elements of prime fields convert to int")
        return self._rep[0]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self._rep == other._rep and (
                self._owner is other._owner or self._owner == other._owner)
        if isinstance(other, int) and not isinstance(other, bool):
            # only the residues 0..p-1 stand for prime subfield elements
            return 0 <= other < self._owner.p \
                and self._rep == self._owner.from_int(other)._rep
        return NotImplemented

    def __hash__(self) -> int:
        if not any(self._rep[1:]):
            return hash(self._rep[0])
        return hash((self._owner.p, self._owner.modulus, self._rep))

    def __lt__(self, other: FieldElement) -> bool:
        return self._rep < other._rep

    def __str__(self) -> str:
        if self._owner.k == 1:
            return str(self._rep[0])
        return self.to_literal(";")

    def __repr__(self) -> str:
        return f"FieldElement({self._owner}, {list(self._rep)})"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return FieldElement, (self._owner, self._rep)


def make_field(p: int,
               k: int = 1,
               modulus: ty.Optional[ty.Sequence[int]] = None) -> FiniteField:
    """
    Creates GF(p^k). Fields are cached, so repeated calls with equal
    arguments return the same instance.

    Parameters
    ----------
    p : int
        prime characteristic
    k : int
        extension degree
    modulus : sequence(int), optional
        monic irreducible polynomial of degree k (ascending degree); if
        omitted, the lexicographically smallest one is used

    Returns
    -------
    field : FiniteField

    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
    return _make_field(p, k, modulus)


@functools.lru_cache(maxsize=None)
def _make_field(p: int,
                k: int,
                modulus: ty.Optional[ty.Tuple[int, ...]]) -> FiniteField:
    return FiniteField(p, k, modulus)


def field_of_order(q: int) -> FiniteField:
    """Creates GF(q) for a prime power q with the default modulus"""
    from permod.utils.math import prime_power
    decomposition = prime_power(q)
    if decomposition is None:
        raise NotPrimeError(f"{q} is not a prime power")
    return make_field(*decomposition)


def find_element_of_order(field: FiniteField, n: int) -> FieldElement:
    """
    Finds an element of multiplicative order exactly n.

    Fields with at most ELEMENT_SCAN_LIMIT elements return the first
    element of the canonical enumeration whose order is n. Larger fields
    return x^((q-1)/n) for the first x in canonical order for which this
    power has order n.

    Parameters
    ----------
    field : FiniteField
        field to search
    n : int
        requested order, must divide |field| - 1

    Returns
    -------
    element : FieldElement

    """
    q = field.order
    if n < 1 or (q - 1) % n != 0:
        raise NoElementOfOrderError(f"{n} does not divide {q - 1}, so "
                                    f"{field} has no element of order {n}")
    if q <= ELEMENT_SCAN_LIMIT:
        for x in field.elements():
            if x and x.has_order(n):
                return x
    else:
        e = (q - 1) // n
        for x in field.elements():
            if x:
                y = x ** e
                if y.has_order(n):
                    return y
    raise NoElementOfOrderError(f"no element of order {n} found in {field}")


class FieldEmbedding:
    """
    Embedding of a finite field into an extension of the same
    characteristic. The generator X of <base> is sent to the first root of
    the base modulus found among the powers of a generator of the
    subfield's unit group.

    Parameters
    ----------
    base : FiniteField
        field that is embedded
    ext : FiniteField
        extension field; its degree must be a multiple of base.k

    """
    def __init__(self, base: FiniteField, ext: FiniteField) -> None:
        if base.p != ext.p or ext.k % base.k != 0:
            raise FieldMismatchError(f"{base} does not embed into {ext}")
        self._base = base
        self._ext = ext
        if base.k == 1:
            self._alpha = None
        else:
            self._alpha = self._find_root()
        self._powers = self._alpha_powers()
        self._inverse_map: ty.Optional[ty.Dict[FieldElement,
                                               FieldElement]] = None

    @property
    def base(self) -> FiniteField:
        return self._base

    @property
    def ext(self) -> FiniteField:
        return self._ext

    def _find_root(self) -> FieldElement:
        q = self._base.order
        w = find_element_of_order(self._ext, q - 1)
        y = self._ext.one()
        for _ in range(q - 1):
            value = self._ext.zero()
            for c in reversed(self._base.modulus):
                value = value * y + c
            if not value:
                return y
            y = y * w
        raise ReducibleModulusError(f"modulus of {self._base} has no root "
                                    f"in {self._ext}")

    def _alpha_powers(self) -> ty.List[FieldElement]:
        if self._alpha is None:
            return [self._ext.one()]
        powers = [self._ext.one()]
        for _ in range(1, self._base.k):
            powers.append(powers[-1] * self._alpha)
        return powers

    def __call__(self, x: ty.Union[FieldElement, int]) -> FieldElement:
        x = self._base.coerce(x)
        value = self._ext.zero()
        for c, power in zip(x.rep, self._powers):
            if c:
                value = value + power * c
        return value

    def contains(self, y: FieldElement) -> bool:
        """Checks whether y lies in the image of the embedding"""
        return y ** self._base.order == y

    def restrict(self, y: FieldElement) -> FieldElement:
        """
        Maps an element of the image back to the base field.

        Parameters
        ----------
        y : FieldElement
            element of the extension field fixed by x -> x^|base|

        Returns
        -------
        x : FieldElement
            the base-field element that is embedded as y

        """
        if not self.contains(y):
            raise ValueError(f"{y!r} does not lie in the subfield "
                             f"{self._base}")
        if self._inverse_map is None:
            self._inverse_map = {self(x): x for x in self._base.elements()}
        return self._inverse_map[y]


@functools.lru_cache(maxsize=None)
def make_embedding(base: FiniteField, ext: FiniteField) -> FieldEmbedding:
    """Creates (and caches) the embedding of <base> into <ext>"""
    return FieldEmbedding(base, ext)
