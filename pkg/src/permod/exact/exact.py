# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import functools
import math
import random
import typing as ty
from fractions import Fraction

import sympy

from permod.linalg.field import AbstractField
from permod.utils.exceptions import InvariantViolationError
from permod.utils.validation import validate_positive_int

Rational = ty.Union[int, Fraction]


class RationalField(AbstractField):
    """The field Q of rational numbers, with Fraction elements."""
    def __init__(self, max_random_numerator: int = 5) -> None:
        self._bound = max_random_numerator

    @property
    def characteristic(self) -> int:
        return 0

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def random_element(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-self._bound, self._bound))

    def coerce(self, x: ty.Any) -> Fraction:
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot convert {type(x).__name__} into a "
                        f"rational number")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __str__(self) -> str:
        return "Q"

    def __repr__(self) -> str:
        return "RationalField()"


QQ = RationalField()


def _reduce_mod(a: ty.List[ty.Any], phi: ty.Sequence[int]) -> ty.List[ty.Any]:
    """Reduces a coefficient list modulo the monic polynomial <phi>
    in place and returns the lowest deg(phi) coefficients."""
    deg = len(phi) - 1
    for i in range(len(a) - 1, deg - 1, -1):
        c = a[i]
        if c:
            for j in range(deg):
                a[i - deg + j] -= c * phi[j]
            a[i] = 0
    return a[:deg]


def _q_trim(a: ty.List[Fraction]) -> ty.List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_divmod(a: ty.List[Fraction],
              b: ty.List[Fraction]) -> ty.Tuple[ty.List[Fraction],
                                               ty.List[Fraction]]:
    db = len(b) - 1
    r = list(a)
    if len(r) <= db:
        return [], _q_trim(r)
    q = [Fraction(0)] * (len(r) - db)
    lead = b[-1]
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] -= c * b[j]
    return _q_trim(q), _q_trim(r[:db])


def _q_sub(a: ty.List[Fraction], b: ty.List[Fraction]) -> ty.List[Fraction]:
    size = max(len(a), len(b))
    return _q_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                    for i in range(size)])


def _q_mul(a: ty.List[Fraction], b: ty.List[Fraction]) -> ty.List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _q_trim(out)


class CyclotomicField(AbstractField):
    """
    The cyclotomic field Q(zeta_n), represented as Q[X] / (Phi_n).

    Elements are Cyclotomic values with phi(n) rational coefficients in
    the power basis 1, zeta, ..., zeta^(phi(n)-1). Since the representation
    is reduced modulo the minimal polynomial, an element is zero iff all of
    its coefficients are zero.

    Parameters
    ----------
    n : int
        conductor, the order of the distinguished root of unity zeta

    """
    def __init__(self, n: int) -> None:
        n = validate_positive_int(n, "n")
        self._n = n
        x = sympy.Symbol("x")
        phi = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
        self._phi = tuple(int(c) for c in reversed(phi))
        self._degree = len(self._phi) - 1
        self._zero = Cyclotomic(self, (0,) * self._degree, 1)
        self._one = Cyclotomic(self, (1,) + (0,) * (self._degree - 1), 1)
        self._powers = self._compute_powers()

    def _compute_powers(self) -> ty.List[Cyclotomic]:
        powers = []
        for e in range(self._n):
            a = [0] * max(e + 1, self._degree)
            a[e] = 1
            powers.append(Cyclotomic(self, tuple(_reduce_mod(a, self._phi)),
                                     1))
        return powers

    @property
    def n(self) -> int:
        """Returns the conductor"""
        return self._n

    @property
    def degree(self) -> int:
        """Returns the degree phi(n) of the field over Q"""
        return self._degree

    @property
    def minimal_polynomial(self) -> ty.Tuple[int, ...]:
        """Returns the coefficients of Phi_n in ascending degree"""
        return self._phi

    @property
    def characteristic(self) -> int:
        return 0

    def zero(self) -> Cyclotomic:
        return self._zero

    def one(self) -> Cyclotomic:
        return self._one

    def from_int(self, n: int) -> Cyclotomic:
        return self.from_rational(n)

    def from_rational(self, r: Rational) -> Cyclotomic:
        r = Fraction(r)
        return Cyclotomic(self,
                          (r.numerator,) + (0,) * (self._degree - 1),
                          r.denominator)

    def zeta(self) -> Cyclotomic:
        """Returns the distinguished primitive n-th root of unity"""
        return self._powers[1 % self._n]

    def zeta_power(self, e: int) -> Cyclotomic:
        """Returns zeta^(e mod n)"""
        return self._powers[e % self._n]

    def element(self, coeffs: ty.Sequence[Rational]) -> Cyclotomic:
        """
        Creates the element sum_i coeffs[i] zeta^i. Coefficient lists of any
        length are accepted and reduced modulo Phi_n.

        Parameters
        ----------
        coeffs : sequence(int or Fraction)
            coefficients in ascending powers of zeta

        Returns
        -------
        element : Cyclotomic

        """
        fractions = [Fraction(c) for c in coeffs]
        den = 1
        for c in fractions:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in fractions]
        nums += [0] * max(0, self._degree - len(nums))
        return Cyclotomic(self, tuple(_reduce_mod(nums, self._phi)), den)

    def random_element(self, rng: random.Random) -> Cyclotomic:
        return Cyclotomic(self, tuple(rng.randint(-3, 3)
                                      for _ in range(self._degree)), 1)

    def coerce(self, x: ty.Any) -> Cyclotomic:
        if isinstance(x, Cyclotomic):
            if x.owner != self:
                raise TypeError(f"element of {x.owner} used in {self}")
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self.from_rational(x)
        raise TypeError(f"cannot convert {type(x).__name__} into an "
                        f"element of {self}")

    def galois_exponents(self) -> ty.List[int]:
        """Returns the a in [1, n) coprime to n; zeta -> zeta^a are the
        automorphisms of the field"""
        if self._n == 1:
            return [1]
        return [a for a in range(1, self._n) if math.gcd(a, self._n) == 1]

    def _mul(self, a: ty.Tuple[int, ...],
             b: ty.Tuple[int, ...]) -> ty.List[int]:
        prod = [0] * (2 * self._degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return _reduce_mod(prod, self._phi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclotomicField):
            return NotImplemented
        return self._n == other._n

    def __hash__(self) -> int:
        return hash(("Q(zeta)", self._n))

    def __str__(self) -> str:
        return f"Q(zeta_{self._n})"

    def __repr__(self) -> str:
        return f"CyclotomicField(n={self._n})"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return make_cyclotomic_field, (self._n,)


class Cyclotomic:
    """
    Element of a CyclotomicField, stored as integer numerators over a common
    positive denominator in lowest terms.

    Parameters
    ----------
    owner : CyclotomicField
        field the element belongs to
    nums : tuple(int)
        numerators of the coefficients in the power basis
    den : int
        common denominator

    """
    __slots__ = ("_owner", "_nums", "_den")

    def __init__(self, owner: CyclotomicField,
                 nums: ty.Sequence[int], den: int) -> None:
        if den == 0:
            raise ZeroDivisionError("denominator must not be zero")
        if den < 0:
            nums, den = [-c for c in nums], -den
        g = den
        for c in nums:
            g = math.gcd(g, c)
            if g == 1:
                break
        if g > 1:
            nums, den = [c // g for c in nums], den // g
        self._owner = owner
        self._nums = tuple(nums)
        self._den = den

    @property
    def owner(self) -> CyclotomicField:
        return self._owner

    @property
    def rep(self) -> ty.Tuple[Fraction, ...]:
        """Returns the rational coefficients in the power basis"""
        return tuple(Fraction(c, self._den) for c in self._nums)

    def _other(self, other: ty.Any) -> ty.Optional[Cyclotomic]:
        if isinstance(other, Cyclotomic):
            if other._owner is not self._owner \
                    and other._owner != self._owner:
                raise TypeError(f"cannot combine elements of {self._owner} "
                                f"and {other._owner}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._owner.from_rational(other)
        return None

    def __add__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        da, db = self._den, b._den
        nums = [x * db + y * da for x, y in zip(self._nums, b._nums)]
        return Cyclotomic(self._owner, nums, da * db)

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self._owner, [-c for c in self._nums], self._den)

    def __sub__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return b + (-self)

    def __mul__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        nums = self._owner._mul(self._nums, b._nums)
        return Cyclotomic(self._owner, nums, self._den * b._den)

    __rmul__ = __mul__

    def __truediv__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self * cyclo_inverse(b)

    def __rtruediv__(self, other: ty.Any) -> Cyclotomic:
        b = self._other(other)
        if b is None:
            return NotImplemented
        return b * cyclo_inverse(self)

    def __pow__(self, e: int) -> Cyclotomic:
        if e < 0:
            return cyclo_inverse(self) ** (-e)
        result = self._owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> Cyclotomic:
        return cyclo_inverse(self)

    def conjugate(self, a: int) -> Cyclotomic:
        """
        Applies the Galois automorphism zeta -> zeta^a.

        Parameters
        ----------
        a : int
            exponent coprime to the conductor

        Returns
        -------
        conjugate : Cyclotomic

        """
        n = self._owner.n
        if math.gcd(a, n) != 1:
            raise ValueError(f"<a> must be coprime to {n}")
        nums = [0] * max(n, self._owner.degree)
        for i, c in enumerate(self._nums):
            if c:
                nums[(i * a) % n] += c
        reduced = _reduce_mod(nums, self._owner.minimal_polynomial)
        return Cyclotomic(self._owner, reduced, self._den)

    def norm(self) -> Fraction:
        """Returns the field norm, the product of all Galois conjugates"""
        product = self._owner.one()
        for a in self._owner.galois_exponents():
            product = product * self.conjugate(a)
        if any(product._nums[1:]):
            raise InvariantViolationError(f"norm of {self} is not rational")
        return Fraction(product._nums[0], product._den)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_json(self) -> ty.List[str]:
        """Renders the coefficients as "num/den" strings"""
        return [f"{c.numerator}/{c.denominator}" for c in self.rep]

    def __bool__(self) -> bool:
        return any(self._nums)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Cyclotomic):
            return self._owner == other._owner \
                and self._nums == other._nums and self._den == other._den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == self._owner.from_rational(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._owner.n, self._nums, self._den))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.rep):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z")
            else:
                terms.append(f"{c}*z^{i}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Cyclotomic({self._owner}, {self})"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return Cyclotomic, (self._owner, self._nums, self._den)


@functools.lru_cache(maxsize=None)
def make_cyclotomic_field(n: int) -> CyclotomicField:
    """Creates (and caches) Q(zeta_n)"""
    return CyclotomicField(n)


def cyclo_from_power(p: int, e: int) -> Cyclotomic:
    """
    Returns zeta^(e mod p) in Q(zeta_p), reduced modulo the minimal
    polynomial.

    Parameters
    ----------
    p : int
        conductor
    e : int
        exponent, any integer

    Returns
    -------
    power : Cyclotomic

    """
    return make_cyclotomic_field(p).zeta_power(e)


def cyclo_inverse(x: Cyclotomic) -> Cyclotomic:
    """
    Returns the multiplicative inverse of a nonzero cyclotomic number,
    computed by the extended Euclidean algorithm of its representative
    against the minimal polynomial over Q.

    Parameters
    ----------
    x : Cyclotomic
        nonzero element

    Returns
    -------
    inverse : Cyclotomic

    """
    if not x:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    field = x.owner
    if x.is_rational():
        return field.from_rational(1 / x.rep[0])

    r0 = [Fraction(c) for c in field.minimal_polynomial]
    r1 = _q_trim(list(x.rep))
    s0: ty.List[Fraction] = []
    s1 = [Fraction(1)]
    while r1:
        q, r = _q_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _q_sub(s0, _q_mul(q, s1))
    # r0 is a nonzero constant since Phi_n is irreducible
    if len(r0) != 1:
        raise InvariantViolationError("minimal polynomial shares a factor "
                                      "with a nonzero element")
    c = r0[0]
    return field.element([s / c for s in s0])
