# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import functools
import logging
import random
import typing as ty
from dataclasses import dataclass

from permod.ff.ff import (
    MAX_EXTENSION_DEGREE,
    FiniteField,
    FieldElement,
    find_element_of_order,
    make_embedding,
    make_field)
from permod.linalg.field import AbstractField
from permod.poly.exceptions import ZeroPolynomialError, CharacteristicError
from permod.utils.exceptions import InvariantViolationError
from permod.utils.math import multiplicative_order
from permod.utils.validation import validate_prime

logger = logging.getLogger(__name__)


class Poly:
    """
    Dense univariate polynomial over an exact field.

    Coefficients are stored in ascending degree without trailing zeros, so
    the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable.

    Parameters
    ----------
    field : AbstractField
        coefficient field
    coeffs : sequence
        coefficients in ascending degree; integers are converted into
        field elements

    """
    __slots__ = ("_field", "_coeffs")

    def __init__(self,
                 field: AbstractField,
                 coeffs: ty.Sequence[ty.Any] = ()) -> None:
        values = [field.coerce(c) for c in coeffs]
        while values and field.is_zero(values[-1]):
            values.pop()
        self._field = field
        self._coeffs = tuple(values)

    @classmethod
    def monomial(cls, field: AbstractField, degree: int,
                 coeff: ty.Any = 1) -> Poly:
        """Returns coeff * X^degree"""
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def x_pow_minus_one(cls, field: AbstractField, n: int) -> Poly:
        """Returns X^n - 1"""
        return cls(field, [-1] + [0] * (n - 1) + [1])

    @property
    def field(self) -> AbstractField:
        return self._field

    @property
    def coeffs(self) -> ty.Tuple[ty.Any, ...]:
        """Returns the coefficients in ascending degree"""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Returns the degree, -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> ty.Any:
        if not self._coeffs:
            return self._field.zero()
        return self._coeffs[-1]

    def coeff(self, i: int) -> ty.Any:
        """Returns the coefficient of X^i"""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self._field.zero()

    def support(self) -> ty.List[int]:
        """Returns the exponents with nonzero coefficient"""
        return [i for i, c in enumerate(self._coeffs)
                if not self._field.is_zero(c)]

    def _check(self, other: Poly) -> None:
        if other._field != self._field:
            raise TypeError(f"cannot combine polynomials over "
                            f"{self._field} and {other._field}")

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly(self._field, [self.coeff(i) + other.coeff(i)
                                  for i in range(size)])

    def __neg__(self) -> Poly:
        return Poly(self._field, [-c for c in self._coeffs])

    def __sub__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: ty.Any) -> Poly:
        if not isinstance(other, Poly):
            c = self._field.coerce(other)
            return Poly(self._field, [x * c for x in self._coeffs])
        self._check(other)
        if not self._coeffs or not other._coeffs:
            return Poly(self._field)
        zero = self._field.zero()
        out = [zero] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, x in enumerate(self._coeffs):
            if self._field.is_zero(x):
                continue
            for j, y in enumerate(other._coeffs):
                if not self._field.is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return Poly(self._field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        result = Poly(self._field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: Poly) -> ty.Tuple[Poly, Poly]:
        """Division with remainder: self = q * other + r, deg r < deg other"""
        self._check(other)
        if not other._coeffs:
            raise ZeroPolynomialError("division by the zero polynomial")
        field = self._field
        db = other.degree
        r = list(self._coeffs)
        if len(r) <= db:
            return Poly(field), self
        q = [field.zero()] * (len(r) - db)
        inv_lead = field.inverse(other.leading)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv_lead
            if field.is_zero(c):
                continue
            q[i - db] = c
            for j, y in enumerate(other._coeffs):
                r[i - db + j] = r[i - db + j] - c * y
        return Poly(field, q), Poly(field, r[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        """Checks whether self divides other"""
        return not (other % self)

    def monic(self) -> Poly:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no monic "
                                      "associate")
        return self * self._field.inverse(self.leading)

    def __call__(self, x: ty.Any) -> ty.Any:
        """Evaluates the polynomial by Horner's scheme. <x> may live in any
        field that the coefficients combine with."""
        acc = self._field.zero() if not self._coeffs else None
        for c in reversed(self._coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def map_coefficients(self,
                         fn: ty.Callable[[ty.Any], ty.Any],
                         field: AbstractField) -> Poly:
        """Returns the polynomial over <field> with coefficients fn(c)"""
        return Poly(field, [fn(c) for c in self._coeffs])

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._field == other._field and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._field, self._coeffs))

    def sort_key(self) -> ty.Tuple[int, ty.Tuple[int, ...]]:
        """Key ordering finite-field polynomials by degree, then by their
        coefficients from the leading term down"""
        return self.degree, tuple(_coeff_index(c)
                                  for c in reversed(self._coeffs))

    def to_literal(self) -> str:
        """
        Renders the coefficients in ascending degree as a comma-separated
        list; coefficients from extension fields are rendered as their
        ;-joined representative digits.
        """
        if not self._coeffs:
            return "0"
        return ",".join(_coeff_literal(c) for c in self._coeffs)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if self._field.is_zero(c):
                continue
            text = _coeff_literal(c)
            if isinstance(c, FieldElement) and c.owner.k > 1:
                text = f"({text})"
            if i == 0:
                terms.append(text)
                continue
            monomial = "X" if i == 1 else f"X^{i}"
            if c == self._field.one():
                terms.append(monomial)
            elif c == -self._field.one() and not isinstance(c, FieldElement):
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{text}*{monomial}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self._field}, [{self.to_literal()}])"

    def __reduce__(self) -> ty.Tuple[ty.Any, ...]:
        return Poly, (self._field, self._coeffs)


def _coeff_literal(c: ty.Any) -> str:
    if isinstance(c, FieldElement):
        return c.to_literal(";")
    return str(c)


def _coeff_index(c: ty.Any) -> int:
    if isinstance(c, FieldElement):
        return c.index
    return int(c)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """
    Computes the monic greatest common divisor of two polynomials with the
    Euclidean algorithm.

    Parameters
    ----------
    f : Poly
        first polynomial
    g : Poly
        second polynomial over the same field

    Returns
    -------
    gcd : Poly
        monic gcd

    """
    if not f and not g:
        raise ZeroPolynomialError("gcd of two zero polynomials")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def term_count(f: Poly) -> int:
    """Returns t(f), the number of nonzero coefficients"""
    return len(f.support())


@dataclass(frozen=True)
class CosetPartition:
    """Partition of Z_p into {0} and the orbits of multiplication by q."""
    p: int
    q: int
    cosets: ty.Tuple[ty.Tuple[int, ...], ...]

    @property
    def m(self) -> int:
        """Returns the common size of the nontrivial cosets"""
        return len(self.cosets[1]) if len(self.cosets) > 1 else 1

    def coset_of(self, i: int) -> ty.Tuple[int, ...]:
        for coset in self.cosets:
            if i % self.p in coset:
                return coset
        raise ValueError(f"{i} is not covered by the partition")


def cyclotomic_cosets(p: int, q: int) -> CosetPartition:
    """
    Computes the q-cyclotomic cosets modulo a prime p.

    Parameters
    ----------
    p : int
        prime modulus
    q : int
        integer coprime to p

    Returns
    -------
    partition : CosetPartition
        {0} first, then the cosets {i q^j mod p}, each sorted, ordered by
        their minimal element

    """
    p = validate_prime(p)
    if q % p == 0:
        raise CharacteristicError(f"{p} divides {q}")
    seen = {0}
    cosets = [(0,)]
    for i in range(1, p):
        if i in seen:
            continue
        coset = set()
        j = i
        while j not in coset:
            coset.add(j)
            j = j * q % p
        seen |= coset
        cosets.append(tuple(sorted(coset)))
    return CosetPartition(p=p, q=q % p, cosets=tuple(cosets))


def splitting_field(p: int, field: FiniteField) -> FiniteField:
    """Returns GF(q^m), the smallest extension of GF(q) containing the p-th
    roots of unity, as an extension of the prime field"""
    m = multiplicative_order(field.order, p)
    if m == 1:
        return field
    return make_field(field.p, field.k * m)


def factor_cyclic(p: int, field: FiniteField) -> ty.List[Poly]:
    """
    Factors X^p - 1 into monic irreducibles over GF(q), gcd(q, p) = 1.

    A root zeta of order p is taken from GF(q^m), m the order of q modulo
    p, and each q-cyclotomic coset C contributes the factor
    prod_{i in C} (X - zeta^i), whose coefficients are checked to lie in
    GF(q). With a single nontrivial coset the cyclotomic polynomial is
    irreducible and no extension is built. When GF(q^m) exceeds the
    supported extension degree, (X^p - 1)/(X - 1) is split into its
    factors of degree m inside GF(q)[X] instead (Cantor-Zassenhaus).

    Parameters
    ----------
    p : int
        prime
    field : FiniteField
        coefficient field GF(q) with characteristic different from p

    Returns
    -------
    factors : list(Poly)
        sorted by degree, then by coefficients from the leading term down

    """
    p = validate_prime(p)
    if field.characteristic == p:
        raise CharacteristicError(f"X^{p} - 1 = (X - 1)^{p} over {field}")
    return list(_factor_cyclic(p, field))


@functools.lru_cache(maxsize=None)
def _factor_cyclic(p: int, field: FiniteField) -> ty.Tuple[Poly, ...]:
    partition = cyclotomic_cosets(p, field.order)
    x_minus_one = Poly(field, [-1, 1])
    if len(partition.cosets) == 2:
        factors = [x_minus_one, Poly(field, [1] * p)]
    elif field.k * partition.m > MAX_EXTENSION_DEGREE:
        logger.debug("splitting X^%d - 1 over %s without an extension",
                     p, field)
        rng = random.Random(p * field.order)
        factors = [x_minus_one] + _split_equal_degree(
            Poly(field, [1] * p), partition.m, rng)
    else:
        factors = _coset_products(p, field, partition)

    if sorted(f.degree for f in factors) != \
            sorted(len(c) for c in partition.cosets):
        raise InvariantViolationError(f"factor degrees of X^{p} - 1 over "
                                      f"{field} do not match the cosets")
    factors.sort(key=Poly.sort_key)
    total = Poly(field, [1])
    for factor in factors:
        total = total * factor
    if total != Poly.x_pow_minus_one(field, p):
        raise InvariantViolationError(f"factors of X^{p} - 1 over {field} "
                                      f"do not multiply back")
    return tuple(factors)


def _coset_products(p: int,
                    field: FiniteField,
                    partition: CosetPartition) -> ty.List[Poly]:
    q = field.order
    ext = splitting_field(p, field)
    logger.debug("factoring X^%d - 1 over %s in %s", p, field, ext)
    zeta = find_element_of_order(ext, p)
    embedding = make_embedding(field, ext) if ext is not field else None

    factors = []
    for coset in partition.cosets:
        product = Poly(ext, [1])
        for i in coset:
            product = product * Poly(ext, [-(zeta ** i), 1])
        for c in product.coeffs:
            if c ** q != c:
                raise InvariantViolationError(
                    f"coefficient {c!r} of a coset product does not lie in "
                    f"{field}")
        if embedding is None:
            factors.append(product)
        else:
            factors.append(product.map_coefficients(embedding.restrict,
                                                    field))
    return factors


def _pow_mod(base: Poly, e: int, modulus: Poly) -> Poly:
    result = Poly(base.field, [1])
    base = base % modulus
    while e:
        if e & 1:
            result = result * base % modulus
        base = base * base % modulus
        e >>= 1
    return result


def _split_equal_degree(f: Poly, d: int, rng: random.Random) -> ty.List[Poly]:
    """Splits a squarefree monic product of irreducibles of degree d over
    GF(q) by gcds with random elements of GF(q)[X]/(f) mapped to the
    squares (odd q) or through the trace to GF(2) (even q)"""
    if f.degree == d:
        return [f]
    field = f.field
    one = Poly(field, [1])
    while True:
        a = Poly(field, [field.random_element(rng) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if field.p == 2:
            g = a % f
            square = g
            for _ in range(field.k * d - 1):
                square = square * square % f
                g = g + square
        else:
            g = _pow_mod(a, (field.order ** d - 1) // 2, f) - one
        if not g:
            continue
        h = poly_gcd(f, g)
        if 0 < h.degree < f.degree:
            return _split_equal_degree(h, d, rng) + \
                _split_equal_degree(f // h, d, rng)


def enumerate_divisors(factors: ty.Sequence[Poly]) -> ty.Iterator[Poly]:
    """
    Iterates over all monic divisors of a product of distinct monic
    irreducibles, as subset products in increasing bitmask order (bit i
    selects factors[i]).

    Parameters
    ----------
    factors : sequence(Poly)
        pairwise distinct monic irreducible polynomials

    Yields
    ------
    divisor : Poly

    """
    if not factors:
        raise ValueError("<factors> must not be empty")
    field = factors[0].field
    for mask in range(1 << len(factors)):
        divisor = Poly(field, [1])
        for i, factor in enumerate(factors):
            if mask >> i & 1:
                divisor = divisor * factor
        yield divisor


@dataclass(frozen=True)
class MultiplicityReport:
    """Multiplicity of the root 1 of a polynomial."""
    multiplicity: int
    m: int
    divisible: bool
    t_f: int


def root_one_multiplicity(f: Poly) -> int:
    """Returns the multiplicity of 1 as a root of a nonzero polynomial"""
    if not f:
        raise ZeroPolynomialError()
    x_minus_one = Poly(f.field, [-1, 1])
    mu = 0
    quotient, remainder = divmod(f, x_minus_one)
    while not remainder:
        mu += 1
        f = quotient
        quotient, remainder = divmod(f, x_minus_one)
    return mu


def multiplicity_check(f: Poly, m: int) -> MultiplicityReport:
    """
    Checks whether (X - 1)^m divides f and verifies that f has more terms
    than the multiplicity of its root 1.

    Parameters
    ----------
    f : Poly
        nonzero polynomial; in characteristic p its degree must be below p
    m : int
        exponent to test

    Returns
    -------
    report : MultiplicityReport

    """
    if not f:
        raise ZeroPolynomialError()
    if m < 0:
        raise ValueError("<m> must be nonnegative")
    char = f.field.characteristic
    if char > 0 and f.degree >= char:
        raise CharacteristicError(f"degree {f.degree} is not below the "
                                  f"characteristic {char}")
    mu = root_one_multiplicity(f)
    t_f = term_count(f)
    if t_f <= mu:
        raise InvariantViolationError(f"{f} has {t_f} terms but 1 is a root "
                                      f"of multiplicity {mu}")
    return MultiplicityReport(multiplicity=mu, m=m, divisible=mu >= m,
                              t_f=t_f)
