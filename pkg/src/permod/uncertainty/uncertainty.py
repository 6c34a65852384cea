# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import itertools
import logging
import random
import typing as ty
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from permod.exact.exact import RationalField, CyclotomicField, \
    make_cyclotomic_field
from permod.ff.ff import (
    FiniteField,
    find_element_of_order,
    make_embedding,
    make_field)
from permod.linalg.linalg import Matrix, RowSpace, det_exact, null_space
from permod.modules.modules import ModVector, generated_submodule
from permod.permgrp.constructors import cyclic_group
from permod.poly.exceptions import CharacteristicError, ZeroPolynomialError
from permod.poly.poly import (
    Poly,
    enumerate_divisors,
    factor_cyclic,
    poly_gcd,
    root_one_multiplicity,
    splitting_field,
    term_count)
from permod.uncertainty.enums import SearchMode, CounterexampleKind
from permod.uncertainty.exceptions import CriterionPreconditionError
from permod.utils.config import MINOR_WARNING_THRESHOLD
from permod.utils.exceptions import InvariantViolationError
from permod.utils.math import minor_count, prime_power, prime_powers_up_to
from permod.utils.validation import validate_positive_int, validate_prime

logger = logging.getLogger(__name__)

# Largest number of vectors the characteristic-p sweep enumerates
# exhaustively; above it a random sample is checked
EXHAUSTIVE_LIMIT = 1_000_000


def _parallel_map(fn: ty.Callable[..., ty.Any],
                  tasks: ty.Sequence[ty.Tuple[ty.Any, ...]],
                  jobs: int) -> ty.List[ty.Any]:
    """Applies fn to every argument tuple, in a process pool if jobs > 1;
    results are returned in task order"""
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*args) for args in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        chunk = max(1, len(tasks) // (4 * jobs))
        return list(executor.map(fn, *zip(*tasks), chunksize=chunk))


@dataclass(frozen=True)
class CriterionReport:
    """Outcome of the gcd criterion for v = f(z) in F[Z_p]."""
    p: int
    f: Poly
    h: Poly
    t_f: int
    deg_h: int
    fails: bool
    implied_t_plus_d: int

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {"p": self.p,
                "f": self.f.to_literal(),
                "h": self.h.to_literal(),
                "t_f": self.t_f,
                "deg_h": self.deg_h,
                "fails": self.fails,
                "t_plus_d": self.implied_t_plus_d}


def cyclic_vector(f: Poly, p: int) -> ModVector:
    """Returns v = f(z) in F[Z_p]: the coefficient of X^i sits at point i"""
    group = cyclic_group(p)
    return ModVector(group, f.field, [f.coeff(i) for i in range(p)])


def gcd_criterion(f: Poly, p: int, cross_check: bool = False
                  ) -> CriterionReport:
    """
    Evaluates the criterion t(v) + d(v) <= p  <=>  t(f) <= deg h for
    v = f(z) in F[Z_p], where h = gcd(X^p - 1, f). In characteristic p,
    h = (X - 1)^mu with mu the multiplicity of the root 1 of f.

    Parameters
    ----------
    f : Poly
        nonzero polynomial of degree < p
    p : int
        prime order of the cyclic group
    cross_check : bool
        also compute d(v) by submodule closure and compare it with
        p - deg h

    Returns
    -------
    report : CriterionReport

    """
    p = validate_prime(p)
    if not f:
        raise ZeroPolynomialError()
    if f.degree >= p:
        raise CriterionPreconditionError(f"deg f = {f.degree} is not below "
                                         f"p = {p}")
    field = f.field
    if field.characteristic == p:
        mu = root_one_multiplicity(f)
        h = Poly(field, [-1, 1]) ** mu
    else:
        h = poly_gcd(Poly.x_pow_minus_one(field, p), f)
    t_f = term_count(f)
    deg_h = h.degree
    report = CriterionReport(p=p, f=f, h=h, t_f=t_f, deg_h=deg_h,
                             fails=t_f <= deg_h,
                             implied_t_plus_d=t_f + p - deg_h)
    if cross_check:
        d = generated_submodule(cyclic_vector(f, p)).dim
        if d != p - deg_h:
            raise InvariantViolationError(f"d(v) = {d} but p - deg h = "
                                          f"{p - deg_h} for f = {f}")
    return report


@dataclass(frozen=True)
class TableEntry:
    """A field over which t(v) + d(v) <= p for some v in F[Z_p]."""
    p: int
    q: int
    kind: CounterexampleKind
    witness: Poly
    divisor: Poly

    @property
    def field_name(self) -> str:
        return f"GF({self.q})"

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {"p": self.p,
                "q": self.q,
                "field": self.field_name,
                "kind": self.kind.value,
                "witness": self.witness.to_literal(),
                "divisor": self.divisor.to_literal()}


def _multiple_with_small_support(h: Poly, p: int) -> ty.Optional[Poly]:
    """
    Finds a multiple f of h with deg f < p and t(f) <= deg h. Supports T
    with 0 in T and |T| = deg h are scanned in combinadic order; a multiple
    supported in T exists iff the residues X^i mod h, i in T, are linearly
    dependent, and its coefficients are read from the null space.
    """
    field = h.field
    k = h.degree
    residues = [Poly.monomial(field, i) % h for i in range(p)]
    for rest in itertools.combinations(range(1, p), k - 1):
        support = (0,) + rest
        space = RowSpace(field, k)
        dependent = False
        for i in support:
            if not space.insert([residues[i].coeff(j) for j in range(k)]):
                dependent = True
                break
        if not dependent:
            continue
        system = Matrix(field, [[residues[i].coeff(j) for i in support]
                                for j in range(k)])
        solution = null_space(system)[0]
        coeffs = [field.zero()] * p
        for i, c in zip(support, solution):
            coeffs[i] = c
        f = Poly(field, coeffs)
        if h.divides(f) and term_count(f) <= k:
            return f
        raise InvariantViolationError(f"null-space witness {f} is not a "
                                      f"small multiple of {h}")
    return None


def search_counterexample(p: int,
                          field: FiniteField,
                          mode: SearchMode = SearchMode.DIVISORS_ONLY
                          ) -> ty.Optional[TableEntry]:
    """
    Searches for f over GF(q) with t(f) <= deg gcd(X^p - 1, f), i.e. for a
    vector v = f(z) of F[Z_p] with t(v) + d(v) <= p.

    The irreducible factors of (X^p - 1)/(X - 1) are scanned in factor
    order for one that is missing a term; this is the scan that the table
    of minimal fields is built from. With SearchMode.WITH_MULTIPLES, all
    proper nontrivial divisors h of X^p - 1 are then scanned in bitmask
    order for a multiple of degree < p with at most deg h terms.

    Parameters
    ----------
    p : int
        prime
    field : FiniteField
        GF(q), q not a power of p
    mode : SearchMode
        scope of the search

    Returns
    -------
    entry : TableEntry or None
        first hit in the deterministic scan order

    """
    p = validate_prime(p)
    SearchMode.validate(mode)
    if field.characteristic == p:
        raise CharacteristicError(f"{field} has characteristic {p}")
    factors = factor_cyclic(p, field)
    x_minus_one = Poly(field, [-1, 1])

    for h in factors:
        if h != x_minus_one and term_count(h) <= h.degree:
            logger.debug("p=%d %s: divisor %s is missing a term", p, field, h)
            return TableEntry(p=p, q=field.order,
                              kind=CounterexampleKind.MISSING_TERM_DIVISOR,
                              witness=h, divisor=h)
    if mode is SearchMode.WITH_MULTIPLES:
        divisors = [h for h in enumerate_divisors(factors)
                    if 0 < h.degree < p]
        for h in divisors:
            f = _multiple_with_small_support(h, p)
            if f is not None:
                logger.debug("p=%d %s: multiple %s of %s", p, field, f, h)
                return TableEntry(p=p, q=field.order,
                                  kind=CounterexampleKind.MULTIPLE,
                                  witness=f, divisor=h)
    return None


def minimal_table(primes: ty.Sequence[int],
                  q_max: int,
                  mode: SearchMode = SearchMode.DIVISORS_ONLY
                  ) -> ty.List[TableEntry]:
    """
    Lists, for each prime p, the fields GF(q), q <= q_max, over which a
    counterexample exists while it exists over no proper subfield. Once a
    field has a counterexample, so does every extension of it; such q are
    skipped without searching.

    Parameters
    ----------
    primes : sequence(int)
        primes p
    q_max : int
        largest field size
    mode : SearchMode
        scope of the search per field

    Returns
    -------
    entries : list(TableEntry)
        ordered by p (as given), then q

    """
    q_max = validate_positive_int(q_max, "q_max")
    SearchMode.validate(mode)
    entries = []
    for p in primes:
        p = validate_prime(p)
        has_counterexample: ty.Dict[int, bool] = {}
        for q in prime_powers_up_to(q_max):
            r, k = prime_power(q)
            if r == p:
                continue
            subfields = [r ** j for j in range(1, k) if k % j == 0]
            if any(has_counterexample.get(s, False) for s in subfields):
                has_counterexample[q] = True
                continue
            entry = search_counterexample(p, make_field(r, k), mode)
            has_counterexample[q] = entry is not None
            if entry is not None:
                entries.append(entry)
        logger.info("p=%d: minimal fields %s", p,
                    [e.field_name for e in entries if e.p == p])
    return entries


@dataclass
class ChebotarevReport:
    """Outcome of the sweep over all square minors of [zeta^(ij)]."""
    p: int
    minors_checked: int
    max_size: int
    failures: ty.List[ty.Tuple[ty.Tuple[int, ...], ty.Tuple[int, ...]]] = \
        dc_field(default_factory=list)

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {"p": self.p,
                "minors_checked": self.minors_checked,
                "max_size": self.max_size,
                "failures": [[list(r), list(c)] for r, c in self.failures]}


def _chebotarev_rows(p: int, rows: ty.Tuple[int, ...]
                     ) -> ty.Tuple[int, ty.List[ty.Tuple[ty.Tuple[int, ...],
                                                         ty.Tuple[int, ...]]]]:
    """Checks all minors with the given row set"""
    field = make_cyclotomic_field(p)
    count = 0
    failures = []
    for cols in itertools.combinations(range(p), len(rows)):
        m = Matrix(field, [[field.zeta_power(i * j) for j in cols]
                           for i in rows])
        count += 1
        if not det_exact(m):
            failures.append((rows, cols))
    return count, failures


def chebotarev_verify(p: int,
                      max_size: ty.Optional[int] = None,
                      jobs: int = 1) -> ChebotarevReport:
    """
    Checks that every square submatrix of the p x p matrix [zeta^(ij)],
    zeta a primitive p-th root of unity, has nonzero determinant, using
    exact arithmetic in Q(zeta_p).

    Parameters
    ----------
    p : int
        prime
    max_size : int, optional
        largest minor size; defaults to p
    jobs : int
        number of worker processes

    Returns
    -------
    report : ChebotarevReport
        minors_checked equals the sum of C(p, k)^2 over 1 <= k <= max_size

    """
    p = validate_prime(p)
    k_max = p if max_size is None else min(validate_positive_int(
        max_size, "max_size"), p)
    total = minor_count(p, k_max)
    if total > MINOR_WARNING_THRESHOLD:
        warnings.warn(f"checking {total} minors for p = {p} will take a "
                      f"long time")
    tasks = [(p, rows) for k in range(1, k_max + 1)
             for rows in itertools.combinations(range(p), k)]
    report = ChebotarevReport(p=p, minors_checked=0, max_size=k_max)
    for count, failures in _parallel_map(_chebotarev_rows, tasks, jobs):
        report.minors_checked += count
        report.failures.extend(failures)
    logger.info("p=%d: %d minors checked", p, report.minors_checked)
    if report.failures:
        raise InvariantViolationError(f"singular minors of the p={p} "
                                      f"Fourier matrix: {report.failures}")
    return report


@dataclass(frozen=True)
class RefutationReport:
    """A singular square submatrix of [zeta^(xy)] over GF(q^m)."""
    p: int
    q: int
    field_name: str
    rows: ty.Tuple[int, ...]
    cols: ty.Tuple[int, ...]
    determinant_zero: bool

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {"p": self.p,
                "q": self.q,
                "field": self.field_name,
                "rows": list(self.rows),
                "cols": list(self.cols),
                "determinant_zero": self.determinant_zero}


def refutation_matrix(p: int, field: FiniteField,
                      rows: ty.Sequence[int],
                      cols: ty.Sequence[int]) -> Matrix:
    """Returns [zeta^(xy)] for x in rows, y in cols over the splitting
    field of X^p - 1 over <field>"""
    ext = splitting_field(p, field)
    zeta = find_element_of_order(ext, p)
    return Matrix(ext, [[zeta ** (x * y) for y in cols] for x in rows])


def chebotarev_refute_mod_q(p: int,
                            field: FiniteField,
                            f: Poly) -> RefutationReport:
    """
    Builds a singular square submatrix of [zeta^(xy)] in characteristic q
    from a polynomial f failing the gcd criterion: rows are the exponents
    of f and columns are t(f) exponents y with f(zeta^y) = 0.

    Parameters
    ----------
    p : int
        prime
    field : FiniteField
        GF(q) with q prime to p; f has coefficients in it
    f : Poly
        polynomial with t(f) <= deg gcd(X^p - 1, f)

    Returns
    -------
    report : RefutationReport

    """
    p = validate_prime(p)
    if field.characteristic == p:
        raise CriterionPreconditionError(f"{field} has no element of order "
                                         f"{p}")
    if f.field != field:
        raise CriterionPreconditionError(f"f is not a polynomial over {field}")
    if not gcd_criterion(f, p).fails:
        raise CriterionPreconditionError(f"f = {f} satisfies t(f) > deg h")

    ext = splitting_field(p, field)
    zeta = find_element_of_order(ext, p)
    if ext is not field:
        embedding = make_embedding(field, ext)
        f_ext = f.map_coefficients(embedding, ext)
    else:
        f_ext = f
    rows = tuple(f.support())
    roots = [y for y in range(p) if not f_ext(zeta ** y)]
    cols = tuple(roots[:len(rows)])
    if len(cols) < len(rows):
        raise InvariantViolationError(f"{f} has fewer than {len(rows)} "
                                      f"roots among the powers of zeta")
    det = det_exact(Matrix(ext, [[zeta ** (x * y) for y in cols]
                                 for x in rows]))
    if det:
        raise InvariantViolationError(f"minor on rows {rows} and columns "
                                      f"{cols} is not singular")
    return RefutationReport(p=p, q=field.order, field_name=str(ext),
                            rows=rows, cols=cols, determinant_zero=True)


def fourier_support(v: ModVector) -> int:
    """
    Counts the characters lambda_j(z) = zeta^j, j = 0..n-1, of the cyclic
    group with lambda_j(v) = sum_i a_i zeta^(ij) != 0, where a_i is the
    coefficient of the point 0.z^i and z the first enumerated generator.

    Parameters
    ----------
    v : ModVector
        vector of the regular module of a cyclic group of order n, with
        rational or Q(zeta_n) coefficients

    Returns
    -------
    support : int
        |supp of the Fourier transform|, which equals d(v)

    """
    group = v.group
    z = group.regular_cyclic_generator()
    if z is None:
        raise ValueError("group is not cyclic acting regularly")
    n = group.n
    field = make_cyclotomic_field(n)
    if isinstance(v.field, RationalField):
        coerce = field.from_rational
    elif isinstance(v.field, CyclotomicField) and v.field == field:
        coerce = field.coerce
    else:
        raise TypeError(f"coefficients from {v.field} do not embed into "
                        f"{field}")
    coeffs = []
    point = 0
    for _ in range(n):
        coeffs.append(coerce(v.coeffs[point]))
        point = z(point)

    support = 0
    for j in range(n):
        value = field.zero()
        for i, a in enumerate(coeffs):
            if a:
                value = value + a * field.zeta_power(i * j)
        if value:
            support += 1
    return support


@dataclass(frozen=True)
class ExhaustiveReport:
    """Outcome of the t(v) + d(v) > p sweep over GF(p)[Z_p]."""
    p: int
    vectors_checked: int
    sampled: bool

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {"p": self.p,
                "vectors_checked": self.vectors_checked,
                "sampled": self.sampled}


def _digits(index: int, p: int) -> ty.List[int]:
    digits = []
    for _ in range(p):
        index, r = divmod(index, p)
        digits.append(r)
    return digits


def _exhaustive_chunk(p: int, start: int, stop: int) -> int:
    """Checks the vectors whose base-p digit encodings lie in
    [start, stop)"""
    field = make_field(p)
    for index in range(start, stop):
        report = gcd_criterion(Poly(field, _digits(index, p)), p)
        if report.fails:
            raise InvariantViolationError(f"t + d = {report.implied_t_plus_d}"
                                          f" <= p for f = {report.f}")
    return stop - start


def exhaustive_char_p(p: int,
                      jobs: int = 1,
                      samples: int = 10_000,
                      seed: int = 0) -> ExhaustiveReport:
    """
    Checks t(v) + d(v) > p for the nonzero vectors of GF(p)[Z_p] through
    the characteristic-p branch of the gcd criterion. All p^p - 1 vectors
    are checked when there are at most EXHAUSTIVE_LIMIT of them, otherwise
    a seeded random sample.

    Parameters
    ----------
    p : int
        prime
    jobs : int
        number of worker processes
    samples : int
        sample size when the sweep is not exhaustive
    seed : int
        seed of the sampling generator

    Returns
    -------
    report : ExhaustiveReport

    """
    p = validate_prime(p)
    total = p ** p - 1
    if total > EXHAUSTIVE_LIMIT:
        warnings.warn(f"{total} vectors for p = {p}; checking a random "
                      f"sample of {samples}")
        rng = random.Random(seed)
        field = make_field(p)
        for _ in range(samples):
            index = rng.randrange(1, total + 1)
            report = gcd_criterion(Poly(field, _digits(index, p)), p)
            if report.fails:
                raise InvariantViolationError(
                    f"t + d <= p for f = {report.f}")
        return ExhaustiveReport(p=p, vectors_checked=samples, sampled=True)

    chunk = max(1, total // max(1, 8 * jobs))
    tasks = [(p, start, min(start + chunk, total + 1))
             for start in range(1, total + 1, chunk)]
    checked = sum(_parallel_map(_exhaustive_chunk, tasks, jobs))
    logger.info("p=%d: %d vectors checked", p, checked)
    return ExhaustiveReport(p=p, vectors_checked=checked, sampled=False)
