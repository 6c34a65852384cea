# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import os
import unittest
from pathlib import Path
from unittest import mock

from permod.exact.exact import QQ
from permod.ff.ff import make_field
from permod.modules.modules import ModVector, generated_submodule
from permod.permgrp.group_file import load_group
from permod.poly.exceptions import CharacteristicError, ZeroPolynomialError
from permod.poly.poly import Poly, term_count
from permod.uncertainty.enums import SearchMode, CounterexampleKind
from permod.uncertainty.exceptions import CriterionPreconditionError
from permod.uncertainty.uncertainty import (
    cyclic_vector,
    gcd_criterion,
    search_counterexample,
    minimal_table,
    chebotarev_verify,
    refutation_matrix,
    chebotarev_refute_mod_q,
    fourier_support,
    exhaustive_char_p)

FIXTURES = Path(__file__).resolve().parents[3] / "fixtures" / "groups"
EXTENDED = os.environ.get("PERMOD_EXTENDED", "") not in ("", "0")
GF2 = make_field(2)
GF5 = make_field(5)


def worked_example() -> Poly:
    """X^6 + 3X^3 + 4X^2 + 2X + 2 over GF(5)"""
    return Poly(GF5, [2, 2, 4, 3, 0, 0, 1])


class TestGcdCriterion(unittest.TestCase):
    def test_cyclic_vector(self) -> None:
        """Tests whether the coefficient of X^i sits at point i."""
        v = cyclic_vector(Poly(GF2, [1, 0, 1]), 5)
        self.assertEqual(v.coeffs, (1, 0, 1, 0, 0))
        self.assertEqual(v.n, 5)

    def test_worked_example(self) -> None:
        """Tests whether the degree-6 example over GF(5) fails the
        uncertainty bound for p = 11."""
        report = gcd_criterion(worked_example(), 11, cross_check=True)
        self.assertEqual(report.t_f, 5)
        self.assertEqual(report.deg_h, 5)
        self.assertTrue(report.fails)
        self.assertEqual(report.implied_t_plus_d, 11)
        self.assertTrue(report.h.divides(worked_example()))
        self.assertEqual(report.to_dict()["f"], "2,2,4,3,0,0,1")

    def test_characteristic_p(self) -> None:
        """Tests whether h is a power of X - 1 when the characteristic is
        p."""
        field = make_field(3)
        for coeffs, deg_h in [([2, 1], 1), ([1, 1, 1], 2), ([1, 1], 0)]:
            report = gcd_criterion(Poly(field, coeffs), 3, cross_check=True)
            self.assertEqual(report.deg_h, deg_h, coeffs)
            self.assertFalse(report.fails)

    def test_rational(self) -> None:
        """Tests whether X + 1 over Q is coprime to X^3 - 1."""
        report = gcd_criterion(Poly(QQ, [1, 1]), 3, cross_check=True)
        self.assertEqual(report.deg_h, 0)
        self.assertEqual(report.implied_t_plus_d, 5)

    def test_cross_check_agrees(self) -> None:
        """Tests whether p - deg h equals the dimension computed by
        closure."""
        f = Poly(GF2, [1, 1, 0, 1])
        report = gcd_criterion(f, 7)
        d = generated_submodule(cyclic_vector(f, 7)).dim
        self.assertEqual(d, 7 - report.deg_h)
        self.assertTrue(report.fails)

    def test_errors(self) -> None:
        """Tests whether invalid inputs raise the documented errors."""
        with self.assertRaises(ZeroPolynomialError):
            gcd_criterion(Poly(GF2), 7)
        with self.assertRaises(CriterionPreconditionError):
            gcd_criterion(Poly.monomial(GF2, 7), 7)
        with self.assertRaises(ValueError):
            gcd_criterion(Poly(GF2, [1, 1]), 6)


class TestCounterexampleSearch(unittest.TestCase):
    def test_missing_term_divisor(self) -> None:
        """Tests whether a cubic factor of X^7 - 1 over GF(2) is found."""
        entry = search_counterexample(7, GF2)
        self.assertIsNotNone(entry)
        self.assertIs(entry.kind, CounterexampleKind.MISSING_TERM_DIVISOR)
        self.assertEqual(entry.witness.degree, 3)
        self.assertEqual(term_count(entry.witness), 3)
        self.assertEqual(entry.field_name, "GF(2)")
        self.assertEqual(entry.to_dict()["kind"], "missing-term-divisor")

    def test_divisors_only_misses(self) -> None:
        """Tests whether no divisor of X^11 - 1 over GF(5) misses a
        term."""
        self.assertIsNone(search_counterexample(11, GF5))

    def test_root_one_factor_is_ignored(self) -> None:
        """Tests whether (X - 1)h with h an irreducible quintic is not
        reported although it misses a term."""
        h = Poly(GF5, [4, 1, 1, 4, 2, 1])
        product = Poly(GF5, [4, 1]) * h
        self.assertEqual(product, Poly(GF5, [1, 3, 0, 2, 2, 1, 1]))
        self.assertEqual(term_count(product), 6)
        self.assertTrue(product.divides(Poly(GF5, [4] + [0] * 10 + [1])))
        self.assertIsNone(search_counterexample(11, GF5))
        entries = minimal_table([11], 5)
        self.assertEqual([e.field_name for e in entries], ["GF(3)"])

    def test_with_multiples(self) -> None:
        """Tests whether scanning multiples finds a counterexample over
        GF(5) for p = 11 built on the quintic factor X^5 + 2X^4 + 4X^3 +
        X^2 + X + 4."""
        entry = search_counterexample(11, GF5, SearchMode.WITH_MULTIPLES)
        self.assertIsNotNone(entry)
        self.assertIs(entry.kind, CounterexampleKind.MULTIPLE)
        self.assertEqual(entry.divisor, Poly(GF5, [4, 1, 1, 4, 2, 1]))
        self.assertTrue(entry.divisor.divides(entry.witness))
        self.assertLess(entry.witness.degree, 11)
        self.assertTrue(gcd_criterion(entry.witness, 11).fails)

    def test_characteristic_p(self) -> None:
        """Tests whether a field of characteristic p is rejected."""
        with self.assertRaises(CharacteristicError):
            search_counterexample(7, make_field(7))

    def test_no_counterexample(self) -> None:
        """Tests whether X^5 - 1 over GF(2) has no counterexample."""
        self.assertIsNone(search_counterexample(5, GF2))

    def test_minimal_table(self) -> None:
        """Tests whether extensions of fields with a counterexample are
        skipped."""
        entries = minimal_table([7, 11], 16)
        self.assertEqual([(e.p, e.field_name) for e in entries],
                         [(7, "GF(2)"), (11, "GF(3)")])

    def test_invalid_mode(self) -> None:
        """Tests whether a mode that is not a SearchMode is rejected."""
        with self.assertRaises(TypeError):
            search_counterexample(7, GF2, "divisors")


class TestChebotarev(unittest.TestCase):
    def test_minor_counts(self) -> None:
        """Tests whether every minor is checked for small primes."""
        for p, count in [(2, 5), (3, 19), (5, 251)]:
            report = chebotarev_verify(p)
            self.assertEqual(report.minors_checked, count)
            self.assertEqual(report.failures, [])

    def test_max_size(self) -> None:
        """Tests whether the sweep stops at the requested minor size."""
        report = chebotarev_verify(7, max_size=2)
        self.assertEqual(report.minors_checked, 49 + 441)
        self.assertEqual(report.max_size, 2)

    def test_parallel(self) -> None:
        """Tests whether a process pool gives the same count."""
        self.assertEqual(chebotarev_verify(3, jobs=2).minors_checked, 19)

    def test_warning(self) -> None:
        """Tests whether a large sweep is announced with a warning."""
        with mock.patch("permod.uncertainty.uncertainty."
                        "MINOR_WARNING_THRESHOLD", 1):
            with self.assertWarns(UserWarning):
                chebotarev_verify(2)

    def test_refute_gf2(self) -> None:
        """Tests whether a cubic factor over GF(2) gives a singular minor
        for p = 7."""
        f = Poly(GF2, [1, 1, 0, 1])
        report = chebotarev_refute_mod_q(7, GF2, f)
        self.assertTrue(report.determinant_zero)
        self.assertEqual(report.rows, (0, 1, 3))
        self.assertEqual(len(report.cols), 3)
        self.assertEqual(report.field_name, "GF(2^3)")

    def test_refute_worked_example(self) -> None:
        """Tests whether the worked example gives a singular 5 x 5 minor
        over GF(5^5)."""
        report = chebotarev_refute_mod_q(11, GF5, worked_example())
        self.assertEqual(report.rows, (0, 1, 2, 3, 6))
        self.assertEqual(len(report.cols), 5)
        self.assertEqual(report.to_dict()["q"], 5)

    def test_refute_preconditions(self) -> None:
        """Tests whether polynomials satisfying the bound are rejected."""
        with self.assertRaises(CriterionPreconditionError):
            chebotarev_refute_mod_q(7, GF2, Poly(GF2, [1, 1]))
        with self.assertRaises(CriterionPreconditionError):
            chebotarev_refute_mod_q(7, make_field(3), Poly(GF2, [1, 1, 0, 1]))

    def test_refutation_matrix(self) -> None:
        """Tests whether the submatrix has the requested shape."""
        m = refutation_matrix(7, GF2, [0, 1], [1, 2, 4])
        self.assertEqual(m.shape, (2, 3))
        self.assertEqual(m[0, 0], 1)


class TestFourierSupport(unittest.TestCase):
    def test_equals_dimension(self) -> None:
        """Tests whether the Fourier support equals d(v) over Q."""
        z6 = load_group(FIXTURES / "z6.grp")
        for coeffs, d in [([1, 0, 0, 1, 0, 0], 3), ([1] * 6, 1),
                          ([1, 0, 0, 0, 0, 0], 6), ([1, -1, 0, 0, 0, 0], 5)]:
            v = ModVector(z6, QQ, coeffs)
            self.assertEqual(fourier_support(v), d, coeffs)
            self.assertEqual(generated_submodule(v).dim, d, coeffs)

    def test_not_cyclic(self) -> None:
        """Tests whether a non-regular group is rejected."""
        s3 = load_group(FIXTURES / "s3.grp")
        with self.assertRaises(ValueError):
            fourier_support(ModVector(s3, QQ, [1, 0, 0]))

    def test_finite_field(self) -> None:
        """Tests whether finite field coefficients are rejected."""
        z3 = load_group(FIXTURES / "z3.grp")
        with self.assertRaises(TypeError):
            fourier_support(ModVector(z3, GF2, [1, 0, 0]))


class TestExhaustive(unittest.TestCase):
    def test_small_primes(self) -> None:
        """Tests whether all nonzero vectors are checked for p <= 5."""
        for p, count in [(2, 3), (3, 26), (5, 3124)]:
            report = exhaustive_char_p(p)
            self.assertEqual(report.vectors_checked, count)
            self.assertFalse(report.sampled)

    def test_parallel(self) -> None:
        """Tests whether the process pool covers every vector once."""
        self.assertEqual(exhaustive_char_p(3, jobs=2).vectors_checked, 26)

    def test_sampled(self) -> None:
        """Tests whether a large prime falls back to a seeded sample."""
        with self.assertWarns(UserWarning):
            report = exhaustive_char_p(11, samples=50, seed=1)
        self.assertTrue(report.sampled)
        self.assertEqual(report.vectors_checked, 50)

    @unittest.skipUnless(EXTENDED, "set PERMOD_EXTENDED=1 for slow sweeps")
    def test_p7(self) -> None:
        """Tests whether all 7^7 - 1 vectors for p = 7 pass."""
        self.assertEqual(exhaustive_char_p(7, jobs=4).vectors_checked,
                         7 ** 7 - 1)


if __name__ == '__main__':
    unittest.main()
