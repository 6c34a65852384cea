# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import unittest
from fractions import Fraction
from pathlib import Path
from unittest import mock

from permod.exact.exact import QQ
from permod.ff.ff import make_field, make_embedding
from permod.linalg.linalg import rank
from permod.modules.enums import EqualityCase
from permod.modules.exceptions import (
    ZeroVectorError,
    PreconditionError,
    NotAnEqualityInstanceError,
    BruteForceCapError)
from permod.modules.modules import (
    ModVector,
    SubmoduleBasis,
    generated_submodule,
    translate_matrix,
    verify_inequalities,
    block_vector,
    small_support_vector,
    orbit_sum_vector,
    has_invariant_subgroup,
    affine_construction,
    equality_analysis,
    min_support,
    rudio_witness,
    two_dimensional_support_check,
    reduce_mod)
from permod.permgrp.exceptions import NotABlockError
from permod.permgrp.group_file import load_group
from permod.permgrp.permgrp import Permutation, PermGroup

FIXTURES = Path(__file__).resolve().parents[3] / "fixtures" / "groups"
GF2 = make_field(2)


def star_vector(field):
    """Sum of the pairs containing point 0 in the pairs module of A_5"""
    pairs = load_group(FIXTURES / "a5.grp").pairs_action()
    return ModVector.from_points(pairs, field, [0, 1, 2, 3])


class TestModVector(unittest.TestCase):
    def setUp(self) -> None:
        self.z6 = load_group(FIXTURES / "z6.grp")

    def test_support(self) -> None:
        """Tests whether support and t ignore zero coefficients."""
        v = ModVector(self.z6, GF2, [1, 0, 0, 1, 0, 2])
        self.assertEqual(v.support(), frozenset({0, 3}))
        self.assertEqual(v.t, 2)
        self.assertEqual(v.to_literal(), "1,0,0,1,0,0")

    def test_wrong_length(self) -> None:
        """Tests whether a coefficient list of the wrong length raises an
        error."""
        with self.assertRaises(ValueError):
            ModVector(self.z6, GF2, [1, 0])

    def test_translate(self) -> None:
        """Tests whether translation moves the coefficient of x to x.g."""
        v = ModVector.from_points(self.z6, QQ, [0, 1], coeff=Fraction(1, 2))
        g = self.z6.generators[0]
        self.assertEqual(v.translate(g).coeffs,
                         (0, Fraction(1, 2), Fraction(1, 2), 0, 0, 0))

    def test_arithmetic(self) -> None:
        """Tests whether vectors add and scale coefficientwise."""
        u = ModVector.from_points(self.z6, QQ, [0])
        w = ModVector.from_points(self.z6, QQ, [1])
        self.assertEqual((2 * u - w).coeffs, (2, -1, 0, 0, 0, 0))
        self.assertTrue((u - u).is_zero())


class TestGeneratedSubmodule(unittest.TestCase):
    def setUp(self) -> None:
        self.z6 = load_group(FIXTURES / "z6.grp")

    def test_dimensions(self) -> None:
        """Tests whether d(v) matches known values in the regular module
        of Z_6."""
        cases = [([1, 0, 0, 1, 0, 0], 3), ([1] * 6, 1),
                 ([1, 0, 0, 0, 0, 0], 6), ([1, 1, 0, 0, 0, 0], 5)]
        for coeffs, d in cases:
            v = ModVector(self.z6, GF2, coeffs)
            m = generated_submodule(v)
            self.assertEqual(m.dim, d, coeffs)
            self.assertTrue(m.is_closed())
            self.assertEqual(rank(translate_matrix(v)), d)

    def test_zero_vector(self) -> None:
        """Tests whether the zero vector is rejected."""
        with self.assertRaises(ZeroVectorError):
            generated_submodule(ModVector(self.z6, GF2, [0] * 6))

    def test_characteristic_dependence(self) -> None:
        """Tests whether the star vector of the pairs module has d = 4 in
        characteristic 2 and d = 5 over Q."""
        self.assertEqual(generated_submodule(star_vector(GF2)).dim, 4)
        self.assertEqual(generated_submodule(star_vector(QQ)).dim, 5)

    def test_lift(self) -> None:
        """Tests whether extending the field keeps the dimension."""
        m = generated_submodule(ModVector(self.z6, GF2, [1, 0, 0, 1, 0, 0]))
        lifted = m.lift(make_embedding(GF2, make_field(2, 2)))
        self.assertEqual(lifted.dim, 3)

    def test_full_module(self) -> None:
        """Tests whether the full module has dimension n."""
        self.assertEqual(SubmoduleBasis.full(self.z6, QQ).dim, 6)


class TestVerifyInequalities(unittest.TestCase):
    def test_block_equality(self) -> None:
        """Tests whether a block sum in Z_6 attains td = n."""
        z6 = load_group(FIXTURES / "z6.grp")
        report = verify_inequalities(ModVector(z6, GF2, [1, 0, 0, 1, 0, 0]))
        self.assertEqual((report.t, report.d), (2, 3))
        self.assertTrue(report.holds_b)
        self.assertIsNone(report.holds_c)
        self.assertIs(report.case, EqualityCase.BLOCK)
        self.assertEqual(report.to_dict()["case"], "block-equality")
        self.assertIsNone(report.to_dict()["omega_size"])

    def test_single_point(self) -> None:
        """Tests whether a multiple of one point is classified as t=1."""
        a5 = load_group(FIXTURES / "a5.grp")
        report = verify_inequalities(ModVector.from_points(a5, QQ, [2]))
        self.assertIs(report.case, EqualityCase.SINGLE_POINT)
        self.assertTrue(report.holds_c)

    def test_co_point(self) -> None:
        """Tests whether the affine vector over GF(4) is classified as
        t=n-1."""
        group, v = affine_construction(make_field(2, 2))
        report = verify_inequalities(v)
        self.assertEqual((report.t, report.d, report.n), (3, 2, 4))
        self.assertIs(report.case, EqualityCase.CO_POINT)

    def test_pair_equality(self) -> None:
        """Tests whether the star vector over GF(2) attains the primitive
        bound and passes the equality analysis."""
        report = verify_inequalities(star_vector(GF2))
        self.assertEqual((report.n, report.t, report.d), (10, 4, 4))
        self.assertIs(report.case, EqualityCase.PAIR)
        self.assertEqual(report.omega_size, 5)
        self.assertEqual(sorted(report.conclusions), list("abcdef"))
        self.assertTrue(all(report.conclusions.values()))

    def test_rational_star(self) -> None:
        """Tests whether the star vector over Q is no equality case."""
        report = verify_inequalities(star_vector(QQ))
        self.assertEqual(report.d, 5)
        self.assertTrue(report.holds_c)
        self.assertIs(report.case, EqualityCase.NONE)
        with self.assertRaises(NotAnEqualityInstanceError):
            equality_analysis(star_vector(QQ))


class TestConstructions(unittest.TestCase):
    def test_block_vector(self) -> None:
        """Tests whether the trivial homomorphism gives the block sum."""
        z6 = load_group(FIXTURES / "z6.grp")
        v = block_vector(z6, {0, 3}, None, GF2)
        self.assertEqual(v.coeffs, (1, 0, 0, 1, 0, 0))

    def test_block_vector_sign(self) -> None:
        """Tests whether a sign character on the block stabilizer gives
        alternating coefficients."""
        z6 = load_group(FIXTURES / "z6.grp")
        half_turn = z6.generators[0] ** 3
        lam = {z6.identity(): 1, half_turn: -1}
        v = block_vector(z6, {0, 3}, lam, QQ)
        self.assertEqual(v.coeffs, (1, 0, 0, -1, 0, 0))
        self.assertEqual(generated_submodule(v).dim, 3)

    def test_block_vector_errors(self) -> None:
        """Tests whether non-blocks and non-homomorphisms are rejected."""
        z6 = load_group(FIXTURES / "z6.grp")
        with self.assertRaises(NotABlockError):
            block_vector(z6, {0, 1}, None, GF2)
        half_turn = z6.generators[0] ** 3
        with self.assertRaises(ValueError):
            block_vector(z6, {0, 3}, {z6.identity(): 2, half_turn: 2}, QQ)

    def test_small_support_vector(self) -> None:
        """Tests whether t + d <= n + 1 holds for the returned vector."""
        z6 = load_group(FIXTURES / "z6.grp")
        modules = [SubmoduleBasis.full(z6, GF2),
                   generated_submodule(ModVector(z6, GF2, [1] * 6)),
                   generated_submodule(ModVector(z6, GF2,
                                                 [1, 1, 0, 0, 0, 0]))]
        for m in modules:
            v = small_support_vector(m)
            self.assertTrue(m.contains(v))
            self.assertLessEqual(v.t + generated_submodule(v).dim, 7)

    def test_orbit_sum(self) -> None:
        """Tests whether the orbit-sum vector of a transposition subgroup
        of S_3 has d = |G:K| - 1 in characteristic 2 and |G:K| over Q."""
        s3 = load_group(FIXTURES / "s3.grp")
        k = [s3.identity(), Permutation([1, 0, 2])]
        v, report = orbit_sum_vector(s3, 0, k, GF2)
        self.assertEqual(v.support(), frozenset({0, 1}))
        self.assertEqual((report.t, report.index, report.d), (2, 3, 2))
        _, report = orbit_sum_vector(s3, 0, k, QQ)
        self.assertEqual(report.d, 3)
        self.assertTrue(all(report.conclusions.values()))

    def test_orbit_sum_preconditions(self) -> None:
        """Tests whether each violated condition is reported by number."""
        s3 = load_group(FIXTURES / "s3.grp")
        rotation = Permutation([1, 2, 0])
        cases = [([s3.identity(), Permutation([0, 2, 1])], 1),
                 ([s3.identity()], 2),
                 ([s3.identity(), rotation, rotation ** 2], 3)]
        for k, condition in cases:
            with self.assertRaises(PreconditionError) as context:
                orbit_sum_vector(s3, 0, k, GF2)
            self.assertEqual(context.exception.condition, condition)

    def test_affine_construction(self) -> None:
        """Tests whether the affine vector has t = q - 1 and d = 2."""
        for field, unit, order in [(make_field(2, 2), None, 12),
                                   (make_field(5), 4, 10),
                                   (make_field(7), None, 42)]:
            group, v = affine_construction(field, unit)
            self.assertEqual(group.order(), order)
            self.assertEqual(v.t, field.order - 1)
            self.assertEqual(generated_submodule(v).dim, 2)

    def test_affine_trivial_unit(self) -> None:
        """Tests whether a trivial multiplicative part is rejected."""
        with self.assertRaises(PreconditionError) as context:
            affine_construction(make_field(5), 1)
        self.assertEqual(context.exception.condition, 1)

    def test_invariant_subgroup(self) -> None:
        """Tests whether units generating a proper subfield are found to
        leave a proper additive subgroup invariant."""
        gf9 = make_field(3, 2)
        self.assertTrue(has_invariant_subgroup(gf9, 2))
        self.assertFalse(has_invariant_subgroup(gf9, gf9.element([0, 1])))
        gf8 = make_field(2, 3)
        self.assertFalse(has_invariant_subgroup(gf8, gf8.element([0, 1])))
        self.assertFalse(has_invariant_subgroup(make_field(7), 2))

    def test_affine_imprimitive_with_invariant_subgroup(self) -> None:
        """Tests whether A = GF(3)^x in GF(9) gives an imprimitive group
        that still carries the 2-dimensional affine vector."""
        group, v = affine_construction(make_field(3, 2), 2)
        self.assertEqual(group.order(), 18)
        self.assertFalse(group.is_primitive())
        self.assertEqual(v.t, 8)
        self.assertEqual(generated_submodule(v).dim, 2)

    def test_affine_requires_primitivity(self) -> None:
        """Tests whether an imprimitive group is rejected when A leaves no
        proper subgroup invariant."""
        with mock.patch.object(PermGroup, "is_primitive",
                               return_value=False):
            with self.assertRaises(PreconditionError) as context:
                affine_construction(make_field(5), 2)
        self.assertEqual(context.exception.condition, 2)


class TestSearches(unittest.TestCase):
    def test_min_support(self) -> None:
        """Tests whether exhaustive search finds the least support."""
        z6 = load_group(FIXTURES / "z6.grp")
        m = generated_submodule(ModVector(z6, GF2, [1, 1, 0, 0, 0, 0]))
        t, witness = min_support(m)
        self.assertEqual(t, 2)
        self.assertTrue(m.contains(witness))
        m = generated_submodule(ModVector(z6, GF2, [1, 0, 0, 1, 0, 0]))
        self.assertEqual(min_support(m)[0], 2)

    def test_min_support_cap(self) -> None:
        """Tests whether enumeration beyond the cap raises an error."""
        z6 = load_group(FIXTURES / "z6.grp")
        with self.assertRaises(BruteForceCapError):
            min_support(SubmoduleBasis.full(z6, make_field(5)), cap=100)

    def test_rudio_primitive(self) -> None:
        """Tests whether translates separating two points exist in a
        primitive group."""
        a5 = load_group(FIXTURES / "a5.grp")
        report = rudio_witness(a5, {0, 1}, 0, 2)
        self.assertTrue(report.primitive)
        self.assertIn(0, report.strong)
        self.assertNotIn(2, report.strong)
        self.assertNotEqual(0 in report.separating, 2 in report.separating)

    def test_rudio_imprimitive(self) -> None:
        """Tests whether a block of Z_4 has no separating translate."""
        z4 = load_group(FIXTURES / "z4.grp")
        report = rudio_witness(z4, {0, 2}, 0, 2)
        self.assertFalse(report.primitive)
        self.assertIsNone(report.separating)
        self.assertIsNone(report.strong)

    def test_rudio_errors(self) -> None:
        """Tests whether improper subsets and equal points are
        rejected."""
        a5 = load_group(FIXTURES / "a5.grp")
        with self.assertRaises(ValueError):
            rudio_witness(a5, set(), 0, 1)
        with self.assertRaises(ValueError):
            rudio_witness(a5, {0}, 1, 1)

    def test_two_dimensional(self) -> None:
        """Tests whether the span of the affine vector over GF(4) has only
        supports of size n and n - 1."""
        _, v = affine_construction(make_field(2, 2))
        report = two_dimensional_support_check(generated_submodule(v))
        self.assertEqual(report.vectors_checked, 15)
        self.assertEqual(report.co_point_vectors, 12)


class TestReduceMod(unittest.TestCase):
    def test_reduce(self) -> None:
        """Tests whether fractions are reduced modulo p."""
        z3 = load_group(FIXTURES / "z3.grp")
        v = ModVector(z3, QQ, [Fraction(1, 2), 0, -1])
        self.assertEqual(reduce_mod(v, make_field(3)).coeffs, (2, 0, 2))

    def test_non_integral(self) -> None:
        """Tests whether a denominator divisible by p is rejected."""
        z3 = load_group(FIXTURES / "z3.grp")
        with self.assertRaises(ValueError):
            reduce_mod(ModVector(z3, QQ, [Fraction(1, 3), 0, 0]),
                       make_field(3))


if __name__ == '__main__':
    unittest.main()
