# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import pickle
import random
import unittest
from fractions import Fraction

from permod.exact.exact import (
    QQ,
    make_cyclotomic_field,
    cyclo_from_power,
    cyclo_inverse)


class TestRationalField(unittest.TestCase):
    def test_coerce(self) -> None:
        """Tests whether ints, Fractions and strings become Fractions."""
        self.assertEqual(QQ.coerce(3), Fraction(3))
        self.assertEqual(QQ.coerce("1/2"), Fraction(1, 2))
        with self.assertRaises(TypeError):
            QQ.coerce(0.5)

    def test_characteristic(self) -> None:
        """Tests whether the rationals have characteristic zero and no
        finite order."""
        self.assertEqual(QQ.characteristic, 0)
        self.assertIsNone(QQ.order)
        self.assertEqual(str(QQ), "Q")


class TestCycloFromPower(unittest.TestCase):
    def test_zeroth_power(self) -> None:
        """Tests whether zeta^0 is 1."""
        self.assertEqual(cyclo_from_power(5, 0), 1)

    def test_reduction_mod_phi(self) -> None:
        """Tests whether zeta^4 in Q(zeta_5) reduces to
        -1 - zeta - zeta^2 - zeta^3."""
        field = make_cyclotomic_field(5)
        self.assertEqual(cyclo_from_power(5, 4),
                         field.element([-1, -1, -1, -1]))

    def test_exponent_reduction(self) -> None:
        """Tests whether exponents are reduced modulo p."""
        self.assertEqual(cyclo_from_power(3, 7), cyclo_from_power(3, 1))
        self.assertEqual(cyclo_from_power(3, -1), cyclo_from_power(3, 2))

    def test_powers_multiply(self) -> None:
        """Tests whether zeta^i zeta^j = zeta^(i+j)."""
        for i in range(7):
            for j in range(7):
                self.assertEqual(cyclo_from_power(7, i) *
                                 cyclo_from_power(7, j),
                                 cyclo_from_power(7, i + j))

    def test_root_relations(self) -> None:
        """Tests whether zeta^p = 1 and the powers of zeta sum to 0."""
        field = make_cyclotomic_field(7)
        zeta = field.zeta()
        self.assertEqual(zeta ** 7, 1)
        total = field.zero()
        for e in range(7):
            total = total + field.zeta_power(e)
        self.assertFalse(total)

    def test_composite_conductor(self) -> None:
        """Tests whether Q(zeta_6) has degree 2 and zeta_6^3 = -1."""
        field = make_cyclotomic_field(6)
        self.assertEqual(field.degree, 2)
        self.assertEqual(field.zeta_power(3), -1)


class TestCycloInverse(unittest.TestCase):
    def test_inverse_of_zeta(self) -> None:
        """Tests whether the inverse of zeta is zeta^(p-1)."""
        for p in [3, 5, 7, 11]:
            self.assertEqual(cyclo_inverse(cyclo_from_power(p, 1)),
                             cyclo_from_power(p, p - 1))

    def test_inverse_of_one_plus_zeta(self) -> None:
        """Tests whether (1 + zeta)^-1 = -zeta in Q(zeta_3)."""
        field = make_cyclotomic_field(3)
        x = 1 + field.zeta()
        self.assertEqual(cyclo_inverse(x), -field.zeta())

    def test_inverse_of_zero(self) -> None:
        """Tests whether inverting zero raises a ZeroDivisionError."""
        with self.assertRaises(ZeroDivisionError):
            cyclo_inverse(make_cyclotomic_field(5).zero())

    def test_random_inverses(self) -> None:
        """Tests whether x x^-1 = 1 for random nonzero x."""
        rng = random.Random(17)
        for n in [5, 7, 12]:
            field = make_cyclotomic_field(n)
            for _ in range(20):
                x = field.nonzero_random_element(rng)
                self.assertEqual(x * x.inverse(), 1)
                self.assertEqual(field.one() / x * x, 1)


class TestCyclotomicArithmetic(unittest.TestCase):
    def setUp(self) -> None:
        self.rng = random.Random(23)
        self.field = make_cyclotomic_field(7)

    def test_ring_axioms(self) -> None:
        """Tests whether random elements satisfy associativity and
        distributivity."""
        for _ in range(30):
            x, y, z = (self.field.random_element(self.rng)
                       for _ in range(3))
            self.assertEqual((x + y) + z, x + (y + z))
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual(x - x, 0)

    def test_rational_coefficients(self) -> None:
        """Tests whether fractions combine with cyclotomic values."""
        x = self.field.zeta() * Fraction(1, 2)
        self.assertEqual(x + x, self.field.zeta())
        self.assertEqual(x.rep[1], Fraction(1, 2))

    def test_norm(self) -> None:
        """Tests whether the norm of a nonzero element is a nonzero
        rational and the norm of 1 - zeta is p."""
        self.assertEqual((1 - self.field.zeta()).norm(), 7)
        for _ in range(10):
            x = self.field.nonzero_random_element(self.rng)
            self.assertNotEqual(x.norm(), 0)

    def test_conjugate(self) -> None:
        """Tests whether zeta -> zeta^a maps zeta^e to zeta^(ae)."""
        zeta2 = self.field.zeta_power(2)
        self.assertEqual(zeta2.conjugate(3), self.field.zeta_power(6))
        with self.assertRaises(ValueError):
            zeta2.conjugate(7)

    def test_to_json(self) -> None:
        """Tests whether coefficients render as num/den strings."""
        x = self.field.element([Fraction(1, 2), -3])
        self.assertEqual(x.to_json(), ["1/2", "-3/1", "0/1", "0/1", "0/1",
                                       "0/1"])

    def test_mixed_fields_raise(self) -> None:
        """Tests whether elements of different cyclotomic fields cannot be
        combined."""
        with self.assertRaises(TypeError):
            self.field.zeta() + make_cyclotomic_field(5).zeta()

    def test_pickle(self) -> None:
        """Tests whether cyclotomic values survive pickling."""
        x = self.field.element([1, 2, 3])
        self.assertEqual(pickle.loads(pickle.dumps(x)), x)


if __name__ == '__main__':
    unittest.main()
