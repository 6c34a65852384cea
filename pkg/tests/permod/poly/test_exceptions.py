# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import unittest

from permod.poly.exceptions import ZeroPolynomialError, CharacteristicError


class TestZeroPolynomialError(unittest.TestCase):
    def test_raising_zero_polynomial_error(self) -> None:
        """Tests whether the ZeroPolynomialError can be raised."""
        msg = "test message"
        with self.assertRaises(ZeroPolynomialError) as context:
            raise ZeroPolynomialError(msg)
        self.assertEqual(context.exception.args[0], msg)


class TestCharacteristicError(unittest.TestCase):
    def test_default_message(self) -> None:
        """Tests whether the CharacteristicError has a default message."""
        with self.assertRaises(CharacteristicError) as context:
            raise CharacteristicError()
        self.assertIn("characteristic", context.exception.args[0])


if __name__ == '__main__':
    unittest.main()
