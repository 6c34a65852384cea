# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import unittest

from permod.uncertainty.enums import SearchMode, CounterexampleKind


class TestSearchMode(unittest.TestCase):
    def test_validate_divisors_only(self) -> None:
        """Tests whether DIVISORS_ONLY is a valid type of the SearchMode
        enum."""
        SearchMode.validate(SearchMode.DIVISORS_ONLY)

    def test_validate_with_multiples(self) -> None:
        """Tests whether WITH_MULTIPLES is a valid type of the SearchMode
        enum."""
        SearchMode.validate(SearchMode.WITH_MULTIPLES)

    def test_from_value(self) -> None:
        """Tests whether the command-line values map to the members."""
        self.assertIs(SearchMode("divisors"), SearchMode.DIVISORS_ONLY)
        self.assertIs(SearchMode("multiples"), SearchMode.WITH_MULTIPLES)

    def test_invalid_type_raises_type_error(self) -> None:
        """Tests whether int is an invalid type of the SearchMode enum."""
        with self.assertRaises(TypeError):
            SearchMode.validate(int)


class TestCounterexampleKind(unittest.TestCase):
    def test_validate_multiple(self) -> None:
        """Tests whether MULTIPLE is a valid type of the CounterexampleKind
        enum."""
        CounterexampleKind.validate(CounterexampleKind.MULTIPLE)

    def test_invalid_value_raises_value_error(self) -> None:
        """Tests whether FOO is an invalid value of the CounterexampleKind
        enum."""
        with self.assertRaises(AttributeError):
            _ = CounterexampleKind.FOO


if __name__ == '__main__':
    unittest.main()
