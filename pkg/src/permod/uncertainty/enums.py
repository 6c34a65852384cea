# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations
from typing import TypeVar, Type
from enum import Enum, unique

_T = TypeVar("_T")


@unique
class SearchMode(Enum):
    """Enum for the scope of the counterexample search"""
    DIVISORS_ONLY = "divisors"  # proper divisors of X^p - 1 only
    WITH_MULTIPLES = "multiples"  # also multiples of degree < p

    @classmethod
    def validate(cls: Type[_T], mode: SearchMode) -> None:
        """Validate type of <mode>"""
        if not isinstance(mode, SearchMode):
            raise TypeError("mode must be of type SearchMode")


@unique
class CounterexampleKind(Enum):
    """Enum for the kind of witness found by the counterexample search"""
    MISSING_TERM_DIVISOR = "missing-term-divisor"
    MULTIPLE = "multiple"

    @classmethod
    def validate(cls: Type[_T], kind: CounterexampleKind) -> None:
        """Validate type of <kind>"""
        if not isinstance(kind, CounterexampleKind):
            raise TypeError("kind must be of type CounterexampleKind")
