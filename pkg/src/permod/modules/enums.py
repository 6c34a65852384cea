# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations
from typing import TypeVar, Type
from enum import Enum, unique

_T = TypeVar("_T")


@unique
class EqualityCase(Enum):
    """Enum for the equality cases of the support/dimension inequalities,
    listed in the order in which they are detected"""
    SINGLE_POINT = "t=1"  # v is a multiple of a single point
    CO_POINT = "t=n-1"  # primitive, (t+1)d = 2n with t = n - 1
    BLOCK = "block-equality"  # td = n
    PAIR = "pair-equality"  # primitive, (t+1)d = 2n with 1 < t < n - 1
    NONE = "none"

    @classmethod
    def validate(cls: Type[_T], case: EqualityCase) -> None:
        """Validate type of <case>"""
        if not isinstance(case, EqualityCase):
            raise TypeError("case must be of type EqualityCase")
