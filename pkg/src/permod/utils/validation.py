# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty

import numpy as np

from permod.utils.math import is_prime


def validate_positive_int(value: ty.Any, name: str) -> int:
    """
    Validate that an argument is a positive integer.

    Parameters:
    -----------
    value : int
        argument to be validated
    name : str
        name of the argument, used in error messages

    Returns:
    --------
    value : int
        validated argument, converted to a Python int
    """
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise TypeError(f"<{name}> must be of type int")
    if value < 1:
        raise ValueError(f"<{name}> must be greater than zero")
    return int(value)


def validate_prime(p: ty.Any, name: str = "p") -> int:
    """Validate that an argument is a prime number and return it as int."""
    p = validate_positive_int(p, name)
    if not is_prime(p):
        raise ValueError(f"<{name}> must be prime but is {p}")
    return p


def validate_points(points: ty.Any, n: int,
                    name: str = "points") -> ty.FrozenSet[int]:
    """
    Validate and convert a collection of points of a set {0, ..., n-1}.

    A single int is converted to a one-point set; lists, tuples and sets
    are converted to frozenset(int).

    Parameters:
    -----------
    points : int, list(int), tuple(int), set(int)
        points to be validated
    n : int
        number of points of the underlying set
    name : str
        name of the argument, used in error messages

    Returns:
    --------
    points : frozenset(int)
    """
    if isinstance(points, (int, np.integer)):
        points = (points,)
    if not isinstance(points, (list, tuple, set, frozenset)):
        raise TypeError(f"<{name}> must be of type int or a collection "
                        "of int")
    for x in points:
        if not isinstance(x, (int, np.integer)):
            raise TypeError(f"all elements of <{name}> must be of type int")
        if not 0 <= x < n:
            raise ValueError(f"all elements of <{name}> must lie in "
                             f"[0, {n - 1}]")
    return frozenset(int(x) for x in points)
