# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty


class ZeroVectorError(ValueError):
    """
    Exception that is raised when an operation that requires a nonzero
    module element receives the zero vector.

    Parameters:
    -----------
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self, msg: ty.Optional[str] = None) -> None:
        if msg is None:
            msg = "vector must not be zero"
        super().__init__(msg)


class PreconditionError(ValueError):
    """
    Exception that is raised when the input of a construction violates one
    of its numbered conditions. For the orbit-sum construction these are
    1: |H : H n K| = 2, 2: K is not contained in H, 3: K is intransitive.
    For the affine construction they are 1: A is nontrivial when q > 2,
    2: the group is primitive when A leaves no proper nonzero additive
    subgroup invariant.

    Parameters:
    -----------
    condition : int
        number of the violated condition
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self,
                 condition: int,
                 msg: ty.Optional[str] = None) -> None:
        self.condition = condition
        if msg is None:
            msg = f"condition {condition} of the construction is violated"
        super().__init__(msg)


class NotAnEqualityInstanceError(ValueError):
    """
    Exception that is raised when the equality analysis receives a vector
    for which (t+1)d = 2n with 1 < t < n-1 does not hold in a primitive
    module.

    Parameters:
    -----------
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self, msg: ty.Optional[str] = None) -> None:
        if msg is None:
            msg = "not an equality instance"
        super().__init__(msg)


class BruteForceCapError(RuntimeError):
    """
    Exception that is raised when an exhaustive enumeration of submodule
    elements would exceed the brute-force cap.

    Parameters:
    -----------
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self, msg: ty.Optional[str] = None) -> None:
        if msg is None:
            msg = "enumeration exceeds the brute-force cap"
        super().__init__(msg)
