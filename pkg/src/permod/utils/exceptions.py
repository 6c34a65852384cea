# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty


class InvariantViolationError(Exception):
    """
    Exception that is raised when a computed instance contradicts a proven
    inequality or structure result. It is never expected to fire; the CLI
    maps it to exit status 1.

    Parameters:
    -----------
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self, msg: ty.Optional[str] = None) -> None:
        if msg is None:
            msg = "a proven invariant was falsified by a computed instance"
        super().__init__(msg)
