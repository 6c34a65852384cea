# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty


class MalformedLiteralError(ValueError):
    """
    Exception that is raised when a field, polynomial or vector literal
    given on the command line cannot be parsed.

    Parameters:
    -----------
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self, msg: ty.Optional[str] = None) -> None:
        if msg is None:
            msg = "malformed literal"
        super().__init__(msg)


class MissingArgumentError(ValueError):
    """
    Exception that is raised when a subcommand is invoked without one of
    the options it needs.

    Parameters:
    -----------
    option : str
        name of the missing option
    msg : str (optional)
        custom exception message that overwrites the default
    """
    def __init__(self,
                 option: str,
                 msg: ty.Optional[str] = None) -> None:
        self.option = option
        if msg is None:
            msg = f"option {option} is required here"
        super().__init__(msg)
