# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import logging
import os

logger = logging.getLogger(__name__)

ELEMENT_CAP_ENV = "PERMOD_ELEMENT_CAP"
DEFAULT_ELEMENT_CAP = 1_000_000
DEFAULT_BRUTE_FORCE_CAP = 2 ** 24
MINOR_WARNING_THRESHOLD = 10 ** 6


def element_cap() -> int:
    """
    Returns the maximal group order that may be enumerated element by
    element. The default can be overridden with the environment variable
    PERMOD_ELEMENT_CAP.

    Returns
    -------
    cap : int

    """
    raw = os.environ.get(ELEMENT_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ELEMENT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{ELEMENT_CAP_ENV} must be an integer but is "
                         f"{raw!r}")
    if cap < 1:
        raise ValueError(f"{ELEMENT_CAP_ENV} must be positive")
    logger.debug("element cap overridden to %d", cap)
    return cap
