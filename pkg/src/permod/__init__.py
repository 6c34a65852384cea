# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

__version__ = "0.1.0"
