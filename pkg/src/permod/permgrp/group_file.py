# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import logging
import typing as ty
from pathlib import Path

from permod.permgrp.exceptions import GroupFileError
from permod.permgrp.permgrp import Permutation, PermGroup

logger = logging.getLogger(__name__)


def parse_group(text: str) -> PermGroup:
    """
    Parses a group description: the first nonempty line holds the degree
    n, every further nonempty line one generator as n space-separated
    0-indexed images. Lines starting with '#' are ignored.

    Parameters
    ----------
    text : str
        content of a group file

    Returns
    -------
    group : PermGroup

    """
    lines = [(k, line.strip()) for k, line in enumerate(text.splitlines(), 1)]
    lines = [(k, line) for k, line in lines
             if line and not line.startswith("#")]
    if not lines:
        raise GroupFileError("group file is empty")

    k, first = lines[0]
    try:
        n = int(first)
    except ValueError:
        raise GroupFileError(f"line {k}: expected the degree, got {first!r}")
    if n < 1:
        raise GroupFileError(f"line {k}: degree must be positive")

    generators = []
    for k, line in lines[1:]:
        try:
            images = [int(token) for token in line.split()]
        except ValueError:
            raise GroupFileError(f"line {k}: images must be integers")
        if len(images) != n:
            raise GroupFileError(f"line {k}: expected {n} images, got "
                                 f"{len(images)}")
        try:
            generators.append(Permutation(images))
        except ValueError as error:
            raise GroupFileError(f"line {k}: {error}")
    return PermGroup(generators, n=n)


def load_group(path: ty.Union[str, Path]) -> PermGroup:
    """Reads a group file"""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as error:
        raise GroupFileError(f"cannot read {path}: {error}")
    group = parse_group(text)
    logger.info("loaded group of degree %d with %d generators from %s",
                group.n, len(group.generators), path)
    return group


def format_group(group: PermGroup) -> str:
    """Renders a group in the group file format"""
    lines = [str(group.n)]
    lines += [" ".join(str(x) for x in g.to_list()) for g in group.generators]
    return "\n".join(lines) + "\n"


def write_group(group: PermGroup, path: ty.Union[str, Path]) -> None:
    Path(path).write_text(format_group(group))
