# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

import typing as ty

from permod.ff.ff import FiniteField, FieldElement, find_element_of_order
from permod.permgrp.permgrp import Permutation, PermGroup
from permod.utils.validation import validate_positive_int


def cyclic_group(n: int) -> PermGroup:
    """Returns Z_n acting regularly on itself, generated by i -> i + 1"""
    n = validate_positive_int(n, "n")
    if n == 1:
        return PermGroup([], n=1)
    return PermGroup([[(i + 1) % n for i in range(n)]])


def symmetric_group(n: int) -> PermGroup:
    """Returns S_n, generated by (0 1) and (0 1 ... n-1)"""
    n = validate_positive_int(n, "n")
    if n == 1:
        return PermGroup([], n=1)
    transposition = Permutation.from_cycles(n, [(0, 1)])
    if n == 2:
        return PermGroup([transposition])
    return PermGroup([transposition,
                      Permutation.from_cycles(n, [tuple(range(n))])])


def alternating_group(n: int) -> PermGroup:
    """
    Returns A_n. For odd n the generators are (0 1 ... n-1) and
    (n-3 n-2 n-1), for even n they are (0 1 2) and (1 2 ... n-1).

    Parameters
    ----------
    n : int
        degree

    Returns
    -------
    group : PermGroup

    """
    n = validate_positive_int(n, "n")
    if n < 3:
        return PermGroup([], n=n)
    if n == 3:
        return PermGroup([Permutation.from_cycles(3, [(0, 1, 2)])])
    if n % 2:
        return PermGroup([Permutation.from_cycles(n, [tuple(range(n))]),
                          Permutation.from_cycles(n, [(n - 3, n - 2, n - 1)])])
    return PermGroup([Permutation.from_cycles(n, [(0, 1, 2)]),
                      Permutation.from_cycles(n, [tuple(range(1, n))])])


def _field_points(field: FiniteField) -> ty.List[FieldElement]:
    return list(field.elements())


def _additive_basis(field: FiniteField) -> ty.List[FieldElement]:
    return [field.element([0] * j + [1]) for j in range(field.k)]


def _map_on_field(field: FiniteField,
                  fn: ty.Callable[[FieldElement], FieldElement],
                  infinity: bool = False) -> Permutation:
    """Permutation induced by a map on the field elements, which are
    indexed canonically; with <infinity> the extra point q stands for the
    point at infinity and fn may return None for it"""
    images = []
    for x in _field_points(field):
        y = fn(x)
        images.append(field.order if y is None else y.index)
    if infinity:
        y = fn(None)
        images.append(field.order if y is None else y.index)
    return Permutation(images)


def affine_group(field: FiniteField,
                 unit: ty.Optional[FieldElement] = None) -> PermGroup:
    """
    Returns the group {x -> a x + b : a in <unit>, b in F} acting on the
    elements of F, point i being the i-th element in canonical order.

    Parameters
    ----------
    field : FiniteField
        the field F
    unit : FieldElement, optional
        generator of the multiplicative part; defaults to a primitive
        element, giving AGL(1, q)

    Returns
    -------
    group : PermGroup

    """
    if unit is None:
        unit = find_element_of_order(field, field.order - 1)
    unit = field.coerce(unit)
    if not unit:
        raise ValueError("<unit> must be nonzero")
    generators = [_map_on_field(field, lambda x, b=b: x + b)
                  for b in _additive_basis(field)]
    if unit != 1:
        generators.append(_map_on_field(field, lambda x: unit * x))
    return PermGroup(generators)


def _projective_generators(field: FiniteField,
                           scalar: FieldElement) -> ty.List[Permutation]:
    def scale(x: ty.Optional[FieldElement]) -> ty.Optional[FieldElement]:
        return None if x is None else scalar * x

    def invert(x: ty.Optional[FieldElement]) -> ty.Optional[FieldElement]:
        if x is None:
            return field.zero()
        if not x:
            return None
        return -x.inverse()

    generators = []
    for b in _additive_basis(field):
        generators.append(_map_on_field(
            field, lambda x, b=b: None if x is None else x + b,
            infinity=True))
    generators.append(_map_on_field(field, scale, infinity=True))
    generators.append(_map_on_field(field, invert, infinity=True))
    return generators


def psl2(field: FiniteField) -> PermGroup:
    """
    Returns PSL(2, q) acting on the q + 1 points of the projective line,
    generated by x -> x + b, x -> w^2 x (w primitive) and x -> -1/x. The
    field elements are points 0, ..., q-1 and infinity is point q.

    Parameters
    ----------
    field : FiniteField
        GF(q)

    Returns
    -------
    group : PermGroup

    """
    w = find_element_of_order(field, field.order - 1)
    return PermGroup(_projective_generators(field, w * w))


def pgl2(field: FiniteField) -> PermGroup:
    """Returns PGL(2, q) on the projective line: the generators of psl2
    together with x -> w x for a primitive element w"""
    w = find_element_of_order(field, field.order - 1)
    generators = _projective_generators(field, w * w)
    generators.append(_map_on_field(
        field, lambda x: None if x is None else w * x, infinity=True))
    return PermGroup(generators)
