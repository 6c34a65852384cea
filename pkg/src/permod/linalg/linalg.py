# Copyright (C) 2026 permod developers
# SPDX-License-Identifier: BSD-3-Clause
# See: https://spdx.org/licenses/

from __future__ import annotations

import typing as ty

import numpy as np

from permod.linalg.exceptions import DimensionMismatchError, NotSquareError
from permod.linalg.field import AbstractField

Vector = ty.List[ty.Any]


class Matrix:
    """
    Dense matrix over an exact coefficient field. Entries are kept in a
    numpy array of dtype object so that any AbstractField can be used.

    Parameters
    ----------
    field : AbstractField
        coefficient field of all entries
    entries : sequence(sequence) or numpy.ndarray
        rows of the matrix; integers are converted into field elements

    """
    def __init__(self,
                 field: AbstractField,
                 entries: ty.Union[ty.Sequence[ty.Sequence[ty.Any]],
                                   np.ndarray]) -> None:
        self._field = field
        rows = [list(row) for row in entries]
        n_cols = len(rows[0]) if rows else 0
        if any(len(row) != n_cols for row in rows):
            raise DimensionMismatchError("all rows must have the same length")
        data = np.empty((len(rows), n_cols), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                data[i, j] = field.coerce(x)
        self._data = data

    @classmethod
    def identity(cls, field: AbstractField, n: int) -> Matrix:
        return cls(field, [[field.one() if i == j else field.zero()
                            for j in range(n)] for i in range(n)])

    @property
    def field(self) -> AbstractField:
        return self._field

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> ty.Tuple[int, int]:
        return self._data.shape

    def __getitem__(self, index: ty.Tuple[int, int]) -> ty.Any:
        return self._data[index]

    def to_lists(self) -> ty.List[Vector]:
        """Returns the entries as a list of row lists"""
        return [list(row) for row in self._data]

    def transpose(self) -> Matrix:
        return Matrix(self._field, self._data.T)

    def submatrix(self,
                  rows: ty.Sequence[int],
                  cols: ty.Sequence[int]) -> Matrix:
        """Returns the submatrix on the given row and column indices"""
        if not rows or not cols:
            return Matrix(self._field, [])
        return Matrix(self._field, self._data[np.ix_(list(rows), list(cols))])

    def apply(self, v: ty.Sequence[ty.Any]) -> Vector:
        """Returns the matrix-vector product M v"""
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} does "
                                         f"not fit {self.rows}x{self.cols}")
        result = []
        for row in self._data:
            acc = self._field.zero()
            for x, y in zip(row, v):
                if x and y:
                    acc = acc + x * y
            result.append(acc)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape \
            and bool(np.all(self._data == other._data))

    def __repr__(self) -> str:
        return f"Matrix({self._field}, {self.to_lists()})"


def _row_reduce(field: AbstractField,
                rows: ty.List[Vector],
                n_cols: int,
                reduced: bool = True) -> ty.Tuple[ty.List[Vector],
                                                  ty.List[int], int]:
    """
    Gaussian elimination in place. Pivots are chosen column by column,
    left to right, taking the first row (top to bottom) with a nonzero
    entry.

    Returns
    -------
    rows : list(list)
        the echelon form (reduced if <reduced> is set)
    pivots : list(int)
        pivot column of each nonzero row
    swaps : int
        number of row swaps performed

    """
    pivots: ty.List[int] = []
    swaps = 0
    r = 0
    n_rows = len(rows)
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = None
        for i in range(r, n_rows):
            if not field.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            swaps += 1
        inv = field.inverse(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        targets = range(n_rows) if reduced else range(r + 1, n_rows)
        for i in targets:
            if i == r:
                continue
            factor = rows[i][c]
            if not field.is_zero(factor):
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots, swaps


def rank(m: Matrix) -> int:
    """
    Computes the rank of a matrix by exact Gaussian elimination.

    Parameters
    ----------
    m : Matrix
        matrix over any exact field

    Returns
    -------
    rank : int

    """
    _, pivots, _ = _row_reduce(m.field, m.to_lists(), m.cols, reduced=False)
    return len(pivots)


def det_exact(m: Matrix) -> ty.Any:
    """
    Computes the determinant of a square matrix exactly: by cofactor
    expansion up to size 3 and by elimination with sign tracking above.

    Parameters
    ----------
    m : Matrix
        square matrix

    Returns
    -------
    determinant : field element

    """
    if m.rows != m.cols:
        raise NotSquareError(f"determinant of a {m.rows}x{m.cols} matrix")
    field = m.field
    n = m.rows
    if n == 0:
        return field.one()
    if n == 1:
        return m[0, 0]
    if n == 2:
        return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if n == 3:
        return (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
                - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
                + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))

    rows = m.to_lists()
    det = field.one()
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not field.is_zero(rows[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            return field.zero()
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            det = -det
        pivot = rows[c][c]
        det = det * pivot
        inv = field.inverse(pivot)
        for i in range(c + 1, n):
            factor = rows[i][c]
            if not field.is_zero(factor):
                factor = factor * inv
                rows[i] = [x - factor * y if j >= c else x
                           for j, (x, y) in enumerate(zip(rows[i], rows[c]))]
    return det


def null_space(m: Matrix) -> ty.List[Vector]:
    """
    Computes a basis of the right null space {v : M v = 0}.

    The basis is read off the reduced row echelon form: one vector per free
    column, in increasing column order, with that free variable set to 1
    and all other free variables set to 0.

    Parameters
    ----------
    m : Matrix
        matrix over any exact field

    Returns
    -------
    basis : list(list)
        basis vectors of length m.cols

    """
    field = m.field
    rows, pivots, _ = _row_reduce(field, m.to_lists(), m.cols)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [field.zero()] * m.cols
        v[f] = field.one()
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(v)
    return basis


def subspace_intersect(a: ty.Sequence[ty.Sequence[ty.Any]],
                       b: ty.Sequence[ty.Sequence[ty.Any]],
                       field: AbstractField) -> ty.List[Vector]:
    """
    Computes a basis of span(a) intersected with span(b) from the null
    space of the stacked system sum x_i a_i - sum y_j b_j = 0.

    Parameters
    ----------
    a : sequence(sequence)
        spanning vectors of the first subspace
    b : sequence(sequence)
        spanning vectors of the second subspace
    field : AbstractField
        common coefficient field

    Returns
    -------
    basis : list(list)
        basis of the intersection (semi-echelon, see RowSpace)

    """
    lengths = {len(v) for v in a} | {len(v) for v in b}
    if len(lengths) > 1:
        raise DimensionMismatchError("all vectors must have the same length")
    if not a or not b:
        return []
    n = lengths.pop()
    columns = [list(v) for v in a] + [[-field.coerce(x) for x in v]
                                      for v in b]
    system = Matrix(field, [[columns[j][i] for j in range(len(columns))]
                            for i in range(n)])
    space = RowSpace(field, n)
    for solution in null_space(system):
        v = [field.zero()] * n
        for coeff, vec in zip(solution[:len(a)], a):
            if not field.is_zero(coeff):
                v = [x + coeff * field.coerce(y) for x, y in zip(v, vec)]
        space.insert(v)
    return space.basis


class RowSpace:
    """
    Incrementally built subspace of F^n in semi-echelon form.

    Every stored row is scaled to have entry 1 at its pivot, the first
    nonzero position, and is zero at the pivots of all rows stored before
    it. Rows are kept in insertion order.

    Parameters
    ----------
    field : AbstractField
        coefficient field
    n : int
        ambient dimension

    """
    def __init__(self, field: AbstractField, n: int) -> None:
        self._field = field
        self._n = n
        self._rows: ty.List[Vector] = []
        self._pivots: ty.List[int] = []

    @property
    def field(self) -> AbstractField:
        return self._field

    @property
    def n(self) -> int:
        return self._n

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def basis(self) -> ty.List[Vector]:
        return [list(row) for row in self._rows]

    @property
    def pivots(self) -> ty.List[int]:
        return list(self._pivots)

    def reduce(self, v: ty.Sequence[ty.Any]) -> Vector:
        """Returns v minus its component along the stored rows, which is
        zero at every pivot"""
        if len(v) != self._n:
            raise DimensionMismatchError(f"vector of length {len(v)} in a "
                                         f"space of dimension {self._n}")
        v = [self._field.coerce(x) for x in v]
        for row, c in zip(self._rows, self._pivots):
            factor = v[c]
            if not self._field.is_zero(factor):
                v = [x - factor * y for x, y in zip(v, row)]
        return v

    def contains(self, v: ty.Sequence[ty.Any]) -> bool:
        return not any(self.reduce(v))

    def insert(self, v: ty.Sequence[ty.Any]) -> bool:
        """
        Adds v to the space.

        Returns
        -------
        added : bool
            False if v already lay in the space

        """
        r = self.reduce(v)
        for c, x in enumerate(r):
            if not self._field.is_zero(x):
                inv = self._field.inverse(x)
                self._rows.append([y * inv for y in r])
                self._pivots.append(c)
                return True
        return False

    def coordinates(self, v: ty.Sequence[ty.Any]) -> ty.Optional[Vector]:
        """Returns the coefficients of v in the stored basis, or None if
        v does not lie in the space"""
        v = [self._field.coerce(x) for x in v]
        coords = []
        for row, c in zip(self._rows, self._pivots):
            factor = v[c]
            coords.append(factor)
            if not self._field.is_zero(factor):
                v = [x - factor * y for x, y in zip(v, row)]
        if any(v):
            return None
        return coords
