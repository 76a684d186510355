"""Minimal dense real vector/matrix kernel.

Exactly the handful of operations the engine needs, in plain 64-bit
floats.  Sums run left to right over ascending indices so repeated runs
produce identical bits; there is no blocking, no parallel reduction, and
no hidden library dispatch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Vec = tuple[float, ...]


class ShapeError(ValueError):
    """Operand dimensions do not fit the operation."""


class DomainError(ValueError):
    """A numeric argument is outside the operation's domain (NaN/inf)."""


def vec(values: Iterable[float]) -> Vec:
    """Build a vector, rejecting non-finite entries."""
    out = tuple(float(v) for v in values)
    for i, v in enumerate(out):
        if not math.isfinite(v):
            raise DomainError(f"vector entry {i} is not finite: {v!r}")
    return out


@dataclass(frozen=True)
class Mat:
    """Dense rows x cols matrix of finite floats, row-major entries."""

    rows: int
    cols: int
    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )
        for v in self.entries:
            if not math.isfinite(v):
                raise DomainError(f"matrix entry is not finite: {v!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[float]], cols: int | None = None) -> "Mat":
        """Build from a row-of-rows; `cols` disambiguates the 0-row case."""
        rows = [tuple(float(v) for v in r) for r in rows]
        if rows:
            width = len(rows[0])
            for j, r in enumerate(rows):
                if len(r) != width:
                    raise ShapeError(f"row 0 has {width} entries but row {j} has {len(r)}")
            if cols is not None and cols != width:
                raise ShapeError(f"declared {cols} columns but rows have {width}")
            cols = width
        elif cols is None:
            cols = 0
        return cls(len(rows), cols, tuple(v for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, (0.0,) * (rows * cols))

    def __getitem__(self, index: tuple[int, int]) -> float:
        j, i = index
        if not (0 <= j < self.rows and 0 <= i < self.cols):
            raise ShapeError(f"index ({j},{i}) outside {self.rows}x{self.cols}")
        return self.entries[j * self.cols + i]

    def row(self, j: int) -> Vec:
        return self.entries[j * self.cols : (j + 1) * self.cols]

    def to_rows(self) -> tuple[Vec, ...]:
        return tuple(self.row(j) for j in range(self.rows))

    def with_entry(self, j: int, i: int, value: float) -> "Mat":
        """Copy with one entry replaced."""
        self[j, i]  # bounds check
        k = j * self.cols + i
        return Mat(self.rows, self.cols, self.entries[:k] + (value,) + self.entries[k + 1 :])


def kleisli_apply(t: Mat, x: Vec) -> Vec:
    """Affine action of a (weights | bias) matrix on a state.

    result_j = sum_i t[j,i] * x_i + t[j,last], with the sum taken left to
    right over columns.  The matrix must have len(x)+1 columns; the final
    column is the bias fed by the implicit trailing 1.
    """
    n = len(x)
    if t.cols != n + 1:
        raise ShapeError(
            f"matrix is {t.rows}x{t.cols} but input of length {n} needs {n + 1} columns"
        )
    out = []
    for j in range(t.rows):
        base = j * t.cols
        acc = 0.0
        for i in range(n):
            acc += t.entries[base + i] * x[i]
        acc += t.entries[base + n]
        out.append(acc)
    return tuple(out)


def hadamard(u: Union[Vec, Mat], v: Union[Vec, Mat]) -> Union[Vec, Mat]:
    """Elementwise product of two equal-shape vectors or matrices."""
    if isinstance(u, Mat) and isinstance(v, Mat):
        if (u.rows, u.cols) != (v.rows, v.cols):
            raise ShapeError(f"{u.rows}x{u.cols} vs {v.rows}x{v.cols}")
        return Mat(u.rows, u.cols, tuple(a * b for a, b in zip(u.entries, v.entries)))
    if isinstance(u, Mat) or isinstance(v, Mat):
        raise ShapeError("cannot mix vector and matrix operands")
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} vs {len(v)}")
    return tuple(a * b for a, b in zip(u, v))


def outer(s: Vec, w: Vec) -> Mat:
    """Outer product: result[j,i] = s_j * w_i."""
    return Mat(len(s), len(w), tuple(sj * wi for sj in s for wi in w))


def weights_part(t: Mat) -> Mat:
    """Drop the bias column, keeping the first cols-1 columns."""
    if t.cols < 1:
        raise ShapeError(f"matrix {t.rows}x{t.cols} has no bias column to drop")
    n = t.cols - 1
    kept = tuple(
        t.entries[j * t.cols + i] for j in range(t.rows) for i in range(n)
    )
    return Mat(t.rows, n, kept)


def vec_mat(s: Vec, a: Mat) -> Vec:
    """Row vector times matrix: result_i = sum_j s_j * a[j,i], ascending j."""
    if len(s) != a.rows:
        raise ShapeError(f"vector length {len(s)} vs matrix rows {a.rows}")
    out = []
    for i in range(a.cols):
        acc = 0.0
        for j in range(a.rows):
            acc += s[j] * a.entries[j * a.cols + i]
        out.append(acc)
    return tuple(out)
