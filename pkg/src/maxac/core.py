"""Cells, shapes, grids, the strict dominance order, and the size law.

A grid is a binary d-dimensional matrix over a box of dimensions
w = (w_1, ..., w_d), identified with the set of its one-cells.  The forbidden
configuration is a pair of one-cells p, q with p strictly below q in every
coordinate (for d = 1, by convention, any two one-cells).  Grids avoiding it
are exactly the antichains of the box under strict dominance; grids where no
further cell can be turned on are the maximal ones, and all of them share the
same weight ``max_size``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator

from .errors import DimensionMismatchError

Cell = tuple[int, ...]

# shapes whose total cell count does not fit an unsigned 64-bit integer are
# rejected outright; everything downstream may then use exact arithmetic
_MAX_CELLS = 2**64 - 1


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Shape:
    """Box dimensions w = (w_1, ..., w_d); coordinate i ranges over [1, w_i]."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise ValueError("a shape needs at least one dimension")
        for w in dims:
            if not _is_int(w) or w < 1:
                raise ValueError(f"dimensions must be positive integers, got {w!r}")
        if math.prod(dims) > _MAX_CELLS:
            raise OverflowError("total cell count exceeds the 64-bit range")

    @property
    def d(self) -> int:
        return len(self.dims)

    @cached_property
    def cell_count(self) -> int:
        return math.prod(self.dims)

    @cached_property
    def row_count(self) -> int:
        """Number of fibers along the last axis (one for d = 1)."""
        return math.prod(self.dims[:-1])

    def iter_cells(self) -> Iterator[Cell]:
        """All cells in ascending lexicographic order."""
        return product(*(range(1, w + 1) for w in self.dims))

    def iter_rows(self) -> Iterator[tuple[int, ...]]:
        """All last-axis row indices (the first d-1 coordinates), ascending."""
        return product(*(range(1, w + 1) for w in self.dims[:-1]))

    def contains_cell(self, cell) -> bool:
        return (
            isinstance(cell, tuple)
            and len(cell) == self.d
            and all(_is_int(x) and 1 <= x <= w for x, w in zip(cell, self.dims))
        )


@dataclass(frozen=True)
class Grid:
    """Binary grid over a box, stored as the sorted tuple of its one-cells."""

    shape: Shape
    ones: tuple[Cell, ...] = field(default=())

    def __post_init__(self):
        cells = tuple(sorted(tuple(c) for c in self.ones))
        object.__setattr__(self, "ones", cells)
        for c in cells:
            if len(c) != self.shape.d:
                raise DimensionMismatchError(
                    f"cell {c} has {len(c)} coordinates, shape has {self.shape.d}"
                )
            if not self.shape.contains_cell(c):
                raise ValueError(f"cell {c} lies outside the box {self.shape.dims}")
        for a, b in zip(cells, cells[1:]):
            if a == b:
                raise ValueError(f"duplicate cell {a}")

    @cached_property
    def one_set(self) -> frozenset[Cell]:
        return frozenset(self.ones)

    def to_json_obj(self) -> dict:
        return {"w": list(self.shape.dims), "ones": [list(c) for c in self.ones]}

    @classmethod
    def from_json_obj(cls, obj) -> "Grid":
        if not isinstance(obj, dict) or "w" not in obj or "ones" not in obj:
            raise ValueError('grid JSON must be an object with "w" and "ones"')
        dims, ones = obj["w"], obj["ones"]
        if not isinstance(dims, list) or not isinstance(ones, list):
            raise ValueError('"w" and "ones" must be arrays')
        if not all(isinstance(c, list) for c in ones):
            raise ValueError('"ones" must be an array of coordinate arrays')
        return cls(Shape(tuple(dims)), tuple(tuple(c) for c in ones))


def strictly_below(a: Cell, b: Cell) -> bool:
    """True iff every coordinate of ``a`` is strictly less than ``b``'s."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"{len(a)}-dim vector vs {len(b)}-dim vector")
    return all(x < y for x, y in zip(a, b))


def contains_forbidden(g: Grid) -> bool:
    """Whether some one-cell strictly dominates another.

    For d = 1 any two one-cells count as the forbidden configuration.
    """
    if g.shape.d == 1:
        return len(g.ones) >= 2
    ones = g.ones
    # ones are sorted, so dominance can only point forward
    for i, p in enumerate(ones):
        for q in ones[i + 1 :]:
            if strictly_below(p, q):
                return True
    return False


def weight(g: Grid) -> int:
    """Number of one-cells."""
    return len(g.ones)


def flip_creates_containment(g: Grid, cell: Cell) -> bool:
    """Would turning on a zero cell introduce the forbidden configuration?

    Assumes ``g`` itself avoids it and ``cell`` is currently off.
    """
    if g.shape.d == 1:
        return len(g.ones) >= 1
    return any(strictly_below(p, cell) or strictly_below(cell, p) for p in g.ones)


def is_maximal(g: Grid) -> bool:
    """Avoids the forbidden configuration, and every zero flip would create it."""
    if contains_forbidden(g):
        return False
    one_set = g.one_set
    for cell in g.shape.iter_cells():
        if cell in one_set:
            continue
        if not flip_creates_containment(g, cell):
            return False
    return True


def max_size(s: Shape) -> int:
    """Weight shared by every maximal grid: prod(w_i) - prod(w_i - 1).

    Equivalently, the number of cells with at least one coordinate equal to 1
    (and also the number with at least one coordinate equal to its w_i).
    """
    return math.prod(s.dims) - math.prod(w - 1 for w in s.dims)
