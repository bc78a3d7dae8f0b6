"""Exhaustive enumeration of maximal grids.

Two independent routes to the same ground truth:

* ``enumerate_maximal`` / ``count_maximal`` -- a pruned depth-first search
  over the cells in lexicographic order, using bitmask conflict sets.
* ``brute_force_maximal`` -- the definitional oracle that filters every
  subset of the box through ``is_maximal``; exponential, kept naive on
  purpose so the two routes share no machinery.

Plus greedy completion of a clean grid to a maximal one, and seeded random
sampling of maximal grids via a shuffled completion order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Cell, Grid, Shape, contains_forbidden, is_maximal, strictly_below
from .errors import AlreadyContainsError, ShapeTooLargeError

DEFAULT_CELL_LIMIT = 25
BRUTE_FORCE_CELL_LIMIT = 16


def _conflict_masks(shape: Shape) -> tuple[list[Cell], list[int]]:
    """Cells in lexicographic order and, per cell, the bitmask of cells it
    cannot share a clean grid with (comparable cells; everyone when d = 1)."""
    cells = list(shape.iter_cells())
    n = len(cells)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            # lexicographic order means dominance can only point forward
            if shape.d == 1 or strictly_below(cells[i], cells[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return cells, masks


def _iter_maximal_masks(n: int, masks: Sequence[int]) -> Iterator[int]:
    """Yield the chosen-cell bitmasks of all maximal grids (order arbitrary).

    Classic include/exclude search with two prunes: a cell conflicting with
    the chosen set can only be excluded, and a branch dies as soon as some
    excluded cell can no longer be blocked by any undecided cell (tracked via
    ``pending`` and the precomputed ``expired`` masks).  A leaf is reached
    with ``pending`` empty exactly when every zero cell conflicts with a
    chosen cell, i.e. the grid is maximal.
    """
    full = (1 << n) - 1
    expired = []
    for i in range(n + 1):
        future = full ^ ((1 << i) - 1)
        expired.append(sum(1 << c for c in range(n) if not masks[c] & future))
    stack = [(0, 0, 0)]
    while stack:
        i, chosen, pending = stack.pop()
        if pending & expired[i]:
            continue
        if i == n:
            yield chosen
            continue
        bit = 1 << i
        if masks[i] & chosen:
            stack.append((i + 1, chosen, pending))
        else:
            stack.append((i + 1, chosen, pending | bit))
            stack.append((i + 1, chosen | bit, pending & ~masks[i]))


@dataclass(frozen=True)
class EnumerationReport:
    """Canonically ordered enumeration result.

    ``count`` is always the full total; ``truncated`` says whether ``grids``
    was cut to the requested cap.
    """

    shape: Shape
    grids: tuple[Grid, ...]
    count: int
    truncated: bool

    def to_json_obj(self) -> dict:
        return {
            "w": list(self.shape.dims),
            "count": self.count,
            "truncated": self.truncated,
            "grids": [g.to_json_obj() for g in self.grids],
        }


def enumerate_maximal(
    shape: Shape,
    cap: int | None = None,
    *,
    max_cells: int = DEFAULT_CELL_LIMIT,
) -> EnumerationReport:
    """All maximal grids over ``shape``, each exactly once, sorted by their
    serialized cell lists.  ``cap`` bounds how many grids the report keeps."""
    if cap is not None and cap < 1:
        raise ValueError("cap must be a positive integer")
    if shape.cell_count > max_cells:
        raise ShapeTooLargeError(shape.cell_count, max_cells)
    cells, masks = _conflict_masks(shape)
    found = [
        tuple(c for k, c in enumerate(cells) if (mask >> k) & 1)
        for mask in _iter_maximal_masks(len(cells), masks)
    ]
    found.sort()
    count = len(found)
    kept = found if cap is None else found[:cap]
    return EnumerationReport(
        shape=shape,
        grids=tuple(Grid(shape, ones) for ones in kept),
        count=count,
        truncated=count > len(kept),
    )


def count_maximal(shape: Shape, *, max_cells: int = DEFAULT_CELL_LIMIT) -> int:
    """Number of maximal grids over ``shape``, without storing them."""
    if shape.cell_count > max_cells:
        raise ShapeTooLargeError(shape.cell_count, max_cells)
    _, masks = _conflict_masks(shape)
    return sum(1 for _ in _iter_maximal_masks(shape.cell_count, masks))


def brute_force_maximal(
    shape: Shape, *, max_cells: int = BRUTE_FORCE_CELL_LIMIT
) -> tuple[Grid, ...]:
    """Independent oracle: filter all 2^n subsets of the box through
    ``is_maximal``.  Exponential; for cross-checking the search only."""
    n = shape.cell_count
    if n > max_cells:
        raise ShapeTooLargeError(n, max_cells)
    cells = list(shape.iter_cells())
    out = []
    for mask in range(1 << n):
        ones = tuple(c for k, c in enumerate(cells) if (mask >> k) & 1)
        g = Grid(shape, ones)
        if is_maximal(g):
            out.append(g)
    out.sort(key=lambda g: g.ones)
    return tuple(out)


def complete_to_maximal(g: Grid, order: Sequence[Cell] | None = None) -> Grid:
    """Greedy saturation: walk ``order`` (default lexicographic) and turn on
    every cell whose flip keeps the grid clean.

    ``order`` must visit every cell of the box, or the result could miss
    addable cells.  Already-maximal grids come back unchanged.
    """
    if contains_forbidden(g):
        raise AlreadyContainsError()
    if order is None:
        cells = list(g.shape.iter_cells())
    else:
        cells = [tuple(c) for c in order]
        if sorted(cells) != sorted(g.shape.iter_cells()):
            raise ValueError("order must be a permutation of the box's cells")
    d = g.shape.d
    ones = list(g.ones)
    one_set = set(ones)
    for cell in cells:
        if cell in one_set:
            continue
        if d == 1:
            blocked = bool(ones)
        else:
            blocked = any(
                strictly_below(p, cell) or strictly_below(cell, p) for p in ones
            )
        if not blocked:
            ones.append(cell)
            one_set.add(cell)
    return Grid(g.shape, ones)


def random_maximal(shape: Shape, seed: int) -> Grid:
    """Maximal grid obtained by greedy completion over a seed-shuffled cell
    order.  Deterministic for a fixed seed."""
    rng = random.Random(seed)
    cells = list(shape.iter_cells())
    rng.shuffle(cells)
    return complete_to_maximal(Grid(shape, ()), cells)
