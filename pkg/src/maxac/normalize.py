"""Weight-preserving rewriting of maximal row forms, and peeling.

``normalize`` drains the obstruction set one row per step: the convert step
finds a row x touching the top whose diagonal ancestor x' = x - (1,...,1) has
no other top-touching descendant, then slides one unit of weight from x to
x'.  Once no ancestored row touches the top, ``peel`` removes the top
cross-section, shrinking the box by one along the last axis and the weight by
exactly the number of ancestor-free rows.  Iterating the two moves down to
w_d = 1 telescopes any maximal grid's weight to the closed form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Shape
from .errors import BottomedOutError, EmptyXSetError, XSetNonEmptyError
from .rowform import IntervalMap, RowId, descendant_rows, x_set


@dataclass(frozen=True)
class NormalizeReport:
    """Result of a full normalization plus the trace of applied pairs."""

    result: IntervalMap
    steps: int
    pairs: tuple[tuple[RowId, RowId], ...]

    def to_json_obj(self) -> dict:
        return {
            "steps": self.steps,
            "pairs": [[list(x), list(xp)] for x, xp in self.pairs],
            "result": self.result.to_json_obj(),
        }


def find_pair(m: IntervalMap) -> tuple[RowId, RowId]:
    """Locate the rows (x, x') manipulated by the convert step.

    Postconditions: x = x' + (1, ..., 1); h(x) = w_d > l(x); and x' has no
    other descendant whose interval reaches the top.  Requires the
    characterization to hold and the obstruction set to be nonempty.

    The search is deterministic: stage 1 starts at the lexicographically
    smallest obstruction row and descends through top-touching descendants
    until a row leaves slack below the top; stage 2 re-anchors to the
    smallest rival descendant while the diagonal ancestor has one.
    """
    if m.shape.d < 2:
        raise ValueError("find_pair applies to d >= 2 only")
    obstructed = x_set(m)
    if not obstructed:
        raise EmptyXSetError()
    top = m.top
    if top < 2:
        # every interval is (1, 1); no weight can move anywhere
        raise BottomedOutError("last dimension is 1; intervals cannot be lowered")
    x = min(obstructed)
    while m.intervals[x][0] == top:
        x = min(z for z in descendant_rows(x, m.shape) if m.intervals[z][1] == top)
    while True:
        x_prime = tuple(c - 1 for c in x)
        rivals = [
            z
            for z in descendant_rows(x_prime, m.shape)
            if z != x and m.intervals[z][1] == top
        ]
        if not rivals:
            return x, x_prime
        x = min(rivals)


def _apply_pair(m: IntervalMap, x: RowId, x_prime: RowId) -> IntervalMap:
    top = m.top
    fixed = dict(m.intervals)
    fixed[x] = (fixed[x][0], top - 1)
    fixed[x_prime] = (top - 1, fixed[x_prime][1])
    return IntervalMap(m.shape, fixed)


def convert_step(m: IntervalMap) -> IntervalMap:
    """One rewrite: lower h(x) to w_d - 1 and raise l(x') to w_d - 1.

    Preserves weight and the characterization, and removes exactly x from
    the obstruction set.
    """
    x, x_prime = find_pair(m)
    return _apply_pair(m, x, x_prime)


def normalize(m: IntervalMap) -> NormalizeReport:
    """Apply convert steps until the obstruction set is empty.

    Each step removes one row from the set, so the step count equals the
    initial obstruction-set size; weight is untouched throughout.
    """
    if m.shape.d < 2:
        raise ValueError("normalize applies to d >= 2 only")
    pairs: list[tuple[RowId, RowId]] = []
    current = m
    while x_set(current):
        x, x_prime = find_pair(current)
        current = _apply_pair(current, x, x_prime)
        pairs.append((x, x_prime))
    return NormalizeReport(result=current, steps=len(pairs), pairs=tuple(pairs))


def peel(m: IntervalMap) -> IntervalMap:
    """Remove the top cross-section of a normalized map.

    Requires an empty obstruction set, so the rows touching the top are
    exactly the ancestor-free ones (some coordinate equal to 1); each of
    those loses its top cell and the box loses its last layer.  The weight
    therefore drops by prod(w_i, i < d) - prod(w_i - 1, i < d), and the
    characterization still holds on the smaller box.
    """
    if m.shape.d < 2:
        raise ValueError("peel applies to d >= 2 only")
    if m.top < 2:
        raise BottomedOutError("last dimension is already 1")
    obstructed = x_set(m)
    if obstructed:
        raise XSetNonEmptyError(obstructed)
    new_shape = Shape(m.shape.dims[:-1] + (m.top - 1,))
    fixed = {
        row: (l, h - 1) if any(x == 1 for x in row) else (l, h)
        for row, (l, h) in m.intervals.items()
    }
    return IntervalMap(new_shape, fixed)
