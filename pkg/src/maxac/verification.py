"""Per-shape verification suites.

Each check ties one claim to the exhaustive enumeration oracle: the uniform
size law, the equivalence of maximality with the interval characterization,
the closed-form counts and the append-a-layer bijection, the normalize/peel
recurrences, and the game's loser law.  ``verify_shape`` bundles them for the
CLI's ``verify`` verb.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Grid, Shape, is_maximal, max_size, weight
from .counting import count_2d, count_all_le2, extend_by_two, project_last
from .enumeration import (
    BRUTE_FORCE_CELL_LIMIT,
    DEFAULT_CELL_LIMIT,
    brute_force_maximal,
    count_maximal,
    enumerate_maximal,
)
from .errors import EmptyRowError, NonContiguousRowError
from .game import play, predict_loser
from .normalize import convert_step, find_pair, normalize, peel
from .rowform import IntervalMap, check_characterization, to_intervals, x_set


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def iter_shapes(max_cells: int, max_d: int) -> Iterator[Shape]:
    """Every shape with at most ``max_d`` dimensions and ``max_cells`` cells,
    in lexicographic order by dimension vector."""

    def rec(prefix: tuple[int, ...], prod: int) -> Iterator[Shape]:
        if prefix:
            yield Shape(prefix)
        if len(prefix) == max_d:
            return
        w = 1
        while prod * w <= max_cells:
            yield from rec(prefix + (w,), prod * w)
            w += 1

    yield from rec((), 1)


def sample_non_maximal(shape: Shape, count: int, seed: int = 0) -> list[Grid]:
    """Deterministic sample of non-maximal grids over ``shape``.

    Mixes arbitrary random subsets (usually containing the forbidden pair)
    with punctured maximal grids (clean but unsaturated), so both failure
    modes of the characterization get exercised.
    """
    rng = random.Random(f"{shape.dims}:{seed}")
    cells = list(shape.iter_cells())
    maximal = enumerate_maximal(shape).grids
    out: list[Grid] = []
    while len(out) < count:
        if maximal and rng.random() < 0.5:
            g = rng.choice(maximal)
            drop = rng.randrange(1, len(g.ones) + 1)
            ones = rng.sample(g.ones, len(g.ones) - drop)
        else:
            density = rng.random()
            ones = [c for c in cells if rng.random() < density]
        candidate = Grid(shape, ones)
        if not is_maximal(candidate):
            out.append(candidate)
    return out


def _interval_weight(m: IntervalMap) -> int:
    return sum(h - l + 1 for l, h in m.intervals.values())


def check_size_law(shape: Shape) -> CheckResult:
    """Every enumerated maximal grid has weight prod(w) - prod(w - 1)."""
    report = enumerate_maximal(shape)
    expected = max_size(shape)
    bad = [g for g in report.grids if weight(g) != expected]
    if bad:
        return CheckResult(
            "size-law",
            False,
            f"{len(bad)} of {report.count} maximal grids deviate from weight {expected}",
        )
    return CheckResult(
        "size-law", True, f"{report.count} maximal grids, all of weight {expected}"
    )


def check_equivalence(shape: Shape, samples: int = 1000, seed: int = 0) -> CheckResult:
    """is_maximal(g) iff to_intervals(g) succeeds and the characterization
    holds, over all maximal grids plus a seeded non-maximal sample."""
    name = "characterization-equivalence"
    if shape.d < 2:
        return CheckResult(name, True, "d = 1: characterization not applicable")
    pool = list(enumerate_maximal(shape).grids)
    n_maximal = len(pool)
    pool.extend(sample_non_maximal(shape, samples, seed))
    for g in pool:
        direct = is_maximal(g)
        try:
            local = bool(check_characterization(to_intervals(g)))
        except (EmptyRowError, NonContiguousRowError):
            local = False
        if direct != local:
            return CheckResult(
                name, False, f"disagreement on grid with ones {g.ones}"
            )
    return CheckResult(
        name, True, f"{n_maximal} maximal + {samples} sampled grids agree"
    )


def check_counting(shape: Shape) -> CheckResult:
    """Enumerated count against whichever closed forms apply."""
    total = count_maximal(shape)
    notes = [f"enumerated {total}"]
    if shape.d == 2:
        formula = count_2d(*shape.dims)
        if formula != total:
            return CheckResult(
                "counting", False, f"binomial form gives {formula}, enumeration {total}"
            )
        notes.append(f"binomial form agrees ({formula})")
    if max(shape.dims) <= 2:
        formula = count_all_le2(shape)
        if formula != total:
            return CheckResult(
                "counting", False, f"min-dimension form gives {formula}, enumeration {total}"
            )
        notes.append(f"min-dimension form agrees ({formula})")
    return CheckResult("counting", True, "; ".join(notes))


def check_brute_force(shape: Shape) -> CheckResult:
    """Search result equals the full subset filter, set for set."""
    name = "brute-force-cross-check"
    if shape.cell_count > BRUTE_FORCE_CELL_LIMIT:
        return CheckResult(
            name, True, f"skipped: {shape.cell_count} cells exceed the oracle budget"
        )
    searched = enumerate_maximal(shape).grids
    filtered = brute_force_maximal(shape)
    if searched != filtered:
        return CheckResult(name, False, "subset filter and search disagree")
    return CheckResult(name, True, f"both routes list the same {len(searched)} grids")


def check_bijection(shape: Shape) -> CheckResult:
    """Appending a size-2 axis is a bijection between maximal-grid sets."""
    name = "append-layer-bijection"
    if shape.cell_count * 2 > DEFAULT_CELL_LIMIT:
        return CheckResult(
            name, True, "skipped: extended box exceeds the enumeration budget"
        )
    base = enumerate_maximal(shape).grids
    extended_shape = Shape(shape.dims + (2,))
    extended = enumerate_maximal(extended_shape).grids
    images = []
    for g in base:
        image = extend_by_two(g)
        if not is_maximal(image) or project_last(image) != g:
            return CheckResult(name, False, f"round trip failed for ones {g.ones}")
        images.append(image)
    if sorted(images, key=lambda g: g.ones) != list(extended):
        return CheckResult(
            name, False, f"image set differs: {len(images)} vs {len(extended)} grids"
        )
    return CheckResult(
        name, True, f"{len(base)} grids map bijectively onto the extended box"
    )


def check_normalization(shape: Shape) -> CheckResult:
    """Normalization drains the obstruction set one row per step, keeping
    weight and the characterization intact at every intermediate map."""
    name = "normalization"
    if shape.d < 2:
        return CheckResult(name, True, "d = 1: not applicable")
    if shape.dims[-1] < 2:
        # with w_d = 1 no interval can move; nothing to normalize
        return CheckResult(name, True, "w_d = 1: convert steps not defined")
    grids = enumerate_maximal(shape).grids
    total_steps = 0
    for g in grids:
        m = to_intervals(g)
        expected_steps = len(x_set(m))
        report = normalize(m)
        if report.steps != expected_steps or x_set(report.result):
            return CheckResult(name, False, f"step count off for ones {g.ones}")
        current = m
        for _ in range(expected_steps):
            chosen, _anchor = find_pair(current)
            nxt = convert_step(current)
            if (
                _interval_weight(nxt) != _interval_weight(current)
                or not check_characterization(nxt)
                or x_set(nxt) != x_set(current) - {chosen}
            ):
                return CheckResult(
                    name, False, f"convert step broke an invariant for ones {g.ones}"
                )
            current = nxt
        if current != report.result:
            return CheckResult(name, False, f"trace mismatch for ones {g.ones}")
        total_steps += expected_steps
    return CheckResult(
        name, True, f"{len(grids)} grids normalized in {total_steps} total steps"
    )


def check_peel_recurrence(shape: Shape) -> CheckResult:
    """Alternating normalize and peel telescopes every maximal grid's weight
    down to the closed form."""
    name = "peel-recurrence"
    if shape.d < 2:
        return CheckResult(name, True, "d = 1: not applicable")
    grids = enumerate_maximal(shape).grids
    for g in grids:
        current = to_intervals(g)
        while current.shape.dims[-1] > 1:
            current = normalize(current).result
            prefix = current.shape.dims[:-1]
            expected_drop = math.prod(prefix) - math.prod(p - 1 for p in prefix)
            before = _interval_weight(current)
            current = peel(current)
            if before - _interval_weight(current) != expected_drop:
                return CheckResult(name, False, f"peel drop off for ones {g.ones}")
            if not check_characterization(current):
                return CheckResult(
                    name, False, f"peel broke the characterization for ones {g.ones}"
                )
        if _interval_weight(current) != max_size(current.shape):
            return CheckResult(name, False, f"telescoped weight off for ones {g.ones}")
    return CheckResult(name, True, f"{len(grids)} grids telescoped to the closed form")


def check_game(
    shape: Shape,
    trials: int = 100,
    players: Sequence[int] = (2, 3, 5),
    seed: int = 0,
) -> CheckResult:
    """Random safe play always loses for player max_size mod m, after exactly
    max_size safe moves."""
    name = "game-loser"
    expected_len = max_size(shape)
    for m in players:
        expected = predict_loser(shape, m)
        for t in range(trials):
            transcript = play(shape, m, ["random"] * m, seed=seed * 1_000_003 + m * 1_009 + t)
            safe_count = len(transcript.final_state.moves)
            if transcript.terminal_cell is not None:
                safe_count -= 1
            if (
                transcript.loser != expected
                or safe_count != expected_len
                or not transcript.forced
            ):
                return CheckResult(
                    name,
                    False,
                    f"m={m}, trial {t}: loser {transcript.loser}, expected {expected}",
                )
    return CheckResult(
        name,
        True,
        f"loser = {expected_len} mod m over {trials} seeded games for m in {tuple(players)}",
    )


def verify_shape(
    shape: Shape,
    samples: int = 1000,
    trials: int = 100,
    seed: int = 0,
) -> list[CheckResult]:
    """Run the full per-shape suite; all-passed means the shape reproduces
    every desk-scale claim."""
    return [
        check_size_law(shape),
        check_equivalence(shape, samples=samples, seed=seed),
        check_counting(shape),
        check_brute_force(shape),
        check_bijection(shape),
        check_normalization(shape),
        check_peel_recurrence(shape),
        check_game(shape, trials=trials, seed=seed),
    ]
