"""The m-player exclusion game on a box.

Players 0..m-1 take turns turning on a zero cell; whoever first creates a
strictly dominating pair of one-cells loses.  As long as everyone plays
moves that keep the board clean, the board grows into a maximal grid after
exactly ``max_size`` moves, so the player ``max_size mod m`` is stuck and
loses regardless of strategy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .core import Cell, Grid, Shape, flip_creates_containment, max_size
from .errors import (
    StrategyReturnedNonZeroCellError,
    StrategyReturnedOutOfRangeError,
)

# built-in strategy names, or a callable mapping the state to a zero cell
Strategy = Union[str, Callable[["GameState"], Cell]]

BUILTIN_STRATEGIES = ("lex", "random")


@dataclass(frozen=True)
class GameState:
    """Snapshot of a game in progress."""

    shape: Shape
    board: Grid
    players: int
    moves: tuple[tuple[int, Cell], ...]

    @property
    def to_move(self) -> int:
        return len(self.moves) % self.players


@dataclass(frozen=True)
class Transcript:
    """A finished game: final state, who lost, and how.

    ``terminal_cell`` is the losing flip, or None when the board filled up
    with no flip left to lose on (possible only in boxes where no two cells
    are comparable); the stuck player still loses.  ``forced`` is False when
    the loser flipped an unsafe cell while safe moves remained.
    """

    final_state: GameState
    loser: int
    terminal_cell: Cell | None
    forced: bool

    def to_json_obj(self) -> dict:
        return {
            "w": list(self.final_state.shape.dims),
            "players": self.final_state.players,
            "moves": [[p, list(c)] for p, c in self.final_state.moves],
            "loser": self.loser,
            "terminal_cell": None if self.terminal_cell is None else list(self.terminal_cell),
            "forced": self.forced,
        }


def predict_loser(shape: Shape, players: int) -> int:
    """The player who runs out of safe moves: max_size(shape) mod players."""
    if players < 2:
        raise ValueError("the game needs at least two players")
    return max_size(shape) % players


def safe_moves(state: GameState) -> set[Cell]:
    """Zero cells whose flip keeps the board clean; empty iff the board is
    maximal."""
    board = state.board
    return {
        c
        for c in state.shape.iter_cells()
        if c not in board.one_set and not flip_creates_containment(board, c)
    }


def play(
    shape: Shape,
    players: int,
    strategies: Sequence[Strategy],
    seed: int = 0,
) -> Transcript:
    """Run one game to completion and return its transcript.

    Strategies are given per player: "lex" plays the lexicographically first
    safe move, "random" a uniform safe move (one generator seeded per game
    drives all random players), and a callable may return any zero cell --
    including an unsafe one, losing on the spot.  Built-ins flip the first
    zero cell once no safe move remains.
    """
    if players < 2:
        raise ValueError("the game needs at least two players")
    if len(strategies) != players:
        raise ValueError(f"expected {players} strategies, got {len(strategies)}")
    for s in strategies:
        if not callable(s) and s not in BUILTIN_STRATEGIES:
            raise ValueError(f"unknown strategy {s!r}")

    rng = random.Random(seed)
    board = Grid(shape)
    moves: list[tuple[int, Cell]] = []
    while True:
        state = GameState(shape=shape, board=board, players=players, moves=tuple(moves))
        player = state.to_move
        if len(board.ones) == shape.cell_count:
            # full clean board: the player to move cannot move at all
            return Transcript(final_state=state, loser=player,
                              terminal_cell=None, forced=True)
        strategy = strategies[player]
        safe = sorted(safe_moves(state))
        if callable(strategy):
            returned = strategy(state)
            try:
                cell = tuple(returned)
            except TypeError:
                raise StrategyReturnedOutOfRangeError(player, returned) from None
            if not shape.contains_cell(cell):
                raise StrategyReturnedOutOfRangeError(player, cell)
            if cell in board.one_set:
                raise StrategyReturnedNonZeroCellError(player, cell)
        elif safe:
            cell = safe[0] if strategy == "lex" else rng.choice(safe)
        else:
            cell = next(c for c in shape.iter_cells() if c not in board.one_set)
        losing = flip_creates_containment(board, cell)
        board = Grid(shape, board.ones + (cell,))
        moves.append((player, cell))
        if losing:
            final = GameState(shape=shape, board=board, players=players, moves=tuple(moves))
            return Transcript(final_state=final, loser=player,
                              terminal_cell=cell, forced=not safe)
