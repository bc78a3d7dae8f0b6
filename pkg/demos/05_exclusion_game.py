"""The m-player exclusion game.

Players 0..m-1 take turns turning on a zero cell of an initially empty board;
whoever first creates a strictly dominating pair of one-cells loses.  Because
every maximal clean board has exactly max_size(w) cells, safe moves run out
after exactly that many turns no matter how anyone plays -- so the loser is
predetermined:

    loser = max_size(w) mod m

This script plays a commented game, then hammers the law with seeded random
play across shapes and player counts.
"""

from maxac import Shape, max_size, play, predict_loser, safe_moves

shape = Shape((2, 2))
print(f"A 2-player game on the 2 x 2 box (max_size = {max_size(shape)}, "
      f"predicted loser: player {predict_loser(shape, 2)}):")
t = play(shape, 2, ["lex", "lex"])
for i, (player, cell) in enumerate(t.final_state.moves):
    tag = "  <- creates the forbidden pair" if cell == t.terminal_cell else ""
    print(f"    move {i}: player {player} flips {cell}{tag}")
print(f"    loser: player {t.loser}")
print()

print("Strategy does not matter: 200 seeded random games on the 3 x 3 box")
shape = Shape((3, 3))
losers = {play(shape, 2, ["random", "random"], seed=s).loser for s in range(200)}
print(f"    distinct losers observed: {losers} "
      f"(predicted {predict_loser(shape, 2)} = {max_size(shape)} mod 2)")
print()

print("Across shapes and player counts (100 seeded games each):")
for dims in [(2, 2), (3, 3), (2, 2, 2), (4, 3), (1, 7), (6,)]:
    shape = Shape(dims)
    for m in (2, 3, 5):
        expected = predict_loser(shape, m)
        outcomes = {
            play(shape, m, ["random"] * m, seed=s).loser for s in range(100)
        }
        assert outcomes == {expected}, (dims, m, outcomes)
    print(f"    {str(dims):10} loser is always max_size mod m "
          f"for m in (2, 3, 5)   [max_size = {max_size(shape)}]")
print()

print("A suicidal custom strategy can lose early, and the transcript says so:")


def reckless(state):
    # grab the top corner as soon as possible, safe or not
    top = tuple(state.shape.dims)
    if top not in state.board.one_set:
        return top
    return sorted(safe_moves(state))[0]


t = play(Shape((3, 3)), 2, ["lex", reckless])
print(f"    moves: {[(p, c) for p, c in t.final_state.moves]}")
print(f"    loser: player {t.loser}, forced: {t.forced} "
      "(False means safe moves still existed)")
