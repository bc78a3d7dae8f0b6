"""The uniform weight law.

Over a box of dimensions w = (w_1, ..., w_d), consider binary grids in which
no one-cell strictly dominates another (an antichain under strict
coordinatewise dominance).  A grid is maximal when no further cell can be
turned on.  Remarkably, every maximal grid has the same weight:

    prod(w_i) - prod(w_i - 1)

which is also the number of cells touching the lower boundary (some
coordinate equal to 1).  This script enumerates small boxes exhaustively and
watches the law hold.
"""

from maxac import Shape, enumerate_maximal, iter_shapes, max_size, weight

print("The two maximal grids of the 2 x 2 box:")
for g in enumerate_maximal(Shape((2, 2))).grids:
    print("   ", g.ones, "-> weight", weight(g))
print("Both weigh", max_size(Shape((2, 2))), "= 2*2 - 1*1")
print()

print("A tour of small boxes (count of maximal grids, their common weight):")
for dims in [(2, 3), (3, 3), (4, 4), (2, 2, 2), (3, 2, 2), (1, 7), (6,)]:
    shape = Shape(dims)
    report = enumerate_maximal(shape)
    weights = {weight(g) for g in report.grids}
    assert weights == {max_size(shape)}
    print(f"    {str(dims):12} {report.count:4} grids, weight {max_size(shape)}")
print()

print("Sweeping every shape with at most 20 cells and 4 dimensions:")
shapes = list(iter_shapes(20, 4))
checked = 0
for shape in shapes:
    expected = max_size(shape)
    for g in enumerate_maximal(shape).grids:
        assert weight(g) == expected
        checked += 1
print(f"    {checked} maximal grids over {len(shapes)} shapes, "
      "every single one matching the closed form.")
print()

print("The closed form counts boundary cells:")
for dims in [(3, 3), (2, 3, 2), (4, 1, 2)]:
    s = Shape(dims)
    boundary = sum(1 for c in s.iter_cells() if 1 in c)
    print(f"    {dims}: cells with a 1-coordinate = {boundary} = max_size = {max_size(s)}")
