"""Counting maximal grids.

Three exact results, each cross-checked against exhaustive enumeration:

* two dimensions: the count over a w1 x w2 box is C(w1 + w2 - 2, w1 - 1)
  (a maximal grid is a monotone staircase; choosing where it bends is a
  lattice-path choice);
* appending a dimension of size 2 changes nothing: maximal grids over
  [w, 2] correspond one-to-one with maximal grids over w;
* hence when every dimension is 1 or 2, the count is simply min(w_i).

No closed form is known beyond these; enumeration is the general tool.
"""

import itertools

from maxac import (
    Shape,
    count_2d,
    count_all_le2,
    count_maximal,
    enumerate_maximal,
    extend_by_two,
    project_last,
)

print("Two-dimensional counts (binomial vs exhaustive enumeration):")
print("    w2:      1    2    3    4    5")
for w1 in range(1, 6):
    row = []
    for w2 in range(1, 6):
        formula = count_2d(w1, w2)
        assert formula == count_maximal(Shape((w1, w2)))
        row.append(f"{formula:4}")
    print(f"    w1={w1}  " + " ".join(row))
print("    (symmetric, Pascal-like: each entry is the sum of its neighbors)")
print()

print("The append-a-layer bijection on the 2 x 2 box:")
base = enumerate_maximal(Shape((2, 2))).grids
for g in base:
    image = extend_by_two(g)
    back = project_last(image)
    print(f"    {g.ones}")
    print(f"      -> {image.ones}")
    print(f"      -> back to {back.ones}   (round trip: {back == g})")
print("Counts agree:", count_maximal(Shape((2, 2))),
      "==", count_maximal(Shape((2, 2, 2))))
print()

print("All-small boxes: count = min(w_i)")
for d in range(1, 5):
    for dims in itertools.product((1, 2), repeat=d):
        shape = Shape(dims)
        assert count_all_le2(shape) == count_maximal(shape)
    print(f"    d={d}: verified for all {2**d} boxes over {{1,2}}^{d}")
print()

print("Beyond the closed forms, enumeration is the oracle:")
for dims in [(3, 3, 2), (4, 3), (2, 3, 4), (5, 5)]:
    print(f"    {str(dims):10} -> {count_maximal(Shape(dims))} maximal grids")
