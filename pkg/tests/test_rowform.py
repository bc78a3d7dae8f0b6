import pytest

from maxac import (
    NEG_INF,
    POS_INF,
    EmptyRowError,
    Grid,
    IntervalMap,
    NonContiguousRowError,
    Shape,
    agg_bounds,
    ancestor_rows,
    check_characterization,
    descendant_rows,
    enumerate_maximal,
    from_intervals,
    is_maximal,
    to_intervals,
    weight,
    x_set,
)

SMALL_SHAPES = [(2, 2), (2, 3), (3, 3), (2, 2, 2), (1, 4), (3, 2, 2)]


def test_to_intervals_examples():
    m = to_intervals(Grid(Shape((2, 2)), [(1, 1), (1, 2), (2, 1)]))
    assert dict(m.intervals) == {(1,): (1, 2), (2,): (1, 1)}

    with pytest.raises(EmptyRowError) as err:
        to_intervals(Grid(Shape((2, 2)), [(1, 1)]))
    assert err.value.row == (2,)

    with pytest.raises(NonContiguousRowError) as err:
        to_intervals(Grid(Shape((1, 3)), [(1, 1), (1, 3)]))
    assert err.value.row == (1,)


def test_to_intervals_reports_first_bad_row():
    # row (1,2) is empty, row (2,1) is empty too: lexicographically first wins
    g = Grid(Shape((2, 2, 2)), [(1, 1, 1), (2, 2, 1)])
    with pytest.raises(EmptyRowError) as err:
        to_intervals(g)
    assert err.value.row == (1, 2)


def test_from_intervals_examples():
    m = IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 1)})
    assert from_intervals(m).ones == ((1, 1), (1, 2), (2, 1))

    m1 = IntervalMap(Shape((5,)), {(): (2, 2)})
    assert from_intervals(m1).ones == ((2,),)

    m2 = IntervalMap(Shape((3, 3)), {(1,): (3, 3), (2,): (3, 3), (3,): (1, 3)})
    assert weight(from_intervals(m2)) == 5


def test_interval_round_trips():
    for dims in SMALL_SHAPES:
        for g in enumerate_maximal(Shape(dims)).grids:
            m = to_intervals(g)
            assert from_intervals(m) == g
            assert to_intervals(from_intervals(m)) == m


def test_weight_identity():
    for dims in SMALL_SHAPES:
        for g in enumerate_maximal(Shape(dims)).grids:
            m = to_intervals(g)
            assert weight(g) == sum(h - l + 1 for l, h in m.intervals.values())


def test_interval_map_validation():
    with pytest.raises(ValueError):  # not a total map
        IntervalMap(Shape((2, 2)), {(1,): (1, 1)})
    with pytest.raises(ValueError):  # l > h
        IntervalMap(Shape((2, 2)), {(1,): (2, 1), (2,): (1, 1)})
    with pytest.raises(ValueError):  # h beyond the box
        IntervalMap(Shape((2, 2)), {(1,): (1, 3), (2,): (1, 1)})
    with pytest.raises(ValueError):  # row outside the box
        IntervalMap(Shape((2, 2)), {(1,): (1, 1), (2,): (1, 1), (3,): (1, 1)})


def test_agg_bounds_examples():
    m = IntervalMap(Shape((3, 3)), {(1,): (3, 3), (2,): (3, 3), (3,): (1, 3)})
    assert agg_bounds([], m) == (POS_INF, NEG_INF)
    m2 = IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 1)})
    assert agg_bounds([(1,)], m2) == (1, 2)
    assert agg_bounds([(1,), (2,)], m) == (3, 3)


def test_sentinels_order_but_do_not_add():
    assert NEG_INF < 1 < POS_INF
    assert min(5, POS_INF) == 5
    assert max(1, NEG_INF) == 1
    assert not POS_INF < POS_INF and not NEG_INF < NEG_INF
    assert NEG_INF < POS_INF
    with pytest.raises(TypeError):
        POS_INF + 1  # arithmetic is deliberately unsupported


def test_ancestor_descendant_rows():
    s = Shape((3, 3, 4))
    assert sorted(ancestor_rows((2, 3))) == [(1, 1), (1, 2)]
    assert sorted(descendant_rows((2, 2), s)) == [(3, 3)]
    assert list(ancestor_rows((1, 2))) == []
    assert list(descendant_rows((3, 3), s)) == []
    # d = 1: the single empty row has neither
    assert list(ancestor_rows(())) == []
    assert list(descendant_rows((), Shape((5,)))) == []


def test_check_characterization_examples():
    good = IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 1)})
    assert check_characterization(good)

    bad = check_characterization(
        IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 2)})
    )
    assert not bad
    assert bad.row == (2,) and bad.rule == "h"
    assert bad.expected == 1 and bad.actual == 2


def test_check_characterization_rejects_d1():
    m = IntervalMap(Shape((5,)), {(): (2, 2)})
    with pytest.raises(ValueError):
        check_characterization(m)


def test_x_set_examples():
    m1 = IntervalMap(Shape((2, 2)), {(1,): (2, 2), (2,): (1, 2)})
    assert x_set(m1) == {(2,)}
    m2 = IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 1)})
    assert x_set(m2) == set()
    m3 = IntervalMap(Shape((3, 3)), {(1,): (3, 3), (2,): (3, 3), (3,): (1, 3)})
    assert x_set(m3) == {(2,), (3,)}
    with pytest.raises(ValueError):
        x_set(IntervalMap(Shape((5,)), {(): (1, 5)}))


def test_equivalence_with_is_maximal_on_small_shapes():
    # direct flip test vs interval characterization, both directions
    for dims in [(2, 2), (2, 3), (2, 2, 2)]:
        shape = Shape(dims)
        cells = list(shape.iter_cells())
        n = len(cells)
        for mask in range(1 << n):
            g = Grid(shape, [c for i, c in enumerate(cells) if (mask >> i) & 1])
            try:
                local = bool(check_characterization(to_intervals(g)))
            except (EmptyRowError, NonContiguousRowError):
                local = False
            assert local == is_maximal(g), g.ones


def test_monotonicity_along_dominance():
    # on valid maps: rows strictly below have wider reach on both ends
    for dims in SMALL_SHAPES:
        shape = Shape(dims)
        if shape.d < 2:
            continue
        for g in enumerate_maximal(shape).grids:
            m = to_intervals(g)
            for z in m.intervals:
                for x in ancestor_rows(z):
                    lx, hx = m.intervals[x]
                    lz, hz = m.intervals[z]
                    assert hz <= hx and lz <= lx
                    assert lx >= hz  # local cleanliness across the pair


def test_boundary_rows():
    for dims in SMALL_SHAPES:
        shape = Shape(dims)
        if shape.d < 2:
            continue
        top = shape.dims[-1]
        for g in enumerate_maximal(shape).grids:
            m = to_intervals(g)
            for row, (l, h) in m.intervals.items():
                if 1 in row:  # no ancestors
                    assert h == top
                if any(x == w for x, w in zip(row, shape.dims)):  # no descendants
                    assert l == 1


def test_interval_map_json_round_trip():
    m = IntervalMap(Shape((3, 3)), {(1,): (3, 3), (2,): (3, 3), (3,): (1, 3)})
    obj = m.to_json_obj()
    assert obj == {
        "w": [3, 3],
        "rows": [
            {"x": [1], "l": 3, "h": 3},
            {"x": [2], "l": 3, "h": 3},
            {"x": [3], "l": 1, "h": 3},
        ],
    }
    assert IntervalMap.from_json_obj(obj) == m


def test_interval_map_json_rejects_malformed_input():
    with pytest.raises(ValueError):
        IntervalMap.from_json_obj({"w": [2, 2]})
    with pytest.raises(ValueError):
        IntervalMap.from_json_obj({"w": [2, 2], "rows": [{"x": [1], "l": 1}]})
