import pytest

from maxac import (
    BottomedOutError,
    EmptyXSetError,
    IntervalMap,
    Shape,
    XSetNonEmptyError,
    check_characterization,
    convert_step,
    enumerate_maximal,
    find_pair,
    max_size,
    normalize,
    peel,
    to_intervals,
    x_set,
)


def _iw(m):
    return sum(h - l + 1 for l, h in m.intervals.values())


M22 = IntervalMap(Shape((2, 2)), {(1,): (2, 2), (2,): (1, 2)})
M22_DONE = IntervalMap(Shape((2, 2)), {(1,): (1, 2), (2,): (1, 1)})
M33 = IntervalMap(Shape((3, 3)), {(1,): (3, 3), (2,): (3, 3), (3,): (1, 3)})


def test_find_pair_examples():
    assert find_pair(M22) == ((2,), (1,))
    # walk starts at (2,), sees l = 3 = top, drops to descendant (3,)
    assert find_pair(M33) == ((3,), (2,))
    with pytest.raises(EmptyXSetError):
        find_pair(M22_DONE)


def test_find_pair_returns_diagonal_neighbors():
    for dims in [(2, 2), (3, 3), (2, 3), (3, 2, 2), (2, 2, 2)]:
        for g in enumerate_maximal(Shape(dims)).grids:
            m = to_intervals(g)
            while x_set(m):
                x, x_prime = find_pair(m)
                assert x == tuple(c + 1 for c in x_prime)
                top = m.top
                assert m.intervals[x][1] == top > m.intervals[x][0]
                # no rival top-touching descendant of the anchor
                from maxac import descendant_rows

                assert not any(
                    m.intervals[z][1] == top
                    for z in descendant_rows(x_prime, m.shape)
                    if z != x
                )
                m = convert_step(m)


def test_convert_step_examples():
    out = convert_step(M22)
    assert dict(out.intervals) == {(1,): (1, 2), (2,): (1, 1)}

    out33 = convert_step(M33)
    assert dict(out33.intervals) == {(1,): (3, 3), (2,): (2, 3), (3,): (1, 2)}
    assert _iw(out33) == 5

    with pytest.raises(EmptyXSetError):
        convert_step(M22_DONE)


def test_normalize_examples():
    report = normalize(M33)
    assert report.steps == 2
    assert dict(report.result.intervals) == {(1,): (2, 3), (2,): (2, 2), (3,): (1, 2)}
    assert report.pairs == (((3,), (2,)), ((2,), (1,)))

    untouched = normalize(M22_DONE)
    assert untouched.steps == 0 and untouched.result == M22_DONE


def test_normalize_invariants_on_enumerated_grids():
    for dims in [(2, 3), (3, 3), (2, 2, 2), (3, 2, 2)]:
        for g in enumerate_maximal(Shape(dims)).grids:
            m = to_intervals(g)
            report = normalize(m)
            assert report.steps == len(report.pairs) == len(x_set(m))
            assert not x_set(report.result)
            assert _iw(report.result) == _iw(m)
            assert check_characterization(report.result)
            # afterwards only ancestor-free rows touch the top
            top = report.result.top
            for row, (_, h) in report.result.intervals.items():
                assert (h == top) == (1 in row)


def test_normalize_report_json():
    obj = normalize(M33).to_json_obj()
    assert obj["steps"] == 2
    assert obj["pairs"] == [[[3], [2]], [[2], [1]]]
    assert obj["result"]["w"] == [3, 3]


def test_peel_examples():
    normalized = normalize(M33).result
    peeled = peel(normalized)
    assert peeled.shape.dims == (3, 2)
    assert dict(peeled.intervals) == {(1,): (2, 2), (2,): (2, 2), (3,): (1, 2)}
    # the drop equals the number of ancestor-free rows: 3 - 2 = 1, so 5 -> 4
    assert _iw(normalized) == 5 and _iw(peeled) == 4

    peeled22 = peel(M22_DONE)
    assert peeled22.shape.dims == (2, 1)
    assert dict(peeled22.intervals) == {(1,): (1, 1), (2,): (1, 1)}
    assert _iw(M22_DONE) == 3 and _iw(peeled22) == 2

    with pytest.raises(XSetNonEmptyError):
        peel(M33)


def test_peel_bottoms_out():
    flat = IntervalMap(Shape((2, 1)), {(1,): (1, 1), (2,): (1, 1)})
    with pytest.raises(BottomedOutError):
        peel(flat)


def test_normalize_is_undefined_when_top_is_1_but_obstructions_exist():
    # over (2,2,1) the all-ones grid is maximal yet its obstruction set is
    # nonempty; no interval can be lowered, so the machinery refuses
    all_ones = IntervalMap(
        Shape((2, 2, 1)),
        {(1, 1): (1, 1), (1, 2): (1, 1), (2, 1): (1, 1), (2, 2): (1, 1)},
    )
    assert check_characterization(all_ones)
    assert x_set(all_ones) == {(2, 2)}
    with pytest.raises(BottomedOutError):
        normalize(all_ones)


def test_peel_telescopes_to_the_closed_form():
    for dims in [(3, 3), (2, 3), (4, 4), (2, 2, 2)]:
        for g in enumerate_maximal(Shape(dims)).grids:
            m = to_intervals(g)
            while m.shape.dims[-1] > 1:
                m = normalize(m).result
                m = peel(m)
                assert check_characterization(m)
            assert _iw(m) == max_size(m.shape)
