import pytest

from antimagic.errors import InvalidParams
from antimagic.oracle import NonUnique, x0_brute, x0_verbatim_solutions
from antimagic.x0 import solve_x0


def test_boundary_of_first_regime():
    assert solve_x0(14, 2) is None
    assert x0_brute(14, 2) is None


def test_k15_d2():
    r = solve_x0(15, 2)
    assert (r.x0, r.interval, r.min_first_order) == (1, (15, 16), 7)
    assert x0_brute(15, 2) == 1


def test_k24_d3():
    r = solve_x0(24, 3)
    assert (r.x0, r.interval) == (2, (24, 27))
    assert x0_brute(27, 3) == 2


@pytest.mark.parametrize("k,d", [(-1, 2), (5, 1)])
def test_invalid(k, d):
    with pytest.raises(InvalidParams):
        solve_x0(k, d)


@pytest.mark.parametrize("d", range(2, 9))
def test_intervals_tile_the_integers(d):
    prev_high = 5 * d + 4
    for k in range(5 * d + 5, 400):
        r = solve_x0(k, d)
        assert r.low <= k <= r.high and r.x0 >= 1
        assert r.high - r.low == 2 * d - 3
        if r.low == k:
            assert r.low == prev_high + 1
        prev_high = r.high


@pytest.mark.parametrize("d", range(2, 9))
def test_closed_form_matches_scan(d):
    for k in range(0, 300):
        expected = x0_brute(k, d)
        got = solve_x0(k, d)
        assert (got.x0 if got else None) == expected


def test_literal_equation_list_is_ambiguous_for_small_d():
    assert x0_verbatim_solutions(15, 2) == [1, 2, 3, 4, 5]
    for d in range(2, 11):
        assert any(len(x0_verbatim_solutions(k, d)) > 1 for k in range(5 * d + 5, 200))
    for d in range(11, 15):
        for k in range(5 * d + 5, 300):
            assert x0_verbatim_solutions(k, d) == [solve_x0(k, d).x0]


def test_literal_list_always_contains_closed_form():
    for d in range(2, 9):
        for k in range(5 * d + 5, 200):
            assert solve_x0(k, d).x0 in x0_verbatim_solutions(k, d)


def test_non_unique_is_signalled(monkeypatch):
    import antimagic.oracle as oracle

    monkeypatch.setattr(oracle, "_solutions", lambda k, d, r0: [1, 2])
    with pytest.raises(NonUnique):
        oracle.x0_brute(20, 2)
