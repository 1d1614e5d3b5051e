import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from wallkit.chern import TwistParameter
from wallkit.conditions import (CandidateQuad, TargetClass, check_integral_beta0, check_integral_betak,
                                check_numerical, rank_interval)
from wallkit.enumeration import (BudgetExceeded, CatalogFormatError, EnumerationOptions, ScaledQuad,
                                 WallCatalog, distinct_walls, enumerate_walls, search_space)

F = Fraction
ZERO = TwistParameter.zero()


def walls(R, D, tw=ZERO, **kw):
    return enumerate_walls(TargetClass(R, D), tw, EnumerationOptions(**kw))


def by_cde(cat):
    return {(w.c, w.d, w.e): w.ranks for w in cat.candidates}


# search space

def test_search_space_degree_one():
    sp = search_space(TargetClass(0, 1), ZERO)
    assert [s.m_d for s in sp.slices] == [1]
    (sl,) = sp.slices
    assert sl.d == F(1, 2) and sl.bound == 1
    assert list(sl.c_ranges()) == [(1, 1, 1)]
    assert sp.cells == 1


def test_search_space_m_d_ranges():
    assert [s.m_d for s in search_space(TargetClass(0, 3), ZERO).slices] == [1, 2, 3, 4, 5]
    sp = search_space(TargetClass(0, 4), TwistParameter.inverse(4))
    assert [s.m_d for s in sp.slices] == list(range(1, 128))


def test_min_alpha0_sq_prefilter_is_exact():
    # the prefilter drops exactly the cells below the cutoff
    t, tw = TargetClass(0, 4), TwistParameter.inverse(2)
    full = search_space(t, tw)
    cut = search_space(t, tw, EnumerationOptions(min_alpha0_sq=F(1, 2)))
    for a, b in zip(full.slices, cut.slices):
        kept = {(m_c, m_e) for m_c, lo, hi in a.c_ranges() for m_e in range(lo, hi + 1)
                if F(m_e, 4 * m_c) >= F(1, 2)}
        got = {(m_c, m_e) for m_c, lo, hi in b.c_ranges() for m_e in range(lo, hi + 1)}
        assert got == kept


@given(st.integers(-50, 50), st.integers(1, 100), st.integers(1, 100), st.integers(1, 500),
       st.sampled_from([None, 1, 2, 3, 5]))
def test_scaled_quad_bijection(m_r, m_c, m_d, m_e, k):
    tw = ZERO if k is None else TwistParameter.inverse(k)
    s = ScaledQuad(m_r, m_c, m_d, m_e)
    q = s.to_quad(tw)
    assert q.on_lattice(tw)
    assert ScaledQuad.from_quad(q, tw) == s


# published examples

APPENDIX_D3 = [
    ((-5, 1), 1, F(1, 2), F(1, 6)),
    ((-4, 2), 2, 1, F(1, 3)),
    ((-3, 3), 1, F(3, 2), F(1, 6)),
    ((0, 0), 1, F(3, 2), F(7, 6)),
    ((-3, 3), 3, F(3, 2), F(1, 2)),
    ((-21, 21), 7, F(3, 2), F(1, 6)),
    ((-2, 4), 2, 2, F(1, 3)),
    ((-1, 5), 1, F(5, 2), F(1, 6)),
]


def test_degree_three_listing_in_order():
    cat = walls(0, 3)
    got = [((w.ranks[0], w.ranks[-1]), w.c, w.d, w.e) for w in cat.candidates]
    assert got == APPENDIX_D3
    for w in cat.candidates:
        assert list(w.ranks) == list(range(w.ranks[0], w.ranks[-1] + 1))


def test_degree_four_filtered():
    cat = walls(0, 4, min_alpha0_sq=F(1))
    expected = {(1, F(1, 2), F(1, 6)), (2, 1, F(1, 3)), (1, F(3, 2), F(1, 6)), (1, F(3, 2), F(7, 6)),
                (3, F(3, 2), F(1, 2)), (2, 2, F(1, 3)), (2, 2, F(4, 3)), (4, 2, F(2, 3)),
                (1, F(5, 2), F(1, 6)), (1, F(5, 2), F(7, 6)), (3, F(5, 2), F(1, 2)), (2, 3, F(1, 3)),
                (1, F(7, 2), F(1, 6))}
    assert set(by_cde(cat)) == expected
    assert distinct_walls(cat) == [7, 4, 1]


def test_quarter_twist_table():
    cat = walls(0, 4, TwistParameter.inverse(4), min_alpha0_sq=F(9, 16))
    assert [w.ranks for w in cat.candidates] == [(0,)] * 5
    assert sorted((w.alpha0_sq for w in cat.candidates), reverse=True) == \
        [F(151, 16), F(79, 16), F(55, 16), F(31, 16), F(31, 16)]


def test_half_twist_table_rows():
    cat = walls(0, 4, TwistParameter.inverse(2), min_alpha0_sq=F(1, 4))
    m = by_cde(cat)
    assert len(m) == 53
    assert m[(F(5, 2), F(13, 8), F(5, 12))] == (2,)
    assert m[(F(3, 2), F(5, 8), F(1, 8))] == (-10,)
    assert m[(F(7, 2), F(13, 8), F(5, 24))] == (-2,)
    alpha = {(w.c, w.d, w.e): w.alpha0_sq for w in cat.candidates}
    assert alpha[(F(5, 2), F(13, 8), F(5, 12))] == 1
    assert alpha[(F(3, 2), F(5, 8), F(1, 8))] == F(1, 2)
    assert alpha[(F(7, 2), F(13, 8), F(5, 24))] == F(5, 14)


def test_untwisted_mode_admits_line_bundle():
    tw = TwistParameter.inverse(2)
    exact = by_cde(walls(0, 4, tw, min_alpha0_sq=F(1, 4), integrality="untwisted"))
    assert len(exact) == 147
    assert exact[(F(1, 2), F(1, 8), F(1, 48))][-1] == 1


def test_integrality_mode_irrelevant_at_beta_zero():
    assert by_cde(walls(1, 5)) == by_cde(walls(1, 5, integrality="untwisted"))


def test_distinct_walls_examples():
    assert distinct_walls(walls(0, 3)) == [7, 1, F(1, 7)]
    assert distinct_walls(walls(0, 1, min_alpha0_sq=F(2))) == []


def test_invalid_integrality_mode():
    with pytest.raises(ValueError):
        EnumerationOptions(integrality="loose")


# budget

def test_budget_exceeded_is_an_error():
    with pytest.raises(BudgetExceeded) as info:
        walls(0, 6, TwistParameter.inverse(3), budget=1000)
    assert info.value.budget == 1000 and info.value.cells > 1000


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("WALLKIT_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        walls(0, 3)


# invariants

@pytest.mark.parametrize("jobs", [2, 8])
def test_worker_count_does_not_change_output(jobs):
    for tw, kw in [(ZERO, {}), (TwistParameter.inverse(2), {"min_alpha0_sq": F(1, 4)})]:
        one = walls(1, 4, tw, workers=1, **kw).to_json()
        many = walls(1, 4, tw, workers=jobs, **kw).to_json()
        assert one == many


FAST_ORACLE = [(R, D, None) for R in range(3) for D in range(1, 5)] + \
    [(R, D, 1) for R in range(2) for D in range(1, 4)] + \
    [(R, D, 2) for R in range(2) for D in (1, 2)]


@pytest.mark.parametrize("mode", ["published", "untwisted"])
@pytest.mark.parametrize("R, D, k", FAST_ORACLE)
def test_oracle_equivalence(R, D, k, mode):
    tw = ZERO if k is None else TwistParameter.inverse(k)
    assert by_cde(walls(R, D, tw, integrality=mode)) == oracle.brute_force(R, D, k, mode=mode)


@pytest.mark.parametrize("kw", [{"strict": True}, {"min_alpha0_sq": F(1, 2), "min_exclusive": True}])
def test_oracle_equivalence_with_options(kw):
    opts = {"strict_upper_n2": kw.get("strict", False), "min_alpha0_sq": kw.get("min_alpha0_sq"),
            "min_exclusive": kw.get("min_exclusive", False)}
    tw = TwistParameter.inverse(2)
    assert by_cde(walls(0, 2, tw, **opts)) == oracle.brute_force(0, 2, 2, **kw)
    assert by_cde(walls(1, 4, ZERO, **opts)) == oracle.brute_force(1, 4, None, **kw)


@pytest.mark.slow
@pytest.mark.parametrize("R, D, mode, cut", [
    (0, 3, "published", None), (1, 3, "untwisted", None),
    (0, 4, "published", None), (2, 4, "untwisted", None), (0, 4, "published", F(1, 4)),
])
def test_oracle_equivalence_half_twist(R, D, mode, cut):
    tw = TwistParameter.inverse(2)
    got = by_cde(walls(R, D, tw, integrality=mode, min_alpha0_sq=cut))
    assert got == oracle.brute_force(R, D, 2, min_alpha0_sq=cut, mode=mode)


@pytest.mark.parametrize("D", range(1, 9))
def test_walls_monotone_in_degree(D):
    assert set(distinct_walls(walls(0, D))) <= set(distinct_walls(walls(0, D + 1)))


def test_degree_three_walls_inside_degree_four():
    assert {1, 7} <= set(distinct_walls(walls(0, 4, min_alpha0_sq=F(1))))


@pytest.mark.parametrize("D", range(1, 13))
def test_killing_wall_present(D):
    cat = walls(0, D, min_alpha0_sq=F(1))
    assert (1, F(1, 2), F(1, 6)) in by_cde(cat)
    assert 1 in cat.walls


@pytest.mark.parametrize("D", range(1, 13))
def test_cap_and_rank_zero_region(D):
    cat = walls(0, D, min_alpha0_sq=F(1))
    for w in cat.candidates:
        assert w.alpha0_sq <= 4 * D * D
        if w.alpha0_sq > 2 * D:
            assert w.ranks == (0,)


@pytest.mark.parametrize("R, D", [(0, 5), (3, 5), (1, 7)])
def test_beta_zero_ranks_fill_interval(R, D):
    t = TargetClass(R, D)
    for w in walls(R, D).candidates:
        lo, hi = rank_interval(w.c, w.d, w.e, t)
        assert w.ranks == tuple(range(lo, hi + 1))
        assert check_integral_beta0(w.c, w.d, w.e)


def test_half_twist_ranks_sparse_and_valid():
    t, tw = TargetClass(0, 4), TwistParameter.inverse(2)
    sparse = 0
    for w in walls(0, 4, tw, min_alpha0_sq=F(1, 4)).candidates:
        lo, hi = rank_interval(w.c, w.d, w.e, t)
        assert set(w.ranks) <= set(range(lo, hi + 1))
        sparse += len(w.ranks) < hi - lo + 1
        for q in w.quads():
            assert check_numerical(q, t) and check_integral_betak(q, tw)
    assert sparse > 0


def test_catalog_structure():
    cat = walls(2, 5, TwistParameter.inverse(1))
    keys = [w.key for w in cat.candidates]
    assert keys == sorted(keys)
    indices = sorted(i for idx in cat.walls.values() for i in idx)
    assert indices == list(range(len(cat.candidates)))
    assert list(cat.walls) == sorted(cat.walls, reverse=True)
    for a, idx in cat.walls.items():
        assert all(cat.candidates[i].alpha0_sq == a for i in idx)
    for w in cat.candidates:
        assert w.alpha0_sq == 6 * w.e / w.c
        assert len(w.chern_untwisted) == len(w.ranks)


def test_beta_one_differs_from_beta_zero():
    assert by_cde(walls(0, 3, TwistParameter.inverse(1))) != by_cde(walls(0, 3))


# serialization

@pytest.mark.parametrize("tw, kw", [
    (ZERO, {}),
    (TwistParameter.inverse(2), {"min_alpha0_sq": F(1, 4), "strict_upper_n2": True}),
    (TwistParameter.inverse(3), {"min_alpha0_sq": F(4, 9), "min_exclusive": True,
                                 "integrality": "untwisted"}),
])
def test_json_round_trip(tw, kw):
    cat = walls(1, 3, tw, **kw)
    text = cat.to_json()
    back = WallCatalog.from_json(text)
    assert back.to_json() == text
    assert back.options == EnumerationOptions(**kw)
    data = json.loads(text)
    assert set(data) == {"target", "beta", "options", "candidates", "walls"}
    assert "workers" not in data["options"]


@pytest.mark.parametrize("mutate", [
    lambda d: d["candidates"][0].update(ranks=[]),
    lambda d: d["candidates"][0].update(alpha0_sq="99"),
    lambda d: d["candidates"][0].update(ranks=[1, 0]),
    lambda d: d.pop("target"),
])
def test_from_json_rejects_bad_data(mutate):
    data = json.loads(walls(0, 3).to_json())
    mutate(data)
    with pytest.raises(CatalogFormatError):
        WallCatalog.from_json(json.dumps(data))


def test_from_json_rejects_garbage():
    with pytest.raises(CatalogFormatError):
        WallCatalog.from_json("{not json")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(1, 6), st.sampled_from([None, 1, 2, 3]))
def test_candidates_pass_conditions(R, D, k):
    tw = ZERO if k is None else TwistParameter.inverse(k)
    t = TargetClass(R, D)
    cat = walls(R, D, tw, min_alpha0_sq=F(1, 2))
    for w in cat.candidates:
        for q in w.quads():
            assert isinstance(q, CandidateQuad) and check_numerical(q, t)
