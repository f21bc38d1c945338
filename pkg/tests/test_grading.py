import random
import unicodedata

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hfkword.bigon import enumerate_primitive_bigons
from hfkword.errors import InconsistentGradingError, NormalizationError, ReductionStallError
from hfkword.grading import (
    GradingGraph,
    absolute_gradings,
    absolute_maslov,
    alexander_shift,
    build_grading_graph,
    is_mod2_symmetric,
    normalize_alexander,
    reduce_relator,
    relative_gradings,
    solve_relative,
)
from hfkword.word import parse_relator
from oracles import brute_shift, hand_potentials

R_10_161 = parse_relator("XyXyxYxyXy^2XyxYxyXyXYxYXYxY")
R_DPLUS = parse_relator("Xyx^3YX^3Yx^3yX^2yx^3YX^3Yx^3yX^4")
R_STALL = parse_relator("YX^3Yxyx")


def _same_cyclic(a: str, b: str) -> bool:
    a = unicodedata.normalize("NFD", a).split()
    b = unicodedata.normalize("NFD", b).split()
    return len(a) == len(b) and any(a[i:] + a[:i] == b for i in range(len(a)))


def test_trefoil_edges():
    r = parse_relator("XyXYxY")
    g = build_grading_graph(r, enumerate_primitive_bigons(r))
    edges = {(e.source, e.target): (e.dF, e.dM, e.dw) for e in g.edges}
    # XYx from x2 to x3: P = (0, -1), negative
    assert edges[(2, 3)] == (1, 1, -1)
    # xYX from x3 to x1: P = (1, 0), positive
    assert edges[(3, 1)] == (1, 1, 0)


def test_empty_graph_and_single_node():
    t = solve_relative(GradingGraph(1, ()))
    assert t.F == (0,) and t.component_count == 1


def test_two_singleton_components():
    r = parse_relator("XYXy")
    t = solve_relative(build_grading_graph(r, enumerate_primitive_bigons(r)))
    assert t.component == (0, 1)


def test_relative_10_161_matches_table_up_to_shift():
    t = relative_gradings(R_10_161).table
    target = [-2, -3, -2, -1, 0, 0, 1, 2, 3, 2, 1, 0, -1]
    c = target[0] - t.F[0]
    assert [f + c for f in t.F] == target


def test_potentials_agree_with_relaxation_oracle():
    for r in (R_10_161, R_DPLUS):
        g = build_grading_graph(r, enumerate_primitive_bigons(r))
        t = solve_relative(g)
        for attr, key in (("F", "dF"), ("M", "dM"), ("w", "dw")):
            oracle = hand_potentials(g.size, [(e.source, e.target, getattr(e, key)) for e in g.edges])
            assert list(getattr(t, attr)) == oracle


def test_inconsistent_cycle_is_reported():
    r = parse_relator("XyXYxY")
    g = build_grading_graph(r, enumerate_primitive_bigons(r))
    e = g.edges[0]
    bad = type(e)(e.source, e.target, e.dF + 2, e.dM, e.dw, e.bigon, e.basepoints)
    twisted = GradingGraph(g.size, g.edges + (bad,))
    with pytest.raises(InconsistentGradingError):
        solve_relative(twisted)


@pytest.mark.parametrize("values, shift", [([0, 1, 2], -1), ([0, 0, 1, 1, 2], -2), ([5], -5)])
def test_alexander_shift_examples(values, shift):
    assert alexander_shift(values) == shift
    assert brute_shift(values) == [shift]


def test_alexander_shift_failures():
    with pytest.raises(NormalizationError):
        alexander_shift([0, 1, 1, 2, 3])
    with pytest.raises(NormalizationError):
        alexander_shift([0, 0, 3, 3])  # every shift works: ambiguous


@given(st.lists(st.integers(-8, 8), min_size=1, max_size=12))
def test_alexander_shift_agrees_with_brute_force(values):
    candidates = brute_shift(values)
    if len(candidates) == 1:
        c = alexander_shift(values)
        assert c == candidates[0]
        assert is_mod2_symmetric([v + c for v in values])
    else:
        with pytest.raises(NormalizationError):
            alexander_shift(values)


def test_normalize_10_161():
    t = relative_gradings(R_10_161).table
    c = normalize_alexander(t, 0)
    assert list(t.shifted(0, dF=c).F) == [-2, -3, -2, -1, 0, 0, 1, 2, 3, 2, 1, 0, -1]


def test_reduction_10_161():
    t = relative_gradings(R_10_161).table
    red = reduce_relator(R_10_161, t.w, t.component)
    assert red.survivors == (2,)
    assert any(_same_cyclic(s, "X₂ Ȳ Ȳ Y Y Ȳ") for s in red.trace())
    assert len(red.steps) <= R_10_161.x_letter_count


def test_reduction_d_plus():
    t = relative_gradings(R_DPLUS).table
    red = reduce_relator(R_DPLUS, t.w, t.component)
    assert red.survivors == (25,)
    assert any(_same_cyclic(s, "X₁ Ȳ Y X̄₈ Ȳ Y X₂₅") for s in red.trace())
    assert _same_cyclic(str(red), "Ȳ Y X₂₅")


def test_reduction_stall():
    t = relative_gradings(R_STALL).table
    with pytest.raises(ReductionStallError) as info:
        reduce_relator(R_STALL, t.w, t.component)
    assert info.value.survivors == (2, 3, 4)
    assert _same_cyclic(info.value.word, "X₂ X₃ Y X̄₄ Ȳ")
    # the stated reason: w(x4) - w(x3) = w(x4) - w(x2) = 1
    assert t.w[3] - t.w[2] == t.w[3] - t.w[1] == 1


def test_reduction_random_ties_agree():
    for r in (R_10_161, R_DPLUS):
        rel = relative_gradings(r)
        t = rel.table
        base = t.M[reduce_relator(r, t.w, t.component).survivors[0] - 1]
        for seed in range(40):
            red = reduce_relator(r, t.w, t.component, rng=random.Random(seed))
            assert t.M[red.survivors[0] - 1] == base


def test_absolute_maslov_pins_survivor():
    a = absolute_gradings(relative_gradings(R_10_161))
    assert list(a.table.M) == [0, 0, 1, 1, 2, 2, 3, 5, 6, 4, 3, 2, 1]
    assert a.table.M[1] == 0


def test_absolute_maslov_singleton():
    t = solve_relative(GradingGraph(1, ()))
    assert absolute_maslov(t.shifted(0, dM=5), [1]).M == (0,)


def test_d_plus_maslov_at_survivor():
    a = absolute_gradings(relative_gradings(R_DPLUS))
    assert a.table.M[24] == 0


def test_wrap_bound_escalation_warns():
    # start from a bound too small to see the wrapping bigon of the trefoil
    rel = relative_gradings(parse_relator("XyXYxY"), wrap_bound=0)
    assert rel.table.component_count == 1
    assert any("wrap bound raised" in w for w in rel.warnings)


def test_reduction_fewest_x_pool_agrees_on_corpus_knots():
    for r in (R_10_161, R_DPLUS):
        t = relative_gradings(r).table
        base = t.M[reduce_relator(r, t.w, t.component).survivors[0] - 1]
        for seed in range(40):
            red = reduce_relator(r, t.w, t.component, rng=random.Random(seed), pool="fewest-x")
            assert t.M[red.survivors[0] - 1] == base


def test_reduction_rejects_unknown_pool():
    t = relative_gradings(R_10_161).table
    with pytest.raises(ValueError):
        reduce_relator(R_10_161, t.w, t.component, rng=random.Random(0), pool="any")
