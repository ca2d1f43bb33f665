from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings

import golden
from conftest import diagrams
from gl11weight import weights
from gl11weight.diagrams import (
    CROSSING, EMPTY, THETA, ChordDiagram, eight_term_templates, enumerate_diagrams,
    four_term_instances, parse,
)
from gl11weight.poly import Y, parse as P
from gl11weight.weights import (
    DeframingError, coefficient_checks, deframe_by_psi, deframe_by_substitution, eval_sum,
    eval_weight, eval_weight_multiplicative, eval_weight_with_pivot, psi_sum,
)

TRIPLE = ChordDiagram([(0, 6), (2, 8), (4, 10)])


def upto(n):
    return [d for k in range(n + 1) for d in enumerate_diagrams(k)]


@pytest.mark.parametrize("d, want", [
    (EMPTY, "1"),
    (THETA, "c"),
    (CROSSING, "c^2 - y"),
    (TRIPLE, "c^3 - 3 c y"),
    (ChordDiagram([(1, 5), (7, 11), (2, 10), (4, 8)]), "c^4 - 4 c^2 y"),
    (ChordDiagram([(1, 3), (2, 5), (4, 7), (6, 9), (8, 10)]), "c^5 - 4 c^3 y + 3 c y^2"),
])
def test_eval_examples(d, want):
    assert eval_weight(d) == P(want)


@pytest.mark.parametrize("text, want", golden.ALL)
def test_reference_values(text, want):
    assert eval_weight(parse(text)) == P(want)


def test_reference_order5_covers_every_class():
    got = {parse(t).canonical() for t, _ in golden.ORDER_5}
    assert got == set(enumerate_diagrams(5, indecomposable=True))


def test_multiplicative_examples():
    assert eval_weight_multiplicative(ChordDiagram([(0, 1), (2, 3)])) == P("c^2")
    assert eval_weight_multiplicative(ChordDiagram([(1, 11), (3, 7), (5, 9)])) == P("c^3 - c y")
    assert eval_weight_multiplicative(TRIPLE) == eval_weight(TRIPLE)


@pytest.mark.parametrize("d", upto(5))
def test_multiplicative_and_pivot_free(d):
    w = eval_weight(d)
    assert eval_weight_multiplicative(d) == w
    for a in d.chords:
        assert eval_weight_with_pivot(d, a) == w


def test_deframing_examples():
    assert deframe_by_substitution(CROSSING) == -Y
    assert deframe_by_substitution(ChordDiagram([(0, 1), (2, 4), (3, 5)])).is_zero()
    assert deframe_by_substitution(parse("0-3,2-5,4-7,6-9")) == Y * Y
    assert psi_sum(THETA).is_zero()
    assert psi_sum(CROSSING) == -Y
    assert psi_sum(TRIPLE).is_zero()


def test_psi_sum_intermediate_terms_are_fractional():
    # at order 2 the k = 2 term carries 1/2! before it combines with s^2
    from gl11weight.diagrams import DiagramSum, s_operator
    level = s_operator(s_operator(DiagramSum([(CROSSING, 1)])))
    assert eval_sum(level) * Fraction(1, 2) == P("1")


@pytest.mark.parametrize("d", upto(5))
def test_deframing_routes_agree(d):
    sub = deframe_by_substitution(d)
    assert psi_sum(d) == sub
    assert deframe_by_psi(d) == sub
    if d.has_isolated_chord():
        assert sub.is_zero()


def test_deframe_by_psi_flags_a_bad_value(monkeypatch):
    monkeypatch.setattr(weights, "deframe_by_substitution", lambda d: Y)
    with pytest.raises(DeframingError):
        weights.deframe_by_psi(CROSSING)


@pytest.mark.parametrize("d, want", [
    (CROSSING, (1, -1)),
    (TRIPLE, (1, -3)),
    (parse("2-6,4-10,0-8"), (1, -2)),
])
def test_coefficient_examples(d, want):
    assert coefficient_checks(d) == want


@pytest.mark.parametrize("d", upto(6))
def test_structure(d):
    w = eval_weight(d)
    assert w.is_homogeneous(d.n)
    lead, sub = coefficient_checks(d)
    assert lead == 1
    assert sub == -d.crossing_count()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_four_term(n):
    for s in four_term_instances(n):
        assert eval_sum(s).is_zero(), s


def test_eight_term_no_hidden():
    for r, s in eight_term_templates():
        assert eval_sum(r) == Y * eval_sum(s)
        assert eval_sum(r).is_zero()


def test_derivative_identity():
    from gl11weight.diagrams import s_operator
    for d in upto(5):
        assert eval_sum(s_operator(d)) == eval_weight(d).ddc()


def test_mirror_symmetry_through_order_6():
    for d in upto(6):
        assert eval_weight(d.mirror()) == eval_weight(d)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_n=6))
def test_rotation_does_not_matter(d):
    assert eval_weight(d.rotate(1)) == eval_weight(d)


def test_cache_matches_fresh_computation():
    sample = upto(5)
    before = {d: eval_weight(d) for d in sample}
    weights.clear_cache()
    assert weights.cache_size() == 0
    assert {d: eval_weight(d) for d in sample} == before
    assert weights.cache_size() > 0


def test_cache_under_threads():
    ds = enumerate_diagrams(6, indecomposable=True)
    expected = [eval_weight(d) for d in ds]
    weights.clear_cache()
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(eval_weight, ds))
    assert got == expected
