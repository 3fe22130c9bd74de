from unittest import mock

import pytest

from ckwk import (
    BOT,
    LogicId,
    RuleId,
    SearchCache,
    Var,
    check_hilbert_axioms,
    check_structural,
    check_uniformity,
    enumerate_formulas,
    parse_formula,
    render_text,
)
from ckwk.oracle import EnumConfig, Report, _multisets, formulas_by_weight
from ckwk import calculus
from ckwk.calculus import applicable_instances

CK, WK = LogicId.CK, LogicId.WK


def counts_by_recurrence(n_vars: int, max_weight: int) -> list[int]:
    """How many formulas of each exact weight exist over n variables:
    atoms at weight 1; box/dia add 1; or/imp add 1 over a split; and
    adds 2."""
    c = [0] * (max_weight + 1)
    if max_weight >= 1:
        c[1] = n_vars + 1
    for w in range(2, max_weight + 1):
        total = 2 * c[w - 1]
        total += 2 * sum(c[a] * c[w - 1 - a] for a in range(1, w - 1))
        total += sum(c[a] * c[w - 2 - a] for a in range(1, w - 2))
        c[w] = total
    return c


@pytest.mark.parametrize("n_vars,max_weight", [(0, 5), (1, 5), (2, 5), (2, 6), (3, 4)])
def test_enumeration_counts_match_recurrence(n_vars, max_weight):
    alphabet = tuple("pqr"[:n_vars])
    levels = formulas_by_weight(alphabet, max_weight)
    assert [len(lv) for lv in levels] == counts_by_recurrence(n_vars, max_weight)


def test_enumeration_is_duplicate_free_and_ordered():
    cfg = EnumConfig(("p", "q"), 5, 2)
    forms = list(enumerate_formulas(cfg))
    assert len(forms) == len(set(forms)) == 930
    weights = [f.weight for f in forms]
    assert weights == sorted(weights)
    for a, b in zip(forms, forms[1:]):
        assert a.key < b.key or a.weight < b.weight


def test_enumeration_golden_prefixes():
    cfg = EnumConfig(("p",), 2, 1)
    assert [render_text(f) for f in enumerate_formulas(cfg)] == [
        "false", "p", "[]false", "[]p", "<>false", "<>p",
    ]
    empty = EnumConfig((), 3, 1)
    assert [render_text(f) for f in enumerate_formulas(empty)] == [
        "false", "[]false", "<>false", "false | false", "true",
        "[][]false", "[]<>false", "<>[]false", "<><>false",
    ]


def test_config_validation():
    with pytest.raises(ValueError):
        EnumConfig(("p",), 0, 1)
    with pytest.raises(ValueError):
        EnumConfig(("p",), 3, -1)
    EnumConfig((), 1, 0)


def test_context_pool_sizes_at_acceptance_bounds():
    forms = [f for lv in formulas_by_weight(("p", "q"), 5) for f in lv]
    assert len(_multisets(forms, 2, 5)) == 1669
    assert len(_multisets(forms, 3, 5)) == 1958
    assert len(_multisets(forms, 4, 5)) == 2033


def test_multisets_respect_both_bounds():
    forms = [f for lv in formulas_by_weight(("p",), 3) for f in lv]
    pools = _multisets(forms, 2, 3)
    assert len(pools) == len({m.items for m in pools})
    for m in pools:
        assert len(m.items) <= 2
        assert m.total_weight() <= 3


def test_report_serialization():
    r = Report(name="demo", instances=3, failures=["x |- y"], elapsed=0.5)
    assert not r.passed
    doc = r.to_json()
    assert doc == {
        "name": "demo",
        "instances": 3,
        "failures": ["x |- y"],
        "passed": False,
        "elapsed": 0.5,
    }


def test_unknown_rule_is_rejected():
    with pytest.raises(ValueError):
        check_structural("exchange", CK, EnumConfig(("p",), 2, 1))


@pytest.mark.parametrize("logic", [CK, WK])
def test_structural_rules_pass_at_small_bounds(logic):
    cfg = EnumConfig(("p", "q"), 3, 2)
    cache = SearchCache()
    for rule in ("wk", "id", "impL", "cntr", "cut"):
        report = check_structural(rule, logic, cfg, cache)
        assert report.passed, report.failures[:3]
        assert report.instances > 0


@pytest.mark.parametrize("logic", [CK, WK])
def test_hilbert_axioms_pass(logic):
    report = check_hilbert_axioms(logic)
    assert report.passed, report.failures[:3]
    assert report.instances == 1993


@pytest.mark.parametrize("logic", [CK, WK])
def test_uniformity_small(logic):
    cfg = EnumConfig(("p", "q"), 2, 1)
    for text in ("p", "p -> q", "<>p"):
        report = check_uniformity(parse_formula(text), "p", logic, cfg)
        assert report.passed, report.failures[:3]
        assert report.instances > 0


def test_uniformity_alphabet_excludes_the_variable():
    cfg = EnumConfig(("p",), 2, 1)
    report = check_uniformity(Var("p"), "p", CK, cfg)
    assert report.passed
    for line in report.failures:
        assert "p" not in line


def _without(rule_id):
    def crippled(s, logic):
        return [i for i in applicable_instances(s, logic) if i.rule is not rule_id]

    return crippled


def _patched(fn):
    return (
        mock.patch.object(calculus, "applicable_instances", fn),
        mock.patch("ckwk.search.applicable_instances", fn),
    )


def test_sweeps_catch_a_dropped_box_rule():
    cfg = EnumConfig(("p", "q"), 3, 2)
    p1, p2 = _patched(_without(RuleId.BOX_R))
    with p1, p2:
        assert not check_structural("id", CK, cfg, SearchCache()).passed
        assert not check_hilbert_axioms(CK).passed


def test_sweeps_catch_an_identity_that_refuses_weakening():
    def crippled(s, logic):
        return [
            i
            for i in applicable_instances(s, logic)
            if not (i.rule is RuleId.ID_P and len(s.ante.items) != 1)
        ]

    cfg = EnumConfig(("p", "q"), 3, 2)
    p1, p2 = _patched(crippled)
    with p1, p2:
        cache = SearchCache()
        assert not check_structural("wk", CK, cfg, cache).passed
        assert not check_structural("id", CK, cfg, cache).passed


def test_sweeps_catch_an_identity_that_needs_company():
    def crippled(s, logic):
        return [
            i
            for i in applicable_instances(s, logic)
            if not (i.rule is RuleId.ID_P and len(s.ante.items) < 2)
        ]

    cfg = EnumConfig(("p", "q"), 3, 2)
    p1, p2 = _patched(crippled)
    with p1, p2:
        cache = SearchCache()
        assert not check_structural("cut", CK, cfg, cache).passed
        assert not check_structural("cntr", CK, cfg, cache).passed


def test_hilbert_separates_the_logics_on_consistency():
    def no_n(s, logic):
        return applicable_instances(s, LogicId.CK)

    p1, p2 = _patched(no_n)
    with p1, p2:
        assert not check_hilbert_axioms(WK).passed
