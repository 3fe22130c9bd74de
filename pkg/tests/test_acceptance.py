"""Acceptance suite: ten end-to-end checks covering the calculi, the
prover, the admissibility sweeps, and the interpolant pipeline at
fixed exhaustive bounds.

Each test prints one scorecard line on the live terminal, outside
pytest's capture, so a full run reads as a ten-line summary. Every
logical check is exact: a single counterexample fails its criterion.
The two heavyweight sweeps (criteria 3 and 7) run for a few minutes
combined; everything else finishes in seconds.
"""

from __future__ import annotations

import time
from itertools import combinations_with_replacement

import pytest

from ckwk import (
    EnumConfig,
    FMultiset,
    LogicId,
    QuantCache,
    SearchCache,
    Sequent,
    a_quant,
    applicable_instances,
    check_hilbert_axioms,
    check_proof,
    check_structural,
    check_uniformity,
    decide,
    enumerate_formulas,
    exists_via_forall,
    free_vars,
    interpolate_exists,
    interpolate_forall,
    parse_formula,
    parse_sequent,
    provable,
    provably_equivalent,
    render_text,
    seq_less,
)

LOGICS = (LogicId.CK, LogicId.WK)
STRUCTURAL_RULES = ("wk", "id", "impL", "cntr", "cut")


def _scorecard(capsys, label: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"acceptance {label}: {'pass' if ok else 'FAIL'} ({detail})", flush=True)


def _formulas(max_weight: int) -> list:
    return list(enumerate_formulas(EnumConfig(("p", "q"), max_weight, 0)))


def test_criterion_01_axiom_suite(capsys):
    t0 = time.monotonic()
    reports = [check_hilbert_axioms(logic) for logic in LOGICS]
    elapsed = time.monotonic() - t0
    failures = [f"{r.name}: {f}" for r in reports for f in r.failures]
    instances = sum(r.instances for r in reports)
    ok = not failures and elapsed < 10.0
    _scorecard(
        capsys,
        "1 axiom-suite",
        ok,
        f"{instances} instances, {len(failures)} failures, {elapsed:.2f}s",
    )
    assert failures == []
    assert elapsed < 10.0


def test_criterion_02_diamond_bottom_derivation(capsys):
    t0 = time.monotonic()
    goal = parse_sequent("|- <>false -> false")
    result = decide(goal, LogicId.WK)

    def trace(t):
        yield t.rule.value
        for prem in t.premises:
            yield from trace(prem)

    rules = list(trace(result.proof)) if result.provable else []
    checked = result.provable and check_proof(result.proof, LogicId.WK)
    ck_rejects = not provable(goal, LogicId.CK)
    elapsed = time.monotonic() - t0
    ok = (
        result.provable
        and rules == ["->R", "<>L'", "botL"]
        and checked
        and ck_rejects
        and elapsed < 1.0
    )
    _scorecard(capsys, "2 diamond-bottom", ok, f"rules {rules}, {elapsed:.3f}s")
    assert result.provable
    assert rules == ["->R", "<>L'", "botL"]
    assert checked
    assert ck_rejects
    assert elapsed < 1.0


def test_criterion_03_structural_admissibility(capsys):
    cfg = EnumConfig(("p", "q"), max_weight=5, max_context=2)
    failures: list[str] = []
    instances = 0
    t0 = time.monotonic()
    for logic in LOGICS:
        cache = SearchCache()
        for rule in STRUCTURAL_RULES:
            report = check_structural(rule, logic, cfg, cache)
            instances += report.instances
            failures.extend(f"{logic.value}:{rule}: {f}" for f in report.failures)
    elapsed = time.monotonic() - t0
    ok = not failures
    _scorecard(
        capsys,
        "3 structural-admissibility",
        ok,
        f"{instances} instances, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert failures == []


def test_criterion_04_strong_termination(capsys):
    pool = _formulas(4)
    target = 10_000
    bad: list[str] = []
    counts = []
    t0 = time.monotonic()
    for logic in LOGICS:
        succs = list(pool)
        if logic is LogicId.WK:
            succs.append(None)
        count = 0
        for size in (0, 1, 2):
            if count >= target:
                break
            for ante in combinations_with_replacement(pool, size):
                if count >= target:
                    break
                gamma = FMultiset(ante)
                for succ in succs:
                    s = Sequent(gamma, succ)
                    for inst in applicable_instances(s, logic):
                        count += 1
                        for prem in inst.premises:
                            if not seq_less(prem, s):
                                bad.append(f"{logic.value}:{inst.rule.value}: {prem} not below {s}")
        counts.append(count)
    elapsed = time.monotonic() - t0
    ok = not bad and all(c >= target for c in counts) and elapsed < 30.0
    _scorecard(
        capsys,
        "4 strong-termination",
        ok,
        f"{sum(counts)} instances, {len(bad)} failures, {elapsed:.1f}s",
    )
    assert bad == []
    assert all(c >= target for c in counts)
    assert elapsed < 30.0


@pytest.fixture(scope="module")
def weight_six_interpolants():
    """Existential and universal interpolants for every formula of
    weight at most 6 over {p, q}, eliminating p, in both logics."""
    forms = _formulas(6)
    table = {}
    for logic in LOGICS:
        qcache = QuantCache()
        for phi in forms:
            ep = interpolate_exists(phi, "p", logic, qcache)
            ap = a_quant(Sequent(FMultiset(), phi), "p", logic, qcache)
            table[(logic, phi)] = (ep, ap)
    return forms, table


def test_criterion_05_interpolant_implications(capsys, weight_six_interpolants):
    forms, table = weight_six_interpolants
    failures: list[str] = []
    checks = 0
    t0 = time.monotonic()
    for logic in LOGICS:
        cache = SearchCache()
        for phi in forms:
            ep, ap = table[(logic, phi)]
            checks += 3
            if not provable(Sequent(FMultiset((phi,)), ep), logic, cache):
                failures.append(f"{logic.value}: {phi} does not imply exists {ep}")
            if not provable(Sequent(FMultiset((phi, ap)), phi), logic, cache):
                failures.append(f"{logic.value}: {phi}, forall {ap} does not imply {phi}")
            if not provable(Sequent(FMultiset((ap,)), phi), logic, cache):
                failures.append(f"{logic.value}: forall {ap} does not imply {phi}")
    elapsed = time.monotonic() - t0
    ok = not failures
    _scorecard(
        capsys,
        "5 interpolant-implications",
        ok,
        f"{checks} checks over {len(forms)} formulas, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert failures == []


def test_criterion_06_interpolant_freeness(capsys, weight_six_interpolants):
    forms, table = weight_six_interpolants
    failures: list[str] = []
    checks = 0
    for logic in LOGICS:
        for phi in forms:
            for witness in table[(logic, phi)]:
                checks += 1
                if "p" in free_vars(witness):
                    failures.append(f"{logic.value}: {witness} mentions p")
    ok = not failures
    _scorecard(
        capsys,
        "6 interpolant-freeness",
        ok,
        f"{checks} interpolants, {len(failures)} failures",
    )
    assert failures == []


def test_criterion_07_uniformity(capsys):
    cfg = EnumConfig(("p", "q"), max_weight=3, max_context=2)
    forms = _formulas(4)
    failures: list[str] = []
    instances = 0
    t0 = time.monotonic()
    for logic in LOGICS:
        cache = SearchCache()
        qcache = QuantCache()
        for phi in forms:
            report = check_uniformity(phi, "p", logic, cfg, cache, qcache)
            instances += report.instances
            failures.extend(f"{logic.value}: {phi}: {f}" for f in report.failures)
    elapsed = time.monotonic() - t0
    ok = not failures
    _scorecard(
        capsys,
        "7 uniformity",
        ok,
        f"{instances} instances over {2 * len(forms)} runs, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert failures == []


def test_criterion_08_exists_forall_duality(capsys):
    forms = _formulas(4)
    failures: list[str] = []
    t0 = time.monotonic()
    for logic in LOGICS:
        cache = SearchCache()
        qcache = QuantCache()
        for phi in forms:
            direct = interpolate_exists(phi, "p", logic, qcache)
            encoded = exists_via_forall(phi, "p", logic)
            if not provably_equivalent(direct, encoded, logic, cache):
                failures.append(f"{logic.value}: {phi}: {direct} vs {encoded}")
    elapsed = time.monotonic() - t0
    ok = not failures
    _scorecard(
        capsys,
        "8 exists-forall-duality",
        ok,
        f"{2 * len(forms)} pairs, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert failures == []


def test_criterion_09_golden_interpolants(capsys):
    fixtures = [
        (interpolate_forall, "p", "false"),
        (interpolate_forall, "q", "q"),
        (interpolate_forall, "q -> p", "(q & []true) -> false"),
        (interpolate_exists, "p", "true & []true"),
    ]
    failures = []
    for fn, text, expected in fixtures:
        got = render_text(fn(parse_formula(text), "p", LogicId.CK))
        if got != expected:
            failures.append(f"{fn.__name__}({text}): {got!r} != {expected!r}")
    ok = not failures
    _scorecard(
        capsys,
        "9 golden-interpolants",
        ok,
        f"{len(fixtures)} fixtures, {len(failures)} failures",
    )
    assert failures == []


def test_criterion_10_cli_determinism(capsys):
    from test_cli import FIXTURES
    from ckwk.cli import run

    failures = []
    for argv, _, _, _ in FIXTURES:
        first_code = run(argv)
        first = capsys.readouterr()
        second_code = run(argv)
        second = capsys.readouterr()
        if (first_code, first.out, first.err) != (second_code, second.out, second.err):
            failures.append(" ".join(argv))
    ok = not failures
    _scorecard(
        capsys,
        "10 cli-determinism",
        ok,
        f"{len(FIXTURES)} fixtures run twice, {len(failures)} mismatches",
    )
    assert failures == []
