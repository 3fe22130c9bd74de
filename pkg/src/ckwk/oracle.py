"""Brute-force enumeration oracles.

These certify the metatheory at desk scale: generalized identity,
weakening, implication-left, contraction and cut admissibility, the
Hilbert axiom suite, and the uniformity property of interpolants.
Everything is an exhaustive sweep over a bounded instance space, so a
reported failure is a genuine counterexample and a pass is evidence.

The admissibility sweeps share one idea: decide every sequent in a
bounded pool (antecedents up to the configured size with total weight
up to the configured bound, succedents up to the bound), then read
each admissible rule as an implication between pool members.  Rules
whose interesting instances outgrow the pool (a contracted or cut
formula at full weight needs twice its weight in the premise) get an
extra diagonal sweep pairing every full-weight principal formula with
small contexts and succedents.  Full cross products of independent
full-weight components are combinatorially out of reach, which is why
the budgeted pool, not a per-slot bound, defines the instance space.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any, Iterator

from .calculus import LogicId
from .formula import BOT, And, Box, Dia, Formula, Imp, Or, Var, neg
from .render import render_sequent_text, render_text
from .search import SearchCache, provable
from .sequent import EMPTY, FMultiset, Sequent
from .uip import QuantCache, a_quant, e_quant


@dataclass(frozen=True)
class EnumConfig:
    alphabet: tuple[str, ...]
    max_weight: int
    max_context: int

    def __post_init__(self) -> None:
        if self.max_weight < 1:
            raise ValueError("max_weight must be at least 1")
        if self.max_context < 0:
            raise ValueError("max_context must not be negative")


@dataclass
class Report:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "instances": self.instances,
            "failures": list(self.failures),
            "passed": self.passed,
            "elapsed": self.elapsed,
        }


def formulas_by_weight(alphabet: tuple[str, ...], max_weight: int) -> list[list[Formula]]:
    """levels[w] = all formulas of weight exactly w, canonically ordered;
    levels[0] is empty padding."""
    atoms: list[Formula] = [BOT] + [Var(a) for a in sorted(alphabet)]
    levels: list[list[Formula]] = [[], atoms][: max_weight + 1]
    for w in range(2, max_weight + 1):
        level: list[Formula] = []
        for f in levels[w - 1]:
            level.append(Box(f))
            level.append(Dia(f))
        for wa in range(1, w - 1):
            for a in levels[wa]:
                for b in levels[w - 1 - wa]:
                    level.append(Or(a, b))
                    level.append(Imp(a, b))
        for wa in range(1, w - 2):
            for a in levels[wa]:
                for b in levels[w - 2 - wa]:
                    level.append(And(a, b))
        level.sort(key=lambda f: f.key)
        levels.append(level)
    while len(levels) < max_weight + 1:
        levels.append([])
    return levels


def enumerate_formulas(cfg: EnumConfig) -> Iterator[Formula]:
    """Every formula over the alphabet with weight up to the bound,
    exactly once, in weight-then-canonical order."""
    for level in formulas_by_weight(cfg.alphabet, cfg.max_weight):
        yield from level


def _multisets(
    pool: list[Formula], max_size: int, max_total_weight: int
) -> list[FMultiset]:
    """All multisets over the pool with at most max_size members and
    total weight at most max_total_weight, in a deterministic order."""
    out = [EMPTY]
    stack: list[tuple[int, tuple[Formula, ...], int]] = [(0, (), 0)]
    while stack:
        start, picked, wsum = stack.pop()
        for i in range(start, len(pool)):
            w = wsum + pool[i].weight
            if w > max_total_weight:
                continue
            items = picked + (pool[i],)
            out.append(FMultiset(items))
            if len(items) < max_size:
                stack.append((i, items, w))
    out.sort(key=lambda m: tuple(f.key for f in m.items))
    return out


def _succedents(pool: list[Formula], logic: LogicId) -> list[Formula | None]:
    succs: list[Formula | None] = list(pool)
    if logic is LogicId.WK:
        succs.append(None)
    return succs


def _proper_subs(items: tuple[Formula, ...]) -> list[tuple[Formula, ...]]:
    subs = {
        tuple(f for j, f in enumerate(items) if mask & (1 << j))
        for mask in range(1 << len(items))
    }
    subs.discard(items)
    return sorted(subs, key=lambda t: tuple(f.key for f in t))


def check_structural(
    rule: str,
    logic: LogicId,
    cfg: EnumConfig,
    cache: SearchCache | None = None,
) -> Report:
    """Exhaustive admissibility check for one of wk, id, impL, cntr,
    cut over the bounded instance space described in the module
    docstring."""
    if rule not in ("wk", "id", "impL", "cntr", "cut"):
        raise ValueError(f"unknown structural rule {rule!r}")
    t0 = time.monotonic()
    cache = SearchCache() if cache is None else cache
    report = Report(name=f"{rule}:{logic.value}")
    levels = formulas_by_weight(cfg.alphabet, cfg.max_weight)
    forms = [f for level in levels for f in level]
    small = [f for f in forms if f.weight <= 2]

    def prove(gamma: FMultiset, succ: Formula | None) -> bool:
        return provable(Sequent(gamma, succ), logic, cache)

    def fail(premises: list[Sequent], conclusion: Sequent) -> None:
        shown = " ; ".join(render_sequent_text(s) for s in premises)
        report.failures.append(
            f"{shown} does not yield {render_sequent_text(conclusion)}"
        )

    if rule == "id":
        ctxs = _multisets(forms, cfg.max_context, cfg.max_weight)
        for gamma in ctxs:
            for phi in forms:
                report.instances += 1
                if not prove(gamma.add(phi), phi):
                    fail([], Sequent(gamma.add(phi), phi))
        report.elapsed = time.monotonic() - t0
        return report

    pool = _multisets(forms, cfg.max_context + 1, cfg.max_weight)
    succs = _succedents(forms, logic)

    if rule == "wk":
        for ante in pool:
            subs = _proper_subs(ante.items)
            for succ in succs:
                if prove(ante, succ):
                    report.instances += len(subs)
                    continue
                for sub in subs:
                    report.instances += 1
                    if prove(FMultiset._from_sorted(sub), succ):
                        fail(
                            [Sequent(FMultiset._from_sorted(sub), succ)],
                            Sequent(ante, succ),
                        )
        report.elapsed = time.monotonic() - t0
        return report

    if rule == "impL":
        for ante in pool:
            imps = [c for c in ante.distinct() if type(c) is Imp]
            if not imps:
                continue
            for succ in succs:
                concl_ok = prove(ante, succ)
                for c in imps:
                    report.instances += 1
                    if concl_ok:
                        continue
                    rest = ante.remove(c)
                    if prove(rest, c.lhs) and prove(rest.add(c.rhs), succ):
                        fail(
                            [Sequent(rest, c.lhs), Sequent(rest.add(c.rhs), succ)],
                            Sequent(ante, succ),
                        )
        report.elapsed = time.monotonic() - t0
        return report

    if rule == "cntr":
        wide = _multisets(forms, cfg.max_context + 2, cfg.max_weight)
        for ante in wide:
            dups = [c for c in ante.distinct() if ante.count(c) >= 2]
            if not dups:
                continue
            for succ in succs:
                prem_ok = prove(ante, succ)
                for c in dups:
                    report.instances += 1
                    if prem_ok and not prove(ante.remove(c), succ):
                        fail([Sequent(ante, succ)], Sequent(ante.remove(c), succ))
        tiny = _multisets(small, cfg.max_context, 2)
        for psi in forms:
            for gamma in tiny:
                prem_ante = gamma.add(psi, psi)
                concl_ante = gamma.add(psi)
                for succ in _succedents(small, logic) + [psi]:
                    report.instances += 1
                    if prove(prem_ante, succ) and not prove(concl_ante, succ):
                        fail([Sequent(prem_ante, succ)], Sequent(concl_ante, succ))
        report.elapsed = time.monotonic() - t0
        return report

    for ante in pool:
        members = list(ante.distinct())
        if not members:
            continue
        for succ in succs:
            concl2_ok = prove(ante, succ)
            for c in members:
                report.instances += 1
                rest = ante.remove(c)
                if prove(rest, succ):
                    continue
                if concl2_ok and prove(rest, c):
                    fail(
                        [Sequent(rest, c), Sequent(ante, succ)],
                        Sequent(rest, succ),
                    )
    small_succs = _succedents(small, logic)
    ctxs = _multisets(forms, cfg.max_context, cfg.max_weight)
    for gamma in ctxs:
        for phi in forms:
            if not prove(gamma, phi):
                continue
            ext = gamma.add(phi)
            for succ in small_succs:
                report.instances += 1
                if prove(ext, succ) and not prove(gamma, succ):
                    fail(
                        [Sequent(gamma, phi), Sequent(ext, succ)],
                        Sequent(gamma, succ),
                    )
    report.elapsed = time.monotonic() - t0
    return report


def check_uniformity(
    phi: Formula,
    p: str,
    logic: LogicId,
    cfg: EnumConfig,
    cache: SearchCache | None = None,
    qcache: QuantCache | None = None,
) -> Report:
    """Uniformity of the interpolants of Γ = {phi}: every provable
    p-free extension Π, Γ ⇒ Δ must survive replacing Γ by its
    existential interpolant, both toward a p-free Δ and toward the
    universal interpolant of Γ ⇒ Δ.  Π and Δ range over the alphabet
    minus p."""
    t0 = time.monotonic()
    cache = SearchCache() if cache is None else cache
    qcache = QuantCache() if qcache is None else qcache
    report = Report(name=f"uniformity:{logic.value}:{p}:{render_text(phi)}")

    pfree = tuple(a for a in cfg.alphabet if a != p)
    pool = [f for level in formulas_by_weight(pfree, cfg.max_weight) for f in level]
    pis = _multisets(pool, cfg.max_context, cfg.max_context * cfg.max_weight)
    succs = _succedents(pool, logic)
    gamma = FMultiset((phi,))
    e_gamma = e_quant(gamma, p, logic, qcache)

    for succ in succs:
        a_gamma = a_quant(Sequent(gamma, succ), p, logic, qcache)
        for pi in pis:
            report.instances += 1
            if not provable(Sequent(pi.add(phi), succ), logic, cache):
                continue
            if not provable(Sequent(pi.add(e_gamma), succ), logic, cache):
                report.failures.append(
                    f"(a) {render_sequent_text(Sequent(pi.add(e_gamma), succ))}"
                )
            if not provable(Sequent(pi.add(e_gamma), a_gamma), logic, cache):
                report.failures.append(
                    f"(b) {render_sequent_text(Sequent(pi.add(e_gamma), a_gamma))}"
                )
    report.elapsed = time.monotonic() - t0
    return report


_AXIOM_SCHEMAS: list[tuple[str, int, Any]] = [
    ("A1", 2, lambda a, b: Imp(a, Imp(b, a))),
    ("A2", 3, lambda a, b, c: Imp(Imp(a, Imp(b, c)), Imp(Imp(a, b), Imp(a, c)))),
    ("A3", 2, lambda a, b: Imp(a, Or(a, b))),
    ("A4", 2, lambda a, b: Imp(b, Or(a, b))),
    ("A5", 3, lambda a, b, c: Imp(Imp(a, c), Imp(Imp(b, c), Imp(Or(a, b), c)))),
    ("A6", 2, lambda a, b: Imp(And(a, b), a)),
    ("A7", 2, lambda a, b: Imp(And(a, b), b)),
    ("A8", 3, lambda a, b, c: Imp(Imp(a, b), Imp(Imp(a, c), Imp(a, And(b, c))))),
    ("A9", 1, lambda a: Imp(BOT, a)),
    ("Kbox", 2, lambda a, b: Imp(Box(Imp(a, b)), Imp(Box(a), Box(b)))),
    ("Kdia", 2, lambda a, b: Imp(Box(Imp(a, b)), Imp(Dia(a), Dia(b)))),
]

AXIOM_N: Formula = neg(Dia(BOT))


def _axiom_instances() -> list[Formula]:
    p, q = Var("p"), Var("q")
    base = [p, q, Var("r"), And(p, q), Or(p, q), Imp(p, q), Box(p), Dia(p)]
    out = []
    for _, arity, build in _AXIOM_SCHEMAS:
        for args in itertools.product(base, repeat=arity):
            out.append(build(*args))
    return out


def check_hilbert_axioms(logic: LogicId, cache: SearchCache | None = None) -> Report:
    """All axiom-schema instances over p, q, r and one nesting of each
    connective must be provable; the consistency axiom ~<>false only
    in WK."""
    t0 = time.monotonic()
    cache = SearchCache() if cache is None else cache
    report = Report(name=f"hilbert:{logic.value}")
    for inst in _axiom_instances():
        report.instances += 1
        if not provable(Sequent(EMPTY, inst), logic, cache):
            report.failures.append(render_text(inst))
    report.instances += 1
    n_provable = provable(Sequent(EMPTY, AXIOM_N), logic, cache)
    if n_provable != (logic is LogicId.WK):
        report.failures.append(render_text(AXIOM_N))
    report.elapsed = time.monotonic() - t0
    return report
