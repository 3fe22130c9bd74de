"""Backward proof search.

Provability is decided by exhaustive backtracking over all applicable
rule instances, memoized on canonical sequents.  Every premise of every
rule is strictly smaller in the sequent order, so the recursion needs
no cycle detection and refusal is definitive.  Negative results are
cached too.  The cache stores bare outcomes; proof trees are
reconstructed on demand by re-walking the instance list, which returns
the same first-found proof the naive search would.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .calculus import (
    LogicId,
    ProofTree,
    applicable_instances,
    check_proof,
    respects_regime,
)
from .formula import BOT, TRUE, And, Bot, Box, Dia, Formula, Imp, Or, Var
from .sequent import FMultiset, Sequent

sys.setrecursionlimit(max(sys.getrecursionlimit(), 30000))


@dataclass(frozen=True)
class Decision:
    provable: bool
    proof: ProofTree | None

    def __post_init__(self) -> None:
        assert (self.proof is not None) == self.provable


class SearchCache:
    """Memo of search outcomes, one table per logic, keyed by canonical
    sequent.  Entries record provability only; lookup rebuilds the
    proof for provable sequents."""

    __slots__ = ("_tables",)

    def __init__(self) -> None:
        self._tables: dict[LogicId, dict] = {LogicId.CK: {}, LogicId.WK: {}}

    def table(self, logic: LogicId) -> dict:
        return self._tables[logic]

    def lookup(self, s: Sequent, logic: LogicId) -> Decision | None:
        known = self._tables[logic]
        v = known.get((s.ante.items, s.succ))
        if v is None:
            return None
        if not v:
            return Decision(False, None)
        return Decision(True, _reconstruct(s, logic, known))

    def __len__(self) -> int:
        return sum(len(t) for t in self._tables.values())

    def clear(self) -> None:
        for t in self._tables.values():
            t.clear()


def _require_regime(s: Sequent, logic: LogicId) -> None:
    if not respects_regime(s, logic):
        raise ValueError(f"empty succedent is not a {logic.value} sequent: {s!r}")


def _search(s: Sequent, logic: LogicId, known: dict) -> bool:
    key = (s.ante.items, s.succ)
    v = known.get(key)
    if v is not None:
        return v
    result = False
    for inst in applicable_instances(s, logic):
        for p in inst.premises:
            if not _search(p, logic, known):
                break
        else:
            result = True
            break
    known[key] = result
    return result


def _reconstruct(s: Sequent, logic: LogicId, known: dict) -> ProofTree:
    for inst in applicable_instances(s, logic):
        if all(_search(p, logic, known) for p in inst.premises):
            return ProofTree(
                s,
                inst.rule,
                inst.principal,
                tuple(_reconstruct(p, logic, known) for p in inst.premises),
            )
    raise AssertionError(f"no rule closes a sequent cached as provable: {s!r}")


def provable(s: Sequent, logic: LogicId, cache: SearchCache | None = None) -> bool:
    _require_regime(s, logic)
    known = (SearchCache() if cache is None else cache).table(logic)
    return _search(s, logic, known)


def decide(s: Sequent, logic: LogicId, cache: SearchCache | None = None) -> Decision:
    _require_regime(s, logic)
    known = (SearchCache() if cache is None else cache).table(logic)
    if not _search(s, logic, known):
        return Decision(False, None)
    proof = _reconstruct(s, logic, known)
    assert check_proof(proof, logic)
    return Decision(True, proof)


def admissible_cut_holds(
    gamma: FMultiset,
    phi: Formula,
    delta: Formula | None,
    logic: LogicId,
    cache: SearchCache | None = None,
) -> bool:
    """The cut implication for one instance: if Γ⇒φ and φ,Γ⇒Δ are both
    provable then so is Γ⇒Δ."""
    cache = SearchCache() if cache is None else cache
    if not provable(Sequent(gamma, phi), logic, cache):
        return True
    if not provable(Sequent(gamma.add(phi), delta), logic, cache):
        return True
    return provable(Sequent(gamma, delta), logic, cache)


_SHRINK_CAP = 80


def _shrunk_node(phi: Formula, lhs: Formula | None, rhs: Formula | None) -> Formula:
    """Rebuild one connective over already-shrunk children, applying
    unit laws on the spot."""
    t = type(phi)
    if t is And:
        if lhs is BOT or rhs is BOT:
            return BOT
        if lhs is TRUE:
            return rhs
        if rhs is TRUE:
            return lhs
        return And(lhs, rhs)
    if t is Or:
        if lhs is TRUE or rhs is TRUE:
            return TRUE
        if lhs is BOT:
            return rhs
        if rhs is BOT:
            return lhs
        return Or(lhs, rhs)
    if t is Imp:
        if rhs is TRUE:
            return TRUE
        if lhs is TRUE:
            return rhs
        return Imp(lhs, rhs)
    if t is Box:
        return Box(lhs)
    return Dia(lhs)


def _equiv_shrink(phi: Formula, logic: LogicId, cache: SearchCache, memo: dict) -> Formula:
    """Equivalence-preserving compression for heavily shared formulas.

    Works bottom-up over the term DAG; every replacement is certified by
    the prover right here (collapse to true or false, or to one child),
    so the result is provably equivalent to the input by construction.
    Nodes above the size cap only get the unit laws; the point is to
    make giant machine-built formulas searchable, not to normalize."""
    got = memo.get(phi)
    if got is not None:
        return got
    t = type(phi)
    if t in (Bot, Var):
        memo[phi] = phi
        return phi
    if t in (And, Or, Imp):
        lhs = _equiv_shrink(phi.lhs, logic, cache, memo)
        rhs = _equiv_shrink(phi.rhs, logic, cache, memo)
    else:
        lhs = _equiv_shrink(phi.body, logic, cache, memo)
        rhs = None
    out = _shrunk_node(phi, lhs, rhs)
    if type(out) not in (Bot, Var) and out is not TRUE and out.weight <= _SHRINK_CAP:
        candidates: list[Formula] = [TRUE, BOT]
        if type(out) in (And, Or, Imp):
            candidates += [out.lhs, out.rhs]
        elif type(out) in (Box, Dia):
            candidates.append(out.body)
        for cand in sorted(candidates, key=lambda f: f.key):
            if cand.weight >= out.weight:
                continue
            if provable(Sequent(FMultiset((out,)), cand), logic, cache) and provable(
                Sequent(FMultiset((cand,)), out), logic, cache
            ):
                out = cand
                break
    memo[phi] = out
    return out


def provably_equivalent(
    a: Formula, b: Formula, logic: LogicId, cache: SearchCache | None = None
) -> bool:
    """Decide whether a and b imply each other in the logic.  Both
    sides are first compressed by certified rewriting, which keeps the
    check tractable on machine-built formulas whose trees are huge but
    whose DAGs are small."""
    cache = SearchCache() if cache is None else cache
    if a is b:
        return True
    memo: dict = {}
    a2 = _equiv_shrink(a, logic, cache, memo)
    b2 = _equiv_shrink(b, logic, cache, memo)
    if a2 is b2:
        return True
    return provable(Sequent(FMultiset((a2,)), b2), logic, cache) and provable(
        Sequent(FMultiset((b2,)), a2), logic, cache
    )
