"""The sequent rules of the two calculi, readable in both directions:
backward as an instance enumerator for proof search and forward as a
step checker for proof validation.

CK is the single-succedent calculus (every sequent has exactly one
succedent formula, rule <>L handles diamonds); WK allows the empty
succedent and replaces <>L by <>L', whose premise succedent is the
diamond-stripped succedent of the conclusion.  Weakening, contraction
and cut are not rules here; they are admissible and only surface as
provability-level checks in the search module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, NamedTuple

from .formula import BOT, And, Bot, Box, Dia, Formula, Imp, Or, Var
from .render import render_sequent_latex, render_sequent_text, sequent_to_json
from .sequent import FMultiset, Sequent, box_inverse, dia_inverse


class LogicId(Enum):
    CK = "ck"
    WK = "wk"


class RuleId(Enum):
    BOT_L = "botL"
    ID_P = "IdP"
    AND_L = "&L"
    AND_R = "&R"
    OR_L = "|L"
    OR_R1 = "|R1"
    OR_R2 = "|R2"
    IMP_R = "->R"
    AND_IMP_L = "&->L"
    OR_IMP_L = "|->L"
    ATOM_IMP_L = "p->L"
    IMP_IMP_L = "->->L"
    BOX_R = "[]R"
    BOX_IMP_L = "[]->L"
    DIA_IMP_L = "<>->L"
    DIA_L = "<>L"
    DIA_L_W = "<>L'"


class RuleInstance(NamedTuple):
    rule: RuleId
    premises: tuple[Sequent, ...]
    principal: tuple[Formula, ...]


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    rule: RuleId
    principal: tuple[Formula, ...]
    premises: tuple["ProofTree", ...]


def respects_regime(s: Sequent, logic: LogicId) -> bool:
    """CK sequents carry exactly one succedent formula; WK at most one."""
    return s.succ is not None or logic is LogicId.WK


def applicable_instances(s: Sequent, logic: LogicId) -> list[RuleInstance]:
    """Every way a rule of the logic can conclude s, one instance per
    choice of principal occurrence(s), in the fixed search order:
    zero-premise rules, then the single-premise invertible left rules,
    then the remaining rules."""
    gamma = s.ante
    delta = s.succ
    out: list[RuleInstance] = []

    if BOT in gamma:
        out.append(RuleInstance(RuleId.BOT_L, (), (BOT,)))
    if delta is not None and type(delta) is Var and delta in gamma:
        out.append(RuleInstance(RuleId.ID_P, (), (delta,)))

    ands = []
    ors = []
    dias = []
    imps = []
    for c in gamma.distinct():
        t = type(c)
        if t is And:
            ands.append(c)
        elif t is Or:
            ors.append(c)
        elif t is Dia:
            dias.append(c)
        elif t is Imp:
            imps.append(c)

    for c in ands:
        rest = gamma.remove(c)
        out.append(
            RuleInstance(
                RuleId.AND_L, (Sequent(rest.add(c.lhs, c.rhs), delta),), (c,)
            )
        )
    for c in imps:
        head = c.lhs
        t = type(head)
        rest = gamma.remove(c)
        if t is And:
            prem = Sequent(rest.add(Imp(head.lhs, Imp(head.rhs, c.rhs))), delta)
            out.append(RuleInstance(RuleId.AND_IMP_L, (prem,), (c,)))
        elif t is Or:
            prem = Sequent(rest.add(Imp(head.lhs, c.rhs), Imp(head.rhs, c.rhs)), delta)
            out.append(RuleInstance(RuleId.OR_IMP_L, (prem,), (c,)))
        elif t is Var and head in rest:
            out.append(
                RuleInstance(
                    RuleId.ATOM_IMP_L, (Sequent(rest.add(c.rhs), delta),), (head, c)
                )
            )

    if delta is not None:
        td = type(delta)
        if td is And:
            out.append(
                RuleInstance(
                    RuleId.AND_R,
                    (Sequent(gamma, delta.lhs), Sequent(gamma, delta.rhs)),
                    (delta,),
                )
            )
    for c in ors:
        rest = gamma.remove(c)
        out.append(
            RuleInstance(
                RuleId.OR_L,
                (Sequent(rest.add(c.lhs), delta), Sequent(rest.add(c.rhs), delta)),
                (c,),
            )
        )
    if delta is not None:
        td = type(delta)
        if td is Or:
            out.append(
                RuleInstance(RuleId.OR_R1, (Sequent(gamma, delta.lhs),), (delta,))
            )
            out.append(
                RuleInstance(RuleId.OR_R2, (Sequent(gamma, delta.rhs),), (delta,))
            )
        elif td is Imp:
            out.append(
                RuleInstance(
                    RuleId.IMP_R, (Sequent(gamma.add(delta.lhs), delta.rhs),), (delta,)
                )
            )
    for c in imps:
        head = c.lhs
        t = type(head)
        rest = gamma.remove(c)
        if t is Imp:
            prem1 = Sequent(rest.add(Imp(head.rhs, c.rhs)), head)
            prem2 = Sequent(rest.add(c.rhs), delta)
            out.append(RuleInstance(RuleId.IMP_IMP_L, (prem1, prem2), (c,)))
    if delta is not None and type(delta) is Box:
        out.append(
            RuleInstance(
                RuleId.BOX_R, (Sequent(box_inverse(gamma), delta.body),), (delta,)
            )
        )
    for c in imps:
        head = c.lhs
        t = type(head)
        rest = gamma.remove(c)
        if t is Box:
            prem1 = Sequent(box_inverse(rest), head.body)
            prem2 = Sequent(rest.add(c.rhs), delta)
            out.append(RuleInstance(RuleId.BOX_IMP_L, (prem1, prem2), (c,)))
        elif t is Dia:
            for d in dias:
                if d is c:
                    continue
                core = rest.remove(d)
                prem1 = Sequent(box_inverse(core).add(d.body), head.body)
                prem2 = Sequent(rest.add(c.rhs), delta)
                out.append(RuleInstance(RuleId.DIA_IMP_L, (prem1, prem2), (d, c)))

    if logic is LogicId.CK:
        if delta is not None and type(delta) is Dia:
            for d in dias:
                rest = gamma.remove(d)
                prem = Sequent(box_inverse(rest).add(d.body), delta.body)
                out.append(RuleInstance(RuleId.DIA_L, (prem,), (d,)))
    else:
        for d in dias:
            rest = gamma.remove(d)
            prem = Sequent(box_inverse(rest).add(d.body), dia_inverse(delta))
            out.append(RuleInstance(RuleId.DIA_L_W, (prem,), (d,)))

    return out


def _expected_premises(
    inst: RuleInstance, conclusion: Sequent, logic: LogicId
) -> tuple[Sequent, ...] | None:
    """Forward reading of the rules: from a conclusion and a principal
    choice, reconstruct what the premises must be; None if the choice
    is not legal."""
    rule = inst.rule
    gamma = conclusion.ante
    delta = conclusion.succ
    pr = inst.principal

    if rule is RuleId.BOT_L:
        if pr == (BOT,) and BOT in gamma:
            return ()
        return None
    if rule is RuleId.ID_P:
        if (
            len(pr) == 1
            and type(pr[0]) is Var
            and delta is pr[0]
            and pr[0] in gamma
        ):
            return ()
        return None

    if rule in (RuleId.AND_R, RuleId.OR_R1, RuleId.OR_R2, RuleId.IMP_R, RuleId.BOX_R):
        if len(pr) != 1 or delta is not pr[0]:
            return None
        if rule is RuleId.AND_R:
            if type(delta) is not And:
                return None
            return (Sequent(gamma, delta.lhs), Sequent(gamma, delta.rhs))
        if rule is RuleId.OR_R1:
            if type(delta) is not Or:
                return None
            return (Sequent(gamma, delta.lhs),)
        if rule is RuleId.OR_R2:
            if type(delta) is not Or:
                return None
            return (Sequent(gamma, delta.rhs),)
        if rule is RuleId.IMP_R:
            if type(delta) is not Imp:
                return None
            return (Sequent(gamma.add(delta.lhs), delta.rhs),)
        if type(delta) is not Box:
            return None
        return (Sequent(box_inverse(gamma), delta.body),)

    if rule is RuleId.AND_L:
        if len(pr) != 1 or type(pr[0]) is not And or pr[0] not in gamma:
            return None
        c = pr[0]
        return (Sequent(gamma.remove(c).add(c.lhs, c.rhs), delta),)
    if rule is RuleId.OR_L:
        if len(pr) != 1 or type(pr[0]) is not Or or pr[0] not in gamma:
            return None
        c = pr[0]
        rest = gamma.remove(c)
        return (Sequent(rest.add(c.lhs), delta), Sequent(rest.add(c.rhs), delta))

    if rule in (
        RuleId.AND_IMP_L,
        RuleId.OR_IMP_L,
        RuleId.IMP_IMP_L,
        RuleId.BOX_IMP_L,
    ):
        if len(pr) != 1 or type(pr[0]) is not Imp or pr[0] not in gamma:
            return None
        c = pr[0]
        head = c.lhs
        rest = gamma.remove(c)
        if rule is RuleId.AND_IMP_L:
            if type(head) is not And:
                return None
            return (Sequent(rest.add(Imp(head.lhs, Imp(head.rhs, c.rhs))), delta),)
        if rule is RuleId.OR_IMP_L:
            if type(head) is not Or:
                return None
            return (
                Sequent(rest.add(Imp(head.lhs, c.rhs), Imp(head.rhs, c.rhs)), delta),
            )
        if rule is RuleId.IMP_IMP_L:
            if type(head) is not Imp:
                return None
            return (
                Sequent(rest.add(Imp(head.rhs, c.rhs)), head),
                Sequent(rest.add(c.rhs), delta),
            )
        if type(head) is not Box:
            return None
        return (
            Sequent(box_inverse(rest), head.body),
            Sequent(rest.add(c.rhs), delta),
        )

    if rule is RuleId.ATOM_IMP_L:
        if len(pr) != 2:
            return None
        atom, c = pr
        if type(atom) is not Var or type(c) is not Imp or c.lhs is not atom:
            return None
        if c not in gamma:
            return None
        rest = gamma.remove(c)
        if atom not in rest:
            return None
        return (Sequent(rest.add(c.rhs), delta),)

    if rule is RuleId.DIA_IMP_L:
        if len(pr) != 2:
            return None
        d, c = pr
        if type(d) is not Dia or type(c) is not Imp or type(c.lhs) is not Dia:
            return None
        if c not in gamma:
            return None
        rest = gamma.remove(c)
        if d not in rest:
            return None
        core = rest.remove(d)
        return (
            Sequent(box_inverse(core).add(d.body), c.lhs.body),
            Sequent(rest.add(c.rhs), delta),
        )

    if rule is RuleId.DIA_L:
        if logic is not LogicId.CK:
            return None
        if len(pr) != 1 or type(pr[0]) is not Dia or pr[0] not in gamma:
            return None
        if delta is None or type(delta) is not Dia:
            return None
        d = pr[0]
        return (Sequent(box_inverse(gamma.remove(d)).add(d.body), delta.body),)

    if rule is RuleId.DIA_L_W:
        if logic is not LogicId.WK:
            return None
        if len(pr) != 1 or type(pr[0]) is not Dia or pr[0] not in gamma:
            return None
        d = pr[0]
        return (
            Sequent(box_inverse(gamma.remove(d)).add(d.body), dia_inverse(delta)),
        )

    return None


def check_step(inst: RuleInstance, conclusion: Sequent, logic: LogicId) -> bool:
    """True iff the instance legally concludes the given sequent in the
    given logic, succedent regime included."""
    if not respects_regime(conclusion, logic):
        return False
    for p in inst.premises:
        if not respects_regime(p, logic):
            return False
    expected = _expected_premises(inst, conclusion, logic)
    return expected is not None and expected == inst.premises


def check_proof(t: ProofTree, logic: LogicId) -> bool:
    inst = RuleInstance(t.rule, tuple(p.conclusion for p in t.premises), t.principal)
    if not check_step(inst, t.conclusion, logic):
        return False
    return all(check_proof(p, logic) for p in t.premises)


def proof_to_json(t: ProofTree) -> Any:
    return {
        "rule": t.rule.value,
        "conclusion": sequent_to_json(t.conclusion),
        "premises": [proof_to_json(p) for p in t.premises],
    }


def proof_to_text(t: ProofTree, indent: int = 0) -> str:
    lines = [("  " * indent) + f"{t.rule.value}: {render_sequent_text(t.conclusion)}"]
    for p in t.premises:
        lines.append(proof_to_text(p, indent + 1))
    return "\n".join(lines)


_RULE_LATEX = {
    RuleId.BOT_L: r"\bot L",
    RuleId.ID_P: r"\mathrm{Id}_p",
    RuleId.AND_L: r"\wedge L",
    RuleId.AND_R: r"\wedge R",
    RuleId.OR_L: r"\vee L",
    RuleId.OR_R1: r"\vee R_1",
    RuleId.OR_R2: r"\vee R_2",
    RuleId.IMP_R: r"\to R",
    RuleId.AND_IMP_L: r"\wedge\to L",
    RuleId.OR_IMP_L: r"\vee\to L",
    RuleId.ATOM_IMP_L: r"p\to L",
    RuleId.IMP_IMP_L: r"\to\to L",
    RuleId.BOX_R: r"\Box R",
    RuleId.BOX_IMP_L: r"\Box\to L",
    RuleId.DIA_IMP_L: r"\Diamond\to L",
    RuleId.DIA_L: r"\Diamond L",
    RuleId.DIA_L_W: r"\Diamond L'",
}


def proof_to_latex(t: ProofTree) -> str:
    prems = " & ".join(proof_to_latex(p) for p in t.premises)
    label = _RULE_LATEX[t.rule]
    return (
        f"\\infer[{label}]{{{render_sequent_latex(t.conclusion)}}}{{{prems}}}"
    )
