"""Rendering formulas and sequents back to text, LaTeX and JSON.

The text renderer is the canonical output form: it never emits "~",
prints false -> false as "true", and parenthesises conservatively (the
left operand of "->" is wrapped unless it is atomic), so output always
re-parses to the same formula.
"""

from __future__ import annotations

from typing import Any

from .formula import BOT, TRUE, And, Bot, Box, Dia, Formula, Imp, Or, Var
from .sequent import FMultiset, Sequent

_LEVEL_IMP = 0
_LEVEL_OR = 1
_LEVEL_AND = 2
_LEVEL_ATOM = 3


def _text(phi: Formula, min_level: int) -> str:
    if phi is TRUE:
        return "true"
    if type(phi) is Bot:
        return "false"
    if type(phi) is Var:
        return phi.name
    if type(phi) is Box:
        return "[]" + _text(phi.body, _LEVEL_ATOM)
    if type(phi) is Dia:
        return "<>" + _text(phi.body, _LEVEL_ATOM)
    if type(phi) is And:
        s = _text(phi.lhs, _LEVEL_AND) + " & " + _text(phi.rhs, _LEVEL_ATOM)
        level = _LEVEL_AND
    elif type(phi) is Or:
        s = _text(phi.lhs, _LEVEL_OR) + " | " + _text(phi.rhs, _LEVEL_AND)
        level = _LEVEL_OR
    else:
        s = _text(phi.lhs, _LEVEL_ATOM) + " -> " + _text(phi.rhs, _LEVEL_IMP)
        level = _LEVEL_IMP
    if level < min_level:
        return "(" + s + ")"
    return s


def render_text(phi: Formula) -> str:
    return _text(phi, _LEVEL_IMP)


def _latex(phi: Formula, min_level: int) -> str:
    if phi is TRUE:
        return r"\top"
    if type(phi) is Bot:
        return r"\bot"
    if type(phi) is Var:
        return phi.name
    if type(phi) is Box:
        return r"\Box " + _latex(phi.body, _LEVEL_ATOM)
    if type(phi) is Dia:
        return r"\Diamond " + _latex(phi.body, _LEVEL_ATOM)
    if type(phi) is And:
        s = _latex(phi.lhs, _LEVEL_AND) + r" \wedge " + _latex(phi.rhs, _LEVEL_ATOM)
        level = _LEVEL_AND
    elif type(phi) is Or:
        s = _latex(phi.lhs, _LEVEL_OR) + r" \vee " + _latex(phi.rhs, _LEVEL_AND)
        level = _LEVEL_OR
    else:
        s = _latex(phi.lhs, _LEVEL_ATOM) + r" \to " + _latex(phi.rhs, _LEVEL_IMP)
        level = _LEVEL_IMP
    if level < min_level:
        return "(" + s + ")"
    return s


def render_latex(phi: Formula) -> str:
    return _latex(phi, _LEVEL_IMP)


def formula_to_json(phi: Formula) -> Any:
    if type(phi) is Bot:
        return {"bot": True}
    if type(phi) is Var:
        return {"var": phi.name}
    if type(phi) is And:
        return {"and": [formula_to_json(phi.lhs), formula_to_json(phi.rhs)]}
    if type(phi) is Or:
        return {"or": [formula_to_json(phi.lhs), formula_to_json(phi.rhs)]}
    if type(phi) is Imp:
        return {"imp": [formula_to_json(phi.lhs), formula_to_json(phi.rhs)]}
    if type(phi) is Box:
        return {"box": formula_to_json(phi.body)}
    return {"dia": formula_to_json(phi.body)}


def formula_from_json(obj: Any) -> Formula:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"not a formula object: {obj!r}")
    (tag, payload), = obj.items()
    if tag == "bot":
        if payload is not True:
            raise ValueError(f"bot payload must be true, got {payload!r}")
        return BOT
    if tag == "var":
        if not isinstance(payload, str):
            raise ValueError(f"variable name must be a string, got {payload!r}")
        return Var(payload)
    if tag in ("and", "or", "imp"):
        if not isinstance(payload, list) or len(payload) != 2:
            raise ValueError(f"{tag} expects a two-element list, got {payload!r}")
        lhs = formula_from_json(payload[0])
        rhs = formula_from_json(payload[1])
        return {"and": And, "or": Or, "imp": Imp}[tag](lhs, rhs)
    if tag in ("box", "dia"):
        body = formula_from_json(payload)
        return Box(body) if tag == "box" else Dia(body)
    raise ValueError(f"unknown formula tag {tag!r}")


def render_sequent_text(s: Sequent) -> str:
    left = ", ".join(render_text(phi) for phi in s.ante.items)
    if s.succ is None:
        return f"{left} |-" if left else "|-"
    right = render_text(s.succ)
    return f"{left} |- {right}" if left else f"|- {right}"


def render_sequent_latex(s: Sequent) -> str:
    left = ", ".join(render_latex(phi) for phi in s.ante.items)
    right = "" if s.succ is None else render_latex(s.succ)
    return f"{left} \\Rightarrow {right}".strip()


def sequent_to_json(s: Sequent) -> Any:
    return {
        "ante": [formula_to_json(phi) for phi in s.ante.items],
        "succ": None if s.succ is None else formula_to_json(s.succ),
    }


def sequent_from_json(obj: Any) -> Sequent:
    if not isinstance(obj, dict) or set(obj) != {"ante", "succ"}:
        raise ValueError(f"not a sequent object: {obj!r}")
    if not isinstance(obj["ante"], list):
        raise ValueError("sequent antecedent must be a list")
    ante = FMultiset(formula_from_json(f) for f in obj["ante"])
    succ = None if obj["succ"] is None else formula_from_json(obj["succ"])
    return Sequent(ante, succ)
