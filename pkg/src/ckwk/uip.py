"""Uniform interpolation.

For a variable p, e_set(Γ) collects the conjuncts of the strongest
p-free consequence of Γ and a_set(Γ ⇒ Δ) the disjuncts of the weakest
p-free antecedent making the sequent provable.  The two constructions
recurse into each other, always on sequents strictly smaller in the
multiset order, mirroring backward rule application: one contribution
per way the antecedent or succedent matches a rule pattern, with
overlapping matches all included.

The quantifiers fold these sets: E = big conjunction (empty = true),
A = big disjunction (empty = false), right-nested over the canonical
formula order.  ∃p φ = E({φ}) and ∀p φ = A(⇒ φ).

In WK mode the antecedent rows and the rows for implications on the
left accept an empty succedent unchanged, the succedent-shape rows
require their displayed succedent, and the diamond-on-the-left row
matches any succedent, recursing on its diamond-stripped form.
"""

from __future__ import annotations

from collections import Counter
from operator import attrgetter

from .calculus import LogicId
from .formula import BOT, TRUE, And, Bot, Box, Dia, Formula, Imp, Or, Var
from .sequent import EMPTY, FMultiset, Sequent, _counter_less, box_inverse, dia_inverse

_key = attrgetter("key")


class QuantCache:
    """Memo for the mutual recursion, keyed by (table, canonical
    antecedent, succedent, variable, logic); stores the computed set
    together with its fold."""

    __slots__ = ("_table",)

    def __init__(self) -> None:
        self._table: dict[tuple, tuple[frozenset[Formula], Formula]] = {}

    def get(self, key: tuple) -> tuple[frozenset[Formula], Formula] | None:
        return self._table.get(key)

    def put(self, key: tuple, value: tuple[frozenset[Formula], Formula]) -> None:
        self._table[key] = value

    def __len__(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        self._table.clear()


def quant_key(
    kind: str, gamma: FMultiset, succ: Formula | None, p: str, logic: LogicId
) -> tuple:
    assert kind in ("E", "A")
    if kind == "E":
        return ("E", gamma.items, p, logic)
    return ("A", gamma.items, succ, p, logic)


def _fold_and(fs: frozenset[Formula]) -> Formula:
    if not fs:
        return TRUE
    ordered = sorted(fs, key=_key)
    acc = ordered[-1]
    for f in reversed(ordered[:-1]):
        acc = And(f, acc)
    return acc


def _fold_or(fs: frozenset[Formula]) -> Formula:
    if not fs:
        return BOT
    ordered = sorted(fs, key=_key)
    acc = ordered[-1]
    for f in reversed(ordered[:-1]):
        acc = Or(f, acc)
    return acc


def _measure(gamma: FMultiset, succ: Formula | None) -> Counter:
    c = Counter(gamma.items)
    if succ is not None:
        c[succ] += 1
    return c


def _e(gamma: FMultiset, p: str, logic: LogicId, cache: QuantCache) -> tuple:
    key = ("E", gamma.items, p, logic)
    hit = cache.get(key)
    if hit is not None:
        return hit

    here = _measure(gamma, None)

    def E(g: FMultiset) -> Formula:
        assert _counter_less(_measure(g, None), here)
        return _e(g, p, logic, cache)[1]

    def A(g: FMultiset, d: Formula | None) -> Formula:
        assert _counter_less(_measure(g, d), here)
        return _a(g, d, p, logic, cache)[1]

    out: set[Formula] = set()
    for c in gamma.distinct():
        rest = gamma.remove(c)
        t = type(c)
        if t is Bot:
            out.add(BOT)
        elif t is Var:
            out.add(TRUE if c.name == p else c)
        elif t is And:
            out.add(E(rest.add(c.lhs, c.rhs)))
        elif t is Or:
            out.add(Or(E(rest.add(c.lhs)), E(rest.add(c.rhs))))
        elif t is Dia:
            out.add(Dia(E(box_inverse(rest).add(c.body))))
        elif t is Imp:
            head = c.lhs
            ht = type(head)
            if ht is Var:
                if head in rest:
                    out.add(E(rest.add(c.rhs)))
                elif head.name == p:
                    out.add(TRUE)
                else:
                    out.add(Imp(head, E(rest.add(c.rhs))))
            elif ht is And:
                out.add(E(rest.add(Imp(head.lhs, Imp(head.rhs, c.rhs)))))
            elif ht is Or:
                out.add(E(rest.add(Imp(head.lhs, c.rhs), Imp(head.rhs, c.rhs))))
            elif ht is Imp:
                probe = rest.add(Imp(head.rhs, c.rhs), head.lhs)
                out.add(
                    Imp(Imp(E(probe), A(probe, head.rhs)), E(rest.add(c.rhs)))
                )
            elif ht is Box:
                unboxed = box_inverse(rest)
                out.add(
                    Imp(
                        Box(Imp(E(unboxed), A(unboxed, head.body))),
                        E(rest.add(c.rhs)),
                    )
                )
            elif ht is Dia:
                unboxed = box_inverse(rest)
                out.add(
                    Imp(
                        Dia(Imp(E(unboxed), A(unboxed, head.body))),
                        E(rest.add(c.rhs)),
                    )
                )
                for d in rest.distinct():
                    if type(d) is Dia:
                        side = box_inverse(rest.remove(d)).add(d.body)
                        out.add(
                            Imp(
                                Box(Imp(E(side), A(side, head.body))),
                                E(rest.add(c.rhs)),
                            )
                        )
    if len(gamma):
        out.add(Box(E(box_inverse(gamma))))

    result = (frozenset(out), _fold_and(frozenset(out)))
    cache.put(key, result)
    return result


def _a(
    gamma: FMultiset, delta: Formula | None, p: str, logic: LogicId, cache: QuantCache
) -> tuple:
    key = ("A", gamma.items, delta, p, logic)
    hit = cache.get(key)
    if hit is not None:
        return hit

    here = _measure(gamma, delta)

    def E(g: FMultiset) -> Formula:
        assert _counter_less(_measure(g, None), here)
        return _e(g, p, logic, cache)[1]

    def A(g: FMultiset, d: Formula | None) -> Formula:
        assert _counter_less(_measure(g, d), here)
        return _a(g, d, p, logic, cache)[1]

    out: set[Formula] = set()
    for c in gamma.distinct():
        rest = gamma.remove(c)
        t = type(c)
        if t is Var:
            if c.name != p:
                out.add(BOT)
            elif delta is not c:
                out.add(BOT)
        elif t is And:
            out.add(A(rest.add(c.lhs, c.rhs), delta))
        elif t is Or:
            g1 = rest.add(c.lhs)
            g2 = rest.add(c.rhs)
            out.add(
                And(
                    Imp(E(g1), A(g1, delta)),
                    Imp(E(g2), A(g2, delta)),
                )
            )
        elif t is Dia:
            if logic is LogicId.CK:
                if delta is not None and type(delta) is Dia:
                    side = box_inverse(rest).add(c.body)
                    out.add(Box(Imp(E(side), A(side, delta.body))))
            else:
                side = box_inverse(rest).add(c.body)
                out.add(Box(Imp(E(side), A(side, dia_inverse(delta)))))
        elif t is Imp:
            head = c.lhs
            ht = type(head)
            if ht is Var:
                if head in rest:
                    out.add(A(rest.add(c.rhs), delta))
                elif head.name == p:
                    out.add(BOT)
                else:
                    out.add(And(head, A(rest.add(c.rhs), delta)))
            elif ht is And:
                out.add(A(rest.add(Imp(head.lhs, Imp(head.rhs, c.rhs))), delta))
            elif ht is Or:
                out.add(
                    A(rest.add(Imp(head.lhs, c.rhs), Imp(head.rhs, c.rhs)), delta)
                )
            elif ht is Imp:
                probe = rest.add(Imp(head.rhs, c.rhs), head.lhs)
                out.add(
                    And(
                        Imp(E(probe), A(probe, head.rhs)),
                        A(rest.add(c.rhs), delta),
                    )
                )
            elif ht is Box:
                unboxed = box_inverse(rest)
                out.add(
                    And(
                        Box(Imp(E(unboxed), A(unboxed, head.body))),
                        A(rest.add(c.rhs), delta),
                    )
                )
            elif ht is Dia:
                unboxed = box_inverse(rest)
                out.add(
                    And(
                        Dia(Imp(E(unboxed), A(unboxed, head.body))),
                        A(rest.add(c.rhs), delta),
                    )
                )
                for d in rest.distinct():
                    if type(d) is Dia:
                        side = box_inverse(rest.remove(d)).add(d.body)
                        out.add(
                            And(
                                Box(Imp(E(side), A(side, head.body))),
                                A(rest.add(c.rhs), delta),
                            )
                        )

    if delta is not None:
        td = type(delta)
        if td is Var:
            if delta.name != p:
                out.add(delta)
            elif delta in gamma:
                out.add(TRUE)
        elif td is And:
            out.add(And(A(gamma, delta.lhs), A(gamma, delta.rhs)))
        elif td is Or:
            out.add(Or(A(gamma, delta.lhs), A(gamma, delta.rhs)))
        elif td is Imp:
            g1 = gamma.add(delta.lhs)
            out.add(Imp(E(g1), A(g1, delta.rhs)))
        elif td is Box:
            unboxed = box_inverse(gamma)
            out.add(Box(Imp(E(unboxed), A(unboxed, delta.body))))
        elif td is Dia:
            unboxed = box_inverse(gamma)
            out.add(Dia(Imp(E(unboxed), A(unboxed, delta.body))))

    result = (frozenset(out), _fold_or(frozenset(out)))
    cache.put(key, result)
    return result


def _check_a_regime(s: Sequent, logic: LogicId) -> None:
    if s.succ is None and logic is LogicId.CK:
        raise ValueError(f"empty succedent is not a ck sequent: {s!r}")


def e_set(
    gamma: FMultiset, p: str, logic: LogicId, cache: QuantCache | None = None
) -> frozenset[Formula]:
    return _e(gamma, p, logic, QuantCache() if cache is None else cache)[0]


def a_set(
    s: Sequent, p: str, logic: LogicId, cache: QuantCache | None = None
) -> frozenset[Formula]:
    _check_a_regime(s, logic)
    return _a(s.ante, s.succ, p, logic, QuantCache() if cache is None else cache)[0]


def e_quant(
    gamma: FMultiset, p: str, logic: LogicId, cache: QuantCache | None = None
) -> Formula:
    return _e(gamma, p, logic, QuantCache() if cache is None else cache)[1]


def a_quant(
    s: Sequent, p: str, logic: LogicId, cache: QuantCache | None = None
) -> Formula:
    _check_a_regime(s, logic)
    return _a(s.ante, s.succ, p, logic, QuantCache() if cache is None else cache)[1]


def interpolate_exists(
    phi: Formula, p: str, logic: LogicId, cache: QuantCache | None = None
) -> Formula:
    """Strongest p-free consequence of phi."""
    return e_quant(FMultiset((phi,)), p, logic, cache)


def interpolate_forall(
    phi: Formula, p: str, logic: LogicId, cache: QuantCache | None = None
) -> Formula:
    """Weakest p-free formula entailing phi."""
    return a_quant(Sequent(EMPTY, phi), p, logic, cache)


def fresh_var(used: frozenset[str]) -> str:
    if "q" not in used:
        return "q"
    i = 0
    while f"q{i}" in used:
        i += 1
    return f"q{i}"


def exists_via_forall(phi: Formula, p: str, logic: LogicId) -> Formula:
    """The existential quantifier encoded through two universal ones:
    ∃p φ = ∀q((∀p(φ→q))→q) for a variable q not free in φ."""
    q = Var(fresh_var(phi.free_vars() | {p}))
    inner = interpolate_forall(Imp(phi, q), p, logic)
    return interpolate_forall(Imp(inner, q), q.name, logic)


def simplify(phi: Formula, _memo: dict | None = None) -> Formula:
    """Unit-law cleanup, nothing else: drops true from conjunctions and
    false from disjunctions, collapses implications from or to true.
    Output stays provably equivalent to the input.  Shared subterms are
    simplified once, so heavily shared interpolants stay cheap."""
    memo = {} if _memo is None else _memo
    got = memo.get(phi)
    if got is not None:
        return got
    t = type(phi)
    if t is And:
        lhs = simplify(phi.lhs, memo)
        rhs = simplify(phi.rhs, memo)
        if lhs is BOT or rhs is BOT:
            out = BOT
        elif lhs is TRUE:
            out = rhs
        elif rhs is TRUE:
            out = lhs
        else:
            out = And(lhs, rhs)
    elif t is Or:
        lhs = simplify(phi.lhs, memo)
        rhs = simplify(phi.rhs, memo)
        if lhs is TRUE or rhs is TRUE:
            out = TRUE
        elif lhs is BOT:
            out = rhs
        elif rhs is BOT:
            out = lhs
        else:
            out = Or(lhs, rhs)
    elif t is Imp:
        lhs = simplify(phi.lhs, memo)
        rhs = simplify(phi.rhs, memo)
        if rhs is TRUE:
            out = TRUE
        elif lhs is TRUE:
            out = rhs
        else:
            out = Imp(lhs, rhs)
    elif t is Box:
        out = Box(simplify(phi.body, memo))
    elif t is Dia:
        out = Dia(simplify(phi.body, memo))
    else:
        out = phi
    memo[phi] = out
    return out
