"""Sequents: a finite multiset antecedent and a succedent holding at
most one formula.

A succedent is either a Formula or None (empty).  Single-succedent mode
(CK) forbids None at the level of proof goals; that restriction is
enforced when searching, not here, because empty succedents arise
legitimately inside WK derivations.

Sequents are compared by the Dershowitz-Manna multiset extension of
the weight order, taking the antecedent and succedent together; this
is the measure every rule application descends in.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

from .formula import Box, Dia, Formula


class FMultiset:
    """Immutable multiset of formulas with a canonical item order."""

    __slots__ = ("items", "_hash")

    items: tuple[Formula, ...]

    def __init__(self, formulas: Iterable[Formula] = ()) -> None:
        object.__setattr__(self, "items", tuple(sorted(formulas, key=_key)))
        object.__setattr__(self, "_hash", hash(self.items))

    @classmethod
    def _from_sorted(cls, items: tuple[Formula, ...]) -> "FMultiset":
        ms = object.__new__(cls)
        object.__setattr__(ms, "items", items)
        object.__setattr__(ms, "_hash", hash(items))
        return ms

    def add(self, *formulas: Formula) -> "FMultiset":
        return FMultiset(self.items + formulas)

    def remove(self, phi: Formula) -> "FMultiset":
        """Drop one occurrence of phi; phi must be present."""
        i = self.items.index(phi)
        return FMultiset._from_sorted(self.items[:i] + self.items[i + 1 :])

    def union(self, other: "FMultiset") -> "FMultiset":
        return FMultiset(self.items + other.items)

    def count(self, phi: Formula) -> int:
        return self.items.count(phi)

    def distinct(self) -> Iterator[Formula]:
        """Each member once, in canonical order."""
        prev = None
        for phi in self.items:
            if phi is not prev:
                yield phi
                prev = phi

    def counter(self) -> Counter:
        return Counter(self.items)

    def total_weight(self) -> int:
        return sum(phi.weight for phi in self.items)

    def __contains__(self, phi: Formula) -> bool:
        return phi in self.items

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FMultiset) and self.items == other.items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "{%s}" % ", ".join(repr(phi) for phi in self.items)


def _key(phi: Formula) -> tuple:
    return phi.key


EMPTY = FMultiset()


class Sequent:
    """Antecedent multiset with an at-most-one-formula succedent."""

    __slots__ = ("ante", "succ", "_hash")

    ante: FMultiset
    succ: Formula | None

    def __init__(self, ante: FMultiset, succ: Formula | None) -> None:
        object.__setattr__(self, "ante", ante)
        object.__setattr__(self, "succ", succ)
        object.__setattr__(self, "_hash", hash((ante._hash, succ)))

    def key(self) -> tuple:
        return (self.ante.items, self.succ)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Sequent)
            and self.succ is other.succ
            and self.ante.items == other.ante.items
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .render import render_sequent_text

        return render_sequent_text(self)


def box_inverse(gamma: FMultiset) -> FMultiset:
    """Unbox every boxed member, dropping everything else; keeps
    multiplicities."""
    return FMultiset._from_sorted(
        tuple(sorted((phi.body for phi in gamma.items if type(phi) is Box), key=_key))
    )


def dia_inverse(succ: Formula | None) -> Formula | None:
    """Strip a diamond succedent; anything else becomes empty."""
    if succ is not None and type(succ) is Dia:
        return succ.body
    return None


def multiset_less(a: FMultiset, b: FMultiset) -> bool:
    return _counter_less(a.counter(), b.counter())


def _counter_less(ca: Counter, cb: Counter) -> bool:
    """Dershowitz-Manna order over the weight order on formulas: a is
    below b iff they differ and every formula with excess multiplicity
    in a is outweighed by some formula with excess multiplicity in b."""
    max_a = -1
    max_b = -1
    differ = False
    for phi in ca.keys() | cb.keys():
        d = ca[phi] - cb[phi]
        if d > 0:
            differ = True
            if phi.weight > max_a:
                max_a = phi.weight
        elif d < 0:
            differ = True
            if phi.weight > max_b:
                max_b = phi.weight
    return differ and max_a < max_b


def seq_less(s1: Sequent, s2: Sequent) -> bool:
    """Order on sequents: compare antecedent and succedent together as
    one multiset; an empty succedent contributes nothing."""
    ca = Counter(s1.ante.items)
    if s1.succ is not None:
        ca[s1.succ] += 1
    cb = Counter(s2.ante.items)
    if s2.succ is not None:
        cb[s2.succ] += 1
    return _counter_less(ca, cb)
