"""Modal formulas over falsum, variables, conjunction, disjunction,
implication, box and diamond.

Formulas are hash-consed: constructing the same shape twice returns the
same object, so equality is identity and every node carries its weight,
structural hash and ordering key from birth.  Truth and negation are the
usual abbreviations (true = false -> false, ~x = x -> false).
"""

from __future__ import annotations

import zlib
from typing import Iterator

_pool: dict[tuple, "Formula"] = {}

# Constructor ranks for the canonical total order: formulas compare by
# weight first, then by rank, then by payload (variable name or child
# keys, left to right).
_RANK_BOT = 0
_RANK_VAR = 1
_RANK_AND = 2
_RANK_OR = 3
_RANK_IMP = 4
_RANK_BOX = 5
_RANK_DIA = 6


class Formula:
    """Base class; instances are interned, compare by identity."""

    __slots__ = ("weight", "key", "_hash", "_fv")

    weight: int
    key: tuple
    _hash: int
    _fv: frozenset[str]

    def __hash__(self) -> int:
        return self._hash

    def free_vars(self) -> frozenset[str]:
        return self._fv

    def __lt__(self, other: "Formula") -> bool:
        return self.key < other.key

    def __le__(self, other: "Formula") -> bool:
        return self.key <= other.key

    def __repr__(self) -> str:
        from .render import render_text

        return render_text(self)


class Bot(Formula):
    __slots__ = ()

    def __new__(cls) -> "Bot":
        inst = _pool.get(("bot",))
        if inst is None:
            inst = object.__new__(cls)
            inst.weight = 1
            inst.key = (1, _RANK_BOT)
            inst._hash = zlib.crc32(b"bot")
            inst._fv = frozenset()
            _pool[("bot",)] = inst
        return inst  # type: ignore[return-value]

    def __reduce__(self):
        return (Bot, ())


class Var(Formula):
    __slots__ = ("name",)

    def __new__(cls, name: str) -> "Var":
        inst = _pool.get(("var", name))
        if inst is None:
            inst = object.__new__(cls)
            inst.name = name
            inst.weight = 1
            inst.key = (1, _RANK_VAR, name)
            inst._hash = zlib.crc32(b"var " + name.encode())
            inst._fv = frozenset((name,))
            _pool[("var", name)] = inst
        return inst  # type: ignore[return-value]

    def __reduce__(self):
        return (Var, (self.name,))


class _Binary(Formula):
    __slots__ = ("lhs", "rhs")

    _tag: str
    _rank: int
    _extra: int

    def __new__(cls, lhs: Formula, rhs: Formula):
        k = (cls._tag, lhs, rhs)
        inst = _pool.get(k)
        if inst is None:
            inst = object.__new__(cls)
            inst.lhs = lhs
            inst.rhs = rhs
            inst.weight = lhs.weight + rhs.weight + cls._extra
            inst.key = (inst.weight, cls._rank, lhs.key, rhs.key)
            inst._hash = hash((cls._rank, lhs._hash, rhs._hash))
            inst._fv = lhs._fv | rhs._fv
            _pool[k] = inst
        return inst

    def __reduce__(self):
        return (type(self), (self.lhs, self.rhs))


class And(_Binary):
    __slots__ = ()
    _tag = "and"
    _rank = _RANK_AND
    _extra = 2


class Or(_Binary):
    __slots__ = ()
    _tag = "or"
    _rank = _RANK_OR
    _extra = 1


class Imp(_Binary):
    __slots__ = ()
    _tag = "imp"
    _rank = _RANK_IMP
    _extra = 1


class _Unary(Formula):
    __slots__ = ("body",)

    _tag: str
    _rank: int

    def __new__(cls, body: Formula):
        k = (cls._tag, body)
        inst = _pool.get(k)
        if inst is None:
            inst = object.__new__(cls)
            inst.body = body
            inst.weight = body.weight + 1
            inst.key = (inst.weight, cls._rank, body.key)
            inst._hash = hash((cls._rank, body._hash))
            inst._fv = body._fv
            _pool[k] = inst
        return inst

    def __reduce__(self):
        return (type(self), (self.body,))


class Box(_Unary):
    __slots__ = ()
    _tag = "box"
    _rank = _RANK_BOX


class Dia(_Unary):
    __slots__ = ()
    _tag = "dia"
    _rank = _RANK_DIA


BOT: Bot = Bot()
TRUE: Imp = Imp(BOT, BOT)


def neg(phi: Formula) -> Imp:
    return Imp(phi, BOT)


def weight(phi: Formula) -> int:
    """Weight of a formula: atoms count 1, every connective adds 1
    except conjunction, which adds 2."""
    return phi.weight


def free_vars(phi: Formula) -> frozenset[str]:
    return phi._fv


def sort_key(phi: Formula) -> tuple:
    """Key realising the canonical total order on formulas."""
    return phi.key


def subformulas(phi: Formula) -> Iterator[Formula]:
    """All subformula occurrences, outermost first."""
    yield phi
    if isinstance(phi, _Binary):
        yield from subformulas(phi.lhs)
        yield from subformulas(phi.rhs)
    elif isinstance(phi, _Unary):
        yield from subformulas(phi.body)
