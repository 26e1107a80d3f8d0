"""Monoid families, canonical objects, and small finite monoids.

The five insertion families share one interface: canonical(family, word)
returns a hashable object such that two words are equivalent exactly when
their objects are equal.  Three reference monoids complete the list: the
two three-element monoids obtained by adjoining a unit to the left zero and
right zero semigroups on {a, b}, and the free monoid on one generator.
"""
from __future__ import annotations

import enum
from typing import Iterable, Mapping

from . import bst, tableaux
from .words import Word, _symbols


class RankViolationError(ValueError):
    """A word uses letters outside the declared alphabet."""


class UnboundVariableError(ValueError):
    """A substitution or assignment is missing a variable it needs."""


class MonoidFamily(enum.Enum):
    STAL = "stal"
    TAIG = "taig"
    SYLV = "sylv"
    SYLV_SHARP = "sylvsharp"
    BAXT = "baxt"
    LEFT_ZERO = "l21"
    RIGHT_ZERO = "r21"
    FREE_MONOGENIC = "free1"

    @classmethod
    def parse(cls, name: str) -> "MonoidFamily":
        for fam in cls:
            if fam.value == name:
                return fam
        raise ValueError(f"unknown monoid family {name!r}")

    @property
    def is_insertion_family(self) -> bool:
        return self in _INSERTION_FAMILIES

    def __str__(self) -> str:
        return self.value


_INSERTION_FAMILIES = frozenset(
    {
        MonoidFamily.STAL,
        MonoidFamily.TAIG,
        MonoidFamily.SYLV,
        MonoidFamily.SYLV_SHARP,
        MonoidFamily.BAXT,
    }
)

# Alphabet caps for the non-insertion families; None means any letters.
_ALPHABET_CAP = {
    MonoidFamily.LEFT_ZERO: 2,
    MonoidFamily.RIGHT_ZERO: 2,
    MonoidFamily.FREE_MONOGENIC: 1,
}


def alphabet_cap(family: MonoidFamily):
    return _ALPHABET_CAP.get(family)


def check_rank(w, rank: int) -> None:
    """Ensure every letter of w lies in 1..rank."""
    if rank < 1:
        raise RankViolationError(f"rank must be >= 1, got {rank}")
    for s in _symbols(w):
        if not isinstance(s, int) or s < 1 or s > rank:
            raise RankViolationError(f"letter {s!r} exceeds rank {rank}")


class FiniteMonoid:
    """A finite monoid given by its full multiplication table.

    Associativity and the unit laws are checked exhaustively on construction.
    """

    def __init__(self, name: str, elements: Iterable[str], unit: str, table: Mapping):
        self.name = name
        self.elements = tuple(elements)
        self.unit = unit
        self.table = dict(table)
        elems = set(self.elements)
        if len(elems) != len(self.elements):
            raise ValueError("duplicate elements")
        if unit not in elems:
            raise ValueError("unit must be an element")
        for a in self.elements:
            for b in self.elements:
                if self.table.get((a, b)) not in elems:
                    raise ValueError(f"table incomplete or out of range at {(a, b)!r}")
        for a in self.elements:
            if self.table[(unit, a)] != a or self.table[(a, unit)] != a:
                raise ValueError(f"unit law fails at {a!r}")
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                        raise ValueError(f"associativity fails at {(a, b, c)!r}")

    def mul(self, a: str, b: str) -> str:
        return self.table[(a, b)]

    def fold(self, items: Iterable[str]) -> str:
        acc = self.unit
        for x in items:
            acc = self.table[(acc, x)]
        return acc

    def __repr__(self) -> str:
        return f"FiniteMonoid({self.name!r})"


def _adjoined_zero_monoid(name: str, left: bool) -> FiniteMonoid:
    # On {a, b} the product is the left factor (left zero) or the right one.
    elements = ("1", "a", "b")
    table = {}
    for x in elements:
        table[("1", x)] = x
        table[(x, "1")] = x
    for x in ("a", "b"):
        for y in ("a", "b"):
            table[(x, y)] = x if left else y
    return FiniteMonoid(name, elements, "1", table)


L21 = _adjoined_zero_monoid("L2^1", left=True)
R21 = _adjoined_zero_monoid("R2^1", left=False)

# Letter words over {1, 2} map into the adjoined zero monoids generator-wise.
_GENERATORS = {1: "a", 2: "b"}


def eval_in_finite(monoid: FiniteMonoid, w, assignment: Mapping[str, str]) -> str:
    """Evaluate a variable word in a finite monoid under the assignment."""
    values = []
    for name in _symbols(w):
        if name not in assignment:
            raise UnboundVariableError(f"variable {name!r} has no assigned value")
        value = assignment[name]
        if value not in monoid.elements:
            raise ValueError(f"{value!r} is not an element of {monoid.name}")
        values.append(value)
    return monoid.fold(values)


def _canonical_seq(family: MonoidFamily, seq: tuple):
    """Canonical object from a raw letter tuple; fast path for search loops."""
    if family is MonoidFamily.STAL:
        return p_stal_columns(seq)
    if family is MonoidFamily.TAIG:
        return tableaux._taiga_build(reversed(seq))
    if family is MonoidFamily.SYLV:
        return bst._build_right_strict(reversed(seq))
    if family is MonoidFamily.SYLV_SHARP:
        return bst._build_left_strict(seq)
    if family is MonoidFamily.BAXT:
        return (bst._build_left_strict(seq), bst._build_right_strict(reversed(seq)))
    if family is MonoidFamily.FREE_MONOGENIC:
        for s in seq:
            if s != 1:
                raise RankViolationError("free1 words use the single letter 1")
        return len(seq)
    if family in (MonoidFamily.LEFT_ZERO, MonoidFamily.RIGHT_ZERO):
        for s in seq:
            if s not in _GENERATORS:
                raise RankViolationError(f"{family} words use letters 1 and 2 only")
        monoid = L21 if family is MonoidFamily.LEFT_ZERO else R21
        return monoid.fold(_GENERATORS[s] for s in seq)
    raise ValueError(f"unknown family {family!r}")


def p_stal_columns(seq: tuple) -> tuple:
    counts: dict = {}
    order = []
    for a in reversed(seq):
        if a in counts:
            counts[a] += 1
        else:
            counts[a] = 1
            order.append(a)
    order.reverse()
    return tuple((a, counts[a]) for a in order)


def canonical(family: MonoidFamily, w):
    """Canonical object of a letter word in the given family.

    Insertion families return their tableau/tree objects; free1 returns the
    exponent of the single generator; l21/r21 return the monoid element.
    """
    seq = tableaux._letter_seq(w)
    if family is MonoidFamily.STAL:
        return tableaux.p_stal(seq)
    if family is MonoidFamily.TAIG:
        return tableaux.p_taig(seq)
    if family is MonoidFamily.SYLV:
        return bst.p_sylv(seq)
    if family is MonoidFamily.SYLV_SHARP:
        return bst.p_sylv_sharp(seq)
    if family is MonoidFamily.BAXT:
        return bst.p_baxt(seq)
    return _canonical_seq(family, seq)


def equivalent(family: MonoidFamily, u, v) -> bool:
    """Do u and v define the same element, i.e. the same canonical object?"""
    return _canonical_seq(family, tableaux._letter_seq(u)) == _canonical_seq(
        family, tableaux._letter_seq(v)
    )
