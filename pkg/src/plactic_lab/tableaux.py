"""Stalactic tableaux and taiga trees, built by right-to-left insertion.

Both objects record, for each distinct letter of a word, how often it occurs;
they differ in how the distinct letters are arranged.  A stalactic tableau is
a row of columns (new letters enter on the left, so the top row ends up being
the fp skeleton of the word).  A taiga tree is a binary search tree over the
distinct letters, each node carrying a multiplicity.
"""
from __future__ import annotations

from collections import Counter

from .words import Word, _symbols


def _letter_seq(w) -> tuple:
    if isinstance(w, str):
        return Word.letters(w).symbols
    syms = _symbols(w)
    if any(isinstance(s, str) for s in syms):
        raise ValueError("insertion needs a letter word")
    return syms


class StalacticTableau:
    """Columns of equal letters; insertion prepends new letters on the left."""

    __slots__ = ("columns", "_word")

    def __init__(self, columns=(), _word=None):
        cols = tuple((int(a), int(m)) for a, m in columns)
        seen = set()
        for a, m in cols:
            if a < 1 or m < 1:
                raise ValueError(f"bad column {(a, m)!r}")
            if a in seen:
                raise ValueError(f"duplicate column letter {a}")
            seen.add(a)
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "_word", _word)

    def __setattr__(self, name, value):
        raise AttributeError("StalacticTableau is immutable")

    def insert(self, a: int) -> "StalacticTableau":
        """One insertion step: increment a's column, or prepend a new one."""
        if a < 1:
            raise ValueError("letters must be >= 1")
        for i, (letter, mult) in enumerate(self.columns):
            if letter == a:
                cols = self.columns[:i] + ((letter, mult + 1),) + self.columns[i + 1 :]
                return StalacticTableau(cols)
        return StalacticTableau(((a, 1),) + self.columns)

    def letters(self) -> tuple:
        return tuple(a for a, _ in self.columns)

    def as_counter(self) -> Counter:
        return Counter({a: m for a, m in self.columns})

    def total(self) -> int:
        return sum(m for _, m in self.columns)

    def reading_word(self) -> tuple:
        """A word that rebuilds this tableau: each column spelled out in order."""
        if self._word is not None:
            return self._word
        out = []
        for a, m in self.columns:
            out.extend([a] * m)
        return tuple(out)

    def __mul__(self, other: "StalacticTableau") -> "StalacticTableau":
        if not isinstance(other, StalacticTableau):
            return NotImplemented
        return p_stal(self.reading_word() + other.reading_word())

    def __eq__(self, other) -> bool:
        return isinstance(other, StalacticTableau) and self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    def __repr__(self) -> str:
        return f"StalacticTableau({list(self.columns)!r})"

    def render(self) -> str:
        """ASCII picture, one text column per tableau column."""
        if not self.columns:
            return "(empty)"
        widths = [len(str(a)) for a, _ in self.columns]
        height = max(m for _, m in self.columns)
        lines = []
        for row in range(height):
            cells = []
            for (a, m), wdt in zip(self.columns, widths):
                cells.append(str(a).rjust(wdt) if row < m else " " * wdt)
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {"columns": [{"letter": a, "mult": m} for a, m in self.columns]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "StalacticTableau":
        return cls((c["letter"], c["mult"]) for c in data["columns"])


def p_stal(w) -> StalacticTableau:
    """Insert the letters of w from right to left into the empty tableau."""
    seq = _letter_seq(w)
    counts: dict = {}
    order = []
    for a in reversed(seq):
        if a in counts:
            counts[a] += 1
        else:
            counts[a] = 1
            order.append(a)
    order.reverse()
    return StalacticTableau(tuple((a, counts[a]) for a in order), _word=seq)


# Taiga nodes are nested tuples (label, mult, left, right); an empty tree is None.


def _taiga_build(seq_reversed) -> object:
    root = None
    for a in seq_reversed:
        if root is None:
            root = [a, 1, None, None]
            continue
        cur = root
        while True:
            label = cur[0]
            if a == label:
                cur[1] += 1
                break
            slot = 2 if a < label else 3
            nxt = cur[slot]
            if nxt is None:
                cur[slot] = [a, 1, None, None]
                break
            cur = nxt
    return _freeze(root)


def _freeze(node):
    """Turn list nodes into tuples without recursion (chains can be long)."""
    if node is None:
        return None
    stack = [node]
    post = []
    while stack:
        n = stack.pop()
        post.append(n)
        for child in n[-2:]:
            if child is not None:
                stack.append(child)
    for n in reversed(post):
        if n[-2] is not None and isinstance(n[-2], list):
            n[-2] = tuple(n[-2])
        if n[-1] is not None and isinstance(n[-1], list):
            n[-1] = tuple(n[-1])
    return tuple(node)


def _count_mults(root) -> dict:
    counts: dict = {}
    if root is None:
        return counts
    stack = [root]
    while stack:
        label, mult, left, right = stack.pop()
        counts[label] = counts.get(label, 0) + mult
        if left is not None:
            stack.append(left)
        if right is not None:
            stack.append(right)
    return counts


class TaigaTree:
    """Binary search tree over distinct letters with multiplicities."""

    __slots__ = ("root", "_word")

    def __init__(self, root=None, _word=None):
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_word", _word)

    def __setattr__(self, name, value):
        raise AttributeError("TaigaTree is immutable")

    def insert(self, a: int) -> "TaigaTree":
        if a < 1:
            raise ValueError("letters must be >= 1")

        def go(node):
            if node is None:
                return (a, 1, None, None)
            label, mult, left, right = node
            if a == label:
                return (label, mult + 1, left, right)
            if a < label:
                return (label, mult, go(left), right)
            return (label, mult, left, go(right))

        return TaigaTree(go(self.root))

    def root_label(self):
        return None if self.root is None else self.root[0]

    def as_counter(self) -> Counter:
        return Counter(_count_mults(self.root))

    def total(self) -> int:
        return sum(self.as_counter().values())

    def is_valid(self) -> bool:
        """Strict search-tree order on labels, all multiplicities >= 1."""

        def ok(node, lo, hi):
            if node is None:
                return True
            label, mult, left, right = node
            if mult < 1:
                return False
            if (lo is not None and label <= lo) or (hi is not None and label >= hi):
                return False
            return ok(left, lo, label) and ok(right, label, hi)

        return ok(self.root, None, None)

    def reading_word(self) -> tuple:
        """A word that rebuilds this tree (reversed expanded preorder)."""
        if self._word is not None:
            return self._word
        out = []
        stack = [self.root] if self.root else []
        while stack:
            label, mult, left, right = stack.pop()
            out.extend([label] * mult)
            if right is not None:
                stack.append(right)
            if left is not None:
                stack.append(left)
        out.reverse()
        return tuple(out)

    def __mul__(self, other: "TaigaTree") -> "TaigaTree":
        if not isinstance(other, TaigaTree):
            return NotImplemented
        return p_taig(self.reading_word() + other.reading_word())

    def __eq__(self, other) -> bool:
        return isinstance(other, TaigaTree) and self.root == other.root

    def __hash__(self) -> int:
        return hash(self.root)

    def __repr__(self) -> str:
        return f"TaigaTree({self.root!r})"

    def to_json_dict(self):
        def go(node):
            if node is None:
                return None
            label, mult, left, right = node
            return {"label": label, "mult": mult, "left": go(left), "right": go(right)}

        return go(self.root)

    @classmethod
    def from_json_dict(cls, data) -> "TaigaTree":
        def go(d):
            if d is None:
                return None
            return (d["label"], d["mult"], go(d["left"]), go(d["right"]))

        return cls(go(data))

    def to_dot(self) -> str:
        return _tree_dot(self.root, mult_slot=1)

    def render(self) -> str:
        return _tree_ascii(self.root, mult_slot=1)


def p_taig(w) -> TaigaTree:
    """Insert the letters of w from right to left into the empty taiga tree."""
    seq = _letter_seq(w)
    return TaigaTree(_taiga_build(reversed(seq)), _word=seq)


def _node_text(node, mult_slot) -> str:
    if mult_slot is None:
        return str(node[0])
    return f"{node[0]}^{node[mult_slot]}"


def _tree_dot(root, mult_slot=None) -> str:
    """DOT digraph; children are tagged L/R so the shape is unambiguous."""
    lines = ["digraph tree {", "  node [shape=box];"]
    if root is None:
        lines.append('  empty [label="(empty)" shape=plaintext];')
    else:
        counter = [0]

        def walk(node):
            my = counter[0]
            counter[0] += 1
            lines.append(f'  n{my} [label="{_node_text(node, mult_slot)}"];')
            for tag, child in (("L", node[-2]), ("R", node[-1])):
                if child is not None:
                    cid = walk(child)
                    lines.append(f'  n{my} -> n{cid} [label="{tag}"];')
            return my

        walk(root)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _tree_ascii(root, mult_slot=None) -> str:
    if root is None:
        return "(empty)"
    lines = []

    def walk(node, indent, tag):
        lines.append(f"{indent}{tag}{_node_text(node, mult_slot)}")
        left, right = node[-2], node[-1]
        if left is not None:
            walk(left, indent + "  ", "L: ")
        if right is not None:
            walk(right, indent + "  ", "R: ")

    walk(root, "", "")
    return "\n".join(lines)
