"""Binary search trees for the sylvester and Baxter insertion algorithms.

A right strict tree keeps left subtree <= node < right subtree and is built
by inserting the word from right to left (new symbol goes right exactly when
it is larger).  A left strict tree keeps left < node <= right and is built
from left to right (new symbol goes left exactly when it is smaller).  The
Baxter object is the pair of both trees for the same word.
"""
from __future__ import annotations

from collections import Counter

from .tableaux import _freeze, _letter_seq, _tree_ascii, _tree_dot

# Nodes are nested tuples (label, left, right); an empty tree is None.


def _build_right_strict(seq) -> object:
    """Insert seq in order; larger symbols go right, others left."""
    root = None
    for a in seq:
        if root is None:
            root = [a, None, None]
            continue
        cur = root
        while True:
            if a > cur[0]:
                nxt = cur[2]
                if nxt is None:
                    cur[2] = [a, None, None]
                    break
            else:
                nxt = cur[1]
                if nxt is None:
                    cur[1] = [a, None, None]
                    break
            cur = nxt
    return _freeze(root)


def _build_left_strict(seq) -> object:
    """Insert seq in order; smaller symbols go left, others right."""
    root = None
    for a in seq:
        if root is None:
            root = [a, None, None]
            continue
        cur = root
        while True:
            if a < cur[0]:
                nxt = cur[1]
                if nxt is None:
                    cur[1] = [a, None, None]
                    break
            else:
                nxt = cur[2]
                if nxt is None:
                    cur[2] = [a, None, None]
                    break
            cur = nxt
    return _freeze(root)


def _count_labels(root) -> dict:
    counts: dict = {}
    if root is None:
        return counts
    stack = [root]
    while stack:
        label, left, right = stack.pop()
        counts[label] = counts.get(label, 0) + 1
        if left is not None:
            stack.append(left)
        if right is not None:
            stack.append(right)
    return counts


def _in_order(root) -> list:
    out = []
    stack = []
    node = root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node[1]
        node = stack.pop()
        out.append(node[0])
        node = node[2]
    return out


def _preorder(root) -> list:
    out = []
    stack = [root] if root else []
    while stack:
        label, left, right = stack.pop()
        out.append(label)
        if right is not None:
            stack.append(right)
        if left is not None:
            stack.append(left)
    return out


class _SearchTree:
    """Shared plumbing for the two strict tree flavours."""

    __slots__ = ("root", "_word")

    def __init__(self, root=None, _word=None):
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_word", _word)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def root_label(self):
        return None if self.root is None else self.root[0]

    def as_counter(self) -> Counter:
        return Counter(_count_labels(self.root))

    def node_count(self) -> int:
        return sum(_count_labels(self.root).values())

    def in_order(self) -> tuple:
        return tuple(_in_order(self.root))

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.root == other.root

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.root))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.root!r})"

    def to_json_dict(self):
        def go(node):
            if node is None:
                return None
            label, left, right = node
            return {"label": label, "left": go(left), "right": go(right)}

        return go(self.root)

    @classmethod
    def from_json_dict(cls, data):
        def go(d):
            if d is None:
                return None
            return (d["label"], go(d["left"]), go(d["right"]))

        return cls(go(data))

    def to_dot(self) -> str:
        return _tree_dot(self.root)

    def render(self) -> str:
        return _tree_ascii(self.root)


class RightStrictBST(_SearchTree):
    """Tree with left subtree <= node < right subtree."""

    def insert(self, a: int) -> "RightStrictBST":
        def go(node):
            if node is None:
                return (a, None, None)
            label, left, right = node
            if a > label:
                return (label, left, go(right))
            return (label, go(left), right)

        return RightStrictBST(go(self.root))

    def is_valid(self) -> bool:
        def ok(node, lo, hi):
            if node is None:
                return True
            label, left, right = node
            if lo is not None and label <= lo:
                return False
            if hi is not None and label > hi:
                return False
            return ok(left, lo, label) and ok(right, label, hi)

        # left subtree may equal the node, right subtree must exceed it
        return ok(self.root, None, None)

    def reading_word(self) -> tuple:
        if self._word is not None:
            return self._word
        return tuple(reversed(_preorder(self.root)))

    def __mul__(self, other: "RightStrictBST") -> "RightStrictBST":
        if not isinstance(other, RightStrictBST):
            return NotImplemented
        return p_sylv(self.reading_word() + other.reading_word())


class LeftStrictBST(_SearchTree):
    """Tree with left subtree < node <= right subtree."""

    def insert(self, a: int) -> "LeftStrictBST":
        def go(node):
            if node is None:
                return (a, None, None)
            label, left, right = node
            if a < label:
                return (label, go(left), right)
            return (label, left, go(right))

        return LeftStrictBST(go(self.root))

    def is_valid(self) -> bool:
        def ok(node, lo, hi):
            if node is None:
                return True
            label, left, right = node
            if lo is not None and label < lo:
                return False
            if hi is not None and label >= hi:
                return False
            return ok(left, lo, label) and ok(right, label, hi)

        return ok(self.root, None, None)

    def reading_word(self) -> tuple:
        if self._word is not None:
            return self._word
        return tuple(_preorder(self.root))

    def __mul__(self, other: "LeftStrictBST") -> "LeftStrictBST":
        if not isinstance(other, LeftStrictBST):
            return NotImplemented
        return p_sylv_sharp(self.reading_word() + other.reading_word())


def p_sylv(w) -> RightStrictBST:
    """Right strict tree of w, inserting from right to left."""
    seq = _letter_seq(w)
    return RightStrictBST(_build_right_strict(reversed(seq)), _word=seq)


def p_sylv_sharp(w) -> LeftStrictBST:
    """Left strict tree of w, inserting from left to right."""
    seq = _letter_seq(w)
    return LeftStrictBST(_build_left_strict(seq), _word=seq)


class BaxterObject:
    """Pair of the left strict and right strict trees of one word."""

    __slots__ = ("sharp", "plain", "_word")

    def __init__(self, sharp: LeftStrictBST, plain: RightStrictBST, _word=None):
        if not isinstance(sharp, LeftStrictBST) or not isinstance(plain, RightStrictBST):
            raise TypeError("BaxterObject needs a LeftStrictBST and a RightStrictBST")
        if sharp.as_counter() != plain.as_counter():
            raise ValueError("component trees carry different label multisets")
        object.__setattr__(self, "sharp", sharp)
        object.__setattr__(self, "plain", plain)
        object.__setattr__(self, "_word", _word)

    def __setattr__(self, name, value):
        raise AttributeError("BaxterObject is immutable")

    def as_counter(self) -> Counter:
        return self.plain.as_counter()

    def reading_word(self) -> tuple:
        if self._word is None:
            raise ValueError("this BaxterObject does not carry a reading word")
        return self._word

    def __mul__(self, other: "BaxterObject") -> "BaxterObject":
        if not isinstance(other, BaxterObject):
            return NotImplemented
        return p_baxt(self.reading_word() + other.reading_word())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BaxterObject)
            and self.sharp == other.sharp
            and self.plain == other.plain
        )

    def __hash__(self) -> int:
        return hash((self.sharp, self.plain))

    def __repr__(self) -> str:
        return f"BaxterObject({self.sharp!r}, {self.plain!r})"

    def to_json_dict(self) -> dict:
        return {"sharp": self.sharp.to_json_dict(), "plain": self.plain.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "BaxterObject":
        return cls(
            LeftStrictBST.from_json_dict(data["sharp"]),
            RightStrictBST.from_json_dict(data["plain"]),
        )


def p_baxt(w) -> BaxterObject:
    """Both strict trees of w as one object."""
    seq = _letter_seq(w)
    return BaxterObject(p_sylv_sharp(seq), p_sylv(seq), _word=seq)
