"""Identity checking: exact decisions, normal forms, oracles, derivations.

Each insertion family has a finite identity basis, a word-statistics
characterization of the identities it satisfies, and a normal form for
variable words such that an identity holds exactly when both sides have the
same normal form.  Decisions are independent of the brute force oracle, which
substitutes letter words for variables and compares canonical objects; the
two are cross-validated in the test suite.

Derivation steps apply one basis rule inside a context.  Step endomorphisms
may assign the empty word to a rule variable (substituting the unit element);
this is what makes short consequences of long rules reachable, e.g.
xyxy = yxxy from xysxty = yxsxty.  verify_derivation can optionally reject
empty images to model the stricter semigroup notion, and derive_search
explores nonempty images only.
"""
from __future__ import annotations

import itertools
import os
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .monoids import (
    MonoidFamily,
    RankViolationError,
    UnboundVariableError,
    _canonical_seq,
    alphabet_cap,
    canonical,
)
from .words import Identity, Word, fp, ip

LTR = "ltr"
RTL = "rtl"


class DecisionMismatchError(RuntimeError):
    """The escalating counterexample search ran out of budget."""


def _rules(text_pairs) -> tuple:
    return tuple(Identity.parse(t) for t in text_pairs)


_GATHER_BASIS = _rules(["xyx = yxx"])
_SYLV_BASIS = _rules(["xysxty = yxsxty"])
_SYLV_SHARP_BASIS = _rules(["ytxsyx = ytxsxy"])
_BAXT_BASIS = _rules(["ysxtxyhxky = ysxtyxhxky", "xsytxyhxky = xsytyxhxky"])


def basis(family: MonoidFamily) -> tuple:
    """The finite identity basis of an insertion family."""
    if family in (MonoidFamily.STAL, MonoidFamily.TAIG):
        return _GATHER_BASIS
    if family is MonoidFamily.SYLV:
        return _SYLV_BASIS
    if family is MonoidFamily.SYLV_SHARP:
        return _SYLV_SHARP_BASIS
    if family is MonoidFamily.BAXT:
        return _BAXT_BASIS
    raise ValueError(f"no identity basis registered for {family}")


# ---------------------------------------------------------------------------
# exact decision


def _last_positions(syms: tuple) -> dict:
    out = {}
    for i, s in enumerate(syms):
        out[s] = i
    return out


def _first_positions(syms: tuple) -> dict:
    out = {}
    for i, s in enumerate(syms):
        if s not in out:
            out[s] = i
    return out


def _after_tables_agree(u: tuple, v: tuple) -> bool:
    """Same counts strictly after the last anchor, for every anchor symbol."""
    lu, lv = _last_positions(u), _last_positions(v)
    for y, pu in lu.items():
        if Counter(u[pu + 1 :]) != Counter(v[lv[y] + 1 :]):
            return False
    return True


def _before_tables_agree(u: tuple, v: tuple) -> bool:
    fu, fv = _first_positions(u), _first_positions(v)
    for y, pu in fu.items():
        if Counter(u[:pu]) != Counter(v[: fv[y]]):
            return False
    return True


def satisfies(family: MonoidFamily, ident: Identity) -> bool:
    """Decide whether the family satisfies the identity, for every rank >= 2.

    The conditions compare word statistics of the two sides: evaluations,
    the ip/fp skeletons, and the directional occurrence tables, in the
    combination appropriate to the family.
    """
    u, v = ident.lhs.symbols, ident.rhs.symbols
    if family is MonoidFamily.LEFT_ZERO:
        return ip(u) == ip(v)
    if family is MonoidFamily.RIGHT_ZERO:
        return fp(u) == fp(v)
    if family is MonoidFamily.FREE_MONOGENIC:
        return Counter(u) == Counter(v)
    if Counter(u) != Counter(v):
        return False
    if family in (MonoidFamily.STAL, MonoidFamily.TAIG):
        return fp(u) == fp(v)
    if family is MonoidFamily.SYLV:
        return fp(u) == fp(v) and _after_tables_agree(u, v)
    if family is MonoidFamily.SYLV_SHARP:
        return ip(u) == ip(v) and _before_tables_agree(u, v)
    if family is MonoidFamily.BAXT:
        return (
            ip(u) == ip(v)
            and fp(u) == fp(v)
            and _after_tables_agree(u, v)
            and _before_tables_agree(u, v)
        )
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# normal forms


def _nf_gather(syms: tuple) -> tuple:
    counts = Counter(syms)
    out = []
    for x in fp(syms):
        out.extend([x] * counts[x])
    return tuple(out)


def _nf_sylv(syms: tuple) -> tuple:
    if not syms:
        return ()
    counts = Counter(syms)
    last = _last_positions(syms)
    order = list(fp(syms))
    after = {y: Counter(syms[last[y] + 1 :]) for y in order}
    out = []
    m = len(order)
    for i, xi in enumerate(order):
        # letters strictly between the previous block and this one
        for j in range(i + 1, m):
            xj = order[j]
            if i == 0:
                g = counts[xj] - after[order[0]][xj]
            else:
                g = after[order[i - 1]][xj] - after[xi][xj]
            out.extend([xj] * g)
        e = counts[xi] if i == 0 else after[order[i - 1]][xi]
        out.extend([xi] * e)
    return tuple(out)


def _nf_baxt(syms: tuple) -> tuple:
    if not syms:
        return ()
    first = _first_positions(syms)
    last = _last_positions(syms)
    ipidx = {s: k for k, s in enumerate(ip(syms))}
    keep = sorted(set(first.values()) | set(last.values()))
    out = []
    prev = -1
    for pos in keep:
        out.extend(sorted(syms[prev + 1 : pos], key=ipidx.__getitem__))
        out.append(syms[pos])
        prev = pos
    return tuple(out)


def normal_form(family: MonoidFamily, w: Word) -> Word:
    """Canonical representative of w's class; equal exactly for equivalent words."""
    syms = w.symbols if isinstance(w, Word) else tuple(w)
    if family in (MonoidFamily.STAL, MonoidFamily.TAIG):
        return Word(_nf_gather(syms))
    if family is MonoidFamily.SYLV:
        return Word(_nf_sylv(syms))
    if family is MonoidFamily.SYLV_SHARP:
        return Word(_nf_sylv(syms[::-1])[::-1])
    if family is MonoidFamily.BAXT:
        return Word(_nf_baxt(syms))
    raise ValueError(f"no normal form registered for {family}")


# ---------------------------------------------------------------------------
# substitution and brute force oracle


def apply_substitution(sub: Mapping[str, Word], w: Word) -> Word:
    """Replace each variable of w by its image; images are letter words."""
    out = []
    for name in w.symbols:
        if name not in sub:
            raise UnboundVariableError(f"variable {name!r} has no image")
        out.extend(sub[name].symbols)
    return Word(out)


@dataclass(frozen=True)
class Exhaustive:
    """Scan all substitutions with images of length 0..max_len."""

    max_len: int


@dataclass(frozen=True)
class RandomSearch:
    """Try seeded random substitutions with images of length 0..max_len."""

    trials: int
    max_len: int
    seed: int = 0


@dataclass(frozen=True)
class HoldsWithinBound:
    checked: int


@dataclass
class CounterExample:
    substitution: dict
    lhs_object: object
    rhs_object: object

    def __post_init__(self):
        if self.lhs_object == self.rhs_object:
            raise ValueError("counterexample objects are equal; not a counterexample")


def _image_candidates(rank: int, max_len: int) -> list:
    """All letter tuples of length 0..max_len over 1..rank, shortest first."""
    out = [()]
    for length in range(1, max_len + 1):
        out.extend(itertools.product(range(1, rank + 1), repeat=length))
    return out


def _instantiate(images: Mapping[str, tuple], syms: tuple) -> tuple:
    out = []
    for name in syms:
        out.extend(images[name])
    return tuple(out)


def _check_rank_arg(family: MonoidFamily, rank: int) -> None:
    if rank < 1:
        raise RankViolationError(f"rank must be >= 1, got {rank}")
    cap = alphabet_cap(family)
    if cap is not None and rank > cap:
        raise RankViolationError(f"{family} admits rank at most {cap}")


def _counterexample(family, ident, images: dict) -> CounterExample:
    sub = {name: Word(img) for name, img in images.items()}
    return CounterExample(
        substitution=sub,
        lhs_object=canonical(family, _instantiate(images, ident.lhs.symbols)),
        rhs_object=canonical(family, _instantiate(images, ident.rhs.symbols)),
    )


def _workers_from_env() -> int:
    raw = os.environ.get("PLACTIC_LAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _scan_range(family, ident, names, cands, start, stop):
    """Scan substitutions with first-variable candidate index in [start, stop)."""
    lhs, rhs = ident.lhs.symbols, ident.rhs.symbols
    rest = len(names) - 1
    for i in range(start, stop):
        head = cands[i]
        for tail in itertools.product(cands, repeat=rest):
            images = dict(zip(names, (head,) + tail))
            left = _canonical_seq(family, _instantiate(images, lhs))
            right = _canonical_seq(family, _instantiate(images, rhs))
            if left != right:
                return images
    return None


def _scan_chunk(args):
    family_value, ident_text, rank, max_len, start, stop = args
    family = MonoidFamily.parse(family_value)
    ident = Identity.parse(ident_text)
    names = ident.variables()
    cands = _image_candidates(rank, max_len)
    return _scan_range(family, ident, names, cands, start, stop)


def oracle(family: MonoidFamily, rank: int, ident: Identity, mode):
    """Substitute letter words over 1..rank for the variables and compare.

    Exhaustive mode enumerates images in shortlex order, first variable most
    significant, and reports the first counterexample; Random mode replays a
    seeded stream.  PLACTIC_LAB_THREADS > 1 splits the exhaustive scan over
    worker processes (same verdict, earliest counterexample).
    """
    _check_rank_arg(family, rank)
    names = ident.variables()
    if isinstance(mode, Exhaustive):
        cands = _image_candidates(rank, mode.max_len)
        if not names:
            checked = 1
            if ident.lhs == ident.rhs:
                return HoldsWithinBound(checked=checked)
            return _counterexample(family, ident, {})
        workers = _workers_from_env()
        if workers > 1 and len(cands) >= workers:
            images = _scan_parallel(family, ident, rank, mode.max_len, cands, workers)
        else:
            images = _scan_range(family, ident, names, cands, 0, len(cands))
        if images is None:
            return HoldsWithinBound(checked=len(cands) ** len(names))
        return _counterexample(family, ident, images)
    if isinstance(mode, RandomSearch):
        rng = random.Random(mode.seed)
        lhs, rhs = ident.lhs.symbols, ident.rhs.symbols
        for _ in range(mode.trials):
            images = {
                name: tuple(
                    rng.randint(1, rank) for _ in range(rng.randint(0, mode.max_len))
                )
                for name in names
            }
            if _canonical_seq(family, _instantiate(images, lhs)) != _canonical_seq(
                family, _instantiate(images, rhs)
            ):
                return _counterexample(family, ident, images)
        return HoldsWithinBound(checked=mode.trials)
    raise TypeError(f"unknown oracle mode {mode!r}")


def _scan_parallel(family, ident, rank, max_len, cands, workers):
    from concurrent.futures import ProcessPoolExecutor

    bounds = []
    step = (len(cands) + workers - 1) // workers
    for start in range(0, len(cands), step):
        bounds.append((start, min(start + step, len(cands))))
    args = [
        (family.value, ident.text(), rank, max_len, start, stop)
        for start, stop in bounds
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(_scan_chunk, args):
            if found is not None:
                return found
    return None


def verdict_to_json(verdict) -> dict:
    if isinstance(verdict, HoldsWithinBound):
        return {"verdict": "holds", "checked": verdict.checked}
    return {
        "verdict": "counterexample",
        "sub": {name: w.text() for name, w in sorted(verdict.substitution.items())},
    }


def find_counterexample(family: MonoidFamily, ident: Identity, cap: int = 6) -> dict:
    """Search with growing image length for a substitution separating the sides.

    Uses rank 2 (rank 1 for the one-generator family, whose alphabet is {1}).
    Raises DecisionMismatchError if nothing is found up to image length cap;
    that would mean the exact decision and the oracle disagree.
    """
    rank = 1 if family is MonoidFamily.FREE_MONOGENIC else 2
    for max_len in range(1, cap + 1):
        verdict = oracle(family, rank, ident, Exhaustive(max_len))
        if isinstance(verdict, CounterExample):
            return verdict.substitution
    raise DecisionMismatchError(
        f"no counterexample for {ident.text()!r} in {family} up to image length {cap}"
    )


# ---------------------------------------------------------------------------
# derivations


@dataclass(frozen=True)
class DerivationStep:
    """One rewrite: before = prefix + endo(side) + suffix, after uses the other side.

    endo maps every variable of the applied rule to a word; an image may be
    empty, which substitutes the unit element for that variable.
    """

    before: Word
    after: Word
    rule_index: int
    direction: str
    prefix: Word
    suffix: Word
    endo: dict = field(compare=True)


def _endo_concat(endo: Mapping[str, Word], syms: tuple) -> Word:
    out = []
    for name in syms:
        out.extend(endo[name].symbols)
    return Word(out)


def verify_derivation(sigma: Sequence[Identity], steps: Iterable[DerivationStep],
                      require_nonempty_images: bool = False) -> bool:
    """Recompute every step from its parts and check the chain links up."""
    prev = None
    for st in steps:
        if not isinstance(st.rule_index, int) or not 0 <= st.rule_index < len(sigma):
            return False
        rule = sigma[st.rule_index]
        if st.direction == LTR:
            src, dst = rule.lhs, rule.rhs
        elif st.direction == RTL:
            src, dst = rule.rhs, rule.lhs
        else:
            return False
        needed = set(src.symbols) | set(dst.symbols)
        if not needed.issubset(st.endo):
            return False
        if require_nonempty_images and any(not st.endo[v] for v in needed):
            return False
        try:
            before = st.prefix + _endo_concat(st.endo, src.symbols) + st.suffix
            after = st.prefix + _endo_concat(st.endo, dst.symbols) + st.suffix
        except ValueError:
            return False
        if st.before != before or st.after != after:
            return False
        if prev is not None and st.before != prev:
            return False
        prev = st.after
    return True


def invert_steps(steps: Sequence[DerivationStep]) -> list:
    """Run a derivation backwards: reverse the order and flip each step."""
    out = []
    for st in reversed(steps):
        out.append(
            DerivationStep(
                before=st.after,
                after=st.before,
                rule_index=st.rule_index,
                direction=RTL if st.direction == LTR else LTR,
                prefix=st.prefix,
                suffix=st.suffix,
                endo=st.endo,
            )
        )
    return out


def _word_of(syms) -> Word:
    return Word(tuple(syms))


def _gather_steps(w: Word) -> list:
    """Drive a word to the gathered form using xyx = yxx only.

    Working right to left, the currently last letter of the unfinished prefix
    is pulled together: each stray copy hops over the gap separating it from
    the next copy, which is one application of the rule with x bound to the
    letter and y to the gap.
    """
    syms = list(w.symbols)
    steps = []
    boundary = len(syms)
    while boundary > 0:
        z = syms[boundary - 1]
        positions = [i for i in range(boundary) if syms[i] == z]
        while True:
            run = 1
            while run < len(positions) and positions[-run - 1] == positions[-run] - 1:
                run += 1
            if run == len(positions):
                break
            i = positions[-run - 1]
            j = positions[-run]
            gap = syms[i + 1 : j]
            before = _word_of(syms)
            prefix = _word_of(syms[:i])
            suffix = _word_of(syms[j + 1 :])
            syms[i : j + 1] = gap + [z, z]
            steps.append(
                DerivationStep(
                    before=before,
                    after=_word_of(syms),
                    rule_index=0,
                    direction=LTR,
                    prefix=prefix,
                    suffix=suffix,
                    endo={"x": Word((z,)), "y": _word_of(gap)},
                )
            )
            positions = [i for i in range(boundary) if syms[i] == z]
        boundary -= len(positions)
    return steps


def _sylv_swap(syms: list, p: int, last: Mapping) -> DerivationStep:
    """Swap the adjacent pair at p, p+1 as one xysxty = yxsxty application.

    Both letters occur again later; the one whose final occurrence comes
    first anchors x, the other y, which decides the rule direction.
    """
    a, b = syms[p], syms[p + 1]
    la, lb = last[a], last[b]
    if la < lb:
        direction, q, r = LTR, la, lb
        ex, ey = a, b
    else:
        direction, q, r = RTL, lb, la
        ex, ey = b, a
    endo = {
        "x": Word((ex,)),
        "y": Word((ey,)),
        "s": _word_of(syms[p + 2 : q]),
        "t": _word_of(syms[q + 1 : r]),
    }
    before = _word_of(syms)
    prefix = _word_of(syms[:p])
    suffix = _word_of(syms[r + 1 :])
    syms[p], syms[p + 1] = b, a
    return DerivationStep(
        before=before,
        after=_word_of(syms),
        rule_index=0,
        direction=direction,
        prefix=prefix,
        suffix=suffix,
        endo=endo,
    )


def _sylv_steps(w: Word) -> list:
    """Sort each stretch between last occurrences, emitting one step per swap."""
    syms = list(w.symbols)
    last = _last_positions(tuple(syms))
    order = list(fp(tuple(syms)))
    fpidx = {s: k for k, s in enumerate(order)}
    big = len(order)
    steps = []
    prev_b = -1
    for bpos in sorted(last.values()):
        xk = syms[bpos]

        def key(c):
            return big if c == xk else fpidx[c]

        changed = True
        while changed:
            changed = False
            for p in range(prev_b + 1, bpos - 1):
                a, c = syms[p], syms[p + 1]
                if a == c or key(a) <= key(c):
                    continue
                steps.append(_sylv_swap(syms, p, last))
                changed = True
        prev_b = bpos
    assert tuple(syms) == _nf_sylv(w.symbols), "sorting must land on the normal form"
    return steps


def _mirror_steps(steps: Sequence[DerivationStep]) -> list:
    """Reverse every word in a derivation; xysxty rules become ytxsyx rules."""
    out = []
    for st in steps:
        out.append(
            DerivationStep(
                before=st.before.reverse(),
                after=st.after.reverse(),
                rule_index=st.rule_index,
                direction=st.direction,
                prefix=st.suffix.reverse(),
                suffix=st.prefix.reverse(),
                endo={name: img.reverse() for name, img in st.endo.items()},
            )
        )
    return out


def _baxt_swap(syms: list, p: int, first: Mapping, last: Mapping) -> DerivationStep:
    """Swap at p, p+1 with one of the two ten-letter rules.

    The rule and direction are picked so that the four anchor occurrences
    (both letters before the pair and after it) appear in the rule's order.
    """
    a, b = syms[p], syms[p + 1]
    fa, fb, la, lb = first[a], first[b], last[a], last[b]
    if fb < fa and la < lb:
        ri, direction, ex, ey = 0, LTR, a, b
        i1, i2, j1, j2 = fb, fa, la, lb
    elif fa < fb and la < lb:
        ri, direction, ex, ey = 1, LTR, a, b
        i1, i2, j1, j2 = fa, fb, la, lb
    elif fa < fb and lb < la:
        ri, direction, ex, ey = 0, RTL, b, a
        i1, i2, j1, j2 = fa, fb, lb, la
    else:
        ri, direction, ex, ey = 1, RTL, b, a
        i1, i2, j1, j2 = fb, fa, lb, la
    endo = {
        "x": Word((ex,)),
        "y": Word((ey,)),
        "s": _word_of(syms[i1 + 1 : i2]),
        "t": _word_of(syms[i2 + 1 : p]),
        "h": _word_of(syms[p + 2 : j1]),
        "k": _word_of(syms[j1 + 1 : j2]),
    }
    before = _word_of(syms)
    prefix = _word_of(syms[:i1])
    suffix = _word_of(syms[j2 + 1 :])
    syms[p], syms[p + 1] = b, a
    return DerivationStep(
        before=before,
        after=_word_of(syms),
        rule_index=ri,
        direction=direction,
        prefix=prefix,
        suffix=suffix,
        endo=endo,
    )


def _baxt_steps(w: Word) -> list:
    """Sort the letters strictly between first/last occurrences into ip order."""
    syms = list(w.symbols)
    first = _first_positions(tuple(syms))
    last = _last_positions(tuple(syms))
    ipidx = {s: k for k, s in enumerate(ip(tuple(syms)))}
    keep = sorted(set(first.values()) | set(last.values()))
    steps = []
    prev = -1
    for pos in keep:
        changed = True
        while changed:
            changed = False
            for p in range(prev + 1, pos - 1):
                a, c = syms[p], syms[p + 1]
                if a == c or ipidx[a] <= ipidx[c]:
                    continue
                steps.append(_baxt_swap(syms, p, first, last))
                changed = True
        prev = pos
    assert tuple(syms) == _nf_baxt(w.symbols), "sorting must land on the normal form"
    return steps


def normalize_derivation(family: MonoidFamily, w: Word) -> list:
    """A verified derivation from w to normal_form(family, w), basis rules only.

    Returns the empty list when w is already normal.
    """
    if family in (MonoidFamily.STAL, MonoidFamily.TAIG):
        return _gather_steps(w)
    if family is MonoidFamily.SYLV:
        return _sylv_steps(w)
    if family is MonoidFamily.SYLV_SHARP:
        return _mirror_steps(_sylv_steps(w.reverse()))
    if family is MonoidFamily.BAXT:
        return _baxt_steps(w)
    raise ValueError(f"no normal form derivation for {family}")


def derivation_certificate(family: MonoidFamily, ident: Identity) -> list:
    """Derivation from lhs to rhs through the shared normal form."""
    if not satisfies(family, ident):
        raise ValueError(f"{family} does not satisfy {ident.text()!r}")
    down = normalize_derivation(family, ident.lhs)
    up = invert_steps(normalize_derivation(family, ident.rhs))
    return down + up


# ---------------------------------------------------------------------------
# bounded search for derivations over arbitrary rule systems


def _match_pattern(pattern: tuple, factor: tuple) -> list:
    """All consistent variable -> nonempty tuple maps with image concat = factor."""
    results = []
    bound: dict = {}

    def go(pi: int, fi: int):
        if pi == len(pattern):
            if fi == len(factor):
                results.append(dict(bound))
            return
        name = pattern[pi]
        if name in bound:
            img = bound[name]
            if factor[fi : fi + len(img)] == img:
                go(pi + 1, fi + len(img))
            return
        slack = len(factor) - fi - (len(pattern) - pi - 1)
        for length in range(1, slack + 1):
            bound[name] = factor[fi : fi + length]
            go(pi + 1, fi + length)
            del bound[name]

    go(0, 0)
    results.sort(key=lambda d: tuple(sorted(d.items())))
    return results


def _neighbors(word: Word, sigma: Sequence[Identity], max_word_len: int) -> list:
    """All single rewrites of word, nonempty images, deterministic order."""
    syms = word.symbols
    n = len(syms)
    out = []
    for ri, rule in enumerate(sigma):
        for direction, src, dst in ((LTR, rule.lhs, rule.rhs), (RTL, rule.rhs, rule.lhs)):
            if not set(dst.symbols).issubset(set(src.symbols)):
                continue
            plen = len(src.symbols)
            if plen == 0:
                continue
            for start in range(n):
                for end in range(start + plen, n + 1):
                    for images in _match_pattern(src.symbols, syms[start:end]):
                        replaced = (
                            syms[:start] + _instantiate(images, dst.symbols) + syms[end:]
                        )
                        if len(replaced) > max_word_len:
                            continue
                        step = DerivationStep(
                            before=word,
                            after=Word(replaced),
                            rule_index=ri,
                            direction=direction,
                            prefix=Word(syms[:start]),
                            suffix=Word(syms[end:]),
                            endo={k: Word(v) for k, v in images.items()},
                        )
                        out.append((Word(replaced), step))
    return out


def derive_search(
    sigma: Sequence[Identity],
    u: Word,
    v: Word,
    max_steps: int = 8,
    max_word_len: int = 16,
) -> Optional[list]:
    """Bidirectional breadth-first search for a derivation u -> v over sigma.

    Single steps use nonempty variable images only.  Returns the step list,
    [] when u equals v, or None when no derivation exists within the bounds.
    """
    if u == v:
        return []
    forward = {u: None}
    backward = {v: None}
    ffront, bfront = [u], [v]
    depth = 0

    def rebuild(meet: Word) -> list:
        path = []
        node = meet
        while forward[node] is not None:
            parent, step = forward[node]
            path.append(step)
            node = parent
        path.reverse()
        node = meet
        while backward[node] is not None:
            parent, step = backward[node]
            path.extend(invert_steps([step]))
            node = parent
        return path

    while ffront and bfront and depth < max_steps:
        depth += 1
        if len(ffront) <= len(bfront):
            front, seen, other = ffront, forward, backward
        else:
            front, seen, other = bfront, backward, forward
        new = []
        for word in front:
            for nw, step in _neighbors(word, sigma, max_word_len):
                if nw in seen:
                    continue
                seen[nw] = (word, step)
                new.append(nw)
                if nw in other:
                    return rebuild(nw)
        if front is ffront:
            ffront = new
        else:
            bfront = new
    return None


# ---------------------------------------------------------------------------
# serialization


def step_to_json(step: DerivationStep) -> dict:
    return {
        "before": step.before.text(),
        "after": step.after.text(),
        "rule": step.rule_index,
        "direction": step.direction,
        "prefix": step.prefix.text(),
        "suffix": step.suffix.text(),
        "endo": {name: img.text() for name, img in sorted(step.endo.items())},
    }


def step_from_json(data: dict, kind: str = "variable") -> DerivationStep:
    parse = Word.variables if kind == "variable" else Word.letters
    return DerivationStep(
        before=parse(data["before"]),
        after=parse(data["after"]),
        rule_index=data["rule"],
        direction=data["direction"],
        prefix=parse(data["prefix"]),
        suffix=parse(data["suffix"]),
        endo={name: parse(img) for name, img in data["endo"].items()},
    )


def derivation_to_json(steps: Iterable[DerivationStep]) -> list:
    return [step_to_json(st) for st in steps]
