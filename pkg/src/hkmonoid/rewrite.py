"""Presentations of Hecke-Kiselman monoids and shortlex Knuth-Bendix completion.

Words are tuples of generator indices ``1..n``; the empty tuple is the
identity.  Rules always rewrite a word to a shortlex-smaller one, so every
reduction terminates.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .mixedgraph import MixedGraph
from .monoid import FiniteMonoid, format_word

__all__ = [
    "COMPLETE",
    "BUDGET_EXCEEDED",
    "FINITE",
    "EnumerationResult",
    "Presentation",
    "RewriteSystem",
    "content",
    "default_budgets",
    "enumerate_monoid",
    "hk_monoid",
    "kb_complete",
    "normal_form",
    "presentation_of",
    "shortlex_key",
]

Word = tuple

COMPLETE = "Complete"
BUDGET_EXCEEDED = "BudgetExceeded"
FINITE = "Finite"

DEFAULT_MAX_RULES = 20000
DEFAULT_MAX_LEN = 64
DEFAULT_MAX_ELEMENTS = 200000


def default_budgets() -> dict[str, int]:
    """Default budgets scaled by the HK_BUDGET_SCALE environment variable."""
    scale = float(os.environ.get("HK_BUDGET_SCALE", "1") or 1)
    return {
        "max_rules": int(DEFAULT_MAX_RULES * scale),
        "max_len": int(DEFAULT_MAX_LEN * scale),
        "max_elements": int(DEFAULT_MAX_ELEMENTS * scale),
    }


def shortlex_key(w: Sequence[int]):
    return (len(w), tuple(w))


def content(w: Iterable[int]) -> frozenset[int]:
    return frozenset(w)


@dataclass(frozen=True)
class Presentation:
    n: int
    relations: tuple[tuple[Word, Word], ...]

    def __post_init__(self):
        for lhs, rhs in self.relations:
            for k in lhs + rhs:
                if not 1 <= k <= self.n:
                    raise ValueError(f"letter {k} out of range 1..{self.n}")

    def reversed(self) -> "Presentation":
        """Presentation of the opposite monoid."""
        return Presentation(self.n, tuple((l[::-1], r[::-1]) for l, r in self.relations))


def presentation_of(g: MixedGraph) -> Presentation:
    """Defining relations of HK(g), one family per vertex pair."""
    rels = [((i, i), (i,)) for i in g.vertices]
    for i in g.vertices:
        for j in range(i + 1, g.n + 1):
            kind = g.kind(i, j)
            if kind is None:
                rels.append(((i, j), (j, i)))
            elif kind == "un":
                rels.append(((i, j, i), (j, i, j)))
            else:
                a, b = (i, j) if kind == "out" else (j, i)
                rels.append(((a, b, a), (a, b)))
                rels.append(((b, a, b), (a, b)))
    return Presentation(g.n, tuple(rels))


class _Rules:
    """Rule dictionary with the set of left-hand-side lengths kept current."""

    def __init__(self):
        self.map: dict[Word, Word] = {}
        self._lengths = Counter()
        self._sorted = []

    def add(self, lhs: Word, rhs: Word):
        if lhs not in self.map:
            self._lengths[len(lhs)] += 1
            if self._lengths[len(lhs)] == 1:
                self._sorted = sorted(self._lengths)
        self.map[lhs] = rhs

    def remove(self, lhs: Word) -> Word:
        rhs = self.map.pop(lhs)
        self._lengths[len(lhs)] -= 1
        if self._lengths[len(lhs)] == 0:
            del self._lengths[len(lhs)]
            self._sorted = sorted(self._lengths)
        return rhs

    def reduce(self, w: Sequence[int], stack: list | None = None) -> Word:
        """Leftmost-innermost rewriting: reduce each redex as soon as it is read."""
        rules, lengths = self.map, self._sorted
        out = list(stack) if stack is not None else []
        todo = list(reversed(w))
        while todo:
            out.append(todo.pop())
            m = len(out)
            for L in lengths:
                if L > m:
                    break
                rhs = rules.get(tuple(out[m - L :]))
                if rhs is not None:
                    del out[m - L :]
                    todo.extend(reversed(rhs))
                    break
        return tuple(out)

    def has_suffix_redex(self, w: Word) -> bool:
        m = len(w)
        for L in self._sorted:
            if L > m:
                break
            if w[m - L :] in self.map:
                return True
        return False


@dataclass
class RewriteSystem:
    n: int
    rules: list[tuple[Word, Word]]
    status: str
    _rules: _Rules = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._rules is None:
            r = _Rules()
            for lhs, rhs in self.rules:
                r.add(tuple(lhs), tuple(rhs))
            self._rules = r

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def reduce(self, w: Sequence[int]) -> Word:
        return self._rules.reduce(w)

    def is_irreducible(self, w: Sequence[int]) -> bool:
        return self.reduce(w) == tuple(w)

    def critical_pairs_resolve(self) -> bool:
        """True iff every critical pair of the current rules is joinable."""
        for _, a, b in _critical_pairs(self.rules):
            if self.reduce(a) != self.reduce(b):
                return False
        return True


def _orient(u: Word, v: Word) -> tuple[Word, Word]:
    return (u, v) if shortlex_key(u) > shortlex_key(v) else (v, u)


def _critical_pairs(rules: Sequence[tuple[Word, Word]], skip: set | None = None):
    """(overlap word, two one-step reducts) for every proper overlap of left-hand sides."""
    by_first = {}
    for l2, r2 in rules:
        by_first.setdefault(l2[0], []).append((l2, r2))
    for l1, r1 in rules:
        for k in range(1, len(l1)):
            # suffix l1[k:] of length len(l1) - k must be a proper prefix of l2
            suffix = l1[k:]
            for l2, r2 in by_first.get(suffix[0], ()):
                if len(l2) <= len(suffix) or l2[: len(suffix)] != suffix:
                    continue
                if skip is not None and ((l1, r1), (l2, r2)) in skip:
                    continue
                overlap = l1 + l2[len(suffix) :]
                yield overlap, r1 + l2[len(suffix) :], l1[:k] + r2


def kb_complete(
    p: Presentation, max_rules: int | None = None, max_len: int | None = None
) -> RewriteSystem:
    """Shortlex Knuth-Bendix completion with rule-count and rule-length budgets.

    Pending critical pairs are resolved in shortlex order of their overlap
    words.  Exceeding a budget returns the partial system with status
    BUDGET_EXCEEDED.
    """
    budgets = default_budgets()
    max_rules = budgets["max_rules"] if max_rules is None else max_rules
    max_len = budgets["max_len"] if max_len is None else max_len
    rules = _Rules()

    def add(u, v) -> bool:
        u, v = rules.reduce(u), rules.reduce(v)
        if u == v:
            return False
        lhs, rhs = _orient(u, v)
        if len(lhs) > max_len:
            raise _OverBudget
        rules.add(lhs, rhs)
        if len(rules.map) > max_rules:
            raise _OverBudget
        return True

    def interreduce():
        changed = True
        while changed:
            changed = False
            for lhs in sorted(rules.map, key=shortlex_key):
                if lhs not in rules.map:
                    continue
                rhs = rules.remove(lhs)
                l2, r2 = rules.reduce(lhs), rules.reduce(rhs)
                if l2 == lhs:
                    rules.add(lhs, r2)
                    continue
                changed = True
                if l2 != r2:
                    lo, ro = _orient(l2, r2)
                    rules.add(lo, ro)

    def snapshot():
        return sorted(rules.map.items(), key=lambda kv: shortlex_key(kv[0]))

    status = COMPLETE
    checked = set()
    try:
        for lhs, rhs in sorted(p.relations, key=lambda r: (shortlex_key(max(r, key=shortlex_key)), r)):
            add(tuple(lhs), tuple(rhs))
        interreduce()
        while True:
            current = snapshot()
            pending = sorted(
                _critical_pairs(current, skip=checked), key=lambda t: (shortlex_key(t[0]), t[1], t[2])
            )
            checked.update((a, b) for a in current for b in current)
            if not pending:
                # rules can vanish during interreduction; re-verify everything once
                final = snapshot()
                if all(rules.reduce(a) == rules.reduce(b) for _, a, b in _critical_pairs(final)):
                    break
                checked.clear()
                continue
            new = False
            for _, a, b in pending:
                new |= add(a, b)
            if new:
                interreduce()
    except _OverBudget:
        status = BUDGET_EXCEEDED
    return RewriteSystem(p.n, snapshot(), status)


class _OverBudget(Exception):
    pass


def normal_form(rs: RewriteSystem, w: Sequence[int]) -> Word:
    if not rs.complete:
        raise ValueError("normal forms need a complete rewriting system")
    return rs.reduce(w)


@dataclass
class EnumerationResult:
    n: int
    status: str
    elements: list[Word]
    right_cayley: list[list[int]]
    content: list[frozenset]
    # None: not computed; True/False: irreducible-word automaton (a)cyclic
    certified_finite: bool | None = None
    automaton_count: int | None = None

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def finite(self) -> bool:
        return self.status == FINITE

    def to_monoid(self) -> FiniteMonoid:
        if not self.finite:
            raise ValueError("enumeration did not finish")
        return FiniteMonoid.from_right_cayley(self.right_cayley, 0, labels=list(self.elements))

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "size": self.size,
            "elements": [format_word(w, self.n) for w in self.elements],
            "cayley": self.right_cayley,
        }

    def to_dot(self) -> str:
        names = [format_word(w, self.n) or "e" for w in self.elements]
        lines = ["digraph cayley {"]
        for x, name in enumerate(names):
            lines.append(f'  {x} [label="{name}"];')
        for x, row in enumerate(self.right_cayley):
            for k, y in enumerate(row, start=1):
                if y != x:
                    lines.append(f'  {x} -> {y} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def irreducible_automaton(rs: RewriteSystem) -> tuple[bool, int | None]:
    """Whether the language of irreducible words is finite, and its size if so.

    Aho-Corasick automaton over the left-hand sides; a word is irreducible
    iff its run avoids states whose suffix matches a left-hand side.
    """
    n = rs.n
    goto = [{}]
    terminal = [False]
    for lhs, _ in rs.rules:
        s = 0
        for a in lhs:
            nxt = goto[s].get(a)
            if nxt is None:
                nxt = len(goto)
                goto[s][a] = nxt
                goto.append({})
                terminal.append(False)
            s = nxt
        terminal[s] = True
    fail = [0] * len(goto)
    delta = [[0] * (n + 1) for _ in goto]
    queue = deque()
    for a in range(1, n + 1):
        t = goto[0].get(a)
        if t is not None:
            delta[0][a] = t
            queue.append(t)
    while queue:
        s = queue.popleft()
        terminal[s] = terminal[s] or terminal[fail[s]]
        for a in range(1, n + 1):
            t = goto[s].get(a)
            if t is None:
                delta[s][a] = delta[fail[s]][a]
            else:
                fail[t] = delta[fail[s]][a]
                delta[s][a] = t
                queue.append(t)
    # DFS over live states; colour 1 = on stack, 2 = done
    colour = [0] * len(goto)
    count = [0] * len(goto)
    stack = [(0, 1)]
    colour[0] = 1
    while stack:
        s, a = stack[-1]
        if a <= n:
            stack[-1] = (s, a + 1)
            t = delta[s][a]
            if terminal[t]:
                continue
            if colour[t] == 1:
                return False, None
            if colour[t] == 0:
                colour[t] = 1
                stack.append((t, 1))
            continue
        stack.pop()
        colour[s] = 2
        count[s] = 1 + sum(count[delta[s][b]] for b in range(1, n + 1) if not terminal[delta[s][b]])
    return True, count[0]


def enumerate_monoid(rs: RewriteSystem, max_elements: int | None = None) -> EnumerationResult:
    """Breadth-first listing of irreducible words and the right Cayley graph."""
    if not rs.complete:
        raise ValueError("enumeration needs a complete rewriting system")
    if max_elements is None:
        max_elements = default_budgets()["max_elements"]
    acyclic, count = irreducible_automaton(rs)
    n = rs.n
    rules = rs._rules
    elements = [()]
    content_of = [frozenset()]
    index = {(): 0}
    x = 0
    status = FINITE
    while x < len(elements):
        w = elements[x]
        for g in range(1, n + 1):
            child = w + (g,)
            if not rules.has_suffix_redex(child):
                if len(elements) >= max_elements:
                    status = BUDGET_EXCEEDED
                    break
                index[child] = len(elements)
                elements.append(child)
                content_of.append(content_of[x] | {g})
        if status != FINITE:
            break
        x += 1
    cayley = []
    if status == FINITE:
        for w in elements:
            cayley.append([index[rules.reduce((g,), stack=w)] for g in range(1, n + 1)])
        if not acyclic or count != len(elements):
            raise AssertionError("finiteness certificate disagrees with enumeration")
    return EnumerationResult(n, status, elements, cayley, content_of, acyclic, count)


@dataclass
class HKBuild:
    graph: MixedGraph
    presentation: Presentation
    system: RewriteSystem
    enumeration: EnumerationResult | None
    monoid: FiniteMonoid | None

    @property
    def status(self) -> str:
        if not self.system.complete:
            return BUDGET_EXCEEDED
        return self.enumeration.status

    @property
    def certified_infinite(self) -> bool:
        """Complete system whose irreducible words form an infinite language."""
        return self.system.complete and self.enumeration.certified_finite is False

    def equal(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return normal_form(self.system, u) == normal_form(self.system, v)


def hk_monoid(
    g: MixedGraph,
    max_rules: int | None = None,
    max_len: int | None = None,
    max_elements: int | None = None,
) -> HKBuild:
    """Presentation, completion and enumeration of HK(g) in one call."""
    p = presentation_of(g)
    rs = kb_complete(p, max_rules, max_len)
    if not rs.complete:
        return HKBuild(g, p, rs, None, None)
    if max_elements is None:
        max_elements = default_budgets()["max_elements"]
    acyclic, _ = irreducible_automaton(rs)
    if not acyclic:
        return HKBuild(g, p, rs, EnumerationResult(g.n, BUDGET_EXCEEDED, [], [], [], False, None), None)
    en = enumerate_monoid(rs, max_elements)
    return HKBuild(g, p, rs, en, en.to_monoid() if en.finite else None)


def maps_to_homomorphism(
    source: Presentation, target: RewriteSystem, images: Sequence[Sequence[int]], anti: bool = False
) -> bool:
    """Whether generator i -> ``images[i - 1]`` respects every relation of ``source``.

    Equality in the target is decided by normal forms, so ``target`` must be
    complete.  With ``anti`` the images of words are read right to left.
    """
    if not target.complete:
        raise ValueError("target rewriting system is not complete")

    def image(w):
        letters = reversed(w) if anti else w
        return tuple(k for i in letters for k in images[i - 1])

    return all(target.reduce(image(l)) == target.reduce(image(r)) for l, r in source.relations)


def presented_isomorphism(a: HKBuild, b: HKBuild, anti: bool = False) -> tuple[int, ...] | None:
    """Generator permutation inducing an (anti-)isomorphism HK(a) -> HK(b), else None.

    Every isomorphism of HK monoids permutes the canonical generators, so it
    is enough to test the n! generator bijections in both directions.
    """
    if a.graph.n != b.graph.n:
        return None
    n = a.graph.n
    for sigma in itertools.permutations(range(1, n + 1)):
        inverse = [0] * n
        for i, s in enumerate(sigma, start=1):
            inverse[s - 1] = i
        forward = [(s,) for s in sigma]
        backward = [(i,) for i in inverse]
        if maps_to_homomorphism(a.presentation, b.system, forward, anti) and maps_to_homomorphism(
            b.presentation, a.system, backward, anti
        ):
            return sigma
    return None
