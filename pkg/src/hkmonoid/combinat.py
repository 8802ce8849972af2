"""Catalan-side combinatorics: pattern avoidance and special words."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .heckea import length
from .mixedgraph import MixedGraph

__all__ = [
    "PatternReport",
    "avoiders_321",
    "catalan",
    "commutation_canonical",
    "is_321_avoiding",
    "is_short_braid_avoiding",
    "is_special",
    "is_strongly_special",
    "kiselman_graph",
    "pattern_report",
    "reduced_words",
    "special_words",
    "special_words_count",
    "strongly_special_classes",
    "strongly_special_words",
]

MAX_AVOIDER_DEGREE = 10
MAX_STRONGLY_SPECIAL_RANK = 7
MAX_SPECIAL_RANK = 4


class WordBudgetExceeded(RuntimeError):
    pass


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return comb(2 * n, n) // (n + 1)


def is_321_avoiding(w) -> bool:
    """No i < j < k with w[i] > w[j] > w[k]."""
    m = len(w)
    if m < 3:
        return True
    prefix_max = [0] * m
    best = 0
    for j in range(m):
        prefix_max[j] = best
        best = max(best, w[j])
    low = float("inf")
    for j in range(m - 1, -1, -1):
        if prefix_max[j] > w[j] > low:
            return False
        low = min(low, w[j])
    return True


def avoiders_321(m: int, listing: bool = False):
    """Number of 321-avoiding permutations of 1..m (and the list if asked)."""
    if m > MAX_AVOIDER_DEGREE:
        raise ValueError(f"degree limited to {MAX_AVOIDER_DEGREE}")
    hits = [w for w in itertools.permutations(range(1, m + 1)) if is_321_avoiding(w)]
    return (len(hits), hits) if listing else len(hits)


def _swap(w, i):
    return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]


def reduced_words(w) -> list[tuple[int, ...]]:
    """Every reduced word of the permutation w (exponential; small ranks only)."""
    w = tuple(w)

    @lru_cache(maxsize=None)
    def words(v):
        descents = [i for i in range(1, len(v)) if v[i - 1] > v[i]]
        if not descents:
            return ((),)
        return tuple(u + (i,) for i in descents for u in words(_swap(v, i)))

    return list(words(w))


@lru_cache(maxsize=None)
def _has_braid_word(w) -> bool:
    # some reduced word of w contains a factor i j i with |i - j| = 1
    ell = length(w)
    m = len(w)
    for i in range(1, m):
        if w[i - 1] < w[i]:
            continue
        for j in (i - 1, i + 1):
            if not 1 <= j < m:
                continue
            v = _swap(_swap(_swap(w, i), j), i)
            if length(v) == ell - 3:
                return True
    return any(w[i - 1] > w[i] and _has_braid_word(_swap(w, i)) for i in range(1, m))


def is_short_braid_avoiding(w) -> bool:
    """True iff no reduced word of w contains a factor s_i s_j s_i with |i - j| = 1."""
    if len(w) > MAX_AVOIDER_DEGREE:
        raise ValueError(f"rank limited to S_{MAX_AVOIDER_DEGREE}")
    return not _has_braid_word(tuple(w))


@dataclass(frozen=True)
class PatternReport:
    n: int
    count_321_avoiding: int
    count_short_braid_avoiding: int
    catalan: int

    @property
    def consistent(self) -> bool:
        return self.count_321_avoiding == self.count_short_braid_avoiding == self.catalan


def pattern_report(n: int) -> PatternReport:
    """Counts in S_{n+1}."""
    perms = list(itertools.permutations(range(1, n + 2)))
    return PatternReport(
        n,
        sum(1 for w in perms if is_321_avoiding(w)),
        sum(1 for w in perms if is_short_braid_avoiding(w)),
        catalan(n + 1),
    )


def is_strongly_special(word, n: int) -> bool:
    """Between any two occurrences of a_i occur both a_{i-1} and a_{i+1}."""
    last = {}
    for pos, a in enumerate(word):
        if a in last:
            between = set(word[last[a] + 1 : pos])
            if not (a > 1 and a < n and a - 1 in between and a + 1 in between):
                return False
        last[a] = pos
    return True


def is_special(word, n: int) -> bool:
    """Between any two occurrences of a_i occur some larger and some smaller letter."""
    last = {}
    for pos, a in enumerate(word):
        if a in last:
            between = word[last[a] + 1 : pos]
            if not (any(b > a for b in between) and any(b < a for b in between)):
                return False
        last[a] = pos
    return True


def _dfs_words(n: int, ok_after, cap: int):
    """All words built letter by letter while ``ok_after(word, letter)`` holds."""
    out = []
    stack = [()]
    while stack:
        w = stack.pop()
        out.append(w)
        if len(w) >= cap:
            raise WordBudgetExceeded(f"word length cap {cap} reached")
        for a in range(n, 0, -1):
            if ok_after(w, a):
                stack.append(w + (a,))
    return out


def _since_last(w, a):
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] == a:
            return set(w[pos + 1 :])
    return None


def strongly_special_words(n: int) -> list[tuple[int, ...]]:
    def ok(w, a):
        between = _since_last(w, a)
        return between is None or (1 < a < n and a - 1 in between and a + 1 in between)

    return _dfs_words(n, ok, cap=2**n + 1)


def special_words(n: int) -> list[tuple[int, ...]]:
    def ok(w, a):
        between = _since_last(w, a)
        return between is None or (any(b > a for b in between) and any(b < a for b in between))

    return _dfs_words(n, ok, cap=2**n + 1)


def commutation_canonical(word) -> tuple[int, ...]:
    """Lexicographically least word reachable by swapping adjacent a_i a_j, |i - j| > 1.

    Greedy: repeatedly take the smallest letter that can be commuted to the front.
    """
    rest = list(word)
    out = []
    while rest:
        best = None
        for pos, a in enumerate(rest):
            if all(abs(a - b) > 1 for b in rest[:pos]) and (best is None or a < rest[best]):
                best = pos
        out.append(rest.pop(best))
    return tuple(out)


def commutation_class(word) -> set[tuple[int, ...]]:
    """Breadth-first closure under commuting moves."""
    start = tuple(word)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(len(w) - 1):
                if abs(w[i] - w[i + 1]) > 1:
                    v = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        frontier = nxt
    return seen


def strongly_special_classes(n: int, check_closure: bool = False) -> int:
    """Number of commutation classes of strongly special words over a_1..a_n.

    With ``check_closure`` every commuting move of every strongly special
    word is verified to stay strongly special.
    """
    if n > MAX_STRONGLY_SPECIAL_RANK:
        raise ValueError(f"rank limited to {MAX_STRONGLY_SPECIAL_RANK}")
    words = strongly_special_words(n)
    if check_closure:
        pool = set(words)
        for w in words:
            for i in range(len(w) - 1):
                if abs(w[i] - w[i + 1]) > 1 and w[:i] + (w[i + 1], w[i]) + w[i + 2 :] not in pool:
                    raise AssertionError(f"class of {w} leaves the strongly special words")
    return len({commutation_canonical(w) for w in words})


def special_words_count(n: int) -> int:
    if n > MAX_SPECIAL_RANK:
        raise ValueError(f"rank limited to {MAX_SPECIAL_RANK}")
    return len(special_words(n))


def kiselman_graph(n: int) -> MixedGraph:
    """Complete graph with every edge oriented from the larger to the smaller label."""
    if n < 1:
        raise ValueError("n must be positive")
    return MixedGraph.build(n, arcs=[(i, j) for i in range(1, n + 1) for j in range(1, i)])
