"""Type-A 0-Hecke monoids on permutations.

A permutation ``w`` of ``1..n+1`` is stored as the tuple ``(w(1), ..., w(n+1))``
and stands for the basis element H_w.  The generator eps_i acts by
multiplying with the adjacent transposition s_i when that makes ``w`` longer
and fixes ``w`` otherwise.
"""

from __future__ import annotations

from .mixedgraph import MixedGraph
from .monoid import FiniteMonoid, congruence_closure, from_generators, quotient

__all__ = [
    "MAX_RANK",
    "element_of_word",
    "enumerate_hecke",
    "hecke_mult",
    "kiselman_congruence_pairs",
    "kiselman_quotient",
    "left_mult_gen",
    "length",
    "longest_parabolic",
    "reduced_word",
    "right_mult_gen",
]

Perm = tuple

MAX_RANK = 7


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 2))


def length(w: Perm) -> int:
    """Number of inversions."""
    m = len(w)
    return sum(1 for a in range(m) for b in range(a + 1, m) if w[a] > w[b])


def _check(w: Perm, i: int):
    if not 1 <= i < len(w):
        raise ValueError(f"generator index {i} out of range 1..{len(w) - 1}")


def right_mult_gen(w: Perm, i: int) -> Perm:
    """H_w * eps_i: swap positions i, i+1 if that adds an inversion."""
    _check(w, i)
    if w[i - 1] < w[i]:
        return w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
    return w


def left_mult_gen(w: Perm, i: int) -> Perm:
    """eps_i * H_w: swap the values i, i+1 if that adds an inversion."""
    _check(w, i)
    p, q = w.index(i), w.index(i + 1)
    if p < q:
        return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)
    return w


def element_of_word(word, n: int) -> Perm:
    w = identity_perm(n)
    for i in word:
        w = right_mult_gen(w, i)
    return w


def reduced_word(w: Perm) -> tuple[int, ...]:
    """Reduced word obtained by repeatedly stripping the leftmost right descent."""
    letters = []
    w = tuple(w)
    while True:
        i = next((i for i in range(1, len(w)) if w[i - 1] > w[i]), None)
        if i is None:
            break
        w = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
        letters.append(i)
    return tuple(reversed(letters))


def hecke_mult(u: Perm, v: Perm) -> Perm:
    """H_u * H_v, folding a reduced word of v into u."""
    for i in reduced_word(v):
        u = right_mult_gen(u, i)
    return u


def enumerate_hecke(n: int) -> FiniteMonoid:
    """The 0-Hecke monoid of type A_n; labels are the permutations."""
    if n < 1 or n > MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}")
    return from_generators(list(range(1, n + 1)), right_mult_gen, identity_perm(n), max_size=40320)


def longest_parabolic(X, n: int) -> Perm:
    """Longest element of the subgroup of S_{n+1} generated by s_i, i in X."""
    X = sorted(set(X))
    for i in X:
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
    start = identity_perm(n)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for i in X:
                v = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1 :]
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return max(seen, key=lambda w: (length(w), w))


def _check_natural_path(g: MixedGraph):
    expected = {(i, i + 1) for i in range(1, g.n)}
    if {(a, b) for a, b, _ in g.edges} != expected:
        raise ValueError("underlying graph must be the path 1 - 2 - ... - n")


def kiselman_congruence_pairs(g: MixedGraph) -> list[tuple[Perm, Perm]]:
    """Pairs (H_{iji}, H_{ij}) for every arrow i -> j of an orientation of the A_n path."""
    _check_natural_path(g)
    return [(element_of_word((i, j, i), g.n), element_of_word((i, j), g.n)) for i, j in g.arcs()]


def kiselman_quotient(g: MixedGraph) -> FiniteMonoid:
    """Quotient of the A_n 0-Hecke monoid by the congruence the arrows of g generate."""
    _check_natural_path(g)
    if g.n == 0:
        raise ValueError("empty graph")
    H = enumerate_hecke(g.n)
    where = {w: x for x, w in enumerate(H.labels)}
    pairs = [(where[a], where[b]) for a, b in kiselman_congruence_pairs(g)]
    return quotient(H, congruence_closure(H, pairs))
