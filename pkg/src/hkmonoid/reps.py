"""Concrete representations of HK monoids and of the Catalan monoid.

Transformations of a finite point set are tuples of 1-based images: ``f[p-1]``
is the image of point ``p``.  Products follow ordinary function composition,
so the word ``a b`` is represented by ``f_a o f_b`` (``f_b`` applied first).
Matrices are tuples of rows over the integers and multiply in word order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .mixedgraph import MixedGraph, classify_shape
from .monoid import FiniteMonoid, from_generators

__all__ = [
    "RepReport",
    "boolean_generators",
    "c_transformations",
    "check_faithful",
    "check_hk_relations",
    "compose_boolean",
    "compose_matrix",
    "compose_transformations",
    "image_semigroup",
    "is_order_preserving_decreasing",
    "is_regular_action",
    "m1_act",
    "m1_elements",
    "m2_act",
    "m2_elements",
    "projective_module",
    "simple_characters",
    "tau_generators",
    "theta_generators",
]

Transformation = tuple
Matrix = tuple


class RepresentationError(ValueError):
    pass


# ----------------------------------------------------------------------------
# products


def compose_transformations(f: Transformation, g: Transformation) -> Transformation:
    """f o g: apply g, then f."""
    return tuple(f[q - 1] for q in g)


def compose_matrix(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def compose_boolean(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(int(any(x and y for x, y in zip(row, col))) for col in cols) for row in a)


def identity_transformation(m: int) -> Transformation:
    return tuple(range(1, m + 1))


def identity_matrix(m: int) -> Matrix:
    return tuple(tuple(int(r == c) for c in range(m)) for r in range(m))


COMPOSE = {
    "transformation": compose_transformations,
    "matrix": compose_matrix,
    "boolean": compose_boolean,
}


def _identity_like(kind: str, m: int):
    return identity_transformation(m) if kind == "transformation" else identity_matrix(m)


# ----------------------------------------------------------------------------
# transformation representation by the maps tau_i


def _points(g: MixedGraph):
    arcs = g.arcs()
    points = [("edge", s, t) for s, t in arcs]
    for v in g.vertices:
        if not g.out_neighbours(v):
            points.append(("sink", v))
            if len(g.in_neighbours(v)) == 2:
                points.append(("sink2", v))
    for v in g.vertices:
        if not g.in_neighbours(v):
            points.append(("source", v))
    return points


def _choice(g: MixedGraph, swap: bool) -> dict:
    """The injection sending sink copies to in-edges, or to the source copy if isolated."""
    out = {}
    for v in g.vertices:
        if g.out_neighbours(v):
            continue
        ins = g.in_neighbours(v)
        if not ins:
            out[("sink", v)] = ("source", v)
        elif len(ins) == 1:
            out[("sink", v)] = ("edge", ins[0], v)
        else:
            first, second = ("edge", ins[0], v), ("edge", ins[1], v)
            if swap:
                first, second = second, first
            out[("sink", v)] = first
            out[("sink2", v)] = second
    return out


def tau_generators(g: MixedGraph, swap_choice: bool = False):
    """Point labels and the transformations tau_1..tau_n of an oriented Dynkin union.

    Points are arcs ``("edge", s, t)``, sinks ``("sink", v)`` with a second
    copy ``("sink2", v)`` for sinks of indegree two, and sources
    ``("source", v)``.
    """
    if not g.is_fully_oriented():
        raise RepresentationError("graph has an unoriented edge")
    shape = classify_shape(g)
    if not shape.is_simply_laced_dynkin_union:
        raise RepresentationError("underlying graph is not a union of simply laced Dynkin diagrams")
    if not shape.triple_point_indegree_ok:
        raise RepresentationError("a triple point has indegree two; use the opposite orientation")
    points = _points(g)
    where = {p: k + 1 for k, p in enumerate(points)}
    gmap = _choice(g, swap_choice)
    taus = []
    for i in g.vertices:
        ins = g.in_neighbours(i)
        image = []
        for p in points:
            q = p
            if p[0] == "edge" and p[1] == i:
                q = ("edge", ins[0], i) if ins else ("source", i)
            elif p[0] in ("sink", "sink2") and p[1] == i:
                q = gmap[p]
            image.append(where[q])
        taus.append(tuple(image))
    return points, taus


# ----------------------------------------------------------------------------
# linear representations


def theta_generators(g: MixedGraph) -> list[Matrix]:
    """theta_i fixes e_c for c != i and sends e_i to the sum of e_k over arrows k -> i."""
    if not g.is_fully_oriented():
        raise RepresentationError("graph has an unoriented edge")
    n = g.n
    mats = []
    for i in g.vertices:
        ins = set(g.in_neighbours(i))
        rows = []
        for r in range(1, n + 1):
            rows.append(tuple(int(r in ins) if c == i else int(r == c) for c in range(1, n + 1)))
        mats.append(tuple(rows))
    return mats


def boolean_generators(g: MixedGraph) -> list[Matrix]:
    """Same matrices as :func:`theta_generators`, read over the Boolean semiring."""
    return theta_generators(g)


def image_semigroup(images: Sequence, kind: str, max_size: int = 200000) -> FiniteMonoid:
    """Monoid generated by ``images`` under the product of ``kind``."""
    if kind not in COMPOSE:
        raise RepresentationError(f"unknown representation kind {kind!r}")
    if not images:
        raise RepresentationError("no generators")
    m = len(images[0])
    return from_generators(list(images), COMPOSE[kind], _identity_like(kind, m), max_size=max_size)


def check_hk_relations(g: MixedGraph, images: Sequence, kind: str) -> list[str]:
    """Defining relations of HK(g) that fail for the given generator images."""
    mult = COMPOSE[kind]

    def word(*letters):
        x = images[letters[0] - 1]
        for a in letters[1:]:
            x = mult(x, images[a - 1])
        return x

    failures = []
    for i in g.vertices:
        if word(i, i) != word(i):
            failures.append(f"{i}{i} = {i}")
    for i in g.vertices:
        for j in g.vertices:
            if i >= j and g.kind(i, j) != "out":
                continue
            kind_ij = g.kind(i, j)
            if kind_ij is None and word(i, j) != word(j, i):
                failures.append(f"{i}{j} = {j}{i}")
            elif kind_ij == "un" and word(i, j, i) != word(j, i, j):
                failures.append(f"{i}{j}{i} = {j}{i}{j}")
            elif kind_ij == "out":
                if word(i, j, i) != word(i, j):
                    failures.append(f"{i}{j}{i} = {i}{j}")
                if word(j, i, j) != word(i, j):
                    failures.append(f"{j}{i}{j} = {i}{j}")
    return failures


@dataclass
class RepReport:
    kind: str
    images: list
    image_size: int
    monoid_size: int | None
    faithful: bool | None
    relation_failures: list[str] = field(default_factory=list)
    # faithfulness is settled positively for linear orientations; open otherwise
    settled: bool = False
    points: list | None = None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "images": [list(map(list, x)) if self.kind != "transformation" else list(x) for x in self.images],
            "image_size": self.image_size,
            "monoid_size": self.monoid_size,
            "faithful": self.faithful,
            "relation_failures": self.relation_failures,
            "settled": self.settled,
            "points": [list(p) for p in self.points] if self.points else None,
        }


def check_faithful(g: MixedGraph, kind: str, monoid_size: int | None = None) -> RepReport:
    """Build the representation of HK(g) and compare image size with |HK(g)|.

    The monoid size is computed by completion when not supplied; if that
    exceeds its budget the verdict is left as None.
    """
    points = None
    if kind == "transformation":
        points, images = tau_generators(g)
    elif kind in ("matrix", "boolean"):
        images = theta_generators(g)
    else:
        raise RepresentationError(f"unknown representation kind {kind!r}")
    failures = check_hk_relations(g, images, kind)
    image = image_semigroup(images, kind)
    if monoid_size is None:
        from .rewrite import hk_monoid

        build = hk_monoid(g)
        monoid_size = build.monoid.size if build.monoid is not None else None
    faithful = None if monoid_size is None else (image.size == monoid_size and not failures)
    return RepReport(
        kind,
        list(images),
        image.size,
        monoid_size,
        faithful,
        failures,
        classify_shape(g).is_linear_orientation,
        points,
    )


# ----------------------------------------------------------------------------
# the Catalan monoid and its regular action


def c_transformations(n: int) -> list[Transformation]:
    """T_1..T_n on 1..n+1; T_i sends i+1 to i and fixes everything else."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for i in range(1, n + 1):
        out.append(tuple(i if p == i + 1 else p for p in range(1, n + 2)))
    return out


def is_order_preserving_decreasing(f: Transformation) -> bool:
    return all(f[p] <= p + 1 for p in range(len(f))) and all(
        f[p] <= f[p + 1] for p in range(len(f) - 1)
    )


def m1_elements(n: int) -> list[tuple[int, ...]]:
    """Weakly increasing sequences x_1..x_{n+1} with 1 <= x_i <= i."""
    out = []

    def grow(seq):
        if len(seq) == n + 1:
            out.append(tuple(seq))
            return
        k = len(seq) + 1
        for v in range(seq[-1] if seq else 1, k + 1):
            grow(seq + [v])

    grow([])
    return out


def _check_m1(x, n):
    if len(x) != n + 1 or any(not 1 <= v <= k for k, v in enumerate(x, start=1)):
        raise ValueError(f"{x} is not in M1 for n = {n}")
    if any(a > b for a, b in zip(x, x[1:])):
        raise ValueError(f"{x} is not weakly increasing")


def m1_act(i: int, x: Sequence[int]) -> tuple[int, ...]:
    """Replace x_{i+1} by x_i."""
    n = len(x) - 1
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    _check_m1(x, n)
    y = list(x)
    y[i] = y[i - 1]
    return tuple(y)


def m2_elements(n: int) -> list[tuple[int, ...]]:
    """Sequences of n+1 entries 1 and n+1 entries -1 whose prefix sums stay nonnegative."""
    out = []

    def grow(seq, ups, height):
        if len(seq) == 2 * (n + 1):
            out.append(tuple(seq))
            return
        if ups < n + 1:
            grow(seq + [1], ups + 1, height + 1)
        if height > 0:
            grow(seq + [-1], ups, height - 1)

    grow([], 0, 0)
    return out


def _check_m2(x):
    if len(x) % 2 or any(v not in (1, -1) for v in x) or sum(x) != 0:
        raise ValueError(f"{x} is not a balanced sequence of 1 and -1")
    height = 0
    for v in x:
        height += v
        if height < 0:
            raise ValueError(f"{x} has a negative prefix sum")


def m2_act(i: int, x: Sequence[int]) -> tuple[int, ...]:
    """Move the (i+1)-st entry 1 to the position right after the i-th entry 1."""
    _check_m2(x)
    n = len(x) // 2 - 1
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    ups = [p for p, v in enumerate(x) if v == 1]
    src, dst = ups[i], ups[i - 1] + 1
    y = list(x)
    y.pop(src)
    y.insert(dst, 1)
    return tuple(y)


def _action_maps(M: FiniteMonoid, points: Sequence, act: Callable, side: str) -> list[tuple[int, ...]] | None:
    """Per element of M, the induced map on point indices; None if the axioms fail."""
    where = {p: k for k, p in enumerate(points)}
    gen_maps = []
    for k in range(1, M.ngens + 1):
        gen_maps.append(tuple(where[act(k, p)] for p in points))
    ident = tuple(range(len(points)))
    maps = [None] * M.size
    maps[M.identity] = ident
    # words grow on the right: child = parent * g
    for x in range(1, M.size):
        p, k = M.parent[x]
        f, gk = maps[p], gen_maps[k - 1]
        maps[x] = tuple(gk[f[q]] for q in ident) if side == "right" else tuple(f[gk[q]] for q in ident)
    for x in range(M.size):
        for k in range(M.ngens):
            f, gk = maps[x], gen_maps[k]
            expect = tuple(gk[f[q]] for q in ident) if side == "right" else tuple(f[gk[q]] for q in ident)
            if maps[M.rc[x][k]] != expect:
                return None
    return maps


def is_regular_action(M: FiniteMonoid, points: Sequence, act: Callable, side: str = "right"):
    """A base point x0 for which m -> x0.m is a bijection M -> points, else None.

    ``act(k, p)`` is the action of generator k on point p.  For a right
    action a word is applied letter by letter from the left; for a left
    action from the right.  Raises ValueError if ``act`` does not define an
    action of M on that side.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    maps = _action_maps(M, points, act, side)
    if maps is None:
        raise ValueError(f"not a {side} action of the monoid")
    if len(points) != M.size:
        return None
    for x0 in range(len(points)):
        if len({f[x0] for f in maps}) == M.size:
            return points[x0]
    return None


def action_dot(points: Sequence, act: Callable, ngens: int) -> str:
    lines = ["digraph action {"]
    for k, p in enumerate(points):
        lines.append(f'  p{k} [label="{"".join(map(str, p))}"];')
    where = {p: k for k, p in enumerate(points)}
    for k, p in enumerate(points):
        for a in range(1, ngens + 1):
            q = where[act(a, p)]
            if q != k:
                lines.append(f'  p{k} -> p{q} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------------
# simple and projective modules


def simple_characters(M: FiniteMonoid) -> dict[frozenset, list[int]]:
    """For each subset X of generators, alpha -> 1 if every letter of alpha lies in X.

    Raises if some character fails to be multiplicative.
    """
    import itertools

    out = {}
    gens = range(1, M.ngens + 1)
    for r in range(M.ngens + 1):
        for X in itertools.combinations(gens, r):
            X = frozenset(X)
            chi = [int(M.content[x] <= X) for x in range(M.size)]
            for x in range(M.size):
                for k in range(M.ngens):
                    if chi[M.rc[x][k]] != chi[x] * int(k + 1 in X):
                        raise AssertionError(f"character of {sorted(X)} is not multiplicative")
            out[X] = chi
    return out


def projective_module(M: FiniteMonoid, X) -> tuple[list[int], Callable[[int, int], int | None]]:
    """Basis of P_X and the action alpha . beta (None stands for zero).

    P_X holds the beta with ``beta * eps_i = beta`` only for i in X.
    """
    X = set(X)
    if not X <= set(range(1, M.ngens + 1)):
        raise ValueError("X must be a set of generator indices")
    basis = [
        b for b in range(M.size) if all(i in X for i in range(1, M.ngens + 1) if M.rc[b][i - 1] == b)
    ]
    inside = set(basis)

    def action(alpha: int, beta: int | None) -> int | None:
        if beta is None:
            return None
        y = M.mult(alpha, beta)
        return y if y in inside else None

    return basis, action


def check_module_associative(M: FiniteMonoid, basis: Sequence[int], action) -> bool:
    return all(
        action(M.mult(a1, a2), b) == action(a1, action(a2, b))
        for a1 in range(M.size)
        for a2 in range(M.size)
        for b in basis
    )
