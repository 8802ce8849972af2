"""Finite monoids given by their right Cayley graph.

Elements are indices ``0..size-1``; element 0 is the identity and elements
are numbered in shortlex order of their first (shortlex-least) word over the
distinguished generators.  Generators are numbered 1..ngens, matching the
letters of words.
"""

from __future__ import annotations

import csv
import io
import itertools
from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "BudgetExceeded",
    "Congruence",
    "FiniteMonoid",
    "HomReport",
    "MonoidError",
    "are_anti_isomorphic",
    "are_isomorphic",
    "congruence_closure",
    "from_generators",
    "idempotents",
    "irreducible_generators",
    "is_j_trivial",
    "quotient",
    "verify_generator_map",
]

TABLE_LIMIT = 5000
ISO_LIMIT = 5000


class MonoidError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class FiniteMonoid:
    """A finite monoid presented by right multiplication by its generators.

    ``rc[x][k - 1]`` is ``x * g_k``.  Construct with :meth:`from_right_cayley`
    or :func:`from_generators`; both renumber elements in breadth-first order.
    """

    def __init__(self, rc, words, parent, labels=None, origin=None):
        self.rc = rc
        self.words = words
        self.parent = parent
        self.size = len(rc)
        self.ngens = len(rc[0]) if rc else 0
        self.identity = 0
        self.labels = labels
        # origin[x]: index of x in the structure this monoid was built from
        self.origin = origin
        self.gens = [rc[0][k] for k in range(self.ngens)]
        self.content = [frozenset(w) for w in words]
        self.content_ok = all(
            self.content[rc[x][k]] == self.content[x] | {k + 1}
            for x in range(self.size)
            for k in range(self.ngens)
        )
        self._table = None
        self._lc = None
        self._ideals = None

    @classmethod
    def from_right_cayley(cls, rc: Sequence[Sequence[int]], identity: int = 0, labels=None):
        """Renumber a right Cayley graph by BFS from ``identity``.

        Raises MonoidError if some element is not reachable from the identity.
        """
        ngens = len(rc[0]) if len(rc) else 0
        new_of = {identity: 0}
        order = [identity]
        words = [()]
        parent = [None]
        queue = deque([identity])
        while queue:
            x = queue.popleft()
            wx = words[new_of[x]]
            for k in range(ngens):
                y = rc[x][k]
                if y not in new_of:
                    new_of[y] = len(order)
                    order.append(y)
                    words.append(wx + (k + 1,))
                    parent.append((new_of[x], k + 1))
                    queue.append(y)
        if len(order) != len(rc):
            raise MonoidError("generators do not generate every element")
        new_rc = [[new_of[rc[x][k]] for k in range(ngens)] for x in order]
        new_labels = [labels[x] for x in order] if labels is not None else None
        return cls(new_rc, words, parent, labels=new_labels, origin=order)

    # -- multiplication ---------------------------------------------------

    @property
    def table(self) -> np.ndarray | None:
        """Full multiplication table (only for size <= TABLE_LIMIT)."""
        if self._table is None and self.size <= TABLE_LIMIT:
            rc = np.asarray(self.rc, dtype=np.int32).reshape(self.size, self.ngens)
            t = np.empty((self.size, self.size), dtype=np.int32)
            t[:, 0] = np.arange(self.size)
            for y in range(1, self.size):
                p, k = self.parent[y]
                t[:, y] = rc[t[:, p], k - 1]
            self._table = t
        return self._table

    def mult(self, x: int, y: int) -> int:
        t = self.table
        if t is not None:
            return int(t[x, y])
        return self.act(x, self.words[y])

    def act(self, x: int, word: Iterable[int]) -> int:
        """x multiplied on the right by the generators in ``word``."""
        rc = self.rc
        for k in word:
            x = rc[x][k - 1]
        return x

    def evaluate(self, word: Iterable[int]) -> int:
        return self.act(self.identity, word)

    @property
    def lc(self) -> list[list[int]]:
        """Left Cayley graph: ``lc[x][k - 1] = g_k * x``."""
        if self._lc is None:
            t = self.table
            if t is not None:
                self._lc = [[int(t[g, x]) for g in self.gens] for x in range(self.size)]
            else:
                self._lc = [[self.act(g, self.words[x]) for g in self.gens] for x in range(self.size)]
        return self._lc

    def opposite(self) -> "FiniteMonoid":
        """Monoid with reversed multiplication; ``origin`` maps back to self."""
        return FiniteMonoid.from_right_cayley(self.lc, self.identity)

    def regenerated(self, gen_elements: Sequence[int]) -> "FiniteMonoid":
        """Same monoid with a different distinguished generating list."""
        rc = [[self.mult(x, g) for g in gen_elements] for x in range(self.size)]
        return FiniteMonoid.from_right_cayley(rc, self.identity)

    # -- structure ----------------------------------------------------------

    def is_idempotent(self, x: int) -> bool:
        return self.mult(x, x) == x

    def check_associative(self, sample: int | None = None, seed: int = 0) -> bool:
        """Exhaustive for size <= 200, otherwise ``sample`` random triples."""
        if self.size <= 200 and sample is None:
            t = self.table
            left = t[t, :]  # left[x, y, z] = (xy)z
            right = t[:, t]  # right[x, y, z] = x(yz)
            return bool(np.array_equal(left, right))
        rng = np.random.default_rng(seed)
        for x, y, z in rng.integers(0, self.size, size=(sample or 20000, 3)).tolist():
            if self.mult(self.mult(x, y), z) != self.mult(x, self.mult(y, z)):
                return False
        return True

    def ideal_sizes(self) -> list[tuple[int, int, int]]:
        """Per element: sizes of xM, Mx and MxM."""
        if self._ideals is None:
            rc, lc = self.rc, self.lc
            right = _reach_counts(rc, self.size)
            left = _reach_counts(lc, self.size)
            both = _reach_counts([rc[x] + lc[x] for x in range(self.size)], self.size)
            self._ideals = list(zip(right, left, both))
        return self._ideals

    def j_classes(self) -> list[list[int]]:
        rc, lc = self.rc, self.lc
        return _sccs([rc[x] + lc[x] for x in range(self.size)])

    def profile(self, x: int) -> tuple:
        return (self.is_idempotent(x), len(self.content[x]) if self.content_ok else -1) + tuple(
            self.ideal_sizes()[x]
        )

    def word_str(self, x: int) -> str:
        return format_word(self.words[x], self.ngens)

    # -- export -------------------------------------------------------------

    def multiplication_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        names = [self.word_str(x) or "e" for x in range(self.size)]
        w.writerow(["*"] + names)
        for x in range(self.size):
            w.writerow([names[x]] + [names[self.mult(x, y)] for y in range(self.size)])
        return buf.getvalue()

    def green_report(self) -> dict:
        return {
            "j_trivial": is_j_trivial(self),
            "num_idempotents": len(idempotents(self)),
            "irreducible_generators": [self.word_str(x) for x in sorted(irreducible_generators(self))],
        }

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteMonoid(size={self.size}, ngens={self.ngens})"


def format_word(word: Sequence[int], n: int) -> str:
    """Digits for n <= 9, comma-separated indices otherwise; identity is ''."""
    if n <= 9:
        return "".join(str(k) for k in word)
    return ",".join(str(k) for k in word)


def parse_word(text: str, n: int) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    if "," in text or n > 9:
        letters = tuple(int(t) for t in text.split(","))
    else:
        letters = tuple(int(ch) for ch in text)
    if any(not 1 <= k <= n for k in letters):
        raise ValueError(f"letter out of range 1..{n} in {text!r}")
    return letters


def _sccs(graph: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components come out sinks first."""
    n = len(graph)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack, comps = [], []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            succ = graph[v]
            if i < len(succ):
                work[-1] = (v, i + 1)
                w = succ[i]
                if index[w] < 0:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _reach_counts(graph: Sequence[Sequence[int]], n: int) -> list[int]:
    """Number of vertices reachable from each vertex (itself included)."""
    comps = _sccs(graph)
    comp_of = [0] * n
    for c, members in enumerate(comps):
        for v in members:
            comp_of[v] = c
    reach = [0] * len(comps)
    for c, members in enumerate(comps):
        bits = 0
        for v in members:
            bits |= 1 << v
        for v in members:
            for w in graph[v]:
                d = comp_of[w]
                if d != c:
                    bits |= reach[d]
        reach[c] = bits
    counts = [r.bit_count() for r in reach]
    return [counts[comp_of[v]] for v in range(n)]


def from_generators(
    gen_values: Sequence[Hashable],
    compose: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    max_size: int = 200000,
) -> FiniteMonoid:
    """Closure of ``gen_values`` under ``compose``; labels hold the values.

    ``compose(x, y)`` is the product ``x * y``.  The first word reaching an
    element is its shortlex-least word.
    """
    values = [identity]
    index = {identity: 0}
    rc = []
    x = 0
    while x < len(values):
        row = []
        for g in gen_values:
            v = compose(values[x], g)
            y = index.get(v)
            if y is None:
                if len(values) >= max_size:
                    raise BudgetExceeded(f"closure exceeded {max_size} elements")
                y = index[v] = len(values)
                values.append(v)
            row.append(y)
        rc.append(row)
        x += 1
    if not gen_values:
        return FiniteMonoid([[]], [()], [None], labels=values, origin=[0])
    return FiniteMonoid.from_right_cayley(rc, 0, labels=values)


def idempotents(M: FiniteMonoid) -> set[int]:
    t = M.table
    if t is not None:
        return set(np.flatnonzero(t[np.arange(M.size), np.arange(M.size)] == np.arange(M.size)).tolist())
    return {x for x in range(M.size) if M.mult(x, x) == x}


def is_j_trivial(M: FiniteMonoid) -> bool:
    """True iff distinct elements generate distinct two-sided ideals."""
    return all(len(c) == 1 for c in M.j_classes())


@dataclass
class Congruence:
    class_of: list[int]
    classes: list[list[int]]

    def __len__(self) -> int:
        return len(self.classes)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x
        return True


def congruence_closure(M: FiniteMonoid, pairs: Iterable[tuple[int, int]]) -> Congruence:
    """Least congruence identifying every pair."""
    uf = _UnionFind(M.size)
    rc, lc = M.rc, M.lc
    work = list(pairs)
    while work:
        x, y = work.pop()
        if uf.union(x, y):
            for k in range(M.ngens):
                work.append((rc[x][k], rc[y][k]))
                work.append((lc[x][k], lc[y][k]))
    return _partition(uf, M.size)


def _partition(uf: _UnionFind, n: int) -> Congruence:
    groups = {}
    for x in range(n):
        groups.setdefault(uf.find(x), []).append(x)
    classes = sorted(groups.values(), key=lambda c: c[0])
    class_of = [0] * n
    for c, members in enumerate(classes):
        for x in members:
            class_of[x] = c
    return Congruence(class_of, classes)


def partition_congruence(classes: Iterable[Iterable[int]], n: int) -> Congruence:
    uf = _UnionFind(n)
    for members in classes:
        members = list(members)
        for x in members[1:]:
            uf.union(members[0], x)
    return _partition(uf, n)


def quotient(M: FiniteMonoid, c: Congruence) -> FiniteMonoid:
    """Quotient monoid; labels are the member lists of each class."""
    rc, lc = M.rc, M.lc
    cls = c.class_of
    for x in range(M.size):
        rep = c.classes[cls[x]][0]
        for k in range(M.ngens):
            if cls[rc[x][k]] != cls[rc[rep][k]] or cls[lc[x][k]] != cls[lc[rep][k]]:
                raise MonoidError("partition is not compatible with multiplication")
    qrc = [[cls[rc[members[0]][k]] for k in range(M.ngens)] for members in c.classes]
    return FiniteMonoid.from_right_cayley(qrc, cls[M.identity], labels=c.classes)


def irreducible_generators(M: FiniteMonoid) -> set[int]:
    """Non-identity elements x such that x = yz forces y = x or z = x.

    Raises MonoidError when the result does not generate M.
    """
    idx = np.arange(M.size)
    products = set()
    for rows, block in _row_blocks(M):
        mask = (block != rows[:, None]) & (block != idx[None, :])
        products.update(np.unique(block[mask]).tolist())
    irr = set(range(1, M.size)) - products
    seen = {M.identity}
    queue = deque([M.identity])
    while queue:
        x = queue.popleft()
        for g in irr:
            y = M.mult(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    if len(seen) != M.size:
        raise MonoidError("irreducible elements do not generate the monoid")
    return irr


def _row_blocks(M: FiniteMonoid, block: int = 512):
    """Yield (row indices, rows of the multiplication table) without storing it all."""
    t = M.table
    if t is not None:
        yield np.arange(M.size), t
        return
    rc = np.asarray(M.rc, dtype=np.int64)
    levels = {}
    for y in range(1, M.size):
        levels.setdefault(len(M.words[y]), []).append(y)
    plan = []
    for L in sorted(levels):
        ys = np.array(levels[L])
        ps = np.array([M.parent[y][0] for y in levels[L]])
        ks = np.array([M.parent[y][1] - 1 for y in levels[L]])
        plan.append((ys, ps, ks))
    for start in range(0, M.size, block):
        rows = np.arange(start, min(start + block, M.size))
        out = np.empty((len(rows), M.size), dtype=np.int64)
        out[:, 0] = rows
        for ys, ps, ks in plan:
            out[:, ys] = rc[out[:, ps], ks]
        yield rows, out


def _canonical_generation(M: FiniteMonoid) -> FiniteMonoid:
    irr = sorted(irreducible_generators(M))
    if irr == M.gens:
        return M
    return M.regenerated(irr)


def _compose_origin(N: FiniteMonoid, base: FiniteMonoid) -> list[int]:
    # N was built from base (origin maps N -> base); identity if N is base
    if N is base:
        return list(range(base.size))
    return list(N.origin)


def are_isomorphic(M: FiniteMonoid, N: FiniteMonoid) -> list[int] | None:
    """A bijection ``phi`` (``phi[x]`` in N for x in M) that is an isomorphism, else None.

    Any isomorphism maps irreducible elements onto irreducible elements, so
    the search runs over bijections between those sets, pruned by
    isomorphism-invariant element profiles.
    """
    if M.size != N.size:
        return None
    if M.size > ISO_LIMIT:
        raise BudgetExceeded(f"isomorphism search limited to size <= {ISO_LIMIT}")
    A, B = _canonical_generation(M), _canonical_generation(N)
    if A.ngens != B.ngens:
        return None
    for sigma in _candidate_maps(A, B):
        phi = _extend(A, B, sigma)
        if phi is not None:
            a_origin = _compose_origin(A, M)
            b_origin = _compose_origin(B, N)
            out = [0] * M.size
            for x in range(A.size):
                out[a_origin[x]] = b_origin[phi[x]]
            return out
    return None


def _candidate_maps(A: FiniteMonoid, B: FiniteMonoid):
    """Generator bijections (sigma[k] = generator index of B) with matching profiles."""
    if sorted(A.profile(x) for x in range(A.size)) != sorted(B.profile(x) for x in range(B.size)):
        return
    n = A.ngens
    pa = [A.profile(g) for g in A.gens]
    pb = [B.profile(g) for g in B.gens]
    sigma = [None] * n
    used = [False] * n

    def pair_ok(i, j):
        a, b = A.mult(A.gens[i], A.gens[j]), B.mult(B.gens[sigma[i]], B.gens[sigma[j]])
        return A.profile(a) == B.profile(b)

    def search(i):
        if i == n:
            yield list(sigma)
            return
        for j in range(n):
            if used[j] or pa[i] != pb[j]:
                continue
            sigma[i] = j
            if all(pair_ok(i, h) and pair_ok(h, i) for h in range(i + 1)):
                used[j] = True
                yield from search(i + 1)
                used[j] = False
            sigma[i] = None

    yield from search(0)


def _extend(A: FiniteMonoid, B: FiniteMonoid, sigma: Sequence[int]) -> list[int] | None:
    phi = [0] * A.size
    for x in range(1, A.size):
        p, k = A.parent[x]
        phi[x] = B.rc[phi[p]][sigma[k - 1]]
    if len(set(phi)) != A.size:
        return None
    for x in range(A.size):
        for k in range(A.ngens):
            if phi[A.rc[x][k]] != B.rc[phi[x]][sigma[k]]:
                return None
    return phi


def are_anti_isomorphic(M: FiniteMonoid, N: FiniteMonoid) -> list[int] | None:
    """A bijection phi with phi(xy) = phi(y)phi(x), else None."""
    Mop = M.opposite()
    phi = are_isomorphic(Mop, N)
    if phi is None:
        return None
    out = [0] * M.size
    for x in range(Mop.size):
        out[Mop.origin[x]] = phi[x]
    return out


@dataclass
class HomReport:
    is_homomorphism: bool
    is_injective: bool
    is_surjective: bool
    image: list[int]

    @property
    def is_isomorphism(self) -> bool:
        return self.is_homomorphism and self.is_injective and self.is_surjective


def verify_generator_map(
    M: FiniteMonoid,
    N: FiniteMonoid,
    images: Sequence[int],
    relations: Iterable[tuple[Sequence[int], Sequence[int]]] | None = None,
) -> HomReport:
    """Check whether generator k of M -> ``images[k - 1]`` extends to a homomorphism.

    The map is extended along the shortlex words of M.  With ``relations``
    (a presentation of M) each relation is checked in N as well; the
    generator-step multiplicativity check always runs.
    """
    if len(images) != M.ngens:
        raise MonoidError("map must be defined on every generator")
    phi = [N.identity] * M.size
    for x in range(1, M.size):
        p, k = M.parent[x]
        phi[x] = N.mult(phi[p], images[k - 1])
    ok = all(
        phi[M.rc[x][k]] == N.mult(phi[x], images[k]) for x in range(M.size) for k in range(M.ngens)
    )
    if relations is not None:
        for lhs, rhs in relations:
            if _eval_images(N, images, lhs) != _eval_images(N, images, rhs):
                ok = False
                break
    return HomReport(ok, len(set(phi)) == M.size, set(phi) == set(range(N.size)), phi)


def _eval_images(N: FiniteMonoid, images: Sequence[int], word: Sequence[int]) -> int:
    x = N.identity
    for k in word:
        x = N.mult(x, images[k - 1])
    return x


def direct_isomorphism_check(M: FiniteMonoid, N: FiniteMonoid, phi: Sequence[int]) -> bool:
    """Brute-force check of bijectivity and phi(xy) = phi(x)phi(y) on all pairs."""
    if len(set(phi)) != M.size or M.size != N.size:
        return False
    return all(
        phi[M.mult(x, y)] == N.mult(phi[x], phi[y]) for x, y in itertools.product(range(M.size), repeat=2)
    )
