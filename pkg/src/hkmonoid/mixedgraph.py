"""Mixed graphs: simple graphs on 1..n whose edges are unoriented or oriented.

Edges are keyed by the ordered pair ``(a, b)`` with ``a < b`` and carry one of
three kinds: ``"un"`` (a -- b), ``"fwd"`` (a -> b) or ``"bwd"`` (b -> a).
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "GraphError",
    "GraphShape",
    "MixedGraph",
    "are_graphs_isomorphic",
    "are_graphs_anti_isomorphic",
    "canonical_form",
    "classify_shape",
    "dynkin_diagram",
    "dynkin_unions",
    "enumerate_mixed_graphs",
    "is_full_embedding",
    "linear_path",
    "opposite",
    "orientations",
    "parse_graph",
    "path_orientations",
]

KINDS = ("un", "fwd", "bwd")
# digit used in the canonical encoding; 0 means "no edge"
_CODE = {None: 0, "un": 1, "fwd": 2, "bwd": 3}
_FLIP = {"un": "un", "fwd": "bwd", "bwd": "fwd"}

MAX_ENUMERATION_VERTICES = 5


class GraphError(ValueError):
    """Malformed graph description; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class MixedGraph:
    n: int
    edges: tuple[tuple[int, int, str], ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        index = {}
        for a, b, kind in self.edges:
            if kind not in KINDS:
                raise GraphError(f"unknown edge kind {kind!r}")
            if a == b:
                raise GraphError(f"loop edge at vertex {a}")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise GraphError(f"vertex out of range in edge ({a}, {b})")
            if a > b:
                a, b, kind = b, a, _FLIP[kind]
            if (a, b) in index:
                raise GraphError(f"duplicate edge between {a} and {b}")
            index[(a, b)] = kind
        object.__setattr__(self, "edges", tuple((a, b, index[(a, b)]) for a, b in sorted(index)))
        object.__setattr__(self, "_index", index)

    @classmethod
    def build(cls, n: int, unoriented: Iterable = (), arcs: Iterable = ()) -> "MixedGraph":
        """Graph from unoriented pairs and arcs ``(source, target)``."""
        edges = [(a, b, "un") for a, b in unoriented]
        edges += [(a, b, "fwd") for a, b in arcs]
        return cls(n, tuple(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def kind(self, i: int, j: int) -> str | None:
        """Edge kind seen from ``i``: None, "un", "out" (i -> j) or "in" (j -> i)."""
        if i < j:
            k = self._index.get((i, j))
            return {None: None, "un": "un", "fwd": "out", "bwd": "in"}[k]
        k = self._index.get((j, i))
        return {None: None, "un": "un", "fwd": "in", "bwd": "out"}[k]

    def adjacent(self, i: int, j: int) -> bool:
        return self.kind(i, j) is not None

    def has_arc(self, i: int, j: int) -> bool:
        return self.kind(i, j) == "out"

    def arcs(self) -> list[tuple[int, int]]:
        out = []
        for a, b, kind in self.edges:
            if kind == "fwd":
                out.append((a, b))
            elif kind == "bwd":
                out.append((b, a))
        return sorted(out)

    def unoriented_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b, kind in self.edges if kind == "un"]

    def neighbours(self, i: int) -> list[int]:
        return [j for j in self.vertices if j != i and self.adjacent(i, j)]

    def in_neighbours(self, i: int) -> list[int]:
        return [j for j in self.vertices if j != i and self.kind(i, j) == "in"]

    def out_neighbours(self, i: int) -> list[int]:
        return [j for j in self.vertices if j != i and self.kind(i, j) == "out"]

    def is_fully_oriented(self) -> bool:
        return all(kind != "un" for _, _, kind in self.edges)

    def relabel(self, f: Mapping[int, int] | tuple) -> "MixedGraph":
        """Image under the vertex bijection ``f`` (dict, or tuple with f[i-1] = f(i))."""
        fm = _as_map(f, self.n)
        return MixedGraph(self.n, tuple((fm[a], fm[b], kind) for a, b, kind in self.edges))

    def delete_edges(self, pairs: Iterable[tuple[int, int]]) -> "MixedGraph":
        drop = {tuple(sorted(p)) for p in pairs}
        return MixedGraph(self.n, tuple(e for e in self.edges if (e[0], e[1]) not in drop))

    def induced(self, vertices: Iterable[int]) -> "MixedGraph":
        """Full subgraph on ``vertices``, relabelled 1..k in increasing order."""
        vs = sorted(vertices)
        pos = {v: k + 1 for k, v in enumerate(vs)}
        edges = tuple((pos[a], pos[b], kind) for a, b, kind in self.edges if a in pos and b in pos)
        return MixedGraph(len(vs), edges)

    def code(self) -> tuple[int, ...]:
        """Edge-kind digits over the pairs (1,2), (1,3), ..., (n-1,n)."""
        return tuple(_CODE[self._index.get(p)] for p in itertools.combinations(self.vertices, 2))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [{"a": a, "b": b, "kind": kind} for a, b, kind in self.edges]}

    @classmethod
    def from_json(cls, data: Mapping | str) -> "MixedGraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), tuple((int(e["a"]), int(e["b"]), e["kind"]) for e in data["edges"]))

    def to_text(self) -> str:
        lines = [f"vertices {self.n}"]
        for a, b, kind in self.edges:
            lines.append(f"{a} {dict(un='--', fwd='->', bwd='<-')[kind]} {b}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        body = ", ".join(f"{a}{dict(un='--', fwd='->', bwd='<-')[k]}{b}" for a, b, k in self.edges)
        return f"MixedGraph(n={self.n}: {body or 'no edges'})"


def _as_map(f, n: int) -> dict[int, int]:
    if isinstance(f, Mapping):
        return dict(f)
    return {i + 1: f[i] for i in range(n)}


def from_code(n: int, code: Iterable[int]) -> MixedGraph:
    kinds = {1: "un", 2: "fwd", 3: "bwd"}
    edges = tuple(
        (a, b, kinds[c]) for (a, b), c in zip(itertools.combinations(range(1, n + 1), 2), code) if c
    )
    return MixedGraph(n, edges)


_EDGE_RE = re.compile(r"^(\d+)\s*(--|->|<-)\s*(\d+)$")


def parse_graph(text: str) -> MixedGraph:
    """Parse the line-oriented graph format (``vertices n`` then one edge per line)."""
    n = None
    edges = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.match(r"^vertices\s+(\d+)$", line)
            if not m:
                raise GraphError("expected 'vertices <n>'", lineno)
            n = int(m.group(1))
            continue
        m = _EDGE_RE.match(line)
        if not m:
            raise GraphError(f"cannot parse edge {line!r}", lineno)
        i, op, j = int(m.group(1)), m.group(2), int(m.group(3))
        if i == j:
            raise GraphError(f"loop edge at vertex {i}", lineno)
        for v in (i, j):
            if not 1 <= v <= n:
                raise GraphError(f"vertex {v} out of range 1..{n}", lineno)
        if op == "<-":
            i, j, op = j, i, "->"
        key = (min(i, j), max(i, j))
        if key in edges:
            raise GraphError(f"duplicate edge between {key[0]} and {key[1]}", lineno)
        if op == "--":
            edges[key] = "un"
        else:
            edges[key] = "fwd" if i < j else "bwd"
    if n is None:
        raise GraphError("missing 'vertices <n>' line")
    return MixedGraph(n, tuple((a, b, k) for (a, b), k in edges.items()))


def opposite(g: MixedGraph) -> MixedGraph:
    """Reverse every oriented edge."""
    return MixedGraph(g.n, tuple((a, b, _FLIP[k]) for a, b, k in g.edges))


def _preserves(f: tuple, g: MixedGraph, h: MixedGraph) -> bool:
    # f[i-1] is the image of vertex i; checks every pair including non-edges
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            if g.kind(i, j) != h.kind(f[i - 1], f[j - 1]):
                return False
    return True


def are_graphs_isomorphic(g: MixedGraph, h: MixedGraph) -> dict[int, int] | None:
    """Lexicographically least vertex bijection carrying g onto h, or None."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return None
    for f in itertools.permutations(range(1, g.n + 1)):
        if _preserves(f, g, h):
            return {i + 1: f[i] for i in range(g.n)}
    return None


def are_graphs_anti_isomorphic(g: MixedGraph, h: MixedGraph) -> dict[int, int] | None:
    return are_graphs_isomorphic(g, opposite(h))


def _permutation_tables(n: int):
    """For every relabelling: source pair position and whether the pair flips."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pos = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(1, n + 1)))
    src = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    flip = np.zeros((len(perms), len(pairs)), dtype=bool)
    for r, f in enumerate(perms):
        inv = {f[i]: i + 1 for i in range(n)}
        for k, (a, b) in enumerate(pairs):
            # relabelled pair (a, b) comes from the original pair (inv a, inv b)
            x, y = inv[a], inv[b]
            src[r, k] = pos[(min(x, y), max(x, y))]
            flip[r, k] = x > y
    return perms, src, flip


def canonical_form(g: MixedGraph) -> MixedGraph:
    """Relabelling of g with the lexicographically least edge code."""
    best = None
    for f in itertools.permutations(range(1, g.n + 1)):
        c = g.relabel(f).code()
        if best is None or c < best:
            best = c
    return from_code(g.n, best or ())


def enumerate_mixed_graphs(n: int) -> list[MixedGraph]:
    """One canonical representative per isomorphism class of mixed graphs on n vertices.

    Classes are returned sorted by canonical code.  Vectorised over all
    ``4 ** C(n, 2)`` labelled graphs, so ``n`` is capped at 5.
    """
    if n < 0:
        raise GraphError("negative vertex count")
    if n > MAX_ENUMERATION_VERTICES:
        raise GraphError(f"exhaustive enumeration limited to n <= {MAX_ENUMERATION_VERTICES}")
    m = n * (n - 1) // 2
    if m == 0:
        return [MixedGraph(n)]
    total = 4**m
    ids = np.arange(total, dtype=np.int64)
    # digits[:, k] is the kind code of pair k, pair 0 most significant
    digits = np.empty((total, m), dtype=np.int8)
    for k in range(m):
        digits[:, k] = (ids // 4 ** (m - 1 - k)) % 4
    swap = np.array([0, 1, 3, 2], dtype=np.int8)
    weights = 4 ** np.arange(m - 1, -1, -1, dtype=np.int64)
    best = ids.copy()
    _, src, flip = _permutation_tables(n)
    for r in range(src.shape[0]):
        d = digits[:, src[r]]
        d = np.where(flip[r], swap[d], d)
        np.minimum(best, d.astype(np.int64) @ weights, out=best)
    reps = np.unique(best)
    out = []
    for c in reps.tolist():
        code = [(c // 4 ** (m - 1 - k)) % 4 for k in range(m)]
        out.append(from_code(n, code))
    return out


@dataclass(frozen=True)
class GraphShape:
    is_simply_laced_dynkin_union: bool
    is_type_a_path: bool
    is_linear_orientation: bool
    eq3_witness: tuple[int, int, int] | None
    eq3_witness_opposite: tuple[int, int, int] | None
    triple_point_indegree_ok: bool
    components: tuple[str, ...] = ()


def _components(g: MixedGraph) -> list[list[int]]:
    seen, comps = set(), []
    for v in g.vertices:
        if v in seen:
            continue
        stack, comp = [v], []
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.neighbours(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def _dynkin_type(g: MixedGraph, comp: list[int]) -> str | None:
    """Dynkin label (A_k, D_k, E_6..E_8) of a connected component, or None."""
    k = len(comp)
    n_edges = sum(1 for a, b, _ in g.edges if a in comp)
    if n_edges != k - 1:
        return None
    degrees = {v: len(g.neighbours(v)) for v in comp}
    branch = [v for v in comp if degrees[v] >= 3]
    if not branch:
        return f"A{k}"
    if len(branch) > 1 or degrees[branch[0]] > 3:
        return None
    centre = branch[0]
    arms = []
    for start in g.neighbours(centre):
        length, prev, cur = 1, centre, start
        while degrees[cur] == 2:
            prev, cur = cur, next(x for x in g.neighbours(cur) if x != prev)
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{k}"
    if arms[0] == 1 and arms[1] == 2 and arms[2] in (2, 3, 4):
        return f"E{k}"
    return None


def _path_order(g: MixedGraph) -> list[int] | None:
    """Vertices along the path if the underlying graph is one path on all of them."""
    if g.n == 0:
        return None
    comps = _components(g)
    if len(comps) != 1 or len(g.edges) != g.n - 1:
        return None
    ends = [v for v in g.vertices if len(g.neighbours(v)) <= 1]
    if any(len(g.neighbours(v)) > 2 for v in g.vertices):
        return None
    order, prev = [min(ends)], None
    while len(order) < g.n:
        cur = order[-1]
        nxt = [x for x in g.neighbours(cur) if x != prev]
        prev = cur
        order.append(nxt[0])
    return order


def _eq3_witness(g: MixedGraph) -> tuple[int, int, int] | None:
    # full subgraph i -> j <- k with i, k non-adjacent; least triple with i < k
    for j in g.vertices:
        ins = g.in_neighbours(j)
        for i, k in itertools.combinations(ins, 2):
            if not g.adjacent(i, k):
                return (i, j, k)
    return None


def classify_shape(g: MixedGraph) -> GraphShape:
    comps = _components(g)
    labels = [_dynkin_type(g, c) for c in comps]
    dynkin = all(lab is not None for lab in labels)
    order = _path_order(g)
    linear = False
    if order is not None and g.is_fully_oriented():
        steps = [g.kind(a, b) for a, b in zip(order, order[1:])]
        linear = all(s == "out" for s in steps) or all(s == "in" for s in steps)
    triple_ok = all(
        len(g.in_neighbours(v)) <= 1 for v in g.vertices if len(g.neighbours(v)) == 3
    )
    return GraphShape(
        is_simply_laced_dynkin_union=dynkin,
        is_type_a_path=order is not None,
        is_linear_orientation=linear,
        eq3_witness=_eq3_witness(g),
        eq3_witness_opposite=_eq3_witness(opposite(g)),
        triple_point_indegree_ok=triple_ok,
        components=tuple(lab or "?" for lab in labels),
    )


def is_full_embedding(f: Mapping[int, int] | tuple, g: MixedGraph, h: MixedGraph) -> bool:
    """True iff f is injective, preserves edge kinds, and its image is a full subgraph of h."""
    fm = _as_map(f, g.n)
    if set(fm) != set(g.vertices):
        return False
    images = [fm[v] for v in g.vertices]
    if len(set(images)) != len(images) or not all(1 <= v <= h.n for v in images):
        return False
    return _preserves(tuple(images), g, h)


def linear_path(n: int) -> MixedGraph:
    """Path 1 <- 2 <- ... <- n with every arrow pointing to the smaller label."""
    return MixedGraph.build(n, arcs=[(i + 1, i) for i in range(1, n)])


def path_orientations(n: int, allow_unoriented: bool = False) -> list[MixedGraph]:
    """All orientations of the natural path 1 - 2 - ... - n."""
    choices = ("fwd", "bwd", "un") if allow_unoriented else ("fwd", "bwd")
    return [
        MixedGraph(n, tuple((i, i + 1, k) for i, k in enumerate(ks, start=1)))
        for ks in itertools.product(choices, repeat=max(n - 1, 0))
    ]


def dynkin_diagram(kind: str, k: int, offset: int = 0) -> list[tuple[int, int]]:
    """Edge list of A_k, D_k (k >= 4) or E_k (6 <= k <= 8) on offset+1..offset+k."""
    if kind == "A":
        edges = [(i, i + 1) for i in range(1, k)]
    elif kind == "D" and k >= 4:
        edges = [(i, i + 1) for i in range(1, k - 1)] + [(k - 2, k)]
    elif kind == "E" and 6 <= k <= 8:
        edges = [(i, i + 1) for i in range(1, k - 1)] + [(3, k)]
    else:
        raise GraphError(f"no Dynkin diagram {kind}{k}")
    return [(a + offset, b + offset) for a, b in edges]


def _dynkin_component_types(k: int) -> list[tuple[str, int]]:
    out = [("A", k)]
    if k >= 4:
        out.append(("D", k))
    if 6 <= k <= 8:
        out.append(("E", k))
    return out


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def dynkin_unions(n: int) -> list[list[tuple[int, int]]]:
    """Underlying edge lists of every simply laced Dynkin union on n vertices (one labelling each)."""
    shapes = set()
    for parts in _partitions(n):
        for combo in itertools.product(*(_dynkin_component_types(k) for k in parts)):
            shapes.add(tuple(sorted(combo, key=lambda t: (-t[1], t[0]))))
    out = []
    for shape in sorted(shapes):
        edges, offset = [], 0
        for kind, k in shape:
            edges += dynkin_diagram(kind, k, offset)
            offset += k
        out.append(edges)
    return out


def orientations(n: int, edges: Iterable[tuple[int, int]]) -> list[MixedGraph]:
    """Every full orientation of the given undirected edge list."""
    edges = list(edges)
    return [
        MixedGraph(n, tuple((a, b, k) for (a, b), k in zip(edges, ks)))
        for ks in itertools.product(("fwd", "bwd"), repeat=len(edges))
    ]
