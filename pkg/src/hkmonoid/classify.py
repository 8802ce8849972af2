"""Grouping HK monoids of small mixed graphs by isomorphism.

Finite monoids are compared by the table-based search in
:mod:`hkmonoid.monoid`.  Infinite ones, whose rewriting systems are complete,
are compared through their presentations: an isomorphism of HK monoids
permutes the canonical generators (they are the irreducible elements), so
testing generator bijections in both directions decides the question.  A
finite and an infinite monoid are never isomorphic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .mixedgraph import (
    MixedGraph,
    are_graphs_anti_isomorphic,
    are_graphs_isomorphic,
    enumerate_mixed_graphs,
)
from .monoid import are_anti_isomorphic, are_isomorphic
from .rewrite import HKBuild, hk_monoid, presented_isomorphism

__all__ = ["Classification", "cached_build", "classify", "hk_isomorphic"]

MAX_CLASSIFY_VERTICES = 3


@lru_cache(maxsize=512)
def cached_build(g: MixedGraph) -> HKBuild:
    return hk_monoid(g)


def _kind(b: HKBuild) -> str:
    if b.monoid is not None:
        return "finite"
    if b.certified_infinite:
        return "infinite"
    return "unknown"


def hk_isomorphic(a: HKBuild, b: HKBuild, anti: bool = False) -> bool | None:
    """Whether HK(a) and HK(b) are (anti-)isomorphic; None when undecided."""
    ka, kb = _kind(a), _kind(b)
    if "unknown" in (ka, kb):
        return None
    if ka != kb:
        return False
    if ka == "finite":
        if a.monoid.size != b.monoid.size:
            return False
        search = are_anti_isomorphic if anti else are_isomorphic
        return search(a.monoid, b.monoid) is not None
    return presented_isomorphism(a, b, anti=anti) is not None


@dataclass
class Classification:
    n: int
    graphs: list[MixedGraph]
    sizes: list[int | None]
    statuses: list[str]
    iso: list[list[bool | None]]
    graph_iso: list[list[bool]]
    anti: list[list[bool | None]]
    graph_anti: list[list[bool]]

    @property
    def skipped(self) -> list[int]:
        return [k for k, s in enumerate(self.statuses) if s == "unknown"]

    def iso_matches(self) -> bool:
        return _matches(self.iso, self.graph_iso)

    def anti_matches(self) -> bool:
        return _matches(self.anti, self.graph_anti)

    def monoid_classes(self) -> list[list[int]]:
        """Blocks of graph indices with isomorphic monoids (undecided pairs kept apart)."""
        blocks = []
        for k in range(len(self.graphs)):
            for block in blocks:
                if self.iso[block[0]][k]:
                    block.append(k)
                    break
            else:
                blocks.append([k])
        return blocks

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": [
                {"graph": g.to_json(), "status": s, "size": z}
                for g, s, z in zip(self.graphs, self.statuses, self.sizes)
            ],
            "iso_matrix": self.iso,
            "graph_iso_matrix": self.graph_iso,
            "anti_iso_matrix": self.anti,
            "graph_anti_iso_matrix": self.graph_anti,
            "iso_matches": self.iso_matches(),
            "anti_matches": self.anti_matches(),
        }


def _matches(a, b) -> bool:
    # undecided entries are neither confirmed nor refuted
    return all(x is None or x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def classify(n: int) -> Classification:
    """HK monoids of every mixed graph class on n vertices, with both iso matrices."""
    if n > MAX_CLASSIFY_VERTICES:
        raise ValueError(f"classification supports at most {MAX_CLASSIFY_VERTICES} vertices")
    graphs = enumerate_mixed_graphs(n)
    builds = [cached_build(g) for g in graphs]
    k = len(graphs)
    iso = [[None] * k for _ in range(k)]
    anti = [[None] * k for _ in range(k)]
    for a in range(k):
        for b in range(a, k):
            iso[a][b] = iso[b][a] = True if a == b else hk_isomorphic(builds[a], builds[b])
            anti[a][b] = anti[b][a] = hk_isomorphic(builds[a], builds[b], anti=True)
    graph_iso = [[are_graphs_isomorphic(g, h) is not None for h in graphs] for g in graphs]
    graph_anti = [[are_graphs_anti_isomorphic(g, h) is not None for h in graphs] for g in graphs]
    return Classification(
        n,
        graphs,
        [b.monoid.size if b.monoid is not None else None for b in builds],
        [_kind(b) for b in builds],
        iso,
        graph_iso,
        anti,
        graph_anti,
    )
