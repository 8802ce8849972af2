"""Canonical projections and injections between HK monoids.

Reading an unoriented edge as a pair of opposite arrows, a graph ``phi`` lies
below ``theta`` when it arises by deleting arrows.  Generator-to-generator
maps are checked on elements when both monoids are finite; otherwise the
defining relations are checked through normal forms in the complete target
system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .classify import cached_build
from .mixedgraph import MixedGraph, _as_map, is_full_embedding
from .monoid import FiniteMonoid, from_generators, verify_generator_map
from .rewrite import HKBuild, maps_to_homomorphism

__all__ = [
    "MapCheck",
    "check_embedding",
    "check_projection",
    "is_below",
    "labelled_graphs",
    "subset_monoid",
]

# arrows carried by each edge kind, for the pair (a, b) with a < b
_ARROWS = {None: frozenset(), "un": frozenset({"ab", "ba"}), "fwd": frozenset({"ab"}), "bwd": frozenset({"ba"})}


def _arrows(g: MixedGraph) -> dict:
    return {(a, b): _ARROWS[k] for a, b, k in g.edges}


def is_below(phi: MixedGraph, theta: MixedGraph) -> bool:
    """True iff ``phi`` is obtained from ``theta`` by deleting arrows."""
    if phi.n != theta.n:
        return False
    big, small = _arrows(theta), _arrows(phi)
    return all(arrows <= big.get(pair, frozenset()) for pair, arrows in small.items())


def labelled_graphs(n: int) -> list[MixedGraph]:
    from .mixedgraph import from_code

    m = n * (n - 1) // 2
    return [from_code(n, code) for code in itertools.product(range(4), repeat=m)]


@dataclass(frozen=True)
class MapCheck:
    is_homomorphism: bool
    is_injective: bool | None
    is_surjective: bool | None
    method: str


def _decidable(b: HKBuild) -> bool:
    return b.monoid is not None or b.system.complete


def check_projection(theta: MixedGraph, phi: MixedGraph) -> MapCheck:
    """e_i -> e_i from HK(theta) to HK(phi)."""
    if not is_below(phi, theta):
        raise ValueError("phi is not obtained from theta by deleting edges")
    a, b = cached_build(theta), cached_build(phi)
    if a.monoid is not None and b.monoid is not None:
        r = verify_generator_map(a.monoid, b.monoid, b.monoid.gens, a.presentation.relations)
        return MapCheck(r.is_homomorphism, r.is_injective, r.is_surjective, "elements")
    if not _decidable(b):
        return MapCheck(False, None, None, "undecided")
    ok = maps_to_homomorphism(a.presentation, b.system, [(i,) for i in phi.vertices])
    # the image contains every generator of the target
    return MapCheck(ok, None, ok, "relations")


def check_embedding(f, theta: MixedGraph, phi: MixedGraph) -> MapCheck:
    """e_i -> e_{f(i)} from HK(theta) to HK(phi) for a full embedding f."""
    if not is_full_embedding(f, theta, phi):
        raise ValueError("f is not a full embedding")
    fm = _as_map(f, theta.n)
    a, b = cached_build(theta), cached_build(phi)
    forward = [(fm[i],) for i in theta.vertices]
    if a.monoid is not None and _decidable(b):
        # map every element of HK(theta) to a normal form in HK(phi)
        A = a.monoid
        image = {}
        for x in range(A.size):
            image[b.system.reduce(tuple(fm[i] for i in A.words[x]))] = x
        hom = maps_to_homomorphism(a.presentation, b.system, forward)
        return MapCheck(hom, len(image) == A.size, None, "elements")
    if not (_decidable(a) and _decidable(b)):
        return MapCheck(False, None, None, "undecided")
    hom = maps_to_homomorphism(a.presentation, b.system, forward)
    # left inverse: e_{f(i)} -> e_i, everything else -> identity
    inv = {fm[i]: i for i in theta.vertices}
    backward = [(inv[j],) if j in inv else () for j in phi.vertices]
    left_inverse = maps_to_homomorphism(b.presentation, a.system, backward)
    return MapCheck(hom, hom and left_inverse, None, "left inverse")


def subset_monoid(n: int) -> FiniteMonoid:
    """(2^{1..n}, union) generated by the singletons."""
    return from_generators([frozenset({i}) for i in range(1, n + 1)], frozenset.union, frozenset())
