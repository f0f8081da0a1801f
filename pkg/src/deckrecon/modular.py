"""Modules (intervals), indecomposability, modular decomposition and inflation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .canon import CapabilityError
from .graphs import Graph, _bits

MODULE_VERTEX_LIMIT = 20
CRITICAL_TEST_LIMIT = 12


class Kind(str, Enum):
    INDECOMPOSABLE = "indecomposable"
    PARALLEL = "degenerate-parallel"
    SERIES = "degenerate-series"
    PRIME = "prime"


@dataclass(frozen=True)
class ModularDecomposition:
    """Top-level modular decomposition of a graph.

    PRIME carries the indecomposable skeleton (|K| >= 4) and one interval per
    skeleton vertex; PARALLEL/SERIES carry the component (resp. co-component)
    subgraphs without claiming unique intervals; INDECOMPOSABLE carries
    neither.
    """

    kind: Kind
    skeleton: Graph | None = None
    intervals: tuple[tuple[int, Graph], ...] | None = None
    parts: tuple[Graph, ...] | None = None


def is_module(g: Graph, mask: int) -> bool:
    """True iff every vertex outside mask sees all of mask or none of it."""
    for v in range(g.n):
        if mask >> v & 1:
            continue
        hit = g.adj[v] & mask
        if hit and hit != mask:
            return False
    return True


def _proper_module_masks(g: Graph) -> list[int]:
    out = []
    for mask in range(3, 1 << g.n):
        size = mask.bit_count()
        if 2 <= size <= g.n - 1 and is_module(g, mask):
            out.append(mask)
    return out


def modules(g: Graph) -> list[tuple[int, ...]]:
    """Every nonempty module as a sorted vertex tuple (singletons and V included)."""
    if g.n > MODULE_VERTEX_LIMIT:
        raise CapabilityError(f"module scan limited to {MODULE_VERTEX_LIMIT} vertices")
    found = []
    for mask in range(1, 1 << g.n):
        if is_module(g, mask):
            found.append(tuple(_bits(mask)))
    found.sort(key=lambda t: (len(t), t))
    return found


def is_indecomposable(g: Graph) -> bool:
    """No proper module; graphs on at most 2 vertices count as indecomposable."""
    if g.n > MODULE_VERTEX_LIMIT:
        raise CapabilityError(f"module scan limited to {MODULE_VERTEX_LIMIT} vertices")
    if g.n <= 2:
        return True
    for mask in range(3, 1 << g.n):
        size = mask.bit_count()
        if 2 <= size <= g.n - 1 and is_module(g, mask):
            return False
    return True


def indecomposable_masks(g: Graph) -> list[bool]:
    """Table indexed by vertex-set mask: does the induced subgraph lack proper modules?

    Subsets of size <= 2 are indecomposable by convention. Built in one sweep
    over (module, host) mask pairs, so the whole table costs O(3^n).
    """
    if g.n > 16:
        raise CapabilityError("submask table limited to 16 vertices")
    full = (1 << g.n) - 1
    indec = [True] * (1 << g.n)
    for m in range(3, 1 << g.n):
        if m.bit_count() < 2:
            continue
        distinguishers = 0
        for v in range(g.n):
            if m >> v & 1:
                continue
            hit = g.adj[v] & m
            if hit and hit != m:
                distinguishers |= 1 << v
        free = full & ~m & ~distinguishers
        # every superset m | s (s nonempty, s subset of free) has m as a proper module
        s = free
        while s:
            indec[m | s] = False
            s = (s - 1) & free
    return indec


def maximal_proper_module_masks(g: Graph) -> list[int]:
    mods = _proper_module_masks(g)
    out = []
    for m in mods:
        if not any(m != o and m & o == m for o in mods):
            out.append(m)
    return out


def decompose(g: Graph) -> ModularDecomposition:
    """Top-level modular decomposition (unique skeleton, Prime intervals)."""
    if g.n < 1:
        raise ValueError("decomposition needs at least one vertex")
    if g.n > MODULE_VERTEX_LIMIT:
        raise CapabilityError(f"module scan limited to {MODULE_VERTEX_LIMIT} vertices")
    if g.n <= 2:
        return ModularDecomposition(Kind.INDECOMPOSABLE)
    comps = g.components()
    if len(comps) > 1:
        return ModularDecomposition(
            Kind.PARALLEL, parts=tuple(g.induced_subgraph(c) for c in comps)
        )
    cocomps = g.complement().components()
    if len(cocomps) > 1:
        return ModularDecomposition(
            Kind.SERIES, parts=tuple(g.induced_subgraph(c) for c in cocomps)
        )
    maximal = maximal_proper_module_masks(g)
    if not maximal:
        return ModularDecomposition(Kind.INDECOMPOSABLE)
    # Connected and co-connected: the maximal proper modules are pairwise
    # disjoint and, together with leftover singletons, partition V. Checked
    # rather than assumed.
    covered = 0
    for m in maximal:
        if m & covered:
            raise RuntimeError("maximal modules of a prime-quotient graph overlap")
        covered |= m
    part_masks = list(maximal)
    for v in range(g.n):
        if not covered >> v & 1:
            part_masks.append(1 << v)
    part_masks.sort(key=lambda m: (m & -m).bit_length())
    k = len(part_masks)
    reps = [(m & -m).bit_length() - 1 for m in part_masks]
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            hit = g.adj[reps[i]] & part_masks[j]
            if hit == part_masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            elif hit:
                raise RuntimeError("module boundary violated between quotient parts")
            for u in _bits(part_masks[i]):
                cross = g.adj[u] & part_masks[j]
                if cross not in (0, part_masks[j]):
                    raise RuntimeError("module boundary violated between quotient parts")
    skeleton = Graph(k, tuple(rows))
    if k < 4 or not is_indecomposable(skeleton):
        raise RuntimeError("prime quotient is not an indecomposable graph on >= 4 vertices")
    intervals = tuple(
        (i, g.induced_subgraph(_bits(m))) for i, m in enumerate(part_masks)
    )
    return ModularDecomposition(Kind.PRIME, skeleton=skeleton, intervals=intervals)


def inflate(k: Graph, parts: list[Graph] | tuple[Graph, ...]) -> Graph:
    """Replace vertex i of k by parts[i]; each part becomes a module of the result."""
    if len(parts) != k.n:
        raise ValueError("need one part per skeleton vertex")
    if any(p.n == 0 for p in parts):
        raise ValueError("empty inflation part")
    total = sum(p.n for p in parts)
    if total > 64:
        raise ValueError("inflation exceeds 64 vertices")
    offsets = []
    acc = 0
    for p in parts:
        offsets.append(acc)
        acc += p.n
    rows = [0] * total
    for i, p in enumerate(parts):
        base = offsets[i]
        for v in range(p.n):
            rows[base + v] |= p.adj[v] << base
        for j in _bits(k.adj[i]):
            if j <= i:
                continue
            block_i = ((1 << p.n) - 1) << base
            block_j = ((1 << parts[j].n) - 1) << offsets[j]
            for v in range(p.n):
                rows[base + v] |= block_j
            for v in range(parts[j].n):
                rows[offsets[j] + v] |= block_i
    return Graph(total, tuple(rows))


def skeleton(g: Graph) -> Graph:
    """The unique indecomposable quotient: g itself, K2/its complement, or the prime skeleton."""
    dec = decompose(g)
    if dec.kind is Kind.INDECOMPOSABLE:
        return g
    if dec.kind is Kind.PARALLEL:
        return Graph(2, (0, 0))
    if dec.kind is Kind.SERIES:
        return Graph(2, (2, 1))
    assert dec.skeleton is not None
    return dec.skeleton


def critically_indecomposable(n: int, complemented: bool = False) -> Graph:
    """The n-vertex half-graph (A_i adjacent to B_1..B_i), or its complement.

    This is the single infinite family of indecomposable graphs, up to
    complementation, none of whose one-vertex-deleted subgraphs are
    indecomposable.
    """
    if n < 4 or n % 2:
        raise ValueError("half-graphs exist for even n >= 4 only")
    if n > 64:
        raise ValueError("half-graph exceeds 64 vertices")
    m = n // 2
    edges = [(i, m + j) for i in range(m) for j in range(i + 1)]
    g = Graph.from_edges(n, edges)
    return g.complement() if complemented else g


def is_critically_indecomposable(g: Graph) -> bool:
    """Indecomposable with no indecomposable one-vertex-deleted subgraph."""
    if g.n > CRITICAL_TEST_LIMIT:
        raise CapabilityError(f"criticality test limited to {CRITICAL_TEST_LIMIT} vertices")
    if not is_indecomposable(g):
        return False
    return not any(is_indecomposable(g.delete_vertex(v)) for v in range(g.n))
