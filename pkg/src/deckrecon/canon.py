"""Canonical labelling, isomorphism testing, automorphism orbits, containment.

Canonicalisation runs equitable degree-partition refinement, then backtracks
over cell orderings picking the lexicographically smallest adjacency
bit-string. Automorphisms discovered as leaf collisions prune the search and
supply the orbit partition. Exact and fast enough for graphs up to ~12
vertices, which is all the desk-scale procedures need.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, bits_to_graph6, from_graph6

ORBIT_VERTEX_LIMIT = 12


class CapabilityError(ValueError):
    """Input exceeds a documented size bound for an exact operation."""


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts toward every cell."""
    cells = [list(c) for c in cells]
    while True:
        split = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            new: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    split = True
                    for key in sorted(groups):
                        new.append(groups[key])
            if split:
                cells = new
                break
        if not split:
            return cells


def _leaf_bits(adj: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    bits = []
    for j in range(1, len(order)):
        col = adj[order[j]]
        for i in range(j):
            bits.append(col >> order[i] & 1)
    return tuple(bits)


def _search(n: int, adj: tuple[int, ...], cells: list[list[int]]):
    """Return (best labelling order, canonical bits, discovered automorphisms)."""
    best_bits: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    first_bits: tuple[int, ...] | None = None
    first_order: list[int] | None = None
    auts: list[tuple[int, ...]] = []
    aut_seen: set[tuple[int, ...]] = set()
    identity = tuple(range(n))

    def record(order: list[int], ref: list[int]) -> None:
        a = [0] * n
        for pos in range(n):
            a[order[pos]] = ref[pos]
        t = tuple(a)
        if t != identity and t not in aut_seen:
            aut_seen.add(t)
            auts.append(t)

    def search(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_bits, best_order, first_bits, first_order
        cells = _refine(adj, cells)
        if best_bits is not None:
            prefix = []
            for c in cells:
                if len(c) == 1:
                    prefix.append(c[0])
                else:
                    break
            plen = len(prefix) * (len(prefix) - 1) // 2
            if plen and _leaf_bits(adj, prefix) > best_bits[:plen]:
                return
        target = -1
        size = n + 1
        for i, c in enumerate(cells):
            if 1 < len(c) < size:
                target = i
                size = len(c)
        if target < 0:
            order = [c[0] for c in cells]
            bits = _leaf_bits(adj, order)
            if first_bits is None:
                first_bits, first_order = bits, order
            elif bits == first_bits:
                record(order, first_order)
            if best_bits is None or bits < best_bits:
                best_bits, best_order = bits, order
            elif bits == best_bits and order != best_order:
                record(order, best_order)
            return
        tried: list[int] = []
        for v in sorted(cells[target]):
            if tried:
                # Skip branches mapped to an explored one by a known
                # automorphism fixing the individualised prefix pointwise.
                parent = list(range(n))

                def find(x: int) -> int:
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                for a in auts:
                    if all(a[x] == x for x in fixed):
                        for x in range(n):
                            rx, ry = find(x), find(a[x])
                            if rx != ry:
                                parent[rx] = ry
                rv = find(v)
                if any(find(u) == rv for u in tried):
                    continue
            rest = [u for u in cells[target] if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :], fixed + [v])
            tried.append(v)

    search(cells, [])
    assert best_order is not None
    return best_order, best_bits, auts


def canonical_code(n: int, adj: tuple[int, ...]) -> str:
    if n <= 1:
        return bits_to_graph6(n, [])
    order, bits, _ = _search(n, adj, [list(range(n))])
    return bits_to_graph6(n, bits)


def canonical_form(g: Graph) -> str:
    """Canonical graph6 code: equal codes iff isomorphic graphs."""
    return canonical_code(g.n, g.adj)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation lab with lab[v] = canonical position of v."""
    if g.n <= 1:
        return tuple(range(g.n))
    order, _, _ = _search(g.n, g.adj, [list(range(g.n))])
    lab = [0] * g.n
    for pos, v in enumerate(order):
        lab[v] = pos
    return tuple(lab)


def canonical_graph(g: Graph) -> Graph:
    return from_graph6(canonical_form(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_orbits(g: Graph) -> list[tuple[int, ...]]:
    """Exact orbit partition of the full automorphism group (n <= 12)."""
    if g.n > ORBIT_VERTEX_LIMIT:
        raise CapabilityError(f"orbit computation limited to {ORBIT_VERTEX_LIMIT} vertices")
    if g.n <= 1:
        return [tuple(range(g.n))] if g.n else []
    _, _, auts = _search(g.n, g.adj, [list(range(g.n))])
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in auts:
        for x in range(g.n):
            rx, ry = find(x), find(a[x])
            if rx != ry:
                parent[rx] = ry
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(c)) for c in classes.values()), key=lambda c: c[0])


def orbit_index(orbits: list[tuple[int, ...]]) -> dict[int, int]:
    return {v: i for i, orb in enumerate(orbits) for v in orb}


def has_induced_subgraph(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of g induces a graph isomorphic to h."""
    if h.n > g.n:
        raise ValueError("pattern larger than host")
    target = canonical_form(h)
    he = h.edge_count()
    for xs in combinations(range(g.n), h.n):
        sub = g.induced_subgraph(xs)
        if sub.edge_count() == he and canonical_form(sub) == target:
            return True
    return False


def count_induced_copies(g: Graph, h: Graph) -> int:
    """Number of vertex subsets of g inducing a graph isomorphic to h."""
    if h.n > g.n:
        raise ValueError("pattern larger than host")
    target = canonical_form(h)
    he = h.edge_count()
    count = 0
    for xs in combinations(range(g.n), h.n):
        sub = g.induced_subgraph(xs)
        if sub.edge_count() == he and canonical_form(sub) == target:
            count += 1
    return count


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Some isomorphism g -> h as a vertex map, or None."""
    if not is_isomorphic(g, h):
        return None
    lg = canonical_labeling(g)
    lh = canonical_labeling(h)
    inv_h = [0] * h.n
    for v, pos in enumerate(lh):
        inv_h[pos] = v
    return tuple(inv_h[lg[v]] for v in range(g.n))
