"""Reconstruction of decomposable graphs from their decks.

The pipeline recovers the skeleton and the singleton count from the deck,
then splits on the shape of the non-singleton maximal intervals: at least two
of them, one of size >= 3, or one of size exactly 2. Each branch recovers the
intervals and splices a card back up to the original graph. Outcomes the
theory leaves open (hereditary orbit sets; a size-2 interval whose target
orbit cannot be pinned down) surface as first-class Unsupported results.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .canon import (
    CapabilityError,
    automorphism_orbits,
    canonical_form,
    canonical_labeling,
    is_isomorphic,
    orbit_index,
)
from .deck import (
    Deck,
    DeckIntegrityError,
    card_graphs,
    deck_equal,
    edge_count_from_deck,
    make_deck,
    skeleton_code,
)
from .graphs import Graph, _bits, disjoint_union, empty_graph, from_graph6
from .modular import (
    Kind,
    decompose,
    inflate,
    is_critically_indecomposable,
    is_indecomposable,
    maximal_proper_module_masks,
    skeleton,
)

FAMILY_TEST_LIMIT = 10

SINGLETON = empty_graph(1)
SINGLETON_CODE = canonical_form(SINGLETON)
K2_CODE = canonical_form(Graph(2, (2, 1)))
K2BAR_CODE = canonical_form(empty_graph(2))

NOT_DECOMPOSABLE = (
    "deck not recognised as that of a decomposable graph; "
    "reconstruction assumes decomposable input"
)


class UnsupportedCase(Exception):
    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class ReconstructionResult:
    """Either a reconstructed graph with provenance, or an open/ambiguous outcome."""

    status: str  # "reconstructed" | "unsupported" | "ambiguous"
    graph: Graph | None = None
    provenance: str | None = None
    reason: str | None = None
    candidates: tuple[str, ...] = ()

    @property
    def reconstructed(self) -> bool:
        return self.status == "reconstructed"


# -- deck-level skeleton and singleton statistics -----------------------------


def _dk_split(d: Deck, k: Graph) -> tuple[list[str], list[str]]:
    """Cards whose skeleton matches k, and the rest."""
    target = canonical_form(k)
    cache: dict[str, str] = {}
    dk: list[str] = []
    non: list[str] = []
    for code in d.cards:
        if code not in cache:
            cache[code] = skeleton_code(code)
        (dk if cache[code] == target else non).append(code)
    return dk, non


def skeleton_from_deck(d: Deck) -> Graph:
    """The unique largest card skeleton on >= 4 vertices."""
    top_n = 0
    top_codes: set[str] = set()
    for code in set(d.cards):
        k = skeleton(from_graph6(code))
        if k.n < 4:
            continue
        if k.n > top_n:
            top_n, top_codes = k.n, {canonical_form(k)}
        elif k.n == top_n:
            top_codes.add(canonical_form(k))
    if not top_codes:
        raise DeckIntegrityError("no card has a skeleton on four or more vertices")
    if len(top_codes) > 1:
        raise DeckIntegrityError("largest card skeletons disagree")
    return from_graph6(top_codes.pop())


def singleton_count(d: Deck, k: Graph) -> int:
    """Number of cards whose skeleton differs from k (= singleton intervals)."""
    _, non = _dk_split(d, k)
    s = len(non)
    if s > k.n:
        raise DeckIntegrityError("more skeleton-changing cards than skeleton vertices")
    return s


def _prime_decomposition(card: Graph, expect_code: str | None = None):
    dec = decompose(card)
    if dec.kind is not Kind.PRIME:
        raise DeckIntegrityError("card expected to carry a prime decomposition")
    assert dec.skeleton is not None and dec.intervals is not None
    if expect_code is not None and canonical_form(dec.skeleton) != expect_code:
        raise DeckIntegrityError("card skeleton differs from the recovered skeleton")
    return dec


def _position_map(k: Graph) -> list[int]:
    """Inverse canonical labelling of k: canonical position -> vertex of k."""
    lab = canonical_labeling(k)
    inv = [0] * k.n
    for v, pos in enumerate(lab):
        inv[pos] = v
    return inv


# -- interval recovery: at least two non-singleton maximal intervals ----------


def intervals_multi(d: Deck, k: Graph) -> list[tuple[int, Graph]]:
    """Non-singleton maximal intervals tagged with the skeleton orbit they inflate.

    Recovered by attributability over the cards sharing the skeleton:
    repeatedly take a largest interval in the pooled list, divide out its
    expected multiplicity, and subtract its own deck.
    """
    ck = canonical_form(k)
    dk, non = _dk_split(d, k)
    s = len(non)
    m = k.n - s
    if m < 2:
        raise ValueError("needs at least two non-singleton maximal intervals")
    oix = orbit_index(automorphism_orbits(k))
    inv_k = _position_map(k)
    pool: Counter[tuple[int, str]] = Counter()
    for code in dk:
        dec = _prime_decomposition(from_graph6(code), ck)
        labs = canonical_labeling(dec.skeleton)
        for pos, part in dec.intervals:
            if part.n >= 2:
                pool[(oix[inv_k[labs[pos]]], canonical_form(part))] += 1
    orders: dict[str, int] = {}

    def order_of(code: str) -> int:
        if code not in orders:
            orders[code] = from_graph6(code).n
        return orders[code]

    recovered: Counter[tuple[int, str]] = Counter()
    while pool:
        t, code = max(pool, key=lambda key: (order_of(key[1]), key))
        size = order_of(code)
        denom = d.n - s - size
        count = pool.pop((t, code))
        if denom <= 0 or count % denom:
            raise DeckIntegrityError("interval attribution counts are inconsistent")
        cnt = count // denom
        recovered[(t, code)] += cnt
        part = from_graph6(code)
        for v in range(part.n):
            sub = part.delete_vertex(v)
            if sub.n < 2:
                continue
            key = (t, canonical_form(sub))
            pool[key] -= cnt
            if pool[key] < 0:
                raise DeckIntegrityError("interval attribution subtracted a missing card")
            if pool[key] == 0:
                del pool[key]
    if sum(recovered.values()) != m or sum(
        order_of(code) * q for (_, code), q in recovered.items()
    ) != d.n - s:
        raise DeckIntegrityError("recovered intervals do not account for the deck")
    out: list[tuple[int, Graph]] = []
    for (t, code), q in sorted(recovered.items()):
        out.extend([(t, from_graph6(code))] * q)
    return out


# -- interval recovery: a single non-singleton interval of size >= 3 ----------


def _lone_nonsingleton(dec) -> tuple[int, Graph] | None:
    nons = [(pos, p) for pos, p in dec.intervals if p.n >= 2]
    if len(nons) != 1:
        return None
    return nons[0]


def _splice_unique(card: Graph, part: Graph, expect_code: str | None = None) -> Graph:
    """Replace the unique non-singleton maximal interval of card by part."""
    dec = _prime_decomposition(card, expect_code)
    lone = _lone_nonsingleton(dec)
    if lone is None:
        raise DeckIntegrityError("card does not carry a unique non-singleton interval")
    parts = [part if pos == lone[0] else p for pos, p in dec.intervals]
    return inflate(dec.skeleton, parts)


def _strip_lone_vertex(j: Graph, size: int) -> Graph | None:
    """Extract the size-vertex half of a one-vertex join or disjoint add-on."""
    dec = decompose(j)
    if dec.kind not in (Kind.PARALLEL, Kind.SERIES) or dec.parts is None:
        return None
    if sorted(p.n for p in dec.parts) != [1, size]:
        return None
    return max(dec.parts, key=lambda p: p.n)


def _degenerate_card_interval(dec, k: Graph, size: int) -> Graph | None:
    """A degenerate card of the shape (one extra vertex over an inflation of an
    indecomposable subgraph on |K|-2 vertices) exposes the interval."""
    if dec.parts is None or len(dec.parts) != 2:
        return None
    big = [p for p in dec.parts if p.n > 1]
    if len(big) != 1 or big[0].n < 4:
        return None
    inner = decompose(big[0])
    if inner.kind is not Kind.PRIME or inner.skeleton.n != k.n - 2:
        return None
    lone = _lone_nonsingleton(inner)
    if lone is None or lone[1].n != size:
        return None
    return lone[1]


def _single_large_candidates(k: Graph, non: list[str], size: int) -> list[Graph]:
    out: list[Graph] = []
    for code in sorted(set(non)):
        dec = decompose(from_graph6(code))
        if dec.kind is Kind.PRIME:
            nons = [p for _, p in dec.intervals if p.n >= 2]
            if dec.skeleton.n == k.n - 1:
                if len(nons) == 1 and nons[0].n == size:
                    out.append(nons[0])
            elif dec.skeleton.n == k.n - 2:
                if len(nons) == 2 and sorted(p.n for p in nons) == [2, size]:
                    out.append(max(nons, key=lambda p: p.n))
                elif len(nons) == 1 and nons[0].n == size + 1:
                    got = _strip_lone_vertex(nons[0], size)
                    if got is not None:
                        out.append(got)
        elif dec.kind in (Kind.PARALLEL, Kind.SERIES):
            got = _degenerate_card_interval(dec, k, size)
            if got is not None:
                out.append(got)
    return out


def interval_single_large(d: Deck, k: Graph) -> Graph:
    """Recover the unique non-singleton maximal interval when it has >= 3 vertices."""
    ck = canonical_form(k)
    dk, non = _dk_split(d, k)
    s = len(non)
    size = d.n - s
    if k.n - s != 1 or size < 3:
        raise ValueError("expects exactly one non-singleton maximal interval of size >= 3")
    shrunk: list[str] = []
    for code in dk:
        dec = _prime_decomposition(from_graph6(code), ck)
        lone = _lone_nonsingleton(dec)
        if lone is None or lone[1].n != size - 1:
            raise DeckIntegrityError("skeleton-preserving cards must shrink the interval by one")
        shrunk.append(canonical_form(lone[1]))
    interval_deck = Deck(size, tuple(sorted(shrunk)))

    candidates: dict[str, Graph] = {}
    if _degenerate_deck_kind(interval_deck) is not None:
        g = reconstruct_degenerate(interval_deck)
        candidates[canonical_form(g)] = g
    else:
        for cand in _single_large_candidates(k, non, size):
            candidates.setdefault(canonical_form(cand), cand)
        if not candidates:
            # small-skeleton cases: inspect every possible interval directly
            from .oracle import oracle_preimages

            if size > 8:
                raise CapabilityError("direct interval inspection limited to 8 vertices")
            for cand in oracle_preimages(interval_deck):
                candidates.setdefault(canonical_form(cand), cand)
    host = from_graph6(min(dk))
    survivors: list[Graph] = []
    for _, cand in sorted(candidates.items()):
        if deck_equal(make_deck(_splice_unique(host, cand, ck)), d):
            survivors.append(cand)
    if len(survivors) != 1:
        raise DeckIntegrityError("interval recovery did not isolate a unique interval")
    return survivors[0]


# -- interval recovery: a single non-singleton interval of size 2 -------------


def _consistent_positions(k: Graph, s: Graph, pos: int) -> set[int]:
    """Images of pos under every embedding of s into k as an induced subgraph."""
    cs = canonical_form(s)
    labs = canonical_labeling(s)
    out: set[int] = set()
    for xs in combinations(range(k.n), s.n):
        sub = k.induced_subgraph(xs)
        if canonical_form(sub) != cs:
            continue
        inv = [0] * sub.n
        for v, p in enumerate(canonical_labeling(sub)):
            inv[p] = v
        image = inv[labs[pos]]
        orbs = automorphism_orbits(sub)
        out.update(xs[j] for j in orbs[orbit_index(orbs)[image]])
    return out


def _edge_consistent(k: Graph, icode: str, positions: set[int], total_edges: int) -> set[int]:
    extra = 1 if icode == K2_CODE else 0
    return {p for p in positions if total_edges == k.edge_count() + k.degree(p) + extra}


def _order1_cards(non: list[str], k: Graph) -> list[tuple[str, object]]:
    out = []
    for code in sorted(set(non)):
        dec = decompose(from_graph6(code))
        if dec.kind is Kind.PRIME and dec.skeleton.n == k.n - 1:
            out.append((code, dec))
    return out


def _pair_generic(k: Graph, non: list[str], total_edges: int) -> tuple[str, set[int]]:
    order1 = _order1_cards(non, k)
    if order1:
        icodes: set[str] = set()
        positions: set[int] = set()
        for _, dec in order1:
            lone = _lone_nonsingleton(dec)
            if lone is None or lone[1].n != 2:
                raise DeckIntegrityError("card evidence inconsistent with one size-2 interval")
            icodes.add(canonical_form(lone[1]))
            positions |= _consistent_positions(k, dec.skeleton, lone[0])
        if len(icodes) != 1:
            raise DeckIntegrityError("cards disagree about the size-2 interval")
        icode = icodes.pop()
        positions = _edge_consistent(k, icode, positions, total_edges)
        if not positions:
            raise DeckIntegrityError("no inflation point matches the recovered edge count")
        return icode, positions
    # No card keeps an order-(|K|-1) indecomposable quotient, so the one
    # vertex whose removal leaves K indecomposable must itself be inflated.
    kprimes = [v for v in range(k.n) if is_indecomposable(k.delete_vertex(v))]
    if len(kprimes) != 1:
        raise DeckIntegrityError("evidence admits no unique inflation point")
    kstar = kprimes[0]
    base = k.edge_count() + k.degree(kstar)
    if total_edges == base + 1:
        return K2_CODE, {kstar}
    if total_edges == base:
        return K2BAR_CODE, {kstar}
    raise DeckIntegrityError("edge count matches neither size-2 interval")


def _lone_pair_interval(p: Graph):
    """(interval code, prime quotient, position) shown by the non-isolated part
    of an isolated-vertex card, or (code, None, None) when the part collapses
    to a degenerate graph whose maximal proper modules all agree."""
    dec = decompose(p)
    if dec.kind is Kind.PRIME:
        lone = _lone_nonsingleton(dec)
        if lone is not None and lone[1].n == 2:
            return canonical_form(lone[1]), dec.skeleton, lone[0]
        return None
    masks = [m for m in maximal_proper_module_masks(p) if m.bit_count() >= 2]
    if masks:
        parts = [p.induced_subgraph(_bits(m)) for m in masks]
        if all(q.n == 2 for q in parts):
            codes = {canonical_form(q) for q in parts}
            if len(codes) == 1:
                return codes.pop(), None, None
    return None


def _pair_critical(k: Graph, non: list[str], total_edges: int) -> tuple[str, set[int]]:
    evidence: dict[str, set[int] | None] = {}
    for code in sorted(set(non)):
        h = from_graph6(code)
        for flip in (False, True):
            g2 = h.complement() if flip else h
            base = k.complement() if flip else k
            for w in range(g2.n):
                if g2.adj[w]:
                    continue
                part = g2.delete_vertex(w)
                if part.n < 3:
                    continue
                got = _lone_pair_interval(part)
                if got is None:
                    continue
                icode, quotient, pos = got
                if flip:
                    icode = canonical_form(from_graph6(icode).complement())
                spots = (
                    _consistent_positions(base, quotient, pos)
                    if quotient is not None
                    else None
                )
                if icode not in evidence or evidence[icode] is None:
                    evidence[icode] = spots
                elif spots is not None:
                    evidence[icode] |= spots
    viable: list[tuple[str, set[int]]] = []
    for icode, spots in sorted(evidence.items()):
        positions = spots if spots else set(range(k.n))
        positions = _edge_consistent(k, icode, positions, total_edges)
        if positions:
            viable.append((icode, positions))
    if len(viable) != 1:
        raise DeckIntegrityError("isolated-vertex cards do not isolate the interval")
    return viable[0]


def interval_single_pair(d: Deck, k: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Recover the unique size-2 maximal interval plus the skeleton vertices
    consistent with the deck's evidence."""
    if d.n != k.n + 1:
        raise ValueError("expects a skeleton one vertex smaller than the graph")
    dk, non = _dk_split(d, k)
    if len(dk) != 2:
        raise DeckIntegrityError("expected exactly two cards isomorphic to the skeleton")
    total_edges = edge_count_from_deck(d)
    if is_critically_indecomposable(k):
        icode, positions = _pair_critical(k, non, total_edges)
    else:
        icode, positions = _pair_generic(k, non, total_edges)
    return from_graph6(icode), tuple(sorted(positions))


# -- family predicates ---------------------------------------------------------


def in_family_F(g: Graph) -> bool:
    """Trivial automorphism group, and every induced subgraph on n-1 and n-2
    vertices arises from exactly one vertex subset."""
    if g.n > FAMILY_TEST_LIMIT:
        raise CapabilityError(f"family test limited to {FAMILY_TEST_LIMIT} vertices")
    if any(len(o) > 1 for o in automorphism_orbits(g)):
        return False
    for size in (g.n - 1, g.n - 2):
        if size < 1:
            continue
        counts = Counter(
            canonical_form(g.induced_subgraph(xs))
            for xs in combinations(range(g.n), size)
        )
        if any(c != 1 for c in counts.values()):
            return False
    return True


def in_family_G(g: Graph) -> bool:
    """No pseudo-similar vertices, and orbits of every card lift to orbits of g."""
    if g.n > FAMILY_TEST_LIMIT:
        raise CapabilityError(f"family test limited to {FAMILY_TEST_LIMIT} vertices")
    oix = orbit_index(automorphism_orbits(g))
    cards = [canonical_form(g.delete_vertex(v)) for v in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if cards[u] == cards[v] and oix[u] != oix[v]:
                return False
    for w in range(g.n):
        back = [x for x in range(g.n) if x != w]
        for orb in automorphism_orbits(g.delete_vertex(w)):
            if len({oix[back[i]] for i in orb}) > 1:
                return False
    return True


def _relaxed_witnesses(k: Graph) -> list[int]:
    if k.n > FAMILY_TEST_LIMIT:
        raise CapabilityError(f"family test limited to {FAMILY_TEST_LIMIT} vertices")
    if not is_indecomposable(k):
        raise ValueError("the relaxed condition applies to indecomposable graphs")
    oix = orbit_index(automorphism_orbits(k))
    cards = [canonical_form(k.delete_vertex(v)) for v in range(k.n)]
    out = []
    for kp in range(k.n):
        sub = k.delete_vertex(kp)
        if not is_indecomposable(sub):
            continue
        if any(cards[x] == cards[kp] and oix[x] != oix[kp] for x in range(k.n)):
            continue
        back = [x for x in range(k.n) if x != kp]
        if any(
            len({oix[back[i]] for i in orb}) > 1
            for orb in automorphism_orbits(sub)
        ):
            continue
        out.append(kp)
    return out


def relaxed_skeleton_condition(k: Graph) -> bool:
    """Some vertex deletion keeps k indecomposable, similar deletions stay in
    one orbit, and the card's orbits lift back to k."""
    return bool(_relaxed_witnesses(k))


# -- degenerate graphs ---------------------------------------------------------


def _degenerate_deck_kind(d: Deck) -> Kind | None:
    cards = card_graphs(d)
    if sum(1 for c in cards if c.is_connected()) <= 1:
        return Kind.PARALLEL
    if sum(1 for c in cards if c.complement().is_connected()) <= 1:
        return Kind.SERIES
    return None


def _rebuild_from_components(n: int, cards: list[Graph]) -> Graph:
    pool: Counter[str] = Counter()
    for card in cards:
        for comp in card.components():
            pool[canonical_form(card.induced_subgraph(comp))] += 1
    orders: dict[str, int] = {}

    def order_of(code: str) -> int:
        if code not in orders:
            orders[code] = from_graph6(code).n
        return orders[code]

    parts: list[Graph] = []
    while pool:
        code = max(pool, key=lambda c: (order_of(c), c))
        big = from_graph6(code)
        q = n - big.n
        count = pool.pop(code)
        if q <= 0 or count % q:
            raise DeckIntegrityError("component attribution failed")
        cnt = count // q
        parts.extend([big] * cnt)
        for v in range(big.n):
            sub = big.delete_vertex(v)
            for comp in sub.components():
                key = canonical_form(sub.induced_subgraph(comp))
                pool[key] -= cnt
                if pool[key] < 0:
                    raise DeckIntegrityError("component attribution failed")
                if pool[key] == 0:
                    del pool[key]
    if sum(p.n for p in parts) != n or len(parts) < 2:
        raise DeckIntegrityError("components do not assemble to the right order")
    parts.sort(key=lambda p: (p.n, canonical_form(p)))
    return disjoint_union(parts)


def reconstruct_degenerate(d: Deck) -> Graph:
    """The unique graph with deck d, for decks of degenerate graphs.

    Works by pooling components across cards and repeatedly removing the
    largest one together with the components attributable to it; the series
    case goes through complementation.
    """
    if d.n < 3:
        raise ValueError("degenerate reconstruction needs at least three cards")
    kind = _degenerate_deck_kind(d)
    if kind is None:
        raise DeckIntegrityError("deck does not come from a degenerate graph")
    if kind is Kind.PARALLEL:
        return _rebuild_from_components(d.n, card_graphs(d))
    flipped = _rebuild_from_components(d.n, [c.complement() for c in card_graphs(d)])
    return flipped.complement()


# -- full reconstruction dispatch ----------------------------------------------


def _inflate_at(k: Graph, pos: int, part: Graph) -> Graph:
    return inflate(k, [part if i == pos else SINGLETON for i in range(k.n)])


def _reconstruct_multi(d: Deck, k: Graph) -> tuple[Graph, str]:
    tagged = intervals_multi(d, k)
    orbs = automorphism_orbits(k)
    oix = orbit_index(orbs)
    inv_k = _position_map(k)
    ck = canonical_form(k)
    full: Counter[tuple[int, str]] = Counter(
        (t, canonical_form(p)) for t, p in tagged
    )
    nonsingle_at = Counter(t for t, _ in tagged)
    for t, orb in enumerate(orbs):
        extra = len(orb) - nonsingle_at[t]
        if extra < 0:
            raise DeckIntegrityError("more intervals than skeleton vertices in an orbit")
        if extra:
            full[(t, SINGLETON_CODE)] += extra
    orbit_codes: dict[int, set[str]] = {}
    for (t, code) in full:
        orbit_codes.setdefault(t, set()).add(code)

    found = None
    for t, code in sorted({(t, canonical_form(p)) for t, p in tagged}):
        part = from_graph6(code)
        for u in range(part.n):
            shrunk = canonical_form(part.delete_vertex(u))
            if shrunk not in orbit_codes[t]:
                found = (t, code, shrunk)
                break
        if found:
            break

    dk, non = _dk_split(d, k)
    if found is not None:
        t, code, shrunk = found
        target = Counter(full)
        target[(t, code)] -= 1
        if target[(t, code)] == 0:
            del target[(t, code)]
        target[(t, shrunk)] += 1
        for card_code in sorted(set(dk)):
            dec = _prime_decomposition(from_graph6(card_code), ck)
            labs = canonical_labeling(dec.skeleton)
            tags = [oix[inv_k[labs[pos]]] for pos, _ in dec.intervals]
            cm = Counter(
                (tags[pos], canonical_form(p)) for pos, p in dec.intervals
            )
            if cm != target:
                continue
            hits = [
                pos
                for pos, p in dec.intervals
                if tags[pos] == t and canonical_form(p) == shrunk
            ]
            if len(hits) != 1:
                raise DeckIntegrityError("shrunken interval position is not unique")
            parts = [
                from_graph6(code) if pos == hits[0] else p for pos, p in dec.intervals
            ]
            return inflate(dec.skeleton, parts), "multi-interval splice"
        raise DeckIntegrityError("no card exhibits the shrunken interval")

    # every orbit's interval set is hereditary
    if len(orbs) == 1:
        return _vertex_transitive_rebuild(d, k, full, non), "vertex-transitive skeleton"
    raise UnsupportedCase("hereditary orbits")


def _vertex_transitive_rebuild(
    d: Deck, k: Graph, full: Counter, non: list[str]
) -> Graph:
    """Rebuild around a singleton-deleted card; the skeleton is regular, so the
    missing vertex reattaches at the degree-deficient quotient positions."""
    if full[(0, SINGLETON_CODE)] < 1:
        raise DeckIntegrityError("hereditary orbit sets force a singleton interval")
    reduced = k.delete_vertex(0)
    if not is_indecomposable(reduced):
        raise DeckIntegrityError("vertex-transitive skeleton with decomposable deletions")
    ck1 = canonical_form(reduced)
    want = Counter(code for _, code in full.elements())
    want[SINGLETON_CODE] -= 1
    if want[SINGLETON_CODE] == 0:
        del want[SINGLETON_CODE]
    degree = k.degree(0)
    for card_code in sorted(set(non)):
        dec = decompose(from_graph6(card_code))
        if dec.kind is not Kind.PRIME or canonical_form(dec.skeleton) != ck1:
            continue
        if Counter(canonical_form(p) for _, p in dec.intervals) != want:
            continue
        quotient = dec.skeleton
        deficient = 0
        for pos in range(quotient.n):
            if quotient.degree(pos) == degree - 1:
                deficient |= 1 << pos
        rows = [row | ((deficient >> pos & 1) << quotient.n) for pos, row in enumerate(quotient.adj)]
        rows.append(deficient)
        grown = Graph(quotient.n + 1, tuple(rows))
        if not is_isomorphic(grown, k):
            raise DeckIntegrityError("reattached quotient does not match the skeleton")
        parts = [p for _, p in dec.intervals] + [SINGLETON]
        return inflate(grown, parts)
    raise DeckIntegrityError("no singleton-deleted card matches the recovered intervals")


def _reconstruct_single_large(d: Deck, k: Graph) -> tuple[Graph, str]:
    part = interval_single_large(d, k)
    dk, _ = _dk_split(d, k)
    host = from_graph6(min(dk))
    return _splice_unique(host, part, canonical_form(k)), "single large interval splice"


def _relaxed_positions(d: Deck, k: Graph, icode: str, total_edges: int) -> set[int]:
    """Evidence-consistent positions restricted to witness deletion classes."""
    _, non = _dk_split(d, k)
    witnesses = _relaxed_witnesses(k)
    wcodes = {canonical_form(k.delete_vertex(kp)): kp for kp in witnesses}
    positions: set[int] = set()
    seen_classes: set[str] = set()
    for _, dec in _order1_cards(non, k):
        code = canonical_form(dec.skeleton)
        if code not in wcodes:
            continue
        seen_classes.add(code)
        lone = _lone_nonsingleton(dec)
        if lone is None or lone[1].n != 2:
            raise DeckIntegrityError("card evidence inconsistent with one size-2 interval")
        positions |= _consistent_positions(k, dec.skeleton, lone[0])
    for code in wcodes:
        if code in seen_classes:
            continue
        # No card shows this witness class, so no singleton deletion produces
        # it; the inflated vertex itself must sit in the class.
        positions.update(
            v for v in range(k.n) if canonical_form(k.delete_vertex(v)) == code
        )
    return _edge_consistent(k, icode, positions, total_edges)


def _reconstruct_single_pair(d: Deck, k: Graph) -> tuple[Graph, str]:
    part, positions = interval_single_pair(d, k)
    pos_set = set(positions)
    icode = canonical_form(part)
    total_edges = edge_count_from_deck(d)
    oix = orbit_index(automorphism_orbits(k))
    if is_critically_indecomposable(k):
        raise UnsupportedCase("size-two interval with unidentifiable orbit")
    _, non = _dk_split(d, k)
    if not _order1_cards(non, k):
        if len(pos_set) != 1:
            raise DeckIntegrityError("unique inflation point expected")
        return _inflate_at(k, pos_set.pop(), part), "size-two interval at unique position"
    if k.n <= FAMILY_TEST_LIMIT and in_family_G(k):
        chosen = pos_set
        provenance = "size-two interval, orbit identified"
    elif k.n <= FAMILY_TEST_LIMIT and relaxed_skeleton_condition(k):
        chosen = _relaxed_positions(d, k, icode, total_edges)
        provenance = "size-two interval, orbit identified (relaxed)"
    else:
        raise UnsupportedCase("size-two interval with unidentifiable orbit")
    if not chosen or len({oix[p] for p in chosen}) != 1:
        raise DeckIntegrityError("inflation points span several orbits")
    return _inflate_at(k, min(chosen), part), provenance


def _unsupported(reason: str) -> ReconstructionResult:
    return ReconstructionResult("unsupported", reason=reason)


def _reconstruct_core(d: Deck) -> ReconstructionResult:
    if d.n < 3:
        return _unsupported("decks with fewer than three cards are ambiguous in general")
    if _degenerate_deck_kind(d) is not None:
        try:
            g = reconstruct_degenerate(d)
        except DeckIntegrityError as exc:
            return _unsupported(str(exc))
        if not deck_equal(make_deck(g), d):
            return _unsupported(NOT_DECOMPOSABLE)
        return ReconstructionResult(
            "reconstructed", graph=g, provenance="degenerate components"
        )
    try:
        k = skeleton_from_deck(d)
        s = singleton_count(d, k)
        m = k.n - s
        if m >= 2:
            g, provenance = _reconstruct_multi(d, k)
        elif m == 1 and d.n - s >= 3:
            g, provenance = _reconstruct_single_large(d, k)
        elif m == 1 and d.n - s == 2:
            g, provenance = _reconstruct_single_pair(d, k)
        else:
            return _unsupported(NOT_DECOMPOSABLE)
    except UnsupportedCase as exc:
        return _unsupported(exc.reason)
    except DeckIntegrityError:
        return _unsupported(NOT_DECOMPOSABLE)
    if not deck_equal(make_deck(g), d):
        return _unsupported(NOT_DECOMPOSABLE)
    return ReconstructionResult("reconstructed", graph=g, provenance=provenance)


def reconstruct(d: Deck, *, oracle_fallback: bool = False) -> ReconstructionResult:
    """Reconstruct the graph behind a deck, or report why the theory cannot.

    With oracle_fallback, open cases at desk scale (n <= 8) are settled by the
    exhaustive catalog instead; provenance then reads "oracle".
    """
    result = _reconstruct_core(d)
    if result.status != "reconstructed" and oracle_fallback and d.n <= 8:
        from .oracle import oracle_preimages

        preimages = oracle_preimages(d)
        if len(preimages) == 1:
            return ReconstructionResult(
                "reconstructed", graph=preimages[0], provenance="oracle"
            )
        if not preimages:
            return _unsupported("no graph on this many vertices has this deck")
        return ReconstructionResult(
            "ambiguous",
            candidates=tuple(sorted(canonical_form(g) for g in preimages)),
            reason=result.reason,
        )
    return result
