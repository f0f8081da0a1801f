import itertools
import random

import pytest

from deckrecon import (
    CapabilityError,
    Graph,
    Kind,
    canonical_form,
    complete_graph,
    critically_indecomposable,
    cycle_graph,
    decompose,
    disjoint_union,
    empty_graph,
    inflate,
    is_critically_indecomposable,
    is_indecomposable,
    is_isomorphic,
    is_module,
    modules,
    path_graph,
    skeleton,
)
from deckrecon.graphs import from_graph6
from deckrecon.modular import indecomposable_masks, maximal_proper_module_masks
from deckrecon.oracle import enumerate_graphs

from test_graphs import random_graph


def mask(vs):
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def test_is_module_examples(p4, bull):
    # in P4 = 0-1-2-3 the middle pair {1,2} is not a module, the whole set is
    assert not is_module(p4, mask([1, 2]))
    assert is_module(p4, mask([0, 1, 2, 3]))
    assert is_module(p4, mask([2]))
    # in the bull, the two horn-free degree-2 base... the pair {0, 3} of horn tips
    assert is_module(bull, mask([0, 3])) is False
    g = disjoint_union([complete_graph(2), empty_graph(1)])
    assert is_module(g, mask([0, 1]))


def test_modules_listing():
    g = complete_graph(3)
    assert modules(g) == [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    found = modules(path_graph(4))
    assert found == [(0,), (1,), (2,), (3,), (0, 1, 2, 3)]


def test_indecomposable_small_convention():
    for g in (empty_graph(0), empty_graph(1), empty_graph(2), complete_graph(2)):
        assert is_indecomposable(g)
    assert not is_indecomposable(complete_graph(3))
    assert not is_indecomposable(empty_graph(3))


def test_indecomposable_examples(p4, c5, house, bull):
    for g in (p4, c5, house, bull, path_graph(5)):
        assert is_indecomposable(g)
    assert not is_indecomposable(cycle_graph(4))
    assert not is_indecomposable(complete_graph(4))


def test_indecomposable_counts_small():
    # 0, 1 and 4 indecomposable classes on 3, 4 and 5 vertices
    counts = {3: 0, 4: 1, 5: 4}
    for n, want in counts.items():
        got = [
            code
            for code in enumerate_graphs(n).classes
            if is_indecomposable(from_graph6(code))
        ]
        assert len(got) == want


def test_five_vertex_indecomposables_are_the_known_four(c5, house, bull):
    got = {
        code
        for code in enumerate_graphs(5).classes
        if is_indecomposable(from_graph6(code))
    }
    want = {canonical_form(g) for g in (path_graph(5), c5, house, bull)}
    assert got == want


def test_indecomposability_complement_invariant():
    rng = random.Random(21)
    for _ in range(200):
        g = random_graph(rng.randrange(3, 8), rng)
        assert is_indecomposable(g) == is_indecomposable(g.complement())


def test_indecomposable_masks_table_agrees_with_direct_check():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng.randrange(1, 8), rng)
        table = indecomposable_masks(g)
        for m in range(1 << g.n):
            vs = [v for v in range(g.n) if m >> v & 1]
            assert table[m] == is_indecomposable(g.induced_subgraph(vs)), (g, m)


def test_decompose_kinds(p4):
    assert decompose(disjoint_union([path_graph(2), path_graph(3)])).kind is Kind.PARALLEL
    assert decompose(complete_graph(4)).kind is Kind.SERIES
    assert decompose(p4).kind is Kind.INDECOMPOSABLE
    assert decompose(empty_graph(1)).kind is Kind.INDECOMPOSABLE
    with pytest.raises(ValueError):
        decompose(empty_graph(0))
    with pytest.raises(CapabilityError):
        decompose(empty_graph(21))


def test_decompose_prime_example(c5):
    g = inflate(c5, [complete_graph(2)] + [empty_graph(1)] * 4)
    dec = decompose(g)
    assert dec.kind is Kind.PRIME
    assert is_isomorphic(dec.skeleton, c5)
    sizes = sorted(p.n for _, p in dec.intervals)
    assert sizes == [1, 1, 1, 1, 2]


def test_decompose_parts_cover_graph():
    g = disjoint_union([complete_graph(3), complete_graph(3), path_graph(2)])
    dec = decompose(g)
    assert dec.kind is Kind.PARALLEL
    assert sorted(p.n for p in dec.parts) == [2, 3, 3]
    dec2 = decompose(g.complement())
    assert dec2.kind is Kind.SERIES
    assert sorted(p.n for p in dec2.parts) == [2, 3, 3]


def test_inflate_round_trips_decomposition():
    # unique decomposition: inflating the skeleton by the intervals returns
    # the graph, for every prime graph up to 8 vertices
    rng = random.Random(8)
    checked = 0
    for n in range(4, 9):
        codes = list(enumerate_graphs(n).classes)
        rng.shuffle(codes)
        for code in codes[:120]:
            g = from_graph6(code)
            dec = decompose(g)
            if dec.kind is not Kind.PRIME:
                continue
            rebuilt = inflate(dec.skeleton, [p for _, p in dec.intervals])
            assert is_isomorphic(rebuilt, g)
            # parts listed in increasing order of their lowest original vertex,
            # so the rebuild even matches vertex-for-vertex after sorting
            checked += 1
    assert checked > 40


def test_inflate_validates():
    with pytest.raises(ValueError):
        inflate(path_graph(3), [empty_graph(1)] * 2)
    with pytest.raises(ValueError):
        inflate(path_graph(2), [empty_graph(0), empty_graph(1)])


def test_skeleton_values(p4, c5):
    assert skeleton(p4) == p4
    assert skeleton(disjoint_union([p4, p4])) == empty_graph(2)
    assert skeleton(complete_graph(5)) == complete_graph(2)
    g = inflate(c5, [complete_graph(3)] + [empty_graph(1)] * 4)
    assert is_isomorphic(skeleton(g), c5)


def test_maximal_modules_partition_prime_graphs():
    rng = random.Random(17)
    for _ in range(300):
        g = random_graph(rng.randrange(4, 9), rng)
        dec = decompose(g)
        if dec.kind is not Kind.PRIME:
            continue
        masks = maximal_proper_module_masks(g)
        seen = 0
        for m in masks:
            assert not seen & m
            seen |= m


def test_half_graphs():
    for n in (4, 6, 8, 10):
        g = critically_indecomposable(n)
        assert g.n == n and is_indecomposable(g)
        assert is_indecomposable(g.complement())
    assert is_isomorphic(critically_indecomposable(4), path_graph(4))
    with pytest.raises(ValueError):
        critically_indecomposable(5)
    with pytest.raises(ValueError):
        critically_indecomposable(2)


def test_critically_indecomposable_predicate(p4, c5, bull):
    assert is_critically_indecomposable(p4)
    assert is_critically_indecomposable(critically_indecomposable(6))
    assert is_critically_indecomposable(critically_indecomposable(6, True))
    assert not is_critically_indecomposable(c5)
    assert not is_critically_indecomposable(bull)
    assert not is_critically_indecomposable(complete_graph(4))


def test_critically_indecomposable_census():
    # on 4..8 vertices exactly the half-graphs and complements qualify,
    # and the two 4-vertex versions coincide (P4 is self-complementary)
    got = {
        n: sorted(
            code
            for code in enumerate_graphs(n).classes
            if is_critically_indecomposable(from_graph6(code))
        )
        for n in range(4, 9)
    }
    assert len(got[4]) == 1
    assert len(got[5]) == 0 and len(got[7]) == 0
    assert len(got[6]) == 2
    assert len(got[8]) == 2
    assert got[6] == sorted(
        canonical_form(critically_indecomposable(6, c)) for c in (False, True)
    )
