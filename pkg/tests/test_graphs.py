import itertools
import random

import pytest

from graphfix.autengine import are_isomorphic, automorphism_group
from graphfix.graphs import (
    Graph,
    attach_gadget,
    complement,
    disjoint_union,
    gadget_a,
    gadget_y,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    inflate,
    inflate_k,
    new_graph,
    relabel,
    sequence_graph,
    sequence_labels,
    standard,
    to_dot,
)
from oracles import brute_automorphisms


def test_new_graph_basic():
    k3 = new_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.edge_count == 3
    assert are_isomorphic(k3, standard("cycle", 3))
    assert new_graph(0, []).n == 0
    c4 = new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.edge_count == 4


def test_new_graph_errors():
    with pytest.raises(ValueError):
        new_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        new_graph(3, [(1, 1)])


def test_graph_invariants_checked():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(2, (1, 2))  # loop at vertex 1
    with pytest.raises(ValueError):
        Graph(1, (2,))  # bit out of range


def test_standard_families():
    k5 = standard("complete", 5)
    assert k5.edge_count == 10
    assert all(k5.has_edge(u, v) for u, v in itertools.combinations(range(5), 2))
    pet = standard("petersen")
    assert pet.n == 10 and pet.edge_count == 15
    assert set(pet.degree_sequence()) == {3}
    c6 = standard("cycle", 6)
    assert set(c6.degree_sequence()) == {2}
    assert standard("path", 1).n == 1
    with pytest.raises(ValueError):
        standard("cycle", 2)
    with pytest.raises(ValueError):
        standard("complete", 0)
    with pytest.raises(ValueError):
        standard("hypercube", 3)


def test_disjoint_union():
    u = disjoint_union(standard("cycle", 3), standard("path", 2))
    assert u.n == 5 and u.edge_count == 4
    g = standard("path", 4)
    assert disjoint_union(g, Graph(0, ())) == g
    two_k2 = disjoint_union(standard("complete", 2), standard("complete", 2))
    assert two_k2.n == 4 and two_k2.edge_count == 2


def test_gadget_y_shape():
    g = gadget_y(4)
    assert g.graph.n == 7 and g.graph.edge_count == 6
    assert g.graph.is_connected()
    assert len(brute_automorphisms(g.graph)) == 1
    g5 = gadget_y(5)
    assert g5.graph.edge_count == g5.graph.n - 1 and g5.graph.is_connected()
    with pytest.raises(ValueError):
        gadget_y(3)


def test_gadget_a_shape():
    g = gadget_a(2)
    assert g.graph.n == 6 and g.graph.edge_count == 6
    assert len(brute_automorphisms(g.graph)) == 1
    g10 = gadget_a(10)
    assert g10.graph.n == 14
    assert automorphism_group(g10.graph).order == 1


def test_no_rigid_unicyclic_graph_on_five_vertices():
    # exhaustively: every connected 5-vertex graph with 5 edges has symmetry,
    # so a rooted rigid unicyclic gadget needs at least 6 vertices
    found_rigid = False
    for edges in itertools.combinations(itertools.combinations(range(5), 2), 5):
        g = new_graph(5, edges)
        if g.is_connected() and len(brute_automorphisms(g)) == 1:
            found_rigid = True
    assert not found_rigid
    with pytest.raises(ValueError):
        gadget_a(1)


@pytest.mark.parametrize("k", range(4, 13))
def test_gadgets_rigid_across_range(k):
    assert automorphism_group(gadget_y(k).graph).order == 1
    assert automorphism_group(gadget_a(k).graph).order == 1
    # tree vs unicyclic
    y, a = gadget_y(k).graph, gadget_a(k).graph
    assert y.edge_count == y.n - 1 and y.is_connected()
    assert a.edge_count == a.n and a.is_connected()


def test_attach_gadget_counts():
    k2 = standard("complete", 2)
    g = attach_gadget(k2, [0, 1], gadget_y(4))
    assert g.n == 2 + 2 * 6
    c3 = standard("cycle", 3)
    g = attach_gadget(c3, [0], gadget_a(2))
    assert g.n == 3 + 5
    assert g.edge_count - g.n + 1 == 2  # cyclomatic number two
    with pytest.raises(ValueError):
        attach_gadget(c3, [5], gadget_y(4))


def test_attach_gadget_preserves_symmetry():
    c3 = standard("cycle", 3)
    g = attach_gadget(c3, [0, 1, 2], gadget_y(4))
    assert g.n == 21
    assert automorphism_group(g).order == 6


def test_inflate_counts_and_degrees():
    k4 = standard("complete", 4)
    inf = inflate(k4)
    assert inf.n == 12 == 2 * k4.edge_count
    assert set(inf.degree_sequence()) == {3}
    # degree of (v, e) equals the degree of v in the base graph
    g = standard("path", 4)
    infp = inflate(g)
    assert infp.n == 2 * g.edge_count
    pairs = sorted((v, e) for e in g.edges() for v in e)
    assert all(infp.degree(i) == g.degree(v) for i, (v, _) in enumerate(pairs))


def test_inflate_small_cases():
    assert inflate(standard("complete", 2)) == standard("complete", 2)
    assert are_isomorphic(inflate(standard("cycle", 5)), standard("cycle", 10))
    assert inflate(Graph(0, ())).n == 0


def test_inflate_k():
    k4 = standard("complete", 4)
    assert inflate_k(k4, 2).n == 36
    g = standard("path", 5)
    assert inflate_k(g, 0) == g
    assert are_isomorphic(inflate_k(standard("cycle", 3), 2), standard("cycle", 12))
    with pytest.raises(ValueError):
        inflate_k(k4, -1)


@pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2)])
def test_cycle_inflation_is_longer_cycle(n, k):
    assert are_isomorphic(
        inflate_k(standard("cycle", n), k), standard("cycle", 2**k * n)
    )


def test_sequence_graph_counts():
    assert sequence_graph(4, 1).n == 12
    assert sequence_graph(4, 2).n == 36
    assert len(sequence_labels(5, 2)) == sequence_graph(5, 2).n
    for n in (2, 3, 4):
        assert are_isomorphic(sequence_graph(n, 0), standard("complete", n))
    with pytest.raises(ValueError):
        sequence_graph(1, 2)


@pytest.mark.parametrize("n,k", [(4, 0), (4, 1), (4, 2), (5, 0), (5, 1), (5, 2)])
def test_sequence_graph_matches_inflation(n, k):
    assert are_isomorphic(sequence_graph(n, k), inflate_k(standard("complete", n), k))


def test_graph6_known_encoding():
    assert graph6_encode(standard("complete", 4)) == b"C~"
    assert graph6_decode(b"C~") == standard("complete", 4)
    assert graph6_encode(Graph(0, ())) == b"?"


def test_graph6_roundtrip_exhaustive_small():
    for n in range(0, 6):
        for bits in range(1 << (n * (n - 1) // 2)):
            pairs = list(itertools.combinations(range(n), 2))
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            g = new_graph(n, edges)
            assert graph6_decode(graph6_encode(g)) == g


def test_graph6_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(0, 8)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = new_graph(n, edges)
        assert graph6_decode(graph6_encode(g)) == g
    assert graph6_decode(graph6_encode(standard("petersen"))) == standard("petersen")


def test_graph6_errors():
    with pytest.raises(ValueError):
        graph6_decode(b"")
    with pytest.raises(ValueError):
        graph6_decode(b"C~~")  # trailing garbage
    with pytest.raises(ValueError):
        graph6_decode(b"C")  # truncated body
    with pytest.raises(ValueError):
        graph6_decode(bytes([10, 20]))


def test_relabel_complement_induced():
    g = standard("path", 4)
    assert relabel(g, [3, 2, 1, 0]).edge_count == g.edge_count
    assert complement(complement(g)) == g
    sub = induced_subgraph(standard("petersen"), range(1, 10))
    assert sub.n == 9
    dot = to_dot(standard("complete", 3))
    assert "0 -- 1" in dot and dot.startswith("graph {")
