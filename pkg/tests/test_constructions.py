import pytest

from graphfix.autengine import automorphism_group, canonical_form
from graphfix.constructions import (
    a4_fix2_actions,
    frucht_translation,
    a4_fix2_graph,
    abelian_achiever,
    catalog_entry,
    catalog_keys,
    cayley_digraph,
    coset_action,
    coset_action_kernel,
    frucht_family_zn,
    frucht_graph,
    orbital_graph_search,
    product_union,
)
from graphfix.fixing import fixing_number, is_fixing_set
from graphfix.permgroup import (
    CapExceeded,
    closure_ids,
    direct_product,
    generating_sequence,
    is_isomorphic_groups,
    named_group,
    table_elementary_divisors,
    to_table,
)
from graphfix.graphs import standard

FRUCHT_SUITE = [
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9",
    "Z2xZ2", "Z2xZ4", "D3", "D4", "D5", "D6", "A4", "S3", "S4",
]


def test_cayley_digraph_shapes():
    z5 = named_group("cyclic", 5)
    cay = cayley_digraph(z5, [1])
    assert len(cay.arcs) == 5
    # a directed 5-cycle: following the single label visits every node
    succ = {h1: h2 for h1, h2, _ in cay.arcs}
    node, seen = 0, set()
    while node not in seen:
        seen.add(node)
        node = succ[node]
    assert len(seen) == 5

    d3 = catalog_entry("D3")
    cay = cayley_digraph(d3.table, d3.gens)
    assert d3.table.order == 6 and len(cay.arcs) == 12

    s3 = named_group("symmetric", 3)
    transposition = next(x for x in range(6) if s3.element_order(x) == 2)
    with pytest.raises(ValueError):
        cayley_digraph(s3, [transposition])
    with pytest.raises(ValueError):
        cayley_digraph(s3, [0])


@pytest.mark.parametrize("key", FRUCHT_SUITE)
def test_frucht_catalog(key):
    entry = catalog_entry(key)
    g = frucht_graph(entry.table, entry.gens, scale=1)
    aut = automorphism_group(g)
    assert aut.order == entry.table.order
    assert is_isomorphic_groups(to_table(aut), entry.table)
    assert fixing_number(g, aut=aut)[0] == 1
    # group-element nodes occupy ids 0..order-1 and each alone fixes the graph
    for h in range(entry.table.order):
        assert aut.pointwise_stabilizer([h]).is_trivial()


@pytest.mark.parametrize("key", ["D4", "A4", "Z6", "S4"])
def test_frucht_translations_are_whole_group(key):
    entry = catalog_entry(key)
    g = frucht_graph(entry.table, entry.gens)
    aut = automorphism_group(g)
    translations = {
        frucht_translation(entry.table, entry.gens, x)
        for x in range(entry.table.order)
    }
    assert len(translations) == entry.table.order == aut.order
    assert all(p in aut for p in translations)
    # consequence: the group part is one regular orbit
    assert aut.orbit(0) == set(range(entry.table.order))


def test_frucht_family():
    certs = {canonical_form(frucht_family_zn(5, t)) for t in (1, 2, 3)}
    assert len(certs) == 3
    for t in (1, 2, 3):
        g = frucht_family_zn(5, t)
        aut = automorphism_group(g)
        assert aut.order == 5
        assert fixing_number(g, aut=aut)[0] == 1
    g3 = frucht_family_zn(3, 1)
    assert automorphism_group(g3).order == 3
    with pytest.raises(ValueError):
        frucht_family_zn(5, 0)
    with pytest.raises(ValueError):
        frucht_family_zn(1, 1)


def test_coset_actions():
    s3 = named_group("symmetric", 3)
    sub = sorted(closure_ids(s3, [next(x for x in range(6) if s3.element_order(x) == 2)]))
    act = coset_action(s3, sub)
    assert act.degree == 3 and act.order == 6
    assert coset_action_kernel(s3, sub) == frozenset({0})

    a4 = named_group("alternating", 4)
    invs = [x for x in range(12) if a4.element_order(x) == 2]
    v4 = sorted(closure_ids(a4, invs[:2]))
    act = coset_action(a4, v4)
    assert act.degree == 3 and act.order == 3
    assert coset_action_kernel(a4, v4) == frozenset(v4)

    reg = coset_action(s3, [0])
    assert reg.degree == 6 and reg.order == 6
    with pytest.raises(ValueError):
        coset_action(s3, [0, 1, 2, 3])  # not closed in general
    with pytest.raises(ValueError):
        coset_action(s3, [1, 2])  # missing identity


def test_coset_degree_times_subgroup_is_order():
    for key in ("S3", "A4", "D4"):
        t = catalog_entry(key).table
        seen = set()
        for x in range(t.order):
            sub = frozenset(closure_ids(t, [x]))
            if sub in seen:
                continue
            seen.add(sub)
            act = coset_action(t, sorted(sub))
            assert act.degree * len(sub) == t.order


def test_conjugate_subgroups_give_equivalent_actions():
    import itertools

    from graphfix.permgroup import mul_perm

    a4 = named_group("alternating", 4)
    sylows = []
    seen = set()
    for x in range(1, 12):
        if a4.element_order(x) == 3:
            c = frozenset(closure_ids(a4, [x]))
            if c not in seen:
                seen.add(c)
                sylows.append(sorted(c))
    acts = [coset_action(a4, s) for s in sylows[:2]]
    assert acts[0].degree == acts[1].degree == 4
    assert acts[0].order == acts[1].order == 12
    # an explicit relabeling conjugates one action onto the other
    found = False
    for sigma in itertools.permutations(range(4)):
        inv = tuple(sigma.index(i) for i in range(4))
        if all(
            mul_perm(sigma, mul_perm(g1, inv)) == g2
            for g1, g2 in zip(acts[0].generators, acts[1].generators)
        ):
            found = True
            break
    assert found


def test_orbital_search_z5_regular_finds_nothing():
    z5 = named_group("cyclic", 5)
    res = orbital_graph_search([coset_action(z5, [0], gens=[1])], z5)
    assert res == []


def test_orbital_search_s3_regular_finds_nothing():
    s3 = named_group("symmetric", 3)
    res = orbital_graph_search([coset_action(s3, [0])], s3)
    assert res == []


def test_orbital_search_errors():
    z5 = named_group("cyclic", 5)
    with pytest.raises(ValueError):
        orbital_graph_search([coset_action(z5, [0], gens=[1])], named_group("cyclic", 1))
    a4 = named_group("alternating", 4)
    invs = [x for x in range(12) if a4.element_order(x) == 2]
    v4 = sorted(closure_ids(a4, invs[:2]))
    with pytest.raises(ValueError):
        # the 3-point action alone is unfaithful
        orbital_graph_search([coset_action(a4, v4)], a4)
    with pytest.raises(CapExceeded):
        orbital_graph_search(
            [coset_action(named_group("cyclic", 12), [0], gens=[1])],
            named_group("cyclic", 12),
            max_orbital_subsets=4,
        )


def test_a4_fix2_witness():
    g = a4_fix2_graph()
    assert g.n == 22
    aut = automorphism_group(g)
    assert aut.order == 12
    assert is_isomorphic_groups(to_table(aut), named_group("alternating", 4))
    assert fixing_number(g, aut=aut)[0] == 2
    # all four actions are nontrivial-stabilizer cosets: no single vertex fixes
    assert not any(aut.pointwise_stabilizer([v]).is_trivial() for v in range(g.n))
    degrees = [a.degree for a in a4_fix2_actions()]
    assert degrees == [4, 6, 6, 6]


@pytest.mark.parametrize("key", ["Z2xZ2", "Z2xZ4", "Z2xZ2xZ3", "Z12"])
def test_abelian_achiever(key):
    t = catalog_entry(key).table
    k = len(table_elementary_divisors(t))
    for i in range(1, k + 1):
        g = abelian_achiever(t, i)  # self-verifying
        assert g.n > 0
    with pytest.raises(ValueError):
        abelian_achiever(t, k + 1)
    with pytest.raises(ValueError):
        abelian_achiever(t, 0)


def test_abelian_achiever_rejects_nonabelian():
    with pytest.raises(ValueError):
        abelian_achiever(named_group("symmetric", 3), 1)


def test_product_union_properties():
    p3, p4 = standard("path", 3), standard("path", 4)
    h = product_union(p3, p4)  # defaults to the conservative gadget size
    aut = automorphism_group(h)
    assert aut.order == 4
    v4 = direct_product(named_group("cyclic", 2), named_group("cyclic", 2))
    assert is_isomorphic_groups(to_table(aut), v4)
    assert fixing_number(h, aut=aut)[0] == 2

    c6 = standard("cycle", 6)
    h2 = product_union(c6, p3, gadget_size=5)
    aut2 = automorphism_group(h2)
    assert aut2.order == 24
    assert is_isomorphic_groups(
        to_table(aut2),
        direct_product(named_group("dihedral", 6), named_group("cyclic", 2)),
    )
    assert fixing_number(h2, aut=aut2)[0] == 3


def test_catalog():
    assert "D3:r,f" in catalog_keys()
    assert catalog_entry("D3").key == "D3:r,f"
    assert catalog_entry("Z5:1").table.order == 5
    entry = catalog_entry("A4:std")
    assert entry.table.order == 12
    assert len(closure_ids(entry.table, entry.gens)) == 12
    with pytest.raises(KeyError):
        catalog_entry("Q8")
    for key in catalog_keys():
        e = catalog_entry(key)
        assert len(closure_ids(e.table, e.gens)) == e.table.order
