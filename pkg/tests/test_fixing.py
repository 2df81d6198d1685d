import itertools
import json
import random

import pytest

from graphfix.autengine import automorphism_group
from graphfix.fixing import (
    FixReport,
    build_fix_report,
    enumerate_graphs,
    fix_upper_bound,
    fixing_number,
    greedy_all_sizes,
    greedy_fix,
    group_fixing_numbers_observed,
    is_determining_set,
    is_fixing_set,
    verify_orbit_product,
)
from graphfix.graphs import disjoint_union, gadget_y, new_graph, standard
from graphfix.permgroup import CapExceeded, named_group, direct_product
from oracles import brute_fixing_number, brute_is_determining


def test_is_fixing_set_cycle():
    c6 = standard("cycle", 6)
    assert is_fixing_set(c6, {0, 1})
    assert not is_fixing_set(c6, {0, 3})  # the reflection through 0-3 survives
    assert not is_fixing_set(c6, {0})
    rigid = gadget_y(4).graph
    assert is_fixing_set(rigid, set())
    with pytest.raises(ValueError):
        is_fixing_set(c6, {9})


def test_is_determining_set():
    c6 = standard("cycle", 6)
    assert is_determining_set(c6, {0, 1})
    assert not is_determining_set(standard("complete", 4), {0, 1})
    with pytest.raises(CapExceeded):
        is_determining_set(standard("complete", 5), {0}, cap=50)


def test_fixing_equals_determining_exhaustive(graphs_by_n):
    for n in range(1, 6):
        for g in graphs_by_n[n]:
            aut = automorphism_group(g)
            for mask in range(1 << n):
                s = [v for v in range(n) if (mask >> v) & 1]
                assert is_fixing_set(g, s, aut=aut) == is_determining_set(g, s, aut=aut)


def test_determining_matches_brute_oracle():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(2, 6)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = new_graph(n, edges)
        s = [v for v in range(n) if rng.random() < 0.4]
        assert is_determining_set(g, s) == brute_is_determining(g, s)


def test_fixing_number_known_values():
    assert fixing_number(standard("cycle", 6))[0] == 2
    assert fixing_number(disjoint_union(standard("cycle", 3), standard("path", 2)))[0] == 3
    assert fixing_number(standard("petersen"))[0] == 3
    for n in range(2, 7):
        assert fixing_number(standard("complete", n))[0] == n - 1
        assert fixing_number(standard("empty", n))[0] == n - 1
    fix, witness = fixing_number(standard("petersen"))
    assert is_fixing_set(standard("petersen"), witness)
    assert len(witness) == fix


def test_fixing_number_matches_brute(graphs_by_n):
    for n in range(1, 6):
        for g in graphs_by_n[n]:
            assert fixing_number(g)[0] == brute_fixing_number(g)


def test_extremal_characterization(graphs_by_n):
    for n in range(1, 7):
        for g in graphs_by_n[n]:
            extremal = fixing_number(g)[0] == n - 1
            e = g.edge_count
            assert extremal == (e == 0 or e == n * (n - 1) // 2)


def test_greedy_fix():
    assert len(greedy_fix(standard("cycle", 6))) == 2
    assert greedy_fix(gadget_y(5).graph) == []
    assert len(greedy_fix(standard("complete", 5))) == 4
    assert greedy_fix(standard("cycle", 6), tie_break="all-branches") == greedy_fix(
        standard("cycle", 6)
    )
    with pytest.raises(ValueError):
        greedy_fix(standard("cycle", 6), tie_break="random")


def test_greedy_all_sizes():
    assert greedy_all_sizes(standard("cycle", 6)) == {2}
    assert greedy_all_sizes(standard("complete", 4)) == {3}
    assert greedy_all_sizes(standard("petersen")) == {3}
    assert greedy_all_sizes(gadget_y(4).graph) == {0}
    with pytest.raises(CapExceeded):
        greedy_all_sizes(standard("complete", 6), node_cap=2)


def test_greedy_collapse_audit(graphs_by_n):
    # branch collapse by stabilizer orbits must not change the size sets
    for n in range(1, 6):
        for g in graphs_by_n[n]:
            assert greedy_all_sizes(g, collapse=True) == greedy_all_sizes(
                g, collapse=False
            )


def test_greedy_never_beats_fix(graphs_by_n):
    for n in range(1, 7):
        for g in graphs_by_n[n]:
            sizes = greedy_all_sizes(g)
            assert fixing_number(g)[0] <= min(sizes)


def test_greedy_never_beats_fix_seven_vertices():
    for g in enumerate_graphs(7):
        assert fixing_number(g)[0] <= min(greedy_all_sizes(g))


def test_sequence_graph_stabilizers_are_label_stabilizers():
    # in the sequence model, the pointwise stabilizer of a vertex set is the
    # stabilizer of the union of its labels: its order is (n - |labels|)!
    import math

    from graphfix.graphs import sequence_graph, sequence_labels

    rng = random.Random(11)
    for n in (4, 5):
        for k in (1, 2):
            g = sequence_graph(n, k)
            labels = sequence_labels(n, k)
            aut = automorphism_group(g)
            for _ in range(12):
                verts = rng.sample(range(g.n), rng.randint(1, 3))
                used = set().union(*(labels[v] for v in verts))
                stab = aut.pointwise_stabilizer(verts)
                assert stab.order == math.factorial(n - len(used))


def test_verify_orbit_product():
    c6 = standard("cycle", 6)
    assert verify_orbit_product(c6, [0, 1])
    pet = standard("petersen")
    assert verify_orbit_product(pet, fixing_number(pet)[1])
    assert verify_orbit_product(gadget_y(4).graph, [])
    with pytest.raises(ValueError):
        verify_orbit_product(c6, [0])  # not a fixing set


def test_enumerate_graphs_counts(graphs_by_n):
    assert [len(graphs_by_n[n]) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    with pytest.raises(CapExceeded):
        list(enumerate_graphs(9))


def test_enumerate_matches_exhaustive_dedup():
    # oracle: all 2^6 labeled graphs on 4 vertices, deduplicated by brute
    # canonical form, give the same class count
    from oracles import brute_canonical

    classes = set()
    pairs = list(itertools.combinations(range(4), 2))
    for bits in range(64):
        edges = [pairs[i] for i in range(6) if (bits >> i) & 1]
        classes.add(brute_canonical(new_graph(4, edges)))
    assert len(classes) == 11


def test_group_fixing_numbers_observed():
    d6 = named_group("dihedral", 6)
    obs = group_fixing_numbers_observed(d6, max_n=6)
    assert {2, 3} <= obs
    z2 = named_group("cyclic", 2)
    assert group_fixing_numbers_observed(z2, max_n=4) == {1}
    trivial = named_group("cyclic", 1)
    assert group_fixing_numbers_observed(trivial, max_n=3) == {0}


def test_fix_upper_bound():
    assert fix_upper_bound(named_group("dihedral", 6)) == 3
    assert fix_upper_bound(named_group("alternating", 4)) == 3
    assert fix_upper_bound(named_group("cyclic", 8)) == 3
    assert fix_upper_bound(named_group("cyclic", 9)) == 2


def test_bounds_hold_on_enumeration(graphs_by_n):
    from graphfix.permgroup import to_table

    for n in range(1, 7):
        for g in graphs_by_n[n]:
            aut = automorphism_group(g)
            if aut.order > 120:
                continue
            assert fixing_number(g)[0] <= fix_upper_bound(to_table(aut))


def test_fix_report_roundtrip():
    rep = build_fix_report(standard("cycle", 6))
    assert rep.aut_order == 12 and rep.fix == 2 and rep.group == "D6"
    data = json.loads(rep.to_json())
    assert set(data) == {"graph6", "aut_order", "group", "fix", "witness", "greedy_sizes"}
    assert data["witness"] == sorted(data["witness"])
    assert data["greedy_sizes"] == [2]
    rigid = build_fix_report(gadget_y(4).graph)
    assert rigid.fix == 0 and rigid.group == "1"
