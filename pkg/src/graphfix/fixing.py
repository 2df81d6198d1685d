"""Fixing sets and fixing numbers.

A vertex set fixes a graph when its pointwise stabilizer in the
automorphism group is trivial; the fixing number is the smallest size of
such a set.  This module has the membership tests (stabilizer-based and,
independently, by restriction-map injectivity), the exact minimum search,
the orbit-greedy procedures with full branching, exhaustive enumeration of
non-isomorphic small graphs, and the per-group observations and bounds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .autengine import automorphism_group, canonical_form, canonical_graph
from .graphs import Graph, graph6_encode
from .permgroup import (
    CapExceeded,
    GroupTable,
    PermGroup,
    group_length,
    identify_group,
    is_isomorphic_groups,
    prime_factor_count,
    to_table,
)

__all__ = [
    "is_fixing_set",
    "is_determining_set",
    "fixing_number",
    "greedy_fix",
    "greedy_all_sizes",
    "verify_orbit_product",
    "enumerate_graphs",
    "group_fixing_numbers_observed",
    "fix_upper_bound",
    "FixReport",
    "build_fix_report",
]

DEFAULT_AUT_ENUM_CAP = 10_000
DEFAULT_ENUM_N_CAP = 8
DEFAULT_GREEDY_NODE_CAP = 200_000


def _aut(g: Graph, aut: PermGroup | None) -> PermGroup:
    return aut if aut is not None else automorphism_group(g)


def _check_vertices(g: Graph, s) -> list[int]:
    out = sorted(set(s))
    for v in out:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return out


def is_fixing_set(g: Graph, s, aut: PermGroup | None = None) -> bool:
    """True iff the pointwise stabilizer of s in Aut(g) is trivial."""
    s = _check_vertices(g, s)
    return _aut(g, aut).pointwise_stabilizer(s).is_trivial()


def is_determining_set(
    g: Graph, s, aut: PermGroup | None = None, cap: int = DEFAULT_AUT_ENUM_CAP
) -> bool:
    """True iff no two distinct automorphisms agree on s.

    Checked by restriction-map injectivity over the full element list of
    Aut(g), deliberately not via stabilizers, so the equivalence with
    is_fixing_set can be tested rather than assumed.
    """
    s = _check_vertices(g, s)
    a = _aut(g, aut)
    if a.order > cap:
        raise CapExceeded(f"automorphism group order {a.order} exceeds cap {cap}")
    seen = set()
    for e in a.elements(cap=cap):
        key = tuple(e[v] for v in s)
        if key in seen:
            return False
        seen.add(key)
    return True


def fixing_number(
    g: Graph, aut: PermGroup | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exact fixing number with one witness set.

    Iterative deepening on the set size; at every level the candidates are
    one representative per orbit of the current stabilizer (images of
    fixing sets under automorphisms are fixing sets, so this loses
    nothing), pruned by the largest achievable orbit-size product.
    """
    a = _aut(g, aut)
    if a.is_trivial():
        return 0, ()

    def search(h: PermGroup, chosen: list[int], remaining: int):
        orbs = [o for o in h.orbits() if len(o) > 1]
        orbs.sort(key=lambda o: (-len(o), o[0]))
        if not orbs:
            return None
        # orbit sizes only shrink down the chain, so this bound is sound
        if len(orbs[0]) ** remaining < h.order:
            return None
        for orb in orbs:
            v = orb[0]
            h2 = h.point_stabilizer(v)
            if h2.is_trivial():
                return chosen + [v]
            if remaining > 1:
                found = search(h2, chosen + [v], remaining - 1)
                if found is not None:
                    return found
        return None

    for k in range(1, g.n + 1):
        found = search(a, [], k)
        if found is not None:
            assert a.pointwise_stabilizer(found).is_trivial()
            return len(found), tuple(found)
    raise AssertionError("unreachable: fixing the whole vertex set always works")


def greedy_fix(
    g: Graph, tie_break: str = "lowest-id", aut: PermGroup | None = None
) -> list[int]:
    """Fix a largest-orbit vertex repeatedly until the stabilizer is trivial.

    Ties between maximal orbits are resolved to the lowest vertex id; the
    "all-branches" policy explores every tied choice but still returns the
    lexicographically first branch, so both policies yield the same list
    (the full branch set of terminal sizes lives in greedy_all_sizes).
    """
    if tie_break not in ("lowest-id", "all-branches"):
        raise ValueError(f"unknown tie-break policy {tie_break!r}")
    h = _aut(g, aut)
    fixed: list[int] = []
    while not h.is_trivial():
        orbs = [o for o in h.orbits() if len(o) > 1]
        size = max(len(o) for o in orbs)
        v = min(o[0] for o in orbs if len(o) == size)
        fixed.append(v)
        h = h.point_stabilizer(v)
    return fixed


def greedy_all_sizes(
    g: Graph,
    aut: PermGroup | None = None,
    collapse: bool = True,
    node_cap: int = DEFAULT_GREEDY_NODE_CAP,
) -> set[int]:
    """Terminal sizes over every maximal-orbit choice at every step.

    A singleton result means the greedy procedure is well-defined on g.
    With collapse=True (default), choices in the same orbit of the current
    stabilizer are merged: they give conjugate residual stabilizers, hence
    identical size profiles.  collapse=False audits that claim by brute
    force.  Exceeding node_cap raises CapExceeded rather than returning a
    partial answer.
    """
    sizes: set[int] = set()
    nodes = 0

    def walk(h: PermGroup, depth: int):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise CapExceeded(f"greedy branching exceeded {node_cap} nodes")
        if h.is_trivial():
            sizes.add(depth)
            return
        orbs = [o for o in h.orbits() if len(o) > 1]
        size = max(len(o) for o in orbs)
        if collapse:
            candidates = [o[0] for o in orbs if len(o) == size]
        else:
            candidates = [v for o in orbs if len(o) == size for v in o]
        for v in sorted(candidates):
            walk(h.point_stabilizer(v), depth + 1)

    walk(_aut(g, aut), 0)
    return sizes


def verify_orbit_product(
    g: Graph, ordered_fixing_set, aut: PermGroup | None = None
) -> bool:
    """Check |Aut(g)| against the product of successive orbit sizes.

    Walking the given fixing set in order, each vertex contributes the size
    of its orbit under the stabilizer of the previous vertices; the product
    must equal the group order.
    """
    a = _aut(g, aut)
    seq = list(ordered_fixing_set)
    _check_vertices(g, seq)
    h = a
    product = 1
    for v in seq:
        product *= len(h.orbit(v))
        h = h.point_stabilizer(v)
    if not h.is_trivial():
        raise ValueError("input is not a fixing set")
    return product == a.order


# ---------------------------------------------------------------------------
# exhaustive enumeration of non-isomorphic graphs

_ENUM_CACHE: dict[int, list[Graph]] = {}


def enumerate_graphs(n: int, cap: int = DEFAULT_ENUM_N_CAP):
    """Non-isomorphic graphs on exactly n vertices, one per class.

    Built by augmenting each (n-1)-vertex representative with a new vertex
    attached to every neighbor subset, deduplicated by canonical form.
    Yields canonical representatives sorted by certificate.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n > cap:
        raise CapExceeded(f"enumeration refused above {cap} vertices")
    yield from _enumerated(n)


def _enumerated(n: int) -> list[Graph]:
    if n in _ENUM_CACHE:
        return _ENUM_CACHE[n]
    if n == 0:
        out = [Graph(0, ())]
    else:
        seen: dict[bytes, Graph] = {}
        for g in _enumerated(n - 1):
            rows = list(g.rows) + [0]
            for mask in range(1 << (n - 1)):
                cand_rows = [
                    row | (((mask >> v) & 1) << (n - 1))
                    for v, row in enumerate(rows[:-1])
                ]
                cand = Graph(n, tuple(cand_rows + [mask]))
                canon = canonical_graph(cand)
                seen.setdefault(graph6_encode(canon), canon)
        out = [seen[key] for key in sorted(seen)]
    _ENUM_CACHE[n] = out
    return out


def clear_enumeration_cache():
    _ENUM_CACHE.clear()


def group_fixing_numbers_observed(
    t: GroupTable, max_n: int, enum_cap: int = DEFAULT_ENUM_N_CAP
) -> set[int]:
    """Fixing numbers of enumerated graphs whose Aut is isomorphic to t.

    A lower approximation of the group's fixing set: only graphs on at most
    max_n vertices are inspected, so absence from the result never means
    absence from the true set.
    """
    observed: set[int] = set()
    for n in range(1, max_n + 1):
        for g in enumerate_graphs(n, cap=enum_cap):
            a = automorphism_group(g)
            if a.order != t.order:
                continue
            if is_isomorphic_groups(to_table(a), t):
                observed.add(fixing_number(g, aut=a)[0])
    return observed


def fix_upper_bound(t: GroupTable, subgroup_cap: int = 120) -> int:
    """min(subgroup-chain length, prime factor count of the order)."""
    return min(group_length(t, cap=subgroup_cap), prime_factor_count(t.order))


# ---------------------------------------------------------------------------
# reports


@dataclass
class FixReport:
    """Per-graph record of the symmetry-breaking quantities."""

    graph6: str
    aut_order: int
    group: str | None
    fix: int
    witness: tuple[int, ...]
    greedy_sizes: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def as_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "aut_order": self.aut_order,
            "group": self.group,
            "fix": self.fix,
            "witness": sorted(self.witness),
            "greedy_sizes": sorted(self.greedy_sizes),
        }


def build_fix_report(g: Graph, table_cap: int = 5040) -> FixReport:
    a = automorphism_group(g)
    fix, witness = fixing_number(g, aut=a)
    sizes = greedy_all_sizes(g, aut=a)
    name = None
    if a.order <= table_cap:
        name = identify_group(to_table(a))
    return FixReport(
        graph6=canonical_form(g).decode("ascii"),
        aut_order=a.order,
        group=name,
        fix=fix,
        witness=witness,
        greedy_sizes=tuple(sorted(sizes)),
    )
