"""Automorphism groups, canonical forms, and isomorphism of graphs.

Individualization-refinement search.  An ordered partition of the vertices
is refined to an equitable fixpoint using cell-relative neighbor counts;
while any cell is non-singleton, the first smallest one is chosen and each
of its vertices is individualized in turn.  Discrete partitions (leaves)
give candidate labelings: colliding leaf certificates yield automorphisms,
which in turn prune sibling branches down to orbit representatives, and the
leaf with the smallest relabeled adjacency key is the canonical labeling.

Refinement uses only cell-relative degree counts (no distance or triangle
invariants); that is enough at the graph sizes this package targets.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .graphs import Graph, graph6_encode
from .permgroup import PermGroup

__all__ = [
    "OrderedPartition",
    "equitable_refinement",
    "automorphism_group",
    "canonical_form",
    "canonical_graph",
    "are_isomorphic",
]


@dataclass
class OrderedPartition:
    """Ordered list of disjoint vertex cells covering {0..n-1}."""

    cells: list[list[int]] = field(default_factory=list)

    def check(self, n: int):
        flat = [v for cell in self.cells for v in cell]
        if sorted(flat) != list(range(n)):
            raise ValueError("cells must partition the vertex set")

    def is_discrete(self) -> bool:
        return all(len(cell) == 1 for cell in self.cells)


class _Search:
    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = [g.neighbors(v) for v in range(g.n)]
        self.gens: list[tuple[int, ...]] = []
        self.ref: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        self.best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        self._gen_set: set[tuple[int, ...]] = set()

    # -- refinement

    def refine(self, cells: list[list[int]], queue: deque):
        """Refine cells in place to an equitable fixpoint.

        queue holds splitter vertex lists; freshly split fragments (all but
        one largest per split) are appended.  Stale splitters are harmless:
        they are unions of current cells, so they never over-split.
        """
        cell_of = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        while queue:
            splitter = queue.popleft()
            cnt: dict[int, int] = {}
            for w in splitter:
                for u in self.adj[w]:
                    cnt[u] = cnt.get(u, 0) + 1
            touched = sorted({cell_of[u] for u in cnt}, reverse=True)
            for ci in touched:
                cell = cells[ci]
                if len(cell) == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(cnt.get(v, 0), []).append(v)
                if len(groups) == 1:
                    continue
                parts = [groups[key] for key in sorted(groups)]
                cells[ci : ci + 1] = parts
                for off, part in enumerate(parts):
                    for v in part:
                        cell_of[v] = ci + off
                for cj in range(ci + len(parts), len(cells)):
                    for v in cells[cj]:
                        cell_of[v] = cj
                big = max(range(len(parts)), key=lambda i: len(parts[i]))
                for i, part in enumerate(parts):
                    if i != big:
                        queue.append(list(part))

    # -- leaves

    def leaf_key(self, order: tuple[int, ...]) -> tuple[int, ...]:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = 0
            for u in self.adj[v]:
                m |= 1 << pos[u]
            rows.append(m)
        return tuple(rows)

    def _record_automorphism(self, base_order, order):
        sigma = [0] * self.n
        for u, v in zip(base_order, order):
            sigma[u] = v
        sigma = tuple(sigma)
        if sigma in self._gen_set or sigma == tuple(range(self.n)):
            return
        # every emitted generator must preserve adjacency
        for v in range(self.n):
            image = {sigma[u] for u in self.adj[v]}
            if image != set(self.adj[sigma[v]]):
                raise AssertionError("leaf collision produced a non-automorphism")
        self._gen_set.add(sigma)
        self.gens.append(sigma)

    def _handle_leaf(self, cells):
        order = tuple(cell[0] for cell in cells)
        key = self.leaf_key(order)
        if self.ref is None:
            self.ref = (order, key)
            self.best = (order, key)
            return
        if key == self.ref[1]:
            self._record_automorphism(self.ref[0], order)
        if key < self.best[1]:
            self.best = (order, key)
        elif key == self.best[1]:
            self._record_automorphism(self.best[0], order)

    # -- tree

    def _target_cell(self, cells) -> int | None:
        best = None
        for ci, cell in enumerate(cells):
            if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
                best = ci
        return best

    def _orbit_ids(self, prefix) -> list[int]:
        """Orbit labels under the found generators that fix prefix pointwise."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return [find(v) for v in range(self.n)]

    def _node(self, cells, prefix):
        ti = self._target_cell(cells)
        if ti is None:
            self._handle_leaf(cells)
            return
        target = sorted(cells[ti])
        explored: list[int] = []
        gen_count = -1
        orbit = []
        for v in target:
            if len(self.gens) != gen_count:
                gen_count = len(self.gens)
                orbit = self._orbit_ids(prefix)
            if any(orbit[v] == orbit[u] for u in explored):
                continue
            explored.append(v)
            child = [list(c) for c in cells]
            rest = [u for u in child[ti] if u != v]
            child[ti : ti + 1] = [[v], rest]
            self.refine(child, deque([[v]]))
            self._node(child, prefix + (v,))

    def run(self):
        if self.n == 0:
            self.best = ((), ())
            return
        cells = [list(range(self.n))]
        self.refine(cells, deque([list(range(self.n))]))
        self._node(cells, ())


@lru_cache(maxsize=4096)
def _searched(g: Graph) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    limit = 3 * g.n + 200
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    s = _Search(g)
    s.run()
    return tuple(s.gens), s.best[1]


def equitable_refinement(g: Graph, partition: OrderedPartition) -> OrderedPartition:
    """Coarsest equitable refinement of the given ordered partition."""
    partition.check(g.n)
    s = _Search(g)
    cells = [sorted(cell) for cell in partition.cells]
    s.refine(cells, deque([list(cell) for cell in cells]))
    return OrderedPartition(cells)


def automorphism_group(g: Graph) -> PermGroup:
    """The full automorphism group of g as a PermGroup."""
    gens, _ = _searched(g)
    return PermGroup(g.n, gens)


def canonical_graph(g: Graph) -> Graph:
    """Canonically relabeled copy: equal across isomorphic inputs."""
    _, key = _searched(g)
    return Graph(g.n, key)


def canonical_form(g: Graph) -> bytes:
    """Label-invariant certificate: graph6 of the canonical relabeling."""
    return graph6_encode(canonical_graph(g))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_form(g1) == canonical_form(g2)
