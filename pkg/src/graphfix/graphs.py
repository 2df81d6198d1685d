"""Finite simple graphs on dense vertex ids 0..n-1 with bit-packed adjacency.

Everything downstream builds on the constructors here: standard families,
disjoint unions, rooted rigid gadgets and their attachment, graph inflation,
the sequence-labeled inflation model, and graph6 I/O.  Graphs are immutable
values; every operation returns a new Graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

__all__ = [
    "Graph",
    "RootedGadget",
    "new_graph",
    "standard",
    "disjoint_union",
    "gadget_y",
    "gadget_a",
    "attach_gadget",
    "inflate",
    "inflate_k",
    "sequence_graph",
    "sequence_labels",
    "graph6_encode",
    "graph6_decode",
    "complement",
    "relabel",
    "induced_subgraph",
    "to_dot",
]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; rows[v] is the neighbor set of v as a bitmask.

    Invariants (checked on construction): no self-loops, symmetric adjacency,
    no bits outside 0..n-1.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise ValueError("row count must equal vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError("adjacency bit out of range")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.rows))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            for off in _bits(row):
                out.append((u, u + 1 + off))
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = [0]
        while frontier:
            v = frontier.pop()
            new = self.rows[v] & ~seen
            seen |= new
            frontier.extend(_bits(new))
        return seen == (1 << self.n) - 1


def new_graph(n: int, edges) -> Graph:
    """Build a graph from an edge collection, applying symmetric closure."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def standard(kind: str, n: int | None = None) -> Graph:
    """One of the named families: complete, cycle, path, empty, petersen.

    The Petersen graph is realized as the Kneser graph on 2-subsets of a
    5-set (adjacent iff disjoint), which fixes a canonical vertex order;
    n is ignored for it.
    """
    if kind == "petersen":
        pairs = list(itertools.combinations(range(1, 6), 2))
        edges = [
            (i, j)
            for i, j in itertools.combinations(range(10), 2)
            if not set(pairs[i]) & set(pairs[j])
        ]
        return new_graph(10, edges)
    if n is None or n < 1:
        raise ValueError(f"{kind} graph needs n >= 1")
    if kind == "complete":
        return new_graph(n, itertools.combinations(range(n), 2))
    if kind == "empty":
        return new_graph(n, [])
    if kind == "path":
        return new_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return new_graph(n, [(i, (i + 1) % n) for i in range(n)])
    raise ValueError(f"unknown graph kind {kind!r}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted up by g1.n."""
    rows = list(g1.rows) + [row << g1.n for row in g2.rows]
    return Graph(g1.n + g2.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.rows)))


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the vertex bijection perm (perm[v] = new id of v)."""
    rows = [0] * g.n
    for v, row in enumerate(g.rows):
        m = 0
        for u in _bits(row):
            m |= 1 << perm[u]
        rows[perm[v]] = m
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, keep) -> Graph:
    """Subgraph induced on the given vertices, renumbered in sorted order."""
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in g.edges() if u in index and v in index
    ]
    return new_graph(len(keep), edges)


@dataclass(frozen=True)
class RootedGadget:
    """A graph together with a designated attachment vertex.

    The gadget constructors below return rigid graphs (trivial automorphism
    group); rigidity is a property of the construction, verified in tests
    rather than enforced here.
    """

    graph: Graph
    attach: int

    def __post_init__(self):
        if not 0 <= self.attach < self.graph.n:
            raise ValueError("attach vertex out of range")


def gadget_y(k: int) -> RootedGadget:
    """Rigid tree on k+3 vertices rooted at a path end.

    Path a=p0, p1, ..., pk plus a pendant path p1-q1-q2; the three branches
    at p1 have lengths 1, 2, k-1, pairwise distinct for k >= 4, which kills
    every non-trivial automorphism.  Attach vertex is a.
    """
    if k < 4:
        raise ValueError("gadget_y needs k >= 4")
    edges = [(i, i + 1) for i in range(k)]
    edges += [(1, k + 1), (k + 1, k + 2)]
    return RootedGadget(new_graph(k + 3, edges), 0)


def gadget_a(k: int) -> RootedGadget:
    """Rigid unicyclic graph on k+4 vertices rooted at a path end.

    Triangle c1 c2 c3, a pendant vertex s on c2, and a path c1-r1-...-rk
    with attach = rk.  The corners are told apart by their branches (s on
    c2, the path on c1, nothing on c3), which needs k >= 2: on 5 vertices
    every unicyclic graph has a non-trivial automorphism.
    """
    if k < 2:
        raise ValueError("gadget_a needs k >= 2")
    edges = [(0, 1), (0, 2), (1, 2), (1, 3)]
    edges += [(0 if i == 0 else 3 + i, 4 + i) for i in range(k)]
    return RootedGadget(new_graph(k + 4, edges), k + 3)


def attach_gadget(g: Graph, targets, gadget: RootedGadget) -> Graph:
    """Attach one fresh copy of the gadget to each target vertex.

    The gadget's attach vertex is identified with the target; the result has
    g.n + len(targets) * (gadget.graph.n - 1) vertices, gadget copies laid
    out after g in target order.
    """
    targets = sorted(set(targets))
    for t in targets:
        if not 0 <= t < g.n:
            raise ValueError(f"target vertex {t} out of range")
    h = gadget.graph
    edges = list(g.edges())
    base = g.n
    for t in targets:
        # non-attach gadget vertices get fresh ids, order preserved
        fresh = {}
        nxt = base
        for w in range(h.n):
            if w == gadget.attach:
                fresh[w] = t
            else:
                fresh[w] = nxt
                nxt += 1
        edges += [(fresh[u], fresh[v]) for u, v in h.edges()]
        base = nxt
    return new_graph(base, edges)


def inflate(g: Graph) -> Graph:
    """Inflation: one vertex per incident (vertex, edge) pair of g.

    Two pairs are adjacent iff they share the vertex or share the edge, so
    the result has 2|E(g)| vertices and the degree of (v, e) equals the
    degree of v in g.  Vertex order is lexicographic by (v, e).
    """
    es = g.edges()
    pairs = sorted((v, e) for e in es for v in e)
    assert len(set(pairs)) == len(pairs)
    edges = []
    for i, (v1, e1) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            v2, e2 = pairs[j]
            if v1 == v2 or e1 == e2:
                edges.append((i, j))
    return new_graph(len(pairs), edges)


def inflate_k(g: Graph, k: int) -> Graph:
    """k iterated inflations; k = 0 returns g unchanged."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for _ in range(k):
        g = inflate(g)
    return g


def sequence_labels(n: int, k: int) -> list[tuple[int, ...]]:
    """Vertex labels of sequence_graph(n, k) in lexicographic order.

    Labels are the (k+1)-tuples over {1..n} whose first entry differs from
    all the others.
    """
    if n < 2:
        raise ValueError("alphabet size must be at least 2")
    if k < 0:
        raise ValueError("depth must be non-negative")
    return [
        seq
        for seq in itertools.product(range(1, n + 1), repeat=k + 1)
        if seq[0] not in seq[1:]
    ]


def sequence_graph(n: int, k: int) -> Graph:
    """Graph on sequence labels; see sequence_labels for the vertex set.

    Labels u, v are adjacent iff at the first index i where they differ,
    every later position j holds the swapped pair: u[j] = v[i], v[j] = u[i].
    Vertices differing only in the last position therefore form cliques.
    """
    labels = sequence_labels(n, k)

    def adjacent(u, v):
        for i in range(k + 1):
            if u[i] != v[i]:
                return all(
                    u[j] == v[i] and v[j] == u[i] for j in range(i + 1, k + 1)
                )
        return False

    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(labels)), 2)
        if adjacent(labels[i], labels[j])
    ]
    return new_graph(len(labels), edges)


# graph6: standard 6-bit packed format, size header N(n), column-major
# upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... with +63 offset.


def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise ValueError("graph too large for this graph6 encoder")


def graph6_encode(g: Graph) -> bytes:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return _g6_header(g.n) + bytes(body)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise ValueError("empty graph6 input")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("invalid graph6 byte")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 long-size form not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise ValueError(
            f"graph6 body length {len(body)} does not match {nbytes} for n={n}"
        )
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero graph6 padding bits")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


def to_dot(g: Graph, labels=None) -> str:
    """Best-effort DOT export for visualization."""
    lines = ["graph {"]
    for v in range(g.n):
        name = labels[v] if labels is not None else v
        lines.append(f'  {v} [label="{name}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
