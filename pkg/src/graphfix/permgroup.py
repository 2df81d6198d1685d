"""Permutation groups and abstract group tables.

Permutations are image tuples: p[v] is the image of v, and mul_perm(a, b)
composes right-to-left, (a o b)(v) = a[b[v]].  PermGroup keeps a
deterministic stabilizer chain (no randomization, base points are the
smallest moved points unless a prefix is requested), which gives order,
membership, element enumeration, and pointwise stabilizers.

GroupTable is a finite group as a multiplication table with identity at
index 0.  On top of it: named families, direct products, a backtracking
isomorphism test pruned by element-order profiles, subgroup-lattice
enumeration, the subgroup-chain length, and the symmetric-group bounds
used by the fixing-number experiments.
"""

from __future__ import annotations

import itertools
import math
import re
from functools import lru_cache

import numpy as np

__all__ = [
    "CapExceeded",
    "identity_perm",
    "mul_perm",
    "inv_perm",
    "perm_order",
    "cycles_of",
    "format_cycles",
    "parse_cycles",
    "PermGroup",
    "group_from_generators",
    "elementary_divisors",
    "table_elementary_divisors",
    "GroupTable",
    "to_table",
    "named_group",
    "direct_product",
    "generating_sequence",
    "closure_ids",
    "subgroup_table",
    "is_isomorphic_groups",
    "all_subgroups",
    "group_length",
    "identify_group",
    "invariant_factors",
    "sn_length_formula",
    "prime_factor_count",
    "sn_fix_upper_bound",
    "has_pk_cycle",
]

DEFAULT_TABLE_CAP = 5040
DEFAULT_SUBGROUP_CAP = 120


class CapExceeded(RuntimeError):
    """A computation was refused because a configured size cap was hit."""


# ---------------------------------------------------------------------------
# permutations as image tuples


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def _check_perm(p) -> tuple[int, ...]:
    t = tuple(p)
    if sorted(t) != list(range(len(t))):
        raise ValueError(f"not a permutation: {t}")
    return t


def mul_perm(a, b):
    """Composition a o b, applying b first."""
    return tuple(a[x] for x in b)


def inv_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycles_of(p) -> list[tuple[int, ...]]:
    """Non-trivial cycles, each starting at its smallest point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def perm_order(p) -> int:
    return math.lcm(1, *(len(c) for c in cycles_of(p)))


def format_cycles(p) -> str:
    """Disjoint-cycle text with 0-based points; identity is '()'."""
    cycs = cycles_of(p)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)


def parse_cycles(s: str, degree: int | None = None) -> tuple[int, ...]:
    """Inverse of format_cycles; degree defaults to max point + 1."""
    body = s.replace(",", " ").strip()
    if not re.fullmatch(r"(\(\s*(\d+(\s+\d+)*)?\s*\)\s*)*", body):
        raise ValueError(f"cannot parse permutation {s!r}")
    cycles = [
        [int(x) for x in grp.split()] for grp in re.findall(r"\(([^)]*)\)", body)
    ]
    points = [x for c in cycles for x in c]
    n = max(points, default=-1) + 1
    if degree is not None:
        if n > degree:
            raise ValueError("cycle point exceeds requested degree")
        n = degree
    img = list(range(n))
    for c in cycles:
        if len(set(c)) != len(c):
            raise ValueError(f"repeated point in cycle {c}")
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return _check_perm(img)


# ---------------------------------------------------------------------------
# permutation groups via deterministic stabilizer chains


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point: int, ident: tuple[int, ...]):
        self.point = point
        self.gens: list[tuple[int, ...]] = []
        self.transversal: dict[int, tuple[int, ...]] = {point: ident}


class PermGroup:
    """Finitely generated permutation group on {0..degree-1}.

    The stabilizer chain is built deterministically at construction; all
    queries afterwards are pure, so instances can be shared freely.
    """

    def __init__(self, degree: int, generators=(), base_hint=()):
        self.degree = int(degree)
        ident = identity_perm(self.degree)
        gens = []
        seen = set()
        for p in generators:
            t = _check_perm(p)
            if len(t) != self.degree:
                raise ValueError(
                    f"generator degree {len(t)} does not match {self.degree}"
                )
            if t != ident and t not in seen:
                seen.add(t)
                gens.append(t)
        self.generators: tuple[tuple[int, ...], ...] = tuple(gens)
        self._ident = ident
        self._levels: list[_Level] = []
        self._build(base_hint)

    # -- chain construction

    def _add_level(self, point: int):
        self._levels.append(_Level(point, self._ident))

    def _register(self, g, lo: int):
        """Insert strong generator g at levels lo..j, extending the base."""
        j = lo
        while True:
            if j == len(self._levels):
                moved = min(i for i in range(self.degree) if g[i] != i)
                self._add_level(moved)
            if g[self._levels[j].point] != self._levels[j].point:
                break
            j += 1
        for lev in range(lo, j + 1):
            self._levels[lev].gens.append(g)
        return j

    def _rebuild_transversal(self, i: int):
        lev = self._levels[i]
        lev.transversal = {lev.point: self._ident}
        frontier = [lev.point]
        while frontier:
            x = frontier.pop(0)
            ux = lev.transversal[x]
            for s in lev.gens:
                y = s[x]
                if y not in lev.transversal:
                    lev.transversal[y] = mul_perm(s, ux)
                    frontier.append(y)

    def _strip(self, g, start: int = 0):
        """Sift g through levels >= start; returns (residue, fail_level)."""
        for i in range(start, len(self._levels)):
            lev = self._levels[i]
            x = g[lev.point]
            if x == lev.point:
                continue
            if x not in lev.transversal:
                return g, i
            g = mul_perm(inv_perm(lev.transversal[x]), g)
        return g, len(self._levels)

    def _build(self, base_hint):
        for b in dict.fromkeys(base_hint):
            if not 0 <= b < self.degree:
                raise ValueError(f"base point {b} out of range")
            self._add_level(b)
        for g in self.generators:
            self._register(g, 0)
        i = len(self._levels) - 1
        while i >= 0:
            self._rebuild_transversal(i)
            lev = self._levels[i]
            restart = False
            for x in sorted(lev.transversal):
                ux = lev.transversal[x]
                for s in lev.gens:
                    y = s[x]
                    schreier = mul_perm(inv_perm(lev.transversal[y]), mul_perm(s, ux))
                    residue, j = self._strip(schreier, i + 1)
                    if residue != self._ident:
                        j2 = self._register(residue, i + 1)
                        for lev2 in range(i + 1, j2 + 1):
                            self._rebuild_transversal(lev2)
                        i = j2
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- queries

    @property
    def order(self) -> int:
        out = 1
        for lev in self._levels:
            out *= len(lev.transversal)
        return out

    def is_trivial(self) -> bool:
        return all(len(lev.transversal) == 1 for lev in self._levels)

    def __contains__(self, p) -> bool:
        t = _check_perm(p)
        if len(t) != self.degree:
            return False
        residue, _ = self._strip(t)
        return residue == self._ident

    def base(self) -> tuple[int, ...]:
        return tuple(lev.point for lev in self._levels)

    def orbit(self, v: int) -> set[int]:
        if not 0 <= v < self.degree:
            raise ValueError(f"point {v} out of range")
        orb = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = g[x]
                if y not in orb:
                    orb.add(y)
                    frontier.append(y)
        return orb

    def orbits(self) -> list[list[int]]:
        """Orbit partition of {0..degree-1}, each orbit sorted, by minimum."""
        seen = set()
        out = []
        for v in range(self.degree):
            if v in seen:
                continue
            orb = self.orbit(v)
            seen |= orb
            out.append(sorted(orb))
        return out

    def point_stabilizer(self, v: int) -> "PermGroup":
        return self.pointwise_stabilizer((v,))

    def pointwise_stabilizer(self, points) -> "PermGroup":
        prefix = [p for p in dict.fromkeys(points)]
        for p in prefix:
            if not 0 <= p < self.degree:
                raise ValueError(f"point {p} out of range")
        chain = self
        if [lev.point for lev in self._levels[: len(prefix)]] != prefix:
            chain = PermGroup(self.degree, self.generators, base_hint=prefix)
        t = len(prefix)
        gens = chain._levels[t].gens if t < len(chain._levels) else []
        return PermGroup(self.degree, gens)

    def elements(self, cap: int = 1_000_000) -> list[tuple[int, ...]]:
        """All group elements; deterministic order, refused above cap."""
        if self.order > cap:
            raise CapExceeded(f"group order {self.order} exceeds cap {cap}")
        elems = [self._ident]
        for lev in reversed(self._levels):
            reps = [lev.transversal[x] for x in sorted(lev.transversal)]
            elems = [mul_perm(u, e) for u in reps for e in elems]
        return elems

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            mul_perm(a, b) == mul_perm(b, a)
            for i, a in enumerate(gens)
            for b in gens[i + 1 :]
        )

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def group_from_generators(perms, degree: int | None = None) -> PermGroup:
    """PermGroup from a generator list; degree inferred when omitted."""
    perms = [tuple(p) for p in perms]
    if degree is None:
        if not perms:
            raise ValueError("degree is required for an empty generator list")
        degree = len(perms[0])
    for p in perms:
        if len(p) != degree:
            raise ValueError("generators of mixed degree")
    return PermGroup(degree, perms)


# ---------------------------------------------------------------------------
# abstract groups as multiplication tables


class GroupTable:
    """Finite group as an order x order multiplication table.

    Element 0 is the identity.  Group laws are verified on construction for
    orders up to 200 (associativity is cubic; larger tables are trusted to
    their constructors).
    """

    def __init__(self, mul, name: str | None = None):
        self.mul = tuple(tuple(int(x) for x in row) for row in mul)
        self.name = name
        m = len(self.mul)
        if any(len(row) != m for row in self.mul):
            raise ValueError("multiplication table must be square")
        if any(self.mul[0][j] != j for j in range(m)) or any(
            self.mul[i][0] != i for i in range(m)
        ):
            raise ValueError("element 0 must be the identity")
        for i, row in enumerate(self.mul):
            if sorted(row) != list(range(m)):
                raise ValueError(f"row {i} is not a permutation of the elements")
            if sorted(self.mul[j][i] for j in range(m)) != list(range(m)):
                raise ValueError(f"column {i} is not a permutation of the elements")
        self._np = None
        if m <= 200:
            self._validate_associativity()

    def _validate_associativity(self):
        a = self.np
        # (i*j)*k == i*(j*k) elementwise over the whole cube
        if not np.array_equal(a[a, :], np.take(a, a, axis=1)):
            raise ValueError("multiplication table is not associative")

    @property
    def np(self) -> np.ndarray:
        if self._np is None:
            self._np = np.array(self.mul, dtype=np.int32)
        return self._np

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def identity(self) -> int:
        return 0

    def inverse(self, i: int) -> int:
        return self.mul[i].index(0)

    def element_order(self, i: int) -> int:
        n = 1
        x = i
        while x != 0:
            x = self.mul[x][i]
            n += 1
        return n

    def order_profile(self) -> tuple[tuple[int, int], ...]:
        """Sorted (element order, count) pairs; an isomorphism invariant."""
        counts: dict[int, int] = {}
        for i in range(self.order):
            o = self.element_order(i)
            counts[o] = counts.get(o, 0) + 1
        return tuple(sorted(counts.items()))

    def is_abelian(self) -> bool:
        a = self.np
        return bool(np.array_equal(a, a.T))

    def __eq__(self, other):
        return isinstance(other, GroupTable) and self.mul == other.mul

    def __hash__(self):
        return hash(self.mul)

    def __repr__(self):
        label = self.name or f"order {self.order}"
        return f"GroupTable({label})"


def to_table(g: PermGroup, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Multiplication table of a PermGroup; elements sorted, identity first."""
    if g.order > cap:
        raise CapExceeded(f"group order {g.order} exceeds table cap {cap}")
    elems = sorted(g.elements(cap=cap))
    index = {e: i for i, e in enumerate(elems)}
    mul = [
        [index[mul_perm(a, b)] for b in elems] for a in elems
    ]
    return GroupTable(mul)


def _table_from_perms(perms: list[tuple[int, ...]], name: str) -> GroupTable:
    elems = sorted(perms)
    index = {e: i for i, e in enumerate(elems)}
    mul = [[index[mul_perm(a, b)] for b in elems] for a in elems]
    return GroupTable(mul, name=name)


def _mulclose(gens: list[tuple[int, ...]], ident) -> list[tuple[int, ...]]:
    els = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mul_perm(g, a)
                if c not in els:
                    els.add(c)
                    nxt.append(c)
        frontier = nxt
    return list(els)


@lru_cache(maxsize=None)
def named_group(kind: str, n: int, cap: int = DEFAULT_TABLE_CAP) -> GroupTable:
    """Standard family as a GroupTable: cyclic, dihedral, symmetric, alternating."""
    if kind == "cyclic":
        if n < 1:
            raise ValueError("cyclic group needs n >= 1")
        if n > cap:
            raise CapExceeded(f"order {n} exceeds cap {cap}")
        return GroupTable(
            [[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}"
        )
    if kind == "dihedral":
        if n < 3:
            raise ValueError("dihedral group needs n >= 3")
        if 2 * n > cap:
            raise CapExceeded(f"order {2 * n} exceeds cap {cap}")
        rot = tuple((i + 1) % n for i in range(n))
        flip = tuple((-i) % n for i in range(n))
        return _table_from_perms(
            _mulclose([rot, flip], identity_perm(n)), name=f"D{n}"
        )
    if kind == "symmetric":
        if n < 1:
            raise ValueError("symmetric group needs n >= 1")
        if math.factorial(n) > cap:
            raise CapExceeded(f"order {math.factorial(n)} exceeds cap {cap}")
        return _table_from_perms(
            [tuple(p) for p in itertools.permutations(range(n))], name=f"S{n}"
        )
    if kind == "alternating":
        if n < 3:
            raise ValueError("alternating group needs n >= 3")
        if math.factorial(n) // 2 > cap:
            raise CapExceeded(f"order {math.factorial(n) // 2} exceeds cap {cap}")
        evens = [
            tuple(p)
            for p in itertools.permutations(range(n))
            if _parity(p) == 0
        ]
        return _table_from_perms(evens, name=f"A{n}")
    raise ValueError(f"unknown group kind {kind!r}")


def _parity(p) -> int:
    seen = [False] * len(p)
    par = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        par ^= (length - 1) & 1
    return par


def direct_product(a: GroupTable, b: GroupTable) -> GroupTable:
    """Direct product; element (i, j) gets index i * |b| + j."""
    ob = b.order
    mul = [
        [
            a.mul[i1][i2] * ob + b.mul[j1][j2]
            for i2 in range(a.order)
            for j2 in range(ob)
        ]
        for i1 in range(a.order)
        for j1 in range(ob)
    ]
    name = None
    if a.name and b.name:
        name = f"{a.name}x{b.name}"
    return GroupTable(mul, name=name)


def closure_ids(t: GroupTable, seed) -> frozenset[int]:
    """Subgroup generated by the seed element ids."""
    a = t.np
    cur = np.zeros(t.order, dtype=bool)
    cur[0] = True
    for s in seed:
        cur[s] = True
    size = int(cur.sum())
    while True:
        idx = np.flatnonzero(cur)
        cur[a[np.ix_(idx, idx)].ravel()] = True
        new_size = int(cur.sum())
        if new_size == size:
            break
        size = new_size
    return frozenset(np.flatnonzero(cur).tolist())


def subgroup_table(t: GroupTable, elements) -> GroupTable:
    """Reindexed table of a subgroup given by its (closed) element ids."""
    ids = sorted(set(elements))
    if not ids or ids[0] != 0:
        raise ValueError("subgroup must contain the identity")
    pos = {e: i for i, e in enumerate(ids)}
    try:
        mul = [[pos[t.mul[x][y]] for y in ids] for x in ids]
    except KeyError:
        raise ValueError("element set is not closed under multiplication")
    return GroupTable(mul)


def generating_sequence(t: GroupTable) -> list[int]:
    """Small deterministic generating sequence, largest element order first."""
    gens: list[int] = []
    closed = frozenset({0})
    while len(closed) < t.order:
        candidates = [i for i in range(t.order) if i not in closed]
        best = max(candidates, key=lambda i: (t.element_order(i), -i))
        gens.append(best)
        closed = closure_ids(t, gens)
    return gens


def is_isomorphic_groups(a: GroupTable, b: GroupTable) -> bool:
    """Backtracking isomorphism test over generator images.

    Candidate images are constrained by element order and by the sizes of
    the subgroups generated by each prefix; a successful assignment is
    verified as a full bijective homomorphism before returning True.
    """
    if a.order != b.order:
        return False
    if a.order == 1:
        return True
    if a.order_profile() != b.order_profile():
        return False
    gens = generating_sequence(a)
    prefix_sizes = [len(closure_ids(a, gens[: i + 1])) for i in range(len(gens))]
    gen_orders = [a.element_order(g) for g in gens]
    by_order: dict[int, list[int]] = {}
    for h in range(b.order):
        by_order.setdefault(b.element_order(h), []).append(h)

    # express every element of a as a word in gens, BFS from the identity
    parent = [-1] * a.order
    via = [-1] * a.order
    frontier = [0]
    done = {0}
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = a.mul[x][g]
                if y not in done:
                    done.add(y)
                    parent[y] = x
                    via[y] = gi
                    nxt.append(y)
        frontier = nxt
    bfs_order = sorted(range(a.order), key=lambda y: _word_len(parent, y))

    anp, bnp = a.np, b.np

    def full_check(images):
        phi = np.zeros(a.order, dtype=np.int64)
        for y in bfs_order:
            if y == 0:
                continue
            phi[y] = bnp[phi[parent[y]], images[via[y]]]
        if len(set(phi.tolist())) != a.order:
            return False
        return bool(np.array_equal(bnp[np.ix_(phi, phi)], phi[anp]))

    def backtrack(idx, images):
        if idx == len(gens):
            return full_check(images)
        for h in by_order.get(gen_orders[idx], []):
            trial = images + [h]
            if len(closure_ids(b, trial)) != prefix_sizes[idx]:
                continue
            if backtrack(idx + 1, trial):
                return True
        return False

    return backtrack(0, [])


def _word_len(parent, y):
    k = 0
    while y != 0:
        y = parent[y]
        k += 1
    return k


# ---------------------------------------------------------------------------
# abelian structure


def elementary_divisors(g: PermGroup) -> tuple[int, ...]:
    """Prime-power orders in the primary decomposition, sorted ascending."""
    if not g.is_abelian():
        raise ValueError("elementary divisors require an abelian group")
    return table_elementary_divisors(to_table(g))


def table_elementary_divisors(t: GroupTable) -> tuple[int, ...]:
    """Elementary divisors of an abelian GroupTable.

    Per prime, elements of p-power order form the Sylow component; peeling
    an element of maximal order in the running quotient yields one divisor
    at a time (a maximal-order cyclic subgroup of an abelian p-group is a
    direct summand, so the greedy peel is exact).
    """
    if not t.is_abelian():
        raise ValueError("elementary divisors require an abelian group")
    orders = [t.element_order(i) for i in range(t.order)]
    divisors: list[int] = []
    for p in sorted(_prime_factors(t.order)):
        sylow = [i for i in range(t.order) if _is_power_of(orders[i], p)]
        kernel = {0}
        while len(kernel) < len(sylow):
            best_q, best_y = 0, -1
            for y in sylow:
                if y in kernel:
                    continue
                q = 1
                z = y
                while z not in kernel:
                    z = _table_power(t, z, p)
                    q *= p
                if q > best_q:
                    best_q, best_y = q, y
            divisors.append(best_q)
            new_kernel = set(kernel)
            z = best_y
            while z != 0:
                new_kernel |= {t.mul[k][z] for k in kernel}
                z = t.mul[z][best_y]
            kernel = new_kernel
    return tuple(sorted(divisors))


def _table_power(t: GroupTable, x: int, e: int) -> int:
    out = 0
    for _ in range(e):
        out = t.mul[out][x]
    return out


def _is_power_of(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


def invariant_factors(divisors) -> tuple[int, ...]:
    """Combine elementary divisors into invariant factors d1 | d2 | ..."""
    per_prime: dict[int, list[int]] = {}
    for d in divisors:
        p = min(_prime_factors(d))
        per_prime.setdefault(p, []).append(d)
    for vals in per_prime.values():
        vals.sort(reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for i in range(width):
        f = 1
        for vals in per_prime.values():
            if i < len(vals):
                f *= vals[i]
        factors.append(f)
    return tuple(sorted(factors))


# ---------------------------------------------------------------------------
# subgroup lattice and length


def all_subgroups(t: GroupTable, cap: int = DEFAULT_SUBGROUP_CAP) -> list[frozenset[int]]:
    """Every subgroup as a frozenset of element ids, sorted by (size, ids)."""
    if t.order > cap:
        raise CapExceeded(f"subgroup enumeration refused above order {cap}")
    # prime-power-order elements suffice as extension generators
    pp = [
        i
        for i in range(1, t.order)
        if len(_prime_factors(t.element_order(i))) == 1
    ]
    subs = {frozenset({0})}
    frontier = [frozenset({0})]
    for g in pp:
        cyc = closure_ids(t, [g])
        if cyc not in subs:
            subs.add(cyc)
            frontier.append(cyc)
    while frontier:
        h = frontier.pop()
        for g in pp:
            if g in h:
                continue
            k = closure_ids(t, list(h) + [g])
            if k not in subs:
                subs.add(k)
                frontier.append(k)
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def group_length(t: GroupTable, cap: int = DEFAULT_SUBGROUP_CAP) -> int:
    """Longest strictly increasing subgroup chain above the trivial group."""
    subs = all_subgroups(t, cap=cap)
    masks = [sum(1 << e for e in s) for s in subs]
    length = [0] * len(subs)
    for i, (s, m) in enumerate(zip(subs, masks)):
        if len(s) == 1:
            continue
        best = 0
        for j in range(i):
            if len(subs[j]) < len(s) and masks[j] & ~m == 0:
                best = max(best, length[j])
        length[i] = best + 1
    return length[-1]


def identify_group(t: GroupTable) -> str | None:
    """Name the group against a small catalog, or None if unrecognized.

    Abelian groups are classified exactly by their invariant factors; for
    non-abelian orders the symmetric, alternating, and dihedral candidates
    of matching order are tried with the isomorphism test.
    """
    m = t.order
    if m == 1:
        return "1"
    if t.is_abelian():
        factors = invariant_factors(table_elementary_divisors(t))
        return "x".join(f"Z{f}" for f in factors)
    candidates = []
    for k in range(3, 13):
        if math.factorial(k) == m:
            candidates.append(("symmetric", k, f"S{k}"))
        if k >= 4 and math.factorial(k) // 2 == m:
            candidates.append(("alternating", k, f"A{k}"))
    if m % 2 == 0 and m >= 6:
        candidates.append(("dihedral", m // 2, f"D{m // 2}"))
    for kind, n, label in candidates:
        if is_isomorphic_groups(t, named_group(kind, n)):
            return label
    return None


# ---------------------------------------------------------------------------
# arithmetic bounds


def _prime_factors(m: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def prime_factor_count(m: int) -> int:
    """Number of primes in the factorization of m, with multiplicity."""
    if m < 1:
        raise ValueError("argument must be a positive integer")
    return sum(_prime_factors(m).values())


def sn_length_formula(n: int) -> int:
    """ceil(3n/2) - popcount(n) - 1, the subgroup-chain length of S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return -(-3 * n // 2) - n.bit_count() - 1


def sn_fix_upper_bound(n: int) -> int:
    """Upper bound for fixing numbers of graphs with automorphism group S_n.

    Minimum over prime powers q <= n (orders realizable by a single cycle)
    of Omega(n!/q) + 1, then capped by the chain-length formula and by
    Omega(n!).
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    total = prime_factor_count(math.factorial(n))
    best = total
    for p in _prime_factors(math.factorial(n)):
        q = p
        while q <= n:
            best = min(best, total - prime_factor_count(q) + 1)
            q *= p
    return min(best, sn_length_formula(n), total)


def _is_prime(p: int) -> bool:
    return p >= 2 and _prime_factors(p) == {p: 1}


def has_pk_cycle(p: int, k: int, g) -> tuple[int, ...]:
    """A cycle of length exactly p**k from a permutation of order p**k.

    Such a cycle always exists (the order is the lcm of the cycle lengths);
    the one with the smallest starting point is returned.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("k must be a positive integer")
    g = _check_perm(g)
    target = p**k
    if perm_order(g) != target:
        raise ValueError(f"permutation order {perm_order(g)} is not {p}^{k}")
    for cyc in cycles_of(g):
        if len(cyc) == target:
            return cyc
    raise AssertionError("unreachable: order equals p^k but no p^k-cycle found")
