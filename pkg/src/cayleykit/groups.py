"""Explicit finite groups as multiplication tables, plus structural queries.

Element 0 is always the identity.  Tables from untrusted sources get the full
O(n^3) associativity check; tables produced by closure or coset enumeration
are fully checked up to order 64 and spot-checked above that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import gcd

__all__ = [
    "GroupError",
    "Group",
    "Subgroup",
    "Fingerprint",
    "Identification",
    "subgroup_closure",
    "center",
    "derived_subgroup",
    "is_normal",
    "normal_closure",
    "quotient",
    "enumerate_subgroups",
    "has_semidirect_decomposition",
    "is_isomorphic",
    "abelian_invariants",
    "abelian_name",
    "identify",
    "direct_product",
]

FULL_CHECK_LIMIT = 64
SUBGROUP_ENUM_LIMIT = 64
SPOT_CHECK_TRIPLES = 1000


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class Fingerprint:
    """Cheap isomorphism invariants, ordered roughly by computation cost."""

    order: int
    abelian: bool
    exponent: int
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    derived_order: int


class Group:
    """Finite group given by an n x n multiplication table over 0..n-1."""

    __slots__ = ("order", "table", "inverse", "element_names", "generators", "_fp")

    def __init__(
        self,
        table,
        element_names=None,
        generators=(),
        trusted: bool = False,
    ):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise GroupError("empty multiplication table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise GroupError(f"row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise GroupError(f"entry {x!r} in row {i} out of range")
        if rows[0] != tuple(range(n)):
            raise GroupError("row 0 must equal the header (element 0 is the identity)")
        for i in range(n):
            if rows[i][0] != i:
                raise GroupError("column 0 must equal the header")
        full = set(range(n))
        for i in range(n):
            if set(rows[i]) != full:
                raise GroupError(f"row {i} is not a permutation (not a Latin square)")
        for j in range(n):
            if {rows[i][j] for i in range(n)} != full:
                raise GroupError(f"column {j} is not a permutation (not a Latin square)")
        inverse = [0] * n
        for g in range(n):
            h = rows[g].index(0)
            if rows[h][g] != 0:
                raise GroupError(f"element {g} has no two-sided inverse")
            inverse[g] = h
        self.order = n
        self.table = rows
        self.inverse = tuple(inverse)
        if element_names is not None:
            names = tuple(str(x) for x in element_names)
            if len(names) != n or len(set(names)) != n:
                raise GroupError("element names must be unique and match the order")
            self.element_names = names
        else:
            self.element_names = None
        self.generators = tuple((str(name), int(el)) for name, el in generators)
        for _, el in self.generators:
            if not 0 <= el < n:
                raise GroupError("generator element out of range")
        self._fp = None
        self._check_associativity(trusted)

    def _check_associativity(self, trusted: bool):
        n = self.order
        t = self.table
        if not trusted or n <= FULL_CHECK_LIMIT:
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise GroupError(
                                f"associativity fails at ({a},{b},{c})"
                            )
        else:
            rng = random.Random(n)
            for _ in range(SPOT_CHECK_TRIPLES):
                a, b, c = (rng.randrange(n) for _ in range(3))
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise GroupError(f"associativity fails at ({a},{b},{c})")

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        out = 0
        for _ in range(k):
            out = self.table[out][g]
        return out

    def order_of(self, g: int) -> int:
        x, m = g, 1
        while x != 0:
            x = self.table[x][g]
            m += 1
        return m

    def element_orders(self) -> list[int]:
        return [self.order_of(g) for g in range(self.order)]

    def order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for o in self.element_orders():
            hist[o] = hist.get(o, 0) + 1
        return hist

    def is_abelian(self) -> bool:
        t = self.table
        return all(
            t[a][b] == t[b][a] for a in range(self.order) for b in range(self.order)
        )

    def exponent(self) -> int:
        exp = 1
        for o in set(self.element_orders()):
            exp = _lcm(exp, o)
        return exp

    def name_of(self, g: int) -> str:
        return self.element_names[g] if self.element_names else str(g)

    def fingerprint(self) -> Fingerprint:
        if self._fp is None:
            hist = tuple(sorted(self.order_histogram().items()))
            self._fp = Fingerprint(
                order=self.order,
                abelian=self.is_abelian(),
                exponent=self.exponent(),
                order_histogram=hist,
                center_order=len(center(self).members),
                derived_order=len(derived_subgroup(self).members),
            )
        return self._fp

    def __repr__(self):
        return f"Group(order={self.order})"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class Subgroup:
    parent: Group
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members or self.members[0] != 0:
            raise GroupError("subgroup must contain the identity as least member")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def as_group(self) -> Group:
        """The subgroup as a standalone Group in member order."""
        pos = {m: i for i, m in enumerate(self.members)}
        table = [
            [pos[self.parent.table[a][b]] for b in self.members] for a in self.members
        ]
        names = (
            tuple(self.parent.name_of(m) for m in self.members)
            if self.parent.element_names
            else None
        )
        return Group(table, element_names=names, trusted=True)


def subgroup_closure(G: Group, seed) -> Subgroup:
    """Least subgroup containing the seed elements (BFS under multiplication)."""
    seed = tuple(seed)
    if not seed:
        raise GroupError("seed must be nonempty")
    members = {0}
    queue = [0]
    gens = sorted(set(seed))
    while queue:
        a = queue.pop()
        for g in gens:
            b = G.table[a][g]
            if b not in members:
                members.add(b)
                queue.append(b)
    return Subgroup(G, tuple(sorted(members)))


def center(G: Group) -> Subgroup:
    t = G.table
    members = [
        z
        for z in range(G.order)
        if all(t[z][g] == t[g][z] for g in range(G.order))
    ]
    return Subgroup(G, tuple(members))


def derived_subgroup(G: Group) -> Subgroup:
    t, inv = G.table, G.inverse
    comms = {
        t[t[inv[a]][inv[b]]][t[a][b]] for a in range(G.order) for b in range(G.order)
    }
    return subgroup_closure(G, comms | {0})


def is_normal(G: Group, H: Subgroup) -> bool:
    t, inv = G.table, G.inverse
    members = set(H.members)
    return all(
        t[t[g][h]][inv[g]] in members for g in range(G.order) for h in H.members
    )


def normal_closure(G: Group, seed) -> Subgroup:
    """Least normal subgroup containing the seed elements."""
    t, inv = G.table, G.inverse
    conjugates = {0}
    for x in seed:
        for g in range(G.order):
            conjugates.add(t[t[g][x]][inv[g]])
    return subgroup_closure(G, conjugates)


def quotient(G: Group, N: Subgroup) -> Group:
    """Quotient by a normal subgroup; cosets keep their minimal member as label."""
    if N.parent is not G:
        raise GroupError("subgroup belongs to a different group")
    if not is_normal(G, N):
        raise GroupError("subgroup is not normal")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        idx = len(reps)
        reps.append(g)
        for h in N.members:
            coset_of[G.table[g][h]] = idx
    table = [[coset_of[G.table[a][b]] for b in reps] for a in reps]
    names = tuple(G.name_of(r) for r in reps)
    gens = []
    seen = set()
    for name, el in G.generators:
        c = coset_of[el]
        if c != 0 and c not in seen:
            gens.append((name, c))
            seen.add(c)
    return Group(table, element_names=names, generators=tuple(gens), trusted=True)


def enumerate_subgroups(G: Group) -> list[Subgroup]:
    """All subgroups, as closures of cyclic subgroups under pairwise joins."""
    if G.order > SUBGROUP_ENUM_LIMIT:
        raise GroupError(
            f"subgroup enumeration capped at order {SUBGROUP_ENUM_LIMIT}"
        )
    found: set[tuple[int, ...]] = {(0,)}
    for g in range(G.order):
        found.add(subgroup_closure(G, (g,)).members)
    while True:
        new: set[tuple[int, ...]] = set()
        for a, b in combinations(sorted(found), 2):
            if set(a) <= set(b) or set(b) <= set(a):
                continue
            joined = subgroup_closure(G, set(a) | set(b)).members
            if joined not in found:
                new.add(joined)
        if not new:
            break
        found |= new
    subs = [Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m))]
    for s in subs:
        if G.order % s.order != 0:
            raise GroupError("subgroup order does not divide group order")
    return subs


def has_semidirect_decomposition(G: Group):
    """Some (N, H) with N normal, trivial intersection, |N||H| = |G|, or None.

    Both factors are required to be nontrivial proper subgroups.
    """
    subs = enumerate_subgroups(G)
    normals = [N for N in subs if 1 < N.order < G.order and is_normal(G, N)]
    for N in normals:
        nset = set(N.members)
        for H in subs:
            if H.order * N.order != G.order or H.order == 1:
                continue
            if len(nset & set(H.members)) == 1:
                return N, H
    return None


def _generating_sequence(G: Group) -> list[int]:
    gens: list[int] = []
    span = {0}
    while len(span) < G.order:
        g = min(set(range(G.order)) - span)
        gens.append(g)
        span = set(subgroup_closure(G, gens).members)
    return gens


def is_isomorphic(G: Group, H: Group):
    """An isomorphism as a tuple (image of each G element), or None.

    Backtracks over images of a greedy minimal generating sequence of G;
    candidate images are tried in ascending element order, so the result is
    deterministic.
    """
    if G.order != H.order or G.fingerprint() != H.fingerprint():
        return None
    n = G.order
    orders_g = G.element_orders()
    orders_h = H.element_orders()
    gens = _generating_sequence(G) if n > 1 else []

    def saturate(phi: dict[int, int]):
        queue = list(phi)
        while queue:
            a = queue.pop()
            for b in list(phi):
                for x, y in (
                    (G.table[a][b], H.table[phi[a]][phi[b]]),
                    (G.table[b][a], H.table[phi[b]][phi[a]]),
                ):
                    if x in phi:
                        if phi[x] != y:
                            return None
                    else:
                        phi[x] = y
                        queue.append(x)
        return phi

    def extend(phi: dict[int, int], k: int):
        if k == len(gens):
            if len(phi) != n or len(set(phi.values())) != n:
                return None
            return phi
        g = gens[k]
        if g in phi:
            return extend(phi, k + 1)
        used = set(phi.values())
        for h in range(n):
            if h in used or orders_h[h] != orders_g[g]:
                continue
            trial = saturate({**phi, g: h})
            if trial is None:
                continue
            result = extend(trial, k + 1)
            if result is not None:
                return result
        return None

    phi = extend({0: 0}, 0)
    if phi is None:
        return None
    mapping = tuple(phi[g] for g in range(n))
    for a in range(n):
        for b in range(n):
            if mapping[G.table[a][b]] != H.table[mapping[a]][mapping[b]]:
                return None
    return mapping


def abelian_invariants(G: Group) -> list[int]:
    """Invariant factors d_k | ... | d_1 listed in decreasing order."""
    if not G.is_abelian():
        raise GroupError("group is not abelian")
    factors: list[int] = []
    H = G
    while H.order > 1:
        orders = H.element_orders()
        m = max(orders)
        g = orders.index(m)
        factors.append(m)
        H = quotient(H, subgroup_closure(H, (g,)))
    return factors


def abelian_name(factors) -> str:
    if not factors:
        return "C_1"
    return "x".join(f"C_{d}" for d in factors)


@dataclass(frozen=True)
class Identification:
    name: str | None
    fingerprint: Fingerprint

    def describe(self) -> str:
        if self.name is not None:
            return self.name
        fp = self.fingerprint
        hist = ",".join(f"{o}:{c}" for o, c in fp.order_histogram)
        return (
            f"unrecognized(order={fp.order}, abelian={fp.abelian}, "
            f"exponent={fp.exponent}, orders={{{hist}}}, "
            f"center={fp.center_order}, derived={fp.derived_order})"
        )


def identify(G: Group) -> Identification:
    """Name a group: invariant factors if abelian, else catalog matching."""
    fp = G.fingerprint()
    if fp.abelian:
        return Identification(abelian_name(abelian_invariants(G)), fp)
    from . import families  # deferred: families builds groups via this module

    for name, candidate in families.nonabelian_catalog(G.order):
        if candidate.fingerprint() == fp and is_isomorphic(G, candidate) is not None:
            return Identification(name, fp)
    return Identification(None, fp)


def direct_product(G: Group, H: Group) -> Group:
    nb = H.order
    table = [
        [
            G.table[a1][a2] * nb + H.table[b1][b2]
            for a2 in range(G.order)
            for b2 in range(nb)
        ]
        for a1 in range(G.order)
        for b1 in range(nb)
    ]
    names = None
    if G.element_names or H.element_names:
        names = tuple(
            f"({G.name_of(a)},{H.name_of(b)})"
            for a in range(G.order)
            for b in range(nb)
        )
    gens: list[tuple[str, int]] = []
    used_names = set()

    def fresh(name: str) -> str:
        if name not in used_names:
            return name
        k = 2
        while f"{name}{k}" in used_names:
            k += 1
        return f"{name}{k}"

    for name, el in G.generators:
        name = fresh(name)
        used_names.add(name)
        gens.append((name, el * nb))
    for name, el in H.generators:
        name = fresh(name)
        used_names.add(name)
        gens.append((name, el))
    return Group(table, element_names=names, generators=tuple(gens), trusted=True)
