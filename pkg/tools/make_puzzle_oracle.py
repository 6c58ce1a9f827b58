#!/usr/bin/env python3
"""Regenerate tests/data/puzzle_oracle.json.

Computes the expected analysis results for the bundled puzzle graphs with
standalone permutation-group machinery, deliberately independent of the
library's coset-enumeration path:

  * the group H generated by the color permutations is built by plain BFS
    closure over permutation tuples;
  * the graph is a Cayley graph iff it is connected and |H| equals the node
    count (regular action);
  * the group presented by the graph's loop relations is H / N, where N is
    the normal closure of the stabilizer of the base node (a covering-space
    fact, requiring only that the graph is connected);
  * quotient groups are named by matching fingerprints (order, abelian flag,
    element-order histogram, center and derived-subgroup sizes) against
    directly-constructed models of the small groups that can appear, then
    confirmed with a brute-force generator-image isomorphism search.

Run from the repository root:  python tools/make_puzzle_oracle.py
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

# ---------------------------------------------------------------------------
# Permutations as tuples.  Products are diagrammatic: (p * q)(x) = q(p(x)),
# so that "apply p, then q" matches reading an edge path left to right.
# ---------------------------------------------------------------------------


def pmul(p, q):
    return tuple(q[p[x]] for x in range(len(p)))


def pinv(p):
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def closure(gens, cap=2_000_000):
    """BFS closure of a generator list; returns elements in discovery order."""
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident: 0}
    order = [ident]
    queue = [ident]
    while queue:
        nxt = []
        for p in queue:
            for g in gens:
                q = pmul(p, g)
                if q not in seen:
                    seen[q] = len(order)
                    order.append(q)
                    nxt.append(q)
                    if len(order) > cap:
                        raise RuntimeError("closure cap exceeded")
        queue = nxt
    return order, seen


def subgroup_closure(elems, gens):
    """Closure of gens inside an ambient element->index dict."""
    ident = tuple(range(len(next(iter(elems)))))
    seen = {ident}
    queue = [ident]
    while queue:
        p = queue.pop()
        for g in gens:
            q = pmul(p, g)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def normal_closure(group_elems, seed):
    """Normal closure of seed inside the (finite) group given as a list."""
    conj = set()
    for s in seed:
        for g in group_elems:
            conj.add(pmul(pmul(pinv(g), s), g))
    if not conj:
        return {tuple(range(len(group_elems[0])))}
    return subgroup_closure({e: i for i, e in enumerate(group_elems)}, sorted(conj))


# ---------------------------------------------------------------------------
# Abstract multiplication tables (index form, identity = 0).
# ---------------------------------------------------------------------------


def table_from_perm_group(elems):
    """Right-regular table for a permutation group given as element list."""
    index = {e: i for i, e in enumerate(elems)}
    return [[index[pmul(a, b)] for b in elems] for a in elems]


def quotient_table(elems, normal_set):
    """Multiplication table of G/N from an element list and a normal subgroup."""
    index = {e: i for i, e in enumerate(elems)}
    coset_of = {}
    reps = []
    for e in elems:
        if e in coset_of:
            continue
        rep = len(reps)
        for n in normal_set:
            coset_of[pmul(e, n)] = rep
        reps.append(e)
    # force the identity coset to index 0
    ident = tuple(range(len(elems[0])))
    k = coset_of[ident]
    if k != 0:
        reps[0], reps[k] = reps[k], reps[0]
        swap = {0: k, k: 0}
        coset_of = {e: swap.get(c, c) for e, c in coset_of.items()}
    return [[coset_of[pmul(a, b)] for b in reps] for a in reps]


def element_orders(table):
    n = len(table)
    orders = []
    for g in range(n):
        x, m = g, 1
        while x != 0:
            x = table[x][g]
            m += 1
        orders.append(m)
    return orders


def histogram(table):
    hist = {}
    for o in element_orders(table):
        hist[o] = hist.get(o, 0) + 1
    return hist


def is_abelian(table):
    n = len(table)
    return all(table[a][b] == table[b][a] for a in range(n) for b in range(n))


def center_size(table):
    n = len(table)
    return sum(1 for z in range(n) if all(table[z][g] == table[g][z] for g in range(n)))


def inverses(table):
    n = len(table)
    inv = [0] * n
    for g in range(n):
        inv[g] = table[g].index(0)
    return inv


def derived_size(table):
    n = len(table)
    inv = inverses(table)
    comms = {table[table[inv[a]][inv[b]]][table[a][b]] for a in range(n) for b in range(n)}
    sub = set(comms) | {0}
    changed = True
    while changed:
        changed = False
        for a in list(sub):
            for b in list(sub):
                c = table[a][b]
                if c not in sub:
                    sub.add(c)
                    changed = True
    return len(sub)


def fingerprint(table):
    return (
        len(table),
        is_abelian(table),
        tuple(sorted(histogram(table).items())),
        center_size(table),
        derived_size(table),
    )


def generating_sequence(table):
    n = len(table)
    gens = []
    span = {0}
    while len(span) < n:
        g = min(set(range(n)) - span)
        gens.append(g)
        span = closure_in_table(table, span | {g})
    return gens


def closure_in_table(table, seed):
    span = set(seed) | {0}
    queue = list(span)
    while queue:
        a = queue.pop()
        for b in list(span):
            for c in (table[a][b], table[b][a]):
                if c not in span:
                    span.add(c)
                    queue.append(c)
    return span


def isomorphic(table_a, table_b):
    """Brute-force isomorphism search on generator images (small orders only)."""
    if fingerprint(table_a) != fingerprint(table_b):
        return False
    n = len(table_a)
    orders_a = element_orders(table_a)
    orders_b = element_orders(table_b)
    gens = generating_sequence(table_a)

    def extend(phi, k):
        if k == len(gens):
            return check(phi)
        g = gens[k]
        for h in range(n):
            if orders_b[h] != orders_a[g]:
                continue
            phi2 = dict(phi)
            phi2[g] = h
            if grow(phi2) and extend(phi2, k + 1):
                return True
        return False

    def grow(phi):
        # saturate phi on the subgroup generated so far; fail on conflict
        queue = list(phi.keys())
        while queue:
            a = queue.pop()
            for b in list(phi.keys()):
                for x, y in ((table_a[a][b], table_b[phi[a]][phi[b]]),
                             (table_a[b][a], table_b[phi[b]][phi[a]])):
                    if x in phi:
                        if phi[x] != y:
                            return False
                    else:
                        phi[x] = y
                        queue.append(x)
        return True

    def check(phi):
        if len(phi) != n or len(set(phi.values())) != n:
            return False
        return all(phi[table_a[a][b]] == table_b[phi[a]][phi[b]]
                   for a in range(n) for b in range(n))

    return extend({0: 0}, 0)


# ---------------------------------------------------------------------------
# Directly-constructed model groups (tables built from explicit element sets).
# ---------------------------------------------------------------------------


def cyclic_model(n):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def abelian_model(factors):
    elems = [()]
    for f in factors:
        elems = [e + (x,) for e in elems for x in range(f)]
    index = {e: i for i, e in enumerate(elems)}
    add = lambda a, b: tuple((x + y) % f for x, y, f in zip(a, b, factors))
    return [[index[add(a, b)] for b in elems] for a in elems]


def affine_model(m, mults):
    """Group of maps x -> a*x + b on Z_m with a restricted to given units."""
    elems = [(a, b) for a in mults for b in range(m)]
    elems.sort(key=lambda e: (e != (1, 0),))  # identity first
    index = {e: i for i, e in enumerate(elems)}
    # (a1,b1) then (a2,b2): x -> a2*(a1*x+b1)+b2
    comp = lambda e1, e2: ((e2[0] * e1[0]) % m, (e2[0] * e1[1] + e2[1]) % m)
    return [[index[comp(a, b)] for b in elems] for a in elems]


def dihedral_model(n):
    return affine_model(n, (1, n - 1)) if n > 2 else abelian_model([2] * n)


def quaternion_model(order):
    m = order // 2
    elems = [(a, e) for e in (0, 1) for a in range(m)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        a, e = x
        b, f = y
        if e == 0:
            return ((a + b) % m, f)
        if f == 0:
            return ((a - b) % m, 1)
        return ((a - b + m // 2) % m, 0)

    return [[index[mul(a, b)] for b in elems] for a in elems]


def diquaternion_model(qorder):
    """Split extension of the quaternion model by the inverting involution."""
    m = qorder // 2
    q = [(a, e) for e in (0, 1) for a in range(m)]
    qindex = {x: i for i, x in enumerate(q)}
    qmodel = quaternion_model(qorder)
    qinv_map = inverses(qmodel)

    def qmul(x, y):
        return q[qmodel[qindex[x]][qindex[y]]]

    def qinv(x):
        return q[qinv_map[qindex[x]]]

    elems = [(x, e) for e in (0, 1) for x in q]
    index = {e: i for i, e in enumerate(elems)}

    def mul(u, v):
        x, e = u
        y, f = v
        y2 = y if e == 0 else qinv(y)
        return (qmul(x, y2), e ^ f)

    return [[index[mul(a, b)] for b in elems] for a in elems]


def gen_dihedral_model(factors):
    """Generalized dihedral group over an abelian product."""
    base = abelian_model(factors)
    n = len(base)
    inv = inverses(base)
    elems = [(x, e) for e in (0, 1) for x in range(n)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(u, v):
        x, e = u
        y, f = v
        y2 = y if e == 0 else inv[y]
        return (base[x][y2], e ^ f)

    return [[index[mul(a, b)] for b in elems] for a in elems]


def direct_product(ta, tb):
    na, nb = len(ta), len(tb)
    return [
        [ta[a1][a2] * nb + tb[b1][b2] for a2 in range(na) for b2 in range(nb)]
        for a1 in range(na)
        for b1 in range(nb)
    ]


def model_catalog(order):
    """Named model groups of a given order, abelian ones by invariant factors."""
    cat = []
    for factors in invariant_factor_lists(order):
        name = "x".join(f"C_{d}" for d in reversed(factors))
        cat.append((name, abelian_model(factors)))
    if order % 2 == 0 and order > 4:
        m = order // 2
        cat.append((f"D_{m}", dihedral_model(m)))
        if m % 2 == 0 and m >= 4:
            half = m // 2
            for name, k in ((f"SD_{m}", half - 1), (f"SA_{m}", half + 1)):
                if (k * k) % m == 1 and k not in (1, m - 1):
                    cat.append((name, affine_model(m, (1, k))))
    if order >= 8 and (order & (order - 1)) == 0:
        cat.append((f"Q_{order}", quaternion_model(order)))
    if order >= 16 and (order & (order - 1)) == 0:
        cat.append((f"DQ_{order // 2}", diquaternion_model(order // 2)))
    if order == 18:
        cat.append(("C_3xD_3", direct_product(cyclic_model(3), dihedral_model(3))))
        cat.append(("C_3:D_3", gen_dihedral_model([3, 3])))
    return cat


def invariant_factor_lists(order):
    """All lists d1 | d2 | ... | dk with product = order."""
    out = []

    def rec(remaining, prev, acc):
        if remaining == 1:
            out.append(list(acc))
            return
        d = max(prev, 2)
        while d <= remaining:
            if remaining % d == 0 and d % prev == 0:
                rec(remaining // d, d, acc + [d])
            d += 1

    rec(order, 1, [])
    return out or [[1]]


def identify(table):
    order = len(table)
    fp = fingerprint(table)
    hits = []
    for name, model in model_catalog(order):
        if fingerprint(model) == fp and isomorphic(table, model):
            hits.append(name)
    if not hits:
        raise RuntimeError(f"no model matched fingerprint {fp}")
    return hits[0]


# ---------------------------------------------------------------------------
# Puzzle graph constructions.  Each fixture is (node_count, colors) where a
# color is (name, directed, edge list).
# ---------------------------------------------------------------------------


def double_ring(m, t):
    red = [(k, (k + 1) % m) for k in range(m)]
    red += [(m + k, m + (k + t) % m) for k in range(m)]
    blue = [(k, m + k) for k in range(m)]
    return 2 * m, [("red", True, red), ("blue", False, blue)]


def twist_ring(m, t):
    return double_ring(m, t)


def flower(m, reverse_inner):
    red = [(k, (k + 1) % m) for k in range(m)]
    if reverse_inner:
        red += [(m + k, m + (k - 1) % m) for k in range(m)]
    else:
        red += [(m + k, m + (k + 1) % m) for k in range(m)]
    blue = [(k, m + (k + 1) % m) for k in range(m)]
    blue += [(m + k, (k + 1) % m) for k in range(m)]
    return 2 * m, [("red", True, red), ("blue", True, blue)]


def mirror16():
    blue = [(0, 1), (2, 3), (4, 5), (6, 7)]
    red = [(1, 2), (3, 4), (5, 6), (7, 0)]
    for k in range(0, 8):  # inner chords step by 3, alternating blue/red
        a, b = (3 * k) % 8, (3 * (k + 1)) % 8
        (blue if k % 2 == 0 else red).append((8 + a, 8 + b))
    green = [(k, 8 + k) for k in range(8)]
    return 16, [("blue", False, blue), ("red", False, red), ("green", False, green)]


def mirror32():
    red = [(2 * k, 2 * k + 1) for k in range(8)]
    blue = [(2 * k + 1, (2 * k + 2) % 16) for k in range(8)]
    for k in range(0, 16):  # inner chords step by 9, alternating blue/red
        a, b = (9 * k) % 16, (9 * (k + 1)) % 16
        (blue if k % 2 == 0 else red).append((16 + a, 16 + b))
    green = [(k, 16 + k) for k in range(16)]
    return 32, [("blue", False, blue), ("red", False, red), ("green", False, green)]


FIXTURES = {
    "petersen": double_ring(5, 2),
    "ring14": double_ring(7, 2),
    "ring18": double_ring(9, 4),
    "mirror16": mirror16(),
    "mirror32": mirror32(),
    "flower16_fwd": flower(8, reverse_inner=False),
    "flower16_rev": flower(8, reverse_inner=True),
    "twist32_k3": twist_ring(16, 3),
    "twist32_k5": twist_ring(16, 5),
}


def color_perm(nodes, directed, edges):
    img = [None] * nodes
    if directed:
        for u, v in edges:
            assert img[u] is None
            img[u] = v
    else:
        for u, v in edges:
            assert img[u] is None and img[v] is None
            img[u], img[v] = v, u
    assert all(v is not None for v in img)
    return tuple(img)


def connected(nodes, colors):
    adj = [[] for _ in range(nodes)]
    for _, _, edges in colors:
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    queue = [0]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == nodes


def analyze_fixture(nodes, colors):
    perms = [color_perm(nodes, d, e) for _, d, e in colors]
    elems, index = closure(perms)
    conn = connected(nodes, colors)
    cayley = conn and len(elems) == nodes
    stab = [p for p in elems if p[0] == 0]
    ncl = normal_closure(elems, [p for p in stab if p != tuple(range(nodes))])
    qtable = quotient_table(elems, ncl)
    record = {
        "nodes": nodes,
        "connected": conn,
        "perm_group_order": len(elems),
        "is_cayley": cayley,
        "presented_order": len(qtable),
        "presented_name": identify(qtable),
    }
    names = [c[0] for c in colors]
    if all(not d for _, d, _ in colors):
        pair_orders = {}
        for (na, pa), (nb, pb) in combinations(zip(names, perms), 2):
            p = pmul(pa, pb)
            q, m = p, 1
            ident = tuple(range(nodes))
            while q != ident:
                q = pmul(q, p)
                m += 1
            pair_orders[f"{na}*{nb}"] = m
        record["pair_permutation_orders"] = pair_orders
    return record


def main():
    out = {}
    for name in sorted(FIXTURES):
        nodes, colors = FIXTURES[name]
        out[name] = analyze_fixture(nodes, colors)
        print(f"{name:14s} {json.dumps(out[name], sort_keys=True)}")
    path = Path(__file__).resolve().parent.parent / "tests" / "data" / "puzzle_oracle.json"
    path.write_text(json.dumps(out, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
