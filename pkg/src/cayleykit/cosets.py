"""Todd-Coxeter coset enumeration over the trivial subgroup.

HLT-style relator scanning with union-find coincidence handling.  Coset 0 is
the trivial subgroup's coset; a closed table's columns are permutations that
realize the right-regular action of the presented group, so the row count is
the group order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group
from .words import Presentation, Word, label_word

__all__ = [
    "CapExceeded",
    "CosetTable",
    "todd_coxeter",
    "group_from_coset_table",
    "group_from_presentation",
]

DEFAULT_MAX_COSETS = 65536


class CapExceeded(RuntimeError):
    """Enumeration hit the coset cap.  Says nothing about infiniteness."""

    def __init__(self, message: str, cosets_defined: int):
        super().__init__(message)
        self.cosets_defined = cosets_defined


@dataclass(frozen=True)
class CosetTable:
    """Closed coset table: one forward and one inverse column per generator."""

    presentation: Presentation
    forward: tuple[tuple[int, ...], ...]  # forward[g][k] = k . g
    backward: tuple[tuple[int, ...], ...]  # backward[g][k] = k . g^-1
    num_cosets: int

    def trace(self, start: int, word: Word) -> int:
        k = start
        for gen, sign in word:
            k = self.forward[gen][k] if sign > 0 else self.backward[gen][k]
        return k


class _Enumerator:
    def __init__(self, presentation: Presentation, max_cosets: int):
        self.pres = presentation
        self.max_cosets = max_cosets
        ngens = presentation.rank
        self.ncols = 2 * ngens
        # column 2g acts by generator g, column 2g+1 by its inverse
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]  # union-find over cosets
        self.queue: list[tuple[int, int]] = []  # pending coincidences
        self.relator_cols = [
            [2 * gen if sign > 0 else 2 * gen + 1 for gen, sign in rel]
            for rel in presentation.relators
        ]

    @staticmethod
    def _inv(col: int) -> int:
        return col ^ 1

    def rep(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def define(self, alpha: int, col: int) -> int:
        if len(self.table) >= self.max_cosets:
            live = sum(1 for i, p in enumerate(self.parent) if p == i)
            raise CapExceeded(
                f"coset cap {self.max_cosets} exceeded ({live} live cosets)", live
            )
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(beta)
        self.table[alpha][col] = beta
        self.table[beta][self._inv(col)] = alpha
        return beta

    def merge(self, a: int, b: int):
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        self.queue.append((a, b))

    def process_coincidences(self):
        while self.queue:
            live, dead = self.queue.pop()
            live = self.rep(live)
            for col in range(self.ncols):
                delta = self.table[dead][col]
                if delta is None:
                    continue
                # detach the back-reference before re-attaching
                if self.table[delta][self._inv(col)] == dead:
                    self.table[delta][self._inv(col)] = None
                delta = self.rep(delta)
                mu = self.rep(live)
                existing = self.table[mu][col]
                if existing is not None:
                    self.merge(existing, delta)
                    # mu.col = existing ~ delta, so delta's class maps back to mu;
                    # restore the detached back-reference on the survivor
                    survivor = self.rep(delta)
                    if self.table[survivor][self._inv(col)] is None:
                        self.table[survivor][self._inv(col)] = mu
                else:
                    self.table[mu][col] = delta
                    back = self.table[delta][self._inv(col)]
                    if back is None:
                        self.table[delta][self._inv(col)] = mu
                    else:
                        self.merge(back, mu)

    def scan_and_fill(self, alpha: int, cols: list[int]):
        # table entries can reference merged-away cosets, so resolve on read
        front, back = alpha, alpha
        i, j = 0, len(cols) - 1
        while True:
            # scan forward as far as the table is defined
            while i <= j:
                nxt = self.table[front][cols[i]]
                if nxt is None:
                    break
                front = self.rep(nxt)
                i += 1
            if i > j:
                if front != back:
                    self.merge(front, back)
                return
            # scan backward through inverse entries
            while j >= i:
                prv = self.table[back][self._inv(cols[j])]
                if prv is None:
                    break
                back = self.rep(prv)
                j -= 1
            if j < i:
                self.merge(front, back)
                return
            if i == j:
                # one gap: a deduction closes the scan
                self.table[front][cols[i]] = back
                other = self.table[back][self._inv(cols[i])]
                if other is None:
                    self.table[back][self._inv(cols[i])] = front
                elif other != front:
                    self.merge(other, front)
                return
            front = self.define(front, cols[i])
            i += 1

    def run(self) -> CosetTable:
        alpha = 0
        while alpha < len(self.table):
            if self.rep(alpha) != alpha:
                alpha += 1
                continue
            for cols in self.relator_cols:
                self.scan_and_fill(alpha, cols)
                self.process_coincidences()
                if self.rep(alpha) != alpha:
                    break
            if self.rep(alpha) == alpha:
                for col in range(self.ncols):
                    if self.table[alpha][col] is None:
                        self.define(alpha, col)
                        self.process_coincidences()
            alpha += 1
        return self._compact()

    def _compact(self) -> CosetTable:
        live = [k for k in range(len(self.table)) if self.rep(k) == k]
        new_index = {old: new for new, old in enumerate(live)}
        ngens = self.pres.rank
        forward = []
        backward = []
        for g in range(ngens):
            fwd, bwd = [], []
            for old in live:
                f = self.table[old][2 * g]
                b = self.table[old][2 * g + 1]
                assert f is not None and b is not None
                fwd.append(new_index[self.rep(f)])
                bwd.append(new_index[self.rep(b)])
            forward.append(tuple(fwd))
            backward.append(tuple(bwd))
        return CosetTable(self.pres, tuple(forward), tuple(backward), len(live))


def todd_coxeter(
    presentation: Presentation, max_cosets: int = DEFAULT_MAX_COSETS
) -> CosetTable:
    """Enumerate cosets of the trivial subgroup; raise CapExceeded on overflow."""
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    table = _Enumerator(presentation, max_cosets).run()
    for rel in presentation.relators:  # closed tables trace every relator home
        for k in range(table.num_cosets):
            assert table.trace(k, rel) == k
    return table


def group_from_coset_table(table: CosetTable) -> Group:
    """Turn a closed coset table into an explicit Group.

    Elements are relabeled by BFS from coset 0 over the generator columns in
    declared order, so element order, names, and tables are reproducible.
    """
    n = table.num_cosets
    ngens = table.presentation.rank
    order_of = [-1] * n  # old coset -> new element index
    bfs: list[int] = [0]
    order_of[0] = 0
    words: list[Word] = [()]
    parents: list[tuple[int, int] | None] = [None]  # (parent new index, generator)
    head = 0
    while head < len(bfs):
        old = bfs[head]
        for g in range(ngens):
            nxt = table.forward[g][old]
            if order_of[nxt] < 0:
                order_of[nxt] = len(bfs)
                bfs.append(nxt)
                words.append(words[head] + ((g, 1),))
                parents.append((head, g))
        head += 1
    assert len(bfs) == n

    succ = [
        [order_of[table.forward[g][old]] for old in bfs] for g in range(ngens)
    ]
    columns: list[list[int]] = [list(range(n))] + [[] for _ in range(n - 1)]
    for j in range(1, n):
        parent, g = parents[j]  # type: ignore[misc]
        col = succ[g]
        columns[j] = [col[x] for x in columns[parent]]
    mul = tuple(
        tuple(columns[j][i] for j in range(n)) for i in range(n)
    )
    names = tuple(label_word(w, table.presentation.generators) for w in words)
    generators = tuple(
        (name, succ[g][0]) for g, name in enumerate(table.presentation.generators)
    )
    return Group(mul, element_names=names, generators=generators, trusted=True)


def group_from_presentation(
    presentation: Presentation, max_cosets: int = DEFAULT_MAX_COSETS
) -> Group:
    """Convenience: enumerate and convert in one step."""
    return group_from_coset_table(todd_coxeter(presentation, max_cosets))
