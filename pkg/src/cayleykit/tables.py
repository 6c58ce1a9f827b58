"""Cayley-table and Latin-square ingestion, validation, and rendering.

Text format: a header line of whitespace-separated symbols, then n body rows
of n symbols; cell (i, j) is row-symbol-i times column-symbol-j.  Lines
starting with '#' are comments.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Group, Identification, Subgroup, identify, quotient

__all__ = [
    "TableError",
    "FiniteTable",
    "LatinViolation",
    "Rejection",
    "TableGroupResult",
    "parse_table",
    "render_table",
    "table_from_group",
    "latin_check",
    "identity_check",
    "associativity_witness",
    "is_associative_light",
    "group_from_table",
    "render_quotient_table",
]

LAGRANGE_PRECHECK = "odd order with all elements self-inverse"


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteTable:
    symbols: tuple[str, ...]
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.symbols)
        if n == 0:
            raise TableError("table needs at least one symbol")
        if len(set(self.symbols)) != n:
            raise TableError("duplicate header symbol")
        if len(self.cells) != n:
            raise TableError(f"expected {n} rows, got {len(self.cells)}")
        for i, row in enumerate(self.cells):
            if len(row) != n:
                raise TableError(f"row {i} has {len(row)} cells, expected {n}")
            for x in row:
                if not 0 <= x < n:
                    raise TableError(f"cell value {x} out of range in row {i}")

    @property
    def order(self) -> int:
        return len(self.symbols)

    def cell_symbol(self, i: int, j: int) -> str:
        return self.symbols[self.cells[i][j]]


def parse_table(text: str) -> FiniteTable:
    rows = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append(stripped.split())
    if not rows:
        raise TableError("no table content found")
    symbols = tuple(rows[0])
    if len(set(symbols)) != len(symbols):
        raise TableError("duplicate header symbol")
    index = {s: i for i, s in enumerate(symbols)}
    n = len(symbols)
    if len(rows) != n + 1:
        raise TableError(f"expected {n} body rows, got {len(rows) - 1}")
    cells = []
    for i, row in enumerate(rows[1:]):
        if len(row) != n:
            raise TableError(f"row {i} is ragged: {len(row)} cells, expected {n}")
        try:
            cells.append(tuple(index[s] for s in row))
        except KeyError as missing:
            raise TableError(f"row {i} contains unknown symbol {missing.args[0]!r}") from None
    return FiniteTable(symbols, tuple(cells))


def render_table(G: Group) -> str:
    names = [G.name_of(i) for i in range(G.order)]
    width = max(len(s) for s in names)
    lines = [" ".join(s.ljust(width) for s in names).rstrip()]
    for i in range(G.order):
        lines.append(
            " ".join(names[x].ljust(width) for x in G.table[i]).rstrip()
        )
    return "\n".join(lines) + "\n"


def table_from_group(G: Group) -> FiniteTable:
    names = tuple(G.name_of(i) for i in range(G.order))
    return FiniteTable(names, G.table)


@dataclass(frozen=True)
class LatinViolation:
    kind: str  # "row" or "column"
    index: int
    symbol: str


def latin_check(t: FiniteTable) -> LatinViolation | None:
    """First repeated symbol, scanning rows top-down then columns left-right."""
    n = t.order
    for i in range(n):
        seen = set()
        for j in range(n):
            x = t.cells[i][j]
            if x in seen:
                return LatinViolation("row", i, t.symbols[x])
            seen.add(x)
    for j in range(n):
        seen = set()
        for i in range(n):
            x = t.cells[i][j]
            if x in seen:
                return LatinViolation("column", j, t.symbols[x])
            seen.add(x)
    return None


def identity_check(t: FiniteTable) -> str | None:
    """The symbol whose row and column both reproduce the header, if any."""
    n = t.order
    header = tuple(range(n))
    for e in range(n):
        if t.cells[e] == header and all(t.cells[i][e] == i for i in range(n)):
            return t.symbols[e]
    return None


def associativity_witness(t: FiniteTable) -> tuple[int, int, int] | None:
    """Lexicographically first (x, y, z) with (x*y)*z != x*(y*z)."""
    n = t.order
    c = t.cells
    for x in range(n):
        cx = c[x]
        for y in range(n):
            cxy = c[cx[y]]
            cy = c[y]
            for z in range(n):
                if cxy[z] != cx[cy[z]]:
                    return (x, y, z)
    return None


def is_associative_light(t: FiniteTable) -> bool:
    """Light's test: check triples through a generating set only."""
    n = t.order
    c = t.cells

    def close(seed: set[int]) -> set[int]:
        span = set(seed)
        queue = list(span)
        while queue:
            a = queue.pop()
            for b in list(span):
                for prod in (c[a][b], c[b][a]):
                    if prod not in span:
                        span.add(prod)
                        queue.append(prod)
        return span

    gens: list[int] = []
    span: set[int] = set()
    while len(span) < n:
        g = min(set(range(n)) - span)
        gens.append(g)
        span = close(set(gens))
    for g in gens:
        cg = c[g]
        for x in range(n):
            cxg = c[c[x][g]]
            cx = c[x]
            for y in range(n):
                if cxg[y] != cx[cg[y]]:
                    return False
    return True


@dataclass(frozen=True)
class Rejection:
    reason: str
    latin_violation: LatinViolation | None = None
    witness: tuple[str, str, str] | None = None
    precheck: str | None = None

    def describe(self) -> str:
        parts = [self.reason]
        if self.latin_violation:
            v = self.latin_violation
            parts.append(f"{v.kind} {v.index} repeats {v.symbol!r}")
        if self.precheck:
            parts.append(self.precheck)
        if self.witness:
            x, y, z = self.witness
            parts.append(f"({x}*{y})*{z} != {x}*({y}*{z})")
        return "; ".join(parts)


@dataclass(frozen=True)
class TableGroupResult:
    group: Group | None
    identification: Identification | None
    rejection: Rejection | None

    @property
    def ok(self) -> bool:
        return self.group is not None


def group_from_table(t: FiniteTable) -> TableGroupResult:
    """Accept the table as a group iff all axioms verify; reject with the
    failed axiom and a concrete witness otherwise."""
    violation = latin_check(t)
    if violation is not None:
        return TableGroupResult(None, None, Rejection("not a Latin square", violation))
    identity = identity_check(t)
    if identity is None:
        return TableGroupResult(None, None, Rejection("no two-sided identity"))
    e = t.symbols.index(identity)
    n = t.order
    precheck = None
    if n > 1 and n % 2 == 1 and all(t.cells[i][i] == e for i in range(n)):
        # Lagrange rules this out before any scanning; the scan still runs
        # so the rejection carries a concrete witness.
        precheck = LAGRANGE_PRECHECK
    witness = associativity_witness(t)
    if witness is not None:
        x, y, z = witness
        assert t.cells[t.cells[x][y]][z] != t.cells[x][t.cells[y][z]]
        return TableGroupResult(
            None,
            None,
            Rejection(
                "associativity fails",
                witness=(t.symbols[x], t.symbols[y], t.symbols[z]),
                precheck=precheck,
            ),
        )
    assert precheck is None, "precheck fired but the full scan found no witness"
    for x in range(n):
        row = t.cells[x]
        y = row.index(e)
        if t.cells[y][x] != e:
            return TableGroupResult(
                None, None, Rejection(f"element {t.symbols[x]!r} has no two-sided inverse")
            )
    # reorder so the identity is element 0, keeping the remaining symbol order
    new_order = [e] + [i for i in range(n) if i != e]
    pos = {old: new for new, old in enumerate(new_order)}
    table = [
        [pos[t.cells[a][b]] for b in new_order] for a in new_order
    ]
    names = tuple(t.symbols[i] for i in new_order)
    group = Group(table, element_names=names, trusted=True)
    return TableGroupResult(group, identify(group), None)


def render_quotient_table(G: Group, N: Subgroup) -> str:
    """Coset-labeled table of G/N; cosets carry their minimal representative."""
    return render_table(quotient(G, N))
