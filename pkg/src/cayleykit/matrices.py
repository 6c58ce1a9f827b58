"""Exact arithmetic in Z[zeta] for zeta a 2^k-th root of unity, and matrix
group closure over it.

CycInt at level k is a polynomial in zeta = e^{2*pi*i/2^k}, stored as the
coefficient vector of length 2^(k-1) and reduced by zeta^(2^(k-1)) = -1.
That reduction makes the representation unique, so equality and hashing are
coefficient-wise (after demoting to the least level that carries the value).
Operations require equal levels; ``promote`` embeds into a higher level by
coefficient spreading.  Python integers never overflow, so coefficients stay
exact at any size.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .cosets import CapExceeded
from .groups import Group

__all__ = [
    "LevelMismatch",
    "CycInt",
    "CycMatrix",
    "cyc_add",
    "cyc_neg",
    "cyc_mul",
    "mat_mul",
    "kronecker",
    "rot_matrix",
    "j_matrix",
    "f_matrix",
    "matrix_group_closure",
    "diquaternion_group",
    "pauli_group",
    "PAULI_QUBIT_CAP",
]

PAULI_QUBIT_CAP = 3
DEFAULT_CLOSURE_CAP = 4096


class LevelMismatch(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CycInt:
    """Element of Z[zeta_{2^level}] in reduced coefficient form."""

    level: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be at least 1")
        if len(self.coeffs) != 1 << (self.level - 1):
            raise ValueError(
                f"level {self.level} needs {1 << (self.level - 1)} coefficients"
            )

    @staticmethod
    def from_int(value: int, level: int = 1) -> CycInt:
        coeffs = [0] * (1 << (level - 1))
        coeffs[0] = value
        return CycInt(level, tuple(coeffs))

    @staticmethod
    def zeta(level: int, power: int = 1) -> CycInt:
        """zeta^power at the given level (zeta = e^{2*pi*i/2^level})."""
        span = 1 << (level - 1)
        power %= 2 * span
        coeffs = [0] * span
        if power < span:
            coeffs[power] = 1
        else:
            coeffs[power - span] = -1
        return CycInt(level, tuple(coeffs))

    def promote(self, level: int) -> CycInt:
        if level < self.level:
            raise LevelMismatch(f"cannot demote level {self.level} to {level}")
        coeffs = self.coeffs
        for _ in range(level - self.level):
            spread = [0] * (2 * len(coeffs))
            spread[::2] = coeffs
            coeffs = tuple(spread)
        return CycInt(level, tuple(coeffs))

    def _canonical(self) -> tuple[int, tuple[int, ...]]:
        level, coeffs = self.level, self.coeffs
        while level > 1 and not any(coeffs[1::2]):
            coeffs = coeffs[::2]
            level -= 1
        return level, tuple(coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._canonical() == (1, (other,))
        if isinstance(other, CycInt):
            return self._canonical() == other._canonical()
        return NotImplemented

    def __hash__(self):
        return hash(self._canonical())

    def _coerce(self, other) -> CycInt:
        if isinstance(other, int):
            return CycInt.from_int(other, self.level)
        if isinstance(other, CycInt):
            if other.level != self.level:
                raise LevelMismatch(
                    f"level {self.level} vs {other.level}; promote explicitly"
                )
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycInt(self.level, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.level, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        span = len(self.coeffs)
        prod = [0] * (2 * span)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        out = prod[:span]
        for m in range(span, 2 * span):  # zeta^span = -1
            out[m - span] -= prod[m]
        return CycInt(self.level, tuple(out))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def complex_value(self) -> complex:
        span = len(self.coeffs)
        return sum(
            c * cmath.exp(2j * cmath.pi * m / (2 * span))
            for m, c in enumerate(self.coeffs)
        )

    def __str__(self):
        terms = []
        for m in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[m]
            if c == 0:
                continue
            mag = abs(c)
            if m == 0:
                body = str(mag)
            else:
                power = "z" if m == 1 else f"z^{m}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += sign + body
        return text

    def __repr__(self):
        return f"CycInt(level={self.level}, {self})"


def cyc_add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def cyc_neg(a: CycInt) -> CycInt:
    return -a


def cyc_mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


class CycMatrix:
    """Square matrix over CycInt with power-of-two dimension, uniform level."""

    __slots__ = ("level", "dim", "rows", "_key")

    def __init__(self, level: int, rows):
        entries = tuple(
            tuple(e if isinstance(e, CycInt) else CycInt.from_int(e) for e in row)
            for row in rows
        )
        dim = len(entries)
        if dim == 0 or dim & (dim - 1):
            raise ValueError("dimension must be a power of two")
        for row in entries:
            if len(row) != dim:
                raise ValueError("matrix must be square")
        self.level = level
        self.dim = dim
        self.rows = tuple(
            tuple(e.promote(level) for e in row) for row in entries
        )
        self._key = (dim, tuple(e._canonical() for row in self.rows for e in row))

    @staticmethod
    def identity(dim: int, level: int = 1) -> CycMatrix:
        return CycMatrix(
            level, [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        )

    def promote(self, level: int) -> CycMatrix:
        if level == self.level:
            return self
        return CycMatrix(level, self.rows)

    def __eq__(self, other):
        return isinstance(other, CycMatrix) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __mul__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")
        if self.level != other.level:
            raise LevelMismatch(
                f"level {self.level} vs {other.level}; promote explicitly"
            )
        zero = CycInt.from_int(0, self.level)
        cols = list(zip(*other.rows))
        rows = [
            tuple(sum((a * b for a, b in zip(row, col)), zero) for col in cols)
            for row in self.rows
        ]
        return CycMatrix(self.level, rows)

    def __str__(self):
        return "[" + ",".join(
            "[" + ",".join(str(e) for e in row) + "]" for row in self.rows
        ) + "]"

    def __repr__(self):
        return f"CycMatrix(level={self.level}, {self})"


def mat_mul(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    return a * b


def kronecker(a: CycMatrix, b: CycMatrix) -> CycMatrix:
    if a.level != b.level:
        raise LevelMismatch(f"level {a.level} vs {b.level}; promote explicitly")
    db = b.dim
    dim = a.dim * db
    rows = [
        tuple(a.rows[i // db][j // db] * b.rows[i % db][j % db] for j in range(dim))
        for i in range(dim)
    ]
    return CycMatrix(a.level, rows)


def rot_matrix(level: int) -> CycMatrix:
    """diag(zeta, zeta^-1) at the given level; level 2 gives diag(i, -i)."""
    z = CycInt.zeta(level)
    zinv = CycInt.zeta(level, -1)
    zero = CycInt.from_int(0, level)
    return CycMatrix(level, [[z, zero], [zero, zinv]])


def j_matrix(level: int = 1) -> CycMatrix:
    return CycMatrix(level, [[0, -1], [1, 0]])


def f_matrix(level: int = 1) -> CycMatrix:
    return CycMatrix(level, [[0, 1], [1, 0]])


def matrix_group_closure(
    gens,
    names=None,
    cap: int = DEFAULT_CLOSURE_CAP,
) -> Group:
    """BFS closure of matrix generators; the result's element 0 is the
    identity matrix and elements are labeled by their rendered matrices.

    Generators at mixed levels are promoted to the common maximum first.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if names is None:
        names = [f"g{k}" for k in range(len(gens))]
    names = [str(x) for x in names]
    if len(names) != len(gens):
        raise ValueError("one name per generator")
    dim = gens[0].dim
    level = max(g.level for g in gens)
    gens = [g.promote(level) for g in gens]
    if any(g.dim != dim for g in gens):
        raise ValueError("generators must share one dimension")

    ident = CycMatrix.identity(dim, level)
    elements = [ident]
    index = {ident: 0}
    parents: list[tuple[int, int] | None] = [None]
    succ: list[list[int]] = []
    head = 0
    while head < len(elements):
        row = []
        m = elements[head]
        for gi, g in enumerate(gens):
            prod = m * g
            at = index.get(prod)
            if at is None:
                at = len(elements)
                if at >= cap:
                    raise CapExceeded(
                        f"matrix closure cap {cap} exceeded", len(elements)
                    )
                index[prod] = at
                elements.append(prod)
                parents.append((head, gi))
            row.append(at)
        succ.append(row)
        head += 1

    n = len(elements)
    columns: list[list[int]] = [list(range(n))] + [[] for _ in range(n - 1)]
    for j in range(1, n):
        parent, gi = parents[j]  # type: ignore[misc]
        columns[j] = [succ[x][gi] for x in columns[parent]]
    table = tuple(tuple(columns[j][i] for j in range(n)) for i in range(n))
    labels = tuple(str(m) for m in elements)
    gen_entries = tuple((names[gi], succ[0][gi]) for gi in range(len(gens)))
    return Group(table, element_names=labels, generators=gen_entries, trusted=True)


def diquaternion_group(quaternion_order: int) -> Group:
    """Closure of the quaternion rotation matrix with j and the reflection f.

    ``quaternion_order`` is the order 2^n of the quaternion part; the result
    has order 2^(n+1).
    """
    m = quaternion_order
    if m < 8 or m & (m - 1):
        raise ValueError("quaternion order must be a power of two, at least 8")
    level = m.bit_length() - 2  # zeta of order m/2 drives the rotation
    rot_name = "i" if level == 2 else "z"
    return matrix_group_closure(
        [rot_matrix(level), j_matrix(), f_matrix()],
        names=[rot_name, "j", "f"],
        cap=8 * m,
    )


def pauli_group(qubits: int) -> Group:
    """Closure of the per-qubit rotation/j/f generators; order 4^(qubits+1)."""
    if not 1 <= qubits <= PAULI_QUBIT_CAP:
        raise ValueError(f"qubits must be between 1 and {PAULI_QUBIT_CAP}")
    base = [("i", rot_matrix(2)), ("j", j_matrix(2)), ("f", f_matrix(2))]
    eye = CycMatrix.identity(2, 2)
    gens = []
    names = []
    for q in range(qubits):
        for name, mat in base:
            full = None
            for slot in range(qubits):
                factor = mat if slot == q else eye
                full = factor if full is None else kronecker(full, factor)
            gens.append(full)
            names.append(f"{name}{q + 1}" if qubits > 1 else name)
    return matrix_group_closure(gens, names=names, cap=4 ** (qubits + 1) + 1)
