"""Constructors for the named group families, plus the twist-exponent solver.

Presentation-backed families go through coset enumeration; the diquaternion
and multi-qubit families come from exact matrix closure.  ``sdp_c2(m, k)``
is the semidirect product <r,s | r^m = s^2 = 1, s r s = r^k>, defined exactly
when k^2 = 1 (mod m); the four solutions at m = 2^t are the abelian, dihedral,
semidihedral, and semiabelian twists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import matrices
from .cosets import group_from_presentation
from .groups import Group, abelian_name, direct_product
from .words import parse_presentation

__all__ = [
    "FamilySpec",
    "make",
    "family_presentation",
    "cyclic",
    "abelian",
    "dihedral",
    "quaternion",
    "sdp_c2",
    "semidihedral",
    "semiabelian",
    "diquaternion",
    "pauli",
    "involutive_exponents",
    "nonabelian_catalog",
    "catalog_groups",
]

GENERATOR_ALPHABET = "abcdeghklmnpqtuvw"  # skips f, r, s, and the like-i/j/z names


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    kinds: cyclic(n), abelian(d1,d2,...), dihedral(n), quaternion(order),
    semidihedral(m), semiabelian(m), sdp(m,k), diquaternion(m), pauli(q),
    and direct-product over sub-specs.
    """

    kind: str
    params: tuple[int, ...] = ()
    factors: tuple["FamilySpec", ...] = field(default=())


def make(spec: FamilySpec) -> Group:
    kind, p = spec.kind, spec.params
    if kind == "cyclic":
        return cyclic(*p)
    if kind == "abelian":
        return abelian(list(p))
    if kind == "dihedral":
        return dihedral(*p)
    if kind == "quaternion":
        return quaternion(*p)
    if kind == "semidihedral":
        return semidihedral(*p)
    if kind == "semiabelian":
        return semiabelian(*p)
    if kind == "sdp":
        return sdp_c2(*p)
    if kind == "diquaternion":
        return diquaternion(*p)
    if kind == "pauli":
        return pauli(*p)
    if kind == "direct-product":
        groups = [make(f) for f in spec.factors]
        if not groups:
            raise ValueError("direct-product needs factors")
        out = groups[0]
        for other in groups[1:]:
            out = direct_product(out, other)
        return out
    raise ValueError(f"unknown family kind {spec.kind!r}")


def family_presentation(spec: FamilySpec):
    """The canonical presentation behind a presentation-backed family, or
    None for the matrix-closure families."""
    kind, p = spec.kind, spec.params
    if kind == "cyclic":
        return parse_presentation(_cyclic_text(*p))
    if kind == "abelian":
        factors = [d for d in p if d != 1] or [1]
        return parse_presentation(_abelian_text(factors))
    if kind == "dihedral":
        return parse_presentation(_dihedral_text(*p))
    if kind == "quaternion":
        return parse_presentation(_quaternion_text(*p))
    if kind == "semidihedral":
        _check_sd_modulus(p[0])
        return parse_presentation(_sdp_text(p[0], p[0] // 2 - 1))
    if kind == "semiabelian":
        _check_sd_modulus(p[0])
        return parse_presentation(_sdp_text(p[0], p[0] // 2 + 1))
    if kind == "sdp":
        return parse_presentation(_sdp_text(*p))
    return None


def _cyclic_text(n: int) -> str:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    return f"<r | r^{n}>"


def _abelian_text(factors) -> str:
    if len(factors) > len(GENERATOR_ALPHABET):
        raise ValueError("too many factors")
    gens = list(GENERATOR_ALPHABET[: len(factors)])
    relators = [f"{g}^{d}" for g, d in zip(gens, factors)]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            relators.append(f"{gens[i]} {gens[j]} {gens[i]}^-1 {gens[j]}^-1")
    return f"<{','.join(gens)} | {', '.join(relators)}>"


def _dihedral_text(n: int) -> str:
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    return f"<r,f | r^{n}=f^2=1, r f r=f>"


def _quaternion_text(order: int) -> str:
    if order < 8 or order & (order - 1):
        raise ValueError("quaternion order must be a power of two, at least 8")
    return f"<r,s | r^{order // 2}=1, s^2=r^{order // 4}, s^-1 r s=r^-1>"


def _sdp_text(m: int, k: int) -> str:
    if m < 2:
        raise ValueError("m must be at least 2")
    k %= m
    if (k * k) % m != 1:
        raise ValueError(f"k^2 must be 1 mod {m}; got k={k}")
    return f"<r,s | r^{m}=s^2=1, s r s=r^{k}>"


def cyclic(n: int) -> Group:
    return group_from_presentation(parse_presentation(_cyclic_text(n)))


def abelian(invariant_factors) -> Group:
    """Direct product of cyclic groups given by an invariant-factor list."""
    factors = [int(d) for d in invariant_factors if int(d) != 1]
    if any(d < 1 for d in factors):
        raise ValueError("factors must be positive")
    if not factors:
        return cyclic(1)
    return group_from_presentation(parse_presentation(_abelian_text(factors)))


def dihedral(n: int) -> Group:
    """Order 2n (subscript counts the rotations)."""
    return group_from_presentation(parse_presentation(_dihedral_text(n)))


def quaternion(order: int) -> Group:
    """Generalized quaternion group of order 2^n, n >= 3."""
    return group_from_presentation(parse_presentation(_quaternion_text(order)))


def sdp_c2(m: int, k: int) -> Group:
    """<r,s | r^m = s^2 = 1, s r s = r^k>; requires k^2 = 1 mod m."""
    return group_from_presentation(parse_presentation(_sdp_text(m, k)))


def semidihedral(m: int) -> Group:
    """Twist k = m/2 - 1 on <r> of order m = 2^t, t >= 3; group order 2m."""
    _check_sd_modulus(m)
    return sdp_c2(m, m // 2 - 1)


def semiabelian(m: int) -> Group:
    """Twist k = m/2 + 1 on <r> of order m = 2^t, t >= 3; group order 2m."""
    _check_sd_modulus(m)
    return sdp_c2(m, m // 2 + 1)


def _check_sd_modulus(m: int):
    if m < 8 or m & (m - 1):
        raise ValueError("modulus must be a power of two, at least 8")


def diquaternion(quaternion_order: int) -> Group:
    return matrices.diquaternion_group(quaternion_order)


def pauli(qubits: int) -> Group:
    return matrices.pauli_group(qubits)


def involutive_exponents(m: int) -> list[int]:
    """All k in 1..m-1 with k^2 = 1 (mod m), by exhaustive scan."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return [k for k in range(1, m) if (k * k) % m == 1]


def _order18_special() -> list[tuple[str, Group]]:
    c3xd3 = direct_product(cyclic(3), dihedral(3))
    gen_dihedral = group_from_presentation(
        parse_presentation(
            "<a,b,s | a^3=b^3=s^2=1, a b a^-1 b^-1, s a s a, s b s b>"
        )
    )
    return [("C_3xD_3", c3xd3), ("C_3:D_3", gen_dihedral)]


def _plain_nonabelian(order: int) -> list[tuple[str, Group]]:
    entries: list[tuple[str, Group]] = []
    if order % 2 == 0:
        m = order // 2
        if m >= 3:
            entries.append((f"D_{m}", dihedral(m)))
        if m >= 8 and m & (m - 1) == 0:
            entries.append((f"SD_{m}", semidihedral(m)))
            entries.append((f"SA_{m}", semiabelian(m)))
    if order >= 8 and order & (order - 1) == 0:
        entries.append((f"Q_{order}", quaternion(order)))
        if order >= 16:
            entries.append((f"DQ_{order // 2}", diquaternion(order // 2)))
    if order == 18:
        entries.extend(_order18_special())
    return entries


def _invariant_factor_lists(n: int) -> list[list[int]]:
    out: list[list[int]] = []

    def rec(remaining: int, prev: int, acc: list[int]):
        if remaining == 1:
            out.append(list(acc))
            return
        d = max(prev, 2)
        while d <= remaining:
            if remaining % d == 0 and d % prev == 0:
                rec(remaining // d, d, acc + [d])
            d += 1

    rec(n, 1, [])
    return out


@lru_cache(maxsize=None)
def nonabelian_catalog(order: int) -> tuple[tuple[str, Group], ...]:
    """Named non-abelian candidates of one order, plain families first, then
    direct products of catalog members; used by identify."""
    if order > 64:
        return ()
    entries = list(_plain_nonabelian(order))
    for d in range(6, order):
        if order % d:
            continue
        bases = _plain_nonabelian(d)
        cofactor = order // d
        if cofactor > 1:
            for factors in _invariant_factor_lists(cofactor):
                aname = abelian_name(sorted(factors, reverse=True))
                for bname, base in bases:
                    entries.append((f"{bname}x{aname}", direct_product(base, abelian(factors))))
        for d2 in range(6, cofactor + 1):
            if d2 * d != order or d2 < d:
                continue
            for b2name, base2 in _plain_nonabelian(d2):
                for bname, base in bases:
                    entries.append((f"{bname}x{b2name}", direct_product(base, base2)))
    return tuple(entries)


def catalog_groups(max_order: int):
    """Every named catalog group with order <= max_order, abelian included."""
    for order in range(1, max_order + 1):
        for factors in _invariant_factor_lists(order):
            yield abelian_name(sorted(factors, reverse=True)), abelian(factors)
        for name, group in nonabelian_catalog(order):
            yield name, group
