"""Curated constructors for the named test groups.

Every entry is built from an explicit recipe (presentation-style tables,
permutation closures, direct and central products) rather than an external
database, so each Cayley table is auditable.  The selection covers every
structural condition of the classification and several groups that fail all
of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .groups import Group, _trusted_group, direct_product, group_from_permutations

__all__ = ["CatalogEntry", "catalog", "catalog_names", "catalog_group"]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    group: Group
    construction: str


def cyclic(n: int, name: Optional[str] = None) -> Group:
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    labels = tuple("1" if i == 0 else ("c" if i == 1 else f"c^{i}") for i in range(n))
    return _trusted_group(table.astype(np.int32), labels, name or f"C{n}")


def elementary_abelian(k: int, name: Optional[str] = None) -> Group:
    n = 1 << k
    table = np.arange(n)[:, None] ^ np.arange(n)[None, :]
    labels = tuple(
        "e" if v == 0 else "*".join(f"a{i}" for i in range(k) if v >> i & 1)
        for v in range(n)
    )
    return _trusted_group(table.astype(np.int32), labels, name or f"C2^{k}")


def _two_part_labels(m: int) -> tuple[str, ...]:
    def rpow(a: int) -> str:
        return "1" if a == 0 else ("r" if a == 1 else f"r^{a}")

    out = [rpow(a) for a in range(m)]
    out += ["s" if a == 0 else f"{rpow(a)}*s" for a in range(m)]
    return tuple(out)


def dihedral(order: int, name: Optional[str] = None) -> Group:
    """Dihedral group of the given (even, >= 4) order: r^m = s^2 = 1, r^s = r^-1."""
    m = order // 2
    table = np.empty((order, order), dtype=np.int32)
    for a1 in range(m):
        for b1 in range(2):
            for a2 in range(m):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2)) % m
                    table[a1 + m * b1, a2 + m * b2] = a + m * (b1 ^ b2)
    return _trusted_group(table, _two_part_labels(m), name or f"D{order}")


def quaternion(order: int, name: Optional[str] = None) -> Group:
    """Dicyclic group of the given order: r^(2k) = 1, s^2 = r^k, r^s = r^-1.

    Generalized quaternion when the order is a power of 2.
    """
    if order % 4 or order < 8:
        raise ValueError("dicyclic groups need order divisible by 4, at least 8")
    k = order // 4
    m = 2 * k
    table = np.empty((order, order), dtype=np.int32)
    for a1 in range(m):
        for b1 in range(2):
            for a2 in range(m):
                for b2 in range(2):
                    a = (a1 + (a2 if b1 == 0 else -a2) + (k if b1 and b2 else 0)) % m
                    table[a1 + m * b1, a2 + m * b2] = a + m * ((b1 + b2) % 2)
    return _trusted_group(table, _two_part_labels(m), name or f"Q{order}")


def two_generator_2group(m: int, conj_power: int, name: str) -> Group:
    """The group r^m = s^2 = 1, r^s = r^conj_power of order 2m.

    conj_power must be a unit of order dividing 2 mod m; m = 8 with powers
    3 and 5 gives the semidihedral and modular groups of order 16.
    """
    if (conj_power * conj_power) % m != 1:
        raise ValueError("conjugating power must square to 1 mod m")
    table = np.empty((2 * m, 2 * m), dtype=np.int32)
    for a1 in range(m):
        for b1 in range(2):
            for a2 in range(m):
                for b2 in range(2):
                    a = (a1 + a2 * (conj_power if b1 else 1)) % m
                    table[a1 + m * b1, a2 + m * b2] = a + m * (b1 ^ b2)
    return _trusted_group(table, _two_part_labels(m), name)


def c4_semidirect_c4(name: str = "C4:C4") -> Group:
    """The group a^4 = b^4 = 1 with a^b = a^-1; elements a^i b^j."""
    table = np.empty((16, 16), dtype=np.int32)
    for i1 in range(4):
        for j1 in range(4):
            for i2 in range(4):
                for j2 in range(4):
                    i = (i1 + (i2 if j1 % 2 == 0 else -i2)) % 4
                    table[i1 + 4 * j1, i2 + 4 * j2] = i + 4 * ((j1 + j2) % 4)

    def lbl(i: int, j: int) -> str:
        parts = []
        if i:
            parts.append("a" if i == 1 else f"a^{i}")
        if j:
            parts.append("b" if j == 1 else f"b^{j}")
        return "*".join(parts) or "1"

    labels = tuple(lbl(i, j) for j in range(4) for i in range(4))
    return _trusted_group(table, labels, name)


def heisenberg_mod3(name: str = "Heis3") -> Group:
    """Unitriangular 3x3 matrices over the field of 3 elements (order 27).

    Elements (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').
    Nonabelian of exponent 3: no involutions at all.
    """
    def idx(a: int, b: int, c: int) -> int:
        return 9 * a + 3 * b + c

    table = np.empty((27, 27), dtype=np.int32)
    for a1 in range(3):
        for b1 in range(3):
            for c1 in range(3):
                for a2 in range(3):
                    for b2 in range(3):
                        for c2 in range(3):
                            table[idx(a1, b1, c1), idx(a2, b2, c2)] = idx(
                                (a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3
                            )
    labels = tuple(
        f"({a},{b},{c})" for a in range(3) for b in range(3) for c in range(3)
    )
    return _trusted_group(table, labels, name)


def c7_semidirect_c3(name: str = "C7:C3") -> Group:
    """Nonabelian group of order 21: a^7 = b^3 = 1, a^b = a^2 (2^3 = 1 mod 7)."""
    table = np.empty((21, 21), dtype=np.int32)
    for a1 in range(7):
        for b1 in range(3):
            for a2 in range(7):
                for b2 in range(3):
                    a = (a1 + a2 * pow(2, b1, 7)) % 7
                    table[a1 * 3 + b1, a2 * 3 + b2] = a * 3 + (b1 + b2) % 3

    def lbl(a: int, b: int) -> str:
        parts = []
        if a:
            parts.append("a" if a == 1 else f"a^{a}")
        if b:
            parts.append("b" if b == 1 else f"b^{b}")
        return "*".join(parts) or "1"

    labels = tuple(lbl(a, b) for a in range(7) for b in range(3))
    return _trusted_group(table, labels, name)


def quotient_by_normal(G: Group, normal: Sequence[int], name: str) -> Group:
    """Quotient of G by a normal subgroup given as an element list."""
    members = sorted(set(normal))
    sub = G.subgroup(members)
    if not sub.is_normal():
        raise ValueError("subgroup is not normal")
    rep_of = G.table[:, members].min(axis=1)
    reps = sorted(int(r) for r in set(rep_of.tolist()))
    idx = {r: i for i, r in enumerate(reps)}
    m = len(reps)
    table = np.empty((m, m), dtype=np.int32)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = idx[int(rep_of[G.table[a, b]])]
    labels = tuple(f"[{G.label(r)}]" for r in reps)
    return _trusted_group(table, labels, name)


def d8_central_product_c4(name: str = "D8oC4") -> Group:
    """Central product of D8 and C4 identifying r^2 with c^2 (order 16)."""
    d8 = dihedral(8)
    c4 = cyclic(4)
    prod = direct_product(d8, c4, name="D8xC4")
    r2, c2 = 2, 2  # r^2 in D8, c^2 in C4
    return quotient_by_normal(prod, [0, r2 * 4 + c2], name)


def _rename(G: Group, name: str) -> Group:
    return Group(G.table, G.inverse, G.labels, name)


def _build_catalog() -> list[CatalogEntry]:
    entries: list[CatalogEntry] = []

    def add(name: str, group: Group, construction: str):
        entries.append(CatalogEntry(name, _rename(group, name), construction))

    for n in range(1, 17):
        add(f"C{n}", cyclic(n), f"cyclic group of order {n}")
    for k in (2, 3, 4):
        add(f"C2^{k}", elementary_abelian(k), f"elementary abelian group of rank {k}")
    add("D8", dihedral(8), "dihedral: r^4 = s^2 = 1, r^s = r^-1")
    add("D16", dihedral(16), "dihedral: r^8 = s^2 = 1, r^s = r^-1")
    add("D32", dihedral(32), "dihedral: r^16 = s^2 = 1, r^s = r^-1")
    add("Q8", quaternion(8), "quaternion: r^4 = 1, s^2 = r^2, r^s = r^-1")
    add("Q16", quaternion(16), "generalized quaternion: r^8 = 1, s^2 = r^4, r^s = r^-1")
    add("Q32", quaternion(32), "generalized quaternion: r^16 = 1, s^2 = r^8, r^s = r^-1")
    add("Dic3", quaternion(12), "dicyclic: r^6 = 1, s^2 = r^3, r^s = r^-1")
    add("Dic5", quaternion(20), "dicyclic: r^10 = 1, s^2 = r^5, r^s = r^-1")
    add("SD16", two_generator_2group(8, 3, "SD16"), "semidihedral: r^8 = s^2 = 1, r^s = r^3")
    add("M16", two_generator_2group(8, 5, "M16"), "modular: r^8 = s^2 = 1, r^s = r^5")
    add("M32", two_generator_2group(16, 9, "M32"), "modular: r^16 = s^2 = 1, r^s = r^9")
    add("S3", group_from_permutations(3, [(1, 0, 2), (1, 2, 0)]), "closure of (0 1) and (0 1 2)")
    add("S4", group_from_permutations(4, [(1, 2, 3, 0), (1, 0, 2, 3)]), "closure of (0 1 2 3) and (0 1)")
    add("A4", group_from_permutations(4, [(1, 2, 0, 3), (1, 0, 3, 2)]), "closure of (0 1 2) and (0 1)(2 3)")
    add("Q8xC2", direct_product(quaternion(8), cyclic(2)), "direct product Q8 x C2")
    add(
        "Q8xC2xC2",
        direct_product(direct_product(quaternion(8), cyclic(2)), cyclic(2)),
        "direct product Q8 x C2 x C2",
    )
    add("D8xC2", direct_product(dihedral(8), cyclic(2)), "direct product D8 x C2")
    add("C4xC4", direct_product(cyclic(4), cyclic(4)), "direct product C4 x C4")
    add("C4:C4", c4_semidirect_c4(), "semidirect product: a^4 = b^4 = 1, a^b = a^-1")
    add("D8oC4", d8_central_product_c4(), "central product of D8 and C4 over r^2 = c^2")
    add("C3xS3", direct_product(cyclic(3), group_from_permutations(3, [(1, 0, 2), (1, 2, 0)])),
        "direct product C3 x S3")
    add("C7:C3", c7_semidirect_c3(), "semidirect product: a^7 = b^3 = 1, a^b = a^2")
    add("Heis3", heisenberg_mod3(), "unitriangular 3x3 matrices over GF(3)")
    return entries


_CATALOG: Optional[list[CatalogEntry]] = None


def _entries() -> list[CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _build_catalog()
        names = [e.name for e in _CATALOG]
        assert len(names) == len(set(names))
    return _CATALOG


def catalog(max_order: Optional[int] = None) -> list[CatalogEntry]:
    """Catalog entries with order up to ``max_order`` (all when omitted)."""
    entries = _entries()
    if max_order is None:
        return list(entries)
    return [e for e in entries if e.group.order <= max_order]


def catalog_names() -> list[str]:
    return [e.name for e in _entries()]


def catalog_group(name: str) -> Group:
    """Look up a catalog group by name (case-insensitive, x for the times sign)."""
    wanted = name.strip().replace("×", "x").lower()
    for e in _entries():
        if e.name.lower() == wanted:
            return e.group
    raise KeyError(f"unknown catalog group {name!r}; known: {', '.join(catalog_names())}")
