"""Brute-force commutativity and Lie-metabelian oracles for symmetric elements.

The symmetric part of the integral group ring is spanned, as a module, by

    X+ = {g + g^-1 : g^2 != 1}  union  {g : g^2 = 1}

so bilinearity reduces every bracket question about the symmetric elements to
the finite generator set, and the antisymmetric span is generated by the
nonzero differences ``g - g^-1`` (one per inverse pair).  These checks
evaluate every generator bracket exactly and, for the Lie-metabelian test,
every pairwise bracket of the (sign-deduplicated) nonzero brackets.

The quadratic pairwise phase is the package hot spot; it runs on a compiled
kernel when available and on a pure-Python twin otherwise (see
``active_kernel``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _scan_py
from .groups import Group
from .groupring import RingElement

try:  # compiled twin, built by setup.py when Cython is available
    from . import _scan_c
except ImportError:  # pragma: no cover - depends on build environment
    _scan_c = None

__all__ = [
    "BudgetExceeded",
    "GeneratorSet",
    "BruteReport",
    "DEFAULT_ORDER_BUDGET",
    "active_kernel",
    "x_plus_generators",
    "is_plus_commutative",
    "is_check_commutative",
    "is_plus_lie_metabelian",
    "audit_eq1",
]

DEFAULT_ORDER_BUDGET = 300


class BudgetExceeded(RuntimeError):
    """The group order is above the configured brute-force budget."""


def _kernel():
    if _scan_c is not None and os.environ.get("LIEMETAB_PURE") != "1":
        return _scan_c
    return _scan_py


def active_kernel() -> str:
    """Name of the scan kernel in use: ``"cython"`` or ``"python"``."""
    return _kernel().KERNEL_NAME


@dataclass(frozen=True)
class GeneratorSet:
    """Module generators of the symmetric and antisymmetric parts.

    ``plus_gens`` holds one generator per inverse pair ``{g, g^-1}`` with
    ``g^2 != 1`` plus one per solution of ``g^2 = 1`` (identity included);
    ``check_gens`` holds the nonzero differences ``g - g^-1``, one per
    inverse pair.  Both lists are in ascending order of their least element.
    """

    group: Group
    plus_gens: tuple[RingElement, ...]
    check_gens: tuple[RingElement, ...]


@dataclass(frozen=True)
class BruteReport:
    """Outcome of the brute-force Lie-metabelian scan.

    ``witness`` is a quadruple (a, b, c, d) of X+ indices whose double
    bracket [[x_a, x_b], [x_c, x_d]] is nonzero; present iff the verdict is
    False.  ``bracket_count`` counts the nonzero brackets over unordered
    generator pairs; ``deduped_bracket_count`` counts those retained after
    exact-and-sign deduplication.
    """

    lie_metabelian: bool
    witness: Optional[tuple[int, int, int, int]]
    bracket_count: int
    deduped_bracket_count: int


def x_plus_generators(G: Group) -> GeneratorSet:
    """Build the generator sets for a group, in ascending element order."""
    inv = G.inverse
    plus: list[RingElement] = []
    check: list[RingElement] = []
    for g in G.elements():
        gi = int(inv[g])
        if gi == g:
            plus.append(RingElement.from_element(G, g))
        elif g < gi:
            plus.append(RingElement(G, {g: 1, gi: 1}))
            check.append(RingElement(G, {g: 1, gi: -1}))
    return GeneratorSet(G, tuple(plus), tuple(check))


def _to_arrays(gens: tuple[RingElement, ...]):
    supports = []
    coeffs = []
    for a in gens:
        items = a.items()
        supports.append(np.array([g for g, _ in items], dtype=np.int32))
        coeffs.append(np.array([c for _, c in items], dtype=np.int64))
    return supports, coeffs


def is_plus_commutative(G: Group) -> bool:
    """Do all X+ generators commute (equivalently, is the symmetric part commutative)?"""
    supports, coeffs = _to_arrays(x_plus_generators(G).plus_gens)
    ok, _ = _kernel().pairwise_commute(G.table, supports, coeffs)
    return ok


def is_check_commutative(G: Group) -> bool:
    """Do all differences ``g - g^-1`` commute with each other?"""
    supports, coeffs = _to_arrays(x_plus_generators(G).check_gens)
    ok, _ = _kernel().pairwise_commute(G.table, supports, coeffs)
    return ok


def is_plus_lie_metabelian(G: Group, budget: int = DEFAULT_ORDER_BUDGET) -> BruteReport:
    """Decide by exhaustive computation whether X+ is a Lie metabelian set.

    Evaluates the bracket of every unordered generator pair, discards zeros,
    deduplicates up to sign and exact equality (sound: negating an operand
    negates the bracket, so commutation questions are unchanged), then tests
    all pairs of retained brackets.  Iteration follows ascending generator
    indices, so the witness is deterministic.
    """
    if G.order > budget:
        raise BudgetExceeded(f"group order {G.order} exceeds budget {budget}")
    supports, coeffs = _to_arrays(x_plus_generators(G).plus_gens)
    ok, witness, nonzero, deduped = _kernel().lie_metabelian_scan(
        G.table, G.inverse, supports, coeffs
    )
    return BruteReport(ok, witness, nonzero, deduped)


def audit_eq1(G: Group) -> bool:
    """Is every X+ generator bracket inside the antisymmetric span?

    Membership in the span of ``{g - g^-1}`` over the integers is exactly:
    fixed by negated inversion and supported away from solutions of
    ``g^2 = 1``.  Checked for all ordered generator pairs.
    """
    gens = x_plus_generators(G).plus_gens
    involutions = set(G.involution_set())
    for x in gens:
        for y in gens:
            b = x * y - y * x
            if not b.is_antisymmetric():
                return False
            if any(g in involutions for g in b.support()):
                return False
    return True
