"""Mechanical audits of the group-ring identities behind the classification.

Two kinds of checks live here:

* universal expansion audits: ring identities that hold in every group
  (bracket expansions of the symmetric generators, the double-bracket
  expansion for involution triples).  These validate the ring engine
  itself: a nonzero residual on any group is an arithmetic bug.

* hypothesis-gated audits: closed forms and structural conclusions that are
  only claimed for groups satisfying one of the structural conditions
  (inverting index-2 subgroup, index-4 center) or the standing assumptions
  of the necessity analysis (Lie metabelian symmetric part, non-commuting
  antisymmetric part).  Calling them on a group that fails the hypothesis
  raises HypothesisViolated.

Groups of order <= EXHAUSTIVE_ORDER_LIMIT are audited over every qualifying
tuple; larger groups use a seeded deterministic sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .brute import is_check_commutative, is_plus_lie_metabelian, x_plus_generators
from .classify import condition4, index2_subgroups
from .groups import Group, Subgroup
from .groupring import RingElement, lie_bracket

__all__ = [
    "HypothesisViolated",
    "AuditReport",
    "EXHAUSTIVE_ORDER_LIMIT",
    "audit_bracket_expansions",
    "audit_involutions_expansion",
    "audit_condition3_formula",
    "audit_condition4_identities",
    "audit_eq1_report",
    "lemma_conformance",
]

EXHAUSTIVE_ORDER_LIMIT = 24
DEFAULT_SAMPLE_BUDGET = 1000


class HypothesisViolated(ValueError):
    """The audited identity's structural hypothesis fails for this group."""


@dataclass(frozen=True)
class AuditReport:
    """Outcome of one audit on one group.

    ``counterexample`` re-evaluates to a nonzero residual whenever
    ``passed`` is False.  ``details`` carries per-subcheck statuses for
    compound audits (the lemma-conformance suite).
    """

    identity_name: str
    group_name: str
    tuples_checked: int
    passed: bool
    counterexample: Optional[dict] = None
    details: Optional[dict] = None


def _gname(G: Group) -> str:
    return G.name or f"order-{G.order} group"


def _elem(G: Group, g: int) -> RingElement:
    return RingElement.from_element(G, g)


def _plus(G: Group, g: int) -> RingElement:
    """The symmetric combination g + g^-1 (2g when g is an involution)."""
    return _elem(G, g) + _elem(G, G.inv(g))


def _counterexample(tup, residual: RingElement) -> dict:
    return {"tuple": list(tup), "residual": residual.serialize()}


def _run_tuples(name, G, domains, sample_budget, seed, check) -> AuditReport:
    """Drive ``check`` over the product of ``domains`` (or a seeded sample).

    ``check`` returns a residual RingElement; the audit passes when every
    residual is zero.
    """
    exhaustive = G.order <= EXHAUSTIVE_ORDER_LIMIT
    if exhaustive:
        tuples = [()]
        for dom in domains:
            tuples = [t + (x,) for t in tuples for x in dom]
    else:
        rng = random.Random(seed)
        tuples = [
            tuple(rng.choice(dom) for dom in domains) for _ in range(sample_budget)
        ]
    checked = 0
    for tup in tuples:
        residual = check(*tup)
        checked += 1
        if not residual.is_zero():
            return AuditReport(name, _gname(G), checked, False, _counterexample(tup, residual))
    return AuditReport(name, _gname(G), checked, True)


# -- universal expansion audits ------------------------------------------------


def audit_bracket_expansions(
    G: Group, sample_budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0
) -> AuditReport:
    """Check the three expansion forms of generator brackets.

    For arbitrary g, h and involutions x, y:

        [g + g^-1, h + h^-1] = gh - (gh)^-1 + gh^-1 - (gh^-1)^-1
                               + g^-1 h - (g^-1 h)^-1 + (hg)^-1 - hg
        [g + g^-1, x] = gx - (gx)^-1 + g^-1 x - (g^-1 x)^-1
        [x, y] = xy - (xy)^-1

    These are ring identities, valid in every group.
    """
    everyone = list(G.elements())
    involutions = list(G.involution_set())

    def diff(G, a: int) -> RingElement:
        return _elem(G, a) - _elem(G, G.inv(a))

    def check_pair(g: int, h: int) -> RingElement:
        lhs = lie_bracket(_plus(G, g), _plus(G, h))
        gi = G.inv(g)
        rhs = (
            diff(G, G.mul(g, h))
            + diff(G, G.mul(g, G.inv(h)))
            + diff(G, G.mul(gi, h))
            - diff(G, G.mul(h, g))
        )
        return lhs - rhs

    def check_mixed(g: int, x: int) -> RingElement:
        lhs = lie_bracket(_plus(G, g), _elem(G, x))
        rhs = diff(G, G.mul(g, x)) + diff(G, G.mul(G.inv(g), x))
        return lhs - rhs

    def check_involutions(x: int, y: int) -> RingElement:
        lhs = lie_bracket(_elem(G, x), _elem(G, y))
        return lhs - diff(G, G.mul(x, y))

    r1 = _run_tuples("expansions/pair", G, [everyone, everyone], sample_budget, seed, check_pair)
    if not r1.passed:
        return AuditReport("expansions", r1.group_name, r1.tuples_checked, False, r1.counterexample)
    r2 = _run_tuples("expansions/mixed", G, [everyone, involutions], sample_budget, seed, check_mixed)
    if not r2.passed:
        return AuditReport(
            "expansions", r2.group_name, r1.tuples_checked + r2.tuples_checked, False, r2.counterexample
        )
    r3 = _run_tuples(
        "expansions/involutions", G, [involutions, involutions], sample_budget, seed, check_involutions
    )
    total = r1.tuples_checked + r2.tuples_checked + r3.tuples_checked
    return AuditReport("expansions", r3.group_name, total, r3.passed, r3.counterexample)


def audit_involutions_expansion(
    G: Group, sample_budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0
) -> AuditReport:
    """Check the 8-term expansion of [[x1, x2], [x2, x3]] for involutions.

    For x1, x2, x3 with xi^2 = 1 the double bracket always expands to

        x1x3 + x2x1x3x2 + x2x3x2x1 + x3x2x1x2
        - x3x1 - x1x2x3x2 - x2x1x2x3 - x2x3x1x2

    whether or not it vanishes (vanishing is a separate, hypothesis-bound
    question).
    """
    involutions = list(G.involution_set())

    def word(*els: int) -> RingElement:
        acc = 0
        for e in els:
            acc = G.mul(acc, e)
        return _elem(G, acc)

    def check(x1: int, x2: int, x3: int) -> RingElement:
        lhs = lie_bracket(
            lie_bracket(_elem(G, x1), _elem(G, x2)),
            lie_bracket(_elem(G, x2), _elem(G, x3)),
        )
        rhs = (
            word(x1, x3)
            + word(x2, x1, x3, x2)
            + word(x2, x3, x2, x1)
            + word(x3, x2, x1, x2)
            - word(x3, x1)
            - word(x1, x2, x3, x2)
            - word(x2, x1, x2, x3)
            - word(x2, x3, x1, x2)
        )
        return lhs - rhs

    return _run_tuples(
        "involution-triple-expansion",
        G,
        [involutions, involutions, involutions],
        sample_budget,
        seed,
        check,
    )


# -- hypothesis-gated audits -----------------------------------------------------


def _verify_inverting_subgroup(G: Group, B: Subgroup) -> None:
    if B.parent is not G:
        raise HypothesisViolated("subgroup does not belong to this group")
    if not B.is_abelian():
        raise HypothesisViolated("B is not abelian")
    if B.index() != 2:
        raise HypothesisViolated(f"B has index {B.index()}, not 2")
    inv = G.inverse
    if not any(
        G.element_order(x) == 4
        and all(G.conj(b, x) == int(inv[b]) for b in B.elements)
        for x in G.elements()
    ):
        raise HypothesisViolated("no element of order 4 inverts B")


def audit_condition3_formula(
    G: Group,
    B: Optional[Subgroup] = None,
    outside_pairs: Optional[list[tuple[int, int]]] = None,
    sample_budget: int = DEFAULT_SAMPLE_BUDGET,
    seed: int = 0,
) -> AuditReport:
    """Check the closed form for brackets of elements outside B.

    With B abelian of index 2, inverted by an order-4 element, and
    g, h outside B with h = b g:

        [g + g^-1, h + h^-1] = (g + g^-1) b (g + g^-1) - b (g + g^-1)^2
                             = 2 (b^-1 - b)(1 + g^2)

    When B is omitted the first qualifying subgroup is used.
    """
    if B is None:
        for cand in index2_subgroups(G):
            if not cand.is_abelian():
                continue
            try:
                _verify_inverting_subgroup(G, cand)
            except HypothesisViolated:
                continue
            B = cand
            break
        if B is None:
            raise HypothesisViolated("no abelian index-2 subgroup is inverted by an order-4 element")
    else:
        _verify_inverting_subgroup(G, B)

    members = set(B.elements)
    outside = [g for g in G.elements() if g not in members]

    def check(g: int, h: int) -> RingElement:
        b = G.mul(h, G.inv(g))
        pg = _plus(G, g)
        be = _elem(G, b)
        lhs = lie_bracket(pg, _plus(G, h))
        mid = pg * be * pg - be * pg * pg
        rhs = (_elem(G, G.inv(b)) - be) * (RingElement.one(G) + _elem(G, G.mul(g, g)))
        rhs = rhs.scale(2)
        if lhs != mid:
            return lhs - mid
        return lhs - rhs

    if outside_pairs is not None:
        checked = 0
        for g, h in outside_pairs:
            if g in members or h in members:
                raise HypothesisViolated(f"pair ({g},{h}) is not outside B")
            residual = check(g, h)
            checked += 1
            if not residual.is_zero():
                return AuditReport(
                    "cond3", _gname(G), checked, False, _counterexample((g, h), residual)
                )
        return AuditReport("cond3", _gname(G), checked, True)
    return _run_tuples("cond3", G, [outside, outside], sample_budget, seed, check)


def audit_condition4_identities(
    G: Group, sample_budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0
) -> AuditReport:
    """Check the triple-product law and the bracket closed form for
    groups whose center is the involution set with index 4.

    The quotient by the center is then a four-group; picking
    representatives x, y of two distinct nontrivial cosets, a central u and
    z = u x y, with t the commutator of x and y:

        (x + x^-1)(y + y^-1)(z + z^-1) = (x^2 y^2 + t)(1 + x^2)(1 + y^2) u
        (1 - t) (x + x^-1)(y + y^-1)(z + z^-1) = 0                    (eq2)
        [x + x^-1, y + y^-1] = (1 - t)(x + x^-1)(y + y^-1)            (eq3)

    eq3 is checked for every ordered pair with a nonzero bracket.
    """
    ok, Z = condition4(G)
    if not ok:
        raise HypothesisViolated("center is not the involution set of index 4")

    central = set(Z.elements)
    t_vals = {G.comm(g, h) for g in G.elements() for h in G.elements()} - {0}
    if len(t_vals) != 1:
        raise HypothesisViolated("commutator subgroup is not of order 2")
    t = t_vals.pop()
    one = RingElement.one(G)
    one_minus_t = one - _elem(G, t)

    # partition into cosets of the center; there must be exactly 3 nontrivial
    reps: dict[int, list[int]] = {}
    for g in G.elements():
        r = min(G.mul(g, z) for z in central)
        reps.setdefault(r, []).append(g)
    cosets = [v for k, v in sorted(reps.items()) if k != 0]
    if len(cosets) != 3:
        raise HypothesisViolated("quotient by the center is not a four-group")

    coset_pairs = [(a, b) for a in range(3) for b in range(3) if a != b]
    zlist = sorted(central)

    def check_triple(pair_idx, x: int, y: int, u: int) -> RingElement:
        a, b = coset_pairs[pair_idx]
        x, y = cosets[a][x % len(cosets[a])], cosets[b][y % len(cosets[b])]
        u = zlist[u % len(zlist)]
        z = G.mul(u, G.mul(x, y))
        prod = _plus(G, x) * _plus(G, y) * _plus(G, z)
        x2 = G.mul(x, x)
        y2 = G.mul(y, y)
        closed = (
            (_elem(G, G.mul(x2, y2)) + _elem(G, t))
            * (one + _elem(G, x2))
            * (one + _elem(G, y2))
            * _elem(G, u)
        )
        if prod != closed:
            return prod - closed
        return one_minus_t * prod

    def check_eq3(x: int, y: int) -> RingElement:
        px, py = _plus(G, x), _plus(G, y)
        lhs = lie_bracket(px, py)
        if lhs.is_zero():
            return lhs
        return lhs - one_minus_t * px * py

    m = max(len(c) for c in cosets)
    r1 = _run_tuples(
        "eq2",
        G,
        [range(len(coset_pairs)), range(m), range(m), range(len(zlist))],
        sample_budget,
        seed,
        check_triple,
    )
    everyone = list(G.elements())
    r2 = _run_tuples("eq3", G, [everyone, everyone], sample_budget, seed, check_eq3)
    total = r1.tuples_checked + r2.tuples_checked
    if not r1.passed:
        return AuditReport("eq2+eq3", r1.group_name, total, False, r1.counterexample)
    return AuditReport("eq2+eq3", r2.group_name, total, r2.passed, r2.counterexample)


def audit_eq1_report(G: Group) -> AuditReport:
    """Report-producing version of the antisymmetric-span membership audit.

    Every bracket of symmetric generators must be antisymmetric with support
    disjoint from the involutions; this is the exact membership criterion
    for the integral span of the differences g - g^-1.
    """
    gens = x_plus_generators(G).plus_gens
    involutions = set(G.involution_set())
    checked = 0
    for i, x in enumerate(gens):
        for j, y in enumerate(gens):
            b = lie_bracket(x, y)
            checked += 1
            if not b.is_antisymmetric() or any(g in involutions for g in b.support()):
                return AuditReport(
                    "eq1", _gname(G), checked, False, _counterexample((i, j), b)
                )
    return AuditReport("eq1", _gname(G), checked, True)


# -- structural conformance of the necessity analysis ------------------------------


def lemma_conformance(G: Group, budget: int = 300) -> AuditReport:
    """Check the structural conclusions that must hold for every group with
    Lie metabelian symmetric part and non-commuting antisymmetric part.

    A failure here on a hypothesis-satisfying group indicates a soundness
    bug in the group/ring engines, not a property of the group.  Subchecks
    that have no qualifying tuples report "vacuous".
    """
    if not is_plus_lie_metabelian(G, budget=budget).lie_metabelian:
        raise HypothesisViolated("symmetric part is not Lie metabelian")
    if is_check_commutative(G):
        raise HypothesisViolated("antisymmetric generators commute")

    inv = G.inverse
    involutions = list(G.involution_set())
    A = G.generated_subgroup(involutions)
    B = G.generated_subgroup(g for g in G.elements() if G.element_order(g) != 4)
    Z = G.center()
    exponent = G.exponent()

    details: dict[str, str] = {}
    failures: list[dict] = []
    checked = 0

    def record(name: str, ok: bool, info: Optional[dict] = None, vacuous: bool = False):
        details[name] = "vacuous" if vacuous else ("pass" if ok else "fail")
        if not ok and not vacuous:
            failures.append({"check": name, **(info or {})})

    # A is generated by involutions: every element splits as a 2-involution product
    products = {G.mul(x, y) for x in involutions for y in involutions}
    bad = [a for a in A.elements if a not in products]
    checked += A.order
    record("A_two_involution_products", not bad, {"tuple": bad[:1]})

    # the differences a - a^-1 over A commute
    diffs = [
        RingElement(G, {a: 1, int(inv[a]): -1})
        for a in A.elements
        if a < int(inv[a])
    ]
    ok = True
    info = None
    for i in range(len(diffs)):
        for j in range(i + 1, len(diffs)):
            checked += 1
            r = lie_bracket(diffs[i], diffs[j])
            if not r.is_zero():
                ok, info = False, _counterexample((i, j), r)
                break
        if not ok:
            break
    record("A_differences_commute", ok, info)

    # each x either centralises A or has x^2 in A
    amem = set(A.elements)
    bad = [
        x
        for x in G.elements()
        if any(G.comm(x, a) != 0 for a in A.elements) and G.mul(x, x) not in amem
    ]
    checked += G.order
    record("A_centralised_or_square_in_A", not bad, {"tuple": bad[:1]})

    record("A_abelian", A.is_abelian())
    checked += A.order * (A.order - 1) // 2

    # qualifying (a, x, y) triples: a in A not commuting with either x or y
    lemma5_ok, lemma5_info, lemma5_seen = True, None, False
    for a in A.elements:
        noncomm = [x for x in G.elements() if G.comm(a, x) != 0]
        for x in noncomm:
            for y in noncomm:
                lemma5_seen = True
                checked += 1
                t = G.comm(x, y)
                conds = (
                    G.element_order(x) == 4
                    and G.element_order(y) == 4
                    and G.comm(G.mul(x, x), y) == 0
                    and G.comm(x, G.mul(y, y)) == 0
                    and G.mul(
                        G.mul(G.mul(a, G.conj(a, x)), G.conj(a, y)),
                        G.conj(a, G.mul(x, y)),
                    )
                    == 0
                    and t in amem
                )
                if not conds:
                    lemma5_ok, lemma5_info = False, {"tuple": [a, x, y]}
                    break
            if not lemma5_ok:
                break
        if not lemma5_ok:
            break
    record("noncentral_A_pairs", lemma5_ok, lemma5_info, vacuous=not lemma5_seen)

    zmem = set(Z.elements)
    bad = [a for a in A.elements if a not in zmem]
    checked += A.order
    record("A_central", not bad, {"tuple": bad[:1]})

    record("B_abelian", B.is_abelian())
    checked += B.order * (B.order - 1) // 2

    if exponent != 4:
        bmem = set(B.elements)
        ok = B.index() == 2
        info = {"index": B.index()}
        if ok:
            bad = [
                (x, b)
                for x in G.elements()
                if x not in bmem
                for b in B.elements
                if G.conj(b, x) != int(inv[b])
            ]
            checked += (G.order - B.order) * B.order
            ok, info = not bad, {"tuple": list(bad[:1])}
        record("B_index2_inverted_outside", ok, info)
    else:
        record("center_equals_A", set(Z.elements) == amem)
        checked += G.order

        seeds = {
            G.mul(x, y)
            for x in G.elements()
            if G.mul(x, x) != 0
            for y in G.elements()
            if G.mul(y, y) != 0 and G.comm(x, y) == 0
        }
        C = G.generated_subgroup(seeds)
        cmem = set(C.elements)
        checked += G.order * G.order
        record("C_contains_center", zmem <= cmem)
        record("C_abelian", C.is_abelian())
        bad = [
            (c, x)
            for x in G.elements()
            if x not in cmem
            for c in C.elements
            if G.conj(c, x) != int(inv[c])
        ]
        checked += (G.order - C.order) * C.order
        record("C_inverted_outside", not bad, {"tuple": list(bad[:1])})
        record(
            "C_index",
            C.index() == 2 or (cmem == zmem and C.index() == 4),
            {"index": C.index()},
        )

    passed = all(v != "fail" for v in details.values())
    return AuditReport(
        "lemmas",
        _gname(G),
        checked,
        passed,
        failures[0] if failures else None,
        details,
    )
