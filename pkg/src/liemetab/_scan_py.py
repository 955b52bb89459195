"""Pure-Python bracket-scan kernel.

Reference implementation of the hot loops behind the brute-force checks.
`liemetab._scan_c` is a compiled twin with identical semantics; both must
return identical tuples for identical inputs (tests enforce this).

Generators are passed as parallel lists of index/coefficient arrays.  A
bracket is canonicalised by sorting its support and flipping the overall
sign so the coefficient of the least support element is positive; brackets
are then deduplicated exactly.  Iteration is in ascending generator-pair
order, which fixes the reported witness.
"""

from __future__ import annotations

KERNEL_NAME = "python"


def _as_lists(supports, coeffs):
    return [list(map(int, s)) for s in supports], [list(map(int, c)) for c in coeffs]


def _bracket(rows, su, cu, sv, cv):
    """Sparse [u, v] = uv - vu as (sorted support tuple, coeff tuple)."""
    acc: dict[int, int] = {}
    for p, cp in zip(su, cu):
        row_p = rows[p]
        for q, cq in zip(sv, cv):
            c = cp * cq
            k = row_p[q]
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                del acc[k]
            k = rows[q][p]
            s = acc.get(k, 0) - c
            if s:
                acc[k] = s
            else:
                del acc[k]
    if not acc:
        return (), ()
    support = tuple(sorted(acc))
    coeff = tuple(acc[k] for k in support)
    if coeff[0] < 0:
        coeff = tuple(-c for c in coeff)
    return support, coeff


def _commutes(rows, su, cu, sv, cv) -> bool:
    support, _ = _bracket(rows, su, cu, sv, cv)
    return not support


def lie_metabelian_scan(table, inverse, supports, coeffs):
    """Scan all generator brackets for a non-commuting pair of brackets.

    Returns ``(ok, witness, nonzero_bracket_count, deduped_count)`` where
    ``witness`` is a generator-index quadruple ``(a, b, c, d)`` such that the
    double bracket of generators a,b against c,d is nonzero, or None.
    """
    rows = table.tolist()
    supports, coeffs = _as_lists(supports, coeffs)
    m = len(supports)

    brackets = []
    seen: dict[tuple, int] = {}
    nonzero = 0
    for i in range(m):
        si, ci = supports[i], coeffs[i]
        for j in range(i + 1, m):
            support, coeff = _bracket(rows, si, ci, supports[j], coeffs[j])
            if not support:
                continue
            nonzero += 1
            key = (support, coeff)
            if key not in seen:
                seen[key] = len(brackets)
                brackets.append((list(support), list(coeff), i, j))

    for k in range(len(brackets)):
        sk, ck, ak, bk = brackets[k]
        for l in range(k + 1, len(brackets)):
            sl, cl, al, bl = brackets[l]
            if not _commutes(rows, sk, ck, sl, cl):
                return False, (ak, bk, al, bl), nonzero, len(brackets)
    return True, None, nonzero, len(brackets)


def pairwise_commute(table, supports, coeffs):
    """Do all generators commute pairwise?  Returns (ok, offending pair)."""
    rows = table.tolist()
    supports, coeffs = _as_lists(supports, coeffs)
    m = len(supports)
    for i in range(m):
        for j in range(i + 1, m):
            if not _commutes(rows, supports[i], coeffs[i], supports[j], coeffs[j]):
                return False, (i, j)
    return True, None
