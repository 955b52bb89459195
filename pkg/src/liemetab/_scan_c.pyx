# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bracket-scan kernel; a drop-in twin of ``liemetab._scan_py``.

Coefficients are carried in C int64.  That is exact for the generator sets
this kernel is used on (unit coefficients, double products bounded far below
2**63); callers with larger coefficients must use the pure kernel.
"""

import numpy as np

KERNEL_NAME = "cython"


cdef int _accumulate(const int* tab, int n,
                     const int* su, const long long* cu, int nu,
                     const int* sv, const long long* cv, int nv,
                     long long* acc, char* mark, int* touched) noexcept nogil:
    """Accumulate uv - vu into acc; returns the number of touched slots."""
    cdef int nt = 0, a, b, k
    cdef long long c
    for a in range(nu):
        for b in range(nv):
            c = cu[a] * cv[b]
            k = tab[su[a] * n + sv[b]]
            if not mark[k]:
                mark[k] = 1
                touched[nt] = k
                nt += 1
            acc[k] += c
            k = tab[sv[b] * n + su[a]]
            if not mark[k]:
                mark[k] = 1
                touched[nt] = k
                nt += 1
            acc[k] -= c
    return nt


cdef int _extract_sorted(long long* acc, char* mark, int* touched, int nt,
                         int* out_s, long long* out_c) noexcept nogil:
    """Drain scratch into a sign-canonical sorted sparse vector; returns size."""
    cdef int i, j, k, m = 0
    cdef long long v
    for i in range(nt):
        k = touched[i]
        v = acc[k]
        if v != 0:
            out_s[m] = k
            out_c[m] = v
            m += 1
        acc[k] = 0
        mark[k] = 0
    for i in range(1, m):          # insertion sort; supports are tiny
        k = out_s[i]
        v = out_c[i]
        j = i - 1
        while j >= 0 and out_s[j] > k:
            out_s[j + 1] = out_s[j]
            out_c[j + 1] = out_c[j]
            j -= 1
        out_s[j + 1] = k
        out_c[j + 1] = v
    if m > 0 and out_c[0] < 0:
        for i in range(m):
            out_c[i] = -out_c[i]
    return m


def lie_metabelian_scan(table, inverse, supports, coeffs):
    """Same contract as ``_scan_py.lie_metabelian_scan``."""
    cdef int m = len(supports)
    if m < 2:
        return True, None, 0, 0

    tab_np = np.ascontiguousarray(table, dtype=np.int32)
    cdef const int[:, ::1] tab_mv = tab_np
    cdef const int* tab = &tab_mv[0, 0]
    cdef int n = tab_mv.shape[0]

    glen_np = np.array([len(s) for s in supports], dtype=np.int32)
    goff_np = np.zeros(m + 1, dtype=np.int64)
    goff_np[1:] = np.cumsum(glen_np)
    gs_np = np.ascontiguousarray(np.concatenate(supports), dtype=np.int32)
    gc_np = np.ascontiguousarray(np.concatenate(coeffs), dtype=np.int64)
    cdef const int[::1] gs = gs_np
    cdef const long long[::1] gc = gc_np
    cdef const int[::1] glen = glen_np
    cdef const long long[::1] goff = goff_np

    acc_np = np.zeros(n, dtype=np.int64)
    mark_np = np.zeros(n, dtype=np.int8)
    touched_np = np.zeros(n, dtype=np.int32)
    bs_np = np.zeros(n, dtype=np.int32)
    bc_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] acc = acc_np
    cdef char[::1] mark = mark_np
    cdef int[::1] touched = touched_np
    cdef int[::1] bs = bs_np
    cdef long long[::1] bc = bc_np

    # phase 1: canonical deduplicated nonzero brackets, ascending (i, j)
    seen = {}
    kept_s = []
    kept_c = []
    kept_pairs = []
    cdef int i, j, nt, sz
    cdef int nonzero = 0
    for i in range(m):
        for j in range(i + 1, m):
            nt = _accumulate(tab, n,
                             &gs[goff[i]], &gc[goff[i]], glen[i],
                             &gs[goff[j]], &gc[goff[j]], glen[j],
                             &acc[0], &mark[0], &touched[0])
            sz = _extract_sorted(&acc[0], &mark[0], &touched[0], nt, &bs[0], &bc[0])
            if sz == 0:
                continue
            nonzero += 1
            key = bs_np[:sz].tobytes() + bc_np[:sz].tobytes()
            if key not in seen:
                seen[key] = len(kept_pairs)
                kept_s.append(bs_np[:sz].copy())
                kept_c.append(bc_np[:sz].copy())
                kept_pairs.append((i, j))

    cdef int nb = len(kept_pairs)
    if nb < 2:
        return True, None, nonzero, nb

    blen_np = np.array([len(s) for s in kept_s], dtype=np.int32)
    boff_np = np.zeros(nb + 1, dtype=np.int64)
    boff_np[1:] = np.cumsum(blen_np)
    bflat_s_np = np.ascontiguousarray(np.concatenate(kept_s), dtype=np.int32)
    bflat_c_np = np.ascontiguousarray(np.concatenate(kept_c), dtype=np.int64)
    cdef const int[::1] bflat_s = bflat_s_np
    cdef const long long[::1] bflat_c = bflat_c_np
    cdef const int[::1] blen = blen_np
    cdef const long long[::1] boff = boff_np

    # phase 2: pairwise commutation of the retained brackets
    cdef int k, l
    cdef int bad_k = -1, bad_l = -1
    with nogil:
        for k in range(nb):
            for l in range(k + 1, nb):
                nt = _accumulate(tab, n,
                                 &bflat_s[boff[k]], &bflat_c[boff[k]], blen[k],
                                 &bflat_s[boff[l]], &bflat_c[boff[l]], blen[l],
                                 &acc[0], &mark[0], &touched[0])
                sz = _extract_sorted(&acc[0], &mark[0], &touched[0], nt,
                                     &bs[0], &bc[0])
                if sz != 0:
                    bad_k = k
                    bad_l = l
                    break
            if bad_k >= 0:
                break
    if bad_k >= 0:
        ak, bk = kept_pairs[bad_k]
        al, bl = kept_pairs[bad_l]
        return False, (ak, bk, al, bl), nonzero, nb
    return True, None, nonzero, nb


def pairwise_commute(table, supports, coeffs):
    """Same contract as ``_scan_py.pairwise_commute``."""
    cdef int m = len(supports)
    if m < 2:
        return True, None

    tab_np = np.ascontiguousarray(table, dtype=np.int32)
    cdef const int[:, ::1] tab_mv = tab_np
    cdef const int* tab = &tab_mv[0, 0]
    cdef int n = tab_mv.shape[0]

    glen_np = np.array([len(s) for s in supports], dtype=np.int32)
    goff_np = np.zeros(m + 1, dtype=np.int64)
    goff_np[1:] = np.cumsum(glen_np)
    gs_np = np.ascontiguousarray(np.concatenate(supports), dtype=np.int32)
    gc_np = np.ascontiguousarray(np.concatenate(coeffs), dtype=np.int64)
    cdef const int[::1] gs = gs_np
    cdef const long long[::1] gc = gc_np
    cdef const int[::1] glen = glen_np
    cdef const long long[::1] goff = goff_np

    acc_np = np.zeros(n, dtype=np.int64)
    mark_np = np.zeros(n, dtype=np.int8)
    touched_np = np.zeros(n, dtype=np.int32)
    bs_np = np.zeros(n, dtype=np.int32)
    bc_np = np.zeros(n, dtype=np.int64)
    cdef long long[::1] acc = acc_np
    cdef char[::1] mark = mark_np
    cdef int[::1] touched = touched_np
    cdef int[::1] bs = bs_np
    cdef long long[::1] bc = bc_np

    cdef int i, j, nt, sz
    cdef int bad_i = -1, bad_j = -1
    with nogil:
        for i in range(m):
            for j in range(i + 1, m):
                nt = _accumulate(tab, n,
                                 &gs[goff[i]], &gc[goff[i]], glen[i],
                                 &gs[goff[j]], &gc[goff[j]], glen[j],
                                 &acc[0], &mark[0], &touched[0])
                sz = _extract_sorted(&acc[0], &mark[0], &touched[0], nt,
                                     &bs[0], &bc[0])
                if sz != 0:
                    bad_i = i
                    bad_j = j
                    break
            if bad_i >= 0:
                break
    if bad_i >= 0:
        return False, (bad_i, bad_j)
    return True, None
