# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled sweep kernel for counting fixed row/column-sum matrices.

Same contract as ``lambdakit._kernel_py``, which stays the fallback
when this extension is not built: exhaustive row-by-row backtracking
over remaining column capacities, with columns whose capacity equals
the number of unfilled rows forced into every later row.  Counts are
accumulated in C integers (the sweeps are infeasible long before they
could overflow 64 bits).
"""

from lambdakit._kernel_py import iter_row_masks  # streaming stays shared

BACKEND = "cython"

cdef enum:
    MAXN = 64
    MODE_COUNT = 0
    MODE_SPLIT = 1
    MODE_CENSUS = 2


cdef void _sweep(int row, int n, int k, bint corner_only, int mode,
                 int* caps, unsigned long long* row_masks,
                 unsigned long long* acc) noexcept:
    cdef int rem = n - row
    cdef int j, i, s, t, p, q, nf, nfree, need
    cdef unsigned long long last_mask, corner_bit, rs, rt
    cdef int forced[MAXN]
    cdef int free_cols[MAXN]

    if rem == 1:
        # the last row is forced: caps are all 0/1 and sum to k
        if corner_only and caps[n - 1] == 0:
            return
        if mode == MODE_COUNT:
            acc[0] += 1
            return
        if mode == MODE_SPLIT:
            if caps[n - 1]:
                acc[0] += 1
            else:
                acc[1] += 1
            return
        # census of the 2x2 corner pattern (k == 3, corner_only)
        last_mask = 0
        for j in range(n):
            if caps[j]:
                last_mask |= (<unsigned long long>1) << j
        row_masks[row] = last_mask
        corner_bit = (<unsigned long long>1) << (n - 1)
        s = -1
        t = -1
        for i in range(n - 1):
            if row_masks[i] & corner_bit:
                if s < 0:
                    s = i
                else:
                    t = i
        p = -1
        q = -1
        for j in range(n - 1):
            if (last_mask >> j) & 1:
                if p < 0:
                    p = j
                else:
                    q = j
        if t < 0 or q < 0:
            return
        rs = row_masks[s]
        rt = row_masks[t]
        acc[(((rs >> p) & 1) << 3) | (((rs >> q) & 1) << 2)
            | (((rt >> p) & 1) << 1) | ((rt >> q) & 1)] += 1
        return

    if corner_only and caps[n - 1] == 0:
        return
    nf = 0
    nfree = 0
    last_mask = 0  # reused as the forced-column mask
    for j in range(n):
        if caps[j] == rem:
            forced[nf] = j
            nf += 1
            last_mask |= (<unsigned long long>1) << j
        elif caps[j] > 0:
            free_cols[nfree] = j
            nfree += 1
    need = k - nf
    if need < 0 or nfree < need:
        return
    for i in range(nf):
        caps[forced[i]] -= 1
    _choose(free_cols, nfree, 0, need, last_mask, row, n, k,
            corner_only, mode, caps, row_masks, acc)
    for i in range(nf):
        caps[forced[i]] += 1


cdef void _choose(int* free_cols, int nfree, int start, int need,
                  unsigned long long mask, int row, int n, int k,
                  bint corner_only, int mode, int* caps,
                  unsigned long long* row_masks,
                  unsigned long long* acc) noexcept:
    cdef int i, j
    if need == 0:
        row_masks[row] = mask
        _sweep(row + 1, n, k, corner_only, mode, caps, row_masks, acc)
        return
    for i in range(start, nfree - need + 1):
        j = free_cols[i]
        caps[j] -= 1
        _choose(free_cols, nfree, i + 1, need - 1,
                mask | ((<unsigned long long>1) << j),
                row, n, k, corner_only, mode, caps, row_masks, acc)
        caps[j] += 1


cdef _run(int n, int k, bint corner_only, int mode, int nacc):
    cdef int caps[MAXN]
    cdef unsigned long long row_masks[MAXN]
    cdef unsigned long long acc[16]
    cdef int j
    if not 1 <= n <= MAXN:
        raise ValueError(f"sweep kernel supports 1 <= n <= {MAXN}, got {n}")
    for j in range(n):
        caps[j] = k
    for j in range(nacc):
        acc[j] = 0
    _sweep(0, n, k, corner_only, mode, caps, row_masks, acc)
    return [acc[j] for j in range(nacc)]


def count_all(n, k):
    """Number of n x n 0-1 matrices with exactly k ones per row and column."""
    if k == 0:
        return 1
    if k > n:
        return 0
    return _run(n, k, False, MODE_COUNT, 1)[0]


def count_split(n, k):
    """(plus, minus): the count split by bottom-right entry 1 / 0."""
    if k == 0:
        return (0, 1)
    if k > n:
        return (0, 0)
    plus, minus = _run(n, k, False, MODE_SPLIT, 2)
    return (plus, minus)


def corner_census3(n):
    """Tally of the sixteen 2x2 corner-submatrix bit patterns over all
    k = 3 matrices with a 1 in the bottom-right corner.

    Index = top-left<<3 | top-right<<2 | bottom-left<<1 | bottom-right.
    """
    return _run(n, 3, True, MODE_CENSUS, 16)
