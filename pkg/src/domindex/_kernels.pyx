# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Twin of ``_pykern`` (see its docstring for the kernel contract). Same
candidate order, same pruning, same results; restricted to graphs with
at most 64 vertices so every mask fits one machine word.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND_NAME = "compiled"

DEF MAXN = 64


cdef struct DDState:
    int n
    int k
    int v
    int depth
    u64 full
    u64 closed[MAXN]
    int chosen[MAXN]
    u64 priv[MAXN]        # parallel to chosen


cdef int _dfs(DDState *s, int last, u64 cover) nogil:
    cdef u64 unc, gain
    cdef int x, j, slots, need, top_sum, rounds, best, best_i, blocked
    cdef int caps[MAXN]
    cdef u64 saved[MAXN]

    if cover == s.full:
        return 1
    slots = s.k - s.depth
    if slots <= 0:
        return 0
    unc = s.full & ~cover
    need = __builtin_popcountll(unc)
    for x in range(s.n):
        caps[x] = __builtin_popcountll(s.closed[x] & unc)
    # admissible budget bound: sum of the `slots` largest coverages
    top_sum = 0
    rounds = slots if slots < s.n else s.n
    for j in range(rounds):
        best = -1
        best_i = 0
        for x in range(s.n):
            if caps[x] > best:
                best = caps[x]
                best_i = x
        if best <= 0:
            break
        top_sum += best
        caps[best_i] = -1
    if top_sum < need:
        return 0

    for x in range(last + 1, s.n):
        if x == s.v:
            continue
        gain = s.closed[x] & ~cover
        if gain == 0:
            continue
        blocked = 0
        for j in range(s.depth):
            if s.priv[j] & ~s.closed[x] == 0:
                blocked = 1
                break
        if blocked:
            continue
        for j in range(s.depth):
            saved[j] = s.priv[j]
            s.priv[j] = s.priv[j] & ~s.closed[x]
        s.chosen[s.depth] = x
        s.priv[s.depth] = gain
        s.depth += 1
        if _dfs(s, x, cover | s.closed[x]):
            return 1
        s.depth -= 1
        for j in range(s.depth):
            s.priv[j] = saved[j]
    return 0


def solve_dd(closed, int v, int k_lo, int k_hi):
    cdef int n = len(closed)
    if n < 1 or n > MAXN:
        raise ValueError(f"compiled kernel handles 1..{MAXN} vertices, got {n}")
    cdef DDState s
    cdef int i, k, lo
    cdef u64 cover, mask
    s.n = n
    s.v = v
    s.full = (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
    for i in range(n):
        s.closed[i] = closed[i]
    lo = k_lo
    if v >= 0 and lo < 1:
        lo = 1
    if lo < 0:
        lo = 0
    for k in range(lo, k_hi + 1):
        s.k = k
        s.depth = 0
        cover = 0
        if v >= 0:
            s.chosen[0] = v
            s.priv[0] = s.closed[v]
            s.depth = 1
            cover = s.closed[v]
        if _dfs(&s, -1, cover):
            mask = 0
            for i in range(s.depth):
                mask |= <u64>1 << s.chosen[i]
            return s.depth, mask
    return None


cdef u64 *_cover_table(closed, int n) except NULL:
    cdef size_t size = <size_t>1 << n
    cdef u64 *cover = <u64 *>malloc(size * sizeof(u64))
    if cover == NULL:
        raise MemoryError()
    cdef u64 cl[MAXN]
    cdef int i
    cdef size_t m
    for i in range(n):
        cl[i] = closed[i]
    cover[0] = 0
    for m in range(1, size):
        cover[m] = cover[m & (m - 1)] | cl[__builtin_ctzll(m)]
    return cover


def scan_minimal_ds(closed):
    cdef int n = len(closed)
    if n < 1 or n > 26:
        raise ValueError(f"subset scan handles 1..26 vertices, got {n}")
    cdef u64 full = (<u64>1 << n) - 1
    cdef u64 *cover = _cover_table(closed, n)
    cdef u64 cl[MAXN]
    cdef int i, minimal
    cdef size_t m, size = <size_t>1 << n
    cdef u64 rest, low
    for i in range(n):
        cl[i] = closed[i]
    out = []
    try:
        for m in range(size):
            if cover[m] != full:
                continue
            rest = m
            minimal = 1
            while rest:
                low = rest & (0 - rest)
                rest ^= low
                if cl[__builtin_ctzll(low)] & ~cover[m ^ low] == 0:
                    minimal = 0
                    break
            if minimal:
                out.append(<object>m)
    finally:
        free(cover)
    out.sort(key=_card_key)
    return out


def _card_key(m):
    return (m.bit_count(), m)


def scan_irredundance(closed):
    cdef int n = len(closed)
    if n < 1 or n > 26:
        raise ValueError(f"subset scan handles 1..26 vertices, got {n}")
    cdef u64 *cover = _cover_table(closed, n)
    cdef unsigned char *irr = NULL
    cdef u64 cl[MAXN]
    cdef int i, c, ok, best_ir, lo, maximal, x
    cdef size_t m, size = <size_t>1 << n
    cdef u64 rest, low, bit
    for i in range(n):
        cl[i] = closed[i]
    try:
        irr = <unsigned char *>malloc(size)
        if irr == NULL:
            raise MemoryError()
        irr[0] = 1
        best_ir = 0
        for m in range(1, size):
            rest = m
            ok = 1
            while rest:
                low = rest & (0 - rest)
                rest ^= low
                if cl[__builtin_ctzll(low)] & ~cover[m ^ low] == 0:
                    ok = 0
                    break
            irr[m] = ok
            if ok:
                c = __builtin_popcountll(m)
                if c > best_ir:
                    best_ir = c
        lo = n + 1
        for m in range(size):
            if not irr[m]:
                continue
            c = __builtin_popcountll(m)
            if c >= lo:
                continue
            maximal = 1
            for x in range(n):
                bit = <u64>1 << x
                if m & bit:
                    continue
                if irr[m | bit]:
                    maximal = 0
                    break
            if maximal:
                lo = c
        return lo, best_ir
    finally:
        free(cover)
        if irr != NULL:
            free(irr)
