# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the contracts."""
import numpy as np
cimport numpy as cnp

cnp.import_array()

cdef extern from *:
    """
    static inline int hk_add(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    static inline int hk_sub(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    static inline int hk_mul(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    """
    int hk_add(long long a, long long b, long long *r) nogil
    int hk_sub(long long a, long long b, long long *r) nogil
    int hk_mul(long long a, long long b, long long *r) nogil

ctypedef long long i64
ctypedef int i32


cdef inline Py_ssize_t _find(const i32[:] ys, i32 y) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = ys.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if ys[mid] < y:
            lo = mid + 1
        else:
            hi = mid
    if lo < ys.shape[0] and ys[lo] == y:
        return lo
    return -1


def interval_union(const i32[:] ys, const i32[:] mul_s):
    cdef Py_ssize_t n = ys.shape[0], a
    cdef cnp.ndarray[i32, ndim=1] both = np.empty(2 * n, dtype=np.int32)
    for a in range(n):
        both[a] = ys[a]
        both[n + a] = mul_s[ys[a]]
    return np.unique(both)


def kl_row(const i32[:] ys_w, const i32[:] mul_s, const i32[:] lengths, int lw,
           v_row, list z_rows, const i32[:] z_shift, const i64[:] z_mu):
    cdef const i32[:] v_ys = v_row[0]
    cdef const i32[:] v_offs = v_row[1]
    cdef const i64[:] v_co = v_row[2]
    cdef Py_ssize_t n = ys_w.shape[0], nz = len(z_rows)
    cdef int width = lw // 2 + 2
    cdef cnp.ndarray[i64, ndim=2] tmp = np.zeros((n, width), dtype=np.int64)
    cdef cnp.ndarray[i32, ndim=1] deg = np.full(n, -2, dtype=np.int32)
    cdef cnp.ndarray[i32, ndim=1] src = np.full(n, -1, dtype=np.int32)
    cdef i64[:, :] T = tmp
    cdef i32[:] D = deg
    cdef i32[:] SRC = src
    cdef Py_ssize_t a, b, t, d, m
    cdef i32 y, sy
    cdef int ovf = 0, sh
    cdef i64 r, prod, mu
    cdef const i32[:] z_ys
    cdef const i32[:] z_offs
    cdef const i64[:] z_co
    # per-z cursor into z_ys: ys_w is sorted, so a merge walk suffices
    cdef cnp.ndarray[cnp.intp_t, ndim=1] cur = np.zeros(max(nz, 1), dtype=np.intp)
    zy = [zr[0] for zr in z_rows]
    zo = [zr[1] for zr in z_rows]
    zc = [zr[2] for zr in z_rows]
    for a in range(n):
        y = ys_w[a]
        sy = mul_s[y]
        if lengths[sy] > lengths[y]:
            continue
        b = _find(v_ys, sy)
        if b >= 0:
            for d in range(v_offs[b + 1] - v_offs[b]):
                ovf |= hk_add(T[a, d], v_co[v_offs[b] + d], &r)
                T[a, d] = r
        b = _find(v_ys, y)
        if b >= 0:
            for d in range(v_offs[b + 1] - v_offs[b]):
                ovf |= hk_add(T[a, d + 1], v_co[v_offs[b] + d], &r)
                T[a, d + 1] = r
        for t in range(nz):
            z_ys = zy[t]
            m = cur[t]
            while m < z_ys.shape[0] and z_ys[m] < y:
                m += 1
            cur[t] = m
            if m < z_ys.shape[0] and z_ys[m] == y:
                z_offs = zo[t]
                z_co = zc[t]
                sh = z_shift[t]
                mu = z_mu[t]
                for d in range(z_offs[m + 1] - z_offs[m]):
                    ovf |= hk_mul(mu, z_co[z_offs[m] + d], &prod)
                    ovf |= hk_sub(T[a, d + sh], prod, &r)
                    T[a, d + sh] = r
        D[a] = -1
        for d in range(width - 1, -1, -1):
            if T[a, d] != 0:
                D[a] = d
                break
    if ovf:
        raise OverflowError("KL coefficient exceeds int64")
    for a in range(n):
        if D[a] == -2:
            b = _find(ys_w, mul_s[ys_w[a]])
            SRC[a] = b
            D[a] = D[b]
    cdef cnp.ndarray[i32, ndim=1] offs = np.empty(n + 1, dtype=np.int32)
    cdef i32[:] O = offs
    O[0] = 0
    for a in range(n):
        O[a + 1] = O[a] + D[a] + 1
    cdef cnp.ndarray[i64, ndim=1] coefs = np.empty(O[n], dtype=np.int64)
    cdef i64[:] C = coefs
    for a in range(n):
        b = SRC[a] if SRC[a] >= 0 else a
        for d in range(D[a] + 1):
            C[O[a] + d] = T[b, d]
    return offs, coefs


def mu_from_row(const i32[:] ys, const i32[:] offs, const i64[:] coefs, const i32[:] lengths, int lw):
    zs, mus = [], []
    cdef Py_ssize_t a
    cdef int gap, d
    for a in range(ys.shape[0]):
        gap = lw - lengths[ys[a]]
        if gap % 2 == 0:
            continue
        d = (gap - 1) // 2
        if d < offs[a + 1] - offs[a] and coefs[offs[a] + d] != 0:
            zs.append(ys[a])
            mus.append(coefs[offs[a] + d])
    return np.array(zs, dtype=np.int32), np.array(mus, dtype=np.int64)


def fold_gen(const i32[:] ids, const i64[:, :] coefs, const i32[:] mul_s, const i32[:] lengths, i32[:] slot):
    cdef Py_ssize_t n = ids.shape[0], width = coefs.shape[1], a, e, cnt = 0, r
    cdef cnp.ndarray[i32, ndim=1] out_ids = np.empty(2 * n, dtype=np.int32)
    cdef cnp.ndarray[i64, ndim=2] out = np.zeros((2 * n, width), dtype=np.int64)
    cdef i32[:] OI = out_ids
    cdef i64[:, :] OUT = out
    cdef i32 w, ws
    cdef int ovf = 0, bad = 0
    cdef i64 res
    for a in range(n):
        w = ids[a]
        ws = mul_s[w]
        if ws < 0:
            bad = 1
            break
        if slot[ws] < 0:
            slot[ws] = cnt
            OI[cnt] = ws
            cnt += 1
        r = slot[ws]
        for e in range(width):
            ovf |= hk_add(OUT[r, e], coefs[a, e], &res)
            OUT[r, e] = res
        if lengths[ws] < lengths[w]:
            if coefs[a, 0] != 0 or coefs[a, width - 1] != 0:
                bad = 2
                break
            if slot[w] < 0:
                slot[w] = cnt
                OI[cnt] = w
                cnt += 1
            r = slot[w]
            for e in range(width - 1):
                ovf |= hk_add(OUT[r, e + 1], coefs[a, e], &res)
                OUT[r, e + 1] = res
            for e in range(1, width):
                ovf |= hk_sub(OUT[r, e - 1], coefs[a, e], &res)
                OUT[r, e - 1] = res
    for a in range(cnt):
        slot[OI[a]] = -1
    if bad == 1:
        raise IndexError("ball too small for this product")
    if bad == 2:
        raise OverflowError("Laurent exponent out of range")
    if ovf:
        raise OverflowError("coefficient exceeds int64")
    nz = np.flatnonzero(out[:cnt].any(axis=1))
    sel = out_ids[nz]
    order = np.argsort(sel, kind="stable")
    return sel[order].astype(np.int32), out[nz[order]]


def accumulate(i64[:, :] acc, const i32[:] ids, const i64[:, :] coefs, const i32[:] q_exps, const i64[:] q_cs):
    cdef Py_ssize_t n = ids.shape[0], width = coefs.shape[1], a, e, t, f
    cdef Py_ssize_t nq = q_exps.shape[0]
    cdef int ovf = 0, bad = 0
    cdef i64 c, prod, res
    cdef i32 k
    for a in range(n):
        k = ids[a]
        for e in range(width):
            c = coefs[a, e]
            if c == 0:
                continue
            for t in range(nq):
                f = e + q_exps[t]
                if f < 0 or f >= width:
                    bad = 1
                    continue
                ovf |= hk_mul(q_cs[t], c, &prod)
                ovf |= hk_add(acc[k, f], prod, &res)
                acc[k, f] = res
    if bad:
        raise OverflowError("Laurent exponent out of range")
    if ovf:
        raise OverflowError("coefficient exceeds int64")


def row_to_dense(const i32[:] ys, const i32[:] offs, const i64[:] coefs, const i32[:] lengths, int lw, int K):
    cdef Py_ssize_t n = ys.shape[0], a, d
    cdef cnp.ndarray[i64, ndim=2] out = np.zeros((n, 2 * K + 1), dtype=np.int64)
    cdef i64[:, :] O = out
    cdef int base
    for a in range(n):
        base = K + lengths[ys[a]] - lw
        for d in range(offs[a + 1] - offs[a]):
            O[a, base + 2 * d] = coefs[offs[a] + d]
    return out


def subtract_expansion(i64[:, :] acc, const i64[:] h, const i32[:] ys, const i32[:] offs,
                       const i64[:] coefs, const i32[:] lengths, int lz):
    cdef Py_ssize_t width = acc.shape[1], a, d, e, f, nh = 0
    cdef int ovf = 0, bad = 0, base
    cdef i64 p, prod, res
    cdef i32 y
    cdef cnp.ndarray[cnp.intp_t, ndim=1] hidx = np.flatnonzero(np.asarray(h))
    cdef cnp.intp_t[:] HI = hidx
    nh = hidx.shape[0]
    for a in range(ys.shape[0]):
        y = ys[a]
        base = lengths[y] - lz
        for d in range(offs[a + 1] - offs[a]):
            p = coefs[offs[a] + d]
            if p == 0:
                continue
            for e in range(nh):
                f = HI[e] + base + 2 * d
                if f < 0 or f >= width:
                    bad = 1
                    continue
                ovf |= hk_mul(h[HI[e]], p, &prod)
                ovf |= hk_sub(acc[y, f], prod, &res)
                acc[y, f] = res
    if bad:
        raise OverflowError("Laurent exponent out of range")
    if ovf:
        raise OverflowError("coefficient exceeds int64")


def prev_nonzero(const i64[:, :] acc, Py_ssize_t start):
    cdef Py_ssize_t k, e, width = acc.shape[1]
    for k in range(start - 1, -1, -1):
        for e in range(width):
            if acc[k, e] != 0:
                return k
    return -1
