"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is not built or when ``HECKE_PURE=1``.  Arithmetic is done on
Python ints; storing a result that does not fit in int64 raises
``OverflowError``.

Conventions shared with the compiled module
-------------------------------------------
* ids index the ball of W' (see ``weylgroup.Ball``); ``lengths[id]``.
* ``mul_s`` is one row of a multiplication table (left or right by s).
* A KL row of ``w`` is ``(ys, offs, coefs)``: sorted ids of [e, w],
  ``P_{ys[a], w}`` has q-coefficients ``coefs[offs[a]:offs[a+1]]``.
* Dense Laurent rows have width ``2*K + 1``; column ``K + e`` holds v^e.
"""
from __future__ import annotations

from bisect import bisect_left

import numpy as np

INT64_MAX = 2**63 - 1


def _check(x: int) -> int:
    if x > INT64_MAX or x < -INT64_MAX - 1:
        raise OverflowError("coefficient exceeds int64")
    return x


def interval_union(ys, mul_s):
    ys_l = ys.tolist()
    ms = mul_s.tolist()
    out = set(ys_l)
    out.update(ms[y] for y in ys_l)
    return np.array(sorted(out), dtype=np.int32)


def _lookup(ys, y):
    a = bisect_left(ys, y)
    if a < len(ys) and ys[a] == y:
        return a
    return -1


def kl_row(ys_w, mul_s, lengths, lw, v_row, z_rows, z_shift, z_mu):
    """Row of P_{y,w} for y in ys_w via the left (or right) recursion.

    ``v_row`` is the row of v = sw; ``z_rows[t]`` is the row of the t-th z
    with mu(z, v) != 0 and sz < z, entering with sign -z_mu[t] and q-shift
    z_shift[t] = (l(w) - l(z)) / 2.
    """
    ys = ys_w.tolist()
    ms = mul_s.tolist()
    ln = lengths.tolist()
    v_ys, v_offs, v_co = (a.tolist() for a in v_row)
    zr = [tuple(a.tolist() for a in r) for r in z_rows]
    zs = list(z_shift.tolist())
    zm = list(z_mu.tolist())
    n = len(ys)
    polys: list = [None] * n
    for a, y in enumerate(ys):
        sy = ms[y]
        if ln[sy] > ln[y]:
            continue
        acc = [0] * (lw // 2 + 2)
        b = _lookup(v_ys, sy)
        if b >= 0:
            for d in range(v_offs[b + 1] - v_offs[b]):
                acc[d] += v_co[v_offs[b] + d]
        b = _lookup(v_ys, y)
        if b >= 0:
            for d in range(v_offs[b + 1] - v_offs[b]):
                acc[d + 1] += v_co[v_offs[b] + d]
        for t, (z_ys, z_offs, z_co) in enumerate(zr):
            b = _lookup(z_ys, y)
            if b >= 0:
                sh, mu = zs[t], zm[t]
                for d in range(z_offs[b + 1] - z_offs[b]):
                    acc[d + sh] -= mu * z_co[z_offs[b] + d]
        while acc and acc[-1] == 0:
            acc.pop()
        polys[a] = acc
    for a, y in enumerate(ys):
        if polys[a] is None:
            polys[a] = polys[_lookup(ys, ms[y])]
    offs = [0]
    flat: list = []
    for p in polys:
        flat.extend(_check(c) for c in p)
        offs.append(len(flat))
    return np.array(offs, dtype=np.int32), np.array(flat, dtype=np.int64)


def mu_from_row(ys, offs, coefs, lengths, lw):
    ys_l, of, co, ln = ys.tolist(), offs.tolist(), coefs.tolist(), lengths.tolist()
    zs, mus = [], []
    for a, z in enumerate(ys_l):
        gap = lw - ln[z]
        if gap % 2 == 0:
            continue
        d = (gap - 1) // 2
        if d < of[a + 1] - of[a] and co[of[a] + d]:
            zs.append(z)
            mus.append(co[of[a] + d])
    return np.array(zs, dtype=np.int32), np.array(mus, dtype=np.int64)


def fold_gen(ids, coefs, mul_s, lengths, slot):
    """Multiply a T~-vector by T~_s (side given by the table ``mul_s``).

    T~_w T~_s = T~_{ws} if ws > w, else T~_{ws} + (v - v^-1) T~_w.
    ``slot`` is scratch (all -1 on entry, restored on exit).
    """
    ids_l = ids.tolist()
    rows = coefs.tolist()
    ms, ln = mul_s.tolist(), lengths.tolist()
    width = coefs.shape[1]
    out_ids: list = []
    out_rows: list = []
    local: dict = {}

    def target(k):
        r = local.get(k)
        if r is None:
            r = local[k] = len(out_ids)
            out_ids.append(k)
            out_rows.append([0] * width)
        return out_rows[r]

    for w, row in zip(ids_l, rows):
        ws = ms[w]
        if ws < 0:
            raise IndexError("ball too small for this product")
        dst = target(ws)
        for e in range(width):
            dst[e] += row[e]
        if ln[ws] < ln[w]:
            dst = target(w)
            if row[0] or row[width - 1]:
                raise OverflowError("Laurent exponent out of range")
            for e in range(width - 1):
                dst[e + 1] += row[e]
            for e in range(1, width):
                dst[e - 1] -= row[e]
    keep = [r for r in range(len(out_ids)) if any(out_rows[r])]
    keep.sort(key=lambda r: out_ids[r])
    new_ids = np.array([out_ids[r] for r in keep], dtype=np.int32)
    new_rows = np.array([[_check(c) for c in out_rows[r]] for r in keep], dtype=np.int64).reshape(len(keep), width)
    return new_ids, new_rows


def accumulate(acc, ids, coefs, q_exps, q_cs):
    """acc[ids[r]] += (sum_t q_cs[t] v^q_exps[t]) * coefs[r]."""
    width = coefs.shape[1]
    qe, qc = q_exps.tolist(), q_cs.tolist()
    for r, k in enumerate(ids.tolist()):
        src = coefs[r].tolist()
        dst = acc[k].tolist()
        for e, c in enumerate(src):
            if not c:
                continue
            for sh, m in zip(qe, qc):
                f = e + sh
                if not 0 <= f < width:
                    raise OverflowError("Laurent exponent out of range")
                dst[f] += m * c
        acc[k] = [_check(c) for c in dst]


def row_to_dense(ys, offs, coefs, lengths, lw, K):
    """Dense coefficients of C_w = sum_y v^(l(y)-l(w)) P_{y,w}(v^2) T~_y."""
    ys_l, of, co, ln = ys.tolist(), offs.tolist(), coefs.tolist(), lengths.tolist()
    out = np.zeros((len(ys_l), 2 * K + 1), dtype=np.int64)
    for a, y in enumerate(ys_l):
        base = K + ln[y] - lw
        for d in range(of[a + 1] - of[a]):
            out[a, base + 2 * d] = co[of[a] + d]
    return out


def subtract_expansion(acc, h, ys, offs, coefs, lengths, lz):
    """acc -= h * C_z (C_z given by its KL row)."""
    width = acc.shape[1]
    hv = [(e, c) for e, c in enumerate(h.tolist()) if c]
    ys_l, of, co, ln = ys.tolist(), offs.tolist(), coefs.tolist(), lengths.tolist()
    for a, y in enumerate(ys_l):
        dst = acc[y].tolist()
        base = ln[y] - lz
        for d in range(of[a + 1] - of[a]):
            p = co[of[a] + d]
            for e, c in hv:
                f = e + base + 2 * d
                if not 0 <= f < width:
                    raise OverflowError("Laurent exponent out of range")
                dst[f] -= c * p
        acc[y] = [_check(c) for c in dst]


def prev_nonzero(acc, start):
    for k in range(start - 1, -1, -1):
        if acc[k].any():
            return k
    return -1
