"""Products in the Hecke algebra in the T~-basis and the C-basis.

``T~_x T~_y = sum_z f_{x,y,z} T~_z`` and ``C_x C_y = sum_z h_{x,y,z} C_z``.

Products are computed on ball ids with dense Laurent rows (see
``kernels``).  The tau parts are handled by hand:
``T~_{tau^a x} T~_{tau^b y} = T~_{tau^(a+b)} T~_{sigma^b(x)} T~_y`` and the
same with C in place of T~.
"""
from __future__ import annotations

import threading
from bisect import bisect_left
from typing import Iterable

import numpy as np

from . import kernels
from .exactnum import LaurentV
from .klbase import KLTable, default_table
from .weylgroup import GroupElement, canonical_word, format_word


class HeckeVector:
    """Sparse combination of basis elements with LaurentV coefficients.

    Parameters
    ----------
    basis : {"Ttilde", "C"}
    terms : mapping GroupElement -> LaurentV (or int)
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in ("Ttilde", "C"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for w, c in (terms or {}).items():
            c = c if isinstance(c, LaurentV) else LaurentV({0: c})
            if c:
                clean[w] = clean[w] + c if w in clean else c
        self.terms = {w: c for w, c in clean.items() if c}

    def coeff(self, w: GroupElement) -> LaurentV:
        return self.terms.get(w, LaurentV())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HeckeVector):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __add__(self, other: "HeckeVector") -> "HeckeVector":
        if self.basis != other.basis:
            raise ValueError("basis mismatch")
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeVector(self.basis, out)

    def __neg__(self):
        return HeckeVector(self.basis, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeVector":
        return HeckeVector(self.basis, {w: a * c for w, a in self.terms.items()})

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].length, format_word(kv[0])))

    def to_json(self) -> dict:
        return {"basis": self.basis, "terms": [[format_word(w), c.to_json()] for w, c in self.sorted_items()]}

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis}[{format_word(w) or 'e'}]" for w, c in self.sorted_items())
        return body or "0"


def _dense_to_laurent(row, K: int) -> LaurentV:
    return LaurentV({e - K: int(c) for e, c in enumerate(row.tolist()) if c})


class HeckeEngine:
    """Product machinery bound to one KL table.

    ``c_product_ids`` and ``h_ids`` work on W' ids only; the module level
    functions add the tau bookkeeping.
    """

    def __init__(self, table: KLTable | None = None):
        self.table = table or default_table()
        self.ball = self.table.ball
        self._h_cache: dict = {}
        self._f_cache: dict = {}
        self._lock = threading.Lock()

    # -- T~ products ---------------------------------------------------------
    def _fold_word(self, ids, coefs, word, table):
        b = self.ball
        slot = np.full(len(b), -1, dtype=np.int32)
        lengths = b.lengths
        for s in word:
            ids, coefs = kernels.fold_gen(ids, coefs, table[s], lengths, slot)
        return ids, coefs

    def t_product_ids(self, x: int, y: int):
        """(ids, dense coefs, K) for T~_x T~_y."""
        key = (x, y)
        hit = self._f_cache.get(key)
        if hit is not None:
            return hit
        b = self.ball
        ly = b.length(y)
        b.extend_to(b.length(x) + ly)
        K = ly + 1
        coefs = np.zeros((1, 2 * K + 1), dtype=np.int64)
        coefs[0, K] = 1
        word = canonical_word(b.element(y))
        res = self._fold_word(np.array([x], dtype=np.int32), coefs, word, b.rmul) + (K,)
        with self._lock:
            self._f_cache.setdefault(key, res)
        return res

    # -- C products ----------------------------------------------------------
    def c_product_dense(self, x: int, y: int):
        """Dense T~-coefficients of C_x C_y over the whole ball.

        Returns ``(acc, K)`` with ``acc[z, K + e]`` the coefficient of
        ``v^e T~_z``.
        """
        b = self.ball
        lx, ly = b.length(x), b.length(y)
        b.extend_to(lx + ly)
        K = lx + ly + 1
        width = 2 * K + 1
        ix, iy = b.interval(x), b.interval(y)
        # walk the smaller interval; fold the other factor's C expansion
        if len(iy) <= len(ix):
            base, walk, table, side = x, y, b.rmul, "right"
        else:
            base, walk, table, side = y, x, b.lmul, "left"
        ys, offs, coefs = self.table.row(base)
        vec = (ys, kernels.row_to_dense(ys, offs, coefs, b.lengths, b.length(base), K))
        lengths = b.lengths
        acc = np.zeros((len(b), width), dtype=np.int64)
        wys, woffs, wcoefs = self.table.row(walk)
        lw = b.length(walk)
        nodes = wys.tolist()
        children: dict = {}
        for a, node in enumerate(nodes):
            if b.length(node) == 0:
                continue
            if side == "right":
                s = b.right_descent(node)
                parent = int(b.rmul[s][node])
            else:
                s = b.left_descent(node)
                parent = int(b.lmul[s][node])
            children.setdefault(parent, []).append((s, node))
        slot = np.full(len(b), -1, dtype=np.int32)
        pos = {node: a for a, node in enumerate(nodes)}
        stack = [(nodes[0], vec)]
        while stack:
            node, (ids, dense) = stack.pop()
            a = pos[node]
            q = wcoefs[woffs[a]:woffs[a + 1]]
            nz = np.nonzero(q)[0]
            if len(nz):
                shift = b.length(node) - lw
                kernels.accumulate(acc, ids, dense, (shift + 2 * nz).astype(np.int32), q[nz].astype(np.int64))
            for s, child in children.get(node, ()):
                stack.append((child, kernels.fold_gen(ids, dense, table[s], lengths, slot)))
        return acc, K

    def h_ids(self, x: int, y: int, targets: Iterable[int] | None = None) -> dict:
        """h_{x,y,z} for W' ids.

        With ``targets`` only the z lying above some target in the Bruhat
        order are converted (exact for those z, in particular for every
        target); without, the full C-expansion is returned.
        """
        tset = None if targets is None else frozenset(int(t) for t in targets)
        full = self._h_cache.get((x, y, None))
        if full is not None:
            return full if tset is None else {z: h for z, h in full.items() if z in tset}
        key = (x, y, tset)
        hit = self._h_cache.get(key)
        if hit is not None:
            return hit
        b = self.ball
        acc, K = self.c_product_dense(x, y)
        lengths = b.lengths
        tlist = sorted(tset) if tset is not None else None
        floor = tlist[0] if tlist else 0
        out = {}
        z = kernels.prev_nonzero(acc, len(b))
        while z >= floor and z >= 0:
            if tlist is not None and not _above_any(b.interval(z), tlist):
                z = kernels.prev_nonzero(acc, z)
                continue
            h = acc[z].copy()
            if tlist is None or z in tset:
                out[z] = _dense_to_laurent(h, K)
            ys, offs, coefs = self.table.row(z)
            kernels.subtract_expansion(acc, h, ys, offs, coefs, lengths, b.length(z))
            z = kernels.prev_nonzero(acc, z)
        if tset is not None:
            out = {t: h for t, h in out.items() if t in tset}
        with self._lock:
            self._h_cache.setdefault(key, out)
        return out

    def clear(self) -> None:
        self._h_cache.clear()
        self._f_cache.clear()


def _above_any(interval: np.ndarray, targets: list) -> bool:
    pos = np.searchsorted(interval, targets)
    ok = pos < len(interval)
    return bool(np.any(interval[pos[ok]] == np.asarray(targets)[ok]))


_engine: HeckeEngine | None = None
_engine_lock = threading.Lock()


def default_engine() -> HeckeEngine:
    global _engine
    if _engine is None or _engine.table is not default_table():
        with _engine_lock:
            if _engine is None or _engine.table is not default_table():
                _engine = HeckeEngine()
    return _engine


def _split(x: GroupElement, y: GroupElement, eng: HeckeEngine):
    """(id of sigma^b(x), id of y, tau of the product)."""
    b = eng.ball
    xi = b.id_of(x)
    if y.tau:
        xi = int(b.sigma[xi])
    return xi, b.id_of(y), (x.tau + y.tau) & 1


def t_mul(x: GroupElement, y: GroupElement, engine: HeckeEngine | None = None) -> HeckeVector:
    """T~_x T~_y in the T~-basis."""
    eng = engine or default_engine()
    xi, yi, tau = _split(x, y, eng)
    ids, coefs, K = eng.t_product_ids(xi, yi)
    b = eng.ball
    return HeckeVector("Ttilde", {b.element(int(z), tau): _dense_to_laurent(r, K) for z, r in zip(ids, coefs)})


def c_mul(x: GroupElement, y: GroupElement, engine: HeckeEngine | None = None) -> HeckeVector:
    """C_x C_y in the C-basis."""
    eng = engine or default_engine()
    xi, yi, tau = _split(x, y, eng)
    b = eng.ball
    return HeckeVector("C", {b.element(z, tau): h for z, h in eng.h_ids(xi, yi).items()})


def h_coeff(x: GroupElement, y: GroupElement, z: GroupElement, engine: HeckeEngine | None = None) -> LaurentV:
    eng = engine or default_engine()
    xi, yi, tau = _split(x, y, eng)
    if z.tau != tau or z.length > x.length + y.length:
        return LaurentV()
    zi = eng.ball.id_of(z)
    return eng.h_ids(xi, yi, [zi]).get(zi, LaurentV())


def h_coeffs(x: GroupElement, y: GroupElement, zs: Iterable[GroupElement],
             engine: HeckeEngine | None = None) -> dict:
    """h_{x,y,z} for several z in one restricted conversion."""
    eng = engine or default_engine()
    xi, yi, tau = _split(x, y, eng)
    zs = list(zs)
    bound = x.length + y.length
    ok = [z for z in zs if z.tau == tau and z.length <= bound]
    ids = {z: eng.ball.id_of(z) for z in ok}
    got = eng.h_ids(xi, yi, ids.values()) if ids else {}
    return {z: got.get(ids[z], LaurentV()) if z in ids else LaurentV() for z in zs}


def f_coeff(x: GroupElement, y: GroupElement, z: GroupElement, engine: HeckeEngine | None = None) -> LaurentV:
    eng = engine or default_engine()
    xi, yi, tau = _split(x, y, eng)
    if z.tau != tau or z.length > x.length + y.length:
        return LaurentV()
    ids, coefs, K = eng.t_product_ids(xi, yi)
    zi = eng.ball.id_of(z)
    a = bisect_left(ids.tolist(), zi)
    if a < len(ids) and ids[a] == zi:
        return _dense_to_laurent(coefs[a], K)
    return LaurentV()


def vector_mul(u: HeckeVector, w: HeckeVector, engine: HeckeEngine | None = None) -> HeckeVector:
    """Bilinear extension of t_mul / c_mul to whole vectors."""
    if u.basis != w.basis:
        raise ValueError("basis mismatch")
    prod = t_mul if u.basis == "Ttilde" else c_mul
    out = HeckeVector(u.basis)
    for x, a in u.terms.items():
        for y, c in w.terms.items():
            out = out + prod(x, y, engine).scale(a * c)
    return out
