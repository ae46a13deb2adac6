"""Kazhdan-Lusztig polynomials, mu coefficients and C-basis expansions.

The table computes whole rows ``y -> P_{y,w}`` for ``y`` in ``[e, w]`` with the
recursion on a descent ``s`` of ``w`` (left descents by default, right ones
for ``side="right"``).  Rows live on ball ids; the public functions take
:class:`~heckecells.weylgroup.GroupElement` values and strip tau
(``P_{tau^a y, tau^b w} = 0`` unless ``a == b``).
"""
from __future__ import annotations

import json
import logging
import os
import threading

import numpy as np

from . import kernels
from .exactnum import LaurentV
from .weylgroup import Ball, GroupElement, ball, format_word, inverse, parse_word

log = logging.getLogger(__name__)


class KLTable:
    """Memo of KL rows over the ball.

    Parameters
    ----------
    side : {"left", "right"}
        Which descent the recursion pivots on.
    cache_path : str, optional
        JSON file of previously queried polynomials (``"y|w"`` keys).  A
        missing or unreadable file is ignored.
    """

    def __init__(self, side: str = "left", cache_path: str | None = None, group: Ball | None = None):
        if side not in ("left", "right"):
            raise ValueError(side)
        self.side = side
        self.ball = group or ball()
        self.rows: dict = {}
        self.mus: dict = {}
        self._lock = threading.Lock()
        self.cache_path = cache_path
        self._queried: dict = {}
        if cache_path:
            self._load_cache(cache_path)

    # -- cache file ---------------------------------------------------------
    def _load_cache(self, path: str) -> None:
        try:
            with open(path) as fh:
                data = json.load(fh)
            parsed = {}
            for key, poly in data.items():
                y, w = key.split("|")
                parsed[(parse_word(y), parse_word(w))] = LaurentV.from_json(poly)
        except FileNotFoundError:
            return
        except (ValueError, TypeError, AttributeError) as exc:
            log.warning("ignoring unreadable KL cache %s: %s", path, exc)
            return
        self._queried.update(parsed)

    def save_cache(self, path: str | None = None) -> None:
        path = path or self.cache_path
        if not path:
            return
        data = {f"{format_word(y)}|{format_word(w)}": p.to_json() for (y, w), p in self._queried.items()}
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            json.dump(data, fh, sort_keys=True)
        os.replace(tmp, path)

    # -- rows ---------------------------------------------------------------
    def _descent(self, k: int):
        b = self.ball
        if self.side == "left":
            s = b.left_descent(k)
            return s, (b.lmul[s][k] if s >= 0 else -1)
        s = b.right_descent(k)
        return s, (b.rmul[s][k] if s >= 0 else -1)

    def _mul_table(self):
        return self.ball.lmul if self.side == "left" else self.ball.rmul

    def mu_list(self, k: int):
        """(ids z < k with mu(z, k) != 0, the mu values)."""
        hit = self.mus.get(k)
        if hit is None:
            ys, offs, coefs = self.row(k)
            hit = kernels.mu_from_row(ys, offs, coefs, self.ball.lengths, self.ball.length(k))
            self.mus.setdefault(k, hit)
        return hit

    def _needed_z(self, s: int, v: int):
        zs, mus = self.mu_list(v)
        if not len(zs):
            return zs, mus
        table = self._mul_table()[s]
        lengths = self.ball.lengths
        keep = lengths[table[zs]] < lengths[zs]
        return zs[keep], mus[keep]

    def row(self, k: int):
        """KL row of ball id ``k``: (ys, offs, coefs)."""
        hit = self.rows.get(k)
        if hit is not None:
            return hit
        b = self.ball
        stack = [k]
        while stack:
            u = stack[-1]
            if u in self.rows:
                stack.pop()
                continue
            if b.length(u) == 0:
                self.rows.setdefault(u, (np.array([u], dtype=np.int32), np.array([0, 1], dtype=np.int32),
                                         np.array([1], dtype=np.int64)))
                stack.pop()
                continue
            s, v = self._descent(u)
            if v not in self.rows:
                stack.append(v)
                continue
            zs, mus = self._needed_z(s, v)
            missing = [int(z) for z in zs if int(z) not in self.rows]
            if missing:
                stack.extend(missing)
                continue
            lw = b.length(u)
            lengths = b.lengths
            ys = b.interval(u)
            offs, coefs = kernels.kl_row(
                ys, self._mul_table()[s], lengths, lw, self.rows[v],
                [self.rows[int(z)] for z in zs],
                np.array([(lw - b.length(int(z))) // 2 for z in zs], dtype=np.int32),
                np.asarray(mus, dtype=np.int64),
            )
            self.rows.setdefault(u, (ys, offs, coefs))
            stack.pop()
        return self.rows[k]

    def poly_ids(self, y: int, w: int) -> list[int]:
        """q-coefficients of P_{y,w} for ball ids (empty list for 0)."""
        ys, offs, coefs = self.row(w)
        a = int(np.searchsorted(ys, y))
        if a >= len(ys) or ys[a] != y:
            return []
        return coefs[offs[a]:offs[a + 1]].tolist()

    # -- public API on group elements ---------------------------------------
    def kl_poly(self, y: GroupElement, w: GroupElement) -> LaurentV:
        """P_{y,w} as a LaurentV in v (even exponents)."""
        hit = self._queried.get((y, w))
        if hit is not None:
            return hit
        if y.tau != w.tau:
            res = LaurentV()
        else:
            res = LaurentV.from_q_coeffs(self.poly_ids(self.ball.id_of(y), self.ball.id_of(w)))
        with self._lock:
            self._queried.setdefault((y, w), res)
        return res

    def mu(self, y: GroupElement, w: GroupElement) -> int:
        if y.tau != w.tau:
            return 0
        b = self.ball
        yi, wi = b.id_of(y), b.id_of(w)
        gap = b.length(wi) - b.length(yi)
        if gap <= 0 or gap % 2 == 0:
            return 0
        p = self.poly_ids(yi, wi)
        d = (gap - 1) // 2
        return p[d] if d < len(p) else 0

    def mu_tilde(self, y: GroupElement, w: GroupElement) -> int:
        m = self.mu(y, w)
        return m if m else self.mu(w, y)

    def delta(self, w: GroupElement) -> int:
        """q-degree of P_{e,w} (-1 if w has a tau part)."""
        if w.tau:
            return -1
        return len(self.poly_ids(0, self.ball.id_of(w))) - 1

    def c_expansion(self, w: GroupElement):
        """C_w in the T~-basis."""
        from .heckealg import HeckeVector

        b = self.ball
        k = b.id_of(w)
        ys, offs, coefs = self.row(k)
        lw = b.length(k)
        terms = {}
        for a, y in enumerate(ys.tolist()):
            p = coefs[offs[a]:offs[a + 1]].tolist()
            base = b.length(y) - lw
            terms[b.element(y, w.tau)] = LaurentV({base + 2 * d: c for d, c in enumerate(p)})
        return HeckeVector("Ttilde", terms)

    def is_distinguished(self, w: GroupElement, a_val: int) -> bool:
        if inverse(w) != w or w.tau:
            return False
        return w.length - a_val - 2 * self.delta(w) == 0


_default: KLTable | None = None
_default_lock = threading.Lock()


def default_table() -> KLTable:
    global _default
    if _default is None:
        with _default_lock:
            if _default is None:
                _default = KLTable(cache_path=os.environ.get("HECKE_CACHE") or None)
    return _default


def set_default_table(table: KLTable | None) -> None:
    global _default
    _default = table


def kl_poly(y: GroupElement, w: GroupElement, table: KLTable | None = None) -> LaurentV:
    return (table or default_table()).kl_poly(y, w)


def mu_tilde(y: GroupElement, w: GroupElement, table: KLTable | None = None) -> int:
    return (table or default_table()).mu_tilde(y, w)


def c_expansion(w: GroupElement, table: KLTable | None = None):
    return (table or default_table()).c_expansion(w)


def is_distinguished(w: GroupElement, a_val: int, table: KLTable | None = None) -> bool:
    return (table or default_table()).is_distinguished(w, a_val)
