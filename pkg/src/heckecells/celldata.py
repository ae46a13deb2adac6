"""Explicit parameterizations of the two-sided cells E, F and D.

* E (Jordan type (411), contains s0 s1):
  ``u_i tau^t x_k u_j^{-1}`` with ``x_k = (01232)^k 10``.
* F (Jordan type (33), contains s1 s3):
  ``u_i x_k u_j^{-1}`` with ``x_k = (t032)^k 13``.
* D (Jordan type (222), contains s1 s2 s1): an infinite family
  ``p_i tau^t u_k p_j^{-1}`` with ``u_k = (0132)^k 013`` and two finite
  families built from ``x_0 = 121`` and ``x'_0 = t20121``.  Row 6 of the
  primed finite family is ``tau q_6 x_0 q_m^{-1}``: the literal
  ``q_6 x'_0 q_m^{-1}`` contains the longest element 012012 of the parabolic
  subgroup <s0, s1, s2> (a-value 6), and the replacement makes D closed
  under inversion.

Words use the digits 0-3 for the simple reflections and ``t`` for tau.
Cells A, B, C, G and H are only known through their a-values.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

from .weylgroup import GroupElement, inverse, parse_word

A_VALUES = {"A": 9, "B": 6, "C": 4, "D": 3, "E": 2, "F": 2, "G": 1, "H": 0}
LEFT_CELL_COUNTS = {"E": 6, "F": 8, "D": 12}
SUPPORTED = ("E", "F", "D")

# u_6 = 0232 follows the pattern of u_5; the word 0233 is not reduced
E_U = ("", "2", "32", "232", "1232", "0232")
F_U = ("", "2", "32", "02", "t", "t2", "t32", "t02")
D_P = ("", "2", "32", "12", "02", "012", "312", "302", "2312", "2302", "02312", "12302")
D_Q = {4: "", 5: "t", 6: "0", 7: "3", 8: "3t", 9: "23", 10: "23t", 11: "023", 12: "123t"}

E_REPS = ("01", "012", "0123", "01232", "012321", "012320")
F_REPS = ("13", "132", "1323", "1320", "03", "032", "0323", "0321")
D_REPS = ("013", "0132", "01323", "01321", "01320", "013201",
          "013213", "013203", "0132132", "0132032", "01321320", "01320321")


class CellError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CellCoords:
    """Coordinates of an element of E, F or D.

    ``i`` is the right-cell index (``l`` for the finite families of D) and
    ``j`` the left-cell index (``m``; 6 for the Gamma_6 family).
    ``family`` is ``"infinite"``, ``"finite"`` or ``"gamma6"``.
    """

    cell: str
    family: str
    i: int
    j: int
    k: int = 0
    tau: int = 0
    prime: int = 0

    def to_json(self) -> dict:
        if self.cell == "E":
            return {"cell": "E", "i": self.i, "j": self.j, "k": self.k, "tau": self.tau}
        if self.cell == "F":
            return {"cell": "F", "i": self.i, "k": self.k, "j": self.j}
        if self.family == "infinite":
            return {"cell": "D", "family": "infinite", "i": self.i, "k": self.k, "tau": self.tau, "j": self.j}
        if self.family == "finite":
            return {"cell": "D", "family": "finite", "l": self.i, "m": self.j, "prime": self.prime}
        return {"cell": "D", "family": "gamma6", "l": self.i, "tau": self.tau}

    @classmethod
    def from_json(cls, d: dict) -> "CellCoords":
        cell = d["cell"]
        if cell == "E":
            return e_coords(d["i"], d["j"], d["k"], d.get("tau", 0))
        if cell == "F":
            return f_coords(d["i"], d["k"], d["j"])
        fam = d.get("family", "infinite")
        if fam == "infinite":
            return d_coords(d["i"], d["k"], d.get("tau", 0), d["j"])
        if fam == "finite":
            return d_finite(d["l"], d["m"], d.get("prime", 0))
        return d_gamma6(d["l"], d.get("tau", 0))

    def __str__(self):
        return " ".join(f"{k}={v}" for k, v in self.to_json().items())


def _check(cond: bool, msg: str):
    if not cond:
        raise CellError(msg)


def e_coords(i: int, j: int, k: int, tau: int = 0) -> CellCoords:
    _check(1 <= i <= 6 and 1 <= j <= 6 and k >= 0 and tau in (0, 1), "E coordinates out of range")
    return CellCoords("E", "infinite", i, j, k, tau)


def f_coords(i: int, k: int, j: int) -> CellCoords:
    _check(1 <= i <= 8 and 1 <= j <= 8 and k >= 0, "F coordinates out of range")
    return CellCoords("F", "infinite", i, j, k)


def d_coords(i: int, k: int, tau: int, j: int) -> CellCoords:
    _check(1 <= i <= 12 and 1 <= j <= 12 and k >= 0 and tau in (0, 1), "D coordinates out of range")
    return CellCoords("D", "infinite", i, j, k, tau)


def d_finite(l: int, m: int, prime: int = 0) -> CellCoords:
    _check(4 <= l <= 12 and 4 <= m <= 12 and m != 6 and prime in (0, 1), "D finite coordinates out of range")
    return CellCoords("D", "finite", l, m, prime=prime)


def d_gamma6(l: int, tau: int = 0) -> CellCoords:
    _check(4 <= l <= 12 and tau in (0, 1), "D gamma6 coordinates out of range")
    return CellCoords("D", "gamma6", l, 6, tau=tau)


# -- building blocks ---------------------------------------------------------

def _w(text: str) -> GroupElement:
    return parse_word(text)


def e_x(k: int) -> GroupElement:
    return _w("01232" * k + "10")


def f_x(k: int) -> GroupElement:
    return _w("t032" * k + "13")


def d_u(k: int) -> GroupElement:
    return _w("0132" * k + "013")


def d_x(k: int) -> GroupElement:
    return _w("1230" * k + "121")


def d_xprime(k: int) -> GroupElement:
    if k == 0:
        return _w("t20121")
    return _w("t0230") * d_x(k - 1)


TAU_EL = _w("t")
E_EL = _w("")


def realize(c: CellCoords) -> GroupElement:
    """The group element with coordinates ``c``."""
    if c.cell == "E":
        e_coords(c.i, c.j, c.k, c.tau)
        ui, uj = _w(E_U[c.i - 1]), _w(E_U[c.j - 1])
        mid = TAU_EL * e_x(c.k) if c.tau else e_x(c.k)
        return ui * mid * inverse(uj)
    if c.cell == "F":
        f_coords(c.i, c.k, c.j)
        return _w(F_U[c.i - 1]) * f_x(c.k) * inverse(_w(F_U[c.j - 1]))
    if c.cell != "D":
        raise CellError(f"unsupported cell {c.cell}")
    if c.family == "infinite":
        d_coords(c.i, c.k, c.tau, c.j)
        mid = TAU_EL * d_u(c.k) if c.tau else d_u(c.k)
        return _w(D_P[c.i - 1]) * mid * inverse(_w(D_P[c.j - 1]))
    if c.family == "finite":
        d_finite(c.i, c.j, c.prime)
        if c.prime and c.i == 6:
            # row 6 of the primed family: inverses of the tau-twisted Gamma_6 family
            return TAU_EL * _w(D_Q[6]) * d_x(0) * inverse(_w(D_Q[c.j]))
        x = d_xprime(0) if c.prime else d_x(0)
        return _w(D_Q[c.i]) * x * inverse(_w(D_Q[c.j]))
    if c.family == "gamma6":
        d_gamma6(c.i, c.tau)
        w = _w(D_Q[c.i]) * d_x(0) * inverse(_w(D_Q[6]))
        return w * TAU_EL if c.tau else w
    raise CellError(f"unknown family {c.family}")


def _coords_at(cell: str, k: int) -> list:
    if cell == "E":
        return [e_coords(i, j, k, t) for i in range(1, 7) for j in range(1, 7) for t in (0, 1)]
    if cell == "F":
        return [f_coords(i, k, j) for i in range(1, 9) for j in range(1, 9)]
    if cell == "D":
        return [d_coords(i, k, t, j) for i in range(1, 13) for j in range(1, 13) for t in (0, 1)]
    raise CellError(f"unsupported cell {cell}")


def _finite_coords() -> list:
    out = [d_finite(l, m, p) for l in range(4, 13) for m in range(4, 13) if m != 6 for p in (0, 1)]
    out += [d_gamma6(l, t) for l in range(4, 13) for t in (0, 1)]
    return out


class _CellIndex:
    """Realized elements of one cell, grown in k on demand."""

    def __init__(self, cell: str):
        self.cell = cell
        self.kmax = -1
        self.by_element: dict = {}
        self.by_coords: dict = {}
        self.min_len: dict = {}
        self.lock = threading.Lock()
        if cell == "D":
            self._add(_finite_coords(), None)

    def _add(self, coords: list, k):
        lens = []
        for c in coords:
            w = realize(c)
            prev = self.by_element.get(w)
            if prev is not None:
                raise CellError(f"coordinates {prev} and {c} realize the same element {w}")
            self.by_element[w] = c
            self.by_coords[c] = w
            lens.append(w.length)
        if k is not None:
            self.min_len[k] = min(lens)

    def grow(self, kmax: int):
        with self.lock:
            while self.kmax < kmax:
                self.kmax += 1
                self._add(_coords_at(self.cell, self.kmax), self.kmax)

    def cover_length(self, n: int):
        """Grow until every element of length <= n is present."""
        self.grow(1)
        # lengths grow linearly in k; two consecutive levels above n suffice
        while min(self.min_len[self.kmax], self.min_len[self.kmax - 1]) <= n:
            self.grow(self.kmax + 1)


_indexes: dict = {}
_idx_lock = threading.Lock()


def _index(cell: str) -> _CellIndex:
    if cell not in SUPPORTED:
        raise CellError(f"unsupported cell {cell}")
    idx = _indexes.get(cell)
    if idx is None:
        with _idx_lock:
            idx = _indexes.get(cell)
            if idx is None:
                idx = _indexes[cell] = _CellIndex(cell)
    return idx


def enumerate_cell(cell: str, k_max: int) -> list:
    """Sorted list of (coords, element) with k <= k_max (finite families always)."""
    idx = _index(cell)
    idx.grow(k_max)
    return sorted(((c, w) for c, w in idx.by_coords.items() if c.family != "infinite" or c.k <= k_max),
                  key=lambda cw: cw[0])


def locate(w: GroupElement):
    """Coordinates of ``w`` in E, F or D, or None if it lies in another cell."""
    n = w.length
    for cell in SUPPORTED:
        idx = _index(cell)
        hit = idx.by_element.get(w)
        if hit is not None:
            return hit
        idx.cover_length(n)
        hit = idx.by_element.get(w)
        if hit is not None:
            return hit
    return None


def cell_of(w: GroupElement):
    c = locate(w)
    return c.cell if c is not None else None


def a_value(cell: str) -> int:
    try:
        return A_VALUES[cell]
    except KeyError:
        raise CellError(f"unknown cell {cell}") from None


def left_cell_of(c: CellCoords) -> int:
    return c.j


def right_cell_of(c: CellCoords) -> int:
    return c.i


def left_cell_representative(cell: str, j: int) -> GroupElement:
    reps = {"E": E_REPS, "F": F_REPS, "D": D_REPS}[cell]
    return _w(reps[j - 1])


def transpose(c: CellCoords) -> CellCoords:
    """Coordinates of the inverse element, by the index-swapping rule."""
    if c.family == "infinite":
        return CellCoords(c.cell, "infinite", c.j, c.i, c.k, c.tau)
    if c.family == "finite":
        if c.i == 6:
            return d_gamma6(c.j, c.prime)
        return d_finite(c.j, c.i, c.prime)
    if c.i == 6:
        return c
    return d_finite(6, c.i, c.tau)
