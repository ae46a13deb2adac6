"""Representation rings of SL2 and Z/2 x SL2, matrix rings over them, and the
maps pi from the cells E, F, D.

Irreducibles are ``eps^e V(k)``; ``V(k) (x) V(l) = sum_{i=0}^{min(k,l)}
V(k+l-2i)`` and ``eps^2 = 1``.  Every irreducible here is self-dual, so the
dual of a matrix is its transpose.
"""
from __future__ import annotations

import random
import threading
from collections import deque
from dataclasses import dataclass

from . import celldata
from ._parallel import pmap
from .asymring import t_mul
from .celldata import CellCoords, CellError, d_coords, d_finite, e_coords, f_coords, locate, realize
from .starops import STAR_PAIRS, string_of, star
from .weylgroup import format_word, inverse

SIZES = {"E": 6, "F": 8, "D": 12}


@dataclass(frozen=True, order=True)
class IrrLabel:
    eps: int
    k: int

    def __post_init__(self):
        if self.eps not in (0, 1) or self.k < 0:
            raise ValueError(f"bad irreducible ({self.eps}, {self.k})")

    @property
    def dim(self) -> int:
        return self.k + 1

    def __str__(self):
        return ("eV" if self.eps else "V") + f"({self.k})"


class RepElement:
    """Z-combination of irreducibles (multiplicities, zero terms dropped)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        for lab, n in (terms or {}).items():
            if n:
                acc[lab] = acc.get(lab, 0) + n
        self.terms = {lab: n for lab, n in acc.items() if n}

    @classmethod
    def irr(cls, k: int, eps: int = 0) -> "RepElement":
        return cls({IrrLabel(eps, k): 1})

    def __eq__(self, other):
        if not isinstance(other, RepElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for lab, n in other.terms.items():
            out[lab] = out.get(lab, 0) + n
        return RepElement(out)

    def scale(self, n: int) -> "RepElement":
        return RepElement({lab: n * m for lab, m in self.terms.items()})

    def is_effective(self) -> bool:
        return all(n > 0 for n in self.terms.values())

    def dim(self) -> int:
        return sum(lab.dim * n for lab, n in self.terms.items())

    def to_json(self) -> list:
        return [[lab.eps, lab.k, n] for lab, n in sorted(self.terms.items())]

    def __repr__(self):
        return " + ".join((f"{n}*" if n != 1 else "") + str(lab) for lab, n in sorted(self.terms.items())) or "0"


def tensor(a: RepElement, b: RepElement) -> RepElement:
    out: dict = {}
    for la, m in a.terms.items():
        for lb, n in b.terms.items():
            eps = (la.eps + lb.eps) % 2
            for i in range(min(la.k, lb.k) + 1):
                lab = IrrLabel(eps, la.k + lb.k - 2 * i)
                out[lab] = out.get(lab, 0) + m * n
    return RepElement(out)


class RepMatrix:
    """n x n matrix over the representation ring (sparse; 1-based indices)."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries=None):
        self.n = n
        clean = {}
        for (i, j), r in (entries or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexError(f"entry ({i}, {j}) outside {n}x{n}")
            if r:
                clean[(i, j)] = clean[(i, j)] + r if (i, j) in clean else r
        self.entries = {ij: r for ij, r in clean.items() if r}

    @classmethod
    def unit(cls, n: int, i: int, j: int, k: int, eps: int = 0) -> "RepMatrix":
        return cls(n, {(i, j): RepElement.irr(k, eps)})

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __add__(self, other):
        _same(self, other)
        out = dict(self.entries)
        for ij, r in other.entries.items():
            out[ij] = out[ij] + r if ij in out else r
        return RepMatrix(self.n, out)

    def scale(self, c: int) -> "RepMatrix":
        return RepMatrix(self.n, {ij: r.scale(c) for ij, r in self.entries.items()})

    def to_json(self) -> list:
        return [[i, j, r.to_json()] for (i, j), r in sorted(self.entries.items())]

    def __repr__(self):
        return " + ".join(f"({r})_{i},{j}" for (i, j), r in sorted(self.entries.items())) or "0"


def _same(a: RepMatrix, b: RepMatrix):
    if a.n != b.n:
        raise ValueError(f"dimension mismatch {a.n} vs {b.n}")


def mat_mul(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    _same(a, b)
    by_row: dict = {}
    for (i, j), r in b.entries.items():
        by_row.setdefault(i, []).append((j, r))
    out: dict = {}
    for (i, k), r in a.entries.items():
        for j, s in by_row.get(k, ()):
            p = tensor(r, s)
            out[(i, j)] = out[(i, j)] + p if (i, j) in out else p
    return RepMatrix(a.n, out)


def dual(a: RepMatrix) -> RepMatrix:
    # V(k) and eps are self-dual
    return RepMatrix(a.n, {(j, i): r for (i, j), r in a.entries.items()})


# -- colouring of the finite families of D ----------------------------------

_colour: dict | None = None
_colour_lock = threading.Lock()


class ColouringError(RuntimeError):
    pass


def finite_family_colouring() -> dict:
    """Map finite-family coords of D -> 0 (star-reachable from x_0) or 1 (from x'_0).

    Breadth-first closure under left and right star operations for the
    pairs {0,2}, {1,2}, {2,3}, moving inside the finite families.
    """
    global _colour
    if _colour is not None:
        return _colour
    with _colour_lock:
        if _colour is not None:
            return _colour
        fam = {w: c for c, w in celldata.enumerate_cell("D", 0) if c.family != "infinite"}
        reach = {}
        for colour, start in ((0, d_finite(4, 4, 0)), (1, d_finite(4, 4, 1))):
            seen = {realize(start)}
            todo = deque(seen)
            while todo:
                w = todo.popleft()
                for pair in STAR_PAIRS:
                    for side in ("left", "right"):
                        if string_of(w, pair, side) is None:
                            continue
                        y = star(w, pair, side)
                        if y in fam and y not in seen:
                            seen.add(y)
                            todo.append(y)
            for w in seen:
                if fam[w] in reach and reach[fam[w]] != colour:
                    raise ColouringError(f"{format_word(w)} is star-reachable from both x_0 and x'_0")
                reach[fam[w]] = colour
        missing = [c for c in fam.values() if c not in reach]
        if missing:
            raise ColouringError(f"{len(missing)} finite-family elements reachable from neither x_0 nor x'_0")
        _colour = reach
    return _colour


def d_block_degree(i: int, j: int, k: int) -> int:
    if i <= 3 and j <= 3:
        return 2 * k
    if i >= 4 and j >= 4:
        return 2 * k + 2
    return 2 * k + 1


def pi(c: CellCoords) -> RepMatrix:
    """Image of t_c: a single irreducible in one matrix position."""
    if c.cell == "E":
        return RepMatrix.unit(6, c.i, c.j, c.k, c.tau)
    if c.cell == "F":
        return RepMatrix.unit(8, c.i, c.j, c.k)
    if c.cell != "D":
        raise CellError(f"unsupported cell {c.cell}")
    if c.family == "infinite":
        return RepMatrix.unit(12, c.i, c.j, d_block_degree(c.i, c.j, c.k), c.tau)
    return RepMatrix.unit(12, c.i, c.j, 0, finite_family_colouring()[c])


def pi_of_j(cell: str, elem) -> RepMatrix:
    out = RepMatrix(SIZES[cell])
    for c, n in elem.items():
        out = out + pi(c).scale(n)
    return out


def parity_ok(m: RepMatrix) -> bool:
    """D-cell pattern: V(k) at (a, b) has k even iff a, b lie in the same block."""
    return all((lab.k % 2 == 0) == ((a <= 3) == (b <= 3)) for (a, b), r in m.entries.items() for lab in r.terms)


# -- theorem verification ------------------------------------------------------

def _pair_check(args):
    cell, x, y, method = args
    prod = t_mul(x, y, method)
    lhs = pi_of_j(cell, prod)
    rhs = mat_mul(pi(x), pi(y))
    row = {"x": x.to_json(), "y": y.to_json(), "pass": lhs == rhs}
    if cell == "D":
        row["parity"] = parity_ok(lhs) and parity_ok(rhs)
        row["pass"] = row["pass"] and row["parity"]
    if not row["pass"]:
        row["product"] = prod.to_json()
        row["pi_product"] = lhs.to_json()
        row["product_of_pi"] = rhs.to_json()
    return row


def _structural(cell: str, k_max: int) -> dict:
    elems = celldata.enumerate_cell(cell, k_max)
    images: dict = {}
    clashes, dual_bad = [], []
    for c, w in elems:
        m = pi(c)
        if m in images:
            clashes.append([images[m].to_json(), c.to_json()])
        images[m] = c
        ci = locate(inverse(w))
        if ci is None or pi(ci) != dual(m):
            dual_bad.append(c.to_json())
    return {"enumerated": len(elems), "injective": not clashes, "clashes": clashes[:10],
            "duality": not dual_bad, "duality_failures": dual_bad[:10]}


def _e_pairs(sample: int, rng: random.Random) -> list:
    full = [(e_coords(i, j, 0, a), e_coords(j, n, 0, b)) for i in range(1, 7) for j in range(1, 7)
            for n in range(1, 7) for a in (0, 1) for b in (0, 1)]
    extra = []
    for _ in range(sample):
        k = rng.randint(0, 2)
        l = rng.randint(0, 2 - k)
        i, j, n = (rng.randint(1, 6) for _ in range(3))
        extra.append((e_coords(i, j, k, rng.randint(0, 1)), e_coords(j, n, l, rng.randint(0, 1))))
    return full + extra


def _f_pairs(sample: int, rng: random.Random) -> list:
    full = [(f_coords(i, 0, j), f_coords(j, 0, n)) for i in range(1, 9) for j in range(1, 9) for n in range(1, 9)]
    extra = []
    for _ in range(sample):
        k = rng.randint(0, 2)
        l = rng.randint(0, 2 - k)
        i, j, n = (rng.randint(1, 8) for _ in range(3))
        extra.append((f_coords(i, k, j), f_coords(j, l, n)))
    return full + extra


def _d_kind(c: CellCoords) -> str:
    """Block parity of an infinite-family element, or which finite family."""
    if c.family == "infinite":
        return ("V(2k+2)", "V(2k+1)", "V(2k)")[(c.i <= 3) + (c.j <= 3)]
    return "x0_prime" if finite_family_colouring()[c] else "x0"


def _d_pairs(sample: int, rng: random.Random, k_max: int = 1) -> list:
    """Pairs with matching inner index, cycling through the kinds of factors."""
    elems = [c for c, _ in celldata.enumerate_cell("D", k_max)]
    kind = _d_kind
    kinds = sorted({kind(c) for c in elems})
    by_kind = {kd: [c for c in elems if kind(c) == kd] for kd in kinds}
    pairs = []
    t = 0
    while len(pairs) < sample:
        kx = kinds[t % len(kinds)]
        ky = kinds[(t // len(kinds)) % len(kinds)]
        t += 1
        x = rng.choice(by_kind[kx])
        ys = [c for c in by_kind[ky] if c.i == x.j]
        if ys:
            pairs.append((x, rng.choice(ys)))
    return pairs


def verify_theorem(which: str, k_max: int = 2, sample: int = 50, seed: int = 0, method: str = "definition",
                   threads: int = 1) -> dict:
    """Homomorphism, injectivity and duality checks for the maps pi."""
    rng = random.Random(seed)
    if which == "E":
        cell, pairs = "E", _e_pairs(sample, rng)
    elif which == "F":
        cell, pairs = "F", _f_pairs(sample, rng)
    elif which == "D":
        cell = "D"
        finite_family_colouring()
        pairs = _d_pairs(sample, rng, min(k_max, 1))
    else:
        raise ValueError(f"no homomorphism check for cell {which!r}")
    rows = pmap(_pair_check, [(cell, x, y, method) for x, y in pairs], threads)
    struct = _structural(cell, k_max)
    report = {"cell": which, "pairs": len(rows), "pairs_passed": sum(r["pass"] for r in rows),
              "failures": [r for r in rows if not r["pass"]], **struct}
    if cell == "D":
        col = finite_family_colouring()
        report["colouring"] = {"x0": sum(1 for v in col.values() if v == 0),
                               "x0_prime": sum(1 for v in col.values() if v == 1)}
        report["parity_ok"] = all(r.get("parity", True) for r in rows)
        report["kinds"] = sorted({_d_kind(c) for xy in pairs for c in xy})
    report["pass"] = report["pairs_passed"] == len(rows) and struct["injective"] and struct["duality"]
    return report
