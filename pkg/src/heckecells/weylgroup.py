"""The extended affine Weyl group of type B~3 attached to Sp6(C).

Elements are ``tau^a * x`` with ``x`` in the Coxeter group W' generated by
s0..s3, realized faithfully by 4x4 integer matrices acting on the root
lattice of an affine Kac-Moody root system (simple-root coordinates).
Conjugation by tau is the diagram automorphism swapping s0 and s1.

Besides the value type :class:`GroupElement`, the module keeps a *ball*: all
elements of W' up to some length, numbered by length, with multiplication
tables by the simple reflections.  The compiled kernels work on those ids.
"""
from __future__ import annotations

import threading
from typing import Iterable

import numpy as np

GENS = (0, 1, 2, 3)

# <alpha_j, alpha_i^vee>; rows 0 and 1 are exchanged by the tau-symmetry
CARTAN = (
    (2, 0, -1, 0),
    (0, 2, -1, 0),
    (-1, -1, 2, -1),
    (0, 0, -2, 2),
)

COXETER_ORDER = {
    frozenset((0, 1)): 2, frozenset((0, 3)): 2, frozenset((1, 3)): 2,
    frozenset((0, 2)): 3, frozenset((1, 2)): 3, frozenset((2, 3)): 4,
}


def coxeter_order(s: int, t: int) -> int:
    return 1 if s == t else COXETER_ORDER[frozenset((s, t))]


class WordParseError(ValueError):
    def __init__(self, text: str, position: int):
        super().__init__(f"invalid character {text[position]!r} at position {position} in {text!r}")
        self.position = position


Mat = tuple  # 16 ints, row-major

IDENTITY: Mat = tuple(1 if r == c else 0 for r in range(4) for c in range(4))


def _matmul(a: Mat, b: Mat) -> Mat:
    return tuple(
        a[4 * r] * b[c] + a[4 * r + 1] * b[4 + c] + a[4 * r + 2] * b[8 + c] + a[4 * r + 3] * b[12 + c]
        for r in range(4) for c in range(4)
    )


def _lmul_gen(i: int, m: Mat) -> Mat:
    """S_i * m: only row i changes."""
    row = [-m[4 * i + c] - sum(CARTAN[i][j] * m[4 * j + c] for j in range(4) if j != i) for c in range(4)]
    out = list(m)
    out[4 * i:4 * i + 4] = row
    return tuple(out)


def _rmul_gen(m: Mat, i: int) -> Mat:
    """m * S_i: column j becomes col_j - A[i][j] col_i."""
    ci = [m[4 * r + i] for r in range(4)]
    return tuple(m[4 * r + c] - CARTAN[i][c] * ci[r] for r in range(4) for c in range(4))


def _sigma(m: Mat) -> Mat:
    perm = (1, 0, 2, 3)
    return tuple(m[4 * perm[r] + perm[c]] for r in range(4) for c in range(4))


GEN_MATS = tuple(_lmul_gen(i, IDENTITY) for i in GENS)


def _neg_col(m: Mat, i: int) -> bool:
    # a real root is negative iff all its simple-root coordinates are <= 0
    return all(m[4 * r + i] <= 0 for r in range(4))


class GroupElement:
    """``tau^tau_flag * x`` with ``x`` given by its matrix (and inverse)."""

    __slots__ = ("tau", "mat", "inv", "_hash")

    def __init__(self, tau: int, mat: Mat, inv: Mat):
        self.tau = tau & 1
        self.mat = mat
        self.inv = inv
        self._hash = hash((self.tau, mat))

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.tau == other.tau and self.mat == other.mat

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __repr__(self):
        return f"GroupElement({format_word(self)!r})"

    def __str__(self):
        return format_word(self) or "e"

    def __reduce__(self):
        return (_rebuild, (self.tau, self.mat, self.inv))

    # conveniences
    def inverse(self) -> "GroupElement":
        return inverse(self)

    @property
    def length(self) -> int:
        return length(self)

    @property
    def core(self) -> "GroupElement":
        """The W'-part (tau stripped from the left)."""
        return GroupElement(0, self.mat, self.inv) if self.tau else self

    def word(self) -> str:
        return format_word(self)


def _rebuild(tau, mat, inv):
    return GroupElement(tau, mat, inv)


E = GroupElement(0, IDENTITY, IDENTITY)
TAU = GroupElement(1, IDENTITY, IDENTITY)
S = tuple(GroupElement(0, g, g) for g in GEN_MATS)


def gen(i: int) -> GroupElement:
    return S[i]


def sigma(w: GroupElement) -> GroupElement:
    """Conjugation by tau (s0 <-> s1)."""
    return GroupElement(w.tau, _sigma(w.mat), _sigma(w.inv))


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    # (tau^a x)(tau^b y) = tau^(a+b) sigma^b(x) y
    am, ai = (_sigma(a.mat), _sigma(a.inv)) if b.tau else (a.mat, a.inv)
    return GroupElement(a.tau ^ b.tau, _matmul(am, b.mat), _matmul(b.inv, ai))


def inverse(a: GroupElement) -> GroupElement:
    # (tau x)^-1 = x^-1 tau = tau sigma(x^-1)
    if a.tau:
        return GroupElement(1, _sigma(a.inv), _sigma(a.mat))
    return GroupElement(0, a.inv, a.mat)


def lmul_gen(i: int, w: GroupElement) -> GroupElement:
    # s_i tau^a x = tau^a sigma^a(s_i) x
    j = (1 - i if i < 2 else i) if w.tau else i
    return GroupElement(w.tau, _lmul_gen(j, w.mat), _rmul_gen(w.inv, j))


def rmul_gen(w: GroupElement, i: int) -> GroupElement:
    return GroupElement(w.tau, _rmul_gen(w.mat, i), _lmul_gen(i, w.inv))


def parse_word(text: str) -> GroupElement:
    """Evaluate a word over {0,1,2,3,t} left to right."""
    w = E
    for pos, ch in enumerate(text):
        if ch == "t":
            w = multiply(w, TAU)
        elif ch in "0123":
            w = rmul_gen(w, int(ch))
        else:
            raise WordParseError(text, pos)
    return w


def word_element(word: Iterable[int]) -> GroupElement:
    w = E
    for i in word:
        w = rmul_gen(w, i)
    return w


def _left_descents_core(mat: Mat, inv: Mat) -> list[int]:
    return [i for i in GENS if _neg_col(inv, i)]


def descents(w: GroupElement, side: str) -> frozenset:
    if side == "right":
        return frozenset(i for i in GENS if _neg_col(w.mat, i))
    if side == "left":
        d = [i for i in GENS if _neg_col(w.inv, i)]
        if w.tau:
            d = [1 - i if i < 2 else i for i in d]
        return frozenset(d)
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


_word_cache: dict = {}
_word_lock = threading.Lock()


def _core_word(mat: Mat, inv: Mat) -> tuple:
    hit = _word_cache.get(mat)
    if hit is not None:
        return hit
    word = []
    m, n = mat, inv
    while True:
        d = next((i for i in GENS if _neg_col(n, i)), None)
        if d is None:
            break
        word.append(d)
        m, n = _lmul_gen(d, m), _rmul_gen(n, d)
        hit = _word_cache.get(m)
        if hit is not None:
            word.extend(hit)
            break
    if m != IDENTITY and hit is None:
        raise AssertionError("descent stripping did not reach the identity")
    res = tuple(word)
    with _word_lock:
        _word_cache.setdefault(mat, res)
    return res


def canonical_word(w: GroupElement) -> tuple:
    """Reduced word of the W'-part, smallest left descent stripped first."""
    return _core_word(w.mat, w.inv)


def length(w: GroupElement) -> int:
    return len(_core_word(w.mat, w.inv))


def length_and_word(w: GroupElement) -> tuple[int, str]:
    word = _core_word(w.mat, w.inv)
    return len(word), "".join(map(str, word))


def format_word(w: GroupElement) -> str:
    return ("t" if w.tau else "") + "".join(map(str, _core_word(w.mat, w.inv)))


def bruhat_leq(y: GroupElement, w: GroupElement) -> bool:
    if y.tau != w.tau:
        return False
    ym, yi, wm, wi = y.mat, y.inv, w.mat, w.inv
    ly, lw = len(_core_word(ym, yi)), len(_core_word(wm, wi))
    while True:
        if ly > lw:
            return False
        if ly == lw:
            return ym == wm
        s = next(i for i in GENS if _neg_col(wi, i))
        wm, wi, lw = _lmul_gen(s, wm), _rmul_gen(wi, s), lw - 1
        if _neg_col(yi, s):
            ym, yi, ly = _lmul_gen(s, ym), _rmul_gen(yi, s), ly - 1


def lower_interval(w: GroupElement) -> set:
    """All v <= w (w must have tau_flag 0)."""
    if w.tau:
        raise ValueError("lower_interval is computed in W'; strip tau first")
    b = ball()
    wid = b.id_of(w)
    return {b.element(i) for i in b.interval(wid)}


class InfiniteParabolicError(ValueError):
    pass


def parabolic_longest(subset: Iterable[int]) -> GroupElement:
    subset = sorted(set(subset))
    if set(subset) == set(GENS):
        raise InfiniteParabolicError("the full set of simple reflections generates an infinite group")
    # climb: multiply by a non-descent from I until every s in I is a left descent
    w = E
    while True:
        d = descents(w, "left")
        s = next((i for i in subset if i not in d), None)
        if s is None:
            return w
        w = lmul_gen(s, w)


# ---------------------------------------------------------------------------
# ball of W' up to a given length, numbered by length

class Ball:
    """Elements of W' with length <= radius, ids nondecreasing in length."""

    def __init__(self, radius: int = 0):
        self.mats: list = [IDENTITY]
        self.invs: list = [IDENTITY]
        self.index: dict = {IDENTITY: 0}
        self.lengths_list: list = [0]
        self.level_start = [0, 1]
        self.radius = 0
        self._lmul = [[-1] for _ in GENS]
        self._rmul = [[-1] for _ in GENS]
        self._sigma = [0]
        self._inv = [0]
        self._lock = threading.RLock()
        self._arrays = None
        self._intervals: dict = {0: np.zeros(1, dtype=np.int32)}
        self.extend_to(radius)

    def __len__(self):
        return len(self.mats)

    def extend_to(self, radius: int) -> None:
        with self._lock:
            while self.radius < radius:
                self._grow()

    def _grow(self) -> None:
        lo, hi = self.level_start[-2], self.level_start[-1]
        new_mats, new_invs = [], []
        for k in range(lo, hi):
            m, n = self.mats[k], self.invs[k]
            for i in GENS:
                if self._lmul[i][k] >= 0:
                    continue
                x = _lmul_gen(i, m)
                if x not in self.index:
                    self.index[x] = len(self.mats) + len(new_mats)
                    new_mats.append(x)
                    new_invs.append(_rmul_gen(n, i))
        start = len(self.mats)
        self.mats.extend(new_mats)
        self.invs.extend(new_invs)
        self.radius += 1
        self.lengths_list.extend([self.radius] * len(new_mats))
        self.level_start.append(len(self.mats))
        for i in GENS:
            self._lmul[i].extend([-1] * len(new_mats))
            self._rmul[i].extend([-1] * len(new_mats))
        self._sigma.extend([-1] * len(new_mats))
        self._inv.extend([-1] * len(new_mats))
        idx = self.index
        for k in range(lo, len(self.mats)):
            m = self.mats[k]
            for i in GENS:
                if self._lmul[i][k] < 0:
                    self._lmul[i][k] = idx.get(_lmul_gen(i, m), -1)
                if self._rmul[i][k] < 0:
                    self._rmul[i][k] = idx.get(_rmul_gen(m, i), -1)
        for k in range(start, len(self.mats)):
            self._sigma[k] = idx[_sigma(self.mats[k])]
            self._inv[k] = idx[self.invs[k]]
        self._arrays = None

    def _tables(self):
        arr = self._arrays
        if arr is None:
            with self._lock:
                arr = (
                    np.array(self._lmul, dtype=np.int32),
                    np.array(self._rmul, dtype=np.int32),
                    np.array(self.lengths_list, dtype=np.int32),
                    np.array(self._sigma, dtype=np.int32),
                    np.array(self._inv, dtype=np.int32),
                )
                self._arrays = arr
        return arr

    @property
    def lmul(self) -> np.ndarray:
        return self._tables()[0]

    @property
    def rmul(self) -> np.ndarray:
        return self._tables()[1]

    @property
    def lengths(self) -> np.ndarray:
        return self._tables()[2]

    @property
    def sigma(self) -> np.ndarray:
        return self._tables()[3]

    @property
    def inv(self) -> np.ndarray:
        return self._tables()[4]

    def id_of(self, w: GroupElement) -> int:
        """Id of the W'-part of ``w`` (the ball grows if needed)."""
        k = self.index.get(w.mat)
        if k is None:
            self.extend_to(length(w))
            k = self.index[w.mat]
        return k

    def element(self, k: int, tau: int = 0) -> GroupElement:
        return GroupElement(tau, self.mats[k], self.invs[k])

    def length(self, k: int) -> int:
        return self.lengths_list[k]

    def left_descent(self, k: int) -> int:
        """Smallest left descent of id k, or -1 for the identity."""
        lk = self.lengths_list[k]
        for i in GENS:
            j = self._lmul[i][k]
            if 0 <= j and self.lengths_list[j] < lk:
                return i
        return -1

    def right_descent(self, k: int) -> int:
        lk = self.lengths_list[k]
        for i in GENS:
            j = self._rmul[i][k]
            if 0 <= j and self.lengths_list[j] < lk:
                return i
        return -1

    def interval(self, k: int) -> np.ndarray:
        """Sorted ids of [e, k]."""
        from . import kernels

        hit = self._intervals.get(k)
        if hit is not None:
            return hit
        chain = []
        cur = k
        while cur not in self._intervals:
            s = self.left_descent(cur)
            chain.append((cur, s))
            cur = self._lmul[s][cur]
        lmul = self.lmul
        ys = self._intervals[cur]
        for node, s in reversed(chain):
            ys = kernels.interval_union(ys, lmul[s])
            self._intervals.setdefault(node, ys)
        return self._intervals[k]


_ball: Ball | None = None
_ball_lock = threading.Lock()


def ball() -> Ball:
    global _ball
    if _ball is None:
        with _ball_lock:
            if _ball is None:
                _ball = Ball(8)
    return _ball
