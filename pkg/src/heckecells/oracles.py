"""Independent reference computations used to cross-check the fast paths.

Nothing here touches the ball tables or the kernels:

* ``WordModel`` realizes W' as reduced words modulo braid moves (Tits'
  solution of the word problem) and enumerates it by length.
* ``subword_leq`` is the subword criterion for the Bruhat order.
* ``kl_by_products`` builds C_w by multiplying C_s along a reduced word in
  the T~-basis and subtracting the lower C-terms.
"""
from __future__ import annotations

from functools import lru_cache

from .exactnum import LaurentV
from .weylgroup import GENS, coxeter_order, GroupElement, canonical_word, word_element

ZETA = LaurentV({1: 1, -1: -1})
VINV = LaurentV({-1: 1})


def _braid_moves(word: tuple):
    n = len(word)
    for i in range(n):
        for s in GENS:
            for t in GENS:
                if s == t:
                    continue
                m = coxeter_order(s, t)
                if i + m > n:
                    continue
                alt = tuple(s if j % 2 == 0 else t for j in range(m))
                if word[i:i + m] == alt:
                    swap = tuple(t if j % 2 == 0 else s for j in range(m))
                    yield word[:i] + swap + word[i + m:]


@lru_cache(maxsize=None)
def braid_class(word: tuple) -> frozenset:
    """All words reachable from ``word`` by braid moves."""
    seen = {word}
    todo = [word]
    while todo:
        w = todo.pop()
        for x in _braid_moves(w):
            if x not in seen:
                seen.add(x)
                todo.append(x)
    return frozenset(seen)


def is_reduced_word(word: tuple) -> bool:
    """Tits: a word is reduced iff no braid-equivalent word has ss."""
    return all(x[i] != x[i + 1] for x in braid_class(tuple(word)) for i in range(len(x) - 1))


class WordModel:
    """W' as classes of reduced words; class key = lexicographically least word."""

    def __init__(self, radius: int):
        self.levels = [[()]]
        for n in range(1, radius + 1):
            nxt = set()
            for w in self.levels[-1]:
                for s in GENS:
                    cand = w + (s,)
                    if is_reduced_word(cand):
                        nxt.add(min(braid_class(cand)))
            self.levels.append(sorted(nxt))

    def counts(self) -> list:
        return [len(lv) for lv in self.levels]


def subword_leq(y: tuple, w: tuple) -> bool:
    """y <= w iff some reduced word of y is a subword of the reduced word w."""
    if len(y) > len(w):
        return False
    for x in braid_class(tuple(y)):
        it = iter(w)
        if all(ch in it for ch in x):
            return True
    return False


def _t_times_s(vec: dict, s: int) -> dict:
    """vec * T~_s on W' elements given by matrices."""
    from .weylgroup import rmul_gen

    out: dict = {}
    for w, c in vec.items():
        ws = rmul_gen(w, s)
        if ws.length > w.length:
            out[ws] = out.get(ws, LaurentV()) + c
        else:
            out[ws] = out.get(ws, LaurentV()) + c
            out[w] = out.get(w, LaurentV()) + c * ZETA
    return {k: v for k, v in out.items() if v}


def _s_times_t(vec: dict, s: int) -> dict:
    from .weylgroup import lmul_gen

    out: dict = {}
    for w, c in vec.items():
        sw = lmul_gen(s, w)
        out[sw] = out.get(sw, LaurentV()) + c
        if sw.length < w.length:
            out[w] = out.get(w, LaurentV()) + c * ZETA
    return {k: v for k, v in out.items() if v}


class ProductOracle:
    """C_w via ``C_s C_v - sum_z mu(z, v) C_z`` in the T~-basis."""

    def __init__(self):
        self.cache: dict = {}

    def c(self, w: GroupElement) -> dict:
        w = w.core
        hit = self.cache.get(w)
        if hit is not None:
            return hit
        word = canonical_word(w)
        if not word:
            res = {w: LaurentV({0: 1})}
        else:
            s = word[0]
            v = word_element(word[1:])
            cv = self.c(v)
            # C_s = T~_s + v^-1 T~_e
            res = _s_times_t(cv, s)
            for k, c in cv.items():
                res[k] = res.get(k, LaurentV()) + c * VINV
            lv = v.length
            for z, cz in list(cv.items()):
                if z == v:
                    continue
                gap = lv - z.length
                coeff = cz.coeff(-1)  # v^{l(z)-l(v)} P_{z,v}: mu sits at v^-1
                if gap % 2 == 1 and coeff and _is_left_descent(s, z):
                    for k, c in self.c(z).items():
                        res[k] = res.get(k, LaurentV()) - c * coeff
            res = {k: c for k, c in res.items() if c}
        self.cache[w] = res
        return res

    def kl_poly(self, y: GroupElement, w: GroupElement) -> LaurentV:
        """P_{y,w} read off from C_w."""
        if y.tau != w.tau:
            return LaurentV()
        cw = self.c(w)
        c = cw.get(y.core)
        if c is None:
            return LaurentV()
        return c.shift(w.length - y.length)


def _is_left_descent(s: int, z: GroupElement) -> bool:
    from .weylgroup import lmul_gen

    return lmul_gen(s, z).length < z.length


def kl_by_products(y: GroupElement, w: GroupElement, oracle: ProductOracle | None = None) -> LaurentV:
    return (oracle or ProductOracle()).kl_poly(y, w)
