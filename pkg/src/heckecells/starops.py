"""Left and right strings, star operations and the string identities.

For ``{s, t}`` with ``m = m(s, t)`` in {3, 4} and ``w`` with ``sw > w`` and
``tw > w``, the left strings are ``sw, tsw, stsw, ...`` and
``tw, stw, tstw, ...`` (m - 1 elements each).  The star operation sends the
i-th element of a string to the (m - i)-th.  Strings are computed from
descent sets only, independently of the cell tables.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import celldata
from .asymring import gamma_in_cells
from .klbase import KLTable, default_table
from .weylgroup import GroupElement, coxeter_order, descents, format_word, lmul_gen, rmul_gen

STAR_PAIRS = ((0, 2), (1, 2), (2, 3))


class NoStringError(ValueError):
    pass


@dataclass(frozen=True)
class StringDescriptor:
    pair: tuple
    side: str
    members: tuple
    position: int  # 1-based index of the queried element

    def position_of(self, w: GroupElement) -> int:
        return self.members.index(w) + 1

    def to_json(self) -> dict:
        return {"pair": list(self.pair), "side": self.side,
                "members": [format_word(w) for w in self.members], "position": self.position}


def _mul(g: int, w: GroupElement, side: str) -> GroupElement:
    return lmul_gen(g, w) if side == "left" else rmul_gen(w, g)


def _norm_pair(pair) -> tuple:
    s, t = sorted(pair)
    m = coxeter_order(s, t)
    if m not in (3, 4):
        raise ValueError(f"pair {pair} has order {m}, strings need order 3 or 4")
    return (s, t)


def string_of(w: GroupElement, pair, side: str = "left"):
    """The string through ``w`` with respect to ``pair``, or None."""
    if side not in ("left", "right"):
        raise ValueError(side)
    st = _norm_pair(pair)
    m = coxeter_order(*st)
    if len(descents(w, side) & set(st)) != 1:
        return None
    cur, letters = w, []
    while True:
        d = descents(cur, side) & set(st)
        if not d:
            break
        g = next(iter(d))
        letters.append(g)
        cur = _mul(g, cur, side)
    first = letters[-1]
    other = st[0] if first == st[1] else st[1]
    members, x = [], cur
    for i in range(m - 1):
        x = _mul(first if i % 2 == 0 else other, x, side)
        members.append(x)
    return StringDescriptor(st, side, tuple(members), len(letters))


def star(w: GroupElement, pair, side: str = "left") -> GroupElement:
    sd = string_of(w, pair, side)
    if sd is None:
        raise NoStringError(f"{format_word(w) or 'e'} lies in no {side} string for {tuple(pair)}")
    m = len(sd.members) + 1
    return sd.members[m - sd.position - 1]


# -- mu-tilde identities (left strings, order 3 and 4) -----------------------

def _left_strings_in_ball(pair, maxlen: int, table: KLTable) -> list:
    """Left strings (as id tuples) whose members have length <= maxlen."""
    b = table.ball
    b.extend_to(maxlen + 1)
    s, t = pair
    m = coxeter_order(s, t)
    lmul, lengths = b.lmul, b.lengths
    out = []
    for base in range(len(b)):
        lb = int(lengths[base])
        if lb + m - 1 > maxlen:
            break
        if lengths[lmul[s][base]] < lb or lengths[lmul[t][base]] < lb:
            continue
        for first, other in ((s, t), (t, s)):
            x, mem = base, []
            for i in range(m - 1):
                x = int(lmul[first if i % 2 == 0 else other][x])
                mem.append(x)
            out.append(tuple(mem))
    return out


def _mu_map(maxlen: int, table: KLTable) -> dict:
    b = table.ball
    b.extend_to(maxlen)
    out = {}
    for w in range(len(b)):
        if b.length(w) > maxlen:
            break
        zs, mus = table.mu_list(w)
        for z, mu in zip(zs.tolist(), mus.tolist()):
            out[(z, w)] = mu
            out[(w, z)] = mu
    return out


def _lset(k: int, pair, b) -> frozenset:
    lk = b.length(k)
    return frozenset(g for g in pair if b.length(int(b.lmul[g][k])) < lk)


def _check_matrix(a: list, m: int) -> list:
    """Names of the violated identities for the (m-1)x(m-1) matrix a."""
    bad = []
    if m == 3:
        if a[0][0] != a[1][1]:
            bad.append("a11=a22")
        if a[0][1] != a[1][0]:
            bad.append("a12=a21")
    else:
        if a[0][0] != a[2][2]:
            bad.append("a11=a33")
        if a[0][2] != a[2][0]:
            bad.append("a13=a31")
        if a[1][1] != a[0][0] + a[0][2]:
            bad.append("a22=a11+a13")
        if not a[0][1] == a[1][0] == a[1][2] == a[2][1]:
            bad.append("a12=a21=a23=a32")
    return bad


def verify_mu_identities(maxlen: int = 9, table: KLTable | None = None) -> dict:
    """Order-3 and order-4 identities for all pairs of left strings in the ball."""
    table = table or default_table()
    b = table.ball
    mu = _mu_map(maxlen, table)
    report = {}
    for pair in STAR_PAIRS:
        m = coxeter_order(*pair)
        strings = _left_strings_in_ball(pair, maxlen, table)
        lsets = {k: _lset(k, pair, b) for sx in strings for k in sx}
        checked = nontrivial = 0
        failures = []
        for sx, sy in itertools.product(strings, repeat=2):
            a = [[mu.get((x, y), 0) if lsets[x] == lsets[y] else 0 for y in sy] for x in sx]
            checked += 1
            if any(any(r) for r in a):
                nontrivial += 1
            bad = _check_matrix(a, m)
            if bad:
                failures.append({"x": [format_word(b.element(k)) for k in sx],
                                 "y": [format_word(b.element(k)) for k in sy], "violated": bad})
        report[f"{pair[0]}{pair[1]}"] = {"m": m, "string_pairs": checked, "nontrivial": nontrivial,
                                         "failures": failures[:20], "failure_count": len(failures)}
    return {"pass": all(r["failure_count"] == 0 for r in report.values()), "pairs": report}


# -- star operations on cell elements ---------------------------------------

def verify_stars(maxlen: int = 12, k_max: int = 1, sample: int = 50, seed: int = 0) -> dict:
    """Cell-compatibility of strings and stars, plus the commutation rule.

    For every enumerated element of E, F, D with length <= maxlen: members of
    its left (right) strings lie in the same left (right) cell, the star image
    stays in the cell and star is an involution.  The commutation
    ``*(x^#) = (*x)^#`` is checked on ``sample`` random elements of the ball
    and of the cells that admit both strings.
    """
    elements = [(c, w) for cell in celldata.SUPPORTED for c, w in celldata.enumerate_cell(cell, k_max)
                if w.length <= maxlen]
    failures = []
    strings = 0
    for c, w in elements:
        for pair in STAR_PAIRS:
            for side in ("left", "right"):
                sd = string_of(w, pair, side)
                if sd is None:
                    continue
                strings += 1
                for x in sd.members:
                    cx = celldata.locate(x)
                    same = cx is not None and cx.cell == c.cell and (
                        cx.j == c.j if side == "left" else cx.i == c.i)
                    if not same:
                        failures.append({"check": "string-in-cell", "w": format_word(w), "member": format_word(x),
                                         "pair": list(pair), "side": side})
                y = star(w, pair, side)
                if star(y, pair, side) != w:
                    failures.append({"check": "involution", "w": format_word(w), "pair": list(pair), "side": side})
    comm = _commutation(elements, sample, seed)
    failures.extend(comm["failures"])
    return {"pass": not failures, "elements": len(elements), "strings": strings,
            "commutation_checked": comm["checked"], "failures": failures[:50], "failure_count": len(failures)}


def _commutation(elements: list, sample: int, seed: int) -> dict:
    rng = random.Random(seed)
    pool = []
    for _, w in elements:
        for p, q in itertools.product(STAR_PAIRS, repeat=2):
            if string_of(w, p, "left") and string_of(w, q, "right"):
                pool.append((w, p, q))
    rng.shuffle(pool)
    chosen = pool[:sample]
    failures = []
    for w, p, q in chosen:
        lw = star(w, p, "left")
        rw = star(w, q, "right")
        ok = string_of(lw, q, "right") is not None and string_of(rw, p, "left") is not None
        if ok:
            ok = star(rw, p, "left") == star(lw, q, "right")
        if not ok:
            failures.append({"check": "commutation", "w": format_word(w), "left": list(p), "right": list(q)})
    return {"checked": len(chosen), "failures": failures}


# -- gamma identities for order-4 strings -----------------------------------

def _word_mul(letters: str, w: GroupElement, side: str) -> GroupElement:
    """Apply generators in ``letters`` (read right to left for the left side)."""
    if side == "left":
        for ch in reversed(letters):
            w = lmul_gen(int(ch), w)
    else:
        for ch in letters:
            w = rmul_gen(w, int(ch))
    return w


def _coset_min(w: GroupElement, pair, side: str) -> GroupElement:
    while True:
        d = descents(w, side) & set(pair)
        if not d:
            return w
        w = _mul(next(iter(d)), w, side)


GAMMA_IDENTITIES = ("a", "b", "c", "d", "e", "f")


def _left_terms(s: int, t: int, w, u, v):
    """Each identity as (lhs triples, rhs triples); the six left-hand identities."""
    S, T = str(s), str(t)

    def L(word, x):
        return _word_mul(word, x, "left")
    return {
        "a": ([(L(T + S, w), u, L(T, v))], [(L(S, w), u, L(S + T, v))]),
        "b": ([(L(T + S, w), u, L(T + S, v))], [(L(S, w), u, L(S, v)), (L(S, w), u, L(S + T + S, v))]),
        "c": ([(L(T + S, w), u, L(T + S + T, v))], [(L(S, w), u, L(S + T, v))]),
        "d": ([(L(T + S + T, w), u, L(T, v)), (L(T, w), u, L(T, v))], [(L(S + T, w), u, L(S + T, v))]),
        "e": ([(L(T + S + T, w), u, L(T + S, v))], [(L(S + T, w), u, L(S + T + S, v))]),
        "f": ([(L(T + S + T, w), u, L(T + S + T, v)), (L(T, w), u, L(T + S + T, v))],
              [(L(S + T, w), u, L(S + T, v))]),
    }


def _right_terms(s: int, t: int, w, u, v):
    """Mirror versions of the six identities; u and v are right coset minima."""
    S, T = str(s), str(t)

    def R(x, word):
        return _word_mul(word, x, "right")
    return {
        "a'": ([(w, R(u, T), R(v, S + T))], [(w, R(u, T + S), R(v, S))]),
        "b'": ([(w, R(u, S + T), R(v, S + T))], [(w, R(u, S), R(v, S)), (w, R(u, S + T + S), R(v, S))]),
        "c'": ([(w, R(u, T + S + T), R(v, S + T))], [(w, R(u, T + S), R(v, S))]),
        "d'": ([(w, R(u, T), R(v, T + S + T)), (w, R(u, T), R(v, T))], [(w, R(u, T + S), R(v, T + S))]),
        "e'": ([(w, R(u, S + T), R(v, T + S + T))], [(w, R(u, S + T + S), R(v, T + S))]),
        "f'": ([(w, R(u, T + S + T), R(v, T + S + T)), (w, R(u, T + S + T), R(v, T))],
               [(w, R(u, T + S), R(v, T + S))]),
    }


def _configs(sample: int, seed: int, k_max: int, max_len: int):
    """Random configurations (s, t, w, u, v, side) drawn from the cell D.

    The string elements are chosen so that the cell conditions for a nonzero
    gamma can hold: for the left identities ``x ~R z`` for members x, z of the
    w- and v-strings and u joins their cells; symmetrically on the right.
    """
    rng = random.Random(seed)
    elems = [(c, w) for c, w in celldata.enumerate_cell("D", k_max) if w.length <= max_len]
    configs = []
    for side in ("left", "right"):
        in_string = [(c, w) for c, w in elems if string_of(w, (2, 3), side) is not None]
        for _ in range(sample):
            s, t = rng.choice(((2, 3), (3, 2)))
            cx, x = rng.choice(in_string)
            if side == "left":
                zs = [(c, w) for c, w in in_string if c.i == cx.i]
                cz, z = rng.choice(zs)
                mids = [w for c, w in elems if c.i == cx.j and c.j == cz.j]
            else:
                zs = [(c, w) for c, w in in_string if c.j == cx.j]
                cz, z = rng.choice(zs)
                mids = [w for c, w in elems if c.j == cx.i and c.i == cz.i]
            mid = rng.choice(mids)
            configs.append((s, t, _coset_min(x, (2, 3), side), mid, _coset_min(z, (2, 3), side), side))
    return configs


def verify_gamma_identities(sample: int = 10, seed: int = 0, k_max: int = 0, max_len: int = 9,
                            method: str = "definition", threads: int = 1) -> dict:
    """Order-4 gamma identities and their mirrors on random D configurations."""
    from ._parallel import pmap

    configs = _configs(sample, seed, k_max, max_len)

    def run(cfg):
        s, t, a, mid, c, side = cfg
        terms = _left_terms(s, t, a, mid, c) if side == "left" else _right_terms(s, t, mid, a, c)
        out = []
        for name, (lhs, rhs) in terms.items():
            lv = sum(gamma_in_cells(x, y, z, method) for x, y, z in lhs)
            rv = sum(gamma_in_cells(x, y, z, method) for x, y, z in rhs)
            out.append({"identity": name, "s": s, "t": t, "side": side,
                        "w": format_word(a if side == "left" else mid), "u": format_word(mid if side == "left" else a),
                        "v": format_word(c), "lhs": lv, "rhs": rv, "pass": lv == rv})
        return out

    rows = [r for chunk in pmap(run, configs, threads) for r in chunk]
    nonzero = sum(1 for r in rows if r["lhs"] or r["rhs"])
    return {"pass": all(r["pass"] for r in rows), "instances": len(rows), "nonzero": nonzero,
            "failures": [r for r in rows if not r["pass"]]}


def verify_string_identities(maxlen: int = 9, sample: int = 10, seed: int = 0, threads: int = 1) -> dict:
    mu = verify_mu_identities(maxlen)
    stars = verify_stars(min(maxlen + 3, 14), 1, 50, seed)
    gam = verify_gamma_identities(sample, seed, threads=threads)
    return {"pass": mu["pass"] and stars["pass"] and gam["pass"], "mu_identities": mu,
            "stars": stars, "gamma_identities": gam}
