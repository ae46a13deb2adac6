"""Structural cross-checks: oracles against the fast paths, distinguished
involutions, descent sets on cells."""
from __future__ import annotations

from . import celldata
from .klbase import KLTable, default_table
from .oracles import ProductOracle, WordModel, subword_leq
from .weylgroup import GENS, ball, bruhat_leq, canonical_word, descents, format_word, parse_word, word_element

NAMED_INVOLUTIONS = (("10", "E"), ("13", "F"), ("013", "D"), ("", "H"), ("2323", "C"))


def verify_distinguished(k_max: int = 1, table: KLTable | None = None) -> dict:
    """Named distinguished involutions and one per left cell of E, F, D."""
    table = table or default_table()
    named = []
    for word, cell in NAMED_INVOLUTIONS:
        ok = table.is_distinguished(parse_word(word), celldata.a_value(cell))
        named.append({"word": word, "cell": cell, "a": celldata.a_value(cell), "distinguished": ok})
    per_cell = {}
    for cell in celldata.SUPPORTED:
        a = celldata.a_value(cell)
        found: dict = {}
        for c, w in celldata.enumerate_cell(cell, k_max):
            if table.is_distinguished(w, a):
                found.setdefault(c.j, []).append(format_word(w))
        n = celldata.LEFT_CELL_COUNTS[cell]
        counts = {j: len(found.get(j, [])) for j in range(1, n + 1)}
        per_cell[cell] = {"left_cells": n, "involutions": {str(j): found.get(j, []) for j in range(1, n + 1)},
                          "pass": all(v == 1 for v in counts.values())}
    ok = all(r["distinguished"] for r in named) and all(r["pass"] for r in per_cell.values())
    return {"pass": ok, "named": named, "cells": per_cell}


def check_word_model(radius: int) -> dict:
    """Element counts per length and class-to-matrix bijection up to ``radius``."""
    model = WordModel(radius)
    b = ball()
    b.extend_to(radius)
    counts_matrix = [b.level_start[n + 1] - b.level_start[n] for n in range(radius + 1)]
    seen = set()
    clashes = 0
    wrong_len = 0
    for n, level in enumerate(model.levels):
        for word in level:
            w = word_element(word)
            if w.length != n:
                wrong_len += 1
            if w in seen:
                clashes += 1
            seen.add(w)
    ok = model.counts() == counts_matrix and not clashes and not wrong_len
    return {"pass": ok, "word_counts": model.counts(), "matrix_counts": counts_matrix,
            "clashes": clashes, "length_mismatch": wrong_len}


def check_left_right(max_len: int) -> dict:
    b = ball()
    b.extend_to(max_len)
    left, right = KLTable("left"), KLTable("right")
    pairs = mismatches = 0
    for w in range(b.level_start[max_len + 1]):
        ys, offs, co = left.row(w)
        ys2, offs2, co2 = right.row(w)
        pairs += len(ys)
        if ys.tolist() != ys2.tolist() or offs.tolist() != offs2.tolist() or co.tolist() != co2.tolist():
            mismatches += 1
    return {"pass": not mismatches, "elements": b.level_start[max_len + 1], "pairs": pairs, "mismatches": mismatches}


def check_degree_bound(max_len: int, table: KLTable | None = None) -> dict:
    table = table or default_table()
    b = table.ball
    b.extend_to(max_len)
    bad = []
    pairs = 0
    for w in range(b.level_start[max_len + 1]):
        ys, offs, co = table.row(w)
        lw = b.length(w)
        for a, y in enumerate(ys.tolist()):
            deg = int(offs[a + 1] - offs[a]) - 1
            pairs += 1
            if y == w:
                if co[offs[a]:offs[a + 1]].tolist() != [1]:
                    bad.append([format_word(b.element(y)), format_word(b.element(w))])
            elif deg < 0 or 2 * deg > lw - b.length(y) - 1:
                bad.append([format_word(b.element(y)), format_word(b.element(w))])
    return {"pass": not bad, "pairs": pairs, "violations": bad[:10]}


def check_product_oracle(max_len: int, table: KLTable | None = None) -> dict:
    table = table or default_table()
    b = table.ball
    b.extend_to(max_len)
    oracle = ProductOracle()
    mismatches = []
    n = b.level_start[max_len + 1]
    for wi in range(n):
        w = b.element(wi)
        for yi in range(n):
            if b.length(yi) > b.length(wi):
                break
            y = b.element(yi)
            if table.kl_poly(y, w) != oracle.kl_poly(y, w):
                mismatches.append([format_word(y), format_word(w)])
    return {"pass": not mismatches, "elements": n, "mismatches": mismatches[:10]}


def check_bruhat(max_len: int) -> dict:
    b = ball()
    b.extend_to(max_len)
    n = b.level_start[max_len + 1]
    words = [canonical_word(b.element(k)) for k in range(n)]
    bad = []
    for wi in range(n):
        iv = set(b.interval(wi).tolist())
        for yi in range(n):
            if b.length(yi) > b.length(wi):
                break
            sub = subword_leq(words[yi], words[wi])
            if sub != (yi in iv) or sub != bruhat_leq(b.element(yi), b.element(wi)):
                bad.append([format_word(b.element(yi)), format_word(b.element(wi))])
    return {"pass": not bad, "elements": n, "mismatches": bad[:10]}


def check_dihedral(table: KLTable | None = None) -> dict:
    table = table or default_table()
    elems = {word_element(w) for w in ((), (2,), (3,), (2, 3), (3, 2), (2, 3, 2), (3, 2, 3), (2, 3, 2, 3))}
    bad = [[format_word(y), format_word(w)] for w in elems for y in elems
           if bruhat_leq(y, w) and table.kl_poly(y, w) != 1]
    return {"pass": not bad, "mismatches": bad}


def check_descent_constancy(k_max: int = 2) -> dict:
    bad = []
    for cell in celldata.SUPPORTED:
        right: dict = {}
        left: dict = {}
        for c, w in celldata.enumerate_cell(cell, k_max):
            right.setdefault(c.j, set()).add(descents(w, "right"))
            left.setdefault(c.i, set()).add(descents(w, "left"))
        bad += [f"{cell} left cell {j}" for j, v in right.items() if len(v) != 1]
        bad += [f"{cell} right cell {i}" for i, v in left.items() if len(v) != 1]
    return {"pass": not bad, "violations": bad}


def verify_oracles(word_radius: int = 8, kl_len: int = 10, product_len: int = 6, bruhat_len: int = 6) -> dict:
    parts = {
        "word_model": check_word_model(word_radius),
        "left_right_kl": check_left_right(kl_len),
        "degree_bound": check_degree_bound(kl_len),
        "product_oracle": check_product_oracle(product_len),
        "bruhat_subword": check_bruhat(bruhat_len),
        "dihedral": check_dihedral(),
        "descent_constancy": check_descent_constancy(),
    }
    return {"pass": all(p["pass"] for p in parts.values()), **parts}


__all__ = ["verify_distinguished", "verify_oracles", "GENS"]
