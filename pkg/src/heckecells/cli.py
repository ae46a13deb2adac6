"""Command-line interface.

Every command prints one JSON document on standard output; logging goes to
standard error.  Exit status: 0 success, 1 verification failure, 2 usage
error.
"""
from __future__ import annotations

import argparse
import io
import json
import logging
import os
import sys
from contextlib import redirect_stdout
from pathlib import Path

from . import __version__

log = logging.getLogger("heckecells")

DEFAULT_BUDGET = 22


class UsageError(Exception):
    pass


# -- helpers -------------------------------------------------------------------

def _word(text):
    from .weylgroup import WordParseError, parse_word

    if text is None:
        raise UsageError("missing word argument")
    try:
        return parse_word(text)
    except WordParseError as exc:
        raise UsageError(str(exc)) from None


def _budget(args, *elems):
    if args.force:
        return
    for w in elems:
        if w.length > args.budget:
            raise UsageError(f"element of length {w.length} exceeds the budget {args.budget}; use --force")


def _pair(text: str) -> tuple:
    text = "".join(c for c in (text or "") if c not in ",{} ")
    if not text or len(text) != 2 or not all(c in "0123" for c in text):
        raise UsageError(f"pair must be two generator digits, got {text!r}")
    return tuple(sorted(int(c) for c in text))


def _setup(args):
    from . import klbase

    path = os.environ.get("HECKE_CACHE") or args.cache
    if path or klbase._default is None:
        klbase.set_default_table(klbase.KLTable(cache_path=path or None))


def _finish():
    from . import klbase

    if klbase._default is not None and klbase._default.cache_path:
        try:
            klbase._default.save_cache()
        except OSError as exc:
            log.warning("could not write cache: %s", exc)


# -- commands ------------------------------------------------------------------

def cmd_kl(args):
    from .klbase import kl_poly

    y, w = _word(args.y), _word(args.w)
    _budget(args, w)
    return {"poly": kl_poly(y, w).to_json()}, True


def cmd_mu(args):
    from .klbase import default_table

    y, w = _word(args.y), _word(args.w)
    _budget(args, y, w)
    t = default_table()
    return {"mu": t.mu(y, w), "mu_tilde": t.mu_tilde(y, w)}, True


def cmd_hprod(args):
    from .heckealg import c_mul

    x, y = _word(args.x), _word(args.y)
    _budget(args, x, y)
    return c_mul(x, y).to_json(), True


def cmd_fprod(args):
    from .heckealg import t_mul

    x, y = _word(args.x), _word(args.y)
    _budget(args, x, y)
    return t_mul(x, y).to_json(), True


def cmd_gamma(args):
    from .asymring import gamma
    from .celldata import CellError

    x, y, z = _word(args.x), _word(args.y), _word(args.z)
    _budget(args, x, y)
    try:
        return {"gamma": gamma(x, y, z, args.method)}, True
    except CellError as exc:
        raise UsageError(str(exc)) from None


def cmd_jprod(args):
    from .asymring import t_mul
    from .celldata import CellError

    x, y = _word(args.x), _word(args.y)
    _budget(args, x, y)
    try:
        prod = t_mul(x, y, args.method, audit=args.audit)
    except CellError as exc:
        raise UsageError(str(exc)) from None
    return {"terms": prod.to_json()}, True


def cmd_cell(args):
    from .celldata import CellError, a_value, enumerate_cell, locate
    from .weylgroup import format_word

    if args.action == "locate":
        w = _word(args.w)
        c = locate(w)
        if c is None:
            return {"word": format_word(w), "supported": False, "coords": None}, True
        return {"word": format_word(w), "supported": True, "coords": c.to_json(), "a": a_value(c.cell),
                "left_cell": c.j}, True
    cell = (args.cell or "").upper()
    try:
        elems = enumerate_cell(cell, args.kmax)
    except CellError as exc:
        raise UsageError(str(exc)) from None
    return {"cell": cell, "kmax": args.kmax, "count": len(elems),
            "elements": [{"coords": c.to_json(), "word": format_word(w)} for c, w in elems]}, True


def cmd_star(args):
    from .starops import string_of, star
    from .weylgroup import format_word

    w = _word(args.w)
    pair = _pair(args.pair)
    try:
        sd = string_of(w, pair, args.side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if sd is None:
        raise UsageError(f"{format_word(w) or 'e'} lies in no {args.side} string for {args.pair}")
    return {"string": sd.to_json(), "star": format_word(star(w, pair, args.side))}, True


LEMMA_NAMES = {"lemma3.5": ["E_xk"], "lemma4.4": ["F_xk"], "lemmaqx15": ["D_uk"],
               "lemmaclub": ["club_b", "club_c"], "lemmaspade": ["spade_b", "spade_c"]}
THEOREMS = {"thm3.2": "E", "thm4.2": "F", "thm5.5": "D"}


def _verify_lemmas(args, names):
    from .asymring import lemma_sides, verify_lemma
    from .celldata import realize

    if not args.force:
        longest = max(realize(c).length for n in names for prods, _ in [lemma_sides(n, args.kmax, args.lmax)]
                      for xy in prods for c in xy)
        if longest > args.budget:
            raise UsageError(f"factors of length {longest} exceed the budget {args.budget}; use --force")
    reports = [verify_lemma(n, args.kmax, args.lmax, args.method, args.check_fastpath, args.threads) for n in names]
    if len(reports) == 1:
        return reports[0], reports[0]["pass"]
    ok = all(r["pass"] for r in reports)
    return {"pass": ok, "instances": sum(r["instances"] for r in reports), "parts": reports}, ok


def cmd_verify(args):
    what = args.what
    if what in LEMMA_NAMES:
        return _verify_lemmas(args, LEMMA_NAMES[what])
    if what in THEOREMS:
        from .reptheory import verify_theorem

        sample = args.sample if args.sample is not None else (100 if what == "thm5.5" else 50)
        kmax = args.kmax if args.kmax is not None else 2
        rep = verify_theorem(THEOREMS[what], kmax, sample, args.seed, args.method, args.threads)
        return rep, rep["pass"]
    if what == "stars":
        from .starops import verify_mu_identities, verify_stars

        maxlen = args.maxlen or 10
        mu = verify_mu_identities(maxlen)
        st = verify_stars(maxlen, 1, args.sample or 50, args.seed)
        ok = mu["pass"] and st["pass"]
        return {"pass": ok, "mu_identities": mu, "stars": st}, ok
    if what == "strings15":
        from .starops import verify_gamma_identities

        rep = verify_gamma_identities(args.sample or 20, args.seed, method=args.method, threads=args.threads)
        return rep, rep["pass"]
    if what == "dinv":
        from .verification import verify_distinguished

        rep = verify_distinguished(args.kmax if args.kmax is not None else 1)
        return rep, rep["pass"]
    if what == "oracle":
        from .verification import verify_oracles

        rep = verify_oracles(args.maxlen or 8)
        return rep, rep["pass"]
    raise UsageError(f"unknown verification {what!r}")


def canonical(obj):
    """Sorted keys everywhere; lists under "terms" sorted."""
    if isinstance(obj, dict):
        out = {}
        for k, v in obj.items():
            v = canonical(v)
            if k == "terms" and isinstance(v, list):
                v = sorted(v, key=lambda t: json.dumps(t, sort_keys=True))
            out[k] = v
        return out
    if isinstance(obj, list):
        return [canonical(v) for v in obj]
    return obj


def _dump(obj) -> str:
    return json.dumps(canonical(obj), sort_keys=True)


def run_golden(testdir: str) -> dict:
    """Run each ``*.json`` case ({"argv": [...], "expected": {...}}) in ``testdir``."""
    import difflib

    cases = sorted(Path(testdir).glob("*.json"))
    failures = []
    for path in cases:
        case = json.loads(path.read_text())
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = run(case["argv"])
        got = json.loads(buf.getvalue()) if buf.getvalue().strip() else None
        exp_code = case.get("exit", 0)
        a = json.dumps(canonical(case["expected"]), sort_keys=True, indent=1).splitlines()
        b = json.dumps(canonical(got), sort_keys=True, indent=1).splitlines()
        if a != b or code != exp_code:
            diff = list(difflib.unified_diff(a, b, "expected", "got", lineterm=""))
            failures.append({"case": path.name, "exit": code, "expected_exit": exp_code, "diff": diff[:60]})
    return {"pass": not failures, "cases": len(cases), "failures": failures}


def cmd_golden(args):
    rep = run_golden(args.dir)
    return rep, rep["pass"]


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="worker threads (0 = auto, 1 = deterministic)")
    common.add_argument("--cache", default=None, help="KL cache file (JSON); HECKE_CACHE overrides")
    common.add_argument("--force", action="store_true", help="ignore the element length budget")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max factor length")
    common.add_argument("--method", choices=("definition", "fastpath"), default="definition")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="heckecells", description="Hecke algebra and based-ring computations")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **flags):
        sp = sub.add_parser(name, parents=[common])
        for f in flags.get("words", ()):
            sp.add_argument(f"--{f}")
        sp.set_defaults(func=fn)
        return sp

    add("kl", cmd_kl, words="yw")
    add("mu", cmd_mu, words="yw")
    add("hprod", cmd_hprod, words="xy")
    add("fprod", cmd_fprod, words="xy")
    add("gamma", cmd_gamma, words="xyz")
    sp = add("jprod", cmd_jprod, words="xy")
    sp.add_argument("--audit", action="store_true", help="also convert the full product and compare")
    sp = add("cell", cmd_cell, words="w")
    sp.add_argument("action", choices=("locate", "enum"))
    sp.add_argument("--cell")
    sp.add_argument("--kmax", type=int, default=0)
    sp = add("star", cmd_star, words="w")
    sp.add_argument("--pair", required=True, help="two generator digits, e.g. 23")
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp = add("verify", cmd_verify)
    sp.add_argument("what", choices=sorted([*LEMMA_NAMES, *THEOREMS, "stars", "strings15", "dinv", "oracle"]))
    sp.add_argument("--kmax", type=int, default=None)
    sp.add_argument("--lmax", type=int, default=None)
    sp.add_argument("--sample", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--maxlen", type=int, default=None)
    sp.add_argument("--check-fastpath", action="store_true", help="compare with the fast path on every product")
    sp = add("golden", cmd_golden)
    sp.add_argument("--dir", default=str(Path(__file__).resolve().parents[2] / "tests" / "golden"))
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 0:
        print(json.dumps({"error": "--threads must be >= 0"}))
        return 2
    if getattr(args, "what", None) in LEMMA_NAMES:
        args.kmax = 2 if args.kmax is None else args.kmax
        args.lmax = 2 if args.lmax is None else args.lmax
    for name in ("kmax", "lmax", "sample", "maxlen"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            print(json.dumps({"error": f"--{name} must be nonnegative"}))
            return 2
    _setup(args)
    try:
        out, ok = args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": str(exc)}))
        return 2
    finally:
        _finish()
    print(_dump(out))
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
