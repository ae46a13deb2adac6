"""Compare the compiled and pure-Python kernels on the same workloads.

Each backend runs in a fresh interpreter (the backend is chosen at import
time through HECKE_PURE) and reports wall time per workload as JSON.

    python benchmarks/bench_kernels.py [--maxlen 12] [--repeat 1]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from heckecells import kernels
from heckecells.klbase import KLTable
from heckecells.heckealg import HeckeEngine, c_mul
from heckecells.reptheory import verify_theorem
from heckecells.weylgroup import ball, parse_word

maxlen = int(sys.argv[1])
out = {"backend": kernels.BACKEND}
b = ball(); b.extend_to(maxlen)
t0 = time.perf_counter()
table = KLTable()
for w in range(b.level_start[maxlen + 1]):
    table.row(w)
out["kl_rows"] = time.perf_counter() - t0
eng = HeckeEngine(table)
pairs = [("0123201232", "2321023210"), ("t03213", "t0321320"), ("1201321", "1230321")]
t0 = time.perf_counter()
for x, y in pairs:
    c_mul(parse_word(x), parse_word(y), eng)
out["c_mul"] = time.perf_counter() - t0
t0 = time.perf_counter()
verify_theorem("F", 1, 20, 0)
out["thm4.2"] = time.perf_counter() - t0
print(json.dumps(out))
"""


def run_backend(pure: bool, maxlen: int) -> dict:
    env = dict(os.environ, HECKE_PURE="1" if pure else "0")
    env.pop("HECKE_CACHE", None)
    res = subprocess.run([sys.executable, "-c", WORKER, str(maxlen)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--maxlen", type=int, default=12)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    results = {"compiled": [], "python": []}
    for _ in range(args.repeat):
        results["compiled"].append(run_backend(False, args.maxlen))
        results["python"].append(run_backend(True, args.maxlen))
    best = {k: {m: min(r[m] for r in v) for m in ("kl_rows", "c_mul", "thm4.2")} for k, v in results.items()}
    backend = results["compiled"][0]["backend"]
    print(f"compiled backend available: {backend == 'cython'}")
    print(f"{'workload':<10}{'compiled s':>12}{'python s':>12}{'speedup':>10}")
    for m in ("kl_rows", "c_mul", "thm4.2"):
        c, p = best["compiled"][m], best["python"][m]
        print(f"{m:<10}{c:>12.3f}{p:>12.3f}{p / c:>10.1f}")


if __name__ == "__main__":
    main()
