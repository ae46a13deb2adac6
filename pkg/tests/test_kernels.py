import json
import os
import subprocess
import sys

import numpy as np
import pytest

from heckecells import _pykernels, kernels
from heckecells.weylgroup import ball

SCRIPT = """
import json
from heckecells import kernels
from heckecells.heckealg import c_mul
from heckecells.klbase import default_table
from heckecells.weylgroup import ball, format_word, parse_word
b = ball(); b.extend_to(9); t = default_table()
out = {"backend": kernels.BACKEND, "rows": []}
for w in range(0, b.level_start[10], 7):
    ys, offs, co = t.row(w)
    out["rows"].append([ys.tolist(), offs.tolist(), co.tolist()])
pairs = [("01232", "0123201"), ("t0321", "1323"), ("10", "10"), ("2323", "232")]
out["c"] = [c_mul(parse_word(x), parse_word(y)).to_json() for x, y in pairs]
print(json.dumps(out))
"""


def _run(pure: bool) -> dict:
    env = dict(os.environ, HECKE_PURE="1" if pure else "0")
    env.pop("HECKE_CACHE", None)
    res = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_backends_agree():
    pure, fast = _run(True), _run(False)
    assert pure["backend"] == "python"
    assert pure["rows"] == fast["rows"]
    assert pure["c"] == fast["c"]


def test_interval_union_direct():
    try:
        from heckecells import _ckernels
    except ImportError:
        pytest.skip("compiled kernels not built")
    b = ball()
    b.extend_to(7)
    lmul = b.lmul
    for k in range(1, b.level_start[7], 5):
        ys = b.interval(k)
        for s in range(4):
            a = _pykernels.interval_union(ys, lmul[s])
            c = _ckernels.interval_union(ys, lmul[s])
            assert np.array_equal(np.asarray(a), np.asarray(c))


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
