"""Acceptance criteria, one test per criterion, exact comparisons only."""
import time

import pytest
from _criteria import record_criterion

from heckecells import asymring as ar
from heckecells import celldata as cd
from heckecells.reptheory import verify_theorem
from heckecells.starops import verify_gamma_identities, verify_mu_identities, verify_stars
from heckecells.verification import verify_distinguished, verify_oracles

pytestmark = pytest.mark.slow


def _instance(rep, k, l):
    return next(r for r in rep["results"] if r["k"] == k and r["l"] == l)


def _expected(coords):
    return ar.JElement({c: 1 for c in coords}).to_json()


def test_criterion_1_cell_e_products():
    t0 = time.time()
    rep = ar.verify_lemma("E_xk", 2, 2, method="definition")
    inst = _instance(rep, 1, 1)["details"][0]["product"]
    ok = rep["pass"] and rep["instances"] == 9 and inst == _expected([ar.e_xk(2), ar.e_xk(0)])
    record_criterion(1, "x_k products on cell E", ok, f"instances={rep['instances']} {time.time() - t0:.1f}s")
    assert ok


def test_criterion_2_cell_f_products():
    t0 = time.time()
    rep = ar.verify_lemma("F_xk", 2, 2)
    longest = max(cd.realize(ar.f_xk(k)).length for k in range(3))
    inst = _instance(rep, 1, 1)["details"][0]["product"]
    ok = rep["pass"] and rep["instances"] == 9 and longest <= 8 and inst == _expected([ar.f_xk(2), ar.f_xk(0)])
    record_criterion(2, "x_k products on cell F", ok, f"max length={longest} {time.time() - t0:.1f}s")
    assert ok


def test_criterion_3_d_cell_lemmas():
    t0 = time.time()
    reps = {w: ar.verify_lemma(w, 1, 1) for w in ("D_uk", "club_b", "club_c", "spade_b", "spade_c")}
    explicit = (ar.t_mul(ar.d_s1s2uk(0), ar.d_uk_s2s1(0)) == ar.JElement({ar.d_xk(1): 1, ar.d_xk(0): 1})
                and ar.t_mul(ar.d_s1s2uk(0, 1), ar.d_uk_s2s1(0))
                == ar.JElement({ar.d_xk(1, 1): 1, ar.d_xk(0, 1): 1}))
    ok = all(r["pass"] for r in reps.values()) and explicit
    n = sum(r["instances"] for r in reps.values())
    record_criterion(3, "u_k products and the club/spade lemmas on cell D", ok, f"instances={n} {time.time() - t0:.1f}s")
    assert ok


def _theorem(number, which, sample, full_pairs, title):
    t0 = time.time()
    rep = verify_theorem(which, 2, sample, 0)
    ok = (rep["pass"] and rep["pairs"] == full_pairs + sample and rep["pairs_passed"] == rep["pairs"]
          and rep["injective"] and rep["duality"])
    record_criterion(number, title, ok, f"pairs={rep['pairs_passed']}/{rep['pairs']} "
                     f"enumerated={rep['enumerated']} {time.time() - t0:.1f}s")
    return ok, rep


def test_criterion_4_cell_e_homomorphism():
    ok, _ = _theorem(4, "E", 50, 6 * 6 * 6 * 4, "homomorphism on cell E")
    assert ok


def test_criterion_5_cell_f_homomorphism():
    ok, _ = _theorem(5, "F", 50, 8 * 8 * 8, "homomorphism on cell F")
    assert ok


def test_criterion_6_cell_d_homomorphism():
    t0 = time.time()
    rep = verify_theorem("D", 2, 100, 0)
    kinds = {"V(2k)", "V(2k+1)", "V(2k+2)", "x0", "x0_prime"}
    col = rep["colouring"]
    ok = (rep["pass"] and rep["pairs"] == 100 and rep["parity_ok"] and kinds <= set(rep["kinds"])
          and col["x0"] > 0 and col["x0_prime"] > 0)
    record_criterion(6, "homomorphism on cell D", ok,
                     f"pairs={rep['pairs_passed']}/{rep['pairs']} colouring={col['x0']}+{col['x0_prime']} "
                     f"{time.time() - t0:.1f}s")
    assert ok


def test_criterion_7_distinguished_involutions():
    rep = verify_distinguished(1)
    named = {r["word"]: r["distinguished"] for r in rep["named"]}
    ok = rep["pass"] and all(named.values()) and set(named) == {"10", "13", "013", "", "2323"}
    counts = "+".join(str(rep["cells"][c]["left_cells"]) for c in ("E", "F", "D"))
    record_criterion(7, "distinguished involutions", ok, f"left cells={counts}")
    assert ok


def test_criterion_8_structural_oracles():
    t0 = time.time()
    rep = verify_oracles(word_radius=8, kl_len=10)
    ar.clear_violations()
    agree = True
    for which in ar.LEMMAS:
        k = 2 if which in ("E_xk", "F_xk") else 1
        r = ar.verify_lemma(which, k, k, check_fastpath=True)
        agree = agree and r["pass"] and all(d["methods_agree"] for x in r["results"] for d in x["details"])
    degree_violations = [v for v in ar.violations() if v["kind"] == "degree"]
    ok = rep["pass"] and agree and not degree_violations
    record_criterion(8, "structural oracles", ok, f"{time.time() - t0:.1f}s")
    assert ok


def test_criterion_9_string_identities():
    t0 = time.time()
    mu = verify_mu_identities(10)
    st = verify_stars(10, 1, 50, 0)
    gm = verify_gamma_identities(20, 0)
    ok = mu["pass"] and st["pass"] and gm["pass"]
    record_criterion(9, "star and string identity suites", ok,
                     f"gamma instances={gm['instances']} nonzero={gm['nonzero']} {time.time() - t0:.1f}s")
    assert ok


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
