import random

from heckecells import celldata as cd
from heckecells.starops import string_of, star, verify_mu_identities, verify_stars
from heckecells.weylgroup import format_word, parse_word


def test_string_examples(words):
    sd = string_of(words("2"), (2, 3), "right")
    assert [format_word(w) for w in sd.members] == ["2", "23", "232"]
    assert sd.position == 1
    assert star(words("2"), (2, 3), "right") == words("232")
    assert star(words("13"), (1, 2), "right") == words("132")
    assert star(words("01"), (1, 2), "right") == words("012")
    assert string_of(words(""), (2, 3), "left") is None


def test_star_is_involution_on_cells():
    rng = random.Random(0)
    elems = [w for cell in cd.SUPPORTED for _, w in cd.enumerate_cell(cell, 1)]
    for w in rng.sample(elems, 120):
        for pair in ((0, 2), (1, 2), (2, 3)):
            for side in ("left", "right"):
                if string_of(w, pair, side) is not None:
                    y = star(w, pair, side)
                    assert star(y, pair, side) == w
                    assert cd.cell_of(y) == cd.cell_of(w)


def test_mu_identities():
    rep = verify_mu_identities(9)
    assert rep["pass"]
    assert all(r["nontrivial"] > 0 for r in rep["pairs"].values())


def test_stars_suite_small():
    rep = verify_stars(9, 0, 20, 1)
    assert rep["pass"]
