from __future__ import annotations

import random

import pytest

from conftest import fixture_path, ode
from odeinv.classify import Case, classification_invariance, classify
from odeinv.corpus import generate, random_map
from odeinv.model import CubicODE, PointMap

SCALE = PointMap.parse("x", "2*y", "x", "y/2", "scale")


def test_zero_is_maximal():
    v = classify(ode())
    assert v.case is Case.MAXIMAL_DEGENERATION
    assert v.umbilical is None and v.zero_mean is None and v.zero_gauss is None
    assert "umbilical" not in v.to_json()


def test_y4_first_intermediate(y4):
    v = classify(y4)
    assert v.case is Case.FIRST_INTERMEDIATE
    assert (v.zero_mean, v.umbilical, v.zero_gauss) == (True, False, False)
    assert v.intersection_class == "ShrID1∩BgdET4"
    assert v.witness["M"] == "672/5*y^2"
    assert v.witness["detR"] == "-308/125*y"


def test_y2_other_intermediate():
    v = classify(ode("y^2"))
    assert v.case is Case.OTHER_INTERMEDIATE
    assert v.to_json()["note"]
    assert v.zero_mean is not None


def test_cubic_general_position():
    v = classify(ode("y", "0", "0", "1"))
    assert v.case is Case.GENERAL_POSITION
    assert v.witness["F5"] == "8*y"


def test_nonzero_mean_class():
    v = classify(ode("2*x^3 + 3*x*y^2", "4*x*y - 4"))
    assert v.case is Case.FIRST_INTERMEDIATE
    assert v.zero_mean is False
    assert v.intersection_class == "ShrID1∩BgdET2"


@pytest.mark.parametrize("eq, pmap", [
    (ode("y^4"), SCALE),
    (ode(), PointMap.swap()),
    (ode("y", "0", "0", "1"), PointMap.swap()),
], ids=["y4-scale", "zero-swap", "cubic-swap"])
def test_classification_invariance_examples(eq, pmap):
    assert classification_invariance(eq, pmap)


@pytest.mark.parametrize("name", ["y4", "y5", "y2", "zero", "cubic", "xy4"])
def test_classification_invariance_under_random_maps(name):
    eq = CubicODE.load(fixture_path(f"{name}.json"))
    rng = random.Random(name)
    for _ in range(4):
        assert classification_invariance(eq, random_map(rng))


def test_flags_consistency_on_random_corpus():
    seen = set()
    for seed in range(6):
        for eq in generate("random", 4, 2, seed):
            v = classify(eq)
            seen.add(v.case)
            if v.case in (Case.FIRST_INTERMEDIATE, Case.OTHER_INTERMEDIATE):
                assert v.zero_mean == (v.witness["Omega"] == "0")
                assert v.umbilical == (v.witness["Disc"] == "0")
                assert v.zero_gauss == (v.witness["detR"] == "0")
            else:
                assert v.flags()[1:] == (None, None, None)
    assert Case.GENERAL_POSITION in seen


def test_p_only_corpus_is_intermediate():
    for eq in generate("p-only", 10, 4, 7):
        assert classify(eq).case in (Case.FIRST_INTERMEDIATE, Case.OTHER_INTERMEDIATE)
