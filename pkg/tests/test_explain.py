import pytest

from argex import (Depth, InvalidQuery, Mode, Order, StatusMismatch, acc_explanation, def_by,
                   minimal_explanation, not_acc_explanation, not_def)

from conftest import fam, fs

E1, E2, E4 = fs("ACEG"), fs("ACF"), fs("BDF")


def test_def_by(af1, cycle3):
    assert def_by(af1, "A", E1) == fs("CEG")
    assert def_by(af1, "A", E2) == fs("C")
    assert def_by(cycle3, "A") == fs("ABC")


def test_not_def(af1, single):
    assert not_def(af1, "A", E4) == fs("BDF")
    assert not_def(af1, "B", E1) == fs("CEG")
    assert not_def(single, "X", fs("X")) == fs()


def test_credulous_acceptance_candidates(af1):
    res = acc_explanation(af1, "prf", "credulous", "A")
    assert res.kind == "candidates"
    assert set(res.family) == fam("CEG", "C", "EG")
    assert acc_explanation(af1, "prf", "credulous", "B").family == (fs("DF"),)


def test_provenance_tracks_extensions(af1):
    res = acc_explanation(af1, "prf", "credulous", "A")
    assert dict(res.provenance)[E2] == fs("C")


def test_necessity_depth_is_semantics_independent(af1):
    res = acc_explanation(af1, "prf", "credulous", "B", "nec")
    assert res.kind == "single" and res.explanation == fs("DF") and res.semantics_independent


def test_skeptical_non_acceptance(af1):
    assert not_acc_explanation(af1, "prf", "skeptical", "A").explanation == fs("BDF")
    assert not_acc_explanation(af1, "grd", "skeptical", "A").explanation == fs("BDF")
    assert not_acc_explanation(af1, "grd", "skeptical", "B").explanation == fs("CEG")
    assert not_acc_explanation(af1, "prf", "skeptical", "B").explanation == fs("CEG")


def test_necnot_depth(af1):
    res = not_acc_explanation(af1, "prf", "skeptical", "B", "nec_not")
    assert res.explanation == fs() and not res.semantics_independent


def test_status_precondition(af1):
    with pytest.raises(StatusMismatch):
        acc_explanation(af1, "prf", "skeptical", "A")
    with pytest.raises(StatusMismatch):
        not_acc_explanation(af1, "prf", "credulous", "A")


def test_depth_must_match_mode(af1):
    with pytest.raises(InvalidQuery):
        acc_explanation(af1, "prf", "credulous", "A", "not_def")
    with pytest.raises(InvalidQuery):
        not_acc_explanation(af1, "prf", "skeptical", "A", "suff")


def test_depth_aliases():
    assert Depth.parse("defby") is Depth.DEF_BY
    assert Depth.parse("suffnot") is Depth.SUFF_NOT


def test_minimal_explanations(af1):
    acc = Mode.ACCEPTANCE
    assert set(minimal_explanation(af1, "prf", "credulous", "A", "def_by", "set", acc)) == fam("C", "EG")
    assert minimal_explanation(af1, "prf", "credulous", "A", "def_by", "card", acc) == (fs("C"),)
    nonacc = Mode.NON_ACCEPTANCE
    assert set(minimal_explanation(af1, "prf", "skeptical", "B", "not_def", Order.SET_INCLUSION, nonacc)) == fam("C", "EG")
    assert minimal_explanation(af1, "prf", "skeptical", "B", "not_def", Order.CARDINALITY, nonacc) == (fs("C"),)


def test_cardinality_keeps_ties(af2):
    # both {C} and {D} directly attack B
    assert set(minimal_explanation(af2, "prf", "skeptical", "B", "suff_not", "card",
                                   Mode.NON_ACCEPTANCE)) == fam("C", "D")


@pytest.mark.parametrize("depth", ["suff", "nec", "min_suff_set", "min_suff_card"])
def test_sufficiency_depths_ignore_the_semantics(af1, depth):
    results = {acc_explanation(af1, sem, "credulous", "A", depth).family for sem in ("cmp", "prf", "stb")}
    assert len(results) == 1


@pytest.mark.parametrize("depth", ["suff_not", "min_suff_not_set", "min_suff_not_card"])
def test_non_acceptance_sufficiency_ignores_the_semantics(af1, depth):
    results = {not_acc_explanation(af1, sem, strat, "A", depth).family
               for sem, strat in [("grd", "skeptical"), ("prf", "skeptical"), ("cmp", "skeptical")]}
    assert len(results) == 1
