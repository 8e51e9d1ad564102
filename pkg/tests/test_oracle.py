import json

import pytest

from argex import Framework, InvalidConfig, TooLarge, parse_framework
from argex.oracle import (PROPERTY_IDS, GeneratorConfig, PropertyReport, brute_force_extensions,
                          check_corpus, check_property, corpus, random_framework)

from conftest import fam, fs

# a0 <-> a1 and a2 -> a1: a0 defends itself, so it is necessary for itself
SELF_DEFENDER = "arg(a0). arg(a1). arg(a2). att(a0,a1). att(a1,a0). att(a2,a1)."
# complete extensions are {} and {a2}; dropping a1 makes a0 credulously
# accepted, yet the minimal NotDef explanation of a0 is {a2}
CREDULOUS_NECNOT = "arg(a0). arg(a1). arg(a2). att(a0,a2). att(a1,a0). att(a2,a0). att(a2,a1)."


def test_generator_edge_cases():
    fw = random_framework(GeneratorConfig(n=1, edge_prob=0.0))
    assert fw.args == {"a0"} and not fw.attacks
    fw = random_framework(GeneratorConfig(n=3, edge_prob=1.0))
    assert len(fw.attacks) == 6 and all(x != y for x, y in fw.attacks)
    fw = random_framework(GeneratorConfig(n=3, edge_prob=1.0, allow_self_attacks=True))
    assert len(fw.attacks) == 9


def test_generator_is_deterministic():
    cfg = GeneratorConfig(n=6, edge_prob=0.3, seed=42)
    assert random_framework(cfg) == random_framework(cfg)
    assert [f for _, f in corpus(20, seed=5)] == [f for _, f in corpus(20, seed=5)]


def test_self_attack_toggle_keeps_other_edges():
    base = random_framework(GeneratorConfig(n=6, edge_prob=0.4, seed=9))
    loops = random_framework(GeneratorConfig(n=6, edge_prob=0.4, seed=9, allow_self_attacks=True))
    assert {(x, y) for x, y in loops.attacks if x != y} == base.attacks


@pytest.mark.parametrize("cfg", [GeneratorConfig(n=0, edge_prob=0.5), GeneratorConfig(n=11, edge_prob=0.5),
                                 GeneratorConfig(n=3, edge_prob=1.5), GeneratorConfig(n=3, edge_prob=0.1, seed=-1)])
def test_generator_validation(cfg):
    with pytest.raises(InvalidConfig):
        random_framework(cfg)


def test_corpus_cycles_sizes_and_densities():
    cfgs = [cfg for cfg, _ in corpus(21)]
    assert {c.n for c in cfgs} == set(range(1, 8))
    assert {c.edge_prob for c in cfgs} == {0.15, 0.3, 0.5}


def test_brute_force_golden(af1, cycle3):
    assert set(brute_force_extensions(af1, "prf")) == fam("ACEG", "ACF", "ADEG", "BDF")
    assert brute_force_extensions(af1, "grd") == (fs(),)
    assert brute_force_extensions(cycle3, "cmp") == (fs(),)


def test_brute_force_size_limit():
    with pytest.raises(TooLarge):
        brute_force_extensions(Framework([f"x{i}" for i in range(11)], set()), "adm")


@pytest.mark.parametrize("pid", ["lemma1", "prop5", "prop3"])
def test_af1_properties(af1, pid):
    report = check_property(af1, pid)
    assert report.ok and report.checked_instances > 0


@pytest.mark.parametrize("pid", PROPERTY_IDS)
def test_reference_frameworks_have_no_violations(af1, af2, cycle3, pid):
    assert check_corpus(pid, [af1, af2, cycle3]).ok


@pytest.mark.parametrize("pid", PROPERTY_IDS)
def test_small_corpus(pid):
    report = check_corpus(pid, [f for _, f in corpus(60, seed=777)])
    assert report.ok, report.violations[:1]


def test_check_limits(af1):
    with pytest.raises(InvalidConfig):
        check_property(af1, "prop9")
    with pytest.raises(TooLarge):
        check_property(Framework([f"x{i}" for i in range(8)], set()), "prop1")


# Unrestricted statements: the restricted checks above are needed because
# these statements have small counterexamples.

def test_unrestricted_prop3_fails_on_self_defender(af2):
    fw = parse_framework(SELF_DEFENDER)
    assert check_property(fw, "prop3").ok
    report = check_property(fw, "prop3", unrestricted=True)
    assert any(v.detail.startswith("item3") for v in report.violations)
    assert not check_property(af2, "prop3", unrestricted=True).ok


def test_unrestricted_prop7_fails_on_self_defender(af2):
    fw = parse_framework(SELF_DEFENDER)
    assert check_property(fw, "prop7").ok
    assert not check_property(fw, "prop7", unrestricted=True).ok
    assert not check_property(af2, "prop7", unrestricted=True).ok


@pytest.mark.parametrize("pid", ["prop6", "prop8"])
def test_unrestricted_necnot_inclusion_fails_for_credulous(pid):
    fw = parse_framework(CREDULOUS_NECNOT)
    assert check_property(fw, pid).ok
    report = check_property(fw, pid, unrestricted=True)
    assert report.violations
    assert all("credulous" in v.detail for v in report.violations)


def test_violations_are_replayable():
    fw = parse_framework(CREDULOUS_NECNOT)
    violation = check_property(fw, "prop6", unrestricted=True).violations[0]
    assert parse_framework(violation.framework) == fw


def test_report_serialisation():
    report = check_property(parse_framework(CREDULOUS_NECNOT), "prop6", unrestricted=True)
    doc = json.loads(report.to_json())
    assert doc["property_id"] == "prop6" and doc["ok"] is False
    assert doc["violations"][0]["argument"] == "a0"
    assert "PCG64" in doc["generator"]
    total = PropertyReport("prop6")
    total.merge(report)
    total.merge(report)
    assert total.checked_instances == 2 * report.checked_instances
