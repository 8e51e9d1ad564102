"""Ground truth for testing: random frameworks, naive enumeration, property checks.

``brute_force_extensions`` filters all subsets with plain set predicates
and shares no code with :mod:`argex.semantics`.  ``check_property``
evaluates one of the explanation-theoretic properties (prop1 ... prop8,
lemma1) exhaustively on a small framework and reports every violation
with a replayable APX serialisation.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import combinations, product

import numpy as np

from .errors import InvalidConfig, NoExtensions, TooLarge
from .explain import Depth, acc_explanation, def_by, minimal_explanation, not_acc_explanation, not_def
from .formats import serialize_framework
from .framework import Framework, canonical_family, defenders_of, subframework_without
from .necsuff import (Mode, Order, SufficiencyMode, is_sufficient_nonacc,
                      minimal_sufficient_sets, necessary_args_acc,
                      necessary_args_nonacc, sufficient_sets_acc,
                      sufficient_sets_nonacc)
from .semantics import Semantics, Strategy, enumerate_extensions, is_accepted

GENERATOR = "numpy.random.default_rng (PCG64), one uniform draw per ordered pair in row-major order"
PROPERTY_IDS = ("prop1", "prop2", "prop3", "prop4", "prop5", "prop6", "prop7", "prop8", "lemma1")
BRUTE_FORCE_LIMIT = 10
CHECK_LIMIT = 7
CORPUS_PROBS = (0.15, 0.3, 0.5)

ALL_SEMANTICS = tuple(Semantics)
STRATEGIES = tuple(Strategy)
ORDERS = tuple(Order)


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    edge_prob: float
    allow_self_attacks: bool = False
    seed: int = 0

    def validate(self):
        if not 1 <= self.n <= BRUTE_FORCE_LIMIT:
            raise InvalidConfig(f"n must be in 1..{BRUTE_FORCE_LIMIT}, got {self.n}")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise InvalidConfig(f"edge_prob must be in [0, 1], got {self.edge_prob}")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidConfig("seed must be a 64-bit unsigned integer")


def random_framework(cfg: GeneratorConfig) -> Framework:
    """Arguments a0..a(n-1); each ordered pair becomes an attack with probability edge_prob.

    A draw is consumed for every ordered pair, self-pairs included, so the
    mapping from seed to framework does not shift when self-attacks are
    toggled.
    """
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    names = [f"a{i}" for i in range(cfg.n)]
    draws = rng.random((cfg.n, cfg.n))
    attacks = {(names[i], names[j])
               for i, j in product(range(cfg.n), repeat=2)
               if draws[i, j] < cfg.edge_prob and (i != j or cfg.allow_self_attacks)}
    return Framework(names, attacks)


def corpus(count=500, seed=0, max_n=CHECK_LIMIT, probs=CORPUS_PROBS, allow_self_attacks=False):
    """Deterministic list of (config, framework) pairs cycling sizes and densities."""
    out = []
    for i in range(count):
        cfg = GeneratorConfig(n=1 + i % max_n, edge_prob=probs[i % len(probs)],
                              allow_self_attacks=allow_self_attacks, seed=seed + i)
        out.append((cfg, random_framework(cfg)))
    return out


# -- naive enumeration -------------------------------------------------------

def _attacks(att, s, a):
    return any((x, a) in att for x in s)


def _defends(args, att, s, a):
    return all(_attacks(att, s, x) for x in args if (x, a) in att)


def _conflict_free(att, s):
    return not any((x, y) in att for x in s for y in s)


def brute_force_extensions(fw: Framework, sem) -> tuple:
    """Filter every subset of the arguments by the textbook definitions."""
    sem = Semantics.parse(sem)
    if len(fw.args) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_FORCE_LIMIT} arguments")
    args, att = sorted(fw.args), set(fw.attacks)
    subsets = [frozenset(c) for k in range(len(args) + 1) for c in combinations(args, k)]
    adm = [s for s in subsets
           if _conflict_free(att, s) and all(_defends(args, att, s, a) for a in s)]
    cmp_ = [s for s in adm if all(a in s for a in args if _defends(args, att, s, a))]
    if sem is Semantics.ADMISSIBLE:
        found = adm
    elif sem is Semantics.COMPLETE:
        found = cmp_
    elif sem is Semantics.GROUNDED:
        found = [s for s in cmp_ if all(s <= t for t in cmp_)]
    elif sem is Semantics.PREFERRED:
        found = [s for s in cmp_ if not any(s < t for t in cmp_)]
    else:
        found = [s for s in cmp_ if all(_attacks(att, s, a) for a in args if a not in s)]
    return canonical_family(found)


# -- property reports --------------------------------------------------------

@dataclass
class Violation:
    framework: str  # APX text
    argument: str
    detail: str


@dataclass
class PropertyReport:
    property_id: str
    checked_instances: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    generator: str = GENERATOR

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "PropertyReport"):
        self.checked_instances += other.checked_instances
        self.skipped += other.skipped
        self.violations.extend(other.violations)

    def to_dict(self):
        doc = asdict(self)
        doc["ok"] = self.ok
        return doc

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _fmt(s):
    return "{" + ",".join(sorted(s)) + "}"


def _fmt_family(fam):
    return "{" + ", ".join(_fmt(s) for s in fam) + "}"


def _intersection(family):
    family = list(family)
    if not family:
        return frozenset()
    return frozenset.intersection(*family)


class _Checker:
    def __init__(self, fw, property_id, unrestricted=False):
        self.fw = fw
        self.unrestricted = unrestricted
        self.report = PropertyReport(property_id)
        self.apx = serialize_framework(fw, "apx")

    def fail(self, a, detail):
        self.report.violations.append(Violation(self.apx, a, detail))

    def check(self, a, ok, detail):
        self.report.checked_instances += 1
        if not ok:
            self.fail(a, detail())

    def skip(self):
        self.report.skipped += 1

    def self_defence_excluded(self, a):
        # these items rely on the queried argument not defending itself
        return not self.unrestricted and a in defenders_of(self.fw, a)

    def necnot_strategies(self):
        # NecNot within the NotDef sets only follows for skeptical non-acceptance
        return STRATEGIES if self.unrestricted else (Strategy.SKEPTICAL,)

    def accepted(self, sem, strat, a):
        try:
            return is_accepted(self.fw, sem, strat, a)
        except NoExtensions:
            return None


# Each checker quantifies over every argument of the framework.

def _prop1(c: _Checker):
    fw = c.fw
    grounded = enumerate_extensions(fw, Semantics.GROUNDED)[0]
    chain = (Semantics.STABLE, Semantics.PREFERRED, Semantics.COMPLETE)
    for a in fw.names:
        if a in grounded:
            base = def_by(fw, a, grounded)
            for sem in chain:
                for e in enumerate_extensions(fw, sem):
                    c.check(a, base <= def_by(fw, a, e),
                            lambda: f"item1: DefBy({a},grd) not within DefBy({a},{_fmt(e)}) [{sem.value}]")
            sk = {sem: acc_explanation(fw, sem, Strategy.SKEPTICAL, a).explanation
                  for sem in chain if c.accepted(sem, Strategy.SKEPTICAL, a)}
            for lo, hi in zip(chain, chain[1:]):
                if lo in sk and hi in sk:
                    c.check(a, sk[lo] <= sk[hi],
                            lambda: f"item2: skeptical {lo.value} {_fmt(sk[lo])} not within {hi.value} {_fmt(sk[hi])}")
        cr = {sem: set(acc_explanation(fw, sem, Strategy.CREDULOUS, a).family)
              for sem in chain if c.accepted(sem, Strategy.CREDULOUS, a)}
        for lo, hi in zip(chain, chain[1:]):
            if lo in cr and hi in cr:
                c.check(a, cr[lo] <= cr[hi],
                        lambda: f"item3: credulous family {lo.value} not within {hi.value}")
        if Semantics.COMPLETE in cr and Semantics.PREFERRED in cr:
            for s in cr[Semantics.COMPLETE]:
                c.check(a, any(s <= t for t in cr[Semantics.PREFERRED]),
                        lambda: f"item4: cmp candidate {_fmt(s)} has no preferred superset")


def _prop2(c: _Checker):
    fw = c.fw
    grounded = enumerate_extensions(fw, Semantics.GROUNDED)[0]
    chain = (Semantics.STABLE, Semantics.PREFERRED, Semantics.COMPLETE)
    for a in fw.names:
        if a not in grounded:
            g = not_acc_explanation(fw, Semantics.GROUNDED, Strategy.SKEPTICAL, a).explanation
            if c.accepted(Semantics.COMPLETE, Strategy.SKEPTICAL, a) is False:
                m = not_acc_explanation(fw, Semantics.COMPLETE, Strategy.SKEPTICAL, a).explanation
                c.check(a, g <= m, lambda: f"item1: NotAcc grd {_fmt(g)} not within cmp {_fmt(m)}")
        for strat in STRATEGIES:
            vals = {sem: not_acc_explanation(fw, sem, strat, a).explanation
                    for sem in chain if c.accepted(sem, strat, a) is False}
            for lo, hi in zip(chain, chain[1:]):
                if lo in vals and hi in vals:
                    c.check(a, vals[lo] <= vals[hi],
                            lambda: f"item2 [{strat.value}]: {lo.value} {_fmt(vals[lo])} not within {hi.value} {_fmt(vals[hi])}")


def _accepted_somewhere(fw, a):
    return any(a in e for e in enumerate_extensions(fw, Semantics.ADMISSIBLE))


def _prop3(c: _Checker):
    fw = c.fw
    for a in fw.names:
        if not _accepted_somewhere(fw, a):
            c.skip()
            continue
        attacked = bool(fw.attackers(a))
        strict = sufficient_sets_acc(fw, a, strict=True)
        literal = sufficient_sets_acc(fw, a, strict=False)
        for s in strict:
            c.check(a, _is_admissible(fw, s) and _is_admissible(fw, s | {a}),
                    lambda: f"item1: strict sufficient set {_fmt(s)} is not admissible with {a}")
        for name, fam in (("literal", literal), ("strict", strict)):
            c.check(a, (not fam) == (not attacked),
                    lambda: f"item2 [{name}]: Suff empty={not fam} but attacked={attacked}")
        if c.self_defence_excluded(a):
            c.skip()
            continue
        nec = necessary_args_acc(fw, a)
        inter = _intersection(strict)
        c.check(a, (not nec) == ((not attacked) or not inter),
                lambda: f"item3: Nec={_fmt(nec)} vs intersection of Suff {_fmt(inter)}")
        if strict:
            c.check(a, nec <= inter, lambda: f"item4: Nec={_fmt(nec)} not within {_fmt(inter)}")


def _is_admissible(fw, s):
    args, att = sorted(fw.args), fw.attacks
    return _conflict_free(att, s) and all(_defends(args, att, s, x) for x in s)


def _prop4(c: _Checker):
    fw = c.fw
    admissible = enumerate_extensions(fw, Semantics.ADMISSIBLE)
    for a in fw.names:
        if not fw.attackers(a) or not _accepted_somewhere(fw, a):
            c.skip()
            continue
        literal = set(sufficient_sets_acc(fw, a, strict=False))
        strict = set(sufficient_sets_acc(fw, a, strict=True))
        for sem in ALL_SEMANTICS:
            for e in enumerate_extensions(fw, sem):
                if a in e:
                    d = def_by(fw, a, e)
                    c.check(a, d in literal and d in strict,
                            lambda: f"item1: DefBy({a},{_fmt(e)})={_fmt(d)} not sufficient [{sem.value}]")
        inter = _intersection(def_by(fw, a, e) for e in admissible if a in e)
        nec = necessary_args_acc(fw, a)
        c.check(a, inter == nec, lambda: f"item2: intersection of DefBy {_fmt(inter)} != Nec {_fmt(nec)}")


_NONACC_SEMANTICS = (Semantics.COMPLETE, Semantics.GROUNDED, Semantics.PREFERRED, Semantics.STABLE)


def _nonacc_queries(c, a, semantics=_NONACC_SEMANTICS, strategies=STRATEGIES):
    for sem in semantics:
        for strat in strategies:
            if c.accepted(sem, strat, a) is False:
                yield sem, strat


def _prop5(c: _Checker):
    fw = c.fw
    for a in fw.names:
        if fw.self_attacking(a):
            c.skip()
            continue
        queries = list(_nonacc_queries(c, a))
        if not queries:
            continue
        fam = sufficient_sets_nonacc(fw, a)
        c.check(a, bool(fam), lambda: f"item1: SuffNot({a}) is empty")
        for sem, strat in queries:
            try:
                nec = necessary_args_nonacc(fw, a, sem, strat)
            except NoExtensions:
                c.skip()
                continue
            c.check(a, bool(nec) or len(fw.attackers(a)) >= 2,
                    lambda: f"item2 [{sem.value}/{strat.value}]: NecNot empty with {len(fw.attackers(a))} direct attacker(s)")


def _prop6(c: _Checker):
    fw = c.fw
    for a in fw.names:
        if fw.self_attacking(a):
            c.skip()
            continue
        for sem in _NONACC_SEMANTICS:
            for e in enumerate_extensions(fw, sem):
                if a not in e:
                    nd = not_def(fw, a, e)
                    c.check(a, is_sufficient_nonacc(fw, nd, a),
                            lambda: f"item1: NotDef({a},{_fmt(e)})={_fmt(nd)} not sufficient [{sem.value}]")
        for sem, strat in _nonacc_queries(c, a, strategies=c.necnot_strategies()):
            try:
                nec = necessary_args_nonacc(fw, a, sem, strat)
            except NoExtensions:
                c.skip()
                continue
            inter = _intersection(not_def(fw, a, e) for e in enumerate_extensions(fw, sem) if a not in e)
            c.check(a, nec <= inter,
                    lambda: f"item2 [{sem.value}/{strat.value}]: NecNot {_fmt(nec)} not within {_fmt(inter)}")


def _leq(order, s, t):
    return s <= t if order is Order.SET_INCLUSION else len(s) <= len(t)


def _prop7(c: _Checker):
    fw = c.fw
    for a in fw.names:
        if not fw.attackers(a):
            c.skip()
            continue
        nec = necessary_args_acc(fw, a)
        for sem, strat in product(ALL_SEMANTICS, STRATEGIES):
            if not c.accepted(sem, strat, a):
                continue
            for order in ORDERS:
                mins = minimal_explanation(fw, sem, strat, a, Depth.DEF_BY, order, Mode.ACCEPTANCE)
                msuff = minimal_sufficient_sets(fw, a, SufficiencyMode(Mode.ACCEPTANCE, strict=True), order)
                tag = f"[{sem.value}/{strat.value}/{order.value}]"
                for s in mins:
                    c.check(a, any(_leq(order, t, s) for t in msuff),
                            lambda: f"item1 {tag}: minimal explanation {_fmt(s)} has no smaller sufficient set in {_fmt_family(msuff)}")
                    c.check(a, nec <= s, lambda: f"item3 {tag}: Nec {_fmt(nec)} not within {_fmt(s)}")
                if sem is Semantics.ADMISSIBLE and not c.self_defence_excluded(a):
                    for t in msuff:
                        c.check(a, t in mins,
                                lambda: f"item2 {tag}: minimally sufficient {_fmt(t)} not a minimal explanation {_fmt_family(mins)}")


def _prop8(c: _Checker):
    fw = c.fw
    for a in fw.names:
        if fw.self_attacking(a):
            c.skip()
            continue
        for sem, strat in _nonacc_queries(c, a):
            necnot = None
            if strat in c.necnot_strategies():
                try:
                    necnot = necessary_args_nonacc(fw, a, sem, strat)
                except NoExtensions:
                    c.skip()
            for order in ORDERS:
                mins = minimal_explanation(fw, sem, strat, a, Depth.NOT_DEF, order, Mode.NON_ACCEPTANCE)
                msuff = minimal_sufficient_sets(fw, a, SufficiencyMode(Mode.NON_ACCEPTANCE), order)
                tag = f"[{sem.value}/{strat.value}/{order.value}]"
                for s in mins:
                    c.check(a, any(t <= s for t in msuff),
                            lambda: f"item1 {tag}: minimal explanation {_fmt(s)} contains no member of {_fmt_family(msuff)}")
                    if necnot is not None:
                        c.check(a, necnot <= s, lambda: f"item2 {tag}: NecNot {_fmt(necnot)} not within {_fmt(s)}")


def _lemma1(c: _Checker):
    fw = c.fw
    for x in fw.names:
        sub = subframework_without(fw, x)
        for sem in ALL_SEMANTICS:
            sub_exts = set(enumerate_extensions(sub, sem))
            for e in enumerate_extensions(fw, sem):
                if any((b, x) in fw.attacks for b in e):
                    c.check(x, e in sub_exts,
                            lambda: f"{sem.value} extension {_fmt(e)} is not an extension once {x} is removed")


_CHECKERS = {
    "prop1": _prop1, "prop2": _prop2, "prop3": _prop3, "prop4": _prop4,
    "prop5": _prop5, "prop6": _prop6, "prop7": _prop7, "prop8": _prop8,
    "lemma1": _lemma1,
}


def check_property(fw: Framework, property_id: str, unrestricted: bool = False) -> PropertyReport:
    """Exhaustively check one property on ``fw`` (at most 7 arguments).

    By default some items are checked only where they are provable:
    prop3 items 3-4 and prop7 item 2 skip arguments that (in)directly
    defend themselves, and the NecNot inclusions of prop6/prop8 item 2 are
    checked for the skeptical strategy only.  ``unrestricted=True`` drops both
    restrictions; known counterexamples then show up as violations.
    """
    if property_id not in _CHECKERS:
        raise InvalidConfig(f"unknown property {property_id!r}; choose from {', '.join(PROPERTY_IDS)}")
    if len(fw.args) > CHECK_LIMIT:
        raise TooLarge(f"property checks are limited to {CHECK_LIMIT} arguments")
    checker = _Checker(fw, property_id, unrestricted)
    _CHECKERS[property_id](checker)
    return checker.report


def check_corpus(property_id, frameworks, unrestricted=False) -> PropertyReport:
    total = PropertyReport(property_id)
    for fw in frameworks:
        total.merge(check_property(fw, property_id, unrestricted))
    return total
