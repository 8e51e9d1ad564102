"""Sufficient and necessary arguments for (non-)acceptance.

Acceptance side: a set is sufficient when it is relevant, conflict-free
and directly attacks every direct attacker of the argument (optionally
also required to be admissible together with the argument, ``strict``).
An argument is necessary when every admissible set containing the
queried argument contains it too.

Non-acceptance side: a set is sufficient when one of its members attacks
the argument directly, or along an odd attack path whose contested
points are all answered by subsets of the same set (checked recursively).
An argument is necessary when removing it from the framework makes the
queried argument accepted.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidPath, InvalidQuery, SelfAttacker, TooLarge
from .framework import (AttackPath, Framework, attack_paths, canonical_family,
                        relevant_args, set_attacks, subframework_without,
                        validate_path)
from .semantics import Semantics, check_set, enumerate_extensions, is_accepted

DEFAULT_SUBSET_CAP = 22


class Mode(str, enum.Enum):
    ACCEPTANCE = "acceptance"
    NON_ACCEPTANCE = "non_acceptance"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {"acc": cls.ACCEPTANCE, "acceptance": cls.ACCEPTANCE,
                   "nonacc": cls.NON_ACCEPTANCE, "non_acceptance": cls.NON_ACCEPTANCE}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise InvalidQuery(f"unknown mode {value!r}") from None


class Order(str, enum.Enum):
    CARDINALITY = "card"
    SET_INCLUSION = "set"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {"card": cls.CARDINALITY, "cardinality": cls.CARDINALITY,
                   "set": cls.SET_INCLUSION, "set_inclusion": cls.SET_INCLUSION}
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise InvalidQuery(f"unknown minimality order {value!r}") from None


@dataclass(frozen=True)
class SufficiencyMode:
    mode: Mode = Mode.ACCEPTANCE
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode.parse(self.mode))
        if self.strict and self.mode is Mode.NON_ACCEPTANCE:
            raise InvalidQuery("strict sufficiency only applies to acceptance")


@dataclass(frozen=True)
class ContestReport:
    path: AttackPath
    contest_points: tuple  # ((contested argument, frozenset of contesting attackers), ...)

    @property
    def verdict(self) -> str:
        return "contested" if self.contest_points else "uncontested"

    @property
    def contested(self) -> bool:
        return bool(self.contest_points)


def minima(family, order) -> tuple:
    """Order-minimal members of a family (all ties kept for cardinality)."""
    order = Order.parse(order)
    family = canonical_family(family)
    if not family:
        return ()
    if order is Order.CARDINALITY:
        least = min(len(s) for s in family)
        return tuple(s for s in family if len(s) == least)
    return tuple(s for s in family if not any(t < s for t in family))


def subset_cap() -> int:
    value = os.environ.get("ARGEX_SUBSET_CAP")
    return int(value) if value else DEFAULT_SUBSET_CAP


def _candidate_subsets(fw, a):
    pool = sorted(relevant_args(fw, a))
    cap = subset_cap()
    if len(pool) > cap:
        raise TooLarge(f"{len(pool)} relevant arguments for {a} exceed the subset cap of {cap}")
    for k in range(1, len(pool) + 1):
        for combo in combinations(pool, k):
            yield frozenset(combo)


# -- acceptance ------------------------------------------------------------

def is_sufficient_acc(fw: Framework, s, a: str, strict: bool = False) -> bool:
    fw.require(a, s)
    s = frozenset(s)
    if not s or not s <= relevant_args(fw, a):
        return False
    if not check_set(fw, s, "conflict_free"):
        return False
    if not all(set_attacks(fw, s, x) for x in fw.attackers(a)):
        return False
    if strict:
        return check_set(fw, s, "admissible") and check_set(fw, s | {a}, "admissible")
    return True


def sufficient_sets_acc(fw: Framework, a: str, strict: bool = False) -> tuple:
    fw.require(a)
    key = ("suff", a, strict)
    hit = fw._memo.get(key)
    if hit is None:
        hit = canonical_family(s for s in _candidate_subsets(fw, a)
                               if is_sufficient_acc(fw, s, a, strict))
        fw._memo[key] = hit
    return hit


def is_necessary_acc(fw: Framework, b: str, a: str) -> bool:
    """``b`` is relevant for ``a`` and belongs to every admissible set containing ``a``."""
    fw.require(a, b)
    if b not in relevant_args(fw, a):
        return False
    return all(b in e for e in enumerate_extensions(fw, Semantics.ADMISSIBLE) if a in e)


def necessary_args_acc(fw: Framework, a: str) -> frozenset:
    fw.require(a)
    return frozenset(b for b in relevant_args(fw, a) if is_necessary_acc(fw, b, a))


# -- non-acceptance ----------------------------------------------------------

def classify_attack(fw: Framework, path) -> ContestReport:
    """Find where an odd attack path can be contested.

    Every second intermediate argument (C2, C4, ...) is inspected; its
    attackers other than its predecessor on the path contest the attack.
    """
    if not isinstance(path, AttackPath):
        path = AttackPath(path)
    validate_path(fw, path)
    if not path.is_attack:
        raise InvalidPath(f"{path} has even length and is a defence, not an attack")
    nodes = path.nodes
    points = []
    for i in range(2, len(nodes) - 1, 2):
        contesting = fw.attackers(nodes[i]) - {nodes[i - 1]}
        if contesting:
            points.append((nodes[i], frozenset(contesting)))
    return ContestReport(path, tuple(points))


class _NonAcceptance:
    """Recursive sufficiency test for non-acceptance, memoised per framework.

    The recursion carries the targets currently being justified; a branch
    that needs one of them again fails, which guarantees termination on
    cyclic frameworks.
    """

    def __init__(self, fw):
        self.fw = fw
        self.memo = {}
        self.reports = {}

    def odd_reports(self, b, target):
        key = (b, target)
        if key not in self.reports:
            self.reports[key] = [classify_attack(self.fw, p)
                                 for p in attack_paths(self.fw, b, target) if p.is_attack]
        return self.reports[key]

    def sufficient(self, s, target, stack=frozenset()):
        key = (s, target, stack)
        if key in self.memo:
            return self.memo[key]
        result = self._sufficient(s, target, stack)
        self.memo[key] = result
        return result

    def _sufficient(self, s, target, stack):
        fw = self.fw
        if not s or not s <= relevant_args(fw, target):
            return False
        attackers = fw.attackers(target)
        if not attackers.isdisjoint(s):
            return True
        stack = stack | {target}
        for b in sorted(s):
            for report in self.odd_reports(b, target):
                if all(self.countered(s, d, stack)
                       for _, contesting in report.contest_points for d in contesting):
                    return True
        return False

    def countered(self, s, d, stack):
        if d in stack:
            return False
        # monotone in s, so the largest relevant subset decides existence
        return self.sufficient(s & relevant_args(self.fw, d), d, stack)


def _checker(fw):
    checker = fw._memo.get("nonacc")
    if checker is None:
        checker = fw._memo["nonacc"] = _NonAcceptance(fw)
    return checker


def _require_not_self_attacking(fw, a):
    if fw.self_attacking(a):
        raise SelfAttacker(f"{a} attacks itself; non-acceptance sufficiency is undefined")


def is_sufficient_nonacc(fw: Framework, s, a: str) -> bool:
    fw.require(a, s)
    _require_not_self_attacking(fw, a)
    return _checker(fw).sufficient(frozenset(s), a)


def sufficient_sets_nonacc(fw: Framework, a: str) -> tuple:
    fw.require(a)
    _require_not_self_attacking(fw, a)
    key = ("suffnot", a)
    hit = fw._memo.get(key)
    if hit is None:
        checker = _checker(fw)
        hit = canonical_family(s for s in _candidate_subsets(fw, a) if checker.sufficient(s, a))
        fw._memo[key] = hit
    return hit


def is_necessary_nonacc(fw: Framework, b: str, a: str, sem, strat) -> bool:
    """``b`` is relevant for ``a`` and ``a`` becomes accepted once ``b`` is removed.

    ``a`` itself is never necessary for its own non-acceptance: removing it
    leaves nothing to accept.  Raises NoExtensions when the reduced
    framework has no extensions under ``sem``.
    """
    fw.require(a, b)
    if b == a or b not in relevant_args(fw, a):
        return False
    return is_accepted(subframework_without(fw, b), sem, strat, a)


def necessary_args_nonacc(fw: Framework, a: str, sem, strat) -> frozenset:
    fw.require(a)
    return frozenset(b for b in sorted(relevant_args(fw, a))
                     if is_necessary_nonacc(fw, b, a, sem, strat))


# -- minimality --------------------------------------------------------------

def minimal_sufficient_sets(fw: Framework, a: str, mode=SufficiencyMode(), order=Order.SET_INCLUSION) -> tuple:
    if not isinstance(mode, SufficiencyMode):
        mode = SufficiencyMode(mode)
    if mode.mode is Mode.ACCEPTANCE:
        family = sufficient_sets_acc(fw, a, mode.strict)
    else:
        family = sufficient_sets_nonacc(fw, a)
    return minima(family, order)
