"""Extension semantics (admissible, complete, grounded, preferred, stable).

Small frameworks are enumerated by filtering every subset at once, with
subsets encoded as integer bitmasks in a numpy array.  Above
``BITSET_LIMIT`` arguments a branch-and-bound labelling search is used
instead.  Both routes return families in canonical order.
"""
from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .errors import InvalidQuery, NoExtensions
from .framework import Framework, canonical_family, set_defends

BITSET_LIMIT = 20


class Semantics(str, enum.Enum):
    ADMISSIBLE = "adm"
    COMPLETE = "cmp"
    GROUNDED = "grd"
    PREFERRED = "prf"
    STABLE = "stb"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {m.name.lower(): m for m in cls}
        aliases.update({m.value: m for m in cls})
        try:
            return aliases[str(value).lower()]
        except KeyError:
            raise InvalidQuery(f"unknown semantics {value!r}") from None


class Strategy(str, enum.Enum):
    SKEPTICAL = "skeptical"
    CREDULOUS = "credulous"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidQuery(f"unknown strategy {value!r}") from None


class AcceptanceStatus(str, enum.Enum):
    ACCEPTED = "accepted"
    NON_ACCEPTED = "non_accepted"


class ExtensionPartition(NamedTuple):
    with_a: tuple
    without_a: tuple


def check_set(fw: Framework, s, property: str) -> bool:
    """Test ``s`` for conflict_free / admissible / complete / stable."""
    fw.require(s)
    s = frozenset(s)
    cf = not any(x in s and y in s for x, y in fw.attacks)
    if property == "conflict_free":
        return cf
    admissible = cf and all(set_defends(fw, s, a) for a in s)
    if property == "admissible":
        return admissible
    complete = admissible and all(a in s for a in fw.args if set_defends(fw, s, a))
    if property == "complete":
        return complete
    if property == "stable":
        attacked = {y for x, y in fw.attacks if x in s}
        return complete and fw.args - s <= attacked
    raise InvalidQuery(f"unknown set property {property!r}")


def grounded_extension(fw: Framework) -> frozenset:
    """Least fixed point of the characteristic function, iterated from the empty set."""
    current = frozenset()
    while True:
        nxt = frozenset(a for a in fw.args if set_defends(fw, current, a))
        if nxt == current:
            return current
        current = nxt


# -- bitset route ----------------------------------------------------------

def _bitset_families(fw: Framework):
    names = fw.names
    n = len(names)
    idx = {a: i for i, a in enumerate(names)}
    attacker_mask = [0] * n
    for x, y in fw.attacks:
        attacker_mask[idx[y]] |= 1 << idx[x]

    masks = np.arange(1 << n, dtype=np.int64)
    conflict_free = np.ones(masks.shape, dtype=bool)
    attacked = np.zeros_like(masks)
    for j in range(n):
        hit = (masks & attacker_mask[j]) != 0
        attacked |= hit.astype(np.int64) << j
        conflict_free &= ~(hit & (((masks >> j) & 1) == 1))
    defended = np.zeros_like(masks)
    for j in range(n):
        ok = (attacker_mask[j] & ~attacked) == 0
        defended |= ok.astype(np.int64) << j

    full = (1 << n) - 1
    admissible = conflict_free & ((masks & ~defended) == 0)
    complete = admissible & (defended == masks)
    stable = conflict_free & ((masks | attacked) == full)

    def decode(selected):
        return [frozenset(names[i] for i in range(n) if m >> i & 1) for m in selected.tolist()]

    return {
        "adm": decode(masks[admissible]),
        "cmp": decode(masks[complete]),
        "stb": decode(masks[stable]),
        "_cmp_masks": masks[complete],
    }


def _maximal_masks(mask_array):
    order = sorted(mask_array.tolist(), key=lambda m: -bin(m).count("1"))
    kept = []
    for m in order:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


# -- labelling route -------------------------------------------------------

def _labelling_admissible(fw: Framework):
    """Enumerate admissible sets by assigning IN/OUT to arguments in order.

    Unassigned arguments are undecided.  A branch is cut as soon as an
    attacker of an IN argument can no longer be attacked by any IN or
    still-undecided argument.
    """
    names = fw.names
    pos = {a: i for i, a in enumerate(names)}
    attackers = {a: fw.attackers(a) for a in names}
    # latest position of any argument able to counter x
    last_counter = {x: max((pos[z] for z in attackers[x]), default=-1) for x in names}
    found = []

    def search(i, inside, pending):
        # pending: attackers of IN arguments not yet attacked by IN arguments
        if any(last_counter[x] < i for x in pending):
            return
        if i == len(names):
            found.append(frozenset(inside))
            return
        a = names[i]
        search(i + 1, inside, pending)
        if (a, a) in fw.attacks:
            return
        if not attackers[a].isdisjoint(inside) or not fw.attacked_by(a).isdisjoint(inside):
            return
        new_pending = {x for x in pending | attackers[a]
                       if attackers[x].isdisjoint(inside | {a})}
        search(i + 1, inside | {a}, frozenset(new_pending))

    search(0, frozenset(), frozenset())
    return found


def _labelling_families(fw: Framework):
    adm = _labelling_admissible(fw)
    cmp_ = [s for s in adm if all(a in s for a in fw.args - s if set_defends(fw, s, a))]
    stb = []
    for s in cmp_:
        attacked = {y for x, y in fw.attacks if x in s}
        if fw.args - s <= attacked:
            stb.append(s)
    return {"adm": adm, "cmp": cmp_, "stb": stb}


def _maximal_sets(family):
    order = sorted(family, key=len, reverse=True)
    kept = []
    for s in order:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


# -- public API ------------------------------------------------------------

def _families(fw: Framework, bitset_limit: int):
    route = "bitset" if len(fw) <= bitset_limit else "labelling"
    key = ("families", route)
    hit = fw._memo.get(key)
    if hit is not None:
        return hit
    if route == "bitset":
        raw = _bitset_families(fw)
        names = fw.names
        prf = [frozenset(names[i] for i in range(len(names)) if m >> i & 1)
               for m in _maximal_masks(raw["_cmp_masks"])]
    else:
        raw = _labelling_families(fw)
        prf = _maximal_sets(raw["cmp"])
    fams = {
        Semantics.ADMISSIBLE: canonical_family(raw["adm"]),
        Semantics.COMPLETE: canonical_family(raw["cmp"]),
        Semantics.PREFERRED: canonical_family(prf),
        Semantics.STABLE: canonical_family(raw["stb"]),
    }
    fw._memo[key] = fams
    return fams


def enumerate_extensions(fw: Framework, sem, *, bitset_limit: int = BITSET_LIMIT) -> tuple:
    """All extensions of ``fw`` under ``sem``, ordered by size then lexicographically."""
    sem = Semantics.parse(sem)
    if sem is Semantics.GROUNDED:
        return (grounded_extension(fw),)
    return _families(fw, bitset_limit)[sem]


def partition_extensions(fw: Framework, sem, a: str) -> ExtensionPartition:
    fw.require(a)
    exts = enumerate_extensions(fw, sem)
    return ExtensionPartition(tuple(e for e in exts if a in e),
                              tuple(e for e in exts if a not in e))


def acceptance_status(fw: Framework, sem, strat, a: str) -> AcceptanceStatus:
    fw.require(a)
    sem, strat = Semantics.parse(sem), Strategy.parse(strat)
    exts = enumerate_extensions(fw, sem)
    if not exts:
        raise NoExtensions(f"no {sem.name.lower()} extensions; acceptance is undefined")
    test = all if strat is Strategy.SKEPTICAL else any
    accepted = test(a in e for e in exts)
    return AcceptanceStatus.ACCEPTED if accepted else AcceptanceStatus.NON_ACCEPTED


def is_accepted(fw: Framework, sem, strat, a: str) -> bool:
    return acceptance_status(fw, sem, strat, a) is AcceptanceStatus.ACCEPTED
