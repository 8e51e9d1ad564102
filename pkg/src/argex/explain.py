"""Acceptance and non-acceptance explanations.

An explanation is assembled from a per-extension *depth* function:
``def_by`` (arguments defending the queried argument inside the
extension) for acceptance and ``not_def`` (attackers the extension leaves
unanswered) for non-acceptance.  The sufficiency and necessity depths
ignore the extension, so their results do not depend on the semantics.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import InvalidQuery, StatusMismatch
from .framework import (Framework, canonical_family, defenders_of, attackers_of,
                        set_attacks)
from .semantics import (AcceptanceStatus, Semantics, Strategy, acceptance_status,
                        enumerate_extensions)
from . import necsuff
from .necsuff import Mode, Order, minima


class Depth(str, enum.Enum):
    DEF_BY = "def_by"
    NOT_DEF = "not_def"
    SUFF = "suff"
    NEC = "nec"
    SUFF_NOT = "suff_not"
    NEC_NOT = "nec_not"
    MIN_SUFF_CARD = "min_suff_card"
    MIN_SUFF_SET = "min_suff_set"
    MIN_SUFF_NOT_CARD = "min_suff_not_card"
    MIN_SUFF_NOT_SET = "min_suff_not_set"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        text = str(value).lower()
        for member in cls:
            if text in (member.value, member.value.replace("_", "")):
                return member
        raise InvalidQuery(f"unknown depth {value!r}")


ACCEPTANCE_DEPTHS = frozenset({Depth.DEF_BY, Depth.SUFF, Depth.NEC,
                               Depth.MIN_SUFF_CARD, Depth.MIN_SUFF_SET})
NON_ACCEPTANCE_DEPTHS = frozenset({Depth.NOT_DEF, Depth.SUFF_NOT, Depth.NEC_NOT,
                                   Depth.MIN_SUFF_NOT_CARD, Depth.MIN_SUFF_NOT_SET})
_FAMILY_DEPTHS = frozenset({Depth.SUFF, Depth.SUFF_NOT, Depth.MIN_SUFF_CARD,
                            Depth.MIN_SUFF_SET, Depth.MIN_SUFF_NOT_CARD,
                            Depth.MIN_SUFF_NOT_SET})
_EXTENSION_DEPTHS = frozenset({Depth.DEF_BY, Depth.NOT_DEF})


@dataclass(frozen=True)
class ExplanationResult:
    argument: str
    mode: Mode
    strategy: Strategy
    semantics: Semantics
    depth: Depth
    family: tuple
    kind: str  # "single" or "candidates"
    semantics_independent: bool = False
    # (extension, value) pairs for extension-dependent depths
    provenance: tuple = field(default=(), compare=False)

    @property
    def explanation(self) -> frozenset:
        """The determined set of a ``single`` result, or the first candidate."""
        return self.family[0] if self.family else frozenset()


def def_by(fw: Framework, a: str, within=None) -> frozenset:
    """Arguments that (in)directly defend ``a``, optionally restricted to ``within``."""
    fw.require(a)
    found = defenders_of(fw, a)
    if within is not None:
        fw.require(within)
        found = found & frozenset(within)
    return found


def not_def(fw: Framework, a: str, ext) -> frozenset:
    """(In)direct attackers of ``a`` that ``ext`` does not directly attack."""
    fw.require(a, ext)
    return frozenset(b for b in attackers_of(fw, a) if not set_attacks(fw, ext, b))


def _check_depth(mode, depth):
    allowed = ACCEPTANCE_DEPTHS if mode is Mode.ACCEPTANCE else NON_ACCEPTANCE_DEPTHS
    if depth not in allowed:
        raise InvalidQuery(f"depth {depth.value} cannot be used for {mode.value} explanations")


def _require_status(fw, sem, strat, a, mode):
    status = acceptance_status(fw, sem, strat, a)
    want = AcceptanceStatus.ACCEPTED if mode is Mode.ACCEPTANCE else AcceptanceStatus.NON_ACCEPTED
    if status is not want:
        raise StatusMismatch(f"{a} is {status.value} under {sem.value}/{strat.value}")


def _constant_family(fw, a, depth):
    if depth is Depth.SUFF:
        return necsuff.sufficient_sets_acc(fw, a)
    if depth is Depth.SUFF_NOT:
        return necsuff.sufficient_sets_nonacc(fw, a)
    mode = necsuff.SufficiencyMode(
        Mode.ACCEPTANCE if depth in (Depth.MIN_SUFF_CARD, Depth.MIN_SUFF_SET) else Mode.NON_ACCEPTANCE)
    order = Order.CARDINALITY if depth.value.endswith("card") else Order.SET_INCLUSION
    return necsuff.minimal_sufficient_sets(fw, a, mode, order)


def _extension_range(fw, sem, strat, a, mode):
    exts = enumerate_extensions(fw, sem)
    if mode is Mode.ACCEPTANCE:
        return exts if strat is Strategy.SKEPTICAL else tuple(e for e in exts if a in e)
    return tuple(e for e in exts if a not in e) if strat is Strategy.SKEPTICAL else exts


def _per_extension(fw, a, depth, ext):
    return def_by(fw, a, ext) if depth is Depth.DEF_BY else not_def(fw, a, ext)


def _explain(fw, sem, strat, a, depth, mode):
    fw.require(a)
    sem, strat, depth = Semantics.parse(sem), Strategy.parse(strat), Depth.parse(depth)
    _check_depth(mode, depth)
    _require_status(fw, sem, strat, a, mode)
    common = dict(argument=a, mode=mode, strategy=strat, semantics=sem, depth=depth)

    if depth in _FAMILY_DEPTHS:
        return ExplanationResult(family=_constant_family(fw, a, depth), kind="candidates",
                                 semantics_independent=True, **common)
    if depth is Depth.NEC:
        return ExplanationResult(family=(necsuff.necessary_args_acc(fw, a),), kind="single",
                                 semantics_independent=True, **common)
    if depth is Depth.NEC_NOT:
        # depends on the semantics through the subframework acceptance test
        return ExplanationResult(family=(necsuff.necessary_args_nonacc(fw, a, sem, strat),),
                                 kind="single", **common)

    exts = _extension_range(fw, sem, strat, a, mode)
    provenance = tuple((e, _per_extension(fw, a, depth, e)) for e in exts)
    if mode is Mode.ACCEPTANCE and strat is Strategy.CREDULOUS:
        return ExplanationResult(family=canonical_family(v for _, v in provenance),
                                 kind="candidates", provenance=provenance, **common)
    union = frozenset().union(*(v for _, v in provenance))
    return ExplanationResult(family=(union,), kind="single", provenance=provenance, **common)


def acc_explanation(fw: Framework, sem, strat, a: str, depth=Depth.DEF_BY) -> ExplanationResult:
    """Explain why ``a`` is accepted under ``sem``/``strat``.

    Skeptical acceptance yields one set: the union of the depth value over
    every extension.  Credulous acceptance yields the family of depth
    values over the extensions containing ``a``; any member explains it.
    Raises StatusMismatch when ``a`` is not accepted.
    """
    return _explain(fw, sem, strat, a, depth, Mode.ACCEPTANCE)


def not_acc_explanation(fw: Framework, sem, strat, a: str, depth=Depth.NOT_DEF) -> ExplanationResult:
    """Explain why ``a`` is not accepted.

    Skeptical: union of the depth value over the extensions lacking ``a``.
    Credulous: union over all extensions.
    """
    return _explain(fw, sem, strat, a, depth, Mode.NON_ACCEPTANCE)


def minimal_explanation(fw: Framework, sem, strat, a: str, depth, order, mode) -> tuple:
    """Minimal explanations: the order-minima of the per-extension depth values.

    The extensions ranged over are all of them (skeptical acceptance,
    credulous non-acceptance), those containing ``a`` (credulous
    acceptance) or those lacking it (skeptical non-acceptance).
    """
    mode = Mode.parse(mode)
    sem, strat, depth = Semantics.parse(sem), Strategy.parse(strat), Depth.parse(depth)
    fw.require(a)
    _check_depth(mode, depth)
    _require_status(fw, sem, strat, a, mode)
    if depth in _EXTENSION_DEPTHS:
        values = [_per_extension(fw, a, depth, e)
                  for e in _extension_range(fw, sem, strat, a, mode)]
    elif depth in _FAMILY_DEPTHS:
        values = _constant_family(fw, a, depth)
    elif depth is Depth.NEC:
        values = [necsuff.necessary_args_acc(fw, a)]
    else:
        values = [necsuff.necessary_args_nonacc(fw, a, sem, strat)]
    return minima(values, order)
