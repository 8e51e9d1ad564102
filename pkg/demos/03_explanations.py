"""Why is an argument (not) accepted?

Acceptance explanations collect the defenders of the argument inside the
extensions; non-acceptance explanations collect the attackers an
extension leaves unanswered.
"""
from pathlib import Path

from argex import (Mode, Order, StatusMismatch, acc_explanation, def_by, minimal_explanation,
                   not_acc_explanation, not_def, read_framework)

fw = read_framework(Path(__file__).resolve().parent.parent / "tests" / "data" / "af1.apx")


def fmt(s):
    return "{" + ",".join(sorted(s)) + "}"


print("DefBy(A, {A,C,E,G}) =", fmt(def_by(fw, "A", {"A", "C", "E", "G"})))
print("NotDef(A, {B,D,F}) =", fmt(not_def(fw, "A", {"B", "D", "F"})))

res = acc_explanation(fw, "prf", "credulous", "A")
print("\ncredulous acceptance of A, candidates:", [fmt(s) for s in res.family])
for ext, value in res.provenance:
    print(f"  from {fmt(ext)}: {fmt(value)}")

res = not_acc_explanation(fw, "prf", "skeptical", "A")
print("skeptical non-acceptance of A:", fmt(res.explanation))

for order in Order:
    found = minimal_explanation(fw, "prf", "credulous", "A", "def_by", order, Mode.ACCEPTANCE)
    print(f"minimal ({order.value}) acceptance explanations of A:", [fmt(s) for s in found])

# Explanations are only given for the status the argument actually has.
try:
    acc_explanation(fw, "prf", "skeptical", "A")
except StatusMismatch as exc:
    print("\nrefused:", exc)

# Deeper explanations swap the per-extension sets for sufficiency/necessity.
for depth in ("suff", "nec", "min_suff_set"):
    r = acc_explanation(fw, "prf", "credulous", "B", depth)
    print(f"depth {depth:13s} -> {[fmt(s) for s in r.family]} (semantics independent: {r.semantics_independent})")
