"""Sufficient and necessary arguments, on both sides of acceptance."""
from argex import (Framework, Mode, SufficiencyMode, classify_attack, is_sufficient_acc,
                   is_sufficient_nonacc, minimal_sufficient_sets, necessary_args_acc,
                   necessary_args_nonacc, sufficient_sets_acc, sufficient_sets_nonacc)

af1 = Framework("ABCDEFG", {("B", "A"), ("C", "B"), ("C", "D"), ("D", "C"), ("E", "B"),
                            ("F", "E"), ("F", "G"), ("G", "F")})
af2 = Framework("ABCD", {("A", "C"), ("C", "A"), ("A", "D"), ("C", "B"), ("D", "B"), ("B", "D")})


def fmt(s):
    return "{" + ",".join(sorted(s)) + "}"


print("-- acceptance --")
print("{C} sufficient for A:", is_sufficient_acc(af1, {"C"}, "A"))
print("{E} sufficient for A:", is_sufficient_acc(af1, {"E"}, "A"),
      "| strict (must be admissible):", is_sufficient_acc(af1, {"E"}, "A", strict=True))
print("Suff(B):", [fmt(s) for s in sufficient_sets_acc(af1, "B")])
print("Nec(B):", fmt(necessary_args_acc(af1, "B")), " Nec(A):", fmt(necessary_args_acc(af1, "A")))

print("\n-- contested attacks --")
for path in ("GFEB", "DCBA", "FEBA"):
    report = classify_attack(af1, tuple(path))
    where = ", ".join(f"{c} by {fmt(d)}" for c, d in report.contest_points)
    print(f"{'->'.join(path)}: {report.verdict}" + (f" at {where}" if where else ""))

print("\n-- non-acceptance --")
for s in ({"D"}, {"F"}, {"D", "F"}):
    print(f"{fmt(s)} sufficient for non-acceptance of A:", is_sufficient_nonacc(af1, s, "A"))
print("SuffNot(B) has", len(sufficient_sets_nonacc(af1, "B")), "members")
print("NecNot(A) under prf/skeptical:", fmt(necessary_args_nonacc(af1, "A", "prf", "skeptical")))
print("NecNot(B) under prf/skeptical:", fmt(necessary_args_nonacc(af1, "B", "prf", "skeptical")))

print("\n-- minimal sufficient sets (second framework) --")
nonacc = SufficiencyMode(Mode.NON_ACCEPTANCE)
for a in "BD":
    print(f"MinSuff({a}) = {[fmt(s) for s in minimal_sufficient_sets(af2, a)]}   "
          f"MinSuffNot({a}) = {[fmt(s) for s in minimal_sufficient_sets(af2, a, nonacc)]}")
