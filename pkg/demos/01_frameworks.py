"""Building, reading and writing argumentation frameworks.

Seven arguments A..G.  B attacks A; C and E attack B; C and D attack each
other; F attacks E; F and G attack each other.
"""
from argex import (Framework, attack_paths, indirect_relation, parse_framework, relevant_args,
                   serialize_framework, subframework_without)

AF1 = """
arg(A). arg(B). arg(C). arg(D). arg(E). arg(F). arg(G).
att(B,A). att(C,B). att(C,D). att(D,C). att(E,B). att(F,E). att(F,G). att(G,F).
"""

fw = parse_framework(AF1, "apx")
print(f"{len(fw)} arguments, {len(fw.attacks)} attacks")
print("attackers of B:", sorted(fw.attackers("B")))

# Indirect relations follow attack walks: odd length attacks, even length defends.
for a, b in [("G", "B"), ("G", "E"), ("D", "A")]:
    rel = indirect_relation(fw, a, b)
    print(f"{a} -> {b}: attacks={rel.attacks} defends={rel.defends}")

print("relevant for A:", sorted(relevant_args(fw, "A")))
print("relevant for G:", sorted(relevant_args(fw, "G")))
print("simple paths D to A:", [str(p) for p in attack_paths(fw, "D", "A")])

without_b = subframework_without(fw, "B")
print("after removing B, A is attacked by:", sorted(without_b.attackers("A")))

print("\nTGF:\n" + serialize_framework(fw, "tgf"))
print("DOT:\n" + serialize_framework(fw, "dot"))

# frameworks can also be built directly
tiny = Framework(["x", "y"], {("x", "y")})
print(serialize_framework(tiny, "json"))
