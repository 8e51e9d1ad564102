"""Extensions under the five semantics and skeptical/credulous acceptance."""
from pathlib import Path

from argex import (Framework, NoExtensions, acceptance_status, check_set, enumerate_extensions,
                   partition_extensions, read_framework)

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"
fw = read_framework(DATA / "af1.apx")


def show(family):
    return ", ".join("{" + ",".join(sorted(s)) + "}" for s in family)


for sem in ("adm", "cmp", "grd", "prf", "stb"):
    exts = enumerate_extensions(fw, sem)
    print(f"{sem}: {len(exts):2d} extension(s)  {show(exts) if len(exts) < 6 else '...'}")

print("\n{A,C,E,G} stable?", check_set(fw, {"A", "C", "E", "G"}, "stable"))
print("{C,D} conflict-free?", check_set(fw, {"C", "D"}, "conflict_free"))

with_a, without_a = partition_extensions(fw, "prf", "A")
print("\npreferred extensions with A:", show(with_a))
print("preferred extensions without A:", show(without_a))

for strat in ("skeptical", "credulous"):
    print(f"A under prf/{strat}:", acceptance_status(fw, "prf", strat, "A").value)

# An odd cycle has no stable extension, so acceptance is undefined there.
cycle = Framework("ABC", {("A", "B"), ("B", "C"), ("C", "A")})
try:
    acceptance_status(cycle, "stb", "credulous", "A")
except NoExtensions as exc:
    print("\n3-cycle:", exc)

# Above 20 arguments a labelling search replaces subset filtering.
chain = Framework([f"c{i}" for i in range(30)], {(f"c{i}", f"c{i+1}") for i in range(29)})
print("grounded extension of a 30-chain has", len(enumerate_extensions(chain, "grd")[0]), "arguments")
print("preferred of the chain:", len(enumerate_extensions(chain, "prf")), "extension(s)")
