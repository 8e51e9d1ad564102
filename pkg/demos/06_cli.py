"""The same queries through the command line interface."""
import subprocess
import sys
from pathlib import Path

AF1 = str(Path(__file__).resolve().parent.parent / "tests" / "data" / "af1.apx")

commands = [
    ["extensions", AF1, "--semantics", "prf"],
    ["explain", AF1, "--arg", "A", "--mode", "nonacc", "--strategy", "skeptical", "--depth", "notdef"],
    ["explain", AF1, "--arg", "A", "--mode", "acc", "--strategy", "credulous", "--minimal", "card", "--out", "json"],
    ["paths", AF1, "--from", "F", "--to", "A"],
    ["explain", AF1, "--arg", "A", "--mode", "acc", "--strategy", "skeptical"],
]
for argv in commands:
    proc = subprocess.run([sys.executable, "-m", "argex", *argv], capture_output=True, text=True)
    print("$ argex", " ".join(a if a != AF1 else "af1.apx" for a in argv))
    print(proc.stdout + proc.stderr + f"[exit {proc.returncode}]\n")
