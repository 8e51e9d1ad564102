"""Reading and writing frameworks as APX, TGF, DOT and JSON text."""
from __future__ import annotations

import json
import re

from .errors import InvalidQuery, ParseError, UndeclaredArgument
from .framework import NAME_RE, Framework

INPUT_FORMATS = ("apx", "tgf")
OUTPUT_FORMATS = ("apx", "tgf", "dot", "json")

_APX_LINE = re.compile(r"(?:(?:arg\([A-Za-z0-9_]+\)|att\([A-Za-z0-9_]+,[A-Za-z0-9_]+\))\.)+")
_APX_STMT = re.compile(r"(arg|att)\(([A-Za-z0-9_]+)(?:,([A-Za-z0-9_]+))?\)\.")


def _build(args, attacks):
    # attacks: list of (x, y, lineno)
    for x, y, lineno in attacks:
        for name in (x, y):
            if name not in args:
                raise UndeclaredArgument(f"argument {name!r} used in an attack but never declared",
                                         lineno)
    return Framework(args, {(x, y) for x, y, _ in attacks})


def _parse_apx(text):
    args, attacks = set(), []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = "".join(raw.split())
        if not line or line.startswith("#"):
            continue
        if not _APX_LINE.fullmatch(line):
            raise ParseError(f"malformed APX statement {raw.strip()!r}", lineno)
        for kind, x, y in _APX_STMT.findall(line):
            if kind == "arg":
                if y:
                    raise ParseError("arg/1 takes a single name", lineno)
                args.add(x)
            else:
                if not y:
                    raise ParseError("att/2 takes two names", lineno)
                attacks.append((x, y, lineno))
    return _build(args, attacks)


def _parse_tgf(text):
    args, attacks = set(), []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens == ["#"]:
            if in_edges:
                raise ParseError("second '#' separator", lineno)
            in_edges = True
            continue
        if not all(NAME_RE.fullmatch(t) for t in tokens):
            raise ParseError(f"malformed TGF line {raw.strip()!r}", lineno)
        if in_edges:
            if len(tokens) != 2:
                raise ParseError("edge lines need exactly two names", lineno)
            attacks.append((tokens[0], tokens[1], lineno))
        else:
            if len(tokens) != 1:
                raise ParseError("node lines need exactly one name", lineno)
            args.add(tokens[0])
    return _build(args, attacks)


def parse_framework(text: str, format: str = "apx") -> Framework:
    """Parse APX or TGF text into a Framework.

    Raises ParseError (carrying ``.line``) for malformed lines and
    UndeclaredArgument when an attack endpoint is never declared.
    """
    if format == "apx":
        return _parse_apx(text)
    if format == "tgf":
        return _parse_tgf(text)
    raise InvalidQuery(f"unsupported input format {format!r}")


def _sorted_attacks(fw):
    return sorted(fw.attacks)


def serialize_framework(fw: Framework, format: str = "apx") -> str:
    if format == "apx":
        lines = [f"arg({a})." for a in fw.names]
        lines += [f"att({x},{y})." for x, y in _sorted_attacks(fw)]
        return "".join(line + "\n" for line in lines)
    if format == "tgf":
        lines = list(fw.names) + ["#"] + [f"{x} {y}" for x, y in _sorted_attacks(fw)]
        return "\n".join(lines) + "\n"
    if format == "dot":
        lines = ["digraph af {"]
        lines += [f'  "{a}";' for a in fw.names]
        lines += [f'  "{x}" -> "{y}";' for x, y in _sorted_attacks(fw)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        doc = {"arguments": list(fw.names),
               "attacks": [[x, y] for x, y in _sorted_attacks(fw)]}
        return json.dumps(doc, indent=2) + "\n"
    raise InvalidQuery(f"unsupported output format {format!r}")


def read_framework(path, format=None) -> Framework:
    """Read a framework file, picking the format from the suffix unless given."""
    path = str(path)
    if format is None:
        suffix = path.rsplit(".", 1)[-1].lower() if "." in path else ""
        if suffix not in INPUT_FORMATS:
            raise InvalidQuery(f"cannot infer format of {path!r}; pass a format explicitly")
        format = suffix
    with open(path, encoding="utf-8") as fh:
        return parse_framework(fh.read(), format)
