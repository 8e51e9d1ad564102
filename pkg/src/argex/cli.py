"""Command-line interface: ``argex <command> [FILE] [options]``.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 unknown argument,
4 status mismatch, 5 no extensions, 6 instance too large.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .explain import Depth, acc_explanation, minimal_explanation, not_acc_explanation
from .formats import INPUT_FORMATS, OUTPUT_FORMATS, parse_framework, read_framework, serialize_framework
from .framework import attack_paths
from .necsuff import (Mode, Order, SufficiencyMode, classify_attack, minimal_sufficient_sets,
                      necessary_args_acc, necessary_args_nonacc, sufficient_sets_acc,
                      sufficient_sets_nonacc)
from .oracle import (CHECK_LIMIT, CORPUS_PROBS, PROPERTY_IDS, GeneratorConfig, PropertyReport,
                     check_property, corpus, random_framework)
from .semantics import AcceptanceStatus, Semantics, Strategy, acceptance_status, enumerate_extensions

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_UNKNOWN, EXIT_STATUS, EXIT_NOEXT, EXIT_TOOLARGE = range(7)

_EXIT_CODES = [
    (errors.ParseError, EXIT_PARSE),
    (errors.UnknownArgument, EXIT_UNKNOWN),
    (errors.StatusMismatch, EXIT_STATUS),
    (errors.SelfAttacker, EXIT_STATUS),
    (errors.NoExtensions, EXIT_NOEXT),
    (errors.TooLarge, EXIT_TOOLARGE),
    (errors.ArgexError, EXIT_USAGE),
]

SEMANTICS_CHOICES = [s.value for s in Semantics]
DEPTH_FLAGS = {"defby": Depth.DEF_BY, "notdef": Depth.NOT_DEF, "suff": Depth.SUFF,
               "nec": Depth.NEC, "suffnot": Depth.SUFF_NOT, "necnot": Depth.NEC_NOT}
ACC_FLAGS = {"defby", "suff", "nec"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- output helpers ---------------------------------------------------------

def fmt_set(s):
    return "{" + ",".join(sorted(s)) + "}"


def set_json(s):
    return sorted(s)


def family_json(fam):
    return [set_json(s) for s in fam]


def emit(args, query, text_lines, result, **extra):
    if args.out == "json":
        doc = {"query": query, "result": result}
        doc.update(extra)
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load(args):
    if args.file == "-":
        return parse_framework(sys.stdin.read(), args.format or "apx")
    try:
        return read_framework(args.file, args.format)
    except OSError as exc:
        raise errors.ParseError(f"cannot read {args.file}: {exc.strerror}") from None


def _query(args, **fields):
    q = {"command": args.command}
    if getattr(args, "file", None):
        q["file"] = args.file
    q.update({k: v for k, v in fields.items() if v is not None})
    return q


# -- commands ---------------------------------------------------------------

def cmd_extensions(args):
    fw = _load(args)
    fam = enumerate_extensions(fw, args.semantics)
    if not fam:
        raise errors.NoExtensions(f"no {args.semantics} extensions")
    emit(args, _query(args, semantics=args.semantics), [fmt_set(s) for s in fam], family_json(fam))


def cmd_status(args):
    fw = _load(args)
    status = acceptance_status(fw, args.semantics, args.strategy, args.arg)
    emit(args, _query(args, arg=args.arg, semantics=args.semantics, strategy=args.strategy),
         [status.value], status.value)


def _validate_explain(args):
    if args.depth is None:
        args.depth = "defby" if args.mode == "acc" else "notdef"
    if (args.depth in ACC_FLAGS) != (args.mode == "acc"):
        raise UsageError(f"--depth {args.depth} is not valid with --mode {args.mode}")


def cmd_explain(args):
    _validate_explain(args)
    fw = _load(args)
    depth = DEPTH_FLAGS[args.depth]
    mode = Mode.parse(args.mode)
    query = _query(args, arg=args.arg, semantics=args.semantics, strategy=args.strategy,
                   mode=mode.value, depth=depth.value, minimal=args.minimal, pick=args.pick)
    if args.minimal:
        fam = minimal_explanation(fw, args.semantics, args.strategy, args.arg, depth,
                                  args.minimal, mode)
        independent = depth not in (Depth.DEF_BY, Depth.NOT_DEF, Depth.NEC_NOT)
        kind = "candidates"
    else:
        explain = acc_explanation if mode is Mode.ACCEPTANCE else not_acc_explanation
        res = explain(fw, args.semantics, args.strategy, args.arg, depth)
        fam, independent, kind = res.family, res.semantics_independent, res.kind
    if args.pick == "first" and fam:
        fam, kind = fam[:1], "single"
    result = {"kind": kind, "family": family_json(fam)}
    emit(args, query, [fmt_set(s) for s in fam], result, semantics_independent=independent)


def cmd_sufficient(args):
    if args.strict and args.mode != "acc":
        raise UsageError("--strict only applies to --mode acc")
    fw = _load(args)
    mode = SufficiencyMode(Mode.parse(args.mode), args.strict)
    if args.minimal:
        fam = minimal_sufficient_sets(fw, args.arg, mode, Order.parse(args.minimal))
    elif mode.mode is Mode.ACCEPTANCE:
        fam = sufficient_sets_acc(fw, args.arg, args.strict)
    else:
        fam = sufficient_sets_nonacc(fw, args.arg)
    query = _query(args, arg=args.arg, mode=mode.mode.value, strict=args.strict or None,
                   minimal=args.minimal)
    emit(args, query, [fmt_set(s) for s in fam], family_json(fam), semantics_independent=True)


def cmd_necessary(args):
    fw = _load(args)
    if args.mode == "acc":
        found = necessary_args_acc(fw, args.arg)
        query = _query(args, arg=args.arg, mode="acceptance")
        emit(args, query, [fmt_set(found)], set_json(found), semantics_independent=True)
        return
    status = acceptance_status(fw, args.semantics, args.strategy, args.arg)
    if status is AcceptanceStatus.ACCEPTED:
        raise errors.StatusMismatch(f"{args.arg} is accepted under {args.semantics}/{args.strategy}")
    found = necessary_args_nonacc(fw, args.arg, args.semantics, args.strategy)
    query = _query(args, arg=args.arg, mode="non_acceptance", semantics=args.semantics,
                   strategy=args.strategy)
    emit(args, query, [fmt_set(found)], set_json(found), semantics_independent=False)


def cmd_paths(args):
    fw = _load(args)
    lines, result = [], []
    for path in attack_paths(fw, args.source, args.target):
        entry = {"nodes": list(path.nodes), "length": len(path),
                 "parity": "attack" if path.is_attack else "defence"}
        line = f"{path} {entry['parity']}"
        if path.is_attack:
            report = classify_attack(fw, path)
            entry["verdict"] = report.verdict
            entry["contest_points"] = [{"argument": c, "attackers": sorted(d)}
                                       for c, d in report.contest_points]
            line += f" {report.verdict}"
            line += "".join(f" {c}:{fmt_set(d)}" for c, d in report.contest_points)
        lines.append(line)
        result.append(entry)
    emit(args, _query(args, source=args.source, target=args.target), lines, result)


def cmd_check(args):
    props = PROPERTY_IDS if args.property == "all" else (args.property,)
    if args.file:
        frameworks = [_load(args)]
    else:
        if not 1 <= args.n <= CHECK_LIMIT:
            raise UsageError(f"--n must be between 1 and {CHECK_LIMIT}")
        probs = (args.p,) if args.p is not None else CORPUS_PROBS
        frameworks = [fw for _, fw in corpus(args.count, args.seed, args.n, probs,
                                             args.self_attacks)]
    reports = []
    for pid in props:
        total = PropertyReport(pid)
        for fw in frameworks:
            total.merge(check_property(fw, pid, args.unrestricted))
        reports.append(total)
    lines = []
    for r in reports:
        lines.append(f"{r.property_id}: checked={r.checked_instances} skipped={r.skipped} "
                     f"violations={len(r.violations)} {'OK' if r.ok else 'FAIL'}")
        for v in r.violations[:args.show]:
            lines.append(f"  {v.argument}: {v.detail} | {' '.join(v.framework.split())}")
    query = _query(args, property=args.property, count=None if args.file else args.count,
                   n=None if args.file else args.n, p=args.p,
                   seed=None if args.file else args.seed, unrestricted=args.unrestricted or None)
    emit(args, query, lines, [r.to_dict() for r in reports])


def cmd_gen(args):
    cfg = GeneratorConfig(args.n, args.p, args.self_attacks, args.seed)
    fw = random_framework(cfg)
    text = serialize_framework(fw, args.to)
    if args.out == "json":
        emit(args, _query(args, n=args.n, p=args.p, seed=args.seed), [], text)
    else:
        sys.stdout.write(text)


def cmd_render(args):
    fw = _load(args)
    text = serialize_framework(fw, args.to)
    if args.out == "json":
        emit(args, _query(args, to=args.to), [], text)
    else:
        sys.stdout.write(text)


# -- parser -----------------------------------------------------------------

def build_parser():
    parser = _Parser(prog="argex", description="Extensions and explanations for abstract argumentation frameworks.")
    parser.add_argument("--version", action="version", version="argex 0.1.0")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    common = _Parser(add_help=False)
    common.add_argument("--out", choices=["text", "json"], default="text")

    def with_file(p, optional=False):
        p.add_argument("file", nargs="?" if optional else None, metavar="FILE",
                       help="APX or TGF file ('-' for stdin)")
        p.add_argument("--format", choices=INPUT_FORMATS, help="input format (default: from suffix)")

    def sem_flags(p):
        p.add_argument("--semantics", choices=SEMANTICS_CHOICES, default="prf")
        p.add_argument("--strategy", choices=[s.value for s in Strategy], default="skeptical")

    p = sub.add_parser("extensions", parents=[common], help="enumerate extensions")
    with_file(p)
    p.add_argument("--semantics", choices=SEMANTICS_CHOICES, default="prf")
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("status", parents=[common], help="acceptance status of an argument")
    with_file(p)
    p.add_argument("--arg", required=True)
    sem_flags(p)
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("explain", parents=[common], help="(non-)acceptance explanation")
    with_file(p)
    p.add_argument("--arg", required=True)
    sem_flags(p)
    p.add_argument("--mode", choices=["acc", "nonacc"], required=True)
    p.add_argument("--depth", choices=list(DEPTH_FLAGS))
    p.add_argument("--minimal", choices=["card", "set"])
    p.add_argument("--pick", choices=["first"])
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("sufficient", parents=[common], help="sufficient sets")
    with_file(p)
    p.add_argument("--arg", required=True)
    p.add_argument("--mode", choices=["acc", "nonacc"], default="acc")
    p.add_argument("--strict", action="store_true", help="also require admissibility (acceptance only)")
    p.add_argument("--minimal", choices=["card", "set"])
    p.set_defaults(func=cmd_sufficient)

    p = sub.add_parser("necessary", parents=[common], help="necessary arguments")
    with_file(p)
    p.add_argument("--arg", required=True)
    p.add_argument("--mode", choices=["acc", "nonacc"], default="acc")
    sem_flags(p)
    p.set_defaults(func=cmd_necessary)

    p = sub.add_parser("paths", parents=[common], help="simple attack paths and contest points")
    with_file(p)
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("check", parents=[common], help="run property checkers")
    with_file(p, optional=True)
    p.add_argument("--property", choices=list(PROPERTY_IDS) + ["all"], default="all")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--n", type=int, default=CHECK_LIMIT, help="largest framework size")
    p.add_argument("--p", type=float, help="edge probability (default: cycle 0.15/0.3/0.5)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--self-attacks", action="store_true")
    p.add_argument("--unrestricted", action="store_true",
                   help="also check items outside their provable scope")
    p.add_argument("--show", type=int, default=3, help="violations listed per property")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", parents=[common], help="generate a random framework")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--self-attacks", action="store_true")
    p.add_argument("--to", choices=OUTPUT_FORMATS, default="apx")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("render", parents=[common], help="convert a framework to another format")
    with_file(p)
    p.add_argument("--to", choices=OUTPUT_FORMATS, required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as exc:
        print(f"argex: error: UsageError: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except errors.ArgexError as exc:
        for cls, code in _EXIT_CODES:
            if isinstance(exc, cls):
                print(f"argex: error: {type(exc).__name__}: {exc}", file=sys.stderr)
                return code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
