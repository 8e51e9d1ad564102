"""Abstract argumentation frameworks and the graph relations built on them.

A framework is a finite set of named arguments plus a set of ordered
attack pairs.  Beyond direct attack/defence between sets and arguments,
this module computes *indirect* attack and defence: ``a`` attacks ``b``
when some attack-edge walk from ``a`` to ``b`` has odd length, and
defends it when some walk of even length (at least 2) exists.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InvalidFramework, InvalidPath, UnknownArgument

NAME_RE = re.compile(r"[A-Za-z0-9_]+")

ArgSet = frozenset  # alias used in signatures; members are argument names


def canonical_key(s):
    return (len(s), tuple(sorted(s)))


def canonical_family(family: Iterable[Iterable[str]]) -> tuple[frozenset, ...]:
    """Deduplicate a family of sets and sort it by size, then lexicographically."""
    return tuple(sorted({frozenset(s) for s in family}, key=canonical_key))


@dataclass(frozen=True)
class Framework:
    args: frozenset = frozenset()
    attacks: frozenset = frozenset()
    _memo: dict = field(default_factory=dict, init=False, repr=False,
                        compare=False, hash=False)

    def __post_init__(self):
        args = frozenset(self.args)
        attacks = frozenset((x, y) for x, y in self.attacks)
        for name in args:
            if not isinstance(name, str) or not NAME_RE.fullmatch(name):
                raise InvalidFramework(f"invalid argument name {name!r}")
        for x, y in attacks:
            if x not in args or y not in args:
                raise InvalidFramework(f"attack ({x},{y}) has an undeclared endpoint")
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "attacks", attacks)

    def __len__(self):
        return len(self.args)

    def __repr__(self):
        att = ", ".join(f"{x}->{y}" for x, y in sorted(self.attacks))
        return f"Framework(args={sorted(self.args)}, attacks=[{att}])"

    @property
    def names(self) -> tuple[str, ...]:
        """Arguments in sorted order."""
        return tuple(sorted(self.args))

    def _adjacency(self):
        adj = self._memo.get("adj")
        if adj is None:
            out = {a: set() for a in self.args}
            inc = {a: set() for a in self.args}
            for x, y in self.attacks:
                out[x].add(y)
                inc[y].add(x)
            adj = ({a: frozenset(v) for a, v in out.items()},
                   {a: frozenset(v) for a, v in inc.items()})
            self._memo["adj"] = adj
        return adj

    def attackers(self, a: str) -> frozenset:
        """Direct attackers of ``a``."""
        self.require(a)
        return self._adjacency()[1][a]

    def attacked_by(self, a: str) -> frozenset:
        """Arguments directly attacked by ``a``."""
        self.require(a)
        return self._adjacency()[0][a]

    def self_attacking(self, a: str) -> bool:
        return (a, a) in self.attacks

    def require(self, *items):
        """Raise UnknownArgument unless every name (or set of names) is in args."""
        for item in items:
            if isinstance(item, str):
                if item not in self.args:
                    raise UnknownArgument(f"unknown argument {item!r}")
            else:
                missing = set(item) - self.args
                if missing:
                    raise UnknownArgument(f"unknown argument(s) {sorted(missing)}")


class RelationSummary(NamedTuple):
    attacks: bool
    defends: bool


@dataclass(frozen=True)
class AttackPath:
    nodes: tuple

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if len(self.nodes) < 2:
            raise InvalidPath("a path needs at least two nodes")

    def __len__(self):
        return len(self.nodes) - 1

    @property
    def source(self):
        return self.nodes[0]

    @property
    def target(self):
        return self.nodes[-1]

    @property
    def is_attack(self) -> bool:
        return len(self) % 2 == 1

    def __str__(self):
        return "->".join(self.nodes)


def set_attacks(fw: Framework, s, a: str) -> bool:
    fw.require(a, s)
    return not fw.attackers(a).isdisjoint(s)


def set_defends(fw: Framework, s, a: str) -> bool:
    """True when ``s`` attacks every direct attacker of ``a`` (vacuous if unattacked)."""
    fw.require(a, s)
    return all(set_attacks(fw, s, x) for x in fw.attackers(a))


def _parity_reach(fw: Framework, a: str):
    # (odd, even) sets of nodes reachable from a by walks of length >= 1
    key = ("reach", a)
    hit = fw._memo.get(key)
    if hit is not None:
        return hit
    out = fw._adjacency()[0]
    seen = set()
    queue = deque()
    for y in out[a]:
        if (y, 1) not in seen:
            seen.add((y, 1))
            queue.append((y, 1))
    while queue:
        node, parity = queue.popleft()
        for y in out[node]:
            state = (y, parity ^ 1)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    odd = frozenset(n for n, p in seen if p == 1)
    even = frozenset(n for n, p in seen if p == 0)
    fw._memo[key] = (odd, even)
    return odd, even


def indirect_relation(fw: Framework, a: str, b: str) -> RelationSummary:
    fw.require(a, b)
    odd, even = _parity_reach(fw, a)
    return RelationSummary(attacks=b in odd, defends=b in even)


def is_relevant(fw: Framework, a: str, b: str) -> bool:
    rel = indirect_relation(fw, a, b)
    return (rel.attacks or rel.defends) and not fw.self_attacking(a)


def relevant_args(fw: Framework, b: str) -> frozenset:
    fw.require(b)
    key = ("relevant", b)
    hit = fw._memo.get(key)
    if hit is None:
        hit = frozenset(a for a in fw.args if is_relevant(fw, a, b))
        fw._memo[key] = hit
    return hit


def attackers_of(fw: Framework, b: str) -> frozenset:
    """All (in)direct attackers of ``b``."""
    fw.require(b)
    return frozenset(a for a in fw.args if b in _parity_reach(fw, a)[0])


def defenders_of(fw: Framework, b: str) -> frozenset:
    """All (in)direct defenders of ``b``."""
    fw.require(b)
    return frozenset(a for a in fw.args if b in _parity_reach(fw, a)[1])


def subframework_without(fw: Framework, x: str) -> Framework:
    fw.require(x)
    return Framework(fw.args - {x},
                     frozenset(p for p in fw.attacks if x not in p))


def attack_paths(fw: Framework, a: str, b: str) -> list[AttackPath]:
    """All simple attack-edge paths from ``a`` to ``b``, shortest first."""
    fw.require(a, b)
    key = ("paths", a, b)
    hit = fw._memo.get(key)
    if hit is not None:
        return list(hit)
    out = fw._adjacency()[0]
    found = []

    def extend(path, visited):
        for y in sorted(out[path[-1]]):
            if y == b:
                found.append(path + (y,))
            elif y not in visited:
                extend(path + (y,), visited | {y})

    if a != b:
        extend((a,), frozenset((a,)))
    paths = tuple(AttackPath(p) for p in sorted(found, key=lambda p: (len(p), p)))
    fw._memo[key] = paths
    return list(paths)


def validate_path(fw: Framework, path: AttackPath):
    fw.require(*path.nodes)
    if len(set(path.nodes)) != len(path.nodes):
        raise InvalidPath(f"path {path} repeats a node")
    for x, y in zip(path.nodes, path.nodes[1:]):
        if (x, y) not in fw.attacks:
            raise InvalidPath(f"({x},{y}) is not an attack")
