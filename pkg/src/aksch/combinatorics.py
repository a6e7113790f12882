"""Partitions, compositions, multipartitions and rim hooks.

Partitions are plain tuples of positive integers, multipartitions are tuples
of partitions. Nodes are 1-based ``(row, col, comp)`` triples.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int


class Dominance(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class RimHook:
    nodes: frozenset[Node]
    leg_length: int
    foot: Node

    @property
    def comp(self) -> int:
        return self.foot.comp

    def __len__(self) -> int:
        return len(self.nodes)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    """Normalise to a partition tuple, dropping trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return tuple(parts)


def as_multipartition(components: Iterable[Iterable[int]]) -> Multipartition:
    mp = tuple(as_partition(c) for c in components)
    if not mp:
        raise ValueError("a multipartition needs at least one component")
    return mp


def size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def format_multipartition(mp: Multipartition) -> str:
    """Human readable form, e.g. ``((2,1),-)``."""
    def one(p: Partition) -> str:
        return "(" + ",".join(map(str, p)) + ")" if p else "-"
    return "(" + ",".join(one(p) for p in mp) + ")"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    def gen(rest: int, cap: int) -> Iterator[Partition]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(n, n))


def compositions(n: int, length: int) -> Iterator[Composition]:
    """Weak compositions of ``n`` into exactly ``length`` parts, reverse-lex."""
    if length == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for tail in compositions(n - first, length - 1):
            yield (first,) + tail


@lru_cache(maxsize=None)
def enumerate_multipartitions(n: int, r: int) -> tuple[Multipartition, ...]:
    """All ``r``-partitions of ``n``.

    Order: component sizes in reverse-lex order (most mass in the first
    component first), then each component in reverse-lex order.
    """
    if n < 0 or r < 1:
        raise ValueError("need n >= 0 and r >= 1")
    out = []
    for sizes in compositions(n, r):
        out.extend(itertools.product(*(partitions(s) for s in sizes)))
    return tuple(out)


def enumerate_types(n: int, r: int, m: Sequence[int]) -> tuple[tuple[Composition, ...], ...]:
    """All ``r``-compositions of ``n`` with ``len(mu[k]) <= m[k]``.

    Each component is returned padded to exactly ``m[k]`` entries.
    """
    if len(m) != r or any(mk < 1 for mk in m):
        raise ValueError(f"bad length bounds m={tuple(m)} for r={r}")
    out = []
    for sizes in compositions(n, r):
        out.extend(itertools.product(*(compositions(s, mk) for s, mk in zip(sizes, m))))
    return tuple(out)


def diagram(mp: Multipartition) -> list[Node]:
    """Nodes of ``[mp]`` ordered by component, row, column."""
    return [
        Node(i, j, k)
        for k, part in enumerate(mp, start=1)
        for i, row_len in enumerate(part, start=1)
        for j in range(1, row_len + 1)
    ]


def contains(mp: Multipartition, x: Node) -> bool:
    if not 1 <= x.comp <= len(mp):
        return False
    part = mp[x.comp - 1]
    return 1 <= x.row <= len(part) and 1 <= x.col <= part[x.row - 1]


def _prefix_sums(mp: Sequence[Sequence[int]], widths: Sequence[int]) -> list[int]:
    sums = []
    total = 0
    for comp, width in zip(mp, widths):
        running = total
        for k in range(width):
            running += comp[k] if k < len(comp) else 0
            sums.append(running)
        total += sum(comp)
    return sums


def dominance_leq(mu: Sequence[Sequence[int]], nu: Sequence[Sequence[int]]) -> Dominance:
    """Compare two multipartitions (or multicompositions) in the dominance order.

    Reports the full comparison: ``GREATER`` means ``mu`` strictly dominates
    ``nu``.
    """
    if len(mu) != len(nu):
        raise ValueError("component counts differ")
    if sum(map(sum, mu)) != sum(map(sum, nu)):
        raise ValueError("sizes differ")
    widths = [max(len(a), len(b), 1) for a, b in zip(mu, nu)]
    a = _prefix_sums(mu, widths)
    b = _prefix_sums(nu, widths)
    geq = all(x >= y for x, y in zip(a, b))
    leq = all(x <= y for x, y in zip(a, b))
    if geq and leq:
        return Dominance.EQUAL
    if geq:
        return Dominance.GREATER
    if leq:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def dominates(mu, nu) -> bool:
    """``mu`` ⊵ ``nu``."""
    return dominance_leq(mu, nu) in (Dominance.GREATER, Dominance.EQUAL)


def strictly_dominates(mu, nu) -> bool:
    return dominance_leq(mu, nu) is Dominance.GREATER


def conjugate(p: Partition) -> Partition:
    return tuple(sum(1 for part in p if part >= j) for j in range(1, (p[0] if p else 0) + 1))


def hook_length(p: Partition, row: int, col: int) -> int:
    arm = p[row - 1] - col
    leg = conjugate(p)[col - 1] - row
    return arm + leg + 1


def rim_hook(mp: Multipartition, x: Node) -> RimHook:
    """The rim hook ``r_x`` of node ``x``.

    ``r_x`` is the set of nodes ``(a, b)`` of the same component with
    ``a >= row``, ``b >= col`` and ``(a+1, b+1)`` outside the diagram.
    """
    if not contains(mp, x):
        raise ValueError(f"node {tuple(x)} is not in {format_multipartition(mp)}")
    part = mp[x.comp - 1]
    nodes = []
    for a in range(x.row, len(part) + 1):
        for b in range(x.col, part[a - 1] + 1):
            below_right = a < len(part) and part[a] >= b + 1
            if not below_right:
                nodes.append(Node(a, b, x.comp))
    rows = {n.row for n in nodes}
    bottom = max(rows)
    foot = Node(bottom, min(n.col for n in nodes if n.row == bottom), x.comp)
    return RimHook(frozenset(nodes), len(rows) - 1, foot)


def remove_nodes(mp: Multipartition, nodes: Iterable[Node]) -> Multipartition:
    """Multipartition whose diagram is ``[mp]`` minus ``nodes``; must stay valid."""
    rows = [list(p) for p in mp]
    removed: dict[tuple[int, int], set[int]] = {}
    for n in nodes:
        removed.setdefault((n.comp, n.row), set()).add(n.col)
    for (k, i), cols in removed.items():
        length = rows[k - 1][i - 1]
        if cols != set(range(length - len(cols) + 1, length + 1)):
            raise ValueError("removal does not leave a partition diagram")
        rows[k - 1][i - 1] = length - len(cols)
    out = []
    for comp in rows:
        while comp and comp[-1] == 0:
            comp.pop()
        if not is_partition(comp):
            raise ValueError("removal does not leave a partition diagram")
        out.append(tuple(comp))
    return tuple(out)


def remove_rim_hook(mp: Multipartition, hook: RimHook) -> Multipartition:
    """``[mp]`` with the rim hook removed; ``hook`` must be a rim hook of ``mp``."""
    if not hook.nodes:
        raise ValueError("empty rim hook")
    top = min(n.row for n in hook.nodes)
    anchor = Node(top, hook.foot.col, hook.foot.comp)
    if not contains(mp, anchor) or rim_hook(mp, anchor) != hook:
        raise ValueError("not a rim hook of this multipartition")
    return remove_nodes(mp, hook.nodes)


def to_json(mp: Multipartition) -> list[list[int]]:
    return [list(p) for p in mp]


def from_json(data) -> Multipartition:
    return as_multipartition(data)
