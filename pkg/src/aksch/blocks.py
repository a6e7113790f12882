"""Residues, residue-equivalence blocks and the two-component Morita reduction."""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Sequence

from .combinatorics import (
    Multipartition,
    Node,
    diagram,
    enumerate_multipartitions,
    to_json,
)
from .errors import RegimeError
from .parameters import INFINITY, ParameterSet, classify


def residue(x: Node, p: ParameterSet) -> int:
    """``col - row + f_comp``, reduced mod ``e`` when ``e`` is finite.

    For ``q = 1`` every ``Q_k = 1``, so only ``f_comp`` is returned.
    """
    f = p.f[x.comp - 1]
    if p.q_is_one:
        return f
    value = x.col - x.row + f
    return value if p.e is INFINITY else value % p.e


def residue_content(mp: Multipartition, p: ParameterSet) -> tuple[int, ...]:
    """Sorted residue multiset of ``mp``."""
    return tuple(sorted(residue(x, p) for x in diagram(mp)))


def residue_counts(mp: Multipartition, p: ParameterSet) -> Counter:
    return Counter(residue(x, p) for x in diagram(mp))


@dataclass(frozen=True)
class Block:
    content: tuple[int, ...]
    members: tuple[Multipartition, ...]

    @property
    def residue_set(self) -> frozenset[int]:
        return frozenset(self.content)

    @property
    def varying(self) -> frozenset[int]:
        return varying_components(self)

    @property
    def r(self) -> int:
        return len(self.members[0])

    def __len__(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {"content": list(self.content),
                "members": [to_json(m) for m in self.members],
                "varying": sorted(self.varying)}


def block_partition(n: int, r: int, p: ParameterSet) -> list[Block]:
    """Group the r-partitions of ``n`` by residue content, sorted by content."""
    if p.r != r:
        raise ValueError(f"parameter set has {p.r} exponents, expected r={r}")
    groups: dict[tuple[int, ...], list[Multipartition]] = defaultdict(list)
    for mp in enumerate_multipartitions(n, r):
        groups[residue_content(mp, p)].append(mp)
    return [Block(content, tuple(groups[content])) for content in sorted(groups)]


def block_of(mp: Multipartition, p: ParameterSet) -> Block:
    content = residue_content(mp, p)
    n = len(content)
    members = tuple(m for m in enumerate_multipartitions(n, len(mp))
                    if residue_content(m, p) == content)
    return Block(content, members)


def find_block(n: int, p: ParameterSet, content: Sequence[int]) -> Block:
    """The block with the given residue content (order of ``content`` is ignored)."""
    wanted = tuple(sorted(content))
    if len(wanted) != n:
        raise ValueError(f"content has {len(wanted)} residues, expected {n}")
    for b in block_partition(n, p.r, p):
        if b.content == wanted:
            return b
    raise ValueError(f"no block with content {list(wanted)}")


def varying_components(b: Block) -> frozenset[int]:
    """1-based components on which at least two members differ."""
    first = b.members[0]
    return frozenset(k + 1 for k in range(len(first))
                     if any(m[k] != first[k] for m in b.members[1:]))


@dataclass(frozen=True)
class MoritaReduction:
    components: tuple[int, int]
    n_reduced: int
    parameters: ParameterSet
    block: Block
    projection: dict

    def to_json(self) -> dict:
        return {"components": list(self.components), "nReduced": self.n_reduced,
                "parameters": self.parameters.to_json(), "block": self.block.to_json()}


def _pair(b: Block) -> tuple[int, int]:
    vary = sorted(varying_components(b))
    if len(vary) > 2:
        raise RegimeError(f"block varies in {len(vary)} components; no two-component reduction")
    for k in range(1, b.r + 1):
        if len(vary) == 2:
            break
        if k not in vary:
            vary.append(k)
    return tuple(sorted(vary))


def morita_reduction(b: Block, p: ParameterSet) -> MoritaReduction:
    """Project a finite-type block (r >= 3) onto its two varying components."""
    if p.r < 3:
        raise RegimeError("Morita reduction needs r >= 3")
    n = len(b.content)
    verdict = classify(n, p)
    if not verdict.kind.is_finite:
        raise RegimeError(f"classify gives {verdict.kind.value}, reduction needs finite type")
    i, j = _pair(b)
    sub = p.restrict((i, j))
    projection = {m: (m[i - 1], m[j - 1]) for m in b.members}
    images = set(projection.values())
    n_reduced = sum(map(sum, next(iter(images))))
    contents = {residue_content(img, sub) for img in images}
    if len(contents) != 1:
        raise RuntimeError("projection spans several reduced blocks")
    reduced = find_block(n_reduced, sub, contents.pop())
    return MoritaReduction((i, j), n_reduced, sub, reduced, projection)
