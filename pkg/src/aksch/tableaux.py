"""Standard and semistandard tableaux of multipartition shape, and the
dimensions of the Ariki-Koike and cyclotomic q-Schur algebras obtained from
their cellular bases.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Sequence

from .combinatorics import (
    Multipartition,
    Node,
    diagram,
    enumerate_multipartitions,
    enumerate_types,
    hook_length,
    size,
)

Entry = tuple[int, int]  # (a, c): row a of component c of the type


@dataclass(frozen=True)
class SemistandardTableau:
    shape: Multipartition
    type: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[Node, Entry], ...]

    def as_dict(self) -> dict[Node, Entry]:
        return dict(self.entries)

    def to_json(self) -> dict[str, list[int]]:
        return {f"{n.row},{n.col},{n.comp}": [a, c] for n, (a, c) in self.entries}


def _order_key(entry: Entry) -> tuple[int, int]:
    a, c = entry
    return (c, a)


def count_standard(shape: Multipartition) -> int:
    """Number of standard tableaux via the hook formula and a multinomial."""
    n = size(shape)
    total = factorial(n)
    for part in shape:
        k = sum(part)
        hooks = prod(hook_length(part, i, j) for i in range(1, len(part) + 1)
                     for j in range(1, part[i - 1] + 1))
        total //= factorial(k)
        total *= factorial(k) // hooks
    return total


def enumerate_standard(shape: Multipartition) -> Iterator[dict[Node, int]]:
    """All standard fillings, by placing 1..n one removable corner at a time."""
    n = size(shape)
    nodes = diagram(shape)

    def rec(current: list[list[int]], value: int, filling: dict[Node, int]):
        if value == 0:
            yield dict(filling)
            return
        for k, part in enumerate(current):
            for i, row_len in enumerate(part):
                if row_len == 0:
                    continue
                below = part[i + 1] if i + 1 < len(part) else 0
                if below < row_len:
                    part[i] -= 1
                    filling[Node(i + 1, row_len, k + 1)] = value
                    yield from rec(current, value - 1, filling)
                    del filling[Node(i + 1, row_len, k + 1)]
                    part[i] += 1

    if not nodes:
        yield {}
        return
    yield from rec([list(p) for p in shape], n, {})


def enumerate_semistandard(shape: Multipartition, mu: Sequence[Sequence[int]]) -> list[SemistandardTableau]:
    """All semistandard tableaux of the given shape and type.

    An entry ``(a, c)`` is available ``mu[c-1][a-1]`` times. Entries are
    ordered by ``(c, a)``; rows weakly increase, columns strictly increase,
    and a node of component ``k`` only takes entries with ``c >= k``.
    """
    mu = tuple(tuple(comp) for comp in mu)
    if len(mu) != len(shape):
        raise ValueError("type and shape have different component counts")
    if sum(map(sum, mu)) != size(shape):
        return []
    supply = {(a, c): cnt for c, comp in enumerate(mu, start=1)
              for a, cnt in enumerate(comp, start=1) if cnt}
    alphabet = sorted(supply, key=_order_key)
    nodes = diagram(shape)
    filling: dict[Node, Entry] = {}
    out: list[SemistandardTableau] = []

    def rec(idx: int):
        if idx == len(nodes):
            out.append(SemistandardTableau(shape, mu, tuple(sorted(filling.items()))))
            return
        x = nodes[idx]
        left = filling.get(Node(x.row, x.col - 1, x.comp))
        above = filling.get(Node(x.row - 1, x.col, x.comp))
        for entry in alphabet:
            if supply[entry] == 0 or entry[1] < x.comp:
                continue
            key = _order_key(entry)
            if left is not None and key < _order_key(left):
                continue
            if above is not None and key <= _order_key(above):
                continue
            supply[entry] -= 1
            filling[x] = entry
            rec(idx + 1)
            del filling[x]
            supply[entry] += 1

    rec(0)
    return out


@lru_cache(maxsize=None)
def count_semistandard(shape: Multipartition, mu: tuple[tuple[int, ...], ...]) -> int:
    return len(enumerate_semistandard(shape, mu))


def default_bounds(n: int, r: int) -> tuple[int, ...]:
    """Smallest length bounds satisfying (CL): ``m_k = n`` (at least 1)."""
    return (max(n, 1),) * r


def count_semistandard_all_types(shape: Multipartition, m: Sequence[int]) -> int:
    """``|T_0(shape)|``: semistandard tableaux of every type with bounds ``m``."""
    n = size(shape)
    return sum(count_semistandard(shape, mu) for mu in enumerate_types(n, len(shape), tuple(m)))


def dim_hecke(n: int, r: int) -> int:
    """Sum of squared standard-tableau counts over all r-partitions of n."""
    return sum(count_standard(lam) ** 2 for lam in enumerate_multipartitions(n, r))


def dim_schur(n: int, r: int, m: Sequence[int] | None = None) -> int:
    """Sum over r-partitions of the squared number of semistandard tableaux."""
    m = tuple(m) if m is not None else default_bounds(n, r)
    return sum(count_semistandard_all_types(lam, m) ** 2
               for lam in enumerate_multipartitions(n, r))
