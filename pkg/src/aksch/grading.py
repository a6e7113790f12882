"""The grading by component groups and its dimension-level consequences.

A level composition ``p = (r_1, ..., r_g)`` cuts the ``r`` components into
consecutive groups; ``alpha_p`` records the size carried by each group.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .combinatorics import Multipartition, compositions, enumerate_multipartitions, enumerate_types
from .tableaux import SemistandardTableau, default_bounds, dim_schur, enumerate_semistandard


@dataclass(frozen=True)
class LevelComposition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if not self.parts or any(x < 1 for x in self.parts):
            raise ValueError(f"level composition needs positive parts, got {self.parts}")

    @property
    def r(self) -> int:
        return sum(self.parts)

    @property
    def g(self) -> int:
        return len(self.parts)

    @property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for x in self.parts:
            out.append(acc)
            acc += x
        return tuple(out)

    def groups(self) -> list[range]:
        """0-based component indices of each group."""
        return [range(o, o + x) for o, x in zip(self.offsets, self.parts)]

    def slice(self, seq: Sequence, k: int) -> tuple:
        """The entries of ``seq`` belonging to group ``k`` (0-based)."""
        return tuple(seq[i] for i in self.groups()[k])


def alpha_p(mu: Sequence[Sequence[int]], p: LevelComposition) -> tuple[int, ...]:
    if len(mu) != p.r:
        raise ValueError(f"expected {p.r} components, got {len(mu)}")
    return tuple(sum(sum(mu[i]) for i in grp) for grp in p.groups())


def weight_vectors(n: int, p: LevelComposition) -> tuple[tuple[int, ...], ...]:
    """The image of ``alpha_p``: all ``g``-compositions of ``n``."""
    return tuple(compositions(n, p.g))


@dataclass(frozen=True)
class TableauSplit:
    plus: tuple[SemistandardTableau, ...]
    epsilon: tuple[SemistandardTableau, ...]
    minus_count: int


def _tableaux_with(lam: Multipartition, m: Sequence[int], keep) -> list[SemistandardTableau]:
    n = sum(map(sum, lam))
    out = []
    for mu in enumerate_types(n, len(lam), tuple(m)):
        if keep(mu):
            out.extend(enumerate_semistandard(lam, mu))
    return out


def split_tableaux(lam: Multipartition, p: LevelComposition, eps: Sequence[int],
                   m: Sequence[int] | None = None) -> TableauSplit:
    """``T+(lam)`` (types in the group of ``lam``) and ``T^eps(lam)``."""
    eps = tuple(eps)
    n = sum(map(sum, lam))
    m = tuple(m) if m is not None else default_bounds(n, len(lam))
    own = alpha_p(lam, p)
    plus = _tableaux_with(lam, m, lambda mu: alpha_p(mu, p) == own)
    minus = _tableaux_with(lam, m, lambda mu: alpha_p(mu, p) != own)
    epsilon = _tableaux_with(lam, m, lambda mu: alpha_p(mu, p) == eps)
    if own == eps:
        if epsilon != plus:
            raise AssertionError("T^eps differs from T+ although alpha(lam) = eps")
    elif not set(epsilon) <= set(minus):
        raise AssertionError("T^eps is not contained in T-")
    return TableauSplit(tuple(plus), tuple(epsilon), len(minus))


@dataclass(frozen=True)
class GradedDimReport:
    n: int
    r: int
    m: tuple[int, ...]
    p: tuple[int, ...]
    eps: tuple[int, ...]
    lhs: int
    rhs: int
    factors: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "m": list(self.m), "p": list(self.p),
                "epsilon": list(self.eps), "lhs": self.lhs, "rhs": self.rhs,
                "factors": list(self.factors), "pass": self.passed}


def graded_dim_check(n: int, r: int, m: Sequence[int] | None, p: LevelComposition,
                     eps: Sequence[int]) -> GradedDimReport:
    """Compare the graded piece with the tensor product of smaller Schur algebras."""
    eps = tuple(eps)
    m = tuple(m) if m is not None else default_bounds(n, r)
    if p.r != r or len(m) != r:
        raise ValueError("level composition and bounds must both cover r components")
    if len(eps) != p.g or sum(eps) != n or any(x < 0 for x in eps):
        raise ValueError(f"epsilon {eps} is not a weight vector of n={n} with {p.g} parts")
    if any(mk < n for mk in m):
        raise ValueError("bounds must satisfy m_k >= n")
    lhs = 0
    for lam in enumerate_multipartitions(n, r):
        if alpha_p(lam, p) == eps:
            lhs += len(split_tableaux(lam, p, eps, m).plus) ** 2
    factors = tuple(dim_schur(nk, rk, p.slice(m, k))
                    for k, (nk, rk) in enumerate(zip(eps, p.parts)))
    return GradedDimReport(n, r, m, p.parts, eps, lhs, prod(factors), factors)
