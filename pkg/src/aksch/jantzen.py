"""Jantzen coefficients from rim-hook pairs, and finite-type decomposition matrices.

The modular system deforms ``Q_k`` to ``q^{f_k} + t^{c_k}`` (or leaves it
alone when ``c_k`` is PURE) and optionally ``q`` to ``q (1 + t^{c_0})``.
Valuations are computed on truncated ``t``-series, never by shortcut.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .blocks import Block
from .combinatorics import (
    Multipartition,
    Node,
    RimHook,
    diagram,
    dominance_leq,
    Dominance,
    format_multipartition,
    remove_rim_hook,
    rim_hook,
    size,
    strictly_dominates,
    to_json,
)
from .errors import DegenerateError, RegimeError
from .parameters import INFINITY, ParameterSet, classify
from .tseries import DEGENERATE, TSeries, check_exponents, one_plus_t_power, valuation

PURE = None

DEGENERATE_MESSAGE = "modular system degenerate; enable q-deformation (c0) or report"
GATE_MESSAGE = "modular system requires n < e or q-deformation"


@dataclass(frozen=True)
class ModularConfig:
    """Deformation exponents ``c_k`` (``None`` = PURE), ``c_0`` and truncation."""

    deform: tuple[int | None, ...]
    q_deform: int | None = None
    truncation: int | None = None

    def __post_init__(self):
        active = [c for c in self.deform if c is not PURE]
        if any(c < 1 for c in active):
            raise ValueError("deformation exponents must be positive")
        if len(set(active)) != len(active):
            raise ValueError("non-PURE deformation exponents must be pairwise distinct")
        if self.q_deform is not None:
            if self.q_deform < 1:
                raise ValueError("q-deformation exponent must be positive")
            if active and self.q_deform <= max(active):
                raise ValueError("q-deformation exponent must exceed every c_k")
        if self.truncation is not None and self.truncation < 1:
            raise ValueError("truncation order must be positive")

    @classmethod
    def default(cls, r: int, q_deform: int | None = None) -> "ModularConfig":
        return cls(tuple(2 * k for k in range(1, r + 1)), q_deform)

    @classmethod
    def two_point(cls, r: int, pure: int, linear: int) -> "ModularConfig":
        """``Q_pure`` undeformed, ``Q_linear + t``, the rest ``Q_k + t^{2k}``."""
        deform = []
        for k in range(1, r + 1):
            deform.append(PURE if k == pure else 1 if k == linear else 2 * k)
        return cls(tuple(deform))

    def order_for(self, n: int) -> int:
        if self.truncation is not None:
            return self.truncation
        exps = [c for c in self.deform if c is not PURE]
        if self.q_deform is not None:
            exps.append(self.q_deform)
        return 4 * max(exps + [1]) * (n + 1)

    def to_json(self, n: int | None = None) -> dict:
        out = {"deformExponents": ["pure" if c is PURE else c for c in self.deform],
               "qDeform": self.q_deform,
               "truncation": self.truncation}
        if n is not None:
            out["truncation"] = self.order_for(n)
        return out


def residue_series(x: Node, p: ParameterSet, cfg: ModularConfig, order: int) -> TSeries:
    """``qhat^(col-row) * Qhat_comp`` expanded in ``t`` below ``order``."""
    if p.q_is_one:
        raise RegimeError("the modular system needs q != 1")
    if len(cfg.deform) != p.r:
        raise ValueError(f"config has {len(cfg.deform)} exponents, expected {p.r}")
    c_k = cfg.deform[x.comp - 1]
    check_exponents((c_k, cfg.q_deform), order)
    d = x.col - x.row
    ring = (p.e, p.char_p, order)
    q_hat = {0: {p.f[x.comp - 1]: 1}}
    if c_k is not PURE:
        q_hat[c_k] = {0: 1}
    series = TSeries.build(*ring, q_hat) * TSeries.monomial(*ring, q_exp=d)
    if cfg.q_deform is not None:
        series = series * one_plus_t_power(d, cfg.q_deform, *ring)
    return series


def check_gate(n: int, p: ParameterSet, cfg: ModularConfig):
    """The undeformed ``q`` only gives a semisimple generic algebra when ``n < e``."""
    if p.q_is_one:
        raise RegimeError("the modular system needs q != 1")
    if cfg.q_deform is None and p.e is not INFINITY and n >= p.e:
        raise RegimeError(GATE_MESSAGE)


@lru_cache(maxsize=None)
def _hooks_by_complement(mp: Multipartition) -> dict[Multipartition, tuple[RimHook, ...]]:
    out: dict[Multipartition, list[RimHook]] = {}
    for x in diagram(mp):
        hook = rim_hook(mp, x)
        out.setdefault(remove_rim_hook(mp, hook), []).append(hook)
    return {k: tuple(v) for k, v in out.items()}


def contributing_pairs(lam: Multipartition, mu: Multipartition):
    """Pairs of rim hooks of ``lam`` and ``mu`` with equal complements."""
    hooks_mu = _hooks_by_complement(mu)
    for rest, hooks in _hooks_by_complement(lam).items():
        for rx in hooks:
            for ry in hooks_mu.get(rest, ()):
                if len(rx) != len(ry):
                    raise AssertionError("equal complements with rim hooks of different sizes")
                yield rx, ry


def jantzen_coefficient(lam: Multipartition, mu: Multipartition, p: ParameterSet,
                        cfg: ModularConfig | None = None) -> int:
    n = size(lam)
    if size(mu) != n:
        raise ValueError("multipartitions of different sizes")
    cfg = cfg or ModularConfig.default(p.r)
    check_gate(n, p, cfg)
    if not strictly_dominates(lam, mu):
        return 0
    order = cfg.order_for(n)
    total = 0
    for rx, ry in contributing_pairs(lam, mu):
        v = valuation(residue_series(rx.foot, p, cfg, order),
                      residue_series(ry.foot, p, cfg, order))
        if v is DEGENERATE:
            raise DegenerateError(
                f"{DEGENERATE_MESSAGE} (pair {format_multipartition(lam)} > "
                f"{format_multipartition(mu)}, feet {tuple(rx.foot)} and {tuple(ry.foot)})")
        total += (-1) ** (rx.leg_length + ry.leg_length) * v
    return total


def sum_formula(lam: Multipartition, block: Block, p: ParameterSet,
                cfg: ModularConfig | None = None) -> dict[Multipartition, int]:
    """Nonzero ``J[lam][mu]`` for ``mu`` in the block; ``lam`` must be a member."""
    if lam not in block.members:
        raise ValueError(f"{format_multipartition(lam)} is not in the block")
    out = {}
    for mu in block.members:
        j = jantzen_coefficient(lam, mu, p, cfg)
        if j:
            out[mu] = j
    return out


def _prefix_key(mp: Multipartition) -> tuple[int, ...]:
    n = size(mp)
    key, total = [], 0
    for comp in mp:
        running = total
        for k in range(n):
            running += comp[k] if k < len(comp) else 0
            key.append(running)
        total += sum(comp)
    return tuple(key)


def dominance_sorted(members: Sequence[Multipartition]) -> list[Multipartition]:
    """A linear extension of dominance, smallest first."""
    return sorted(members, key=_prefix_key)


@dataclass(frozen=True)
class JantzenTable:
    ordering: tuple[Multipartition, ...]
    entries: dict = field(hash=False)

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def matrix(self) -> list[list[int]]:
        return [[self[(a, b)] for b in self.ordering] for a in self.ordering]

    def to_json(self) -> dict:
        return {"ordering": [to_json(m) for m in self.ordering], "J": self.matrix()}


def jantzen_table(block: Block, p: ParameterSet, cfg: ModularConfig | None = None) -> JantzenTable:
    ordering = tuple(dominance_sorted(block.members))
    entries = {}
    for i, lam in enumerate(ordering):
        for mu in ordering[:i]:
            j = jantzen_coefficient(lam, mu, p, cfg)
            if j:
                entries[(lam, mu)] = j
    return JantzenTable(ordering, entries)


@dataclass(frozen=True)
class Decomposition:
    ordering: tuple[Multipartition, ...]
    D: tuple[tuple[int, ...], ...]
    C: tuple[tuple[int, ...], ...]
    table: JantzenTable
    config: ModularConfig

    def to_json(self) -> dict:
        n = size(self.ordering[0])
        return {"ordering": [to_json(m) for m in self.ordering],
                "J": self.table.matrix(),
                "D": [list(r) for r in self.D],
                "C": [list(r) for r in self.C],
                "config": self.config.to_json(n)}


def bidiagonal(m: int) -> list[list[int]]:
    return [[1 if j in (i, i - 1) else 0 for j in range(m)] for i in range(m)]


def transpose_times(d: Sequence[Sequence[int]]) -> list[list[int]]:
    """``D^T D``."""
    rows, cols = len(d), len(d[0])
    return [[sum(d[k][i] * d[k][j] for k in range(rows)) for j in range(cols)] for i in range(cols)]


def decomposition_matrix(block: Block, p: ParameterSet,
                         cfg: ModularConfig | None = None) -> Decomposition:
    """Decomposition and Cartan matrices of a block of a finite-type algebra.

    The bidiagonal shape is certified against the Jantzen sum formula: the
    coefficient below the diagonal must be positive and, expanded in simple
    modules, every sum-formula vector must collapse onto the one simple
    module just below.
    """
    n = len(block.content)
    cfg = cfg or ModularConfig.default(p.r)
    verdict = classify(n, p)
    if not verdict.kind.is_finite:
        raise RegimeError(f"decomposition matrices are only determined in finite type, "
                          f"classify gives {verdict.kind.value}")
    ordering = dominance_sorted(block.members)
    for i, a in enumerate(ordering):
        for b in ordering[:i]:
            if dominance_leq(a, b) is not Dominance.GREATER:
                raise RegimeError("dominance is not total on the block")
    m = len(ordering)
    if m == 1:
        table = JantzenTable(tuple(ordering), {})
    else:
        table = jantzen_table(block, p, cfg)
    for i in range(1, m):
        lam = ordering[i]
        if table[(lam, ordering[i - 1])] <= 0:
            raise RegimeError(f"Jantzen validation failed: J[{format_multipartition(lam)}]"
                              f"[{format_multipartition(ordering[i - 1])}] is not positive")
        # [W_j] = L_j + L_{j-1}
        simples = [0] * m
        for j in range(i):
            c = table[(lam, ordering[j])]
            simples[j] += c
            if j:
                simples[j - 1] += c
        if any(simples[j] for j in range(m) if j != i - 1):
            raise RegimeError(f"Jantzen validation failed: sum formula of "
                              f"{format_multipartition(lam)} is not a multiple of one simple")
    d = bidiagonal(m)
    c = transpose_times(d)
    return Decomposition(tuple(ordering), tuple(map(tuple, d)), tuple(map(tuple, c)), table, cfg)
