"""Truncated power series in ``t`` over the group ring of ``<q>``.

A series is a map ``t-exponent -> coefficient`` where a coefficient is an
integer combination of powers of ``q``. For finite ``e`` the exponents of
``q`` live in ``Z/eZ`` and multiplicities are reduced mod the characteristic.
Whether a coefficient vanishes in the field is decided by reducing modulo the
minimal polynomial of ``q``, so relations such as ``1 + q = 0`` at ``e = 2``
are seen.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import sympy

from .errors import TruncationError
from .parameters import INFINITY, Extended

Coefficient = tuple[tuple[int, int], ...]  # sorted (q-exponent, multiplicity)


class _Degenerate(enum.Enum):
    DEGENERATE = "DEGENERATE"


DEGENERATE = _Degenerate.DEGENERATE


@lru_cache(maxsize=None)
def minimal_polynomial(e: int, char_p: int) -> tuple[int, ...]:
    """Monic minimal polynomial of a primitive ``e``-th root of unity.

    Coefficients are listed from the constant term up. In characteristic
    ``p`` the cyclotomic polynomial may split; the factor of least degree
    (ties broken by coefficients) is fixed as the minimal polynomial of ``q``.
    """
    x = sympy.Symbol("x")
    phi = sympy.cyclotomic_poly(e, x)
    if char_p == 0:
        coeffs = sympy.Poly(phi, x).all_coeffs()
        return tuple(int(c) for c in reversed(coeffs))
    _, factors = sympy.Poly(phi, x, modulus=char_p).factor_list()
    candidates = []
    for fac, _mult in factors:
        coeffs = [int(c) % char_p for c in fac.all_coeffs()]
        lead = coeffs[0]
        inv = pow(lead, -1, char_p)
        coeffs = [c * inv % char_p for c in coeffs]
        candidates.append(tuple(reversed(coeffs)))
    return min(candidates, key=lambda c: (len(c), c))


def _reduce_mod(poly: list[int], modulus: tuple[int, ...], char_p: int) -> list[int]:
    d = len(modulus) - 1
    poly = poly[:]
    for top in range(len(poly) - 1, d - 1, -1):
        c = poly[top]
        if c:
            for k in range(d + 1):
                poly[top - d + k] -= c * modulus[k]
        if char_p:
            poly = [v % char_p for v in poly]
    out = poly[:d]
    return [v % char_p for v in out] if char_p else out


def normalize(coeff: Mapping[int, int], e: Extended, char_p: int) -> Coefficient:
    acc: dict[int, int] = {}
    for k, v in coeff.items():
        key = k if e is INFINITY else k % e
        acc[key] = acc.get(key, 0) + v
    items = []
    for k in sorted(acc):
        v = acc[k] % char_p if char_p else acc[k]
        if v:
            items.append((k, v))
    return tuple(items)


def coefficient_is_zero(coeff: Coefficient, e: Extended, char_p: int) -> bool:
    if not coeff:
        return True
    if e is INFINITY:
        return False
    poly = [0] * e
    for k, v in coeff:
        poly[k] += v
    return not any(_reduce_mod(poly, minimal_polynomial(e, char_p), char_p))


@dataclass(frozen=True)
class TSeries:
    e: Extended
    char_p: int
    order: int
    terms: tuple[tuple[int, Coefficient], ...]

    @classmethod
    def build(cls, e, char_p, order, terms: Mapping[int, Mapping[int, int]]) -> "TSeries":
        out = []
        for t_exp in sorted(terms):
            if t_exp >= order:
                continue
            coeff = normalize(terms[t_exp], e, char_p)
            if coeff:
                out.append((t_exp, coeff))
        return cls(e, char_p, order, tuple(out))

    @classmethod
    def monomial(cls, e, char_p, order, q_exp: int, t_exp: int = 0, mult: int = 1) -> "TSeries":
        return cls.build(e, char_p, order, {t_exp: {q_exp: mult}})

    def as_dict(self) -> dict[int, dict[int, int]]:
        return {t: dict(c) for t, c in self.terms}

    def _check(self, other: "TSeries"):
        if (self.e, self.char_p, self.order) != (other.e, other.char_p, other.order):
            raise ValueError("series over different rings")

    def __add__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        acc = self.as_dict()
        for t, c in other.terms:
            slot = acc.setdefault(t, {})
            for k, v in c:
                slot[k] = slot.get(k, 0) + v
        return TSeries.build(self.e, self.char_p, self.order, acc)

    def __neg__(self) -> "TSeries":
        return TSeries(self.e, self.char_p, self.order,
                       tuple((t, normalize({k: -v for k, v in c}, self.e, self.char_p))
                             for t, c in self.terms))

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self + (-other)

    def __mul__(self, other: "TSeries") -> "TSeries":
        self._check(other)
        acc: dict[int, dict[int, int]] = {}
        for t1, c1 in self.terms:
            for t2, c2 in other.terms:
                if t1 + t2 >= self.order:
                    continue
                slot = acc.setdefault(t1 + t2, {})
                for k1, v1 in c1:
                    for k2, v2 in c2:
                        slot[k1 + k2] = slot.get(k1 + k2, 0) + v1 * v2
        return TSeries.build(self.e, self.char_p, self.order, acc)

    def leading_exponent(self):
        """Least ``t``-exponent whose coefficient is nonzero in the field."""
        for t, c in self.terms:
            if not coefficient_is_zero(c, self.e, self.char_p):
                return t
        return DEGENERATE


def generalized_binomial(d: int, j: int) -> int:
    num = 1
    for k in range(j):
        num *= d - k
    den = 1
    for k in range(2, j + 1):
        den *= k
    return num // den


def one_plus_t_power(d: int, c0: int, e, char_p, order) -> TSeries:
    """``(1 + t^c0)^d`` truncated below ``order``; ``d`` may be negative."""
    terms = {}
    j = 0
    while c0 * j < order:
        b = generalized_binomial(d, j)
        if b:
            terms[c0 * j] = {0: b}
        if d >= 0 and j >= d:
            break
        j += 1
    return TSeries.build(e, char_p, order, terms)


def valuation(a: TSeries, b: TSeries):
    """Least ``t``-exponent of ``a - b`` with nonzero coefficient, or ``DEGENERATE``."""
    return (a - b).leading_exponent()


def check_exponents(exponents: Iterable[int | None], order: int):
    for c in exponents:
        if c is not None and c >= order:
            raise TruncationError(f"deformation exponent {c} does not fit below truncation order {order}")
