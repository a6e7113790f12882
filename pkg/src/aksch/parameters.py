"""Parameter arithmetic and the representation-type classifier.

Parameters follow the convention ``Q_i = q**f_i`` with ``q`` a primitive
``e``-th root of unity (``e`` may be infinite), or the degenerate case
``q = Q_1 = ... = Q_r = 1``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import total_ordering
from itertools import combinations
from typing import Sequence, Union


@total_ordering
class _Infinity:
    """Larger than every integer; absorbs addition and scaling."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("aksch-infinity")

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("INFINITY - INFINITY")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("finite - INFINITY")

    def __mul__(self, other):
        if other <= 0:
            raise ArithmeticError("INFINITY scaled by a non-positive number")
        return self

    __rmul__ = __mul__


INFINITY = _Infinity()
Extended = Union[int, _Infinity]


def json_number(x: Extended | None):
    """Exact JSON form: integers stay integers, INFINITY becomes ``"infinity"``."""
    return "infinity" if x is INFINITY else x


def parse_e(text: str) -> Extended:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return INFINITY
    return int(text)


@dataclass(frozen=True)
class ParameterSet:
    """``e``, the exponents ``f``, the field characteristic and the q=1 flag.

    Finite-``e`` exponents are reduced into ``0..e-1`` on construction.
    """

    e: Extended
    f: tuple[int, ...]
    char_p: int = 0
    q_is_one: bool = False

    def __post_init__(self):
        f = tuple(int(x) for x in self.f)
        if not f:
            raise ValueError("need at least one parameter Q_i")
        if self.char_p < 0 or (self.char_p and not _is_prime(self.char_p)):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char_p}")
        if not self.q_is_one:
            if self.e is not INFINITY:
                if not isinstance(self.e, int) or self.e < 2:
                    raise ValueError(f"e must be >= 2 or INFINITY, got {self.e!r}")
                if self.char_p and self.e % self.char_p == 0:
                    raise ValueError(
                        f"no primitive {self.e}-th root of unity in characteristic {self.char_p}")
                f = tuple(x % self.e for x in f)
            elif any(x < 0 for x in f):
                raise ValueError("for e = INFINITY the exponents must be non-negative")
        object.__setattr__(self, "f", f)

    @property
    def r(self) -> int:
        return len(self.f)

    def restrict(self, indices: Sequence[int]) -> "ParameterSet":
        """Parameters ``(Q_i)`` for the given 1-based indices, in that order."""
        return ParameterSet(self.e, tuple(self.f[i - 1] for i in indices),
                            self.char_p, self.q_is_one)

    def to_json(self) -> dict:
        return {"e": json_number(self.e), "f": list(self.f),
                "char": self.char_p, "qIsOne": self.q_is_one}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class SpreadInvariants:
    f_sorted: tuple[int, ...]
    gaps: tuple[Extended, ...]
    f_plus1: Extended
    f_plus2: Extended
    g_min: Extended


def _extended_sorted(p: ParameterSet, index: int) -> Extended:
    """``f'_index`` (1-based) with ``f'_{r+i} = e + f'_i``."""
    fs = sorted(p.f)
    r = len(fs)
    wraps, pos = divmod(index - 1, r)
    if wraps == 0:
        return fs[pos]
    if p.e is INFINITY:
        return INFINITY
    return fs[pos] + wraps * p.e


def spread_invariants(p: ParameterSet) -> SpreadInvariants:
    if p.q_is_one:
        raise ValueError("spread invariants are defined only for q != 1")
    r = p.r
    fp = [_extended_sorted(p, i) for i in range(1, 2 * r + 2)]
    gaps = tuple(fp[i] - fp[i - 1] for i in range(1, r + 1))
    f_plus1 = min(gaps)
    f_plus2 = min(fp[i + 1] - fp[i - 1] for i in range(1, r + 1))
    pair_sums = [gaps[i] + gaps[j] for i, j in combinations(range(r), 2)]
    g_min = min(pair_sums) if pair_sums else INFINITY
    return SpreadInvariants(tuple(sorted(p.f)), gaps, f_plus1, f_plus2, g_min)


def is_semisimple(n: int, p: ParameterSet) -> bool:
    """Whether the product of quantum integers and ``q^a Q_i - Q_j`` is nonzero."""
    if n <= 0:
        return True
    if p.q_is_one:
        # [i]_1 = i, and a = 0 gives Q_i - Q_j = 0 for every pair
        return (p.char_p == 0 or n < p.char_p) and p.r == 1
    if p.e is not INFINITY and n >= p.e:
        return False
    for fi, fj in combinations(p.f, 2):
        if p.e is INFINITY:
            if abs(fi - fj) < n:
                return False
        else:
            d = (fi - fj) % p.e
            if d < n or p.e - d < n:
                return False
    return True


class Kind(enum.Enum):
    SEMISIMPLE = "SEMISIMPLE"
    FINITE = "FINITE"
    INFINITE = "INFINITE"
    WILD = "WILD"
    OUT_OF_SCOPE = "OUT_OF_SCOPE"

    @property
    def is_finite(self) -> bool:
        return self in (Kind.SEMISIMPLE, Kind.FINITE)


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    e: Extended | None = None
    two_f1_plus4: Extended | None = None
    f2_plus1: Extended | None = None
    g_plus2: Extended | None = None
    note: str = ""

    @property
    def bounds(self) -> dict:
        return {"e": json_number(self.e), "twoF1plus4": json_number(self.two_f1_plus4),
                "f2plus1": json_number(self.f2_plus1), "gplus2": json_number(self.g_plus2)}

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "bounds": self.bounds, "note": self.note}


TAME_WILD_UNKNOWN = "tame-or-wild unknown"


def finite_threshold(p: ParameterSet) -> Extended:
    """Least ``n`` at which the algebra stops being of finite type (q != 1)."""
    s = spread_invariants(p)
    if p.r == 1:
        return 2 * p.e
    if p.r == 2:
        return min(p.e, 2 * s.f_plus1 + 4)
    return min(2 * s.f_plus1 + 4, s.f_plus2 + 1, s.g_min + 2)


def classify(n: int, p: ParameterSet) -> Verdict:
    """Representation type of the Ariki-Koike / cyclotomic q-Schur algebra."""
    if p.q_is_one:
        if p.r == 1:
            return Verdict(Kind.OUT_OF_SCOPE, note="q = 1, r = 1: group algebra of the symmetric group")
        if n <= 0:
            return Verdict(Kind.SEMISIMPLE)
        if n == 1:
            return Verdict(Kind.FINITE)
        if n == 2:
            return Verdict(Kind.INFINITE, note=TAME_WILD_UNKNOWN)
        return Verdict(Kind.WILD)

    s = spread_invariants(p)
    bounds = dict(e=p.e, two_f1_plus4=2 * s.f_plus1 + 4, f2_plus1=s.f_plus2 + 1, g_plus2=s.g_min + 2)
    if is_semisimple(n, p):
        return Verdict(Kind.SEMISIMPLE, **bounds)
    if n < finite_threshold(p):
        return Verdict(Kind.FINITE, **bounds)
    if p.r == 1:
        return Verdict(Kind.WILD, **bounds)
    return Verdict(Kind.INFINITE, **bounds)


def first_non_semisimple(n: int, p: ParameterSet) -> int:
    """Least ``n' <= n`` with a non-semisimple algebra, or ``n + 1``."""
    for k in range(n + 1):
        if not is_semisimple(k, p):
            return k
    return n + 1


def classify_multi_orbit(n: int, orbits: Sequence[ParameterSet]) -> Verdict:
    """Classify from a separated partition of the parameters into orbits.

    Orbit separation is the caller's claim and is not checked. The algebra is
    Morita equivalent to a direct sum over ``n_1 + ... + n_k = n`` of tensor
    products of the orbit algebras. A direct sum is finite iff every summand
    is; a tensor factor that is semisimple does not change the type, and two
    non-semisimple factors make the product infinite. Orbit ``a`` contributes
    a non-semisimple factor once ``n_a >= t_a``, so the sum is finite iff each
    orbit is finite at ``n`` and no two orbits have ``t_a + t_b <= n``.
    """
    if not orbits:
        raise ValueError("need at least one orbit")
    if len({(o.e, o.q_is_one, o.char_p) for o in orbits}) != 1:
        raise ValueError("orbits must share e, the q = 1 flag and the characteristic")
    if len(orbits) == 1:
        return classify(n, orbits[0])

    verdicts = [classify(n, o) for o in orbits]
    if any(v.kind is Kind.OUT_OF_SCOPE for v in verdicts):
        return Verdict(Kind.OUT_OF_SCOPE, note="an orbit is out of scope")
    t = [first_non_semisimple(n, o) for o in orbits]
    for a, b in combinations(range(len(orbits)), 2):
        if t[a] + t[b] <= n:
            return Verdict(Kind.INFINITE,
                           note=f"orbits {a + 1} and {b + 1} are both non-semisimple in one summand")
    for idx, v in enumerate(verdicts, start=1):
        if not v.kind.is_finite:
            # the summand with all n on this orbit is Morita equivalent to it
            kind = Kind.WILD if v.kind is Kind.WILD else Kind.INFINITE
            return Verdict(kind, note=f"orbit {idx} is of {v.kind.value.lower()} type")
    note = "all orbits semisimple" if all(v.kind is Kind.SEMISIMPLE for v in verdicts) else ""
    return Verdict(Kind.FINITE, note=note)


@dataclass(frozen=True)
class OneParameterReport:
    e: int
    r: int
    f: tuple[int, ...]
    classifier_max_n: int
    closed_form_max_n: int
    agree: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "agree", self.classifier_max_n == self.closed_form_max_n)

    def to_json(self) -> dict:
        return {"e": self.e, "r": self.r, "f": list(self.f),
                "classifierMaxFiniteN": self.classifier_max_n,
                "closedFormMaxFiniteN": self.closed_form_max_n,
                "agree": self.agree}


def one_parameter_exponents(e: int, r: int) -> tuple[int, ...]:
    """Exponents for ``Q = (1, q^{e/r-1}, q^{2e/r-1}, ...)`` after rescaling ``T_0``."""
    if e is INFINITY or e % r:
        raise ValueError("the one-parameter case needs r dividing a finite e")
    return (0,) + tuple(k * e // r - 1 for k in range(1, r))


def one_parameter_report(e: int, r: int) -> OneParameterReport:
    """Largest finite-type ``n`` from the classifier versus the bound ``n <= 2e/r``."""
    f = one_parameter_exponents(e, r)
    threshold = finite_threshold(ParameterSet(e, f))
    return OneParameterReport(e, r, f, threshold - 1, 2 * e // r)
