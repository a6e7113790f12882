"""The bounded quiver algebra ``A_m`` on a line with ``m`` vertices.

Arrows are ``a_i: i -> i+1`` and ``b_i: i+1 -> i``. Words are written right to
left, so ``a2 a1`` is the path ``1 -> 2 -> 3``. The ideal is generated by

    a_{i+1} a_i,  b_i b_{i+1},  a_{m-1} b_{m-1},  a_i b_i - b_{i+1} a_{i+1}.

All relations are quadratic, so the algebra is spanned by paths of length at
most two once every length-3 path is known to lie in the ideal; that fact and
the degree-2 normal forms are both obtained by linear algebra over the path
space rather than taken on trust.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional

Word = tuple[str, ...]


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class BasisElement:
    name: str
    source: int
    target: int
    word: Word  # empty for idempotents

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_idempotent(self) -> bool:
        return not self.word


Product = Optional[tuple[int, BasisElement]]


def _arrows(m: int) -> dict[str, Arrow]:
    out = {}
    for i in range(1, m):
        out[f"a{i}"] = Arrow(f"a{i}", i, i + 1)
        out[f"b{i}"] = Arrow(f"b{i}", i + 1, i)
    return out


def _paths(arrows: dict[str, Arrow], length: int) -> list[Word]:
    """Composable words of the given length, right to left."""
    out = []
    for word in product(sorted(arrows), repeat=length):
        if all(arrows[word[k + 1]].target == arrows[word[k]].source for k in range(length - 1)):
            out.append(word)
    return out


def _relations(m: int) -> list[dict[Word, int]]:
    rels: list[dict[Word, int]] = []
    for i in range(1, m - 1):
        rels.append({(f"a{i + 1}", f"a{i}"): 1})
        rels.append({(f"b{i}", f"b{i + 1}"): 1})
        rels.append({(f"a{i}", f"b{i}"): 1, (f"b{i + 1}", f"a{i + 1}"): -1})
    if m >= 2:
        rels.append({(f"a{m - 1}", f"b{m - 1}"): 1})
    return rels


def _row_reduce(rows: list[dict[Word, Fraction]], order: list[Word]) -> list[dict[Word, Fraction]]:
    """Reduced echelon form; pivots are taken in ``order``."""
    rows = [dict(r) for r in rows if r]
    pivots: list[dict[Word, Fraction]] = []
    for col in order:
        idx = next((k for k, r in enumerate(rows) if r.get(col)), None)
        if idx is None:
            continue
        row = rows.pop(idx)
        scale = row[col]
        row = {w: v / scale for w, v in row.items()}
        for other in rows + pivots:
            c = other.get(col)
            if c:
                for w, v in row.items():
                    other[w] = other.get(w, 0) - c * v
                    if other[w] == 0:
                        del other[w]
        pivots.append(row)
        rows = [r for r in rows if r]
    return pivots


@dataclass(frozen=True)
class AmAlgebra:
    m: int
    basis: tuple[BasisElement, ...]
    table: dict = field(hash=False, repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, name: str) -> BasisElement:
        for b in self.basis:
            if b.name == name:
                return b
        raise KeyError(name)

    def multiply(self, x: BasisElement | str, y: BasisElement | str) -> Product:
        """``x * y`` (first ``y``, then ``x``) as ``(sign, basis element)`` or ``None``."""
        if isinstance(x, str):
            x = self.element(x)
        if isinstance(y, str):
            y = self.element(y)
        return self.table.get((x.name, y.name))

    def to_json(self) -> dict:
        table = {}
        for (x, y), (sign, z) in sorted(self.table.items()):
            table[f"{x}*{y}"] = z.name if sign == 1 else f"-{z.name}"
        return {"m": self.m, "dim": self.dim,
                "basis": [{"name": b.name, "source": b.source, "target": b.target,
                           "word": list(b.word)} for b in self.basis],
                "products": table,
                "cartan": cartan(self),
                "radicalSeries": {str(i): projective_radical_series(self, i)
                                  for i in range(1, self.m + 1)}}


def _normal_forms(m: int, arrows: dict[str, Arrow]):
    """Degree-2 normal forms and the reduction of every length-2 path.

    Paths ``b1 a1`` and ``a_i b_i`` are listed last so they survive as
    pivot-free columns whenever the relations allow.
    """
    paths2 = _paths(arrows, 2)
    preferred = [("b1", "a1")] + [(f"a{i}", f"b{i}") for i in range(1, m - 1)]
    order = [w for w in paths2 if w not in preferred] + [w for w in preferred if w in paths2]
    rels = [{w: Fraction(v) for w, v in r.items()} for r in _relations(m)]
    pivots = _row_reduce(rels, order)
    pivot_of = {}
    for row in pivots:
        lead = next(w for w in order if row.get(w))
        pivot_of[lead] = row
    free = [w for w in paths2 if w not in pivot_of]
    reduce = {}
    for w in paths2:
        if w in pivot_of:
            # w = -(rest of row)
            reduce[w] = {u: -v for u, v in pivot_of[w].items() if u != w}
        else:
            reduce[w] = {w: Fraction(1)}
    return free, reduce


def length_three_in_ideal(m: int) -> bool:
    """Whether the degree-3 part of the ideal is every length-3 path."""
    arrows = _arrows(m)
    paths3 = _paths(arrows, 3)
    if not paths3:
        return True
    rows = []
    for rel in _relations(m):
        for name, arr in arrows.items():
            left, right = {}, {}
            for w, v in rel.items():
                if arrows[w[0]].target == arr.source:
                    left[(name,) + w] = Fraction(v)
                if arr.target == arrows[w[-1]].source:
                    right[w + (name,)] = Fraction(v)
            rows += [left, right]
    return len(_row_reduce(rows, paths3)) == len(paths3)


def _loop_label(word: Word) -> str:
    """``b1 a1`` is ``l1``; ``a_i b_i`` is the loop ``l_{i+1}``."""
    x, y = word
    if (x, y) == ("b1", "a1"):
        return "l1"
    return f"l{int(x[1:]) + 1}"


def construct(m: int, verify: bool | None = None) -> AmAlgebra:
    """Build ``A_m`` with its multiplication table.

    The confluence check (length-3 paths lie in the ideal) runs for
    ``m <= 8`` unless ``verify`` says otherwise.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if verify is None:
        verify = m <= 8
    if verify and not length_three_in_ideal(m):
        raise AssertionError(f"length-3 paths not reduced to zero for m={m}")
    arrows = _arrows(m)
    free, reduce = _normal_forms(m, arrows)
    basis = [BasisElement(f"e{i}", i, i, ()) for i in range(1, m + 1)]
    for i in range(1, m):
        basis.append(BasisElement(f"a{i}", i, i + 1, (f"a{i}",)))
        basis.append(BasisElement(f"b{i}", i + 1, i, (f"b{i}",)))
    by_word = {}
    for w in free:
        elt = BasisElement(_loop_label(w), arrows[w[1]].source, arrows[w[0]].target, w)
        basis.append(elt)
        by_word[w] = elt
    basis.sort(key=lambda b: (b.length, b.name[0], int(b.name[1:])))

    table = {}
    for x in basis:
        for y in basis:
            if y.target != x.source:
                continue
            if x.is_idempotent:
                table[(x.name, y.name)] = (1, y)
                continue
            if y.is_idempotent:
                table[(x.name, y.name)] = (1, x)
                continue
            word = x.word + y.word
            if len(word) > 2:
                continue
            combo = {u: v for u, v in reduce[word].items() if v}
            if not combo:
                continue
            if len(combo) != 1:
                raise AssertionError(f"product {x.name}*{y.name} is not a monomial")
            (u, v), = combo.items()
            if v not in (1, -1):
                raise AssertionError(f"product {x.name}*{y.name} has coefficient {v}")
            table[(x.name, y.name)] = (int(v), by_word[u])
    return AmAlgebra(m, tuple(basis), table)


def cartan(A: AmAlgebra) -> list[list[int]]:
    """``C[i][j] = dim e_i A e_j``: basis paths from ``j`` to ``i``."""
    c = [[0] * A.m for _ in range(A.m)]
    for b in A.basis:
        c[b.target - 1][b.source - 1] += 1
    return c


def hom_dim(A: AmAlgebra, i: int, j: int) -> int:
    """``dim Hom(e_i A, e_j A) = dim e_j A e_i``."""
    return cartan(A)[j - 1][i - 1]


def projective_radical_series(A: AmAlgebra, i: int) -> list[list[int]]:
    """Radical layers of ``e_i A`` as sorted vertex multisets.

    ``rad^{k+1} = rad^k J`` with ``J`` spanned by the non-idempotent basis
    elements; a layer element ``e_i x`` sits at the source vertex of ``x``.
    """
    if not 1 <= i <= A.m:
        raise ValueError(f"vertex {i} out of range 1..{A.m}")
    radical = [b for b in A.basis if not b.is_idempotent]
    current = {b for b in A.basis if b.target == i}
    layers = []
    while current:
        nxt = set()
        for x in current:
            for y in radical:
                prod_ = A.multiply(x, y)
                if prod_ is not None:
                    nxt.add(prod_[1])
        layers.append(sorted(b.source for b in current - nxt))
        if nxt == current:
            raise AssertionError("radical series does not terminate")
        current = nxt
    return layers


def bidiagonal_cartan(m: int) -> list[list[int]]:
    """``D^T D`` for the bidiagonal ``m x m`` matrix with ones on and below the diagonal."""
    d = [[1 if j in (k, k - 1) else 0 for j in range(m)] for k in range(m)]
    return [[sum(d[k][a] * d[k][b] for k in range(m)) for b in range(m)] for a in range(m)]
