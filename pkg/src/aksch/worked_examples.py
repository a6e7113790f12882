"""Golden fixtures: the two worked infinite-type blocks and the one-parameter bound.

Both constructions produce a block ``B`` and three members whose quotient
poset has decomposition pattern

    S0 | 1 0 0
    S1 | a 1 0
    Sk | b 0 1      (a, b > 0)

which the Jantzen coefficients must reproduce: ``J[l1][l0] > 0``,
``J[lk][l0] > 0`` and ``J[lk][l1] = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import residue, residue_content
from .combinatorics import Multipartition, Node, as_multipartition, format_multipartition, to_json
from .jantzen import ModularConfig, jantzen_coefficient
from .parameters import Kind, ParameterSet, classify, one_parameter_report


def _col(k: int) -> tuple[int, ...]:
    return (1,) * k


def three_parameter_chain(n: int, f: tuple[int, int, int]) -> list[Multipartition]:
    """``l_0, ..., l_k`` for ``0 = f_1 < f_2 < f_3`` and ``n >= f_3 + 1``."""
    f1, f2, f3 = f
    if not 0 == f1 < f2 < f3:
        raise ValueError("need 0 = f1 < f2 < f3")
    fp = n - (f3 + 1)
    if fp < 0:
        raise ValueError("need n >= f3 + 1")
    k = f3 - f2 + 2
    out = [as_multipartition(((), (), _col(n)))]
    for i in range(1, k):
        out.append(as_multipartition(((), (i,) + _col(f2 + fp), _col(f3 - f2 - i + 1))))
    out.append(as_multipartition((_col(n - f3), (), _col(f3))))
    return out


def four_parameter_chain(n: int, f: tuple[int, int, int, int]) -> list[Multipartition]:
    """``l_0, ..., l_{k+1}`` for the block with two separated residue runs."""
    f1, f2, f3, f4 = f
    if not 0 == f1 < f2 < f3 < f4:
        raise ValueError("need 0 = f1 < f2 < f3 < f4")
    fp = f4 - (n - (f2 + 1)) + 1
    k = f4 - f3 + 1
    out = [as_multipartition(((), _col(f2 + 1), (), _col(f4 - fp + 1)))]
    for i in range(1, k + 1):
        out.append(as_multipartition(((), _col(f2 + 1), (i,) + _col(f3 - fp), _col(f4 - f3 - i + 1))))
    out.append(as_multipartition(((1,), _col(f2), (), _col(f4 - fp + 1))))
    return out


def residue_rows(mp: Multipartition, p: ParameterSet) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Residue filling of each component, row by row."""
    return tuple(tuple(tuple(residue(Node(i, j, k), p) for j in range(1, row + 1))
                       for i, row in enumerate(comp, start=1))
                 for k, comp in enumerate(mp, start=1))


# displayed residue fillings, component by component and row by row
THREE_PARAMETER_FILLINGS = (
    ((), (), ((3,), (2,), (1,), (0,), (5,))),
    ((), ((1,), (0,), (5,)), ((3,), (2,))),
    ((), ((1, 2), (0,), (5,)), ((3,),)),
    ((), ((1, 2, 3), (0,), (5,)), ()),
    (((0,), (5,)), (), ((3,), (2,), (1,))),
)

FOUR_PARAMETER_FILLINGS = (
    ((), ((2,), (1,), (0,)), (), ((10,), (9,), (8,), (7,))),
    ((), ((2,), (1,), (0,)), ((8,), (7,)), ((10,), (9,))),
    ((), ((2,), (1,), (0,)), ((8, 9), (7,)), ((10,),)),
    ((), ((2,), (1,), (0,)), ((8, 9, 10), (7,)), ()),
    (((0,),), ((2,), (1,)), (), ((10,), (9,), (8,), (7,))),
)


@dataclass(frozen=True)
class ExampleItem:
    name: str
    passed: bool
    detail: dict
    flagged: bool = False

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "detail": self.detail}
        if self.flagged:
            out["flagged"] = True
        return out


def quotient_pattern(chain: list[Multipartition], p: ParameterSet,
                     cfg: ModularConfig | None = None) -> dict:
    lo, l1, lk = chain[0], chain[1], chain[-1]
    return {"J10": jantzen_coefficient(l1, lo, p, cfg),
            "Jk0": jantzen_coefficient(lk, lo, p, cfg),
            "Jk1": jantzen_coefficient(lk, l1, p, cfg)}


def _example_items(tag: str, n: int, p: ParameterSet, chain: list[Multipartition],
                   fillings, l0_residues: tuple[int, ...]) -> list[ExampleItem]:
    items = []
    verdict = classify(n, p)
    items.append(ExampleItem(f"{tag}: classify", verdict.kind is Kind.INFINITE,
                             {"kind": verdict.kind.value}))
    rows = [residue_rows(mp, p) for mp in chain]
    items.append(ExampleItem(f"{tag}: residue diagrams", tuple(rows) == fillings,
                             {"members": [format_multipartition(mp) for mp in chain],
                              "residues": [[[list(r) for r in comp] for comp in mp] for mp in rows]}))
    first = rows[0]
    column = tuple(x for comp in first for row in comp for x in row)
    items.append(ExampleItem(f"{tag}: l0 residues", column == l0_residues,
                             {"residues": list(column)}))
    contents = {residue_content(mp, p) for mp in chain}
    items.append(ExampleItem(f"{tag}: one block", len(contents) == 1,
                             {"content": sorted(next(iter(contents))) if len(contents) == 1 else None}))
    pattern = quotient_pattern(chain, p)
    ok = pattern["J10"] > 0 and pattern["Jk0"] > 0 and pattern["Jk1"] == 0
    items.append(ExampleItem(f"{tag}: Jantzen pattern", ok,
                             {**pattern, "config": ModularConfig.default(p.r).to_json(n),
                              "quotient": [to_json(mp) for mp in (chain[0], chain[1], chain[-1])]}))
    return items


def worked_examples() -> list[ExampleItem]:
    items = []
    p3 = ParameterSet(6, (0, 1, 3))
    s3 = three_parameter_chain(5, (0, 1, 3))
    items += _example_items("three parameters n=5 e=6", 5, p3, s3, THREE_PARAMETER_FILLINGS,
                            (3, 2, 1, 0, 5))

    p4 = ParameterSet(16, (0, 2, 8, 10))
    g4 = four_parameter_chain(7, (0, 2, 8, 10))
    items += _example_items("four parameters n=7 e=16", 7, p4, g4, FOUR_PARAMETER_FILLINGS,
                            (2, 1, 0, 10, 9, 8, 7))

    rep = one_parameter_report(6, 3)
    items.append(ExampleItem("one-parameter bound e=6 r=3",
                             (rep.classifier_max_n, rep.closed_form_max_n) == (3, 4),
                             rep.to_json(), flagged=not rep.agree))
    return items
