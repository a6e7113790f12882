from collections import Counter
from itertools import permutations, product

import pytest

from aksch.blocks import (
    block_partition,
    find_block,
    morita_reduction,
    residue,
    residue_content,
    varying_components,
)
from aksch.combinatorics import Node, enumerate_multipartitions
from aksch.errors import RegimeError
from aksch.parameters import INFINITY, Kind, ParameterSet, classify

from oracles import nodes, residue_oracle

S3 = ParameterSet(6, (0, 1, 3))
S3_MEMBERS = [((), (), (1, 1, 1, 1, 1)), ((), (1, 1, 1), (1, 1)), ((), (2, 1, 1), (1,)),
              ((), (3, 1, 1), ()), ((1, 1), (), (1, 1, 1))]


def test_residue_examples():
    p = ParameterSet(5, (0, 1))
    assert residue(Node(1, 1, 2), p) == 1
    assert residue(Node(1, 2, 1), p) == 1
    assert [residue(Node(i, 1, 3), S3) for i in range(1, 6)] == [3, 2, 1, 0, 5]
    assert residue(Node(3, 1, 1), ParameterSet(INFINITY, (0,))) == -2


def test_q_one_residue_is_exponent():
    p = ParameterSet(3, (0, 2), q_is_one=True)
    assert residue(Node(2, 5, 2), p) == 2


def test_block_examples():
    assert [len(b) for b in block_partition(1, 2, ParameterSet(5, (0, 3)))] == [1, 1]
    blocks = block_partition(2, 2, ParameterSet(5, (0, 1)))
    assert sorted(len(b) for b in blocks) == [1, 1, 3]
    big = next(b for b in blocks if len(b) == 3)
    assert set(big.members) == {((2,), ()), ((1,), (1,)), ((), (1, 1))}
    assert big.content == (0, 1)
    assert varying_components(big) == {1, 2}
    assert big.to_json()["varying"] == [1, 2]


def test_s3_members_share_a_block():
    b = find_block(5, S3, (3, 2, 1, 0, 5))
    assert set(S3_MEMBERS) <= set(b.members)
    assert {residue_content(mp, S3) for mp in S3_MEMBERS} == {(0, 1, 2, 3, 5)}


def test_find_block_errors():
    with pytest.raises(ValueError):
        find_block(2, ParameterSet(5, (0, 1)), (0,))
    with pytest.raises(ValueError):
        find_block(1, ParameterSet(5, (0, 1)), (4,))


@pytest.mark.parametrize("e", range(2, 9))
def test_blocks_partition_by_content_oracle(e):
    for r in (1, 2, 3):
        for f in list(product(range(e), repeat=r))[:40]:
            p = ParameterSet(e, f)
            for n in range(0, 5 if r < 3 else 4):
                blocks = block_partition(n, r, p)
                members = [m for b in blocks for m in b.members]
                assert sorted(members) == sorted(enumerate_multipartitions(n, r))
                assert len(set(members)) == len(members)
                groups = {}
                for mp in enumerate_multipartitions(n, r):
                    key = tuple(sorted(residue_oracle(i, j, k, e, f) for i, j, k in nodes(mp)))
                    groups.setdefault(key, set()).add(mp)
                assert {b.content: set(b.members) for b in blocks} == groups
                assert [b.content for b in blocks] == sorted(b.content for b in blocks)


def test_component_permutation_equivariance():
    for e in (3, 5, 7):
        for f in product(range(e), repeat=3):
            p = ParameterSet(e, f)
            for sigma in permutations(range(3)):
                q = ParameterSet(e, tuple(f[s] for s in sigma))
                for n in (2, 3):
                    image = {frozenset(tuple(mp[s] for s in sigma) for mp in b.members)
                             for b in block_partition(n, 3, p)}
                    assert image == {frozenset(b.members) for b in block_partition(n, 3, q)}


def test_semisimple_blocks_are_singletons():
    for e in range(2, 8):
        for f in product(range(e), repeat=2):
            p = ParameterSet(e, f)
            for n in range(0, 5):
                if classify(n, p).kind is Kind.SEMISIMPLE:
                    assert all(len(b) == 1 for b in block_partition(n, 2, p))


def test_morita_example():
    p = ParameterSet(9, (0, 3, 6))
    assert classify(2, p).kind.is_finite
    for b in block_partition(2, 3, p):
        red = morita_reduction(b, p)
        assert len(red.block) == len(b)
        assert set(red.projection.values()) == set(red.block.members)
        if len(b) == 1:
            assert red.components == (1, 2)


def test_morita_regime_errors():
    with pytest.raises(RegimeError):
        morita_reduction(block_partition(2, 2, ParameterSet(5, (0, 1)))[0], ParameterSet(5, (0, 1)))
    b = find_block(5, S3, (3, 2, 1, 0, 5))
    with pytest.raises(RegimeError):
        morita_reduction(b, S3)


def finite_r_grid(r, max_e, max_n):
    for e in range(2, max_e + 1):
        for f in product(range(e), repeat=r):
            if f[0] != 0:
                continue
            p = ParameterSet(e, f)
            for n in range(1, max_n + 1):
                if classify(n, p).kind is Kind.FINITE:
                    yield n, p


@pytest.mark.parametrize("r,max_e", [(3, 9), (4, 7)])
def test_finite_blocks_vary_in_two_components(r, max_e):
    count = 0
    for n, p in finite_r_grid(r, max_e, 5):
        for b in block_partition(n, r, p):
            assert len(varying_components(b)) <= 2
            count += 1
    assert count > 0
