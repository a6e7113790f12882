import pytest
from hypothesis import given, settings, strategies as st

from aksch.combinatorics import (
    Dominance,
    Node,
    as_multipartition,
    compositions,
    diagram,
    dominance_leq,
    enumerate_multipartitions,
    enumerate_types,
    format_multipartition,
    from_json,
    hook_length,
    partitions,
    remove_rim_hook,
    rim_hook,
    size,
    to_json,
)

from oracles import dominates_oracle, is_multipartition, multipartitions_oracle, partitions_oracle, \
    rim_hook_oracle


def test_enumerate_small_cases():
    assert enumerate_multipartitions(0, 3) == (((), (), ()),)
    assert enumerate_multipartitions(1, 2) == (((1,), ()), ((), (1,)))
    assert enumerate_multipartitions(2, 2) == (
        ((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1)))


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("r", [1, 2, 3])
def test_enumeration_matches_recursive_oracle(n, r):
    got = enumerate_multipartitions(n, r)
    assert len(set(got)) == len(got)
    assert sorted(got) == sorted(multipartitions_oracle(n, r))


@pytest.mark.parametrize("n", range(0, 9))
def test_partitions_match_sympy(n):
    assert sorted(partitions(n)) == sorted(partitions_oracle(n))


def test_enumeration_order_is_size_vector_then_reverse_lex():
    got = enumerate_multipartitions(3, 2)
    sizes = [tuple(map(sum, mp)) for mp in got]
    assert sizes == sorted(sizes, reverse=True)
    for s in set(sizes):
        group = [mp for mp in got if tuple(map(sum, mp)) == s]
        assert group == sorted(group, reverse=True)


def test_enumerate_types_examples():
    assert sorted(enumerate_types(2, 1, (2,))) == sorted([((2, 0),), ((1, 1),), ((0, 2),)])
    assert sorted(enumerate_types(1, 2, (1, 1))) == sorted([((1,), (0,)), ((0,), (1,))])
    # 1*3 + 2*2 + 3*1 weak compositions split over the two components
    assert len(enumerate_types(2, 2, (2, 2))) == 10


@pytest.mark.parametrize("n,r", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_types_under_length_bound_contain_all_multipartitions(n, r):
    types = enumerate_types(n, r, (n,) * r)
    trimmed = {tuple(tuple(x for x in comp if x) for comp in mu) for mu in types
               if all(list(comp) == sorted(comp, reverse=True) for comp in mu)}
    assert trimmed == set(enumerate_multipartitions(n, r))


def test_compositions_are_weak():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]


def test_dominance_examples():
    lam = ((2, 1), (1,))
    assert dominance_leq(lam, lam) is Dominance.EQUAL
    assert dominance_leq(((2,), ()), ((), (1, 1))) is Dominance.GREATER
    assert dominance_leq(((1, 1), ()), ((), (2,))) is Dominance.GREATER
    assert dominance_leq(((), (2,)), ((1, 1), ())) is Dominance.LESS
    assert dominance_leq(((2,), (), (1, 1, 1)), ((), (3, 1, 1), ())) is Dominance.INCOMPARABLE


def test_dominance_errors():
    with pytest.raises(ValueError):
        dominance_leq(((1,),), ((2,),))
    with pytest.raises(ValueError):
        dominance_leq(((1,),), ((1,), ()))


@pytest.mark.parametrize("n,r", [(n, r) for n in range(0, 6) for r in (1, 2, 3)])
def test_dominance_is_partial_order(n, r):
    mps = enumerate_multipartitions(n, r)
    rel = {(a, b): dominance_leq(a, b) in (Dominance.GREATER, Dominance.EQUAL) for a in mps for b in mps}
    for a in mps:
        assert rel[(a, a)]
        for b in mps:
            assert rel[(a, b)] == dominates_oracle(a, b)
            if a != b:
                assert not (rel[(a, b)] and rel[(b, a)])
    if len(mps) <= 30:
        for a in mps:
            for b in mps:
                for c in mps:
                    if rel[(a, b)] and rel[(b, c)]:
                        assert rel[(a, c)]


def test_rim_hook_examples():
    h = rim_hook(((1,),), Node(1, 1, 1))
    assert h.nodes == {Node(1, 1, 1)} and h.leg_length == 0 and h.foot == Node(1, 1, 1)
    h = rim_hook(((2, 1),), Node(1, 1, 1))
    assert h.nodes == {Node(1, 1, 1), Node(1, 2, 1), Node(2, 1, 1)}
    assert h.leg_length == 1 and h.foot == Node(2, 1, 1)
    assert len(h) == hook_length((2, 1), 1, 1) == 3


def test_horizontal_hook_foot_is_leftmost():
    h = rim_hook(((3,),), Node(1, 1, 1))
    assert h.foot == Node(1, 1, 1) and h.leg_length == 0


def test_rim_hook_outside_diagram():
    with pytest.raises(ValueError):
        rim_hook(((1,), ()), Node(1, 1, 2))


def test_remove_rim_hook_examples():
    lam = ((2, 1), ())
    assert remove_rim_hook(lam, rim_hook(lam, Node(1, 1, 1))) == ((), ())
    lam = ((), (1, 1))
    assert remove_rim_hook(lam, rim_hook(lam, Node(2, 1, 2))) == ((), (1,))
    lam = ((1,), (1,))
    assert remove_rim_hook(lam, rim_hook(lam, Node(1, 1, 1))) == ((), (1,))


def test_remove_foreign_hook_rejected():
    hook = rim_hook(((2, 1),), Node(1, 1, 1))
    with pytest.raises(ValueError):
        remove_rim_hook(((3, 1),), hook)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_sizes_and_removal_all_partitions(n):
    for lam in partitions(n):
        mp = (lam,)
        for x in diagram(mp):
            h = rim_hook(mp, x)
            assert set(h.nodes) == rim_hook_oracle(mp, tuple(x))
            assert len(h) == hook_length(lam, x.row, x.col)
            assert h.leg_length == len({y.row for y in h.nodes}) - 1
            rest = remove_rim_hook(mp, h)
            assert size(rest) == n - len(h)
            assert is_multipartition(set(diagram(mp)) - set(h.nodes), 1) == rest


multipartitions = st.integers(0, 6).flatmap(
    lambda n: st.integers(1, 3).flatmap(lambda r: st.sampled_from(enumerate_multipartitions(n, r))))


@settings(max_examples=200, deadline=None)
@given(multipartitions)
def test_rim_hook_removal_is_valid(mp):
    for x in diagram(mp):
        h = rim_hook(mp, x)
        rest = remove_rim_hook(mp, h)
        assert is_multipartition(set(diagram(mp)) - set(h.nodes), len(mp)) == rest


@settings(max_examples=100, deadline=None)
@given(multipartitions)
def test_json_round_trip(mp):
    assert from_json(to_json(mp)) == mp


def test_format():
    assert format_multipartition(((2, 1), ())) == "((2,1),-)"
    assert as_multipartition([[2, 0], []]) == ((2,), ())
