import pytest

from aksch.combinatorics import enumerate_multipartitions
from aksch.grading import LevelComposition, alpha_p, graded_dim_check, split_tableaux, weight_vectors
from aksch.tableaux import count_semistandard_all_types, dim_schur


def test_alpha_examples():
    for mu in enumerate_multipartitions(3, 3):
        assert alpha_p(mu, LevelComposition((3,))) == (3,)
    assert alpha_p(((), (), (1,) * 5), LevelComposition((2, 1))) == (0, 5)
    for r, k in [(2, 1), (3, 1), (3, 2)]:
        omega = tuple(() for _ in range(r - 1)) + ((1, 1, 1),)
        assert alpha_p(omega, LevelComposition((r - k, k))) == (0, 3)
    with pytest.raises(ValueError):
        alpha_p(((1,),), LevelComposition((1, 1)))
    with pytest.raises(ValueError):
        LevelComposition((2, 0))


def test_split_examples():
    p = LevelComposition((1, 1))
    split = split_tableaux(((1,), (1,)), p, (1, 1), (2, 2))
    assert len(split.plus) == 4 and split.epsilon == split.plus
    split = split_tableaux(((2,), ()), p, (0, 2), (2, 2))
    assert split.epsilon == () or all(sum(map(sum, t.type[1:])) == 2 for t in split.epsilon)


@pytest.mark.parametrize("n", range(0, 4))
@pytest.mark.parametrize("r", [1, 2, 3])
def test_epsilon_pieces_partition_all_tableaux(n, r):
    m = (max(n, 1),) * r
    for parts in [(r,)] + [(a, r - a) for a in range(1, r)]:
        p = LevelComposition(parts)
        for lam in enumerate_multipartitions(n, r):
            total = sum(len(split_tableaux(lam, p, eps, m).epsilon) for eps in weight_vectors(n, p))
            assert total == count_semistandard_all_types(lam, m)


def test_graded_examples():
    p = LevelComposition((1, 1))
    rep = graded_dim_check(2, 2, (2, 2), p, (1, 1))
    assert (rep.lhs, rep.rhs, rep.passed) == (16, 16, True)
    rep = graded_dim_check(2, 2, (2, 2), p, (2, 0))
    assert (rep.lhs, rep.rhs) == (10, 10) and rep.factors == (dim_schur(2, 1, (2,)), 1)
    assert rep.to_json()["pass"] is True


@pytest.mark.parametrize("n", range(0, 4))
@pytest.mark.parametrize("r", [1, 2, 3])
def test_graded_identity_on_grid(n, r):
    for parts in [(r,)] + [(a, r - a) for a in range(1, r)]:
        p = LevelComposition(parts)
        for eps in weight_vectors(n, p):
            assert graded_dim_check(n, r, None, p, eps).passed


def test_graded_check_rejects_bad_input():
    p = LevelComposition((1, 1))
    with pytest.raises(ValueError):
        graded_dim_check(2, 2, (2, 2), p, (1, 0))
    with pytest.raises(ValueError):
        graded_dim_check(2, 2, (1, 2), p, (1, 1))
