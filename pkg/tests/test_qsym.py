import random

import pytest

from polyflip import (
    SizeGuardExceeded,
    SparsePoly,
    enumerate_compositions,
    enumerate_dyck,
    fundamental_qsym,
    fuss_catalan,
    verify_basis_graded,
    weight,
    word_of_composition,
)
from polyflip.qsym import (
    ideal_graded_matrix,
    integer_matrix_rank,
    monomials_of_degree,
)


def test_word_of_composition():
    assert word_of_composition(2, (1, 2)) == [(1, 1), (2, 1), (2, 1)]
    assert word_of_composition(2, (0, 2, 1, 0)) == [(2, 1), (2, 1), (1, 2)]
    assert word_of_composition(1, (3,)) == [(1, 1), (1, 1), (1, 1)]
    with pytest.raises(ValueError):
        word_of_composition(2, (0, 0, 1, 0))  # zero run of length m
    with pytest.raises(ValueError):
        word_of_composition(2, ())


def test_fundamental_qsym_single_block():
    f = fundamental_qsym(2, (0, 1), 2)
    assert f.terms == {(0, 1, 0, 0): 1, (0, 0, 0, 1): 1}  # y1 + y2
    f = fundamental_qsym(2, (1, 2), 3)
    assert len(f.terms) == 10  # weakly increasing triples in 1..3
    assert all(c == 1 for c in f.terms.values())
    assert all(sum(e) == 3 for e in f.terms)


def test_fundamental_qsym_two_blocks():
    f = fundamental_qsym(2, (0, 2, 1, 0), 3)
    assert f.terms == {
        (0, 2, 1, 0, 0, 0): 1,  # y1^2 x2
        (0, 2, 0, 0, 1, 0): 1,  # y1^2 x3
        (0, 1, 0, 1, 1, 0): 1,  # y1 y2 x3
        (0, 0, 0, 2, 1, 0): 1,  # y2^2 x3
    }


def test_fundamental_qsym_too_many_blocks_is_zero():
    assert fundamental_qsym(2, (0, 1, 1, 0), 1) == SparsePoly.zero(2)


def test_monomials_of_degree():
    assert monomials_of_degree(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert monomials_of_degree(0, 0) == [()]
    assert monomials_of_degree(0, 1) == []
    assert len(monomials_of_degree(4, 3)) == 20


def test_integer_matrix_rank():
    assert integer_matrix_rank([]) == 0
    assert integer_matrix_rank([[0, 0]]) == 0
    assert integer_matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert integer_matrix_rank([[2, 4], [1, 2]]) == 1
    assert integer_matrix_rank([[2, 0], [0, 3], [2, 3]]) == 2
    # big entries stay exact
    assert integer_matrix_rank([[10**20, 1], [10**20, 2]]) == 2


def test_ideal_matrix_guard():
    with pytest.raises(SizeGuardExceeded):
        ideal_graded_matrix(2, 2, 2, max_columns=5)


def test_verify_basis_graded_2_2():
    report = verify_basis_graded(2, 2)
    assert report["m"] == 2 and report["n"] == 2
    assert report["degrees"] == [
        {"degree": 0, "monomials": 1, "ideal_rank": 0, "admissible": 1},
        {"degree": 1, "monomials": 4, "ideal_rank": 2, "admissible": 2},
        {"degree": 2, "monomials": 10, "ideal_rank": 10, "admissible": 0},
    ]


def test_verify_basis_graded_1_3():
    report = verify_basis_graded(1, 3)
    assert report["degrees"] == [
        {"degree": 0, "monomials": 1, "ideal_rank": 0, "admissible": 1},
        {"degree": 1, "monomials": 3, "ideal_rank": 1, "admissible": 2},
        {"degree": 2, "monomials": 6, "ideal_rank": 4, "admissible": 2},
        {"degree": 3, "monomials": 10, "ideal_rank": 10, "admissible": 0},
    ]


@pytest.mark.parametrize("m,n", [(1, 2), (1, 4), (2, 3), (3, 2)])
def test_verify_basis_graded_structure(m, n):
    report = verify_basis_graded(m, n)
    table = report["degrees"]
    assert [row["degree"] for row in table] == list(range(n + 1))
    # admissible monomials across all degrees biject with dissections
    assert sum(row["admissible"] for row in table) == fuss_catalan(m, n)
    assert table[-1]["admissible"] == 0  # top degree n is all ideal
    assert table[-1]["ideal_rank"] == table[-1]["monomials"]
    for row in table:
        assert row["ideal_rank"] == row["monomials"] - row["admissible"]
    by_degree = {}
    for v in enumerate_dyck(m, n):
        by_degree[sum(v)] = by_degree.get(sum(v), 0) + 1
    for row in table:
        assert row["admissible"] == by_degree.get(row["degree"], 0)


def test_fundamental_multidegree_is_composition_weight():
    # every term of F_c carries the same per-letter degree vector, and
    # that vector is the weight of c
    for m in (1, 2, 3):
        for c in enumerate_compositions(m, 4):
            f = fundamental_qsym(m, c, 4)
            assert not f.is_zero()  # block count <= size <= n here
            target = weight(m, c)
            for e, coef in f.terms.items():
                assert coef == 1
                assert tuple(sum(e[r::m]) for r in range(m)) == target


def test_ideal_graded_matrix_pinned_ranks():
    monomials, rows = ideal_graded_matrix(1, 2, 1)
    assert monomials == [(0, 1), (1, 0)]
    assert [1, 1] in rows  # x1 + x2, the single linear generator
    assert integer_matrix_rank(rows) == 1

    _, rows = ideal_graded_matrix(1, 2, 2)
    assert integer_matrix_rank(rows) == 3  # degree 2 is all ideal

    # degree 1 always holds exactly the m independent linear generators
    for m, n in ((1, 3), (2, 2), (2, 3), (3, 2)):
        _, rows = ideal_graded_matrix(m, n, 1)
        assert integer_matrix_rank(rows) == m


def test_rank_is_row_order_invariant():
    rng = random.Random(1031)
    for m, n, d in ((1, 3, 2), (2, 2, 2), (2, 3, 2), (3, 2, 2)):
        _, rows = ideal_graded_matrix(m, n, d)
        base = integer_matrix_rank(rows)
        assert integer_matrix_rank(list(reversed(rows))) == base
        for _ in range(3):
            shuffled = rows[:]
            rng.shuffle(shuffled)
            assert integer_matrix_rank(shuffled) == base
