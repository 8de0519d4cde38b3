from itertools import product

import pytest

from polyflip import (
    ConstructionStuck,
    Dissection,
    enumerate_dissections,
    enumerate_dyck,
    first_violation,
    is_dyck,
    phi,
    psi,
)

EXAMPLE_VECTOR = (0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 0, 1)
EXAMPLE_Q = Dissection.new(2, 7, ((0, 11), (2, 11), (4, 11), (6, 11), (7, 10), (12, 15)))

PAIRS = [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]


def test_worked_example_pair():
    assert psi(2, EXAMPLE_VECTOR) == EXAMPLE_Q
    assert phi(EXAMPLE_Q) == EXAMPLE_VECTOR


def test_fan_maps_to_zero_vector():
    assert phi(Dissection.new(2, 3, ((0, 3), (0, 5)))) == (0,) * 6
    assert psi(2, (0,) * 6).diagonals == ((0, 3), (0, 5))


@pytest.mark.parametrize("m,n", PAIRS)
def test_round_trip_both_ways(m, n):
    qs = enumerate_dissections(m, n)
    vs = enumerate_dyck(m, n)
    assert len(qs) == len(vs)
    images = set()
    for q in qs:
        v = phi(q)
        assert is_dyck(m, v)
        assert sum(v) == q.rank
        assert psi(m, v) == q
        images.add(v)
    assert images == set(vs)
    for v in vs:
        assert phi(psi(m, v)) == v


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_inadmissible_vectors_get_stuck(m, n):
    for v in product(range(n + 1), repeat=m * n):
        if is_dyck(m, v):
            continue
        with pytest.raises(ConstructionStuck):
            psi(m, v)


def test_stuck_message_points_at_first_violation():
    v = (0, 0, 2, 0)
    pos = first_violation(2, v)
    with pytest.raises(ConstructionStuck, match=f"position {pos}"):
        psi(2, v)


def test_psi_input_validation():
    with pytest.raises(ValueError):
        psi(2, (0, 1, 0))  # length not a multiple of m
    with pytest.raises(ValueError):
        psi(2, ())
