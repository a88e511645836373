import numpy as np
import pytest

from multiplex.matrixreal import (bracket, build_basis, cartan_involution, check_sl2_triples,
                                  parabolic_dimensions, unit_matrix)
from multiplex.weyl import ParabolicSpec


@pytest.mark.parametrize("n", range(2, 9))
def test_sl2_triples(n):
    report = check_sl2_triples(n)
    assert sorted(report) == list(range(1, n))
    assert all(report.values())


def test_sl2_relations_by_hand():
    basis = build_basis(2)
    h, xp, xm = basis.cartan[0], basis.raising[0], basis.lowering[0]
    assert np.array_equal(bracket(h, xp), 2 * xp)
    assert np.array_equal(bracket(h, xm), -2 * xm)
    assert np.array_equal(bracket(xp, xm), h)


@pytest.mark.parametrize("n", range(2, 7))
def test_cartan_decomposition(n):
    basis = build_basis(n)
    k_basis = list(basis.k_basis.values())
    assert len(k_basis) == n * (n - 1) // 2
    assert len(basis.p_basis) == n * (n + 1) // 2 - 1
    for x in k_basis:
        assert np.array_equal(cartan_involution(x), x)
    for x in basis.p_basis:
        assert np.array_equal(cartan_involution(x), -x)
    stacked = np.array([x.ravel() for x in k_basis + basis.p_basis])
    assert np.linalg.matrix_rank(stacked) == n * n - 1
    for x in k_basis + basis.p_basis:
        assert np.trace(x) == 0


def test_unit_matrix():
    e = unit_matrix(1, 3, 3)
    assert e[0, 2] == 1 and e.sum() == 1


@pytest.mark.parametrize("n,k,m,nd", [(4, 2, 6, 4), (6, 3, 16, 9), (2, 1, 0, 1)])
def test_parabolic_dimension_examples(n, k, m, nd):
    d = parabolic_dimensions(ParabolicSpec(n, k))
    assert (d.m_dim, d.a_dim, d.n_dim) == (m, 1, nd)


def test_dimensions_against_block_counting():
    # count matrix positions: diagonal blocks minus traces, off-diagonal block
    for n in range(2, 11):
        for k in range(1, n):
            d = parabolic_dimensions(ParabolicSpec(n, k))
            mask = np.zeros((n, n), dtype=int)
            mask[:k, k:] = 1
            assert d.n_dim == mask.sum()
            assert d.m_dim == (k * k - 1) + ((n - k) ** 2 - 1)
            assert d.total == n * n - 1
