"""
Matrix realization of ``sl(N, R)`` used as an exact self-test.

All matrices are integer numpy arrays; nothing here is floating point.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .weyl import ParabolicSpec

__all__ = [
    "SlBasis", "ParabolicDecomposition",
    "unit_matrix", "bracket", "cartan_involution",
    "build_basis", "check_sl2_triples", "parabolic_dimensions",
]


def unit_matrix(i: int, j: int, n: int) -> np.ndarray:
    """``e_ij``: the single nonzero entry 1 at row ``i``, column ``j`` (1-based)."""
    e = np.zeros((n, n), dtype=np.int64)
    e[i - 1, j - 1] = 1
    return e


def bracket(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def cartan_involution(x: np.ndarray) -> np.ndarray:
    return -x.T


@dataclass(frozen=True)
class SlBasis:
    matrix_size: int
    # X_ij = e_ij - e_ji, i < j: spans so(N)
    k_basis: dict
    # Y_ij = e_ij + e_ji, i < j
    symmetric: dict
    # H_j = e_jj - e_{j+1,j+1}
    cartan: tuple
    # X^+_j = e_{j,j+1}, X^-_j = e_{j+1,j}
    raising: tuple
    lowering: tuple

    @property
    def p_basis(self) -> list[np.ndarray]:
        """Complement of ``k`` under the Cartan involution: the ``Y_ij`` and ``H_j``."""
        return list(self.symmetric.values()) + list(self.cartan)


def build_basis(matrix_size: int) -> SlBasis:
    n = matrix_size
    if n < 2:
        raise DomainError(f"matrix size must be >= 2, got {n}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    k_basis = {(i, j): unit_matrix(i, j, n) - unit_matrix(j, i, n) for i, j in pairs}
    symmetric = {(i, j): unit_matrix(i, j, n) + unit_matrix(j, i, n) for i, j in pairs}
    cartan = tuple(unit_matrix(j, j, n) - unit_matrix(j + 1, j + 1, n) for j in range(1, n))
    raising = tuple(unit_matrix(j, j + 1, n) for j in range(1, n))
    lowering = tuple(unit_matrix(j + 1, j, n) for j in range(1, n))
    return SlBasis(n, k_basis, symmetric, cartan, raising, lowering)


def check_sl2_triples(matrix_size: int) -> dict[int, bool]:
    """For each ``j``: ``[X+, X-] = H`` and ``[H, X±] = ±2 X±``."""
    basis = build_basis(matrix_size)
    report = {}
    for j, (h, xp, xm) in enumerate(zip(basis.cartan, basis.raising, basis.lowering), start=1):
        report[j] = bool(
            np.array_equal(bracket(xp, xm), h)
            and np.array_equal(bracket(h, xp), 2 * xp)
            and np.array_equal(bracket(h, xm), -2 * xm)
        )
    return report


@dataclass(frozen=True)
class ParabolicDecomposition:
    m_dim: int
    a_dim: int
    n_dim: int

    @property
    def total(self) -> int:
        """``dim g``: ``m + a + n`` plus the opposite nilpotent."""
        return self.m_dim + self.a_dim + 2 * self.n_dim


def parabolic_dimensions(spec: ParabolicSpec) -> ParabolicDecomposition:
    k, n = spec.removed_index, spec.matrix_size
    return ParabolicDecomposition(
        m_dim=(k * k - 1) + ((n - k) ** 2 - 1),
        a_dim=1,
        n_dim=k * (n - k),
    )
