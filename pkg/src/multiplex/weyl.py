"""
Weyl group of ``sl(N)`` as the symmetric group acting on the epsilon basis,
together with the maximal parabolic data ``P = MAN`` obtained by deleting one
simple root.

For the split real form the restricted Weyl group is the full Weyl group, so
the reflections here double as restricted Weyl reflections.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exceptions import CapacityError, DomainError
from .rootsys import Root, Signature, eps_to_signature, signature_to_eps

__all__ = [
    "WeylElement", "ParabolicSpec", "MAX_ENUMERATION_SIZE",
    "weyl_group", "parabolic_subgroup_order", "multiplet_size",
    "longest_element", "reflection", "restricted_reflection", "is_m_dominant",
]

# 10! elements is the largest group we are willing to list
MAX_ENUMERATION_SIZE = 10


@dataclass(frozen=True)
class WeylElement:
    """Permutation ``i -> perm[i-1]`` of ``{1..N}``, acting by ``e_i -> e_perm(i)``."""
    perm: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise DomainError(f"not a permutation of 1..{len(self.perm)}: {self.perm}")

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(range(1, n + 1)))

    @property
    def size(self) -> int:
        return len(self.perm)

    @property
    def length(self) -> int:
        """Number of inversions, i.e. the Coxeter length."""
        w = self.perm
        return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    def __mul__(self, other: WeylElement) -> WeylElement:
        # (self * other)(i) = self(other(i))
        return WeylElement(tuple(self.perm[j - 1] for j in other.perm))

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm, start=1):
            inv[j - 1] = i
        return WeylElement(tuple(inv))

    def act_eps(self, x: Sequence) -> tuple:
        """Image of ``sum x_i e_i``; the coefficient of ``e_w(i)`` is ``x_i``."""
        y = [None] * len(x)
        for i, xi in enumerate(x):
            y[self.perm[i] - 1] = xi
        return tuple(y)

    def act(self, sig: Sequence[int]) -> Signature:
        """Shifted action on a signature (which already stores ``Lambda + rho``)."""
        if len(sig) != self.size - 1:
            raise DomainError(f"signature length {len(sig)} does not match sl({self.size})")
        return eps_to_signature(self.act_eps(signature_to_eps(sig)))


@dataclass(frozen=True)
class ParabolicSpec:
    """``sl(N)`` with the maximal parabolic obtained by removing simple root ``k``."""
    matrix_size: int
    removed_index: int

    def __post_init__(self):
        if self.matrix_size < 2:
            raise DomainError(f"matrix size must be >= 2, got {self.matrix_size}")
        if not 1 <= self.removed_index <= self.matrix_size - 1:
            raise DomainError(
                f"removed index {self.removed_index} outside 1..{self.matrix_size - 1}")

    @property
    def rank(self) -> int:
        return self.matrix_size - 1

    @property
    def left_indices(self) -> tuple[int, ...]:
        return tuple(range(1, self.removed_index))

    @property
    def right_indices(self) -> tuple[int, ...]:
        return tuple(range(self.removed_index + 1, self.matrix_size))

    @property
    def m_indices(self) -> tuple[int, ...]:
        return self.left_indices + self.right_indices


def weyl_group(matrix_size: int) -> tuple[WeylElement, ...]:
    """All ``N!`` elements in lexicographic one-line order."""
    if matrix_size < 1:
        raise DomainError(f"matrix size must be >= 1, got {matrix_size}")
    if matrix_size > MAX_ENUMERATION_SIZE:
        raise CapacityError(
            f"refusing to enumerate S_{matrix_size}; the cap is N <= {MAX_ENUMERATION_SIZE}")
    return tuple(WeylElement(p) for p in itertools.permutations(range(1, matrix_size + 1)))


def parabolic_subgroup_order(spec: ParabolicSpec) -> int:
    k = spec.removed_index
    return math.factorial(k) * math.factorial(spec.matrix_size - k)


def multiplet_size(spec: ParabolicSpec) -> int:
    """Number of ERs in a generic multiplet, ``|W(g,h)| / |W(m,h_m)|``."""
    return math.factorial(spec.matrix_size) // parabolic_subgroup_order(spec)


def longest_element(matrix_size: int) -> WeylElement:
    return WeylElement(tuple(range(matrix_size, 0, -1)))


def reflection(beta: Root, matrix_size: int) -> WeylElement:
    """The reflection in ``e_p - e_{q+1}``, a transposition."""
    beta.check(matrix_size - 1)
    perm = list(range(1, matrix_size + 1))
    perm[beta.p - 1], perm[beta.q] = perm[beta.q], perm[beta.p - 1]
    return WeylElement(tuple(perm))


def restricted_reflection(mu: Sequence, lam: Sequence) -> tuple[Fraction, ...]:
    """``s_lam(mu) = mu - 2 (lam, mu) / (lam, lam) * lam`` in exact arithmetic."""
    if len(mu) != len(lam):
        raise DomainError("vectors must have the same length")
    mu = [Fraction(v) for v in mu]
    lam = [Fraction(v) for v in lam]
    norm = sum(v * v for v in lam)
    if norm == 0:
        raise DomainError("cannot reflect in the zero vector")
    scale = 2 * sum(a * b for a, b in zip(lam, mu)) / norm
    return tuple(a - scale * b for a, b in zip(mu, lam))


def is_m_dominant(sig: Sequence[int], spec: ParabolicSpec) -> bool:
    """True when every label on the M-blocks is strictly positive."""
    if len(sig) != spec.rank:
        raise DomainError(f"signature length {len(sig)} does not match rank {spec.rank}")
    return all(sig[i - 1] > 0 for i in spec.m_indices)
