"""
The A-series root system in Harish-Chandra coordinates.

A weight is carried as the label vector ``(n_1, ..., n_{N-1})`` of
``Lambda + rho`` paired with the simple coroots, so ``rho`` itself is the
all-ones vector.  Positive roots of ``A_{N-1}`` are contiguous intervals of
simple roots, ``alpha_p + ... + alpha_q``, stored as ``Root(p, q)``.

>>> dot_reflect((1, 1, 1), Root(2, 2))
(2, -1, 2)
>>> hc_param((2, -1, 2), Root(1, 2))
1
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError

__all__ = [
    "Signature", "Root", "RootSystem",
    "build_root_system", "hc_param", "cartan_pairing", "dot_reflect",
    "signature_to_eps", "eps_to_signature",
]

# labels of Lambda + rho on the simple coroots
Signature = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Root:
    """Positive root ``alpha_p + ... + alpha_q`` (1-based, inclusive)."""
    p: int
    q: int

    def __post_init__(self):
        if not (1 <= self.p <= self.q):
            raise DomainError(f"invalid root interval [{self.p},{self.q}]")

    @property
    def is_simple(self) -> bool:
        return self.p == self.q

    @property
    def length(self) -> int:
        return self.q - self.p + 1

    def contains(self, i: int) -> bool:
        return self.p <= i <= self.q

    def coefficients(self, rank: int) -> tuple[int, ...]:
        """Expansion in the simple-root basis."""
        self.check(rank)
        return tuple(1 if self.p <= i <= self.q else 0 for i in range(1, rank + 1))

    def check(self, rank: int) -> None:
        if self.q > rank:
            raise DomainError(f"root [{self.p},{self.q}] exceeds rank {rank}")

    def __str__(self) -> str:
        return f"α_{{{self.p}..{self.q}}}"


@dataclass(frozen=True)
class RootSystem:
    matrix_size: int
    rank: int
    positive_roots: tuple[Root, ...]

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.positive_roots if r.is_simple)


def build_root_system(matrix_size: int) -> RootSystem:
    """Positive roots of ``A_{N-1}``: simple first, then by length, then by ``p``."""
    if matrix_size < 2:
        raise DomainError(f"matrix size must be >= 2, got {matrix_size}")
    rank = matrix_size - 1
    roots = sorted(
        (Root(p, q) for p in range(1, rank + 1) for q in range(p, rank + 1)),
        key=lambda r: (r.length, r.p),
    )
    return RootSystem(matrix_size, rank, tuple(roots))


def hc_param(sig: Sequence[int], beta: Root) -> int:
    """``(Lambda + rho, beta^vee)``: the sum of labels over the root interval."""
    beta.check(len(sig))
    return sum(sig[beta.p - 1:beta.q])


def cartan_pairing(beta: Root, i: int) -> int:
    """``(beta, alpha_i^vee)`` for simple index ``i``."""
    if i < 1:
        raise DomainError(f"simple-root index must be >= 1, got {i}")
    if beta.is_simple and i == beta.p:
        return 2
    return (i == beta.p) + (i == beta.q) - (i == beta.p - 1) - (i == beta.q + 1)


def dot_reflect(sig: Sequence[int], beta: Root) -> Signature:
    """Signature of ``Lambda - m_beta * beta``."""
    m = hc_param(sig, beta)
    return tuple(n - m * cartan_pairing(beta, i) for i, n in enumerate(sig, start=1))


def signature_to_eps(sig: Sequence[int]) -> tuple[int, ...]:
    """Coordinates ``x`` in the epsilon basis, normalised so that ``x_N = 0``.

    ``n_i = x_i - x_{i+1}``; a Weyl element acts on ``Lambda + rho`` by
    permuting these coordinates.
    """
    x = [0]
    for n in reversed(sig):
        x.append(x[-1] + n)
    return tuple(reversed(x))


def eps_to_signature(x: Sequence[int]) -> Signature:
    return tuple(x[i] - x[i + 1] for i in range(len(x) - 1))
