"""
Multiplets of elementary representations induced from a maximal parabolic.

A multiplet is generated from an inducing label vector by the shifted Weyl
action: its members are the distinct points of the orbit whose labels on the
M-blocks stay strictly positive.  Each member carries its conformal factor,
its M-labels, its Knapp-Stein partner and the length of its coset.  Arrows
are the single-reflection embeddings ``Lambda -> Lambda - m_beta * beta``
between members.

>>> from multiplex.weyl import ParabolicSpec
>>> mult = generate_multiplet(ParabolicSpec(4, 2), (1, 1, 1))
>>> [v.signature for v in mult.vertices][:3]
[(1, 1, 1), (2, -1, 2), (1, -2, 3)]
>>> [str(v.c) for v in mult.vertices]
['-2', '-1', '0', '0', '1', '2']
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

import networkx as nx

from .exceptions import DomainError
from .rootsys import (Root, Signature, build_root_system, cartan_pairing, dot_reflect,
                      eps_to_signature, hc_param, signature_to_eps)
from .weyl import ParabolicSpec, is_m_dominant

__all__ = [
    "MultipletKind", "OperatorKind", "PairRelation",
    "Vertex", "Arrow", "KSPair", "Degeneration", "Multiplet",
    "generate_multiplet", "conformal_factor", "conformal_shift", "ks_pairing",
    "generate_arrows", "classify_degenerations", "covering_arrows",
    "m_rep_dimension", "pair_names",
]


class MultipletKind(str, enum.Enum):
    MAIN = "main"
    REDUCED = "reduced"
    SINGLET = "singlet"


class OperatorKind(str, enum.Enum):
    SIMPLE_POWER = "simple-power-differential"
    GENERAL = "general-differential"
    DEGENERATE_KS = "degenerate-KS-differential"


class PairRelation(str, enum.Enum):
    WEYL_SHIFT = "weyl-shift"
    FLIP = "flip"
    SELF_DUAL = "self-dual"


@dataclass(frozen=True)
class Vertex:
    id: int
    signature: Signature
    c: Fraction
    m_left: tuple[int, ...]
    m_right: tuple[int, ...]
    ks_partner: int | None  # None unless the M-blocks have equal size
    coset_length: int


@dataclass(frozen=True)
class Arrow:
    """Invariant differential operator of degree ``degree`` along ``root``."""
    source: int
    target: int
    root: Root
    degree: int
    operator_kind: OperatorKind


@dataclass(frozen=True)
class KSPair:
    a: int
    b: int
    relation: PairRelation


@dataclass(frozen=True)
class Degeneration:
    """How the ``-`` member of a reduced doublet reaches the ``+`` member.

    Either an arrow inherited from the main multiplet (``root``/``degree``
    set), or a differential operator arising from a degenerate Knapp-Stein
    integral operator (``exponent`` set to ``c+``).
    """
    source: int
    target: int
    operator_kind: OperatorKind
    root: Root | None = None
    degree: int | None = None
    exponent: Fraction | None = None
    dalembertian_power: int | None = None

    @property
    def annotation(self) -> str:
        if self.operator_kind is OperatorKind.DEGENERATE_KS:
            return "degenerate-KS"
        return "inherited-differential"


@dataclass(frozen=True)
class Multiplet:
    spec: ParabolicSpec
    inducing_labels: tuple[int, ...]
    kind: MultipletKind
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    pairs: tuple[KSPair, ...]
    degenerations: tuple[Degeneration, ...] = ()

    def __len__(self) -> int:
        return len(self.vertices)

    def vertex(self, vid: int) -> Vertex:
        v = self.vertices[vid - 1]
        assert v.id == vid
        return v

    def find(self, sig: Sequence[int]) -> Vertex | None:
        sig = tuple(sig)
        for v in self.vertices:
            if v.signature == sig:
                return v
        return None

    def partner(self, vid: int) -> Vertex:
        pid = self.vertex(vid).ks_partner
        if pid is None:
            raise DomainError(f"no Knapp-Stein partner inside the multiplet for k={self.spec.removed_index}, "
                              f"N={self.spec.matrix_size}; the dual is induced from the opposite parabolic")
        return self.vertex(pid)


def _check_labels(spec: ParabolicSpec, labels: Sequence[int]) -> tuple[int, ...]:
    labels = tuple(labels)
    if len(labels) != spec.rank:
        raise DomainError(f"expected {spec.rank} labels for sl({spec.matrix_size}), got {len(labels)}")
    for i, n in enumerate(labels, start=1):
        if isinstance(n, bool) or not isinstance(n, int):
            raise DomainError(f"label m{i}={n!r} is not an integer")
        if n < 0:
            raise DomainError(f"label m{i}={n} is negative")
    return labels


def conformal_factor(spec: ParabolicSpec, sig: Sequence[int]) -> Fraction:
    """``c = -(n_k + sum(n)) / 2``; flips sign under Knapp-Stein duality."""
    if len(sig) != spec.rank:
        raise DomainError(f"signature length {len(sig)} does not match rank {spec.rank}")
    return -Fraction(sig[spec.removed_index - 1] + sum(sig), 2)


def conformal_shift(spec: ParabolicSpec, beta: Root, degree: int) -> Fraction:
    """Change of ``c`` along an arrow ``Lambda -> Lambda - degree * beta``."""
    total = cartan_pairing(beta, spec.removed_index)
    total += sum(cartan_pairing(beta, i) for i in range(1, spec.rank + 1))
    return Fraction(degree * total, 2)


def m_rep_dimension(block_labels: Sequence[int]) -> int:
    """Dimension of the ``sl(len+1)`` irrep with HC labels ``block_labels``.

    Weyl's formula: product over intervals ``[i, j]`` of
    ``(p_i + ... + p_j) / (j - i + 1)``.
    """
    for p in block_labels:
        if p <= 0:
            raise DomainError(f"block label {p} is not a positive integer")
    dim = Fraction(1)
    r = len(block_labels)
    for i in range(r):
        for j in range(i, r):
            dim *= Fraction(sum(block_labels[i:j + 1]), j - i + 1)
    assert dim.denominator == 1
    return int(dim)


def _inversions(y: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(y, 2) if a < b)


def _self_opposite(spec: ParabolicSpec) -> bool:
    # w_0 maps the parabolic onto its opposite only when both blocks match
    return 2 * spec.removed_index == spec.matrix_size


def _dual_representative(spec: ParabolicSpec, y: Sequence[int]) -> Signature:
    # w_0 reverses the epsilon coordinates; re-sorting each block picks the
    # m-dominant point of the same W_m coset
    k = spec.removed_index
    z = list(reversed(y))
    return eps_to_signature(sorted(z[:k], reverse=True) + sorted(z[k:], reverse=True))


def _c_label_form(spec: ParabolicSpec, x: Sequence[int], y: Sequence[int]) -> list[Fraction]:
    """Coefficients of ``c(y)`` as a linear form in the inducing labels.

    ``y`` is a rearrangement of ``x``; ``x_j = n_j + ... + n_{N-1}``.  Where
    labels vanish the choice of preimage is ambiguous only on those labels.
    """
    k, n = spec.removed_index, spec.matrix_size
    pos = {}
    for j, v in enumerate(x):
        pos.setdefault(v, j)
    form = [Fraction(0)] * spec.rank
    for idx, sign in ((k - 1, 1), (k, -1), (0, 1), (n - 1, -1)):
        for l in range(pos[y[idx]], spec.rank):
            form[l] -= Fraction(sign, 2)
    return form


def ks_pairing(mult: Multiplet) -> dict[int, int]:
    """Knapp-Stein partner of every vertex id (empty unless ``N = 2k``)."""
    if not _self_opposite(mult.spec):
        return {}
    out = {}
    for v in mult.vertices:
        y = signature_to_eps(v.signature)
        dual = mult.find(_dual_representative(mult.spec, y))
        assert dual is not None, f"no Knapp-Stein partner for {v.signature}"
        out[v.id] = dual.id
    return out


def generate_arrows(mult: Multiplet) -> tuple[Arrow, ...]:
    """All embeddings ``v -> dot_reflect(v, beta)`` with ``m_beta > 0`` inside the multiplet."""
    roots = build_root_system(mult.spec.matrix_size).positive_roots
    index = {v.signature: v.id for v in mult.vertices}
    arrows = []
    for v in mult.vertices:
        for beta in roots:
            m = hc_param(v.signature, beta)
            if m <= 0:
                continue
            target = index.get(dot_reflect(v.signature, beta))
            if target is None:
                continue
            kind = OperatorKind.SIMPLE_POWER if beta.is_simple else OperatorKind.GENERAL
            arrows.append(Arrow(v.id, target, beta, m, kind))
    return tuple(arrows)


def covering_arrows(arrows: Sequence[Arrow]) -> tuple[Arrow, ...]:
    """Transitive reduction of the arrow digraph (the figure-style diagram)."""
    graph = nx.DiGraph()
    graph.add_edges_from((a.source, a.target) for a in arrows)
    keep = set(nx.transitive_reduction(graph).edges)
    best = {}
    for a in sorted(arrows, key=lambda a: (a.root.length, a.root)):
        if (a.source, a.target) in keep:
            best.setdefault((a.source, a.target), a)
    return tuple(a for a in arrows if best.get((a.source, a.target)) is a)


def _minus_plus(a: Vertex, b: Vertex) -> tuple[Vertex, Vertex]:
    # sign(c) decides; at equal c the lexicographically smaller signature is "-"
    if (a.c, a.signature) <= (b.c, b.signature):
        return a, b
    return b, a


def classify_degenerations(mult: Multiplet) -> tuple[Degeneration, ...]:
    """Annotate the operator from ``chi^-`` to ``chi^+`` in a doublet."""
    if len(mult.vertices) != 2:
        raise DomainError(f"degeneration analysis needs a doublet, got {len(mult.vertices)} members")
    minus, plus = _minus_plus(*mult.vertices)
    for a in mult.arrows:
        if {a.source, a.target} == {minus.id, plus.id}:
            return (Degeneration(a.source, a.target, a.operator_kind, root=a.root, degree=a.degree),)
    if plus.c == 0:
        return ()
    power = None
    spec = mult.spec
    if (spec.matrix_size, spec.removed_index) == (4, 2) and minus.m_left == minus.m_right \
            and plus.c.denominator == 1:
        power = int(plus.c)
    return (Degeneration(minus.id, plus.id, OperatorKind.DEGENERATE_KS,
                         exponent=plus.c, dalembertian_power=power),)


def generate_multiplet(spec: ParabolicSpec, labels: Sequence[int]) -> Multiplet:
    """Build the multiplet containing the ER with inducing labels ``labels``.

    Zero labels give reduced multiplets; vertices are ordered by coset length,
    then lexicographically by signature, with ids from 1.
    """
    labels = _check_labels(spec, labels)
    k, n = spec.removed_index, spec.matrix_size
    x = signature_to_eps(labels)

    # the orbit meets each W_m coset in one block-sorted point, so choosing
    # which coordinates land in the first block enumerates the candidates
    points = {}
    for block in itertools.combinations(range(n), k):
        chosen = set(block)
        y = tuple(x[i] for i in block) + tuple(x[i] for i in range(n) if i not in chosen)
        sig = eps_to_signature(y)
        if is_m_dominant(sig, spec):
            points.setdefault(sig, y)
    if not points:
        raise DomainError(f"labels {','.join(map(str, labels))} admit no m-dominant member")
    assert len(points) <= math.factorial(n)

    order = sorted(points, key=lambda s: (_inversions(points[s]), s))
    ids = {sig: i for i, sig in enumerate(order, start=1)}
    vertices = []
    for sig in order:
        partner = None
        if _self_opposite(spec):
            partner = ids.get(_dual_representative(spec, points[sig]))
            assert partner is not None, f"no Knapp-Stein partner for {sig}"
        vertices.append(Vertex(
            id=ids[sig],
            signature=sig,
            c=conformal_factor(spec, sig),
            m_left=tuple(sig[i - 1] for i in spec.left_indices),
            m_right=tuple(sig[i - 1] for i in spec.right_indices),
            ks_partner=partner,
            coset_length=_inversions(points[sig]),
        ))

    pairs = []
    for v in vertices:
        if v.ks_partner is None or v.id > v.ks_partner:
            continue
        if v.id == v.ks_partner:
            relation = PairRelation.SELF_DUAL
        else:
            form = _c_label_form(spec, x, points[v.signature])
            vanishes = all(f == 0 for f, m in zip(form, labels) if m != 0)
            relation = PairRelation.FLIP if vanishes else PairRelation.WEYL_SHIFT
        pairs.append(KSPair(v.id, v.ks_partner, relation))

    if all(m > 0 for m in labels):
        kind = MultipletKind.MAIN
    elif len(vertices) == 1:
        kind = MultipletKind.SINGLET
    else:
        kind = MultipletKind.REDUCED

    mult = Multiplet(spec, labels, kind, tuple(vertices), (), tuple(pairs))
    mult = replace(mult, arrows=generate_arrows(mult))
    if kind is MultipletKind.REDUCED and len(vertices) == 2:
        mult = replace(mult, degenerations=classify_degenerations(mult))
    return mult


def pair_names(mult: Multiplet) -> dict[int, str]:
    """Names ``"<i>-"``/``"<i>+"`` per Knapp-Stein pair; self-dual members get ``"<i>"``.

    Without pairs (unequal blocks) the vertex id is used.
    """
    names = {v.id: f"#{v.id}" for v in mult.vertices}
    for i, pair in enumerate(sorted(mult.pairs, key=lambda p: p.a), start=1):
        if pair.a == pair.b:
            names[pair.a] = str(i)
            continue
        minus, plus = _minus_plus(mult.vertex(pair.a), mult.vertex(pair.b))
        names[minus.id] = f"{i}-"
        names[plus.id] = f"{i}+"
    return names
