"""Text renderings of a multiplet: aligned table, JSON and Graphviz DOT."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .multiplet import (Arrow, Degeneration, KSPair, Multiplet, MultipletKind, OperatorKind,
                        PairRelation, Vertex, pair_names)
from .rootsys import Root
from .weyl import ParabolicSpec

__all__ = ["format_c", "to_dict", "from_dict", "to_json", "from_json", "to_dot", "to_table"]


def format_c(c: Fraction) -> str:
    """Reduced fraction such as ``-3/2``; never a decimal."""
    return str(c)


def _sig(sig) -> str:
    return "{" + ", ".join(map(str, sig)) + "}"


def _degeneration_text(d: Degeneration) -> str:
    if d.operator_kind is OperatorKind.DEGENERATE_KS:
        text = f"degenerate-KS, exponent c+ = {format_c(d.exponent)}"
        if d.dalembertian_power is not None:
            text += f", d'Alembertian power {d.dalembertian_power}"
        return text
    return f"inherited-differential along {d.root}, m={d.degree}"


# -- JSON -------------------------------------------------------------------

def to_dict(mult: Multiplet) -> dict[str, Any]:
    return {
        "algebra": {"series": "A", "matrix_size": mult.spec.matrix_size},
        "parabolic": {"removed_index": mult.spec.removed_index},
        "inducing_labels": list(mult.inducing_labels),
        "kind": mult.kind.value,
        "vertices": [
            {
                "id": v.id,
                "signature": list(v.signature),
                "c": {"num": int(v.c * 2), "den": 2},
                "m_left": list(v.m_left),
                "m_right": list(v.m_right),
                "ks_partner": v.ks_partner,
                "coset_length": v.coset_length,
            }
            for v in mult.vertices
        ],
        "arrows": [
            {
                "from": a.source,
                "to": a.target,
                "root": [a.root.p, a.root.q],
                "degree": a.degree,
                "operator_kind": a.operator_kind.value,
            }
            for a in mult.arrows
        ],
        "pairs": [{"a": p.a, "b": p.b, "relation": p.relation.value} for p in mult.pairs],
        "degenerations": [
            {
                "from": d.source,
                "to": d.target,
                "operator_kind": d.operator_kind.value,
                "root": None if d.root is None else [d.root.p, d.root.q],
                "degree": d.degree,
                "exponent": None if d.exponent is None else {"num": int(d.exponent * 2), "den": 2},
                "dalembertian_power": d.dalembertian_power,
            }
            for d in mult.degenerations
        ],
    }


def _half(obj) -> Fraction | None:
    if obj is None:
        return None
    return Fraction(obj["num"], obj["den"])


def from_dict(data: dict[str, Any]) -> Multiplet:
    if data["algebra"]["series"] != "A":
        raise ValueError(f"unsupported series {data['algebra']['series']!r}")
    spec = ParabolicSpec(data["algebra"]["matrix_size"], data["parabolic"]["removed_index"])
    vertices = tuple(
        Vertex(
            id=v["id"],
            signature=tuple(v["signature"]),
            c=_half(v["c"]),
            m_left=tuple(v["m_left"]),
            m_right=tuple(v["m_right"]),
            ks_partner=v["ks_partner"],
            coset_length=v["coset_length"],
        )
        for v in data["vertices"]
    )
    arrows = tuple(
        Arrow(a["from"], a["to"], Root(*a["root"]), a["degree"], OperatorKind(a["operator_kind"]))
        for a in data["arrows"]
    )
    pairs = tuple(KSPair(p["a"], p["b"], PairRelation(p["relation"])) for p in data["pairs"])
    degenerations = tuple(
        Degeneration(
            source=d["from"],
            target=d["to"],
            operator_kind=OperatorKind(d["operator_kind"]),
            root=None if d["root"] is None else Root(*d["root"]),
            degree=d["degree"],
            exponent=_half(d["exponent"]),
            dalembertian_power=d["dalembertian_power"],
        )
        for d in data.get("degenerations", [])
    )
    return Multiplet(spec, tuple(data["inducing_labels"]), MultipletKind(data["kind"]),
                     vertices, arrows, pairs, degenerations)


def to_json(mult: Multiplet) -> str:
    return json.dumps(to_dict(mult), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> Multiplet:
    return from_dict(json.loads(text))


# -- DOT --------------------------------------------------------------------

def to_dot(mult: Multiplet) -> str:
    """Digraph read bottom (most negative c) to top, one rank per value of c."""
    n = mult.spec.matrix_size
    labels = ",".join(map(str, mult.inducing_labels))
    out = [
        "digraph multiplet {",
        f'  label="sl({n},R), k={mult.spec.removed_index}, labels {labels}";',
        "  rankdir=BT;",
        "  node [shape=box, fontname=monospace];",
    ]
    for v in mult.vertices:
        out.append(f'  v{v.id} [label="{_sig(v.signature)}\\nc={format_c(v.c)}"];')
    ranks: dict[Fraction, list[int]] = {}
    for v in mult.vertices:
        ranks.setdefault(v.c, []).append(v.id)
    for c in sorted(ranks):
        members = "; ".join(f"v{i}" for i in ranks[c])
        out.append(f"  {{ rank=same; {members}; }}")
    for a in mult.arrows:
        out.append(f'  v{a.source} -> v{a.target} [label="α_{{{a.root.p}..{a.root.q}}}, m={a.degree}"];')
    for d in mult.degenerations:
        out.append(f"  // v{d.source} => v{d.target}: {_degeneration_text(d)}")
    out.append("}")
    return "\n".join(out) + "\n"


# -- table ------------------------------------------------------------------

def to_table(mult: Multiplet) -> str:
    names = pair_names(mult)
    spec = mult.spec
    header = (f"sl({spec.matrix_size},R)  k={spec.removed_index}  "
              f"labels {','.join(map(str, mult.inducing_labels))}  "
              f"{mult.kind.value} multiplet, {len(mult.vertices)} member(s)")
    rows = [("id", "name", "signature", "c", "M-left", "M-right", "partner", "len")]
    for v in mult.vertices:
        rows.append((
            str(v.id), names[v.id], _sig(v.signature), format_c(v.c),
            ",".join(map(str, v.m_left)) or "-", ",".join(map(str, v.m_right)) or "-",
            "-" if v.ks_partner is None else str(v.ks_partner), str(v.coset_length),
        ))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = [header]
    for r in rows:
        lines.append("  ".join(cell.rjust(w) if i in (0, 3, 6, 7) else cell.ljust(w)
                               for i, (cell, w) in enumerate(zip(r, widths))).rstrip())
    lines.append("pairs:")
    for p in mult.pairs:
        lines.append(f"  {names[p.a]} <-> {names[p.b]}  {p.relation.value}")
    lines.append(f"arrows ({len(mult.arrows)}):")
    for a in mult.arrows:
        lines.append(f"  {a.source} -> {a.target}  {a.root}  m={a.degree}  {a.operator_kind.value}")
    if mult.degenerations:
        lines.append("degenerations:")
        for d in mult.degenerations:
            lines.append(f"  {names[d.source]} -> {names[d.target]}: {_degeneration_text(d)}")
    return "\n".join(lines) + "\n"
