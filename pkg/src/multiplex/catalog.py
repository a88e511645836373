"""
Fixture tables transcribed from the published multiplet listings, and the
engine that checks generated multiplets against them.

Fixture files are line oriented::

    table <name> N <size> k <index> [match exact|contains]
    case <name> [zero i,j,...] [kind main|reduced|singlet]
    chi <id> [pm] [sig e1,e2,...] [c e | cpm e | cmp e]
        [embed from <id> root <p..q> deg e]... [pair <id>] [tag <relation>]
        [unordered] [errata <field> "<source text>"]... [note "<text>"]...

Expressions use ``+ - * /``, parentheses, integers and label tokens: ``m3``
is a single label and ``m24`` the interval sum ``m2 + m3 + m4``.  A ``*`` in
a signature marks a label the source does not print (the A-label of a dual
listing); such entries are located through their M-labels and ``c``.

``pm`` expands one line into the members ``<id>-`` and ``<id>+``: the ``+``
member carries the block-swapped M-labels, ``cpm e`` assigns ``c = -e`` and
``+e`` to them and ``cmp e`` the opposite.
"""
from __future__ import annotations

import ast
import os
import random
import re
import shlex
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .exceptions import DomainError, FixtureError
from .multiplet import Multiplet, MultipletKind, PairRelation, generate_multiplet
from .rootsys import Root
from .weyl import ParabolicSpec

__all__ = [
    "Erratum", "Embedding", "FixtureEntry", "FixtureCase", "FixtureTable",
    "ExpectedEntry", "ExpectedFragment", "Mismatch", "VerifyReport",
    "FIXTURE_DIR_ENV", "fixture_dir", "list_fixtures", "load_fixture", "parse_fixture",
    "evaluate_expression", "evaluate_fixture", "verify", "format_report",
]

FIXTURE_DIR_ENV = "MULTIPLEX_FIXTURE_DIR"

# fields whose printed value is replaced by a documented reading
VALUE_FIELDS = re.compile(r"^(c|embed|sig\d+)$")


@dataclass(frozen=True)
class Erratum:
    field: str
    literal: str

    @property
    def replaces_value(self) -> bool:
        return bool(VALUE_FIELDS.match(self.field))


@dataclass(frozen=True)
class Embedding:
    source: str
    root: Root
    degree: str


@dataclass
class FixtureEntry:
    id: str
    sig: tuple[str | None, ...] | None = None
    c: str | None = None
    embeds: list[Embedding] = field(default_factory=list)
    pair: str | None = None
    tag: PairRelation | None = None
    unordered: bool = False
    errata: list[Erratum] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


@dataclass
class FixtureCase:
    name: str
    zeros: tuple[int, ...] = ()
    kind: MultipletKind | None = None
    entries: list[FixtureEntry] = field(default_factory=list)

    def apply(self, labels: Sequence[int]) -> tuple[int, ...]:
        """Force the designated labels to zero."""
        return tuple(0 if i in self.zeros else m for i, m in enumerate(labels, start=1))


@dataclass
class FixtureTable:
    name: str
    matrix_size: int
    removed_index: int
    match: str = "exact"
    cases: list[FixtureCase] = field(default_factory=list)

    @property
    def spec(self) -> ParabolicSpec:
        return ParabolicSpec(self.matrix_size, self.removed_index)

    @property
    def entries(self) -> list[FixtureEntry]:
        return [e for case in self.cases for e in case.entries]

    @property
    def errata(self) -> list[tuple[str, Erratum]]:
        return [(e.id, err) for e in self.entries for err in e.errata]


# -- expressions ------------------------------------------------------------

_TOKEN = re.compile(r"^m(\d)(\d)?$")


def _label_value(name: str, labels: Sequence[int]) -> int:
    match = _TOKEN.match(name)
    if not match:
        raise FixtureError(f"unknown token {name!r}")
    lo = int(match.group(1))
    hi = int(match.group(2) or lo)
    if not 1 <= lo <= hi <= len(labels):
        raise FixtureError(f"token {name!r} out of range for {len(labels)} labels")
    return sum(labels[lo - 1:hi])


def evaluate_expression(expr: str, labels: Sequence[int]) -> Fraction:
    """Exact value of a fixture expression at the given labels."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise FixtureError(f"cannot parse expression {expr!r}") from exc

    def ev(node) -> Fraction:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            return Fraction(_label_value(node.id, labels))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                return a / b
        raise FixtureError(f"unsupported construct in expression {expr!r}")

    return ev(tree)


# -- parsing ----------------------------------------------------------------

def _parse_root(text: str) -> Root:
    p, _, q = text.partition("..")
    try:
        return Root(int(p), int(q or p))
    except ValueError as exc:
        raise FixtureError(f"bad root {text!r}") from exc


def _negate(expr: str) -> str:
    return f"-({expr})"


def _parse_entry(tokens: list[str], table: FixtureTable) -> list[FixtureEntry]:
    entry = FixtureEntry(id=tokens[1])
    pm = False
    c_mode = None
    i = 2
    while i < len(tokens):
        key = tokens[i]
        if key == "pm":
            pm = True
            i += 1
        elif key == "sig":
            entry.sig = tuple(None if t == "*" else t for t in tokens[i + 1].split(","))
            i += 2
        elif key in ("c", "cpm", "cmp"):
            c_mode, entry.c = key, tokens[i + 1]
            i += 2
        elif key == "embed":
            if tokens[i + 1] != "from" or tokens[i + 3] != "root" or tokens[i + 5] != "deg":
                raise FixtureError("expected 'embed from <id> root <p..q> deg <expr>'")
            entry.embeds.append(Embedding(tokens[i + 2], _parse_root(tokens[i + 4]), tokens[i + 6]))
            i += 7
        elif key == "pair":
            entry.pair = tokens[i + 1]
            i += 2
        elif key == "tag":
            entry.tag = PairRelation(tokens[i + 1])
            i += 2
        elif key == "unordered":
            entry.unordered = True
            i += 1
        elif key == "errata":
            entry.errata.append(Erratum(tokens[i + 1], tokens[i + 2]))
            i += 3
        elif key == "note":
            entry.notes.append(tokens[i + 1])
            i += 2
        else:
            raise FixtureError(f"unknown keyword {key!r}")

    if entry.sig is not None and len(entry.sig) != table.matrix_size - 1:
        raise FixtureError(f"entry {entry.id}: signature needs {table.matrix_size - 1} entries")
    if not pm:
        if c_mode in ("cpm", "cmp"):
            raise FixtureError(f"entry {entry.id}: {c_mode} requires pm")
        return [entry]

    k = table.removed_index
    if 2 * k != table.matrix_size or entry.sig is None:
        raise FixtureError(f"entry {entry.id}: pm needs a signature and k = N/2")
    if c_mode == "c":
        raise FixtureError(f"entry {entry.id}: pm requires cpm or cmp")
    left, right = entry.sig[:k - 1], entry.sig[k:]
    minus = FixtureEntry(
        id=f"{entry.id}-", sig=entry.sig, pair=f"{entry.id}+", tag=entry.tag,
        unordered=entry.unordered, errata=entry.errata, notes=entry.notes)
    plus = FixtureEntry(
        id=f"{entry.id}+", sig=right + (None,) + left, pair=f"{entry.id}-", tag=entry.tag,
        unordered=entry.unordered)
    if entry.c is not None:
        minus.c, plus.c = (_negate(entry.c), entry.c) if c_mode == "cpm" else (entry.c, _negate(entry.c))
    return [minus, plus]


def parse_fixture(text: str) -> FixtureTable:
    table = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        try:
            tokens = shlex.split(raw, comments=True)
            if not tokens:
                continue
            head = tokens[0]
            if head == "table":
                opts = dict(zip(tokens[2::2], tokens[3::2]))
                table = FixtureTable(tokens[1], int(opts["N"]), int(opts["k"]),
                                     opts.get("match", "exact"))
            elif table is None:
                raise FixtureError("content before 'table' header")
            elif head == "case":
                opts = dict(zip(tokens[2::2], tokens[3::2]))
                zeros = tuple(int(z) for z in opts["zero"].split(",")) if "zero" in opts else ()
                kind = MultipletKind(opts["kind"]) if "kind" in opts else None
                table.cases.append(FixtureCase(tokens[1], zeros, kind))
            elif head == "chi":
                if not table.cases:
                    table.cases.append(FixtureCase("main"))
                table.cases[-1].entries.extend(_parse_entry(tokens, table))
            else:
                raise FixtureError(f"unknown line type {head!r}")
        except (KeyError, IndexError, ValueError) as exc:
            raise FixtureError(f"line {lineno}: {exc}") from exc
        except FixtureError as exc:
            raise FixtureError(f"line {lineno}: {exc}") from exc
    if table is None:
        raise FixtureError("missing 'table' header")
    if table.match not in ("exact", "contains"):
        raise FixtureError(f"unknown match mode {table.match!r}")
    return table


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_DIR_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("multiplex") / "fixtures"))


def list_fixtures(directory: Path | None = None) -> list[str]:
    directory = directory or fixture_dir()
    return sorted(p.stem for p in Path(directory).glob("*.tbl"))


def load_fixture(name: str, directory: Path | None = None) -> FixtureTable:
    path = Path(directory or fixture_dir()) / f"{name}.tbl"
    if not path.is_file():
        raise FixtureError(f"unknown fixture {name!r}")
    table = parse_fixture(path.read_text(encoding="utf-8"))
    if table.name != name:
        raise FixtureError(f"{path.name} declares table {table.name!r}")
    return table


# -- evaluation -------------------------------------------------------------

@dataclass(frozen=True)
class ExpectedEntry:
    id: str
    sig: tuple[int | None, ...] | None
    c: Fraction | None
    embeds: tuple[tuple[str, Root, int], ...]
    pair: str | None
    tag: PairRelation | None
    unordered: bool


@dataclass(frozen=True)
class ExpectedFragment:
    case: str
    labels: tuple[int, ...]
    kind: MultipletKind | None
    entries: tuple[ExpectedEntry, ...]


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise FixtureError(f"{what} evaluates to non-integer {value}")
    return int(value)


def evaluate_fixture(table: FixtureTable, labels: Sequence[int]) -> list[ExpectedFragment]:
    """Concrete expectations, one fragment per case (zero labels forced per case)."""
    if len(labels) != table.matrix_size - 1:
        raise DomainError(f"fixture {table.name} needs {table.matrix_size - 1} labels, got {len(labels)}")
    fragments = []
    for case in table.cases:
        lab = case.apply(labels)
        entries = []
        for e in case.entries:
            sig = None
            if e.sig is not None:
                sig = tuple(None if t is None else _as_int(evaluate_expression(t, lab), f"{e.id} {t}")
                            for t in e.sig)
            entries.append(ExpectedEntry(
                id=e.id,
                sig=sig,
                c=None if e.c is None else evaluate_expression(e.c, lab),
                embeds=tuple((emb.source, emb.root,
                              _as_int(evaluate_expression(emb.degree, lab), f"{e.id} degree"))
                             for emb in e.embeds),
                pair=e.pair,
                tag=e.tag,
                unordered=e.unordered,
            ))
        fragments.append(ExpectedFragment(case.name, lab, case.kind, tuple(entries)))
    return fragments


# -- verification -----------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    labels: tuple[int, ...]
    case: str
    entry: str
    field: str
    expected: str
    actual: str


@dataclass
class VerifyReport:
    fixture: str
    assignments: list[tuple[int, ...]] = field(default_factory=list)
    counts: dict[str, list[int]] = field(default_factory=dict)
    mismatches: list[Mismatch] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def tally(self, category: str, passed: bool) -> None:
        slot = self.counts.setdefault(category, [0, 0])
        slot[0] += passed
        slot[1] += 1


def default_assignments(rank: int, seed: int = 0, count: int = 5) -> list[tuple[int, ...]]:
    """The all-ones assignment followed by ``count`` seeded random ones."""
    rng = random.Random(seed)
    out = [(1,) * rank]
    out.extend(tuple(rng.randint(1, 12) for _ in range(rank)) for _ in range(count))
    return out


def _matches(sig: tuple[int | None, ...], actual: tuple[int, ...]) -> bool:
    return all(s is None or s == a for s, a in zip(sig, actual))


def _check_fragment(mult: Multiplet, frag: ExpectedFragment, table: FixtureTable,
                    report: VerifyReport) -> None:
    def miss(entry, what, expected, actual):
        report.mismatches.append(Mismatch(frag.labels, frag.case, entry, what, str(expected), str(actual)))

    resolved = {}
    for e in frag.entries:
        if e.sig is None:
            continue
        cands = [v for v in mult.vertices if _matches(e.sig, v.signature)]
        if None in e.sig and e.c is not None and not e.unordered:
            cands = [v for v in cands if v.c == e.c]
        ok = len(cands) == 1
        report.tally("signatures", ok)
        if ok:
            resolved[e.id] = cands[0]
        else:
            miss(e.id, "signature", e.sig, f"{len(cands)} candidate(s)")

    by_id = {e.id: e for e in frag.entries}
    done = set()  # pairs already checked, so each is counted once
    for e in frag.entries:
        v = resolved.get(e.id)
        if v is None:
            continue
        if e.c is not None and not e.unordered:
            report.tally("c", v.c == e.c)
            if v.c != e.c:
                miss(e.id, "c", e.c, v.c)
        if e.unordered and e.pair in resolved and frozenset((e.id, e.pair)) not in done:
            other = by_id[e.pair]
            got = sorted([v.c, resolved[e.pair].c])
            want = sorted([e.c, other.c])
            report.tally("c", got == want)
            if got != want:
                miss(e.id, "c (unordered pair)", want, got)
        first = e.pair is None or frozenset((e.id, e.pair)) not in done
        if e.pair is not None and first:
            partner = resolved.get(e.pair)
            ok = partner is not None and v.ks_partner == partner.id
            report.tally("pairs", ok)
            if not ok:
                miss(e.id, "pair", e.pair, f"vertex {v.ks_partner}")
        if e.tag is not None and first:
            relation = next(p.relation for p in mult.pairs if v.id in (p.a, p.b))
            report.tally("tags", relation == e.tag)
            if relation != e.tag:
                miss(e.id, "tag", e.tag.value, relation.value)
        if e.pair is not None:
            done.add(frozenset((e.id, e.pair)))
        for source, root, degree in e.embeds:
            src = resolved.get(source)
            ok = src is not None and any(
                a.source == src.id and a.target == v.id and a.root == root and a.degree == degree
                for a in mult.arrows)
            report.tally("embeddings", ok)
            if not ok:
                miss(e.id, "embedding", f"{source} -> {e.id} {root} m={degree}", "absent")

    if frag.kind is not None:
        report.tally("kind", mult.kind == frag.kind)
        if mult.kind != frag.kind:
            miss("-", "kind", frag.kind.value, mult.kind.value)
    if table.match == "exact":
        covered = {v.id for v in resolved.values()}
        ok = covered == {v.id for v in mult.vertices}
        report.tally("coverage", ok)
        if not ok:
            miss("-", "vertex set", f"{len(covered)} listed", f"{len(mult.vertices)} generated")


def verify(name: str, labels: Sequence[int] | None = None, seed: int = 0,
           directory: Path | None = None) -> VerifyReport:
    """Generate each sampled multiplet and compare it with fixture ``name``."""
    table = load_fixture(name, directory)
    spec = table.spec
    report = VerifyReport(fixture=name)
    for entry_id, err in table.errata:
        if err.replaces_value:
            report.notes.append(
                f"chi {entry_id} {err.field}: printed value skipped (errata), "
                f"compared under the documented reading; source: {err.literal}")
        else:
            report.notes.append(f"chi {entry_id} {err.field}: {err.literal}")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != spec.rank:
            raise DomainError(f"fixture {name} needs {spec.rank} labels, got {len(labels)}")
        if any(m <= 0 for m in labels):
            bad = next(m for m in labels if m <= 0)
            raise DomainError(f"label {bad} is not a positive integer")
        assignments = [labels]
    else:
        assignments = default_assignments(spec.rank, seed)
    for assignment in assignments:
        report.assignments.append(assignment)
        for frag in evaluate_fixture(table, assignment):
            mult = generate_multiplet(spec, frag.labels)
            _check_fragment(mult, frag, table, report)
    return report


def format_report(report: VerifyReport) -> str:
    lines = [f"fixture {report.fixture}: {len(report.assignments)} label assignment(s)"]
    for labels in report.assignments:
        lines.append(f"  labels {','.join(map(str, labels))}")
    for category, (ok, total) in report.counts.items():
        lines.append(f"  {category}: {ok}/{total} matched")
    for note in report.notes:
        lines.append(f"  note: {note}")
    for m in report.mismatches:
        lines.append(f"  MISMATCH labels {','.join(map(str, m.labels))} case {m.case} "
                     f"chi {m.entry} {m.field}: expected {m.expected}, got {m.actual}")
    lines.append("OK" if report.ok else f"FAILED ({len(report.mismatches)} mismatches)")
    return "\n".join(lines)
