"""
Acceptance criteria 1-9, each reported as one PASS/FAIL line.

Run under pytest (lines appear in the live output) or directly with
``python tests/test_acceptance.py``.
"""
import json
import os
import random
import subprocess
import sys
import tempfile
from contextlib import nullcontext
from fractions import Fraction
from pathlib import Path

import pytest

from multiplex import formats
from multiplex.catalog import FIXTURE_DIR_ENV, load_fixture, verify
from multiplex.exceptions import DomainError
from multiplex.matrixreal import check_sl2_triples, parabolic_dimensions
from multiplex.multiplet import (MultipletKind, OperatorKind, PairRelation, conformal_shift,
                                 generate_multiplet, m_rep_dimension)
from multiplex.rootsys import Root, dot_reflect, signature_to_eps
from multiplex.weyl import ParabolicSpec, multiplet_size

CASES = 1000
SEED = 1729


class Criterion:
    """Collects named sub-checks and prints a single verdict line."""

    def __init__(self, number, title):
        self.number, self.title = number, title
        self.failed = []
        self.count = 0

    def check(self, ok, what):
        self.count += 1
        if not ok:
            self.failed.append(what)
        return ok

    def finish(self, capsys=None):
        verdict = "PASS" if not self.failed else "FAIL"
        line = f"criterion {self.number}: {verdict}  {self.title} ({self.count - len(self.failed)}/{self.count} checks)"
        if self.failed:
            line += "; failed: " + "; ".join(self.failed[:5])
        with capsys.disabled() if capsys else nullcontext():
            print("\n" + line)
        assert not self.failed, line


def _c_direct(spec, sig):
    y = signature_to_eps(sig)
    k = spec.removed_index
    return -Fraction((y[k - 1] - y[k]) + (y[0] - y[-1]), 2)


def _random_multiplets(rng, count):
    """Equal-block multiplets from N in {2,4,6,8}, zero labels allowed."""
    out = []
    while len(out) < count:
        n = rng.choice((2, 4, 6, 8))
        labels = tuple(0 if rng.random() < 0.2 else rng.randint(1, 20) for _ in range(n - 1))
        try:
            out.append(generate_multiplet(ParabolicSpec(n, n // 2), labels))
        except DomainError:
            continue
    return out


def run_1(capsys=None):
    c = Criterion(1, "multiplet sizes 6, 20, 70")
    for n, size in ((4, 6), (6, 20), (8, 70)):
        spec = ParabolicSpec(n, n // 2)
        c.check(multiplet_size(spec) == size, f"N_M(sl{n}) = {multiplet_size(spec)}")
        got = len(generate_multiplet(spec, tuple(range(1, n))))
        c.check(got == size, f"generated sl{n} size {got}")
    c.finish(capsys)


def run_2(capsys=None):
    c = Criterion(2, "sl(4) main multiplet against the sextet tables")
    main = verify("sl4-main")
    dual = verify("sl4-dual")
    for report in (main, dual):
        c.check(report.ok, f"{report.fixture}: {len(report.mismatches)} mismatches")
        c.check(len(report.assignments) == 6 and report.assignments[0] == (1, 1, 1),
                f"{report.fixture}: assignments")
    c.check(main.counts.get("signatures") == [36, 36], f"signatures {main.counts.get('signatures')}")
    c.check(main.counts.get("embeddings") == [36, 36], f"shift relations {main.counts.get('embeddings')}")
    c.check(main.counts.get("pairs") == [18, 18], f"pairs {main.counts.get('pairs')}")
    # four signed c values plus one unordered comparison for the chi'' pair, per assignment
    c.check(dual.counts.get("c") == [30, 30], f"c values {dual.counts.get('c')}")
    unordered = [e for e in load_fixture("sl4-dual").entries if e.unordered]
    c.check(len(unordered) == 2, "chi'' pair compared unordered")
    c.finish(capsys)


def run_3(capsys=None):
    c = Criterion(3, "sl(6) main multiplet: 20 signatures, 19 embeddings, 10 c formulas, 21-n pairing")
    main = verify("sl6-main")
    dual = verify("sl6-dual")
    for report in (main, dual):
        c.check(report.ok, f"{report.fixture}: {len(report.mismatches)} mismatches")
    c.check(main.counts.get("signatures") == [120, 120], f"signatures {main.counts.get('signatures')}")
    c.check(main.counts.get("embeddings") == [114, 114], f"embeddings {main.counts.get('embeddings')}")
    c.check(dual.counts.get("c") == [120, 120], f"c values {dual.counts.get('c')}")
    table = load_fixture("sl6-main")
    c.check(all(e.pair == str(21 - int(e.id)) for e in table.entries), "fixture pairs are 21-n")
    c.check(main.counts.get("pairs") == [60, 60], f"pairs {main.counts.get('pairs')}")
    c.finish(capsys)


def run_4(capsys=None):
    c = Criterion(4, "sl(6) reduced multiplets: blocks 1,13,14,15,135,2,24,25,3")
    for block in ("1", "13", "14", "15", "135", "2", "24", "25", "3"):
        report = verify(f"sl6-reduced-{block}")
        c.check(report.ok, f"block {block}: {len(report.mismatches)} mismatches")
    singlet = generate_multiplet(ParabolicSpec(6, 3), (0, 4, 0, 6, 0))
    c.check(singlet.kind is MultipletKind.SINGLET and singlet.vertices[0].c == 0, "135 is a c=0 singlet")

    def has_flip(zeros):
        labels = tuple(0 if i in zeros else m for i, m in enumerate((3, 4, 5, 6, 7), start=1))
        return any(p.relation is PairRelation.FLIP for p in generate_multiplet(ParabolicSpec(6, 3), labels).pairs)

    c.check(has_flip({1, 5}), "flip tag on the c=0 pair of block 15")
    # the criterion places the flip pair in block 13; its only pair has c = +-m5/2
    c.check(has_flip({1, 3}), "flip tag in block 13")
    c.finish(capsys)


def run_5(capsys=None):
    c = Criterion(5, "sl(8): 70 vertices, 35 pair rows, errata logged")
    spec = ParabolicSpec(8, 4)
    c.check(len(generate_multiplet(spec, (1,) * 7)) == 70, "70 vertices")
    report = verify("sl8-pairs")
    c.check(report.ok, f"{len(report.mismatches)} mismatches")
    c.check(report.counts.get("signatures") == [420, 420], f"signatures {report.counts.get('signatures')}")
    c.check(report.counts.get("c") == [420, 420], f"c {report.counts.get('c')}")
    rows = {e.id.rstrip("+-") for e in load_fixture("sl8-pairs").entries}
    c.check(len(rows) == 35, f"{len(rows)} rows")
    table = load_fixture("sl8-pairs")
    value_errata = [(i, e) for i, e in table.errata if e.replaces_value]
    skipped = [n for n in report.notes if "skipped (errata)" in n]
    c.check(value_errata and len(skipped) == len(value_errata), "every value erratum logged as skipped")
    c.finish(capsys)


def run_6(capsys=None):
    c = Criterion(6, "d'Alembertian degeneration for labels (n,0,n)")
    for n in (1, 2, 3):
        mult = generate_multiplet(ParabolicSpec(4, 2), (n, 0, n))
        c.check(mult.kind is MultipletKind.REDUCED and len(mult) == 2, f"n={n}: doublet")
        c.check(all(v.m_left == (n,) and v.m_right == (n,) for v in mult.vertices), f"n={n}: middle doublet")
        degs = mult.degenerations
        ok = (len(degs) == 1 and degs[0].operator_kind is OperatorKind.DEGENERATE_KS
              and degs[0].exponent == n and degs[0].dalembertian_power == n)
        c.check(ok, f"n={n}: exponent {degs[0].exponent if degs else None}")
    c.finish(capsys)


def run_7(capsys=None):
    c = Criterion(7, f"property suite, {CASES} randomized cases each")
    rng = random.Random(SEED)
    bad = 0
    for _ in range(CASES):
        rank = rng.randint(1, 9)
        sig = tuple(rng.randint(-40, 40) for _ in range(rank))
        p = rng.randint(1, rank)
        beta = Root(p, rng.randint(p, rank))
        bad += dot_reflect(dot_reflect(sig, beta), beta) != sig
    c.check(bad == 0, f"dot-reflection involution: {bad} failures")

    pool = _random_multiplets(rng, CASES)
    counters = dict.fromkeys(("partner", "blocks", "contains", "reverse", "dc"), 0)
    for mult in pool:
        k = mult.spec.removed_index
        for v in mult.vertices:
            p = mult.partner(v.id)
            if mult.partner(p.id) != v or p.c != -v.c or (p.id == v.id and v.c != 0):
                counters["partner"] += 1
            if (m_rep_dimension(v.m_left), m_rep_dimension(v.m_right)) != \
                    (m_rep_dimension(p.m_right), m_rep_dimension(p.m_left)):
                counters["blocks"] += 1
        arrows = {(a.source, a.target, a.degree) for a in mult.arrows}
        for a in mult.arrows:
            if not a.root.contains(k) or a.source == a.target:
                counters["contains"] += 1
            image = (mult.vertex(a.target).ks_partner, mult.vertex(a.source).ks_partner, a.degree)
            if image not in arrows:
                counters["reverse"] += 1
            src, dst = mult.vertex(a.source), mult.vertex(a.target)
            shift = conformal_shift(mult.spec, a.root, a.degree)
            if _c_direct(mult.spec, dst.signature) - _c_direct(mult.spec, src.signature) != shift or shift < 0:
                counters["dc"] += 1
    for name, n in counters.items():
        c.check(n == 0, f"{name}: {n} failures")
    c.finish(capsys)


def run_8(capsys=None):
    c = Criterion(8, "matrix realization: sl(2) triples and parabolic dimensions")
    for n in range(2, 9):
        report = check_sl2_triples(n)
        c.check(len(report) == n - 1 and all(report.values()), f"sl2 triples N={n}")
        for k in range(1, n):
            d = parabolic_dimensions(ParabolicSpec(n, k))
            c.check(d.m_dim + d.a_dim + 2 * d.n_dim == n * n - 1, f"dims N={n} k={k}")
    c.finish(capsys)


def run_9(capsys=None):
    c = Criterion(9, "CLI contract: JSON round trip, DOT counts, exit statuses")
    rng = random.Random(SEED + 9)
    for mult in _random_multiplets(rng, 200):
        if formats.from_json(formats.to_json(mult)) != mult:
            c.check(False, f"round trip {mult.inducing_labels}")
            break
        body = formats.to_dot(mult)
        lines = body.splitlines()
        nodes = sum(1 for l in lines if l.lstrip().startswith("v") and "[label=" in l and "->" not in l)
        edges = sum(1 for l in lines if "->" in l and not l.lstrip().startswith("//"))
        if (nodes, edges) != (len(mult.vertices), len(mult.arrows)) or body.count("{") != body.count("}"):
            c.check(False, f"dot counts {mult.inducing_labels}")
            break
    else:
        c.check(True, "json and dot over 200 multiplets")

    def run(*args, env=None):
        return subprocess.run([sys.executable, "-m", "multiplex", *args],
                              capture_output=True, text=True, encoding="utf-8", env=env)

    ok = run("compute", "--matrix-size", "6", "--remove", "3", "--labels", "1,1,1,1,1", "--format", "json")
    c.check(ok.returncode == 0 and len(json.loads(ok.stdout)["vertices"]) == 20, "exit 0")
    with tempfile.TemporaryDirectory() as tmp:
        Path(tmp, "off.tbl").write_text("table off N 4 k 2\nchi 1 sig m1,m2,m3 c 5\n", encoding="utf-8")
        env = dict(os.environ, **{FIXTURE_DIR_ENV: tmp})
        c.check(run("verify", "--fixture", "off", env=env).returncode == 1, "exit 1 on mismatch")
    c.check(run("compute", "--matrix-size", "4").returncode == 2, "exit 2 on usage")
    c.check(run("verify", "--fixture", "missing").returncode == 2, "exit 2 on unknown fixture")
    bad = run("compute", "--matrix-size", "4", "--remove", "2", "--labels", "1,-3,1")
    c.check(bad.returncode == 3 and "-3" in bad.stderr, "exit 3 naming the value")
    c.finish(capsys)


CRITERIA = [run_1, run_2, run_3, run_4, run_5, run_6, run_7, run_8, run_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 10)])
def test_acceptance(criterion, capsys):
    criterion(capsys)


if __name__ == "__main__":
    failures = 0
    for criterion in CRITERIA:
        try:
            criterion()
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
