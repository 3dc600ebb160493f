"""Acceptance criteria, one test each.

Every test appends a PASS/FAIL line (with wall time against its budget) that
is printed in the pytest terminal summary.
"""

import itertools
import json
import os
import time

import numpy as np
import pytest

from hermcode.analysis import (
    SECOND_WEIGHT_SCENARIOS,
    Scenario,
    bounds,
    construct_min_weight,
    construct_second_weight_witness,
    enumerate_min_weight_words,
    quadric_census,
)
from hermcode.codes import CHUNK, build_generator_matrix, min_distance, second_weight, weight_distribution
from hermcode.evaluation import chunk_ranges, representatives
from hermcode.gf import make_field
from hermcode.hermitian import LineKind, build_surface
from hermcode.projgeom import PG3
from hermcode.quadric import EXPONENTS, QuadricClass, _evaluator, classify_zero_masks, singular_masks

WORKERS = max(2, min(8, os.cpu_count() or 1))


class Criterion:
    def __init__(self, log, number, title, budget):
        self.log, self.number, self.title, self.budget = log, number, title, budget
        self.failures: list[str] = []
        self.notes: list[str] = []

    def check(self, label, ok):
        if not ok:
            self.failures.append(label)
        return ok

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        if exc_type is not None:
            self.failures.append(f"raised {exc_type.__name__}: {exc}")
        if elapsed > self.budget:
            self.failures.append(f"over budget ({elapsed:.1f}s > {self.budget}s)")
        verdict = "PASS" if not self.failures else "FAIL"
        line = f"[{verdict}] criterion {self.number}: {self.title} ({elapsed:.1f}s, budget {self.budget}s)"
        if self.notes:
            line += " | " + "; ".join(self.notes)
        if self.failures:
            line += " | failed: " + "; ".join(self.failures)
        self.log.append(line)
        print(line)
        if exc_type is None:
            assert not self.failures, line
        return False


# -- shared report builders (also used for the determinism criterion) ----------

def criterion1_report(workers: int) -> str:
    G = build_generator_matrix(build_surface(2), 2)
    return weight_distribution(G, "exhaustive", workers=workers).to_json()


def criterion4_report(workers: int) -> str:
    X = build_surface(3)
    G = build_generator_matrix(X, 2)
    sample = weight_distribution(G, "sampled", samples=10**6, seed=1, workers=workers)
    report = {
        "n": G.n,
        "k": G.k,
        "min_weight": enumerate_min_weight_words(X).to_dict(),
        "witnesses": [construct_second_weight_witness(X, k).to_dict() for k in "ABC"],
        "sample": sample.to_dict(),
    }
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# -- criteria ----------------------------------------------------------------------

def test_criterion_1_t2_exhaustive_pipeline(criteria_log):
    with Criterion(criteria_log, 1, "t=2 h=2 exhaustive weight distribution", 60) as c:
        X = build_surface(2)
        G = build_generator_matrix(X, 2)
        dist = weight_distribution(G, "exhaustive", workers=1)
        reps = (4**10 - 1) // 3
        c.check("n = 45", G.n == 45)
        c.check("k = 10", G.k == 10)
        c.check("349,525 representatives", reps == 349525 and dist.total() == 1 + 3 * reps)
        c.check("d = 22", min_distance(dist) == 22 == bounds(2).min_distance)
        c.check("2160 minimum-weight words", dist.counts[22] == 2160 == bounds(2).min_weight_count)
        c.check("second weight 24", second_weight(dist) == 24 == bounds(2).second_weight)
        c.notes.append(f"d={min_distance(dist)} A_d={dist.counts[22]} w2={second_weight(dist)}")


def test_criterion_2_t2_census(criteria_log):
    with Criterion(criteria_log, 2, "t=2 quadric section census", 120) as c:
        X = build_surface(2)
        r = quadric_census(X, "exhaustive", workers=1)
        c.check("349,525 forms", r.forms == 349525 == sum(r.sizes.values()))
        c.check("max 23", r.max_size == 23)
        c.check("23 attained only by PairBothTangent-SecantLine",
                r.labels_with_size(23) == [Scenario.PAIR_BOTH_TANGENT_SECANT.value])
        c.check("second max 21", r.second_max == 21)
        c.check("22 unattained", 22 not in r.sizes)
        extra = set(r.labels_with_size(21)) - {s.value for s in SECOND_WEIGHT_SCENARIOS}
        c.check(f"no extra attainers of 21 {sorted(extra)}", not extra)
        c.notes.append(f"attainers of 21: {r.labels_with_size(21)}")


def test_criterion_3_t2_linear_code(criteria_log):
    with Criterion(criteria_log, 3, "t=2 h=1 weights", 5) as c:
        G = build_generator_matrix(build_surface(2), 1)
        dist = weight_distribution(G, "exhaustive")
        c.check("k = 4", G.k == 4)
        c.check("nonzero weights {32, 36}", dist.nonzero_weights() == [32, 36])
        c.notes.append(f"weights={dist.counts}")


def test_criterion_4_t3_constructive_suite(criteria_log):
    with Criterion(criteria_log, 4, "t=3 constructive suite and seeded screen", 600) as c:
        X = build_surface(3)
        G = build_generator_matrix(X, 2)
        c.check("n = 280", G.n == 280)
        c.check("k = 10", G.k == 10)
        mw = enumerate_min_weight_words(X)
        c.check("34,020 tangent pairs", mw.pairs == 34020)
        c.check("every tangent-pair quadric has weight 210", mw.weights == {210})
        c.check("pairwise distinct codewords",
                mw.distinct_codewords == mw.pairs == mw.distinct_zero_sets)
        c.check("scaled count 272,160", mw.count == 272160 == bounds(3).min_weight_count)
        p1 = int(X.points[0])
        h1 = X.tangent_plane(p1).index
        for p2 in (int(p) for p in X.points if not X.pg.incidence[h1, p]):
            w = np.count_nonzero(G.codeword(construct_min_weight(X, p1, p2).coeffs))
            if not c.check("construct_min_weight weight 210", w == 210):
                break
        for kind in "ABC":
            w = construct_second_weight_witness(X, kind)
            c.check(f"witness {kind} weight 216", w.weight == 216)
        sample = weight_distribution(G, "sampled", samples=10**6, seed=1, workers=WORKERS)
        ws = sample.nonzero_weights()
        c.check("no sampled weight below 210", ws[0] >= 210)
        c.check("no sampled weight in (210, 216)", not [w for w in ws if 210 < w < 216])
        c.notes.append(f"sample seed=1 n=10^6 lowest weights {ws[:4]}")


def _random_skew_triples(pg, rng, count):
    out = []
    while len(out) < count:
        ls = [pg.line(int(i)) for i in rng.choice(pg.n_lines, size=3, replace=False)]
        if all(pg.skew(a, b) for a, b in itertools.combinations(ls, 2)):
            out.append(ls)
    return out


def test_criterion_5_geometry_suites(criteria_log):
    with Criterion(criteria_log, 5, "geometry invariants at t=2,3", 180) as c:
        rng = np.random.default_rng(2024)
        for t in (2, 3):
            X = build_surface(t)
            pg, q = X.pg, X.q
            c.check(f"t={t} |X|", X.n == (t * t + 1) * (t**3 + 1))
            sizes = set(X.plane_section_sizes.tolist())
            c.check(f"t={t} plane sections", sizes == {t**3 + 1, t**3 + t * t + 1})
            expected = {LineKind.GENERATOR: t + 1, LineKind.TANGENT: t * t - t, LineKind.SECANT: t**4}
            pts = X.points if t == 2 else rng.choice(X.points, size=80, replace=False)
            bad = [p for p in pts if X.line_census(int(p)) != expected]
            c.check(f"t={t} line census at {len(pts)} points", not bad)
            for ls in _random_skew_triples(pg, rng, 12):
                R = pg.transversals(*ls)
                S = pg.complementary_regulus(R)
                ok = (len(R) == q + 1 and len(S) == q + 1
                      and len(set(R.points) | set(S.points)) == (q + 1) ** 2)
                if not c.check(f"t={t} regulus sizes", ok):
                    break
            w = construct_second_weight_witness(X, "B")
            c.check(f"t={t} kind B structure", w.details["structure_ok"]
                    and w.details["x_lines"] == 2 * (t + 1)
                    and w.details["double_points"] == (t + 1) ** 2)
        c.notes.append("80 sampled points at t=3, 12 skew triples per t")


def _oracle_classes(pg, C):
    """Class codes from direct evaluation plus brute-force plane/line containment."""
    F, q = pg.field, pg.q
    add, mul = F.add_table, F.mul_table
    P = pg.points
    mono = np.ones((10, pg.n_points), dtype=np.int64)
    for r, exps in enumerate(EXPONENTS):
        for i, e in enumerate(exps):
            for _ in range(e):
                mono[r] = mul[mono[r], P[:, i]]
    acc = np.zeros((len(C), pg.n_points), dtype=np.int64)
    for r in range(10):
        acc = add[acc, mul[C[:, r][:, None], mono[r][None, :]]]
    Z = acc == 0
    n0 = Z.sum(axis=1)
    Zf = Z.astype(np.float32)
    coplanar = (Zf @ pg.incidence.T.astype(np.float32)).max(axis=1) == n0
    collinear = (Zf @ pg.line_mask.T.astype(np.float32)).max(axis=1) == n0
    lines_in = ((Zf @ pg.line_mask.T.astype(np.float32)) == q + 1).sum(axis=1)
    out = np.full(len(C), -1)
    plane = q * q + q + 1
    out[(n0 == plane) & coplanar] = QuadricClass.REPEATED_PLANE.code
    out[(n0 == plane) & ~coplanar] = QuadricClass.CONE.code
    out[n0 == 2 * q * q + q + 1] = QuadricClass.PLANE_PAIR.code
    out[(n0 == q + 1) & collinear] = QuadricClass.LINE_POINTS.code
    out[n0 == (q + 1) ** 2] = QuadricClass.HYPERBOLIC.code
    out[n0 == q * q + 1] = QuadricClass.ELLIPTIC.code
    # number of lines on each type, as a second fingerprint
    expected_lines = {
        QuadricClass.REPEATED_PLANE.code: q * q + q + 1,
        QuadricClass.PLANE_PAIR.code: 2 * (q * q + q + 1) - 1,
        QuadricClass.LINE_POINTS.code: 1,
        QuadricClass.CONE.code: q + 1,
        QuadricClass.HYPERBOLIC.code: 2 * (q + 1),
        QuadricClass.ELLIPTIC.code: 0,
    }
    lines_ok = np.array([expected_lines.get(int(o), -1) for o in out]) == lines_in
    return out, Z, lines_ok


def test_criterion_6_classifier_oracle(criteria_log):
    with Criterion(criteria_log, 6, "q=4 classifier against brute-force oracle", 120) as c:
        pg = PG3(make_field(2, 2))
        ev = _evaluator(pg)
        ranks = np.array([cls.rank for cls in QuadricClass])
        rng = np.random.default_rng(6)
        total = (4**10 - 1) // 3
        mismatches = scale_changes = sing_bad = zero_bad = lines_bad = unlabelled = 0
        counts = np.zeros(6, dtype=np.int64)
        for s, e in chunk_ranges(total, CHUNK):
            C = representatives(10, 4, s, e)
            Z = ev.zero_mask(C)
            got = classify_zero_masks(pg, Z)
            want, Zo, lines_ok = _oracle_classes(pg, C)
            unlabelled += int((want < 0).sum())
            zero_bad += int((Z != Zo).any(axis=1).sum())
            mismatches += int((got != want).sum())
            lines_bad += int((~lines_ok).sum())
            lam = rng.integers(1, 4, size=len(C))
            scaled = pg.field.mul_table[lam[:, None], C]
            scale_changes += int((classify_zero_masks(pg, ev.zero_mask(scaled)) != got).sum())
            has_sing = singular_masks(pg, Z).any(axis=1)
            sing_bad += int((has_sing != (ranks[got] < 4)).sum())
            counts += np.bincount(got, minlength=6)
        c.check("oracle labels every form", unlabelled == 0)
        c.check("zero sets agree", zero_bad == 0)
        c.check(f"classify agrees with oracle ({mismatches} mismatches)", mismatches == 0)
        c.check("line-content fingerprint agrees", lines_bad == 0)
        c.check(f"classify(lambda f) = classify(f) ({scale_changes} changes)", scale_changes == 0)
        c.check(f"singular points iff rank < 4 ({sing_bad} bad)", sing_bad == 0)
        c.check("all six types occur", bool(np.all(counts > 0)))
        c.notes.append("counts " + ", ".join(f"{k.label}={int(n)}" for k, n in zip(QuadricClass, counts)))


def test_criterion_7_determinism(criteria_log):
    with Criterion(criteria_log, 7, "byte-identical reports for 1, 2, 8 workers", 900) as c:
        r1 = {w: criterion1_report(w) for w in (1, 2, 8)}
        c.check("criterion 1 reports identical", len(set(r1.values())) == 1)
        r4 = {w: criterion4_report(w) for w in (1, 2, 8)}
        c.check("criterion 4 reports identical", len(set(r4.values())) == 1)
        c.notes.append(f"report sizes {len(r1[1])} and {len(r4[1])} bytes")
