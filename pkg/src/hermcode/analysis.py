"""Quadric sections of the Hermitian surface: bounds, scenario census, witnesses.

For a quadric Q the number ``|X ∩ Q|`` is the coweight of the codeword of
its form, so the largest section sizes give the minimum distance and the
second weight of C_2(X).  This module sorts quadrics into geometric
scenarios (which type of quadric, how it sits against X), checks each
scenario's size bound by sweeping forms, and builds explicit forms that
reach the two largest sizes.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np

from . import __version__
from .codes import CHUNK, DEFAULT_BUDGET, sample_coefficients
from .errors import BudgetExceeded, InvariantViolation
from .evaluation import chunk_ranges, representatives
from .hermitian import HermitianSurface, LineKind
from .projgeom import Regulus
from .quadric import (
    QuadraticForm,
    QuadricClass,
    _evaluator,
    classify,
    classify_zero_masks,
    fit_forms,
    line_of_mask,
    plane_of_mask,
    product_of_planes,
    zero_set,
)

__all__ = [
    "Bounds",
    "bounds",
    "Scenario",
    "scenario_bound",
    "intersection_size",
    "classify_scenario",
    "hyperbolic_reguli",
    "label_forms",
    "CensusReport",
    "quadric_census",
    "construct_min_weight",
    "MinWeightReport",
    "enumerate_min_weight_words",
    "min_weight_forms",
    "SecondWeightWitness",
    "construct_second_weight_witness",
]


@dataclass(frozen=True)
class Bounds:
    t: int
    h: int
    s: int
    s2: int
    sorensen: int
    lachaud: int

    @property
    def q(self) -> int:
        return self.t * self.t

    @property
    def n(self) -> int:
        return (self.t**2 + 1) * (self.t**3 + 1)

    @property
    def min_distance(self) -> int:
        return self.n - self.s

    @property
    def second_weight(self) -> int:
        return self.n - self.s2

    @property
    def min_weight_count(self) -> int:
        t = self.t
        return (t * t - 1) * (t**5 + t**3 + t * t + 1) * t**5 // 2


def bounds(t: int, h: int = 2) -> Bounds:
    if t < 2 or h < 1:
        raise ValueError("need t >= 2 and h >= 1")
    return Bounds(
        t=t,
        h=h,
        s=2 * (t**3 + t * t - t) + t + 1,
        s2=2 * t**3 + t * t + 1,
        sorensen=h * (t**3 + t * t - t) + t + 1,
        lachaud=h * (t**3 + t * t + t + 1),
    )


class Scenario(enum.Enum):
    REPEATED_PLANE_TANGENT = "RepeatedPlaneTangent"
    REPEATED_PLANE_NON_TANGENT = "RepeatedPlaneNonTangent"
    LINE_QUADRIC = "LineQuadric"
    PAIR_NONE_TANGENT = "PairNoneTangent"
    PAIR_ONE_TANGENT_SECANT = "PairOneTangent-SecantLine"
    PAIR_ONE_TANGENT_TANGENT = "PairOneTangent-TangentLine"
    PAIR_BOTH_TANGENT_SECANT = "PairBothTangent-SecantLine"
    PAIR_BOTH_TANGENT_GENERATOR = "PairBothTangent-GeneratorLine"
    CONE_NO_GENERATOR = "ConeNoGenerator"
    CONE_WITH_GENERATOR = "ConeWithGenerator"
    HYPERBOLIC_3 = "Hyperbolic-3+Generators"
    HYPERBOLIC_2 = "Hyperbolic-2Generators"
    HYPERBOLIC_1 = "Hyperbolic-1Generator"
    HYPERBOLIC_0 = "Hyperbolic-0Generators"
    ELLIPTIC_EMPTY = "Elliptic-Empty"
    ELLIPTIC_NON_EMPTY = "Elliptic-NonEmpty"
    # configurations that cannot occur; kept so that every form has a label
    PAIR_ONE_TANGENT_GENERATOR = "PairOneTangent-GeneratorLine"
    PAIR_BOTH_TANGENT_TANGENT = "PairBothTangent-TangentLine"

    def __str__(self) -> str:
        return self.value


SCENARIOS = list(Scenario)
_IMPOSSIBLE = {Scenario.PAIR_ONE_TANGENT_GENERATOR, Scenario.PAIR_BOTH_TANGENT_TANGENT}
SECOND_WEIGHT_SCENARIOS = {
    Scenario.PAIR_BOTH_TANGENT_GENERATOR,
    Scenario.HYPERBOLIC_3,
    Scenario.PAIR_ONE_TANGENT_TANGENT,
}


def scenario_bound(scenario: Scenario, t: int) -> tuple[str, int]:
    """``("eq", v)`` if every section in the scenario has size v, else ``("le", v)``."""
    b = bounds(t)
    t2, t3 = t * t, t**3
    table = {
        Scenario.REPEATED_PLANE_TANGENT: ("eq", t3 + t2 + 1),
        Scenario.REPEATED_PLANE_NON_TANGENT: ("eq", t3 + 1),
        Scenario.LINE_QUADRIC: ("le", t2 + 1),
        Scenario.PAIR_NONE_TANGENT: ("le", 2 * (t3 + 1)),
        Scenario.PAIR_ONE_TANGENT_SECANT: ("eq", 2 * t3 + t2 - t + 1),
        Scenario.PAIR_ONE_TANGENT_TANGENT: ("eq", b.s2),
        Scenario.PAIR_BOTH_TANGENT_SECANT: ("eq", b.s),
        Scenario.PAIR_BOTH_TANGENT_GENERATOR: ("eq", b.s2),
        Scenario.CONE_NO_GENERATOR: ("le", (t + 1) * (t2 + 1)),
        Scenario.CONE_WITH_GENERATOR: ("le", 2 * t3 + 1),
        Scenario.HYPERBOLIC_3: ("eq", b.s2),
        Scenario.HYPERBOLIC_2: ("le", t3 + 3 * t2 - t + 1),
        Scenario.HYPERBOLIC_1: ("le", t3 + 2 * t2 + 1),
        Scenario.HYPERBOLIC_0: ("le", t3 + t2 + t + 1),
        Scenario.ELLIPTIC_EMPTY: ("eq", 0),
        Scenario.ELLIPTIC_NON_EMPTY: ("le", 1 + t2 * (2 * (t + 1) - 1)),
        Scenario.PAIR_ONE_TANGENT_GENERATOR: ("le", -1),
        Scenario.PAIR_BOTH_TANGENT_TANGENT: ("le", -1),
    }
    return table[scenario]


def _within(scenario: Scenario, t: int, size: int) -> bool:
    kind, v = scenario_bound(scenario, t)
    return size == v if kind == "eq" else size <= v


def intersection_size(f: QuadraticForm, X: HermitianSurface) -> int:
    Z = zero_set(f, X.pg).mask
    return int(np.count_nonzero(Z & X.mask))


# -- per-form scenario, built from the geometry ---------------------------------

def _contained_planes(pg, Z: np.ndarray) -> np.ndarray:
    return np.flatnonzero(~(pg.incidence & ~Z).any(axis=1))


def _pair_scenario(X: HermitianSurface, Z: np.ndarray) -> Scenario:
    pg = X.pg
    planes = _contained_planes(pg, Z)
    if len(planes) != 2:
        raise InvariantViolation(f"plane pair contains {len(planes)} planes")
    h1, h2 = (int(h) for h in planes)
    common = line_of_mask(pg, pg.incidence[h1] & pg.incidence[h2])
    kind = X.classify_line(common)
    tangent = X.is_tangent_plane(h1) + X.is_tangent_plane(h2)
    if tangent == 0:
        return Scenario.PAIR_NONE_TANGENT
    if tangent == 1:
        return {
            LineKind.SECANT: Scenario.PAIR_ONE_TANGENT_SECANT,
            LineKind.TANGENT: Scenario.PAIR_ONE_TANGENT_TANGENT,
            LineKind.GENERATOR: Scenario.PAIR_ONE_TANGENT_GENERATOR,
        }[kind]
    return {
        LineKind.SECANT: Scenario.PAIR_BOTH_TANGENT_SECANT,
        LineKind.GENERATOR: Scenario.PAIR_BOTH_TANGENT_GENERATOR,
        LineKind.TANGENT: Scenario.PAIR_BOTH_TANGENT_TANGENT,
    }[kind]


def _repeated_plane_scenario(X: HermitianSurface, Z: np.ndarray) -> Scenario:
    h = plane_of_mask(X.pg, Z)
    if h is None:
        raise InvariantViolation("repeated plane zero set is not a plane")
    if X.is_tangent_plane(h):
        return Scenario.REPEATED_PLANE_TANGENT
    return Scenario.REPEATED_PLANE_NON_TANGENT


def hyperbolic_reguli(f: QuadraticForm, X: HermitianSurface) -> tuple[Regulus, Regulus]:
    """The two systems of lines of a hyperbolic quadric.

    Three pairwise skew lines on the quadric are picked in line order; their
    transversals form one regulus and the transversals of that regulus give
    back the system the three lines came from.
    """
    pg = X.pg
    Z = zero_set(f, pg).mask
    on_q = np.flatnonzero(Z[pg.line_points].all(axis=1))
    lines = [pg.line(int(i)) for i in on_q]
    triple = []
    for line in lines:
        if all(pg.skew(line, other) for other in triple):
            triple.append(line)
            if len(triple) == 3:
                break
    if len(triple) < 3:
        raise InvariantViolation("hyperbolic quadric without three skew lines")
    other = pg.transversals(*triple)
    same = pg.complementary_regulus(other)
    return same, other


def classify_scenario(f: QuadraticForm, X: HermitianSurface) -> Scenario:
    pg = X.pg
    cls = classify(f, pg)
    Z = zero_set(f, pg).mask
    if cls is QuadricClass.REPEATED_PLANE:
        return _repeated_plane_scenario(X, Z)
    if cls is QuadricClass.LINE_POINTS:
        return Scenario.LINE_QUADRIC
    if cls is QuadricClass.PLANE_PAIR:
        return _pair_scenario(X, Z)
    if cls is QuadricClass.CONE:
        on_q = np.flatnonzero(Z[pg.line_points].all(axis=1))
        if any(X.classify_line(int(i)) is LineKind.GENERATOR for i in on_q):
            return Scenario.CONE_WITH_GENERATOR
        return Scenario.CONE_NO_GENERATOR
    if cls is QuadricClass.HYPERBOLIC:
        best = 0
        for regulus in hyperbolic_reguli(f, X):
            n_gen = sum(X.classify_line(l.index) is LineKind.GENERATOR for l in regulus)
            best = max(best, n_gen)
        return [Scenario.HYPERBOLIC_0, Scenario.HYPERBOLIC_1,
                Scenario.HYPERBOLIC_2, Scenario.HYPERBOLIC_3][min(best, 3)]
    if np.any(Z & X.mask):
        return Scenario.ELLIPTIC_NON_EMPTY
    return Scenario.ELLIPTIC_EMPTY


# -- batched labelling for sweeps -------------------------------------------------

@lru_cache(maxsize=None)
def _generator_tables(X: HermitianSurface):
    gens = X.generator_indices
    pos = X.position[X.pg.line_points[gens]]  # generator points as columns of X
    lm = X.pg.line_mask[gens].astype(np.int64)
    meets = (lm @ lm.T) > 0
    same_or_self = ~meets | np.eye(len(gens), dtype=bool)
    return pos, meets & ~np.eye(len(gens), dtype=bool), same_or_self


@dataclass
class LabelledBatch:
    sizes: np.ndarray
    labels: np.ndarray
    bezout_checked: int = 0
    bezout_violations: int = 0


def label_forms(X: HermitianSurface, C: np.ndarray, bezout_limit: int | None = None) -> LabelledBatch:
    """Section sizes and scenario codes (index into ``list(Scenario)``) for a batch.

    Elliptic quadrics meeting X also get the plane-section bound checked:
    every plane cutting the quadric in more than one point meets ``X ∩ Q``
    in at most 2(t+1) points.  ``bezout_limit`` caps how many rows per batch
    get that check (all of them when None).
    """
    pg, t = X.pg, X.t
    Z = _evaluator(pg).zero_mask(C)
    ZX = Z[:, X.points]
    sizes = ZX.sum(axis=1)
    cls = classify_zero_masks(pg, Z)
    labels = np.full(len(C), -1, dtype=np.int64)
    code = {s: i for i, s in enumerate(SCENARIOS)}

    for r in np.flatnonzero(cls == QuadricClass.REPEATED_PLANE.code):
        labels[r] = code[_repeated_plane_scenario(X, Z[r])]
    labels[cls == QuadricClass.LINE_POINTS.code] = code[Scenario.LINE_QUADRIC]
    for r in np.flatnonzero(cls == QuadricClass.PLANE_PAIR.code):
        labels[r] = code[_pair_scenario(X, Z[r])]

    gen_pos, gen_meets, gen_same = _generator_tables(X)
    contains = ZX[:, gen_pos].all(axis=2)  # (B, generators)
    has_gen = contains.any(axis=1)

    cone = cls == QuadricClass.CONE.code
    labels[cone & has_gen] = code[Scenario.CONE_WITH_GENERATOR]
    labels[cone & ~has_gen] = code[Scenario.CONE_NO_GENERATOR]

    hyp = np.flatnonzero(cls == QuadricClass.HYPERBOLIC.code)
    if len(hyp):
        cont = contains[hyp]
        first = cont.argmax(axis=1)
        # lines of one regulus are pairwise skew, lines of opposite reguli meet
        n_same = (cont & gen_same[first]).sum(axis=1)
        n_other = (cont & gen_meets[first]).sum(axis=1)
        best = np.where(cont.any(axis=1), np.maximum(n_same, n_other), 0)
        buckets = np.array([code[Scenario.HYPERBOLIC_0], code[Scenario.HYPERBOLIC_1],
                            code[Scenario.HYPERBOLIC_2], code[Scenario.HYPERBOLIC_3]])
        labels[hyp] = buckets[np.minimum(best, 3)]

    ell = cls == QuadricClass.ELLIPTIC.code
    labels[ell & (sizes == 0)] = code[Scenario.ELLIPTIC_EMPTY]
    met = np.flatnonzero(ell & (sizes > 0))
    labels[met] = code[Scenario.ELLIPTIC_NON_EMPTY]
    if bezout_limit is not None:
        met = met[:bezout_limit]
    checked = violations = 0
    if len(met):
        inc = pg.incidence.astype(np.float32)
        on_q = Z[met].astype(np.float32) @ inc.T
        on_xq = ZX[met].astype(np.float32) @ inc[:, X.points].T
        bad = (on_q != 1) & (on_xq > 2 * (t + 1))
        checked = len(met)
        violations = int(bad.any(axis=1).sum())

    if np.any(labels < 0):
        raise InvariantViolation("form without a scenario label")
    return LabelledBatch(sizes, labels, checked, violations)


@dataclass
class CensusReport:
    t: int
    mode: str
    forms: int
    histograms: dict[str, dict[int, int]]
    s: int
    s2: int
    seed: int | None = None
    samples: int | None = None
    top_forms: list[tuple[int, ...]] = dc_field(default_factory=list)
    bezout_checked: int = 0
    bezout_violations: int = 0
    min_weight_match: bool | None = None

    @property
    def sizes(self) -> Counter:
        c: Counter = Counter()
        for hist in self.histograms.values():
            c.update(hist)
        return c

    @property
    def max_size(self) -> int:
        return max(self.sizes)

    @property
    def second_max(self) -> int:
        return max(s for s in self.sizes if s != self.max_size)

    def labels_with_size(self, size: int) -> list[str]:
        return sorted(l for l, h in self.histograms.items() if h.get(size))

    def gap_sizes(self) -> list[int]:
        return sorted(s for s in self.sizes if self.s2 < s < self.s or s > self.s)

    def scenario_violations(self) -> list[str]:
        out = []
        for label, hist in self.histograms.items():
            sc = Scenario(label)
            for size in hist:
                if not _within(sc, self.t, size):
                    kind, v = scenario_bound(sc, self.t)
                    out.append(f"{label}: size {size} breaks {kind} {v}")
        return out

    def verdicts(self) -> dict[str, bool | None]:
        exhaustive = self.mode == "exhaustive"
        top = self.labels_with_size(self.s)
        second = self.labels_with_size(self.s2)
        dichotomy = not self.gap_sizes()
        if exhaustive:
            dichotomy = dichotomy and self.max_size == self.s and self.second_max == self.s2
        top_ok = set(top) <= {Scenario.PAIR_BOTH_TANGENT_SECANT.value}
        second_ok = set(second) <= {s.value for s in SECOND_WEIGHT_SCENARIOS}
        impossible = any(self.histograms.get(s.value) for s in _IMPOSSIBLE)
        out = {
            "largest_sizes": dichotomy and top_ok and not impossible,
            "min_weight_forms": None,
            "second_size_configurations": second_ok and (not exhaustive or bool(second)),
            "scenario_bounds": not self.scenario_violations(),
            "elliptic_plane_bound": self.bezout_violations == 0,
        }
        if self.min_weight_match is not None:
            out["min_weight_forms"] = self.min_weight_match
        return out

    def passed(self) -> bool:
        return all(v is not False for v in self.verdicts().values())

    def to_dict(self) -> dict:
        per_label = {}
        for label in (s.value for s in SCENARIOS):
            hist = self.histograms.get(label)
            if not hist:
                continue
            per_label[label] = {
                "count": sum(hist.values()),
                "min": min(hist),
                "max": max(hist),
                "histogram": {str(k): hist[k] for k in sorted(hist)},
            }
        d = {
            "tool": f"hermcode {__version__}",
            "t": self.t,
            "h": 2,
            "mode": self.mode,
        }
        if self.mode == "sampled":
            d["seed"] = self.seed
            d["samples"] = self.samples
        d.update({
            "forms": self.forms,
            "s": self.s,
            "s2": self.s2,
            "max": self.max_size,
            "second_max": self.second_max,
            "max_attained_by": self.labels_with_size(self.max_size),
            "s_attained_by": self.labels_with_size(self.s),
            "s2_attained_by": self.labels_with_size(self.s2),
            "gap_sizes": self.gap_sizes(),
            "s_attainers": len(self.top_forms),
            "scenario_bound_violations": self.scenario_violations(),
            "bezout": {"checked": self.bezout_checked, "violations": self.bezout_violations},
            "per_label": per_label,
            "verdicts": self.verdicts(),
        })
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _census_chunk(X: HermitianSurface, C: np.ndarray, s: int, bezout_limit):
    batch = label_forms(X, C, bezout_limit)
    hist = np.zeros((len(SCENARIOS), X.n + 1), dtype=np.int64)
    np.add.at(hist, (batch.labels, batch.sizes), 1)
    top = [tuple(int(c) for c in row) for row in C[batch.sizes == s]]
    return hist, top, batch.bezout_checked, batch.bezout_violations


def quadric_census(X: HermitianSurface, mode: str = "exhaustive", *, samples: int = 10**6,
                   seed: int | None = None, workers: int = 1, budget: int = DEFAULT_BUDGET,
                   bezout_limit: int | None = None, check_min_weight: bool = True) -> CensusReport:
    """Sweep quadratic forms and tabulate ``|X ∩ Q|`` per scenario.

    Exhaustive mode visits one form per projective class.  The report is a
    pure function of its arguments: chunks are fixed-size and merged in
    order, so ``workers`` only changes wall time.
    """
    b = bounds(X.t)
    q = X.q
    if mode == "exhaustive":
        total = (q**10 - 1) // (q - 1)
        if total > budget:
            raise BudgetExceeded(f"{total} representatives exceed the budget of {budget}")
        def make(task):
            s0, e0 = task
            return representatives(10, q, s0, e0)
        tasks = chunk_ranges(total, CHUNK)
    elif mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode needs a seed")
        total = samples
        def make(task):
            i, (s0, e0) = task
            return sample_coefficients(seed, i, e0 - s0, 10, q)
        tasks = list(enumerate(chunk_ranges(samples, CHUNK)))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    def work(task):
        return _census_chunk(X, make(task), b.s, bezout_limit)

    if workers <= 1:
        results = map(work, tasks)
    else:
        pool = ThreadPoolExecutor(max_workers=workers)
        results = pool.map(work, tasks)
    hist = np.zeros((len(SCENARIOS), X.n + 1), dtype=np.int64)
    top: list = []
    checked = violations = 0
    for h, tp, c, v in results:
        hist += h
        top.extend(tp)
        checked += c
        violations += v
    if workers > 1:
        pool.shutdown()

    histograms = {}
    for i, sc in enumerate(SCENARIOS):
        nz = np.flatnonzero(hist[i])
        if len(nz):
            histograms[sc.value] = {int(k): int(hist[i, k]) for k in nz}

    report = CensusReport(X.t, mode, total, histograms, b.s, b.s2,
                          seed=seed if mode == "sampled" else None,
                          samples=samples if mode == "sampled" else None,
                          top_forms=top, bezout_checked=checked, bezout_violations=violations)
    if check_min_weight:
        expected = min_weight_forms(X)
        found = {QuadraticForm(X.field, f).normalized().coeffs for f in top}
        if mode == "exhaustive":
            report.min_weight_match = found == expected and len(top) == len(found)
        else:
            report.min_weight_match = found <= expected
    return report


# -- constructions ------------------------------------------------------------------

def construct_min_weight(X: HermitianSurface, p1: int, p2: int) -> QuadraticForm:
    """Product of the tangent planes at two points of X not on each other's tangent plane."""
    h1 = X.tangent_plane(p1)
    if X.pg.incidence[h1.index, p2] or p1 == p2:
        raise ValueError("second point lies on the tangent plane of the first")
    return product_of_planes(X.field, h1, X.tangent_plane(p2))


def _valid_pairs(X: HermitianSurface) -> np.ndarray:
    """(pairs, 2) positions in X of unordered point pairs off each other's tangent plane."""
    T = X.pg.incidence[X.tangent_plane_index][:, X.points]  # T[i, j]: P_j on tangent plane of P_i
    i, j = np.nonzero(np.triu(~T, k=1))
    return np.stack([i, j], axis=1)


def _plane_products(X: HermitianSurface, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Coefficients (10 per row) of products of linear forms, rows of A times rows of B."""
    from .quadric import COEFF_PAIRS
    add, mul = X.field.add_table, X.field.mul_table
    out = np.zeros((len(A), 10), dtype=np.int64)
    for k, (i, j) in enumerate(COEFF_PAIRS):
        if i == j:
            out[:, k] = mul[A[:, i], B[:, i]]
        else:
            out[:, k] = add[mul[A[:, i], B[:, j]], mul[A[:, j], B[:, i]]]
    return out


def _normalize_rows(X: HermitianSurface, C: np.ndarray) -> np.ndarray:
    lead = C[np.arange(len(C)), (C != 0).argmax(axis=1)]
    return X.field.mul_table[X.field.inv_table[lead][:, None], C]


@lru_cache(maxsize=None)
def min_weight_forms(X: HermitianSurface) -> frozenset:
    """Normalized coefficient tuples of every tangent-plane-pair quadric."""
    pairs = _valid_pairs(X)
    planes = X.pg.points[X.tangent_plane_index]
    C = _normalize_rows(X, _plane_products(X, planes[pairs[:, 0]], planes[pairs[:, 1]]))
    return frozenset(tuple(int(c) for c in row) for row in C)


@dataclass
class MinWeightReport:
    t: int
    pairs: int
    expected_pairs: int
    weights: set
    distinct_zero_sets: int
    distinct_codewords: int
    count: int
    expected_count: int

    @property
    def passed(self) -> bool:
        b = bounds(self.t)
        return (self.pairs == self.expected_pairs
                and self.weights == {b.min_distance}
                and self.distinct_zero_sets == self.pairs
                and self.distinct_codewords == self.pairs
                and self.count == self.expected_count)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "pairs": self.pairs,
            "expected_pairs": self.expected_pairs,
            "weights": sorted(self.weights),
            "distinct_zero_sets": self.distinct_zero_sets,
            "distinct_codewords": self.distinct_codewords,
            "count": self.count,
            "expected_count": self.expected_count,
            "passed": self.passed,
        }


def enumerate_min_weight_words(X: HermitianSurface) -> MinWeightReport:
    """Build every tangent-plane-pair quadric and check their codewords are distinct.

    Codewords are compared after scaling each to its projective representative,
    so distinct quadrics give (q-1) codewords each with no overlaps.
    """
    from .codes import build_generator_matrix
    t = X.t
    G = build_generator_matrix(X, 2)
    pairs = _valid_pairs(X)
    planes = X.pg.points[X.tangent_plane_index]
    C = _normalize_rows(X, _plane_products(X, planes[pairs[:, 0]], planes[pairs[:, 1]]))
    ev = G.evaluator()
    words = ev.values(C)
    zero = words == 0
    weights = set(np.unique((~zero).sum(axis=1)).tolist())
    # scale each codeword so its first nonzero entry is 1
    lead = words[np.arange(len(words)), (~zero).argmax(axis=1)]
    scaled = X.field.mul_table[X.field.inv_table[lead][:, None], words]
    distinct_words = len(np.unique(scaled, axis=0))
    distinct_zero = len(np.unique(np.packbits(zero, axis=1), axis=0))
    expected_pairs = (t**5 + t**3 + t * t + 1) * t**5 // 2
    return MinWeightReport(
        t=t,
        pairs=len(pairs),
        expected_pairs=expected_pairs,
        weights=weights,
        distinct_zero_sets=distinct_zero,
        distinct_codewords=distinct_words,
        count=distinct_words * (X.q - 1),
        expected_count=bounds(t).min_weight_count,
    )


@dataclass
class SecondWeightWitness:
    kind: str
    form: QuadraticForm
    size: int
    weight: int
    details: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "form": str(self.form), "intersection": self.size,
                "weight": self.weight, **self.details}


def _regulus_witness(X: HermitianSurface) -> tuple[QuadraticForm, dict]:
    pg, t = X.pg, X.t
    gens = X.all_generators()
    triple = [gens[0]]
    for g in gens[1:]:
        if all(pg.skew(g, other) for other in triple):
            triple.append(g)
            if len(triple) == 3:
                break
    if len(triple) < 3:
        raise InvariantViolation("no three pairwise skew generators found")
    regulus = pg.transversals(*triple)
    forms = fit_forms(pg, regulus.points)
    if len(forms) != 1:
        raise InvariantViolation(f"regulus lies on {len(forms)} independent quadrics")
    f = forms[0]
    if classify(f, pg) is not QuadricClass.HYPERBOLIC:
        raise InvariantViolation("regulus quadric is not hyperbolic")
    Z = zero_set(f, pg).mask
    on_q = np.flatnonzero(Z[pg.line_points].all(axis=1))
    x_lines = [int(i) for i in on_q if X.classify_line(int(i)) is LineKind.GENERATOR]
    cover = X.mask[None, :] & pg.line_mask[x_lines]
    multiplicity = cover.sum(axis=0)
    section = Z & X.mask
    same, other = hyperbolic_reguli(f, X)
    per_regulus = [sum(X.classify_line(l.index) is LineKind.GENERATOR for l in r) for r in (same, other)]
    details = {
        "skew_generators": [[pg.format_point(p) for p in l.span] for l in triple],
        "x_lines": len(x_lines),
        "x_lines_per_regulus": per_regulus,
        "double_points": int(np.count_nonzero(multiplicity == 2)),
        "simple_points": int(np.count_nonzero(multiplicity == 1)),
        "lines_cover_section": bool(np.array_equal(multiplicity > 0, section)),
    }
    expected = {"x_lines": 2 * (t + 1), "double_points": (t + 1) ** 2,
                "simple_points": 2 * (t + 1) * (t * t - t)}
    details["structure_ok"] = (all(details[k] == v for k, v in expected.items())
                               and per_regulus == [t + 1, t + 1]
                               and details["lines_cover_section"])
    return f, details


def construct_second_weight_witness(X: HermitianSurface, kind: str) -> SecondWeightWitness:
    """A quadric meeting X in the second largest number of points.

    ``A``: two tangent planes through a common generator.
    ``B``: the hyperbolic quadric through three pairwise skew generators.
    ``C``: a tangent plane times a non-tangent plane through a tangent line.
    """
    pg = X.pg
    kind = kind.upper()
    details: dict = {}
    if kind == "A":
        g = X.all_generators()[0]
        p1, p2 = g.points[:2]
        f = product_of_planes(X.field, X.tangent_plane(p1), X.tangent_plane(p2))
        details["common_line"] = [pg.format_point(p) for p in g.span]
    elif kind == "B":
        f, details = _regulus_witness(X)
    elif kind == "C":
        p = int(X.points[0])
        h1 = X.tangent_plane(p)
        tangent_lines = [pg.line(int(li)) for li in pg.lines_through_point[p]
                         if pg.incidence[h1.index, pg.line_points[li]].all()
                         and X.classify_line(int(li)) is LineKind.TANGENT]
        if not tangent_lines:
            raise InvariantViolation("no tangent line in the tangent plane")
        line = tangent_lines[0]
        h2 = next((h for h in pg.planes_through_line(line)
                   if h.index != h1.index and not X.is_tangent_plane(h)), None)
        if h2 is None:
            raise InvariantViolation("every plane through the tangent line is tangent")
        f = product_of_planes(X.field, h1, h2)
        details["planes"] = [str(h1), str(h2)]
    else:
        raise ValueError(f"unknown witness kind {kind!r}")
    size = intersection_size(f, X)
    details["scenario"] = classify_scenario(f, X).value
    return SecondWeightWitness(kind, f, size, X.n - size, details)
