"""The functional codes C_h(X): generator matrix, codewords and weight spectra."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import __version__
from .errors import BudgetExceeded, InvariantViolation
from .evaluation import FormEvaluator, chunk_ranges, monomial_values, representatives
from .hermitian import HermitianSurface
from .linalg import rank as gf_rank

__all__ = [
    "monomial_basis",
    "GeneratorMatrix",
    "WeightDistribution",
    "build_generator_matrix",
    "weight",
    "weight_distribution",
    "min_distance",
    "second_weight",
    "sample_coefficients",
    "DEFAULT_BUDGET",
    "CHUNK",
]

DEFAULT_BUDGET = 10**7
CHUNK = 1 << 14


def monomial_basis(h: int) -> list[tuple[int, int, int, int]]:
    """Exponent vectors of degree ``h`` in four variables, graded-lex order."""
    if h < 1:
        raise ValueError("degree must be >= 1")
    out = []
    for e0 in range(h, -1, -1):
        for e1 in range(h - e0, -1, -1):
            for e2 in range(h - e0 - e1, -1, -1):
                out.append((e0, e1, e2, h - e0 - e1 - e2))
    return out


@dataclass
class GeneratorMatrix:
    """Rows are monomials, columns are the points of X in global order."""

    surface: HermitianSurface
    h: int
    exponents: list
    rows: np.ndarray
    k: int

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def q(self) -> int:
        return self.surface.q

    def evaluator(self) -> FormEvaluator:
        if not hasattr(self, "_evaluator"):
            self._evaluator = FormEvaluator(self.surface.field, self.rows)
        return self._evaluator

    def codeword(self, coeffs) -> np.ndarray:
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape != (len(self.exponents),):
            raise ValueError(f"expected {len(self.exponents)} coefficients, got {coeffs.shape}")
        return self.evaluator().values(coeffs[None, :])[0]

    def export_text(self) -> str:
        lines = [f"q={self.q} k={len(self.rows)} n={self.n}"]
        lines += [" ".join(str(int(v)) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"


def build_generator_matrix(X: HermitianSurface, h: int = 2) -> GeneratorMatrix:
    exps = monomial_basis(h)
    rows = monomial_values(X.field, X.pg.points[X.points], exps)
    k = gf_rank(X.field, rows)
    if h <= X.t and k != comb(3 + h, h):
        raise InvariantViolation(f"evaluation map not injective: rank {k} < {comb(3 + h, h)}")
    return GeneratorMatrix(X, h, exps, rows, k)


def weight(word) -> int:
    return int(np.count_nonzero(word))


@dataclass
class WeightDistribution:
    t: int
    h: int
    n: int
    k: int
    q: int
    mode: str
    counts: dict[int, int]
    seed: int | None = None
    samples: int | None = None
    extra: dict = dc_field(default_factory=dict)

    @property
    def sampled(self) -> bool:
        return self.mode == "sampled"

    def nonzero_weights(self) -> list[int]:
        return sorted(w for w, c in self.counts.items() if w and c)

    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        d = {
            "tool": f"hermcode {__version__}",
            "t": self.t, "h": self.h, "n": self.n, "k": self.k, "q": self.q,
            "mode": self.mode,
        }
        if self.sampled:
            d["seed"] = self.seed
            d["samples"] = self.samples
            d["note"] = "empirical sample, not the full distribution"
        d["weights"] = {str(w): self.counts[w] for w in sorted(self.counts)}
        d.update(self.extra)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _exhaustive_chunk(G: GeneratorMatrix, start: int, stop: int) -> np.ndarray:
    C = representatives(len(G.exponents), G.q, start, stop)
    return np.bincount(G.evaluator().weights(C), minlength=G.n + 1)


def sample_coefficients(seed: int, chunk_index: int, size: int, k: int, q: int) -> np.ndarray:
    """Uniform nonzero coefficient vectors from a counter-based stream.

    Chunk ``i`` of a run always draws from Philox(key=seed) with the counter's
    high word set to ``i``, so results do not depend on how chunks are
    assigned to workers.
    """
    bitgen = np.random.Philox(key=seed, counter=[0, 0, 0, chunk_index])
    rng = np.random.Generator(bitgen)
    C = rng.integers(0, q, size=(size, k))
    zero = ~C.any(axis=1)
    while zero.any():
        C[zero] = rng.integers(0, q, size=(int(zero.sum()), k))
        zero = ~C.any(axis=1)
    return C


def _sampled_chunk(G: GeneratorMatrix, seed: int, index: int, size: int) -> np.ndarray:
    C = sample_coefficients(seed, index, size, len(G.exponents), G.q)
    return np.bincount(G.evaluator().weights(C), minlength=G.n + 1)


def _run(tasks, fn, workers: int):
    """Apply ``fn`` to each task and sum the histograms, in task order."""
    total = None
    if workers <= 1:
        results = map(lambda a: fn(*a), tasks)
        for r in results:
            total = r if total is None else total + r
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for r in pool.map(lambda a: fn(*a), tasks):
                total = r if total is None else total + r
    return total


def weight_distribution(G: GeneratorMatrix, mode: str = "exhaustive", *, samples: int = 10**6,
                        seed: int | None = None, workers: int = 1,
                        budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Weight distribution of the code spanned by ``G``.

    ``exhaustive`` walks all projective representatives of the coefficient
    space and scales each count by q-1; ``sampled`` draws ``samples`` seeded
    nonzero coefficient vectors and reports raw counts.
    """
    X = G.surface
    k = len(G.exponents)
    q = G.q
    if mode == "exhaustive":
        total = (q**k - 1) // (q - 1)
        if total > budget:
            raise BudgetExceeded(f"{total} representatives exceed the budget of {budget}")
        tasks = [(G, s, e) for s, e in chunk_ranges(total, CHUNK)]
        hist = _run(tasks, _exhaustive_chunk, workers)
        counts = {int(w): int(c) * (q - 1) for w, c in enumerate(hist) if c}
        counts[0] = counts.get(0, 0) + 1
        if G.k < k:
            # forms in the kernel collapse onto the same codewords
            mult = q ** (k - G.k)
            counts = {w: c // mult for w, c in counts.items()}
            counts[0] = 1
        return WeightDistribution(X.t, G.h, G.n, G.k, q, mode, dict(sorted(counts.items())))
    if mode == "sampled":
        if seed is None:
            raise ValueError("sampled mode needs a seed")
        tasks = [(G, seed, i, e - s) for i, (s, e) in enumerate(chunk_ranges(samples, CHUNK))]
        hist = _run(tasks, _sampled_chunk, workers)
        counts = {int(w): int(c) for w, c in enumerate(hist) if c}
        return WeightDistribution(X.t, G.h, G.n, G.k, q, mode, counts, seed=seed, samples=samples)
    raise ValueError(f"unknown mode {mode!r}")


def min_distance(dist: WeightDistribution) -> int:
    ws = dist.nonzero_weights()
    if not ws:
        raise ValueError("distribution has no nonzero codeword")
    return ws[0]


def second_weight(dist: WeightDistribution) -> int:
    ws = dist.nonzero_weights()
    if len(ws) < 2:
        raise ValueError("distribution has fewer than two nonzero weights")
    return ws[1]
