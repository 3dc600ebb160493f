"""Batched evaluation of forms on a fixed point set.

The hot loop of every sweep: given many coefficient vectors over a fixed
monomial basis, find where each form vanishes.  Per (monomial, coefficient)
pair the row ``c * m(P_j)`` is precomputed once, so evaluating a batch is
a gather plus a field sum over ``k`` rows.  In characteristic 2 the sum is
an XOR of element codes; otherwise the base-p digits are added as small
integers and reduced mod p at the end.
"""

from __future__ import annotations

import numpy as np

from .gf import FieldSpec


def monomial_values(field: FieldSpec, coords: np.ndarray, exponents) -> np.ndarray:
    """(k, N) codes of each monomial at each normalized point."""
    coords = np.asarray(coords, dtype=np.int64)
    out = np.ones((len(exponents), len(coords)), dtype=np.int64)
    mul = field.mul_table
    for r, exps in enumerate(exponents):
        for i, e in enumerate(exps):
            for _ in range(e):
                out[r] = mul[out[r], coords[:, i]]
    return out


class FormEvaluator:
    """Zero patterns of batches of forms on the columns of a monomial matrix."""

    def __init__(self, field: FieldSpec, monomials: np.ndarray):
        self.field = field
        self.k, self.n = monomials.shape
        q, p, a = field.q, field.p, field.a
        scaled = field.mul_table[np.arange(q)[None, :, None], monomials[:, None, :]]  # (k, q, n)
        if p == 2:
            self._table = scaled.astype(np.uint8 if q <= 256 else np.uint16)
            self._xor = True
        else:
            digits = field.digit_table[scaled]  # (k, q, n, a)
            dtype = np.int8 if self.k * (p - 1) < 127 else np.int32
            self._table = digits.reshape(self.k, q, self.n * a).astype(dtype)
            self._xor = False

    def nonzero_mask(self, coeffs: np.ndarray) -> np.ndarray:
        """(B, n) boolean: does form b take a nonzero value at point j."""
        coeffs = np.asarray(coeffs)
        T = self._table
        acc = T[0][coeffs[:, 0]].copy()
        if self._xor:
            for r in range(1, self.k):
                np.bitwise_xor(acc, T[r][coeffs[:, r]], out=acc)
            return acc != 0
        for r in range(1, self.k):
            acc += T[r][coeffs[:, r]]
        acc %= self.field.p
        return acc.reshape(len(coeffs), self.n, self.field.a).any(axis=2)

    def zero_mask(self, coeffs: np.ndarray) -> np.ndarray:
        return ~self.nonzero_mask(coeffs)

    def weights(self, coeffs: np.ndarray) -> np.ndarray:
        return self.nonzero_mask(coeffs).sum(axis=1)

    def values(self, coeffs: np.ndarray) -> np.ndarray:
        """(B, n) codes of the evaluated forms (slower; for exports and checks)."""
        coeffs = np.asarray(coeffs)
        F = self.field
        if self._xor:
            T = self._table.astype(np.int64)
            acc = T[0][coeffs[:, 0]].copy()
            for r in range(1, self.k):
                acc ^= T[r][coeffs[:, r]]
            return acc
        acc = self._table[0][coeffs[:, 0]].astype(np.int64)
        for r in range(1, self.k):
            acc += self._table[r][coeffs[:, r]]
        acc %= F.p
        digits = acc.reshape(len(coeffs), self.n, F.a)
        weights = F.p ** np.arange(F.a)
        return digits @ weights


def representatives(k: int, q: int, start: int, stop: int) -> np.ndarray:
    """Projective representatives of GF(q)^k with ranks in ``[start, stop)``.

    Representatives have first nonzero coordinate 1.  Rank order is
    lexicographic in the coefficient tuple, so rank 0 is ``(0, ..., 0, 1)``.
    There are ``(q**k - 1) // (q - 1)`` of them.
    """
    total = (q**k - 1) // (q - 1)
    if not 0 <= start <= stop <= total:
        raise ValueError("rank range out of bounds")
    out = np.zeros((stop - start, k), dtype=np.int64)
    # block with leading 1 at position i holds q**(k-1-i) forms; blocks run i = k-1 .. 0
    offset = 0
    for i in range(k - 1, -1, -1):
        tail = k - 1 - i
        size = q**tail
        lo, hi = max(start, offset), min(stop, offset + size)
        if lo < hi:
            v = np.arange(lo - offset, hi - offset, dtype=np.int64)
            rows = slice(lo - start, hi - start)
            out[rows, i] = 1
            for j in range(tail):
                out[rows, k - 1 - j] = (v // q**j) % q
        offset += size
    return out


def chunk_ranges(total: int, chunk: int) -> list[tuple[int, int]]:
    return [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
