"""Dense linear algebra over a prime field GF(p).

Gaussian elimination on numpy int64 arrays with entries reduced mod p.
Ranks of stacked encoding matrices are the entropies (in field symbols) of
the linear source/edge variables, so everything downstream is exact integer
arithmetic.
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def row_reduce(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row-echelon form mod p; returns (R, pivot column indices)."""
    R = np.array(M, dtype=np.int64, copy=True) % p
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = -1
        for i in range(r, rows):
            if R[i, c] % p:
                pivot = i
                break
        if pivot < 0:
            continue
        if pivot != r:
            R[[r, pivot]] = R[[pivot, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    _, pivots = row_reduce(M, p)
    return len(pivots)


def stack(parts: list[np.ndarray], width: int) -> np.ndarray:
    parts = [part.reshape(-1, width) for part in parts if part.size]
    if not parts:
        return np.zeros((0, width), dtype=np.int64)
    return np.vstack(parts)


def in_rowspace(rows: np.ndarray, targets: np.ndarray, p: int) -> bool:
    """True iff every target row lies in the row space of `rows`."""
    if targets.size == 0:
        return True
    base = rank(rows, p)
    width = targets.shape[-1]
    return rank(stack([rows, targets], width), p) == base
