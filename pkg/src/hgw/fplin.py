"""Exact linear algebra over prime fields F_p (numpy int64 arrays mod p)."""

from __future__ import annotations

import numpy as np


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a 2-D array")
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if a[i, c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def rank(mat: np.ndarray, p: int) -> int:
    if np.size(mat) == 0:
        return 0
    return rref(mat, p)[0].shape[0]


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : mat @ x = 0 mod p}, as rows; shape (dim, cols)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape if a.ndim == 2 else (0, a.shape[0])
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-red[i, fc]) % p
    return basis


def row_space_contains(mat: np.ndarray, vec: np.ndarray, p: int) -> bool:
    """True iff vec lies in the row space of mat (mod p)."""
    base = rank(mat, p)
    stacked = np.vstack([np.atleast_2d(mat), np.atleast_2d(vec)])
    return rank(stacked, p) == base


def row_spaces_equal(a: np.ndarray, b: np.ndarray, p: int) -> bool:
    ra, _ = rref(np.atleast_2d(a), p)
    rb, _ = rref(np.atleast_2d(b), p)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
