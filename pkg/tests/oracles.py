"""Independent reference computations used to pin expected test values.

Nothing here reuses the package's closed-form recombination or pivot
factorization: factors are recovered by a generic 16x16 linear solve plus
an SVD, and minors are scanned with plain Python loops, so agreement with
the library is evidence rather than tautology.
"""

from itertools import combinations

import numpy as np

from isoclinic import left_matrix, right_matrix


def solve_factor_pair(A):
    """Recover (L, R) from a rotation matrix by generic linear algebra.

    Expands A over the 16 basis matrices left_matrix(e_i) @ right_matrix(e_j).
    The coefficients, arranged on a 4x4 grid, are the pairwise products
    L_i * R_j, so the grid is rank 1 and an SVD reads off unit factors with
    the correct relative sign (the singular value is positive).
    """
    basis = np.eye(4)
    T = np.column_stack([
        (left_matrix(basis[i]) @ right_matrix(basis[j])).ravel()
        for i in range(4)
        for j in range(4)
    ])
    coefficients = np.linalg.solve(T, np.asarray(A, dtype=float).ravel())
    grid = coefficients.reshape(4, 4)
    u, s, vt = np.linalg.svd(grid)
    return u[:, 0], vt[0]


def brute_max_minor(M):
    """All 36 2x2 minors by explicit loops; no vectorized indexing."""
    M = np.asarray(M, dtype=float)
    worst = 0.0
    for i, j in combinations(range(4), 2):
        for k, l in combinations(range(4), 2):
            worst = max(worst, abs(M[i, k] * M[j, l] - M[j, k] * M[i, l]))
    return worst


def pair_deviation(pair_a, pair_b):
    """Max-abs distance between two quaternion pairs, minimized over the joint sign."""
    La, Ra = pair_a
    Lb, Rb = pair_b
    same = max(float(np.max(np.abs(La - Lb))), float(np.max(np.abs(Ra - Rb))))
    flipped = max(float(np.max(np.abs(La + Lb))), float(np.max(np.abs(Ra + Rb))))
    return min(same, flipped)


def random_improper(rng):
    """Orthogonal matrix with determinant -1: rotation times a reflection."""
    from isoclinic import random_rotation

    return random_rotation(rng) @ np.diag([1.0, 1.0, 1.0, -1.0])
