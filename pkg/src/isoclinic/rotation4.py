"""4x4 rotation matrices: validation, two-sided quaternion composition, action.

A rotation here is an orthogonal 4x4 matrix with determinant +1, acting on
column vectors (w, x, y, z) of R^4. ``van_elfrinkhof`` builds the matrix of
the two-sided quaternion map P -> L*P*R directly from the 16 bilinear
component expressions; it factors as left_matrix(L) @ right_matrix(R).
"""

import numpy as np

from .errors import NotOrthogonalError, NotProperRotationError
from .quat import check_unit, normalize

# input validation bounds, deliberately looser than internal arithmetic
# accuracy so mildly noisy external matrices are accepted
ORTHO_TOL = 1e-9
DET_TOL = 1e-9


def as_mat4(A) -> np.ndarray:
    """Coerce to a float array of shape (4, 4) with finite entries."""
    A = np.asarray(A, dtype=float)
    if A.shape != (4, 4):
        raise ValueError(f"matrix must have shape (4, 4), got {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def mat_mul(A, B) -> np.ndarray:
    return as_mat4(A) @ as_mat4(B)


def trace(A) -> float:
    return float(np.trace(as_mat4(A)))


def validate_rotation(A, ortho_tol: float = ORTHO_TOL,
                      det_tol: float = DET_TOL) -> np.ndarray:
    """Check that A is orthogonal with determinant +1, within tolerances.

    Returns A as an ndarray on success. Raises NotOrthogonalError carrying
    the max-abs deviation of A^T A from I, or NotProperRotationError
    carrying the determinant. A matrix that fails is rejected, never
    repaired; callers wanting a nearby rotation must build one themselves.
    """
    A = as_mat4(A)
    deviation = float(np.max(np.abs(A.T @ A - np.eye(4))))
    if deviation > ortho_tol:
        raise NotOrthogonalError(deviation, ortho_tol)
    det = float(np.linalg.det(A))
    if abs(det - 1.0) > det_tol:
        raise NotProperRotationError(det, det_tol)
    return A


def van_elfrinkhof(L, R) -> np.ndarray:
    """Matrix of P -> L*P*R for unit quaternions L = (a,b,c,d), R = (p,q,r,s).

    Built entry by entry from the bilinear expansion rather than as a
    product of two matrices, so it serves as an independent reference for
    left_matrix(L) @ right_matrix(R). Every entry is bilinear in (L, R),
    hence van_elfrinkhof(-L, -R) is exactly the same matrix.
    """
    a, b, c, d = check_unit(L)
    p, q, r, s = check_unit(R)
    return np.array([
        [a*p - b*q - c*r - d*s, -a*q - b*p + c*s - d*r,
         -a*r - b*s - c*p + d*q, -a*s + b*r - c*q - d*p],
        [b*p + a*q - d*r + c*s, -b*q + a*p + d*s + c*r,
         -b*r + a*s - d*p - c*q, -b*s - a*r - d*q + c*p],
        [c*p + d*q + a*r - b*s, -c*q + d*p - a*s - b*r,
         -c*r + d*s + a*p + b*q, -c*s - d*r + a*q - b*p],
        [d*p - c*q + b*r + a*s, -d*q - c*p - b*s + a*r,
         -d*r - c*s + b*p - a*q, -d*s + c*r + b*q + a*p],
    ])


def apply(A, point) -> np.ndarray:
    """Rotate a point: matrix-vector product A @ (w, x, y, z)."""
    point = np.asarray(point, dtype=float)
    if point.shape != (4,):
        raise ValueError(f"point must have shape (4,), got {point.shape}")
    return as_mat4(A) @ point


def random_rotation(seed) -> np.ndarray:
    """Haar-uniform random rotation, deterministic for a fixed seed.

    Draws two independent uniform unit quaternions and composes them;
    uniform factors make the composition uniform on the whole group.
    Accepts an int seed or an existing numpy Generator.
    """
    rng = np.random.default_rng(seed)
    L = normalize(rng.standard_normal(4))
    R = normalize(rng.standard_normal(4))
    return van_elfrinkhof(L, R)
