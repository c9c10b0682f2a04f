"""Behavior of the isoclinic decomposition under a change of coordinates.

Rotating the coordinate frame by S turns the matrix of a rotation A into
S^T A S. Because left- and right-isoclinic matrices commute, that
conjugation can be applied to the two isoclinic factors separately and
multiplied afterwards; ``conjugate_factorwise`` computes it that way and
must agree with the direct product. Consequently being left-isoclinic,
being right-isoclinic, and the factor angles are all frame-independent,
which ``check_isocliny_preserved`` verifies for a concrete pair (A, S).
"""

from dataclasses import dataclass

import numpy as np

from .associate import DEFAULT_TOLERANCES, RotationClass, Tolerances, classify, decompose
from .errors import InvarianceError
from .quat import left_matrix, right_matrix
from .rotation4 import as_mat4

ANGLE_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SimilarityFrame:
    """A coordinate rotation S together with its own factor pair.

    Either sign choice of the pair gives the same conjugation, since S
    itself is unchanged by the joint flip.
    """

    s: np.ndarray
    s_left: np.ndarray
    s_right: np.ndarray


def make_frame(S, tolerances: Tolerances = DEFAULT_TOLERANCES) -> SimilarityFrame:
    """Decompose the frame rotation S and keep its canonical factors."""
    S = as_mat4(S)
    decomposition = decompose(S, tolerances)
    return SimilarityFrame(s=S, s_left=decomposition.left, s_right=decomposition.right)


def conjugate(A, frame: SimilarityFrame) -> np.ndarray:
    """Matrix of the rotation A expressed in the rotated frame: S^T A S.

    The transpose is the exact inverse because S is orthogonal.
    """
    return frame.s.T @ as_mat4(A) @ frame.s


def conjugate_factorwise(A, frame: SimilarityFrame,
                         tolerances: Tolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Conjugate each isoclinic factor of A separately, then multiply.

    Splits A into left and right factor matrices, conjugates the left one
    by the frame's left factor and the right one by the frame's right
    factor, and returns the product. Equals conjugate(A, frame) because
    the cross terms commute.
    """
    decomposition = decompose(as_mat4(A), tolerances)
    a_left = left_matrix(decomposition.left)
    a_right = right_matrix(decomposition.right)
    s_left = left_matrix(frame.s_left)
    s_right = right_matrix(frame.s_right)
    return (s_left.T @ a_left @ s_left) @ (s_right.T @ a_right @ s_right)


@dataclass(frozen=True)
class InvarianceReport:
    """Classification of a rotation before and after a frame change."""

    original: RotationClass
    transformed: RotationClass
    angle_deviation: float


def check_isocliny_preserved(A, frame: SimilarityFrame,
                             angle_tol: float = ANGLE_TOL,
                             tolerances: Tolerances = DEFAULT_TOLERANCES) -> InvarianceReport:
    """Verify the kind and angles of A survive conjugation by the frame.

    Classifies A and S^T A S, then asserts equal kind and factor angles
    within angle_tol, raising InvarianceError with both classifications on
    any mismatch. Returns the report when the check passes.
    """
    original = classify(as_mat4(A), tolerances=tolerances)
    transformed = classify(conjugate(A, frame), tolerances=tolerances)
    angle_deviation = max(
        abs(original.left_angle - transformed.left_angle),
        abs(original.right_angle - transformed.right_angle),
    )
    if original.kind is not transformed.kind:
        raise InvarianceError(
            f"rotation kind changed under frame change: "
            f"{original.kind.value} became {transformed.kind.value}"
        )
    if angle_deviation > angle_tol:
        raise InvarianceError(
            f"factor angles drifted by {angle_deviation:.6g} under frame change "
            f"(tolerance {angle_tol:.1e})"
        )
    return InvarianceReport(
        original=original,
        transformed=transformed,
        angle_deviation=angle_deviation,
    )
