# How non-rotations get rejected, and what the tolerances mean.
#
# decompose never repairs its input. Each stage measures one number and
# raises a typed error carrying it when the number is too big, so a caller
# can tell a reflection from noise from garbage.

import numpy as np

from isoclinic import (
    NormDeviationError,
    NotProperRotationError,
    NotRankOneError,
    Tolerances,
    associate_matrix,
    associate_norm,
    decompose,
    max_abs_minor,
    random_rotation,
    validate_rotation,
)

np.set_printoptions(precision=6, suppress=True)

# A reflection is orthogonal but reverses orientation. Validation catches
# the determinant...
reflection = np.diag([1.0, 1.0, 1.0, -1.0])
try:
    validate_rotation(reflection)
except NotProperRotationError as exc:
    print("validate_rotation:", exc)

# ...but the decomposition pipeline rejects it on its own: the recombined
# matrix of an improper orthogonal matrix still has unit norm, yet it is
# rank 2, so the minor check trips. There is no factor pair to find.
M = associate_matrix(reflection)
print("\nrecombination of the reflection:\n", M)
print("its norm:", associate_norm(M), " largest minor:", max_abs_minor(M))
try:
    decompose(reflection)
except NotRankOneError as exc:
    print("decompose:", exc)

# Even if every tolerance is thrown wide open, the forced factor pair
# cannot reconstruct the reflection; rotations are simply the wrong model.
wide_open = Tolerances(norm_tol=10, minor_tol=10, factor_tol=10, recon_tol=10)
forced = decompose(reflection, wide_open)
print("forced reconstruction misses by:", forced.reconstruction_residual)

# A scaled matrix fails earlier, at the norm stage.
try:
    decompose(0.9 * np.eye(4))
except NormDeviationError as exc:
    print("\nscaled input:", exc)

# Mild noise is a different story: the defaults accept inputs that are
# rotations up to about 1e-10 and report honest residuals for them.
rng = np.random.default_rng(7)
A = random_rotation(rng)
noisy = A + 1e-11 * rng.standard_normal((4, 4))
result = decompose(noisy)
print("\nnoisy rotation accepted:")
print("  largest minor:          ", result.max_minor)
print("  norm deviation:         ", result.norm_deviation)
print("  reconstruction residual:", result.reconstruction_residual)

# The same input fails under a stricter policy; tolerances are a value you
# pass, not a global setting.
try:
    decompose(noisy, Tolerances(minor_tol=1e-14))
except NotRankOneError as exc:
    print("\nstrict policy on the same input:", exc)
