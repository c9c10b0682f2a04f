# Multiplying by a unit quaternion rotates 4-space.
#
# A quaternion is stored as (w, x, y, z). Fixing a unit quaternion q and
# mapping P -> q*P is a linear map of R^4, so it has a 4x4 matrix; same
# for P -> P*q. This script pokes at those two matrices.

import numpy as np

from isoclinic import (
    isoclinic_angle,
    left_matrix,
    normalize,
    quat_mul,
    right_matrix,
)

np.set_printoptions(precision=6, suppress=True)

q = normalize([1.0, 2.0, -1.0, 0.5])
ML = left_matrix(q)
MR = right_matrix(q)

print("unit quaternion q:", q)
print("\nmatrix of P -> q*P:\n", ML)
print("\nmatrix of P -> P*q:\n", MR)

# Both are orthogonal with determinant +1, and every diagonal entry is the
# scalar part of q.
print("\nmax |M^T M - I|:", np.max(np.abs(ML.T @ ML - np.eye(4))))
print("det:", np.linalg.det(ML))
print("diagonal of ML:", np.diag(ML), " q.w =", q[0])

# The matrix really is the multiplication: apply it to a vector and compare
# with the quaternion product.
P = np.array([0.3, -1.2, 2.0, 0.7])
print("\nML @ P:          ", ML @ P)
print("quat_mul(q, P):  ", quat_mul(q, P))

# Left multiplication turns every half-line through the origin by the same
# angle arccos(w). Watch it act on two orthogonal coordinate planes: both
# turn the same way. Right multiplication turns them opposite ways; that is
# the only difference between the two chiralities.
alpha = np.pi / 5
qa = np.array([np.cos(alpha), np.sin(alpha), 0.0, 0.0])
e0, e1, e2, e3 = np.eye(4)

print("\nangle of qa:", isoclinic_angle(qa), "(pi/5 =", np.pi / 5, ")")
print("left  action on the (w,x) plane:", left_matrix(qa) @ e0)
print("left  action on the (y,z) plane:", left_matrix(qa) @ e2)
print("right action on the (w,x) plane:", right_matrix(qa) @ e0)
print("right action on the (y,z) plane:", right_matrix(qa) @ e2, " <- turned the other way")

# Matrix multiplication mirrors quaternion multiplication, so these maps
# form two groups.
q2 = normalize([0.0, 1.0, 1.0, 0.0])
print("\nhomomorphism check:",
      np.max(np.abs(left_matrix(q) @ left_matrix(q2) - left_matrix(quat_mul(q, q2)))))
