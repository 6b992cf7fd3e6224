"""Tour of the rotation-algebra toolbox.

Walks through the operators every other module builds on: the hat/vee pair,
the axial vector, the exponential map, the normalized rotation distance, and
the two safety operators (radial saturation and the smooth ball projection).
"""

import numpy as np

from navobs import so3

np.set_printoptions(precision=4, suppress=True)

# %% hat and vee: the cross product as a matrix
v = np.array([0.0, 0.0, 1.0])
S = so3.skew(v)
print("skew([0,0,1]) =\n", S)
print("skew(v) @ [1,0,0] =", S @ [1, 0, 0], " (== v x e1)")
print("vex(skew(v))    =", so3.vex(S))

# %% axial vector: vee of the skew-symmetric part of any matrix
A = np.array([[1.0, -2.0, 0.5], [4.0, 1.0, -1.0], [0.0, 3.0, 1.0]])
print("\naxial(A)           =", so3.axial(A))
print("axial(A + A.T)     =", so3.axial(A + A.T), " (symmetric part is invisible)")

# %% exponential map and the normalized distance
for angle in (0.0, np.pi / 2, np.pi):
    R = so3.exp_so3([angle, 0.0, 0.0])
    print(f"\nrotation by {np.degrees(angle):5.1f} deg about x:"
          f"  distance = {so3.rotation_distance(R):.3f}")
print("(0 at identity, 1/2 at a quarter turn, 1 at a half turn)")

# %% radial saturation
x = np.array([3.0, 4.0, 0.0])
print("\nsat(2, [3,4,0]) =", so3.sat(2.0, x), " norm:", np.linalg.norm(so3.sat(2.0, x)))

# %% smooth projection keeps an integrated estimate inside a ball
# Integrate d(phi)/dt = projection(c, eps, phi, mu) against a constant
# outward push and watch the norm settle at c + eps instead of escaping.
c, eps, dt = 1.0, 0.1, 1e-3
phi = np.array([0.9, 0.0, 0.0])
mu = np.array([3.0, 0.0, 0.0])
worst = 0.0
for _ in range(3000):
    k1 = so3.smooth_projection(c, eps, phi, mu)
    k2 = so3.smooth_projection(c, eps, phi + 0.5 * dt * k1, mu)
    k3 = so3.smooth_projection(c, eps, phi + 0.5 * dt * k2, mu)
    k4 = so3.smooth_projection(c, eps, phi + dt * k3, mu)
    phi = phi + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    worst = max(worst, np.linalg.norm(phi))
print(f"\nafter 3 s of a constant outward push: ||phi|| = {np.linalg.norm(phi):.6f}")
print(f"worst norm along the way: {worst:.6f}  (ball radius c + eps = {c + eps})")
