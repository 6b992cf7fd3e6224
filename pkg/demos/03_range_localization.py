"""From raw anchor ranges to a linear position measurement.

Squaring ranges to two anchors and subtracting cancels the unknown ||p||^2
term, leaving something linear in the position.  Stacking one such scalar
per non-reference anchor gives y = C p, which the translational observer
consumes directly, no trilateration solve required.
"""

import numpy as np

from navobs import ranging, sim

np.set_printoptions(precision=4, suppress=True)

anchors = sim.DEFAULT_ANCHORS
C = ranging.build_output_matrix(anchors)
print("anchors:\n", anchors)
print("output matrix C (rows are a_ref - a_i):\n", C)
print("rank:", np.linalg.matrix_rank(C))

# %% the construction is exact for noise-free ranges
rng = np.random.default_rng(0)
p = rng.uniform(-5, 5, size=3)
d = sim.measure_ranges(p, anchors)
y = ranging.build_output_vector(d, anchors)
print("\nposition:", p)
print("ranges:  ", d)
print("y:       ", y)
print("C @ p:   ", C @ p)

batch = rng.uniform(-8, 8, size=(1000, 3))
y_batch = ranging.build_output_vector(sim.measure_ranges(batch, anchors), anchors)
print("max |y - C p| over 1000 random positions:",
      np.abs(y_batch - batch @ C.T).max())

# %% geometry matters: coplanar anchors cannot pin down 3-D position
flat = np.array([[0.0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]])
try:
    ranging.build_output_matrix(flat)
except ranging.CoplanarAnchorsError as exc:
    print("\ncoplanar anchors rejected:", exc)

# %% GPS mode is the trivial special case
out = ranging.gps_output([1.0, 2.0, 3.0])
print("\nGPS output: y =", out.y, " C = identity, m =", out.m)
