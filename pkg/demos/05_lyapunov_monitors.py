"""Runtime verification of the stability machinery.

Three things are monitored along a run:

* the structural identity (A - K C) sigma_x = -k_r B skew(R_hat sigma_r)
  R_hat accel, which the coupled design satisfies by construction;
* the scaled coupled error zeta and its quadratic energy V, which must
  decrease whenever ||zeta|| exceeds the analytic threshold; and
* the composite candidate W, whose decrease the theory guarantees only for
  gains above the (very conservative) analytic thresholds.

The analytic thresholds themselves come out of the gain-bound calculator;
comparing them with the gains that demonstrably work in simulation shows
just how much slack the worst-case analysis carries.
"""

import numpy as np

import navobs

cfg = navobs.default_config()
cfg.observer = "proposed"
cfg.scenario.t_end = 20.0

print("running the coupled observer for 20 s ...")
log = navobs.run_scenario(cfg)
tr = log.traces["proposed"]

print(f"\nstructural identity residual (relative): "
      f"max {tr.identity_residual.max():.2e}  (float round-off)")

mi = log.monitor_indices
zn = np.linalg.norm(tr.zeta[mi], axis=1)
print(f"\nzeta monitor: threshold {log.zeta_threshold:.1f}, "
      f"max ||zeta|| along run {zn.max():.2f}")
print("  (the trajectory never reaches the regime where the V-decrease")
print("   clause binds; V-violations are counted anyway)")
above = zn[:-1] >= log.zeta_threshold
print("  V violations:", int(np.sum(above & (np.diff(tr.V[mi]) > 0))))

print(f"\nW monitor (mu = {log.mu:.2e}):")
for tq in (0.5, 2.0, 5.0, 8.0, 11.0, 14.0, 17.0, 20.0):
    i = int(tq / cfg.scenario.dt)
    print(f"  t = {tq:5.1f} s: W = {tr.W[i]:.3e}, dist_R = {tr.dist_R[i]:.3e}")
print("  W tracks the attitude-error hump around t ~ 8-14 s: the weakest")
print("  error direction is barely excited there, so the bias is learned")
print("  late and W is not monotone at these gains.")

report, bounds = navobs.check_bounds(cfg)
print("\ngain thresholds from the worst-case analysis:")
print(f"  mu_max    = {bounds.mu_max:.2e}")
print(f"  k_r_min   = {bounds.k_r_min:.2e}   (configured: {cfg.k_r})")
print(f"  gamma_min = {bounds.gamma_min:.2e}   (configured: {cfg.gamma})")
print("the configured gains sit ~13 orders of magnitude below the analytic")
print("thresholds and still converge: the bounds are sufficient, not tight.")
