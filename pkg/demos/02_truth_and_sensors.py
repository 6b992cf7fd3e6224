"""Ground truth and sensor synthesis for the benchmark scenario.

The vehicle flies a unit circle whose angular rate ramps up linearly, so the
centripetal acceleration grows quadratically: mild at the start, almost 6 g
by the end of the minute.  That growth is the whole point of the benchmark;
it is what breaks estimators that assume the accelerometer only sees
gravity.
"""

import numpy as np

from navobs import sim

np.set_printoptions(precision=4, suppress=True)

cfg = sim.ScenarioConfig()
print("gravity:", cfg.gravity, "m/s^2")
print("magnetic field:", cfg.mag_field, "(inertial frame)")
print("gyro bias:", np.rad2deg(cfg.gyro_bias), "deg/s per axis")
print("range anchors:\n", cfg.anchors)

# %% the trajectory gets hotter over time
print("\n  t      speed   |accel|   (specific force magnitude)")
for t in (0.0, 10.0, 20.0, 30.0, 40.0, 50.0, 60.0):
    _, v, a = sim.true_translation(t, cfg.gravity)
    print(f"{t:5.1f}  {np.linalg.norm(v):7.2f}  {np.linalg.norm(a):7.2f}"
          f"   ({np.linalg.norm(a) / cfg.gravity:.2f} g)")

# %% one sensor sample
t = 12.0
n = int(t / 1e-3)
tt, p, v, a, omega, R = sim.simulate_truth(cfg, n, 1e-3)
state = sim.TrueState(t=t, p=p[-1], v=v[-1], accel_inertial=a[-1],
                      R=R[-1], omega=omega[-1])
meas = sim.measure_imu(state, cfg)
print(f"\nat t = {t} s:")
print("  gyro (biased):", meas.gyro)
print("  accel (body):", meas.accel)
print("  mag (body):  ", meas.mag)
print("  ranges:      ", sim.measure_ranges(state.p, cfg.anchors))

# %% trajectory constants that the stability analysis cares about
report = sim.validate_assumptions(cfg, np.linspace(0, 60, 6001))
print("\nassumption constants over [0, 60] s:")
for name, value in report.constants.items():
    print(f"  {name} = {value:.4f}")
print(f"  excitation spectrum of E(M): [{report.em_min:.2e}, {report.em_max:.2e}]")
print(f"  observable: {report.observable}")
print("\nNote the tiny minimum excitation: near t ~ 11.6 s the specific force"
      "\npasses close to the magnetic-field direction, which is exactly when"
      "\nthe weakest error direction is hardest to correct.")
