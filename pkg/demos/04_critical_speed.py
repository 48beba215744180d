# # Critical target speed
#
# Between the two speed bounds the answer depends on the full geometry.
# Two estimates: a closed-form quadratic that asks when the
# minimum-escape point touches the Apollonius circle, and a bisection on
# the exact containment test.

from satgame import analysis, load_scenario, simulate, SimulationParams

cfg, doc = load_scenario("tangent")
b = analysis.speed_bounds(cfg)
print(f"bracket: [{b.v_lower:.4f}, {b.v_upper:.4f}]")

q = analysis.tangent_quadratic(cfg)
print(f"quadratic roots: {', '.join(f'{r:.4f}' for r in q.roots())}")
tangent = analysis.tangent_escape_speed(cfg)
critical = analysis.critical_speed(cfg, tol=1e-5)
print(f"tangency speed {tangent:.4f}, bisected critical speed {critical:.4f}")

# The two differ: the circle first leaves the sensable region away from
# the minimum-escape point, so the quadratic overestimates the threshold.
# A simulation just below the tangency speed confirms the escape.

v = 0.485
out = simulate(cfg.with_target_speed(v), "best-escape", SimulationParams(dt=1e-4))
print(f"v_t = {v}: {out.kind.value} at t = {out.t_final:.4f} s")
