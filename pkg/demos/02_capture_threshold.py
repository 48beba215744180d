# # Guaranteed capture
#
# If the attacker's Apollonius circle fits inside the region the target
# can reach while still sensed, the attacker always wins. The lower speed
# bound is a cheap sufficient condition; the containment test is exact
# up to sampling.

from satgame import analysis, load_scenario, simulate, SimulationParams

cfg, doc = load_scenario("capture")
print(doc["description"])
bounds = analysis.speed_bounds(cfg)
print(f"capture guaranteed below v_t = {bounds.v_lower:.4f}")

params = SimulationParams(dt=1e-4)
for v in doc["speeds"]:
    c = cfg.with_target_speed(v)
    verdict = analysis.capture_guaranteed(c)
    out = simulate(c, "best-escape", params)
    print(f"v_t = {v:.3f}: contained={verdict.contained} margin={verdict.min_margin:+.4f}  simulated {out.kind.value} at t = {out.t_final:.3f} s")
