# # Guaranteed escape
#
# Above the upper speed bound some point of the Apollonius circle lies
# outside the sensable region, and a target that heads there gets away.

from satgame import analysis, load_scenario, simulate, SimulationParams

cfg, doc = load_scenario("escape")
print(doc["description"])
bounds = analysis.speed_bounds(cfg)
print(f"upper bound v_t = {bounds.v_upper:.4f}, admissible = {bounds.admissible}")

verdict = analysis.capture_guaranteed(cfg)
print(f"at v_t = {cfg.v_t}: contained = {verdict.contained}, worst margin {verdict.min_margin:+.4f}")

out = simulate(cfg, "best-escape", SimulationParams(dt=1e-4))
print(f"best-escape run: {out.kind.value} at t = {out.t_final:.4f} s")
