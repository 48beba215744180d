# # Nested regions
#
# A faster target shrinks the sensable region and grows the Apollonius
# circle. This writes both families of curves as CSV and SVG.

from satgame import load_scenario
from satgame.workbench import regions

cfg, doc = load_scenario("tangent")
rs = regions(cfg, doc["speeds"], samples=360)
print("nesting violations:", rs.nesting_violations() or "none")

with open("regions_boundaries.csv", "w") as fh:
    fh.write(rs.to_csv())
with open("regions.svg", "w") as fh:
    fh.write(rs.figure())
print("wrote regions_boundaries.csv and regions.svg")
