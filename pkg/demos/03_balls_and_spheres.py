"""Stanley-Reisner complexes of three-color polarizations: shellings and verdicts.

Run with ``python demos/03_balls_and_spheres.py``.
"""

import json
from collections import Counter
from pathlib import Path

from polarix import complex_from_ideal, generators_from_family
from polarix.io import family_from_json
from polarix.isotone import enumerate_families
from polarix.polarization import natural_complete_intersection
from polarix.simplicial import (
    ball_or_sphere_verdict,
    linear_quotients_check,
    lq_order_m3,
    shelling_from_dual_order,
)

DATA = Path(__file__).parent / "data"

# %% A single family: the complex, a linear-quotient order, and a shelling.
f = family_from_json(json.loads((DATA / "three_colors_n3.json").read_text()))
c = complex_from_ideal(generators_from_family(f))
order = lq_order_m3(f)
print(f"{len(c.facets)} facets of size {len(next(iter(c.facets)))} on {len(c.vertices)} vertices")
print("linear quotients:", linear_quotients_check(order))
v = ball_or_sphere_verdict(c, shelling_from_dual_order(order, c.vertices))
print("verdict:", v.kind)

# %% Verdicts over every valid family at (3, 2).
tally = Counter()
for g in enumerate_families(3, 2, valid_only=True):
    cg = complex_from_ideal(generators_from_family(g))
    tally[ball_or_sphere_verdict(cg, shelling_from_dual_order(lq_order_m3(g), cg.vertices)).kind] += 1
print("\n(3,2) verdicts:", dict(tally))

# %% The complete intersection (x^n, y^n, z^n) polarizes to a sphere.
for n in (1, 2, 3):
    print(f"(x^{n}, y^{n}, z^{n}):", ball_or_sphere_verdict(complex_from_ideal(natural_complete_intersection([n] * 3))).kind)
