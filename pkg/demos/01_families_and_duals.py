"""Build a few isotone families at three colors, check them, and dualize.

Run with ``python demos/01_families_and_duals.py``.
"""

import json
from pathlib import Path

from polarix import (
    alexander_dual_from_family,
    alexander_dual_oracle,
    b_family,
    canonical_form,
    generators_from_family,
    is_polarization_oracle,
    is_valid_polarization,
    standard_family,
)
from polarix.io import family_from_json, ideal_to_m2
from polarix.isotone import enumerate_families, polarization_witness, qs_edges

DATA = Path(__file__).parent / "data"

# %% The two textbook families at (m, n) = (3, 2) are both valid.
for name, f in [("standard", standard_family(3, 2)), ("b-family", b_family(3, 2))]:
    print(f"{name:9s} valid={is_valid_polarization(f)}  generators: {generators_from_family(f)}")

# %% Exhaustive sweep: the spanning-tree test agrees with the Hilbert series.
fams = list(enumerate_families(3, 2))
valid = [f for f in fams if is_valid_polarization(f)]
agree = all(is_valid_polarization(f) == is_polarization_oracle(generators_from_family(f), 3, 2) for f in fams)
print(f"\n(3,2): {len(fams)} families, {len(valid)} valid, agreement with Hilbert series: {agree}")
print("iso classes among valid:", len({canonical_form(f).key() for f in valid}))

# %% An invalid family points at the apex where the LS-edges stop spanning.
bad = family_from_json(json.loads((DATA / "two_qs_edges.json").read_text()))
print("\ntwo_qs_edges.json: QS-edges", [e.endpoints for e in qs_edges(bad)])
print("  failing apex:", polarization_witness(bad))

# %% Dual from up-graphs versus minimal transversals.
f = family_from_json(json.loads((DATA / "three_colors_n3.json").read_text()))
dual = alexander_dual_from_family(f)
print(f"\nthree_colors_n3.json: dual has {len(dual)} generators;",
      "matches transversal oracle:", dual == alexander_dual_oracle(generators_from_family(f)))
print(ideal_to_m2(dual, "J"))
