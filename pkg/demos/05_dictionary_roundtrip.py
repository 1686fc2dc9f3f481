"""
The dictionary: coefficients predict stable decompositions
==========================================================

Once the Taylor coefficients of a module are known, padding their
irreducible constituents predicts the S_k-decomposition of E(k) for every
k in the stable range -- without ever evaluating E there.  This demo
computes both sides independently and watches them agree, then round-trips
a module through the JSON interchange format.
"""

import tempfile

from ficalc.fimod import (
    coefficient_profile,
    dictionary_prediction,
    free_module,
    load_module,
    representation_stability_check,
    save_module,
    stable_decomposition,
)

# A free module on the 2-dimensional irreducible of S_3.
E = free_module((2, 1), 8)
print("module:", E.name, "dims:", E.dims)

# Side one: decompose each stage directly from its character.
for k in (6, 7, 8):
    print(f"  direct at k={k}:", stable_decomposition(E, k).nonzero())

# Side two: compute the coefficient profile once...
profile = coefficient_profile(E)
print("coefficient degree-0 dims:",
      [c.dims[0] for c in profile.coefficients])

# ...and predict the same decompositions by padding partitions.
for k in (6, 7, 8):
    predicted = dictionary_prediction(profile, k).nonzero()
    direct = stable_decomposition(E, k).nonzero()
    print(f"  predicted at k={k}:", predicted, "| agree:", predicted == direct)

# The prediction keeps working past the stored window.
print("extrapolated to k=20:", dictionary_prediction(profile, 20).nonzero())

# Representation stability: the padded multiplicity pattern becomes
# constant, and the report pins down where.
report = representation_stability_check(E, 3)
print("stable from k =", report.stable_from)
for tail, row in sorted(report.trajectories.items()):
    print(f"  tail {tail or '()'}: multiplicities {row}")

# Round-trip the window through the strict JSON interchange format.
with tempfile.NamedTemporaryFile(suffix=".json", mode="w", delete=False) as handle:
    path = handle.name
save_module(E, path)
reloaded = load_module(path)
print("JSON round-trip preserves dims:", reloaded.dims == E.dims)
print("and the stage decompositions:",
      stable_decomposition(reloaded, 7).nonzero()
      == stable_decomposition(E, 7).nonzero())
