"""Pump polarization states: coherency matrix, degree of polarization,
polarized/unpolarized split, and the 4x4 embedding.

Run:  python demos/01_pump_polarization.py
"""

import numpy as np

from pumplimit import (
    canonical_pump,
    degree_of_polarization,
    embed_pump,
    polar_decompose,
)

np.set_printoptions(precision=4, suppress=True)

print("A normalized pump beam is described by its 2x2 coherency matrix J of")
print("second-order field moments <E_a E_b*>, a,b in {H, V}.\n")

for label, j in [
    ("fully unpolarized (J = I/2)", np.eye(2) / 2.0),
    ("fully polarized along H", np.diag([1.0, 0.0])),
    ("partially polarized, P = 0.5", np.array([[0.5, 0.25], [0.25, 0.5]])),
]:
    print(f"{label}:")
    print(j)
    print(f"  degree of polarization P = {degree_of_polarization(j):.6f}\n")

print("Any pump splits uniquely into a fully polarized and a fully")
print("unpolarized part, J = P |psi><psi| + (1-P) I/2:\n")
j = canonical_pump(0.6)
dec = polar_decompose(j)
print(f"canonical pump with P = 0.6:\n{j}")
print(f"  pure part weight      : {dec.p:.6f}")
print(f"  polarized direction   : {dec.pure_state}")
print(f"  unpolarized weight    : {dec.unpolarized_weight:.6f}")
print(f"  reconstruction error  : {np.max(np.abs(dec.reconstruct() - j)):.2e}\n")

print("To compare the pump with the two-photon states it can produce, embed")
print("J into the 4x4 pair space (top-left block).  The embedded spectrum is")
print("((1+P)/2, (1-P)/2, 0, 0), the quantity every bound is written in:\n")
emb = embed_pump(j)
print(emb.sigma.real)
print(f"  spectrum: {emb.spectrum}")
print(f"  (1+P)/2 = {(1 + 0.6) / 2:.4f}, (1-P)/2 = {(1 - 0.6) / 2:.4f}")
