"""Two-qubit concurrence: reference states, the spin flip, and the largest
concurrence reachable on a unitary orbit.

Run:  python demos/02_concurrence.py
"""

import numpy as np

from pumplimit import (
    concurrence,
    construct_max_entangled_state,
    spin_flip,
    unitary_max_concurrence,
    wootters_spectrum,
)

np.set_printoptions(precision=4, suppress=True)


def bell():
    v = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    return np.outer(v, v)


def werner(p):
    return p * bell() + (1.0 - p) * np.eye(4) / 4.0


print("Concurrence ranges from 0 (separable) to 1 (Bell states).  It is")
print("computed from the spin-flipped state rho~ = (sy x sy) rho* (sy x sy)\n")

product = np.zeros((4, 4), dtype=complex)
product[0, 0] = 1.0
print(f"product state |HH><HH|      : C = {concurrence(product):.4f}")
print(f"Bell state (|HH>+|VV>)/sqrt2: C = {concurrence(bell()):.4f}")
print(f"spin flip swaps HH and VV   : diag(rho~) = {np.real(np.diag(spin_flip(product)))}\n")

print("Werner family p |Bell><Bell| + (1-p) I/4, closed form max{0,(3p-1)/2}:")
for p in (0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0):
    print(f"  p = {p:.3f}: C = {concurrence(werner(p)):.6f}  "
          f"(closed form {max(0.0, (3 * p - 1) / 2):.6f})")

print("\nThe s-values behind the concurrence (C = max(0, s1-s2-s3-s4)):")
print(f"  Werner p=0.8: s = {wootters_spectrum(werner(0.8))}\n")

print("Global unitaries change the concurrence but not the spectrum.  For a")
print("given spectrum (l1 >= l2 >= l3 >= l4) the reachable maximum is")
print("max{0, l1 - l3 - 2 sqrt(l2 l4)}, and a state attaining it is built")
print("from Bell projectors plus computational-basis weights:\n")
for spec in ([1.0, 0.0, 0.0, 0.0], [0.75, 0.25, 0.0, 0.0], [0.4, 0.3, 0.2, 0.1]):
    ceiling = unitary_max_concurrence(spec)
    achieved = concurrence(construct_max_entangled_state(spec))
    print(f"  spectrum {spec}: ceiling = {ceiling:.6f}, constructed state C = {achieved:.6f}")
