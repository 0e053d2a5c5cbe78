"""Small J-function of the quintic from its I-function.

Run with ``python demos/01_small_j_function.py``.
"""

from qkquintic import GVTable, conjectural_small_j, extract_qk_invariants, solve_epsilon
from qkquintic.serialize import kseries_to_text

N = 4

# degree by degree, the flow coefficients eps_{n,l}(q) make J reduced
eps, J = solve_epsilon(N)
print("eps_{1,0}(q) =", eps[1, 0])
print()
for line in kseries_to_text(J.truncate(2), "J"):
    print(line)

# the same series from the GV invariants alone
gv = GVTable.default()
print("\nflow J == GV formula through Q^%d:" % N, J == conjectural_small_j(gv, N))

# one-point invariants, read off with the dual basis and set at q = 0
S = extract_qk_invariants(J)
for s in S[:2]:
    print(f"alpha={s.class_index}:", ", ".join(str(s.series[n](0)) for n in range(1, N + 1)))
