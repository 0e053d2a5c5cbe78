"""Birkhoff factorization, the D-matrix and the q-deformed Yukawa coupling."""

from qkquintic import (
    GVTable,
    birkhoff,
    conjectural_small_j,
    d_matrix_closed,
    scalar_operator,
    shifted_matrix,
    solution_space,
    t_matrix_closed,
    yukawa,
)
from qkquintic.scalars import limit_q1
from qkquintic.serialize import qseries_to_text

gv = GVTable.default()
N = 5

M = shifted_matrix(conjectural_small_j(gv, N))
T, U = birkhoff(M)
print("T equals its closed form:", T == t_matrix_closed(gv, N))
print("T U == M:", T * U == M)

Y = yukawa(gv, N)
for line in qseries_to_text(Y.quantum.truncate(3), "c_ttt(Q,q)"):
    print(line)
print("q -> 1:", ", ".join(str(limit_q1(c)) for c in Y.quantum))
print("classical:", ", ".join(str(c.constant_value()) for c in Y.classical))

# a fourth order scalar operator annihilates the first component of every
# solution of Delta y = D y
D = d_matrix_closed(gv, N)
L = scalar_operator(D)
print("L y0 == 0 on all four solutions:", all(L(ys[0]).is_zero() for ys in solution_space(D)))
