"""q-Frobenius method for L5 = (1-E)^5 - Q prod_j (1 - q^j E^5)."""

from qkquintic import frobenius_data, frobenius_residual, frobenius_solutions, l5_factor, l5_operator

M = 10
data = frobenius_data(M)
print("J0 at Q^1:", data.J[0][1])
print("J1 at Q^1:", data.J[1][1])

L = l5_operator(M)
print("E-support of L5:", sorted(L.support()))
for n in range(4):
    r = frobenius_residual(n, data)
    print(f"residual {n} zero through Q^{M - 1}:", all(r[k].is_zero() for k in range(M)))

_, rem = l5_factor(M)
print("(1 - E) divides L5:", rem.is_zero())

# logarithmic solutions, lam = log Q / log q
f = frobenius_solutions(data)
print("L5 f_3 == 0:", all(k >= M for (k, _), _c in L(f[3]).items()))
