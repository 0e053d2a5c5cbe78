from itertools import product

from qkquintic.kring import DIM, PAIRING, KElem, dual_basis, k_mul, pairing
from qkquintic.scalars import ONE, ZERO, QRatFun

X = [KElem.basis(a) for a in range(DIM)]


def test_mul_examples():
    assert k_mul(X[2], X[2]).is_zero()
    assert k_mul(KElem([1, -1]), KElem([1, 1, 1, 1])) == KElem.one()
    a = KElem([1, QRatFun.q(1), 0, 3])
    assert k_mul(KElem.one(), a) == a


def test_ring_axioms_on_monomials():
    for a, b, c in product(X, repeat=3):
        assert k_mul(a, b) == k_mul(b, a)
        assert k_mul(k_mul(a, b), c) == k_mul(a, k_mul(b, c))


def test_pairing_entries():
    assert pairing(X[0], X[1]) == QRatFun.const(5)
    assert pairing(X[1], X[1]) == QRatFun.const(-5)
    assert pairing(X[3], X[3]) == ZERO
    for i, j in product(range(DIM), repeat=2):
        assert PAIRING[i][j] == PAIRING[j][i]


def test_dual_basis():
    D = dual_basis()
    assert D[0] == X[3] * QRatFun.const(1) / 5
    for a, b in product(range(DIM), repeat=2):
        assert pairing(D[a], X[b]) == (ONE if a == b else ZERO)


def test_change_of_basis_roundtrip():
    D = dual_basis()
    assert X[3] == D[0] * 5
    assert X[2] == (D[1] - D[0]) * 5
    assert X[1] == (D[2] - D[1] + D[0]) * 5
    assert X[0] == (D[3] - D[2] + D[1]) * 5


def test_inverse_and_basis_change():
    a = KElem([2, 1, QRatFun.q(1), -1])
    assert a * a.inverse() == KElem.one()
    assert KElem.from_one_minus_x_basis(a.to_one_minus_x_basis()) == a
