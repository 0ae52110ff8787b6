import random
from fractions import Fraction

from pointschemes.fields import PrimeField, Rationals
from pointschemes.linalg import in_span, kron, matmul, nullspace, rank, rref
from pointschemes.verify import kernel_sum_law_holds


def _random_matrix(rng, field, nrows, ncols):
    if field.is_prime:
        return [tuple(rng.randrange(field.p) for _ in range(ncols)) for _ in range(nrows)]
    return [
        tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(ncols))
        for _ in range(nrows)
    ]


def test_rref_known():
    Q = Rationals()
    basis = rref(Q, [(Fraction(2), Fraction(4)), (Fraction(1), Fraction(2))])
    assert basis == [(Fraction(1), Fraction(2))]
    F2 = PrimeField(2)
    basis = rref(F2, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert basis == [(1, 0, 1), (0, 1, 1)]


def test_rref_is_reduced():
    # later pivots must be cleared from earlier rows
    F3 = PrimeField(3)
    basis = rref(F3, [(1, 2, 2, 0), (0, 2, 1, 2), (2, 0, 0, 1), (1, 0, 0, 2)])
    pivots = []
    for row in basis:
        j = next(i for i, c in enumerate(row) if c != 0)
        assert row[j] == 1
        pivots.append(j)
    assert pivots == sorted(pivots)
    for row in basis:
        for other_pivot in pivots:
            others = [r for r in basis if next(i for i, c in enumerate(r) if c != 0) == other_pivot]
            if others[0] is not row:
                assert row[other_pivot] == 0


def test_rref_idempotent_random():
    rng = random.Random(7)
    for field in (PrimeField(2), PrimeField(5), Rationals()):
        for _ in range(30):
            rows = _random_matrix(rng, field, rng.randint(1, 5), rng.randint(1, 5))
            once = rref(field, rows)
            assert rref(field, once) == once


def test_nullspace_vectors_lie_in_kernel():
    rng = random.Random(13)
    for field in (PrimeField(2), PrimeField(3), Rationals()):
        for _ in range(40):
            m, n = rng.randint(1, 5), rng.randint(1, 6)
            rows = _random_matrix(rng, field, m, n)
            ker = nullspace(field, rows, n)
            assert len(ker) == n - rank(field, rows)
            for v in ker:
                for row in rows:
                    acc = field.zero
                    for a, b in zip(row, v):
                        acc = field.add(acc, field.mul(a, b))
                    assert acc == field.zero


def test_in_span():
    F5 = PrimeField(5)
    rows = [(1, 2, 0), (0, 0, 1)]
    assert in_span(F5, rows, (2, 4, 3))
    assert not in_span(F5, rows, (0, 1, 0))


def test_kron_shape_and_values():
    F7 = PrimeField(7)
    a = [(1, 2), (3, 4)]
    b = [(5,), (6,)]
    k = kron(F7, a, b)
    assert len(k) == 4 and len(k[0]) == 2
    assert k[0] == (5, 3)  # (1*5, 2*5) mod 7


def test_matmul_against_direct():
    F5 = PrimeField(5)
    a = [(1, 2), (3, 4)]
    b = [(0, 1), (2, 3)]
    assert matmul(F5, a, b) == [(4, 2), (3, 0)]


def test_kernel_sum_law_regression():
    # this instance exposed a reduction bug in an earlier rref
    F3 = PrimeField(3)
    phi = [(1, 2, 2, 0), (0, 2, 1, 2), (2, 0, 0, 1), (1, 0, 0, 2)]
    psi = [(2, 1, 1, 2, 2)]
    assert kernel_sum_law_holds(F3, phi, psi, 4, 5)


def test_kernel_sum_law_random():
    rng = random.Random(29)
    for field in (PrimeField(2), PrimeField(3), Rationals()):
        for _ in range(25):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            phi = _random_matrix(rng, field, rng.randint(1, m), m)
            psi = _random_matrix(rng, field, rng.randint(1, n), n)
            assert kernel_sum_law_holds(field, phi, psi, m, n)
