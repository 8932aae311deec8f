import random
from fractions import Fraction

import pytest

from baxcheck.exactnum import FieldMatrix, MultiPoly, RatFunc, SingularMatrixError, canonical_vars

V = canonical_vars(["x", "y"])


def rational(rows):
    return FieldMatrix.from_rows([[Fraction(e) for e in row] for row in rows])


def test_identity_inverse():
    ident = FieldMatrix.identity(3, Fraction(1))
    assert ident.inv() == ident


def test_nilpotent_neumann_series_terminates():
    Vz = canonical_vars(["z"])
    z = RatFunc.var(Vz, "z")
    one, zero = RatFunc.one(Vz), RatFunc.zero(Vz)
    m = FieldMatrix.from_rows([[one, -z], [zero, one]])
    assert m.inv() == FieldMatrix.from_rows([[one, z], [zero, one]])


def test_singular_matrix_reports_determinant():
    m = rational([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as err:
        m.inv()
    assert err.value.determinant == 0


def test_random_rational_inverses():
    rng = random.Random(7)
    done = 0
    while done < 15:
        n = rng.randint(1, 5)
        m = FieldMatrix(n, n, [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n * n)])
        try:
            inv = m.inv()
        except SingularMatrixError:
            continue
        assert (m * inv).is_identity() and (inv * m).is_identity()
        done += 1


def test_random_function_field_inverses():
    rng = random.Random(3)

    def rpoly():
        p = MultiPoly.zero(V)
        for _ in range(rng.randint(1, 2)):
            e = (rng.randint(0, 1), rng.randint(0, 1))
            p = p + MultiPoly(V, {e: Fraction(rng.randint(-3, 3))})
        return p

    def entry():
        while True:
            den = rpoly() + 1
            if not den.is_zero:
                return RatFunc(rpoly(), den)

    done = 0
    while done < 5:
        m = FieldMatrix.from_rows([[entry() for _ in range(3)] for _ in range(3)])
        try:
            inv = m.inv()
        except SingularMatrixError:
            continue
        assert (m * inv).is_identity() and (inv * m).is_identity()
        done += 1


def test_det_known_value_and_multiplicativity():
    a = rational([[2, 1], [1, 1]])
    b = rational([[0, 1], [3, 5]])
    assert a.det() == 1
    assert (a * b).det() == a.det() * b.det()


def test_det_function_field():
    x = RatFunc.var(V, "x")
    one, zero = RatFunc.one(V), RatFunc.zero(V)
    m = FieldMatrix.from_rows([[x, one], [zero, x]])
    assert m.det() == x * x


def test_kron_and_partial_trace():
    a = rational([[1, 2], [3, 4]])
    b = rational([[0, 1], [1, 0]])
    big = a.kron(b)
    assert big.rows == 4
    # tracing out the first factor leaves tr(a) * b
    assert big.partial_trace_first(2) == b.scale(a.trace())


def test_shape_errors():
    with pytest.raises(ValueError):
        rational([[1, 2]]) * rational([[1, 2]])
    with pytest.raises(ValueError):
        rational([[1, 2]]).inv()
    with pytest.raises(ValueError):
        FieldMatrix(2, 2, [Fraction(1)] * 3)
