from fractions import Fraction

import pytest

from hopfkit.cyclo import (ExactMatrix, FieldElement, Subspace, embed, euler_phi,
                           field_element, kernel, nth_root_in_field, order_of, proportional, zeta)


def test_zeta_powers_close_up():
    for M in (1, 2, 3, 4, 5, 6, 8, 12):
        assert zeta(M) ** M == 1
        assert sum((zeta(M, k) for k in range(M)), FieldElement.rational(0)) == (1 if M == 1 else 0)


def test_embed():
    assert embed(zeta(4), 8) == zeta(8, 2)
    assert embed(field_element(Fraction(3, 2)), 6) == Fraction(3, 2)
    assert embed(zeta(6), 12) == zeta(12, 2)


def test_mixed_conductor_arithmetic():
    # zeta_4 * zeta_3 is a primitive 12th root
    assert order_of(zeta(4) * zeta(3)) == 12
    assert zeta(4) + zeta(4) ** 3 == 0


def test_order_of():
    assert order_of(zeta(4)) == 4
    assert order_of(field_element(-1)) == 2
    assert order_of(zeta(6) ** 2) == 3
    assert order_of(field_element(2)) is None


def test_inverse_and_division():
    x = zeta(5) + 3
    assert x * x.inverse() == 1
    assert (x / x) == 1
    with pytest.raises(ZeroDivisionError):
        FieldElement.rational(0).inverse()


def test_kernel_examples():
    assert kernel(ExactMatrix.identity(3)) == []
    assert len(kernel(ExactMatrix(2, 3))) == 3
    (v,) = kernel(ExactMatrix.from_rows([[1, -1]]))
    assert v[0] == v[1] and v[0] != 0


def test_nth_roots():
    r = nth_root_in_field(-2, 2, 8)
    assert r is not None and r * r == -2
    assert r == zeta(8) - zeta(8) ** 7 or -r == zeta(8) - zeta(8) ** 7
    assert nth_root_in_field(8, 3) == 2
    assert nth_root_in_field(2, 2, 4) is None


def test_exact_matrix_inverse():
    A = ExactMatrix.from_rows([[1, 2], [zeta(3), 1]])
    assert A @ A.inverse() == ExactMatrix.identity(2)
    assert A.rank() == 2


def test_subspace_express():
    s = Subspace(3, track=True)
    u = {0: field_element(1), 1: field_element(2)}
    v = {1: field_element(1), 2: zeta(4)}
    s.add(u)
    s.add(v)
    w = {0: field_element(1), 1: field_element(3), 2: zeta(4)}
    assert s.contains(w)
    assert not s.contains({2: field_element(1)})
    assert proportional({0: zeta(4) * 2}, {0: zeta(4)}) == 2


def test_euler_phi():
    assert [euler_phi(m) for m in (1, 2, 3, 4, 5, 6, 8, 12)] == [1, 1, 2, 2, 4, 2, 4, 4]


def test_json_round_trip():
    x = zeta(12, 5) * Fraction(2, 3) - 1
    assert FieldElement.from_json(x.to_json()) == x
