import random
from fractions import Fraction

import pytest

from geodesy import sampling
from geodesy.algebra import (
    MembershipError,
    SuPQShape,
    cartan_decompose,
    cartan_involution,
    check_kH_irreducible,
    complex_structure,
    in_p_part,
    in_su_pp,
    su11_basis,
)
from geodesy.gaussmat import GaussMatrix, I, bracket


def test_shape_validation():
    assert SuPQShape(3).q == 3
    assert SuPQShape(2, 2).size == 4
    with pytest.raises(ValueError):
        SuPQShape(0)
    with pytest.raises(ValueError):
        SuPQShape(2, 3)


def test_basis_constants():
    basis = su11_basis()
    assert basis.u == GaussMatrix([[0, 1], [1, 0]])
    assert basis.v == GaussMatrix([[0, 1j], [-1j, 0]])
    assert basis.w == GaussMatrix([[1j, 0], [0, -1j]])
    half = Fraction(1, 2)
    assert basis.x == (basis.u - basis.v * I) * half
    assert basis.y == (basis.u + basis.v * I) * half
    assert basis.h == basis.w * (-I)
    assert basis.x == GaussMatrix([[0, 1], [0, 0]])
    assert basis.h == GaussMatrix.diagonal([1, -1])


def test_membership_examples():
    shape = SuPQShape(1)
    assert in_su_pp(GaussMatrix.zeros(2, 2), shape)
    member = GaussMatrix([[1j, Fraction(3, 7)], [Fraction(3, 7), -1j]])
    assert in_su_pp(member, shape)
    assert not in_su_pp(GaussMatrix.diagonal([1, -1]), shape)
    with pytest.raises(ValueError):
        in_su_pp(GaussMatrix.zeros(3, 3), shape)


def test_membership_needs_matching_corner():
    shape = SuPQShape(1)
    bad = GaussMatrix([[1j, 1], [2, -1j]])  # lower-left is not the adjoint
    assert not in_su_pp(bad, shape)


def test_membership_trace_balance():
    shape = SuPQShape(2)
    a = GaussMatrix.diagonal([1j, 1j, -1j, -1j])
    assert in_su_pp(a, shape)
    unbalanced = GaussMatrix.diagonal([1j, 1j, -1j, 0])
    assert not in_su_pp(unbalanced, shape)


def test_cartan_decompose_examples():
    shape = SuPQShape(1)
    basis = su11_basis()
    split = cartan_decompose(basis.w, shape)
    assert split.k_part == basis.w and split.p_part.is_zero()
    split_u = cartan_decompose(basis.u, shape)
    assert split_u.k_part.is_zero() and split_u.p_part == basis.u
    with pytest.raises(MembershipError):
        cartan_decompose(GaussMatrix.diagonal([1, -1]), shape)


def test_cartan_split_reassembles():
    rng = random.Random(21)
    for p in (1, 2, 3):
        shape = SuPQShape(p)
        a = sampling.su_pp(rng, shape)
        split = cartan_decompose(a, shape)
        assert split.reassemble() == a
        assert cartan_involution(split.k_part, shape) == split.k_part
        assert cartan_involution(split.p_part, shape) == -split.p_part


def test_involution_is_automorphism():
    rng = random.Random(22)
    for i in range(100):
        shape = SuPQShape(1 + i % 3)
        a, b = sampling.su_pp(rng, shape), sampling.su_pp(rng, shape)
        assert cartan_involution(cartan_involution(a, shape), shape) == a
        assert cartan_involution(bracket(a, b), shape) == bracket(
            cartan_involution(a, shape), cartan_involution(b, shape)
        )


def test_cartan_bracket_inclusions():
    rng = random.Random(23)
    for i in range(100):
        shape = SuPQShape(1 + i % 3)
        k1, k2 = sampling.k_part(rng, shape), sampling.k_part(rng, shape)
        p1, p2 = sampling.p_part(rng, shape), sampling.p_part(rng, shape)
        assert cartan_decompose(bracket(k1, k2), shape).p_part.is_zero()
        assert cartan_decompose(bracket(k1, p1), shape).k_part.is_zero()
        assert cartan_decompose(bracket(p1, p2), shape).p_part.is_zero()


def test_complex_structure_examples():
    shape = SuPQShape(1)
    basis = su11_basis()
    assert complex_structure(basis.u, shape) == basis.v
    assert complex_structure(GaussMatrix.zeros(2, 2), shape).is_zero()
    with pytest.raises(MembershipError):
        complex_structure(basis.w, shape)


def test_complex_structure_squares_to_minus_one():
    rng = random.Random(24)
    for i in range(100):
        shape = SuPQShape(1 + i % 3)
        a = sampling.p_part(rng, shape)
        assert in_p_part(a, shape)
        assert complex_structure(complex_structure(a, shape), shape) == -a


def test_complex_structure_commutes_with_center():
    rng = random.Random(25)
    for i in range(50):
        shape = SuPQShape(1 + i % 3)
        a = sampling.p_part(rng, shape)
        center = GaussMatrix.diagonal([1j] * shape.p + [-1j] * shape.p)
        assert complex_structure(bracket(center, a), shape) == bracket(
            center, complex_structure(a, shape)
        )


def test_rotation_action_has_no_real_eigenvector():
    assert check_kH_irreducible()
    # the action matrix itself, recomputed here: [w,u] = 2v, [w,v] = -2u
    basis = su11_basis()
    wu = bracket(basis.w, basis.u)
    wv = bracket(basis.w, basis.v)
    assert (wu[0, 1].re, wu[0, 1].im) == (0, 2)
    assert (wv[0, 1].re, wv[0, 1].im) == (-2, 0)
    trace = 0 + 0
    det = 0 * 0 - (-2) * 2
    assert trace == 0 and det == 4 and trace * trace - 4 * det < 0
