"""Product engine: Cayley tables, ring axioms, grade structure."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pgakit import Multivector, Signature, SignatureMismatchError, algebra

from conftest import PLANAR_TABLE, random_mv


def test_planar_cayley_table(plane_alg):
    names = plane_alg.blade_names
    assert names == ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"]
    for row in names:
        for col, want in zip(names, PLANAR_TABLE[row]):
            got = repr(plane_alg.blade(row) * plane_alg.blade(col)).replace(" ", "")
            assert got == want, f"{row} * {col}"


def test_basis_names_3d(space_alg):
    assert space_alg.blade_names == [
        "1", "e0", "e1", "e2", "e3",
        "e01", "e02", "e03", "e12", "e31", "e23",
        "E0", "E1", "E2", "E3", "I"]


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(-1, 0, 0)
    with pytest.raises(ValueError):
        Signature(7, 0, 0)
    assert Signature(3, 0, 1).squares == (0, 1, 1, 1)
    assert Signature(3, 1, 0).squares == (-1, 1, 1, 1)


def test_metric_squares(space_alg):
    one = space_alg.scalar(1.0)
    assert space_alg.blade("e1") * space_alg.blade("e1") == one
    assert space_alg.blade("e0") * space_alg.blade("e0") == space_alg.zero()
    assert space_alg.blade("I") * space_alg.blade("I") == space_alg.zero()
    assert space_alg.blade("e12") * space_alg.blade("e12") == -one


def test_planar_trivector_product_examples(plane_alg):
    e1, e2 = plane_alg.blade("e1"), plane_alg.blade("e2")
    assert e1 * e2 == plane_alg.blade("E0")
    assert e2 * e1 == -plane_alg.blade("E0")


def test_associativity_random(space_alg, rng):
    for _ in range(50):
        a, b, c = (random_mv(space_alg, rng) for _ in range(3))
        lhs, rhs = (a * b) * c, a * (b * c)
        assert lhs.isclose(rhs, rel=1e-12)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=24, max_size=24))
def test_exact_ring_axioms_small_integers(ints):
    # products of small integers are exact in floats, so associativity
    # and distributivity must hold with no tolerance at all
    alg = algebra(2, 0, 1)
    a = Multivector(alg, np.array(ints[:8], dtype=float))
    b = Multivector(alg, np.array(ints[8:16], dtype=float))
    c = Multivector(alg, np.array(ints[16:], dtype=float))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_vector_anticommutator_is_polarization(space_alg, rng):
    for _ in range(20):
        x = random_mv(space_alg, rng, grade=1)
        y = random_mv(space_alg, rng, grade=1)
        sym = x * y + y * x
        dot = 2.0 * (x | y).scalar_part
        assert sym.isclose(space_alg.scalar(dot), rel=1e-12)


def test_grade_decomposition(space_alg, rng):
    x = random_mv(space_alg, rng)
    total = space_alg.zero()
    for k in range(space_alg.dim + 1):
        total = total + x.grade(k)
    assert total == x


def test_outer_product_alternates(space_alg, rng):
    for _ in range(10):
        x = random_mv(space_alg, rng, grade=1)
        assert (x ^ x).isclose(space_alg.zero())


def test_outer_is_metric_independent(rng):
    # same wedge coefficients in the degenerate and the elliptic algebra
    a_deg, a_ell = algebra(2, 0, 1), algebra(3, 0, 0)
    co1, co2 = rng.normal(size=8), rng.normal(size=8)
    w_deg = Multivector(a_deg, co1) ^ Multivector(a_deg, co2)
    w_ell = Multivector(a_ell, co1) ^ Multivector(a_ell, co2)
    np.testing.assert_allclose(w_deg.coeffs, w_ell.coeffs, atol=1e-14)


def test_wedge_equals_grade_sum_part_of_product(plane_alg):
    a = plane_alg.blade("e0") - plane_alg.blade("e1")
    b = plane_alg.blade("e2")
    assert (a ^ b) == (a * b).grade(2)


def test_inner_examples(space_alg):
    e1, e0 = space_alg.blade("e1"), space_alg.blade("e0")
    assert (e1 | e1) == space_alg.scalar(1.0)
    assert (e0 | e0) == space_alg.zero()
    e12 = space_alg.blade("e12")
    assert (e12 | e12) == space_alg.scalar(-1.0)


def test_commutator(space_alg, rng):
    x = random_mv(space_alg, rng, grade=2)
    assert x.commutator(x).isclose(space_alg.zero())
    e12, e23 = space_alg.blade("e12"), space_alg.blade("e23")
    assert e12.commutator(e23) == -space_alg.blade("e31")
    # a point on the axis of a simple velocity bivector does not move
    origin = space_alg.blade("E0")
    assert e12.commutator(origin) == space_alg.zero()
    # matches the grade-2 part of the product on bivector pairs
    y = random_mv(space_alg, rng, grade=2)
    assert x.commutator(y).isclose((x * y).grade(2), rel=1e-12)


def test_reversion(space_alg, rng):
    e12 = space_alg.blade("e12")
    assert ~e12 == -e12
    a, b = random_mv(space_alg, rng), random_mv(space_alg, rng)
    assert (~(a * b)).isclose(~b * ~a, rel=1e-12)
    g = space_alg.scalar(1.0) + e12
    prod = ~g * g
    assert prod.grades() in ([0], [0, 4])


def test_grade_projection_of_product(space_alg):
    e1, e2 = space_alg.blade("e1"), space_alg.blade("e2")
    assert (e1 * e2).grade(2) == (e1 ^ e2)


def test_signature_mismatch(plane_alg, space_alg):
    with pytest.raises(SignatureMismatchError):
        plane_alg.scalar(1.0) * space_alg.scalar(1.0)


def test_scalar_interop(space_alg):
    x = space_alg.blade("e1")
    assert (2 * x - x) == x
    assert (x + 1)["1"] == 1.0
    assert (x / 2)["e1"] == 0.5


def test_immutability(space_alg):
    x = space_alg.blade("e1")
    with pytest.raises(ValueError):
        x.coeffs[0] = 5.0
    with pytest.raises(AttributeError):
        x.coeffs = np.zeros(16)


def test_formatting(space_alg):
    x = space_alg.multivector({"1": 1.0, "e01": 2.0, "e23": -1.0})
    assert repr(x) == "1 + 2e01 - e23"
    assert repr(space_alg.zero()) == "0"


def test_generic_dimensions_product_engine(rng):
    # engine accepts dims 2..6; check associativity away from the metric layer
    for sig in [(2, 0, 0), (4, 1, 0), (5, 0, 1)]:
        alg = algebra(*sig)
        a, b, c = (Multivector(alg, rng.normal(size=alg.n_blades))
                   for _ in range(3))
        assert ((a * b) * c).isclose(a * (b * c), rel=1e-11)
        perm = alg.complement_index
        assert np.array_equal(perm[perm], np.arange(alg.n_blades))
