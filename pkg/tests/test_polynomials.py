from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nilshadow.polynomials import (
    LinearRoot,
    Polynomial,
    QuadPair,
    RootValue,
    UnfactorablePolynomialError,
    factor_into_atoms,
    poly_gcd,
    poly_xgcd,
    roots_of_atoms,
    squarefree_part,
)
from nilshadow.scalars import Q, Scalar

small_rationals = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def poly_from(fracs):
    return Polynomial([Scalar(Q(f.numerator, f.denominator)) for f in fracs])


polys = st.lists(small_rationals, min_size=1, max_size=6).map(poly_from).filter(
    lambda p: not p.is_zero()
)


class TestRingOps:
    def test_divmod(self):
        p = Polynomial.from_roots([1, 2, 3])
        q, r = divmod(p, Polynomial([-2, 1]))
        assert r.is_zero()
        assert q == Polynomial.from_roots([1, 3])

    def test_gcd(self):
        p = Polynomial.from_roots([1, 1, 2])
        q = Polynomial.from_roots([1, 3])
        assert poly_gcd(p, q) == Polynomial.from_roots([1])

    def test_xgcd_bezout(self):
        p = Polynomial.from_roots([1, 2])
        q = Polynomial.from_roots([3])
        g, u, v = poly_xgcd(p, q)
        assert u * p + v * q == g

    def test_compose_shift(self):
        p = Polynomial([0, 0, 1])  # t^2
        assert p.shift(Scalar(1)) == Polynomial([1, 2, 1])


class TestSquarefree:
    def test_power(self):
        assert squarefree_part(Polynomial([0, 0, 0, 1])) == Polynomial([0, 1])  # t^3 -> t

    def test_repeated_root(self):
        p = Polynomial.from_roots([1, 1, -1])
        assert squarefree_part(p) == Polynomial.from_roots([1, -1])

    def test_already_squarefree(self):
        p = Polynomial([1, 0, 1])  # t^2 + 1
        assert squarefree_part(p) == p

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_part(Polynomial())

    @given(polys)
    @settings(max_examples=60, deadline=None)
    def test_properties(self, p):
        s = squarefree_part(p)
        assert s.divides(p)
        assert poly_gcd(s, s.derivative()).degree() == 0


class TestFactorization:
    def test_rational_roots_with_multiplicity(self):
        atoms = factor_into_atoms(Polynomial.from_roots([Scalar(Q(1, 2)), Scalar(Q(1, 2)), 0, -3]))
        values = sorted(str(a.value) for a in atoms)
        assert values == ["-3/1", "0/1", "1/2", "1/2"]

    def test_irreducible_quadratic(self):
        atoms = factor_into_atoms(Polynomial([1, 0, 1]))
        assert atoms == [QuadPair(Scalar(0), Scalar(1))]

    def test_quartic_two_complex_pairs(self):
        # (t^2+1)(t^2-2t+2)
        p = Polynomial([1, 0, 1]) * Polynomial([2, -2, 1])
        atoms = factor_into_atoms(p)
        assert sorted((str(a.s), str(a.q)) for a in atoms) == [("0/1", "1/1"), ("2/1", "2/1")]

    def test_quartic_real_pairs(self):
        # (t^2-2)(t^2-3)
        p = Polynomial([-2, 0, 1]) * Polynomial([-3, 0, 1])
        atoms = factor_into_atoms(p)
        assert all(isinstance(a, QuadPair) for a in atoms)
        roots = roots_of_atoms(atoms)
        assert sorted(r.m for r in roots) == [2, 2, 3, 3]

    def test_mixed_linear_quadratic(self):
        p = Polynomial.from_roots([5]) * Polynomial([1, 1, 1])
        atoms = factor_into_atoms(p)
        kinds = sorted(type(a).__name__ for a in atoms)
        assert kinds == ["LinearRoot", "QuadPair"]

    def test_irreducible_cubic_rejected(self):
        with pytest.raises(UnfactorablePolynomialError):
            factor_into_atoms(Polynomial([-2, 0, 0, 1]))  # t^3 - 2

    def test_irreducible_quartic_rejected(self):
        with pytest.raises(UnfactorablePolynomialError):
            factor_into_atoms(Polynomial([-2, 0, 0, 0, 1]))  # t^4 - 2 (no rational quadratics... )

    def test_sqrt5_coefficients_rejected(self):
        with pytest.raises(UnfactorablePolynomialError):
            factor_into_atoms(Polynomial([Scalar(0, 1, 5), Scalar(1)]))

    @given(st.lists(small_rationals, min_size=3, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_reconstruction(self, fracs):
        roots = [Scalar(Q(f.numerator, f.denominator)) for f in fracs]
        p = Polynomial.from_roots(roots)
        atoms = factor_into_atoms(p)
        rebuilt = Polynomial([1])
        for a in atoms:
            assert isinstance(a, LinearRoot)
            rebuilt = rebuilt * Polynomial([-a.value, 1])
        assert rebuilt == p


def test_t4_minus_2_is_honestly_irreducible():
    # resolvent-cubic path must not invent factors: t^4 - 2 has the
    # factorization (t^2 - sqrt2)(t^2 + sqrt2) only outside Q
    with pytest.raises(UnfactorablePolynomialError):
        factor_into_atoms(Polynomial([-2, 0, 0, 0, 1]))


def test_quartic_with_rational_quadratic_split_no_rational_roots():
    # (t^2 - t + 1)(t^2 + t + 3) has no rational roots
    p = Polynomial([1, -1, 1]) * Polynomial([3, 1, 1])
    atoms = factor_into_atoms(p)
    assert sorted((str(a.s), str(a.q)) for a in atoms) == [("-1/1", "3/1"), ("1/1", "1/1")]


class TestRootValues:
    def test_conjugate_pair(self):
        (r1, r2) = roots_of_atoms([QuadPair(Scalar(1), Scalar(1))])  # t^2 - t + 1
        assert r1.m == -3 and r2.m == -3
        assert r1 + r2 == RootValue(Q(1), Q(0), 1)

    def test_incompatible_sum(self):
        a = RootValue(Q(0), Q(1), 2)
        b = RootValue(Q(0), Q(1), 3)
        assert a + b is None

    def test_scale(self):
        a = RootValue(Q(1, 2), Q(1), 5)
        assert a.scale(2) == RootValue(Q(1), Q(2), 5)
        assert a.scale(0) == RootValue(Q(0), Q(0), 1)
