from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nilshadow.jordan import is_nilpotent
from nilshadow.linalg import Matrix, Vector
from nilshadow.liealg import (
    JacobiError,
    LieAlgebra,
    NotNilpotentError,
    NotSolvableError,
    UnknownAtThisDimensionError,
    algebra_from_json,
    algebra_to_json,
    center,
    centralizer,
    commutator_subalgebra,
    derivation_space,
    derived_series,
    identify_nilpotent_dim_le4,
    is_ideal,
    is_nilpotent_algebra,
    is_solvable_algebra,
    lower_central_series,
    nilpotent_fingerprint,
    nilpotent_standard_basis,
    nilradical,
    span_of,
    standard_nilpotent,
    whole,
)
from nilshadow.scalars import Q, Scalar


def h3():
    return LieAlgebra(3, {(0, 1): [0, 0, 1]})


def r3():
    return LieAlgebra(3, {(0, 1): [0, 1, 0], (0, 2): [0, 1, 1]})


def n4():
    return LieAlgebra(4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]})


def rr3():
    return LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (0, 2): [0, 1, 1, 0]})


class TestBracket:
    def test_h3(self):
        g = h3()
        assert g.bracket(Vector.unit(3, 0), Vector.unit(3, 1)) == Vector([0, 0, 1])

    def test_alternating(self):
        g = r3()
        x = Vector([1, 2, 3])
        assert g.bracket(x, x).is_zero()

    def test_r3_second_bracket(self):
        g = r3()
        assert g.bracket(Vector.unit(3, 0), Vector.unit(3, 2)) == Vector([0, 1, 1])

    def test_jacobi_rejects_bad_constants(self):
        with pytest.raises(JacobiError):
            LieAlgebra(3, {(0, 1): [0, 0, 1], (0, 2): [1, 0, 0], (1, 2): [0, 1, 0]})


class TestAdjoint:
    def test_rr3_first_generator(self):
        g = rr3()
        expect = Matrix(
            [[0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 0]]
        )
        assert g.ad(Vector.unit(4, 0)) == expect

    def test_abelian(self):
        g = LieAlgebra(4, {})
        assert g.ad(Vector([1, 2, 3, 4])).is_zero()

    def test_h3(self):
        g = h3()
        assert g.ad(Vector.unit(3, 0)) == Matrix.unit(3, 2, 1)


class TestSeries:
    def test_h3(self):
        g = h3()
        comm = commutator_subalgebra(g)
        assert comm.dim == 1 and comm.contains(Vector([0, 0, 1]))
        assert [s.dim for s in lower_central_series(g)] == [3, 1, 0]

    def test_r3(self):
        comm = commutator_subalgebra(r3())
        assert comm.dim == 2
        assert comm.contains(Vector([0, 1, 0])) and comm.contains(Vector([0, 0, 1]))

    def test_n4_series_dims(self):
        assert [s.dim for s in lower_central_series(n4())] == [4, 2, 1, 0]

    def test_solvable_flags(self):
        assert is_solvable_algebra(rr3()) and not is_nilpotent_algebra(rr3())
        assert is_nilpotent_algebra(n4())
        assert [s.dim for s in derived_series(rr3())] == [4, 2, 0]


class TestCenterAndCentralizer:
    def test_h3_center(self):
        z = center(h3())
        assert z.dim == 1 and z.contains(Vector([0, 0, 1]))

    def test_abelian_center(self):
        g = LieAlgebra(2, {})
        assert center(g).dim == 2

    def test_centralizer_in_nilradical(self):
        lam = Scalar(Q(1, 2))
        g = LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (0, 2): Vector([0, 0, lam, 0])})
        nr = nilradical(g)
        c = centralizer(g, span_of(g, [Vector.unit(4, 0)]), nr)
        assert c.dim == 1 and c.contains(Vector.unit(4, 3))


class TestNilradical:
    def test_rr3(self):
        nr = nilradical(rr3())
        assert nr.dim == 3
        for i in (1, 2, 3):
            assert nr.contains(Vector.unit(4, i))

    def test_nilpotent_algebra_is_its_own(self):
        assert nilradical(n4()).dim == 4

    def test_r3_lambda(self):
        g = LieAlgebra(3, {(0, 1): [0, 1, 0], (0, 2): [0, 0, Scalar(Q(-1, 2))]})
        nr = nilradical(g)
        assert nr.dim == 2
        assert nr.contains(Vector.unit(3, 1)) and nr.contains(Vector.unit(3, 2))

    def test_not_solvable_rejected(self):
        sl2 = LieAlgebra(
            3, {(0, 1): [0, 0, 1], (0, 2): [-2, 0, 0], (1, 2): [0, 2, 0]}
        )  # sl(2): [e,f]=h, [e,h]=-2e, [f,h]=2f
        with pytest.raises(NotSolvableError):
            nilradical(sl2)

    def test_output_is_nilpotent_ideal_with_nilpotent_adjoints(self):
        for g in (rr3(), r3(), LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (2, 3): [0, 0, 0, 1]})):
            nr = nilradical(g)
            assert is_ideal(g, nr)
            assert nr.contains_subspace(commutator_subalgebra(g))
            for v in nr.basis:
                assert is_nilpotent(g.ad(v))


class TestDerivations:
    def test_abelian_all_matrices(self):
        assert len(derivation_space(LieAlgebra(3, {}))) == 9

    def test_h3_dimension(self):
        assert len(derivation_space(h3())) == 6

    def test_rh3_dimension(self):
        g = LieAlgebra(4, {(0, 1): [0, 0, 1, 0]})
        assert len(derivation_space(g)) == 10

    def test_n4_normal_form(self):
        # lower triangular with diagonal (a, e, a+e, 2a+e)
        ders = derivation_space(n4())
        assert len(ders) == 7
        for d in ders:
            for i in range(4):
                for j in range(i + 1, 4):
                    assert d[(i, j)].is_zero()
            assert d[(2, 2)] == d[(0, 0)] + d[(1, 1)]
            assert d[(3, 3)] == d[(0, 0)] + d[(0, 0)] + d[(1, 1)]

    def test_closed_under_commutator(self):
        ders = derivation_space(h3())
        from nilshadow.linalg import RowSpan

        span = RowSpan(9, [d.flatten() for d in ders])
        for a in ders:
            for b in ders:
                assert span.contains(a.commutator(b).flatten())

    def test_leibniz_identity(self):
        g = n4()
        for d in derivation_space(g):
            for i in range(4):
                for j in range(4):
                    lhs = d.apply(g.bracket_basis(i, j))
                    rhs = g.bracket(d.column(i), Vector.unit(4, j)) + g.bracket(
                        Vector.unit(4, i), d.column(j)
                    )
                    assert lhs == rhs


class TestIdentification:
    def test_fingerprints(self):
        rh3 = LieAlgebra(4, {(0, 1): [0, 0, 1, 0]})
        assert nilpotent_fingerprint(rh3) == (4, (4, 1, 0), 2, 1)
        assert identify_nilpotent_dim_le4(rh3) == "rh3"
        assert nilpotent_fingerprint(LieAlgebra(4, {})) == (4, (4, 0), 4, 0)
        assert identify_nilpotent_dim_le4(LieAlgebra(4, {})) == "R4"
        assert nilpotent_fingerprint(n4()) == (4, (4, 2, 1, 0), 1, 2)
        assert identify_nilpotent_dim_le4(n4()) == "n4"
        assert identify_nilpotent_dim_le4(h3()) == "h3"

    def test_errors(self):
        with pytest.raises(NotNilpotentError):
            identify_nilpotent_dim_le4(r3())
        with pytest.raises(UnknownAtThisDimensionError):
            identify_nilpotent_dim_le4(LieAlgebra(5, {}))

    @given(
        st.lists(
            st.lists(st.integers(min_value=-2, max_value=2), min_size=4, max_size=4),
            min_size=4,
            max_size=4,
        )
    )
    @settings(max_examples=40, deadline=None)
    def test_standard_basis_on_scrambled_models(self, p_rows):
        """Transport each standard model through a random basis change and
        recover it constructively."""
        p = Matrix([[Scalar(x) for x in row] for row in p_rows]) + Matrix.identity(4).scale(3)
        try:
            p_inv = p.inverse()
        except ValueError:
            return
        for cls in ("R4", "rh3", "n4"):
            std = standard_nilpotent(cls)
            brackets = {}
            for i in range(4):
                for j in range(i + 1, 4):
                    w = std.bracket(p.column(i), p.column(j))
                    brackets[(i, j)] = p_inv.apply(w)
            scrambled = LieAlgebra(4, brackets)
            basis, got = nilpotent_standard_basis(scrambled)
            assert got == cls


class TestJson:
    def test_round_trip(self):
        g = LieAlgebra(
            3,
            {(0, 1): [0, Scalar(Q(1, 2)), 0], (0, 2): [0, 0, Scalar(Q(-3, 4))]},
            params={"lambda": Scalar(Q(-3, 4))},
        )
        j = algebra_to_json(g)
        g2 = algebra_from_json(j)
        assert g2.dim == 3
        for i in range(3):
            for j_ in range(3):
                assert g2.bracket_basis(i, j_) == g.bracket_basis(i, j_)
        assert g2.params["lambda"] == Scalar(Q(-3, 4))

    def test_antisymmetric_completion(self):
        g = algebra_from_json({"dim": 2, "brackets": [[1, 0, [[1, "-1/1"]]]]})
        assert g.bracket_basis(0, 1) == Vector([0, 1])

    def test_jacobi_checked_on_load(self):
        with pytest.raises(JacobiError):
            algebra_from_json(
                {
                    "dim": 3,
                    "brackets": [
                        [0, 1, [[2, "1/1"]]],
                        [0, 2, [[0, "1/1"]]],
                        [1, 2, [[1, "1/1"]]],
                    ],
                }
            )
