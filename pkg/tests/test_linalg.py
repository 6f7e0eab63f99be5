from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nilshadow.linalg import (
    Matrix,
    RowSpan,
    Vector,
    charpoly,
    eval_poly_at_matrix,
    express_in_span,
    kernel,
    rank,
    solve_linear,
)
from nilshadow.polynomials import Polynomial
from nilshadow.scalars import Q, Scalar

small_rationals = st.fractions(min_value=-10, max_value=10, max_denominator=10)


def rational_matrix(n):
    return st.lists(
        st.lists(small_rationals, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(lambda rows: Matrix([[Scalar(Q(x.numerator, x.denominator)) for x in r] for r in rows]))


def cofactor_charpoly(a: Matrix) -> Polynomial:
    """Independent oracle: expand det(t*I - A) over polynomial entries."""
    n = a.rows
    grid = [
        [
            Polynomial([-a[(i, j)], 1]) if i == j else Polynomial([-a[(i, j)]])
            for j in range(n)
        ]
        for i in range(n)
    ]

    def det(g):
        if len(g) == 1:
            return g[0][0]
        total = Polynomial()
        for j in range(len(g)):
            minor = [row[:j] + row[j + 1 :] for row in g[1:]]
            term = g[0][j] * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det(grid)


class TestSolveAndKernel:
    def test_identity_system(self):
        sol = solve_linear(Matrix.identity(2), Vector([1, Scalar(Q(1, 2))]))
        assert sol.x == Vector([1, Scalar(Q(1, 2))])
        assert sol.kernel == []

    def test_inconsistent_row(self):
        assert solve_linear(Matrix([[1, 1], [0, 0]]), Vector([1, 1])) is None

    def test_underdetermined_with_kernel(self):
        sol = solve_linear(Matrix([[1, 1], [2, 2]]), Vector([3, 6]))
        a = Matrix([[1, 1], [2, 2]])
        assert a.apply(sol.x) == Vector([3, 6])
        assert len(sol.kernel) == 1
        assert a.apply(sol.kernel[0]).is_zero()

    def test_kernel_of_identity_and_zero(self):
        assert kernel(Matrix.identity(3)) == []
        assert len(kernel(Matrix.zeros(2, 2))) == 2

    def test_kernel_rank_one(self):
        basis = kernel(Matrix([[1, 2], [2, 4]]))
        assert len(basis) == 1
        assert Matrix([[1, 2], [2, 4]]).apply(basis[0]).is_zero()

    @given(rational_matrix(3))
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity(self, a):
        assert rank(a) + len(kernel(a)) == a.cols

    @given(rational_matrix(4))
    @settings(max_examples=40, deadline=None)
    def test_kernel_members_annihilated(self, a):
        for v in kernel(a):
            assert a.apply(v).is_zero()

    def test_inverse(self):
        a = Matrix([[1, 2], [3, 4]])
        assert a @ a.inverse() == Matrix.identity(2)
        with pytest.raises(ValueError):
            Matrix([[1, 1], [1, 1]]).inverse()


class TestCharpoly:
    def test_diagonal(self):
        # diag(0, 1, -1) -> t^3 - t
        assert charpoly(Matrix.diagonal([0, 1, -1])) == Polynomial([0, -1, 0, 1])

    def test_rotation_block(self):
        assert charpoly(Matrix([[0, -1], [1, 0]])) == Polynomial([1, 0, 1])

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            charpoly(Matrix.zeros(2, 3))

    @given(rational_matrix(3))
    @settings(max_examples=40, deadline=None)
    def test_against_cofactor_oracle_3(self, a):
        assert charpoly(a) == cofactor_charpoly(a)

    @given(rational_matrix(4))
    @settings(max_examples=25, deadline=None)
    def test_against_cofactor_oracle_4(self, a):
        assert charpoly(a) == cofactor_charpoly(a)

    @given(rational_matrix(4))
    @settings(max_examples=25, deadline=None)
    def test_cayley_hamilton(self, a):
        assert eval_poly_at_matrix(charpoly(a), a).is_zero()


class TestRowSpan:
    def test_incremental(self):
        span = RowSpan(3)
        assert span.add(Vector([1, 1, 0]))
        assert not span.add(Vector([2, 2, 0]))
        assert span.add(Vector([0, 0, 1]))
        assert span.dim == 2
        assert span.contains(Vector([5, 5, 7]))
        assert not span.contains(Vector([1, 0, 0]))

    def test_express_in_span(self):
        basis = [Vector([1, 0, 1]), Vector([0, 1, 1])]
        coords = express_in_span(basis, Vector([2, 3, 5]))
        assert coords == Vector([2, 3])
        assert express_in_span(basis, Vector([1, 0, 0])) is None
