"""Additive Jordan-Chevalley decomposition of exact matrices.

A square matrix over Q or Q(sqrt(d)) splits uniquely as A = S + N with S
semisimple (square-free minimal polynomial), N nilpotent and S N = N S;
both parts are polynomials in A.  The decomposition is produced by a
Newton iteration on the square-free part f of the characteristic
polynomial: starting from Z = A, replace Z by Z - f(Z) v(Z) where
u f + v f' = 1.  Each step squares the order of vanishing of f(Z), so
ceil(log2 n) steps suffice, and no eigenvalue is ever extracted.

The result is verified before it is returned; a failed invariant is a
bug, not a data problem, and raises JordanVerificationError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, charpoly, eval_poly_at_matrix
from .polynomials import Polynomial, poly_xgcd, squarefree_part

__all__ = [
    "JordanPair",
    "JordanVerificationError",
    "is_nilpotent",
    "is_semisimple",
    "jordan_chevalley",
]


class JordanVerificationError(RuntimeError):
    """The computed decomposition failed one of its defining invariants."""


@dataclass(frozen=True)
class JordanPair:
    """Semisimple and nilpotent part of a matrix."""

    s: Matrix
    n: Matrix


def is_nilpotent(a: Matrix) -> bool:
    """True iff the characteristic polynomial is t^n, i.e. A^n = 0."""
    if not a.is_square():
        raise ValueError("nilpotency is defined for square matrices")
    p = charpoly(a)
    return all(p[i].is_zero() for i in range(a.rows))


def is_semisimple(a: Matrix) -> bool:
    """True iff the square-free part of the characteristic polynomial
    annihilates A (equivalently: the minimal polynomial is square-free)."""
    if not a.is_square():
        raise ValueError("semisimplicity is defined for square matrices")
    if a.rows == 0:
        return True
    f = squarefree_part(charpoly(a))
    return eval_poly_at_matrix(f, a).is_zero()


def jordan_chevalley(a: Matrix) -> JordanPair:
    """Exact additive Jordan decomposition A = S + N.

    Works over any field of characteristic zero in this package; the
    iteration stays inside the subalgebra of polynomials in A, so S and N
    commute with everything that commutes with A.
    """
    if not a.is_square():
        raise ValueError("Jordan decomposition needs a square matrix")
    n = a.rows
    if n == 0:
        return JordanPair(a, a)
    p = charpoly(a)
    if all(p[i].is_zero() for i in range(n)):  # already nilpotent
        return JordanPair(Matrix.zeros(n, n), a)
    f = squarefree_part(p)
    fa = eval_poly_at_matrix(f, a)
    if fa.is_zero():  # already semisimple
        return JordanPair(a, Matrix.zeros(n, n))
    g, _, v = poly_xgcd(f, f.derivative())
    if g.degree() != 0:
        raise JordanVerificationError("square-free part shares a root with its derivative")
    s = a
    fs = fa
    for _ in range(max(1, n.bit_length() + 1)):
        if fs.is_zero():
            break
        s = s - fs @ eval_poly_at_matrix(v, s)
        fs = eval_poly_at_matrix(f, s)
    if not fs.is_zero():
        raise JordanVerificationError("Newton iteration failed to converge")
    nil = a - s
    _verify(a, s, nil)
    return JordanPair(s, nil)


def _verify(a: Matrix, s: Matrix, nil: Matrix) -> None:
    if s + nil != a:
        raise JordanVerificationError("parts do not sum to the input")
    if s @ nil != nil @ s:
        raise JordanVerificationError("parts do not commute")
    # N^n = 0 by repeated squaring; f(S) = 0 was checked by the loop, and a
    # square-free annihilating polynomial is exactly semisimplicity.
    power = nil
    size = a.rows
    while size > 1:
        power = power @ power
        size = (size + 1) // 2
    if not power.is_zero():
        raise JordanVerificationError("nilpotent part is not nilpotent")
