"""Semisimple splitting g' = b x| g and the nilshadow of a solvable algebra.

Construction: pick a vector-space complement b = <Y_1..Y_m> of the
nilradical n such that the semisimple parts S_i = (ad_{Y_i})_s kill the
whole complement and commute with each other.  Adjoin one abelian torus
generator T_i per Y_i, acting on g by S_i:

    g' = span(T_1..T_m) x| g,   [T_i, X] = S_i X.

The nilradical of g' is the nilshadow; it equals {X - X_b : X in g}
realized as span{Y_i - T_i} + n, and both descriptions are computed and
compared.  The four defining conditions of a semisimple splitting are
verified exactly after construction:

  (1) g' = n' x| t with n' the nilradical of g' and t abelian,
  (2) every torus generator acts on n' by a semisimple derivation,
  (3) g sits in g' as an ideal with g ^ t = 0 and g' = g + t = g + n',
  (4) n' = (n' ^ g) + centralizer of t in n'.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .jordan import is_semisimple, jordan_chevalley
from .linalg import Matrix, RowSpan, Vector, express_in_span
from .liealg import (
    LieAlgebra,
    Subspace,
    centralizer,
    identify_nilpotent_dim_le4,
    is_solvable_algebra,
    nilradical,
    span_of,
    subalgebra_on_basis,
    whole,
)
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "SemisimpleSplitting",
    "ComplementSearchFailedError",
    "SplittingVerificationError",
    "splitting_complement",
    "build_splitting",
    "nilshadow_class",
]

_MAX_CORRECTION_ROUNDS = 4


class ComplementSearchFailedError(RuntimeError):
    """No complement of the nilradical with the required Jordan behaviour
    was found within the bounded correction budget."""


class SplittingVerificationError(RuntimeError):
    """A defining condition of the semisimple splitting failed."""


def splitting_complement(g: LieAlgebra) -> tuple[list[Vector], list[Matrix], Subspace]:
    """Complement basis Y_1..Y_m of the nilradical with (ad_Y_i)_s(Y_j) = 0
    and pairwise commuting semisimple parts; returns (Y, S, nilradical)."""
    if not is_solvable_algebra(g):
        raise ComplementSearchFailedError("algebra is not solvable")
    nr = nilradical(g)
    span = RowSpan(g.dim, nr.basis)
    complement = [e for e in g.basis_vectors() if span.add(e)]
    if not complement:
        return [], [], nr

    def semisimple_parts(ys: list[Vector]) -> list[Matrix]:
        return [jordan_chevalley(g.ad(y)).s for y in ys]

    parts = semisimple_parts(complement)
    for _ in range(_MAX_CORRECTION_ROUNDS):
        bad = _first_violation(complement, parts)
        if bad is None:
            return complement, parts, nr
        j = bad
        # correct Y_j by a nilradical element z with S_i (Y_j + z) = 0 for all i
        rows: list[list[Scalar]] = []
        rhs: list[Scalar] = []
        for s in parts:
            cols = [s.apply(z) for z in nr.basis]
            target = s.apply(complement[j])
            for comp in range(g.dim):
                rows.append([col[comp] for col in cols])
                rhs.append(-target[comp])
        from .linalg import solve_linear

        sol = solve_linear(Matrix(rows), Vector(rhs))
        if sol is None:
            raise ComplementSearchFailedError("no nilradical correction solves the constraints")
        z = Vector.zero(g.dim)
        for c, basis_vec in zip(sol.x, nr.basis):
            z = z + basis_vec * c
        complement[j] = complement[j] + z
        parts = semisimple_parts(complement)
    raise ComplementSearchFailedError("correction loop did not converge")


def _first_violation(ys: list[Vector], parts: list[Matrix]) -> Optional[int]:
    for i, s in enumerate(parts):
        for j, y in enumerate(ys):
            if not s.apply(y).is_zero():
                return j
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not parts[i].commutator(parts[j]).is_zero():
                return j
    return None


@dataclass
class SemisimpleSplitting:
    """g' = t x| g with the torus acting by the semisimple adjoint parts."""

    original: LieAlgebra
    complement: list[Vector]       # Y_i in g
    ad_s_matrices: list[Matrix]    # S_i = (ad_{Y_i})_s acting on g
    algebra: LieAlgebra            # g' on the basis (T_1..T_m, e_1..e_n)
    torus: Subspace                # span(T_i) inside g'
    nilshadow: Subspace            # basis: U_i = emb(Y_i) - T_i, then echelonized nilradical
    nilshadow_algebra: LieAlgebra  # structure constants on that nilshadow basis
    embedded_original: Subspace

    @property
    def torus_dim(self) -> int:
        return len(self.complement)

    def embed(self, x: Vector) -> Vector:
        """Inclusion g -> g' (last block of coordinates)."""
        return Vector([ZERO] * self.torus_dim + list(x))

    def torus_action_on_nilshadow(self, i: int) -> Matrix:
        """Matrix of ad_{T_i} restricted to the nilshadow, in its basis."""
        cols = []
        t = Vector.unit(self.algebra.dim, i)
        for u in self.nilshadow.basis:
            cols.append(self.nilshadow.coordinates(self.algebra.bracket(t, u)))
        return Matrix.from_columns(cols)

    def decompose(self, v: Vector) -> tuple[Vector, Vector]:
        """Write v in g' as (torus coefficients, nilshadow coordinates)."""
        basis = [Vector.unit(self.algebra.dim, i) for i in range(self.torus_dim)]
        basis += self.nilshadow.basis
        coords = express_in_span(basis, v)
        if coords is None:
            raise ValueError("vector is not in torus + nilshadow")
        m = self.torus_dim
        return Vector(coords.entries[:m]), Vector(coords.entries[m:])

    def nilshadow_class(self) -> str:
        return identify_nilpotent_dim_le4(self.nilshadow_algebra)

    def to_json(self) -> dict:
        from .liealg import algebra_to_json

        return {
            "splitting": algebra_to_json(self.algebra),
            "torus_basis": [[str(c) for c in t] for t in self.torus.basis],
            "nilshadow_basis": [[str(c) for c in u] for u in self.nilshadow.basis],
            "nilshadow_class": self.nilshadow_class(),
        }


def build_splitting(g: LieAlgebra) -> SemisimpleSplitting:
    """Construct and fully verify the semisimple splitting of a solvable g."""
    complement, parts, nr = splitting_complement(g)
    m = len(complement)
    n = g.dim
    dim = m + n
    brackets: dict[tuple[int, int], Vector] = {}
    for i in range(m):
        s = parts[i]
        for j in range(n):
            image = s.column(j)
            if not image.is_zero():
                brackets[(i, m + j)] = Vector([ZERO] * m + list(image))
    for i in range(n):
        for j in range(i + 1, n):
            v = g.bracket_basis(i, j)
            if not v.is_zero():
                brackets[(m + i, m + j)] = Vector([ZERO] * m + list(v))
    names = [f"t{i+1}" for i in range(m)] + list(g.names)
    algebra = LieAlgebra(dim, brackets, names=names, params=dict(g.params))

    torus = span_of(algebra, [Vector.unit(dim, i) for i in range(m)])
    embedded = span_of(algebra, [Vector.unit(dim, m + i) for i in range(n)])

    shadow = nilradical(algebra)
    # closed form {X - X_b : X in g}: U_i = emb(Y_i) - T_i plus the nilradical of g
    nr_echelon = RowSpan(g.dim, nr.basis).echelon_basis()
    closed_basis = [
        Vector([-ONE if k == i else ZERO for k in range(m)] + list(complement[i]))
        for i in range(m)
    ]
    closed_basis += [Vector([ZERO] * m + list(z)) for z in nr_echelon]
    closed = span_of(algebra, closed_basis)
    if not closed.same_as(shadow):
        raise SplittingVerificationError("closed-form nilshadow disagrees with the nilradical of g'")
    shadow = Subspace(algebra, closed_basis)  # keep the adapted basis order
    shadow_alg, _ = subalgebra_on_basis(algebra, shadow.basis)

    result = SemisimpleSplitting(
        original=g,
        complement=complement,
        ad_s_matrices=parts,
        algebra=algebra,
        torus=torus,
        nilshadow=shadow,
        nilshadow_algebra=shadow_alg,
        embedded_original=embedded,
    )
    _verify_conditions(result)
    return result


def _verify_conditions(sp: SemisimpleSplitting) -> None:
    from .liealg import is_ideal

    alg = sp.algebra
    m, dim = sp.torus_dim, sp.algebra.dim
    # (1) g' = n' x| t with t an abelian subalgebra
    for a in sp.torus.basis:
        for b in sp.torus.basis:
            if not alg.bracket(a, b).is_zero():
                raise SplittingVerificationError("torus is not abelian")
    joint = RowSpan(dim, sp.nilshadow.basis)
    if any(joint.add(t) is False for t in sp.torus.basis):
        raise SplittingVerificationError("torus meets the nilshadow")
    if joint.dim != dim:
        raise SplittingVerificationError("nilshadow + torus does not fill g'")
    # (2) semisimple torus action on the nilshadow
    for i in range(m):
        if not is_semisimple(sp.torus_action_on_nilshadow(i)):
            raise SplittingVerificationError("torus generator acts non-semisimply")
    # (3) g an ideal, g ^ t = 0, g' = g + t = g + n'
    if not is_ideal(alg, sp.embedded_original):
        raise SplittingVerificationError("original algebra is not an ideal of g'")
    gt = RowSpan(dim, sp.embedded_original.basis)
    if any(not gt.add(t) for t in sp.torus.basis):
        raise SplittingVerificationError("g ^ t != 0")
    if gt.dim != dim:
        raise SplittingVerificationError("g + t != g'")
    gn = RowSpan(dim, sp.embedded_original.basis)
    for u in sp.nilshadow.basis:
        gn.add(u)
    if gn.dim != dim:
        raise SplittingVerificationError("g + n' != g'")
    # (4) n' = (n' ^ g) + centralizer of t in n'
    c = centralizer(alg, sp.torus, sp.nilshadow)
    mix = RowSpan(dim)
    for v in sp.nilshadow.basis:
        if sp.embedded_original.contains(v):
            mix.add(v)
    intersection_dim = _intersection_dim(sp.nilshadow, sp.embedded_original, dim)
    for v in c.basis:
        mix.add(v)
    if mix.dim != sp.nilshadow.dim:
        raise SplittingVerificationError("n' != (n' ^ g) + centralizer(t, n')")
    # dimension bookkeeping: dim n' = dim g (echo of the splitting definition)
    if sp.nilshadow.dim != sp.original.dim:
        raise SplittingVerificationError("nilshadow dimension differs from dim g")
    if intersection_dim + sp.torus_dim != sp.original.dim:
        raise SplittingVerificationError("n' ^ g has unexpected dimension")


def _intersection_dim(a: Subspace, b: Subspace, dim: int) -> int:
    joint = RowSpan(dim, a.basis)
    extra = sum(1 for v in b.basis if joint.add(v))
    return a.dim + b.dim - (a.dim + extra)


def nilshadow_class(g: LieAlgebra) -> str:
    """Isomorphism class of the nilshadow (dimension <= 4)."""
    return build_splitting(g).nilshadow_class()
