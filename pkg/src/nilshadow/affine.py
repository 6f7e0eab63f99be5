"""The affine algebra aff(h) = h x| Der(h) of a nilpotent Lie algebra.

Elements are pairs (v, D): a translation part v in h and a derivation D
of h.  The bracket is

    [(v, A), (w, B)] = ([v, w] + A w - B v,  A B - B A).

aff(h) is realized internally as a structure-constant Lie algebra
(`as_lie`) on the basis (translations, derivation basis), which makes
the adjoint representation available; the Jordan decomposition of an
affine element is pulled back through ad, which is faithful exactly when
the center of aff(h) vanishes (true for every target used here, and
verified at construction).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .jordan import is_nilpotent, jordan_chevalley
from .linalg import Matrix, Vector, express_in_span, kernel, solve_linear
from .liealg import (
    LieAlgebra,
    Subspace,
    center,
    derivation_space,
    is_nilpotent_algebra,
    span_of,
)
from .scalars import Scalar

__all__ = [
    "AffineAlgebra",
    "AffineElement",
    "LieMorphism",
    "MorphismReport",
    "CenterNotTrivialError",
    "AdjointSolveFailedError",
    "morphism_to_json",
    "morphism_from_json",
]


class CenterNotTrivialError(RuntimeError):
    """The adjoint-based Jordan decomposition needs a centerless aff(h)."""


class AdjointSolveFailedError(RuntimeError):
    """ad_y = N had no solution; contradicts algebraicity of aff(h)."""


class AffineAlgebra:
    """aff(h) for a nilpotent h, with its ambient Lie-algebra realization."""

    def __init__(self, h: LieAlgebra):
        if not is_nilpotent_algebra(h):
            raise ValueError("aff(h) is built here only for nilpotent h")
        self.h = h
        self.n = h.dim
        self.der_basis = derivation_space(h)
        self.m = len(self.der_basis)
        self._der_flats = [d.flatten() for d in self.der_basis]
        self.as_lie = self._build_as_lie()
        self._check_translation_ideal()
        self._center = center(self.as_lie)
        self._ad_operator: Optional[Matrix] = None

    # -- construction -------------------------------------------------------------

    def _der_coords(self, d: Matrix) -> Vector:
        coords = express_in_span(self._der_flats, d.flatten())
        if coords is None:
            raise ValueError("matrix is not a derivation of h")
        return coords

    def _build_as_lie(self) -> LieAlgebra:
        n, m = self.n, self.m
        dim = n + m
        brackets: dict[tuple[int, int], Vector] = {}
        for i in range(n):
            for j in range(i + 1, n):
                v = self.h.bracket_basis(i, j)
                brackets[(i, j)] = Vector(list(v) + [Scalar(0)] * m)
        for a in range(m):
            da = self.der_basis[a]
            for j in range(n):
                image = da.column(j)
                brackets[(n + a, j)] = Vector(list(image) + [Scalar(0)] * m)
            for b in range(a + 1, m):
                comm = da.commutator(self.der_basis[b])
                coords = self._der_coords(comm)
                brackets[(n + a, n + b)] = Vector([Scalar(0)] * n + list(coords))
        names = [f"t_{nm}" for nm in self.h.names] + [f"D{a+1}" for a in range(m)]
        return LieAlgebra(dim, brackets, names=names)

    def _check_translation_ideal(self) -> None:
        from .liealg import is_ideal

        translations = span_of(self.as_lie, [Vector.unit(self.n + self.m, i) for i in range(self.n)])
        if not is_ideal(self.as_lie, translations):
            raise RuntimeError("translation part failed to be an ideal of aff(h)")

    # -- elements -------------------------------------------------------------------

    def element(self, v, d: Optional[Matrix] = None) -> AffineElement:
        v = v if isinstance(v, Vector) else Vector(v)
        if d is None:
            d = Matrix.zeros(self.n, self.n)
        self._der_coords(d)  # validates the Leibniz identity via the span
        return AffineElement(self, v, d)

    def zero(self) -> AffineElement:
        return AffineElement(self, Vector.zero(self.n), Matrix.zeros(self.n, self.n))

    def coords(self, x: AffineElement) -> Vector:
        return Vector(list(x.v) + list(self._der_coords(x.d)))

    def from_coords(self, coords: Vector) -> AffineElement:
        v = Vector(coords.entries[: self.n])
        d = Matrix.zeros(self.n, self.n)
        for a in range(self.m):
            c = coords[self.n + a]
            if not c.is_zero():
                d = d + self.der_basis[a].scale(c)
        return AffineElement(self, v, d)

    def bracket(self, x: AffineElement, y: AffineElement) -> AffineElement:
        if x.algebra is not self or y.algebra is not self:
            raise ValueError("elements from different affine algebras")
        v = self.h.bracket(x.v, y.v) + x.d.apply(y.v) - y.d.apply(x.v)
        return AffineElement(self, v, x.d.commutator(y.d))

    # -- center and Jordan decomposition ------------------------------------------------

    def center_subspace(self) -> Subspace:
        return self._center

    def has_trivial_center(self) -> bool:
        return self._center.dim == 0

    def _ad_op(self) -> Matrix:
        if self._ad_operator is None:
            dim = self.n + self.m
            cols = [self.as_lie.ad_basis(i).flatten() for i in range(dim)]
            self._ad_operator = Matrix.from_columns(cols)
        return self._ad_operator

    def jordan(self, x: AffineElement) -> tuple[AffineElement, AffineElement]:
        """Jordan parts (x_s, x_n) of x inside the algebraic algebra aff(h).

        Computed through the adjoint representation: split ad_x exactly,
        then solve ad_y = (ad_x)_n, which has a unique solution since the
        center is trivial.
        """
        if not self.has_trivial_center():
            raise CenterNotTrivialError("aff(h) has nontrivial center")
        m = self.as_lie.ad(self.coords(x))
        pair = jordan_chevalley(m)
        if pair.n.is_zero():
            return x, self.zero()
        sol = solve_linear(self._ad_op(), pair.n.flatten())
        if sol is None:
            raise AdjointSolveFailedError("nilpotent adjoint part is not an inner derivation")
        xn = self.from_coords(sol.x)
        xs = x - xn
        if not is_nilpotent(xn.d):
            raise AdjointSolveFailedError("nilpotent Jordan part has non-nilpotent derivation")
        if not self.bracket(xs, xn).is_zero():
            raise AdjointSolveFailedError("Jordan parts do not commute")
        return xs, xn

    def __repr__(self) -> str:
        return f"AffineAlgebra(dim h = {self.n}, dim Der = {self.m})"


@dataclass(frozen=True)
class AffineElement:
    """Pair (v, D) in aff(h): translation v plus derivation matrix D."""

    algebra: AffineAlgebra = field(repr=False)
    v: Vector
    d: Matrix

    def __add__(self, other: AffineElement) -> AffineElement:
        return AffineElement(self.algebra, self.v + other.v, self.d + other.d)

    def __sub__(self, other: AffineElement) -> AffineElement:
        return AffineElement(self.algebra, self.v - other.v, self.d - other.d)

    def __neg__(self) -> AffineElement:
        return AffineElement(self.algebra, -self.v, -self.d)

    def scale(self, s) -> AffineElement:
        s = Scalar.of(s)
        return AffineElement(self.algebra, self.v * s, self.d.scale(s))

    def is_zero(self) -> bool:
        return self.v.is_zero() and self.d.is_zero()

    def is_nilpotent_element(self) -> bool:
        """Nilpotency in aff(h) is decided by the derivation part alone:
        translations over a unipotent group are unipotent."""
        return is_nilpotent(self.d)

    def is_pure_semisimple(self) -> bool:
        """Zero translation part and semisimple derivation part."""
        from .jordan import is_semisimple

        return self.v.is_zero() and is_semisimple(self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.v == other.v and self.d == other.d

    def __repr__(self) -> str:
        return f"({self.v}, {self.d})"


@dataclass
class MorphismReport:
    """Outcome of checking a linear map for the homomorphism property."""

    is_homomorphism: bool
    failing_pair: Optional[tuple[int, int]]
    injective: bool
    kernel_basis: list[Vector]

    @property
    def ok(self) -> bool:
        return self.is_homomorphism


class LieMorphism:
    """Linear map g -> aff(h) given by the images of the basis of g."""

    def __init__(self, source: LieAlgebra, target: AffineAlgebra, images: Sequence[AffineElement]):
        if len(images) != source.dim:
            raise ValueError("one image per basis vector is required")
        self.source = source
        self.target = target
        self.images = list(images)

    def apply(self, x: Vector) -> AffineElement:
        acc = self.target.zero()
        for xi, img in zip(x, self.images):
            if not xi.is_zero():
                acc = acc + img.scale(xi)
        return acc

    def image_coords(self) -> list[Vector]:
        return [self.target.coords(img) for img in self.images]

    def verify(self) -> MorphismReport:
        """Bracket preservation on all basis pairs plus injectivity."""
        failing = None
        for i in range(self.source.dim):
            for j in range(i + 1, self.source.dim):
                lhs = self.target.bracket(self.images[i], self.images[j])
                rhs = self.apply(self.source.bracket_basis(i, j))
                if lhs != rhs:
                    failing = (i, j)
                    break
            if failing:
                break
        ker = kernel(Matrix.from_columns(self.image_coords()))
        return MorphismReport(
            is_homomorphism=failing is None,
            failing_pair=failing,
            injective=not ker,
            kernel_basis=ker,
        )


# -- JSON -----------------------------------------------------------------------------


def morphism_to_json(phi: LieMorphism) -> dict:
    from .liealg import algebra_to_json

    return {
        "source": algebra_to_json(phi.source),
        "target_h": algebra_to_json(phi.target.h),
        "images": [
            {
                "v": [str(c) for c in img.v],
                "D": [[str(e) for e in row] for row in img.d.entries],
            }
            for img in phi.images
        ],
    }


def morphism_from_json(
    obj: Mapping,
    source: Optional[LieAlgebra] = None,
    target: Optional[AffineAlgebra] = None,
) -> LieMorphism:
    from .liealg import algebra_from_json

    if source is None:
        source = algebra_from_json(obj["source"])
    if target is None:
        target = AffineAlgebra(algebra_from_json(obj["target_h"]))
    images = []
    for item in obj["images"]:
        v = Vector([Scalar.of(str(c)) for c in item["v"]])
        d = Matrix([[Scalar.of(str(e)) for e in row] for row in item["D"]])
        images.append(target.element(v, d))
    return LieMorphism(source, target, images)
