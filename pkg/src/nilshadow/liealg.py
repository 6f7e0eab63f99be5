"""Structure-constant Lie algebras and their canonical subobjects.

A Lie algebra is given by exact structure constants [e_i, e_j] =
sum_k c_ijk e_k on a named basis; antisymmetry is built into the storage
and the Jacobi identity is checked on construction.  On top of the
bracket this module computes the classical subobjects: commutator
subalgebra, lower central and derived series, center and centralizers,
the nilradical of a solvable algebra, the derivation algebra, and an
isomorphism-class fingerprint for nilpotent algebras of dimension <= 4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import Matrix, RowSpan, Vector, express_in_span, kernel
from .scalars import ONE, ZERO, Scalar, parse_scalar

__all__ = [
    "LieAlgebra",
    "Subspace",
    "JacobiError",
    "NotSolvableError",
    "NotNilpotentError",
    "UnknownAtThisDimensionError",
    "span_of",
    "bracket_span",
    "commutator_subalgebra",
    "lower_central_series",
    "derived_series",
    "is_nilpotent_algebra",
    "is_solvable_algebra",
    "center",
    "centralizer",
    "nilradical",
    "derivation_space",
    "nilpotent_fingerprint",
    "identify_nilpotent_dim_le4",
    "subalgebra_on_basis",
    "is_ideal",
    "nilpotent_standard_basis",
    "standard_nilpotent",
    "algebra_to_json",
    "algebra_from_json",
]


class JacobiError(ValueError):
    """The given structure constants do not satisfy the Jacobi identity."""


class NotSolvableError(ValueError):
    pass


class NotNilpotentError(ValueError):
    pass


class UnknownAtThisDimensionError(ValueError):
    """Isomorphism identification is only available for dimension <= 4."""


class LieAlgebra:
    """Finite-dimensional Lie algebra with exact structure constants."""

    def __init__(
        self,
        dim: int,
        brackets: Mapping[tuple[int, int], Iterable],
        names: Optional[Sequence[str]] = None,
        params: Optional[Mapping[str, Scalar]] = None,
        validate: bool = True,
    ):
        self.dim = dim
        self.names = list(names) if names is not None else [f"e{i+1}" for i in range(dim)]
        if len(self.names) != dim:
            raise ValueError("basis name count does not match dimension")
        self.params = dict(params or {})
        table: dict[tuple[int, int], Vector] = {}
        for (i, j), value in brackets.items():
            v = value if isinstance(value, Vector) else Vector(value)
            if len(v) != dim:
                raise ValueError("bracket value has wrong length")
            if i == j:
                if not v.is_zero():
                    raise ValueError(f"[e_{i}, e_{i}] must vanish")
                continue
            a, b, vv = (i, j, v) if i < j else (j, i, -v)
            if (a, b) in table and table[(a, b)] != vv:
                raise ValueError(f"inconsistent antisymmetric pair ({i}, {j})")
            if not vv.is_zero():
                table[(a, b)] = vv
        self._table = table
        self._ad_cache: dict[int, Matrix] = {}
        if validate:
            self._check_jacobi()

    # -- bracket -----------------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        if i == j:
            return Vector.zero(self.dim)
        if i < j:
            return self._table.get((i, j), Vector.zero(self.dim))
        return -self._table.get((j, i), Vector.zero(self.dim))

    def bracket(self, x: Vector, y: Vector) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        acc = Vector.zero(self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero() or i == j:
                    continue
                acc = acc + self.bracket_basis(i, j) * (xi * yj)
        return acc

    def ad_basis(self, i: int) -> Matrix:
        if i not in self._ad_cache:
            cols = [self.bracket_basis(i, j) for j in range(self.dim)]
            self._ad_cache[i] = Matrix.from_columns(cols)
        return self._ad_cache[i]

    def ad(self, x: Vector) -> Matrix:
        """Matrix of ad_x = [x, .] in the defining basis."""
        acc = Matrix.zeros(self.dim, self.dim)
        for i, xi in enumerate(x):
            if not xi.is_zero():
                acc = acc + self.ad_basis(i).scale(xi)
        return acc

    def basis_vectors(self) -> list[Vector]:
        return [Vector.unit(self.dim, i) for i in range(self.dim)]

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                cij = self.bracket_basis(i, j)
                for k in range(j + 1, self.dim):
                    total = (
                        self.bracket(cij, Vector.unit(self.dim, k))
                        + self.bracket(self.bracket_basis(j, k), Vector.unit(self.dim, i))
                        + self.bracket(self.bracket_basis(k, i), Vector.unit(self.dim, j))
                    )
                    if not total.is_zero():
                        raise JacobiError(
                            f"Jacobi identity fails on ({self.names[i]}, {self.names[j]}, {self.names[k]})"
                        )

    def __repr__(self) -> str:
        terms = []
        for (i, j), v in sorted(self._table.items()):
            terms.append(f"[{self.names[i]},{self.names[j]}]={_vector_str(v, self.names)}")
        return f"LieAlgebra(dim={self.dim}: " + ", ".join(terms) + ")"


def _vector_str(v: Vector, names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(v, names):
        if c.is_zero():
            continue
        parts.append(name if c == ONE else f"({c})*{name}")
    return " + ".join(parts) if parts else "0"


@dataclass
class Subspace:
    """Subspace of a Lie algebra, kept as an explicit basis plus its span."""

    ambient: LieAlgebra
    basis: list[Vector]
    _span: RowSpan = field(repr=False, default=None)

    def __post_init__(self):
        if self._span is None:
            span = RowSpan(self.ambient.dim)
            reduced = []
            for v in self.basis:
                if span.add(v):
                    reduced.append(v)
            self.basis = reduced
            self._span = span

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Vector) -> bool:
        return self._span.contains(v)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def same_as(self, other: Subspace) -> bool:
        return self.dim == other.dim and self.contains_subspace(other)

    def coordinates(self, v: Vector) -> Vector:
        coords = express_in_span(self.basis, v)
        if coords is None:
            raise ValueError("vector outside subspace")
        return coords


def span_of(g: LieAlgebra, vectors: Iterable[Vector]) -> Subspace:
    return Subspace(g, list(vectors))


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return span_of(g, [g.bracket(x, y) for x in a.basis for y in b.basis])


def whole(g: LieAlgebra) -> Subspace:
    return span_of(g, g.basis_vectors())


def commutator_subalgebra(g: LieAlgebra) -> Subspace:
    return bracket_span(g, whole(g), whole(g))


def lower_central_series(g: LieAlgebra) -> list[Subspace]:
    """g = C^1 >= C^2 = [g, C^1] >= ... down to stabilization."""
    series = [whole(g)]
    while True:
        nxt = bracket_span(g, whole(g), series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def derived_series(g: LieAlgebra) -> list[Subspace]:
    series = [whole(g)]
    while True:
        nxt = bracket_span(g, series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_nilpotent_algebra(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].dim == 0


def is_solvable_algebra(g: LieAlgebra) -> bool:
    return derived_series(g)[-1].dim == 0


def centralizer(g: LieAlgebra, of: Subspace, within: Subspace) -> Subspace:
    """{x in `within` : [x, s] = 0 for all s in `of`}."""
    if within.dim == 0:
        return span_of(g, [])
    rows: list[list[Scalar]] = []
    for s in of.basis:
        cols = [g.bracket(w, s) for w in within.basis]
        for comp in range(g.dim):
            rows.append([col[comp] for col in cols])
    if not rows:
        return within
    coeffs = kernel(Matrix(rows))
    basis = [_combine(within.basis, c) for c in coeffs]
    return span_of(g, basis)


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, whole(g), whole(g))


def _combine(basis: Sequence[Vector], coeffs: Vector) -> Vector:
    acc = Vector.zero(len(basis[0]))
    for b, c in zip(basis, coeffs):
        if not c.is_zero():
            acc = acc + b * c
    return acc


# -- nilradical ------------------------------------------------------------------


def nilradical(g: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal of a solvable Lie algebra.

    Strategy: close the adjoint matrices under products to an associative
    algebra A, cut out its radical R = {a : tr(ab) = 0 for all b in A}
    (trace-form criterion, valid in characteristic zero), and pull back:
    for solvable g the nilradical is exactly {x : ad_x in R}, the set of
    elements with nilpotent adjoint.  The result is re-verified as a
    nilpotent ideal containing [g, g] before being returned.
    """
    if not is_solvable_algebra(g):
        raise NotSolvableError("nilradical computation requires a solvable algebra")
    n = g.dim
    ads = [g.ad_basis(i) for i in range(n)]
    span = RowSpan(n * n)
    gens: list[Matrix] = []
    for m in ads:
        if span.add(m.flatten()):
            gens.append(m)
    frontier = list(gens)
    while frontier:
        fresh: list[Matrix] = []
        for m in frontier:
            for b in list(gens):
                for prod in (m @ b, b @ m):
                    if span.add(prod.flatten()):
                        gens.append(prod)
                        fresh.append(prod)
        frontier = fresh
    k = len(gens)
    radical: list[Matrix] = []
    if k:
        gram = Matrix([[(gens[i] @ gens[j]).trace() for j in range(k)] for i in range(k)])
        radical = [
            _combine_matrices(gens, coeffs) for coeffs in kernel(gram)
        ]
    cols = [m.flatten() for m in ads] + [(-r).flatten() for r in radical]
    coeff_kernel = kernel(Matrix.from_columns(cols))
    basis = [Vector(c.entries[:n]) for c in coeff_kernel]
    result = span_of(g, basis)
    _verify_nilradical(g, result)
    return result


def _combine_matrices(mats: Sequence[Matrix], coeffs: Vector) -> Matrix:
    acc = Matrix.zeros(mats[0].rows, mats[0].cols)
    for m, c in zip(mats, coeffs):
        if not c.is_zero():
            acc = acc + m.scale(c)
    return acc


def _verify_nilradical(g: LieAlgebra, nr: Subspace) -> None:
    from .jordan import is_nilpotent

    if not is_ideal(g, nr):
        raise RuntimeError("computed nilradical is not an ideal")
    if not nr.contains_subspace(commutator_subalgebra(g)):
        raise RuntimeError("computed nilradical misses the commutator subalgebra")
    for v in nr.basis:
        if not is_nilpotent(g.ad(v)):
            raise RuntimeError("computed nilradical contains a non-nilpotent adjoint")
    sub, _ = subalgebra_on_basis(g, nr.basis)
    if not is_nilpotent_algebra(sub):
        raise RuntimeError("computed nilradical is not nilpotent")


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return all(s.contains(g.bracket(x, v)) for x in g.basis_vectors() for v in s.basis)


def subalgebra_on_basis(g: LieAlgebra, basis: Sequence[Vector]) -> tuple[LieAlgebra, list[Vector]]:
    """Lie algebra structure induced on the span of `basis` (must be closed
    under the bracket); returns it together with the basis used."""
    basis = list(basis)
    brackets: dict[tuple[int, int], Vector] = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            w = g.bracket(basis[i], basis[j])
            coords = express_in_span(basis, w)
            if coords is None:
                raise ValueError("basis does not span a subalgebra")
            brackets[(i, j)] = coords
    sub = LieAlgebra(len(basis), brackets, params=dict(g.params))
    return sub, basis


# -- derivations --------------------------------------------------------------------


def derivation_space(h: LieAlgebra) -> list[Matrix]:
    """Basis of Der(h) = {D : D[x,y] = [Dx,y] + [x,Dy]}, by one exact solve."""
    n = h.dim
    rows: list[list[Scalar]] = []
    for i in range(n):
        for j in range(i + 1, n):
            cij = h.bracket_basis(i, j)
            # expand D[e_i,e_j] - [De_i, e_j] - [e_i, De_j] componentwise
            for comp in range(n):
                row = [ZERO] * (n * n)
                for r in range(n):
                    # D e_k has entries D[r][k]; contribution of D[r][c]:
                    row[comp * n + r] = row[comp * n + r] + cij[r]
                for r in range(n):
                    cr = h.bracket_basis(r, j)
                    row[r * n + i] = row[r * n + i] - cr[comp]
                    ci = h.bracket_basis(i, r)
                    row[r * n + j] = row[r * n + j] - ci[comp]
                rows.append(row)
    if not rows:
        return [Matrix.unit(n, i, j) for i in range(n) for j in range(n)]
    sols = kernel(Matrix(rows))
    return [Matrix.unflatten(v, n, n) for v in sols]


# -- nilpotent classification (dim <= 4) ------------------------------------------------


_FINGERPRINTS = {
    (1, (1, 0)): "R1",
    (2, (2, 0)): "R2",
    (3, (3, 0)): "R3",
    (3, (3, 1, 0)): "h3",
    (4, (4, 0)): "R4",
    (4, (4, 1, 0)): "rh3",
    (4, (4, 2, 1, 0)): "n4",
}


def nilpotent_fingerprint(h: LieAlgebra) -> tuple[int, tuple[int, ...], int, int]:
    """(dim, lower-central-series dims, dim center, dim [h,h])."""
    series = lower_central_series(h)
    if series[-1].dim != 0:
        raise NotNilpotentError("fingerprint requires a nilpotent algebra")
    dims = tuple(s.dim for s in series)
    if dims[-1] != 0:
        dims = dims + (0,)
    return (h.dim, dims, center(h).dim, commutator_subalgebra(h).dim)


def identify_nilpotent_dim_le4(h: LieAlgebra) -> str:
    """Catalog name of a nilpotent algebra of dimension <= 4."""
    fp = nilpotent_fingerprint(h)
    if h.dim > 4:
        raise UnknownAtThisDimensionError(f"no identification table for dim {h.dim}")
    key = (fp[0], fp[1])
    if key not in _FINGERPRINTS:
        raise RuntimeError(f"unrecognized nilpotent fingerprint {fp}")
    return _FINGERPRINTS[key]


def standard_nilpotent(name: str) -> LieAlgebra:
    """The standard model of a nilpotent algebra class (R1..R4, h3, rh3, n4)."""
    if name.startswith("R") and name[1:].isdigit():
        return LieAlgebra(int(name[1:]), {})
    if name == "h3":
        return LieAlgebra(3, {(0, 1): [0, 0, 1]})
    if name == "rh3":
        return LieAlgebra(4, {(0, 1): [0, 0, 1, 0]})
    if name == "n4":
        return LieAlgebra(4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]})
    raise ValueError(f"not a standard nilpotent class: {name}")


def nilpotent_standard_basis(h: LieAlgebra) -> tuple[list[Vector], str]:
    """Constructive isomorphism onto the standard model: a basis b_1..b_n of
    h such that b_i -> f_i is a Lie isomorphism to standard_nilpotent(cls)."""
    cls = identify_nilpotent_dim_le4(h)
    basis: list[Vector]
    if cls.startswith("R"):
        basis = h.basis_vectors()
    elif cls in ("h3", "rh3"):
        x, y, z = _heisenberg_triple(h)
        basis = [x, y, z]
        if cls == "rh3":
            zspan = RowSpan(h.dim, [z])
            w = next(v for v in center(h).basis if zspan.add(v))
            basis.append(w)
    else:  # n4
        c2 = commutator_subalgebra(h)
        c3 = bracket_span(h, whole(h), c2)
        x = next(
            e for e in h.basis_vectors() if any(not h.bracket(e, c).is_zero() for c in c2.basis)
        )
        y = next(e for e in h.basis_vectors() if not c3.contains(h.bracket(x, e)))
        z = h.bracket(x, y)
        w = h.bracket(x, z)
        gamma = express_in_span([w], h.bracket(y, z))
        y = y - x * gamma[0]
        basis = [x, y, z, w]
    _verify_standard_basis(h, basis, cls)
    return basis, cls


def _heisenberg_triple(h: LieAlgebra) -> tuple[Vector, Vector, Vector]:
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            z = h.bracket_basis(i, j)
            if not z.is_zero():
                return Vector.unit(h.dim, i), Vector.unit(h.dim, j), z
    raise NotNilpotentError("abelian algebra has no Heisenberg triple")


def _verify_standard_basis(h: LieAlgebra, basis: list[Vector], cls: str) -> None:
    std = standard_nilpotent(cls)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            got = express_in_span(basis, h.bracket(basis[i], basis[j]))
            if got is None or got != std.bracket_basis(i, j):
                raise RuntimeError(f"standard-basis construction failed for class {cls}")


# -- JSON ------------------------------------------------------------------------------


def algebra_to_json(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), v in sorted(g._table.items()):
        terms = [[k, str(c)] for k, c in enumerate(v) if not c.is_zero()]
        brackets.append([i, j, terms])
    return {
        "dim": g.dim,
        "basis": list(g.names),
        "brackets": brackets,
        "params": {k: str(v) for k, v in g.params.items()},
    }


def algebra_from_json(obj: Mapping, env: Optional[Mapping[str, Scalar]] = None) -> LieAlgebra:
    """Load an algebra from the documented JSON schema; omitted brackets are
    zero, antisymmetric completion is applied, Jacobi failures raise."""
    dim = int(obj["dim"])
    names = obj.get("basis")
    env = dict(env or {})
    params = {k: parse_scalar(str(v), env) for k, v in obj.get("params", {}).items()}
    env.update(params)
    brackets: dict[tuple[int, int], Vector] = {}
    for i, j, terms in obj.get("brackets", []):
        v = [ZERO] * dim
        for k, expr in terms:
            v[int(k)] = parse_scalar(str(expr), env)
        i, j = int(i), int(j)
        vv = Vector(v)
        if i > j:
            i, j, vv = j, i, -vv
        if (i, j) in brackets:
            if brackets[(i, j)] != vv:
                raise ValueError("inconsistent antisymmetric completion")
        else:
            brackets[(i, j)] = vv
    return LieAlgebra(dim, brackets, names=names, params=params)
