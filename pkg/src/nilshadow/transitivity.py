"""Checkers for simply transitive NIL-affine actions.

Two questions are answered at the Lie-algebra level:

* Given an injective morphism phi: g -> aff(h), is the corresponding
  action simply transitive?  The criterion: dim g = dim h and the
  translation projection restricted to u = span{(X_i)_n} is a bijection,
  where the X_i run over a basis of phi(g) whose first vectors span the
  commutator subalgebra.  (u is the ideal of all nilpotent elements of
  the algebraic closure of phi(g); that span description is what makes
  it computable.)

* Given catalog algebras g and h, does any simply transitive action
  exist?  Existence is certified by a verified witness morphism of the
  semisimple splitting (or the canonical action on the nilshadow);
  non-existence by an eigenvalue obstruction: every torus generator must
  match the spectrum of some derivation of h, with multiplicities, and
  for a 2-dimensional torus the same must hold for every element of the
  torus simultaneously.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .affine import AffineAlgebra, AffineElement, LieMorphism
from .jordan import is_nilpotent
from .linalg import Matrix, RowSpan, Vector, charpoly, rank
from .liealg import LieAlgebra, derived_series, is_nilpotent_algebra, span_of
from .polynomials import (
    Polynomial,
    RootValue,
    UnfactorablePolynomialError,
    factor_into_atoms,
    roots_of_atoms,
)
from .scalars import Scalar

__all__ = [
    "Verdict",
    "TransitivityReport",
    "ClosureFailedError",
    "compute_u",
    "check_simply_transitive",
    "spectrum_match",
    "derivation_spectrum_feasible",
    "commuting_pair_feasible",
    "UnsupportedTargetError",
]


class Verdict:
    SIMPLY_TRANSITIVE = "SIMPLY_TRANSITIVE"
    NOT_SIMPLY_TRANSITIVE = "NOT_SIMPLY_TRANSITIVE"
    EXISTS = "EXISTS"
    OBSTRUCTED = "OBSTRUCTED"
    UNKNOWN = "UNKNOWN"


class ClosureFailedError(RuntimeError):
    """span{(X_i)_n} failed to be a subalgebra; indicates a real bug."""


class UnsupportedTargetError(ValueError):
    """Spectrum feasibility is implemented for the dim <= 4 catalog targets."""


@dataclass
class TransitivityReport:
    verdict: str
    u_basis: list[AffineElement] = field(default_factory=list)
    projection_rank: int = 0
    reasons: list[str] = field(default_factory=list)
    obstruction: Optional[dict] = None
    witness: Optional[LieMorphism] = None

    def to_json(self) -> dict:
        from .affine import morphism_to_json

        out = {
            "verdict": self.verdict,
            "projection_rank": self.projection_rank,
            "u_dim": len(self.u_basis),
            "reasons": list(self.reasons),
        }
        if self.obstruction is not None:
            out["obstruction"] = {k: str(v) for k, v in self.obstruction.items()}
        if self.witness is not None:
            out["witness"] = morphism_to_json(self.witness)
        return out


# -- Question 1: is a given morphism simply transitive? ---------------------------------


def compute_u(phi: LieMorphism) -> list[AffineElement]:
    """The ideal u of all nilpotent elements of the algebraic closure of
    phi(g), spanned by the nilpotent Jordan parts of an adapted basis.

    The basis of phi(g) is chosen so that its first vectors span the
    commutator subalgebra [phi(g), phi(g)]; only then do the nilpotent
    parts span u (for a random basis they need not even be closed).
    """
    aff = phi.target
    report = phi.verify()
    if not report.is_homomorphism:
        raise ValueError(f"not a Lie algebra morphism (pair {report.failing_pair})")
    if not report.injective:
        raise ValueError("morphism is not injective")
    image = [phi.images[i] for i in range(phi.source.dim)]
    _require_solvable_image(phi)

    adapted: list[AffineElement] = []
    span = RowSpan(aff.n + aff.m)
    for x in image:
        for y in image:
            z = aff.bracket(x, y)
            if span.add(aff.coords(z)):
                adapted.append(z)
    commutator_dim = len(adapted)
    for x in image:
        if span.add(aff.coords(x)):
            adapted.append(x)
    image_dim = len(adapted)

    u_span = RowSpan(aff.n + aff.m)
    u_basis: list[AffineElement] = []
    for i, z in enumerate(adapted):
        if i < commutator_dim:
            zn = z  # the commutator subalgebra is nilpotent: z is its own nilpotent part
            if not z.is_nilpotent_element():
                raise ClosureFailedError("commutator element is not nilpotent")
        else:
            _, zn = aff.jordan(z)
        if u_span.add(aff.coords(zn)):
            u_basis.append(zn)

    for a in u_basis:
        for b in u_basis:
            if not u_span.contains(aff.coords(aff.bracket(a, b))):
                raise ClosureFailedError("nilpotent-part span is not bracket closed")
        if not a.is_nilpotent_element():
            raise ClosureFailedError("u contains a non-nilpotent element")
    if len(u_basis) > image_dim:
        raise ClosureFailedError("dim u exceeds dim phi(g)")
    return u_basis


def _require_solvable_image(phi: LieMorphism) -> None:
    aff = phi.target
    coords = phi.image_coords()
    current = coords
    for _ in range(aff.n + aff.m + 1):
        span = RowSpan(aff.n + aff.m, current)
        if span.dim == 0:
            return
        nxt = []
        for x in current:
            for y in current:
                nxt.append(aff.as_lie.bracket(x, y))
        nxt_span = RowSpan(aff.n + aff.m, nxt)
        if nxt_span.dim == span.dim:
            raise ValueError("image of the morphism is not solvable")
        current = [v for v in nxt if not v.is_zero()]
        if not current:
            return
    raise ValueError("derived series failed to terminate")


def check_simply_transitive(phi: LieMorphism) -> TransitivityReport:
    """Decide simple transitivity of the action induced by phi."""
    report = phi.verify()
    if not report.is_homomorphism:
        raise ValueError(f"not a Lie algebra morphism (pair {report.failing_pair})")
    reasons: list[str] = []
    if not report.injective:
        return TransitivityReport(
            Verdict.NOT_SIMPLY_TRANSITIVE,
            reasons=["morphism has a kernel, the action cannot be simple"],
        )
    dim_g, dim_h = phi.source.dim, phi.target.n
    if dim_g != dim_h:
        return TransitivityReport(
            Verdict.NOT_SIMPLY_TRANSITIVE,
            reasons=[f"dim g = {dim_g} != dim h = {dim_h}"],
        )
    u = compute_u(phi)
    t_rank = rank(Matrix.from_columns([x.v for x in u])) if u else 0
    ok = t_rank == dim_h
    if ok:
        reasons.append(f"translation projection of u has full rank {t_rank}")
    else:
        reasons.append(
            f"translation projection of u has rank {t_rank} < dim h = {dim_h} (dim u = {len(u)})"
        )
    verdict = Verdict.SIMPLY_TRANSITIVE if ok else Verdict.NOT_SIMPLY_TRANSITIVE
    _crosscheck_nilpotent_fast_path(phi, verdict)
    return TransitivityReport(verdict, u_basis=u, projection_rank=t_rank, reasons=reasons)


def _crosscheck_nilpotent_fast_path(phi: LieMorphism, verdict: str) -> None:
    """For nilpotent g embedded with all derivation parts nilpotent the
    criterion reduces to bijectivity of the translation map; make sure the
    general checker agrees."""
    if phi.source.dim != phi.target.n:
        return
    if not is_nilpotent_algebra(phi.source):
        return
    if not all(img.is_nilpotent_element() for img in phi.images):
        return
    t_bijective = rank(Matrix.from_columns([img.v for img in phi.images])) == phi.target.n
    fast = Verdict.SIMPLY_TRANSITIVE if t_bijective else Verdict.NOT_SIMPLY_TRANSITIVE
    if fast != verdict:
        raise ClosureFailedError("nilpotent fast path disagrees with the general checker")


# -- spectrum obstructions ----------------------------------------------------------------


def spectrum_match(s: Matrix, ad_s_on_shadow: Matrix) -> bool:
    """Exact equality of characteristic polynomials (captures multiplicity
    and conjugate pairs without extracting eigenvalues)."""
    if s.rows != ad_s_on_shadow.rows:
        raise ValueError("size mismatch between derivation and adjoint action")
    return charpoly(s) == charpoly(ad_s_on_shadow)


def _counter(values: Sequence[RootValue]) -> dict:
    out: dict = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


def _remaining(roots: Sequence[RootValue], used: Sequence[int]) -> list[RootValue]:
    return [r for k, r in enumerate(roots) if k not in used]


def derivation_spectrum_feasible(target: str, p: Polynomial) -> bool:
    """Does some (real) derivation of the target algebra have characteristic
    polynomial p?

    Uses the eigenvalue patterns of the derivation algebras:
      abelian R^n : anything (companion matrices are derivations),
      h3          : {x, y, x+y} with x+y real,
      h3 + R      : {x, y, x+y, v} with x+y and v real,
      n4          : {a, e, a+e, 2a+e} with a, e real.
    Raises UnfactorablePolynomialError when p cannot be split into linear
    and quadratic factors over Q (callers report UNKNOWN, never a guess).
    """
    if target.startswith("R") and target[1:].isdigit():
        if p.degree() != int(target[1:]):
            raise ValueError("degree does not match the target dimension")
        return True
    if target not in ("h3", "rh3", "n4"):
        raise UnsupportedTargetError(f"no derivation spectrum pattern for {target!r}")
    expected_deg = 3 if target == "h3" else 4
    if p.degree() != expected_deg:
        raise ValueError("degree does not match the target dimension")
    roots = roots_of_atoms(factor_into_atoms(p))
    if target == "h3":
        return _feasible_h3(roots)
    if target == "rh3":
        return _feasible_rh3(roots)
    return _feasible_n4(roots)


def _feasible_h3(roots: list[RootValue]) -> bool:
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            s = roots[i] + roots[j]
            if s is None or not s.is_real():
                continue
            if _counter(_remaining(roots, (i, j))) == _counter([s]):
                return True
    return False


def _feasible_rh3(roots: list[RootValue]) -> bool:
    n = 4
    for i in range(n):
        for j in range(i + 1, n):
            s = roots[i] + roots[j]
            if s is None or not s.is_real():
                continue
            for k in range(n):
                if k in (i, j):
                    continue
                if roots[k] != s:
                    continue
                v = _remaining(roots, (i, j, k))[0]
                if v.is_real():
                    return True
    return False


def _feasible_n4(roots: list[RootValue]) -> bool:
    n = 4
    for i in range(n):
        if not roots[i].is_real():
            continue
        for j in range(n):
            if i == j or not roots[j].is_real():
                continue
            a, e = roots[i], roots[j]
            s1 = a + e
            s2 = a.scale(2) + e if a.scale(2) is not None else None
            if s1 is None or s2 is None:
                continue
            if _counter(_remaining(roots, (i, j))) == _counter([s1, s2]):
                return True
    return False


_PAIR_SAMPLES = (
    (1, 0),
    (0, 1),
    (1, 1),
    (1, 2),
    (2, 1),
    (1, -1),
    (-1, 2),
    (3, 1),
    (2, -3),
)


def commuting_pair_feasible(
    target: str, ad1: Matrix, ad2: Matrix
) -> tuple[Optional[bool], Optional[Polynomial]]:
    """Can a 2-dimensional torus with the given (commuting) actions on the
    nilshadow embed as commuting semisimple derivations of the target?

    Every element of the torus must separately satisfy the spectrum
    criterion, so the pencil a*ad1 + b*ad2 is sampled at fixed rational
    points; one infeasible member refutes the pair and is returned as the
    obstruction.  A positive answer is only certified in the trivial case
    (both actions zero: the zero pair works); otherwise (None, None) means
    undecided.
    """
    if ad1.rows != ad2.rows:
        raise ValueError("actions have different sizes")
    if not ad1.commutator(ad2).is_zero():
        raise ValueError("torus actions do not commute")
    undecided = False
    for a, b in _PAIR_SAMPLES:
        member = ad1.scale(Scalar(a)) + ad2.scale(Scalar(b))
        p = charpoly(member)
        try:
            if not derivation_spectrum_feasible(target, p):
                return False, p
        except UnfactorablePolynomialError:
            undecided = True
    if undecided:
        return None, None
    if ad1.is_zero() and ad2.is_zero():
        return True, None
    return None, None
