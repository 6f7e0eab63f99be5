"""Existence of simply transitive actions for catalog pairs (g, h).

The decision pipeline for `check_pair`:

  1. build the semisimple splitting g' = n x| t of g;
  2. if h is isomorphic to the nilshadow n, the canonical action of g on
     its own nilshadow settles existence (the splitting embeds into
     aff(n) with t acting as derivations and the identity translation);
  3. otherwise look up a registered witness morphism and re-verify it
     from scratch: the splitting must embed with nilpotent nilshadow
     image, semisimple torus image and bijective translation part, and
     the restriction to g must pass the simply-transitivity checker;
  4. otherwise hunt for an eigenvalue obstruction: each torus generator
     (and, for a 2-dimensional torus, the whole pencil) must match the
     spectrum of a derivation of h.

No guess is ever returned: a pair with neither witness nor obstruction
comes back UNKNOWN.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .affine import AffineAlgebra, AffineElement, LieMorphism
from .catalog import Catalog, WitnessData, default_catalog
from .linalg import Matrix, Vector, charpoly, rank
from .liealg import nilpotent_standard_basis
from .scalars import Scalar
from .splitting import SemisimpleSplitting, build_splitting
from .transitivity import (
    TransitivityReport,
    UnsupportedTargetError,
    Verdict,
    check_simply_transitive,
    commuting_pair_feasible,
    derivation_spectrum_feasible,
    spectrum_match,
)
from .polynomials import UnfactorablePolynomialError

__all__ = [
    "DimensionMismatchError",
    "CatalogWitnessError",
    "SplittingEmbedding",
    "canonical_embedding",
    "witness_embedding",
    "check_pair",
]


class DimensionMismatchError(ValueError):
    pass


class CatalogWitnessError(RuntimeError):
    """A stored witness failed re-verification; the catalog data is wrong."""


@dataclass
class SplittingEmbedding:
    """A verified embedding of a semisimple splitting into aff(h)."""

    splitting: SemisimpleSplitting
    target: AffineAlgebra
    torus_images: list[AffineElement]
    shadow_images: list[AffineElement]
    on_splitting: LieMorphism  # from g'
    on_original: LieMorphism   # restriction to g

    def verify(self) -> None:
        """All conditions of a simply transitive splitting embedding."""
        sp, aff = self.splitting, self.target
        report = self.on_splitting.verify()
        if not report.is_homomorphism:
            raise CatalogWitnessError(
                f"splitting image is not a morphism (pair {report.failing_pair})"
            )
        if not report.injective:
            raise CatalogWitnessError("splitting image is not injective")
        for x in self.shadow_images:
            if not x.is_nilpotent_element():
                raise CatalogWitnessError("nilshadow image contains a non-nilpotent element")
        for x in self.torus_images:
            if not x.is_pure_semisimple():
                raise CatalogWitnessError("torus image is not a semisimple derivation")
        t_rank = rank(Matrix.from_columns([x.v for x in self.shadow_images]))
        if t_rank != aff.n:
            raise CatalogWitnessError("translation part is not bijective on the nilshadow")
        # spectrum identity: each torus derivation matches its adjoint action
        for i, x in enumerate(self.torus_images):
            if not spectrum_match(x.d, sp.torus_action_on_nilshadow(i)):
                raise CatalogWitnessError("torus spectrum does not match its nilshadow action")


def _assemble(
    sp: SemisimpleSplitting,
    target: AffineAlgebra,
    torus_images: list[AffineElement],
    shadow_images: list[AffineElement],
) -> SplittingEmbedding:
    m = sp.torus_dim
    images = list(torus_images)
    for k in range(sp.original.dim):
        tco, uco = sp.decompose(sp.embed(Vector.unit(sp.original.dim, k)))
        acc = target.zero()
        for c, img in zip(tco, torus_images):
            if not c.is_zero():
                acc = acc + img.scale(c)
        for c, img in zip(uco, shadow_images):
            if not c.is_zero():
                acc = acc + img.scale(c)
        images.append(acc)
    phi_prime = LieMorphism(sp.algebra, target, images)
    psi = LieMorphism(sp.original, target, images[m:])
    return SplittingEmbedding(sp, target, torus_images, shadow_images, phi_prime, psi)


def canonical_embedding(sp: SemisimpleSplitting, target: AffineAlgebra) -> SplittingEmbedding:
    """The action of g on its own nilshadow: translations are the identity,
    the torus acts by its (semisimple) adjoint derivations, transported to
    the standard presentation of the nilshadow class."""
    basis, cls = nilpotent_standard_basis(sp.nilshadow_algebra)
    if target.n != sp.nilshadow_algebra.dim:
        raise DimensionMismatchError("target dimension differs from the nilshadow")
    p = Matrix.from_columns(basis).inverse()  # nilshadow coords -> standard coords
    p_inv = Matrix.from_columns(basis)
    torus_images = [
        target.element(Vector.zero(target.n), p @ sp.torus_action_on_nilshadow(i) @ p_inv)
        for i in range(sp.torus_dim)
    ]
    shadow_images = [target.element(p.column(j)) for j in range(target.n)]
    emb = _assemble(sp, target, torus_images, shadow_images)
    emb.verify()
    return emb


def witness_embedding(
    sp: SemisimpleSplitting,
    target: AffineAlgebra,
    data: WitnessData,
    params: Mapping[str, Scalar],
) -> SplittingEmbedding:
    """Instantiate a stored witness at the given parameters and verify it."""
    n = target.n
    torus_images = [
        target.element(Vector.zero(n), d) for d in data.torus_matrices(params, n)
    ]
    if len(torus_images) != sp.torus_dim:
        raise CatalogWitnessError("witness torus rank mismatch")
    shadow_images = [target.element(v, d) for v, d in data.shadow_images(params, n)]
    if len(shadow_images) != sp.nilshadow.dim:
        raise CatalogWitnessError("witness nilshadow size mismatch")
    emb = _assemble(sp, target, torus_images, shadow_images)
    emb.verify()
    return emb


def check_pair(
    gname: str,
    params: Optional[Mapping[str, Scalar]] = None,
    hname: str = "rh3",
    catalog: Optional[Catalog] = None,
) -> TransitivityReport:
    """Does the catalog algebra g (at the given parameters) act simply
    transitively on the catalog nilpotent target h?"""
    catalog = catalog or default_catalog()
    params = dict(params or {})
    g = catalog.algebra(gname, params)
    target = catalog.affine_target(hname)
    hclass = catalog.resolve(hname)
    if g.dim != target.n:
        raise DimensionMismatchError(f"dim g = {g.dim} != dim h = {target.n}")
    sp = build_splitting(g)

    shadow_class = sp.nilshadow_class()
    if shadow_class == hclass:
        emb = canonical_embedding(sp, target)
        report = check_simply_transitive(emb.on_original)
        if report.verdict != Verdict.SIMPLY_TRANSITIVE:
            raise CatalogWitnessError("canonical nilshadow action failed the checker")
        return TransitivityReport(
            Verdict.EXISTS,
            u_basis=report.u_basis,
            projection_rank=report.projection_rank,
            reasons=[f"target is the nilshadow ({shadow_class}); canonical action verified"],
            witness=emb.on_original,
        )

    data = catalog.witness_data(gname, params, hname)
    if data is not None:
        emb = witness_embedding(sp, target, data, params)
        report = check_simply_transitive(emb.on_original)
        if report.verdict != Verdict.SIMPLY_TRANSITIVE:
            raise CatalogWitnessError("registered witness failed the checker")
        return TransitivityReport(
            Verdict.EXISTS,
            u_basis=report.u_basis,
            projection_rank=report.projection_rank,
            reasons=["registered witness verified simply transitive"],
            witness=emb.on_original,
        )

    # obstruction hunt
    unknown = False
    actions = [sp.torus_action_on_nilshadow(i) for i in range(sp.torus_dim)]
    for i, action in enumerate(actions):
        p = charpoly(action)
        try:
            if not derivation_spectrum_feasible(hclass, p):
                return TransitivityReport(
                    Verdict.OBSTRUCTED,
                    reasons=[
                        f"torus generator t{i+1} has spectrum {p} on the nilshadow, "
                        f"which no derivation of {hclass} attains"
                    ],
                    obstruction={"generator": f"t{i+1}", "charpoly": p},
                )
        except (UnfactorablePolynomialError, UnsupportedTargetError):
            unknown = True
    if sp.torus_dim == 2:
        feasible, poly = commuting_pair_feasible(hclass, actions[0], actions[1])
        if feasible is False:
            return TransitivityReport(
                Verdict.OBSTRUCTED,
                reasons=[
                    f"no pair of commuting semisimple derivations of {hclass} matches the "
                    f"2-dimensional torus; failing pencil member has spectrum {poly}"
                ],
                obstruction={"generator": "torus pencil", "charpoly": poly},
            )
        if feasible is None:
            unknown = True
    reasons = ["no registered witness and no spectrum obstruction found"]
    if unknown:
        reasons.append("some spectrum checks were inconclusive")
    return TransitivityReport(Verdict.UNKNOWN, reasons=reasons)
