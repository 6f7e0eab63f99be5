from __future__ import annotations

import pytest

from nilshadow.affine import (
    AffineAlgebra,
    CenterNotTrivialError,
    LieMorphism,
    morphism_from_json,
    morphism_to_json,
)
from nilshadow.jordan import is_semisimple
from nilshadow.linalg import Matrix, Vector
from nilshadow.liealg import LieAlgebra
from nilshadow.scalars import Q, Scalar

half = Scalar(Q(1, 2))


def euclid_motions_splitting():
    """R x| R^3 with a rotation action plus a central direction: the
    splitting of the rigid-motion algebra of the plane, extended by R."""
    return LieAlgebra(4, {(0, 1): [0, 0, -1, 0], (0, 2): [0, 1, 0, 0]})


def rotation_witness(aff):
    """Embedding of that splitting into aff(h3): rotations upstairs, the
    half-coefficient shears downstairs."""
    rot = Matrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    e32 = Matrix.unit(3, 2, 1, -half)
    e31 = Matrix.unit(3, 2, 0, half)
    return LieMorphism(
        euclid_motions_splitting(),
        aff,
        [
            aff.element([0, 0, 0], rot),
            aff.element([1, 0, 0], e32),
            aff.element([0, 1, 0], e31),
            aff.element([0, 0, 1]),
        ],
    )


class TestBracket:
    def test_pure_translations_over_abelian(self, catalog):
        aff = catalog.affine_target("R3")
        x = aff.element([1, 2, 3])
        y = aff.element([0, 1, 0])
        assert aff.bracket(x, y).is_zero()

    def test_derivation_acts_on_translation(self, catalog):
        aff = catalog.affine_target("R3")
        d = Matrix.diagonal([1, 2, 3])
        x = aff.element([0, 0, 0], d)
        y = aff.element([1, 1, 1])
        out = aff.bracket(x, y)
        assert out.v == Vector([1, 2, 3]) and out.d.is_zero()

    def test_rotation_witness_is_morphism(self, aff_h3):
        rep = rotation_witness(aff_h3).verify()
        assert rep.is_homomorphism and rep.injective

    def test_non_derivation_rejected(self, aff_h3):
        with pytest.raises(ValueError):
            aff_h3.element([0, 0, 0], Matrix.unit(3, 2, 2))  # e3 -> e3 alone is no derivation


class TestCenter:
    @pytest.mark.parametrize("name", ["R3", "R4", "h3", "rh3", "n4"])
    def test_trivial_for_catalog_targets(self, catalog, name):
        assert catalog.affine_target(name).has_trivial_center()


class TestJordanInAff:
    def test_translation_over_abelian_is_nilpotent(self, catalog):
        aff = catalog.affine_target("R3")
        x = aff.element([1, 2, 3])
        xs, xn = aff.jordan(x)
        assert xs.is_zero() and xn == x

    def test_semisimple_derivation_is_its_own_part(self, catalog):
        aff = catalog.affine_target("R3")
        x = aff.element([0, 0, 0], Matrix.diagonal([1, 0, 2]))
        xs, xn = aff.jordan(x)
        assert xn.is_zero() and xs == x

    def test_diagonal_translation_pair(self):
        # x = (1, 1) in aff(R): semisimple, nilpotent part vanishes
        aff = AffineAlgebra(LieAlgebra(1, {}))
        x = aff.element([1], Matrix([[1]]))
        xs, xn = aff.jordan(x)
        assert xn.is_zero() and xs == x

    def test_mixed_element(self, aff_rh3):
        # translation along the 0-eigenspace of a semisimple derivation
        d = Matrix.diagonal([0, 1, 1, 0])
        x = aff_rh3.element([1, 0, 0, 0], d)
        xs, xn = aff_rh3.jordan(x)
        assert xn == aff_rh3.element([1, 0, 0, 0])
        assert xs == aff_rh3.element([0, 0, 0, 0], d)

    def test_idempotence(self, aff_rh3):
        x = aff_rh3.element([1, 2, 0, 0], Matrix.diagonal([0, 1, 1, 2]))
        xs, xn = aff_rh3.jordan(x)
        assert aff_rh3.jordan(xs) == (xs, aff_rh3.zero())
        assert aff_rh3.jordan(xn) == (aff_rh3.zero(), xn)
        assert aff_rh3.bracket(xs, xn).is_zero()

    def test_nilpotency_by_derivation_part(self, aff_h3):
        assert aff_h3.element([5, 7, 9]).is_nilpotent_element()
        assert not aff_h3.element([0, 0, 0], Matrix.diagonal([1, 0, 1])).is_nilpotent_element()
        shear = Matrix.unit(3, 2, 0)
        assert aff_h3.element([1, 0, 0], shear).is_nilpotent_element()


class TestMorphismVerification:
    def test_zero_map_passes_but_not_injective(self, aff_h3):
        g = LieAlgebra(3, {(0, 1): [0, 1, 0]})
        phi = LieMorphism(g, aff_h3, [aff_h3.zero()] * 3)
        rep = phi.verify()
        assert rep.is_homomorphism and not rep.injective
        assert len(rep.kernel_basis) == 3

    def test_failure_reports_first_pair(self, aff_h3):
        g = LieAlgebra(3, {})  # abelian source
        phi = LieMorphism(
            g,
            aff_h3,
            [aff_h3.element([1, 0, 0]), aff_h3.element([0, 1, 0]), aff_h3.element([0, 0, 1])],
        )
        rep = phi.verify()  # [f1, f2] = f3 != 0 spoils the abelian relations
        assert not rep.is_homomorphism
        assert rep.failing_pair == (0, 1)

    def test_torus_restriction_semisimple(self, aff_h3):
        phi = rotation_witness(aff_h3)
        assert phi.images[0].is_pure_semisimple()
        assert is_semisimple(phi.images[0].d)

    def test_json_round_trip(self, aff_h3):
        phi = rotation_witness(aff_h3)
        j = morphism_to_json(phi)
        phi2 = morphism_from_json(j)
        assert phi2.verify().is_homomorphism
        assert [img.v for img in phi2.images] == [img.v for img in phi.images]
        assert [img.d for img in phi2.images] == [img.d for img in phi.images]


def test_jordan_requires_trivial_center():
    # h3 + R has center, and so does its affine algebra over... build a toy
    # with nontrivial center: aff(h) is centerless for all catalog targets,
    # so exercise the guard through a direct subclass stub instead.
    class Stub(AffineAlgebra):
        def has_trivial_center(self):
            return False

    aff = Stub(LieAlgebra(2, {}))
    with pytest.raises(CenterNotTrivialError):
        aff.jordan(aff.element([1, 0]))
