from __future__ import annotations

import pytest

from nilshadow.jordan import is_semisimple
from nilshadow.linalg import RowSpan, Vector
from nilshadow.liealg import LieAlgebra, centralizer, nilradical, span_of
from nilshadow.scalars import Q, Scalar, parse_scalar
from nilshadow.splitting import build_splitting, nilshadow_class, splitting_complement


def rr3():
    return LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (0, 2): [0, 1, 1, 0]})


def r2r2():
    return LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (2, 3): [0, 0, 0, 1]})


class TestComplement:
    def test_one_dimensional(self):
        ys, parts, _ = splitting_complement(rr3())
        assert ys == [Vector.unit(4, 0)]
        assert parts[0].apply(ys[0]).is_zero()

    def test_nilpotent_is_empty(self):
        g = LieAlgebra(4, {(0, 1): [0, 0, 1, 0]})
        ys, parts, _ = splitting_complement(g)
        assert ys == [] and parts == []

    def test_two_dimensional_with_cross_conditions(self):
        ys, parts, _ = splitting_complement(r2r2())
        assert len(ys) == 2
        for s in parts:
            for y in ys:
                assert s.apply(y).is_zero()
        assert parts[0].commutator(parts[1]).is_zero()


class TestBuildSplitting:
    def test_rr3_walkthrough(self):
        sp = build_splitting(rr3())
        assert sp.algebra.dim == 5 and sp.torus_dim == 1
        assert sp.nilshadow_class() == "rh3"
        # torus acts by diag(0,1,1,0) on the adapted nilshadow basis
        action = sp.torus_action_on_nilshadow(0)
        assert action == action.transpose() and [str(action[(i, i)]) for i in range(4)] == [
            "0/1",
            "1/1",
            "1/1",
            "0/1",
        ]

    def test_nilpotent_is_identity(self):
        g = LieAlgebra(4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]})
        sp = build_splitting(g)
        assert sp.algebra.dim == 4 and sp.torus_dim == 0
        assert sp.nilshadow.dim == 4
        assert sp.nilshadow_class() == "n4"

    def test_diagonal_family(self):
        mu, lam = Scalar(Q(-1, 2)), Scalar(Q(1, 2))
        g = LieAlgebra(4, {(0, 1): [0, 1, 0, 0], (0, 2): Vector([0, 0, mu, 0]), (0, 3): Vector([0, 0, 0, lam])})
        sp = build_splitting(g)
        assert sp.nilshadow_class() == "R4"
        assert sp.algebra.dim == 5

    def test_dimension_identity(self):
        for g in (rr3(), r2r2()):
            sp = build_splitting(g)
            assert sp.algebra.dim == g.dim + sp.torus_dim
            assert sp.nilshadow.dim == g.dim

    def test_torus_acts_semisimply(self):
        for g in (rr3(), r2r2()):
            sp = build_splitting(g)
            for i in range(sp.torus_dim):
                assert is_semisimple(sp.torus_action_on_nilshadow(i))

    def test_two_nilshadow_descriptions_agree(self):
        sp = build_splitting(rr3())
        shadow_as_nilradical = nilradical(sp.algebra)
        assert shadow_as_nilradical.same_as(span_of(sp.algebra, sp.nilshadow.basis))

    def test_centralizer_condition(self):
        sp = build_splitting(rr3())
        c = centralizer(sp.algebra, sp.torus, sp.nilshadow)
        joint = RowSpan(sp.algebra.dim)
        for v in sp.nilshadow.basis:
            if sp.embedded_original.contains(v):
                joint.add(v)
        for v in c.basis:
            joint.add(v)
        assert joint.dim == sp.nilshadow.dim

    def test_embedded_ideal(self):
        from nilshadow.liealg import is_ideal

        sp = build_splitting(rr3())
        assert is_ideal(sp.algebra, sp.embedded_original)


class TestAgainstReferenceTable:
    def test_all_classes(self, catalog):
        for name, ref in catalog.splitting_refs.items():
            entry = catalog.entry(name)
            for sample in catalog.samples(name)[:2]:
                sp = build_splitting(entry.build(sample))
                assert sp.nilshadow_class() == ref.nilshadow, name

    def test_renamed_presentations(self, catalog):
        """The computed splitting matches the recorded presentation through
        the recorded basis renaming, bracket for bracket."""
        for name, ref in catalog.splitting_refs.items():
            if ref.table_basis is None:
                continue
            entry = catalog.entry(name)
            for sample in catalog.samples(name)[:2]:
                g = entry.build(sample)
                sp = build_splitting(g)
                m = sp.torus_dim
                adapted = [Vector.unit(sp.algebra.dim, i) for i in range(m)]
                adapted += list(sp.nilshadow.basis)
                table = []
                for coeffs in ref.table_basis:
                    v = Vector.zero(sp.algebra.dim)
                    for cexpr, b in zip(coeffs, adapted):
                        c = parse_scalar(str(cexpr), sample)
                        if not c.is_zero():
                            v = v + b * c
                    table.append(v)
                listed = set()
                for i, j, terms in ref.table_brackets:
                    got = sp.algebra.bracket(table[i], table[j])
                    want = Vector.zero(sp.algebra.dim)
                    for k, expr in terms:
                        want = want + table[int(k)] * parse_scalar(str(expr), sample)
                    assert got == want, (name, i, j)
                    listed.add((i, j))
                for i in range(len(table)):
                    for j in range(i + 1, len(table)):
                        if (i, j) not in listed:
                            assert sp.algebra.bracket(table[i], table[j]).is_zero(), (name, i, j)


def test_nilshadow_class_convenience():
    assert nilshadow_class(rr3()) == "rh3"
