"""Splitting-type classification tests across dimensions 1 to 3."""

from fractions import Fraction

import numpy as np
import pytest

from logroots import (
    CohomologyDims,
    MonodromyRep,
    SplittingType,
    candidate_tree,
    character,
    character_root,
    classify,
    ext_splits,
    roots_dim2,
    roots_dim3_irreducible,
)
from logroots.chern import ChernData
from logroots.errors import DimensionError

from conftest import angle, random_invertible, random_unitary


def st(*roots):
    return SplittingType.of(roots)


class TestSplittingType:
    def test_sorted_descending(self):
        assert st(-2, 0, -1).roots == (0, -1, -2)

    def test_str(self):
        assert str(st(-1, 0, -2)) == "(0,-1,-2)"

    def test_total(self):
        assert st(-2, 0, -1).total == -3

    def test_equality_is_multiset(self):
        assert st(0, -1) == st(-1, 0)


class TestCohomologyDims:
    @pytest.mark.parametrize("d,h0,h1", [
        (2, 3, 0), (0, 1, 0), (-1, 0, 0), (-2, 0, 1), (-5, 0, 4),
    ])
    def test_single_twist(self, d, h0, h1):
        dims = CohomologyDims.of_twist(d)
        assert (dims.h0, dims.h1) == (h0, h1)

    def test_sum_over_roots(self):
        dims = CohomologyDims.of_twists((0, -1, -2))
        assert (dims.h0, dims.h1) == (1, 1)


class TestCharacterRoot:
    @pytest.mark.parametrize("q0,q1,root", [
        (0, 0, 0),
        (Fraction(1, 2), Fraction(1, 2), -1),
        (Fraction(3, 4), Fraction(3, 4), -2),
        (Fraction(1, 3), Fraction(1, 3), -1),
    ])
    def test_values(self, q0, q1, root):
        assert character_root(character(angle(q0), angle(q1))) == root

    def test_needs_dim_one(self):
        with pytest.raises(DimensionError):
            character_root(MonodromyRep(np.eye(2), np.eye(2)))


class TestExtSplits:
    def test_gap_below_two_splits(self):
        assert ext_splits(st(-1), st(0))
        assert ext_splits(st(0), st(0))
        assert ext_splits(st(0), st(-2))

    def test_gap_two_does_not(self):
        assert not ext_splits(st(-2), st(0))
        assert not ext_splits(st(-2, 0), st(0))


def upper_triangular_pair(diag0, diag1, coupling=1.0):
    """Indecomposable-by-construction reducible pair (when coupling feeds
    every strictly-upper slot)."""
    n = len(diag0)
    m0 = np.diag([complex(angle(q)) for q in diag0])
    m1 = np.diag([complex(angle(q)) for q in diag1]) + \
        coupling * np.triu(np.ones((n, n)), k=1)
    return MonodromyRep(m0.astype(complex), m1.astype(complex))


class TestRootsDim2:
    def test_irreducible_balanced_rule(self, rng):
        # generic and unitary samples: roots are {ceil(z/2), floor(z/2)}
        for _ in range(100):
            rep = MonodromyRep(random_unitary(rng, 2), random_unitary(rng, 2))
            res = classify(rep)
            z = res.chern.c1
            if res.composition_kind == "irreducible":
                assert res.options == (st(-((-z) // 2), z // 2),)

    def test_split_reducible(self):
        # sub root -1 (angles 1/2, 1/2), quotient root 0: gap < 2, splits
        rep = upper_triangular_pair([Fraction(1, 2), 0], [Fraction(1, 2), 0])
        res = classify(rep)
        assert res.determined
        assert res.options == (st(0, -1),)

    def test_nonsplit_range_yields_candidates(self):
        # sub root -2 (angles 3/4 + 3/4), quotient root 0
        rep = upper_triangular_pair([Fraction(3, 4), 0], [Fraction(3, 4), 0])
        res = classify(rep)
        assert res.status == "candidates"
        assert set(res.options) == {st(-2, 0), st(-1, -1)}
        assert res.minimal_weight_range == (0, 1)

    def test_decomposable_union(self):
        m0 = np.diag([angle(Fraction(3, 4)), 1.0])
        m1 = np.diag([angle(Fraction(3, 4)), 1.0])
        res = classify(MonodromyRep(m0, m1))
        # block diagonal: the (-2, 0) pair is exact, no ambiguity
        assert res.determined
        assert res.options == (st(-2, 0),)

    def test_sum_rule_holds(self, rng):
        for _ in range(100):
            rep = MonodromyRep(random_invertible(rng, 2),
                               random_invertible(rng, 2))
            res = classify(rep)
            for opt in res.options:
                assert opt.total == res.chern.c1


class TestRootsDim3Irreducible:
    def _with_degree(self, z, rng):
        # the table only reads c1; feed it through a synthetic ChernData
        fake = ChernData(c1=z, per_pole=(), wrap_integers=(), det_wrap=0,
                         raw_sum=float(-z), branch_sensitive=False)
        rep = MonodromyRep(random_invertible(rng, 3), random_invertible(rng, 3))
        return roots_dim3_irreducible(rep, chern=fake)

    def test_mod_zero_two_candidates(self, rng):
        res = self._with_degree(-3, rng)
        assert set(res.options) == {st(-1, -1, -1), st(0, -1, -2)}
        assert res.status == "candidates"

    def test_mod_one_determined(self, rng):
        res = self._with_degree(-2, rng)
        assert res.options == (st(0, -1, -1),)

    def test_mod_two_determined(self, rng):
        res = self._with_degree(-4, rng)
        assert res.options == (st(-1, -1, -2),)

    def test_real_irreducible_sample(self, rng):
        for _ in range(50):
            rep = MonodromyRep(random_unitary(rng, 3), random_unitary(rng, 3))
            res = classify(rep)
            if res.composition_kind != "irreducible":
                continue
            z = res.chern.c1
            for opt in res.options:
                assert opt.total == z
                assert max(opt.roots) - min(opt.roots) <= 2


class TestRootsDim3Reducible:
    def test_worked_example(self, worked_example):
        res = classify(worked_example)
        assert res.determined
        assert res.options == (st(0, -1, -2),)
        assert res.composition_kind == "both"

    def test_planted_three_characters(self, rng):
        # upper triangular with known diagonal characters, split range
        rep = upper_triangular_pair([0, 0, 0],
                                    [Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)])
        res = classify(rep)
        for opt in res.options:
            assert opt.total == res.chern.c1
            assert all(-3 < r <= 0 for r in opt.roots)

    def test_no_excluded_multiset(self, rng):
        for _ in range(100):
            dims = (2, 1) if rng.integers(2) else (1, 2)
            blocks0 = [random_invertible(rng, d) for d in dims]
            blocks1 = [random_invertible(rng, d) for d in dims]
            m0 = np.zeros((3, 3), dtype=complex)
            m1 = np.zeros((3, 3), dtype=complex)
            pos = 0
            for b0, b1, d in zip(blocks0, blocks1, dims):
                m0[pos:pos + d, pos:pos + d] = b0
                m1[pos:pos + d, pos:pos + d] = b1
                pos += d
            m0[0, 2] += 0.5
            m1[0, 2] += 0.25
            res = classify(MonodromyRep(m0, m1))
            assert st(0, -1, -3) not in res.options


class TestCandidateTree:
    def test_depth_three_offsets(self):
        offsets = candidate_tree(3, 3)
        assert set(offsets) == {(0, 0, 0), (0, 0, -1), (0, -1, -1), (0, -1, -2)}

    def test_depth_two_offsets(self):
        assert set(candidate_tree(3, 2)) == {(0, 0), (0, -1)}

    def test_concrete_roots_filter(self):
        got = set(candidate_tree(3, 3, -3))
        assert got == {st(-1, -1, -1), st(0, -1, -2)}

    def test_degree_not_representable(self):
        # offsets summing to c1 - sum(off) divisible by d only
        assert candidate_tree(3, 2, -3) == [st(-1, -2)]

    def test_wider_steps_for_more_punctures(self):
        # m = 4 allows drops of 2 per level
        assert (0, -2) in candidate_tree(4, 2)
        assert (0, -3) not in candidate_tree(4, 2)

    def test_rejects_bad_shape(self):
        with pytest.raises(DimensionError):
            candidate_tree(1, 3)
        with pytest.raises(DimensionError):
            candidate_tree(3, 0)


class TestClassifyDispatch:
    def test_dim1(self):
        res = classify(character(-1.0, -1.0))
        assert res.options == (st(-1),)
        assert res.composition_kind == "irreducible"

    def test_every_result_has_chern_and_provenance(self, rng):
        for n in (1, 2, 3):
            rep = MonodromyRep(random_invertible(rng, n),
                               random_invertible(rng, n))
            res = classify(rep)
            assert res.chern is not None
            assert res.provenance
            assert res.minimal_weight_range[0] <= res.minimal_weight_range[1]
