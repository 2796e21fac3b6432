"""Degree (first Chern class) tests.

The hand oracle for characters: c1 = -(q0 + q1 + q_inf) where q_inf is the
wrapped angle (1 - (q0 + q1) mod 1) mod 1, so c1 is 0, -1, or -2 depending
on how many wraps the angle pair forces.
"""

from fractions import Fraction

import numpy as np
import pytest

from logroots import (
    DEFAULT,
    MonodromyRep,
    character,
    chern_bound_check,
    chern_class,
    trivial,
    unitarity_test,
)
from logroots.chern import ChernData
from logroots.errors import NonIntegerChern, ProvenBoundViolated

from conftest import angle, random_invertible, random_unitary


def character_c1_oracle(q0, q1):
    q_inf = (1 - (q0 + q1) % 1) % 1
    total = q0 + q1 + q_inf
    assert total == int(total)
    return -int(total)


class TestCharacterDegrees:
    @pytest.mark.parametrize("q0,q1", [
        (0, 0), (Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 3), Fraction(1, 4)),
        (Fraction(3, 4), Fraction(3, 4)), (Fraction(5, 6), Fraction(1, 6)),
        (Fraction(2, 3), Fraction(2, 3)), (Fraction(1, 7), 0),
    ])
    def test_matches_hand_oracle(self, q0, q1):
        chi = character(angle(q0), angle(q1))
        assert chern_class(chi).c1 == character_c1_oracle(q0, q1)

    def test_trivial_rep_degree_zero(self):
        for n in (1, 2, 3):
            assert chern_class(trivial(n)).c1 == 0

    def test_modulus_does_not_matter(self):
        # ln-moduli cancel across the three poles; only angles count
        assert chern_class(character(2.0, 3.0)).c1 == 0
        assert chern_class(character(-2.0, 5.0)).c1 == \
            chern_class(character(-1.0, 1.0)).c1 == -1

    def test_exact_mode_on_rational_angles(self):
        chi = character(angle(Fraction(5, 6)), angle(Fraction(1, 6)))
        data = chern_class(chi, exact=True)
        assert data.exact
        assert data.c1 == -1
        assert data.per_pole[0].exact_q_sum == Fraction(5, 6)


class TestChernProperties:
    def test_integer_snapping_residual(self, rng):
        for _ in range(300):
            n = int(rng.integers(1, 4))
            rep = MonodromyRep(random_invertible(rng, n),
                               random_invertible(rng, n))
            data = chern_class(rep)
            assert abs(data.raw_sum - data.c1) < 1e-6

    def test_conjugation_invariance(self, rng):
        for _ in range(100):
            rep = MonodromyRep(random_invertible(rng, 3),
                               random_invertible(rng, 3))
            u = random_unitary(rng, 3)
            conj = MonodromyRep(u @ rep.m0 @ u.conj().T,
                                u @ rep.m1 @ u.conj().T)
            assert chern_class(rep).c1 == chern_class(conj).c1

    def test_direct_sum_additivity(self, rng):
        for _ in range(100):
            a = MonodromyRep(random_invertible(rng, 2),
                             random_invertible(rng, 2))
            b = MonodromyRep(random_invertible(rng, 1),
                             random_invertible(rng, 1))
            m0 = np.block([[a.m0, np.zeros((2, 1))], [np.zeros((1, 2)), b.m0]])
            m1 = np.block([[a.m1, np.zeros((2, 1))], [np.zeros((1, 2)), b.m1]])
            whole = MonodromyRep(m0, m1)
            assert chern_class(whole).c1 == chern_class(a).c1 + chern_class(b).c1

    def test_wrap_diagnostics(self, rng):
        for _ in range(100):
            rep = MonodromyRep(random_invertible(rng, 3),
                               random_invertible(rng, 3))
            data = chern_class(rep)
            assert len(data.wrap_integers) == 3
            assert all(w in (0, 1) for w in data.wrap_integers)
            # determinant coherence: finite q-sums minus product q-sum is int
            assert isinstance(data.det_wrap, int)

    def test_zero_eps_int_rejects_noise(self, rng):
        # with a zero snapping tolerance any floating residual is fatal
        tol = DEFAULT.override(eps_int=0.0)
        raised = 0
        for _ in range(20):
            rep = MonodromyRep(random_invertible(rng, 3),
                               random_invertible(rng, 3))
            try:
                chern_class(rep, tol)
            except NonIntegerChern:
                raised += 1
        assert raised > 0

    def test_exact_and_float_agree(self, rng):
        dens = [1, 2, 3, 4, 6, 8, 12]
        for _ in range(100):
            qs = [Fraction(int(rng.integers(0, d)), d)
                  for d in rng.choice(dens, 2)]
            chi = character(angle(qs[0]), angle(qs[1]))
            assert chern_class(chi).c1 == chern_class(chi, exact=True).c1


class TestUnitarity:
    def test_unitary_pair(self, rng):
        rep = MonodromyRep(random_unitary(rng, 2), random_unitary(rng, 2))
        assert unitarity_test(rep)

    def test_generic_pair(self, rng):
        rep = MonodromyRep(2 * random_unitary(rng, 2), random_unitary(rng, 2))
        assert not unitarity_test(rep)


class TestBoundCheck:
    def _fake(self, c1):
        return ChernData(c1=c1, per_pole=(), wrap_integers=(), det_wrap=0,
                         raw_sum=float(-c1), branch_sensitive=False)

    def test_dim2_violation_is_hard_error(self, rng):
        rep = MonodromyRep(random_invertible(rng, 2), random_invertible(rng, 2))
        with pytest.raises(ProvenBoundViolated):
            chern_bound_check(rep, self._fake(-5))
        with pytest.raises(ProvenBoundViolated):
            chern_bound_check(rep, self._fake(1))

    def test_dim2_in_range_passes(self, rng):
        rep = MonodromyRep(random_invertible(rng, 2), random_invertible(rng, 2))
        reports = chern_bound_check(rep, self._fake(-3))
        assert reports[0].holds and not reports[0].conjectural

    def test_unitary_irreducible_strict(self, rng):
        for _ in range(20):
            rep = MonodromyRep(random_unitary(rng, 2), random_unitary(rng, 2))
            data = chern_class(rep)
            reports = chern_bound_check(rep, data)
            strict = [r for r in reports if r.name == "strict-bound-unitary-dim2"]
            if strict:
                assert strict[0].holds

    def test_dim3_window_is_conjectural(self, rng):
        rep = MonodromyRep(random_invertible(rng, 3), random_invertible(rng, 3))
        # even an out-of-window value only flags, never raises
        reports = chern_bound_check(rep, self._fake(-7))
        (window,) = [r for r in reports if r.name == "chern-window-dim3"]
        assert window.conjectural and not window.holds
