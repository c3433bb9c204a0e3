import math
from fractions import Fraction as F

import numpy as np
import pytest

from freerad.classify import (
    decide_cnd,
    decide_pd,
    linear_bound_report,
    schoenberg,
)
from freerad.errors import BadInput
from freerad.moments import AtomicMeasure, RadialFunction, synthesize_phi, synthesize_psi
from freerad.oracle import gram_pd
from freerad.spherical import psi_one, spherical_values
from freerad.words import Rank

R1 = Rank.finite(1)
R2 = Rank.finite(2)
R3 = Rank.finite(3)
RINF = Rank.infinite()


def random_measure(rng, max_atoms=4):
    k = rng.randint(1, max_atoms + 1)
    nodes = rng.uniform(-1, 1, size=k)
    while len(set(nodes.tolist())) < k:
        nodes = rng.uniform(-1, 1, size=k)
    weights = rng.uniform(0.05, 1.0, size=k)
    return AtomicMeasure(tuple(zip(nodes.tolist(), weights.tolist())))


class TestDecidePd:
    def test_synthesized_atom(self):
        f = RadialFunction(R2, (1.0, 0.5, 0.0, -1 / 6))
        assert decide_pd(f).status == "ConsistentPD"

    def test_mean_above_mass_rejected(self):
        for rank in (R1, R2, RINF):
            f = RadialFunction(rank, (1.0, 1.05, 1.0))
            v = decide_pd(f)
            assert v.status == "CertifiedNot"
            assert v.moment_verdict.witness is not None

    def test_constant_function(self):
        for rank in (R1, R2, RINF):
            assert decide_pd(RadialFunction(rank, (1.0,) * 5)).status == "ConsistentPD"

    def test_rejects_nonpositive_head(self):
        with pytest.raises(BadInput):
            decide_pd(RadialFunction(R2, (0.0, 1.0)))
        with pytest.raises(BadInput):
            decide_pd(RadialFunction(R2, (-1.0, 0.0)))

    def test_scale_covariance(self):
        rng = np.random.RandomState(5)
        for _ in range(10):
            f = synthesize_phi(R2, random_measure(rng), 8)
            base = decide_pd(f).status
            for lam in (0.25, 3.0, 1e4):
                g = RadialFunction(R2, tuple(lam * v for v in f.values))
                assert decide_pd(g).status == base

    def test_completeness_on_synthesized_corpus(self):
        rng = np.random.RandomState(23)
        for rank in (R1, R2, R3, RINF):
            for _ in range(15):
                f = synthesize_phi(rank, random_measure(rng), 10)
                assert decide_pd(f).status == "ConsistentPD"

    def test_depth_recorded(self):
        assert decide_pd(RadialFunction(R2, (1.0, 0.5, 0.0))).depth == 2


class TestDecideCnd:
    def test_linear_growth_accepted(self):
        f = RadialFunction(R2, (0.0, 1.0, 2.0, 3.0), role="psi")
        v = decide_cnd(f)
        assert v.status == "ConsistentCND"
        assert v.moments[0] == 1.0

    def test_superlinear_step_rejected(self):
        f = RadialFunction(R2, (0.0, 1.0, 3.0), role="psi")
        v = decide_cnd(f)
        assert v.status == "CertifiedNot"
        assert v.moment_verdict.witness[0] == "localizer(1-s)"

    def test_zero_function(self):
        for rank in (R1, R2, RINF):
            f = RadialFunction(rank, (0.0,) * 6, role="psi")
            assert decide_cnd(f).status == "ConsistentCND"

    def test_rejects_nonzero_head(self):
        with pytest.raises(BadInput):
            decide_cnd(RadialFunction(R2, (1.0, 1.0), role="psi"))

    def test_completeness_on_synthesized_corpus(self):
        rng = np.random.RandomState(31)
        for rank in (R1, R2, R3, RINF):
            for _ in range(15):
                f = synthesize_psi(rank, random_measure(rng), 10)
                assert decide_cnd(f).status == "ConsistentCND"


class TestSchoenberg:
    def test_haagerup_function(self):
        f = RadialFunction(RINF, (0.0, 1.0, 2.0, 3.0), role="psi")
        out = schoenberg(f, math.log(2))
        assert out.values == (1.0, 0.5, 0.25, 0.125)
        assert out.role == "phi"

    def test_head_is_one(self):
        rng = np.random.RandomState(37)
        for _ in range(5):
            f = synthesize_psi(R2, random_measure(rng), 6)
            assert schoenberg(f, 0.7).values[0] == 1.0

    def test_transform_lands_in_pd_cone(self):
        f = synthesize_psi(R2, AtomicMeasure(((0.5, 1.0),)), 8)
        out = schoenberg(f, 0.7)
        assert decide_pd(out).status == "ConsistentPD"

    def test_corpus_all_t(self):
        rng = np.random.RandomState(41)
        for _ in range(20):
            rank = [R1, R2, R3, RINF][rng.randint(4)]
            f = synthesize_psi(rank, random_measure(rng), 10)
            for t in (0.1, 1.0, 10.0):
                assert decide_pd(schoenberg(f, t)).status == "ConsistentPD"

    def test_rejects_bad_t_and_head(self):
        f = RadialFunction(R2, (0.0, 1.0), role="psi")
        with pytest.raises(BadInput):
            schoenberg(f, 0.0)
        with pytest.raises(BadInput):
            schoenberg(RadialFunction(R2, (1.0, 1.0)), 1.0)


class TestLinearBound:
    def test_psi_one_rank_two(self):
        f = RadialFunction(R2, tuple(psi_one(R2, n) for n in range(6)), role="psi")
        report = linear_bound_report(f)
        assert report.rank_factor == 2  # (q+1)/(q-1) at q = 3
        assert report.constant == 2
        assert report.holds
        assert report.margins[2] == 2 * 2 - F(8, 3)

    def test_infinite_rank_word_length_is_tight(self):
        f = RadialFunction(RINF, tuple(float(n) for n in range(8)), role="psi")
        report = linear_bound_report(f)
        assert report.constant == 1.0
        assert report.holds
        assert all(m == 0 for m in report.margins)

    def test_report_computed_for_non_cnd_input(self):
        # (0,1,3) is not CND at q=3, but 3 <= c*2 = 4 still holds
        f = RadialFunction(R2, (F(0), F(1), F(3)), role="psi")
        report = linear_bound_report(f)
        assert report.margins == (0, 1, 1)
        assert report.holds

    def test_violation_detected(self):
        f = RadialFunction(RINF, (0.0, 1.0, 3.0), role="psi")
        report = linear_bound_report(f)
        assert not report.holds
        assert report.margins[2] == -1.0

    def test_rank_one_rejected(self):
        f = RadialFunction(R1, (0, 1, 4), role="psi")
        with pytest.raises(BadInput):
            linear_bound_report(f)

    def test_bound_on_synthesized_corpus(self):
        rng = np.random.RandomState(43)
        for r in (2, 3, 5):
            rank = Rank.finite(r)
            a = r / (r - 1)
            for _ in range(10):
                f = synthesize_psi(rank, random_measure(rng), 50)
                c = float(f.values[1]) * a
                for n, v in enumerate(f.values):
                    assert float(v) <= c * n + 1e-9
                assert linear_bound_report(f).holds


class TestOracleConcordance:
    def test_certified_not_is_confirmed_by_gram(self):
        # corpus: spherical values at eigenvalues outside [-1, 1], plus a
        # synthesized function perturbed past the |phi| <= phi(e) wall
        corpus = []
        for rank in (R2, R3):
            for s in (1.05, 1.2, -1.3):
                corpus.append(RadialFunction(rank, tuple(spherical_values(rank, s, 8))))
        base = synthesize_phi(R2, AtomicMeasure(((0.9, 1.0),)), 8)
        bumped = list(base.values)
        bumped[1] = 1.06
        corpus.append(RadialFunction(R2, tuple(bumped)))
        for f in corpus:
            assert decide_pd(f).status == "CertifiedNot"
            found = False
            for radius in range(1, f.depth // 2 + 1):
                if gram_pd(f.rank, radius, f).min_eig < -1e-8:
                    found = True
                    break
            assert found
