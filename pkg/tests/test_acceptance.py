"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
complete; on failure the line is printed before the assertion bubbles up.
"""

import math
from contextlib import contextmanager
from fractions import Fraction as F

import numpy as np
import pytest

from freerad.classify import decide_cnd, decide_pd, linear_bound_report, schoenberg
from freerad.moments import (
    AtomicMeasure,
    RadialFunction,
    atoms_from_moments,
    phi_to_moments,
    psi_to_moments,
    synthesize_phi,
    synthesize_psi,
)
from freerad.oracle import gram_cnd, gram_pd, mu_values, nonradial_cnd_example, radial_convolve
from freerad.spherical import (
    psi_one,
    psi_values,
    spherical_closed_form,
    spherical_values,
)
from freerad.words import Rank, parse_word

R1, R2, R3, R5 = (Rank.finite(r) for r in (1, 2, 3, 5))
RINF = Rank.infinite()
CORPUS_RANKS = (R1, R2, R3, RINF)


@contextmanager
def criterion(num, desc):
    try:
        yield
    except BaseException:
        print(f"[criterion {num:2d}] FAIL  {desc}")
        raise
    print(f"[criterion {num:2d}] PASS  {desc}")


def rank_for_q(q):
    return Rank.finite((q + 1) // 2)


def random_measure(rng, max_atoms=4, min_sep=0.0, min_weight=0.05):
    while True:
        k = rng.randint(1, max_atoms + 1)
        nodes = rng.uniform(-1, 1, size=k)
        if k > 1 and min_sep and np.min(np.diff(np.sort(nodes))) < min_sep:
            continue
        if len(set(nodes.tolist())) < k:
            continue
        weights = rng.uniform(min_weight, 1.0, size=k)
        return AtomicMeasure(tuple(zip(nodes.tolist(), weights.tolist())))


def test_01_formula_agreement():
    with criterion(1, "recurrence vs Chebyshev closed form"):
        for q in (1, 3, 5, 9):
            rank = rank_for_q(q)
            for i in range(41):
                s = -1.5 + 3.0 * i / 40
                table = spherical_values(rank, s, 50)
                for n in range(51):
                    got = spherical_closed_form(rank, n, s)
                    assert abs(got - table[n]) <= 1e-10 * max(1.0, abs(table[n]))
        for q in (1, 9, 25):
            rank = rank_for_q(q)
            for s in (F(-3, 2), F(-1), F(-1, 3), F(0), F(2, 5), F(1), F(3, 2)):
                table = spherical_values(rank, s, 30)
                for n in range(31):
                    assert spherical_closed_form(rank, n, s) == table[n]


def test_02_psi_one_closed_form():
    def derivative_recurrence(q, n):
        if n == 0:
            return F(0)
        prev, cur = F(0), F(1)
        for _ in range(n - 1):
            prev, cur = cur, F(q + 1, q) * (1 + cur) - F(1, q) * prev
        return cur

    with criterion(2, "psi_1 explicit form equals the derivative recurrence"):
        for q in (3, 5, 7, 9):
            rank = rank_for_q(q)
            for n in range(31):
                assert psi_one(rank, n) == derivative_recurrence(q, n)
        assert psi_one(R2, 2) == F(8, 3)
        assert psi_one(R2, 3) == F(41, 9)


def test_03_bochner_roundtrip():
    with criterion(3, "measure -> phi -> moments/atoms roundtrip"):
        rng = np.random.RandomState(101)
        for rank in CORPUS_RANKS:
            for _ in range(50):  # 200 measures over the four ranks
                measure = random_measure(rng)
                mass = float(measure.total_mass)
                f = synthesize_phi(rank, measure, 12)
                assert decide_pd(f).status == "ConsistentPD"
                got = phi_to_moments(f)
                expected = measure.power_moments(12)
                for a, b in zip(got, expected):
                    assert abs(a - b) <= 1e-9 * mass
        # atom recovery for well-separated measures
        rng = np.random.RandomState(103)
        for _ in range(20):
            measure = random_measure(rng, max_atoms=3, min_sep=0.2, min_weight=0.1)
            k = len(measure.atoms)
            moments = [float(v) for v in measure.power_moments(2 * k - 1)]
            got = sorted(atoms_from_moments(moments, k).atoms)
            for (s0, w0), (s1, w1) in zip(sorted(measure.atoms), got):
                assert abs(s0 - s1) <= 1e-6 and abs(w0 - w1) <= 1e-6


def test_04_levy_khinchin_roundtrip():
    with criterion(4, "measure -> psi -> nu-moments roundtrip, mass identity"):
        rng = np.random.RandomState(107)
        for rank in CORPUS_RANKS:
            for _ in range(50):
                measure = random_measure(rng)
                mass = float(measure.total_mass)
                f = synthesize_psi(rank, measure, 12)
                assert decide_cnd(f).status == "ConsistentCND"
                got = psi_to_moments(f)
                assert got[0] == f.values[1]  # nu mass identity, bitwise
                expected = measure.power_moments(11)
                for a, b in zip(got, expected):
                    assert abs(a - b) <= 1e-9 * mass


def test_05_oracle_concordance():
    with criterion(5, "Gram oracle agrees with the eigenvalue interval"):
        for rank in (R2, R3):
            for radius in (1, 2, 3):
                for i in range(21):
                    s = -1 + i / 10
                    f = RadialFunction(rank, tuple(spherical_values(rank, s, 2 * radius)))
                    report = gram_pd(rank, radius, f)
                    assert report.min_eig >= -1e-9 * report.dim
        for s in (1.05, -1.05, 1.5, -1.5):
            f = RadialFunction(R2, tuple(spherical_values(R2, s, 8)))
            assert any(
                gram_pd(R2, radius, f).verdict == "violated" for radius in (1, 2)
            )
            assert decide_pd(f).status == "CertifiedNot"
        singular = gram_pd(R2, 1, RadialFunction(R2, (1.0, 0.5, 0.0)))
        assert abs(singular.min_eig) <= 1e-12


def test_06_radial_algebra():
    with criterion(6, "sphere convolution recurrence and eigenfunction identity"):
        for rank in (R2, R3):
            q = rank.q
            for n in (1, 2, 3):
                got = radial_convolve(rank, n + 1, mu_values(rank, 1), mu_values(rank, n))
                expected = [F(0)] * (n + 2)
                for i, v in enumerate(mu_values(rank, n - 1)):
                    expected[i] += F(1, q + 1) * v
                for i, v in enumerate(mu_values(rank, n + 1)):
                    expected[i] += F(q, q + 1) * v
                assert got == expected
            for s in (0.3, -0.8):
                table = spherical_values(rank, s, 4)
                got = radial_convolve(rank, 5, mu_values(rank, 1), table)
                for n in range(4):
                    assert abs(got[n] - s * table[n]) <= 1e-12


def test_07_linear_bound():
    with criterion(7, "psi(n) <= psi(1) r/(r-1) n on the synthesized corpus"):
        rng = np.random.RandomState(109)
        for r in (2, 3, 5):
            rank = Rank.finite(r)
            a = r / (r - 1)
            for _ in range(15):
                f = synthesize_psi(rank, random_measure(rng), 50)
                c = float(f.values[1]) * a
                for n, v in enumerate(f.values):
                    assert float(v) <= c * n + 1e-9
                assert linear_bound_report(f).holds
        for n in range(51):
            assert psi_one(RINF, n) == n  # equality family at infinite rank


def test_08_domination():
    with criterion(8, "psi_s <= psi_1 on the eigenvalue interval"):
        for q in (1, 3, 5, 9):
            rank = rank_for_q(q)
            tops = [float(psi_one(rank, n)) for n in range(51)]
            for i in range(41):
                s = -1 + i / 20
                table = psi_values(rank, s, 50)
                for n in range(51):
                    assert table[n] <= tops[n] + 1e-10


def test_09_uniform_convergence():
    with criterion(9, "finite-rank spherical values approach s^n at rate 2(n-1)/(2r-1)"):
        for r in (2, 5, 20, 100):
            rank = Rank.finite(r)
            for i in range(41):
                s = -1 + i / 20
                table = spherical_values(rank, s, 10)
                for n in range(1, 11):
                    assert abs(table[n] - s**n) <= 2 * (n - 1) / (2 * r - 1)


def test_10_schoenberg_transform():
    with criterion(10, "exp(-t psi) lands in the consistent-PD cone"):
        rng = np.random.RandomState(113)
        for i in range(50):
            rank = CORPUS_RANKS[i % 4]
            f = synthesize_psi(rank, random_measure(rng), 10)
            for t in (0.1, 1.0, 10.0):
                assert decide_pd(schoenberg(f, t)).status == "ConsistentPD"
        haagerup = schoenberg(
            RadialFunction(RINF, (0.0, 1.0, 2.0, 3.0), role="psi"), math.log(2)
        )
        assert haagerup.values == (1.0, 0.5, 0.25, 0.125)


def test_11_nonradial_counterexample():
    with criterion(11, "squared homomorphism: CND kernel, no linear bound"):
        words = [parse_word(t) for t in ("e", "a1", "a2", "a3", "a4", "a5")]
        words += [parse_word("a1 a1"), parse_word("a1 a1 a1")]
        report = nonradial_cnd_example(words, max_power=10)
        assert report.kernel.verdict == "holds"
        assert report.kernel.dim == 8
        for n, value, length in report.bound_violations:
            assert value == n * n and length == n
        for c in (0.5, 1.0, 2.5, 5.0):
            for n, value, length in report.bound_violations:
                assert (value > c * length) == (n > c)
