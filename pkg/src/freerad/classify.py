"""Decision procedures for radial positive / conditionally negative
definiteness, the Schoenberg transform, and the linear growth bound.

Verdict names carry the truncation epistemics on purpose: a function can
be *certified not* representable from finitely many values, but finite
depth can never prove representability, so the positive outcomes read
"Consistent".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadInput, ConditionLoss
from .moments import (
    DEFAULT_TOL,
    MomentVerdict,
    RadialFunction,
    hausdorff_check,
    phi_to_moments,
    psi_to_moments,
)
from .scalars import Scalar, is_exact

LINEAR_BOUND_RTOL = 1e-10


@dataclass(frozen=True)
class Verdict:
    status: str  # "ConsistentPD" | "ConsistentCND" | "CertifiedNot"
    moment_verdict: MomentVerdict
    depth: int
    moments: tuple[Scalar, ...]


@dataclass(frozen=True)
class LinearBoundReport:
    """Report on psi(n) <= c n with c = psi(1) * a and the rank factor
    a = r/(r-1) (finite r >= 2) or a = 1 (infinite rank)."""

    constant: Scalar
    rank_factor: Scalar
    margins: tuple[Scalar, ...]  # c*n - psi(n) per n
    holds: bool


def _status_from(mv: MomentVerdict, consistent: str) -> str:
    if mv.status == "Indeterminate":
        raise ConditionLoss("eigenvalue computation did not converge")
    return "CertifiedNot" if mv.status == "Infeasible" else consistent


def decide_pd(f: RadialFunction, tol: float = DEFAULT_TOL) -> Verdict:
    """Is the radial function consistent with being positive definite?

    Normalizes values[0] to 1 (verdicts are invariant under positive
    scaling), inverts to candidate-measure moments and runs the truncated
    feasibility test.  CertifiedNot means no representing measure, hence
    not positive definite.
    """
    if not f.values[0] > 0:
        raise BadInput(
            f"a nonzero positive definite function has values[0] > 0, got {f.values[0]!r}"
        )
    head = f.values[0]
    scaled = RadialFunction(f.rank, tuple(v / head for v in f.values), role="phi")
    m = phi_to_moments(scaled)
    mv = hausdorff_check(m, tol)
    return Verdict(_status_from(mv, "ConsistentPD"), mv, f.depth, tuple(m))


def decide_cnd(f: RadialFunction, tol: float = DEFAULT_TOL) -> Verdict:
    """Is the radial function consistent with being conditionally negative
    definite?  Requires values[0] = 0; runs the nu-moment feasibility test."""
    if f.values[0] != 0:
        raise BadInput(f"need values[0] = 0, got {f.values[0]!r}")
    if all(v == 0 for v in f.values):
        mv = MomentVerdict("Feasible", None, {})
        return Verdict("ConsistentCND", mv, f.depth, (0,) * f.depth)
    m = psi_to_moments(f)
    mv = hausdorff_check(m, tol)
    return Verdict(_status_from(mv, "ConsistentCND"), mv, f.depth, tuple(m))


def schoenberg(f: RadialFunction, t: Scalar) -> RadialFunction:
    """exp(-t psi), positive definite whenever psi is CND and t > 0.

    Evaluated as exp(-t)**psi(n): the base is computed once, so exact
    binary cases (e.g. t = ln 2 on integer values) come out exact.
    """
    if not t > 0:
        raise BadInput(f"need t > 0, got {t!r}")
    if f.values[0] != 0:
        raise BadInput(f"need values[0] = 0, got {f.values[0]!r}")
    base = math.exp(-float(t))
    vals = tuple(base ** float(v) for v in f.values)
    return RadialFunction(f.rank, vals, role="phi")


def linear_bound_report(f: RadialFunction) -> LinearBoundReport:
    """Check psi(n) <= c n for c = psi(1) * a.

    The rank factor a is a free-group statement: r/(r-1) for finite
    r >= 2, 1 for infinite rank.  Rank 1 is rejected (on the integers
    psi_1(n) = n^2 admits no linear bound)."""
    if f.values[0] != 0:
        raise BadInput(f"need values[0] = 0, got {f.values[0]!r}")
    if len(f.values) < 2:
        raise BadInput("need values up to length 1 to set the constant")
    if f.rank.is_finite and f.rank.r == 1:
        raise BadInput("the linear bound does not apply at rank 1")
    exact = all(is_exact(v) for v in f.values)
    if f.rank.is_infinite:
        a: Scalar = 1 if exact else 1.0
    else:
        a = Fraction(f.rank.r, f.rank.r - 1)
        if not exact:
            a = float(a)
    c = f.values[1] * a
    margins = tuple(c * n - v for n, v in enumerate(f.values))
    slack = LINEAR_BOUND_RTOL * abs(c)
    holds = all(margin >= -slack * n for n, margin in enumerate(margins))
    return LinearBoundReport(c, a, margins, holds)
