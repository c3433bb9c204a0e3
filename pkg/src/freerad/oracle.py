"""Brute-force ground truth on finite Cayley balls.

Everything here avoids the moment machinery on purpose: Gram matrices are
assembled from literal word products over an enumerated ball and tested
by dense symmetric eigendecomposition, and the radial-algebra convolution
is the literal group-algebra sum.  These are the independent cross-checks
for the analytic pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import (
    BadInput,
    InsufficientDepth,
    InsufficientRadius,
    InternalDisagreement,
    NotRadial,
)
from .moments import DEFAULT_TOL, RadialFunction
from .scalars import Scalar, as_float, is_exact
from .words import Rank, Word, ball, multiply, sphere_size

# r=2 at radius 4 is 485 words; the dense eigensolver stays comfortable
# there, so larger balls are refused rather than allowed to crawl.
DEFAULT_GRAM_CAP = 600


@dataclass(frozen=True)
class GramReport:
    radius: int
    dim: int
    min_eig: float
    verdict: str  # "holds" | "violated"
    witness: Optional[tuple[float, ...]] = None
    projected_max_eig: Optional[float] = None


@dataclass(frozen=True)
class NonradialReport:
    """Kernel PSD report for the squared-homomorphism example, plus the
    growth table showing why no linear bound in |x| can hold."""

    kernel: GramReport
    bound_violations: tuple[tuple[int, int, int], ...]  # (n, value, |b_1^n|)


@lru_cache(maxsize=None)
def _ball_geometry(rank: Rank, radius: int, cap: int):
    words = ball(rank, radius, cap=cap)
    dim = len(words)
    inverses = [w.inverse() for w in words]
    dist = np.empty((dim, dim), dtype=np.int32)
    for k, inv in enumerate(inverses):
        for j, w in enumerate(words):
            dist[j, k] = len(multiply(inv, w))
    lengths = np.array([len(w) for w in words], dtype=np.int32)
    return words, dist, lengths


def _values_array(f: RadialFunction, radius: int, needed: int) -> np.ndarray:
    if len(f.values) < needed:
        raise InsufficientDepth(
            f"radius {radius} needs values up to length {needed - 1}, "
            f"got {len(f.values) - 1}"
        )
    return np.array([as_float(v) for v in f.values])


def gram_pd(
    rank: Rank,
    radius: int,
    f: RadialFunction,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_GRAM_CAP,
) -> GramReport:
    """Positive definiteness test of M[j,k] = f(|x_k^-1 x_j|) over the ball."""
    vals = _values_array(f, radius, 2 * radius + 1)
    _, dist, _ = _ball_geometry(rank, radius, cap)
    mat = vals[dist]
    scale = mat.shape[0] * max(1.0, float(np.abs(mat).max()))
    eigvals, eigvecs = np.linalg.eigh(mat)
    min_eig = float(eigvals[0])
    violated = min_eig < -tol * scale
    witness = tuple(eigvecs[:, 0].tolist()) if violated else None
    return GramReport(radius, mat.shape[0], min_eig, "violated" if violated else "holds", witness)


def gram_cnd(
    rank: Rank,
    radius: int,
    f: RadialFunction,
    tol: float = DEFAULT_TOL,
    cap: int = DEFAULT_GRAM_CAP,
) -> GramReport:
    """Conditional negative definiteness over the ball, tested two ways.

    (a) the Gram form restricted to zero-sum coefficients (basis e_i - e_0)
    must be negative semidefinite; (b) the Schoenberg kernel
    K[j,k] = f(|x_j|) + f(|x_k|) - f(|x_k^-1 x_j|) must be PSD.  The kernel
    form is primary; disagreement raises InternalDisagreement.
    """
    if f.values[0] != 0:
        raise BadInput(f"need values[0] = 0, got {f.values[0]!r}")
    vals = _values_array(f, radius, 2 * radius + 1)
    _, dist, lengths = _ball_geometry(rank, radius, cap)
    mat = vals[dist]
    border = vals[lengths]
    kernel = border[:, None] + border[None, :] - mat
    scale = mat.shape[0] * max(1.0, float(np.abs(kernel).max()))
    k_eigvals, k_eigvecs = np.linalg.eigh(kernel)
    min_eig = float(k_eigvals[0])
    kernel_ok = min_eig >= -tol * scale
    # projected form: rows/cols j >= 1 against the base point x_0 = e
    if mat.shape[0] == 1:
        p_eigvecs = np.zeros((0, 0))
        max_proj = 0.0
    else:
        proj = mat[1:, 1:] - mat[1:, :1] - mat[:1, 1:] + mat[0, 0]
        p_eigvals, p_eigvecs = np.linalg.eigh(proj)
        max_proj = float(p_eigvals[-1])
    proj_ok = max_proj <= tol * scale
    if kernel_ok != proj_ok:
        raise InternalDisagreement(
            f"kernel min eig {min_eig} vs projected max eig {max_proj} "
            f"disagree at tol {tol}"
        )
    witness = None
    if not kernel_ok:
        v = p_eigvecs[:, -1]
        witness = tuple([-float(v.sum())] + v.tolist())  # zero-sum certificate
    return GramReport(
        radius,
        mat.shape[0],
        min_eig,
        "holds" if kernel_ok else "violated",
        witness,
        projected_max_eig=max_proj,
    )


def mu_values(rank: Rank, n: int, depth: Optional[int] = None) -> list[Scalar]:
    """Value table of mu_n, the normalized indicator of the length-n sphere."""
    if depth is None:
        depth = n
    if depth < n:
        raise BadInput(f"depth {depth} too small to hold mu_{n}")
    out: list[Scalar] = [Fraction(0)] * (depth + 1)
    out[n] = Fraction(1, sphere_size(rank, n))
    return out


def _support_top(values: Sequence[Scalar]) -> int:
    top = -1
    for i, v in enumerate(values):
        if v != 0:
            top = i
    return top


def radial_convolve(
    rank: Rank,
    radius: int,
    f_values: Sequence[Scalar],
    g_values: Sequence[Scalar],
    tol: float = DEFAULT_TOL,
) -> list[Scalar]:
    """Literal group-algebra convolution of two radial value tables.

    Sums f(y) g(y^-1 x) over the enumerated ball and returns the result
    as a value table on word lengths 0..(supp f + supp g).  The result of
    convolving radial functions is radial; a failure of that invariant
    beyond tol raises NotRadial (bug signal).
    """
    lf = _support_top(f_values)
    lg = _support_top(g_values)
    if lf < 0 or lg < 0:
        return [0]
    if lf + lg > radius:
        raise InsufficientRadius(
            f"supports {lf} + {lg} exceed radius {radius}; enlarge the ball"
        )
    exact = all(is_exact(v) for v in f_values) and all(is_exact(v) for v in g_values)
    fv = list(f_values) if exact else [as_float(v) for v in f_values]
    gv = list(g_values) if exact else [as_float(v) for v in g_values]
    support = ball(rank, lf)
    table: list[Scalar] = []
    for x in ball(rank, lf + lg):
        acc: Scalar = Fraction(0) if exact else 0.0
        for y in support:
            ly = len(y)
            if fv[ly] == 0:
                continue
            lyx = len(multiply(y.inverse(), x))
            if lyx <= lg:
                acc += fv[ly] * gv[lyx]
        n = len(x)
        if n == len(table):
            table.append(acc)
        else:
            ref = table[n]
            scale = max(1, abs(ref), abs(acc))
            if abs(acc - ref) > tol * scale:
                raise NotRadial(
                    f"convolution value {acc} at length {n} differs from {ref}"
                )
    return table


def generator_weight(word: Word) -> int:
    """The homomorphism to the integers sending the k-th generator to k."""
    return sum(l.gen * l.sign for l in word.letters)


def nonradial_cnd_example(
    words: Sequence[Word],
    tol: float = DEFAULT_TOL,
    max_power: int = 8,
) -> NonradialReport:
    """The squared weight homomorphism: CND but with quadratic growth.

    Evaluates (x -> weight(x)^2) as a Schoenberg kernel over the given
    words (expected PSD) and tabulates its values on powers of the first
    generator, where the value n^2 outgrows every linear bound c*n."""
    if not words:
        raise BadInput("need at least one word")
    dim = len(words)
    rho = [generator_weight(w) for w in words]
    mat = np.empty((dim, dim))
    for k, xk in enumerate(words):
        inv = xk.inverse()
        for j, xj in enumerate(words):
            mat[j, k] = generator_weight(multiply(inv, xj)) ** 2
    border = np.array([r * r for r in rho], dtype=float)
    kernel = border[:, None] + border[None, :] - mat
    scale = dim * max(1.0, float(np.abs(kernel).max()))
    eigvals = np.linalg.eigvalsh(kernel)
    min_eig = float(eigvals[0])
    verdict = "holds" if min_eig >= -tol * scale else "violated"
    radius = max(len(w) for w in words)
    report = GramReport(radius, dim, min_eig, verdict)
    violations = tuple((n, n * n, n) for n in range(1, max_power + 1))
    return NonradialReport(report, violations)
