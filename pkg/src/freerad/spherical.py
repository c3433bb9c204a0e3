"""Chebyshev polynomials and spherical functions on free groups.

The spherical function with eigenvalue s on the rank-r free group is the
radial eigenfunction of the neighbor-averaging operator, normalized to 1
at the identity.  Its value sequence obeys

    phi(0) = 1,  phi(1) = s,  phi(n+1) = (q+1)/q * s * phi(n) - 1/q * phi(n-1)

with q = 2r - 1; for infinite rank the sequence is simply s^n.  The same
sequence has a closed form in Chebyshev polynomials, evaluated here for
cross-validation.  The companion family psi_s(n) = (1 - phi_s(n))/(1 - s)
extends to s = 1 by the explicit formula of ``psi_one``.

All routines are pure and accept floats or exact rationals; exact inputs
produce exact outputs wherever the formula is rational.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import BadInput, ExactnessError, NonzeroRemainder
from .scalars import Scalar, as_float, coerce, is_exact, sqrt_exact
from .words import Rank

PolyCoeffs = tuple[Fraction, ...]


def chebyshev(kind: str, n: int, x: Scalar) -> Scalar:
    """Evaluate T_n(x) (kind "T") or U_n(x) (kind "U") by the recurrence."""
    if kind not in ("T", "U"):
        raise BadInput(f"kind must be 'T' or 'U', got {kind!r}")
    if n < 0:
        raise BadInput(f"degree must be >= 0, got {n}")
    x = coerce(x)
    one = Fraction(1) if is_exact(x) else 1.0
    if n == 0:
        return one
    prev = one
    cur = x if kind == "T" else 2 * x
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def spherical_value(rank: Rank, s: Scalar, n: int) -> Scalar:
    """phi_s(n), the spherical function value on words of length n."""
    return spherical_values(rank, s, n)[n]


def spherical_values(rank: Rank, s: Scalar, depth: int) -> list[Scalar]:
    """The table [phi_s(0), ..., phi_s(depth)] by the recurrence."""
    if depth < 0:
        raise BadInput(f"depth must be >= 0, got {depth}")
    s = coerce(s)
    exact = is_exact(s)
    one = Fraction(1) if exact else 1.0
    out = [one]
    if depth == 0:
        return out
    if rank.is_infinite:
        cur = one
        for _ in range(depth):
            cur = cur * s
            out.append(cur)
        return out
    q = rank.q
    a = Fraction(q + 1, q) if exact else (q + 1) / q
    b = Fraction(1, q) if exact else 1 / q
    prev, cur = one, s
    out.append(cur)
    for _ in range(depth - 1):
        prev, cur = cur, a * s * cur - b * prev
        out.append(cur)
    return out


def spherical_closed_form(rank: Rank, n: int, s: Scalar) -> Scalar:
    """phi_s(n) via the Chebyshev closed form

        [ 2/(q+1) T_n(x) + (q-1)/(q+1) U_n(x) ] q^(-n/2),  x = (q+1)/(2 sqrt(q)) s.

    Exact inputs require q to be a perfect square (sqrt(q) rational);
    otherwise ExactnessError is raised.
    """
    if not rank.is_finite:
        raise BadInput("closed form requires a finite rank")
    if n < 0:
        raise BadInput(f"degree must be >= 0, got {n}")
    q = rank.q
    s = coerce(s)
    if is_exact(s):
        sq = sqrt_exact(Fraction(q))
        c_t = Fraction(2, q + 1)
        c_u = Fraction(q - 1, q + 1)
        x = Fraction(q + 1, 2) / sq * s
        scale = Fraction(1) / sq**n
    else:
        sq = math.sqrt(q)
        c_t = 2 / (q + 1)
        c_u = (q - 1) / (q + 1)
        x = (q + 1) / (2 * sq) * s
        scale = sq ** (-n)
    return (c_t * chebyshev("T", n, x) + c_u * chebyshev("U", n, x)) * scale


@lru_cache(maxsize=None)
def _coeff_table(q: int, n: int) -> tuple[PolyCoeffs, ...]:
    rows: list[PolyCoeffs] = [(Fraction(1),), (Fraction(0), Fraction(1))]
    a = Fraction(q + 1, q)
    b = Fraction(1, q)
    while len(rows) <= n:
        pn, pm = rows[-1], rows[-2]
        shifted = (Fraction(0),) + pn
        new = [a * c for c in shifted]
        for i, c in enumerate(pm):
            new[i] -= b * c
        rows.append(tuple(new))
    return tuple(rows[: n + 1])


def spherical_coeffs(rank: Rank, n: int) -> PolyCoeffs:
    """Monomial coefficients (c_0, ..., c_n) of the degree-n spherical
    polynomial; always exact rationals."""
    if not rank.is_finite:
        raise BadInput("coefficients require a finite rank")
    if n < 0:
        raise BadInput(f"degree must be >= 0, got {n}")
    return _coeff_table(rank.q, n)[n]


def _basis_coeffs(rank: Rank, n: int) -> PolyCoeffs:
    # P_n for finite rank, the monomial s^n for infinite rank.
    if rank.is_finite:
        return spherical_coeffs(rank, n)
    return tuple(Fraction(0) for _ in range(n)) + (Fraction(1),)


def psi_coeffs(rank: Rank, n: int) -> PolyCoeffs:
    """Coefficients of Q_n(s) = (1 - phi-basis_n(s)) / (1 - s), degree n-1.

    Computed by synthetic division; the remainder equals 1 - P_n(1) and
    must vanish exactly, otherwise NonzeroRemainder is raised.
    """
    if n < 1:
        raise BadInput(f"psi coefficients need degree >= 1, got {n}")
    p = _basis_coeffs(rank, n)
    a = [Fraction(1) - p[0]] + [-c for c in p[1:]]
    out = [Fraction(0)] * n
    out[n - 1] = -a[n]
    for k in range(n - 1, 0, -1):
        out[k - 1] = out[k] - a[k]
    remainder = a[0] - out[0]
    if remainder != 0:
        raise NonzeroRemainder(
            f"dividing 1 - P_{n} by 1 - s left remainder {remainder}"
        )
    return tuple(out)


def psi_one(rank: Rank, n: int) -> Scalar:
    """psi_1(n) = lim_{s->1} (1 - phi_s(n))/(1 - s); always exact.

    Finite rank with q >= 3 uses the explicit form
    n (q+1)/(q-1) - 2q(1 - q^-n)/(q-1)^2; rank 1 gives n^2 and infinite
    rank gives n.
    """
    if n < 0:
        raise BadInput(f"index must be >= 0, got {n}")
    if rank.is_infinite:
        return n
    if rank.r == 1:
        return n * n
    q = rank.q
    return n * Fraction(q + 1, q - 1) - Fraction(2 * q, (q - 1) ** 2) * (
        1 - Fraction(1, q**n)
    )


def psi_value(rank: Rank, s: Scalar, n: int) -> Scalar:
    """psi_s(n) = (1 - phi_s(n))/(1 - s), with the s = 1 limit built in."""
    return psi_values(rank, s, n)[n]


def psi_values(rank: Rank, s: Scalar, depth: int) -> list[Scalar]:
    """The table [psi_s(0), ..., psi_s(depth)]."""
    if depth < 0:
        raise BadInput(f"depth must be >= 0, got {depth}")
    s = coerce(s)
    exact = is_exact(s)
    if s == 1:
        vals = [psi_one(rank, n) for n in range(depth + 1)]
        return vals if exact else [float(v) for v in vals]
    one = Fraction(1) if exact else 1.0
    return [(one - phi) / (one - s) for phi in spherical_values(rank, s, depth)]


def s_from_z(rank: Rank, z: Scalar) -> Scalar:
    """Eigenvalue from the classical parameter: s = q/(q+1) (q^-z + q^(z-1)).

    Symmetric under z -> 1 - z.  Exact inputs require integer z (otherwise
    q^z is irrational); q = 1 gives s = 1 for every z.
    """
    if not rank.is_finite:
        raise BadInput("the z parametrization requires a finite rank")
    q = rank.q
    if is_exact(z):
        z = Fraction(z)
        if z.denominator != 1:
            raise ExactnessError(f"q**{z} is irrational for non-integer z")
        zi = int(z)
        return Fraction(q, q + 1) * (Fraction(q) ** (-zi) + Fraction(q) ** (zi - 1))
    z = as_float(z)
    return q / (q + 1) * (q ** (-z) + q ** (z - 1))
