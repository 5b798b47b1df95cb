"""Univariate polynomials and binary forms over a FieldCtx.

A polynomial is a list of Fel coefficients, low degree first. A binary form of
degree d is the same list read as sum c_k s^k t^(d-k); its root (1:0) has
multiplicity d minus the s-degree.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from sympy.polys.densearith import dup_div, dup_mul_ground, dup_rem
from sympy.polys.densebasic import dup_LC, dup_strip
from sympy.polys.euclidtools import dup_gcd, dup_resultant

from skewlines.algebra.field import Fel, FieldCtx
from skewlines.algebra.linalg import (
    determinant,
    from_domain_element,
    matrix_domain,
    to_domain_element,
)
from skewlines.errors import FieldDivisionError, ParameterRangeError

Poly1 = list[Fel]


def strip(f: Sequence[Fel]) -> Poly1:
    out = list(f)
    while out and out[-1].is_zero:
        out.pop()
    return out


def degree(f: Sequence[Fel]) -> int:
    """Degree of f; -1 for the zero polynomial."""
    return len(strip(f)) - 1


def evaluate(f: Sequence[Fel], x: Fel) -> Fel:
    acc = x.ctx.zero()
    for c in reversed(f):
        acc = acc * x + c
    return acc


def add(f: Sequence[Fel], g: Sequence[Fel], ctx: FieldCtx) -> Poly1:
    n = max(len(f), len(g))
    zero = ctx.zero()
    return strip(
        [(f[k] if k < len(f) else zero) + (g[k] if k < len(g) else zero) for k in range(n)]
    )


def scale(f: Sequence[Fel], c: Fel) -> Poly1:
    return strip([a * c for a in f])


def mul(f: Sequence[Fel], g: Sequence[Fel], ctx: FieldCtx) -> Poly1:
    if not f or not g:
        return []
    out = [ctx.zero() for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        if a.is_zero:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def _to_dup(f: Sequence[Fel]) -> list[Any]:
    """Dense sympy coefficients, high degree first."""
    return dup_strip([to_domain_element(c) for c in reversed(f)])


def _from_dup(ctx: FieldCtx, f: Sequence[Any]) -> Poly1:
    return [from_domain_element(ctx, c) for c in reversed(f)]


def _monic_dup(f: list[Any], K: Any) -> list[Any]:
    if not f:
        return []
    return dup_mul_ground(f, K.one / dup_LC(f, K), K)


def divmod_poly(f: Sequence[Fel], g: Sequence[Fel], ctx: FieldCtx) -> tuple[Poly1, Poly1]:
    g = strip(g)
    if not g:
        raise FieldDivisionError("polynomial division by zero")
    K = matrix_domain(ctx)
    # dup_div over a FiniteExtension needs a monic divisor.
    lead_inv = g[-1].inverse()
    quo, rem = dup_div(_to_dup(f), _monic_dup(_to_dup(g), K), K)
    return scale(_from_dup(ctx, quo), lead_inv), _from_dup(ctx, rem)


def monic(f: Sequence[Fel]) -> Poly1:
    f = strip(f)
    if not f:
        return []
    inv = f[-1].inverse()
    return [c * inv for c in f]


def gcd(f: Sequence[Fel], g: Sequence[Fel], ctx: FieldCtx) -> Poly1:
    """Monic gcd; gcd(0, 0) is the zero polynomial."""
    K = matrix_domain(ctx)
    a, b = _to_dup(f), _to_dup(g)
    if ctx.is_base:
        return monic(_from_dup(ctx, dup_gcd(a, b, K)))
    while b:
        b = _monic_dup(b, K)
        a, b = b, dup_rem(a, b, K)
    return monic(_from_dup(ctx, a))


# ── Binary forms ──


@dataclass(frozen=True)
class BinaryForm:
    """sum coeffs[k] s^k t^(deg - k)."""

    coeffs: tuple[Fel, ...]
    deg: int

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    @property
    def infinity_multiplicity(self) -> int:
        """Multiplicity of the root (s:t) = (1:0)."""
        return self.deg - degree(self.coeffs)

    def affine(self) -> Poly1:
        return strip(self.coeffs)

    def __call__(self, s: Fel, t: Fel) -> Fel:
        acc = s.ctx.zero()
        for k, c in enumerate(self.coeffs):
            acc = acc + c * s**k * t ** (self.deg - k)
        return acc


def quadratic_form_from_values(v10: Fel, v01: Fel, v11: Fel) -> BinaryForm:
    """The binary quadratic A s^2 + B s t + C t^2 with the given values at (1:0), (0:1), (1:1)."""
    a, c = v10, v01
    b = v11 - a - c
    return BinaryForm((c, b, a), 2)


def form_gcd(forms: Sequence[BinaryForm], ctx: FieldCtx) -> BinaryForm | None:
    """Common factor of nonzero binary forms; None when every form vanishes."""
    live = [f for f in forms if not f.is_zero]
    if not live:
        return None
    g: Poly1 = live[0].affine()
    for f in live[1:]:
        g = gcd(g, f.affine(), ctx)
    g = monic(g)
    inf = min(f.infinity_multiplicity for f in live)
    return BinaryForm(tuple(g), degree(g) + inf)


def form_product(forms: Sequence[BinaryForm], ctx: FieldCtx) -> BinaryForm:
    out: Poly1 = [ctx.one()]
    total = 0
    for f in forms:
        out = mul(out, list(f.coeffs), ctx)
        total += f.deg
    padded = out + [ctx.zero()] * (total + 1 - len(out))
    return BinaryForm(tuple(padded[: total + 1]), total)


def sylvester_matrix(f: BinaryForm, g: BinaryForm) -> list[list[Fel]]:
    """Sylvester matrix of two binary forms taken at their declared degrees."""
    m, n = f.deg, g.deg
    if m < 1 or n < 1:
        raise ParameterRangeError("resultant needs forms of positive degree")
    ctx = f.coeffs[0].ctx
    size = m + n
    high_f = list(reversed(_padded(f)))
    high_g = list(reversed(_padded(g)))
    rows = []
    for i in range(n):
        rows.append([ctx.zero()] * i + high_f + [ctx.zero()] * (size - m - 1 - i))
    for i in range(m):
        rows.append([ctx.zero()] * i + high_g + [ctx.zero()] * (size - n - 1 - i))
    return rows


def resultant(f: BinaryForm, g: BinaryForm) -> Fel:
    """Zero exactly when f and g share a root in P^1 over the algebraic closure.

    Taken at the declared degrees: Res(f, g) = a^n prod g(alpha) for f of degree m
    with leading coefficient a and roots alpha, g of degree n.
    """
    if f.deg < 1 or g.deg < 1:
        raise ParameterRangeError("resultant needs forms of positive degree")
    ctx = f.coeffs[0].ctx
    if not ctx.is_base:
        return determinant(sylvester_matrix(f, g))
    drop_f, drop_g = f.infinity_multiplicity, g.infinity_multiplicity
    if f.is_zero or g.is_zero or (drop_f and drop_g):
        return ctx.zero()
    fa, ga = f.affine(), g.affine()
    res = _affine_resultant(fa, ga, ctx)
    if drop_f:
        res = res * ga[-1] ** drop_f
        if drop_f * g.deg % 2:
            res = -res
    if drop_g:
        res = res * fa[-1] ** drop_g
    return res


def _affine_resultant(f: Poly1, g: Poly1, ctx: FieldCtx) -> Fel:
    """Res(f, g) at the true degrees; the higher degree goes first into sympy."""
    df, dg = degree(f), degree(g)
    if df >= dg:
        return from_domain_element(ctx, dup_resultant(_to_dup(f), _to_dup(g), ctx.domain))
    res = from_domain_element(ctx, dup_resultant(_to_dup(g), _to_dup(f), ctx.domain))
    return -res if df * dg % 2 else res


def _padded(f: BinaryForm) -> list[Fel]:
    ctx = f.coeffs[0].ctx
    coeffs = list(f.coeffs)
    return coeffs + [ctx.zero()] * (f.deg + 1 - len(coeffs))
