"""Cyclotomic polynomials, roots of unity and multiplicative orders."""

from __future__ import annotations

import logging
from functools import lru_cache

from sympy import Poly, Symbol, divisors, factor_list, n_order, totient
from sympy.polys.densearith import dup_quo
from sympy.polys.domains import ZZ

from skewlines.algebra.field import Fel, FieldCtx, FieldKind, finite_order
from skewlines.config import get_settings
from skewlines.errors import (
    CharacteristicError,
    FieldDivisionError,
    ParameterRangeError,
    RootOfUnityUnavailableError,
)

logger = logging.getLogger(__name__)

_X = Symbol("x")


@lru_cache(maxsize=512)
def cyclotomic_modulus(m: int) -> tuple[int, ...]:
    """Phi_m over ZZ, low to high, by exact division of x^m - 1 by Phi_d for d | m, d < m."""
    if m < 1:
        raise ParameterRangeError(f"cyclotomic index must be positive, got {m}")
    poly = [ZZ(1)] + [ZZ(0)] * (m - 1) + [ZZ(-1)]
    for d in divisors(m)[:-1]:
        poly = dup_quo(poly, [ZZ(c) for c in reversed(cyclotomic_modulus(d))], ZZ)
    return tuple(int(c) for c in reversed(poly))


def cyclotomic_field(m: int) -> FieldCtx:
    """QQ(zeta_m) as QQ[x]/(Phi_m), tagged so x is a primitive m-th root of unity."""
    if m <= 2:
        raise ParameterRangeError(f"QQ(zeta_{m}) is QQ itself")
    return _cyclotomic_field(m)


@lru_cache(maxsize=64)
def _cyclotomic_field(m: int) -> FieldCtx:
    # Phi_m is irreducible over QQ, no check needed.
    return FieldCtx.extension(
        FieldCtx.rationals(), list(cyclotomic_modulus(m)), cyclotomic_index=m, check=False
    )


def primitive_root_of_unity(m: int, ctx: FieldCtx) -> Fel:
    """An element of multiplicative order exactly m, in ctx or a field built from it.

    Over QQ the result lives in QQ(zeta_m). Over a finite field the result lives in ctx
    when m | q - 1, otherwise in the smallest extension GF(q^k) with m | q^k - 1.
    """
    if m < 1:
        raise ParameterRangeError(f"root of unity order must be positive, got {m}")
    if m == 1:
        return ctx.one()
    p = ctx.characteristic
    if p and m % p == 0:
        raise CharacteristicError(f"characteristic {p} divides {m}: no primitive {m}-th root")
    if p == 0:
        return _char0_root(m, ctx)
    q = ctx.order
    assert q is not None
    if (q - 1) % m == 0:
        return _scan_root(m, ctx)
    k = int(n_order(q, m))
    if ctx.is_base:
        big = _cyclotomic_factor_field(m, p, k)
        logger.info("Built %r to hold a primitive %d-th root of unity", big, m)
        return big.gen()
    big, _embed = ctx.extend_degree(k)
    logger.info("Extended %r to %r for a primitive %d-th root of unity", ctx, big, m)
    return _scan_root(m, big)


def _char0_root(m: int, ctx: FieldCtx) -> Fel:
    if m == 2:
        return -ctx.one()
    if ctx.kind is FieldKind.RATIONALS:
        return cyclotomic_field(m).gen()
    n = ctx.cyclotomic_index
    if n is None:
        raise RootOfUnityUnavailableError(f"{ctx!r} carries no known root of unity")
    big_n = n if n % 2 == 0 else 2 * n
    zeta = ctx.gen() if n % 2 == 0 else -ctx.gen()
    if big_n % m:
        raise RootOfUnityUnavailableError(f"{ctx!r} holds no primitive {m}-th root of unity")
    return zeta ** (big_n // m)


def _scan_root(m: int, ctx: FieldCtx) -> Fel:
    q = ctx.order
    assert q is not None
    cap = get_settings().field_scan_cap
    exponent = (q - 1) // m
    for n in range(1, min(q, cap)):
        cand = ctx.element_at(n) ** exponent
        if finite_order(cand) == m:
            return cand
    raise RootOfUnityUnavailableError(f"no primitive {m}-th root found in {ctx!r} within cap")


@lru_cache(maxsize=64)
def _cyclotomic_factor_field(m: int, p: int, k: int) -> FieldCtx:
    phi = Poly(list(reversed(cyclotomic_modulus(m))), _X, modulus=p)
    _, factors = factor_list(phi.as_expr(), _X, modulus=p)
    for factor, _mult in factors:
        fp = Poly(factor, _X, modulus=p)
        if fp.degree() == k:
            coeffs = [int(c) % p for c in reversed(fp.all_coeffs())]
            return FieldCtx.extension(FieldCtx.prime_field(p), coeffs, check=False)
    raise RootOfUnityUnavailableError(f"Phi_{m} has no degree {k} factor mod {p}")


def multiplicative_order(a: Fel, cap: int | None = None) -> int | None:
    """Least n with a^n = 1; None when a is not a root of unity or n exceeds ``cap``.

    Finite fields always give the exact order.
    """
    if a.is_zero:
        raise FieldDivisionError("zero has no multiplicative order")
    if a.ctx.is_finite:
        return finite_order(a)
    n = char0_root_order(a)
    if n is None or (cap is not None and n > cap):
        return None
    return n


def char0_root_order(a: Fel) -> int | None:
    """Exact order of a root of unity in characteristic 0, None if a is not one."""
    degree = a.ctx.degree
    for n in char0_order_candidates(degree):
        if (a**n).is_one:
            return n
    return None


def is_root_of_unity(a: Fel) -> bool:
    if a.is_zero:
        return False
    if a.ctx.is_finite:
        return True
    return char0_root_order(a) is not None


@lru_cache(maxsize=64)
def char0_order_candidates(degree: int) -> tuple[int, ...]:
    """All n with phi(n) | degree; phi(n) >= sqrt(n/2) bounds n by 2 * degree^2."""
    bound = 2 * degree * degree + 2
    return tuple(n for n in range(1, bound + 1) if degree % int(totient(n)) == 0)
