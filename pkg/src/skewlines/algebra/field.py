"""Exact field contexts and their elements.

Three kinds of context are supported: the rationals, prime fields GF(p), and
single-step quotient extensions K[x]/(f) over one of those. Base-field elements
are sympy domain elements (``QQ`` or ``GF(p)``); extension elements are stripped
dense coefficient lists over the base domain, reduced modulo the monic modulus.
Representations are canonical, so equality and hashing are exact.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterator, Sequence
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import CRootOf, Poly, Symbol, factorint, isprime
from sympy.ntheory import integer_nthroot
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_rem, dup_sub
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import GF, QQ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from skewlines.config import get_settings
from skewlines.errors import (
    FieldDivisionError,
    FieldMismatchError,
    IrreducibilityError,
    ParameterRangeError,
    RootOfUnityUnavailableError,
)

logger = logging.getLogger(__name__)

_X = Symbol("x")


class FieldKind(StrEnum):
    RATIONALS = "Q"
    PRIME = "GF"
    EXTENSION = "ext"


class FieldCtx:
    """An exact field: QQ, GF(p) or a quotient extension of one of them.

    Contexts compare equal when they describe the same field with the same
    modulus; the optional cyclotomic tag records that the class of x is a
    primitive root of unity of the tagged order.
    """

    __slots__ = (
        "kind",
        "characteristic",
        "base",
        "modulus",
        "degree",
        "domain",
        "cyclotomic_index",
        "unchecked",
        "_mod",
        "_key",
    )

    kind: FieldKind
    characteristic: int
    base: FieldCtx | None
    modulus: tuple[Any, ...]
    degree: int
    domain: Any
    cyclotomic_index: int | None
    unchecked: bool
    _mod: list[Any]
    _key: tuple[Any, ...]

    def __init__(self) -> None:
        raise TypeError("use FieldCtx.rationals(), prime_field() or extension()")

    # ── Constructors ──

    @classmethod
    def _new(cls) -> FieldCtx:
        return object.__new__(cls)

    @classmethod
    def rationals(cls) -> FieldCtx:
        return _rationals()

    @classmethod
    def prime_field(cls, p: int) -> FieldCtx:
        if p < 2 or not isprime(p):
            raise ParameterRangeError(f"GF(p) needs a prime p, got {p}")
        return _prime_field(p)

    @classmethod
    def galois(cls, q: int) -> FieldCtx:
        """GF(q) for a prime power q, from the first irreducible of its degree."""
        support = factorint(q) if q > 1 else {}
        if len(support) != 1:
            raise ParameterRangeError(f"GF(q) needs a prime power q, got {q}")
        [(p, k)] = support.items()
        if k == 1:
            return cls.prime_field(p)
        return cls.extension(cls.prime_field(p), _first_irreducible(p, k), check=False)

    @classmethod
    def extension(
        cls,
        base: FieldCtx,
        modulus: Sequence[Fel | int | Fraction],
        *,
        cyclotomic_index: int | None = None,
        check: bool = True,
    ) -> FieldCtx:
        """Build base[x]/(modulus); ``modulus`` lists coefficients low to high."""
        if base.kind is FieldKind.EXTENSION:
            raise ParameterRangeError("extension towers are not supported; flatten the modulus")
        coeffs = [base.coerce(c).rep for c in modulus]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if len(coeffs) < 3:
            raise ParameterRangeError("extension modulus must have degree at least 2")
        K = base.domain
        lead = coeffs[-1]
        coeffs = [K.quo(c, lead) for c in coeffs]
        ctx = cls._new()
        ctx.kind = FieldKind.EXTENSION
        ctx.characteristic = base.characteristic
        ctx.base = base
        ctx.modulus = tuple(coeffs)
        ctx.degree = len(coeffs) - 1
        ctx.domain = K
        ctx.cyclotomic_index = cyclotomic_index
        ctx.unchecked = not check
        ctx._mod = list(reversed(coeffs))
        ctx._key = ("ext", base._key, tuple(base._elem_key(c) for c in coeffs))
        if check and not _is_irreducible(ctx):
            raise IrreducibilityError(f"modulus {ctx.modulus_str()} is reducible over {base}")
        return ctx

    # ── Basic properties ──

    @property
    def is_base(self) -> bool:
        return self.kind is not FieldKind.EXTENSION

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0

    @property
    def order(self) -> int | None:
        """Number of elements, or None for characteristic 0."""
        if not self.is_finite:
            return None
        return int(self.characteristic**self.degree)

    @property
    def prime_subfield(self) -> FieldCtx:
        return self if self.base is None else self.base

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "QQ"
        if self.kind is FieldKind.PRIME:
            return f"GF({self.characteristic})"
        return f"{self.base!r}[x]/({self.modulus_str()})"

    def modulus_str(self) -> str:
        if self.base is None:
            return ""
        terms = [_term(self.base._elem_str(c), k) for k, c in enumerate(self.modulus) if c]
        return " + ".join(reversed(terms))

    # ── Elements ──

    def zero(self) -> Fel:
        return Fel(self, self._from_base(self.domain.zero))

    def one(self) -> Fel:
        return Fel(self, self._from_base(self.domain.one))

    def from_int(self, n: int) -> Fel:
        return Fel(self, self._from_base(self.domain(int(n))))

    def from_fraction(self, num: int, den: int = 1) -> Fel:
        if den == 0:
            raise FieldDivisionError("zero denominator")
        K = self.domain
        d = K(int(den))
        if not d:
            raise FieldDivisionError(f"denominator {den} vanishes in {self!r}")
        return Fel(self, self._from_base(K.quo(K(int(num)), d)))

    def gen(self) -> Fel:
        """The class of x in an extension."""
        if self.is_base:
            raise ParameterRangeError(f"{self!r} has no generator")
        return self.from_coeffs([0, 1])

    def from_coeffs(self, coeffs: Sequence[Any]) -> Fel:
        """Element from base coefficients, low to high (reduced modulo the modulus)."""
        base = self.prime_subfield
        reps = [base.coerce(c).rep for c in coeffs]
        if self.is_base:
            if len(reps) != 1:
                raise ParameterRangeError("base field elements have a single coefficient")
            return Fel(self, reps[0])
        dup = dup_strip(list(reversed(reps)))
        return Fel(self, tuple(dup_rem(dup, self._mod, self.domain)))

    def coerce(self, value: Any) -> Fel:
        """Interpret an int, Fraction, "n/d" string or Fel of this context."""
        if isinstance(value, Fel):
            if value.ctx != self:
                raise FieldMismatchError(f"element of {value.ctx!r} used in {self!r}")
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            return self.from_fraction(value.numerator, value.denominator)
        if isinstance(value, str):
            frac = Fraction(value.strip())
            return self.from_fraction(frac.numerator, frac.denominator)
        return Fel(self, self._from_base(self.domain.convert(value)))

    __call__ = coerce

    def _from_base(self, c: Any) -> Any:
        if self.is_base:
            return c
        return (c,) if c else ()

    def _elem_key(self, c: Any) -> Any:
        """Hashable key of a base-domain element."""
        if self.kind is FieldKind.RATIONALS:
            return (int(QQ.numer(c)), int(QQ.denom(c)))
        return int(c) % self.characteristic

    def _elem_str(self, c: Any) -> str:
        if self.kind is FieldKind.RATIONALS:
            num, den = int(QQ.numer(c)), int(QQ.denom(c))
            return str(num) if den == 1 else f"{num}/{den}"
        return str(int(c) % self.characteristic)

    # ── Enumeration and randomness ──

    def element_at(self, index: int) -> Fel:
        """The index-th element in canonical order (finite fields only)."""
        q = self._require_finite()
        if not 0 <= index < q:
            raise ParameterRangeError(f"index {index} outside field of order {q}")
        p = self.characteristic
        digits = []
        for _ in range(self.degree):
            index, r = divmod(index, p)
            digits.append(r)
        return self.from_coeffs(digits) if not self.is_base else self.from_int(digits[0])

    def elements(self) -> Iterator[Fel]:
        """All elements in canonical order: base-p digits of the index, low coefficient first."""
        q = self._require_finite()
        for n in range(q):
            yield self.element_at(n)

    def random_element(self, rng: random.Random, height: int | None = None) -> Fel:
        if height is None:
            height = get_settings().random_height
        if self.is_finite:
            return self.element_at(rng.randrange(self._require_finite()))
        coeffs = [
            Fraction(rng.randint(-height, height), rng.randint(1, height))
            for _ in range(self.degree)
        ]
        return self.from_coeffs(coeffs)

    def _require_finite(self) -> int:
        q = self.order
        if q is None:
            raise ParameterRangeError(f"{self!r} is infinite")
        return q

    # ── JSON encoding ──

    def encode(self) -> dict[str, Any]:
        if self.kind is FieldKind.RATIONALS:
            return {"kind": "Q"}
        if self.kind is FieldKind.PRIME:
            return {"kind": "GF", "p": self.characteristic}
        assert self.base is not None
        out: dict[str, Any] = {
            "kind": "ext",
            "base": self.base.encode(),
            "modulus": [self.base.encode_element(Fel(self.base, c)) for c in self.modulus],
        }
        if self.cyclotomic_index is not None:
            out["cyclotomic"] = self.cyclotomic_index
        return out

    @classmethod
    def decode(cls, obj: dict[str, Any]) -> FieldCtx:
        kind = obj.get("kind")
        if kind == "Q":
            return cls.rationals()
        if kind == "GF":
            return cls.prime_field(int(obj["p"]))
        if kind == "ext":
            base = cls.decode(obj["base"])
            modulus = [base.decode_element(c) for c in obj["modulus"]]
            return cls.extension(base, modulus, cyclotomic_index=obj.get("cyclotomic"))
        raise ParameterRangeError(f"unknown field kind {kind!r}")

    def encode_element(self, a: Fel) -> int | str | list[int | str]:
        a = self.coerce(a)
        if self.is_base:
            return self._encode_base(a.rep)
        assert self.base is not None
        return [self.base._encode_base(c) for c in a.coeffs()]

    def _encode_base(self, c: Any) -> int | str:
        if self.kind is FieldKind.RATIONALS:
            num, den = int(QQ.numer(c)), int(QQ.denom(c))
            return num if den == 1 else f"{num}/{den}"
        return int(c) % self.characteristic

    def decode_element(self, obj: Any) -> Fel:
        if isinstance(obj, list):
            if self.is_base:
                if len(obj) != 1:
                    raise ParameterRangeError(f"expected a scalar for {self!r}, got {obj!r}")
                return self.coerce(obj[0])
            if len(obj) > self.degree:
                raise ParameterRangeError(f"too many coefficients for {self!r}: {obj!r}")
            assert self.base is not None
            return self.from_coeffs([self.base.coerce(c) for c in obj])
        return self.coerce(obj)

    # ── Extensions ──

    def extend_degree(
        self, e: int, *, scan_cap: int | None = None
    ) -> tuple[FieldCtx, Callable[[Fel], Fel]]:
        """GF(q^e) flattened over GF(p), with the embedding of this field into it."""
        self._require_finite()
        if e < 1:
            raise ParameterRangeError(f"extension degree must be positive, got {e}")
        if e == 1:
            return self, _identity
        p = self.characteristic
        prime = FieldCtx.prime_field(p)
        big = FieldCtx.extension(prime, _first_irreducible(p, self.degree * e), check=False)
        if self.is_base:

            def embed_prime(a: Fel) -> Fel:
                return big.from_int(int(self.coerce(a).rep))

            return big, embed_prime

        root = _subfield_root(big, self, scan_cap)
        logger.info("Embedded %r into %r via x -> %s", self, big, root)

        def embed(a: Fel) -> Fel:
            out = big.zero()
            power = big.one()
            for c in self.coerce(a).coeffs():
                out = out + power * int(c)
                power = power * root
            return out

        return big, embed

    def quadratic_extension(self, disc: Fel) -> tuple[FieldCtx, Callable[[Fel], Fel], Fel]:
        """A field containing a square root of ``disc``: (ctx, embedding, root)."""
        disc = self.coerce(disc)
        existing = self.sqrt(disc)
        if existing is not None:
            return self, _identity, existing
        if self.is_finite:
            big, embed = self.extend_degree(2)
            root = big.sqrt(embed(disc))
            if root is None:
                raise RootOfUnityUnavailableError(f"no square root of {disc} in {big!r}")
            return big, embed, root
        if self.kind is FieldKind.RATIONALS:
            big = FieldCtx.extension(self, [-disc, 0, 1])

            def embed_q(a: Fel) -> Fel:
                return big.from_coeffs([self.coerce(a)])

            return big, embed_q, big.gen()
        raise RootOfUnityUnavailableError(
            f"quadratic extension of {self!r} would need a tower; adjoin sqrt({disc}) explicitly"
        )

    def sqrt(self, a: Fel) -> Fel | None:
        """A square root of ``a`` in this field, or None when there is none."""
        a = self.coerce(a)
        if a.is_zero:
            return a
        if self.kind is FieldKind.RATIONALS:
            num, den = int(QQ.numer(a.rep)), int(QQ.denom(a.rep))
            if num < 0:
                return None
            rn, exact_n = integer_nthroot(num, 2)
            rd, exact_d = integer_nthroot(den, 2)
            return self.from_fraction(int(rn), int(rd)) if exact_n and exact_d else None
        if self.is_finite:
            return _finite_sqrt(a)
        return _number_field_sqrt(a)


class Fel:
    """An element of a FieldCtx. Immutable; ints are coerced in arithmetic."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: FieldCtx, rep: Any) -> None:
        self.ctx = ctx
        self.rep = rep

    def _lift(self, other: Any) -> Fel | None:
        if isinstance(other, Fel):
            if other.ctx != self.ctx:
                raise FieldMismatchError(f"{self.ctx!r} vs {other.ctx!r}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ctx.from_int(other)
        if isinstance(other, Fraction):
            return self.ctx.from_fraction(other.numerator, other.denominator)
        return None

    @property
    def is_zero(self) -> bool:
        return not self.rep if not self.ctx.is_base else self.rep == self.ctx.domain.zero

    @property
    def is_one(self) -> bool:
        return self.rep == self.ctx.one().rep

    def __bool__(self) -> bool:
        return not self.is_zero

    def coeffs(self) -> list[Any]:
        """Base-domain coefficients, low to high, padded to the field degree."""
        if self.ctx.is_base:
            return [self.rep]
        out = list(reversed(self.rep))
        return out + [self.ctx.domain.zero] * (self.ctx.degree - len(out))

    # ── Arithmetic ──

    def __add__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        if self.ctx.is_base:
            return Fel(self.ctx, self.rep + b.rep)
        return Fel(self.ctx, tuple(dup_add(list(self.rep), list(b.rep), self.ctx.domain)))

    __radd__ = __add__

    def __neg__(self) -> Fel:
        if self.ctx.is_base:
            return Fel(self.ctx, -self.rep)
        return Fel(self.ctx, tuple(dup_neg(list(self.rep), self.ctx.domain)))

    def __sub__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        if self.ctx.is_base:
            return Fel(self.ctx, self.rep - b.rep)
        return Fel(self.ctx, tuple(dup_sub(list(self.rep), list(b.rep), self.ctx.domain)))

    def __rsub__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b - self

    def __mul__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        ctx = self.ctx
        if ctx.is_base:
            return Fel(ctx, self.rep * b.rep)
        if not self.rep or not b.rep:
            return ctx.zero()
        K = ctx.domain
        return Fel(ctx, tuple(dup_rem(dup_mul(list(self.rep), list(b.rep), K), ctx._mod, K)))

    __rmul__ = __mul__

    def inverse(self) -> Fel:
        if self.is_zero:
            raise FieldDivisionError(f"inverse of zero in {self.ctx!r}")
        ctx = self.ctx
        if ctx.is_base:
            return Fel(ctx, ctx.domain.one / self.rep)
        try:
            inv = dup_invert(list(self.rep), ctx._mod, ctx.domain)
        except NotInvertible as e:
            raise IrreducibilityError(f"{self} is not invertible modulo {ctx.modulus_str()}") from e
        return Fel(ctx, tuple(dup_strip(inv)))

    def __truediv__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other: Any) -> Fel:
        b = self._lift(other)
        if b is None:
            return NotImplemented
        return b * self.inverse()

    def __pow__(self, n: int) -> Fel:
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ctx.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    # ── Comparison ──

    def key(self) -> Any:
        if self.ctx.is_base:
            return self.ctx._elem_key(self.rep)
        base = self.ctx.prime_subfield
        return tuple(base._elem_key(c) for c in self.coeffs())

    def sort_key(self) -> tuple[Any, ...]:
        k = self.key()
        return k if isinstance(k, tuple) and self.ctx.degree > 1 else (k,)

    def __eq__(self, other: object) -> bool:
        # Fel only, so equal elements hash alike
        if isinstance(other, Fel):
            return self.ctx == other.ctx and self.rep == other.rep
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"Fel({self}, {self.ctx!r})"

    def __str__(self) -> str:
        ctx = self.ctx
        if ctx.is_base:
            return ctx._elem_str(self.rep)
        base = ctx.prime_subfield
        terms = [_term(base._elem_str(c), k) for k, c in enumerate(self.coeffs()) if c]
        return " + ".join(reversed(terms)) or "0"


# ── Module helpers ──


def _identity(a: Fel) -> Fel:
    return a


def _term(coeff: str, k: int) -> str:
    if k == 0:
        return coeff
    mono = "x" if k == 1 else f"x^{k}"
    if coeff == "1":
        return mono
    if "/" in coeff or coeff.startswith("-"):
        coeff = f"({coeff})"
    return f"{coeff}*{mono}"


@lru_cache(maxsize=1)
def _rationals() -> FieldCtx:
    ctx = FieldCtx._new()
    ctx.kind = FieldKind.RATIONALS
    ctx.characteristic = 0
    ctx.base = None
    ctx.modulus = ()
    ctx.degree = 1
    ctx.domain = QQ
    ctx.cyclotomic_index = None
    ctx.unchecked = False
    ctx._mod = []
    ctx._key = ("Q",)
    return ctx


@lru_cache(maxsize=64)
def _prime_field(p: int) -> FieldCtx:
    ctx = FieldCtx._new()
    ctx.kind = FieldKind.PRIME
    ctx.characteristic = p
    ctx.base = None
    ctx.modulus = ()
    ctx.degree = 1
    ctx.domain = GF(p, symmetric=False)
    ctx.cyclotomic_index = None
    ctx.unchecked = False
    ctx._mod = []
    ctx._key = ("GF", p)
    return ctx


def _modulus_poly(ctx: FieldCtx) -> Poly:
    assert ctx.base is not None
    if ctx.base.kind is FieldKind.RATIONALS:
        coeffs = [QQ.to_sympy(c) for c in reversed(ctx.modulus)]
        return Poly(coeffs, _X, domain="QQ")
    p = ctx.characteristic
    return Poly([int(c) % p for c in reversed(ctx.modulus)], _X, modulus=p)


def _is_irreducible(ctx: FieldCtx) -> bool:
    return bool(_modulus_poly(ctx).is_irreducible)


@lru_cache(maxsize=128)
def _first_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """The first monic irreducible of the given degree over GF(p), low to high."""
    for n in range(p**degree):
        digits = []
        rest = n
        for _ in range(degree):
            rest, r = divmod(rest, p)
            digits.append(r)
        if digits[0] == 0:
            continue
        coeffs = [*digits, 1]
        if Poly(list(reversed(coeffs)), _X, modulus=p).is_irreducible:
            return tuple(coeffs)
    raise IrreducibilityError(f"no irreducible polynomial of degree {degree} over GF({p})")


def finite_order(a: Fel) -> int:
    """Exact multiplicative order of a nonzero element of a finite field."""
    q = a.ctx.order
    assert q is not None
    if a.is_zero:
        raise FieldDivisionError("zero has no multiplicative order")
    order = q - 1
    for r in factorint(q - 1):
        while order % r == 0 and (a ** (order // r)).is_one:
            order //= r
    return order


def _subfield_root(big: FieldCtx, small: FieldCtx, scan_cap: int | None) -> Fel:
    """A root in ``big`` of the modulus of ``small`` (a subfield of the same characteristic)."""
    if scan_cap is None:
        scan_cap = get_settings().field_scan_cap
    q_big = big.order
    q_small = small.order
    assert q_big is not None and q_small is not None
    primitive = None
    for n in range(1, min(q_big, scan_cap)):
        cand = big.element_at(n)
        if finite_order(cand) == q_big - 1:
            primitive = cand
            break
    if primitive is None:
        raise RootOfUnityUnavailableError(f"no primitive element of {big!r} within scan cap")
    sub_gen = primitive ** ((q_big - 1) // (q_small - 1))
    modulus = [int(c) for c in small.modulus]
    candidate = big.one()
    for _ in range(min(q_small - 1, scan_cap)):
        value = big.zero()
        for c in reversed(modulus):
            value = value * candidate + c
        if value.is_zero:
            return candidate
        candidate = candidate * sub_gen
    raise RootOfUnityUnavailableError(f"{small!r} does not embed into {big!r}")


def _finite_sqrt(a: Fel) -> Fel | None:
    ctx = a.ctx
    q = ctx.order
    assert q is not None
    if ctx.characteristic == 2:
        return a ** (q // 2)
    if not (a ** ((q - 1) // 2)).is_one:
        return None
    # Tonelli-Shanks
    s, odd = 0, q - 1
    while odd % 2 == 0:
        s, odd = s + 1, odd // 2
    z = next(
        e for e in (ctx.element_at(n) for n in range(1, q)) if not (e ** ((q - 1) // 2)).is_one
    )
    m, c, t, r = s, z**odd, a**odd, a ** ((odd + 1) // 2)
    while not t.is_one:
        i, t2 = 0, t
        while not t2.is_one:
            t2 = t2 * t2
            i += 1
        b = c ** (2 ** (m - i - 1))
        m, c, t, r = i, b * b, t * b * b, r * b
    return r


def _number_field_sqrt(a: Fel) -> Fel | None:
    """Square root in QQ[x]/(f) by factoring y^2 - a over the algebraic field."""
    ctx = a.ctx
    try:
        theta = CRootOf(_modulus_poly(ctx).as_expr(), 0)
        K = QQ.algebraic_field(theta)
        if [QQ(c) for c in K.mod.to_list()] != list(ctx._mod):
            return None
        a_alg = K.from_sympy(sum(QQ.to_sympy(c) * theta**k for k, c in enumerate(a.coeffs())))
        y = Symbol("y")
        poly = Poly([K.one, K.zero, -a_alg], y, domain=K)
        for factor, _mult in poly.factor_list()[1]:
            if factor.degree() == 1:
                lead, const = factor.rep.to_list()
                root = K.quo(-const, lead)
                coeffs = [QQ.convert(c) for c in reversed(root.to_list())]
                return ctx.from_coeffs(coeffs)
    except Exception as e:  # noqa: BLE001 - sympy raises many types here
        logger.debug("Number field sqrt failed in %r: %s", ctx, e)
    return None
