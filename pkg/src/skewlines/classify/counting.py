"""How many fourth lines give a group of order m, and what that bounds.

With L1, L2, L3 in standard position and both transversals fixed, a fourth line with
|G| = m corresponds to a pair of m-th roots of unity (alpha, gamma) generating the
order-m group with alpha, gamma, alpha * gamma all different from 1. In exponent form
that is a pair (i, j) of nonzero residues mod m with i + j != 0 and gcd(i, j, m) = 1.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd, prod
from typing import Literal, NamedTuple

from sympy import factorint, isprime, totient

from skewlines.errors import ParameterRangeError


class TableRow(NamedTuple):
    m: int
    classes: int
    size: int
    a: int
    b: int

    @property
    def signature(self) -> str:
        return f"6^{self.a} 12^{self.b}"


# Single-orbit [m, 4]-half grids over the complex numbers: equivalence classes, the
# number of admissible fourth lines, and the 6^a 12^b class-size split.
FINAL_TABLE: tuple[TableRow, ...] = (
    TableRow(4, 1, 6, 1, 0),
    TableRow(5, 2, 12, 2, 0),
    TableRow(6, 2, 18, 1, 1),
    TableRow(7, 4, 30, 3, 1),
    TableRow(8, 4, 36, 2, 2),
    TableRow(9, 6, 54, 3, 3),
    TableRow(10, 6, 60, 2, 4),
    TableRow(11, 10, 90, 5, 5),
    TableRow(12, 8, 84, 2, 6),
    TableRow(13, 14, 132, 6, 8),
    TableRow(14, 12, 126, 3, 9),
    TableRow(15, 16, 168, 4, 12),
    TableRow(16, 16, 168, 4, 12),
    TableRow(17, 24, 240, 8, 16),
    TableRow(18, 18, 198, 3, 15),
    TableRow(19, 30, 306, 9, 21),
    TableRow(20, 24, 264, 4, 20),
)


def table_row(m: int) -> TableRow | None:
    return next((row for row in FINAL_TABLE if row.m == m), None)


def _check_m(m: int) -> None:
    if m < 2:
        raise ParameterRangeError(f"m must be at least 2, got {m}")


def n_m_formula(m: int, characteristic: int = 0) -> int:
    """Closed form for the number of admissible fourth lines with |G| = m."""
    _check_m(m)
    if characteristic and m % characteristic == 0:
        return 0
    phi = int(totient(m))
    parts = dict(factorint(m))
    primes = sorted(parts)
    total = phi * (phi - 1) + 2 * phi * (m - 1 - phi)
    for size in range(1, len(primes)):
        for subset in combinations(primes, size):
            rest = [p for p in primes if p not in subset]
            low = prod(p ** (parts[p] - 1) for p in subset)
            full = prod(p ** parts[p] for p in rest)
            gens = prod(int(totient(p ** parts[p])) for p in rest)
            total += phi * low * (full - gens)
    return total


def exponent_pairs(m: int) -> list[tuple[int, int]]:
    """(i, j) with i, j, i + j nonzero mod m and gcd(i, j, m) = 1, lex order."""
    _check_m(m)
    return [
        (i, j)
        for i in range(1, m)
        for j in range(1, m)
        if (i + j) % m and gcd(gcd(i, j), m) == 1
    ]


def n_m_bruteforce(m: int) -> int:
    return len(exponent_pairs(m))


def self_paired_root_count(m: int) -> int:
    """Admissible (i, j) with i = j, 2i + j = 0 or i + 2j = 0 mod m."""
    return sum(
        1
        for i, j in exponent_pairs(m)
        if i == j or (2 * i + j) % m == 0 or (i + 2 * j) % m == 0
    )


def prime_class_count(m: int) -> int:
    """(m^2 - 1) / 12 classes of single-orbit [m, 4]-half grids for prime m >= 5."""
    if m < 5 or not isprime(m):
        raise ParameterRangeError(f"m must be a prime >= 5, got {m}")
    return (m * m - 1) // 12


def line_count_bound(r: int, variant: Literal["a", "b"] = "a", characteristic: int = 0) -> int:
    """Beyond this many skew lines with two transversals, a nontrivial G has order > r."""
    if r < 1:
        raise ParameterRangeError(f"r must be positive, got {r}")
    if variant == "a":
        return 2 * r * (r - 1) * (r - 2) // 3 + 2
    if variant == "b":
        return 2 * sum(n_m_formula(m, characteristic) for m in range(2, r + 1)) + 2
    raise ParameterRangeError(f"unknown bound variant {variant!r}")
