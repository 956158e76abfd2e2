"""Exact arithmetic for a rank-one discrete valuation, instantiated p-adically on Z.

The coefficient domain is Z with the normalized p-adic valuation nu_p
(nu_p(p) = 1).  Everything here is exact: valuations are non-negative
integers or INFINITY, slopes are `fractions.Fraction`, and there is no
floating point anywhere.  The abstraction (valuation, exact division by
powers of the uniformizer, residue reduction) is kept narrow so another
coefficient backend could be added without touching downstream modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class _Infinity:
    """Valuation of zero: bigger than every finite value, absorbing under +."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def _comparable(self, other):
        return isinstance(other, (int, Fraction, _Infinity))

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("phinewton-infinity")

    def __gt__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return other is not self

    def __ge__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return True

    def __lt__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return False

    def __le__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return other is self

    def __add__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return self

    __radd__ = __add__

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()

# A valuation value: a non-negative integer, or INFINITY for the zero element.
ExtInt = Union[int, _Infinity]


_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)

# Miller-Rabin with these bases is a proven primality test below this bound.
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int, base: int) -> bool:
    if base % n == 0:
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality check.

    Deterministic (trial division, then fixed-base Miller-Rabin) for all
    n below ~3.3e24; above that the same test runs on the first 40 prime
    bases, which is a standard production-strength check.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < _MR_DETERMINISTIC_BOUND:
        bases = _MR_BASES
    else:
        bases = _SMALL_PRIMES[:40]
    return all(_miller_rabin(n, b) for b in bases)


@dataclass(frozen=True)
class ValuationDomain:
    """The pair (Z, nu_p): prime p, uniformizer pi = p, residue field F_p."""

    prime: int
    uniformizer: int
    residue_characteristic: int

    def __post_init__(self):
        if self.prime < 2 or not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        if self.uniformizer != self.prime:
            raise ValueError("the integer instantiation uses pi = p")
        if self.residue_characteristic != self.prime:
            raise ValueError("residue characteristic must equal p over Z")

    @classmethod
    def p_adic(cls, p: int) -> "ValuationDomain":
        return cls(p, p, p)

    def valuation(self, x: int) -> ExtInt:
        """Exact exponent of p in x; INFINITY iff x = 0."""
        if x == 0:
            return INFINITY
        p = self.prime
        v = 0
        while x % p == 0:
            x //= p
            v += 1
        return v

    def residue(self, x: int) -> int:
        """Image of x in F_p, represented in [0, p)."""
        return x % self.prime

    def exact_div(self, x: int, k: int) -> int:
        """x / p^k, required to be exact."""
        q, r = divmod(x, self.prime**k)
        if r != 0:
            raise ValueError(f"{x} is not divisible by {self.prime}^{k}")
        return q


def reduce_rational(num: int, den: int) -> Fraction:
    """Exact rational num/den in lowest terms with positive denominator."""
    if den == 0:
        raise ValueError("zero denominator: malformed slope input")
    return Fraction(num, den)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
