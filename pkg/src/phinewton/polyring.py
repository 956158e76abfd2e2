"""Dense univariate polynomials over Z: Euclidean division by monic divisors,
phi-expansion, and Gauss valuations of the expansion coefficients.

Coefficients are arbitrary-precision Python integers, stored in ascending
degree order with no trailing zeros; arithmetic is exact throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .residue_field import FpPoly
from .valuation import INFINITY, ExtInt, ValuationDomain


class IntPoly:
    """Dense polynomial over Z.

    The zero polynomial is the empty coefficient list and reports degree -1,
    which stands in for "minus infinity" in the degree guards used here.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(value) -> "IntPoly":
        if isinstance(value, IntPoly):
            return value
        if isinstance(value, int):
            return IntPoly((value,))
        return NotImplemented

    def __add__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "IntPoly"):
        """Euclidean division by a monic divisor, exact over Z."""
        if not isinstance(other, IntPoly):
            return NotImplemented
        if other.is_zero:
            raise ValueError("division by the zero polynomial")
        if not other.is_monic:
            raise ValueError("divisor must be monic for division over Z")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly(), self
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return IntPoly(quo), IntPoly(rem[: other.degree])

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[1]

    def evaluate(self, x: int) -> int:
        y = 0
        for c in reversed(self.coeffs):
            y = y * x + c
        return y

    def reduce_mod(self, p: int) -> FpPoly:
        """Image in F_p[x]."""
        return FpPoly(p, self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"


def poly_divmod(num: IntPoly, den: IntPoly) -> tuple[IntPoly, IntPoly]:
    """num = q*den + r with deg r < deg den; den must be monic."""
    return divmod(num, den)


def gauss_valuation(a: IntPoly, domain: ValuationDomain) -> ExtInt:
    """Minimum p-adic valuation over the coefficients; INFINITY for zero."""
    if a.is_zero:
        return INFINITY
    return min(domain.valuation(c) for c in a.coeffs if c != 0)


@dataclass(frozen=True)
class PhiExpansion:
    """The unique writing f = sum a_i * phi^i with deg a_i < deg phi.

    `coeffs[i]` is a_i (zero coefficients kept in place) and `valuations[i]`
    is its Gauss valuation u_i, INFINITY when a_i = 0.
    """

    f: IntPoly
    phi: IntPoly
    coeffs: tuple
    valuations: tuple
    domain: ValuationDomain

    @property
    def length(self) -> int:
        """Index of the leading expansion coefficient."""
        return len(self.coeffs) - 1

    def points(self) -> list[tuple[int, ExtInt]]:
        """The valuation points (i, u_i) feeding the Newton polygon."""
        return list(enumerate(self.valuations))

    def recompose(self) -> IntPoly:
        out = IntPoly.zero()
        power = IntPoly.one()
        for a in self.coeffs:
            out = out + a * power
            power = power * self.phi
        return out


def phi_expand(f: IntPoly, phi: IntPoly, domain: ValuationDomain) -> PhiExpansion:
    """Expand f in powers of phi by repeated Euclidean division."""
    if f.is_zero:
        raise ValueError("cannot expand the zero polynomial")
    if not phi.is_monic or phi.degree < 1:
        raise ValueError("phi must be monic of degree >= 1")
    coeffs = []
    rest = f
    while not rest.is_zero:
        rest, a = divmod(rest, phi)
        coeffs.append(a)
    valuations = tuple(gauss_valuation(a, domain) for a in coeffs)
    return PhiExpansion(f, phi, tuple(coeffs), valuations, domain)


def is_power_of_phibar(f: IntPoly, phi: IntPoly, domain: ValuationDomain) -> bool:
    """True iff the reduction of f mod p equals (phi mod p)^(deg f / deg phi)."""
    if not f.is_monic or not phi.is_monic:
        raise ValueError("monic polynomials required")
    m = phi.degree
    if m < 1 or f.degree % m != 0:
        return False
    p = domain.prime
    return f.reduce_mod(p) == phi.reduce_mod(p) ** (f.degree // m)
