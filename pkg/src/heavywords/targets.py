"""Exact heaviness targets: rationals and real quadratic irrationals.

A target is a number (p + q*sqrt(d)) / r with integer p, q, r > 0 and
d >= 0.  Everything a heaviness check needs is decidable in integer
arithmetic: comparison against an exact rational, and floor/ceiling of any
integer multiple (via ``math.isqrt``).  No floating point is involved in any
decision; ``float()`` is offered for display only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .errors import DomainError, ParseError

RationalLike = Union[int, Fraction]
TargetLike = Union["AlgebraicTarget", int, Fraction, str]


def _squarefree_split(d: int) -> tuple[int, int]:
    """d = s*s * d0 with d0 squarefree; returns (s, d0)."""
    s, d0, f = 1, d, 2
    while f * f <= d0:
        ff = f * f
        while d0 % ff == 0:
            d0 //= ff
            s *= f
        f += 1
    return s, d0


def _sign_linear_surd(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) for non-square d >= 2 (or b == 0)."""
    if b == 0:
        return (a > 0) - (a < 0)
    if b > 0:
        if a >= 0:
            return 1
        lhs, rhs = b * b * d, a * a
        return (lhs > rhs) - (lhs < rhs)
    if a <= 0:
        return -1
    lhs, rhs = a * a, b * b * d
    return (lhs > rhs) - (lhs < rhs)


class AlgebraicTarget:
    """Canonical immutable representation of (p + q*sqrt(d)) / r.

    Canonical means: r > 0, gcd(p, q, r) == 1, d squarefree, and q == 0
    exactly when the value is rational (in which case d == 0).
    """

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int = 0, d: int = 0, r: int = 1):
        if r == 0:
            raise DomainError("target denominator must be nonzero")
        if d < 0:
            raise DomainError("only real targets are supported (d >= 0)")
        if r < 0:
            p, q, r = -p, -q, -r
        if q == 0 or d == 0:
            q, d = 0, 0
        else:
            s, d = _squarefree_split(d)
            q *= s
            if d == 1:
                p, q, d = p + q, 0, 0
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraicTarget is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_rational(cls, x: RationalLike) -> "AlgebraicTarget":
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @classmethod
    def parse(cls, text: str) -> "AlgebraicTarget":
        """Parse exact forms only: "3/5", "2", or "(p+q*sqrt(d))/r".

        The unicode minus sign is accepted.  Decimal input is rejected so
        exactness is preserved end to end.
        """
        cleaned = text.replace("−", "-").replace(" ", "")
        m = re.fullmatch(
            r"\((-?\d+)([+-])(\d*)\*?sqrt\((\d+)\)\)/(-?\d+)", cleaned
        )
        if m:
            p = int(m.group(1))
            q = int(m.group(3) or "1") * (1 if m.group(2) == "+" else -1)
            d = int(m.group(4))
            r = int(m.group(5))
            return cls(p, q, d, r)
        if re.fullmatch(r"-?\d+(/\d+)?", cleaned):
            return cls.from_rational(Fraction(cleaned))
        raise ParseError(
            f"expected 'p/q' or '(p+q*sqrt(d))/r', got {text!r}"
        )

    # -- predicates and views -------------------------------------------------

    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise DomainError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def __float__(self) -> float:
        return (self.p + self.q * self.d ** 0.5) / self.r

    def to_text(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.r))
        sign = "+" if self.q >= 0 else "-"
        return f"({self.p}{sign}{abs(self.q)}*sqrt({self.d}))/{self.r}"

    def __repr__(self) -> str:
        return f"AlgebraicTarget({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    # -- arithmetic (enough to move targets around, not a field implementation)

    def __neg__(self) -> "AlgebraicTarget":
        return AlgebraicTarget(-self.p, -self.q, self.d, self.r)

    def scale(self, k: RationalLike) -> "AlgebraicTarget":
        """k * self for an exact rational k."""
        k = Fraction(k)
        return AlgebraicTarget(
            self.p * k.numerator, self.q * k.numerator, self.d, self.r * k.denominator
        )

    def add_rational(self, x: RationalLike) -> "AlgebraicTarget":
        x = Fraction(x)
        return AlgebraicTarget(
            self.p * x.denominator + x.numerator * self.r,
            self.q * x.denominator,
            self.d,
            self.r * x.denominator,
        )

    # -- exact comparison -----------------------------------------------------

    def cmp_rational(self, x: RationalLike) -> int:
        """Sign of (self - x) decided in integer arithmetic."""
        x = Fraction(x)
        a = self.p * x.denominator - x.numerator * self.r
        b = self.q * x.denominator
        return _sign_linear_surd(a, b, self.d)

    def cmp_multiple(self, i: int, x: RationalLike) -> int:
        """Sign of (i*self - x) without building the scaled target."""
        x = Fraction(x)
        a = i * self.p * x.denominator - x.numerator * self.r
        b = i * self.q * x.denominator
        return _sign_linear_surd(a, b, self.d)

    def cmp(self, other: TargetLike) -> int:
        """Sign of (self - other); both operands must lie in the same
        quadratic field (or either may be rational)."""
        other = as_target(other)
        if other.q == 0:
            return self.cmp_rational(Fraction(other.p, other.r))
        if self.q == 0:
            return -other.cmp_rational(Fraction(self.p, self.r))
        if self.d != other.d:
            raise DomainError(
                f"cannot compare sqrt({self.d}) and sqrt({other.d}) terms exactly"
            )
        a = self.p * other.r - other.p * self.r
        b = self.q * other.r - other.q * self.r
        return _sign_linear_surd(a, b, self.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.cmp_rational(other) == 0
        if isinstance(other, AlgebraicTarget):
            return (self.p, self.q, self.r, self.d) == (
                other.p,
                other.q,
                other.r,
                other.d,
            )
        return NotImplemented

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.d))

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    # -- exact floors ----------------------------------------------------------

    def floor(self) -> int:
        """Exact floor via integer square root; no rounding anywhere."""
        if self.q == 0:
            return self.p // self.r
        t = self.q * self.q * self.d
        s = isqrt(t)
        if self.q >= 0:
            fq = s
        else:
            fq = -s if s * s == t else -(s + 1)
        # floor((p + fq)/r) is exact: q*sqrt(d) lies in [fq, fq+1) and r > 0
        return (self.p + fq) // self.r

    def ceil(self) -> int:
        return -(-self).floor()

    def mul_floor(self, i: int) -> int:
        """floor(i * self), exact for any integer i (negative included)."""
        return self.scale(i).floor()

    def mul_ceil(self, i: int) -> int:
        return -self.scale(-i).floor()


def as_target(value: TargetLike) -> AlgebraicTarget:
    """Coerce ints, Fractions, text, or targets to an AlgebraicTarget."""
    if isinstance(value, AlgebraicTarget):
        return value
    if isinstance(value, (int, Fraction)):
        return AlgebraicTarget.from_rational(value)
    if isinstance(value, str):
        return AlgebraicTarget.parse(value)
    raise ParseError(f"cannot interpret {value!r} as a heaviness target")


def sqrt_target(d: int, scale: Fraction = Fraction(1)) -> AlgebraicTarget:
    """scale * sqrt(d) as an exact target."""
    scale = Fraction(scale)
    return AlgebraicTarget(0, scale.numerator, d, scale.denominator)


GOLDEN = AlgebraicTarget(-1, 1, 5, 2)  # (sqrt(5) - 1) / 2, density of the golden word
SQRT2_MINUS_1 = AlgebraicTarget(-1, 1, 2, 1)
