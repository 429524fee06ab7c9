"""Exact Laurent polynomials in a half power of t.

The grading variable t is allowed to appear in half-integer powers, so
exponents are stored as integer counts of half steps: key k stands for
t^(k/2).  Coefficients are arbitrary-precision Python ints, and zero
coefficients are never stored.  All the data this package produces
happens to land in whole powers of t, but the representation keeps the
half steps so nothing is silently rounded.
"""

from __future__ import annotations

from fractions import Fraction


def _power_str(halfsteps: int) -> str:
    if halfsteps % 2 == 0:
        e = halfsteps // 2
        return "t" if e == 1 else "t^%d" % e
    return "t^(%d/2)" % halfsteps


class LaurentT:
    """An integer-coefficient Laurent polynomial in t^(1/2)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for k, c in terms.items():
                if c:
                    data[int(k)] = int(c)
        self.terms = data

    @classmethod
    def zero(cls) -> "LaurentT":
        return cls()

    @classmethod
    def one(cls) -> "LaurentT":
        return cls({0: 1})

    @classmethod
    def const(cls, c: int) -> "LaurentT":
        return cls({0: c})

    @classmethod
    def t_power(cls, exponent: int, coeff: int = 1) -> "LaurentT":
        """coeff * t^exponent, with exponent in whole powers of t."""
        return cls({2 * exponent: coeff})

    @classmethod
    def half_power(cls, halfsteps: int, coeff: int = 1) -> "LaurentT":
        """coeff * t^(halfsteps/2)."""
        return cls({halfsteps: coeff})

    @classmethod
    def from_pairs(cls, pairs) -> "LaurentT":
        """Build from [halfsteps, coeff] pairs (the JSON encoding)."""
        return cls({int(k): int(c) for k, c in pairs})

    def pairs(self) -> list[list[int]]:
        """[halfsteps, coeff] pairs sorted by exponent (the JSON encoding)."""
        return [[k, self.terms[k]] for k in sorted(self.terms)]

    def coefficient(self, halfsteps: int) -> int:
        return self.terms.get(halfsteps, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentT.const(other)
        if not isinstance(other, LaurentT):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "LaurentT") -> "LaurentT":
        if isinstance(other, int):
            other = LaurentT.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentT(out)

    def __sub__(self, other: "LaurentT") -> "LaurentT":
        return self + (-other)

    def __neg__(self) -> "LaurentT":
        return LaurentT({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentT({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, LaurentT):
            return NotImplemented
        out: dict[int, int] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentT(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def shifted(self, halfsteps: int) -> "LaurentT":
        """Multiply by t^(halfsteps/2)."""
        return LaurentT({k + halfsteps: c for k, c in self.terms.items()})

    def mirrored(self, center_halfsteps: int) -> "LaurentT":
        """t^(center/2) * f(1/t): each exponent k maps to center - k."""
        return LaurentT({center_halfsteps - k: c for k, c in self.terms.items()})

    def is_palindromic(self, center_halfsteps: int) -> bool:
        return self.mirrored(center_halfsteps).terms == self.terms

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def at_one(self) -> int:
        """Value at t = 1."""
        return sum(self.terms.values())

    def exponents_are_whole(self) -> bool:
        return all(k % 2 == 0 for k in self.terms)

    def min_halfsteps(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(self.terms)

    def max_halfsteps(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    def format(self) -> str:
        """Compact display, e.g. '1+2t+t^2' or 't^(3/2)'."""
        if not self.terms:
            return "0"
        chunks = []
        for k in sorted(self.terms):
            c = self.terms[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = _power_str(k)
            else:
                body = "%d%s" % (mag, _power_str(k))
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            out += sign + body
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return "LaurentT(%r)" % (dict(sorted(self.terms.items())),)


def t_factorial(n: int) -> LaurentT:
    """The t-factorial: product over k <= n of (1 + t + ... + t^(k-1))."""
    if n < 0:
        raise ValueError("t_factorial needs n >= 0")
    out = LaurentT.one()
    for k in range(2, n + 1):
        out = out * LaurentT({2 * e: 1 for e in range(k)})
    return out


def center_to_halfsteps(center) -> int:
    """Convert a (half-)integer palindromy center in t units to half steps."""
    frac = Fraction(center)
    doubled = frac * 2
    if doubled.denominator != 1:
        raise ValueError("center must be a half integer, got %r" % (center,))
    return int(doubled)
