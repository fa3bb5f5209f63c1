"""Exact scalars of the form sum over s of q_s * sqrt(s).

Coefficients q_s are exact rationals and every radicand s is a squarefree
positive integer, so two values are equal exactly when their term maps are
identical.  This is the coefficient domain for all matrices built by the
package; nothing downstream ever touches floating point.
"""

from __future__ import annotations

import decimal
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, sqrt as _float_sqrt
from typing import Iterable, Mapping, Union

__all__ = ["Rational", "normalize_radical", "RadicalSum"]

Rational = Union[int, Fraction]

_F0 = Fraction(0)


@lru_cache(maxsize=None)
def normalize_radical(n: int) -> tuple[int, int]:
    """Write ``n >= 0`` as ``outer**2 * squarefree`` and return ``(outer, squarefree)``.

    Factorization is plain trial division; radicands here are products of
    occupation numbers and the statistics order, so they stay tiny.
    ``normalize_radical(0) == (1, 0)`` and callers map sqrt(0) to the zero sum.
    """
    if n < 0:
        raise ValueError(f"radicand must be nonnegative, got {n}")
    if n == 0:
        return 1, 0
    outer = 1
    squarefree = 1
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            exp = 0
            while rest % d == 0:
                rest //= d
                exp += 1
            outer *= d ** (exp // 2)
            if exp % 2:
                squarefree *= d
        d += 1 if d == 2 else 2
    squarefree *= rest
    return outer, squarefree


class RadicalSum:
    """Immutable, canonical sum of rational multiples of integer square roots."""

    __slots__ = ("_terms",)

    def __init__(self, value: Rational = 0) -> None:
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass int or Fraction")
        coeff = Fraction(value)
        self._terms: dict[int, Fraction] = {1: coeff} if coeff else {}

    # ------------------------------------------------------------------ build

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "RadicalSum":
        out = cls.__new__(cls)
        out._terms = terms
        return out

    @classmethod
    def from_terms(
        cls, terms: Mapping[int, Rational] | Iterable[tuple[int, Rational]]
    ) -> "RadicalSum":
        """Build from (radicand, coefficient) pairs, canonicalizing radicands."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for radicand, coeff in items:
            outer, sf = normalize_radical(radicand)
            q = Fraction(coeff) * outer
            if sf == 0 or not q:
                continue
            new = acc.get(sf, _F0) + q
            if new:
                acc[sf] = new
            else:
                acc.pop(sf, None)
        return cls._raw(acc)

    @classmethod
    def sqrt(cls, n: int) -> "RadicalSum":
        """Exact sqrt(n) for integer n >= 0."""
        outer, sf = normalize_radical(n)
        if sf == 0:
            return cls()
        return cls._raw({sf: Fraction(outer)})

    @classmethod
    def sqrt_fraction(cls, value: Rational) -> "RadicalSum":
        """Exact sqrt(a/b), stored as (1/b)*sqrt(a*b) to keep radicands integral."""
        q = Fraction(value)
        if q < 0:
            raise ValueError("cannot take a real square root of a negative value")
        return cls.sqrt(q.numerator * q.denominator) / q.denominator

    # ------------------------------------------------------------ inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {1}

    def as_fraction(self) -> Fraction:
        if not self._terms:
            return _F0
        if set(self._terms) == {1}:
            return self._terms[1]
        raise ValueError(f"{self} is irrational")

    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------ arithmetic

    @staticmethod
    def _coerce(value) -> "RadicalSum | None":
        if isinstance(value, RadicalSum):
            return value
        if isinstance(value, (int, Fraction)):
            return RadicalSum(value)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        acc = dict(self._terms)
        for s, q in other._terms.items():
            new = acc.get(s, _F0) + q
            if new:
                acc[s] = new
            else:
                acc.pop(s, None)
        return RadicalSum._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum._raw({s: -q for s, q in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RadicalSum()
            q = Fraction(other)
            return RadicalSum._raw({s: c * q for s, c in self._terms.items()})
        if not isinstance(other, RadicalSum):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for s, q in self._terms.items():
            for t, w in other._terms.items():
                # s, t squarefree: sqrt(s)*sqrt(t) = g*sqrt((s/g)*(t/g)), g = gcd(s, t)
                g = gcd(s, t)
                radicand = (s // g) * (t // g)
                coeff = q * w * g
                new = acc.get(radicand, _F0) + coeff
                if new:
                    acc[radicand] = new
                else:
                    acc.pop(radicand, None)
        return RadicalSum._raw(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def reciprocal(self) -> "RadicalSum":
        """Exact inverse; defined only for single-term values q*sqrt(s)."""
        if not self._terms:
            raise ZeroDivisionError("zero has no reciprocal")
        if len(self._terms) > 1:
            raise ValueError("reciprocal requires a single-term value")
        ((s, q),) = self._terms.items()
        return RadicalSum._raw({s: Fraction(1) / (q * s)})

    # ------------------------------------------------------------ comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, RadicalSum):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return self._terms == ({1: q} if q else {})
        return NotImplemented

    def __hash__(self) -> int:
        if not self._terms:
            return hash(0)
        if set(self._terms) == {1}:
            return hash(self._terms[1])
        return hash(tuple(sorted(self._terms.items())))

    # ------------------------------------------------------------- rendering

    def __float__(self) -> float:
        return sum(float(q) * _float_sqrt(s) for s, q in self._terms.items())

    def to_float(self, digits: int) -> str:
        """Decimal approximation to ``digits`` significant digits (display only)."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if not self._terms:
            return "0"
        guard = digits + 15
        scale = 10**guard
        total = _F0
        for s, q in self._terms.items():
            total += q * isqrt(s * scale * scale)
        total /= scale
        with decimal.localcontext() as ctx:
            ctx.prec = digits
            approx = decimal.Decimal(total.numerator) / decimal.Decimal(total.denominator)
        return str(approx)

    def to_json(self) -> list[dict[str, str]]:
        return [
            {"num": str(q.numerator), "den": str(q.denominator), "radicand": str(s)}
            for s, q in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping[str, str]]) -> "RadicalSum":
        return cls.from_terms(
            (int(term["radicand"]), Fraction(int(term["num"]), int(term["den"])))
            for term in data
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for s, q in sorted(self._terms.items()):
            if s == 1:
                body = str(abs(q))
            elif abs(q) == 1:
                body = f"sqrt({s})"
            else:
                body = f"{abs(q)}*sqrt({s})"
            if not parts:
                parts.append(body if q > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if q > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RadicalSum({str(self)!r})"
