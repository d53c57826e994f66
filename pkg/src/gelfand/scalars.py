"""Exact scalars: rationals (``fractions.Fraction``) and integer polynomials in q."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[int, Fraction, "QPoly"]


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction; ints and Fractions pass through."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    num, sep, den = text.partition("/")
    try:
        return Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QPoly:
    """Polynomial in the formal parameter q with integer coefficients.

    Coefficients are stored degree-ascending and trimmed, so the zero
    polynomial has no coefficients at all.  Plain ``int`` operands are
    coerced, which keeps matrix code agnostic about its scalar ring.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def q(cls) -> QPoly:
        return cls((0, 1))

    @staticmethod
    def _coerce(other) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly((other,))
        if isinstance(other, Fraction) and other.denominator == 1:
            return QPoly((other.numerator,))
        return None

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __add__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QPoly(a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> QPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly((1,))
        for _ in range(k):
            result = result * self
        return result

    def specialize(self, q0: Fraction | int) -> Fraction:
        """Evaluate at ``q = q0`` exactly (Horner)."""
        q0 = Fraction(q0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    __call__ = specialize

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable[str | int]) -> QPoly:
        return cls(int(c) for c in data)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            mono = "" if deg == 0 else ("q" if deg == 1 else f"q^{deg}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


q = QPoly.q()


def specialize(p: QPoly | int | Fraction, q0: Fraction | int) -> Fraction:
    if isinstance(p, QPoly):
        return p.specialize(q0)
    return Fraction(p)


def scalar_to_json(x) -> str | list[str]:
    if isinstance(x, QPoly):
        return x.to_json()
    return format_rational(x)
