"""Exact scalar fields: the rationals and prime fields of odd characteristic.

Rational scalars are plain :class:`fractions.Fraction` values. Prime-field
scalars are :class:`Fp` residues carrying their modulus. Both support the
ordinary arithmetic operators, so the linear algebra in :mod:`rankspaces.linalg`
is written once for either field.

    >>> F = PrimeField(5)
    >>> F(3) * F(2)
    Fp(1, 5)
    >>> QQ.parse("-6/4")
    Fraction(-3, 2)
    >>> QQ.format(QQ.parse("4/2"))
    '2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from random import Random
from typing import Any, Union

from .errors import FieldMismatch, ReductionError, ScalarParseError

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")
_RESIDUE_RE = re.compile(r"^\s*(-?\d+)(?:\s+mod\s+(\d+))?\s*$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for q in range(3, isqrt(n) + 1, 2):
        if n % q == 0:
            return False
    return True


class Fp:
    """A residue class modulo an odd prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other: Any) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatch(f"cannot mix F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Fp(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"division by zero in F_{self.p}")
            return Fp(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (other - self.v) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return f"{self.v} mod {self.p}"


Scalar = Union[Fraction, Fp]


class Rationals:
    """The field Q with exact :class:`~fractions.Fraction` values."""

    characteristic = 0
    tag = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __call__(self, x: Any) -> Fraction:
        if isinstance(x, Fp):
            raise FieldMismatch("cannot lift a prime-field residue to Q")
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def parse(self, s: str) -> Fraction:
        if isinstance(s, bool):
            raise ScalarParseError(f"invalid rational scalar {s!r}")
        if isinstance(s, int):
            return Fraction(s)
        m = _RATIONAL_RE.match(s) if isinstance(s, str) else None
        if m is None:
            raise ScalarParseError(f"invalid rational scalar {s!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ScalarParseError(f"zero denominator in {s!r}")
        return Fraction(num, den)

    def format(self, x: Fraction) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def contains(self, x: Any) -> bool:
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def random(self, rng: Random, bound: int = 50) -> Fraction:
        return Fraction(rng.randint(-bound, bound))

    def elements(self):
        raise TypeError("Q is infinite")

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for an odd prime p."""

    def __init__(self, p: int):
        if not isinstance(p, int) or p == 2 or not is_prime(p):
            raise ValueError(f"modulus must be an odd prime, got {p!r}")
        self.p = p
        self.characteristic = p
        self.tag = f"Fp:{p}"

    @property
    def zero(self) -> Fp:
        return Fp(0, self.p)

    @property
    def one(self) -> Fp:
        return Fp(1, self.p)

    def __call__(self, x: Any) -> Fp:
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatch(f"cannot move F_{x.p} residue into F_{self.p}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return reduce_mod(x, self)
        return Fp(int(x), self.p)

    def parse(self, s: str) -> Fp:
        if isinstance(s, bool):
            raise ScalarParseError(f"invalid F_{self.p} scalar {s!r}")
        if isinstance(s, int):
            return Fp(s, self.p)
        m = _RESIDUE_RE.match(s) if isinstance(s, str) else None
        if m is None:
            raise ScalarParseError(f"invalid F_{self.p} scalar {s!r}")
        if m.group(2) is not None and int(m.group(2)) != self.p:
            raise ScalarParseError(f"modulus in {s!r} conflicts with F_{self.p}")
        return Fp(int(m.group(1)), self.p)

    def format(self, x: Fp) -> str:
        return f"{self(x).v} mod {self.p}"

    def contains(self, x: Any) -> bool:
        return isinstance(x, Fp) and x.p == self.p

    def random(self, rng: Random, bound: int = 0) -> Fp:
        return Fp(rng.randrange(self.p), self.p)

    def elements(self):
        return [Fp(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


Field = Union[Rationals, PrimeField]

QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``; also accepts the CLI spellings ``q``/``fp:<p>``."""
    t = tag.strip()
    if t.lower() == "q":
        return QQ
    if t.lower().startswith("fp:"):
        try:
            p = int(t[3:])
        except ValueError:
            raise ValueError(f"bad field tag {tag!r}") from None
        return GF(p)
    raise ValueError(f"bad field tag {tag!r}")


def reduce_mod(x: Fraction | int, F: PrimeField) -> Fp:
    x = Fraction(x)
    if x.denominator % F.p == 0:
        raise ReductionError(
            f"denominator of {x} is divisible by {F.p}; choose a different prime"
        )
    return Fp(x.numerator * pow(x.denominator, -1, F.p), F.p)
