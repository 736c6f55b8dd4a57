"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are ordinary values supporting ``+ - *`` (``fractions.Fraction`` for
the rationals, :class:`Fp` residues for prime fields).  A field object is the
shared context that constructs, inverts and renders scalars; it is attached
to an algebra and never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPrimeModulusError, ZeroDenominatorError

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every input below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Fp:
    """Residue in F_p, canonical representative in 0..p-1."""

    value: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> "Fp":
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed prime fields F_%d and F_%d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.value, self.p)

    def inverse(self) -> "Fp":
        if self.value == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return Fp(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


class RationalField:
    """The field of rational numbers with exact Fraction arithmetic."""

    name = "q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError("cannot interpret %r as a rational scalar" % (x,))

    def from_ratio(self, num: int, den: int | None = None):
        if den is None:
            return Fraction(num)
        if den == 0:
            raise ZeroDenominatorError("denominator is zero")
        return Fraction(num, den)

    def inv(self, x):
        return 1 / x

    def render(self, x) -> str:
        return str(x)

    def sample(self, rng):
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "RationalField()"


class PrimeField:
    """The prime field F_p for a given prime modulus p."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulusError("modulus %d is not prime" % p)
        self.p = p
        self.name = "fp:%d" % p

    def zero(self):
        return Fp(0, self.p)

    def one(self):
        return Fp(1, self.p)

    def coerce(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise TypeError("scalar from F_%d used in F_%d" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        raise TypeError("cannot interpret %r as an F_%d scalar" % (x, self.p))

    def from_ratio(self, num: int, den: int | None = None):
        if den is None:
            return Fp(num, self.p)
        if den % self.p == 0:
            raise ZeroDenominatorError("denominator is zero modulo %d" % self.p)
        return Fp(num, self.p) * Fp(den, self.p).inverse()

    def inv(self, x):
        return self.coerce(x).inverse()

    def render(self, x) -> str:
        return str(self.coerce(x).value)

    def sample(self, rng):
        return Fp(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return "PrimeField(%d)" % self.p


QQ = RationalField()


def field_from_spec(spec: str):
    """Build a field from a CLI-style selector: ``q`` or ``fp:<prime>``."""
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise NonPrimeModulusError("bad field selector %r" % spec)
        return PrimeField(p)
    raise NonPrimeModulusError("bad field selector %r (expected q or fp:<p>)" % spec)
