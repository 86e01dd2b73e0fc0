"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational coefficients are plain `fractions.Fraction` values (always stored
reduced, denominator positive).  Prime-field coefficients are `ModInt`
wrappers holding a residue in [0, p).  A field object carries the context
(characteristic, canonical constructors); arithmetic on elements goes through
ordinary operators so polynomial code is field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StructureError

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every modulus below 3.3e24."""
    if p < 2:
        return False
    for q in _MR_WITNESSES:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class ModInt:
    """Residue in [0, p) with field arithmetic mod a prime p."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        self.value = value % modulus
        self.modulus = modulus

    def _check(self, other):
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise StructureError(
                    f"mixed moduli {self.modulus} and {other.modulus}")
            return other
        raise StructureError(f"cannot mix prime-field and {type(other).__name__} values")

    def __add__(self, other):
        other = self._check(other)
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return ModInt(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __truediv__(self, other):
        other = self._check(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.modulus}")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return ModInt(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "ModInt":
        if self.value == 0:
            raise ZeroDivisionError(f"inversion of zero in F_{self.modulus}")
        return ModInt(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        return (isinstance(other, ModInt) and other.modulus == self.modulus
                and other.value == self.value)

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class RationalField:
    """The rational numbers; elements are reduced `Fraction` values."""

    characteristic = 0

    def normalize(self, num: int, den: int = 1) -> Fraction:
        """Canonical reduced rational num/den; den must be nonzero."""
        return Fraction(num, den)

    def invert(self, a) -> Fraction:
        a = self.coerce(a)
        if a == 0:
            raise ZeroDivisionError("inversion of zero rational")
        return 1 / a

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise StructureError(f"cannot coerce {type(v).__name__} into QQ")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field with p elements, p prime (checked at construction)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def normalize(self, num: int, den: int = 1) -> ModInt:
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in F_{self.p}")
        return ModInt(num, self.p) / ModInt(den, self.p)

    def invert(self, a) -> ModInt:
        return self.coerce(a).inverse()

    def coerce(self, v) -> ModInt:
        if isinstance(v, ModInt):
            if v.modulus != self.p:
                raise StructureError(f"residue mod {v.modulus} used in F_{self.p}")
            return v
        if isinstance(v, int):
            return ModInt(v, self.p)
        raise StructureError(f"cannot coerce {type(v).__name__} into F_{self.p}")

    @property
    def zero(self):
        return ModInt(0, self.p)

    @property
    def one(self):
        return ModInt(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()
