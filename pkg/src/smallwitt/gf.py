"""Prime field arithmetic for the small primes the plane builder supports."""

from __future__ import annotations

from dataclasses import dataclass

SUPPORTED_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class FieldElement:
    value: int
    p: int

    def __post_init__(self):
        if self.p not in SUPPORTED_PRIMES:
            raise ValueError(f"unsupported modulus {self.p}; expected one of {SUPPORTED_PRIMES}")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def __truediv__(self, other):
        return self * ff_inv(self._coerce(other))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def ff_inv(x: FieldElement) -> FieldElement:
    """Multiplicative inverse in GF(p)."""
    if x.value == 0:
        raise ZeroDivisionError("no inverse of zero")
    return FieldElement(pow(x.value, x.p - 2, x.p), x.p)
