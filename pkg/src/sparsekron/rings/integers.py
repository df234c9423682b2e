from fractions import Fraction
from typing import Optional

from .base import Ring, RingDescriptor, RingElement, RingKind


class Integers(Ring):
    """The integers with unbounded precision."""

    ALIAS = "zz"

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor(kind=RingKind.INTEGERS)

    @property
    def size(self) -> Optional[int]:
        return None

    def normalize(self, a: RingElement) -> RingElement:
        if isinstance(a, Fraction):
            return self.from_fraction_field(a)
        return int(a)

    def fraction_field(self) -> Ring:
        return Rationals()

    def from_fraction_field(self, a: RingElement) -> RingElement:
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError(f"{a} is not an integer")
        return a.numerator

    def pow(self, a: RingElement, e: int) -> RingElement:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return pow(int(a), e)


class Rationals(Ring):
    """Exact rationals; used as the fraction field of `Integers`."""

    ALIAS = "qq"

    @property
    def descriptor(self) -> RingDescriptor:
        return RingDescriptor(kind=RingKind.RATIONALS)

    @property
    def size(self) -> Optional[int]:
        return None

    @property
    def is_field(self) -> bool:
        return True

    def normalize(self, a: RingElement) -> RingElement:
        return Fraction(a)

    def fraction_field(self) -> Ring:
        return self

    def from_fraction_field(self, a: RingElement) -> RingElement:
        return Fraction(a)

    def div(self, a: RingElement, b: RingElement) -> RingElement:
        if b == 0:
            raise ZeroDivisionError("division by zero in qq")
        return Fraction(a) / Fraction(b)
