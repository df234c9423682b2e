from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict

from sparsekron.utils.config import ConfigurableMixin

# Ring elements are plain Python numbers: `int` for the integers and for F_q
# (canonical residue in [0, q-1]), `fractions.Fraction` for the rationals used
# internally as the fraction field of the integers.
RingElement = Any


class RingKind(str, Enum):
    INTEGERS = "zz"
    PRIME_FIELD = "fq"
    RATIONALS = "qq"


class RingDescriptor(BaseModel):
    kind: RingKind
    modulus: Optional[int] = None
    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        if self.kind is RingKind.PRIME_FIELD:
            return f"fq:{self.modulus}"
        return self.kind.value


class Ring(ABC, ConfigurableMixin):
    """
    An exact coefficient ring. Instances are immutable and compare equal when
    their descriptors do, so they are safe to share between threads.
    """

    @property
    @abstractmethod
    def descriptor(self) -> RingDescriptor:
        pass

    @property
    @abstractmethod
    def size(self) -> Optional[int]:
        """Number of elements, `None` when infinite."""
        pass

    @property
    def is_field(self) -> bool:
        return False

    @abstractmethod
    def normalize(self, a: RingElement) -> RingElement:
        pass

    @abstractmethod
    def fraction_field(self) -> "Ring":
        pass

    @abstractmethod
    def from_fraction_field(self, a: RingElement) -> RingElement:
        """
        Map an element of `fraction_field()` back into this ring.

        Raises:
            ValueError: if the element has no preimage (a proper fraction).
        """
        pass

    def zero(self) -> RingElement:
        return self.normalize(0)

    def one(self) -> RingElement:
        return self.normalize(1)

    def is_zero(self, a: RingElement) -> bool:
        return a == 0

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        return self.normalize(a + b)

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        return self.normalize(a - b)

    def neg(self, a: RingElement) -> RingElement:
        return self.normalize(-a)

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        return self.normalize(a * b)

    def pow(self, a: RingElement, e: int) -> RingElement:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        return self.normalize(a ** e)

    def div(self, a: RingElement, b: RingElement) -> RingElement:
        raise ArithmeticError(f"{self} is not a field")

    def inv(self, a: RingElement) -> RingElement:
        return self.div(self.one(), a)

    def format(self, a: RingElement) -> str:
        return str(a)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.descriptor == other.descriptor

    def __hash__(self) -> int:
        return hash(self.descriptor)

    def __str__(self) -> str:
        return str(self.descriptor)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.descriptor})"
