"""Step sizes, step letters and legality modes shared by every module."""

import enum
import math
from dataclasses import dataclass

UP = "U"
DOWN = "D"


class LegalityMode(enum.Enum):
    STRICT = "strict"
    MODM = "modm"

    @classmethod
    def parse(cls, text):
        try:
            return cls(text.lower())
        except ValueError:
            raise ValueError(f"unknown legality mode {text!r} (expected 'strict' or 'modm')") from None


@dataclass(frozen=True)
class Params:
    """Up-step size ``a`` and down-step size ``b``; ``m = a + b`` is the
    circumference of the cylinder."""

    a: int
    b: int

    def __post_init__(self):
        for name in ("a", "b"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    @property
    def m(self) -> int:
        return self.a + self.b

    @property
    def gcd(self) -> int:
        return math.gcd(self.a, self.b)

    @property
    def coprime(self) -> bool:
        return self.gcd == 1

    @property
    def laps_per_round(self) -> int:
        """Number of lap cycles from the origin, C(a+b, a)."""
        return math.comb(self.m, self.a)

    def delta(self, step: str) -> int:
        if step == UP:
            return self.a
        if step == DOWN:
            return -self.b
        raise ValueError(f"invalid step {step!r}")

    def default_mode(self) -> LegalityMode:
        return LegalityMode.STRICT if self.coprime else LegalityMode.MODM
