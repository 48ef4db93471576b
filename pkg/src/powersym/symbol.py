from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class SymbolValue:
    """Root of unity zeta_m^exponent, kept as exponents (never complex)."""
    m: int
    exponent: int
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % self.m)

    @property
    def is_trivial(self):
        return self.exponent == 0

    @property
    def sign(self):
        """+1/-1 reading for m = 2."""
        if self.m != 2:
            raise ValueError("sign is only defined for m = 2")
        return -1 if self.exponent else 1

    @property
    def massey_exponent(self):
        if self.n is None:
            return None
        return (-1) ** self.n * self.exponent % self.m

    def __mul__(self, other):
        if self.m != other.m:
            raise ValueError("symbols of different orders")
        return SymbolValue(self.m, self.exponent + other.exponent)

    def inverse(self):
        return SymbolValue(self.m, -self.exponent, self.n)

    def __str__(self):
        if self.exponent == 0:
            return "1"
        if self.m == 2:
            return "-1"
        base = f"zeta{self.m}"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"

    def to_json(self):
        out = {"symbol": str(self), "exponent": self.exponent, "m": self.m}
        if self.m == 2:
            out["value"] = self.sign
        if self.n is not None:
            out["massey_exponent"] = self.massey_exponent
        return out
