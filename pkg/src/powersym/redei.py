"""The Rédei triple symbol [p1, p2, p3] for primes p = 1 mod 4 with all
mutual Legendre symbols equal to 1.

The symbol is evaluated by a residue formula: with s^2 = p1 mod p3 and
alpha = x + y*sqrt(p1) from the normalized ternary solution, the value is
the Legendre symbol of x + s*y modulo p3.  A root-counting test of the
quartic satisfied by sqrt(alpha) serves as an independent oracle.
"""

from dataclasses import dataclass

from .arith import (DEFAULT_TERNARY_BOUND, TernarySolution, is_prime,
                    legendre_symbol, solve_legendre_ternary, sqrt_mod_p)
from .eisenstein import ResidueField
from .errors import Degenerate, DistinctnessViolated, NotAdmissible
from .fpoly import count_distinct_roots
from .symbol import SymbolValue


@dataclass(frozen=True)
class RedeiCertificate:
    p1: int
    p2: int
    sol: TernarySolution

    @property
    def x(self):
        return self.sol.x

    @property
    def y(self):
        return self.sol.y

    @property
    def z(self):
        return self.sol.z

    def alpha_str(self):
        sign = "+" if self.y >= 0 else "-"
        return f"{self.x}{sign}{abs(self.y)}*sqrt({self.p1})"

    def to_json(self):
        return {"p1": self.p1, "p2": self.p2, "x": self.x, "y": self.y,
                "z": self.z, "alpha": self.alpha_str()}


def redei_admissible(p1, p2, p3):
    ps = (p1, p2, p3)
    if len(set(ps)) != 3:
        raise DistinctnessViolated(f"primes must be distinct: {ps}")
    if any(not is_prime(p) or p % 4 != 1 for p in ps):
        return False
    return all(legendre_symbol(a, b) == 1 for a in ps for b in ps if a != b)


def construct_alpha(p1, p2, bound=DEFAULT_TERNARY_BOUND):
    return RedeiCertificate(p1, p2, solve_legendre_ternary(p1, p2, bound))


def redei_symbol(p1, p2, p3, bound=DEFAULT_TERNARY_BOUND, cert=None,
                 other_root=False):
    """Rédei symbol as SymbolValue(m=2); exponent 1 means -1.

    ``other_root`` evaluates with p3 - s instead of s.
    """
    if not redei_admissible(p1, p2, p3):
        raise NotAdmissible(f"({p1}, {p2}, {p3}) is not an admissible triple")
    if cert is None:
        cert = construct_alpha(p1, p2, bound)
    s = sqrt_mod_p(p1, p3)
    if other_root:
        s = p3 - s
    value = legendre_symbol(cert.x + s * cert.y, p3)
    if value == 0:
        value = legendre_symbol(cert.x - s * cert.y, p3)
    if value == 0:
        raise Degenerate(f"{p3} divides both x + sy and x - sy; enlarge the bound")
    return SymbolValue(2, 0 if value == 1 else 1, n=3)


def redei_splitting_oracle(cert, p3):
    """Complete splitting of p3 in Q(sqrt p1, sqrt p2, sqrt alpha): both
    quadratic characters trivial and T^4 - 2xT^2 + p2 z^2 has four distinct
    roots mod p3."""
    if legendre_symbol(cert.p1, p3) != 1 or legendre_symbol(cert.p2, p3) != 1:
        return False
    F = ResidueField.prime_field(p3)
    quartic = [F.elem(cert.p2 * cert.z * cert.z), F.zero, F.elem(-2 * cert.x),
               F.zero, F.one]
    return count_distinct_roots(quartic, F) == 4
