"""Rational-integer arithmetic: primality, Legendre symbols, square roots
modulo a prime, and a bounded solver for x^2 - p1*y^2 - p2*z^2 = 0."""

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import BoundExceeded, InvalidModulus, NonResidue, NotAdmissible

DEFAULT_TERNARY_BOUND = 10_000

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                 59, 61, 67, 71, 73, 79, 83, 89, 97)


def mod_pow(a, e, n):
    if n < 1:
        raise InvalidModulus(f"modulus must be >= 1, got {n}")
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return pow(a, e, n)


def _strong_probable_prime(n, a):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    """Primality test.

    Deterministic below 3.3e24 (fixed witness set); above that a strong
    probable-prime test over the first prime bases plus trial division.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    witnesses = _MR_WITNESSES
    if n >= _MR_DETERMINISTIC_LIMIT:
        witnesses = _SMALL_PRIMES
    return all(_strong_probable_prime(n, a) for a in witnesses)


def _check_odd_prime(p):
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise InvalidModulus(f"{p} is not an odd prime")


def legendre_symbol(a, p):
    """Legendre symbol (a/p) by Euler's criterion."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def sqrt_mod_p(a, p):
    """Tonelli-Shanks square root; returns the root in [1, (p-1)/2]."""
    if legendre_symbol(a, p) != 1:
        raise NonResidue(f"{a} is not a nonzero square mod {p}")
    a %= p
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return min(r, p - r)


@dataclass(frozen=True)
class TernarySolution:
    x: int
    y: int
    z: int
    p1: int
    p2: int

    def check(self):
        """Return the list of violated invariants (empty when valid)."""
        bad = []
        if self.x ** 2 - self.p1 * self.y ** 2 - self.p2 * self.z ** 2 != 0:
            bad.append("equation")
        if gcd(gcd(self.x, self.y), self.z) != 1:
            bad.append("gcd")
        if self.y % 2 != 0 or (self.x - self.y) % 4 != 1:
            bad.append("normalization")
        return bad


def solve_legendre_ternary(p1, p2, bound=DEFAULT_TERNARY_BOUND):
    """First normalized solution of x^2 = p1*y^2 + p2*z^2.

    Enumerates z = 1..bound, then even y = 2..bound, and keeps the sign of x
    that makes x - y = 1 mod 4.  Only y, z >= 0 are searched.
    """
    for p in (p1, p2):
        if not is_prime(p) or p % 4 != 1:
            raise NotAdmissible(f"{p} is not a prime = 1 mod 4")
    if p1 == p2:
        raise NotAdmissible("p1 and p2 must be distinct")
    if legendre_symbol(p1, p2) != 1 or legendre_symbol(p2, p1) != 1:
        raise NotAdmissible(f"({p1}/{p2}) or ({p2}/{p1}) is not 1")
    for z in range(1, bound + 1):
        base = p2 * z * z
        for y in range(2, bound + 1, 2):
            x2 = p1 * y * y + base
            x = isqrt(x2)
            if x * x != x2 or gcd(gcd(x, y), z) != 1:
                continue
            if (x - y) % 4 != 1:
                x = -x
            if (x - y) % 4 == 1:
                return TernarySolution(x, y, z, p1, p2)
    raise BoundExceeded(f"no normalized solution with y, z <= {bound}")
