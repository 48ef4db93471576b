"""Arithmetic in the Eisenstein integers Z[w], w = zeta_3.

Elements are pairs ``a + b*w`` with ``w^2 = -1 - w``.  Besides the ring
operations this module provides prime normalization (the unique associate
congruent to 1 modulo 3*sqrt(-3)), the link-type obstruction test over
Q(zeta_3), residue fields of primes not above 3, the cubic residue
character, and cube roots inside residue fields.
"""

import re
from dataclasses import dataclass
from math import isqrt

from .arith import is_prime, sqrt_mod_p
from .errors import (DividesArgument, NotACube, NotNineAdmissible, NotPrime,
                     ParseError, Ramified)


@dataclass(frozen=True, order=True)
class EisInt:
    a: int
    b: int = 0

    @classmethod
    def coerce(cls, v):
        if isinstance(v, EisInt):
            return v
        if isinstance(v, int):
            return cls(v, 0)
        raise TypeError(f"cannot interpret {v!r} as an Eisenstein integer")

    def __add__(self, other):
        o = EisInt.coerce(other)
        return EisInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = EisInt.coerce(other)
        return EisInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return EisInt.coerce(other) - self

    def __neg__(self):
        return EisInt(-self.a, -self.b)

    def __mul__(self, other):
        o = EisInt.coerce(other)
        bd = self.b * o.b
        return EisInt(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not Eisenstein integers")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self):
        return EisInt(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def divides(self, other):
        return exact_div(EisInt.coerce(other), self) is not None

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*w"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*w"

    def to_json(self):
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["a"]), int(obj.get("b", 0)))

    @classmethod
    def parse(cls, text):
        """Parse forms like ``5+2*w``, ``-w``, ``3 - w``, ``17``."""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty Eisenstein integer")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ParseError(f"cannot parse {text!r}")
        a = b = 0
        for term in terms:
            m = re.fullmatch(r"([+-]?)(\d*)\*?w", term)
            if m:
                coeff = int(m.group(2)) if m.group(2) else 1
                b += -coeff if m.group(1) == "-" else coeff
                continue
            try:
                a += int(term)
            except ValueError:
                raise ParseError(f"cannot parse {text!r}") from None
        return cls(a, b)


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
ZETA = EisInt(0, 1)
SQRT_M3 = EisInt(1, 2)  # 1 + 2w squared is -3
UNITS = (ONE, -ONE, ZETA, -ZETA, ZETA * ZETA, -(ZETA * ZETA))


def exact_div(u, v):
    """u / v in Z[w], or None when v does not divide u."""
    n = v.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Z[w]")
    num = u * v.conj()
    if num.a % n or num.b % n:
        return None
    return EisInt(num.a // n, num.b // n)


def eis_mul(u, v):
    return EisInt.coerce(u) * EisInt.coerce(v)


def eis_norm(u):
    return EisInt.coerce(u).norm()


def is_unit(u):
    return u.norm() == 1


def mod_3sqrt3(u):
    """Canonical representative of u modulo (3*sqrt(-3)).

    The ideal is the lattice spanned by (3, 6) and (0, 9) in (a, b)
    coordinates, so representatives are (a mod 3, b mod 9).
    """
    u = EisInt.coerce(u)
    k = u.a // 3
    return EisInt(u.a - 3 * k, (u.b - 6 * k) % 9)


def congruent_mod_3sqrt3(u, v):
    return mod_3sqrt3(EisInt.coerce(u) - EisInt.coerce(v)) == ZERO


def residues_mod_3sqrt3():
    """The 27 classes of Z[w]/(3*sqrt(-3))."""
    return [EisInt(a, b) for a in range(3) for b in range(9)]


@dataclass(frozen=True)
class EisPrime:
    pi: EisInt
    q: int
    p: int
    kind: str  # "split" or "inert"

    @property
    def nine_admissible(self):
        return self.q % 9 == 1

    def to_json(self):
        return {"pi": self.pi.to_json(), "norm": self.q, "p": self.p,
                "kind": self.kind}

    def __str__(self):
        return f"({self.pi})"


def _prime_data(u):
    """(rational prime below, kind) if u generates a prime ideal, else None."""
    n = u.norm()
    if n < 2:
        return None
    if is_prime(n):
        return n, ("ramified" if n == 3 else "split")
    r = isqrt(n)
    if r * r == n and r % 3 == 2 and is_prime(r):
        if u.a % r == 0 and u.b % r == 0:
            return r, "inert"
    return None


def split_generator(p):
    """A generator a + b*w of norm p (p = 1 mod 3), first in b then a order."""
    if p % 3 != 1 or not is_prime(p):
        raise NotPrime(f"{p} is not a prime = 1 mod 3")
    b = 1
    while 3 * b * b <= 4 * p:
        disc = 4 * p - 3 * b * b
        r = isqrt(disc)
        if r * r == disc and (b + r) % 2 == 0:
            return EisInt((b + r) // 2, b)
        b += 1
    raise AssertionError(f"no representation of {p} by a^2 - ab + b^2")


def _to_generator(gen):
    if isinstance(gen, int):
        p = abs(gen)
        if not is_prime(p):
            raise NotPrime(f"{gen} is not a rational prime")
        if p == 3:
            raise Ramified("3 ramifies in Z[w]")
        if p % 3 == 2:
            return EisInt(gen, 0)
        return split_generator(p)
    return EisInt.coerce(gen)


def normalize_prime(gen, require_nine=True):
    """Normalized generator of the prime ideal generated by ``gen``.

    ``gen`` is an EisInt or a rational prime (inert primes are taken as is;
    split ones get a generator from :func:`split_generator`).  With norm
    = 1 mod 9 the result is the unique associate = 1 mod (3*sqrt(-3)).
    Otherwise ``require_nine=False`` falls back to the unique associate
    = 1 mod 3.
    """
    u = _to_generator(gen)
    data = _prime_data(u)
    if data is None:
        raise NotPrime(f"{u} does not generate a prime ideal")
    p, kind = data
    if kind == "ramified":
        raise Ramified(f"{u} lies above 3")
    q = u.norm()
    if q % 9 == 1:
        hits = [e * u for e in UNITS if congruent_mod_3sqrt3(e * u, ONE)]
    elif require_nine:
        raise NotNineAdmissible(f"norm {q} is not 1 mod 9")
    else:
        hits = [e * u for e in UNITS
                if (e * u - ONE).a % 3 == 0 and (e * u - ONE).b % 3 == 0]
    if len(hits) != 1:
        raise AssertionError(f"normalization of {u} is not unique: {hits}")
    return EisPrime(hits[0], q, p, kind)


def unit_multiples_congruent_to_one(u):
    """How many of the six associates of u are = 1 mod (3*sqrt(-3))."""
    return sum(1 for e in UNITS if congruent_mod_3sqrt3(e * u, ONE))


def b_s_vanishes(primes):
    """Link-type obstruction over Q(zeta_3) with l = 3: trivial exactly when
    some prime has norm = 4 or 7 mod 9."""
    return any(P.q % 9 in (4, 7) for P in primes)


def iter_primes_by_norm(limit):
    """All primes of Z[w] not above 3 with norm < limit, one generator per
    ideal (conjugate split primes both appear), ordered by norm."""
    out = []
    for p in range(2, limit):
        if p == 3 or not is_prime(p):
            continue
        if p % 3 == 2:
            if p * p < limit:
                out.append((p * p, EisInt(p)))
        else:
            g = split_generator(p)
            out.append((p, g))
            out.append((p, g.conj()))
    out.sort(key=lambda t: (t[0], t[1]))
    return [g for _, g in out]


def auxiliary_prime(include_inert=False):
    """Split prime of smallest norm with norm = 4 or 7 mod 9 (norm 7),
    normalized = 1 mod 3.

    ``include_inert`` also admits inert primes, which gives 2 (norm 4).
    """
    p = 2
    while True:
        if is_prime(p) and p != 3:
            if p % 3 == 1 and p % 9 in (4, 7):
                return normalize_prime(split_generator(p), require_nine=False)
            if p % 3 == 2 and include_inert and (p * p) % 9 in (4, 7):
                return normalize_prime(p, require_nine=False)
        p += 1


class ResidueField:
    """Finite field O/P for a prime P of Z[w] not above 3.

    Elements are tuples: ``(c,)`` for a prime field, ``(c0, c1)`` meaning
    c0 + c1*T with T^2 + T + 1 = 0 for the field of p^2 elements.
    """

    def __init__(self, p, degree, omega, prime=None):
        self.p = p
        self.degree = degree
        self.q = p ** degree
        self.omega = omega
        self.prime = prime
        self.zero = (0,) * degree
        self.one = (1,) + (0,) * (degree - 1)

    @classmethod
    def prime_field(cls, p):
        return cls(p, 1, None)

    def __repr__(self):
        return f"ResidueField(p={self.p}, q={self.q}, omega={self.omega})"

    def elem(self, *coords):
        c = tuple(x % self.p for x in coords)
        return c + (0,) * (self.degree - len(c))

    def add(self, u, v):
        p = self.p
        return tuple((x + y) % p for x, y in zip(u, v))

    def sub(self, u, v):
        p = self.p
        return tuple((x - y) % p for x, y in zip(u, v))

    def neg(self, u):
        return tuple(-x % self.p for x in u)

    def mul(self, u, v):
        p = self.p
        if self.degree == 1:
            return (u[0] * v[0] % p,)
        a, b = u
        c, d = v
        bd = b * d
        return ((a * c - bd) % p, (a * d + b * c - bd) % p)

    def pow(self, u, e):
        if e < 0:
            u, e = self.inv(u), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, u)
            u = self.mul(u, u)
            e >>= 1
        return result

    def inv(self, u):
        if self.is_zero(u):
            raise ZeroDivisionError("inverse of zero in residue field")
        return self.pow(u, self.q - 2)

    def is_zero(self, u):
        return not any(u)

    def encode(self, u):
        return sum(c * self.p ** i for i, c in enumerate(u))

    def decode(self, n):
        out = []
        for _ in range(self.degree):
            n, c = divmod(n, self.p)
            out.append(c)
        return tuple(out)

    def elements(self):
        for n in range(self.q):
            yield self.decode(n)

    def reduce(self, u):
        """Image of an Eisenstein integer (or rational integer)."""
        u = EisInt.coerce(u)
        if self.degree == 1:
            w = self.omega[0] if self.omega is not None else None
            if w is None:
                if u.b % self.p:
                    raise ValueError("prime field has no image of w")
                return (u.a % self.p,)
            return ((u.a + u.b * w) % self.p,)
        return (u.a % self.p, u.b % self.p)

    def scale(self, k, u):
        return tuple(k * x % self.p for x in u)


def residue_field_of(P):
    """Residue field of ``P`` with ``omega`` the image of w."""
    if not isinstance(P, EisPrime):
        P = normalize_prime(P, require_nine=False)
    if P.kind == "inert":
        return ResidueField(P.p, 2, (0, 1), prime=P)
    p = P.p
    if p == 3:
        raise Ramified("no residue field construction above 3")
    s = sqrt_mod_p(-3, p)
    inv2 = (p + 1) // 2
    for root in (s, p - s):
        w = (-1 + root) * inv2 % p
        if (P.pi.a + P.pi.b * w) % p == 0:
            return ResidueField(p, 1, (w,), prime=P)
    raise AssertionError(f"no root of T^2+T+1 mod {p} kills {P.pi}")


def reduce(u, F):
    return F.reduce(u)


def _character_exponent(F, value):
    w = F.omega
    w2 = F.mul(w, w)
    if value == F.one:
        return 0
    if value == w:
        return 1
    if value == w2:
        return 2
    raise AssertionError(f"{value} is not a cube root of unity in {F}")


def character_of_element(x, F):
    """t with x^((q-1)/3) = omega^t for a nonzero field element x."""
    if F.is_zero(x):
        raise DividesArgument("argument reduces to zero")
    return _character_exponent(F, F.pow(x, (F.q - 1) // 3))


def cubic_character(u, P, F=None):
    """Cubic residue character of u modulo P as an exponent in {0, 1, 2}."""
    if F is None:
        F = residue_field_of(P)
    return character_of_element(F.reduce(u), F)


def _smallest_noncube(F):
    e = (F.q - 1) // 3
    for n in range(2, F.q):
        g = F.decode(n)
        if F.pow(g, e) != F.one:
            return g
    raise AssertionError("no non-cube found")


def cube_root_in_field(a, F):
    """Some r with r^3 = a, via the cube-root analogue of Tonelli-Shanks.

    Write q - 1 = 3^s * t with 3 not dividing t.  x = a^e with 3e = 1 mod t
    leaves an error x^3/a in the 3-Sylow subgroup, which is removed using a
    discrete logarithm base g^t for the smallest non-cube g.
    """
    q = F.q
    if (q - 1) % 3:
        raise NotACube(f"cube roots are not handled for q = {q}")
    if F.is_zero(a) or F.pow(a, (q - 1) // 3) != F.one:
        raise NotACube(f"{a} is not a nonzero cube in {F}")
    s, t = 0, q - 1
    while t % 3 == 0:
        t //= 3
        s += 1
    e = pow(3, -1, t) if t > 1 else 0
    x = F.pow(a, e)
    if s == 1:
        # The 3-Sylow part of a cube is trivial when q != 1 mod 9.
        return x
    err = F.mul(F.pow(x, 3), F.inv(a))
    c = F.pow(_smallest_noncube(F), t)
    zeta = F.pow(c, 3 ** (s - 1))
    roots = [F.one, zeta, F.mul(zeta, zeta)]
    c_inv = F.inv(c)
    j = 0
    for k in range(s):
        probe = F.mul(err, F.pow(c_inv, j))
        digit = roots.index(F.pow(probe, 3 ** (s - 1 - k)))
        j += digit * 3 ** k
    if j % 3:
        raise AssertionError("discrete log of a cube error is not divisible by 3")
    y = F.pow(c_inv, j // 3)
    return F.mul(x, y)
