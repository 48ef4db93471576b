"""Triple cubic residue symbol over Q(zeta_3).

Given normalized primes pi_1, pi_2, pi_3 (norms = 1 mod 9, all mutual cubic
characters trivial) the symbol is read off from theta = zeta^e alpha^2
tau(alpha), where alpha in Z[w][t], t^3 = pi_1, has norm +-pi_2: choose a cube
root r of pi_1 in the residue field of pi_3, evaluate theta at t = r, and
take its cubic character.

The congruence eta^3 = theta mod (3 sqrt(-3)) is decided in the basis
1, lam, lam^2 with lam = (t - 1)/sqrt(-3), which is integral at 3, so the
27^3 residues enumerated there exhaust O_K/(3 sqrt(-3)).
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from .eisenstein import (ONE, SQRT_M3, ZERO, ZETA, EisInt, EisPrime,
                         character_of_element, cube_root_in_field,
                         cubic_character, exact_div, mod_3sqrt3,
                         normalize_prime, residue_field_of, split_generator)
from .errors import (BoundExceeded, ContextMismatch, Degenerate,
                     NoWitness, NotAdmissible, NotCoprimeToThree,
                     ThetaVanishes)
from .fpoly import count_distinct_roots, is_squarefree
from .symbol import SymbolValue

DEFAULT_ALPHA_BOUND = 10

ZETA2 = ZETA * ZETA


@dataclass(frozen=True)
class CubicRingElem:
    """x + y*t + z*t^2 with t^3 = pi1."""
    x: EisInt
    y: EisInt
    z: EisInt
    pi1: EisInt = field(default=ONE)

    def __post_init__(self):
        for name in ("x", "y", "z", "pi1"):
            object.__setattr__(self, name, EisInt.coerce(getattr(self, name)))

    @classmethod
    def of(cls, value, pi1):
        return cls(EisInt.coerce(value), ZERO, ZERO, pi1)

    @property
    def coords(self):
        return (self.x, self.y, self.z)

    def _check(self, other):
        if not isinstance(other, CubicRingElem):
            other = CubicRingElem.of(other, self.pi1)
        if other.pi1 != self.pi1:
            raise ContextMismatch(f"t^3 = {self.pi1} versus t^3 = {other.pi1}")
        return other

    def __add__(self, other):
        o = self._check(other)
        return CubicRingElem(self.x + o.x, self.y + o.y, self.z + o.z, self.pi1)

    def __sub__(self, other):
        o = self._check(other)
        return CubicRingElem(self.x - o.x, self.y - o.y, self.z - o.z, self.pi1)

    def __neg__(self):
        return CubicRingElem(-self.x, -self.y, -self.z, self.pi1)

    def __mul__(self, other):
        return cubic_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e):
        result = CubicRingElem.of(1, self.pi1)
        for _ in range(e):
            result = result * self
        return result

    def is_rational_over_k(self):
        return self.y.is_zero() and self.z.is_zero()

    def __str__(self):
        return f"({self.x}) + ({self.y})*t + ({self.z})*t^2"

    def to_json(self):
        return {"x": self.x.to_json(), "y": self.y.to_json(),
                "z": self.z.to_json()}


def cubic_mul(u, v):
    v = u._check(v)
    p = u.pi1
    x = u.x * v.x + p * (u.y * v.z + u.z * v.y)
    y = u.x * v.y + u.y * v.x + p * (u.z * v.z)
    z = u.x * v.z + u.y * v.y + u.z * v.x
    return CubicRingElem(x, y, z, p)


def cubic_norm(u):
    """N(x + yt + zt^2) = x^3 + pi y^3 + pi^2 z^3 - 3 pi x y z."""
    p = u.pi1
    x, y, z = u.x, u.y, u.z
    return x ** 3 + p * y ** 3 + p * p * z ** 3 - 3 * p * x * y * z


def tau_conjugate(u):
    """The automorphism t -> w t."""
    return CubicRingElem(u.x, ZETA * u.y, ZETA2 * u.z, u.pi1)


# --- residues modulo (3 sqrt(-3)) -------------------------------------------

_RESIDUES = [EisInt(a, b) for a in range(3) for b in range(9)]
_INDEX = {r: i for i, r in enumerate(_RESIDUES)}


def _res(u):
    return _INDEX[mod_3sqrt3(u)]


_ADD = [[_res(a + b) for b in _RESIDUES] for a in _RESIDUES]
_MUL = [[_res(a * b) for b in _RESIDUES] for a in _RESIDUES]
_ZERO_R = _res(ZERO)
_ONE_R = _res(ONE)
_S_R = _res(SQRT_M3)


def _lam_constant(pi1):
    """c with lam^3 = c + lam + sqrt(-3) lam^2."""
    c = exact_div(ONE - pi1, 3 * SQRT_M3)
    if c is None:
        raise NotAdmissible(f"{pi1} is not = 1 mod (3 sqrt(-3))")
    return c


def to_lambda_basis(u):
    """Coordinates of x + yt + zt^2 in 1, lam, lam^2 (t = 1 + sqrt(-3) lam)."""
    s = SQRT_M3
    return (u.x + u.y + u.z, s * (u.y + 2 * u.z), -3 * u.z)


def _lam_mul(a, b, c_r):
    """Product in (O_k/(3 sqrt(-3)))[lam] with lam^3 = c + lam + s lam^2."""
    add, mul = _ADD, _MUL
    d = [_ZERO_R] * 5
    for i in range(3):
        for j in range(3):
            d[i + j] = add[d[i + j]][mul[a[i]][b[j]]]
    # lam^4 = s c + (c + s) lam - 2 lam^2
    lam4 = (mul[_S_R][c_r], add[c_r][_S_R], _res(EisInt(-2)))
    lam3 = (c_r, _ONE_R, _S_R)
    out = [d[0], d[1], d[2]]
    for k in range(3):
        out[k] = add[add[out[k]][mul[d[3]][lam3[k]]]][mul[d[4]][lam4[k]]]
    return tuple(out)


@lru_cache(maxsize=None)
def _cube_table(c_r):
    """Map from cube residues to a first witness, in enumeration order."""
    table = {}
    for eta in product(range(27), repeat=3):
        e3 = _lam_mul(_lam_mul(eta, eta, c_r), eta, c_r)
        table.setdefault(e3, eta)
    return table


def cube_condition(theta, hint=None):
    """Witness eta (lam-basis residue coordinates, EisInt triple) with
    eta^3 = theta mod (3 sqrt(-3)).

    ``hint`` (an element of Z[w][t]) is tried first, then 1; otherwise all
    27^3 residues are cubed.
    """
    if cubic_norm(theta).norm() % 3 == 0:
        raise NotCoprimeToThree("theta is not coprime to 3")
    c_r = _res(_lam_constant(theta.pi1))
    target = tuple(_res(v) for v in to_lambda_basis(theta))
    guesses = [] if hint is None else [tuple(_res(v) for v in to_lambda_basis(hint))]
    guesses.append((_ONE_R, _ZERO_R, _ZERO_R))
    for h in guesses:
        if _lam_mul(_lam_mul(h, h, c_r), h, c_r) == target:
            return tuple(_RESIDUES[i] for i in h)
    eta = _cube_table(c_r).get(target)
    if eta is None:
        raise NoWitness("theta is not a cube modulo (3 sqrt(-3))")
    return tuple(_RESIDUES[i] for i in eta)


def lambda_cube_matches(eta, theta):
    """Independent replay: eta^3 = theta mod (3 sqrt(-3)) in lam-basis."""
    c_r = _res(_lam_constant(theta.pi1))
    e = tuple(_res(v) for v in eta)
    return (_lam_mul(_lam_mul(e, e, c_r), e, c_r)
            == tuple(_res(v) for v in to_lambda_basis(theta)))


# --- alpha search -----------------------------------------------------------
#
# alpha must satisfy N(alpha) = pi_2 * beta^3 with beta in Z[w] prime to 3 pi_2,
# and (alpha) P^-1 must be a cube up to ideals of k.  The second condition is
# only at stake above primes q | beta that split in K_1; there the valuations
# of alpha at the three primes over q have to agree mod 3.

def _height(coords):
    return max(max(abs(c.a), abs(c.b)) for c in coords)


def _order_key(coords):
    """0 < 1 < -1 < 2 < -2 ... per coordinate slot."""
    return tuple(k for c in coords for v in (c.a, c.b) for k in (abs(v), v < 0))


def _rational_prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _primes_dividing(beta):
    """Generators of the primes of k dividing beta (beta prime to 3)."""
    for q in _rational_prime_factors(beta.norm()):
        gens = [EisInt(q)] if q % 3 == 2 else [split_generator(q)]
        if q % 3 == 1:
            gens.append(gens[0].conj())
        for g in gens:
            if g.divides(beta):
                yield g


class _Local:
    """O_k / q^K for a prime q of k: integers mod p^K (degree 1, w sent to a
    lifted root of T^2 + T + 1) or pairs a + b*w mod p^K (degree 2)."""

    def __init__(self, F, K):
        self.p, self.deg, self.mod = F.p, F.degree, F.p ** K
        self.K = K
        if self.deg == 1:
            w = F.omega[0]
            for _ in range(K.bit_length() + 1):
                w = (w - (w * w + w + 1) * pow(2 * w + 1, -1, self.mod)) % self.mod
            self.w = w

    def embed(self, u):
        u = EisInt.coerce(u)
        if self.deg == 1:
            return ((u.a + u.b * self.w) % self.mod,)
        return (u.a % self.mod, u.b % self.mod)

    def from_residue(self, r):
        return tuple(r)

    def add(self, u, v):
        return tuple((x + y) % self.mod for x, y in zip(u, v))

    def sub(self, u, v):
        return tuple((x - y) % self.mod for x, y in zip(u, v))

    def mul(self, u, v):
        if self.deg == 1:
            return (u[0] * v[0] % self.mod,)
        a, b = u
        c, d = v
        return ((a * c - b * d) % self.mod, (a * d + b * c - b * d) % self.mod)

    def inv(self, u):
        if self.deg == 1:
            return (pow(u[0], -1, self.mod),)
        a, b = u
        n = pow(a * a - a * b + b * b, -1, self.mod)
        return ((a - b) * n % self.mod, -b * n % self.mod)

    def val(self, u):
        v = self.K
        for c in u:
            if c:
                k = 0
                while c % self.p == 0:
                    c //= self.p
                    k += 1
                v = min(v, k)
        return v

    def lift_cube_root(self, r, a):
        """Newton lift of a simple root r of T^3 - a."""
        for _ in range(self.K.bit_length() + 1):
            r2 = self.mul(r, r)
            f = self.sub(self.mul(r2, r), a)
            r = self.sub(r, self.mul(f, self.inv(self.mul(self.embed(3), r2))))
        return r


def ideal_condition_holds(alpha, beta):
    """(alpha) P^-1 is a cube times an ideal of k (beta prime to 3)."""
    pi1 = alpha.pi1
    for g in _primes_dividing(beta):
        Q = normalize_prime(g, require_nine=False)
        F = residue_field_of(Q)
        a = F.reduce(pi1)
        if F.is_zero(a) or character_of_element(a, F):
            continue        # one prime of K_1 above q
        v, b = 0, beta
        while g.divides(b):
            b = exact_div(b, g)
            v += 1
        L = _Local(F, 3 * v + 1)
        a_loc = L.embed(pi1)
        r0 = cube_root_in_field(a, F)
        vals = set()
        for k in range(3):
            r = L.lift_cube_root(L.from_residue(F.mul(r0, F.pow(F.omega, k))), a_loc)
            x, y, z = (L.embed(c) for c in alpha.coords)
            value = L.add(L.add(x, L.mul(y, r)), L.mul(z, L.mul(r, r)))
            vals.add(L.val(value) % 3)
        if len(vals) != 1:
            return False
    return True


_SQRT3 = 3 ** 0.5
_W = complex(-0.5, _SQRT3 / 2)


def _emul(u, v):
    a, b = u
    c, d = v
    bd = b * d
    return (a * c - bd, a * d + b * c - bd)


def _eadd(*us):
    return (sum(u[0] for u in us), sum(u[1] for u in us))


def _escale(k, u):
    return (k * u[0], k * u[1])


def _block_candidates(P1, P2, X, Y, Z):
    """Pairs (alpha, beta) with N(alpha) = pi_2 beta^3 among the rows of the
    coordinate arrays X, Y, Z (each a pair of int arrays)."""
    p = (P1.pi.a, P1.pi.b)
    x3 = _emul(_emul(X, X), X)
    y3 = _emul(_emul(Y, Y), Y)
    z3 = _emul(_emul(Z, Z), Z)
    p2 = _emul(p, p)
    xyz = _emul(_emul(X, Y), Z)
    N = _eadd(x3, _emul(p, y3), _emul(p2, z3), _escale(-3, _emul(p, xyz)))
    c = P2.pi.conj()
    n2 = P2.q
    num = _emul(N, (c.a, c.b))
    mask = (num[0] % n2 == 0) & (num[1] % n2 == 0) & ((N[0] != 0) | (N[1] != 0))
    idx = np.nonzero(mask)[0]
    if not len(idx):
        return []
    qa, qb = num[0][idx] // n2, num[1][idx] // n2
    qc = (qa - qb / 2) + 1j * (qb * _SQRT3 / 2)
    root = np.power(qc.astype(complex), 1 / 3)
    out = []
    for k in range(3):
        rk = root * _W ** k
        bb = np.rint(2 * rk.imag / _SQRT3)
        ba = np.rint(rk.real + bb / 2)
        for j in np.nonzero(np.abs(ba + bb * _W - rk) < 1e-4 * (1 + np.abs(rk)))[0]:
            i = idx[j]
            beta = EisInt(int(ba[j]), int(bb[j]))
            # beta only matters up to cube roots of unity
            beta = min((beta * ZETA ** k for k in range(3)),
                       key=lambda u: (u.b != 0, _order_key((u,))))
            if beta.norm() % 3 == 0 or P2.pi.divides(beta):
                continue
            alpha = CubicRingElem(*(EisInt(int(C[0][i]), int(C[1][i]))
                                    for C in (X, Y, Z)), P1.pi)
            if cubic_norm(alpha) == P2.pi * beta ** 3:
                out.append((alpha, beta))
    return out


def _rational_shell(h):
    r = np.arange(-h, h + 1, dtype=np.int64)
    g = np.stack(np.meshgrid(r, r, r, indexing="ij"), -1).reshape(-1, 3)
    g = g[np.abs(g).max(axis=1) == h]
    zero = np.zeros(len(g), dtype=np.int64)
    return [(g[:, i], zero) for i in range(3)]


def _eisenstein_shell(h):
    """Chunks of the height-h shell of Z[w]^3 minus its rational part."""
    r = np.arange(-h, h + 1, dtype=np.int64)
    g = np.stack(np.meshgrid(r, r, r, r, indexing="ij"), -1).reshape(-1, 4)
    g = g[np.abs(g).max(axis=1) <= h]
    for xa, xb in product(range(-h, h + 1), repeat=2):
        top = max(abs(xa), abs(xb)) == h
        keep = top | (np.abs(g).max(axis=1) == h)
        keep &= (xb != 0) | (g[:, 1] != 0) | (g[:, 3] != 0)
        rows = g[keep]
        if not len(rows):
            continue
        n = len(rows)
        X = (np.full(n, xa, dtype=np.int64), np.full(n, xb, dtype=np.int64))
        yield X, (rows[:, 0], rows[:, 1]), (rows[:, 2], rows[:, 3])


_UNITS6 = tuple(ZETA ** k * s for k in range(3) for s in (ONE, -ONE))


def _associates(u):
    return {CubicRingElem(c * u.x, c * u.y, c * u.z, u.pi1) for c in _UNITS6}


def _check_pair(P1, P2):
    if P1.pi == P2.pi:
        raise NotAdmissible("pi_1 and pi_2 must be distinct")
    for P in (P1, P2):
        if not P.nine_admissible:
            raise NotAdmissible(f"norm of {P} is not 1 mod 9")
    if cubic_character(P2.pi, P1) or cubic_character(P1.pi, P2):
        raise NotAdmissible(f"cubic characters of {P1}, {P2} are not trivial")


def iter_alpha_witnessed(P1, P2, bound=DEFAULT_ALPHA_BOUND):
    """Pairs (alpha, beta), one alpha per unit class.

    Rational coordinates (alpha in Z[t]) are scanned first over all heights
    up to ``bound``, then the rest of Z[w][t].  Within a height shell the
    order is by N(beta), then coordinatewise (0 < 1 < -1 < 2 < ...).
    """
    _check_pair(P1, P2)
    seen = set()
    for shells in (lambda h: [_rational_shell(h)], _eisenstein_shell):
        for h in range(1, bound + 1):
            found = []
            for X, Y, Z in shells(h):
                found += _block_candidates(P1, P2, X, Y, Z)
            found.sort(key=lambda ab: (ab[1].norm(), _order_key(ab[0].coords)))
            for alpha, beta in found:
                # unit multiples only rescale theta by a root of unity
                if alpha in seen:
                    continue
                seen |= _associates(alpha)
                if ideal_condition_holds(alpha, beta):
                    yield alpha, beta


def iter_alpha(P1, P2, bound=DEFAULT_ALPHA_BOUND):
    for alpha, _ in iter_alpha_witnessed(P1, P2, bound):
        yield alpha


def find_alpha(P1, P2, bound=DEFAULT_ALPHA_BOUND):
    for alpha in iter_alpha(P1, P2, bound):
        return alpha
    raise BoundExceeded(f"no alpha with N(alpha) = pi_2 beta^3 up to height {bound}")


# --- theta certificates ------------------------------------------------------

@dataclass(frozen=True)
class ThetaCertificate:
    P1: EisPrime
    P2: EisPrime
    alpha: CubicRingElem
    e: int
    theta: CubicRingElem
    eta_lambda: tuple
    beta_norm_witness: EisInt

    def verify(self):
        """Names of violated invariants (empty when all hold)."""
        bad = []
        a = self.alpha
        expected = (CubicRingElem.of(ZETA ** self.e, a.pi1) * a * a
                    * tau_conjugate(a))
        if expected != self.theta:
            bad.append("theta")
        if cubic_norm(a) != self.P2.pi * self.beta_norm_witness ** 3:
            bad.append("alpha-norm")
        if cubic_norm(self.theta) != cubic_norm(a) ** 3:
            bad.append("theta-norm")
        if not lambda_cube_matches(self.eta_lambda, self.theta):
            bad.append("cube-condition")
        if (self.beta_norm_witness.norm() % 3 == 0
                or not ideal_condition_holds(a, self.beta_norm_witness)):
            bad.append("alpha-ideal")
        return bad

    def to_json(self):
        return {
            "pi1": self.P1.pi.to_json(), "pi2": self.P2.pi.to_json(),
            "alpha": self.alpha.to_json(), "e": self.e,
            "theta": self.theta.to_json(),
            "eta_lambda": [c.to_json() for c in self.eta_lambda],
            "beta": self.beta_norm_witness.to_json(),
        }


def _theta(alpha, e):
    return (CubicRingElem.of(ZETA ** e, alpha.pi1) * alpha * alpha
            * tau_conjugate(alpha))


def iter_theta_certificates(P1, P2, bound=DEFAULT_ALPHA_BOUND):
    for alpha, beta in iter_alpha_witnessed(P1, P2, bound):
        for e in range(3):
            theta = _theta(alpha, e)
            try:
                eta = cube_condition(theta, hint=alpha)
            except NoWitness:
                continue
            cert = ThetaCertificate(P1, P2, alpha, e, theta, eta, beta)
            bad = cert.verify()
            if bad:
                raise AssertionError(f"certificate invariants failed: {bad}")
            yield cert


@lru_cache(maxsize=256)
def build_theta_certificate(P1, P2, bound=DEFAULT_ALPHA_BOUND):
    for cert in iter_theta_certificates(P1, P2, bound):
        return cert
    raise BoundExceeded(f"no theta certificate up to alpha height {bound}")


# --- symbol evaluation -------------------------------------------------------

def as_prime(v):
    return v if isinstance(v, EisPrime) else normalize_prime(v)


def check_triple(P1, P2, P3):
    ps = (P1, P2, P3)
    if len({P.pi for P in ps}) != 3:
        raise NotAdmissible("primes must be pairwise distinct")
    for P in ps:
        if not P.nine_admissible:
            raise NotAdmissible(f"norm of {P} is not 1 mod 9")
    for A in ps:
        for B in ps:
            if A is not B and cubic_character(A.pi, B):
                raise NotAdmissible(f"({A.pi}/{B})_3 is not 1")


def cubic_admissible(P1, P2, P3):
    try:
        check_triple(P1, P2, P3)
    except NotAdmissible:
        return False
    return True


def _theta_at(theta, r, F):
    x, y, z = (F.reduce(c) for c in theta.coords)
    return F.add(F.add(x, F.mul(y, r)), F.mul(z, F.mul(r, r)))


def triple_cubic_symbol(P1, P2, P3, bound=DEFAULT_ALPHA_BOUND, cert=None,
                        root_index=0):
    """[p1, p2, p3]_3 as SymbolValue(m=3).

    ``root_index`` multiplies the computed cube root of pi_1 by omega^k, to
    exercise the choice of prime above p3 in k(cbrt pi_1).
    """
    P1, P2, P3 = as_prime(P1), as_prime(P2), as_prime(P3)
    check_triple(P1, P2, P3)
    if cert is None:
        cert = build_theta_certificate(P1, P2, bound)
    elif (cert.P1.pi, cert.P2.pi) != (P1.pi, P2.pi):
        raise ContextMismatch("certificate was built for another pair")
    F = residue_field_of(P3)
    r = cube_root_in_field(F.reduce(P1.pi), F)
    r = F.mul(r, F.pow(F.omega, root_index))
    value = _theta_at(cert.theta, r, F)
    if F.is_zero(value):
        raise ThetaVanishes(f"theta vanishes at {P3}; use another certificate")
    return SymbolValue(3, character_of_element(value, F), n=3)


def double_cubic_symbol(P1, P2):
    """[p1, p2]_3, the cubic residue character of pi_1 at p2."""
    P1, P2 = as_prime(P1), as_prime(P2)
    return SymbolValue(3, cubic_character(P1.pi, P2), n=2)


def _theta_polynomial(theta):
    """prod_i (T^3 - tau^i theta) = T^9 - e1 T^6 + e2 T^3 - e3 over O_k."""
    t1 = tau_conjugate(theta)
    t2 = tau_conjugate(t1)
    e1 = theta + t1 + t2
    e2 = theta * t1 + theta * t2 + t1 * t2
    e3 = theta * t1 * t2
    for e in (e1, e2, e3):
        if not e.is_rational_over_k():
            raise AssertionError("symmetric function of theta is not in O_k")
    return e1.x, e2.x, e3.x


def cubic_splitting_oracle(cert, P3):
    """Complete splitting of p3 in k(cbrt pi_1, cbrt pi_2, cbrt theta), by
    root counting: T^3 - pi_1, T^3 - pi_2 and the degree-9 polynomial of
    cbrt theta must split into distinct linear factors mod p3."""
    P3 = as_prime(P3)
    check_triple(cert.P1, cert.P2, P3)
    F = residue_field_of(P3)
    for pi in (cert.P1.pi, cert.P2.pi):
        f = [F.neg(F.reduce(pi)), F.zero, F.zero, F.one]
        if count_distinct_roots(f, F) != 3:
            return False
    e1, e2, e3 = _theta_polynomial(cert.theta)
    g = [F.zero] * 10
    g[0] = F.neg(F.reduce(e3))
    g[3] = F.reduce(e2)
    g[6] = F.neg(F.reduce(e1))
    g[9] = F.one
    if not is_squarefree(g, F):
        raise Degenerate(f"theta polynomial is not separable mod {P3}")
    return count_distinct_roots(g, F) == 9
