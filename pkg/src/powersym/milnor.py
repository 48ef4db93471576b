"""Milnor numbers, indeterminacy ideals, Milnor invariants and the unipotent
representation for link-type presentations

    < x_1..x_r | x_i^(N_i - 1) [x_i, y_i] = 1 >

given explicitly by norms N_i and Frobenius words y_i.

Ideals of Z/mZ are encoded by a divisor d of m, with d = 0 for the zero
ideal and d = 1 for the whole ring.
"""

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb, gcd

from .arith import is_prime
from .errors import (AssumptionViolated, HypothesisViolated, IndexNotInS,
                     InvalidPresentation, LengthOutOfRange, UnitIndeterminacy)
from .magnus import GroupWord, coefficient_matrix, proper_shuffles
from .symbol import SymbolValue


def _prime_power_base(m):
    for l in range(2, m + 1):
        if m % l == 0:
            while m % l == 0:
                m //= l
            return l if m == 1 else None
    return None


@dataclass(frozen=True)
class LinkPresentation:
    l: int
    m: int
    norms: tuple
    y: tuple
    S: tuple

    def __post_init__(self):
        object.__setattr__(self, "norms", tuple(self.norms))
        object.__setattr__(self, "y", tuple(
            GroupWord.parse(w) if isinstance(w, str) else w for w in self.y))
        object.__setattr__(self, "S", tuple(self.S))
        if not is_prime(self.l) or _prime_power_base(self.m) != self.l:
            raise InvalidPresentation(f"m = {self.m} is not a power of l = {self.l}")
        if len(self.norms) != len(self.y):
            raise InvalidPresentation("need one Frobenius word per norm")
        r = len(self.norms)
        for i, n in enumerate(self.norms, 1):
            if n < 2 or (n - 1) % self.m:
                raise InvalidPresentation(f"norm N_{i} = {n} is not 1 mod {self.m}")
        for i, w in enumerate(self.y, 1):
            if w.max_index() > r:
                raise InvalidPresentation(f"y_{i} uses a generator beyond x_{r}")
        if any(not 1 <= s <= r for s in self.S) or len(set(self.S)) != len(self.S):
            raise InvalidPresentation(f"S = {self.S} must be distinct indices in [1, {r}]")

    @property
    def rank(self):
        return len(self.norms)

    def relator(self, i):
        """x_i^(N_i - 1) [x_i, y_i]."""
        x = GroupWord.gen(i)
        return x ** (self.norms[i - 1] - 1) * GroupWord.commutator(x, self.y[i - 1])

    def with_y(self, i, word):
        y = list(self.y)
        y[i - 1] = word
        return LinkPresentation(self.l, self.m, self.norms, tuple(y), self.S)

    def to_json(self):
        return {"l": self.l, "m": self.m, "norms": list(self.norms),
                "y": [str(w) for w in self.y], "S": list(self.S)}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        norms = obj["norms"]
        return cls(obj["l"], obj["m"], norms, obj["y"],
                   obj.get("S", list(range(1, len(norms) + 1))))


@dataclass(frozen=True)
class MilnorResult:
    I: tuple
    value: int
    delta: int
    reduced: int

    def to_json(self):
        return {"I": list(self.I), "value": self.value, "delta": self.delta,
                "reduced": self.reduced}


def _check_in_s(pres, I):
    if not I:
        raise LengthOutOfRange("multi-index must be nonempty")
    for i in I:
        if i not in pres.S:
            raise IndexNotInS(f"index {i} is not in S = {pres.S}")


def ideal_generator(m, gens):
    """Divisor generating the ideal of Z/mZ spanned by ``gens`` (0 = zero)."""
    d = m
    for g in gens:
        d = gcd(d, g)
    return 0 if d == m else d


def reduce_mod_ideal(value, m, d):
    return value % (d if d else m)


def m_sub_I(pres, I):
    """Largest power l^e with N_i = 1 mod l^e for every i in I."""
    I = tuple(I)
    _check_in_s(pres, I)
    g = 0
    for i in set(I):
        g = gcd(g, pres.norms[i - 1] - 1)
    out = 1
    while g % pres.l == 0:
        g //= pres.l
        out *= pres.l
    return out


def milnor_number(pres, I):
    """mu_m(I): the Magnus coefficient of y_{i_n} at (i_1..i_{n-1})."""
    I = tuple(I)
    _check_in_s(pres, I)
    if len(I) == 1:
        return 0
    return coefficient_matrix(pres.y[I[-1] - 1], I[:-1], pres.m)[0][len(I) - 1]


def cyclic_subsequence_permutations(I):
    """P(I): rotations of the proper nonempty subsequences of I, deduplicated,
    in first-seen order."""
    I = tuple(I)
    seen = {}
    for k in range(1, len(I)):
        for positions in combinations(range(len(I)), k):
            sub = tuple(I[p] for p in positions)
            for r in range(len(sub)):
                seen.setdefault(sub[r:] + sub[:r], None)
    return list(seen)


def indeterminacy(pres, I):
    """Generator of Delta_m(I): binomials C(m_I, a), 1 <= a < |I|, and
    mu_m(J) for J in P(I)."""
    I = tuple(I)
    _check_in_s(pres, I)
    mI = m_sub_I(pres, I)
    gens = [comb(mI, a) for a in range(1, len(I))]
    gens += [milnor_number(pres, J) for J in cyclic_subsequence_permutations(I)]
    return ideal_generator(pres.m, gens)


def milnor_invariant(pres, I):
    I = tuple(I)
    _check_in_s(pres, I)
    mI = m_sub_I(pres, I)
    if not 2 <= len(I) <= mI:
        raise LengthOutOfRange(f"need 2 <= |I| <= m_I = {mI}, got |I| = {len(I)}")
    value = milnor_number(pres, I)
    d = indeterminacy(pres, I)
    return MilnorResult(I, value, d, reduce_mod_ideal(value, pres.m, d))


def unipotent_rep(pres, I, w):
    """n x n unipotent matrix with (a, b+1) entry mu_m(I_{a,b}; w) reduced
    modulo Delta_m(I); indices run over I' = (i_1..i_{n-1})."""
    I = tuple(I)
    _check_in_s(pres, I)
    d = indeterminacy(pres, I)
    if d == 1:
        raise UnitIndeterminacy(f"Delta_m({I}) is the whole ring")
    mod = d if d else pres.m
    M = coefficient_matrix(w, I[:-1], pres.m)
    return tuple(tuple(x % mod for x in row) for row in M)


def identity_matrix(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def check_condition_31(pres, I):
    """Both parts of the standing assumption for the n-tuple symbol:
    C(m_I, j) = 0 mod m for 1 <= j < n, and mu_m(J) = 0 on P(I)."""
    I = tuple(I)
    _check_in_s(pres, I)
    mI = m_sub_I(pres, I)
    if any(comb(mI, j) % pres.m for j in range(1, len(I))):
        return False
    return all(milnor_number(pres, J) == 0
               for J in cyclic_subsequence_permutations(I))


def tuple_symbol(pres, I=None):
    """[p_1, ..., p_n]_m = zeta_m^mu_m(12..n) as a SymbolValue."""
    if I is None:
        I = tuple(pres.S)
    I = tuple(I)
    if not check_condition_31(pres, I):
        raise AssumptionViolated(f"binomial or lower-order vanishing fails for {I}")
    return SymbolValue(pres.m, milnor_number(pres, I), n=len(I))


def verify_shuffle_relation(pres, I, J, i):
    """Sum over proper shuffles H of mu(Hi) vanishes modulo the sum of the
    ideals Delta_m(Hi)."""
    I, J = tuple(I), tuple(J)
    _check_in_s(pres, I + J + (i,))
    bound = m_sub_I(pres, I + J + (i,))
    if len(I) + len(J) > bound - 1:
        raise HypothesisViolated(f"|I| + |J| must be <= m_IJi - 1 = {bound - 1}")
    hs = list(proper_shuffles(I, J).elements())
    g = ideal_generator(pres.m, [indeterminacy(pres, H + (i,)) or pres.m for H in hs])
    if g == 1:
        return True
    total = sum(milnor_number(pres, H + (i,)) for H in hs)
    return reduce_mod_ideal(total, pres.m, g) == 0


def massey_exponent(symbol):
    """(-1)^n mu: exponent of the matching Massey product value."""
    return (-1) ** symbol.n * symbol.exponent % symbol.m
