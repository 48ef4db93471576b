"""Free-group words, truncated Magnus expansions over Z/mZ, Fox derivatives
and shuffle products of multi-indices.

The Magnus embedding sends x_i to 1 + X_i in the algebra of non-commutative
power series; every computation here is truncated at an explicit degree D.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .errors import IndexOutOfRange, ParseError


def gen_binom(e, k):
    """Binomial coefficient C(e, k) for any integer e (negative allowed)."""
    if e >= 0:
        return comb(e, k)
    return (-1) ** k * comb(-e + k - 1, k)


@dataclass(frozen=True)
class GroupWord:
    """Word in x_1..x_N as syllables (index, nonzero exponent).

    Adjacent syllables on the same generator are merged; the empty tuple is
    the identity.
    """
    letters: tuple = ()

    def __post_init__(self):
        merged = []
        for i, e in self.letters:
            if i < 1:
                raise IndexOutOfRange(f"generator index {i} < 1")
            if e == 0:
                continue
            if merged and merged[-1][0] == i:
                e += merged.pop()[1]
                if e == 0:
                    continue
            merged.append((i, e))
        object.__setattr__(self, "letters", tuple(merged))

    @classmethod
    def gen(cls, i, e=1):
        return cls(((i, e),))

    @classmethod
    def commutator(cls, u, v):
        """[u, v] = u v u^-1 v^-1."""
        return u * v * u.inverse() * v.inverse()

    @classmethod
    def parse(cls, text):
        return _WordParser(text).parse()

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return GroupWord(self.letters * e)

    def inverse(self):
        return GroupWord(tuple((i, -e) for i, e in reversed(self.letters)))

    def conjugate(self, g):
        """g w g^-1."""
        return g * self * g.inverse()

    def max_index(self):
        return max((i for i, _ in self.letters), default=0)

    def restrict(self, keep):
        """Image under x_j -> 1 for j not in ``keep``."""
        return GroupWord(tuple((i, e) for i, e in self.letters if i in keep))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{i}" if e == 1 else f"x{i}^{e}"
                        for i, e in self.letters)


_TOKEN = re.compile(r"\s*(?:(x)(\d+)|(\[)|(\])|(\()|(\))|(,)|(\^)(-?\d+)|(1)(?![0-9])|(\*))")


class _WordParser:
    """Grammar: word := factor ('*'? factor)*; factor := atom ('^' int)?;
    atom := 'x' int | '[' word ',' word ']' | '(' word ')' | '1'."""

    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        stripped = text.rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if not m or m.end() == pos:
                raise ParseError(f"bad word syntax near {stripped[pos:]!r}")
            if m.group(1):
                self.tokens.append(("gen", int(m.group(2))))
            elif m.group(8):
                self.tokens.append(("pow", int(m.group(9))))
            elif m.group(10):
                self.tokens.append(("one", None))
            elif m.group(11):
                self.tokens.append(("*", None))
            else:
                self.tokens.append((m.group(0).strip(), None))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self, kind):
        if self.peek() != kind:
            raise ParseError(f"expected {kind!r} in {self.text!r}")
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self):
        w = self.word()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}")
        return w

    def word(self):
        w = GroupWord()
        while self.peek() in ("gen", "[", "(", "one"):
            w = w * self.factor()
            if self.peek() == "*":
                self.take("*")
                if self.peek() not in ("gen", "[", "(", "one"):
                    raise ParseError(f"dangling '*' in {self.text!r}")
        return w

    def factor(self):
        kind = self.peek()
        if kind == "gen":
            idx = self.take("gen")[1]
            if idx < 1:
                raise ParseError(f"generator index must be >= 1 in {self.text!r}")
            a = GroupWord.gen(idx)
        elif kind == "one":
            self.take("one")
            a = GroupWord()
        elif kind == "[":
            self.take("[")
            u = self.word()
            self.take(",")
            v = self.word()
            self.take("]")
            a = GroupWord.commutator(u, v)
        else:
            self.take("(")
            a = self.word()
            self.take(")")
        if self.peek() == "pow":
            a = a ** self.take("pow")[1]
        return a


@dataclass
class NcSeries:
    """Truncated series sum c_I X_I over Z/mZ, stored sparsely.

    Keys are index tuples (the empty tuple is the constant term); only
    nonzero coefficients of degree <= D are kept.
    """
    N: int
    m: int
    D: int
    coeffs: dict = field(default_factory=dict)

    @classmethod
    def one(cls, N, m, D):
        return cls(N, m, D, {(): 1 % m} if m > 1 else {})

    def coefficient(self, I):
        return self.coeffs.get(tuple(I), 0)

    def _compatible(self, other):
        if (self.N, self.m, self.D) != (other.N, other.m, other.D):
            raise ValueError("series live in different truncated algebras")

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = (out.get(k, 0) + v) % self.m
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return NcSeries(self.N, self.m, self.D, out)

    def __mul__(self, other):
        self._compatible(other)
        m, D = self.m, self.D
        out = {}
        for k1, v1 in self.coeffs.items():
            room = D - len(k1)
            for k2, v2 in other.coeffs.items():
                if len(k2) <= room:
                    k = k1 + k2
                    out[k] = (out.get(k, 0) + v1 * v2) % m
        return NcSeries(self.N, m, D, {k: v for k, v in out.items() if v})

    def __eq__(self, other):
        return (isinstance(other, NcSeries) and self.m == other.m
                and self.D == other.D and self.coeffs == other.coeffs)

    def times_power(self, i, e):
        """self * (1 + X_i)^e, truncated."""
        m, D = self.m, self.D
        binoms = [gen_binom(e, k) % m for k in range(D + 1)]
        out = {}
        for key, v in self.coeffs.items():
            for k in range(D - len(key) + 1):
                b = binoms[k]
                if b:
                    nk = key + (i,) * k
                    out[nk] = (out.get(nk, 0) + v * b) % m
        return NcSeries(self.N, m, D, {k: v for k, v in out.items() if v})

    def degree_part(self, d):
        return {k: v for k, v in self.coeffs.items() if len(k) == d}


def _check_indices(word, I, N=None):
    top = N if N is not None else None
    for i in I:
        if i < 1 or (top is not None and i > top):
            raise IndexOutOfRange(f"index {i} outside [1, {top}]")
    if top is not None and word.max_index() > top:
        raise IndexOutOfRange(f"word uses x{word.max_index()} but N = {top}")


def expand(w, m, D, N=None):
    """Magnus expansion of ``w`` over Z/mZ truncated at degree D."""
    if D < 0:
        raise ValueError("truncation degree must be non-negative")
    if N is None:
        N = w.max_index()
    _check_indices(w, (), N)
    s = NcSeries.one(N, m, D)
    for i, e in w.letters:
        s = s.times_power(i, e)
    return s


def magnus_coefficient(w, I, m, N=None):
    """mu_m(I; w): coefficient of X_I in the expansion of w."""
    I = tuple(I)
    _check_indices(w, I, N)
    if not I:
        return 1 % m
    # Killing generators outside I is a ring map that fixes the X_I term.
    sub = w.restrict(set(I))
    return expand(sub, m, len(I), N=max(I + (sub.max_index(),))).coefficient(I)


def coefficient_matrix(w, I, m):
    """Upper-triangular matrix M with M[a][b] = mu_m(I[a:b]; w).

    Built syllable by syllable: concatenation of words multiplies these
    matrices, and for x_j^e the entry is C(e, b - a) when I[a:b] is constant
    j.
    """
    I = tuple(I)
    n = len(I)
    M = [[int(a == b) % m for b in range(n + 1)] for a in range(n + 1)]
    for j, e in w.letters:
        if j not in I:
            continue
        S = [[0] * (n + 1) for _ in range(n + 1)]
        for a in range(n + 1):
            S[a][a] = 1
            b = a
            while b < n and I[b] == j:
                b += 1
                S[a][b] = gen_binom(e, b - a) % m
        M = _matmul(M, S, m)
    return M


def _matmul(A, B, m):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(i, j + 1)) % m
             if j >= i else 0 for j in range(n)] for i in range(n)]


def _fox_derivative(element, i):
    """d/dx_i of a group-ring element {syllable tuple: coefficient}."""
    out = Counter()
    for word, c in element.items():
        for pos, (j, e) in enumerate(word):
            if j != i:
                continue
            prefix = word[:pos]
            if e > 0:
                for k in range(e):
                    out[prefix + ((i, k),) if k else prefix] += c
            else:
                for k in range(1, -e + 1):
                    out[prefix + ((i, -k),)] -= c
    return {k: v for k, v in out.items() if v}


def fox_coefficient(w, I, m, N=None):
    """epsilon(d^n w / dx_{i_1} ... dx_{i_n}), derivatives applied from the
    last index inwards; equals the Magnus coefficient of X_I."""
    I = tuple(I)
    _check_indices(w, I, N)
    if not I:
        return 1 % m
    element = {w.letters: 1}
    for i in reversed(I[1:]):
        element = _fox_derivative(element, i)
        if not element:
            return 0
    # Final derivative under augmentation: each x_i^e syllable contributes e.
    first = I[0]
    total = 0
    for word, c in element.items():
        total += c * sum(e for j, e in word if j == first)
    return total % m


def proper_shuffles(I, J):
    """Multiset of all interleavings of I and J."""
    return Counter(_shuffles(tuple(I), tuple(J), coalesce=False))


def shuffles(I, J):
    """Multiset of quasi-shuffles: interleavings where any number of equal
    letters, one from I and one from J, may also be merged into one."""
    return Counter(_shuffles(tuple(I), tuple(J), coalesce=True))


def _shuffles(I, J, coalesce):
    if not I:
        return [J]
    if not J:
        return [I]
    out = [(I[0],) + h for h in _shuffles(I[1:], J, coalesce)]
    out += [(J[0],) + h for h in _shuffles(I, J[1:], coalesce)]
    if coalesce and I[0] == J[0]:
        out += [(I[0],) + h for h in _shuffles(I[1:], J[1:], coalesce)]
    return out


class _AboveCap:
    """Result of zassenhaus_degree when nothing is nonzero up to the cap."""

    def __repr__(self):
        return "AboveCap"


ABOVE_CAP = _AboveCap()


def zassenhaus_degree(w, m, D):
    """Least |I| <= D with mu_m(I; w) != 0, else ABOVE_CAP."""
    s = expand(w, m, D)
    degrees = [len(k) for k in s.coeffs if k]
    return min(degrees) if degrees else ABOVE_CAP
