import pytest
from hypothesis import given, strategies as st

from powersym.eisenstein import (ONE, SQRT_M3, UNITS, ZETA, EisInt, auxiliary_prime,
                                 b_s_vanishes, congruent_mod_3sqrt3,
                                 cube_root_in_field, cubic_character, exact_div,
                                 iter_primes_by_norm, mod_3sqrt3, normalize_prime,
                                 residue_field_of, residues_mod_3sqrt3,
                                 unit_multiples_congruent_to_one)
from powersym.errors import NotACube, NotNineAdmissible, NotPrime, ParseError, Ramified

ints = st.integers(-10 ** 6, 10 ** 6)
eis = st.builds(EisInt, ints, ints)


def test_ring_examples():
    assert ZETA * ZETA == EisInt(-1, -1)
    assert (ONE - ZETA) ** 2 == -3 * ZETA
    assert SQRT_M3 * SQRT_M3 == EisInt(-3)
    assert EisInt(5, 2).norm() == 19
    assert EisInt(0, 0).norm() == 0


@given(eis, eis, eis)
def test_ring_axioms(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (u * v) * w == u * (v * w)
    assert (u * v).norm() == u.norm() * v.norm()
    assert u * u.conj() == EisInt(u.norm())


@given(eis, eis)
def test_exact_div(u, v):
    if not v.is_zero():
        assert exact_div(u * v, v) == u


@given(eis)
def test_str_parse_json_roundtrip(u):
    assert EisInt.parse(str(u)) == u
    assert EisInt.from_json(u.to_json()) == u


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        EisInt.parse("3+x")


def test_residues_mod_3sqrt3_are_27_distinct_classes():
    reps = residues_mod_3sqrt3()
    assert len(set(reps)) == 27
    # 3*sqrt(-3) = -3 - 6w generates the lattice spanned by (3, 6), (0, 9)
    for r in reps:
        assert mod_3sqrt3(r + 3 * SQRT_M3 * EisInt(2, -5)) == r


@pytest.mark.parametrize("gen, expected", [(17, EisInt(-17)), (53, EisInt(-53))])
def test_normalize_inert(gen, expected):
    assert normalize_prime(gen).pi == expected


def test_normalize_split_pinned_by_unit_enumeration():
    u = EisInt(5, 2)
    hits = [e * u for e in UNITS if congruent_mod_3sqrt3(e * u, ONE)]
    assert len(hits) == 1
    assert normalize_prime(u).pi == hits[0] == EisInt(-2, 3)


def test_normalize_errors():
    with pytest.raises(Ramified):
        normalize_prime(SQRT_M3)
    with pytest.raises(NotPrime):
        normalize_prime(EisInt(4))
    with pytest.raises(NotNineAdmissible):
        normalize_prime(7)
    assert normalize_prime(7, require_nine=False).q == 7


def test_normalization_unique_below_5000():
    count = 0
    for g in iter_primes_by_norm(5000):
        if g.norm() % 9 == 1:
            assert unit_multiples_congruent_to_one(g) == 1
            count += 1
    assert count > 100


def test_b_s_vanishes():
    P289 = normalize_prime(17)
    P7 = normalize_prime(7, require_nine=False)
    assert not b_s_vanishes([P289])
    assert b_s_vanishes([P7])
    assert not b_s_vanishes([])


def test_auxiliary_prime():
    P = auxiliary_prime()
    assert P.q == 7 and P.kind == "split"
    assert b_s_vanishes([normalize_prime(17), normalize_prime(53), P])
    # norm 7 is not 1 mod 9, so no associate is 1 mod (3 sqrt(-3)); it is 1 mod 3
    assert unit_multiples_congruent_to_one(P.pi) == 0
    assert (P.pi - ONE).a % 3 == 0 and (P.pi - ONE).b % 3 == 0
    assert auxiliary_prime(include_inert=True).q == 4


def test_residue_fields():
    F7 = residue_field_of(normalize_prime(EisInt(3, 1), require_nine=False))
    assert F7.q == 7 and F7.omega == (4,)
    assert F7.reduce(ZETA) == (4,)
    assert F7.reduce(F7.prime.pi) == F7.zero
    F25 = residue_field_of(normalize_prime(5, require_nine=False))
    assert F25.q == 25 and F25.omega == (0, 1)
    for F in (F7, F25):
        w = F.omega
        assert F.add(F.add(F.mul(w, w), w), F.one) == F.zero


def test_cubic_character_examples():
    P7 = normalize_prime(EisInt(3, 1), require_nine=False)
    assert cubic_character(2, P7) == 1
    P = normalize_prime(53)
    for u in (2, 5, 17, 1000):
        assert cubic_character(u, P) == 0
    P19 = normalize_prime(EisInt(5, 2))
    for v in (EisInt(2), EisInt(3, 7), ZETA + 5):
        assert cubic_character(v ** 3, P19) == 0


def test_cubic_character_multiplicative():
    P = normalize_prime(EisInt(5, 2))
    F = residue_field_of(P)
    for a in range(1, 19):
        for b in range(1, 19):
            assert (cubic_character(a * b, P, F)
                    == (cubic_character(a, P, F) + cubic_character(b, P, F)) % 3)


@pytest.mark.parametrize("gen", [17, 53, 71, EisInt(5, 2), 37, 109])
def test_cube_roots(gen):
    F = residue_field_of(normalize_prime(gen, require_nine=False))
    assert cube_root_in_field(F.one, F) == F.one
    step = max(1, F.q // 300)
    for n in range(1, F.q, step):
        v = F.decode(n)
        c = F.pow(v, 3)
        r = cube_root_in_field(c, F)
        assert F.pow(r, 3) == c


def test_cube_root_of_noncube():
    F = residue_field_of(normalize_prime(EisInt(5, 2)))
    noncube = next(x for x in F.elements() if not F.is_zero(x)
                   and F.pow(x, (F.q - 1) // 3) != F.one)
    with pytest.raises(NotACube):
        cube_root_in_field(noncube, F)
