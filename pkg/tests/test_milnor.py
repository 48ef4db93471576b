import pytest

from _gen import random_presentation, random_word, rng
from powersym.errors import (AssumptionViolated, IndexNotInS, InvalidPresentation,
                             LengthOutOfRange, UnitIndeterminacy)
from powersym.magnus import GroupWord, magnus_coefficient
from powersym.magnus import _matmul
from powersym.milnor import (LinkPresentation, check_condition_31,
                             cyclic_subsequence_permutations, identity_matrix,
                             ideal_generator, indeterminacy, m_sub_I, milnor_invariant,
                             milnor_number, tuple_symbol, unipotent_rep,
                             verify_shuffle_relation)

x1, x2, x3 = (GroupWord.gen(i) for i in (1, 2, 3))
C = GroupWord.commutator
NORMS = (289, 2809, 5041)  # 17^2, 53^2, 71^2


def triple(y3, m=3):
    return LinkPresentation(3, m, NORMS, ("1", "1", y3), (1, 2, 3))


def test_presentation_validation():
    with pytest.raises(InvalidPresentation):
        LinkPresentation(3, 3, (10, 12), ("1", "1"), (1, 2))
    with pytest.raises(InvalidPresentation):
        LinkPresentation(3, 6, (7,), ("1",), (1,))
    with pytest.raises(InvalidPresentation):
        LinkPresentation(3, 3, (10,), ("x2",), (1,))
    p = triple("[x1,x2]")
    assert LinkPresentation.from_json(p.to_json()) == p


def test_m_sub_I():
    p = triple("[x1,x2]")
    assert m_sub_I(p, (1, 2)) == 9
    assert m_sub_I(LinkPresentation(3, 3, (10,), ("1",), (1,)), (1,)) == 9
    with pytest.raises(IndexNotInS):
        m_sub_I(LinkPresentation(3, 3, (10, 10), ("1", "1"), (1,)), (2,))


def test_milnor_numbers():
    p = triple("[x1,x2]")
    assert milnor_number(p, (3,)) == 0
    assert milnor_number(p, (1, 2, 3)) == 1
    assert milnor_number(triple("[x2,x1]"), (1, 2, 3)) == 2
    q = LinkPresentation(3, 3, (10, 10), ("1", "x1"), (1, 2))
    assert milnor_number(q, (1, 2)) == 1


def test_indeterminacy():
    p = triple("[x1,x2]")
    assert indeterminacy(p, (1, 2)) == 0
    assert indeterminacy(p, (1, 2, 3)) == 0
    q = LinkPresentation(3, 3, (10, 10, 10), ("1", "x1", "1"), (1, 2, 3))
    assert indeterminacy(q, (1, 2, 3)) == 1
    assert ideal_generator(9, [3, 6]) == 3
    assert ideal_generator(9, [0, 9]) == 0


def test_cyclic_subsequence_permutations():
    assert set(cyclic_subsequence_permutations((1, 2, 3))) == {
        (1,), (2,), (3,), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)}


def test_milnor_invariant():
    r = milnor_invariant(triple("[x2,x1]"), (1, 2, 3))
    assert (r.value, r.delta, r.reduced) == (2, 0, 2)
    with pytest.raises(LengthOutOfRange):
        milnor_invariant(triple("[x1,x2]"), (1,))


def test_linking_numbers_from_degree_one_terms():
    r = rng(5)
    for _ in range(30):
        p = random_presentation(r)
        for j in range(1, 4):
            for i in range(1, 4):
                if i != j:
                    assert milnor_number(p, (i, j)) == magnus_coefficient(p.y[j - 1], (i,), p.m)


def test_unipotent_rep_examples():
    p = triple("[x1,x2]")
    I = (1, 2, 3)
    assert unipotent_rep(p, I, x1) == ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert unipotent_rep(p, I, x2) == ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    for i in (1, 2, 3):
        assert unipotent_rep(p, I, p.relator(i)) == identity_matrix(3)
    assert unipotent_rep(p, I, p.y[2]) == ((1, 0, 1), (0, 1, 0), (0, 0, 1))
    q = LinkPresentation(3, 3, (10, 10, 10), ("1", "x1", "1"), (1, 2, 3))
    with pytest.raises(UnitIndeterminacy):
        unipotent_rep(q, I, x1)


def _rep_cases(seed, count):
    r = rng(seed)
    out = []
    while len(out) < count:
        p = random_presentation(r)
        I = tuple(r.sample(range(1, 4), 3)) if r.random() < 0.7 else tuple(r.sample(range(1, 4), 2))
        if len(I) <= m_sub_I(p, I) and indeterminacy(p, I) != 1:
            out.append((r, p, I))
    return out


def test_rep_homomorphism():
    for r, p, I in _rep_cases(21, 25):
        u, v = random_word(r), random_word(r)
        d = indeterminacy(p, I) or p.m
        lhs = unipotent_rep(p, I, u * v)
        rhs = _matmul(unipotent_rep(p, I, u), unipotent_rep(p, I, v), d)
        assert [list(row) for row in lhs] == rhs


def test_conjugation_stability():
    for r, p, I in _rep_cases(22, 25):
        n = I[-1]
        base = milnor_invariant(p, I).reduced
        g = random_word(r)
        conj = p.with_y(n, p.y[n - 1].conjugate(g))
        assert milnor_invariant(conj, I).reduced == base
        k = r.randint(1, 3)
        rel = p.relator(k).conjugate(random_word(r))
        assert milnor_invariant(p.with_y(n, p.y[n - 1] * rel), I).reduced == base


def test_condition_31():
    p = triple("[x1,x2]")
    assert check_condition_31(p, (1, 2, 3))
    q = LinkPresentation(3, 3, (10, 10, 10), ("1", "x1", "1"), (1, 2, 3))
    assert not check_condition_31(q, (1, 2, 3))


def test_tuple_symbols():
    assert tuple_symbol(triple("[x1,x2]")).exponent == 1
    assert tuple_symbol(triple("1")).exponent == 0
    assert tuple_symbol(triple("[x2,x1]")).exponent == 2
    with pytest.raises(AssumptionViolated):
        tuple_symbol(LinkPresentation(3, 3, (10, 10, 10), ("1", "x1", "1"), (1, 2, 3)))


def test_shuffle_relation():
    p = LinkPresentation(3, 3, (28, 28, 28), ("1", "1", "[x1,x2]"), (1, 2, 3))
    assert verify_shuffle_relation(p, (1,), (2,), 3)
    r = rng(23)
    trials = 0
    while trials < 50:
        p = random_presentation(r)
        i = r.randint(1, 3)
        I, J = (r.randint(1, 3),), (r.randint(1, 3),)
        if len(I) + len(J) > m_sub_I(p, I + J + (i,)) - 1:
            continue
        assert verify_shuffle_relation(p, I, J, i)
        trials += 1
