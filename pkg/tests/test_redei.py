import pytest

from powersym.arith import TernarySolution, is_prime, legendre_symbol, sqrt_mod_p
from powersym.errors import Degenerate, DistinctnessViolated, NotAdmissible
from powersym.redei import (RedeiCertificate, construct_alpha, redei_admissible, redei_splitting_oracle,
                            redei_symbol)

P1MOD4 = [p for p in range(5, 1200) if p % 4 == 1 and is_prime(p)]


def admissible_p3(p1, p2, limit):
    return [p for p in P1MOD4 if p < limit and p not in (p1, p2)
            and redei_admissible(p1, p2, p)]


def test_admissibility():
    assert redei_admissible(13, 17, 53)
    assert not redei_admissible(5, 13, 17)
    with pytest.raises(DistinctnessViolated):
        redei_admissible(13, 13, 17)


def test_construct_alpha():
    assert construct_alpha(13, 17).alpha_str() == "-15+4*sqrt(13)"
    assert construct_alpha(5, 29).alpha_str() == "7+2*sqrt(5)"
    with pytest.raises(NotAdmissible):
        construct_alpha(5, 13)


def test_symbol_13_17_53():
    # s = 15, x + s y = 45 and 45 is a non-residue mod 53
    assert sqrt_mod_p(13, 53) == 15
    assert legendre_symbol(45, 53) == -1
    v = redei_symbol(13, 17, 53)
    assert v.sign == -1 and str(v) == "-1"
    assert redei_splitting_oracle(construct_alpha(13, 17), 53) is False


def test_oracle_on_nonsplit_p3():
    cert = construct_alpha(13, 17)
    assert legendre_symbol(13, 5) == -1
    assert redei_splitting_oracle(cert, 5) is False


@pytest.mark.parametrize("p1, p2", [(13, 17), (5, 29), (13, 53), (17, 53)])
def test_splitting_law_and_root_choice(p1, p2):
    assert legendre_symbol(p1, p2) == 1
    cert = construct_alpha(p1, p2)
    p3s = admissible_p3(p1, p2, 1200)
    assert len(p3s) >= 5
    for p3 in p3s:
        v = redei_symbol(p1, p2, p3, cert=cert)
        assert v == redei_symbol(p1, p2, p3, cert=cert, other_root=True)
        assert v.is_trivial == redei_splitting_oracle(cert, p3)


def test_certificate_independence():
    # several normalized solutions of x^2 - 13 y^2 = 17 z^2
    sols = []
    for z in range(1, 40):
        for y in range(0, 200, 2):
            x2 = 13 * y * y + 17 * z * z
            x = int(round(x2 ** 0.5))
            if x * x == x2:
                if (x - y) % 4 != 1:
                    x = -x
                sol = TernarySolution(x, y, z, 13, 17)
                if not sol.check():
                    sols.append(sol)
    assert len(sols) >= 2
    certs = [RedeiCertificate(13, 17, s) for s in sols[:4]]
    for p3 in admissible_p3(13, 17, 1200):
        vals = set()
        for c in certs:
            try:
                vals.add(redei_symbol(13, 17, p3, cert=c).exponent)
            except Degenerate:
                pass
        assert len(vals) == 1


def test_double_symbol_consistency():
    for p1 in P1MOD4[:10]:
        for p2 in P1MOD4[:10]:
            if p1 != p2:
                assert legendre_symbol(p1, p2) == legendre_symbol(p2, p1)
