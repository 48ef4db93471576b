"""Dense univariate polynomials over a ResidueField (coefficient lists,
constant term first).  Used by the splitting oracles to count roots without
touching any character or root-extraction code."""


def trim(f, F):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def poly_sub(f, g, F):
    n = max(len(f), len(g))
    f = f + [F.zero] * (n - len(f))
    g = g + [F.zero] * (n - len(g))
    return trim([F.sub(a, b) for a, b in zip(f, g)], F)


def poly_mul(f, g, F):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return trim(out, F)


def poly_divmod(f, g, F):
    f = trim(f, F)
    g = trim(g, F)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = F.inv(g[-1])
    quot = [F.zero] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    while len(rem) >= len(g):
        c = F.mul(rem[-1], lead_inv)
        shift = len(rem) - len(g)
        quot[shift] = c
        for i, b in enumerate(g):
            rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
        rem = trim(rem, F)
    return quot, rem


def poly_mod(f, g, F):
    return poly_divmod(f, g, F)[1]


def poly_gcd(f, g, F):
    f, g = trim(f, F), trim(g, F)
    while g:
        f, g = g, poly_mod(f, g, F)
    if f:
        inv = F.inv(f[-1])
        f = [F.mul(c, inv) for c in f]
    return f


def x_power_mod(e, f, F):
    """T^e mod f."""
    result = [F.one]
    base = poly_mod([F.zero, F.one], f, F)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, F), f, F)
        base = poly_mod(poly_mul(base, base, F), f, F)
        e >>= 1
    return result


def count_distinct_roots(f, F):
    """Number of distinct roots of f in F: deg gcd(f, T^q - T)."""
    f = trim(f, F)
    if len(f) <= 1:
        raise ValueError("constant polynomial")
    xq = x_power_mod(F.q, f, F)
    h = poly_sub(xq, [F.zero, F.one], F)
    return len(poly_gcd(f, h, F)) - 1


def is_squarefree(f, F):
    deriv = trim([F.scale(i, c) for i, c in enumerate(f)][1:], F)
    return len(poly_gcd(f, deriv, F)) == 1
