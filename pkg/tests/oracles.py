"""Slow, independent reference computations used to derive expected values.

Nothing here imports the package: coefficients are plain ints/Fractions and
reduction mod n is done explicitly.
"""

from fractions import Fraction
from math import comb


def reduce(c, mod):
    if mod is None:
        return Fraction(c)
    c = Fraction(c)
    return (c.numerator * pow(c.denominator, -1, mod)) % mod


def poly_mul(a, b, n, mod=None):
    out = [0] * n
    for i in range(min(n, len(a))):
        for j in range(min(n - i, len(b))):
            out[i + j] += Fraction(a[i]) * Fraction(b[j])
    return [reduce(c, mod) for c in out]


def poly_pow(a, k, n, mod=None):
    out = [1] + [0] * (n - 1)
    for _ in range(k):
        out = poly_mul(out, a, n, mod)
    return [reduce(c, mod) for c in out]


def substitute(g, f, n, mod=None):
    """g(f(t)) as sum g_k f^k, term by term."""
    out = [0] * n
    power = [1] + [0] * (n - 1)
    for k in range(n):
        gk = g[k] if k < len(g) else 0
        out = [x + gk * y for x, y in zip(out, power)]
        power = poly_mul(power, f, n, mod)
    return [reduce(c, mod) for c in out]


def geometric(ratio, n, mod=None):
    """1/(1 - ratio*t)."""
    return [reduce(Fraction(ratio) ** k, mod) for k in range(n)]


def inverse_binomial_power(b, s, n, mod=None):
    """1/(1 + b t)^s via the negative binomial theorem."""
    return [reduce(comb(s + k - 1, k) * (-Fraction(b)) ** k, mod) for k in range(n)]


def riordan_matrix(g, f, size, mod=None):
    rows = [[0] * size for _ in range(size)]
    col = list(g[:size]) + [0] * (size - len(g))
    for k in range(size):
        for i in range(size):
            rows[i][k] = reduce(col[i], mod)
        col = poly_mul(col, f, size, mod)
    return rows


def mat_mul(a, b, mod=None):
    n = len(a)
    return [[reduce(sum(Fraction(a[i][k]) * b[k][j] for k in range(n)), mod) for j in range(n)] for i in range(n)]


def pascal_b_matrix(b, size):
    """P_b entries: (-1)^k C(i, k) b^(i-k)."""
    return [[(-1) ** k * comb(i, k) * Fraction(b) ** (i - k) if k <= i else 0 for k in range(size)] for i in range(size)]


def dihedral_order_profile(n):
    """Order profile of D_n: phi(d) rotations of order d for d | n, plus n reflections."""
    from math import gcd

    profile = {}
    for k in range(n):
        d = n // gcd(k, n)
        profile[d] = profile.get(d, 0) + 1
    profile[2] = profile.get(2, 0) + n
    return dict(sorted(profile.items()))


def matrix_order(a, mod, limit=100):
    n = len(a)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    p = a
    for k in range(1, limit + 1):
        if p == ident:
            return k
        p = mat_mul(p, a, mod)
    return None
