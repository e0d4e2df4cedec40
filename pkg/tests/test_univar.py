from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affnorm.errors import ShapeError
from affnorm.polyring import RingContext, prime_field, rationals
from affnorm.univar import factor_univariate, squarefree_part, to_dense, univariate_gcd


def _ctx_q():
    return RingContext(("x",), rationals())


def _ctx_p(p):
    return RingContext(("x",), prime_field(p))


def test_gcd_examples():
    ctx = _ctx_q()
    assert univariate_gcd(ctx.poly("x^2-1"), ctx.poly("x-1")) == ctx.poly("x-1")
    f = ctx.poly("2*x^2 + 2*x")
    assert univariate_gcd(f, ctx.zero) == f.monic()
    assert univariate_gcd(ctx.poly("x^3-x"), ctx.poly("x^2")) == ctx.poly("x")


def test_gcd_rejects_multivariate():
    ctx = RingContext(("x", "y"), rationals())
    with pytest.raises(ShapeError):
        univariate_gcd(ctx.poly("x*y"), ctx.poly("x"))


def test_squarefree_part_examples():
    ctx = _ctx_q()
    assert squarefree_part(ctx.poly("x^3*(x-1)^2")) == ctx.poly("x^2 - x")
    ctxT = RingContext(("T",), rationals())
    q = ctxT.poly("16384*T^2 - T + 625")
    assert squarefree_part(q) == q.monic()  # already squarefree
    ctx5 = _ctx_p(5)
    assert squarefree_part(ctx5.poly("x^5")) == ctx5.poly("x")


def test_squarefree_part_char_p_power_branch():
    ctx5 = _ctx_p(5)
    # (x+1)^5 = x^5 + 1 over GF(5): derivative vanishes, root contraction
    f = ctx5.poly("x^5 + 1")
    assert squarefree_part(f) == ctx5.poly("x + 1")


def test_sqf_derivative_coprime_property():
    ctx = _ctx_q()
    f = ctx.poly("(x-1)^3*(x+2)^2*(x^2+1)")
    s = squarefree_part(f)
    d = s.derivative("x")
    assert univariate_gcd(s, d).total_degree() == 0


def test_factor_gf5():
    ctx = _ctx_p(5)
    factors = factor_univariate(ctx.poly("x^2 - 1"))
    assert [(str(q), m) for q, m in factors] == [("x + 1", 1), ("x + 4", 1)]


def test_factor_irreducible_quadratic_over_q():
    ctx = _ctx_q()
    factors = factor_univariate(ctx.poly("x^2 + 1"))
    assert len(factors) == 1 and factors[0][1] == 1


def _integer_quadratic_split_oracle(coeffs):
    """Exhaustive check that an integer quartic has no rational root and no
    factorization into two integer quadratics (Gauss lemma oracle)."""
    e, d, c, b, a = coeffs  # a x^4 + ... + e
    # rational roots p/q: p | e, q | a
    def divisors(n):
        n = abs(n)
        return [i for i in range(1, n + 1) if n % i == 0]

    for p in divisors(e):
        for q in divisors(a):
            for sp in (p, -p):
                val = a * sp**4 + b * sp**3 * q + c * sp**2 * q**2 + d * sp * q**3 + e * q**4
                if val == 0:
                    return False
    # (a1 x^2 + b1 x + c1)(a2 x^2 + b2 x + c2)
    for a1 in divisors(a):
        a2, r = divmod(a, a1)
        if r:
            continue
        for c1 in divisors(e) + [-v for v in divisors(e)]:
            if c1 == 0 or e % c1:
                continue
            c2 = e // c1
            # match x^3 and x coefficients: a1 b2 + a2 b1 = b; b1 c2 + b2 c1 = d
            for b1 in range(-80, 81):
                num = b - a1 * 0 - a2 * b1
                # solve a1 b2 = b - a2 b1
                if a1 == 0:
                    continue
                if (b - a2 * b1) % a1:
                    continue
                b2 = (b - a2 * b1) // a1
                if b1 * c2 + b2 * c1 != d:
                    continue
                if a1 * c2 + b1 * b2 + a2 * c1 == c:
                    return False
    return True


def test_factor_quartic_from_singular_point_cluster():
    # one listed component of the decomposed Jacobian radical of the k=4
    # family curve; the bespoke integer-recombination oracle confirms
    # irreducibility independently of the Zassenhaus path.
    ctx = _ctx_q()
    f = ctx.poly("121*x^4 + 142*x^3 + 64*x^2 + 13*x + 1")
    assert _integer_quadratic_split_oracle([1, 13, 64, 142, 121])
    factors = factor_univariate(f)
    assert len(factors) == 1 and factors[0][1] == 1
    assert factors[0][0] == f.monic()


def test_factor_multiplicities_over_q():
    ctx = _ctx_q()
    f = ctx.poly("(x-1)^2*(x+3)*(x^2+x+1)^3")
    factors = factor_univariate(f)
    got = sorted((str(q), m) for q, m in factors)
    assert got == [("x + 3", 1), ("x - 1", 2), ("x^2 + x + 1", 3)]


def test_factor_product_roundtrip_over_q():
    ctx = _ctx_q()
    f = ctx.poly("6*(x-1/2)*(x^2+4)*(2*x+3)^2")
    factors = factor_univariate(f)
    prod = ctx.constant(f.lc())
    for q, m in factors:
        prod = prod * q**m
    assert prod == f


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4))
def test_factor_roundtrip_gf_random(coeffs):
    p = 13
    ctx = _ctx_p(p)
    d = {}
    for e, c in enumerate(coeffs):
        if c % p:
            d[(e,)] = c % p
    d[(len(coeffs),)] = 1
    f = ctx.from_exp_dict(d)
    factors = factor_univariate(f)
    prod = ctx.constant(f.lc())
    for q, m in factors:
        prod = prod * q**m
    assert prod == f
    # degree <= 3 irreducibles have no roots (exhaustive spot check)
    for q, _m in factors:
        if 2 <= q.total_degree() <= 3:
            dense = to_dense(q)
            for a in range(p):
                val = 0
                for c in reversed([int(x) for x in dense]):
                    val = (val * a + c) % p
                assert val != 0


def test_factor_high_degree_zassenhaus():
    ctx = _ctx_q()
    f = ctx.poly("(x^4 - 2)*(x^3 + x + 1)*(x^2 - 3)")
    got = factor_univariate(f)
    degs = sorted(q.total_degree() for q, _ in got)
    assert degs == [2, 3, 4]
