import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from affnorm.errors import DegenerateInputError, UnsupportedDimensionError
from affnorm.groebner import normal_form
from affnorm.ideals import (
    Ideal,
    dimension,
    eliminate,
    exact_quotient_poly,
    ideal_equals,
    ideal_product,
    ideal_sum,
    intersect,
    intersect_via_elimination,
    minimal_polynomial,
    minimal_primes_zero_dim,
    multivariate_squarefree_part,
    quotient,
    quotient_by_poly,
    radical,
    vector_space_dimension,
    zero_dim_radical,
)
from affnorm.polyring import RingContext, prime_field, rationals

CTX = RingContext(("x", "y"), rationals())


def I(*texts):
    return Ideal.from_strings(CTX, list(texts))


def test_sum_product():
    assert ideal_equals(ideal_sum(I("x"), I("y")), I("x", "y"))
    assert ideal_equals(ideal_product(I("x", "y"), I("x")), I("x^2", "x*y"))


def test_local_recombination_sum_matches_worked_example():
    # U1 + U2 for the A3/E6 curve equals the recombined numerator
    U1 = I("x^2", "y*(y-1)^3")
    U2 = I("x^2", "x*y^2*(y-1)", "y^2*(y-1)^2")
    total = ideal_sum(U1, U2)
    expected = I("x^2", "x*y^2*(y-1)", "y*(y-1)^3", "y^2*(y-1)^2")
    assert ideal_equals(total, expected)


def test_eliminate_examples():
    big = CTX.extended(("t",))
    J = Ideal.from_strings(big, ["t*x - 1"])
    assert eliminate(J, ["t"]).is_zero()
    J2 = Ideal.from_strings(big, ["t - x", "t - y"])
    out = eliminate(J2, ["t"])
    assert ideal_equals(out, Ideal.from_strings(big, ["x - y"]))


def test_principal_intersection_is_lcm():
    ctx1 = RingContext(("u",), rationals())
    f = ctx1.poly("u^2*(u-1)")
    g = ctx1.poly("u*(u+1)")
    meet = intersect(Ideal(ctx1, [f]), Ideal(ctx1, [g]))
    gb = meet.groebner()
    assert len(gb) == 1
    assert gb[0] == ctx1.poly("u^2*(u-1)*(u+1)").monic()


def test_intersect_examples():
    assert ideal_equals(intersect(I("x"), I("y")), I("x*y"))
    J = I("x^2", "x*y")
    assert ideal_equals(intersect(J, J), J)


def test_intersect_agrees_with_elimination_reference():
    A = I("x^2 - y", "x*y")
    B = I("y^2", "x + y")
    assert ideal_equals(intersect(A, B), intersect_via_elimination(A, B))


def test_quotient_examples():
    assert ideal_equals(quotient(I("x^2"), I("x")), I("x"))
    J = I("x^2", "x*y", "y^3")
    assert ideal_equals(quotient(J, Ideal(CTX, [CTX.one])), J)
    with pytest.raises(DegenerateInputError):
        quotient(J, Ideal(CTX, []))


def test_quotient_worked_example_from_curve():
    # (xJ + I) : J modulo the curve equals <x, y(y-1)^2> mod I
    f = CTX.poly("x^4 + y^2*(y-1)^3")
    Jgens = [CTX.var("x"), CTX.poly("y*(y-1)")]
    X = Ideal(CTX, [CTX.var("x") * j for j in Jgens] + [f])
    got = quotient(X, Ideal(CTX, Jgens))
    expected = I("x", "y*(y-1)^2", "x^4 + y^2*(y-1)^3")
    assert ideal_equals(
        Ideal(CTX, list(got.gens) + [f]), expected
    )


def test_quotient_properties():
    A = I("x^3", "x*y^2")
    B = I("x", "y")
    Q = quotient(A, B)
    # I is contained in I : J, and (I : J) * J is contained in I
    for g in A.gens:
        assert Q.contains(g)
    for q in Q.gens:
        for h in B.gens:
            assert A.contains(q * h)


def test_dimension_examples():
    assert dimension(I("x", "y")) == 0
    assert dimension(I("x^4 + y^2*(y-1)^3")) == 1
    assert dimension(Ideal(CTX, [])) == 2
    assert dimension(Ideal(CTX, [CTX.one])) == -1


def _dimension_bruteforce(ideal):
    """Independent oracle: exhaustive maximal independent variable sets."""
    from itertools import combinations

    ctx = ideal.context
    gb = ideal.groebner()
    if len(gb) == 0:
        return ctx.nvars
    if gb.is_unit_ideal():
        return -1
    exps_of = ctx.order.exps_of
    supports = [
        {i for i, e in enumerate(exps_of(g.lm_key())) if e} for g in gb
    ]
    best = 0
    n = ctx.nvars
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            s = set(combo)
            if not any(supp <= s for supp in supports):
                return size
    return best


def test_dimension_matches_bruteforce_oracle():
    ctx4 = RingContext(("a", "b", "c", "d"), rationals())
    cases = [
        ["a*b - c", "c^2*d"],
        ["a^2", "b^2", "a*c"],
        ["a*b*c*d - 1"],
        ["a - b", "c - d"],
    ]
    for texts in cases:
        J = Ideal.from_strings(ctx4, texts)
        assert dimension(J) == _dimension_bruteforce(J)


def test_zero_dim_radical_examples():
    assert ideal_equals(zero_dim_radical(I("x^2", "y^3")), I("x", "y"))
    # the extension-step radical of the k=4 local example; the quadratic
    # is the perfect square 16384 (T - 25/128)^2 (the printed linear
    # coefficient in the source text is a typo for -6400)
    ctxT = RingContext(("T1", "X", "Y"), rationals())
    J = Ideal.from_strings(ctxT, ["Y", "2*X + 1", "16384*T1^2 - 6400*T1 + 625"])
    expected = Ideal.from_strings(ctxT, ["Y", "2*X + 1", "128*T1 - 25"])
    assert ideal_equals(zero_dim_radical(J), expected)


def test_zero_dim_radical_rejects_positive_dimension():
    with pytest.raises(UnsupportedDimensionError):
        zero_dim_radical(I("x*y"))


def test_radical_idempotent_and_contains():
    J = I("x^3 - x^2", "y^2")
    R = zero_dim_radical(J)
    assert ideal_equals(zero_dim_radical(R), R)
    for g in J.gens:
        assert R.contains(g)
    # each radical generator has some power inside J
    for r in R.groebner():
        power = r
        ok = False
        for _ in range(8):
            if J.contains(power):
                ok = True
                break
            power = power * r
        assert ok


def test_principal_radical_via_squarefree_part():
    f = CTX.poly("(x^2 + y^2 - 1)^3")
    R = radical(Ideal(CTX, [f]))
    assert ideal_equals(R, I("x^2 + y^2 - 1"))
    assert multivariate_squarefree_part(f) == CTX.poly("x^2 + y^2 - 1").monic()


def test_minimal_primes_examples():
    comps = minimal_primes_zero_dim(I("x*(x-1)", "y"))
    assert [[str(g) for g in c.groebner()] for c in comps] == [
        ["y", "x"],
        ["y", "x - 1"],
    ]
    comps = minimal_primes_zero_dim(I("x^2 + 1", "y"))
    assert len(comps) == 1
    assert ideal_equals(comps[0], I("x^2 + 1", "y"))


def test_minimal_primes_need_primitive_element():
    # <x^2-2, y^2-2> splits as <x^2-2, y-x> and <x^2-2, y+x>
    comps = minimal_primes_zero_dim(I("x^2 - 2", "y^2 - 2"))
    assert len(comps) == 2
    meet = comps[0]
    meet = intersect(comps[0], comps[1])
    assert ideal_equals(meet, I("x^2 - 2", "y^2 - 2"))


def test_minimal_primes_pairwise_comaximal_and_intersection():
    J = I("x^2*(x-1)", "y*(y+2)", "x*y")
    rad = zero_dim_radical(J)
    comps = minimal_primes_zero_dim(J)
    assert len(comps) >= 2
    for a in range(len(comps)):
        for b in range(a + 1, len(comps)):
            assert ideal_sum(comps[a], comps[b]).is_unit()
    meet = comps[0]
    for c in comps[1:]:
        meet = intersect(meet, c)
    assert ideal_equals(meet, rad)


def test_vector_space_dimension():
    assert vector_space_dimension(I("x^2", "y^3")) == 6
    with pytest.raises(UnsupportedDimensionError):
        vector_space_dimension(I("x"))


def test_minimal_polynomial_matches_elimination_oracle():
    J = I("x^2 - 2", "y - x")
    m = minimal_polynomial(J, "y")
    assert m == CTX.poly("y^2 - 2")
    # oracle: eliminate x directly
    elim = eliminate(J, ["x"])
    gb = elim.groebner()
    assert any(g == m for g in gb) or normal_form(m, gb).is_zero()


def test_ideal_equals_examples():
    assert ideal_equals(I("x", "x + y"), I("y", "x"))
    assert not ideal_equals(I("x^2"), I("x"))


def test_exact_quotient_poly():
    f = CTX.poly("x^2*y + x*y^2")
    assert exact_quotient_poly(f, CTX.poly("x*y")) == CTX.poly("x + y")
    with pytest.raises(DegenerateInputError):
        exact_quotient_poly(CTX.poly("x^2 + 1"), CTX.var("x"))
