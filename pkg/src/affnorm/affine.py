"""The affine-algebra layer: quotient presentations W/I, Jacobian test
pairs, fractional ideals (1/d)U, ring-extension presentations, and the
Grauert-Remmert normality test carried out in the original ring.

Ideals of A = W/I are represented by ideals of W; operations that are
"mod I" union the defining ideal in where needed.  The key invariant kept
throughout the normalization loop is that the current ring A' = (1/d)U and
its test ideal J' = (1/d)H share one denominator, so that

    (g*J' : J') = (1/d) * (d*g*H : H)

holds exactly and the loop multiplies the denominator by g once per
enlargement step.
"""

from itertools import combinations

from .errors import (
    DegenerateInputError,
    ShapeError,
    UnsupportedDimensionError,
    ZerodivisorError,
)
from .groebner import MembershipLifter, normal_form, syzygies
from .ideals import (
    Ideal,
    dimension,
    ideal_equals,
    multiply_by_poly,
    quotient,
    quotient_by_poly,
    zero_dim_radical,
)
from .polyring import Polynomial, RingContext, prime_field


class AffineAlgebra:
    """A presentation W/I of the ring being normalized.

    ``assumed_prime`` is a caller-supplied promise; it is not verified, but
    zerodivisor detections during the run turn silent wrongness into
    :class:`ZerodivisorError`.
    """

    __slots__ = ("context", "ideal", "assumed_prime", "_dim", "_jacobian")

    def __init__(self, context, ideal, assumed_prime=True):
        if ideal.context != context:
            raise ShapeError("ideal context mismatch")
        self.context = context
        self.ideal = ideal
        self.assumed_prime = assumed_prime
        self._dim = None
        self._jacobian = None
        if ideal.is_unit():
            raise DegenerateInputError("defining ideal is the unit ideal")

    @property
    def char(self):
        return self.context.field.char

    def groebner(self):
        return self.ideal.groebner()

    def dim(self):
        if self._dim is None:
            self._dim = dimension(self.ideal)
        return self._dim

    def reduce(self, f):
        """Normal form of f modulo the defining ideal."""
        return normal_form(f, self.groebner())

    def contains(self, f):
        return self.ideal.contains(f)

    def __repr__(self):
        return "AffineAlgebra(%r, %d generators)" % (
            self.context,
            len(self.ideal.gens),
        )


class FractionalIdeal:
    """The A-submodule (1/d)U of Quot(A); d must lie in U modulo I so that
    the module contains 1."""

    __slots__ = ("numerator", "denominator", "algebra")

    def __init__(self, numerator, denominator, algebra, check=True):
        self.numerator = numerator
        self.denominator = denominator
        self.algebra = algebra
        if check:
            gb = ideal_with_defining(numerator, algebra).groebner()
            if normal_form(denominator, gb):
                raise DegenerateInputError(
                    "denominator does not lie in the numerator ideal mod I"
                )
            if all(algebra.contains(g) for g in numerator.gens):
                raise DegenerateInputError("numerator ideal vanishes mod I")

    def __repr__(self):
        return "FractionalIdeal(1/%s * <%d gens>)" % (
            self.denominator,
            len(self.numerator.gens),
        )


class TestPair:
    """A radical ideal J with a chosen non-zerodivisor g in it."""

    __slots__ = ("radical_ideal", "nonzerodivisor")

    def __init__(self, radical_ideal, nonzerodivisor):
        self.radical_ideal = radical_ideal
        self.nonzerodivisor = nonzerodivisor


class ExtensionPresentation:
    """A[T_1..T_s]/R presenting (1/d)U, with T_i -> u_i/d.

    ``relation_ideal`` lives in the extended ring and contains the defining
    ideal; every generator vanishes under the substitution after clearing
    denominators (checked on construction).
    """

    __slots__ = (
        "algebra",
        "ext_context",
        "new_vars",
        "numerators",
        "denominator",
        "relation_ideal",
    )

    def __init__(
        self, algebra, ext_context, new_vars, numerators, denominator, relation_ideal
    ):
        self.algebra = algebra
        self.ext_context = ext_context
        self.new_vars = tuple(new_vars)
        self.numerators = tuple(numerators)
        self.denominator = denominator
        self.relation_ideal = relation_ideal

    @property
    def s(self):
        return len(self.new_vars)

    def t_degree(self, p):
        """Total degree in the extension variables."""
        if p.is_zero():
            return 0
        idx = [self.ext_context._var_index[v] for v in self.new_vars]
        exps_of = self.ext_context.order.exps_of
        return max(sum(exps_of(k)[i] for i in idx) for k, _ in p.terms)

    def clear_denominators(self, p):
        """d**degT(p) * p(X, u/d) as a polynomial of the base ring."""
        ctx = self.algebra.context
        idx = {v: self.ext_context._var_index[v] for v in self.new_vars}
        exps_of = self.ext_context.order.exps_of
        mu = self.t_degree(p)
        d = self.denominator
        result = ctx.zero
        power_cache = {}

        def upow(i, e):
            key = (i, e)
            if key not in power_cache:
                base = self.numerators[i] if i >= 0 else d
                power_cache[key] = base**e
            return power_cache[key]

        base_names = ctx.variables
        for k, c in p.terms:
            exps = exps_of(k)
            tdeg = 0
            factor = ctx.constant(c)
            for j, v in enumerate(self.new_vars):
                e = exps[idx[v]]
                if e:
                    tdeg += e
                    factor = factor * upow(j, e)
            xexps = [0] * ctx.nvars
            for name in base_names:
                xexps[ctx._var_index[name]] = exps[
                    self.ext_context._var_index[name]
                ]
            mono = ctx.from_exp_dict({tuple(xexps): 1})
            term = factor * mono
            if mu - tdeg:
                term = term * upow(-1, mu - tdeg)
            result = result + term
        return result

    def check_substitution(self):
        """Assert the substitution identity for every relation generator."""
        gb = self.algebra.groebner()
        for p in self.relation_ideal.gens:
            if normal_form(self.clear_denominators(p), gb):
                raise DegenerateInputError(
                    "relation generator fails the substitution identity"
                )


def ideal_with_defining(U, algebra):
    """U + I as an ideal of W."""
    return Ideal(algebra.context, list(U.gens) + list(algebra.ideal.gens))


# ---------------------------------------------------------------------------
# Jacobian, test pairs
# ---------------------------------------------------------------------------


def _det(matrix):
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
        part = entry * _det(minor)
        if j % 2:
            part = -part
        total = part if total is None else total + part
    if total is None:
        return matrix[0][0].ctx.zero
    return total


def jacobian_ideal(A):
    """The defining ideal plus all c x c minors of the Jacobian matrix of
    its input generators, c = codimension."""
    if A._jacobian is not None:
        return A._jacobian
    ctx = A.context
    gens = list(A.ideal.gens)
    n = ctx.nvars
    c = n - A.dim()
    if c <= 0:
        M = Ideal(ctx, [ctx.one])
        A._jacobian = M
        return M
    jac = [[f.derivative(v) for v in ctx.variables] for f in gens]
    minors = []
    for rows in combinations(range(len(gens)), c):
        for cols in combinations(range(n), c):
            sub = [[jac[i][j] for j in cols] for i in rows]
            m = _det(sub)
            if not m.is_zero():
                minors.append(m)
    M = Ideal(ctx, gens + minors)
    A._jacobian = M
    return M


def is_nonzerodivisor(g, A):
    """True iff (I : g) = I, i.e. g is a non-zerodivisor of W/I."""
    if A.contains(g):
        return False
    if g.is_constant():
        return True
    Q = quotient_by_poly(A.ideal, g)
    gb = A.groebner()
    return all(normal_form(q, gb).is_zero() for q in Q.gens)


def nonzero_generators_mod(I, A, sort=True):
    """Reduced-basis elements of I + defining ideal that are nonzero mod I,
    sorted by (total degree, leading monomial, text)."""
    gb = ideal_with_defining(I, A).groebner()
    agb = A.groebner()
    out = [g for g in gb if not normal_form(g, agb).is_zero()]
    if sort:
        out.sort(key=lambda g: (g.total_degree(), g.lm_key(), str(g)))
    return out


def initial_test_pair(A):
    """The Jacobian test pair (sqrt(M), g); ``None`` signals a smooth input
    (unit Jacobian), meaning the ring is already normal."""
    M = jacobian_ideal(A)
    gbM = M.groebner()
    if gbM.is_unit_ideal():
        return None
    d = dimension(M)
    if d != 0:
        raise UnsupportedDimensionError(
            "singular locus has dimension %d; only the zero-dimensional case"
            " is supported" % d
        )
    J = zero_dim_radical(M)
    candidates = nonzero_generators_mod(J, A)
    for g in candidates:
        if is_nonzerodivisor(g, A):
            return TestPair(Ideal(A.context, list(J.groebner().elements)), g)
    raise ZerodivisorError(
        "every candidate generator of the test ideal is a zerodivisor;"
        " the input is not a domain"
    )


# ---------------------------------------------------------------------------
# the Hom(J, J) machinery, all in the original ring
# ---------------------------------------------------------------------------


def hom_numerators(H, d, g, A):
    """(d*g*H :_A H): the numerator ideal of g * Hom_{A'}(J', J') where
    A' = (1/d)U and J' = (1/d)H."""
    if H.is_zero():
        raise DegenerateInputError("test ideal is zero")
    dg = d * g
    target = Ideal(
        A.context,
        [dg * h for h in H.gens] + list(A.ideal.gens),
    )
    return quotient(target, H)


def gr_normality_test(H, d, U, g, A):
    """Grauert-Remmert test on A' = (1/d)U with test ideal (1/d)H:
    A' is normal iff (d*g*H : H) equals g*U modulo I."""
    Q = hom_numerators(H, d, g, A)
    gU = Ideal(
        A.context, [g * u for u in U.gens] + list(A.ideal.gens)
    )
    return ideal_equals(ideal_with_defining(Q, A), gU)


def fractional_equals(F1, F2, A=None):
    """Equality of (1/d1)U1 and (1/d2)U2 as subsets of Quot(A)."""
    A = A or F1.algebra
    lhs = Ideal(
        A.context,
        [F2.denominator * u for u in F1.numerator.gens] + list(A.ideal.gens),
    )
    rhs = Ideal(
        A.context,
        [F1.denominator * u for u in F2.numerator.gens] + list(A.ideal.gens),
    )
    return ideal_equals(lhs, rhs)


def fractional_contains(F1, F2, A=None):
    """True iff (1/d2)U2 is a subset of (1/d1)U1."""
    A = A or F1.algebra
    lhs = Ideal(
        A.context,
        [F2.denominator * u for u in F1.numerator.gens] + list(A.ideal.gens),
    )
    gb = lhs.groebner()
    return all(
        normal_form(F1.denominator * u, gb).is_zero() for u in F2.numerator.gens
    )


def _extension_names(ctx, count):
    names = []
    k = 1
    while len(names) < count:
        name = "T%d" % k
        if name not in ctx._var_index:
            names.append(name)
        k += 1
    return names


def ring_structure(U, d, A):
    """Presentation of (1/d)U as A[T_1..T_s]/R via linear relations (module
    syzygies of d, u_1..u_s) and quadratic relations (products u_i*u_j/d
    re-expressed in the module generators)."""
    ctx = A.context
    igens = list(A.ideal.groebner().elements)
    dgb = Ideal(ctx, [d] + igens).groebner()
    numerators = [
        u
        for u in ideal_with_defining(U, A).groebner()
        if not normal_form(u, dgb).is_zero()
    ]
    s = len(numerators)
    names = _extension_names(ctx, s)
    ext = ctx.extended(tuple(names))
    relations = [g.convert(ext) for g in igens]
    mod_gens = [d] + numerators
    # linear relations from syzygies computed modulo I
    rows = syzygies(mod_gens + igens)
    tvars = [ext.var(nm) for nm in names]
    for row in rows:
        head = row[: s + 1]
        if all(r.is_zero() for r in head):
            continue
        rel = head[0].convert(ext)
        for coeff, tv in zip(head[1:], tvars):
            if not coeff.is_zero():
                rel = rel + coeff.convert(ext) * tv
        if not rel.is_zero():
            relations.append(rel)
    # quadratic relations: u_i*u_j = sum_k beta_k (u_k * d) mod I
    lift_targets = [m * d for m in mod_gens] + igens
    lifter = MembershipLifter(lift_targets)
    for i in range(1, s + 1):
        for j in range(i, s + 1):
            prod = mod_gens[i] * mod_gens[j]
            beta = lifter.lift(prod)
            if beta is None:
                raise DegenerateInputError(
                    "module is not closed under multiplication"
                )
            rel = tvars[i - 1] * tvars[j - 1] - beta[0].convert(ext)
            for k in range(1, s + 1):
                if not beta[k].is_zero():
                    rel = rel - beta[k].convert(ext) * tvars[k - 1]
            relations.append(rel)
    presentation = ExtensionPresentation(
        A,
        ext,
        names,
        numerators,
        d,
        Ideal(ext, [r for r in relations if not r.is_zero()]),
    )
    presentation.check_substitution()
    return presentation


def radical_in_extension(J, E, A):
    """The radical test ideal of A' = (1/d)U, re-expressed with the same
    denominator d: returns H with sqrt(J*A') = (1/d)H exactly.

    Computes K = sqrt(J + R) in the extension ring, clears denominators
    (each generator p contributes h = d**degT(p) * p(X, u/d)), forms
    H' = sum_k h_k * d**(mu - mu_k) * U with mu the maximal T-degree, and
    divides by d**mu via an ideal quotient.  The quotient renormalizes the
    denominator from d**(mu+1) down to d, keeping the single-d invariant of
    the loop."""
    ctx = A.context
    ext = E.ext_context
    ideal_ext = Ideal(
        ext,
        [g.convert(ext) for g in J.gens] + list(E.relation_ideal.gens),
    )
    K = ideal_ext.groebner()
    if K.is_unit_ideal():
        raise DegenerateInputError("test ideal became the unit ideal")
    radK = zero_dim_radical(Ideal(ext, list(K.elements)))
    d = E.denominator
    cleared = []
    mus = []
    for p in radK.groebner():
        mus.append(E.t_degree(p))
        cleared.append(E.clear_denominators(p).primitive())
    mu = max(mus) if mus else 0
    U_gens = [u.primitive() for u in _module_generators(E)]
    hprime = list(A.ideal.gens)
    for h, mk in zip(cleared, mus):
        scaled = h * d ** (mu - mk)
        hprime.extend(scaled * u for u in U_gens)
    Hp = Ideal(ctx, hprime)
    if mu == 0:
        H = Hp
    else:
        H = quotient_by_poly(Hp, d**mu)
    return H


def _module_generators(E):
    return [E.denominator] + list(E.numerators)


# ---------------------------------------------------------------------------
# reduction mod p
# ---------------------------------------------------------------------------


def reduce_poly_mod_p(f, ctx_p):
    """Image of a rational-coefficient polynomial mod p, or ``None`` when a
    coefficient denominator vanishes mod p."""
    p = ctx_p.field.char
    out = {}
    exps_of = f.ctx.order.exps_of
    for k, c in f.terms:
        den = c.denominator % p
        if den == 0:
            return None
        v = c.numerator * pow(den, -1, p) % p
        if v:
            out[exps_of(k)] = v
    return ctx_p.from_exp_dict(out)


def reduce_algebra_mod_p(A, p):
    """Reduce the defining ideal's reduced basis mod p; ``None`` = reject."""
    ctx = A.context
    ctx_p = RingContext(ctx.variables, prime_field(p), ctx.order_spec)
    gens_p = []
    for g in A.ideal.groebner():
        gp = reduce_poly_mod_p(g, ctx_p)
        if gp is None:
            return None
        if not gp.is_zero():
            gens_p.append(gp)
    if not gens_p:
        return None
    ideal_p = Ideal(ctx_p, gens_p)
    if ideal_p.is_unit():
        return None
    return AffineAlgebra(ctx_p, ideal_p, assumed_prime=A.assumed_prime)
