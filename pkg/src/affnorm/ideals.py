"""Ideal-level operations: sums, products, intersections, quotients,
elimination, Krull dimension, zero-dimensional radicals and minimal primes.

Radicals and prime decompositions are implemented for zero-dimensional
ideals (plus principal ideals); anything else raises
:class:`UnsupportedDimensionError` -- surfaces with positive-dimensional
singular locus are out of scope by design, and an explicit error beats a
wrong answer.
"""

from fractions import Fraction

from .errors import (
    ContextMismatchError,
    DegenerateInputError,
    ShapeError,
    UnsupportedDimensionError,
)
from .groebner import (
    _RAT,
    GroebnerBasis,
    _to_fraction,
    buchberger,
    kernel_cofactors,
    normal_form,
)
from .polyring import Polynomial, RingContext
from .univar import factor_univariate, squarefree_part, univariate_gcd


class Ideal:
    """An ideal of the context's polynomial ring, with cached reduced
    Groebner bases per monomial order."""

    __slots__ = ("context", "gens", "_gb_cache")

    def __init__(self, context, gens):
        self.context = context
        cleaned = []
        char0 = context.field.char == 0
        for g in gens:
            if g.ctx != context:
                raise ContextMismatchError("generator in the wrong ring")
            if not g.is_zero():
                # generators matter only up to scalars; the primitive
                # integer form keeps downstream products cheap
                cleaned.append(g.primitive() if char0 else g)
        self.gens = tuple(cleaned)
        self._gb_cache = {}

    @classmethod
    def from_strings(cls, context, texts):
        return cls(context, [context.poly(t) for t in texts])

    def groebner(self):
        """Reduced Groebner basis in the ideal's own order (cached)."""
        spec = self.context.order_spec
        gb = self._gb_cache.get(spec)
        if gb is None:
            if not self.gens:
                gb = GroebnerBasis(self.context, (), reduced=True)
            else:
                gb = buchberger(list(self.gens))
            self._gb_cache[spec] = gb
        return gb

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, f):
        if f.is_zero():
            return True
        if not self.gens:
            return False
        return normal_form(f, self.groebner()).is_zero()

    def contains_ideal(self, other):
        return all(self.contains(g) for g in other.gens)

    def __repr__(self):
        return "Ideal(%d generators)" % len(self.gens)

    def generator_strings(self):
        return [str(g) for g in self.groebner()]


def ideal_sum(I, J):
    _same_context(I, J)
    return Ideal(I.context, list(I.gens) + list(J.gens))


def ideal_product(I, J):
    _same_context(I, J)
    gens = [a * b for a in I.gens for b in J.gens]
    return Ideal(I.context, gens)


def multiply_by_poly(I, f):
    return Ideal(I.context, [f * g for g in I.gens])


def ideal_equals(I, J):
    _same_context(I, J)
    return I.groebner().elements == J.groebner().elements


def _same_context(I, J):
    if I.context != J.context:
        raise ContextMismatchError("ideals live in different rings")


def _fresh_var(ctx, base):
    name = base
    k = 0
    while name in ctx._var_index:
        k += 1
        name = "%s%d" % (base, k)
    return name


def eliminate(I, names):
    """Generators of ``I`` intersected with the subring without ``names``."""
    names = [n for n in names if n in I.context._var_index]
    if not names:
        return Ideal(I.context, list(I.gens))
    ctx = I.context
    rest = [v for v in ctx.variables if v not in names]
    if not rest:
        raise ShapeError("cannot eliminate every variable")
    elim_ctx = RingContext(
        tuple(names) + tuple(rest), ctx.field, ("block", len(names))
    )
    # start from the cached reduced basis: usually a better generating set
    moved = [g.convert(elim_ctx) for g in I.groebner().elements]
    if not moved:
        return Ideal(ctx, [])
    gb = buchberger(moved)
    order = elim_ctx.order
    kept = []
    for g in gb:
        if order.first_block_degree(g.lm_key()) == 0:
            kept.append(g.convert(ctx))
    return Ideal(ctx, kept)


def intersect(I, J):
    """I intersect J, as the kernel of W -> W/I + W/J: elements f with
    f = sum a_i g_i = -sum b_j h_j are produced by a module computation in
    the ambient degrevlex order (no elimination variable needed)."""
    _same_context(I, J)
    ctx = I.context
    if I.is_zero() or J.is_zero():
        return Ideal(ctx, [])
    # seeding with the reduced bases makes the diagonal (g, g) block and
    # the (h, 0) block internally inert: only cross pairs produce content
    columns = [([g], g, 0) for g in I.groebner()]
    columns += [([h], ctx.zero, 1) for h in J.groebner()]
    gens = [f for f in kernel_cofactors(columns, 1) if not f.is_zero()]
    return Ideal(ctx, gens)


def intersect_via_elimination(I, J):
    """Reference implementation of the intersection via the classical
    single-tag-variable elimination trick (kept for cross-checking)."""
    _same_context(I, J)
    ctx = I.context
    if I.is_zero() or J.is_zero():
        return Ideal(ctx, [])
    t_name = _fresh_var(ctx, "t_")
    big = ctx.extended((t_name,))
    t = big.var(t_name)
    gens = [t * g.convert(big) for g in I.gens]
    one_minus_t = big.one - t
    gens += [one_minus_t * g.convert(big) for g in J.gens]
    mixed = Ideal(big, gens)
    elim = eliminate(mixed, [t_name])
    return Ideal(ctx, [g.convert(ctx) for g in elim.gens])


def exact_quotient_poly(h, f):
    """The exact quotient h/f; raises if the division is not exact."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ctx = h.ctx
    order = ctx.order
    field = ctx.field
    fk = f.lm_key()
    flc = f.lc()
    rest = h
    q_terms = []
    divides = order.divides
    while rest.terms:
        k = rest.lm_key()
        if not divides(fk, k):
            raise DegenerateInputError("division is not exact")
        qk = k - fk + order.one_key
        if field.char:
            qc = rest.lc() * pow(flc, -1, field.char) % field.char
        else:
            qc = rest.lc() / flc
        q_terms.append((qk, qc))
        rest = rest - f.mul_term(qk, qc)
    return Polynomial(ctx, tuple(q_terms))


def quotient_by_poly(I, f):
    """(I : f), equal to (1/f) * (I intersect <f>)."""
    if f.is_zero():
        raise DegenerateInputError("quotient by the zero polynomial")
    return quotient(I, Ideal(I.context, [f]))


def quotient(I, J):
    """The ideal quotient I : J = intersection of the (I : h) over the
    generators h of J, computed in one kernel pass: a is in (I : J) iff
    a * (h_1, ..., h_t) lands in I^t."""
    _same_context(I, J)
    if J.is_zero():
        raise DegenerateInputError("quotient by the zero ideal")
    ctx = I.context
    hs = [h for h in J.groebner().elements] or list(J.gens)
    t = len(hs)
    columns = [(hs, ctx.one)]
    zero = ctx.zero
    # per-component copies of the reduced basis of I are inert seeds
    for x in I.groebner():
        for j in range(t):
            vec = [zero] * t
            vec[j] = x
            columns.append((vec, zero, 1 + j))
    gens = [f for f in kernel_cofactors(columns, t) if not f.is_zero()]
    return Ideal(ctx, gens)


def dimension(I):
    """Krull dimension of W/I, combinatorially from the leading monomials.

    Returns -1 for the unit ideal and the number of variables for the zero
    ideal."""
    ctx = I.context
    gb = I.groebner()
    if len(gb) == 0:
        return ctx.nvars
    if gb.is_unit_ideal():
        return -1
    exps_of = ctx.order.exps_of
    supports = []
    for g in gb:
        supp = frozenset(
            i for i, e in enumerate(exps_of(g.lm_key())) if e
        )
        supports.append(supp)
    n = ctx.nvars
    best = 0

    def explore(i, chosen):
        nonlocal best
        if len(chosen) + (n - i) <= best:
            return
        if i == n:
            best = max(best, len(chosen))
            return
        candidate = chosen | {i}
        if not any(s <= candidate for s in supports):
            explore(i + 1, candidate)
        explore(i + 1, chosen)

    explore(0, frozenset())
    return best


def vector_space_dimension(I):
    """Number of standard monomials of a zero-dimensional ideal."""
    ctx = I.context
    gb = I.groebner()
    if gb.is_unit_ideal():
        return 0
    exps_of = ctx.order.exps_of
    lms = [exps_of(g.lm_key()) for g in gb]
    n = ctx.nvars
    bounds = [None] * n
    for lm in lms:
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or lm[i] < bounds[i]:
                bounds[i] = lm[i]
    if any(b is None for b in bounds):
        raise UnsupportedDimensionError("ideal is not zero-dimensional")
    count = 0
    stack = [(0, [0] * n)]
    while stack:
        i, exps = stack.pop()
        if i == n:
            if not any(
                all(exps[j] >= lm[j] for j in range(n)) for lm in lms
            ):
                count += 1
            continue
        for e in range(bounds[i]):
            nxt = list(exps)
            nxt[i] = e
            stack.append((i + 1, nxt))
    return count


def element_minimal_polynomial_coeffs(I, u, bound=None):
    """Monic minimal polynomial of the residue of ``u`` modulo the
    zero-dimensional ideal ``I``, as an ascending coefficient list.

    Krylov iteration: reduce 1, u, u^2, ... to normal form and track the
    first linear dependence by incremental Gaussian elimination.  This
    stays in the cheap degrevlex basis instead of running a block-order
    elimination, whose coefficient growth is prohibitive.
    """
    gb = I.groebner()
    if gb.is_unit_ideal():
        raise DegenerateInputError("minimal polynomial over the zero ring")
    ctx = I.context
    p = ctx.field.char
    if bound is None:
        # also acts as the zero-dimensionality gate
        bound = vector_space_dimension(I)
    rows = []  # (pivot_key, echelon vector, combination in powers of u)
    current = ctx.one
    k = 0
    while k <= bound:
        if p:
            vec = {key: c for key, c in current.terms}
            one, zero = 1, 0
        else:
            vec = {key: _RAT(c.numerator, c.denominator) for key, c in current.terms}
            one, zero = _RAT(1), _RAT(0)
        combo = [zero] * k + [one]
        for pivot, rvec, rcombo in rows:
            c = vec.get(pivot)
            if not c:
                continue
            if p:
                for kk, vv in rvec.items():
                    nv = (vec.get(kk, 0) - c * vv) % p
                    if nv:
                        vec[kk] = nv
                    elif kk in vec:
                        del vec[kk]
                for idx, vv in enumerate(rcombo):
                    if vv:
                        combo[idx] = (combo[idx] - c * vv) % p
            else:
                for kk, vv in rvec.items():
                    nv = vec.get(kk, zero) - c * vv
                    if nv:
                        vec[kk] = nv
                    elif kk in vec:
                        del vec[kk]
                for idx, vv in enumerate(rcombo):
                    if vv:
                        combo[idx] = combo[idx] - c * vv
        if not vec:
            if p:
                return [c % p for c in combo]
            return [_to_fraction(c) for c in combo]
        pivot = max(vec)
        pv = vec[pivot]
        if p:
            inv = pow(pv, -1, p)
            nvec = {kk: vv * inv % p for kk, vv in vec.items()}
            ncombo = [vv * inv % p for vv in combo]
        else:
            inv = 1 / pv
            nvec = {kk: vv * inv for kk, vv in vec.items()}
            ncombo = [vv * inv for vv in combo]
        rows.append((pivot, nvec, ncombo))
        k += 1
        current = normal_form(current * u, gb)
    raise UnsupportedDimensionError(
        "no linear dependence found; ideal is not zero-dimensional"
    )


def minimal_polynomial(I, var):
    """Monic generator of I intersect K[var] (zero-dimensional I)."""
    ctx = I.context
    coeffs = element_minimal_polynomial_coeffs(I, ctx.var(var))
    i = ctx._var_index[var]
    d = {}
    for e, c in enumerate(coeffs):
        if c:
            exps = [0] * ctx.nvars
            exps[i] = e
            d[tuple(exps)] = c
    return ctx.from_exp_dict(d)


def zero_dim_radical(I):
    """Radical of a zero-dimensional ideal (Seidenberg: adjoin the
    squarefree parts of the univariate minimal polynomials)."""
    ctx = I.context
    gb = I.groebner()
    if gb.is_unit_ideal():
        return Ideal(ctx, [ctx.one])
    d = dimension(I)
    if d != 0:
        raise UnsupportedDimensionError(
            "radical implemented only in dimension 0 (got dimension %d)" % d
        )
    extra = []
    for v in ctx.variables:
        m = minimal_polynomial(I, v)
        s = squarefree_part(m)
        if s.monic() != m.monic():
            extra.append(s)
    if not extra:
        return Ideal(ctx, list(gb.elements))
    return Ideal(ctx, list(gb.elements) + extra)


def radical(I):
    """Radical dispatch: zero-dimensional or principal; everything else is
    an explicit unsupported-dimension error."""
    ctx = I.context
    gb = I.groebner()
    if gb.is_unit_ideal():
        return Ideal(ctx, [ctx.one])
    if len(gb) == 1 and dimension(I) != 0:
        return Ideal(ctx, [multivariate_squarefree_part(gb[0])])
    return zero_dim_radical(I)


def multivariate_squarefree_part(f):
    """Squarefree part of a multivariate polynomial in characteristic zero:
    f / gcd(f, all partial derivatives), with gcds computed via principal
    ideal intersections (adequate at desk scale)."""
    if f.ctx.field.char != 0:
        raise ShapeError("multivariate squarefree part needs characteristic 0")
    g = f
    for v in f.ctx.variables:
        d = f.derivative(v)
        if not d.is_zero():
            g = _poly_gcd(g, d)
    if g.is_constant():
        return f.monic()
    return exact_quotient_poly(f, g).monic()


def _poly_gcd(a, b):
    """gcd via <a> intersect <b> = <lcm> and gcd = a*b/lcm."""
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    ctx = a.ctx
    meet = intersect(Ideal(ctx, [a]), Ideal(ctx, [b]))
    gb = meet.groebner()
    if len(gb) != 1:
        raise ShapeError("principal intersection expected")
    lcm = gb[0]
    return exact_quotient_poly(a * b, lcm)


def _primitive_normalize(f):
    return f.monic()


def minimal_primes_zero_dim(I, seed=0):
    """Minimal primes of a zero-dimensional ideal.

    Splits recursively along the irreducible factors of univariate minimal
    polynomials; when every variable's minimal polynomial is irreducible the
    component is certified prime through a primitive linear form (minimal
    polynomial degree equals the vector space dimension).  Components come
    back with pairwise-comaximal reduced bases, deduplicated and canonically
    sorted.
    """
    ctx = I.context
    gb = I.groebner()
    if gb.is_unit_ideal():
        return []
    if dimension(I) != 0:
        raise UnsupportedDimensionError(
            "minimal primes implemented only in dimension 0"
        )
    out = {}
    work = [Ideal(ctx, list(gb.elements))]
    while work:
        J = work.pop()
        jgb = J.groebner()
        if jgb.is_unit_ideal():
            continue
        split = False
        minpolys = {}
        for v in ctx.variables:
            m = minimal_polynomial(J, v)
            factors = factor_univariate(m, seed=seed)
            if len(factors) > 1 or factors[0][1] > 1:
                for q, _mult in factors:
                    work.append(Ideal(ctx, list(jgb.elements) + [q]))
                split = True
                break
            minpolys[v] = factors[0][0]
        if split:
            continue
        vd = vector_space_dimension(J)
        certified = any(
            m.total_degree() == vd for m in minpolys.values()
        )
        if certified:
            key = tuple(str(g) for g in J.groebner())
            out.setdefault(key, J)
            continue
        # primitive linear form u = x0 + c*x1 + c^2*x2 + ...
        done = False
        for c in range(1, 64):
            u = ctx.zero
            mult = 1
            for v in ctx.variables:
                u = u + ctx.var(v).scale(mult)
                mult *= c
            coeffs = element_minimal_polynomial_coeffs(J, u, bound=vd)
            if len(coeffs) - 1 < vd:
                continue
            helper = RingContext(("Z",), ctx.field)
            m_u = helper.from_exp_dict(
                {(e,): cc for e, cc in enumerate(coeffs) if cc}
            )
            factors = factor_univariate(m_u, seed=seed)
            if len(factors) == 1 and factors[0][1] == 1:
                key = tuple(str(g) for g in J.groebner())
                out.setdefault(key, J)
            else:
                for q, _mult in factors:
                    q_sub = _evaluate_univariate_at(q, u)
                    work.append(Ideal(ctx, list(jgb.elements) + [q_sub]))
            done = True
            break
        if not done:
            raise ShapeError("no primitive linear form found (unexpected)")
    comps = sorted(
        out.values(),
        key=lambda J: (len(J.groebner()), [str(g) for g in J.groebner()]),
    )
    return comps


def _evaluate_univariate_at(q, u):
    """q(u): evaluate a univariate polynomial at the ring element u
    (Horner over the dense coefficients)."""
    from .univar import to_dense

    coeffs = to_dense(q)
    result = u.ctx.zero
    for c in reversed(coeffs):
        result = result * u + u.ctx.constant(c)
    return result
