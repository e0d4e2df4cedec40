"""Buchberger's algorithm, normal forms, reduced bases, and the module
(graph) variant that provides cofactor traces, membership lifts and syzygies.

Two coefficient regimes share the same code paths:

* prime field -- coefficients are ints in ``[0, p)``;
* rationals   -- basis elements are scaled to primitive integer vectors and
  reduction works with exact rational coefficients (GMP-backed ``mpq`` when
  gmpy2 is importable, ``Fraction`` otherwise), so nothing is ever rescaled
  globally and results are exact.

Reduction always uses the first divisor in basis order, so results are
deterministic for a fixed input sequence.  Pair selection is the normal
strategy (smallest lcm degree first) with the product criterion and a
conservative chain criterion.
"""

import heapq
from fractions import Fraction
from math import gcd as int_gcd

from .errors import ContextMismatchError, ShapeError
from .polyring import Polynomial

try:  # GMP-backed exact arithmetic, ~an order of magnitude faster
    from gmpy2 import mpq as _RAT, mpz as _INT

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _RAT, _INT = Fraction, int
    _HAVE_GMPY = False


def _to_fraction(c):
    if isinstance(c, Fraction):
        return c
    return Fraction(int(c.numerator), int(c.denominator))


# ---------------------------------------------------------------------------
# conversions between Polynomial and internal term lists
# ---------------------------------------------------------------------------


def _poly_to_primitive(poly):
    """Primitive integer term list (positive leading coefficient)."""
    return _poly_to_primitive_scaled(poly)[0]


def _poly_to_primitive_scaled(poly):
    """Primitive integer term list plus the scale s with terms = s * poly."""
    den = 1
    for _, c in poly.terms:
        d = c.denominator
        if d != 1:
            den = den * d // int_gcd(den, d)
    if den == 1:
        ints = [(k, c.numerator) for k, c in poly.terms]
    else:
        ints = [
            (k, c.numerator * (den // c.denominator)) for k, c in poly.terms
        ]
    content = 0
    for _, v in ints:
        content = int_gcd(content, v)
        if content == 1:
            break
    if content > 1:
        ints = [(k, v // content) for k, v in ints]
    else:
        content = 1
    if ints and ints[0][1] < 0:
        ints = [(k, -v) for k, v in ints]
        content = -content
    if _HAVE_GMPY:
        ints = [(k, _INT(v)) for k, v in ints]
    return ints, Fraction(den, content)


def _strip_content(terms):
    content = 0
    for _, c in terms:
        content = int_gcd(content, int(c))
        if content == 1:
            break
    if terms and terms[0][1] < 0:
        content = -content
    if content not in (0, 1):
        return [(k, c // content) for k, c in terms]
    return list(terms)


def _terms_of(f, p):
    if p:
        return list(f.terms)
    return _poly_to_primitive(f)


def _emit_poly(ctx, terms, p):
    """Public Polynomial from internal terms, monic over any field."""
    if p:
        lc = terms[0][1]
        if lc != 1:
            inv = pow(lc, -1, p)
            terms = [(k, c * inv % p) for k, c in terms]
        return Polynomial(ctx, tuple(terms))
    lc = terms[0][1]
    return Polynomial(
        ctx, tuple((k, _to_fraction(_RAT(c) / lc)) for k, c in terms)
    )


# ---------------------------------------------------------------------------
# scalar normal form
# ---------------------------------------------------------------------------


def _nf_terms(fterms, lms, tails, lcs, order, p):
    """Fully reduce ``fterms`` against the basis (lms, tails, lcs); always
    uses the first divisor in basis order.  Coefficients: ints mod p, or
    exact rationals in characteristic zero."""
    low = order.div_low
    g = order.div_guard
    comp = order.complement
    # plain degrevlex cannot overflow during reduction (tail degrees are
    # bounded by the leading degree); block/lex orders are checked.
    overflow_guard = 0 if order.kind == "degrevlex" else order.mul_guard
    nb = len(lms)
    if comp:
        bmask = [((lm & low) | g) for lm in lms]
    else:
        bmask = lms
    work = dict(fterms)
    heap = list(work)
    _heapify_max(heap)
    out = []
    while heap:
        k = _heappop_max(heap)
        c = work.pop(k, 0)
        if not c:
            continue
        bi = -1
        if comp:
            kl = k & low
            for i in range(nb):
                if ((bmask[i] - kl) & g) == g:
                    bi = i
                    break
        else:
            km = k | g
            for i in range(nb):
                if ((km - bmask[i]) & g) == g:
                    bi = i
                    break
        if bi < 0:
            out.append((k, c))
            continue
        shift = k - lms[bi]
        tail = tails[bi]
        if p:
            cf = c * pow(lcs[bi], -1, p) % p
            for bk, bc in tail:
                nk = shift + bk
                if overflow_guard and (nk & overflow_guard):
                    raise OverflowError("monomial degree overflow in reduction")
                v = work.get(nk)
                if v is None:
                    work[nk] = -cf * bc % p
                    _heappush_max(heap, nk)
                else:
                    work[nk] = (v - cf * bc) % p
        else:
            cf = _RAT(c) / lcs[bi]
            for bk, bc in tail:
                nk = shift + bk
                if overflow_guard and (nk & overflow_guard):
                    raise OverflowError("monomial degree overflow in reduction")
                v = work.get(nk)
                if v is None:
                    work[nk] = -cf * bc
                    _heappush_max(heap, nk)
                else:
                    work[nk] = v - cf * bc
    return out


# max-heap helpers over plain ints (negate for heapq's min-heap)


def _heapify_max(lst):
    for i in range(len(lst)):
        lst[i] = -lst[i]
    heapq.heapify(lst)


def _heappop_max(lst):
    return -heapq.heappop(lst)


def _heappush_max(lst, item):
    heapq.heappush(lst, -item)


class _Basis:
    """Mutable basis state shared by the Buchberger drivers."""

    __slots__ = ("order", "p", "lms", "tails", "lcs", "full")

    def __init__(self, order, p):
        self.order = order
        self.p = p
        self.lms = []
        self.tails = []  # terms *excluding* the leading term
        self.lcs = []
        self.full = []  # complete term lists

    def add(self, terms):
        self.lms.append(terms[0][0])
        self.lcs.append(terms[0][1])
        self.tails.append(terms[1:])
        self.full.append(terms)

    def nf(self, terms):
        return _nf_terms(terms, self.lms, self.tails, self.lcs, self.order, self.p)


def _normalize_new(red, p):
    """Monic basis element (both regimes); monic rationals keep every
    coefficient individually reduced, which beats clearing denominators
    when elimination orders blow coefficients up."""
    lc = red[0][1]
    if p:
        if lc != 1:
            inv = pow(lc, -1, p)
            red = [(k, c * inv % p) for k, c in red]
        return red
    if lc == 1:
        return red
    inv = 1 / _RAT(lc)
    return [(k, c * inv) for k, c in red]


def _spoly(terms_i, terms_j, order, p):
    lm_i, lc_i = terms_i[0]
    lm_j, lc_j = terms_j[0]
    lcm = order.key_of(
        tuple(
            max(a, b)
            for a, b in zip(order.exps_of(lm_i), order.exps_of(lm_j))
        )
    )
    si = lcm - lm_i  # shifted quotient keys (one_key offsets cancel)
    sj = lcm - lm_j
    acc = {}
    if p:
        ci = pow(lc_i, -1, p)
        cj = pow(lc_j, -1, p)
        for k, c in terms_i:
            acc[si + k] = c * ci % p
        for k, c in terms_j:
            nk = sj + k
            acc[nk] = (acc.get(nk, 0) - c * cj) % p
        terms = [(k, c) for k, c in sorted(acc.items(), reverse=True) if c]
    else:
        mi = _RAT(1) / lc_i
        mj = _RAT(1) / lc_j
        for k, c in terms_i:
            acc[si + k] = c * mi
        for k, c in terms_j:
            nk = sj + k
            acc[nk] = acc.get(nk, 0) - c * mj
        terms = [(k, c) for k, c in sorted(acc.items(), reverse=True) if c]
    if order.kind != "degrevlex" and terms:
        guard = order.mul_guard
        for k, _ in terms:
            if k & guard:
                raise OverflowError("monomial degree overflow in S-polynomial")
    return terms


def _buchberger_terms(gens_terms, order, p):
    """Core Buchberger loop on internal term lists; returns the raw basis."""
    basis = _Basis(order, p)
    deg = order.deg
    exps_of = order.exps_of
    key_of = order.key_of
    one = order.one_key
    pending = []  # heap of (lcm degree, lcm key, i, j)
    done = set()

    def push_pairs(t):
        lm_t = basis.lms[t]
        et = exps_of(lm_t)
        for i in range(t):
            lm_i = basis.lms[i]
            lcm = key_of(tuple(max(a, b) for a, b in zip(exps_of(lm_i), et)))
            if lcm == lm_i + lm_t - one:
                # product criterion: coprime leading monomials
                done.add((i, t))
                continue
            heapq.heappush(pending, (deg(lcm), lcm, i, t))

    for terms in gens_terms:
        if not terms:
            continue
        red = basis.nf(terms)
        if not red:
            continue
        basis.add(_normalize_new(red, p))
        push_pairs(len(basis.lms) - 1)

    divides = order.divides
    while pending:
        _, lcm, i, j = heapq.heappop(pending)
        pair = (i, j)
        if pair in done:
            continue
        # chain criterion: some handled element splits the pair
        skip = False
        for k in range(len(basis.lms)):
            if k == i or k == j:
                continue
            if divides(basis.lms[k], lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a in done and b in done:
                    skip = True
                    break
        done.add(pair)
        if skip:
            continue
        s = _spoly(basis.full[i], basis.full[j], order, p)
        if not s:
            continue
        red = basis.nf(s)
        if not red:
            continue
        basis.add(_normalize_new(red, p))
        push_pairs(len(basis.lms) - 1)
    return basis


def _interreduce_terms(basis_terms, order, p):
    """Minimal + fully reduced form of a Groebner basis (term lists)."""
    items = sorted(basis_terms, key=lambda t: t[0][0])
    divides = order.divides
    kept = []
    for terms in items:
        lm = terms[0][0]
        if any(divides(other[0][0], lm) for other in kept):
            continue
        kept = [o for o in kept if not divides(lm, o[0][0])] + [terms]
    kept.sort(key=lambda t: t[0][0])
    out = []
    for idx, terms in enumerate(kept):
        others = kept[:idx] + kept[idx + 1 :]
        if others:
            lms = [o[0][0] for o in others]
            tails = [o[1:] for o in others]
            lcs = [o[0][1] for o in others]
            red = _nf_terms(terms, lms, tails, lcs, order, p)
        else:
            red = list(terms)
        if not red:
            continue
        out.append(_normalize_new(red, p))
    out.sort(key=lambda t: t[0][0])
    return out


# ---------------------------------------------------------------------------
# public interface
# ---------------------------------------------------------------------------


class GroebnerBasis:
    """A Groebner basis; ``reduced`` bases are monic, self-reduced and
    sorted ascending by leading monomial (the unique canonical form)."""

    __slots__ = ("context", "elements", "reduced")

    def __init__(self, context, elements, reduced):
        self.context = context
        self.elements = tuple(elements)
        self.reduced = reduced

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.context == other.context
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.context, self.elements))

    def __repr__(self):
        return "GroebnerBasis(%d elements, reduced=%s)" % (
            len(self.elements),
            self.reduced,
        )

    def leading_keys(self):
        return [g.lm_key() for g in self.elements]

    def is_unit_ideal(self):
        return len(self.elements) == 1 and self.elements[0].is_constant()


class CofactorTrace:
    """Rows expressing each traced basis element in the original generators."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = rows

    def __getitem__(self, i):
        return self.rows[i]

    def __len__(self):
        return len(self.rows)


def _shared_context(polys):
    ctx = None
    for f in polys:
        if ctx is None:
            ctx = f.ctx
        elif f.ctx != ctx:
            raise ContextMismatchError("generators live in different rings")
    if ctx is None:
        raise ShapeError("need at least one generator")
    return ctx


def buchberger(gens, trace=False):
    """Groebner basis of the ideal generated by ``gens``.

    With ``trace=True`` returns ``(basis, CofactorTrace)`` where the trace
    rows are exact polynomial combinations reproducing each basis element
    from ``gens``.  The traced basis is not reduced; the plain basis is the
    unique reduced one.
    """
    ctx = _shared_context(gens)
    p = ctx.field.char
    order = ctx.order
    if trace:
        gb_vecs = _module_buchberger_graph(gens)
        elements = []
        rows = []
        for vec in gb_vecs:
            head = vec[0]
            if head.is_zero():
                continue
            elements.append(head)
            rows.append(vec[1:])
        pairs = sorted(zip(elements, rows), key=lambda er: er[0].sort_key())
        elements = [e for e, _ in pairs]
        rows = [r for _, r in pairs]
        return (
            GroebnerBasis(ctx, elements, reduced=False),
            CofactorTrace(rows),
        )
    raw = _buchberger_terms([_terms_of(f, p) for f in gens], order, p)
    reduced = _interreduce_terms(raw.full, order, p)
    return GroebnerBasis(
        ctx, [_emit_poly(ctx, t, p) for t in reduced], reduced=True
    )


def reduced_basis(gens_or_gb):
    """The unique reduced Groebner basis of the given ideal."""
    if isinstance(gens_or_gb, GroebnerBasis):
        if gens_or_gb.reduced:
            return gens_or_gb
        gens = list(gens_or_gb.elements)
    else:
        gens = list(gens_or_gb)
    return buchberger(gens)


def normal_form(f, basis):
    """Deterministic normal form of ``f`` against ``basis`` (a
    GroebnerBasis or a plain list of polynomials, reduced in list order)."""
    if isinstance(basis, GroebnerBasis):
        elements = basis.elements
    else:
        elements = list(basis)
    if not elements:
        return f
    ctx = f.ctx
    for g in elements:
        if g.ctx != ctx:
            raise ContextMismatchError("normal form across different rings")
    p = ctx.field.char
    order = ctx.order
    if p:
        lms = [g.lm_key() for g in elements]
        tails = [list(g.terms[1:]) for g in elements]
        lcs = [g.lc() for g in elements]
        out = _nf_terms(list(f.terms), lms, tails, lcs, order, p)
        return Polynomial(ctx, tuple(out))
    ints = [_poly_to_primitive(g) for g in elements]
    lms = [t[0][0] for t in ints]
    tails = [t[1:] for t in ints]
    lcs = [t[0][1] for t in ints]
    fterms = [(k, _RAT(c.numerator, c.denominator)) for k, c in f.terms]
    out = _nf_terms(fterms, lms, tails, lcs, order, p)
    return Polynomial(ctx, tuple((k, _to_fraction(c)) for k, c in out))


def s_polynomial(f, g):
    """The S-polynomial of two nonzero polynomials (the classical monic
    normalization: lcm/lt(f)*f - lcm/lt(g)*g over monic scalings)."""
    if f.is_zero() or g.is_zero():
        raise ShapeError("S-polynomial of zero")
    ctx = f.ctx
    p = ctx.field.char
    terms = _spoly(_terms_of(f, p), _terms_of(g, p), ctx.order, p)
    if p:
        return Polynomial(ctx, tuple(terms))
    return Polynomial(ctx, tuple((k, _to_fraction(c)) for k, c in terms))


def is_groebner_basis(polys):
    """Buchberger's criterion, batched: every S-polynomial of the list
    reduces to zero against the list (first-divisor rule).  The internal
    conversions happen once, not per pair."""
    polys = [f for f in polys if not f.is_zero()]
    if len(polys) <= 1:
        return True
    ctx = _shared_context(polys)
    p = ctx.field.char
    order = ctx.order
    ints = [_terms_of(f, p) for f in polys]
    lms = [t[0][0] for t in ints]
    tails = [t[1:] for t in ints]
    lcs = [t[0][1] for t in ints]
    for i in range(len(ints)):
        for j in range(i + 1, len(ints)):
            s = _spoly(ints[i], ints[j], order, p)
            if not s:
                continue
            if _nf_terms(s, lms, tails, lcs, order, p):
                return False
    return True


# ---------------------------------------------------------------------------
# module engine (graph construction): traces, lifts, syzygies
# ---------------------------------------------------------------------------
#
# For generators g_1..g_m the graph module M in W^(1+m) is generated by
# v_i = (g_i, e_i).  Any element of M has the shape (sum a_i g_i, a_1..a_m).
# With a position-over-term order ranking component 0 above the rest, the
# Groebner basis of M yields:
#   * elements with nonzero component 0: a traced basis of <g_1..g_m>;
#   * elements with zero component 0: generators of the syzygy module.
# Reducing (f, 0..0) against the basis decides membership and produces the
# combination coefficients.


def _module_nf(fvec, basis, order, p):
    """Normal form of a module vector (dict {(comp, key): coeff})."""
    low = order.div_low
    g = order.div_guard
    comp_style = order.complement
    # cofactor components may exceed the leading component's degree, so the
    # degree-field guard is always checked here.
    overflow_guard = order.mul_guard
    work = dict(fvec)
    heap = [(c, -k) for (c, k) in work]
    heapq.heapify(heap)
    blm = [b[0][0] for b in basis]  # (comp, key)
    out = {}
    while heap:
        hc, hk = heapq.heappop(heap)
        mk = (hc, -hk)
        c = work.pop(mk, 0)
        if not c:
            continue
        comp, key = mk
        bi = -1
        for i, (bcomp, bkey) in enumerate(blm):
            if bcomp != comp:
                continue
            if comp_style:
                if ((((bkey & low) | g) - (key & low)) & g) == g:
                    bi = i
                    break
            else:
                if (((key | g) - bkey) & g) == g:
                    bi = i
                    break
        if bi < 0:
            out[mk] = c
            continue
        terms = basis[bi]
        lc = terms[0][1]
        shift = key - blm[bi][1]
        if p:
            cf = c * pow(lc, -1, p) % p
            for (tcomp, tkey), tc in terms[1:]:
                nkey = tkey + shift
                if nkey & overflow_guard:
                    raise OverflowError("monomial degree overflow in reduction")
                nk = (tcomp, nkey)
                v = work.get(nk)
                if v is None:
                    work[nk] = -cf * tc % p
                    heapq.heappush(heap, (nk[0], -nk[1]))
                else:
                    work[nk] = (v - cf * tc) % p
        else:
            cf = _RAT(c) / lc
            for (tcomp, tkey), tc in terms[1:]:
                nkey = tkey + shift
                if nkey & overflow_guard:
                    raise OverflowError("monomial degree overflow in reduction")
                nk = (tcomp, nkey)
                v = work.get(nk)
                if v is None:
                    work[nk] = -cf * tc
                    heapq.heappush(heap, (nk[0], -nk[1]))
                else:
                    work[nk] = v - cf * tc
    return out


def _vec_normalize(d, p):
    """Sorted, monic module vector from a dict."""
    items = [(mk, c) for mk, c in d.items() if c]
    items.sort(key=lambda t: (t[0][0], -t[0][1]))
    if not items:
        return items
    if p:
        inv = pow(items[0][1], -1, p)
        return [(mk, c * inv % p) for mk, c in items]
    lc = items[0][1]
    if lc == 1:
        return items
    inv = 1 / _RAT(lc)
    return [(mk, c * inv) for mk, c in items]


def _module_buchberger(vectors, order, p, value_comps=1, inert=None):
    """Basis of a "graph" module, completing only the pairs whose leading
    terms sit in the value block (components < ``value_comps``).  By the
    standard syzygy-via-Buchberger argument (Moeller-Mora-Traverso /
    Schreyer) this yields a Groebner basis of the value-block projection
    with exact cofactors, and the elements whose value block dropped to
    zero generate the full kernel; the cofactor components need not be
    completed.  Pairs are formed within a component only, and only the
    chain criterion is applied (the product criterion is not valid for
    modules).

    ``inert`` assigns group ids to input vectors; pairs between two members
    of the same (non-None) group are skipped.  A group must be a
    per-component copy of an already computed Groebner basis with zero
    cofactors, so its internal S-vectors admit zero-cofactor standard
    representations and contribute nothing to the kernel."""
    basis = []
    flags = []
    pending = []
    done = set()
    deg = order.deg
    exps_of = order.exps_of
    key_of = order.key_of

    def push_pairs(t):
        ct, kt = basis[t][0][0]
        if ct >= value_comps:
            return
        et = exps_of(kt)
        group_t = flags[t]
        for i in range(t):
            ci, ki = basis[i][0][0]
            if ci != ct:
                continue
            if group_t is not None and flags[i] == group_t:
                continue
            lcm = key_of(tuple(max(a, b) for a, b in zip(exps_of(ki), et)))
            heapq.heappush(pending, (deg(lcm), ct, lcm, i, t))

    if inert is None:
        inert = [None] * len(vectors)
    for vec, group in zip(vectors, inert):
        red = _module_nf(dict(vec), basis, order, p)
        items = _vec_normalize(red, p)
        if not items:
            continue
        basis.append(items)
        flags.append(group)
        push_pairs(len(basis) - 1)

    divides = order.divides
    while pending:
        _, comp, lcm, i, j = heapq.heappop(pending)
        pair = (i, j)
        if pair in done:
            continue
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            ck, kk = basis[k][0][0]
            if ck == comp and divides(kk, lcm):
                a = (i, k) if i < k else (k, i)
                b = (j, k) if j < k else (k, j)
                if a in done and b in done:
                    skip = True
                    break
        done.add(pair)
        if skip:
            continue
        vi, vj = basis[i], basis[j]
        (ci, ki), lci = vi[0]
        (cj, kj), lcj = vj[0]
        si = lcm - ki
        sj = lcm - kj
        guard = order.mul_guard
        acc = {}
        if p:
            a = pow(lci, -1, p)
            b = pow(lcj, -1, p)
            for (tc, tk), coeff in vi:
                nk = tk + si
                if nk & guard:
                    raise OverflowError("monomial degree overflow in S-vector")
                acc[(tc, nk)] = coeff * a % p
            for (tc, tk), coeff in vj:
                nkey = tk + sj
                if nkey & guard:
                    raise OverflowError("monomial degree overflow in S-vector")
                nk = (tc, nkey)
                acc[nk] = (acc.get(nk, 0) - coeff * b) % p
        else:
            dgc = int_gcd(int(lci), int(lcj))
            a = lcj // dgc
            b = lci // dgc
            for (tc, tk), coeff in vi:
                nk = tk + si
                if nk & guard:
                    raise OverflowError("monomial degree overflow in S-vector")
                acc[(tc, nk)] = coeff * a
            for (tc, tk), coeff in vj:
                nkey = tk + sj
                if nkey & guard:
                    raise OverflowError("monomial degree overflow in S-vector")
                nk = (tc, nkey)
                acc[nk] = acc.get(nk, 0) - coeff * b
        red = _module_nf(acc, basis, order, p)
        items = _vec_normalize(red, p)
        if not items:
            continue
        basis.append(items)
        flags.append(None)
        push_pairs(len(basis) - 1)
    return basis


def _graph_vectors(gens, p):
    """Graph vectors (s_i * g_i, s_i * e_i); the cofactor coordinate must
    carry the same scale as the normalized polynomial part."""
    vectors = []
    one = gens[0].ctx.order.one_key
    for i, f in enumerate(gens):
        if p:
            vec = [((0, k), c) for k, c in f.terms]
            vec.append(((i + 1, one), 1 % p))
        else:
            terms, scale = _poly_to_primitive_scaled(f)
            vec = [((0, k), c) for k, c in terms]
            vec.append(
                ((i + 1, one), _RAT(scale.numerator, scale.denominator))
            )
        vectors.append(vec)
    return vectors


def _module_buchberger_graph(gens):
    """Groebner basis of the graph module, as lists of Polynomials
    (component 0 first, then the m cofactor components)."""
    ctx = _shared_context(gens)
    p = ctx.field.char
    order = ctx.order
    basis = _module_buchberger(_graph_vectors(gens, p), order, p)
    m = len(gens)
    out = []
    for vec in basis:
        comps = [dict() for _ in range(m + 1)]
        for (comp, key), c in vec:
            comps[comp][key] = c
        polys = []
        for d in comps:
            terms = sorted(d.items(), reverse=True)
            if p:
                polys.append(Polynomial(ctx, tuple(terms)))
            else:
                polys.append(
                    Polynomial(
                        ctx, tuple((k, _to_fraction(c)) for k, c in terms)
                    )
                )
        out.append(polys)
    return out


class MembershipLifter:
    """Precomputed graph-module basis for repeated membership lifts over a
    fixed generator list."""

    __slots__ = ("ctx", "gens", "p", "order", "basis")

    def __init__(self, gens):
        self.gens = list(gens)
        self.ctx = _shared_context(self.gens)
        self.p = self.ctx.field.char
        self.order = self.ctx.order
        self.basis = _module_buchberger(
            _graph_vectors(self.gens, self.p), self.order, self.p
        )

    def lift(self, f):
        """Coefficients beta with ``f == sum(beta_k * gens_k)``; ``None``
        when ``f`` is not in the ideal."""
        ctx = self.ctx
        p = self.p
        if p:
            fvec = {(0, k): c for k, c in f.terms}
        else:
            fvec = {
                (0, k): _RAT(c.numerator, c.denominator) for k, c in f.terms
            }
        if not fvec:
            return [ctx.zero for _ in self.gens]
        red = _module_nf(fvec, self.basis, self.order, p)
        red = {mk: c for mk, c in red.items() if c}
        if any(comp == 0 for (comp, _key) in red):
            return None
        m = len(self.gens)
        comps = [dict() for _ in range(m + 1)]
        for (comp, key), c in red.items():
            comps[comp][key] = c
        out = []
        for d in comps[1:]:
            if p:
                terms = sorted(
                    ((k, -c % p) for k, c in d.items()), reverse=True
                )
            else:
                terms = sorted(
                    ((k, _to_fraction(-c)) for k, c in d.items()), reverse=True
                )
            out.append(Polynomial(ctx, tuple(t for t in terms if t[1])))
        return out


def lift_combination(f, gens):
    """Coefficients beta with ``f == sum(beta_k * gens_k)``; ``None`` when
    ``f`` is not in the ideal."""
    return MembershipLifter(list(gens) + []).lift(f)


def syzygies(gens):
    """Generators of the syzygy module of ``gens``: vectors ``a`` (lists of
    polynomials) with ``sum(a_i * gens_i) == 0`` exactly."""
    vecs = _module_buchberger_graph(list(gens))
    out = []
    for vec in vecs:
        if vec[0].is_zero():
            row = vec[1:]
            if any(not r.is_zero() for r in row):
                out.append(row)
    return out


def _vector_to_scaled_terms(polys, p):
    """Module terms for the column (polys[0], ..., polys[t-1]); over the
    rationals the whole column is scaled by one rational to primitive
    integer form (the scale is returned for callers that track it)."""
    if p:
        out = []
        for comp, f in enumerate(polys):
            out.extend(((comp, k), c) for k, c in f.terms)
        out.sort(key=lambda t: (t[0][0], -t[0][1]))
        return out, 1
    den = 1
    for f in polys:
        for _, c in f.terms:
            d = c.denominator
            if d != 1:
                den = den * d // int_gcd(den, d)
    ints = []
    content = 0
    for comp, f in enumerate(polys):
        for k, c in f.terms:
            v = c.numerator if den == 1 else int(c * den)
            ints.append(((comp, k), v))
            content = int_gcd(content, v)
    if content > 1:
        ints = [(mk, v // content) for mk, v in ints]
    else:
        content = 1
    ints.sort(key=lambda t: (t[0][0], -t[0][1]))
    if ints and ints[0][1] < 0:
        ints = [(mk, -v) for mk, v in ints]
        content = -content
    if _HAVE_GMPY:
        ints = [(mk, _INT(v)) for mk, v in ints]
    return ints, Fraction(den, content)


def kernel_cofactors(columns, value_comps):
    """Generators of the kernel cofactors of a column module.

    ``columns`` is a list of (value_vector, cofactor[, inert_group]) with
    value_vector a list of ``value_comps`` polynomials and ``cofactor`` one
    polynomial (placed in an extra trailing component).  Returns the
    cofactor polynomials of all module basis elements whose value block
    vanished -- e.g. with columns ((h_1..h_t), 1) and ((x*e_j,), 0) these
    generate the quotient (X : H).  Columns sharing an inert group id
    (known per-component Groebner bases with zero cofactors) skip their
    mutual pairs."""
    ctx = None
    for col in columns:
        vec, cof = col[0], col[1]
        for f in list(vec) + [cof]:
            if ctx is None:
                ctx = f.ctx
            elif f.ctx != ctx:
                raise ContextMismatchError("column entries in different rings")
    p = ctx.field.char
    order = ctx.order
    vectors = []
    inert = []
    for col in columns:
        vec, cof = col[0], col[1]
        terms, _scale = _vector_to_scaled_terms(list(vec) + [cof], p)
        if terms:
            vectors.append(terms)
            inert.append(col[2] if len(col) > 2 else None)
    basis = _module_buchberger(
        vectors, order, p, value_comps=value_comps, inert=inert
    )
    out = []
    for vec in basis:
        lead_comp = vec[0][0][0]
        if lead_comp < value_comps:
            continue
        terms = sorted(((k, c) for (comp, k), c in vec), reverse=True)
        if p:
            out.append(Polynomial(ctx, tuple(terms)))
        else:
            out.append(
                Polynomial(ctx, tuple((k, _to_fraction(c)) for k, c in terms))
            )
    return out
