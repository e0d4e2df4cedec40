"""Univariate polynomial toolkit: gcd, squarefree parts, and factorization
over prime fields (Cantor-Zassenhaus) and the rationals (Zassenhaus with
linear Hensel lifting).

Internals work on dense coefficient lists ``[c0, c1, ...]`` (constant term
first, no trailing zeros); the public functions accept and return
:class:`~affnorm.polyring.Polynomial` values that are univariate in one
variable.
"""

import random
from fractions import Fraction
from itertools import combinations
from math import gcd as int_gcd, isqrt

from .arith import derive_seed, is_prime
from .errors import ShapeError

# ---------------------------------------------------------------------------
# dense arithmetic over GF(p)
# ---------------------------------------------------------------------------


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _gdeg(a):
    return len(a) - 1


def _gadd(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _gsub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _gmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim([c % p for c in out])


def _gscale(a, c, p):
    return _trim([x * c % p for x in a])


def _gdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv % p
            q[i - db] = c
            for j, cb in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * cb) % p
    return _trim(q), _trim([c % p for c in a[:db]])


def _gmonic(a, p):
    if not a:
        return a
    if a[-1] == 1:
        return a
    return _gscale(a, pow(a[-1], -1, p), p)


def _ggcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _gdivmod(a, b, p)[1]
    return _gmonic(a, p)


def _gpowmod(base, e, mod, p):
    result = [1]
    base = _gdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _gdivmod(_gmul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _gdivmod(_gmul(base, base, p), mod, p)[1]
    return result


def _gderiv(a, p):
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _gsqf_part(f, p):
    """Monic product of the distinct irreducible factors of f over GF(p)."""
    f = _gmonic(f, p)
    if _gdeg(f) <= 0:
        return [1]
    fp = _gderiv(f, p)
    if not fp:
        # f = g(x^p); over the prime field the p-th root just contracts
        # exponents (coefficients are Frobenius-fixed).
        root = [f[i] for i in range(0, len(f), p)]
        return _gsqf_part(root, p)
    g = _ggcd(f, fp, p)
    w = _gdivmod(f, g, p)[0]
    while True:
        c = _ggcd(g, w, p)
        if _gdeg(c) <= 0:
            break
        g = _gdivmod(g, c, p)[0]
    if _gdeg(g) > 0:
        w = _gmul(w, _gsqf_part(g, p), p)
    return _gmonic(w, p)


def _gfactor_equal_degree(f, d, p, rng):
    """Split the monic squarefree f (all factors of degree d) over GF(p)."""
    n = _gdeg(f)
    if n == d:
        return [f]
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if _gdeg(g) == d:
            out.append(g)
            continue
        while True:
            a = [rng.randrange(p) for _ in range(_gdeg(g))]
            _trim(a)
            if _gdeg(a) < 1:
                continue
            if p == 2:
                # trace map splitting for GF(2)
                t = list(a)
                acc = list(a)
                for _ in range(d - 1):
                    t = _gdivmod(_gmul(t, t, p), g, p)[1]
                    acc = _gadd(acc, t, p)
                c = _ggcd(acc, g, p)
            else:
                b = _gpowmod(a, (p**d - 1) // 2, g, p)
                c = _ggcd(_gsub(b, [1], p), g, p)
            if 0 < _gdeg(c) < _gdeg(g):
                stack.append(c)
                stack.append(_gdivmod(g, c, p)[0])
                break
    return out


def _gfactor_squarefree(f, p, rng):
    """Irreducible monic factors of the monic squarefree f over GF(p)."""
    factors = []
    v = _gmonic(f, p)
    h = [0, 1]  # x
    d = 0
    while _gdeg(v) >= 2 * (d + 1):
        d += 1
        h = _gpowmod(h, p, v, p)
        g = _ggcd(_gsub(h, [0, 1], p), v, p)
        if _gdeg(g) > 0:
            factors.extend(_gfactor_equal_degree(g, d, p, rng))
            v = _gdivmod(v, g, p)[0]
            h = _gdivmod(h, v, p)[1]
    if _gdeg(v) > 0:
        factors.append(v)
    return factors


def _gfactor(f, p, rng):
    """Full factorization over GF(p): list of (monic irreducible, mult)."""
    out = []
    w = _gsqf_part(f, p)
    for q in _gfactor_squarefree(w, p, rng):
        mult = 0
        rest = f
        while True:
            quo, rem = _gdivmod(rest, q, p)
            if rem:
                break
            mult += 1
            rest = quo
        out.append((q, mult))
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


# ---------------------------------------------------------------------------
# dense arithmetic over Z (primitive representatives of Q[x] up to scalar)
# ---------------------------------------------------------------------------


def _zcontent(a):
    c = 0
    for x in a:
        c = int_gcd(c, x)
        if c == 1:
            return 1
    return c


def _zprimitive(a):
    a = _trim(list(a))
    if not a:
        return a
    c = _zcontent(a)
    if a[-1] < 0:
        c = -c
    if c != 1:
        a = [x // c for x in a]
    return a


def _zmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _trim(out)


def _zderiv(a):
    return _trim([i * c for i, c in enumerate(a)][1:])


def _zpseudo_rem(a, b):
    """Pseudo-remainder of a by b (b nonzero)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        la = a[-1]
        a = [c * lb for c in a]
        shift = len(a) - 1 - db
        for j, cb in enumerate(b):
            a[shift + j] -= la * cb
        _trim(a)
    return a


def _zgcd(a, b):
    a, b = _zprimitive(a), _zprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _zprimitive(_zpseudo_rem(a, b))
        a, b = b, r
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _zdiv_exact(a, b):
    """Exact quotient a/b in Q[x], returned as (primitive quotient, ok)."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    fa = [Fraction(c) for c in a]
    db, lb = len(b) - 1, Fraction(b[-1])
    q = [Fraction(0)] * max(len(fa) - db, 0)
    for i in range(len(fa) - 1, db - 1, -1):
        c = fa[i]
        if c:
            c = c / lb
            q[i - db] = c
            for j, cb in enumerate(b):
                fa[i - db + j] -= c * cb
    if any(c != 0 for c in fa[:db]):
        return None, False
    den = 1
    for c in q:
        den = den * c.denominator // int_gcd(den, c.denominator)
    return _trim([int(c * den) for c in q]), den == 1


def _zsqf_part(a):
    """Primitive product of the distinct irreducible factors (char 0)."""
    a = _zprimitive(a)
    if len(a) <= 1:
        return [1]
    g = _zgcd(a, _zderiv(a))
    if len(g) == 1:
        return a
    q, _ = _zdiv_exact(a, g)
    return _zprimitive(q)


def _zsqf_decompose(a):
    """Yun's algorithm: list of (primitive squarefree part, multiplicity)."""
    a = _zprimitive(a)
    out = []
    if len(a) <= 1:
        return out
    da = _zderiv(a)
    g = _zgcd(a, da)
    if len(g) == 1:
        return [(a, 1)]
    c, _ = _zdiv_exact(a, g)
    quo, _ = _zdiv_exact(da, g)
    d = [x - y for x, y in _pad(quo, _zderiv(c))]
    _trim(d)
    i = 1
    while len(c) > 1:
        p_i = _zgcd(c, d)
        if len(p_i) > 1:
            out.append((_zprimitive(p_i), i))
        c_next, _ = _zdiv_exact(c, p_i)
        dq, _ = _zdiv_exact(d, p_i)
        d = [x - y for x, y in _pad(dq, _zderiv(c_next))]
        _trim(d)
        c = c_next
        i += 1
    return out


def _pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


# -- Zassenhaus --------------------------------------------------------------


def _hensel_pair_lift(f, g, h, s, t, p, k):
    """Lift f = g*h (mod p) to mod p**k, g monic; linear steps.

    s*g + t*h = 1 (mod p) is the fixed Bezout identity.  Returns (g, h)
    with coefficients reduced mod p**k.
    """
    g = [c % p for c in g]
    h = [c % p for c in h]
    pm = p
    for _ in range(k - 1):
        e = [x - y for x, y in _pad(f, _zmul(g, h))]
        _trim(e)
        em = [(c // pm) % p for c in e]
        _trim(em)
        # write em = a*h + b*g (mod p) with deg a < deg g
        q, a = _gdivmod(_gmul(t, em, p), g, p)
        b = _gadd(_gmul(s, em, p), _gmul(q, h, p), p)
        pm_next = pm * p
        g = _trim([(x + pm * y) % pm_next for x, y in _pad(g, a)])
        h = _trim([(x + pm * y) % pm_next for x, y in _pad(h, b)])
        pm = pm_next
    return g, h


def _hensel_lift_factors(f, mod_factors, p, k):
    """Lift lc(f) * prod(mod_factors) = f (mod p) to mod p**k.

    ``mod_factors`` are monic mod p.  Returns the lifted monic factors mod
    p**k, pairwise congruent to the inputs mod p.
    """
    if len(mod_factors) == 1:
        return [_balanced_monic(f, p, k)]
    lc = f[-1] % p
    g = mod_factors[0]
    h = [lc]
    for q in mod_factors[1:]:
        h = _gmul(h, q, p)
    # Bezout for (g, h) mod p
    s, t = _gf_xgcd(g, h, p)
    gk, hk = _hensel_pair_lift(f, g, h, s, t, p, k)
    rest = _hensel_lift_factors(hk, mod_factors[1:], p, k)
    return [gk] + rest


def _balanced_monic(f, p, k):
    """Monic image of f mod p**k (f has unit leading coefficient mod p)."""
    pk = p**k
    inv = pow(f[-1] % pk, -1, pk)
    return [c * inv % pk for c in f]


def _gf_xgcd(a, b, p):
    """s, t with s*a + t*b = 1 (mod p) for coprime a, b."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gsub(s0, _gmul(q, s1, p), p)
        t0, t1 = t1, _gsub(t0, _gmul(q, t1, p), p)
    if _gdeg(r0) != 0:
        raise ValueError("inputs are not coprime mod %d" % p)
    inv = pow(r0[0], -1, p)
    return _gscale(s0, inv, p), _gscale(t0, inv, p)


def _balanced(c, pk):
    c %= pk
    if 2 * c > pk:
        c -= pk
    return c


def _zfactor_squarefree(f, seed):
    """Irreducible primitive factors of a primitive squarefree f over Z."""
    f = _zprimitive(f)
    n = _gdeg(f)
    if n <= 0:
        return []
    if n == 1:
        return [f]
    lc = f[-1]
    # good prime: smallest p >= 17 keeping f squarefree and lc a unit
    p = 17
    while True:
        if is_prime(p) and lc % p:
            fp = _gmonic([c % p for c in f], p)
            if _gdeg(fp) == n and _gdeg(_ggcd(fp, _gderiv(fp, p), p)) == 0:
                break
        p += 1
    rng = random.Random(derive_seed(seed, p, n, 0x435A))
    mod_factors = _gfactor_squarefree(fp, p, rng)
    mod_factors.sort(key=lambda q: (len(q), q))
    if len(mod_factors) == 1:
        return [f]
    # lift precision: p**k > 2 * Mignotte bound for factors of lc*f
    norm = isqrt(sum(c * c for c in f)) + 1
    bound = (2**n) * norm * abs(lc)
    k = 1
    pk = p
    while pk <= 2 * bound:
        pk *= p
        k += 1
    lifted = _hensel_lift_factors(f, mod_factors, p, k)
    pk = p**k
    # subset recombination (exhaustive up to half the factor count)
    result = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(remaining, size):
            cand = [current[-1]]
            for i in subset:
                cand = _zmul(cand, lifted[i])
            cand = _zprimitive([_balanced(c, pk) for c in cand])
            quo, ok = _zdiv_exact(current, cand)
            if ok and quo is not None:
                result.append(cand)
                current = _zprimitive(quo)
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if _gdeg(current) > 0:
        result.append(current)
    result.sort(key=lambda q: (len(q), q))
    return result


# ---------------------------------------------------------------------------
# Polynomial-level API
# ---------------------------------------------------------------------------


def _main_variable(f, g=None):
    used = f.variables_used()
    if g is not None:
        used |= g.variables_used()
    if len(used) > 1:
        raise ShapeError("expected univariate input, got variables %s" % sorted(used))
    if used:
        return next(iter(used))
    return f.ctx.variables[0]


def to_dense(f, var=None):
    """Dense coefficient list of a univariate polynomial (constant first)."""
    if var is None:
        var = _main_variable(f)
    i = f.ctx._var_index[var]
    exps_of = f.ctx.order.exps_of
    out = []
    for k, c in f.terms:
        e = exps_of(k)[i]
        if len(out) <= e:
            out.extend([f.ctx.field.zero] * (e + 1 - len(out)))
        out[e] = c
    return out


def from_dense(coeffs, ctx, var):
    i = ctx._var_index[var]
    d = {}
    for e, c in enumerate(coeffs):
        if c:
            exps = [0] * ctx.nvars
            exps[i] = e
            d[tuple(exps)] = c
    return ctx.from_exp_dict(d)


def univariate_gcd(f, g):
    """Monic gcd of two univariate polynomials in the same variable."""
    if f.is_zero():
        return g.monic() if g else g
    if g.is_zero():
        return f.monic()
    var = _main_variable(f, g)
    ctx = f.ctx
    p = ctx.field.char
    if p:
        d = _ggcd([int(c) for c in to_dense(f, var)], [int(c) for c in to_dense(g, var)], p)
        return from_dense(d, ctx, var)
    a = _clear_denominators(to_dense(f, var))
    b = _clear_denominators(to_dense(g, var))
    d = _zgcd(a, b)
    return from_dense([Fraction(c) for c in d], ctx, var).monic()


def _clear_denominators(coeffs):
    den = 1
    for c in coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    return [int(c * den) for c in coeffs]


def squarefree_part(f):
    """Monic product of the distinct irreducible factors of f.

    Over GF(p) the derivative-zero case contracts p-th powers (exponents
    divided by p), matching the Frobenius on the prime field.
    """
    if f.is_zero():
        raise ShapeError("squarefree part of the zero polynomial")
    var = _main_variable(f)
    ctx = f.ctx
    p = ctx.field.char
    if p:
        d = _gsqf_part([int(c) for c in to_dense(f, var)], p)
        return from_dense(d, ctx, var)
    d = _zsqf_part(_clear_denominators(to_dense(f, var)))
    return from_dense([Fraction(c) for c in d], ctx, var).monic()


def factor_univariate(f, seed=0):
    """Factor a univariate polynomial into monic irreducibles.

    Returns ``[(factor, multiplicity), ...]`` with monic factors over the
    coefficient field; the product of ``factor**multiplicity`` times the
    leading coefficient of ``f`` reproduces ``f``.
    """
    if f.is_zero():
        raise ShapeError("cannot factor the zero polynomial")
    var = _main_variable(f)
    ctx = f.ctx
    p = ctx.field.char
    if p:
        dense = [int(c) for c in to_dense(f, var)]
        rng = random.Random(derive_seed(seed, p, len(dense), 0x465046))
        return [
            (from_dense(q, ctx, var), m) for q, m in _gfactor(dense, p, rng)
        ]
    dense = _clear_denominators(to_dense(f, var))
    out = []
    for part, mult in _zsqf_decompose(dense):
        for q in _zfactor_squarefree(part, seed):
            monic = from_dense([Fraction(c) for c in q], ctx, var).monic()
            out.append((monic, mult))
    out.sort(key=lambda t: (t[0].total_degree(), t[0].sort_key(), t[1]))
    return out
