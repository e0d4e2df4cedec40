"""Sparse multivariate polynomials over the rationals or a prime field.

A :class:`Polynomial` stores its terms as a tuple of ``(key, coeff)`` pairs
sorted descending, where ``key`` is the packed-integer monomial of the
context's order (see :mod:`affnorm.orders`).  Sorting by key *is* sorting by
the monomial order, for every supported order.

Coefficients are :class:`fractions.Fraction` over the rationals and plain
``int`` residues in ``[0, p)`` over a prime field.
"""

from fractions import Fraction

from .errors import ContextMismatchError, ShapeError
from .orders import make_order


class RationalField:
    """The field of rational numbers; elements are ``Fraction``."""

    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError("cannot coerce %r into QQ" % (x,))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def __repr__(self):
        return "QQ"

    def __reduce__(self):
        return (_rational_field, ())


class PrimeField:
    """The prime field Z/pZ; elements are ints in ``[0, p)``."""

    def __init__(self, p):
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        p = self.char
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            den = x.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator divisible by %d" % p)
            return x.numerator * pow(den, -1, p) % p
        raise TypeError("cannot coerce %r into GF(%d)" % (x, p))

    def add(self, a, b):
        return (a + b) % self.char

    def sub(self, a, b):
        return (a - b) % self.char

    def mul(self, a, b):
        return (a * b) % self.char

    def neg(self, a):
        return -a % self.char

    def inv(self, a):
        return pow(a, -1, self.char)

    def __repr__(self):
        return "GF(%d)" % self.char

    def __reduce__(self):
        return (prime_field, (self.char,))


_QQ = RationalField()
_GF_CACHE = {}


def _rational_field():
    return _QQ


def rationals():
    return _QQ


def prime_field(p):
    f = _GF_CACHE.get(p)
    if f is None:
        f = _GF_CACHE[p] = PrimeField(p)
    return f


class RingContext:
    """A polynomial ring: named variables, coefficient field, monomial order.

    Contexts are immutable; equality is by value so that polynomials moved
    across processes still recognise each other.
    """

    __slots__ = ("variables", "field", "order_spec", "_order", "_var_index")

    def __init__(self, variables, field, order_spec=("degrevlex",)):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ShapeError("duplicate variable name")
        if not variables:
            raise ShapeError("a ring needs at least one variable")
        self.variables = variables
        self.field = field
        self.order_spec = tuple(order_spec)
        self._order = None
        self._var_index = {v: i for i, v in enumerate(variables)}

    @property
    def order(self):
        if self._order is None:
            self._order = make_order(self.order_spec, len(self.variables))
        return self._order

    @property
    def nvars(self):
        return len(self.variables)

    def _key(self):
        return (self.variables, self.field.char, self.order_spec)

    def __eq__(self, other):
        return isinstance(other, RingContext) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        field = "QQ" if self.field.char == 0 else "GF(%d)" % self.field.char
        return "%s[%s]/%s" % (field, ",".join(self.variables), self.order_spec)

    def __getstate__(self):
        return (self.variables, self.field, self.order_spec)

    def __setstate__(self, state):
        variables, field, order_spec = state
        self.variables = variables
        self.field = field
        self.order_spec = order_spec
        self._order = None
        self._var_index = {v: i for i, v in enumerate(variables)}

    # -- element constructors ----------------------------------------------

    @property
    def zero(self):
        return Polynomial(self, ())

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.coerce(c)
        if c == 0:
            return Polynomial(self, ())
        return Polynomial(self, ((self.order.one_key, c),))

    def var(self, name):
        i = self._var_index.get(name)
        if i is None:
            raise ShapeError("unknown variable %r" % (name,))
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, ((self.order.key_of(tuple(exps)), self.field.one),))

    def gens(self):
        return [self.var(v) for v in self.variables]

    def from_exp_dict(self, d):
        """Polynomial from ``{exponent tuple: coefficient}``."""
        order = self.order
        field = self.field
        terms = []
        for exps, c in d.items():
            c = field.coerce(c)
            if c != 0:
                terms.append((order.key_of(tuple(exps)), c))
        terms.sort(reverse=True)
        return Polynomial(self, tuple(terms))

    def poly(self, text):
        """Parse a polynomial from its text form (CLI grammar)."""
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    # -- context surgery ----------------------------------------------------

    def with_order(self, order_spec):
        if tuple(order_spec) == self.order_spec:
            return self
        return RingContext(self.variables, self.field, order_spec)

    def with_field(self, field):
        return RingContext(self.variables, field, self.order_spec)

    def extended(self, new_vars):
        """New context with ``new_vars`` prepended (sorted before the old
        variables, as extension variables must be), degrevlex order."""
        return RingContext(tuple(new_vars) + self.variables, self.field)


class Polynomial:
    """Immutable sparse polynomial attached to a :class:`RingContext`."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        self.terms = terms  # tuple[(key, coeff)] strictly descending by key

    # -- basic queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lm_key(self):
        if not self.terms:
            raise ShapeError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ShapeError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def leading_exponents(self):
        return self.ctx.order.exps_of(self.lm_key())

    def leading_monomial(self):
        """The leading monomial as a polynomial with coefficient 1."""
        return Polynomial(self.ctx, ((self.lm_key(), self.ctx.field.one),))

    def leading_term(self):
        return Polynomial(self.ctx, (self.terms[0],))

    def total_degree(self):
        if not self.terms:
            return -1
        deg = self.ctx.order.deg
        return max(deg(k) for k, _ in self.terms)

    def degree_in(self, var):
        i = self.ctx._var_index[var]
        exps_of = self.ctx.order.exps_of
        d = -1
        for k, _ in self.terms:
            e = exps_of(k)[i]
            if e > d:
                d = e
        return d

    def variables_used(self):
        used = set()
        exps_of = self.ctx.order.exps_of
        for k, _ in self.terms:
            for v, e in zip(self.ctx.variables, exps_of(k)):
                if e:
                    used.add(v)
        return used

    def exp_dict(self):
        exps_of = self.ctx.order.exps_of
        return {exps_of(k): c for k, c in self.terms}

    def constant_coefficient(self):
        one_key = self.ctx.order.one_key
        if self.terms and self.terms[-1][0] == one_key:
            return self.terms[-1][1]
        return self.ctx.field.zero

    def is_constant(self):
        return not self.terms or (
            len(self.terms) == 1 and self.terms[0][0] == self.ctx.order.one_key
        )

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatchError(
                "operands live in different rings: %r vs %r" % (self.ctx, other.ctx)
            )

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ctx.constant(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        return _merge(self.ctx, self.terms, other.terms, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce_other(other)
        return _merge(self.ctx, self.terms, other.terms, -1)

    def __rsub__(self, other):
        return self.ctx.constant(other) - self

    def __neg__(self):
        neg = self.ctx.field.neg
        return Polynomial(self.ctx, tuple((k, neg(c)) for k, c in self.terms))

    def __mul__(self, other):
        other = self._coerce_other(other)
        ctx = self.ctx
        if not self.terms or not other.terms:
            return ctx.zero
        one = ctx.order.one_key
        guard = ctx.order.mul_guard
        p = ctx.field.char
        acc = {}
        short, long_ = self.terms, other.terms
        if len(short) > len(long_):
            short, long_ = long_, short
        for k1, c1 in short:
            base = k1 - one
            for k2, c2 in long_:
                k = base + k2
                v = acc.get(k)
                if v is None:
                    acc[k] = c1 * c2
                else:
                    acc[k] = v + c1 * c2
        terms = []
        if p:
            for k in sorted(acc, reverse=True):
                if k & guard:
                    raise OverflowError("monomial degree overflow in product")
                c = acc[k] % p
                if c:
                    terms.append((k, c))
        else:
            for k in sorted(acc, reverse=True):
                if k & guard:
                    raise OverflowError("monomial degree overflow in product")
                c = acc[k]
                if c:
                    terms.append((k, c))
        return Polynomial(ctx, tuple(terms))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ShapeError("negative power of a polynomial")
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c):
        """Multiply by a scalar."""
        c = self.ctx.field.coerce(c)
        if c == 0:
            return self.ctx.zero
        mul = self.ctx.field.mul
        return Polynomial(self.ctx, tuple((k, mul(cc, c)) for k, cc in self.terms))

    def monic(self):
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == self.ctx.field.one:
            return self
        return self.scale(self.ctx.field.inv(lc))

    def primitive(self):
        """Integer-coefficient, content-one scalar multiple (char 0 only);
        keeps products cheap by avoiding unrelated huge denominators."""
        if self.ctx.field.char or not self.terms:
            return self
        from math import gcd

        den = 1
        all_int = True
        for _, c in self.terms:
            d = c.denominator
            if d != 1:
                all_int = False
                den = den * d // gcd(den, d)
        if all_int:
            content = 0
            for _, c in self.terms:
                content = gcd(content, c.numerator)
                if content == 1:
                    break
            if content == 1 and self.terms[0][1] > 0:
                return self
            if content == 0:
                return self
            if self.terms[0][1] < 0:
                content = -content
            return Polynomial(
                self.ctx,
                tuple((k, Fraction(c.numerator // content)) for k, c in self.terms),
            )
        ints = [(k, int(c * den)) for k, c in self.terms]
        content = 0
        for _, v in ints:
            content = gcd(content, v)
            if content == 1:
                break
        if ints[0][1] < 0:
            content = -content
        if content not in (0, 1):
            ints = [(k, v // content) for k, v in ints]
        return Polynomial(self.ctx, tuple((k, Fraction(v)) for k, v in ints))

    def mul_term(self, key, coeff):
        """Multiply by the single term ``coeff * monomial(key)``."""
        ctx = self.ctx
        base = key - ctx.order.one_key
        mul = ctx.field.mul
        guard = ctx.order.mul_guard
        terms = []
        for k, c in self.terms:
            nk = base + k
            if nk & guard:
                raise OverflowError("monomial degree overflow in product")
            terms.append((nk, mul(c, coeff)))
        return Polynomial(ctx, tuple(terms))

    # -- calculus / substitution ---------------------------------------------

    def derivative(self, var):
        ctx = self.ctx
        i = ctx._var_index[var]
        order = ctx.order
        field = ctx.field
        out = {}
        for k, c in self.terms:
            exps = list(order.exps_of(k))
            e = exps[i]
            if e == 0:
                continue
            exps[i] = e - 1
            nc = field.coerce(e) * c if field.char == 0 else (e * c) % field.char
            if nc != 0:
                out[order.key_of(tuple(exps))] = nc
        terms = sorted(out.items(), reverse=True)
        return Polynomial(ctx, tuple((k, c) for k, c in terms if c != 0))

    def substitute(self, mapping):
        """Substitute polynomials for variables; keys are variable names.

        The values must live in the target context (the context of any value,
        or this one if all values are constants of this ring).
        """
        target = None
        for val in mapping.values():
            if isinstance(val, Polynomial):
                target = val.ctx
                break
        if target is None:
            target = self.ctx
        subs = {}
        for name, val in mapping.items():
            subs[name] = val if isinstance(val, Polynomial) else target.constant(val)
        order = self.ctx.order
        result = target.zero
        # cache variable powers to avoid repeated exponentiation
        powers = {name: {0: target.one} for name in target.variables}
        for name in subs:
            powers[name] = {0: target.one}

        def power_of(name, e):
            if name in subs:
                cache = powers[name]
                if e not in cache:
                    cache[e] = subs[name] ** e
                return cache[e]
            cache = powers[name]
            if e not in cache:
                cache[e] = target.var(name) ** e
            return cache[e]

        for k, c in self.terms:
            term = target.constant(c)
            for name, e in zip(self.ctx.variables, order.exps_of(k)):
                if e:
                    term = term * power_of(name, e)
            result = result + term
        return result

    def convert(self, new_ctx, rename=None):
        """Re-express in ``new_ctx``; variables are matched by name (or via
        ``rename``, a mapping old-name -> new-name).  Missing variables must
        not occur; extra variables get exponent zero."""
        rename = rename or {}
        order = self.ctx.order
        positions = []
        for v in self.ctx.variables:
            nv = rename.get(v, v)
            j = new_ctx._var_index.get(nv)
            positions.append(j)
        coerce = new_ctx.field.coerce
        key_of = new_ctx.order.key_of
        n_new = new_ctx.nvars
        out = {}
        for k, c in self.terms:
            exps = order.exps_of(k)
            nexps = [0] * n_new
            for idx, (e, j) in enumerate(zip(exps, positions)):
                if e:
                    if j is None:
                        raise ShapeError(
                            "variable %r does not exist in the target ring"
                            % (self.ctx.variables[idx],)
                        )
                    nexps[j] = e
            nc = coerce(c)
            if nc != 0:
                nk = key_of(tuple(nexps))
                out[nk] = new_ctx.field.add(out[nk], nc) if nk in out else nc
        terms = sorted(((k, c) for k, c in out.items() if c != 0), reverse=True)
        return Polynomial(new_ctx, tuple(terms))

    # -- comparisons / hashing / printing ------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, self.terms))

    def sort_key(self):
        """Canonical ordering key: by leading monomial, then term data."""
        if not self.terms:
            return (-1, ())
        return (self.lm_key(), self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        order = self.ctx.order
        names = self.ctx.variables
        parts = []
        for k, c in self.terms:
            exps = order.exps_of(k)
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append("%s^%d" % (name, e))
            mono = "*".join(factors)
            if isinstance(c, Fraction):
                neg = c < 0
                mag = -c if neg else c
                coeff_str = str(mag)
                skip_coeff = mag == 1 and mono
            else:
                neg = False
                coeff_str = str(c)
                skip_coeff = c == 1 and mono
            if mono:
                body = mono if skip_coeff else "%s*%s" % (coeff_str, mono)
            else:
                body = coeff_str
            if not parts:
                parts.append("-" + body if neg else body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "<poly %s>" % (self,)


def _merge(ctx, ta, tb, sign):
    """Merge two descending term tuples; ``sign`` applies to ``tb``."""
    field = ctx.field
    res = []
    i = j = 0
    na, nb = len(ta), len(tb)
    neg = sign < 0
    while i < na and j < nb:
        ka, ca = ta[i]
        kb, cb = tb[j]
        if ka > kb:
            res.append((ka, ca))
            i += 1
        elif ka < kb:
            res.append((kb, field.neg(cb) if neg else cb))
            j += 1
        else:
            c = field.sub(ca, cb) if neg else field.add(ca, cb)
            if c != 0:
                res.append((ka, c))
            i += 1
            j += 1
    if i < na:
        res.extend(ta[i:])
    while j < nb:
        kb, cb = tb[j]
        res.append((kb, field.neg(cb) if neg else cb))
        j += 1
    return Polynomial(ctx, tuple(res))
