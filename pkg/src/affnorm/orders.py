"""Global monomial orders with packed integer keys.

A monomial is represented by a single Python integer laid out in 16-bit
fields so that

* comparing two keys with ``<`` compares the monomials in the order,
* multiplying monomials is ``k1 + k2 - one_key``,
* divisibility is a handful of masked integer operations.

Every exponent (and every total degree appearing in a key) must stay below
2**15 so that the top bit of each field is free to act as a guard bit for
borrow-free fieldwise comparisons.  Degrees in this library are tiny by
comparison, and multiplication checks the bound.

Layouts (fields listed from the least significant end):

``degrevlex`` on variables v0 > v1 > ... > v(n-1)::

    [0x7FFF - e0] [0x7FFF - e1] ... [0x7FFF - e(n-1)] [total degree]

  Ties in total degree are broken by the most significant differing
  complement field, i.e. by the *last* variable having the *smaller*
  exponent, which is exactly degree-reverse-lexicographic.

``lex``::

    [e(n-1)] ... [e1] [e0]

``block(k)`` -- eliminate the first k variables: a degrevlex key for the
first block sits above a degrevlex key for the remaining variables.
"""

from .errors import ShapeError

FIELD_BITS = 16
FIELD_MAX = 0x7FFF  # values must keep the guard bit (0x8000) clear


class MonomialOrder:
    """Base class; concrete orders precompute masks for the key tricks.

    Attributes used by hot loops:

    * ``one_key``   -- key of the monomial 1; ``mul`` is ``a + b - one_key``.
    * ``mul_guard`` -- a product key is valid iff ``key & mul_guard == 0``.
    * ``div_low``   -- mask selecting the exponent fields used by ``divides``.
    * ``div_guard`` -- guard bits for the fieldwise comparison.
    * ``complement``-- True when exponent fields store complements
                       (degrevlex/block); fixes the comparison direction.
    """

    kind = None

    def __init__(self, nvars):
        self.nvars = nvars

    # -- generic helpers built on the subclass attributes ------------------

    def mul(self, a, b):
        k = a + b - self.one_key
        if k & self.mul_guard:
            raise OverflowError("monomial degree exceeds %d" % FIELD_MAX)
        return k

    def div(self, a, b):
        """Exact quotient key a/b; only valid when b divides a."""
        return a - b + self.one_key

    def divides(self, t, m):
        low = self.div_low
        g = self.div_guard
        if self.complement:
            return ((((t & low) | g) - (m & low)) & g) == g
        return (((m | g) - t) & g) == g

    def lcm(self, a, b):
        ea = self.exps_of(a)
        eb = self.exps_of(b)
        return self.key_of(tuple(max(x, y) for x, y in zip(ea, eb)))

    def spec(self):
        return (self.kind,)


class DegRevLex(MonomialOrder):
    kind = "degrevlex"

    def __init__(self, nvars):
        super().__init__(nvars)
        n = nvars
        self.one_key = sum(FIELD_MAX << (FIELD_BITS * i) for i in range(n))
        self.mul_guard = 0x8000 << (FIELD_BITS * n)
        self.div_low = (1 << (FIELD_BITS * n)) - 1
        self.div_guard = sum(0x8000 << (FIELD_BITS * i) for i in range(n))
        self.complement = True
        self._deg_shift = FIELD_BITS * n

    def key_of(self, exps):
        if len(exps) != self.nvars:
            raise ShapeError("expected %d exponents" % self.nvars)
        k = 0
        deg = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= FIELD_MAX:
                raise OverflowError("exponent out of range: %r" % (e,))
            deg += e
            k |= (FIELD_MAX - e) << (FIELD_BITS * i)
        if deg > FIELD_MAX:
            raise OverflowError("total degree exceeds %d" % FIELD_MAX)
        return k | (deg << self._deg_shift)

    def exps_of(self, key):
        return tuple(
            FIELD_MAX - ((key >> (FIELD_BITS * i)) & 0xFFFF)
            for i in range(self.nvars)
        )

    def deg(self, key):
        return key >> self._deg_shift


class Lex(MonomialOrder):
    kind = "lex"

    def __init__(self, nvars):
        super().__init__(nvars)
        n = nvars
        self.one_key = 0
        self.mul_guard = sum(0x8000 << (FIELD_BITS * i) for i in range(n))
        self.div_low = (1 << (FIELD_BITS * n)) - 1
        self.div_guard = self.mul_guard
        self.complement = False

    def key_of(self, exps):
        if len(exps) != self.nvars:
            raise ShapeError("expected %d exponents" % self.nvars)
        k = 0
        n = self.nvars
        for i, e in enumerate(exps):
            if not 0 <= e <= FIELD_MAX:
                raise OverflowError("exponent out of range: %r" % (e,))
            k |= e << (FIELD_BITS * (n - 1 - i))
        return k

    def exps_of(self, key):
        n = self.nvars
        return tuple(
            (key >> (FIELD_BITS * (n - 1 - i))) & 0xFFFF for i in range(n)
        )

    def deg(self, key):
        return sum(self.exps_of(key))


class Block(MonomialOrder):
    """Elimination order: degrevlex on the first ``nfirst`` variables,
    then degrevlex on the rest.  Any monomial involving a variable of the
    first block beats every monomial in the second block alone, so GB
    elements free of the first block generate the elimination ideal."""

    kind = "block"

    def __init__(self, nvars, nfirst):
        super().__init__(nvars)
        if not 0 < nfirst < nvars:
            raise ShapeError("block split must be strictly inside the variables")
        self.nfirst = nfirst
        n2 = nvars - nfirst
        self._n2 = n2
        self._deg2_shift = FIELD_BITS * n2
        self._b1_shift = FIELD_BITS * (n2 + 1)
        self._deg1_shift = self._b1_shift + FIELD_BITS * nfirst
        low2 = sum(FIELD_MAX << (FIELD_BITS * i) for i in range(n2))
        low1 = sum(
            FIELD_MAX << (self._b1_shift + FIELD_BITS * i) for i in range(nfirst)
        )
        self.one_key = low1 | low2
        self.mul_guard = (0x8000 << self._deg2_shift) | (0x8000 << self._deg1_shift)
        self.div_low = (
            ((1 << (FIELD_BITS * n2)) - 1)
            | (((1 << (FIELD_BITS * nfirst)) - 1) << self._b1_shift)
        )
        self.div_guard = sum(
            0x8000 << (FIELD_BITS * i) for i in range(n2)
        ) | sum(0x8000 << (self._b1_shift + FIELD_BITS * i) for i in range(nfirst))
        self.complement = True

    def key_of(self, exps):
        if len(exps) != self.nvars:
            raise ShapeError("expected %d exponents" % self.nvars)
        nfirst = self.nfirst
        deg1 = deg2 = 0
        k = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= FIELD_MAX:
                raise OverflowError("exponent out of range: %r" % (e,))
            if i < nfirst:
                deg1 += e
                k |= (FIELD_MAX - e) << (self._b1_shift + FIELD_BITS * i)
            else:
                deg2 += e
                k |= (FIELD_MAX - e) << (FIELD_BITS * (i - nfirst))
        if deg1 > FIELD_MAX or deg2 > FIELD_MAX:
            raise OverflowError("total degree exceeds %d" % FIELD_MAX)
        return k | (deg1 << self._deg1_shift) | (deg2 << self._deg2_shift)

    def exps_of(self, key):
        nfirst = self.nfirst
        out = []
        for i in range(self.nvars):
            if i < nfirst:
                shift = self._b1_shift + FIELD_BITS * i
            else:
                shift = FIELD_BITS * (i - nfirst)
            out.append(FIELD_MAX - ((key >> shift) & 0xFFFF))
        return tuple(out)

    def deg(self, key):
        return ((key >> self._deg1_shift) & 0xFFFF) + (
            (key >> self._deg2_shift) & 0xFFFF
        )

    def spec(self):
        return (self.kind, self.nfirst)

    def first_block_degree(self, key):
        """Degree in the eliminated variables only."""
        return (key >> self._deg1_shift) & 0xFFFF


_ORDER_CACHE = {}


def make_order(spec, nvars):
    """Build (and cache) the order object for ``spec`` on ``nvars`` variables.

    ``spec`` is ``("degrevlex",)``, ``("lex",)`` or ``("block", k)``.
    """
    ck = (spec, nvars)
    order = _ORDER_CACHE.get(ck)
    if order is None:
        kind = spec[0]
        if kind == "degrevlex":
            order = DegRevLex(nvars)
        elif kind == "lex":
            order = Lex(nvars)
        elif kind == "block":
            order = Block(nvars, spec[1])
        else:
            raise ShapeError("unknown order kind: %r" % (kind,))
        _ORDER_CACHE[ck] = order
    return order
