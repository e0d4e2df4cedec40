"""Exact coefficient arithmetic: Chinese remaindering, error-tolerant
rational reconstruction, rational reduction mod p, and prime sampling.

Rationals are plain :class:`fractions.Fraction` (already normalized with a
positive denominator); prime-field residues are ints in ``[0, p)``.
"""

import random
from fractions import Fraction
from math import gcd, isqrt

from .errors import CoprimalityError, PrimeRangeExhausted


def crt_combine(residues, moduli):
    """Combine ``x = residues[i] mod moduli[i]`` into ``(r, N)``.

    The moduli must be pairwise coprime (checked incrementally); ``N`` is
    their product and ``0 <= r < N``.
    """
    if len(residues) != len(moduli) or not moduli:
        raise CoprimalityError("need equally many residues and moduli, at least one")
    r, n = residues[0] % moduli[0], moduli[0]
    for res, m in zip(residues[1:], moduli[1:]):
        g = gcd(n, m)
        if g != 1:
            raise CoprimalityError("moduli share the factor %d" % g)
        t = (res - r) * pow(n, -1, m) % m
        r += n * t
        n *= m
    return r, n


def farey_reconstruct(r, modulus):
    """Error-tolerant rational reconstruction of ``r`` modulo ``modulus``.

    Runs Gaussian reduction on the lattice spanned by ``(modulus, 0)`` and
    ``(r, 1)``: each step replaces the longer vector by its remainder under
    the multiple of the shorter one of minimal Euclidean length (smaller
    quotient preferred on ties) and stops as soon as the length no longer
    strictly decreases.

    Error tolerance: when r is correct modulo N1 and garbage modulo a
    coprime N2 with N2 much smaller than N1, the short vector is
    (a*N2, b*N2), so the plausibility tests (nonzero denominator, reduced
    denominator a unit mod N, vector genuinely short) are applied to the
    *reduced* fraction.  Returns ``None`` on failure -- callers treat that
    as "collect more primes".
    """
    if modulus < 2 or not 0 <= r < modulus:
        raise ValueError("need 0 <= r < modulus, modulus >= 2")
    a0, b0 = modulus, 0
    a1, b1 = r, 1
    len0 = a0 * a0
    len1 = a1 * a1 + 1
    while len1 < len0:
        # minimize |(a0, b0) - q*(a1, b1)|^2 over integers q; the real
        # optimum is the projection, so only its two integer neighbours
        # can be minimal.  Prefer the smaller q on ties.
        num = a0 * a1 + b0 * b1
        q = num // len1
        best = None
        for cand in (q, q + 1):
            a2 = a0 - cand * a1
            b2 = b0 - cand * b1
            l2 = a2 * a2 + b2 * b2
            if best is None or l2 < best[0]:
                best = (l2, a2, b2)
        len2, a2, b2 = best
        a0, b0, len0 = a1, b1, len1
        a1, b1, len1 = a2, b2, len2
    if b0 == 0:
        return None
    g = gcd(a0, b0)
    a, b = a0 // g, b0 // g
    if gcd(b, modulus) != 1:
        return None
    if a * a + b * b >= modulus:
        return None
    return Fraction(a, b)


def reduce_rational_mod_p(q, p):
    """Image of the rational ``q`` in GF(p), or ``None`` when p | denominator.

    ``None`` signals "reject this prime" to the modular driver.
    """
    q = Fraction(q)
    den = q.denominator % p
    if den == 0:
        return None
    return q.numerator * pow(den, -1, p) % p


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, valid for all n < 2**64."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_primes(count, lo, hi, seed, exclude=()):
    """``count`` distinct primes in ``[lo, hi)``, deterministic in ``seed``.

    Primes listed in ``exclude`` are never returned, so repeated calls with a
    growing exclusion set keep producing fresh primes until the range runs
    out (then :class:`PrimeRangeExhausted` is raised).
    """
    if count <= 0:
        raise ValueError("count must be positive")
    rng = random.Random(derive_seed(seed, 0x70726D73))
    exclude = set(exclude)
    found = []
    span = hi - lo
    if span <= 0:
        raise PrimeRangeExhausted("empty range")
    # Rejection sampling with a deterministic exhaustive fallback for
    # narrow ranges.
    attempts = 0
    max_attempts = 64 * count + 256
    while len(found) < count and attempts < max_attempts:
        attempts += 1
        n = lo + rng.randrange(span)
        if n in exclude or n in found:
            continue
        if is_prime(n):
            found.append(n)
    if len(found) < count:
        for n in range(lo, hi):
            if n not in exclude and n not in found and is_prime(n):
                found.append(n)
                if len(found) == count:
                    break
        else:
            raise PrimeRangeExhausted(
                "range [%d, %d) has fewer than %d unused primes" % (lo, hi, count)
            )
    return found


def integer_sqrt(n):
    return isqrt(n)


def derive_seed(seed, *tags):
    """Mix an integer seed with integer tags into a fresh deterministic seed.

    Only integer arithmetic, so the result is stable across processes
    (unlike hashing tuples that contain strings).
    """
    x = (seed & ((1 << 64) - 1)) ^ 0x9E3779B97F4A7C15
    for t in tags:
        x ^= t & ((1 << 64) - 1)
        x = (x * 0xBF58476D1CE4E5B9 + 0x94D049BB133111EB) & ((1 << 64) - 1)
        x ^= x >> 31
    return x
