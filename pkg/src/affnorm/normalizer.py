"""Top-level single-characteristic pipelines: the global Grauert-Remmert
enlargement loop and the stratified local-to-global algorithm.

Both return the closure as a fractional ideal (1/g**m) * U of the input
algebra; the local pipeline normalizes at each minimal stratum of the
singular locus independently (optionally in parallel) and recombines
exactly via U = sum_i g**(m - m_i) * U_i.
"""

from .affine import (
    AffineAlgebra,
    ExtensionPresentation,
    FractionalIdeal,
    TestPair,
    gr_normality_test,
    hom_numerators,
    ideal_with_defining,
    initial_test_pair,
    is_nonzerodivisor,
    jacobian_ideal,
    nonzero_generators_mod,
    radical_in_extension,
    ring_structure,
)
from .errors import IterationLimitError, UnsupportedDimensionError, ZerodivisorError
from .ideals import (
    Ideal,
    dimension,
    ideal_equals,
    ideal_sum,
    minimal_primes_zero_dim,
    zero_dim_radical,
)
from .parallel import parallel_map

DEFAULT_ITERATION_CAP = 64


class NormalizationResult:
    """Closure presented as (1/d)U plus bookkeeping.

    ``relations`` (when present) is the :class:`ExtensionPresentation` of
    the closure over the input algebra; ``iterations`` counts enlargement
    rounds (global/local) or modular rounds."""

    __slots__ = (
        "fractional",
        "relations",
        "iterations",
        "method",
        "primes_used",
        "verified",
    )

    def __init__(
        self,
        fractional,
        relations,
        iterations,
        method,
        primes_used=None,
        verified=None,
    ):
        self.fractional = fractional
        self.relations = relations
        self.iterations = iterations
        self.method = method
        self.primes_used = primes_used
        self.verified = verified

    def __repr__(self):
        return "NormalizationResult(method=%s, d=%s, %d generators)" % (
            self.method,
            self.fractional.denominator,
            len(self.fractional.numerator.gens),
        )


def _trivial_result(A, method, primes_used=None, verified=None):
    unit = Ideal(A.context, [A.context.one])
    frac = FractionalIdeal(unit, A.context.one, A, check=False)
    return NormalizationResult(
        frac, None, 0, method, primes_used=primes_used, verified=verified
    )


def gls_normalize(A, test_ideal, g, iteration_cap=DEFAULT_ITERATION_CAP, method="global"):
    """The enlargement loop: A = A_0 in A_1 in ... in A_m = closure, with
    A_{i+1} = Hom(J_i, J_i) = (1/(d_i * g)) * (d_i * g * H_i : H_i).

    ``test_ideal`` must be radical and contain the non-zerodivisor ``g``
    (either the Jacobian test ideal or a stratum ideal L_V).  Termination
    is guaranteed by Noetherianity; the cap converts a hypothetical stall
    into an error.
    """
    ctx = A.context
    if not is_nonzerodivisor(g, A):
        raise ZerodivisorError(
            "chosen element %s is a zerodivisor; input is not a domain" % g
        )
    U = Ideal(ctx, [ctx.one])
    d = ctx.one
    H = Ideal(ctx, list(test_ideal.groebner().elements))
    presentation = None
    iterations = 0
    for _ in range(iteration_cap):
        Q = hom_numerators(H, d, g, A)
        gU = Ideal(ctx, [g * u for u in U.gens] + list(A.ideal.gens))
        if ideal_equals(ideal_with_defining(Q, A), gU):
            frac = FractionalIdeal(U, d, A, check=iterations > 0)
            return NormalizationResult(frac, presentation, iterations, method)
        U = Ideal(ctx, list(ideal_with_defining(Q, A).groebner().elements))
        d = d * g
        iterations += 1
        presentation = ring_structure(U, d, A)
        H = radical_in_extension(test_ideal, presentation, A)
    raise IterationLimitError(
        "normalization loop exceeded %d enlargement steps" % iteration_cap
    )


def normalize_global(A, iteration_cap=DEFAULT_ITERATION_CAP):
    """GLS pipeline with the Jacobian test pair."""
    pair = initial_test_pair(A)
    if pair is None:
        return _trivial_result(A, "global")
    return gls_normalize(
        A, pair.radical_ideal, pair.nonzerodivisor, iteration_cap, "global"
    )


# ---------------------------------------------------------------------------
# stratification
# ---------------------------------------------------------------------------


class Stratum:
    """A minimal stratum of the singular locus: the intersection L of a
    maximal set of minimal primes whose sum stays proper."""

    __slots__ = ("ideal", "indices")

    def __init__(self, ideal, indices):
        self.ideal = ideal
        self.indices = tuple(sorted(indices))

    def sort_key(self):
        gb = self.ideal.groebner()
        return (len(gb), [str(g) for g in gb])


def _maximal_proper_subsets(primes, ctx, defining):
    """All maximal index sets whose prime sum stays a proper ideal."""
    r = len(primes)
    proper_cache = {}

    def proper(s):
        got = proper_cache.get(s)
        if got is None:
            gens = list(defining.gens)
            for i in s:
                gens.extend(primes[i].gens)
            got = not Ideal(ctx, gens).is_unit()
            proper_cache[s] = got
        return got

    maximal = []
    seen = set()
    stack = [frozenset([i]) for i in range(r)]
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        ext = [j for j in range(r) if j not in s and proper(s | {j})]
        if not ext:
            if s not in maximal:
                maximal.append(s)
        else:
            for j in ext:
                stack.append(s | {j})
    return maximal


def strata_minimal(A, seed=0):
    """Minimal strata of the singular locus (zero-dimensional case)."""
    M = jacobian_ideal(A)
    if M.groebner().is_unit_ideal():
        return []
    if dimension(M) != 0:
        raise UnsupportedDimensionError(
            "stratification needs a zero-dimensional singular locus"
        )
    radM = zero_dim_radical(M)
    primes = minimal_primes_zero_dim(radM, seed=seed)
    ctx = A.context
    out = []
    for subset in _maximal_proper_subsets(primes, ctx, A.ideal):
        meet = None
        for i in sorted(subset):
            meet = primes[i] if meet is None else _intersect(meet, primes[i])
        out.append(Stratum(Ideal(ctx, list(meet.groebner().elements)), subset))
    # dedupe by the canonical basis of L
    unique = {}
    for st in out:
        unique.setdefault(tuple(str(g) for g in st.ideal.groebner()), st)
    strata = sorted(unique.values(), key=Stratum.sort_key)
    return strata


def _intersect(I, J):
    from .ideals import intersect

    return intersect(I, J)


def local_normalize(A, stratum, g, iteration_cap=DEFAULT_ITERATION_CAP):
    """Normalize the localizations at one stratum: the enlargement loop run
    with (L_V, g).  Returns (U_i, m_i) with local closure (1/g**m_i) U_i."""
    result = gls_normalize(A, stratum.ideal, g, iteration_cap, "local")
    return result.fractional.numerator, result.iterations


def _local_task(args):
    A, stratum, g, cap = args
    return local_normalize(A, stratum, g, cap)


def choose_stratification_nonzerodivisor(A, radM):
    """The smallest test-ideal generator that is a non-zerodivisor; shared
    by every stratum (g lies in sqrt(M) = intersection of all L_V)."""
    for g in nonzero_generators_mod(radM, A):
        if is_nonzerodivisor(g, A):
            return g
    raise ZerodivisorError(
        "no non-zerodivisor among the test ideal generators;"
        " the input is not a domain"
    )


def normalize_local(A, threads=1, iteration_cap=DEFAULT_ITERATION_CAP, seed=0):
    """Normalization via localization: normalize at each minimal stratum
    and recombine with d = g**m, U = sum_i g**(m - m_i) * U_i."""
    M = jacobian_ideal(A)
    if M.groebner().is_unit_ideal():
        return _trivial_result(A, "local")
    if dimension(M) != 0:
        raise UnsupportedDimensionError(
            "local pipeline needs a zero-dimensional singular locus"
        )
    radM = zero_dim_radical(M)
    g = choose_stratification_nonzerodivisor(A, radM)
    strata = strata_minimal(A, seed=seed)
    tasks = [(A, st, g, iteration_cap) for st in strata]
    locals_ = parallel_map(_local_task, tasks, threads)
    m = max(mi for _, mi in locals_)
    ctx = A.context
    gens = list(A.ideal.gens)
    for (Ui, mi) in locals_:
        scale = g ** (m - mi)
        gens.extend(scale * u for u in Ui.gens)
    U = Ideal(ctx, list(Ideal(ctx, gens).groebner().elements))
    d = g**m
    frac = FractionalIdeal(U, d, A, check=True)
    return NormalizationResult(frac, None, m, "local")
