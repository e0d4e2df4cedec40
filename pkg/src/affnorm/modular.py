"""Modular normalization: per-prime runs of the enlargement loop, voting
out unlucky primes by leading-monomial signatures, Chinese-remainder plus
error-tolerant rational lifting, a randomized mod-p correctness test, and
exact verification over the rationals.

The universal denominator d is one fixed nonzero element of the Jacobian
ideal; each per-prime closure (computed with its own test pair) is
re-expressed over d_p by a single ideal quotient, so reduced bases align
coefficientwise across primes.
"""

from fractions import Fraction

from .affine import (
    AffineAlgebra,
    FractionalIdeal,
    gr_normality_test,
    ideal_with_defining,
    initial_test_pair,
    jacobian_ideal,
    nonzero_generators_mod,
    radical_in_extension,
    reduce_algebra_mod_p,
    reduce_poly_mod_p,
    ring_structure,
)
from .arith import crt_combine, derive_seed, farey_reconstruct, random_primes
from .errors import (
    DegenerateInputError,
    IterationLimitError,
    ShapeError,
    UnsupportedDimensionError,
    ZerodivisorError,
)
from .groebner import is_groebner_basis, normal_form
from .ideals import Ideal, ideal_equals, quotient_by_poly
from .normalizer import NormalizationResult, _trivial_result, gls_normalize
from .parallel import parallel_map
from .polyring import RingContext, prime_field

PRIME_LO = 1 << 28
PRIME_HI = 1 << 29
DEFAULT_BATCH = 10
DEFAULT_MAX_ROUNDS = 20


class ModularResult:
    """One prime's contribution: reduced basis of the closure numerator
    over GF(p) (universal denominator), optional relation basis, and the
    leading-monomial signatures used by the vote."""

    __slots__ = ("p", "basis", "relations", "sig_g", "sig_r")

    def __init__(self, p, basis, relations):
        self.p = p
        self.basis = tuple(basis)
        self.relations = None if relations is None else tuple(relations)
        self.sig_g = _lm_signature(self.basis)
        self.sig_r = () if relations is None else _lm_signature(self.relations)

    @property
    def signature(self):
        return (self.sig_g, self.sig_r)


def _lm_signature(polys):
    sigs = []
    for g in polys:
        sigs.append(g.ctx.order.exps_of(g.lm_key()))
    return tuple(sorted(sigs))


def choose_universal_denominator(A):
    """The smallest nonzero element of the Jacobian ideal modulo I."""
    M = jacobian_ideal(A)
    candidates = nonzero_generators_mod(M, A)
    if not candidates:
        raise DegenerateInputError("Jacobian ideal vanishes modulo I")
    return candidates[0]


def normalize_mod_p(A, d, p, want_relations=False, iteration_cap=64):
    """Run the whole pipeline modulo p and re-express the closure over the
    universal denominator.  Returns ``None`` to reject the prime (bad
    reduction, vanishing or non-Jacobian d_p, zerodivisor detected, ...).
    """
    Ap = reduce_algebra_mod_p(A, p)
    if Ap is None:
        return None
    ctx_p = Ap.context
    dp = reduce_poly_mod_p(d, ctx_p)
    if dp is None or dp.is_zero() or Ap.contains(dp):
        return None
    Mp = jacobian_ideal(Ap)
    if not normal_form(dp, Mp.groebner()).is_zero():
        return None
    try:
        pair = initial_test_pair(Ap)
        if pair is None:
            U_gls = Ideal(ctx_p, [ctx_p.one])
            d_gls = ctx_p.one
        else:
            res = gls_normalize(
                Ap, pair.radical_ideal, pair.nonzerodivisor, iteration_cap, "modular"
            )
            U_gls = res.fractional.numerator
            d_gls = res.fractional.denominator
    except (
        ZerodivisorError,
        UnsupportedDimensionError,
        DegenerateInputError,
        IterationLimitError,
    ):
        return None
    # universal denominator exchange: U(p) = (dp * U_gls + I_p) : d_gls
    scaled = Ideal(
        ctx_p,
        [dp * u for u in U_gls.gens] + list(Ap.ideal.gens),
    )
    U_p = quotient_by_poly(scaled, d_gls) if not d_gls.is_constant() else scaled
    G_p = ideal_with_defining(U_p, Ap).groebner()
    relations = None
    if want_relations:
        try:
            E = ring_structure(Ideal(ctx_p, list(G_p.elements)), dp, Ap)
        except DegenerateInputError:
            return None
        relations = list(E.relation_ideal.groebner().elements)
    return ModularResult(p, list(G_p.elements), relations)


def delete_unlucky_primes(results, previous_winner_signature=None):
    """Partition by signature and keep the class of largest weighted
    cardinality: every member carrying the previous round's winning
    signature counts as a single element in total.  Ties break toward the
    lexicographically smallest signature."""
    if not results:
        raise ShapeError("no modular results to vote on")
    classes = {}
    for r in sorted(results, key=lambda r: r.p):
        classes.setdefault(r.signature, []).append(r)
    best = None
    for sig, members in classes.items():
        weight = 1 if sig == previous_winner_signature else len(members)
        key = (-weight, sig)
        if best is None or key < best[0]:
            best = (key, sig, members)
    _, sig, members = best
    return members, sig


def lift_results(kept, base_algebra, want_relations=False):
    """CRT + error-tolerant rational reconstruction of the kept bases.

    Returns ``(G, R)`` over the rationals, or ``None`` when some
    coefficient fails to reconstruct (the caller then enlarges the prime
    set)."""
    moduli = [r.p for r in kept]
    ctx = base_algebra.context
    G = _lift_poly_family(ctx, [r.basis for r in kept], moduli)
    if G is None:
        return None
    if not want_relations:
        return G, None
    rel_families = [r.relations for r in kept]
    if any(rel is None for rel in rel_families):
        return G, None
    ext_specs = {tuple(rel[0].ctx.variables) if rel else () for rel in rel_families}
    if len(ext_specs) != 1:
        return None
    if not rel_families[0]:
        return G, []
    new_vars = [
        v for v in rel_families[0][0].ctx.variables if v not in ctx._var_index
    ]
    ext = ctx.extended(tuple(new_vars))
    R = _lift_poly_family(ext, rel_families, moduli)
    if R is None:
        return None
    return G, R


def _lift_poly_family(ctx, families, moduli):
    length = {len(f) for f in families}
    if len(length) != 1:
        return None
    count = length.pop()
    out = []
    for i in range(count):
        support = {}
        for fam, p in zip(families, moduli):
            poly = fam[i]
            exps_of = poly.ctx.order.exps_of
            for k, c in poly.terms:
                support.setdefault(exps_of(k), {})[p] = c
        terms = {}
        for exps, residues in sorted(support.items()):
            rs = [residues.get(p, 0) for p in moduli]
            r, n = crt_combine(rs, moduli)
            value = farey_reconstruct(r, n)
            if value is None:
                return None
            if value:
                terms[exps] = value
        out.append(ctx.from_exp_dict(terms))
    return out


def reduction_matches(G, result):
    """Post-lift identity: the lifted basis reduces mod p back to G(p)."""
    ctx_p = result.basis[0].ctx if result.basis else None
    if ctx_p is None:
        return True
    reduced = []
    for g in G:
        gp = reduce_poly_mod_p(g, ctx_p)
        if gp is None:
            return False
        reduced.append(gp)
    return tuple(reduced) == result.basis


def _coefficients_avoid_prime(polys, p):
    for f in polys:
        for _, c in f.terms:
            if c.numerator % p == 0 or c.denominator % p == 0:
                return False
    return True


def p_test_normal(A, d, G, R, used_primes, seed, attempts=25):
    """Randomized check in a fresh characteristic: reduce the candidate and
    compare with an independently computed mod-p closure (and relations,
    when carried).  False is an answer, not an error."""
    exclude = set(used_primes)
    for i in range(attempts):
        fresh = random_primes(
            1, PRIME_LO, PRIME_HI, derive_seed(seed, 0x7074, i), exclude=exclude
        )[0]
        exclude.add(fresh)
        if not _coefficients_avoid_prime(list(G) + list(A.ideal.gens), fresh):
            continue
        if R and not _coefficients_avoid_prime(list(R), fresh):
            continue
        expected = normalize_mod_p(A, d, fresh, want_relations=False)
        if expected is None:
            continue
        ctx_p = expected.basis[0].ctx
        G_p = []
        for g in G:
            gp = reduce_poly_mod_p(g, ctx_p)
            if gp is None:
                G_p = None
                break
            G_p.append(gp)
        if G_p is None:
            continue
        Ap = reduce_algebra_mod_p(A, fresh)
        lhs = ideal_with_defining(Ideal(ctx_p, G_p), Ap)
        rhs = ideal_with_defining(Ideal(ctx_p, list(expected.basis)), Ap)
        if not ideal_equals(lhs, rhs):
            return False
        if R:
            if not _relations_hold_mod_p(A, d, G, R, Ap):
                return False
        return True
    return False


def _relations_hold_mod_p(A, d, G, R, Ap):
    """Substitution identity of the candidate relations, checked mod p."""
    ctx_p = Ap.context
    dp = reduce_poly_mod_p(d, ctx_p)
    if dp is None or dp.is_zero():
        return False
    numerators = _presentation_numerators(A, d, G)
    nums_p = []
    for u in numerators:
        up = reduce_poly_mod_p(u, ctx_p)
        if up is None:
            return False
        nums_p.append(up)
    ext_q = R[0].ctx if R else None
    if ext_q is None:
        return True
    new_vars = [v for v in ext_q.variables if v not in A.context._var_index]
    if len(new_vars) != len(nums_p):
        return False
    ext_p = RingContext(ext_q.variables, prime_field(ctx_p.field.char), ext_q.order_spec)
    gbp = Ap.groebner()
    from .affine import ExtensionPresentation

    Ep = ExtensionPresentation(
        Ap, ext_p, new_vars, nums_p, dp, Ideal(ext_p, [])
    )
    for r in R:
        rp = reduce_poly_mod_p(r, ext_p)
        if rp is None:
            return False
        if not normal_form(Ep.clear_denominators(rp), gbp).is_zero():
            return False
    return True


def _presentation_numerators(A, d, G):
    """Module generators u_1..u_s paired with the extension variables: the
    reduced-basis elements of <G> + I outside <d> + I (u_0 = d)."""
    ctx = A.context
    dgb = Ideal(ctx, [d] + list(A.ideal.gens)).groebner()
    gb = ideal_with_defining(Ideal(ctx, list(G)), A).groebner()
    return [u for u in gb if not normal_form(u, dgb).is_zero()]


def verify_char_zero(A, d, G, R=None):
    """Exact verification: (a) G is a Groebner basis, (b) the relation
    basis is one too, (c) the elements of (1/d)G satisfy the relations,
    (d) the Grauert-Remmert criterion holds for (1/d)<G>.

    When ``R`` is not supplied (simplified mode) the relations are computed
    over the rationals by Buchberger's algorithm, which establishes (b)
    constructively, and (c) is asserted during the construction; a supplied
    (lifted) ``R`` gets the real S-polynomial check and must generate the
    independently computed relation ideal."""
    ctx = A.context
    glist = [g for g in G if not g.is_zero()]
    if not glist:
        return False
    # (a) every S-polynomial of G reduces to zero against G
    if not is_groebner_basis(glist):
        return False
    gb = ideal_with_defining(Ideal(ctx, glist), A).groebner()
    # <G> must contain I so that (1/d)<G> contains A = (1/d)<d> + I
    gset = Ideal(ctx, glist)
    if not all(gset.contains(f) for f in A.ideal.gens):
        return False
    U = Ideal(ctx, list(gb.elements))
    try:
        FractionalIdeal(U, d, A, check=True)
    except DegenerateInputError:
        return False
    try:
        E = ring_structure(U, d, A)  # (c) asserted on construction
    except DegenerateInputError:
        return False
    if R is not None:
        # (b) for lifted relations: an actual Groebner basis check, plus
        # agreement with the independently computed relation ideal
        supplied = [r.convert(E.ext_context) for r in R]
        if not is_groebner_basis(supplied):
            return False
        if not ideal_equals(
            Ideal(E.ext_context, list(E.relation_ideal.gens)),
            Ideal(E.ext_context, supplied),
        ):
            return False
        # (c) for the supplied basis: the substitution identity mod I
        gbI = A.groebner()
        for r in supplied:
            if not normal_form(E.clear_denominators(r), gbI).is_zero():
                return False
    # (d) normality via the Grauert-Remmert criterion
    pair = initial_test_pair(A)
    if pair is None:
        return ideal_equals(
            ideal_with_defining(U, A),
            Ideal(ctx, [d] + list(A.ideal.gens)),
        )
    H = radical_in_extension(pair.radical_ideal, E, A)
    return gr_normality_test(H, d, U, pair.nonzerodivisor, A)


def _prime_task(args):
    A, d, p, want_relations = args
    return normalize_mod_p(A, d, p, want_relations)


def normalize_modular(
    A,
    batch=DEFAULT_BATCH,
    verify=True,
    lift_relations=False,
    seed=0,
    threads=1,
    max_rounds=DEFAULT_MAX_ROUNDS,
    prime_lo=PRIME_LO,
    prime_hi=PRIME_HI,
):
    """Modular normalization: batches of random primes, per-prime closures
    (in parallel), signature voting, CRT/Farey lifting, the mod-p test, and
    (unless probabilistic mode is requested) exact verification."""
    M = jacobian_ideal(A)
    if M.groebner().is_unit_ideal():
        return _trivial_result(
            A,
            "modular" if verify else "modularProbabilistic",
            primes_used=[],
            verified=verify,
        )
    d = choose_universal_denominator(A)
    used = set()
    results = []
    prev_sig = None
    method = "modular" if verify else "modularProbabilistic"
    for round_no in range(1, max_rounds + 1):
        fresh = random_primes(
            batch, prime_lo, prime_hi, derive_seed(seed, 0x6D6F64, round_no), used
        )
        used.update(fresh)
        batch_results = parallel_map(
            _prime_task, [(A, d, p, lift_relations) for p in fresh], threads
        )
        results.extend(r for r in batch_results if r is not None)
        if not results:
            continue
        kept, sig = delete_unlucky_primes(results, prev_sig)
        prev_sig = sig
        lifted = lift_results(kept, A, want_relations=lift_relations)
        if lifted is None:
            continue
        G, R = lifted
        if not all(reduction_matches(G, r) for r in kept):
            continue
        try:
            frac = FractionalIdeal(
                Ideal(A.context, list(G)), d, A, check=True
            )
        except DegenerateInputError:
            continue
        if not p_test_normal(
            A, d, G, R, used, derive_seed(seed, 0x70, round_no)
        ):
            continue
        presentation = None
        if verify:
            if not verify_char_zero(A, d, G, R):
                continue
        if lift_relations or verify:
            try:
                presentation = ring_structure(
                    Ideal(
                        A.context,
                        list(ideal_with_defining(frac.numerator, A).groebner().elements),
                    ),
                    d,
                    A,
                )
            except DegenerateInputError:
                continue
        return NormalizationResult(
            frac,
            presentation,
            round_no,
            method,
            primes_used=sorted(r.p for r in kept),
            verified=bool(verify),
        )
    raise IterationLimitError(
        "modular normalization did not converge within %d rounds" % max_rounds
    )
