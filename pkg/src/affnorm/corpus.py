"""Built-in benchmark curves and surfaces.

The plane-curve families live in QQ[x,y]; the `f1` family is defined
projectively and moved to the affine chart via z -> 3x - 2y + 1 so that
every singularity is visible.  Surfaces (f6/f7/f8, i10) have a
positive-dimensional singular locus and are included only to exercise the
explicit unsupported-dimension error.
"""

from .ideals import Ideal
from .polyring import RingContext, rationals


def _ctx2():
    return RingContext(("x", "y"), rationals())


def _ctx3():
    return RingContext(("x", "y", "z"), rationals())


def _ctx4():
    return RingContext(("x", "y", "z", "w"), rationals())


def f1(k):
    """(x^(k+1) + y^(k+1) + z^(k+1))^2 - 4(x^(k+1)y^(k+1) + y^(k+1)z^(k+1)
    + z^(k+1)x^(k+1)), restricted to the chart z = 3x - 2y + 1."""
    ctx = _ctx2()
    x, y = ctx.gens()
    z = ctx.poly("3*x - 2*y + 1")
    a = x ** (k + 1)
    b = y ** (k + 1)
    c = z ** (k + 1)
    f = (a + b + c) ** 2 - (a * b + b * c + c * a).scale(4)
    return ctx, Ideal(ctx, [f])


def f2(k):
    ctx = _ctx2()
    x, y = ctx.gens()
    y3 = y**3
    f = (
        ((x - 1) ** k - y3)
        * ((x + 1) ** k - y3)
        * (x**k - y3)
        * ((x - 2) ** k - y3)
        * ((x + 2) ** k - y3)
        + y**15
    )
    return ctx, Ideal(ctx, [f])


def f3():
    ctx = _ctx2()
    x, y = ctx.gens()
    u = ctx.poly("x - 2*y + 1")
    f = (
        x**10
        + y**10
        + u**10
        + ((x**5) * (u**5) - (x**5) * (y**5) + (y**5) * (u**5)).scale(2)
    )
    return ctx, Ideal(ctx, [f])


def f4():
    ctx = _ctx2()
    x, y = ctx.gens()
    f = (
        (y**5 + (x**8).scale(2))
        * (y**3 + ((x - 1) ** 4).scale(7))
        * ((y + 5) ** 7 + (x**12).scale(2))
        + y**11
    )
    return ctx, Ideal(ctx, [f])


_F5_TEXT = (
    "9127158539954*x^10 + 3212722859346*x^8*y^2 + 228715574724*x^6*y^4"
    " - 34263110700*x^4*y^6 - 5431439286*x^2*y^8 - 201803238*y^10"
    " - 134266087241*x^8 - 15052058268*x^6*y^2 + 12024807786*x^4*y^4"
    " + 506101284*x^2*y^6 - 202172841*y^8 + 761328152*x^6"
    " - 128361096*x^4*y^2 + 47970216*x^2*y^4 - 6697080*y^6 - 2042158*x^4"
    " + 660492*x^2*y^2 - 84366*y^4 + 2494*x^2 - 474*y^2 - 1"
)


def f5():
    ctx = _ctx2()
    return ctx, Ideal(ctx, [ctx.poly(_F5_TEXT)])


def f6(k):
    ctx = _ctx3()
    x, y, z = ctx.gens()
    f = (
        x * y * (x - y) * (x + y) * (y - 1) * z
        + (x**k - y**2) * (x**10 - (y - 1) ** 2)
    )
    return ctx, Ideal(ctx, [f])


def f7(k):
    ctx = _ctx3()
    x, y, z = ctx.gens()
    f = z**2 - (
        (y**2 - (x**3).scale(1234)) ** k
        * ((x**2).scale(15791) - y**3)
        * ((y**2).scale(1231) - x**2 * (x + 158))
        * ((y**5).scale(1357) - (x**11).scale(3))
    )
    return ctx, Ideal(ctx, [f])


def f8():
    ctx = _ctx3()
    x, y, z = ctx.gens()
    f = z**5 - (
        (x.scale(13) - y.scale(17))
        * ((x**2).scale(5) - (y**3).scale(7))
        * ((x**3).scale(3) - (y**2).scale(2))
        * ((y**2).scale(19) - (x**2).scale(23) * (x + 29))
    ) ** 2
    return ctx, Ideal(ctx, [f])


def i9(k):
    ctx = _ctx3()
    x, y, z = ctx.gens()
    g1 = z**3 - ((y**2).scale(19) - (x**2).scale(23) * (x + 29)) ** 2
    g2 = x**3 - ((y**2).scale(11) - (z**2).scale(13) * (z + 1)) ** k
    return ctx, Ideal(ctx, [g1, g2])


def i10():
    ctx = _ctx4()
    x, y, z, w = ctx.gens()
    g1 = z**2 - (y**3 - (w**2).scale(123456)) * ((x**2).scale(15791) - y**3) ** 2
    g2 = w * z - ((y**2).scale(1231) - x * (x.scale(111) + ctx.constant(158)))
    return ctx, Ideal(ctx, [g1, g2])


CORPUS = {
    "f1_2": lambda: f1(2),
    "f1_3": lambda: f1(3),
    "f1_4": lambda: f1(4),
    "f1_5": lambda: f1(5),
    "f2_7": lambda: f2(7),
    "f2_8": lambda: f2(8),
    "f2_9": lambda: f2(9),
    "f3": f3,
    "f4": f4,
    "f5": f5,
    "f6_11": lambda: f6(11),
    "f6_12": lambda: f6(12),
    "f6_13": lambda: f6(13),
    "f7_2": lambda: f7(2),
    "f7_3": lambda: f7(3),
    "f8": f8,
    "i9_1": lambda: i9(1),
    "i9_2": lambda: i9(2),
    "i10": i10,
}

# curves with zero-dimensional singular locus (in scope for all pipelines)
CURVES = [
    "f1_2",
    "f1_3",
    "f1_4",
    "f1_5",
    "f2_7",
    "f2_8",
    "f2_9",
    "f3",
    "f4",
    "f5",
    "i9_1",
    "i9_2",
]

# surfaces: out of scope, must fail with the unsupported-dimension error
SURFACES = ["f6_11", "f6_12", "f6_13", "f7_2", "f7_3", "f8", "i10"]


def corpus_instance(name):
    try:
        builder = CORPUS[name]
    except KeyError:
        raise KeyError(
            "unknown corpus instance %r (known: %s)"
            % (name, ", ".join(sorted(CORPUS)))
        ) from None
    return builder()
