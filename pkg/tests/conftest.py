import pytest

from affnorm.affine import AffineAlgebra
from affnorm.ideals import Ideal
from affnorm.polyring import RingContext, prime_field, rationals


@pytest.fixture
def ctx_qq():
    return RingContext(("x", "y"), rationals())


@pytest.fixture
def ctx_gf5():
    return RingContext(("x", "y"), prime_field(5))


@pytest.fixture
def example_curve(ctx_qq):
    """The running example: x^4 + y^2 (y-1)^3, an A3 and an E6 point."""
    ideal = Ideal.from_strings(ctx_qq, ["x^4 + y^2*(y-1)^3"])
    return AffineAlgebra(ctx_qq, ideal)


@pytest.fixture
def cusp(ctx_qq):
    return AffineAlgebra(ctx_qq, Ideal.from_strings(ctx_qq, ["y^2 - x^3"]))
