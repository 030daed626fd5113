import pytest

from gsl import core


@pytest.fixture(scope="session")
def gb():
    return core.boolean_gamma()


@pytest.fixture(scope="session")
def z2():
    return core.zn_gamma(2)


@pytest.fixture(scope="session")
def z3():
    return core.zn_gamma(3)


@pytest.fixture(scope="session")
def z4():
    return core.zn_gamma(4)


@pytest.fixture(scope="session")
def bool_sr():
    return core.boolean_semiring()


@pytest.fixture(scope="session")
def z4_sr():
    return core.zn_semiring(4)


@pytest.fixture(scope="session")
def zero_product():
    """S = G = boolean monoid, product constantly zero: valid, but the only
    operator action is the zero map, so there is no unity."""
    add = ((0, 1), (1, 1))
    prod = tuple(tuple(tuple(0 for _ in range(2)) for _ in range(2)) for _ in range(2))
    g = core.GammaSemiring("zero_product", ("0", "1"), ("0", "1"), add, add, prod)
    assert core.validate_gamma_semiring(g).ok
    return g


@pytest.fixture(scope="session")
def all_small_instances(gb, z2, z3, z4, zero_product, bool_sr):
    """Every stock instance with carriers of size at most 4."""
    return [gb, z2, z3, z4, zero_product, core.gamma_from_semiring(bool_sr)]
