import pytest

from adc.chain_core import BasisElement, ChainVector
from adc.complexes import AugmentedComplex
from adc.constructions import composable_pair, cube, globe, simplex


def vec(K: AugmentedComplex, coefficients: dict[str, int] | str, degree: int | None = None) -> ChainVector:
    """Shorthand: ``vec(K, "01")`` or ``vec(K, {"12": 1, "02": -1})``."""
    if isinstance(coefficients, str):
        coefficients = {coefficients: 1}
    return K.vector(coefficients, degree)


@pytest.fixture(scope="session")
def delta1() -> AugmentedComplex:
    return simplex(1)


@pytest.fixture(scope="session")
def delta2() -> AugmentedComplex:
    return simplex(2)


@pytest.fixture(scope="session")
def delta3() -> AugmentedComplex:
    return simplex(3)


@pytest.fixture(scope="session")
def globe1() -> AugmentedComplex:
    return globe(1)


@pytest.fixture(scope="session")
def globe2() -> AugmentedComplex:
    return globe(2)


@pytest.fixture(scope="session")
def square() -> AugmentedComplex:
    return cube(2)


@pytest.fixture(scope="session")
def pair10() -> AugmentedComplex:
    return composable_pair(1, 0)


@pytest.fixture(scope="session")
def directed_circle() -> AugmentedComplex:
    """Two vertices p, q and two edges e: p → q, f: q → p."""
    p, q = BasisElement("p", 0), BasisElement("q", 0)
    e, f = BasisElement("e", 1), BasisElement("f", 1)
    return AugmentedComplex(
        [p, q, e, f],
        {e: ChainVector(0, [(q, 1), (p, -1)]), f: ChainVector(0, [(p, 1), (q, -1)])},
        {p: 1, q: 1},
        name="circle",
    )
