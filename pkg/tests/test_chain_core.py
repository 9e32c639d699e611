import pytest
from hypothesis import given
from hypothesis import strategies as st

from adc.chain_core import (
    BasisElement,
    ChainVector,
    format_vector,
    join,
    leq,
    linear_extension,
    meet,
    split_parts,
    total_sum,
)
from adc.errors import DegreeMismatchError

POOL = [BasisElement(name, 1) for name in ("a", "b", "c", "d")]

vectors = st.dictionaries(st.sampled_from(POOL), st.integers(min_value=-5, max_value=5)).map(
    lambda coeffs: ChainVector(1, coeffs),
)


def test_canonical_form_drops_zeros_and_sums_duplicates():
    a, b = POOL[0], POOL[1]
    x = ChainVector(1, [(b, 2), (a, 1), (b, -2), (a, 3)])
    assert x.items() == ((a, 4),)
    assert x == ChainVector.of(a, 4)
    assert hash(x) == hash(ChainVector.of(a, 4))


def test_zero_vector_is_falsy_and_renders_as_zero():
    assert not ChainVector.zero(2)
    assert format_vector(ChainVector.zero(2)) == "0"


def test_format_vector_orders_by_id():
    a, b, c = POOL[:3]
    assert format_vector(ChainVector(1, {c: 1, a: 2, b: -1})) == "2(a)-(b)+(c)"


def test_mixed_degrees_are_rejected():
    with pytest.raises(DegreeMismatchError):
        ChainVector(0, [(POOL[0], 1)])
    with pytest.raises(DegreeMismatchError):
        ChainVector.zero(0) + ChainVector.of(POOL[0])


def test_negative_degree_basis_element_is_rejected():
    with pytest.raises(ValueError, match="negative degree"):
        BasisElement("x", -1)


def test_arithmetic():
    a, b = POOL[:2]
    x = ChainVector(1, {a: 2, b: -1})
    y = ChainVector(1, {b: 1})
    assert x + y == ChainVector.of(a, 2)
    assert x - x == ChainVector.zero(1)
    assert -x == ChainVector(1, {a: -2, b: 1})
    assert 3 * y == y * 3 == ChainVector.of(b, 3)
    assert total_sum([x, y, y], 1) == ChainVector(1, {a: 2, b: 1})


def test_linear_extension_applies_images():
    a, b = POOL[:2]
    low = BasisElement("v", 0)
    image = {a: ChainVector.of(low, 2), b: ChainVector.of(low, -1)}
    assert linear_extension(ChainVector(1, {a: 1, b: 3}), image.__getitem__, 0) == ChainVector.of(low, -1)


def test_meet_and_join_of_disjoint_supports():
    a, b = POOL[:2]
    assert meet(ChainVector.of(a), ChainVector.of(b)) == ChainVector.zero(1)
    assert join(ChainVector.of(a), ChainVector.of(b)) == ChainVector(1, {a: 1, b: 1})


@given(vectors, vectors)
def test_meet_and_join_bound_their_arguments(x, y):
    m, j = meet(x, y), join(x, y)
    assert leq(m, x)
    assert leq(m, y)
    assert leq(x, j)
    assert leq(y, j)
    assert m + j == x + y


@given(vectors, vectors, vectors)
def test_lattice_laws(x, y, z):
    assert meet(x, y) == meet(y, x)
    assert join(x, join(y, z)) == join(join(x, y), z)
    assert meet(x, join(x, y)) == x
    assert join(x, meet(x, y)) == x


@given(vectors)
def test_split_parts_is_the_unique_disjoint_decomposition(x):
    neg, pos = split_parts(x)
    assert pos - neg == x
    assert neg.is_nonnegative()
    assert pos.is_nonnegative()
    assert not meet(neg, pos)


@given(vectors, vectors)
def test_order_matches_the_cone(x, y):
    assert leq(x, y) == (y - x).is_nonnegative()
    assert (x <= y) == leq(x, y)


nonnegative = st.dictionaries(st.sampled_from(POOL), st.integers(min_value=0, max_value=5)).map(
    lambda coeffs: ChainVector(1, coeffs),
)


@given(vectors, vectors)
def test_order_is_reflexive_and_antisymmetric(x, y):
    assert leq(x, x)
    if leq(x, y) and leq(y, x):
        assert x == y


@given(vectors, nonnegative, nonnegative)
def test_order_is_transitive(x, p, q):
    y = x + p
    z = y + q
    assert leq(x, y)
    assert leq(y, z)
    assert leq(x, z)
    assert leq(y, x) == (not p)
