import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adc.chain_core import BasisElement, ChainVector, meet
from adc.complexes import (
    AugmentedComplex,
    PredicateSubmonoid,
    Sign,
    atoms,
    forced_relation,
    is_loop_free,
    is_strongly_loop_free,
    is_unital,
    level_relation,
    require_based,
    require_valid,
    respects_order,
    validate,
)
from adc.constructions import composable_pair, composable_triple, cube, globe, interchange_quad, simplex, tensor
from adc.errors import ComplexValidationError, UnknownBasisElementError, UnsupportedComplexError
from tests.conftest import vec


def _ids(elements):
    return [b.id for b in elements]


def test_simplex_boundary_and_atoms(delta2):
    assert delta2.boundary_of(delta2.element("01")) == vec(delta2, {"1": 1, "0": -1})
    table = atoms(delta2)
    top = delta2.element("012")
    assert table.minus(top, 1) == vec(delta2, "02")
    assert table.plus(top, 1) == vec(delta2, {"01": 1, "12": 1})
    assert table.minus(top, 0) == vec(delta2, "0")
    assert table.plus(top, 0) == vec(delta2, "2")
    assert table.minus(top, 2) == table.plus(top, 2) == vec(delta2, "012")


def test_atom_table_is_zero_above_the_element(delta2):
    assert atoms(delta2).plus(delta2.element("0"), 1) == ChainVector.zero(1)


def test_directed_circle_is_unital_but_not_loop_free(directed_circle):
    assert validate(directed_circle).ok
    assert is_unital(directed_circle)

    strong = is_strongly_loop_free(directed_circle)
    assert not strong
    assert _ids(strong.cycle) == ["p", "e", "q", "f", "p"]

    loop_free = is_loop_free(directed_circle)
    assert not loop_free
    assert loop_free.level == 0
    assert _ids(loop_free.cycle) == ["e", "f", "e"]


def test_simplex_strong_order_respects_forced_pairs(delta2):
    witness = is_strongly_loop_free(delta2)
    assert witness
    assert respects_order(delta2, witness.order)
    for a, b in forced_relation(delta2):
        assert witness.order.index(a) < witness.order.index(b)


def test_respects_order_rejects_bad_orders(delta1):
    assert respects_order(delta1, [delta1.element(i) for i in ("0", "01", "1")])
    assert not respects_order(delta1, [delta1.element(i) for i in ("01", "0", "1")])
    assert not respects_order(delta1, [delta1.element(i) for i in ("0", "01")])


def test_level_relation_of_two_simplex(delta2):
    edges = {(a.id, b.id) for a, b in level_relation(delta2, 0)}
    assert ("01", "12") in edges
    orders = is_loop_free(delta2).orders
    assert set(orders) == {0, 1}
    assert _ids(orders[0]).index("01") < _ids(orders[0]).index("12")


def test_corrupted_boundary_fails_validation():
    K = simplex(2)
    broken_boundary = dict(K.raw_boundary())
    broken_boundary[K.element("012")] = K.vector({"01": 1, "02": 1, "12": 1})
    broken = AugmentedComplex(K.basis, broken_boundary, K.raw_augmentation(), name="broken")
    report = validate(broken)
    assert not report.ok
    assert [v.identity for v in report.violations] == ["∂∂ = 0"]
    assert report.violations[0].element == "012"
    with pytest.raises(ComplexValidationError):
        require_valid(broken)


def test_augmentation_of_boundary_must_vanish():
    v = BasisElement("v", 0)
    e = BasisElement("e", 1)
    K = AugmentedComplex([v, e], {e: ChainVector.of(v)}, {v: 1})
    report = validate(K)
    assert [violation.identity for violation in report.violations] == ["ε∂ = 0"]
    assert "ε∂e = 1" in report.summary()


def test_missing_and_duplicate_data_are_reported():
    v = BasisElement("v", 0)
    e = BasisElement("e", 1)
    K = AugmentedComplex([v, v, e], {}, {})
    identities = {violation.identity for violation in validate(K).violations}
    assert identities == {"unique ids", "boundary domain", "augmentation domain"}


def test_unknown_basis_id(delta1):
    with pytest.raises(UnknownBasisElementError, match="nope"):
        delta1.element("nope")


def test_predicate_submonoid_is_not_based(delta1):
    K = AugmentedComplex(
        delta1.basis,
        delta1.raw_boundary(),
        delta1.raw_augmentation(),
        submonoid=PredicateSubmonoid(lambda x: x.is_nonnegative()),
    )
    assert not K.is_based
    with pytest.raises(UnsupportedComplexError):
        require_based(K)
    with pytest.raises(UnsupportedComplexError):
        atoms(K)


def test_sign_helpers():
    assert Sign.MINUS.flipped() is Sign.PLUS
    assert Sign.PLUS.alternate(1) is Sign.MINUS
    assert Sign.PLUS.alternate(2) is Sign.PLUS
    assert Sign.parse("+") is Sign.PLUS
    assert Sign.parse("minus") is Sign.MINUS
    with pytest.raises(ValueError, match="Unknown sign"):
        Sign.parse("*")


def _standard_complexes():
    small = [simplex(1), simplex(2), globe(1), globe(2)]
    yield from (simplex(p) for p in range(6))
    yield from (globe(p) for p in range(4))
    yield from (composable_pair(p, n) for p in range(4) for n in range(3))
    yield from (composable_triple(p, n) for p in range(3) for n in range(3))
    yield from (interchange_quad(p, n, m) for p in range(3) for n in range(1, 3) for m in range(n))
    yield from (cube(p) for p in range(4))
    yield from (tensor(K, L) for K in small for L in small)


@pytest.mark.parametrize("K", list(_standard_complexes()), ids=lambda K: K.name)
def test_standard_complexes_have_strongly_loop_free_unital_bases(K):
    assert validate(K).ok, validate(K).summary()
    table = atoms(K)
    for b, n, minus, plus in table.rows():
        if n < b.degree:
            assert not meet(minus, plus), f"<{b.id}> at {n}"
    assert is_unital(K)
    assert is_strongly_loop_free(K)
    assert is_loop_free(K)


VERTICES = [BasisElement(f"v{i}", 0) for i in range(3)]

edge_lists = st.lists(
    st.tuples(st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2)).filter(
        lambda edge: edge[0] != edge[1],
    ),
    max_size=3,
)


def _digraph_complex(edges, prefix: str) -> AugmentedComplex:
    elements = [BasisElement(f"{prefix}{i}", 1) for i in range(len(edges))]
    boundary = {
        e: ChainVector(0, [(VERTICES[target], 1), (VERTICES[source], -1)])
        for e, (source, target) in zip(elements, edges, strict=True)
    }
    return AugmentedComplex([*VERTICES, *elements], boundary, {v: 1 for v in VERTICES}, name=prefix)


@settings(max_examples=60, deadline=None)
@given(edge_lists, edge_lists)
def test_strong_loop_freeness_implies_loop_freeness(first, second):
    K = _digraph_complex(first, "e")
    L = _digraph_complex(second, "f")
    for M in (K, L, tensor(K, L)):
        assert validate(M).ok
        if is_strongly_loop_free(M):
            assert is_loop_free(M)
