import pytest
from hypothesis import given
from hypothesis import strategies as st

from adc.chain_core import ChainVector
from adc.complexes import validate
from adc.constructions import globe, simplex
from adc.errors import ADCError, UnsupportedComplexError
from adc.hom import (
    EPS_ID,
    HomElement,
    HomVariant,
    Morphism,
    cell_to_morphism,
    enumerate_morphisms,
    hom,
    hom_prime,
    hom_zero_cells,
    is_chain_map,
)
from adc.omega_cells import atom_cell, enumerate_cells
from tests.conftest import vec

WIDE = hom(simplex(1), simplex(3))
WIDE_PRIME = hom_prime(simplex(1), simplex(3))


def _random_vectors(H, n):
    return st.dictionaries(st.sampled_from(H.basis_in_degree(n)), st.integers(min_value=-4, max_value=4)).map(
        lambda coeffs: ChainVector(n, coeffs),
    )


@pytest.mark.parametrize("build", [hom, hom_prime], ids=["hom", "hom'"])
def test_hom_complexes_are_valid(build, delta2, globe1):
    H = build(globe1, delta2)
    report = validate(H)
    assert report.ok, report.summary()
    assert not H.is_based
    assert H.element(EPS_ID).degree == 0


def test_coordinates_and_names(globe1, delta2):
    H = hom(globe1, delta2)
    assert H.name == "HOM(G[1],Δ[2])"
    assert hom_prime(globe1, delta2).variant is HomVariant.HOM_PRIME
    coordinate = H.coordinate(globe1.element("1"), delta2.element("012"))
    assert coordinate.id == "1↦012"
    assert coordinate.degree == 1
    assert H.entry(coordinate) == (globe1.element("1"), delta2.element("012"))
    assert H.entry(H.eps_element) is None


def test_hom_boundary_signs(delta1, delta2):
    H = hom(delta1, delta1)
    assert H.boundary_of(H.element("0↦01")) == vec(H, {"0↦1": 1, "0↦0": -1, "01↦01": -1})

    H = hom(delta1, delta2)
    P = hom_prime(delta1, delta2)
    assert H.boundary_of(H.element("01↦012")) == vec(H, {"01↦12": 1, "01↦02": -1, "01↦01": 1})
    assert P.boundary_of(P.element("01↦012")) == vec(P, {"01↦12": -1, "01↦02": 1, "01↦01": -1})


@given(_random_vectors(WIDE, 2))
def test_hom_boundary_squares_to_zero(x):
    assert not WIDE.boundary(WIDE.boundary(x))


@given(_random_vectors(WIDE_PRIME, 2))
def test_hom_prime_boundary_squares_to_zero(x):
    assert not WIDE_PRIME.boundary(WIDE_PRIME.boundary(x))


def test_element_and_vector_conversions(delta1, delta2):
    H = hom(delta1, delta2)
    f = HomElement(0, {"0": vec(delta2, "0"), "1": vec(delta2, "2"), "01": vec(delta2, "02")}, eps=1)
    x = H.to_vector(f)
    assert x == vec(H, {"0↦0": 1, "1↦2": 1, "01↦02": 1, EPS_ID: 1})
    assert H.to_element(x) == f
    assert is_chain_map(delta1, delta2, f)
    assert H.submonoid.contains(x)


def test_negative_entries_are_outside_the_submonoid(delta1, delta2):
    H = hom(delta1, delta2)
    x = vec(H, {"0↦0": 1, "1↦1": 2, "1↦2": -1, "01↦01": 1, "01↦12": -1, EPS_ID: 1})
    assert H.submonoid.contains_group(x)
    assert not H.submonoid.contains(x)


def test_non_chain_maps_are_outside_the_group(delta1, delta2):
    H = hom(delta1, delta2)
    f = HomElement(0, {"0": vec(delta2, "0"), "1": vec(delta2, "2"), "01": vec(delta2, "01")}, eps=1)
    assert not is_chain_map(delta1, delta2, f)
    assert not H.submonoid.contains_group(H.to_vector(f))


def test_zero_cells_from_the_point_are_vertices(delta2):
    H = hom(globe(0), delta2)
    cells = hom_zero_cells(H)
    images = {cell_to_morphism(H, x).image(globe(0).basis[0]) for x in cells}
    assert len(cells) == 3
    assert images == {ChainVector.of(v) for v in delta2.basis_in_degree(0)}


def test_morphisms_from_the_point_are_vertices(delta2):
    point = globe(0)
    morphisms = enumerate_morphisms(point, delta2)
    assert len(morphisms) == 3
    assert {m.image(point.basis[0]) for m in morphisms} == {ChainVector.of(v) for v in delta2.basis_in_degree(0)}


def test_zero_cells_match_morphisms(globe1, delta2):
    H = hom(globe1, delta2)
    cells = hom_zero_cells(H)
    morphisms = enumerate_morphisms(globe1, delta2)
    assert len(morphisms) == len(enumerate_cells(delta2, 1)) == 7
    assert {cell_to_morphism(H, x) for x in cells} == set(morphisms)
    assert len(cells) == len(morphisms)


def test_identity_is_a_morphism(delta2):
    identity = Morphism.identity(delta2)
    assert identity in enumerate_morphisms(delta2, delta2)
    x = vec(delta2, {"01": 1, "12": 2})
    assert identity(x) == x


def test_morphism_applies_linearly(globe1, delta2):
    m = Morphism.from_mapping(globe1, delta2, {
        globe1.element("0"): vec(delta2, "0"),
        globe1.element("1"): vec(delta2, {"01": 1, "12": 1}),
        globe1.element("2"): vec(delta2, "2"),
    })
    assert m(vec(globe1, "1")) == vec(delta2, {"01": 1, "12": 1})
    assert m.describe() == "0↦(0), 2↦(2), 1↦(01)+(12)"


def test_foreign_cells_are_not_morphisms(globe1, delta2):
    H = hom(globe1, delta2)
    with pytest.raises(ADCError, match="does not belong"):
        cell_to_morphism(H, atom_cell(delta2, "0"))


def test_hom_complexes_cannot_be_enumerated_directly(globe1, delta2):
    with pytest.raises(UnsupportedComplexError):
        enumerate_cells(hom(globe1, delta2), 0)
