import pytest

from adc.complexes import Sign
from adc.constructions import globe, simplex
from adc.errors import UnsupportedComplexError
from adc.hom import hom
from adc.omega_cells import BoundaryTerm, Leaf, Node
from adc.presentation import Relation, face_word, normalize, presentation, reduced_presentation


@pytest.mark.parametrize("p", [0, 1, 2, 3])
def test_globe_presentations_hold(p):
    G = globe(p)
    full = presentation(G)
    assert full.holds()
    assert len(full.generators) == len(G)

    reduced = reduced_presentation(G)
    assert reduced.holds()
    top = str(p)
    assert [b.id for b in reduced.generators] == [top]
    assert [r.render() for r in reduced.relations] == [f"d-{p} ⟨{top}⟩ = ⟨{top}⟩", f"d+{p} ⟨{top}⟩ = ⟨{top}⟩"]


def test_triangle_face_words(delta2):
    top = delta2.element("012")
    assert face_word(delta2, top, Sign.MINUS).render() == "⟨02⟩"
    assert face_word(delta2, top, Sign.PLUS).render() == "⟨01⟩ #0 ⟨12⟩"


def test_triangle_presentation(delta2):
    full = presentation(delta2)
    rendered = full.render().splitlines()
    assert rendered[0] == "generators: ⟨0⟩ ⟨1⟩ ⟨2⟩ ⟨01⟩ ⟨02⟩ ⟨12⟩ ⟨012⟩"
    assert "d+1 ⟨012⟩ = ⟨01⟩ #0 ⟨12⟩" in rendered
    assert "d-0 ⟨01⟩ = ⟨0⟩" in rendered
    assert full.holds()


def test_triangle_reduced_presentation(delta2):
    reduced = reduced_presentation(delta2)
    assert [b.id for b in reduced.generators] == ["01", "12", "012"]
    rendered = [r.render() for r in reduced.relations]
    assert "d-0 ⟨12⟩ = d+0 ⟨01⟩" in rendered
    assert "d+1 ⟨012⟩ = ⟨01⟩ #0 ⟨12⟩" in rendered
    assert reduced.holds()


def test_composable_pair_reduces_to_two_generators(pair10):
    reduced = reduced_presentation(pair10)
    assert [b.id for b in reduced.generators] == ["1", "3"]
    rendered = [r.render() for r in reduced.relations]
    assert rendered[-1] == "d-0 ⟨3⟩ = d+0 ⟨1⟩"
    assert len(rendered) == 5
    assert reduced.holds()


def test_simplex_three_presentation_holds(delta3):
    assert presentation(delta3).holds()
    assert reduced_presentation(delta3).holds()


def test_normalize_collapses_nested_boundaries(delta2):
    w = Leaf(delta2.element("012"))
    assert normalize(BoundaryTerm(Sign.PLUS, 0, BoundaryTerm(Sign.MINUS, 1, w))) == BoundaryTerm(Sign.PLUS, 0, w)
    assert normalize(BoundaryTerm(Sign.MINUS, 1, BoundaryTerm(Sign.PLUS, 0, w))) == BoundaryTerm(Sign.PLUS, 0, w)
    node = Node(0, (Leaf(delta2.element("01")), BoundaryTerm(Sign.MINUS, 0, BoundaryTerm(Sign.PLUS, 0, w))))
    assert normalize(node) == Node(0, (Leaf(delta2.element("01")), BoundaryTerm(Sign.PLUS, 0, w)))


def test_relation_helpers(delta2):
    leaf = Leaf(delta2.element("01"))
    assert Relation(leaf, leaf).is_trivial()
    assert not Relation(BoundaryTerm(Sign.MINUS, 1, leaf), leaf).is_trivial()
    assert Relation(BoundaryTerm(Sign.MINUS, 1, leaf), leaf).holds(delta2)


def test_presentation_needs_a_based_complex(globe1, delta2):
    with pytest.raises(UnsupportedComplexError):
        presentation(hom(globe1, delta2))
