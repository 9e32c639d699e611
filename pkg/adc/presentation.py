"""
Presentations of νK by generators and relations.

The generators are the atoms. Each atom <b> satisfies dᵅ_|b|<b> = <b>, and
its faces dᵅ_{|b|-1}<b> are recorded as composition words found by
decomposition. ``reduced_presentation`` then eliminates every generator
that is the whole face of a surviving generator.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .chain_core import BasisElement
from .complexes import SIGNS, AugmentedComplex, Sign, require_based
from .omega_cells import BoundaryTerm, Leaf, Node, Word, atom_cell, d, decompose_full

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def holds(self, K: AugmentedComplex) -> bool:
        return self.lhs.evaluate(K) == self.rhs.evaluate(K)

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def render(self) -> str:
        return f"{self.lhs.render()} = {self.rhs.render()}"


@dataclass(frozen=True)
class Presentation:
    complex: AugmentedComplex
    generators: tuple[BasisElement, ...]
    relations: tuple[Relation, ...]

    def holds(self) -> bool:
        return all(relation.holds(self.complex) for relation in self.relations)

    def render(self) -> str:
        lines = ["generators: " + " ".join(Leaf(g).render() for g in self.generators)]
        lines.extend(relation.render() for relation in self.relations)
        return "\n".join(lines)


def face_word(K: AugmentedComplex, element: BasisElement, sign: Sign) -> Word:
    """The composition word for dᵅ_{|b|-1}<b>."""
    return decompose_full(d(sign, element.degree - 1, atom_cell(K, element)))


def presentation(K: AugmentedComplex) -> Presentation:
    require_based(K)
    relations = []
    for element in K.basis:
        for sign in SIGNS:
            relations.append(Relation(BoundaryTerm(sign, element.degree, Leaf(element)), Leaf(element)))
        if element.degree == 0:
            continue
        for sign in SIGNS:
            relations.append(Relation(BoundaryTerm(sign, element.degree - 1, Leaf(element)), face_word(K, element, sign)))
    logger.info("Presented %s with %d generators and %d relations", K.name, len(K.basis), len(relations))
    return Presentation(K, K.basis, tuple(relations))


def normalize(word: Word) -> Word:
    """Collapse nested boundaries: d^β_m d^α_n w is d^β_m w for m < n and d^α_n w otherwise."""
    if isinstance(word, Leaf):
        return word
    if isinstance(word, Node):
        return Node(word.level, tuple(normalize(child) for child in word.children))
    body = normalize(word.body)
    if isinstance(body, BoundaryTerm):
        if word.level < body.level:
            return BoundaryTerm(word.sign, word.level, body.body)
        return body
    return BoundaryTerm(word.sign, word.level, body)


def _substitute(word: Word, aliases: dict[BasisElement, Word]) -> Word:
    if isinstance(word, Leaf):
        return aliases.get(word.basis, word)
    if isinstance(word, Node):
        return Node(word.level, tuple(_substitute(child, aliases) for child in word.children))
    return BoundaryTerm(word.sign, word.level, _substitute(word.body, aliases))


def reduced_presentation(K: AugmentedComplex) -> Presentation:
    """
    Eliminate generators that are entire faces of other generators.

    Basis elements are visited from the top degree down. When a face word of
    a visited element is a single atom <c> that is still a generator, c is
    replaced everywhere by that face, expressed through the surviving
    generators. Relations that collapse to an identity are dropped.
    """
    full = presentation(K)
    aliases: dict[BasisElement, Word] = {}
    for element in sorted(K.basis, key=lambda b: (-b.degree, b.id)):
        if element.degree == 0:
            continue
        expression = aliases.get(element, Leaf(element))
        for sign in SIGNS:
            face = face_word(K, element, sign)
            if not isinstance(face, Leaf):
                continue
            target = face.basis
            if target == element or target in aliases:
                continue
            aliases[target] = normalize(BoundaryTerm(sign, element.degree - 1, expression))
            logger.debug("Eliminated <%s> as %s", target.id, aliases[target].render())

    relations: list[Relation] = []
    seen: set[Relation] = set()
    for relation in full.relations:
        reduced = Relation(normalize(_substitute(relation.lhs, aliases)), normalize(_substitute(relation.rhs, aliases)))
        if reduced.is_trivial() or reduced in seen:
            continue
        seen.add(reduced)
        relations.append(reduced)
    generators = tuple(b for b in K.basis if b not in aliases)
    return Presentation(K, generators, tuple(relations))
