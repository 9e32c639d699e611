"""
Internal HOM complexes and ADC morphisms.

HOM(K, L)_n is represented by its ambient coordinate group: one coordinate
per matrix entry (a ↦ c) with a in K_m and c in L_{m+n}, plus an ``ε``
coordinate in degree 0 that holds εf. Membership in HOM(K, L)_0 (chain maps
compatible with the augmentation) and in the distinguished submonoid
(entrywise nonnegative matrices) are predicates, so these complexes are not
based.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .chain_core import BasisElement, ChainVector, format_vector, linear_extension
from .complexes import AugmentedComplex, PredicateSubmonoid, require_based
from .errors import ADCError, DegreeMismatchError, DimensionError
from .omega_cells import Cell, bounded_preimages

logger = logging.getLogger(__name__)

EPS_ID = "ε"
MAPS_TO = "↦"


class HomVariant(Enum):
    HOM = "hom"
    HOM_PRIME = "hom'"


@dataclass(frozen=True)
class HomElement:

    """
    An element of HOM(K, L)_n as columns: source basis id to its image in L.

    ``eps`` is εf and is only meaningful when n = 0.
    """

    n: int
    matrices: Mapping[str, ChainVector] = field(default_factory=dict)
    eps: int | None = None

    def column(self, source: BasisElement) -> ChainVector:
        return self.matrices.get(source.id, ChainVector.zero(source.degree + self.n))


@dataclass(frozen=True)
class Morphism:

    """An augmentation-preserving chain map K → L sending K* into L*."""

    source: AugmentedComplex = field(compare=False, hash=False)
    target: AugmentedComplex = field(compare=False, hash=False)
    images: tuple[tuple[BasisElement, ChainVector], ...]

    @classmethod
    def from_mapping(
        cls,
        source: AugmentedComplex,
        target: AugmentedComplex,
        images: Mapping[BasisElement, ChainVector],
    ) -> Morphism:
        return cls(source, target, tuple(sorted(images.items(), key=lambda item: item[0].sort_key)))

    @classmethod
    def identity(cls, K: AugmentedComplex) -> Morphism:
        return cls.from_mapping(K, K, {b: ChainVector.of(b) for b in K.basis})

    def image(self, element: BasisElement) -> ChainVector:
        for b, value in self.images:
            if b == element:
                return value
        return ChainVector.zero(element.degree)

    def __call__(self, x: ChainVector) -> ChainVector:
        return linear_extension(x, self.image, x.degree)

    def describe(self) -> str:
        return ", ".join(f"{b.id}{MAPS_TO}{format_vector(value)}" for b, value in self.images)


class HomComplex(AugmentedComplex):

    """
    HOM(K, L) or HOM'(K, L) over based complexes K and L.

    Boundaries, for f in degree n > 0:
        HOM:  (∂f)_m = ∂∘f_m - (-1)^n f_{m-1}∘∂ for m > 0, ∂∘f_0 for m = 0
        HOM': (∂f)_m = (-1)^m (∂∘f_m - f_{m-1}∘∂) for m > 0, ∂∘f_0 for m = 0
    The ε coordinate of a boundary is always 0.
    """

    def __init__(self, source: AugmentedComplex, target: AugmentedComplex, variant: HomVariant = HomVariant.HOM):
        require_based(source)
        require_based(target)
        self.source = source
        self.target = target
        self.variant = variant
        self._coordinates: dict[tuple[BasisElement, BasisElement], BasisElement] = {}
        self._entries: dict[BasisElement, tuple[BasisElement, BasisElement]] = {}
        for a in source.basis:
            for c in target.basis:
                if c.degree >= a.degree:
                    coordinate = BasisElement(f"{a.id}{MAPS_TO}{c.id}", c.degree - a.degree)
                    self._coordinates[(a, c)] = coordinate
                    self._entries[coordinate] = (a, c)
        self.eps_element = BasisElement(EPS_ID, 0)
        basis = [*self._coordinates.values(), self.eps_element]
        boundary = {e: self._coordinate_boundary(e) for e in basis if e.degree > 0}
        prefix = "HOM'" if variant is HomVariant.HOM_PRIME else "HOM"
        super().__init__(
            basis,
            boundary,
            {e: int(e == self.eps_element) for e in basis if e.degree == 0},
            submonoid=PredicateSubmonoid(
                self._nonnegative_matrices,
                self._in_group,
                description="nonnegative matrices, chain maps in degree 0",
            ),
            name=f"{prefix}({source.name},{target.name})",
        )

    def coordinate(self, a: BasisElement, c: BasisElement) -> BasisElement:
        return self._coordinates[(a, c)]

    def entry(self, coordinate: BasisElement) -> tuple[BasisElement, BasisElement] | None:
        return self._entries.get(coordinate)

    def _coordinate_boundary(self, coordinate: BasisElement) -> ChainVector:
        a, c = self._entries[coordinate]
        n = coordinate.degree
        prime = self.variant is HomVariant.HOM_PRIME
        terms: list[tuple[BasisElement, int]] = []
        if c.degree > 0:
            sign = (-1) ** a.degree if prime else 1
            terms.extend((self._coordinates[(a, lower)], sign * k) for lower, k in self.target.boundary_of(c).items())
        for upper in self.source.basis_in_degree(a.degree + 1):
            k = self.source.boundary_of(upper).coefficient(a)
            if k:
                sign = (-1) ** a.degree if prime else -((-1) ** n)
                terms.append((self._coordinates[(upper, c)], sign * k))
        return ChainVector(n - 1, terms)

    def to_element(self, x: ChainVector) -> HomElement:
        columns: dict[str, list[tuple[BasisElement, int]]] = {}
        eps = None
        for coordinate, k in x.items():
            if coordinate == self.eps_element:
                eps = k
                continue
            a, c = self._entries[coordinate]
            columns.setdefault(a.id, []).append((c, k))
        matrices = {
            source_id: ChainVector(self.source.element(source_id).degree + x.degree, pairs)
            for source_id, pairs in columns.items()
        }
        if x.degree == 0 and eps is None:
            eps = 0
        return HomElement(x.degree, matrices, eps)

    def to_vector(self, f: HomElement) -> ChainVector:
        terms: list[tuple[BasisElement, int]] = []
        for source_id, image in f.matrices.items():
            a = self.source.element(source_id)
            if image.degree != a.degree + f.n:
                raise DegreeMismatchError(a.degree + f.n, image.degree, "place a column in a HOM element")
            terms.extend((self._coordinates[(a, c)], k) for c, k in image.items())
        if f.n == 0 and f.eps:
            terms.append((self.eps_element, f.eps))
        return ChainVector(f.n, terms)

    def _nonnegative_matrices(self, x: ChainVector) -> bool:
        return all(k >= 0 for coordinate, k in x.items() if coordinate != self.eps_element)

    def _in_group(self, x: ChainVector) -> bool:
        if x.degree != 0:
            return True
        f = self.to_element(x)
        return is_chain_map(self.source, self.target, f)


def is_chain_map(K: AugmentedComplex, L: AugmentedComplex, f: HomElement) -> bool:
    """∂∘f = f∘∂ on every basis element and (εf)(εx) = ε(fx) in degree 0."""
    if f.n != 0:
        return False
    for a in K.basis:
        image = f.column(a)
        if a.degree == 0:
            if (f.eps or 0) * K.augmentation_of(a) != L.augment(image):
                return False
            continue
        mapped_boundary = linear_extension(K.boundary_of(a), f.column, a.degree - 1)
        if L.boundary(image) != mapped_boundary:
            return False
    return True


def hom(K: AugmentedComplex, L: AugmentedComplex) -> HomComplex:
    return HomComplex(K, L, HomVariant.HOM)


def hom_prime(K: AugmentedComplex, L: AugmentedComplex) -> HomComplex:
    return HomComplex(K, L, HomVariant.HOM_PRIME)


def hom_zero_cells(H: HomComplex, bound: int = 1) -> list[Cell]:
    """
    The 0-cells of νHOM(K, L) whose matrix entries are at most ``bound``.

    Every degree-0 coordinate ranges over [0, bound] with εf = 1, and the
    candidates are filtered through the degree-0 group predicate, so the
    search is independent of ``enumerate_morphisms``.
    """
    coordinates = [e for e in H.basis_in_degree(0) if e != H.eps_element]
    cells = []
    for values in product(range(bound + 1), repeat=len(coordinates)):
        x = ChainVector(0, [*zip(coordinates, values, strict=True), (H.eps_element, 1)])
        if H.submonoid.contains(x):
            cells.append(Cell(H, [x], [x]))
    logger.info("Found %d zero-cells of %s with bound %d", len(cells), H.name, bound)
    return cells


def cell_to_morphism(H: HomComplex, x: Cell) -> Morphism:
    if x.complex is not H:
        foreign = f"Cell does not belong to {H.name}."
        raise ADCError(foreign)
    if x.dimension > 0:
        too_big = f"Only 0-cells of {H.name} are morphisms, got dimension {x.dimension}."
        raise DimensionError(too_big)
    if not x.is_nu:
        not_nu = f"Cell is not a 0-cell of ν{H.name}."
        raise ADCError(not_nu)
    f = H.to_element(x.minus_at(0))
    return Morphism.from_mapping(H.source, H.target, {a: f.column(a) for a in H.source.basis})


def _search_morphisms(K: AugmentedComplex, L: AugmentedComplex, bound: int) -> Iterator[dict[BasisElement, ChainVector]]:
    elements = list(K.basis)
    images: dict[BasisElement, ChainVector] = {}

    def extend(index: int) -> Iterator[dict[BasisElement, ChainVector]]:
        if index == len(elements):
            yield dict(images)
            return
        a = elements[index]
        if a.degree == 0:
            options = bounded_preimages(L, 0, bound, augmentation=K.augmentation_of(a))
        else:
            wanted = linear_extension(K.boundary_of(a), images.__getitem__, a.degree - 1)
            options = bounded_preimages(L, a.degree, bound, boundary=wanted)
        for value in options:
            images[a] = value
            yield from extend(index + 1)
        images.pop(a, None)

    yield from extend(0)


def enumerate_morphisms(K: AugmentedComplex, L: AugmentedComplex, bound: int = 1) -> list[Morphism]:
    """
    Every ADC morphism K → L whose images have coefficients at most ``bound``.

    Basis elements are assigned in (degree, id) order, so each boundary
    constraint ∂f(b) = f(∂b) only refers to images already chosen. The
    result is complete relative to ``bound``.
    """
    require_based(K)
    require_based(L)
    morphisms = [Morphism.from_mapping(K, L, images) for images in _search_morphisms(K, L, bound)]
    logger.info("Found %d morphisms %s -> %s with bound %d", len(morphisms), K.name, L.name, bound)
    return morphisms
