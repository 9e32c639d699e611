"""
Augmented directed complexes with bases.

An ``AugmentedComplex`` holds a graded basis, the boundary of every
positive-degree basis element, the augmentation of every degree-0 element and
its distinguished submonoid. The default submonoid is the cone spanned by the
basis; HOM complexes use a predicate instead and are not based.

The decision procedures below turn the existential definitions of loop-free
and strongly loop-free bases into acyclicity checks on the forced precedence
digraphs, returning a topological order as witness or a cycle as
counterexample.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections import defaultdict
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import networkx as nx

from .chain_core import BasisElement, ChainVector, format_vector, linear_extension, meet, split_parts
from .errors import ADCError, ComplexValidationError, UnknownBasisElementError, UnsupportedComplexError

logger = logging.getLogger(__name__)


class Sign(Enum):
    MINUS = "-"
    PLUS = "+"

    def flipped(self) -> Sign:
        return Sign.PLUS if self is Sign.MINUS else Sign.MINUS

    def alternate(self, i: int) -> Sign:
        """(-)^i applied to this sign."""
        return self if i % 2 == 0 else self.flipped()

    @classmethod
    def parse(cls, text: str) -> Sign:
        for sign in cls:
            if text in (sign.value, sign.name.lower()):
                return sign
        unknown_sign = f"Unknown sign '{text}', expected '-' or '+'."
        raise ValueError(unknown_sign)


SIGNS = (Sign.MINUS, Sign.PLUS)


@dataclass(frozen=True)
class Violation:
    identity: str
    element: str
    detail: str

    def __str__(self) -> str:
        return f"{self.identity} at {self.element}: {self.detail}"


@dataclass
class ValidationReport:
    subject: str
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, identity: str, element: str, detail: str) -> None:
        self.violations.append(Violation(identity, element, detail))

    def summary(self) -> str:
        if self.ok:
            return f"{self.subject}: ok"
        return f"{self.subject}: " + "; ".join(str(v) for v in self.violations)

    def __bool__(self) -> bool:
        return self.ok


class Submonoid(ABC):

    """Distinguished submonoid K*_n, tested degree by degree."""

    @abstractmethod
    def contains(self, x: ChainVector) -> bool:
        pass

    def contains_group(self, x: ChainVector) -> bool:  # noqa: ARG002
        """Membership in the chain group itself; only proper subgroups override this."""
        return True

    @property
    def is_basis_cone(self) -> bool:
        return False


class ConeOfBasis(Submonoid):
    def contains(self, x: ChainVector) -> bool:
        return x.is_nonnegative()

    @property
    def is_basis_cone(self) -> bool:
        return True

    def __repr__(self) -> str:
        return "ConeOfBasis()"


class PredicateSubmonoid(Submonoid):
    def __init__(
        self,
        member: Callable[[ChainVector], bool],
        group_member: Callable[[ChainVector], bool] | None = None,
        description: str = "predicate",
    ):
        self._member = member
        self._group_member = group_member
        self.description = description

    def contains(self, x: ChainVector) -> bool:
        return self.contains_group(x) and self._member(x)

    def contains_group(self, x: ChainVector) -> bool:
        return self._group_member is None or self._group_member(x)

    def __repr__(self) -> str:
        return f"PredicateSubmonoid({self.description})"


class AugmentedComplex:

    """
    A finite augmented chain complex with a distinguished submonoid per degree.

    The constructor only records data; identities are checked by ``validate``
    so that invalid input can be reported rather than rejected.

    Args:
    ----
        basis (Iterable[BasisElement]): Basis elements of every degree.
        boundary (Mapping): Positive-degree basis element to its boundary.
        augmentation (Mapping): Degree-0 basis element to an integer.
        submonoid (Submonoid | None): Defaults to the cone of the basis.
        name (str): Label used in reports and documents.

    """

    def __init__(
        self,
        basis: Iterable[BasisElement],
        boundary: Mapping[BasisElement, ChainVector],
        augmentation: Mapping[BasisElement, int],
        submonoid: Submonoid | None = None,
        name: str = "K",
    ):
        self.name = name
        self.submonoid = submonoid or ConeOfBasis()
        self._duplicates: list[str] = []
        self._by_id: dict[str, BasisElement] = {}
        for element in basis:
            if element.id in self._by_id:
                self._duplicates.append(element.id)
                continue
            self._by_id[element.id] = element
        self._basis = tuple(sorted(self._by_id.values()))
        self._by_degree: dict[int, tuple[BasisElement, ...]] = defaultdict(tuple)
        for degree in {b.degree for b in self._basis}:
            self._by_degree[degree] = tuple(b for b in self._basis if b.degree == degree)
        self._boundary = dict(boundary)
        self._augmentation = {b: int(value) for b, value in augmentation.items()}

    @property
    def basis(self) -> tuple[BasisElement, ...]:
        return self._basis

    @property
    def max_degree(self) -> int:
        return max((b.degree for b in self._basis), default=-1)

    @property
    def is_based(self) -> bool:
        return self.submonoid.is_basis_cone

    def basis_in_degree(self, n: int) -> tuple[BasisElement, ...]:
        return self._by_degree.get(n, ())

    def degree_counts(self) -> tuple[int, ...]:
        return tuple(len(self.basis_in_degree(n)) for n in range(self.max_degree + 1))

    def element(self, basis_id: str) -> BasisElement:
        try:
            return self._by_id[basis_id]
        except KeyError:
            raise UnknownBasisElementError(basis_id) from None

    def __contains__(self, element: object) -> bool:
        return isinstance(element, BasisElement) and self._by_id.get(element.id) == element

    def __len__(self) -> int:
        return len(self._basis)

    def vector(self, coeffs: Mapping[str, int], degree: int | None = None) -> ChainVector:
        """Build a vector from basis ids; ``degree`` is only needed for the zero vector."""
        pairs = [(self.element(basis_id), c) for basis_id, c in coeffs.items()]
        if degree is None:
            if not pairs:
                missing_degree = "The degree of an empty vector must be given explicitly."
                raise ValueError(missing_degree)
            degree = pairs[0][0].degree
        return ChainVector(degree, pairs)

    def zero(self, n: int) -> ChainVector:
        return ChainVector.zero(n)

    def boundary_of(self, element: BasisElement) -> ChainVector:
        if element.degree == 0:
            return ChainVector.zero(0)
        return self._boundary.get(element, ChainVector.zero(element.degree - 1))

    def boundary(self, x: ChainVector) -> ChainVector:
        if x.degree == 0:
            no_lower_degree = "The boundary is only defined on positive degrees."
            raise ValueError(no_lower_degree)
        return linear_extension(x, self.boundary_of, x.degree - 1)

    def augmentation_of(self, element: BasisElement) -> int:
        return self._augmentation.get(element, 0)

    def augment(self, x: ChainVector) -> int:
        if x.degree != 0:
            wrong_degree = f"The augmentation is only defined in degree 0, got degree {x.degree}."
            raise ValueError(wrong_degree)
        return sum(c * self.augmentation_of(b) for b, c in x.items())

    def raw_boundary(self) -> Mapping[BasisElement, ChainVector]:
        return dict(self._boundary)

    def raw_augmentation(self) -> Mapping[BasisElement, int]:
        return dict(self._augmentation)

    @cached_property
    def validation_report(self) -> ValidationReport:
        return _validate(self)

    @cached_property
    def atom_table(self) -> AtomTable:
        return _compute_atoms(self)

    @cached_property
    def loop_free_witness(self) -> LoopFreeWitness:
        return _decide_loop_free(self)

    @cached_property
    def strong_witness(self) -> OrderWitness:
        return _decide_strongly_loop_free(self)

    def __repr__(self) -> str:
        return f"AugmentedComplex({self.name!r}, counts={self.degree_counts()}, submonoid={self.submonoid!r})"


def _validate(K: AugmentedComplex) -> ValidationReport:
    report = ValidationReport(subject=K.name)
    for basis_id in K._duplicates:  # noqa: SLF001
        report.add("unique ids", basis_id, "basis id declared more than once")

    declared = set(K.basis)
    boundary = K.raw_boundary()
    augmentation = K.raw_augmentation()
    well_formed: set[BasisElement] = set()

    for element, value in boundary.items():
        if element not in declared:
            report.add("boundary domain", element.id, "boundary given for an undeclared basis element")
            continue
        if element.degree == 0:
            report.add("boundary domain", element.id, "boundary given for a degree-0 element")
            continue
        if value.degree != element.degree - 1:
            report.add("boundary degree", element.id, f"boundary has degree {value.degree}, expected {element.degree - 1}")
            continue
        strangers = [b.id for b in value.support() if b not in declared]
        if strangers:
            report.add("boundary domain", element.id, f"boundary mentions undeclared elements {', '.join(strangers)}")
            continue
        well_formed.add(element)

    for element in K.basis:
        if element.degree > 0 and element not in boundary:
            report.add("boundary domain", element.id, "no boundary given")
        if element.degree == 0 and element not in augmentation:
            report.add("augmentation domain", element.id, "no augmentation given")

    for element in augmentation:
        if element not in declared or element.degree != 0:
            report.add("augmentation domain", element.id, "augmentation given outside the degree-0 basis")

    for element in K.basis:
        if element not in well_formed:
            continue
        if element.degree >= 2:  # noqa: PLR2004
            inner = boundary[element]
            if not all(b in well_formed for b in inner.support()):
                continue
            twice = K.boundary(inner)
            if twice:
                report.add("∂∂ = 0", element.id, f"∂∂{element.id} = {format_vector(twice)} ≠ 0")
        elif element.degree == 1:
            value = K.augment(boundary[element])
            if value != 0:
                report.add("ε∂ = 0", element.id, f"ε∂{element.id} = {value} ≠ 0")

    if report.ok:
        logger.debug("Complex %s passed validation", K.name)
    else:
        logger.debug("Complex %s failed validation: %s", K.name, report.summary())
    return report


def validate(K: AugmentedComplex) -> ValidationReport:
    return K.validation_report


def require_valid(K: AugmentedComplex) -> AugmentedComplex:
    report = validate(K)
    if not report.ok:
        raise ComplexValidationError(report)
    return K


def require_based(K: AugmentedComplex) -> AugmentedComplex:
    require_valid(K)
    if not K.is_based:
        not_based = f"Complex {K.name} has a predicate submonoid and no basis cone; this operation needs a basis."
        raise UnsupportedComplexError(not_based)
    return K


class AtomTable:

    """The vectors <b>^α_n for every basis element b and every n <= |b|."""

    def __init__(self, complex_: AugmentedComplex, entries: Mapping[tuple[BasisElement, int, Sign], ChainVector]):
        self.complex = complex_
        self._entries = dict(entries)

    def get(self, element: BasisElement, n: int, sign: Sign) -> ChainVector:
        if n > element.degree:
            return ChainVector.zero(n)
        try:
            return self._entries[(element, n, sign)]
        except KeyError:
            raise UnknownBasisElementError(element.id) from None

    def minus(self, element: BasisElement, n: int) -> ChainVector:
        return self.get(element, n, Sign.MINUS)

    def plus(self, element: BasisElement, n: int) -> ChainVector:
        return self.get(element, n, Sign.PLUS)

    def rows(self) -> list[tuple[BasisElement, int, ChainVector, ChainVector]]:
        return [
            (b, n, self.minus(b, n), self.plus(b, n))
            for b in self.complex.basis
            for n in range(b.degree + 1)
        ]


def _compute_atoms(K: AugmentedComplex) -> AtomTable:
    require_based(K)
    entries: dict[tuple[BasisElement, int, Sign], ChainVector] = {}
    for element in K.basis:
        top = ChainVector.of(element)
        for sign in SIGNS:
            entries[(element, element.degree, sign)] = top
        for n in range(element.degree - 1, -1, -1):
            for sign in SIGNS:
                neg, pos = split_parts(K.boundary(entries[(element, n + 1, sign)]))
                value = neg if sign is Sign.MINUS else pos
                if not value.is_nonnegative():
                    negative_atom = f"Atom <{element.id}>{sign.value}{n} has a negative coefficient."
                    raise ADCError(negative_atom)
                entries[(element, n, sign)] = value
        logger.debug("Computed atom <%s> down from degree %d", element.id, element.degree)
    return AtomTable(K, entries)


def atoms(K: AugmentedComplex) -> AtomTable:
    return K.atom_table


def is_unital(K: AugmentedComplex) -> bool:
    table = atoms(K)
    return all(
        K.augment(table.minus(b, 0)) == 1 and K.augment(table.plus(b, 0)) == 1
        for b in K.basis
    )


@dataclass(frozen=True)
class OrderWitness:

    """Outcome of a strong loop-freeness decision: an order or a cycle."""

    holds: bool
    order: tuple[BasisElement, ...] | None = None
    cycle: tuple[BasisElement, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class LoopFreeWitness:
    holds: bool
    orders: Mapping[int, tuple[BasisElement, ...]] = field(default_factory=dict)
    cycle: tuple[BasisElement, ...] | None = None
    level: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def _digraph(nodes: Iterable[BasisElement], edges: Iterable[tuple[BasisElement, BasisElement]]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(sorted(nodes))
    graph.add_edges_from(sorted(set(edges)))
    return graph


def _order_or_cycle(graph: nx.DiGraph) -> tuple[tuple[BasisElement, ...] | None, tuple[BasisElement, ...] | None]:
    if nx.is_directed_acyclic_graph(graph):
        order = tuple(nx.lexicographical_topological_sort(graph, key=lambda b: b.sort_key))
        return order, None
    cycle_edges = nx.find_cycle(graph)
    cycle = tuple(u for u, _ in cycle_edges) + (cycle_edges[0][0],)
    return None, cycle


def forced_relation(K: AugmentedComplex) -> list[tuple[BasisElement, BasisElement]]:
    """
    Pairs (a, b) with a <= ∂⁻b or ∂⁺a >= b.

    Only adjacent degrees can be compared, so the pairs come from the support
    of the negative and positive parts of each boundary.
    """
    require_based(K)
    edges = []
    for element in K.basis:
        if element.degree == 0:
            continue
        neg, pos = split_parts(K.boundary_of(element))
        edges.extend((a, element) for a in neg.support())
        edges.extend((element, c) for c in pos.support())
    return sorted(set(edges))


def respects_order(K: AugmentedComplex, order: Iterable[BasisElement]) -> bool:
    """True if ``order`` lists every basis element once and puts every forced pair first-to-second."""
    position = {b: i for i, b in enumerate(order)}
    if set(position) != set(K.basis) or len(position) != len(K.basis):
        return False
    return all(position[a] < position[b] for a, b in forced_relation(K))


def is_strongly_loop_free(K: AugmentedComplex) -> OrderWitness:
    return K.strong_witness


def _decide_strongly_loop_free(K: AugmentedComplex) -> OrderWitness:
    graph = _digraph(K.basis, forced_relation(K))
    order, cycle = _order_or_cycle(graph)
    if cycle is not None:
        logger.debug("Complex %s is not strongly loop-free: %s", K.name, [b.id for b in cycle])
        return OrderWitness(holds=False, cycle=cycle)
    return OrderWitness(holds=True, order=order)


def level_relation(K: AugmentedComplex, n: int) -> list[tuple[BasisElement, BasisElement]]:
    """Pairs (a, b) with |a|, |b| > n and <a>⁺_n ∧ <b>⁻_n > 0."""
    table = atoms(K)
    sources: dict[BasisElement, list[BasisElement]] = defaultdict(list)
    targets: dict[BasisElement, list[BasisElement]] = defaultdict(list)
    candidates = [b for b in K.basis if b.degree > n]
    for element in candidates:
        for c in table.plus(element, n).support():
            sources[c].append(element)
        for c in table.minus(element, n).support():
            targets[c].append(element)
    edges = set()
    for c, heads in sources.items():
        for a in heads:
            for b in targets.get(c, ()):
                if a != b and meet(table.plus(a, n), table.minus(b, n)):
                    edges.add((a, b))
    return sorted(edges)


def is_loop_free(K: AugmentedComplex) -> LoopFreeWitness:
    return K.loop_free_witness


def _decide_loop_free(K: AugmentedComplex) -> LoopFreeWitness:
    require_based(K)
    orders: dict[int, tuple[BasisElement, ...]] = {}
    for n in range(K.max_degree):
        nodes = [b for b in K.basis if b.degree > n]
        graph = _digraph(nodes, level_relation(K, n))
        order, cycle = _order_or_cycle(graph)
        if cycle is not None:
            logger.debug("Complex %s is not loop-free at level %d: %s", K.name, n, [b.id for b in cycle])
            return LoopFreeWitness(holds=False, cycle=cycle, level=n)
        orders[n] = order
    return LoopFreeWitness(holds=True, orders=orders)
