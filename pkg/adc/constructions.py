"""
Generators for the standard families of complexes.

Simplexes carry the alternating face boundary, dimension-sequence complexes
(globes and their composable variants) carry ∂b = δ⁺b - δ⁻b, and the tensor
product follows the signed Leibniz rule. Each family comes with a total order
witnessing strong loop-freeness.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations

from .chain_core import BasisElement, ChainVector
from .complexes import AugmentedComplex, is_strongly_loop_free, require_based, respects_order
from .errors import ADCError, InvalidDimensionSequenceError

logger = logging.getLogger(__name__)

TENSOR_SEPARATOR = "⊗"


def _simplex_id(vertices: Sequence[int], p: int) -> str:
    if p < 10:  # noqa: PLR2004
        return "".join(str(v) for v in vertices)
    return ",".join(str(v) for v in vertices)


def simplex(p: int) -> AugmentedComplex:
    """
    The chain complex Δ[p] of the standard p-simplex.

    Basis elements are strictly increasing vertex tuples, named by their
    digits (comma-joined once p reaches 10).
    """
    if p < 0:
        negative = f"Simplex dimension must be nonnegative, got {p}."
        raise ValueError(negative)
    faces: dict[tuple[int, ...], BasisElement] = {}
    for n in range(p + 1):
        for vertices in combinations(range(p + 1), n + 1):
            faces[vertices] = BasisElement(_simplex_id(vertices, p), n)
    boundary = {}
    for vertices, element in faces.items():
        if element.degree == 0:
            continue
        terms = [(faces[vertices[:i] + vertices[i + 1:]], (-1) ** i) for i in range(len(vertices))]
        boundary[element] = ChainVector(element.degree - 1, terms)
    augmentation = {element: 1 for element in faces.values() if element.degree == 0}
    logger.debug("Built Δ[%d] with %d basis elements", p, len(faces))
    return AugmentedComplex(faces.values(), boundary, augmentation, name=f"Δ[{p}]")


def _simplex_vertices(element: BasisElement, p: int) -> tuple[int, ...]:
    if p < 10:  # noqa: PLR2004
        return tuple(int(ch) for ch in element.id)
    return tuple(int(part) for part in element.id.split(","))


def _compare_simplices(v: tuple[int, ...], w: tuple[int, ...]) -> int:
    if v == w:
        return 0
    if v[0] != w[0]:
        return -1 if v[0] < w[0] else 1
    if len(v) == 1:
        return -1
    if len(w) == 1:
        return 1
    return -_compare_simplices(v[1:], w[1:])


def simplex_order_witness(p: int) -> tuple[BasisElement, ...]:
    """
    The recursive total order on the faces of Δ[p].

    A face with a smaller first vertex comes first; a vertex precedes every
    positive-dimensional face sharing its first vertex; otherwise two faces
    with the same first vertex compare as their tails in reverse.
    """
    K = simplex(p)
    key = cmp_to_key(lambda a, b: _compare_simplices(_simplex_vertices(a, p), _simplex_vertices(b, p)))
    order = tuple(sorted(K.basis, key=key))
    if not respects_order(K, order):
        broken = f"Recursive simplex order does not witness strong loop-freeness of Δ[{p}]."
        raise ADCError(broken)
    return order


@dataclass(frozen=True)
class DimensionSequence:
    dims: tuple[int, ...]

    def __post_init__(self):
        dims = self.dims
        if not dims:
            empty = "A dimension sequence needs at least one entry."
            raise InvalidDimensionSequenceError(empty)
        if dims[0] != 0 or dims[-1] != 0:
            endpoints = f"Dimension sequence must start and end at 0, got {list(dims)}."
            raise InvalidDimensionSequenceError(endpoints)
        for index, (left, right) in enumerate(zip(dims, dims[1:], strict=False)):
            if abs(left - right) != 1:
                jump = f"Adjacent dimensions must differ by 1; positions {index} and {index + 1} hold {left} and {right}."
                raise InvalidDimensionSequenceError(jump)

    def __len__(self) -> int:
        return len(self.dims)


def from_dimension_sequence(seq: DimensionSequence | Sequence[int], name: str | None = None) -> AugmentedComplex:
    """
    The complex on a totally ordered basis with the given dimensions.

    Each positive-dimensional element b gets ∂b = δ⁺b - δ⁻b, where δ⁻b is the
    last element of dimension |b|-1 before b and δ⁺b the first one after it.
    Ids are zero-padded positions, so the id order is the positional order.
    """
    if not isinstance(seq, DimensionSequence):
        seq = DimensionSequence(tuple(seq))
    width = len(str(len(seq) - 1))
    elements = [BasisElement(str(i).zfill(width), degree) for i, degree in enumerate(seq.dims)]
    boundary = {}
    for i, element in enumerate(elements):
        if element.degree == 0:
            continue
        below = element.degree - 1
        before = next(e for e in reversed(elements[:i]) if e.degree == below)
        after = next(e for e in elements[i + 1:] if e.degree == below)
        boundary[element] = ChainVector(below, [(after, 1), (before, -1)])
    augmentation = {e: 1 for e in elements if e.degree == 0}
    label = name or "G(" + ",".join(str(degree) for degree in seq.dims) + ")"
    return AugmentedComplex(elements, boundary, augmentation, name=label)


def dimension_profile(p: int, waypoints: Sequence[int] = ()) -> DimensionSequence:
    """Up from 0 to p; for each waypoint down to min(p, w) and back up to p; finally down to 0."""
    if p < 0 or any(w < 0 for w in waypoints):
        negative = f"Globe parameters must be nonnegative, got p={p} and {list(waypoints)}."
        raise InvalidDimensionSequenceError(negative)
    dims = list(range(p + 1))
    for waypoint in waypoints:
        low = min(p, waypoint)
        dims.extend(range(p - 1, low - 1, -1))
        dims.extend(range(low + 1, p + 1))
    dims.extend(range(p - 1, -1, -1))
    return DimensionSequence(tuple(dims))


def globe(p: int) -> AugmentedComplex:
    return from_dimension_sequence(dimension_profile(p), name=f"G[{p}]")


def composable_pair(p: int, n: int) -> AugmentedComplex:
    return from_dimension_sequence(dimension_profile(p, (n,)), name=f"G[{p};{n}]")


def composable_triple(p: int, n: int) -> AugmentedComplex:
    return from_dimension_sequence(dimension_profile(p, (n, n)), name=f"G[{p};{n},{n}]")


def interchange_quad(p: int, n: int, m: int) -> AugmentedComplex:
    """The configuration (x #_n y) #_m (x' #_n y') for m < n."""
    if m >= n:
        not_nested = f"Interchange needs m < n, got n={n} and m={m}."
        raise InvalidDimensionSequenceError(not_nested)
    return from_dimension_sequence(dimension_profile(p, (n, m, n)), name=f"G[{p};{n},{m},{n}]")


def tensor_element_id(a: BasisElement, b: BasisElement) -> str:
    return f"{a.id}{TENSOR_SEPARATOR}{b.id}"


def _pair(a: BasisElement, b: BasisElement) -> BasisElement:
    return BasisElement(tensor_element_id(a, b), a.degree + b.degree)


def tensor(K: AugmentedComplex, L: AugmentedComplex, name: str | None = None) -> AugmentedComplex:
    """
    K ⊗ L on the product basis.

    ∂(a⊗b) = ∂a⊗b + (-1)^|a| a⊗∂b and ε(a⊗b) = ε(a)ε(b) in degree 0.
    """
    require_based(K)
    require_based(L)
    basis = [_pair(a, b) for a in K.basis for b in L.basis]
    boundary = {}
    for a in K.basis:
        for b in L.basis:
            if a.degree + b.degree == 0:
                continue
            degree = a.degree + b.degree - 1
            terms = []
            if a.degree > 0:
                terms.extend((_pair(c, b), coeff) for c, coeff in K.boundary_of(a).items())
            if b.degree > 0:
                sign = (-1) ** a.degree
                terms.extend((_pair(a, c), sign * coeff) for c, coeff in L.boundary_of(b).items())
            boundary[_pair(a, b)] = ChainVector(degree, terms)
    augmentation = {
        _pair(a, b): K.augmentation_of(a) * L.augmentation_of(b)
        for a in K.basis_in_degree(0)
        for b in L.basis_in_degree(0)
    }
    label = name or f"{K.name}{TENSOR_SEPARATOR}{L.name}"
    logger.debug("Built %s with %d basis elements", label, len(basis))
    return AugmentedComplex(basis, boundary, augmentation, name=label)


def cube(p: int) -> AugmentedComplex:
    """Q[p], the p-fold tensor power of G[1]; Q[0] is the unit G[0]."""
    if p < 0:
        negative = f"Cube dimension must be nonnegative, got {p}."
        raise ValueError(negative)
    if p == 0:
        return globe(0)
    interval = globe(1)
    result = interval
    for _ in range(p - 1):
        result = tensor(result, interval)
    result.name = f"Q[{p}]"
    return result


def tensor_order_witness(
    K: AugmentedComplex,
    L: AugmentedComplex,
    order_k: Sequence[BasisElement] | None = None,
    order_l: Sequence[BasisElement] | None = None,
) -> tuple[BasisElement, ...]:
    """
    The product order on K ⊗ L built from strong loop-freeness witnesses.

    a⊗b precedes a'⊗b' when a precedes a', or a = a' and b precedes b'
    for |a| even, or a = a' and b' precedes b for |a| odd.

    Raises
    ------
        ADCError: If an input order is not a witness for its factor, or the
            assembled order fails the re-check on the product.

    """
    for factor, order in ((K, order_k), (L, order_l)):
        if order is not None and not respects_order(factor, order):
            bad_witness = f"The given order is not a strong loop-freeness witness for {factor.name}."
            raise ADCError(bad_witness)
    if order_k is None:
        order_k = _require_witness(K)
    if order_l is None:
        order_l = _require_witness(L)
    position_k = {a: i for i, a in enumerate(order_k)}
    position_l = {b: i for i, b in enumerate(order_l)}

    def key(pair: tuple[BasisElement, BasisElement]) -> tuple[int, int]:
        a, b = pair
        inner = position_l[b] if a.degree % 2 == 0 else -position_l[b]
        return (position_k[a], inner)

    pairs = sorted(((a, b) for a in order_k for b in order_l), key=key)
    order = tuple(_pair(a, b) for a, b in pairs)
    product = tensor(K, L)
    if not respects_order(product, order):
        broken = f"Product order does not witness strong loop-freeness of {product.name}."
        raise ADCError(broken)
    return order


def _require_witness(K: AugmentedComplex) -> tuple[BasisElement, ...]:
    witness = is_strongly_loop_free(K)
    if not witness:
        not_strong = f"{K.name} is not strongly loop-free: {' -> '.join(b.id for b in witness.cycle)}."
        raise ADCError(not_strong)
    return witness.order
