"""
Exact sparse integer vectors over a graded basis.

A ``ChainVector`` is an element of the free abelian group K_n spanned by the
basis elements of one degree. Vectors are immutable, kept in canonical form
(no stored zeros, entries sorted by basis id) and hash structurally, so they
can key memo tables and be compared directly in tests.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator, Mapping
from dataclasses import dataclass
from types import MappingProxyType

from .errors import DegreeMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisElement:
    id: str
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            negative_degree = f"Basis element '{self.id}' has negative degree {self.degree}."
            raise ValueError(negative_degree)

    @property
    def sort_key(self) -> tuple[int, str]:
        return (self.degree, self.id)

    def __lt__(self, other: BasisElement) -> bool:
        if not isinstance(other, BasisElement):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        return self.id


class ChainVector:

    """
    A finite integer linear combination of basis elements of a single degree.

    Args:
    ----
        degree (int): The degree n of the ambient group K_n.
        coeffs (Mapping | Iterable): Basis element to coefficient, either as a
            mapping or as (element, coefficient) pairs; repeated pairs add up.

    Raises:
    ------
        DegreeMismatchError: If a key has a degree other than ``degree``.

    """

    __slots__ = ("_degree", "_hash", "_items")

    def __init__(
        self,
        degree: int,
        coeffs: Mapping[BasisElement, int] | Iterable[tuple[BasisElement, int]] = (),
    ):
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        totals: dict[BasisElement, int] = {}
        for element, coefficient in pairs:
            if element.degree != degree:
                raise DegreeMismatchError(degree, element.degree, "place a basis element in a vector")
            totals[element] = totals.get(element, 0) + int(coefficient)
        self._degree = degree
        self._items = tuple(sorted(((b, c) for b, c in totals.items() if c != 0), key=lambda item: item[0].id))
        self._hash = hash((degree, self._items))

    @classmethod
    def zero(cls, degree: int) -> ChainVector:
        return cls(degree)

    @classmethod
    def of(cls, element: BasisElement, coefficient: int = 1) -> ChainVector:
        return cls(element.degree, ((element, coefficient),))

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coeffs(self) -> Mapping[BasisElement, int]:
        return MappingProxyType(dict(self._items))

    def items(self) -> tuple[tuple[BasisElement, int], ...]:
        return self._items

    def support(self) -> tuple[BasisElement, ...]:
        return tuple(b for b, _ in self._items)

    def coefficient(self, element: BasisElement) -> int:
        for b, c in self._items:
            if b == element:
                return c
        return 0

    def __getitem__(self, element: BasisElement) -> int:
        return self.coefficient(element)

    def __iter__(self) -> Iterator[BasisElement]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self._items)

    def total(self) -> int:
        return sum(c for _, c in self._items)

    def max_coefficient(self) -> int:
        return max((c for _, c in self._items), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self._degree == other._degree and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: ChainVector) -> ChainVector:
        return add(self, other)

    def __sub__(self, other: ChainVector) -> ChainVector:
        return add(self, negate(other))

    def __neg__(self) -> ChainVector:
        return negate(self)

    def __mul__(self, factor: int) -> ChainVector:
        return scale(factor, self)

    __rmul__ = __mul__

    def __le__(self, other: ChainVector) -> bool:
        return leq(self, other)

    def __ge__(self, other: ChainVector) -> bool:
        return leq(other, self)

    def __repr__(self) -> str:
        return f"ChainVector({self._degree}, {format_vector(self)})"

    def __str__(self) -> str:
        return format_vector(self)


def format_vector(x: ChainVector) -> str:
    """Renders ``2(01)-(02)+(12)``; the zero vector renders as ``0``."""
    if not x:
        return "0"
    parts = []
    for index, (element, coefficient) in enumerate(x.items()):
        sign = "-" if coefficient < 0 else ("+" if index else "")
        magnitude = abs(coefficient)
        parts.append(f"{sign}{magnitude if magnitude != 1 else ''}({element.id})")
    return "".join(parts)


def _check_degrees(x: ChainVector, y: ChainVector, operation: str) -> None:
    if x.degree != y.degree:
        raise DegreeMismatchError(x.degree, y.degree, operation)


def _merge(x: ChainVector, y: ChainVector, combine: Callable[[int, int], int]) -> ChainVector:
    left, right = x.coeffs, y.coeffs
    keys = set(left) | set(right)
    return ChainVector(x.degree, {b: combine(left.get(b, 0), right.get(b, 0)) for b in keys})


def add(x: ChainVector, y: ChainVector) -> ChainVector:
    _check_degrees(x, y, "add")
    return ChainVector(x.degree, [*x.items(), *y.items()])


def negate(x: ChainVector) -> ChainVector:
    return ChainVector(x.degree, ((b, -c) for b, c in x.items()))


def scale(m: int, x: ChainVector) -> ChainVector:
    return ChainVector(x.degree, ((b, m * c) for b, c in x.items()))


def leq(x: ChainVector, y: ChainVector) -> bool:
    """x <= y in the coordinatewise order, i.e. y - x lies in the basis cone."""
    _check_degrees(x, y, "compare")
    difference = y - x
    return all(c >= 0 for _, c in difference.items())


def meet(x: ChainVector, y: ChainVector) -> ChainVector:
    _check_degrees(x, y, "meet")
    return _merge(x, y, min)


def join(x: ChainVector, y: ChainVector) -> ChainVector:
    _check_degrees(x, y, "join")
    return _merge(x, y, max)


def split_parts(x: ChainVector) -> tuple[ChainVector, ChainVector]:
    """
    Split x into its negative and positive parts.

    Returns
    -------
        tuple: ``(neg, pos)`` with ``x == pos - neg``, both nonnegative and
        ``meet(neg, pos) == 0``.

    """
    neg = ChainVector(x.degree, ((b, -c) for b, c in x.items() if c < 0))
    pos = ChainVector(x.degree, ((b, c) for b, c in x.items() if c > 0))
    return neg, pos


def total_sum(vectors: Iterable[ChainVector], degree: int) -> ChainVector:
    pairs: list[tuple[BasisElement, int]] = []
    for vector in vectors:
        _check_degrees(vector, ChainVector.zero(degree), "sum")
        pairs.extend(vector.items())
    return ChainVector(degree, pairs)


def linear_extension(
    x: ChainVector,
    image: Callable[[BasisElement], ChainVector],
    target_degree: int,
) -> ChainVector:
    """Apply the linear map determined by its values on basis elements."""
    pairs: list[tuple[BasisElement, int]] = []
    for element, coefficient in x.items():
        value = image(element)
        if value.degree != target_degree:
            raise DegreeMismatchError(target_degree, value.degree, "extend a linear map to")
        pairs.extend((b, coefficient * c) for b, c in value.items())
    return ChainVector(target_degree, pairs)
