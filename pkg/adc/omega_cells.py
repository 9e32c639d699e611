"""
The ω-categories μK and νK of double sequences.

A ``Cell`` is a double sequence (x⁻₀, x⁺₀, x⁻₁, x⁺₁, ...) with
x⁺ₙ - x⁻ₙ = ∂x⁻ₙ₊₁ = ∂x⁺ₙ₊₁, stored trimmed of trailing zero pairs. Cells of
νK additionally have entries in the distinguished submonoid and both degree-0
entries of augmentation 1.

Decomposition follows the congruence argument: a ν-cell with decomposition
index r is congruent modulo (μK)_r to a list of atoms, the list is sorted by
the level-r loop-free order, and the #_r factors are read off an explicit
formula. Repeating on the factors yields a ``CompositionTree`` of atoms.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce

from .chain_core import BasisElement, ChainVector, format_vector
from .complexes import (
    AugmentedComplex,
    Sign,
    ValidationReport,
    atoms,
    is_loop_free,
    require_based,
    require_valid,
)
from .errors import (
    CellValidationError,
    CompositionError,
    DecompositionError,
    DegreeMismatchError,
    DimensionError,
    NotLoopFreeError,
)

logger = logging.getLogger(__name__)


class Cell:

    """
    An element of μK, flagged as a member of νK when it qualifies.

    Reads beyond the stored length return the zero vector of that degree.
    Cells compare equal when they belong to the same complex object and have
    the same trimmed entries.
    """

    def __init__(self, complex_: AugmentedComplex, minus: Sequence[ChainVector], plus: Sequence[ChainVector]):
        length = max(len(minus), len(plus))
        padded_minus = [*minus, *(ChainVector.zero(n) for n in range(len(minus), length))]
        padded_plus = [*plus, *(ChainVector.zero(n) for n in range(len(plus), length))]
        for n, (lower, upper) in enumerate(zip(padded_minus, padded_plus, strict=True)):
            if lower.degree != n or upper.degree != n:
                raise DegreeMismatchError(n, lower.degree if lower.degree != n else upper.degree, "store in a cell")
        while length and not padded_minus[length - 1] and not padded_plus[length - 1]:
            length -= 1
        self.complex = complex_
        self.minus = tuple(padded_minus[:length])
        self.plus = tuple(padded_plus[:length])

    @classmethod
    def zero(cls, complex_: AugmentedComplex) -> Cell:
        return cls(complex_, (), ())

    def minus_at(self, n: int) -> ChainVector:
        _require_level(n, "read a cell")
        return self.minus[n] if n < len(self.minus) else ChainVector.zero(n)

    def plus_at(self, n: int) -> ChainVector:
        _require_level(n, "read a cell")
        return self.plus[n] if n < len(self.plus) else ChainVector.zero(n)

    def at(self, sign: Sign, n: int) -> ChainVector:
        return self.minus_at(n) if sign is Sign.MINUS else self.plus_at(n)

    @property
    def dimension(self) -> int:
        return len(self.minus) - 1

    @cached_property
    def is_nu(self) -> bool:
        K = self.complex
        if not self.minus:
            return False
        entries_ok = all(K.submonoid.contains(v) for v in (*self.minus, *self.plus))
        return entries_ok and K.augment(self.minus[0]) == 1 and K.augment(self.plus[0]) == 1

    def _combine(self, other: Cell, factor: int) -> Cell:
        if other.complex is not self.complex:
            foreign = "Cells from different complexes cannot be combined."
            raise ValueError(foreign)
        length = max(len(self.minus), len(other.minus))
        minus = [self.minus_at(n) + factor * other.minus_at(n) for n in range(length)]
        plus = [self.plus_at(n) + factor * other.plus_at(n) for n in range(length)]
        return Cell(self.complex, minus, plus)

    def __add__(self, other: Cell) -> Cell:
        return self._combine(other, 1)

    def __sub__(self, other: Cell) -> Cell:
        return self._combine(other, -1)

    def __neg__(self) -> Cell:
        return Cell(self.complex, [-v for v in self.minus], [-v for v in self.plus])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cell):
            return NotImplemented
        return self.complex is other.complex and self.minus == other.minus and self.plus == other.plus

    def __hash__(self) -> int:
        return hash((id(self.complex), self.minus, self.plus))

    def __repr__(self) -> str:
        entries = ", ".join(f"{format_vector(lower)}, {format_vector(upper)}" for lower, upper in zip(self.minus, self.plus, strict=True))
        return f"Cell({entries})"


def _check_sequences(
    K: AugmentedComplex,
    minus: Sequence[ChainVector],
    plus: Sequence[ChainVector],
    *,
    require_nu: bool,
) -> ValidationReport:
    report = ValidationReport(subject="cell")
    length = max(len(minus), len(plus))
    read_minus = [minus[n] if n < len(minus) else ChainVector.zero(n) for n in range(length + 1)]
    read_plus = [plus[n] if n < len(plus) else ChainVector.zero(n) for n in range(length + 1)]
    for n in range(length):
        for sign, vector in ((Sign.MINUS, read_minus[n]), (Sign.PLUS, read_plus[n])):
            if vector.degree != n:
                report.add("degree", f"x{sign.value}{n}", f"entry has degree {vector.degree}")
                return report
            if not K.submonoid.contains_group(vector):
                report.add("membership", f"x{sign.value}{n}", f"{format_vector(vector)} is not in the chain group")
                return report
    for n in range(length):
        difference = read_plus[n] - read_minus[n]
        for sign, upper in ((Sign.MINUS, read_minus[n + 1]), (Sign.PLUS, read_plus[n + 1])):
            image = K.boundary(upper)
            if image != difference:
                report.add(
                    "x⁺ₙ - x⁻ₙ = ∂xᵅₙ₊₁",
                    f"n={n}",
                    f"x+{n} - x-{n} = {format_vector(difference)} but ∂x{sign.value}{n + 1} = {format_vector(image)}",
                )
                return report
    if not require_nu:
        return report
    if length == 0:
        report.add("εx₀ = 1", "n=0", "cell has no degree-0 entries")
        return report
    for n in range(length):
        for sign, vector in ((Sign.MINUS, read_minus[n]), (Sign.PLUS, read_plus[n])):
            if not K.submonoid.contains(vector):
                report.add("positivity", f"x{sign.value}{n}", f"{format_vector(vector)} is not in the submonoid")
                return report
    for sign, vector in ((Sign.MINUS, read_minus[0]), (Sign.PLUS, read_plus[0])):
        value = K.augment(vector)
        if value != 1:
            report.add("εx₀ = 1", f"x{sign.value}0", f"augmentation is {value}")
            return report
    return report


def validate_cell(
    K: AugmentedComplex,
    minus: Sequence[ChainVector],
    plus: Sequence[ChainVector],
    *,
    require_nu: bool = False,
) -> Cell | ValidationReport:
    """
    Check a double sequence and build the cell.

    Returns
    -------
        Cell | ValidationReport: The cell when the μ identities hold (and the
        ν conditions, if ``require_nu``); otherwise a report naming the first
        failed identity.

    """
    report = _check_sequences(K, minus, plus, require_nu=require_nu)
    if not report.ok:
        return report
    return Cell(K, minus, plus)


def make_cell(
    K: AugmentedComplex,
    minus: Sequence[ChainVector],
    plus: Sequence[ChainVector],
    *,
    require_nu: bool = False,
) -> Cell:
    checked = validate_cell(K, minus, plus, require_nu=require_nu)
    if isinstance(checked, ValidationReport):
        raise CellValidationError(checked)
    return checked


def _resolve(K: AugmentedComplex, element: BasisElement | str) -> BasisElement:
    if isinstance(element, BasisElement):
        return K.element(element.id)
    return K.element(element)


def atom_cell(K: AugmentedComplex, element: BasisElement | str) -> Cell:
    b = _resolve(K, element)
    table = atoms(K)
    return Cell(
        K,
        [table.minus(b, n) for n in range(b.degree + 1)],
        [table.plus(b, n) for n in range(b.degree + 1)],
    )


def _require_level(n: int, operation: str) -> None:
    if n < 0:
        negative = f"Cannot {operation} at negative level {n}."
        raise ValueError(negative)


def dimension(x: Cell) -> int:
    return x.dimension


def d(sign: Sign, n: int, x: Cell) -> Cell:
    """Source (sign -) or target (sign +) of x in degree n."""
    _require_level(n, "take a boundary")
    if n >= x.dimension:
        return x
    top = x.at(sign, n)
    return Cell(x.complex, [*x.minus[:n], top], [*x.plus[:n], top])


def compose(n: int, x: Cell, y: Cell) -> Cell:
    """x #_n y = x - z + y, where z = d⁺_n x = d⁻_n y."""
    _require_level(n, "compose")
    z = d(Sign.PLUS, n, x)
    source = d(Sign.MINUS, n, y)
    if z != source:
        length = max(z.dimension, source.dimension) + 1
        degree = next(
            (m for m in range(length) if z.minus_at(m) != source.minus_at(m) or z.plus_at(m) != source.plus_at(m)),
            0,
        )
        raise CompositionError(n, degree)
    return x - z + y


def compose_all(n: int, cells: Iterable[Cell]) -> Cell:
    return reduce(lambda left, right: compose(n, left, right), cells)


def projection(x: Cell, n: int) -> ChainVector:
    """The homomorphism (μK)_n -> K_n of the split exact sequence."""
    if x.dimension > n:
        too_big = f"Cell of dimension {x.dimension} is not in degree-{n} part of the filtration."
        raise DimensionError(too_big)
    return x.minus_at(n)


def pi_class(x: Cell, n: int) -> ChainVector:
    """The counit image of [x]_n, i.e. x⁻_n = x⁺_n."""
    return projection(x, n)


def mu_section(K: AugmentedComplex, n: int, w: ChainVector) -> Cell:
    """Splitting K_n -> (μK)_n: (w, w) in degree 0, otherwise (0, ..., 0, ∂w, w, w)."""
    if w.degree != n:
        raise DegreeMismatchError(n, w.degree, "split")
    if n == 0:
        return Cell(K, [w], [w])
    lower = [ChainVector.zero(m) for m in range(n - 1)]
    return Cell(K, [*lower, ChainVector.zero(n - 1), w], [*lower, K.boundary(w), w])


def eta(x: Cell) -> Cell:
    top = x.dimension + 1
    return Cell(
        x.complex,
        [pi_class(d(Sign.MINUS, k, x), k) for k in range(top)],
        [pi_class(d(Sign.PLUS, k, x), k) for k in range(top)],
    )


def atom_list_mod(x: Cell, r: int) -> Counter[BasisElement]:
    """
    The atoms whose sum is congruent to x modulo (μK)_r.

    Works down from the top degree: at each degree m > r the remainder
    x⁻_m - Σ<b>⁻_m must be nonnegative, and its basis elements (with
    multiplicity) join the list. The plus side must give the same remainder.

    Raises
    ------
        DecompositionError: If a remainder goes negative or the two sides
            disagree, which means x is not in νK or K is not based.

    """
    K = x.complex
    table = atoms(K)
    counts: Counter[BasisElement] = Counter()
    for m in range(x.dimension, r, -1):
        remainder_minus = x.minus_at(m) - ChainVector(m, [(b, c * k) for a, k in counts.items() for b, c in table.minus(a, m).items()])
        remainder_plus = x.plus_at(m) - ChainVector(m, [(b, c * k) for a, k in counts.items() for b, c in table.plus(a, m).items()])
        if not remainder_minus.is_nonnegative():
            negative = f"Remainder {format_vector(remainder_minus)} in degree {m} is not nonnegative."
            raise DecompositionError(negative)
        if remainder_minus != remainder_plus:
            mismatch = f"Minus and plus remainders differ in degree {m}: {format_vector(remainder_minus)} vs {format_vector(remainder_plus)}."
            raise DecompositionError(mismatch)
        for b, c in remainder_minus.items():
            counts[b] += c
    return counts


def decomposition_index(x: Cell) -> int:
    for r in range(-1, max(x.dimension, 0)):
        try:
            listed = atom_list_mod(x, r + 1)
        except DecompositionError:
            # not congruent to any sum of atoms at this level
            continue
        if sum(listed.values()) <= 1:
            return r
    return x.dimension - 1


def decompose_step(x: Cell) -> list[tuple[Cell, BasisElement]]:
    """
    Split x as x₁ #_r ... #_r x_k with r its decomposition index.

    Returns
    -------
        list: Pairs (xᵢ, bᵢ) with xᵢ congruent to <bᵢ> modulo (μK)_r, in the
        order given by the level-r loop-free witness.

    """
    K = x.complex
    r = decomposition_index(x)
    if r < 0:
        atomic = "Cell has decomposition index -1 and is already an atom."
        raise DecompositionError(atomic)
    witness = is_loop_free(K)
    if not witness:
        logger.warning("Refusing to decompose in %s: basis is not loop-free", K.name)
        raise NotLoopFreeError(witness.level, [b.id for b in witness.cycle])
    position = {b: i for i, b in enumerate(witness.orders[r])}
    listed = sorted(atom_list_mod(x, r).elements(), key=lambda b: (position[b], b.sort_key))
    atom_cells = [atom_cell(K, b) for b in listed]

    zero = Cell.zero(K)
    prefix = [zero]
    for cell in atom_cells:
        prefix.append(prefix[-1] + cell)
    total = prefix[-1]
    z = x - total

    factors = []
    for i, (cell, b) in enumerate(zip(atom_cells, listed, strict=True)):
        after = total - prefix[i + 1]
        factor = d(Sign.PLUS, r, prefix[i]) + cell + d(Sign.MINUS, r, after) + z
        if not factor.is_nu:
            not_nu = f"Factor {i + 1} for <{b.id}> at level {r} is not in νK."
            raise DecompositionError(not_nu)
        factors.append((factor, b))
    logger.debug("Decomposed cell at level %d into %s", r, [b.id for b in listed])
    return factors


@dataclass(frozen=True)
class Leaf:
    basis: BasisElement

    def evaluate(self, K: AugmentedComplex) -> Cell:
        return atom_cell(K, self.basis)

    def leaves(self) -> list[BasisElement]:
        return [self.basis]

    def render(self) -> str:
        return f"⟨{self.basis.id}⟩"


@dataclass(frozen=True)
class Node:
    level: int
    children: tuple[Word, ...]

    def __post_init__(self):
        if len(self.children) < 2:  # noqa: PLR2004
            too_few = "A composition node needs at least two children."
            raise ValueError(too_few)

    def evaluate(self, K: AugmentedComplex) -> Cell:
        return compose_all(self.level, (child.evaluate(K) for child in self.children))

    def leaves(self) -> list[BasisElement]:
        return [leaf for child in self.children for leaf in child.leaves()]

    def render(self) -> str:
        parts = [f"({child.render()})" if isinstance(child, Node) else child.render() for child in self.children]
        return f" #{self.level} ".join(parts)


@dataclass(frozen=True)
class BoundaryTerm:

    """The word dᵅ_n w; decomposition never produces these, presentations do."""

    sign: Sign
    level: int
    body: Word

    def evaluate(self, K: AugmentedComplex) -> Cell:
        return d(self.sign, self.level, self.body.evaluate(K))

    def leaves(self) -> list[BasisElement]:
        return self.body.leaves()

    def render(self) -> str:
        inner = f"({self.body.render()})" if isinstance(self.body, Node) else self.body.render()
        return f"d{self.sign.value}{self.level} {inner}"


CompositionTree = Leaf | Node
Word = Leaf | Node | BoundaryTerm


def decompose_full(x: Cell) -> CompositionTree:
    if not x.is_nu:
        not_nu = "Only cells of νK can be decomposed into atoms."
        raise DecompositionError(not_nu)
    r = decomposition_index(x)
    if r >= 0:
        return Node(r, tuple(decompose_full(factor) for factor, _ in decompose_step(x)))
    counts = atom_list_mod(x, -1)
    if sum(counts.values()) != 1:
        not_atom = "Cell of decomposition index -1 is not a single atom; is the basis unital?"
        raise DecompositionError(not_atom)
    (element,) = counts
    if atom_cell(x.complex, element) != x:
        mismatch = f"Cell of decomposition index -1 differs from the atom <{element.id}>."
        raise DecompositionError(mismatch)
    return Leaf(element)


def bounded_preimages(
    K: AugmentedComplex,
    m: int,
    bound: int,
    *,
    boundary: ChainVector | None = None,
    augmentation: int = 1,
) -> list[ChainVector]:
    """
    Vectors v of K_m with every coefficient in [0, bound] and a prescribed image.

    In positive degrees the image is ∂v = ``boundary``; in degree 0 it is
    εv = ``augmentation``. Coefficients are assigned basis element by basis
    element, and a branch is cut as soon as some coordinate of the image is
    no longer touched by the remaining elements but still disagrees.
    """
    if m == 0:
        columns = [(b, {"ε": K.augmentation_of(b)}) for b in K.basis_in_degree(0)]
        wanted: dict[object, int] = {"ε": augmentation}
    else:
        columns = [(b, dict(K.boundary_of(b).items())) for b in K.basis_in_degree(m)]
        wanted = dict((boundary if boundary is not None else ChainVector.zero(m - 1)).items())

    last_touch: dict[object, int] = {}
    for index, (_, column) in enumerate(columns):
        for coordinate, value in column.items():
            if value:
                last_touch[coordinate] = index
    if any(value and coordinate not in last_touch for coordinate, value in wanted.items()):
        return []
    closing: dict[int, list[object]] = {}
    for coordinate, index in last_touch.items():
        closing.setdefault(index, []).append(coordinate)

    found: list[ChainVector] = []
    residual = dict(wanted)
    chosen: list[int] = []

    def backtrack(index: int) -> None:
        if index == len(columns):
            if not any(residual.values()):
                found.append(ChainVector(m, [(columns[i][0], k) for i, k in enumerate(chosen)]))
            return
        _, column = columns[index]
        for k in range(bound + 1):
            for coordinate, value in column.items():
                residual[coordinate] = residual.get(coordinate, 0) - k * value
            if all(not residual.get(c, 0) for c in closing.get(index, ())):
                chosen.append(k)
                backtrack(index + 1)
                chosen.pop()
            for coordinate, value in column.items():
                residual[coordinate] += k * value

    backtrack(0)
    return found


class _CellSearch:

    """Backtracking search for bounded nonnegative double sequences in νK."""

    def __init__(self, K: AugmentedComplex, bound: int):
        self.K = K
        self.bound = bound
        self._memo: dict[tuple[int, ChainVector | None], list[ChainVector]] = {}

    def solutions(self, m: int, target: ChainVector | None) -> list[ChainVector]:
        key = (m, target)
        if key not in self._memo:
            self._memo[key] = bounded_preimages(self.K, m, self.bound, boundary=target)
            logger.debug("Degree %d target %s has %d bounded preimages", m, target, len(self._memo[key]))
        return self._memo[key]

    def cells(self, n: int) -> Iterator[Cell]:
        def extend(minus: list[ChainVector], plus: list[ChainVector]) -> Iterator[Cell]:
            m = len(minus)
            target = None if m == 0 else plus[-1] - minus[-1]
            options = self.solutions(m, target)
            if m == n:
                for v in options:
                    yield Cell(self.K, [*minus, v], [*plus, v])
                return
            for lower in options:
                for upper in options:
                    yield from extend([*minus, lower], [*plus, upper])

        yield from extend([], [])


def enumerate_cells(K: AugmentedComplex, n: int, bound: int = 1) -> list[Cell]:
    """
    All members of (νK)_n whose entries have coefficients at most ``bound``.

    With a loop-free unital basis every entry of a ν-cell is a sum of
    distinct basis elements, so the default bound of 1 is complete.
    """
    require_based(K)
    if n < 0:
        negative = f"Cannot enumerate cells of negative dimension {n}."
        raise ValueError(negative)
    if bound < 0:
        negative_bound = f"Coefficient bound must be at least 0, got {bound}."
        raise ValueError(negative_bound)
    search = _CellSearch(K, bound)
    # entries above the top degree are zero, so (νK)_n stops growing there
    cells = list(search.cells(min(n, max(K.max_degree, 0))))
    logger.info("Enumerated %d cells of dimension <= %d in %s", len(cells), n, K.name)
    return cells


def require_nu(x: Cell) -> Cell:
    require_valid(x.complex)
    if not x.is_nu:
        report = _check_sequences(x.complex, x.minus, x.plus, require_nu=True)
        raise CellValidationError(report)
    return x
