"""
JSON documents for complexes and cells, and the composition-word parser.

A complex document is a single object:

    {"name": "Δ[1]",
     "basis": [{"id": "0", "degree": 0}, ...],
     "boundary": {"01": [["1", 1], ["0", -1]]},
     "augmentation": {"0": 1, "1": 1}}

A cell document is a list of {"degree", "minus", "plus"} entries with
coefficient maps keyed by basis id. Integers beyond the safe range are
written as decimal strings; both forms are accepted on input.
"""

from __future__ import annotations

import json
import logging
import re
from typing import Any

from .chain_core import BasisElement, ChainVector
from .complexes import AugmentedComplex, Sign
from .errors import DegreeMismatchError, DocumentParseError
from .omega_cells import BoundaryTerm, Cell, Leaf, Node, Word, make_cell

logger = logging.getLogger(__name__)

DEFAULT_SAFE_BITS = 53
_INTEGER_TEXT = re.compile(r"^[+-]?\d+$")


def encode_int(value: int, safe_bits: int = DEFAULT_SAFE_BITS) -> int | str:
    return str(value) if abs(value) >= 2**safe_bits else value


def decode_int(value: Any, path: str) -> int:
    if isinstance(value, bool):
        not_integer = f"Expected an integer at {path}, got a boolean"
        raise DocumentParseError(not_integer, path=path)
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INTEGER_TEXT.match(value):
        return int(value)
    not_integer = f"Expected an integer at {path}, got {value!r}"
    raise DocumentParseError(not_integer, path=path)


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentParseError(e.msg, line=e.lineno, column=e.colno) from e


def _expect(value: Any, kind: type, path: str) -> Any:
    if not isinstance(value, kind):
        wrong_type = f"Expected {kind.__name__} at {path}, got {type(value).__name__}"
        raise DocumentParseError(wrong_type, path=path)
    return value


def complex_to_dict(K: AugmentedComplex, safe_bits: int = DEFAULT_SAFE_BITS) -> dict:
    boundary = K.raw_boundary()
    return {
        "name": K.name,
        "basis": [{"id": b.id, "degree": b.degree} for b in sorted(K.basis, key=lambda b: b.id)],
        "boundary": {
            b.id: [[c.id, encode_int(k, safe_bits)] for c, k in boundary[b].items()]
            for b in sorted(boundary, key=lambda b: b.id)
        },
        "augmentation": {
            b.id: encode_int(value, safe_bits)
            for b, value in sorted(K.raw_augmentation().items(), key=lambda item: item[0].id)
        },
    }


def dump_complex(K: AugmentedComplex, safe_bits: int = DEFAULT_SAFE_BITS, indent: int | None = 2) -> str:
    return json.dumps(complex_to_dict(K, safe_bits), indent=indent, ensure_ascii=False)


def complex_from_dict(document: Any) -> AugmentedComplex:
    """
    Build a complex from a decoded document.

    Structural problems raise ``DocumentParseError`` with a JSON path;
    algebraic ones (∂∂ ≠ 0 and the like) are left for ``validate``.
    """
    _expect(document, dict, "$")
    elements: dict[str, BasisElement] = {}
    basis: list[BasisElement] = []
    for index, entry in enumerate(_expect(document.get("basis"), list, "$.basis")):
        path = f"$.basis[{index}]"
        _expect(entry, dict, path)
        basis_id = _expect(entry.get("id"), str, f"{path}.id")
        degree = decode_int(entry.get("degree"), f"{path}.degree")
        if degree < 0:
            negative = f"Negative degree at {path}.degree"
            raise DocumentParseError(negative, path=f"{path}.degree")
        element = BasisElement(basis_id, degree)
        basis.append(element)
        elements.setdefault(basis_id, element)

    def lookup(basis_id: Any, path: str) -> BasisElement:
        _expect(basis_id, str, path)
        if basis_id not in elements:
            unknown = f"Unknown basis id {basis_id!r} at {path}"
            raise DocumentParseError(unknown, path=path)
        return elements[basis_id]

    boundary: dict[BasisElement, ChainVector] = {}
    for basis_id, terms in _expect(document.get("boundary", {}), dict, "$.boundary").items():
        path = f"$.boundary.{basis_id}"
        element = lookup(basis_id, path)
        pairs = []
        for index, term in enumerate(_expect(terms, list, path)):
            term_path = f"{path}[{index}]"
            if not isinstance(term, list) or len(term) != 2:  # noqa: PLR2004
                not_pair = f"Expected an [id, coefficient] pair at {term_path}"
                raise DocumentParseError(not_pair, path=term_path)
            pairs.append((lookup(term[0], f"{term_path}[0]"), decode_int(term[1], f"{term_path}[1]")))
        degree = pairs[0][0].degree if pairs else max(element.degree - 1, 0)
        try:
            boundary[element] = ChainVector(degree, pairs)
        except DegreeMismatchError as e:
            mixed = f"Boundary terms of mixed degree at {path}"
            raise DocumentParseError(mixed, path=path) from e

    augmentation = {
        lookup(basis_id, f"$.augmentation.{basis_id}"): decode_int(value, f"$.augmentation.{basis_id}")
        for basis_id, value in _expect(document.get("augmentation", {}), dict, "$.augmentation").items()
    }
    name = document.get("name", "K")
    return AugmentedComplex(basis, boundary, augmentation, name=str(name))


def load_complex(text: str) -> AugmentedComplex:
    K = complex_from_dict(_loads(text))
    logger.debug("Loaded complex %s with %d basis elements", K.name, len(K))
    return K


def cell_to_list(x: Cell, safe_bits: int = DEFAULT_SAFE_BITS) -> list[dict]:
    return [
        {
            "degree": n,
            "minus": {b.id: encode_int(k, safe_bits) for b, k in lower.items()},
            "plus": {b.id: encode_int(k, safe_bits) for b, k in upper.items()},
        }
        for n, (lower, upper) in enumerate(zip(x.minus, x.plus, strict=True))
    ]


def dump_cell(x: Cell, safe_bits: int = DEFAULT_SAFE_BITS, indent: int | None = 2) -> str:
    return json.dumps(cell_to_list(x, safe_bits), indent=indent, ensure_ascii=False)


def cell_from_list(K: AugmentedComplex, document: Any, *, require_nu: bool = False) -> Cell:
    entries = _expect(document, list, "$")
    by_degree: dict[int, tuple[ChainVector, ChainVector]] = {}
    for index, entry in enumerate(entries):
        path = f"$[{index}]"
        _expect(entry, dict, path)
        n = decode_int(entry.get("degree"), f"{path}.degree")
        sides = []
        for side in ("minus", "plus"):
            coeffs = _expect(entry.get(side, {}), dict, f"{path}.{side}")
            pairs = []
            for basis_id, value in coeffs.items():
                element_path = f"{path}.{side}.{basis_id}"
                try:
                    element = K.element(basis_id)
                except KeyError:
                    unknown = f"Unknown basis id {basis_id!r} at {element_path}"
                    raise DocumentParseError(unknown, path=element_path) from None
                if element.degree != n:
                    wrong_degree = f"Basis element {basis_id!r} has degree {element.degree}, not {n}, at {element_path}"
                    raise DocumentParseError(wrong_degree, path=element_path)
                pairs.append((element, decode_int(value, element_path)))
            sides.append(ChainVector(n, pairs))
        by_degree[n] = (sides[0], sides[1])
    length = max(by_degree, default=-1) + 1
    minus = [by_degree.get(n, (ChainVector.zero(n), ChainVector.zero(n)))[0] for n in range(length)]
    plus = [by_degree.get(n, (ChainVector.zero(n), ChainVector.zero(n)))[1] for n in range(length)]
    return make_cell(K, minus, plus, require_nu=require_nu)


def load_cell(K: AugmentedComplex, text: str, *, require_nu: bool = False) -> Cell:
    return cell_from_list(K, _loads(text), require_nu=require_nu)


_TOKEN = re.compile(
    r"\s*(?:(?P<atom>⟨[^⟩]*⟩|<[^>]*>)|(?P<boundary>d[-+]\d+)|(?P<compose>#\d+)|(?P<open>\()|(?P<close>\)))",
)


class _WordParser:

    """Recursive descent over atoms, dᵅ_k prefixes, parentheses and #k chains."""

    def __init__(self, K: AugmentedComplex, text: str):
        self.K = K
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        position = 0
        while position < len(text):
            if text[position:].strip() == "":
                break
            match = _TOKEN.match(text, position)
            if match is None or match.lastgroup is None:
                column = position + len(text[position:]) - len(text[position:].lstrip()) + 1
                unexpected = f"Unexpected character {text[column - 1]!r} in word"
                raise DocumentParseError(unexpected, line=1, column=column)
            start = match.start(match.lastgroup)
            self.tokens.append((match.lastgroup, match.group(match.lastgroup), start + 1))
            position = match.end()
        self.index = 0

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _fail(self, message: str) -> DocumentParseError:
        token = self._peek()
        column = token[2] if token else len(self.text) + 1
        return DocumentParseError(message, line=1, column=column)

    def parse(self) -> Word:
        word = self._chain()
        if self._peek() is not None:
            raise self._fail(f"Unexpected {self._peek()[1]!r} after a complete word")
        return word

    def _chain(self) -> Word:
        parts = [self._unary()]
        level = None
        while (token := self._peek()) is not None and token[0] == "compose":
            this_level = int(token[1][1:])
            if level is not None and this_level != level:
                raise self._fail(f"Mixed levels #{level} and #{this_level} need parentheses")
            level = this_level
            self.index += 1
            parts.append(self._unary())
        if level is None:
            return parts[0]
        return Node(level, tuple(parts))

    def _unary(self) -> Word:
        token = self._peek()
        if token is None:
            raise self._fail("Word ends where an atom was expected")
        kind, value, _ = token
        if kind == "boundary":
            self.index += 1
            return BoundaryTerm(Sign.parse(value[1]), int(value[2:]), self._unary())
        if kind == "atom":
            basis_id = value[1:-1].strip()
            try:
                leaf = Leaf(self.K.element(basis_id))
            except KeyError:
                raise self._fail(f"Unknown basis id {basis_id!r}") from None
            self.index += 1
            return leaf
        if kind == "open":
            self.index += 1
            inner = self._chain()
            closing = self._peek()
            if closing is None or closing[0] != "close":
                raise self._fail("Missing closing parenthesis")
            self.index += 1
            return inner
        raise self._fail(f"Unexpected {value!r}")


def parse_word(K: AugmentedComplex, text: str) -> Word:
    """Parse '<01> #0 <12>', 'd-1 ⟨012⟩' or parenthesized mixtures into a word over K."""
    word = _WordParser(K, text).parse()
    logger.debug("Parsed word %s", word.render())
    return word
