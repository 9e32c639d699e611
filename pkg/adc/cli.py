import argparse
import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from utilities.config_utils import load_json_resource
from utilities.text_formatting_utils import format_table

from . import __version__
from .chain_core import format_vector, meet
from .complexes import AugmentedComplex, atoms, is_loop_free, is_strongly_loop_free, is_unital, validate
from .config import ConfigManager
from .constructions import (
    composable_pair,
    composable_triple,
    cube,
    globe,
    interchange_quad,
    simplex,
    tensor,
)
from .errors import ADCError, DocumentParseError
from .hom import cell_to_morphism, enumerate_morphisms, hom, hom_prime, hom_zero_cells
from .omega_cells import Cell, compose, decompose_full, enumerate_cells, require_nu
from .presentation import presentation, reduced_presentation
from .serialization import cell_to_list, dump_cell, dump_complex, load_cell, load_complex, parse_word

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2


class ComplexFamilyFactory:
    FAMILIES: dict[str, tuple[int, Callable[..., AugmentedComplex]]] = {
        "simplex": (1, simplex),
        "globe": (1, globe),
        "pair": (2, composable_pair),
        "triple": (2, composable_triple),
        "quad": (3, interchange_quad),
        "cube": (1, cube),
    }

    @classmethod
    def create(cls, family: str, params: list[int], strings: dict) -> AugmentedComplex:
        if family not in cls.FAMILIES:
            unknown_family = strings["errors"]["unknown_family"].format(family=family, choices=", ".join(cls.FAMILIES))
            raise ValueError(unknown_family)
        arity, builder = cls.FAMILIES[family]
        if len(params) != arity:
            wrong_arity = strings["errors"]["family_arity"].format(family=family, expected=arity, given=len(params))
            raise ValueError(wrong_arity)
        return builder(*params)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _ids(elements) -> str:
    return ",".join(b.id for b in elements)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _read_complex(path: str | None) -> AugmentedComplex:
    return load_complex(_read_text(path))


def _read_cell(K: AugmentedComplex, source: str) -> Cell:
    """A cell argument is a path to a cell document or a composition word."""
    if source.endswith(".json") or Path(source).is_file():
        return load_cell(K, Path(source).read_text(encoding="utf-8"))
    return parse_word(K, source).evaluate(K)


def _bound(args, config: ConfigManager, strings: dict) -> int:
    bound = config.default_bound if args.bound is None else args.bound
    if bound < 0:
        negative_bound = strings["errors"]["negative_bound"].format(bound=bound)
        raise ValueError(negative_bound)
    return bound


def cmd_gen(args, config: ConfigManager, strings: dict) -> tuple[str, int]:
    K = ComplexFamilyFactory.create(args.family, args.params, strings)
    return dump_complex(K, config.safe_integer_bits, config.indent), EXIT_OK


def cmd_check(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.input)
    lines = [f"name={K.name}", f"basis_counts={','.join(str(c) for c in K.degree_counts())}"]
    report = validate(K)
    lines.append(f"valid={_flag(report.ok)}")
    if not report.ok:
        lines.extend(f"violation={violation}" for violation in report.violations)
        return "\n".join(lines), EXIT_DOMAIN

    table = atoms(K)
    disjoint = all(not meet(minus, plus) for b, n, minus, plus in table.rows() if n < b.degree)
    lines.append(f"atoms_disjoint={_flag(disjoint)}")
    lines.append(f"unital={_flag(is_unital(K))}")

    loop_free = is_loop_free(K)
    lines.append(f"loop_free={_flag(loop_free.holds)}")
    if loop_free:
        lines.extend(f"loop_free_order_{level}={_ids(order)}" for level, order in sorted(loop_free.orders.items()))
    else:
        lines.append(f"loop_free_cycle_{loop_free.level}={_ids(loop_free.cycle)}")

    strong = is_strongly_loop_free(K)
    lines.append(f"strongly_loop_free={_flag(strong.holds)}")
    if strong:
        lines.append(f"strong_order={_ids(strong.order)}")
    else:
        lines.append(f"strong_cycle={_ids(strong.cycle)}")
    lines.append(f"strong_implies_loop_free={_flag(not strong.holds or loop_free.holds)}")
    return "\n".join(lines), EXIT_OK


def cmd_atoms(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.input)
    rows = [
        {"atom": f"⟨{b.id}⟩", "n": str(n), "minus": format_vector(minus), "plus": format_vector(plus)}
        for b, n, minus, plus in atoms(K).rows()
    ]
    return format_table(rows, ["atom", "n", "minus", "plus"], ["left", "right", "left", "left"]), EXIT_OK


def cmd_enumerate(args, config: ConfigManager, strings: dict) -> tuple[str, int]:
    K = _read_complex(args.input)
    bound = _bound(args, config, strings)
    cells = enumerate_cells(K, args.n, bound)
    logger.info("%s", strings["messages"]["enumerated"].format(count=len(cells), n=args.n, bound=bound))
    document = {
        "complex": K.name,
        "n": args.n,
        "bound": bound,
        "count": len(cells),
        "cells": [cell_to_list(x, config.safe_integer_bits) for x in cells],
    }
    return json.dumps(document, indent=config.indent, ensure_ascii=False), EXIT_OK


def cmd_compose(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.input)
    x = _read_cell(K, args.left)
    y = _read_cell(K, args.right)
    return dump_cell(compose(args.level, x, y), config.safe_integer_bits, config.indent), EXIT_OK


def cmd_decompose(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.input)
    x = require_nu(_read_cell(K, args.cell))
    return decompose_full(x).render(), EXIT_OK


def cmd_tensor(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.left)
    L = _read_complex(args.right)
    return dump_complex(tensor(K, L), config.safe_integer_bits, config.indent), EXIT_OK


def cmd_hom(args, config: ConfigManager, strings: dict) -> tuple[str, int]:
    K = _read_complex(args.left)
    L = _read_complex(args.right)
    H = hom_prime(K, L) if args.prime else hom(K, L)
    bound = _bound(args, config, strings)
    messages = strings["messages"]
    report = validate(H)
    lines = [
        messages["hom_summary"].format(name=H.name, counts=",".join(str(c) for c in H.degree_counts())),
        messages["hom_valid"].format(valid=_flag(report.ok)),
    ]
    cells = hom_zero_cells(H, bound)
    morphisms = enumerate_morphisms(K, L, bound)
    from_cells = {cell_to_morphism(H, x) for x in cells}
    lines.append(messages["hom_cells"].format(count=len(cells)))
    lines.append(messages["hom_morphisms"].format(count=len(morphisms)))
    lines.append(messages["hom_bijection"].format(match=_flag(from_cells == set(morphisms))))
    lines.extend(morphism.describe() for morphism in morphisms)
    if args.document:
        Path(args.document).write_text(dump_complex(H, config.safe_integer_bits, config.indent), encoding="utf-8")
        logger.info("%s", messages["written"].format(what=H.name, path=args.document))
    return "\n".join(lines), EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_present(args, config: ConfigManager, strings: dict) -> tuple[str, int]:  # noqa: ARG001
    K = _read_complex(args.input)
    result = reduced_presentation(K) if args.reduced else presentation(K)
    return result.render(), EXIT_OK


def build_parser(strings: dict) -> argparse.ArgumentParser:
    help_text = strings["commands"]
    parser = argparse.ArgumentParser(prog="adc", description=help_text["description"])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, *, reads_input: bool = True) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text[name])
        if reads_input:
            sub.add_argument("-i", "--input", help=help_text["param_input"])
        sub.add_argument("-o", "--output", help=help_text["param_output"])
        sub.set_defaults(handler=handler)
        return sub

    gen = add("gen", cmd_gen, reads_input=False)
    gen.add_argument("family", choices=sorted(ComplexFamilyFactory.FAMILIES))
    gen.add_argument("params", nargs="*", type=int)

    add("check", cmd_check)
    add("atoms", cmd_atoms)

    enumerate_ = add("enumerate", cmd_enumerate)
    enumerate_.add_argument("n", type=int)
    enumerate_.add_argument("--bound", type=int, help=help_text["param_bound"])

    compose_ = add("compose", cmd_compose)
    compose_.add_argument("level", type=int)
    compose_.add_argument("left", help=help_text["param_cell"])
    compose_.add_argument("right", help=help_text["param_cell"])

    decompose_ = add("decompose", cmd_decompose)
    decompose_.add_argument("cell", help=help_text["param_cell"])

    tensor_ = add("tensor", cmd_tensor, reads_input=False)
    tensor_.add_argument("left")
    tensor_.add_argument("right")

    hom_ = add("hom", cmd_hom, reads_input=False)
    hom_.add_argument("left")
    hom_.add_argument("right")
    hom_.add_argument("--prime", action="store_true")
    hom_.add_argument("--bound", type=int, help=help_text["param_bound"])
    hom_.add_argument("--document")

    present = add("present", cmd_present)
    present.add_argument("--reduced", action="store_true")
    return parser


def _write(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    else:
        sys.stdout.write(text + "\n")


def main(argv: list[str] | None = None) -> int:
    strings = load_json_resource("strings.json", __file__)
    errors = strings["errors"]
    try:
        args = build_parser(strings).parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        config = ConfigManager()
    except ValueError as e:
        sys.stderr.write(errors["config"].format(message=e) + "\n")
        return EXIT_PARSE
    logging.basicConfig(
        level=config.log_level_number(args.verbose),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        text, status = args.handler(args, config, strings)
        _write(text, args.output)
    except DocumentParseError as e:
        logger.debug("Parse failure", exc_info=True)
        sys.stderr.write(errors["parse"].format(message=e) + "\n")
        return EXIT_PARSE
    except ADCError as e:
        logger.debug("Domain failure", exc_info=True)
        sys.stderr.write(errors["domain"].format(message=e) + "\n")
        return EXIT_DOMAIN
    except OSError as e:
        sys.stderr.write(errors["io"].format(path=getattr(e, "filename", None), reason=e.strerror or e) + "\n")
        return EXIT_PARSE
    except ValueError as e:
        sys.stderr.write(errors["parse"].format(message=e) + "\n")
        return EXIT_PARSE
    return status


if __name__ == "__main__":
    sys.exit(main())
