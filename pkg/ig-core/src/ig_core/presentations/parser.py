# src/ig_core/presentations/parser.py

"""Parser for the line-oriented presentation grammar.

    gens a b c          # declare generators (may repeat)
    rel a*b = c         # relation
    rel a^3 = 1         # `1` is the empty word

Words are terms joined by ``*``; a term is a name with an optional integer
exponent ``^n``, or the literal ``1``.
"""

import re
from typing import Dict, List, Optional, Tuple

from ig_core.errors import PresentationSyntaxError

from .presentation import RESERVED_NAMES, GenSymbol, GroupPresentation, Relation
from .words import Letter, Word

_DECLARATION = re.compile(r"(\S+)(\s*)(.*)")


class _LineScanner:
    def __init__(self, text: str, line_no: int, offset: int):
        self.text = text
        self.line_no = line_no
        self.offset = offset
        self.pos = 0

    def column(self) -> int:
        return self.offset + self.pos + 1

    def error(self, message: str, column: Optional[int] = None) -> PresentationSyntaxError:
        return PresentationSyntaxError(self.line_no, column or self.column(), message)

    def at_end(self) -> bool:
        return not self.text[self.pos :].strip()

    def peek_op(self) -> Optional[str]:
        m = re.compile(r"\s*([*^=])").match(self.text, self.pos)
        return m.group(1) if m else None

    def expect_op(self, op: str) -> None:
        m = re.compile(r"\s*" + re.escape(op)).match(self.text, self.pos)
        if not m:
            raise self.error(f"expected '{op}'")
        self.pos = m.end()

    def name(self) -> Tuple[str, int]:
        m = re.compile(r"\s*([A-Za-z0-9_]+)").match(self.text, self.pos)
        if not m:
            raise self.error("expected a generator name or 1")
        column = self.offset + m.start(1) + 1
        self.pos = m.end()
        return m.group(1), column

    def integer(self) -> int:
        m = re.compile(r"\s*(-?\d+)").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer exponent")
        self.pos = m.end()
        return int(m.group(1))


def _parse_word(scanner: _LineScanner, declared: Dict[str, GenSymbol]) -> Word:
    letters: List[Letter] = []
    while True:
        token, column = scanner.name()
        exponent = 1
        if scanner.peek_op() == "^":
            scanner.expect_op("^")
            exponent = scanner.integer()
        if token == "1":
            pass
        elif token in declared:
            letters.extend(Word.power(token, exponent).letters)
        else:
            raise scanner.error(f"undeclared generator {token}", column)
        if scanner.peek_op() != "*":
            return Word(tuple(letters))
        scanner.expect_op("*")


def parse_group_presentation(text: str) -> GroupPresentation:
    """Parses presentation text into a :class:`GroupPresentation`.

    Raises:
        PresentationSyntaxError: on malformed lines, undeclared or duplicate
            generators, and reserved names; the error carries line and column.
    """
    declared: Dict[str, GenSymbol] = {}
    relations: List[Relation] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.lstrip()
        if not stripped.strip():
            continue
        indent = len(line) - len(stripped)
        m = _DECLARATION.match(stripped)
        assert m is not None
        keyword, rest = m.group(1), m.group(3)
        rest_offset = indent + m.start(3)

        if keyword == "gens":
            scanner = _LineScanner(rest, line_no, rest_offset)
            while not scanner.at_end():
                name, column = scanner.name()
                if name in RESERVED_NAMES or name.isdigit():
                    raise PresentationSyntaxError(
                        line_no, column, f"reserved name {name} cannot be a generator"
                    )
                if name in declared:
                    raise PresentationSyntaxError(line_no, column, f"duplicate generator {name}")
                declared[name] = GenSymbol(name)
        elif keyword == "rel":
            scanner = _LineScanner(rest, line_no, rest_offset)
            lhs = _parse_word(scanner, declared)
            scanner.expect_op("=")
            rhs = _parse_word(scanner, declared)
            if not scanner.at_end():
                raise scanner.error("unexpected trailing input")
            relations.append(Relation(lhs, rhs, source=f"line {line_no}"))
        else:
            raise PresentationSyntaxError(
                line_no, indent + 1, f"unknown declaration {keyword!r}, expected 'gens' or 'rel'"
            )

    return GroupPresentation(tuple(declared.values()), tuple(relations))
