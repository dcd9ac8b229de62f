# src/ig_core/bands/labels.py

"""Printable names of band elements and the word syntax built from them.

``K(i,j)`` names a cell of the minimal ideal; ``L(Z)``, ``L(G:a)``,
``L(Gbar:a)`` and ``L(R:a,b,c)`` name the four kinds of upper elements.
Elements of table-presented bands keep their plain names.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from ig_core.errors import WordSyntaxError


class LabelKind(str, Enum):
    K = "K"
    Z = "Z"
    G = "G"
    GBAR = "Gbar"
    R = "R"
    ELEMENT = "element"


_LETTER = re.compile(r"\s*(K\([^)]*\)|L\([^)]*\)|[A-Za-z0-9_]+)\s*\*?")
_UPPER = re.compile(r"^L\(\s*(Z|G|Gbar|R)\s*(?::\s*([^)]*))?\)$")
_CELL = re.compile(r"^K\(\s*([^,\s]+)\s*,\s*([^,\s)]+)\s*\)$")

_ARITY = {LabelKind.Z: 0, LabelKind.G: 1, LabelKind.GBAR: 1, LabelKind.R: 3}


@dataclass(frozen=True)
class ElementLabel:
    kind: LabelKind
    args: Tuple[str, ...] = ()

    @classmethod
    def cell(cls, row: str, col: str) -> "ElementLabel":
        return cls(LabelKind.K, (row, col))

    @classmethod
    def named(cls, name: str) -> "ElementLabel":
        return cls(LabelKind.ELEMENT, (name,))

    @property
    def is_upper(self) -> bool:
        return self.kind in _ARITY

    def render(self) -> str:
        if self.kind is LabelKind.K:
            return f"K({self.args[0]},{self.args[1]})"
        if self.kind is LabelKind.ELEMENT:
            return self.args[0]
        if self.kind is LabelKind.Z:
            return "L(Z)"
        return f"L({self.kind.value}:{','.join(self.args)})"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> "ElementLabel":
        text = text.strip()
        cell = _CELL.match(text)
        if cell:
            return cls.cell(cell.group(1), cell.group(2))
        upper = _UPPER.match(text)
        if upper:
            kind = LabelKind(upper.group(1))
            args = tuple(a.strip() for a in (upper.group(2) or "").split(",") if a.strip())
            if len(args) != _ARITY[kind]:
                raise WordSyntaxError(
                    f"{text}: L({kind.value}) takes {_ARITY[kind]} argument(s), got {len(args)}"
                )
            return cls(kind, args)
        if re.fullmatch(r"[A-Za-z0-9_]+", text):
            return cls.named(text)
        raise WordSyntaxError(f"cannot read element label {text!r}")


def parse_element_word(text: str) -> List[ElementLabel]:
    """Splits ``K(0,a) * K(a',inf)``-style text into element labels.

    Letters may be separated by whitespace or ``*``.
    """
    labels: List[ElementLabel] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"unexpected input at position {pos + 1}: {text[pos:]!r}")
        labels.append(ElementLabel.parse(m.group(1)))
        pos = m.end()
    if not labels:
        raise WordSyntaxError("a word needs at least one letter")
    return labels
