# src/ig_core/presentations/presentation.py

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from ig_core.errors import PresentationValidationError

from .words import Word, free_reduce

NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")

# Index-set symbols live in their own namespace and may not be generators.
RESERVED_NAMES = frozenset({"0", "1", "inf"})


class OriginKind(str, Enum):
    USER = "user"
    INVERSE = "inverse"
    IDENTITY = "identity"
    CHAIN = "chain"
    CELL = "cell"


@dataclass(frozen=True)
class GenOrigin:
    """Where a generator came from.

    ``of`` names the generator an inverse stands for; ``chain`` is the
    position of a fresh chain generator inside its relation.
    """

    kind: OriginKind = OriginKind.USER
    of: Optional[str] = None
    chain: Optional[int] = None

    def describe(self) -> str:
        if self.kind is OriginKind.INVERSE:
            return f"inverse-of({self.of})"
        if self.kind is OriginKind.CHAIN:
            return f"chain({self.chain})"
        return self.kind.value


@dataclass(frozen=True)
class GenSymbol:
    name: str
    origin: GenOrigin = field(default_factory=GenOrigin)

    def __post_init__(self) -> None:
        if not NAME_PATTERN.match(self.name):
            raise ValueError(f"Invalid generator name {self.name!r}.")


@dataclass(frozen=True)
class Relation:
    """A relation ``lhs = rhs``; a relator ``w = 1`` has an empty right side.

    ``source`` is a free-form provenance tag kept for traces and reports.
    """

    lhs: Word
    rhs: Word = field(default_factory=Word.empty)
    source: str = field(default="", compare=False)

    def relator(self) -> Word:
        return free_reduce(self.lhs * self.rhs.inverse())

    def is_trivial(self) -> bool:
        return self.relator().is_empty()

    def render(self) -> str:
        return f"{self.lhs.render()} = {self.rhs.render()}"


@dataclass(frozen=True)
class GroupPresentation:
    """A finite group presentation ⟨generators | relations⟩."""

    generators: Tuple[GenSymbol, ...]
    relations: Tuple[Relation, ...] = ()

    @classmethod
    def build(
        cls, names: Sequence[str], relations: Sequence[Relation] = ()
    ) -> "GroupPresentation":
        """Convenience constructor for user-origin generators."""
        return cls(tuple(GenSymbol(name) for name in names), tuple(relations))

    def generator_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def relators(self) -> List[Word]:
        return [r.relator() for r in self.relations]

    def symbol(self, name: str) -> GenSymbol:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def validate(self) -> Tuple[bool, List[str]]:
        """Returns ``(is_valid, errors)`` for the presentation invariants."""
        errors: List[str] = []
        seen: Dict[str, int] = {}
        for g in self.generators:
            seen[g.name] = seen.get(g.name, 0) + 1
        errors.extend(f"duplicate generator {name}" for name, n in seen.items() if n > 1)
        for position, relation in enumerate(self.relations):
            for word in (relation.lhs, relation.rhs):
                for name in sorted(word.names - seen.keys()):
                    errors.append(f"relation {position}: undeclared generator {name}")
        return (not errors, errors)

    def ensure_valid(self) -> None:
        ok, errors = self.validate()
        if not ok:
            raise PresentationValidationError(errors)

    def render(self) -> str:
        """Renders the presentation in the text grammar understood by the parser."""
        lines = ["gens " + " ".join(self.generator_names()) if self.generators else "gens"]
        lines.extend(f"rel {r.render()}" for r in self.relations)
        return "\n".join(lines) + "\n"
