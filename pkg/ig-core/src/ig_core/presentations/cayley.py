# src/ig_core/presentations/cayley.py

"""Cayley-form presentations, in which every relation reads ``a*b = c``.

Any finite presentation is brought into this shape by adding an identity
generator ``u`` with ``u*u = u`` (which forces ``u = 1`` in a group), an
inverse generator ``g_inv`` for each generator used with exponent -1, and
chain generators ``d<k>_<relation>`` that split long words into products
of two letters.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ig_core.logging import log_step

from .presentation import GenOrigin, GenSymbol, GroupPresentation, OriginKind, Relation
from .words import Word, free_reduce


@dataclass(frozen=True)
class CayleyTriple:
    """The relation ``a*b = c``."""

    a: str
    b: str
    c: str

    def render(self) -> str:
        return f"{self.a}*{self.b} = {self.c}"

    def as_relation(self) -> Relation:
        return Relation(Word.of(self.a, self.b), Word.of(self.c), source="cayley")

    def names(self) -> Tuple[str, str, str]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class CayleyFormPresentation:
    generators: Tuple[GenSymbol, ...]
    relations: Tuple[CayleyTriple, ...] = ()

    @classmethod
    def build(
        cls, names: Sequence[str], triples: Sequence[Tuple[str, str, str]]
    ) -> "CayleyFormPresentation":
        return cls(
            tuple(GenSymbol(name) for name in names),
            tuple(CayleyTriple(*t) for t in triples),
        )

    def generator_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def triple_counts(self) -> Counter:
        return Counter(r.names() for r in self.relations)

    def as_group_presentation(self) -> GroupPresentation:
        return GroupPresentation(
            self.generators, tuple(r.as_relation() for r in self.relations)
        )

    def render(self) -> str:
        return self.as_group_presentation().render()


@dataclass
class CayleyValidation:
    """Outcome of :func:`validate_cayley_form`.

    ``presentation`` is the input with duplicate triples removed; it is only
    meaningful when ``ok`` is true.
    """

    ok: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    presentation: Optional[CayleyFormPresentation] = None


def validate_cayley_form(p: CayleyFormPresentation) -> CayleyValidation:
    """Checks declared components and distinct triples; reports, never raises."""
    errors: List[str] = []
    warnings: List[str] = []

    names = p.generator_names()
    declared = set(names)
    for name, count in Counter(names).items():
        if count > 1:
            errors.append(f"duplicate generator {name}")

    unique: List[CayleyTriple] = []
    seen: Set[CayleyTriple] = set()
    for triple in p.relations:
        for component in triple.names():
            if component not in declared:
                errors.append(f"triple {triple.render()}: undeclared generator {component}")
        if triple in seen:
            warnings.append(f"duplicate triple {triple.render()} removed")
            continue
        seen.add(triple)
        unique.append(triple)

    if not p.relations:
        warnings.append("no relations: the presentation defines a free group")

    return CayleyValidation(
        ok=not errors,
        errors=errors,
        warnings=warnings,
        presentation=CayleyFormPresentation(p.generators, tuple(unique)),
    )


def is_cayley_form(p: GroupPresentation) -> bool:
    return all(
        len(r.lhs) == 2 and len(r.rhs) == 1 and r.lhs.is_positive() and r.rhs.is_positive()
        for r in p.relations
    )


class _Converter:
    """Holds the fresh-name state of one :func:`to_cayley_form` call."""

    def __init__(self, p: GroupPresentation):
        self.source = p
        self.taken: Set[str] = set(p.generator_names())
        self.identity: Optional[str] = None
        self.inverses: Dict[str, str] = {}
        self.chains: List[GenSymbol] = []
        self.triples: List[CayleyTriple] = []

    def fresh(self, base: str) -> str:
        name = base
        while name in self.taken:
            name += "_"
        self.taken.add(name)
        return name

    def unit(self) -> str:
        if self.identity is None:
            self.identity = self.fresh("u")
        return self.identity

    def positive(self, word: Word) -> List[str]:
        names: List[str] = []
        for name, exponent in free_reduce(word).letters:
            if exponent == 1:
                names.append(name)
                continue
            if name not in self.inverses:
                self.inverses[name] = self.fresh(f"{name}_inv")
            names.append(self.inverses[name])
        return names

    def chain(self, index: int, position: int) -> str:
        name = self.fresh(f"d{position}_{index}")
        self.chains.append(GenSymbol(name, GenOrigin(OriginKind.CHAIN, chain=position)))
        return name

    def split(self, word: List[str], target: str, index: int, counter: List[int]) -> None:
        if len(word) == 1:
            self.triples.append(CayleyTriple(self.unit(), word[0], target))
            return
        current = word[0]
        for letter in word[1:-1]:
            link = self.chain(index, counter[0])
            counter[0] += 1
            self.triples.append(CayleyTriple(current, letter, link))
            current = link
        self.triples.append(CayleyTriple(current, word[-1], target))

    def convert_relation(self, index: int, relation: Relation) -> None:
        if relation.is_trivial():
            return
        lhs, rhs = self.positive(relation.lhs), self.positive(relation.rhs)
        counter = [2]
        if not rhs:
            self.split(lhs, self.unit(), index, counter)
        elif not lhs:
            self.split(rhs, self.unit(), index, counter)
        elif len(rhs) == 1:
            self.split(lhs, rhs[0], index, counter)
        elif len(lhs) == 1:
            self.split(rhs, lhs[0], index, counter)
        else:
            meet = self.fresh(f"d0_{index}")
            self.chains.append(GenSymbol(meet, GenOrigin(OriginKind.CHAIN, chain=0)))
            self.split(lhs, meet, index, counter)
            self.split(rhs, meet, index, counter)

    def run(self) -> CayleyFormPresentation:
        for index, relation in enumerate(self.source.relations):
            self.convert_relation(index, relation)

        for name in self.source.generator_names():
            if name in self.inverses:
                inverse = self.inverses[name]
                self.triples.append(CayleyTriple(name, inverse, self.unit()))
                self.triples.append(CayleyTriple(inverse, name, self.unit()))
        if self.identity is not None:
            self.triples.append(CayleyTriple(self.identity, self.identity, self.identity))

        generators: List[GenSymbol] = list(self.source.generators)
        if self.identity is not None:
            generators.append(GenSymbol(self.identity, GenOrigin(OriginKind.IDENTITY)))
        for name in self.source.generator_names():
            if name in self.inverses:
                generators.append(
                    GenSymbol(self.inverses[name], GenOrigin(OriginKind.INVERSE, of=name))
                )
        generators.extend(self.chains)

        unique = list(dict.fromkeys(self.triples))
        return CayleyFormPresentation(tuple(generators), tuple(unique))


def to_cayley_form(p: GroupPresentation) -> Tuple[CayleyFormPresentation, Dict[str, Word]]:
    """Converts ``p`` into an isomorphic Cayley-form presentation.

    Returns:
        The Cayley-form presentation and the map sending every original
        generator to its (unchanged) name in the new alphabet, as a word.

    Raises:
        PresentationValidationError: if ``p`` fails its own validation.
    """
    p.ensure_valid()
    result = _Converter(p).run()
    log_step(
        f"Cayley form: {len(result.generators)} generators, {len(result.relations)} triples"
    )
    gen_map = {name: Word.of(name) for name in p.generator_names()}
    return result, gen_map
