# src/ig_engine/groups/homomorphism.py

from dataclasses import dataclass
from typing import Mapping, Optional

from ig_core.presentations import GroupPresentation, Relation, Word, substitute

from ig_engine.errors import EnumerationOverflow, MissingGeneratorImage

from .coset_table import DEFAULT_MAX_COSETS, CosetTable, todd_coxeter

PASS = "pass"
FAIL = "fail"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class HomomorphismVerdict:
    status: str
    failing_relation: Optional[Relation] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status == PASS


def verify_homomorphism(
    source: GroupPresentation,
    target: GroupPresentation,
    images: Mapping[str, Word],
    max_cosets: int = DEFAULT_MAX_COSETS,
    table: Optional[CosetTable] = None,
) -> HomomorphismVerdict:
    """Checks that ``images`` extends to a homomorphism ``source -> target``.

    Every relator of ``source`` is mapped through ``images`` and traced in
    the coset table of ``target``; it must return to the identity coset.

    Raises:
        MissingGeneratorImage: if a generator of ``source`` has no image.
    """
    for name in source.generator_names():
        if name not in images:
            raise MissingGeneratorImage(name)

    relations = [r for r in source.relations if not r.is_trivial()]
    if not relations:
        return HomomorphismVerdict(PASS, detail="source has no relators")

    if table is None:
        try:
            table = todd_coxeter(target, max_cosets)
        except EnumerationOverflow as e:
            return HomomorphismVerdict(UNKNOWN, detail=str(e))

    for relation in relations:
        image = substitute(relation.relator(), images)
        if not table.is_identity(image):
            return HomomorphismVerdict(
                FAIL,
                relation,
                f"{relation.render()} maps to {image.render()}, which is not 1 in the target",
            )
    return HomomorphismVerdict(PASS, detail=f"{len(relations)} relators map to 1")
