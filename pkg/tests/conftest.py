# tests/conftest.py

import pytest
from ig_core.presentations import (
    CayleyFormPresentation,
    parse_group_presentation,
    to_cayley_form,
)

from tests.catalogue import Q8_TEXT, BgPipeline, run_bg_pipeline

# Fixtures


@pytest.fixture(scope="session")
def q8_cayley() -> CayleyFormPresentation:
    """Provides Q8 as the Cayley-form presentation <a,b,c | ab=c, bc=a, ca=b>."""
    cayley, _ = to_cayley_form(parse_group_presentation(Q8_TEXT))
    return cayley


@pytest.fixture(scope="session")
def q8(q8_cayley: CayleyFormPresentation) -> BgPipeline:
    """Provides the full pipeline for Q8, computed once per session."""
    return run_bg_pipeline(q8_cayley)


@pytest.fixture(scope="session")
def trivial_cayley() -> CayleyFormPresentation:
    """Provides the presentation with no generators and no relations."""
    return CayleyFormPresentation.build([], [])


@pytest.fixture
def q8_file(tmp_path):
    """Writes the Q8 presentation to a temporary file."""
    path = tmp_path / "q8.pres"
    path.write_text(Q8_TEXT, encoding="utf-8")
    return path
