# tests/ig_engine/test_presentations.py

import random

import pytest
from ig_core.bands import green_classes, kernel_grid
from ig_core.presentations import canonical_relator
from ig_core.squares import singular_squares
from ig_engine.errors import TietzeError

# Subject under test
from ig_engine.presentations import (
    basic_pair_mask,
    cell_generator_names,
    ig_presentation,
    is_basic_pair,
    maximal_subgroup_presentation,
)

from tests.catalogue import random_table_band

# Test Cases: maximal subgroup presentation


def test_q8_presentation_sizes(q8):
    """
    Tests that the Q8 kernel gives one generator per cell and 12 base
    relations (13 base cells, the base itself counted once).
    """
    # Arrange
    ig = q8.ig

    # Assert
    assert len(ig.generators) == 40
    assert len(ig.line_one_relations()) == 12
    assert 0 < len(ig.line_two_relations()) <= len(q8.squares)
    assert len(ig.relations) == len(ig.line_one_relations()) + len(ig.line_two_relations())
    assert ig.base_names() == ("(0,0)", "(1,1)")


def test_generator_names_follow_the_grid_tokens(q8):
    """Tests names such as f_0p_inf and the cell lookup."""
    # Arrange
    ig = q8.ig
    names = cell_generator_names(q8.grid)

    # Assert
    assert names[0][0] == "f_0_0"
    assert names[q8.grid.row_index("0'")][q8.grid.col_index("inf")] == "f_0p_inf"
    assert ig.name(q8.grid.row_index("a'"), q8.grid.col_index("b")) == "f_ap_b"
    assert ig.cell_of()["f_ap_b"] == (q8.grid.row_index("a'"), q8.grid.col_index("b"))


def test_relations_are_distinct_up_to_rotation_and_inversion(q8):
    """Tests that no two relations define the same relator."""
    # Act
    keys = [canonical_relator(r.relator()) for r in q8.ig.relations]

    # Assert
    assert len(keys) == len(set(keys))


def test_square_relations_have_the_square_shape(q8):
    """Tests that each square relation reads f_ij^-1 f_il f_kl^-1 f_kj."""
    # Arrange
    ig = q8.ig

    # Act & Assert
    for relation, origin in zip(ig.relations, ig.provenance):
        if origin.kind.startswith("base"):
            assert len(relation.lhs) == 1
            continue
        assert origin.kind in ("up-down", "left-right")
        assert origin.witnesses
        i, k, j, l = origin.square.quadruple  # noqa: E741
        expected = [
            (ig.name(i, j), -1),
            (ig.name(i, l), 1),
            (ig.name(k, l), -1),
            (ig.name(k, j), 1),
        ]
        assert list(relation.lhs.letters) == expected
        assert relation.rhs.is_empty()


def test_base_outside_the_grid_is_rejected(q8):
    """Tests that the base cell must lie in the grid."""
    # Act & Assert
    with pytest.raises(TietzeError):
        maximal_subgroup_presentation(q8.band, q8.grid, q8.squares, base=(8, 0))


def test_presentation_for_a_table_band_uses_positional_names():
    """Tests that grids without index symbols get r/c names."""
    # Arrange
    band = random_table_band(random.Random(3))
    green = green_classes(band)
    grid = kernel_grid(band, green)
    squares = singular_squares(band, green, grid)

    # Act
    ig = maximal_subgroup_presentation(band, grid, squares)

    # Assert
    assert ig.generators[0].name == "f_r0_c0"
    assert ig.row_symbols is None
    assert len(ig.generators) == grid.shape[0] * grid.shape[1]


# Test Cases: IG(E) presentation


def test_basic_pairs(q8):
    """Tests one basic and one non-basic pair of kernel elements."""
    # Arrange
    band = q8.band
    e00 = band.index_of("K(0,0)")

    # Act & Assert
    assert is_basic_pair(band, e00, band.index_of("K(0,a)"))
    assert is_basic_pair(band, e00, band.index_of("K(a,0)"))
    assert not is_basic_pair(band, e00, band.index_of("K(a,a)"))
    assert is_basic_pair(band, band.index_of("L(Z)"), band.index_of("K(a,b)"))


def test_ig_presentation_lists_every_basic_pair(q8):
    """Tests that the IG(E) presentation has one relation per ordered basic pair."""
    # Act
    sp = ig_presentation(q8.band)

    # Assert
    assert len(sp.generators) == 50
    assert len(sp.relations) == int(basic_pair_mask(q8.band).sum())
    assert all(
        q8.band.multiply(r.left, r.right) == r.product for r in sp.relations
    )
    assert sp.render().startswith("# IG(E) generators: K(0,0)")
    assert "K(0,0) * K(0,a) = K(0,a)" in sp.render()
