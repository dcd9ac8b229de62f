# tests/ig_core/test_bands.py

import json
import random

import numpy as np
import pytest
from ig_core.errors import BandConstructionError, GridError, NotABandError, WordSyntaxError
from ig_core.presentations import CayleyFormPresentation

# Subject under test
from ig_core.bands import (
    Band,
    ElementLabel,
    LabelKind,
    TransformationPair,
    build_bg,
    compose_pairs,
    dclass_grid,
    expected_bg_size,
    green_classes,
    is_band,
    is_band_table,
    kernel_grid,
    load_band_json,
    parse_element_word,
)

from tests.catalogue import (
    SMALL_GROUPS,
    cayley_table_presentation,
    random_cayley_presentation,
    random_table_band,
)

# Test Cases: B_G construction


def test_q8_band_size_and_split(q8):
    """Tests that B_G for Q8 has 50 elements: a 8x5 kernel and 10 upper elements."""
    # Assert
    assert q8.band.size == 50
    assert expected_bg_size(3, 3) == 50
    assert len(q8.band.kernel) == 40
    assert len(q8.band.upper) == 10
    assert q8.band.index_sets.shape == (8, 5)
    assert q8.band.is_bg


def test_empty_presentation_band(trivial_cayley: CayleyFormPresentation):
    """Tests that <|> gives the 2x2 kernel plus L(Z)."""
    # Act
    band = build_bg(trivial_cayley)

    # Assert
    assert band.size == 5 == expected_bg_size(0, 0)
    assert [band.label(x) for x in sorted(band.upper)] == ["L(Z)"]


@pytest.mark.parametrize("name", ["trivial", "Z2", "Z3", "S3"])
def test_band_size_matches_formula_for_cayley_tables(name):
    """Tests the closed size formula on Cayley-table presentations of small groups."""
    # Arrange
    table = SMALL_GROUPS[name]
    p = cayley_table_presentation(table)

    # Act
    band = build_bg(p)

    # Assert
    n = len(table)
    assert band.size == expected_bg_size(n, n * n)
    assert is_band(band).ok


@pytest.mark.parametrize("seed", range(16))
def test_band_size_matches_formula_for_random_presentations(seed):
    """Tests the size formula and the band axioms on random Cayley-form input."""
    # Arrange
    p = random_cayley_presentation(random.Random(seed))

    # Act
    band = build_bg(p)

    # Assert
    assert band.size == expected_bg_size(len(p.generators), len(p.relations))
    assert is_band_table(band.table).ok


@pytest.mark.parametrize("names", [["a"], ["a", "b"], ["a", "b", "c"]])
def test_band_size_matches_formula_for_free_groups(names):
    """Tests the size formula on free groups of rank 1 to 3."""
    # Arrange
    p = CayleyFormPresentation.build(names, [])

    # Act
    band = build_bg(p)

    # Assert
    assert band.size == expected_bg_size(len(names), 0)
    assert is_band(band).ok


def test_duplicate_triples_do_not_count_twice():
    """Tests that a repeated triple contributes one element of L."""
    # Arrange
    p = CayleyFormPresentation.build(["a"], [("a", "a", "a"), ("a", "a", "a")])

    # Act
    band = build_bg(p)

    # Assert
    assert band.size == expected_bg_size(1, 1)


def test_upper_part_is_left_zero(q8):
    """Tests that every product of two upper elements is its left factor."""
    # Arrange
    upper = sorted(q8.band.upper)

    # Act & Assert
    for x in upper:
        for y in upper:
            assert q8.band.multiply(x, y) == x


def test_products_with_the_kernel(q8):
    """
    Tests that L(Z) sends unprimed rows to 0 from the left and inf to 0 from
    the right, and that the kernel multiplies as a rectangular band.
    """
    # Arrange
    band = q8.band
    z = band.index_of("L(Z)")

    # Act & Assert
    assert band.multiply(z, band.index_of("K(a,b)")) == band.index_of("K(0,b)")
    assert band.multiply(z, band.index_of("K(a',b)")) == band.index_of("K(0',b)")
    assert band.multiply(band.index_of("K(a,inf)"), z) == band.index_of("K(a,0)")
    assert band.product(
        [band.index_of("K(a,b)"), band.index_of("K(c',inf)")]
    ) == band.index_of("K(a,inf)")


def test_relation_element_acts_by_its_triple(q8):
    """Tests that L(R:a,b,c) sends A_0 to b, A_0' to c' and inf to a."""
    # Arrange
    band = q8.band
    r = band.index_of("L(R:a,b,c)")

    # Act & Assert
    assert band.multiply(r, band.index_of("K(0,0)")) == band.index_of("K(b,0)")
    assert band.multiply(r, band.index_of("K(b',0)")) == band.index_of("K(c',0)")
    assert band.multiply(band.index_of("K(0,inf)"), r) == band.index_of("K(0,a)")
    assert band.multiply(band.index_of("K(0,b)"), r) == band.index_of("K(0,b)")


def test_index_of_unknown_label_raises(q8):
    """Tests that asking for an element outside the band raises KeyError."""
    # Act & Assert
    with pytest.raises(KeyError):
        q8.band.index_of("L(G:z)")


# Test Cases: raw tables


def test_from_table_validates_shape_and_entries():
    """Tests the structural checks of Band.from_table."""
    # Act & Assert
    with pytest.raises(BandConstructionError):
        Band.from_table([[0, 1]])
    with pytest.raises(BandConstructionError):
        Band.from_table([[0, 2], [1, 1]])
    with pytest.raises(BandConstructionError):
        Band.from_table([[0, 0], [1, 1]], names=["x", "x"])


@pytest.mark.parametrize(
    "table, failure",
    [
        ([[1, 0], [0, 1]], "idempotency"),
        ([[0, 2, 1], [2, 1, 0], [1, 0, 2]], "associativity"),
        ([[0, 5], [1, 1]], "closure"),
    ],
)
def test_is_band_table_finds_the_failing_axiom(table, failure):
    """Tests that each axiom violation is reported with a counterexample."""
    # Act
    check = is_band_table(table)

    # Assert
    assert not check.ok
    assert check.failure == failure
    assert check.counterexample
    assert failure in check.describe()


def test_is_band_on_pairs_detects_missing_products():
    """Tests that a pair set not closed under composition fails the closure check."""
    # Arrange
    first = TransformationPair((0, 0), (0, 0))
    second = TransformationPair((0, 1), (1, 1))

    # Act
    check = is_band([first, second])

    # Assert
    assert not check.ok
    assert check.failure == "closure"


def test_compose_pairs_acts_left_on_rows_and_right_on_columns():
    """Tests the composition convention of transformation pairs."""
    # Arrange
    x = TransformationPair((1, 1, 2), (0, 0))
    y = TransformationPair((0, 2, 2), (1, 1))

    # Act
    xy = compose_pairs(x, y)

    # Assert
    assert xy.sigma == (1, 2, 2)
    assert xy.tau == (1, 1)


@pytest.mark.parametrize("seed", range(6))
def test_random_table_bands_are_bands(seed):
    """Tests that the random K u L generator always yields bands."""
    # Act
    band = random_table_band(random.Random(seed), with_semilattice=seed % 2 == 1)

    # Assert
    assert band.pairs is None
    assert is_band(band).ok


def test_load_band_json(tmp_path):
    """Tests reading a two-element left-zero band with names."""
    # Arrange
    path = tmp_path / "band.json"
    path.write_text(json.dumps({"n": 2, "table": [[0, 0], [1, 1]], "names": ["e", "f"]}))

    # Act
    band = load_band_json(path)

    # Assert
    assert band.size == 2
    assert band.index_of("f") == 1
    assert not band.is_bg


def test_load_band_json_rejects_bad_documents(tmp_path):
    """Tests missing files, size mismatches and broken JSON."""
    # Arrange
    wrong_n = tmp_path / "wrong.json"
    wrong_n.write_text(json.dumps({"n": 3, "table": [[0, 0], [1, 1]]}))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")

    # Act & Assert
    with pytest.raises(FileNotFoundError):
        load_band_json(tmp_path / "missing.json")
    with pytest.raises(BandConstructionError):
        load_band_json(wrong_n)
    with pytest.raises(BandConstructionError):
        load_band_json(broken)


# Test Cases: labels


def test_element_labels_render_and_parse():
    """Tests that every label kind renders and parses back."""
    # Arrange
    texts = ["K(0',inf)", "L(Z)", "L(G:a)", "L(Gbar:a)", "L(R:a,b,c)", "x3"]

    # Act
    labels = [ElementLabel.parse(t) for t in texts]

    # Assert
    assert [label.render() for label in labels] == texts
    assert labels[4].kind is LabelKind.R
    assert labels[4].args == ("a", "b", "c")


def test_label_arity_is_checked():
    """Tests that L(G) without an argument is rejected."""
    # Act & Assert
    with pytest.raises(WordSyntaxError):
        ElementLabel.parse("L(G)")


def test_parse_element_word_accepts_spaces_and_stars():
    """Tests both letter separators of the word syntax."""
    # Act
    labels = parse_element_word("K(0,a) * K(a',inf) L(Z)")

    # Assert
    assert [label.render() for label in labels] == ["K(0,a)", "K(a',inf)", "L(Z)"]
    with pytest.raises(WordSyntaxError):
        parse_element_word("  ")


# Test Cases: Green's relations and grids


def test_green_structure_of_q8_band(q8):
    """Tests that B_G has two D-classes: the 8x5 kernel below the left-zero part."""
    # Arrange
    green = q8.green

    # Assert
    assert len(green.d_classes) == 2
    kernel = green.minimal_class()
    upper = 1 - kernel
    assert set(green.d_classes[kernel]) == set(q8.band.kernel)
    assert green.is_strictly_above(upper, kernel)
    assert not green.is_strictly_above(kernel, upper)
    assert len(green.r_classes) == 8 + 10
    assert len(green.l_classes) == 5 + 1
    assert sorted(green.elements_strictly_above(kernel)) == sorted(q8.band.upper)


def test_green_classes_rejects_non_idempotent_tables():
    """Tests that Green's relations are only computed for idempotent tables."""
    # Arrange
    band = Band.from_table([[1, 0], [0, 1]])

    # Act & Assert
    with pytest.raises(NotABandError):
        green_classes(band)


def test_kernel_grid_of_q8(q8):
    """Tests the row and column order of the kernel grid and its base cell."""
    # Arrange
    grid = q8.grid

    # Assert
    assert grid.shape == (8, 5)
    assert grid.row_labels == ("0", "a", "b", "c", "0'", "a'", "b'", "c'")
    assert grid.col_labels == ("0", "a", "b", "c", "inf")
    assert grid.row_tokens[4] == "0p"
    assert grid.base == q8.band.index_of("K(0,0)")
    assert grid.cell(grid.row_index("a'"), grid.col_index("inf")) == q8.band.index_of("K(a',inf)")
    assert grid.is_rectangular(q8.band)


def test_dclass_grid_rejects_bad_requests(q8):
    """Tests the errors for an unknown D-class and a base outside the class."""
    # Arrange
    kernel = q8.green.minimal_class()
    outsider = q8.band.index_of("L(Z)")

    # Act & Assert
    with pytest.raises(GridError):
        dclass_grid(q8.band, q8.green, 7, outsider)
    with pytest.raises(GridError):
        dclass_grid(q8.band, q8.green, kernel, outsider)
    with pytest.raises(GridError):
        q8.grid.row_index("z")


@pytest.mark.parametrize("seed", range(6))
def test_random_band_kernel_grid_is_rectangular(seed):
    """Tests that the minimal ideal of a table band lays out as a rectangular grid."""
    # Arrange
    band = random_table_band(random.Random(seed), with_semilattice=seed % 2 == 1)
    green = green_classes(band)

    # Act
    grid = kernel_grid(band, green)

    # Assert
    rows, cols = grid.shape
    assert rows * cols == len(green.d_classes[grid.d_index])
    assert grid.is_rectangular(band)
    assert grid.row_symbols is None
    assert len(set(np.asarray(grid.cells).reshape(-1).tolist())) == rows * cols
