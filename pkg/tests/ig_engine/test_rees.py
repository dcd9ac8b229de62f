# tests/ig_engine/test_rees.py

import random

import pytest
from ig_core.presentations import Word, parse_group_presentation
from ig_engine.errors import ReesModelError
from ig_engine.groups import FiniteGroupOracle, SymbolicGroupOracle, todd_coxeter
from ig_engine.tietze import GridTable

# Subject under test
from ig_engine.rees import (
    EQUAL,
    NOT_EQUAL,
    REDUCES_TO,
    KbarForm,
    LbarForm,
    base_h_class,
    build_rees_model,
    check_rees_model,
    embed_idempotent,
    ig_equal,
    ig_normal_form,
    is_closed_group,
    parse_band_word,
    project,
    rees_multiply,
)

from tests.catalogue import SMALL_GROUPS, cayley_table_presentation, run_bg_pipeline

# Fixtures


@pytest.fixture
def symbolic_q8(q8):
    """Provides the Q8 Rees model over the symbolic group oracle."""
    return build_rees_model(q8.table, SymbolicGroupOracle(), q8.band, q8.grid)


def _word(q8, text):
    return parse_band_word(q8.band, text)


# Test Cases: the Rees model


def test_q8_model_shape_and_group(q8):
    """Tests that the Q8 model is an 8x5 Rees matrix semigroup over a group of order 8."""
    # Arrange
    model = q8.rees

    # Assert
    assert model.shape == (8, 5)
    assert model.group.is_finite
    assert model.rows[4] == "0'"
    assert model.cols[-1] == "inf"


def test_sandwich_is_normalized(q8):
    """Tests that the base row and the base column of P are the identity."""
    # Arrange
    model = q8.rees
    n_rows, n_cols = model.shape

    # Assert
    assert all(model.p(0, i) == Word.empty() for i in range(n_rows))
    assert all(model.p(j, 0) == Word.empty() for j in range(n_cols))


def test_check_rees_model_on_q8(q8):
    """Tests idempotency of all 40 cells, the basic products and the H-class order."""
    # Act
    report = check_rees_model(q8.rees)

    # Assert
    assert report.ok
    assert report.idempotent_cells == report.cells == 40
    assert report.basic_pairs_checked > 0
    assert report.h_class_order == 8


def test_base_h_class_is_a_group(q8):
    """Tests that {(0, g, 0)} is closed and contains the base idempotent."""
    # Act
    elements = base_h_class(q8.rees)

    # Assert
    assert len(elements) == 8
    assert is_closed_group(q8.rees, elements)
    assert not is_closed_group(q8.rees, elements[1:])


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_rees_model_checks_on_small_groups(name):
    """Tests the Rees model of every group of order at most 8 given by its Cayley table."""
    # Arrange
    run = run_bg_pipeline(cayley_table_presentation(SMALL_GROUPS[name]))

    # Act
    report = check_rees_model(run.rees)

    # Assert
    assert report.ok
    assert report.idempotent_cells == report.cells
    assert report.h_class_order == len(SMALL_GROUPS[name])
    assert is_closed_group(run.rees, base_h_class(run.rees))


def test_rees_multiplication_uses_the_sandwich(q8):
    """Tests (a', b, b)(0, 1, inf) = (a', b, inf), since p[b][0] = 1."""
    # Arrange
    model = q8.rees
    x = model.iota(model.rows.index("a'"), model.cols.index("b"))
    y = model.iota(0, model.cols.index("inf"))

    # Act
    product = rees_multiply(model, x, y)

    # Assert
    assert product == KbarForm(model.rows.index("a'"), Word.of("b"), model.cols.index("inf"))


def test_non_normalized_table_is_rejected():
    """Tests that a table with t in its base row cannot give a normalized P."""
    # Arrange
    z2 = FiniteGroupOracle(todd_coxeter(parse_group_presentation("gens t\nrel t^2 = 1\n")))
    table = GridTable(
        ((Word.empty(), Word.of("t")), (Word.empty(), Word.empty())),
        ("r0", "r1"),
        ("c0", "c1"),
    )

    # Act & Assert
    with pytest.raises(ReesModelError):
        build_rees_model(table, z2)


# Test Cases: normal forms


def test_product_of_kernel_cells_normalizes_to_the_corner(q8):
    """Tests that K(0,a) K(a',inf) equals iota(e_0,inf)."""
    # Arrange
    model = q8.rees

    # Act
    value = ig_normal_form(model, _word(q8, "K(0,a) K(a',inf)"))

    # Assert
    assert value == model.iota(0, model.cols.index("inf"))
    assert value.group == Word.empty()


def test_distinct_group_words_in_one_cell_are_not_equal(q8):
    """Tests that K(a',b) K(0,inf) lands on (a', b, inf) while K(a',inf) is (a', a, inf)."""
    # Act
    verdict = ig_equal(q8.rees, _word(q8, "K(a',b) K(0,inf)"), _word(q8, "K(a',inf)"))

    # Assert
    assert verdict.status == NOT_EQUAL
    assert verdict.left.group == Word.of("b")
    assert verdict.right.group == Word.of("a")


def test_upper_letter_acts_on_the_left(q8):
    """Tests that L(Z) K(a,b) normalizes to iota(e_0,b)."""
    # Arrange
    model = q8.rees

    # Act
    value = ig_normal_form(model, _word(q8, "L(Z) K(a,b)"))

    # Assert
    assert value == model.iota(0, model.cols.index("b"))
    assert ig_equal(model, _word(q8, "L(Z) K(a,b)"), _word(q8, "K(0,b)")).status == EQUAL


def test_words_over_the_left_zero_part(q8):
    """Tests that a word with no kernel letter is its first letter."""
    # Arrange
    model = q8.rees

    # Act
    value = ig_normal_form(model, _word(q8, "L(Z) L(G:a) L(R:a,b,c)"))

    # Assert
    assert isinstance(value, LbarForm)
    assert value.render() == "Lbar(L(Z))"
    assert ig_equal(model, _word(q8, "L(Z) L(G:a)"), _word(q8, "L(Z)")).status == EQUAL
    assert ig_equal(model, _word(q8, "L(Z)"), _word(q8, "K(0,0)")).status == NOT_EQUAL


def test_embedding_of_idempotents(q8):
    """Tests that upper elements embed as Lbar and kernel cells as iota."""
    # Arrange
    model, band = q8.rees, q8.band

    # Act & Assert
    assert embed_idempotent(model, band.index_of("L(Z)")) == LbarForm(band.index_of("L(Z)"))
    k = band.index_of("K(c',inf)")
    embedded = embed_idempotent(model, k)
    assert isinstance(embedded, KbarForm)
    assert embedded.group == Word.of("c")
    assert project(model, embedded) == k


@pytest.mark.parametrize("seed", range(5))
def test_projection_is_the_band_product(q8, seed):
    """Tests that projecting the normal form of a random word gives its value in B_G."""
    # Arrange
    rng = random.Random(seed)
    band = q8.band

    # Act & Assert
    for _ in range(40):
        word = [rng.randrange(band.size) for _ in range(rng.randint(1, 6))]
        assert project(q8.rees, ig_normal_form(q8.rees, word)) == band.product(word)


@pytest.mark.parametrize(
    "word",
    [[], [999], [-1]],
)
def test_normal_form_rejects_bad_words(q8, word):
    """Tests the empty word and element ids outside the band."""
    # Act & Assert
    with pytest.raises(ReesModelError):
        ig_normal_form(q8.rees, word)


def test_unknown_labels_and_embeddings_are_rejected(q8):
    """Tests unknown letters in parsed words and out-of-range embeddings."""
    # Act & Assert
    with pytest.raises(ReesModelError):
        parse_band_word(q8.band, "K(0,a) K(z,inf)")
    with pytest.raises(ReesModelError):
        embed_idempotent(q8.rees, q8.band.size)


# Test Cases: symbolic mode


def test_symbolic_model_reduces_to_a_group_equation(symbolic_q8, q8):
    """Tests that without a finite group the comparison is left as b =? a."""
    # Act
    verdict = ig_equal(symbolic_q8, _word(q8, "K(a',b) K(0,inf)"), _word(q8, "K(a',inf)"))

    # Assert
    assert verdict.status == REDUCES_TO
    assert verdict.describe() == "reduces-to b =? a"


def test_symbolic_model_still_decides_cells(symbolic_q8, q8):
    """Tests that different cells are unequal and identical words equal in symbolic mode."""
    # Act & Assert
    assert ig_equal(symbolic_q8, _word(q8, "K(0,a)"), _word(q8, "K(0,b)")).status == NOT_EQUAL
    assert ig_equal(symbolic_q8, _word(q8, "K(0,a) K(a',inf)"), _word(q8, "K(0,inf)")).status == EQUAL


def test_base_h_class_needs_a_finite_group(symbolic_q8):
    """Tests that the H-class cannot be listed in symbolic mode."""
    # Act & Assert
    with pytest.raises(ReesModelError):
        base_h_class(symbolic_q8)
    assert check_rees_model(symbolic_q8).h_class_order is None
