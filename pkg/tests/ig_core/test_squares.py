# tests/ig_core/test_squares.py

import random
from itertools import combinations

import pytest
from ig_core.bands import green_classes, kernel_grid
from ig_core.errors import SquareComputationError

# Subject under test
from ig_core.squares import (
    SquareKind,
    action_maps,
    count_by_kind,
    is_singular_square_oracle,
    singular_squares,
)

from tests.catalogue import random_table_band


def _all_quadruples(grid):
    n_rows, n_cols = grid.shape
    for i, k in combinations(range(n_rows), 2):
        for j, l in combinations(range(n_cols), 2):  # noqa: E741
            yield (i, k, j, l)


# Test Cases


def test_q8_square_counts(q8):
    """Tests that the Q8 kernel has 72 up-down and 10 left-right singular squares."""
    # Act
    counts = count_by_kind(q8.squares)

    # Assert
    assert len(q8.squares) == 82
    assert counts[SquareKind.UP_DOWN] == 72
    assert counts[SquareKind.LEFT_RIGHT] == 10


def test_squares_are_sorted_and_normalized(q8):
    """Tests that squares come row-major with i < k and j < l."""
    # Arrange
    quads = [s.quadruple for s in q8.squares]

    # Assert
    assert all(i < k and j < l for i, k, j, l in quads)  # noqa: E741
    assert quads == sorted(quads)


def test_witnesses_lie_strictly_above_the_kernel(q8):
    """Tests that every witness comes from a D-class strictly above the grid's."""
    # Arrange
    green, grid = q8.green, q8.grid

    # Act & Assert
    for square in q8.squares:
        assert square.witnesses
        for w in square.witnesses:
            assert green.is_strictly_above(green.d_class_of[w], grid.d_index)


def test_left_right_square_through_relation_element(q8):
    """
    Tests that L(R:a,b,c) witnesses the left-right square on its fixed rows
    (b, c') and the columns (a, inf) it merges.
    """
    # Arrange
    grid, band = q8.grid, q8.band
    rows = sorted((grid.row_index("b"), grid.row_index("c'")))
    cols = sorted((grid.col_index("a"), grid.col_index("inf")))
    witness = band.index_of("L(R:a,b,c)")

    # Act
    found = [
        s
        for s in q8.squares
        if s.quadruple == (rows[0], rows[1], cols[0], cols[1]) and s.kind is SquareKind.LEFT_RIGHT
    ]

    # Assert
    assert len(found) == 1
    assert witness in found[0].witnesses
    assert found[0].render(grid) == "(b,c';a,inf)"


def test_enumeration_agrees_with_brute_force_oracle_on_q8(q8):
    """Tests every square of the Q8 grid against the product-based oracle."""
    # Arrange
    listed = {s.quadruple for s in q8.squares}

    # Act & Assert
    for quad in _all_quadruples(q8.grid):
        assert is_singular_square_oracle(q8.band, q8.green, q8.grid, quad) == (quad in listed)


@pytest.mark.parametrize("seed", range(10))
def test_enumeration_agrees_with_brute_force_oracle_on_table_bands(seed):
    """Tests the enumeration against the oracle on random table-presented bands."""
    # Arrange
    band = random_table_band(random.Random(seed), with_semilattice=seed % 3 == 0)
    green = green_classes(band)
    grid = kernel_grid(band, green)

    # Act
    listed = {s.quadruple for s in singular_squares(band, green, grid)}

    # Assert
    for quad in _all_quadruples(grid):
        assert is_singular_square_oracle(band, green, grid, quad) == (quad in listed)


def test_oracle_rejects_degenerate_squares(q8):
    """Tests that a square with i = k is refused."""
    # Act & Assert
    with pytest.raises(SquareComputationError):
        is_singular_square_oracle(q8.band, q8.green, q8.grid, (1, 1, 0, 2))


def test_action_maps_of_l_z(q8):
    """Tests that L(Z) collapses the unprimed rows to 0 and sends inf to 0."""
    # Arrange
    grid = q8.grid
    z = q8.band.index_of("L(Z)")

    # Act
    maps = action_maps(q8.band, q8.green, z, grid)

    # Assert
    zero_p = grid.row_index("0'")
    assert maps.sigma == (0, 0, 0, 0, zero_p, zero_p, zero_p, zero_p)
    assert maps.tau == (0, 1, 2, 3, 0)
    assert maps.fixed_rows() == (0, zero_p)
    assert maps.fixed_cols() == (0, 1, 2, 3)


def test_action_maps_refuse_elements_of_the_class_itself(q8):
    """Tests that a kernel element cannot act on its own D-class."""
    # Act & Assert
    with pytest.raises(SquareComputationError):
        action_maps(q8.band, q8.green, q8.grid.base, q8.grid)
