"""Tests pour les matrices élémentaires e^h_j."""

import numpy as np
import pytest
from pydantic import ValidationError

from sun_coherent.errors import IndexRangeError
from sun_coherent.generators import ElementaryIndex, elementary, elementary_matrix


class TestElementary:
    """Une seule entrée non nulle en (h, j)."""

    @pytest.mark.parametrize(
        ("h", "j", "n", "expected"),
        [
            (1, 2, 2, [[0, 1], [0, 0]]),
            (2, 1, 2, [[0, 0], [1, 0]]),
            (3, 3, 3, np.diag([0, 0, 1])),
        ],
    )
    def test_values(self, h: int, j: int, n: int, expected: list[list[int]]) -> None:
        result = elementary(ElementaryIndex(h=h, j=j, n=n))
        np.testing.assert_array_equal(result, np.asarray(expected, dtype=complex))

    def test_complex_dtype(self) -> None:
        assert elementary_matrix(1, 1, 2).dtype == np.complex128


class TestElementaryIndex:
    """Contrôle des indices 1-basés."""

    @pytest.mark.parametrize(("h", "j", "n"), [(0, 1, 2), (1, 3, 2), (3, 1, 2), (1, -1, 4)])
    def test_out_of_range_model(self, h: int, j: int, n: int) -> None:
        with pytest.raises(ValidationError, match="hors domaine"):
            ElementaryIndex(h=h, j=j, n=n)

    def test_out_of_range_helper(self) -> None:
        with pytest.raises(IndexRangeError, match="invalide"):
            elementary_matrix(3, 1, 2)

    def test_frozen(self) -> None:
        idx = ElementaryIndex(h=1, j=2, n=3)
        with pytest.raises(ValidationError):
            idx.h = 2  # type: ignore[misc]
