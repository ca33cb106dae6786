"""Tests pour la hiérarchie d'exceptions sun-coherent."""

import pytest

from sun_coherent.errors import (
    DimensionError,
    IndexRangeError,
    MalformedTreeError,
    NonHermitianError,
    NonUnitaryError,
    PoleError,
    SUNError,
    VerificationError,
)

_SUBCLASSES = [
    DimensionError,
    IndexRangeError,
    NonHermitianError,
    NonUnitaryError,
    MalformedTreeError,
    PoleError,
    VerificationError,
]


class TestSUNErrorHierarchy:
    """Vérifie que toutes les exceptions héritent de SUNError."""

    @pytest.mark.parametrize("exc_class", _SUBCLASSES)
    def test_subclass_of_sun_error(self, exc_class: type) -> None:
        assert issubclass(exc_class, SUNError)

    @pytest.mark.parametrize("exc_class", _SUBCLASSES)
    def test_catchable_as_base(self, exc_class: type) -> None:
        with pytest.raises(SUNError):
            raise exc_class("test")

    def test_sun_error_is_exception(self) -> None:
        assert issubclass(SUNError, Exception)


class TestVerificationError:
    """Vérifie le stockage de la liste des invariants en échec."""

    def test_with_error_list(self) -> None:
        errors = ["symrep.rep_commutators : écart 1e-3 > 1e-12"]
        exc = VerificationError("1 invariant(s) en échec", errors=errors)
        assert str(exc) == "1 invariant(s) en échec"
        assert exc.errors == errors

    def test_without_error_list(self) -> None:
        assert VerificationError("échec").errors == []

    def test_with_none_error_list(self) -> None:
        assert VerificationError("échec", errors=None).errors == []
