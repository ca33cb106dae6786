"""Tests pour la sérialisation JSON/CSV."""

import io
import json
from pathlib import Path

import numpy as np
import pytest
from pydantic import ValidationError

from sun_coherent.errors import DimensionError
from sun_coherent.utils import (
    decode_matrix,
    dumps,
    encode_matrix,
    load_angles,
    load_matrix,
    read_json_source,
    to_csv,
    write_output,
)


class TestMatrixCodec:
    """Matrices en tableaux de paires [re, im]."""

    def test_encode(self) -> None:
        assert encode_matrix(np.array([[1j, 2.0]])) == [[[0.0, 1.0], [2.0, 0.0]]]

    def test_decode(self) -> None:
        matrix = decode_matrix([[[0, 1], [2, 0]], [[0, 0], [1, -1]]])
        np.testing.assert_array_equal(matrix, [[1j, 2], [0, 1 - 1j]])

    @pytest.mark.parametrize(
        "data",
        [
            [[[1, 0], [0, 0]]],
            [[1, 0], [0, 1]],
            [[[1, 0, 0], [0, 0, 0]], [[0, 0, 0], [1, 0, 0]]],
            [["a", "b"]],
        ],
    )
    def test_decode_invalid(self, data: object) -> None:
        with pytest.raises(DimensionError):
            decode_matrix(data)


class TestSources:
    """Lecture depuis stdin, JSON en ligne ou fichier."""

    def test_inline(self) -> None:
        assert read_json_source(' {"a": 1} ') == {"a": 1}

    def test_file(self, tmp_path: Path) -> None:
        source = tmp_path / "angles.json"
        source.write_text('{"xi": [0.2], "phi": [0.0, 1.0]}', encoding="utf-8")
        angles = load_angles(str(source))
        assert angles.xi == [0.2]

    def test_stdin(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setattr("sys.stdin", io.StringIO('[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]'))
        np.testing.assert_array_equal(load_matrix("-"), np.eye(2))

    def test_invalid_json(self) -> None:
        with pytest.raises(json.JSONDecodeError):
            read_json_source("{nope")

    def test_missing_file(self, tmp_path: Path) -> None:
        with pytest.raises(OSError):
            read_json_source(str(tmp_path / "absent.json"))

    def test_invalid_angles(self) -> None:
        with pytest.raises(ValidationError):
            load_angles('{"xi": [0.1, 0.2], "phi": [0.0]}')


class TestOutput:
    """JSON canonique, CSV et écriture."""

    def test_dumps_sorted(self) -> None:
        assert dumps({"b": 1, "a": [1.5]}) == '{\n  "a": [\n    1.5\n  ],\n  "b": 1\n}\n'

    @pytest.mark.parametrize("value", [float("nan"), float("inf")])
    def test_dumps_rejects_non_finite(self, value: float) -> None:
        with pytest.raises(ValueError):
            dumps({"deviation": value})

    def test_csv(self) -> None:
        rows = [{"x": 1, "y": "a"}, {"x": 2, "y": "b"}]
        assert to_csv(rows) == "x,y\n1,a\n2,b\n"

    def test_csv_empty(self) -> None:
        assert to_csv([]) == ""

    def test_write_file(self, tmp_path: Path) -> None:
        target = tmp_path / "sub" / "report.json"
        write_output("{}\n", target)
        assert target.read_text(encoding="utf-8") == "{}\n"

    def test_write_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        write_output("ok\n", None)
        assert capsys.readouterr().out == "ok\n"
