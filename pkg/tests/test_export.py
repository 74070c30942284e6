import numpy as np
import pandas as pd
import pytest

from reachkit.export import ExportManager


@pytest.fixture()
def exporter():
    return ExportManager()


def test_json_round_trip_with_numpy_values(exporter, tmp_path):
    path = tmp_path / "nested" / "metrics.json"
    exporter.write({"rho": np.float64(0.5), "points": np.arange(3)}, str(path))
    assert exporter.read(str(path)) == {"rho": 0.5, "points": [0, 1, 2]}


def test_csv_round_trip(exporter, tmp_path):
    frame = pd.DataFrame({"x1": [0.0, 1.5], "x2": [2.0, -1.0]})
    path = str(tmp_path / "points.csv")
    exporter.write(frame, path)
    pd.testing.assert_frame_equal(exporter.read(path), frame)


def test_frame_written_as_json_records(exporter, tmp_path):
    path = str(tmp_path / "summary.json")
    exporter.write(pd.DataFrame({"rho": [1.0]}), path)
    assert exporter.read(path) == {"records": [{"rho": 1.0}]}


def test_csv_needs_a_frame(exporter, tmp_path):
    with pytest.raises(ValueError, match="tabular"):
        exporter.write({"rho": 1.0}, str(tmp_path / "metrics.csv"))


@pytest.mark.parametrize("name", ["model.parquet", "model"])
def test_unsupported_extension(exporter, tmp_path, name):
    with pytest.raises(ValueError, match="Unsupported"):
        exporter.write({}, str(tmp_path / name))
