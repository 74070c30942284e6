"""Artifact writer and reader for reachkit outputs."""

import logging
import os
from typing import Any, Dict, Union

import pandas as pd

from reachkit.export.base import ExportFormat
from reachkit.utils import get_format_from_path, load_json, save_json

Payload = Union[Dict[str, Any], pd.DataFrame]


class ExportManager:
    """Class to write and read pipeline artifacts, choosing the format from the extension."""

    def __init__(self) -> None:
        self.logger = logging.getLogger(__name__)

        self._write_handlers = {
            ExportFormat.JSON: self._write_json,
            ExportFormat.CSV: self._write_csv,
        }

        self._read_handlers = {
            ExportFormat.JSON: self._read_json,
            ExportFormat.CSV: self._read_csv,
        }

    @staticmethod
    def _format(path: str) -> ExportFormat:
        try:
            return ExportFormat(get_format_from_path(path))
        except ValueError as err:
            raise ValueError(f"Unsupported file extension for export: {path}") from err

    def write(self, payload: Payload, path: str) -> None:
        """Write a payload to a file.

        Args:
        ----
            payload (Payload): A dict for JSON files or a DataFrame for CSV files.
            path (str): Destination; parent directories are created.

        Raises:
        ------
            ValueError: If the extension is unsupported or does not fit the payload.
        """
        directory = os.path.dirname(str(path))
        if directory:
            os.makedirs(directory, exist_ok=True)
        self._write_handlers[self._format(path)](payload, path)

    def read(self, path: str) -> Payload:
        """Read a payload written by ``write``."""
        return self._read_handlers[self._format(path)](path)

    def _write_json(self, payload: Payload, path: str) -> None:
        if isinstance(payload, pd.DataFrame):
            payload = {"records": payload.to_dict(orient="records")}
        save_json(payload, path)
        self.logger.info(f"Artifact written to {path} in JSON format")

    def _write_csv(self, payload: Payload, path: str) -> None:
        if not isinstance(payload, pd.DataFrame):
            raise ValueError(f"CSV export needs tabular data, got {type(payload).__name__}")
        payload.to_csv(path, index=False)
        self.logger.info(f"Artifact written to {path} in CSV format")

    def _read_json(self, path: str) -> Dict[str, Any]:
        return load_json(path)

    def _read_csv(self, path: str) -> pd.DataFrame:
        return pd.read_csv(path)
