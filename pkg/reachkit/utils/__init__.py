"""Utilities package for reachkit."""

import json
import os
from typing import Any

import numpy as np


def get_format_from_path(path: str) -> str:
    """Get the artifact format from the file path.

    Args:
    ----
        path (str): The file path.

    Returns:
    -------
        str: The format inferred from the file extension.

    Raises:
    ------
        ValueError: If the path has no extension.
    """
    ext = os.path.splitext(str(path))[1].lower()
    if ext:
        return ext.lstrip(".")
    else:
        raise ValueError(f"Unsupported file extension: {path}")


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def load_json(path: str) -> Any:
    with open(path, "r") as file:
        return json.load(file)


def save_json(data: Any, path: str) -> None:
    with open(path, "w") as file:
        json.dump(data, file, indent=2, default=_to_builtin)
