"""Deterministic JSON output for analysis reports."""

import json
import math
from pathlib import Path
from typing import Any, Optional

import numpy as np

from ..config import config
from ..models.report import AnalysisReport


def format_float(value: float, digits: int) -> str:
    """Shortest-form float with ``digits`` significant digits; non-finite becomes null."""
    if not math.isfinite(value):
        return "null"
    text = format(value, f".{digits}g")
    if not any(ch in text for ch in ".en"):
        text += ".0"
    return text


def _is_scalar(value: Any) -> bool:
    return value is None or isinstance(value, (bool, int, float, str, np.generic))


def dumps(value: Any, digits: int = 17, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written at ``digits`` significant digits.

    Identical inputs give identical bytes; key order is preserved as given.
    """
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, np.generic):
        value = value.item()

    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_float(value, digits)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=False)

    pad = " " * (indent * (_level + 1))
    close = " " * (indent * _level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, digits, indent, _level + 1)}"
            for k, v in value.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if all(_is_scalar(v) for v in value):
            return "[" + ", ".join(dumps(v, digits, indent, _level + 1) for v in value) + "]"
        items = [f"{pad}{dumps(v, digits, indent, _level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    raise TypeError(f"Cannot serialize {type(value).__name__}")


class ReportWriter:
    """Writer for analysis reports."""

    def __init__(self, digits: Optional[int] = None):
        self.digits = config.float_digits if digits is None else digits

    def write(self, report: AnalysisReport, output_path: str) -> None:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.to_string(report))
            f.write("\n")

    def to_string(self, report: AnalysisReport) -> str:
        return dumps(report.model_dump(exclude_none=True), self.digits)
