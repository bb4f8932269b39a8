"""Parser for generator matrix files (JSON and plain CSV)."""

import csv
import hashlib
import io
import json
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import ValidationError

from ..config import config
from ..errors import InputFormatError
from ..models.generator import GeneratorSource
from ..models.report import GeneratorFileModel


class GeneratorParser:
    """Parser for generator files.

    JSON files follow ``{"n", "labels", "q", "convention"}`` with ``q`` given
    row-major. CSV files hold n rows of n comma-separated floats; blank lines and
    lines starting with ``#`` are skipped. Without a flag or a file field the
    convention falls back to ``config.default_convention``.
    """

    SUFFIXES = {".json": "json", ".csv": "csv"}

    def parse(self, file_path: str, convention: Optional[str] = None) -> GeneratorSource:
        """
        Parse a generator file.

        Args:
            file_path: Path to a .json or .csv file
            convention: Overrides the file's convention when given

        Returns:
            GeneratorSource with the raw (unvalidated) matrix
        """
        path = Path(file_path)
        if not path.exists():
            raise InputFormatError("file not found", path=str(file_path))

        fmt = self.SUFFIXES.get(path.suffix.lower())
        if fmt is None:
            raise InputFormatError(
                f"expected a .json or .csv file, got {path.suffix!r}", path=str(file_path)
            )

        # decode bytes directly so the digest matches the file on disk
        try:
            content = path.read_bytes().decode("utf-8")
        except UnicodeDecodeError as e:
            raise InputFormatError(f"not UTF-8 text ({e.reason})", path=str(file_path))
        return self.parse_string(content, fmt=fmt, convention=convention, path=str(file_path))

    def parse_string(
        self,
        content: str,
        fmt: str = "json",
        convention: Optional[str] = None,
        path: Optional[str] = None,
    ) -> GeneratorSource:
        """
        Parse generator content from a string.

        Args:
            content: File content
            fmt: "json" or "csv"
            convention: Overrides the file's convention when given
            path: Used in error messages only

        Returns:
            GeneratorSource
        """
        digest = hashlib.sha256(content.encode("utf-8")).hexdigest()
        if fmt == "json":
            raw, labels, file_convention = self._parse_json(content, path)
        elif fmt == "csv":
            raw, labels, file_convention = self._parse_csv(content, path), None, None
        else:
            raise InputFormatError(f"unknown format {fmt!r}", path=path)

        return GeneratorSource(
            raw=raw,
            labels=labels,
            convention=convention or file_convention or config.default_convention,
            sha256=digest,
            path=path,
        )

    def _parse_json(self, content: str, path: Optional[str]):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as e:
            raise InputFormatError(e.msg, path=path, line=e.lineno)

        try:
            model = GeneratorFileModel.model_validate(data)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first.get("loc", ()))
            message = first.get("msg", "invalid generator file")
            raise InputFormatError(f"{where}: {message}" if where else message, path=path)

        return np.array(model.q, dtype=float), model.labels, model.convention

    def _parse_csv(self, content: str, path: Optional[str]) -> np.ndarray:
        rows = []
        for line_number, row in enumerate(csv.reader(io.StringIO(content)), start=1):
            cells = [cell.strip() for cell in row]
            if not any(cells) or cells[0].startswith("#"):
                continue
            try:
                values = [float(cell) for cell in cells]
            except ValueError:
                bad = next(cell for cell in cells if not _is_float(cell))
                raise InputFormatError(f"invalid number {bad!r}", path=path, line=line_number)
            if rows and len(values) != len(rows[0][1]):
                raise InputFormatError(
                    f"expected {len(rows[0][1])} values, got {len(values)}",
                    path=path,
                    line=line_number,
                )
            rows.append((line_number, values))

        if not rows:
            raise InputFormatError("no matrix rows found", path=path)
        n = len(rows[0][1])
        if len(rows) != n:
            raise InputFormatError(
                f"matrix has {len(rows)} rows but {n} columns",
                path=path,
                line=rows[-1][0],
            )
        return np.array([values for _, values in rows], dtype=float)


def _is_float(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True
