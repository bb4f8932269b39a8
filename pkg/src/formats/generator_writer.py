"""Writer for generator matrix JSON files."""

from pathlib import Path
from typing import Any, Dict, Optional

from ..config import config
from ..models.generator import GeneratorMatrix
from .report_writer import dumps


class GeneratorWriter:
    """Writer for generator files; always emits the column convention."""

    def __init__(self, digits: Optional[int] = None):
        self.digits = config.float_digits if digits is None else digits

    def write(self, Q: GeneratorMatrix, output_path: str) -> None:
        """
        Write a generator to disk.

        Args:
            Q: The validated generator
            output_path: Path to write the file to
        """
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(self.to_string(Q))
            f.write("\n")

    def to_string(self, Q: GeneratorMatrix) -> str:
        return dumps(self._to_dict(Q), self.digits)

    def _to_dict(self, Q: GeneratorMatrix) -> Dict[str, Any]:
        return {
            "n": Q.n,
            "labels": list(Q.labels),
            "q": Q.rates.tolist(),
            "convention": "column",
        }
