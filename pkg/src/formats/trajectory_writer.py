"""CSV export of flow trajectories."""

import csv
import io
from pathlib import Path
from typing import List, Optional

from ..config import config
from ..models.decomposition import FrameTransform
from ..models.trajectory import Trajectory
from .report_writer import format_float


class TrajectoryWriter:
    """Writer for trajectory CSV files.

    Columns: time, u_1..u_n (or p_1..p_n in the p-frame), H, norm2, Phi, then
    one column per named observable.
    """

    def __init__(self, digits: Optional[int] = None):
        self.digits = config.float_digits if digits is None else digits

    def write(
        self,
        traj: Trajectory,
        output_path: str,
        frame: str = "u",
        transform: Optional[FrameTransform] = None,
        stride: int = 1,
    ) -> None:
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(self.to_string(traj, frame=frame, transform=transform, stride=stride))

    def to_string(
        self,
        traj: Trajectory,
        frame: str = "u",
        transform: Optional[FrameTransform] = None,
        stride: int = 1,
    ) -> str:
        """
        Render a trajectory as CSV.

        Args:
            traj: Trajectory to export
            frame: "u" for amplitudes or "p" for probabilities
            transform: Required for the p-frame
            stride: Keep every stride-th row; the final row is always kept

        Returns:
            CSV text with a header row
        """
        if stride < 1:
            raise ValueError(f"stride must be >= 1, got {stride}")
        if frame == "p":
            if transform is None:
                raise ValueError("p-frame export needs the frame transform")
            states = traj.states * transform.sqrt_pi[None, :]
        elif frame == "u":
            states = traj.states
        else:
            raise ValueError(f"Unknown frame: {frame!r}")

        n = states.shape[1]
        names = list(traj.observables)
        header = ["time"] + [f"{frame}_{i + 1}" for i in range(n)] + ["H", "norm2", "Phi"] + names

        rows = self._row_indices(len(traj), stride)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for k in rows:
            values = [traj.times[k], *states[k], traj.hamiltonian[k], traj.norm2[k], traj.potential[k]]
            values.extend(traj.observables[name][k] for name in names)
            writer.writerow([format_float(float(v), self.digits) for v in values])
        return buffer.getvalue()

    @staticmethod
    def _row_indices(length: int, stride: int) -> List[int]:
        rows = list(range(0, length, stride))
        if rows[-1] != length - 1:
            rows.append(length - 1)
        return rows
