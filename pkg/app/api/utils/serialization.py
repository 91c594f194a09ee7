"""
CSV and JSON output helpers.

Floats are written with 17 significant digits so that every binary64 value
round-trips exactly; CSV uses LF line endings and no trailing comma.
"""

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Sequence, Union


def format_float(value: float) -> str:
    """
    Round-trip text for a binary64 value.

    Examples:
        >>> format_float(0.1)
        '0.10000000000000001'
    """
    return format(float(value), ".17g")


def render_csv(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    """Render a header line and numeric rows as CSV text."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


def write_csv(path: Union[str, Path], header: Sequence[str], rows: Iterable[Sequence[float]]) -> None:
    """
    Write a trajectory table.

    Raises:
        OSError: If the file cannot be written.
    """
    Path(path).write_text(render_csv(header, rows), encoding="utf-8", newline="")


def write_json(path: Union[str, Path], payload: Any) -> None:
    """
    Write a JSON document with a trailing newline.

    Raises:
        OSError: If the file cannot be written.
    """
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8", newline="")
