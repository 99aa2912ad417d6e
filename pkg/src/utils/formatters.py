"""
Text formatting utilities for JSON reports and CSV sweeps
"""

import csv
import io
import json
from typing import Iterable, NamedTuple, Sequence


def format_float(value) -> str:
    """17 significant digits, '.' decimal separator regardless of locale"""
    return f"{float(value):.17g}"


def format_json(data) -> str:
    """Floats use repr, the shortest string that round-trips a double"""
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def format_csv(columns: Sequence[str], rows: Iterable[NamedTuple]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buffer.getvalue()


def parse_float_list(text: str, expected: int = None) -> list:
    """'a,b,c' -> [a, b, c]"""
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected comma-separated numbers, got {text!r}")
    if expected is not None and len(values) != expected:
        raise ValueError(f"expected {expected} comma-separated numbers, got {text!r}")
    return values


def parse_grid(text: str) -> tuple:
    """'START:STOP:COUNT' -> (start, stop, count)"""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like START:STOP:COUNT, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValueError(f"grid must look like START:STOP:COUNT, got {text!r}")
