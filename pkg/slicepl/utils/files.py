import csv
import os
from typing import Any, Dict, Iterable, List, Sequence

from loguru import logger


def decimal(value: Any) -> str:
    """ Shortest decimal string which reads back as the same float. """
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def write_csv(path: str, fieldnames: Sequence[str], rows: Iterable[Dict[str, Any]]) -> str:
    """
    Writes rows to a CSV file, creating its directory when needed. Floats are written in their shortest round-trip
    form.
    """
    dest = os.path.dirname(path)
    if dest:
        os.makedirs(dest, exist_ok=True)
    formatted: List[Dict[str, str]] = [
        {key: decimal(row[key]) for key in fieldnames} for row in rows
    ]
    with open(path, "w", newline="", encoding="utf-8") as fp:
        writer = csv.DictWriter(fp, fieldnames=list(fieldnames), lineterminator="\n")
        writer.writeheader()
        writer.writerows(formatted)
    logger.debug(f"wrote {len(formatted)} rows to {path=}")
    return path
