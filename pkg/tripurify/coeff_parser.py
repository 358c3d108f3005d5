"""Parse coefficient files into simplex vectors.

Format: 8 (or 16) decimal numbers separated by whitespace and/or commas,
spread over any number of lines. Text after ``#`` on a line is a comment.

    # C1 .. C8
    0.6, 0, 0, 0.4
    0 0 0 0
"""

from __future__ import annotations

import logging
import re
from pathlib import Path

from pydantic import ValidationError

from tripurify.errors import CoefficientParseError
from tripurify.models import CoefficientVector

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r"[,\s]+")

# Counters for diagnostics
_counters: dict[str, int] = {
    "files_parsed": 0,
    "parse_errors": 0,
}


def get_parser_counters() -> dict[str, int]:
    """Return a copy of parser diagnostic counters."""
    return dict(_counters)


def _reject(message: str) -> CoefficientParseError:
    _counters["parse_errors"] += 1
    logger.warning("Rejected coefficient input: %s", message)
    return CoefficientParseError(message)


def parse_coefficients(raw_text: str) -> CoefficientVector:
    """Parse coefficient text.

    Args:
        raw_text: File contents.

    Returns:
        The validated CoefficientVector.

    Raises:
        CoefficientParseError: On a non-numeric token or a non-simplex vector;
            the message names the violated invariant.
    """
    values: list[float] = []
    for lineno, line in enumerate(raw_text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        for token in _SEPARATORS.split(line):
            if not token:
                continue
            try:
                values.append(float(token))
            except ValueError:
                raise _reject(f"line {lineno}: {token!r} is not a decimal number") from None

    try:
        vector = CoefficientVector(c=tuple(values))
    except ValidationError as exc:
        reason = exc.errors()[0]["msg"].removeprefix("Value error, ")
        raise _reject(reason) from None

    _counters["files_parsed"] += 1
    return vector


def load_coefficients(path: Path) -> CoefficientVector:
    """Read and parse a coefficient file.

    Raises:
        FileNotFoundError: If the file does not exist.
        CoefficientParseError: If its contents are not a simplex vector.
    """
    logger.info("Loading coefficients from %s", path)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coefficients(fh.read())
