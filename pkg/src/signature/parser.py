"""Reading and writing the signature text format.

Line 1 is the header ``GAFSV-SIG 1 <writer_id> <label>``; every following
line is ``t x y p`` separated by single spaces, LF line endings.
"""

import math
import re
from pathlib import Path

import numpy as np

from src.config.enums import SignatureLabel
from src.exceptions import MalformedLineError, TimestampOrderError, TooFewSamplesError
from src.signature.models import MIN_SAMPLES, RawSignature

MAGIC = "GAFSV-SIG"
FORMAT_VERSION = "1"

# plain decimal or exponent notation; no underscores, no surrounding whitespace
DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


def _parse_number(token: str, line_number: int) -> float:
    if DECIMAL.fullmatch(token) is None:
        raise MalformedLineError(line_number, f"not a decimal number: {token!r}")
    value = float(token)
    if not math.isfinite(value):
        raise MalformedLineError(line_number, f"non-finite value: {token!r}")
    return value


def _parse_header(line: str) -> tuple[str, SignatureLabel]:
    fields = line.split(" ")
    if len(fields) != 4 or fields[0] != MAGIC:
        raise MalformedLineError(1, f"expected '{MAGIC} {FORMAT_VERSION} <writer_id> <label>'")
    if fields[1] != FORMAT_VERSION:
        raise MalformedLineError(1, f"unsupported format version {fields[1]!r}")
    if not fields[2]:
        raise MalformedLineError(1, "empty writer id")
    if any(ch.isspace() or not ch.isprintable() for ch in fields[2]):
        raise MalformedLineError(1, f"writer id must be a single printable token, got {fields[2]!r}")
    try:
        label = SignatureLabel(fields[3])
    except ValueError:
        allowed = ", ".join(label.value for label in SignatureLabel)
        raise MalformedLineError(1, f"label must be one of {allowed}, got {fields[3]!r}") from None
    return fields[2], label


def parse_signature(text: str) -> RawSignature:
    """Parse a signature document.

    Args:
        text: Full document text

    Returns:
        RawSignature with samples in file order

    Raises:
        MalformedLineError: Bad header, wrong field count, bad number, negative pressure
        TimestampOrderError: A timestamp not strictly greater than the previous one
        TooFewSamplesError: Fewer than four sample lines
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise MalformedLineError(1, "empty document")

    writer_id, label = _parse_header(lines[0])
    rows: list[tuple[float, float, float, float]] = []
    for line_number, line in enumerate(lines[1:], start=2):
        fields = line.split(" ")
        if len(fields) != 4:
            raise MalformedLineError(line_number, f"expected 4 fields 't x y p', got {len(fields)}")
        t, x, y, p = (_parse_number(field, line_number) for field in fields)
        if p < 0:
            raise MalformedLineError(line_number, f"negative pressure {p}")
        if rows and t <= rows[-1][0]:
            raise TimestampOrderError(line_number, f"t={t} does not exceed previous t={rows[-1][0]}")
        rows.append((t, x, y, p))

    if len(rows) < MIN_SAMPLES:
        raise TooFewSamplesError(len(lines), f"need at least {MIN_SAMPLES} samples, got {len(rows)}")

    data = np.asarray(rows, dtype=np.float64)
    return RawSignature(
        t=data[:, 0], x=data[:, 1], y=data[:, 2], p=data[:, 3], writer_id=writer_id, label=label
    )


def serialize_signature(sig: RawSignature) -> str:
    """Render ``sig`` in the text format; parsing the result reproduces it exactly."""
    header = f"{MAGIC} {FORMAT_VERSION} {sig.writer_id} {sig.label.value}\n"
    body = "".join(
        f"{float(t)!r} {float(x)!r} {float(y)!r} {float(p)!r}\n"
        for t, x, y, p in zip(sig.t, sig.x, sig.y, sig.p)
    )
    return header + body


def read_signature(path: Path) -> RawSignature:
    """Read and parse a signature file (UTF-8).

    Raises:
        MalformedLineError: Also for bytes that are not valid UTF-8, naming their line
    """
    raw = path.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = raw.count(b"\n", 0, e.start) + 1
        raise MalformedLineError(line_number, f"invalid UTF-8 in {path.name}") from e
    return parse_signature(text)


def write_signature(path: Path, sig: RawSignature) -> None:
    """Write ``sig`` to ``path`` with LF line endings."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_signature(sig))
