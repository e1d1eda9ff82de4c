# Python
from pathlib import Path
import logging
import math

# Local
from .exceptions import InstanceError, InstanceFormatError
from .geometry import Instance, QueryPoint, WeightedPoint


logger = logging.getLogger(__name__)

EXACT_INTEGER_BOUND = 2**53


def format_number(value: float) -> str:
    """Integers without a fractional part, other floats as their shortest repr."""
    if float(value).is_integer() and abs(value) < EXACT_INTEGER_BOUND:
        return str(int(value))
    return repr(float(value))


def _number(token: str, line: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise InstanceFormatError(line, f"not a number: {token!r}")
    if not math.isfinite(value):
        raise InstanceFormatError(line, f"non-finite number: {token!r}")
    return value


def _count(token: str, line: int, name: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise InstanceFormatError(line, f"{name} must be an integer, got {token!r}")
    if value < 0:
        raise InstanceFormatError(line, f"{name} must be non-negative")
    return value


def parse_text(text: str) -> Instance:
    """
    Parse the text form of an instance.

    Line 1 is ``n m k``, then ``n`` lines ``x y w`` for P and ``m`` lines
    ``x y`` for Q. Blank lines and lines starting with ``#`` are skipped; line
    numbers in errors refer to the raw text.

    :param text: File contents.
    :type text: str
    :raises InstanceFormatError: On a malformed line or a count mismatch.
    :return: The parsed instance; the id of a query point is its position in Q.
    :rtype: Instance
    """
    rows = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise InstanceFormatError(1, "missing header 'n m k'")

    header_line, header = rows[0]
    if len(header) != 3:
        raise InstanceFormatError(header_line, "header must be 'n m k'")
    n = _count(header[0], header_line, "n")
    m = _count(header[1], header_line, "m")
    k = _count(header[2], header_line, "k")

    body = rows[1:]
    if len(body) < n + m:
        last = body[-1][0] if body else header_line
        raise InstanceFormatError(
            last, f"expected {n} P lines and {m} Q lines, found {len(body)} lines"
        )
    if len(body) > n + m:
        raise InstanceFormatError(body[n + m][0], "unexpected line after the Q section")

    P = []
    for line, fields in body[:n]:
        if len(fields) != 3:
            raise InstanceFormatError(line, "P line must be 'x y w'")
        x, y, w = (_number(token, line) for token in fields)
        P.append(WeightedPoint(x=x, y=y, w=w))

    Q = []
    for index, (line, fields) in enumerate(body[n:]):
        if len(fields) != 2:
            raise InstanceFormatError(line, "Q line must be 'x y'")
        x, y = (_number(token, line) for token in fields)
        Q.append(QueryPoint(x=x, y=y, id=index))

    try:
        return Instance(P=P, Q=Q, k=k)
    except InstanceError as exc:
        raise InstanceFormatError(header_line, "; ".join(exc.messages))


def parse(path: str | Path) -> Instance:
    """Read an instance file; I/O errors propagate as ``OSError``."""
    inst = parse_text(Path(path).read_text(encoding="utf-8"))
    logger.debug(msg=f"parsed {path}: n={inst.n} m={inst.m} k={inst.k}")
    return inst


def serialize_text(inst: Instance) -> str:
    """
    Text form of ``inst``; Q is written in id order.

    :param inst: Instance to write.
    :type inst: Instance
    :return: File contents ending with a newline.
    :rtype: str
    """
    lines = [f"{inst.n} {inst.m} {inst.k}"]
    lines.extend(
        f"{format_number(p.x)} {format_number(p.y)} {format_number(p.w)}"
        for p in inst.P
    )
    lines.extend(
        f"{format_number(q.x)} {format_number(q.y)}"
        for q in sorted(inst.Q, key=lambda q: q.id)
    )
    return "\n".join(lines) + "\n"


def serialize(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(serialize_text(inst), encoding="utf-8")
