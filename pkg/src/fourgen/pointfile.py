"""Plain-text point-set files.

    # fourgen pointset v1
    field p=2 k=1 modulus=3
    n=3
    1 0 0 0
    ...

Field elements are written as integers.  ``#`` starts a comment.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .gf import parse_header
from .projspace import PointSet, Space

MAGIC = "# fourgen pointset v1"


class PointFileError(ValueError):
    code = "format"

    def __init__(self, msg, line: int | None = None):
        super().__init__(msg if line is None else f"line {line}: {msg}")
        self.line = line


class HeaderError(PointFileError):
    code = "header"


class FieldError(PointFileError):
    code = "field"


class RangeError(PointFileError):
    code = "range"


class DuplicateError(PointFileError):
    code = "duplicate"


def dumps(x: PointSet, comment: str | None = None) -> str:
    lines = [MAGIC]
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines.append(x.field.header())
    lines.append(f"n={x.n}")
    lines += [" ".join(str(int(v)) for v in row) for row in x.coords]
    return "\n".join(lines) + "\n"


def save_pointset(x: PointSet, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(x, comment))


_N_RE = re.compile(r"^n\s*=\s*(\d+)$")


def loads(text: str) -> PointSet:
    raw = text.splitlines()
    if not raw or raw[0].strip() != MAGIC:
        raise HeaderError("missing '# fourgen pointset v1' header", 1)
    body = []
    for no, line in enumerate(raw[1:], start=2):
        s = line.split("#", 1)[0].strip()
        if s:
            body.append((no, s))
    if len(body) < 2:
        raise HeaderError("missing field or dimension line")
    (fno, fline), (nno, nline) = body[0], body[1]
    if not fline.startswith("field"):
        raise HeaderError(f"expected field line, got {fline!r}", fno)
    try:
        field = parse_header(fline)
    except ValueError as e:
        if "bad field header" in str(e):
            raise HeaderError(str(e), fno) from None
        raise FieldError(str(e), fno) from None
    m = _N_RE.match(nline)
    if not m:
        raise HeaderError(f"expected 'n=<dim>', got {nline!r}", nno)
    n = int(m.group(1))
    if n < 1:
        raise HeaderError("dimension must be positive", nno)
    space = Space(n, field)
    rows = []
    for no, s in body[2:]:
        try:
            vals = [int(t) for t in s.split()]
        except ValueError:
            raise PointFileError(f"non-integer entry in {s!r}", no) from None
        if len(vals) != n + 1:
            raise PointFileError(f"expected {n + 1} coordinates, got {len(vals)}", no)
        if any(v < 0 or v >= field.q for v in vals):
            raise RangeError(f"element out of range for GF({field.q})", no)
        if not any(vals):
            raise RangeError("zero vector is not a point", no)
        rows.append((no, vals))
    if not rows:
        raise PointFileError("no points")
    vecs = np.array([v for _, v in rows], dtype=np.int64)
    idx = space.index_of(vecs)
    seen = {}
    for (no, _), i in zip(rows, idx.tolist()):
        if i in seen:
            raise DuplicateError(f"point repeats line {seen[i]}", no)
        seen[i] = no
    return PointSet.from_vectors(space, vecs)


def load_pointset(path) -> PointSet:
    return loads(Path(path).read_text())
