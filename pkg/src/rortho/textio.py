"""Plain-text grid files.

A grid is a header line ``"k n"`` followed by k lines of n space-separated
symbols.  A pair file holds two grids separated by one blank line.
Certificates prepend a comment line ``# n=<n> mode=<mode> r=<r> seed=<s>``.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np

from .core import LatinGrid, validate
from .errors import ParseError


def format_grid(A: LatinGrid) -> str:
    lines = [f"{A.n_rows} {A.n_cols}"]
    lines += [" ".join(str(x) for x in row) for row in A.rows()]
    return "\n".join(lines) + "\n"


def format_grids(grids: list[LatinGrid], meta: dict | None = None) -> str:
    head = ""
    if meta:
        head = "# " + " ".join(f"{k}={v}" for k, v in meta.items()) + "\n"
    return head + "\n".join(format_grid(g) for g in grids)


def parse_grids(text: str) -> tuple[dict[str, str], list[LatinGrid]]:
    """Parse one or more grids plus ``key=value`` fields from comment lines."""
    meta: dict[str, str] = {}
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            for tok in line[1:].split():
                if "=" in tok:
                    key, _, val = tok.partition("=")
                    meta[key] = val
            continue
        if line:
            lines.append((lineno, line.split()))

    grids = []
    pos = 0
    while pos < len(lines):
        lineno, head = lines[pos]
        try:
            k, n = (int(t) for t in head)
        except ValueError:
            raise ParseError(f"line {lineno}: expected header 'k n', got {' '.join(head)!r}") from None
        if k < 0 or n < 1:
            raise ParseError(f"line {lineno}: bad dimensions {k} x {n}")
        body = lines[pos + 1 : pos + 1 + k]
        if len(body) < k:
            raise ParseError(f"line {lineno}: expected {k} rows, found {len(body)}")
        rows = []
        for rl, toks in body:
            if len(toks) != n:
                raise ParseError(f"line {rl}: expected {n} entries, found {len(toks)}")
            try:
                rows.append([int(t) for t in toks])
            except ValueError:
                raise ParseError(f"line {rl}: non-integer entry") from None
        if k == 0:
            grids.append(validate(np.zeros((0, n), dtype=np.int64), order=n))
        else:
            grids.append(validate(rows, order=max(k, n)))
        pos += 1 + k
    if not grids:
        raise ParseError("no grid found")
    return meta, grids


def read_grids(path: str | os.PathLike) -> tuple[dict[str, str], list[LatinGrid]]:
    return parse_grids(Path(path).read_text())


def write_text_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
