"""Plain-text file formats for matrices and arrays.

Matrix file::

    bh h=<H> order=<N>
    cyclic n | abelian n1,n2,... | semidirect m,k,t | table <file>
    <N lines of N space-separated exponents>

Array file::

    array h=<H> dims=n1,n2,...
    <numel/dims[-1] lines of dims[-1] exponents, row-major>

Table paths are resolved relative to the matrix file's directory.
"""

from __future__ import annotations

import math
from pathlib import Path

from .arrays import PerfectArray
from .errors import ButsonError
from .groups import (
    FiniteGroup,
    make_abelian,
    make_cyclic,
    make_from_table,
    make_semidirect,
    parse_cayley_table,
)
from .verify import BhMatrix


def parse_group_spec(spec: str, base_dir: Path | None = None) -> FiniteGroup:
    """Build a group from a descriptor like 'cyclic 4' or 'semidirect 4,2,3'."""
    parts = spec.replace(":", " ").split(None, 1)
    if len(parts) != 2:
        raise ButsonError(f"bad group descriptor {spec!r}")
    kind, arg = parts[0], parts[1].strip()
    if kind == "cyclic":
        return make_cyclic(int(arg))
    if kind == "abelian":
        return make_abelian([int(x) for x in arg.split(",")])
    if kind == "semidirect":
        m, k, t = (int(x) for x in arg.split(","))
        return make_semidirect(m, k, t)
    if kind == "table":
        path = Path(arg)
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        table = parse_cayley_table(path.read_text())
        return make_from_table(table, descriptor=f"table {arg}")
    raise ButsonError(f"unknown group kind {kind!r}")


def format_matrix(M: BhMatrix) -> str:
    lines = [f"bh h={M.h} order={M.group.order}", M.group.descriptor]
    for row in M.exponents:
        lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def write_matrix(M: BhMatrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(M))


def read_matrix(path: str | Path) -> BhMatrix:
    path = Path(path)
    lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "bh":
        raise ButsonError(f"{path}: not a matrix file")
    fields = dict(kv.split("=") for kv in head[1:])
    h, order = int(fields["h"]), int(fields["order"])
    group = parse_group_spec(lines[1], base_dir=path.parent)
    if group.order != order:
        raise ButsonError(f"{path}: order header disagrees with the group")
    rows = [tuple(int(x) % h for x in ln.split()) for ln in lines[2 : 2 + order]]
    if len(rows) != order or any(len(r) != order for r in rows):
        raise ButsonError(f"{path}: expected {order} rows of {order} exponents")
    return BhMatrix(h, group, tuple(rows))


def format_array(A: PerfectArray) -> str:
    dims = ",".join(str(d) for d in A.dims)
    lines = [f"array h={A.h} dims={dims}"]
    width = A.dims[-1]
    flat = A.exponents
    for i in range(0, len(flat), width):
        lines.append(" ".join(str(e) for e in flat[i : i + width]))
    return "\n".join(lines) + "\n"


def write_array(A: PerfectArray, path: str | Path) -> None:
    Path(path).write_text(format_array(A))


def read_array(path: str | Path) -> PerfectArray:
    path = Path(path)
    lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != "array":
        raise ButsonError(f"{path}: not an array file")
    fields = dict(kv.split("=") for kv in head[1:])
    h = int(fields["h"])
    dims = tuple(int(x) for x in fields["dims"].split(","))
    flat = [int(x) % h for ln in lines[1:] for x in ln.split()]
    if len(flat) != math.prod(dims):
        raise ButsonError(f"{path}: entry count does not match dims")
    return PerfectArray(dims, h, tuple(flat))
