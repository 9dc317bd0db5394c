"""Finite quandles stored as Cayley tables.

Storage convention: table[x][y] = s_x(y), so row x is the symmetry at x,
acting on the column index.  (The binary-operator form y * x would transpose
this; everything in this package reads tables row-first.)

The axioms, in table form:

    (Q1) table[x][x] == x for every x
    (Q2) every row is a permutation of {0..n-1}
    (Q3) table[x][table[y][z]] == table[table[x][y]][table[x][z]] for all x,y,z
"""

from __future__ import annotations

import json
from typing import NamedTuple


class FormatError(ValueError):
    """Input text does not parse as a quandle file."""


class AxiomViolation(NamedTuple):
    axiom: str  # "Q1" | "Q2" | "Q3"
    witness: tuple[int, ...]


class InvalidQuandleError(ValueError):
    """A table is structurally fine but breaks a quandle axiom."""

    def __init__(self, violations):
        self.violations = list(violations)
        first = ", ".join(
            f"{v.axiom} at {v.witness}" for v in self.violations[:3]
        )
        more = "" if len(self.violations) <= 3 else f" (+{len(self.violations) - 3} more)"
        super().__init__(f"table violates quandle axioms: {first}{more}")


def _check_shape(table) -> tuple[tuple[int, ...], ...]:
    """Normalize to a tuple-of-tuples, rejecting malformed input."""
    rows = tuple(tuple(row) for row in table)
    n = len(rows)
    if n == 0:
        raise ValueError("empty table: quandles must have at least one element")
    for x, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {x} has {len(row)} entries, expected {n}")
        for y, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"entry [{x}][{y}] = {v!r} is not an integer")
            if not 0 <= v < n:
                raise ValueError(f"entry [{x}][{y}] = {v} out of range 0..{n - 1}")
    return rows


class Quandle:
    """An n-element quandle as an immutable Cayley table.

    Instances are assumed to satisfy the axioms; build them through the
    constructors here or through `as_quandle`, which validates first.
    """

    __slots__ = ("n", "table")

    def __init__(self, table):
        rows = _check_shape(table)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "table", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Quandle is immutable")

    def row(self, x: int) -> tuple[int, ...]:
        """The symmetry at x as an image tuple."""
        return self.table[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, Quandle) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        return f"Quandle(n={self.n})"


def validate_quandle(table) -> list[AxiomViolation]:
    """Check the three axioms, returning every violation with a witness.

    Malformed input (non-square table, out-of-range or non-integer entries)
    raises ValueError before any axiom is examined.
    """
    rows = _check_shape(table)
    n = len(rows)
    violations = []
    full = set(range(n))
    for x in range(n):
        if rows[x][x] != x:
            violations.append(AxiomViolation("Q1", (x,)))
        if set(rows[x]) != full:
            violations.append(AxiomViolation("Q2", (x,)))
    # (Q3) is only meaningful on rows that are permutations; a non-bijective
    # row is already reported and would produce noise triples here.
    bad_rows = {v.witness[0] for v in violations if v.axiom == "Q2"}
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            if x in bad_rows or y in bad_rows or rows[x][y] in bad_rows:
                continue
            ry = rows[y]
            rxy = rows[rx[y]]
            for z in range(n):
                if rx[ry[z]] != rxy[rx[z]]:
                    violations.append(AxiomViolation("Q3", (x, y, z)))
    return violations


def as_quandle(table) -> Quandle:
    """Validate a raw table and wrap it; raises InvalidQuandleError on failure."""
    violations = validate_quandle(table)
    if violations:
        raise InvalidQuandleError(violations)
    return Quandle(table)


def trivial_quandle(n: int) -> Quandle:
    """Every symmetry is the identity."""
    if n < 1:
        raise ValueError("quandle cardinality must be positive")
    row = tuple(range(n))
    return Quandle((row,) * n)


def dihedral_quandle(n: int) -> Quandle:
    """Z_n with s_x(y) = 2x - y: the n-th roots of unity under point reflection."""
    if n < 1:
        raise ValueError("quandle cardinality must be positive")
    return Quandle(
        tuple(tuple((2 * x - y) % n for y in range(n)) for x in range(n))
    )


def direct_product(X: Quandle, Y: Quandle) -> Quandle:
    """Componentwise quandle on pairs, flattened row-major: (x, y) -> x*|Y| + y."""
    m = Y.n
    xt, yt = X.table, Y.table
    table = []
    for x in range(X.n):
        for y in range(m):
            sx, sy = xt[x], yt[y]
            table.append(
                tuple(
                    sx[x2] * m + sy[y2] for x2 in range(X.n) for y2 in range(m)
                )
            )
    return Quandle(table)


# ---------------------------------------------------------------------------
# Serialization.  Canonical JSON form: {"n": <int>, "table": [[...], ...]}.
# Plain-text alternative: first line n, then n lines of n integers.
# ---------------------------------------------------------------------------


def quandle_to_obj(X: Quandle) -> dict:
    return {"n": X.n, "table": [list(row) for row in X.table]}


def dumps_quandle(X: Quandle) -> str:
    return json.dumps(quandle_to_obj(X), separators=(",", ":"))


def parse_quandle_json(text: str) -> list[list[int]]:
    """Parse the JSON form into a raw table, without axiom checks."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object with keys 'n' and 'table'")
    if "table" not in obj:
        raise FormatError("missing key 'table'")
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise FormatError("'table' must be a list of rows")
    if "n" in obj and obj["n"] != len(table):
        raise FormatError(f"'n' is {obj['n']} but table has {len(table)} rows")
    return table


def parse_quandle_text(text: str) -> list[list[int]]:
    """Parse the plain-text form into a raw table, without axiom checks."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise FormatError("line 1: empty input")
    header = lines[idx].split()
    if len(header) != 1:
        raise FormatError(f"line {idx + 1}: expected a single integer (the order)")
    try:
        n = int(header[0])
    except ValueError:
        raise FormatError(f"line {idx + 1}: {header[0]!r} is not an integer") from None
    if n < 1:
        raise FormatError(f"line {idx + 1}: order must be positive")
    table = []
    row_line = idx
    for r in range(n):
        row_line += 1
        if row_line >= len(lines):
            raise FormatError(f"line {row_line + 1}: expected row {r}, found end of input")
        parts = lines[row_line].split()
        if len(parts) != n:
            raise FormatError(
                f"line {row_line + 1}: expected {n} entries, found {len(parts)}"
            )
        row = []
        for c, tok in enumerate(parts):
            try:
                row.append(int(tok))
            except ValueError:
                raise FormatError(
                    f"line {row_line + 1}, entry {c + 1}: {tok!r} is not an integer"
                ) from None
        table.append(row)
    for extra in lines[row_line + 1 :]:
        if extra.strip():
            raise FormatError(f"line {row_line + 2}: trailing data after {n} rows")
        row_line += 1
    return table


def parse_quandle(text: str) -> list[list[int]]:
    """Detect JSON vs plain text by the first non-space character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_quandle_json(text)
    return parse_quandle_text(text)


def load_quandle_table(path) -> list[list[int]]:
    with open(path, encoding="utf-8") as fh:
        return parse_quandle(fh.read())


def load_quandle(path) -> Quandle:
    """Parse and fully validate a quandle file."""
    return as_quandle(load_quandle_table(path))
