"""Two-level designs with two conditional factor pairs.

A regular design in N = 2**r runs is a list of n column labels, each a
nonzero GF(2) vector of length r encoded as an int (see `gf2`).  Columns
1..4 always play the special roles: columns 1 and 3 are the conditional
factors, columns 2 and 4 their conditioning partners.  Columns 5..n are
ordinary factors.

Run u (an r-bit integer) gets entry +1 in column j when the GF(2) inner
product of u with label b_j is 0, and -1 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

import numpy as np

from . import gf2

__all__ = [
    "DesignError",
    "FormatError",
    "RegularSpec",
    "ConditionReport",
    "expand",
    "as_design_matrix",
    "projection_counts",
    "check_conditions",
    "check_conditions_regular",
    "parse_design_text",
    "load_design_file",
]

MAX_R = 16


class DesignError(ValueError):
    """A design or spec violates a structural requirement."""


class FormatError(ValueError):
    """A design or catalog document cannot be parsed."""


@dataclass(frozen=True)
class RegularSpec:
    """Regular two-level design: r basic factors, n column labels.

    The first four labels are the role columns (conditional pair one,
    then pair two), the rest are ordinary factors.
    """

    r: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(int(c) for c in self.columns))
        if not 2 <= self.r <= MAX_R:
            raise DesignError(f"r={self.r} outside supported range 2..{MAX_R}")
        n = len(self.columns)
        if n < 5:
            raise DesignError(f"need at least 5 columns, got {n}")
        top = (1 << self.r) - 1
        for c in self.columns:
            if not 1 <= c <= top:
                raise DesignError(f"label {c} outside [1, {top}]")
        if len(set(self.columns)) != n:
            raise DesignError("duplicate column labels")
        got = gf2.rank(self.columns)
        if got != self.r:
            raise DesignError(
                f"labels span rank {got} < r={self.r}; runs would collapse"
            )

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def runs(self) -> int:
        return 1 << self.r


def expand(spec: RegularSpec) -> np.ndarray:
    """Expand a spec to its (N, n) matrix with entries +1/-1 (int8)."""
    u = np.arange(spec.runs, dtype=np.uint32)[:, None]
    labels = np.asarray(spec.columns, dtype=np.uint32)[None, :]
    parity = np.bitwise_count(u & labels) & 1
    return (1 - 2 * parity.astype(np.int8)).astype(np.int8)


def as_design_matrix(array: np.ndarray | list) -> np.ndarray:
    """Validate an explicit run matrix: 2-D, entries +1/-1, >= 5 columns."""
    mat = np.asarray(array)
    if mat.ndim != 2:
        raise DesignError(f"design matrix must be 2-D, got shape {mat.shape}")
    if mat.shape[1] < 5:
        raise DesignError(f"need at least 5 columns, got {mat.shape[1]}")
    if not np.all(np.isin(mat, (-1, 1))):
        raise DesignError("design matrix entries must be +1 or -1")
    return mat.astype(np.int8)


def projection_counts(matrix: np.ndarray, columns: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Frequency of every sign combination on the given 1-based columns."""
    sub = matrix[:, [c - 1 for c in columns]]
    counts = {combo: 0 for combo in product((-1, 1), repeat=len(columns))}
    for row in sub:
        counts[tuple(int(v) for v in row)] += 1
    return counts


def _equifrequent(matrix: np.ndarray, columns: tuple[int, ...]) -> bool:
    counts = projection_counts(matrix, columns)
    want = matrix.shape[0] // (1 << len(columns))
    return all(c == want for c in counts.values())


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of the four admissibility conditions.

    strength2   : every column pair is balanced over its 4 combinations
    triples_12  : (col1, col2, j) balanced for every j in 5..n and j=4
    triples_34  : (col3, col4, j) balanced for every j in 5..n and j=2
    quad_1234   : the four role columns are balanced over 16 combinations
    failures    : offending 1-based column tuples, in check order
    """

    strength2: bool
    triples_12: bool
    triples_34: bool
    quad_1234: bool
    failures: tuple[tuple[int, ...], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.strength2 and self.triples_12 and self.triples_34 and self.quad_1234


def check_conditions(matrix: np.ndarray) -> ConditionReport:
    """Check the admissibility conditions on an explicit run matrix."""
    mat = as_design_matrix(matrix)
    n = mat.shape[1]
    failures: list[tuple[int, ...]] = []

    strength2 = True
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if not _equifrequent(mat, (a, b)):
                strength2 = False
                failures.append((a, b))

    triples_12 = True
    for j in (4, *range(5, n + 1)):
        if not _equifrequent(mat, (1, 2, j)):
            triples_12 = False
            failures.append((1, 2, j))

    triples_34 = True
    for j in (2, *range(5, n + 1)):
        if not _equifrequent(mat, (3, 4, j)):
            triples_34 = False
            failures.append((3, 4, j))

    quad_1234 = _equifrequent(mat, (1, 2, 3, 4))
    if not quad_1234:
        failures.append((1, 2, 3, 4))

    return ConditionReport(strength2, triples_12, triples_34, quad_1234, tuple(failures))


def check_conditions_regular(spec: RegularSpec) -> ConditionReport:
    """Label-space shortcut for `check_conditions` on a regular spec.

    A projection of a regular design is equifrequent exactly when the
    projected labels are GF(2) independent; distinctness of nonzero labels
    already gives strength two.
    """
    cols = spec.columns
    n = spec.n
    failures: list[tuple[int, ...]] = []

    strength2 = True
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if cols[a - 1] == cols[b - 1]:
                strength2 = False
                failures.append((a, b))

    triples_12 = True
    for j in (4, *range(5, n + 1)):
        if not gf2.is_independent((cols[0], cols[1], cols[j - 1])):
            triples_12 = False
            failures.append((1, 2, j))

    triples_34 = True
    for j in (2, *range(5, n + 1)):
        if not gf2.is_independent((cols[2], cols[3], cols[j - 1])):
            triples_34 = False
            failures.append((3, 4, j))

    quad_1234 = gf2.is_independent(cols[:4])
    if not quad_1234:
        failures.append((1, 2, 3, 4))

    return ConditionReport(strength2, triples_12, triples_34, quad_1234, tuple(failures))


def parse_design_text(text: str) -> RegularSpec | np.ndarray:
    """Parse a design document.

    Line 1: `N n`.  Then either `labels: c1 .. cn` (regular spec; N must be
    a power of two) or `matrix:` followed by N rows of n entries +1/-1.
    Blank lines and `#` comments are skipped.  Mixing both forms is an
    error.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty design document")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'N n', got {lines[0]!r}")
    try:
        n_runs, n_cols = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"header must be 'N n', got {lines[0]!r}") from exc
    if len(lines) < 2:
        raise FormatError("missing 'labels:' or 'matrix:' section")

    has_labels = any(ln.startswith("labels:") for ln in lines[1:])
    has_matrix = any(ln.startswith("matrix:") for ln in lines[1:])
    if has_labels and has_matrix:
        raise FormatError("document mixes 'labels:' and 'matrix:' forms")
    if not has_labels and not has_matrix:
        raise FormatError("expected a 'labels:' or 'matrix:' section")

    if has_labels:
        if len(lines) != 2:
            raise FormatError("labels form must be exactly two lines")
        body = lines[1][len("labels:"):].split()
        try:
            labels = [int(tok) for tok in body]
        except ValueError as exc:
            raise FormatError(f"bad label in {lines[1]!r}") from exc
        if len(labels) != n_cols:
            raise FormatError(f"header says n={n_cols}, got {len(labels)} labels")
        r = n_runs.bit_length() - 1
        if n_runs <= 0 or (1 << r) != n_runs:
            raise FormatError(f"N={n_runs} is not a power of two")
        try:
            return RegularSpec(r, tuple(labels))
        except DesignError as exc:
            raise FormatError(str(exc)) from exc

    at = next(i for i, ln in enumerate(lines) if ln.startswith("matrix:"))
    rest = lines[at][len("matrix:"):].strip()
    rows = ([rest] if rest else []) + lines[at + 1:]
    if len(rows) != n_runs:
        raise FormatError(f"header says N={n_runs}, got {len(rows)} matrix rows")
    data = []
    for row in rows:
        toks = row.split()
        if len(toks) != n_cols:
            raise FormatError(f"matrix row has {len(toks)} entries, expected {n_cols}")
        try:
            data.append([int(tok) for tok in toks])
        except ValueError as exc:
            raise FormatError(f"bad matrix entry in {row!r}") from exc
    try:
        return as_design_matrix(np.array(data))
    except DesignError as exc:
        raise FormatError(str(exc)) from exc


def load_design_file(path: str | Path) -> RegularSpec | np.ndarray:
    """Read and parse a design document from disk."""
    return parse_design_text(Path(path).read_text())
