"""Aliasing-severity sequences (K) for conditional two-pair models.

For effect classes (s, l) and first-order classes (h, 1), define

    K_sl(h) = N**-2 tr[X_h1^T X_sl X_sl^T X_h1],

the summed squared inner products between the class-(h,1) and class-(s,l)
interaction contrasts.  All values are computed and stored as the exact
integers N**2 * K_sl(h); for a regular design each is N**2 times an alias
count.  A design's K sequence lists, for l = 2..n-2, the six entries

    K_0l(0), K_0l(1), K_1l(0), K_1l(1), K_2l(0), K_2l(1)

and designs are ranked by lexicographic comparison of these sequences.

Two routes are provided.  The direct route materializes the X blocks.
The fast route never builds the blocks: with d_uj the (u, j) design entry
and c_uw the number of agreeing ordinary columns between runs u and w,
the Gram matrices X_sl X_sl^T have entries that are short combinations of
sign products d_ui d_wi (i <= 4) and the polynomials Q_l(c) defined by

    Q_0 = 1,  Q_1(c) = 2c - (n-4),
    Q_l(c) = [ (2c - (n-4)) Q_{l-1}(c) - (n-l-2) Q_{l-2}(c) ] / l,

which are always integral.  Both routes agree entry for entry, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .designs import as_design_matrix
from .modelmat import build_x_block

__all__ = [
    "KSequence",
    "entry_labels",
    "compare_k",
    "k_direct",
    "k_sequence_direct",
    "q_polynomial",
    "q_polynomial_table",
    "agreement_counts",
    "q_value",
    "FastEvaluator",
    "k_sequence_fast",
]

# (s, h) per position within one l-block of the sequence.
_BLOCK_ORDER = ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1))


def entry_labels(n: int) -> list[str]:
    """Sequence entry names, 'K{s}{l}({h})', for l = 2..n-2."""
    return [f"K{s}{l}({h})" for l in range(2, n - 1) for s, h in _BLOCK_ORDER]


@dataclass(frozen=True)
class KSequence:
    """Exact aliasing sequence of one design: values are N**2 * K."""

    runs: int
    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        want = 6 * (self.n - 3)
        if len(self.values) != want:
            raise ValueError(f"expected {want} entries for n={self.n}, got {len(self.values)}")

    def labels(self) -> list[str]:
        return entry_labels(self.n)

    def alias_counts(self) -> tuple[int, ...] | None:
        """Values divided by N**2 when all are divisible (regular designs)."""
        nsq = self.runs * self.runs
        if any(v % nsq for v in self.values):
            return None
        return tuple(v // nsq for v in self.values)


def compare_k(a: KSequence, b: KSequence) -> int:
    """Lexicographic order: -1, 0 or 1.  Sequences must be comparable."""
    if a.n != b.n or a.runs != b.runs:
        raise ValueError("K sequences with different n or run size are not comparable")
    if a.values < b.values:
        return -1
    if a.values > b.values:
        return 1
    return 0


def k_direct(matrix: np.ndarray, s: int, l: int, h: int) -> int:
    """N**2 * K_sl(h) by materializing the X blocks (reference route)."""
    mat = as_design_matrix(matrix)
    gram = build_x_block(mat, h, 1).T @ build_x_block(mat, s, l)
    return int((gram.astype(np.int64) ** 2).sum())


def k_sequence_direct(matrix: np.ndarray) -> KSequence:
    """Full K sequence by the direct route."""
    mat = as_design_matrix(matrix)
    n = mat.shape[1]
    xh = [build_x_block(mat, h, 1).T for h in (0, 1)]
    values: list[int] = []
    for l in range(2, n - 1):
        for s, h in _BLOCK_ORDER:
            gram = xh[h] @ build_x_block(mat, s, l)
            values.append(int((gram.astype(np.int64) ** 2).sum()))
    return KSequence(mat.shape[0], n, tuple(values))


def q_polynomial(l: int, c: int, n: int) -> int:
    """Q_l(c) for a design with n factors (m = n-4 ordinary columns).

    Exact integers; raises if the recursion ever fails to divide, which
    would indicate a bookkeeping bug rather than a data problem.
    """
    m = n - 4
    if l < 0:
        return 0
    if not 0 <= c <= m:
        raise ValueError(f"c={c} outside 0..{m}")
    prev, cur = 1, 2 * c - m
    if l == 0:
        return prev
    for k in range(2, l + 1):
        num = (2 * c - m) * cur - (m + 2 - k) * prev
        q, rem = divmod(num, k)
        if rem:
            raise AssertionError(f"Q recursion not integral at l={k}, c={c}, n={n}")
        prev, cur = cur, q
    return cur


def q_polynomial_table(n: int, lmax: int) -> np.ndarray:
    """Array Q[l, c] for l = 0..lmax, c = 0..n-4 (int64)."""
    m = n - 4
    table = np.empty((lmax + 1, m + 1), dtype=np.int64)
    for c in range(m + 1):
        for l in range(lmax + 1):
            table[l, c] = q_polynomial(l, c, n)
    return table


def agreement_counts(matrix: np.ndarray) -> np.ndarray:
    """c_uw: number of ordinary columns (5..n) where runs u and w agree."""
    mat = as_design_matrix(matrix)
    tail = mat[:, 4:].astype(np.int64)
    m = tail.shape[1]
    return (m + tail @ tail.T) // 2


def q_value(matrix: np.ndarray, s: int, l: int, u: int, w: int) -> int:
    """Entry (u, w) of the Gram matrix X_sl X_sl^T, from the formulas.

    The second-order terms keep the diagonal equal to the class sizes
    (e.g. 4*C(n-3, l-1) for s=1): the free conditioning bit of each
    active conditional factor contributes one sign factor, and the count
    positions it shares with the ordinary columns split across Q_{l-1}
    and Q_{l-2}.
    """
    mat = as_design_matrix(matrix)
    n = mat.shape[1]
    d1, d2, d3, d4 = (int(mat[u, i]) * int(mat[w, i]) for i in range(4))
    c = int(agreement_counts(mat)[u, w])

    def q(k: int) -> int:
        return q_polynomial(k, c, n)

    if s == 0:
        return d2 * d4 * q(l - 2) + (d2 + d4) * q(l - 1) + q(l)
    if s == 1:
        first = (d1 + d1 * d2 + d3 + d3 * d4) * q(l - 1)
        second = (d1 * d4 + d1 * d2 * d4 + d2 * d3 + d2 * d3 * d4) * q(l - 2)
        return first + second
    if s == 2:
        return d1 * d3 * (1 + d2) * (1 + d4) * q(l - 2)
    raise ValueError(f"s must be 0, 1 or 2, got {s}")


class FastEvaluator:
    """Per-design state for the fast route, evaluable one l-block at a time.

    Precomputes the four role-column sign-product matrices and the Q
    lookup table once; `block(l)` then costs a few N x N integer maps.
    The lazy shape lets searches stop after a losing prefix.
    """

    def __init__(self, matrix: np.ndarray):
        mat = as_design_matrix(matrix)
        self.runs, self.n = mat.shape
        cols = mat.astype(np.int64)
        s1, s2, s3, s4 = (np.outer(cols[:, i], cols[:, i]) for i in range(4))
        self._a0 = s2 * s4
        self._a1 = s2 + s4
        self._b1 = s1 * (1 + s2) + s3 * (1 + s4)
        self._b2 = s1 * s4 * (1 + s2) + s2 * s3 * (1 + s4)
        self._c2 = s1 * s3 * (1 + s2) * (1 + s4)
        self._c = agreement_counts(mat)
        self._qtab = q_polynomial_table(self.n, self.n - 2)
        self._gathered: dict[int, np.ndarray] = {}
        self._q01 = self._a1 + self._gather(1)
        self._q11 = self._b1

    def _gather(self, l: int) -> np.ndarray:
        """Q_l evaluated entrywise at the agreement counts (0 for l < 0)."""
        if l < 0:
            return np.zeros_like(self._c)
        got = self._gathered.get(l)
        if got is None:
            got = self._qtab[l][self._c]
            self._gathered[l] = got
        return got

    def block(self, l: int) -> tuple[int, int, int, int, int, int]:
        """The six sequence entries for one l, in standard order."""
        if not 2 <= l <= self.n - 2:
            raise ValueError(f"l={l} outside 2..{self.n - 2}")
        qm2, qm1, q0 = self._gather(l - 2), self._gather(l - 1), self._gather(l)
        q_0l = self._a0 * qm2 + self._a1 * qm1 + q0
        q_1l = self._b1 * qm1 + self._b2 * qm2
        q_2l = self._c2 * qm2
        return (
            int((self._q01 * q_0l).sum()),
            int((self._q11 * q_0l).sum()),
            int((self._q01 * q_1l).sum()),
            int((self._q11 * q_1l).sum()),
            int((self._q01 * q_2l).sum()),
            int((self._q11 * q_2l).sum()),
        )

    def sequence(self) -> KSequence:
        values: list[int] = []
        for l in range(2, self.n - 1):
            values.extend(self.block(l))
        return KSequence(self.runs, self.n, tuple(values))


def k_sequence_fast(matrix: np.ndarray) -> KSequence:
    """Full K sequence by the fast route; equals `k_sequence_direct`."""
    return FastEvaluator(matrix).sequence()
