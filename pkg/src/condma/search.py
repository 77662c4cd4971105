"""Minimum aberration search over regular two-level designs.

Two modes:

* ``exhaustive`` (16 runs): fix the four role columns at labels
  (1, 2, 4, 8) and enumerate every subset of the remaining labels as the
  traditional columns.  This loses nothing: the admissibility conditions
  force the role columns to be independent, and any independent 4-tuple
  maps onto (1, 2, 4, 8) by an invertible GF(2) relabeling of the basic
  factors, which permutes runs and therefore preserves every K entry.
* ``catalog``: walk a catalog of class representatives and try every
  ordered assignment of four of each design's columns to the roles,
  keeping assignments that satisfy the admissibility conditions.  With
  symmetry pruning on, assignments that merely swap the two
  conditional/conditioning pairs are generated once (K is invariant
  under the swap).

Candidates are compared by exact lexicographic order on the integer
K-sequence.  Evaluation is incremental: K entries are produced block by
block and a candidate is abandoned as soon as its prefix exceeds the
best sequence seen so far.  All K-equal minima are returned.

Work is split into chunks evaluated by independent processes.  Each
chunk reports its own exact minimum and the candidates achieving it, so
the merged result is identical for any worker count or chunk order.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .aberration import FastEvaluator, KSequence
from .catalogs import CatalogFile, bundled_catalog, parse_catalog
from .designs import DesignError, RegularSpec, check_conditions_regular, expand

_ROLES = (1, 2, 4, 8)
_CHUNK = 20000


@dataclass(frozen=True)
class SearchTask:
    """What to search: run size, factor count, mode, and parallelism.

    ``exhaustive`` mode is intended for 16 runs, where it is fast and
    provably complete; pass ``force=True`` to run it anyway at 32 runs.
    ``catalog`` mode reads ``catalog_path`` or, when that is None, the
    bundled catalog for the run size.  ``symmetry_pruning`` generates
    each pair-swapped role assignment once; it changes nothing in the
    result and exists so the equivalence can be switched off and tested.
    """

    runs: int
    n: int
    mode: str = "exhaustive"
    catalog_path: str | None = None
    symmetry_pruning: bool = True
    workers: int = 1
    force: bool = False

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "catalog"):
            raise DesignError(f"unknown search mode {self.mode!r}")
        r = self.runs.bit_length() - 1
        if self.runs < 16 or self.runs != 1 << r:
            raise DesignError(f"run size must be a power of two >= 16, got {self.runs}")
        if self.n < 5:
            raise DesignError("need at least five factors")
        if self.n > (1 << r) - 1:
            raise DesignError(f"n={self.n} infeasible: only {(1 << r) - 1} distinct labels exist")
        if self.mode == "exhaustive" and self.runs != 16 and not self.force:
            raise DesignError("exhaustive mode is guarded to 16 runs; pass force=True to override")
        if self.workers < 1:
            raise DesignError("workers must be >= 1")

    @property
    def r(self) -> int:
        return self.runs.bit_length() - 1


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a search.

    ``best_k`` is None when no candidate satisfied the admissibility
    conditions.  ``minimizers`` holds every condition-passing candidate
    whose K-sequence equals ``best_k`` exactly, in canonical form and
    order.  ``candidates_examined`` counts candidates that reached K
    evaluation; ``pruned`` counts candidates dropped beforehand by the
    admissibility filter (or rank filter).  Both counters are partition
    independent; only ``wall_time`` varies between reruns.
    """

    best_k: KSequence | None
    minimizers: tuple[RegularSpec, ...]
    candidates_examined: int
    pruned: int
    wall_time: float

    @property
    def found(self) -> bool:
        return self.best_k is not None


def _catalog_for(task: SearchTask) -> CatalogFile:
    if task.catalog_path is not None:
        cat = parse_catalog(task.catalog_path)
    else:
        cat = bundled_catalog(task.runs)
    if cat.runs != task.runs:
        raise DesignError(f"catalog is for {cat.runs} runs, task wants {task.runs}")
    return cat


def _role_assignments(
    columns: Sequence[int], symmetry_pruning: bool
) -> Iterator[tuple[int, ...]]:
    """Ordered label tuples (roles first, tail sorted) for one column set."""
    colset = set(columns)
    for roles in itertools.permutations(columns, 4):
        if symmetry_pruning and (roles[0], roles[1]) > (roles[2], roles[3]):
            continue
        tail = sorted(colset.difference(roles))
        yield roles + tuple(tail)


def _raw_candidates(task: SearchTask) -> Iterator[tuple[int, ...]]:
    """Candidate label tuples before the admissibility filter."""
    if task.mode == "exhaustive":
        pool = [x for x in range(1, 1 << task.r) if x not in _ROLES]
        for tail in itertools.combinations(pool, task.n - 4):
            yield _ROLES + tail
    else:
        cat = _catalog_for(task)
        for columns in cat.designs_for(task.n):
            yield from _role_assignments(columns, task.symmetry_pruning)


def enumerate_candidates(task: SearchTask) -> Iterator[RegularSpec]:
    """Stream candidate designs for a task.

    Exhaustive mode streams every tail subset whose labels complete the
    rank (always true at 16 runs); catalog mode streams only role
    assignments passing the admissibility conditions.
    """
    for labels in _raw_candidates(task):
        try:
            spec = RegularSpec(r=task.r, columns=labels)
        except DesignError:
            continue
        if task.mode == "catalog" and not check_conditions_regular(spec).ok:
            continue
        yield spec


def _evaluate_chunk(
    args: tuple[int, list[tuple[int, ...]]],
) -> tuple[tuple[int, ...] | None, list[tuple[int, ...]], int, int]:
    """Evaluate one chunk of raw candidates.

    Returns (best K values or None, labels of chunk-level K-minima,
    examined count, pruned count).  The chunk keeps every candidate tied
    with its own minimum, so merging chunk results loses no global tie.
    """
    r, chunk = args
    best: tuple[int, ...] | None = None
    ties: list[tuple[int, ...]] = []
    examined = 0
    pruned = 0
    for labels in chunk:
        try:
            spec = RegularSpec(r=r, columns=labels)
        except DesignError:
            pruned += 1
            continue
        if not check_conditions_regular(spec).ok:
            pruned += 1
            continue
        examined += 1
        values = _k_values_up_to(expand(spec), spec.n, best)
        if values is None:
            continue
        if best is None or values < best:
            best = values
            ties = [labels]
        elif values == best:
            ties.append(labels)
    return best, ties, examined, pruned


def _k_values_up_to(
    matrix, n: int, bound: tuple[int, ...] | None
) -> tuple[int, ...] | None:
    """Full K values, or None once the prefix exceeds `bound`.

    Lexicographic comparison is decided at the first differing entry, so
    a candidate whose prefix already compares greater can never beat the
    bound, and one whose prefix compares smaller always does.
    """
    ev = FastEvaluator(matrix)
    values: list[int] = []
    decided_better = False
    for l in range(2, n - 1):
        values.extend(ev.block(l))
        if bound is None or decided_better:
            continue
        k = len(values)
        prefix = tuple(values)
        head = bound[:k]
        if prefix > head:
            return None
        if prefix < head:
            decided_better = True
    return tuple(values)


def canonicalize(minimizers: Iterable[RegularSpec]) -> tuple[RegularSpec, ...]:
    """Sort each spec's traditional columns, then sort and dedupe the list."""
    seen = set()
    out: list[RegularSpec] = []
    for spec in minimizers:
        labels = spec.columns[:4] + tuple(sorted(spec.columns[4:]))
        if labels in seen:
            continue
        seen.add(labels)
        out.append(RegularSpec(r=spec.r, columns=labels))
    out.sort(key=lambda s: s.columns)
    return tuple(out)


def _chunked(stream: Iterator[tuple[int, ...]], size: int) -> Iterator[list[tuple[int, ...]]]:
    while True:
        block = list(itertools.islice(stream, size))
        if not block:
            return
        yield block


def _merge(
    results: Iterable[tuple[tuple[int, ...] | None, list[tuple[int, ...]], int, int]],
) -> tuple[tuple[int, ...] | None, list[tuple[int, ...]], int, int]:
    best: tuple[int, ...] | None = None
    ties: list[tuple[int, ...]] = []
    examined = 0
    pruned = 0
    for cb, ct, ce, cp in results:
        examined += ce
        pruned += cp
        if cb is None:
            continue
        if best is None or cb < best:
            best = cb
            ties = list(ct)
        elif cb == best:
            ties.extend(ct)
    return best, ties, examined, pruned


def _run_chunks(
    chunks: Iterator[list[tuple[int, ...]]], r: int, workers: int
) -> tuple[tuple[int, ...] | None, list[tuple[int, ...]], int, int]:
    if workers == 1:
        return _merge(_evaluate_chunk((r, chunk)) for chunk in chunks)
    results = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = set()
        for chunk in chunks:
            pending.add(pool.submit(_evaluate_chunk, (r, chunk)))
            if len(pending) >= workers * 2:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                results.extend(f.result() for f in done)
        done, _ = wait(pending)
        results.extend(f.result() for f in done)
    return _merge(results)


def search_ma(task: SearchTask) -> SearchResult:
    """Find all minimum aberration designs for a task.

    The result is deterministic for any worker count: chunks are merged
    by exact integer comparison and the minimizer list is canonically
    sorted.  An empty admissible stream yields a result with
    ``best_k=None`` rather than an error.
    """
    t0 = time.perf_counter()
    best, ties, examined, pruned = _run_chunks(
        _chunked(_raw_candidates(task), _CHUNK), task.r, task.workers
    )
    wall = time.perf_counter() - t0
    if best is None:
        return SearchResult(None, (), examined, pruned, wall)
    return SearchResult(
        best_k=KSequence(runs=task.runs, n=task.n, values=best),
        minimizers=canonicalize(RegularSpec(r=task.r, columns=t) for t in ties),
        candidates_examined=examined,
        pruned=pruned,
        wall_time=wall,
    )


def search_within_columns(runs: int, columns: Sequence[int], workers: int = 1) -> SearchResult:
    """Best role assignment using only the given column set.

    This is catalog mode restricted to a single parent design: every
    ordered choice of four role columns (pair swaps deduplicated) is
    evaluated.  Used to vet benchmark rows too large for a full search.
    """
    r = runs.bit_length() - 1
    if len(set(columns)) != len(columns):
        raise DesignError("repeated column label")
    t0 = time.perf_counter()
    stream = _role_assignments(tuple(columns), symmetry_pruning=True)
    best, ties, examined, pruned = _run_chunks(_chunked(stream, _CHUNK), r, workers)
    wall = time.perf_counter() - t0
    if best is None:
        return SearchResult(None, (), examined, pruned, wall)
    return SearchResult(
        best_k=KSequence(runs=runs, n=len(columns), values=best),
        minimizers=canonicalize(RegularSpec(r=r, columns=t) for t in ties),
        candidates_examined=examined,
        pruned=pruned,
        wall_time=wall,
    )
