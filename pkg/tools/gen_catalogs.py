"""Generate the bundled design catalogs (one representative per class).

Two regular designs are equivalent when an invertible GF(2) change of
basic factors maps one column set onto the other.  This script builds one
representative n-subset of nonzero labels per equivalence class, for
r = 4 (16 runs) and r = 5 (32 runs), by orderly growth: extend every
class representative at size n-1 by every possible new column, reduce to
a canonical form, and deduplicate.  Growth is complete: removing any
column of an (n)-set leaves an (n-1)-set whose class was already present.

Canonical form: a set spanning GF(2)^d is mapped through every invertible
transform implicitly, choosing preimages of the unit vectors depth-first
to maximize the membership string chi(1), chi(2), ..., chi(2^d - 1); the
maximizing image is the representative.  Rank-deficient sets are first
compressed onto a basis of their span, so intermediate growth levels stay
small.

Usage: python tools/gen_catalogs.py [outdir]   (default src/condma/data)
"""

from __future__ import annotations

import sys
from pathlib import Path


def rank_and_basis(labels: tuple[int, ...]) -> tuple[int, list[int]]:
    """Rank plus a greedy independent subset of `labels`."""
    basis: list[int] = []
    pivots: list[int] = []
    for v in labels:
        w = v
        for p in pivots:
            w = min(w, w ^ p)
        if w:
            pivots.append(w)
            basis.append(v)
    return len(basis), basis


def compress_to_span(labels: tuple[int, ...]) -> tuple[int, int]:
    """(d, bitmask of the set rewritten in coordinates of its own span)."""
    d, basis = rank_and_basis(labels)
    # Echelonize the basis, tracking which original vectors combine.
    rows: list[tuple[int, int]] = []  # (reduced vector, coordinate mask)
    for i, v in enumerate(basis):
        c = 1 << i
        for rv, rc in rows:
            if v ^ rv < v:
                v ^= rv
                c ^= rc
        rows.append((v, c))
        rows.sort(reverse=True)
    mask = 0
    for x in labels:
        c = 0
        for rv, rc in rows:
            if x ^ rv < x:
                x ^= rv
                c ^= rc
        assert x == 0, "label outside its own span"
        mask |= 1 << (c - 1)
    return d, mask


def canonical_mask(mask: int, d: int) -> int:
    """Max membership string over all invertible GF(2)^d transforms."""
    total = (1 << d) - 1
    best: list[int] | None = None

    def rec(depth: int, pre: list[int], span: set[int], prefix: list[int]) -> None:
        nonlocal best
        if depth == d:
            if best is None or prefix > best:
                best = list(prefix)
            return
        scored: dict[tuple[int, ...], list[int]] = {}
        for u in range(1, total + 1):
            if u in span:
                continue
            seg = tuple((mask >> ((u ^ p) - 1)) & 1 for p in pre)
            scored.setdefault(seg, []).append(u)
        top = max(scored)
        candidate = prefix + list(top)
        if best is not None:
            head = best[: len(candidate)]
            if candidate < head:
                return
        for u in scored[top]:
            rec(
                depth + 1,
                pre + [u ^ p for p in pre],
                span | {u ^ s for s in span},
                candidate,
            )

    rec(0, [0], {0}, [])
    assert best is not None
    out = 0
    for i, bit in enumerate(best):
        if bit:
            out |= 1 << i
    return out


def canonical_key(labels: tuple[int, ...]) -> tuple[int, int]:
    """(rank, canonical bitmask) identifying the class of a label set."""
    d, mask = compress_to_span(labels)
    return d, canonical_mask(mask, d)


def mask_to_labels(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i + 1)
        mask >>= 1
        i += 1
    return tuple(out)


def grow_classes(max_d: int, max_n: int) -> dict[int, dict[int, list[int]]]:
    """classes[n][d] = canonical masks of all n-column classes of rank d."""
    levels: dict[int, dict[tuple[int, int], int]] = {1: {(1, 1): 1}}
    for n in range(2, max_n + 1):
        nxt: dict[tuple[int, int], int] = {}
        for d, mask in levels[n - 1]:
            labels = mask_to_labels(mask)
            pool = set(range(1, (1 << d))) - set(labels)
            for x in pool:
                key = canonical_key(labels + (x,))
                nxt.setdefault(key, 0)
            if d < max_d:
                key = canonical_key(labels + (1 << d,))
                nxt.setdefault(key, 0)
        levels[n] = nxt
    out: dict[int, dict[int, list[int]]] = {}
    for n, classes in levels.items():
        per: dict[int, list[int]] = {}
        for d, mask in sorted(classes):
            per.setdefault(d, []).append(mask)
        out[n] = per
    return out


def write_catalog(path: Path, r: int, classes: dict[int, dict[int, list[int]]], n_lo: int, n_hi: int) -> int:
    lines = [
        "# Regular two-level designs, one representative per equivalence",
        "# class under invertible GF(2) relabelings of the basic factors.",
        f"{1 << r} {r}",
    ]
    wrote = 0
    for n in range(n_lo, n_hi + 1):
        for mask in classes.get(n, {}).get(r, []):
            labels = mask_to_labels(mask)
            lines.append(f"{n}: " + " ".join(str(x) for x in labels))
            wrote += 1
    path.write_text("\n".join(lines) + "\n")
    return wrote


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "src" / "condma" / "data"
    outdir.mkdir(parents=True, exist_ok=True)
    classes = grow_classes(max_d=5, max_n=16)
    for n in sorted(classes):
        sizes = {d: len(v) for d, v in sorted(classes[n].items())}
        print(f"n={n:2d}: classes by rank {sizes}")
    n16 = write_catalog(outdir / "n16.cat", 4, classes, 5, 15)
    n32 = write_catalog(outdir / "n32.cat", 5, classes, 5, 16)
    print(f"wrote {n16} entries to n16.cat, {n32} to n32.cat")


if __name__ == "__main__":
    main()
