"""One aliasing sequence, three independent computations.

The ranking criterion is a sequence of normalized overlaps between each
effect class and the main-effects block, scanned in a fixed order.  The
package computes it three ways:

  direct  - literal model matrices and a trace, the normative route
  fast    - polynomial recursion over row agreement counts
  counts  - alias word counts, available for regular designs that pass
            the admissibility conditions

All three must agree exactly (values are exact integers times N^-2).

Run:  python demos/03_aliasing_three_ways.py
"""

import condma


def main() -> None:
    spec = condma.RegularSpec(r=5, columns=(1, 2, 4, 8, 16, 15, 21))
    matrix = condma.expand(spec)
    print(f"32 runs, n = {spec.n}, columns {spec.columns}")
    print(f"conditions pass: {condma.check_conditions_regular(spec).ok}\n")

    direct = condma.k_sequence_direct(matrix)
    fast = condma.k_sequence_fast(matrix)
    counts = condma.k_from_counts(spec)
    print(f"direct == fast:   {direct == fast}")
    print(f"direct == counts: {direct == counts}\n")

    print("nonzero entries (value is an exact multiple of 1/N^2):")
    print(f"{'entry':>8}  {'N^2 K':>6}  {'alias pairs':>11}")
    aliases = direct.alias_counts()
    for label, value, pairs in zip(direct.labels(), direct.values, aliases):
        if value:
            print(f"{label:>8}  {value:6d}  {pairs:11d}")

    # The sequence ranks designs: earlier entries dominate later ones.
    other = condma.RegularSpec(r=5, columns=(1, 2, 4, 8, 16, 31, 21))
    other_k = condma.k_sequence_direct(condma.expand(other))
    verdict = condma.compare_k(direct, other_k)
    word = {-1: "better than", 0: "tied with", 1: "worse than"}[verdict]
    print(f"\n{spec.columns} is {word} {other.columns}")


if __name__ == "__main__":
    main()
