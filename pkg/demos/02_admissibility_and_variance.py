"""The four admissibility conditions and what they buy.

A design that passes them estimates the grand mean and all conditional
and traditional main effects with the smallest possible variance: the
information matrix of that (n + 2)-column model is exactly N times the
identity.  The demo checks one passing and one failing design and shows
the variance statement numerically.

Run:  python demos/02_admissibility_and_variance.py
"""

import numpy as np

import condma


def show(name: str, spec: condma.RegularSpec) -> None:
    matrix = condma.expand(spec)
    report = condma.check_conditions(matrix)
    print(f"{name}: columns {spec.columns}")
    print(f"  strength 2          {report.strength2}")
    print(f"  triples (1,2,j)     {report.triples_12}")
    print(f"  triples (3,4,j)     {report.triples_34}")
    print(f"  quadruple (1,2,3,4) {report.quad_1234}")
    if report.failures:
        print(f"  offending columns   {report.failures}")

    m = condma.info_matrix(matrix)
    side = spec.n + 2
    gap = float(np.max(np.abs(m - spec.runs * np.eye(side))))
    print(f"  info matrix is {side}x{side}, max |M - N I| = {gap:.3e}")
    print(f"  optimal: {condma.optimality_check(matrix)}\n")


def main() -> None:
    # 32 runs, 6 factors, full independence among the four role columns.
    good = condma.RegularSpec(r=5, columns=(1, 2, 4, 8, 16, 31))
    show("passing design", good)

    # Same size but the quadruple (1,2,3,4) is dependent: 7 = 1 ^ 2 ^ 4.
    bad = condma.RegularSpec(r=5, columns=(1, 2, 4, 7, 16, 31))
    show("failing design", bad)

    # The regular-spec shortcut agrees with the matrix-level check.
    for spec in (good, bad):
        fast = condma.check_conditions_regular(spec)
        slow = condma.check_conditions(condma.expand(spec))
        assert fast == slow
    print("label-arithmetic check agrees with the run-matrix check on both")


if __name__ == "__main__":
    main()
