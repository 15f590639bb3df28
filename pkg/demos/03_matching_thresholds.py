#!/usr/bin/env python3
"""Sharp thresholds for forced monochromatic matchings.

For each single relation (Crossing, Nested, Separated) there is a vertex
count at which every t-coloring is forced to contain n same-colored edges
pairwise in that relation -- and an explicit coloring on one vertex fewer
that avoids it.  This script shows both halves of each threshold:

* below: a generator builds the extremal coloring and an exact oracle
  confirms that no color class reaches a matching of size n;
* at the threshold: a linear-work extractor finds the forced matching in
  arbitrary random colorings, and the validator re-checks every claim.

It finishes with the two asymmetric solvers that trade a small matching in
one color against a large non-nested matching in the other, again paired
with their below-threshold witnesses.
"""

from ordram.core import Constraint, Relation, validate_certificate
from ordram.search import random_coloring
from ordram.matchings import (
    construct_crossing_lb,
    construct_nested_lb,
    construct_rstar2_lb,
    construct_rstar3_lb,
    construct_separated_lb,
    extract_crossing_matching,
    extract_nested_matching,
    extract_separated_matching,
    max_constrained_matching,
    solve_r_star_2,
    solve_r_star_3,
)

FAMILIES = {
    "Crossing": (
        construct_crossing_lb,
        extract_crossing_matching,
        lambda t, n: 2 * t * (n - 1) + 1,
    ),
    "Nested": (
        construct_nested_lb,
        extract_nested_matching,
        lambda t, n: 2 * (t * (n - 1) + 1),
    ),
    "Separated": (
        construct_separated_lb,
        extract_separated_matching,
        lambda t, n: 2 * (t * (n - 1) + 1),
    ),
}


def main() -> None:
    t, n = 3, 4
    print(f"forcing n={n} same-colored pairwise-related edges with t={t} colors\n")
    for name, (build_lb, extract, threshold) in FAMILIES.items():
        m = threshold(t, n)
        require = Constraint.require(Relation.from_name(name))

        lb = build_lb(t, n)
        best = max(max_constrained_matching(lb, require, c)[0] for c in range(t))
        print(f"== {name}: threshold m = {m} ==")
        print(f"  extremal coloring on [{lb.m}]: largest {name} matching of any color = {best}")
        assert lb.m == m - 1 and best < n

        sizes = set()
        for seed in range(200):
            coloring = random_coloring(m, t, 30_000 + seed)
            cert = extract(coloring, n)
            report = validate_certificate(coloring, cert)
            assert report.ok, report
            sizes.add(len(cert.edges))
        print(f"  200 random colorings of [{m}]: extractor always found size {sizes}\n")

    print("== red size-2 versus blue non-nested size-n ==")
    n = 6
    lb = construct_rstar2_lb(n)
    red, _ = max_constrained_matching(lb, Constraint.none(), 0)
    blue, _ = max_constrained_matching(lb, Constraint.forbid(Relation.NESTED), 1)
    print(f"  extremal coloring on [{lb.m}]: red matching {red} < 2, blue non-nested {blue} < {n}")
    assert red < 2 and blue < n
    outcomes = {0: 0, 1: 0}
    for seed in range(200):
        coloring = random_coloring(2 * n + 1, 2, 31_000 + seed)
        cert = solve_r_star_2(coloring, n)
        assert validate_certificate(coloring, cert).ok
        assert len(cert.edges) == (2 if cert.color == 0 else n)
        outcomes[cert.color] += 1
    print(f"  200 random colorings of [{2 * n + 1}]: "
          f"{outcomes[0]} red size-2, {outcomes[1]} blue size-{n}")

    print("\n== red size-3 versus blue non-nested size-n ==")
    lb = construct_rstar3_lb(n)
    red, _ = max_constrained_matching(lb, Constraint.none(), 0)
    blue, _ = max_constrained_matching(lb, Constraint.forbid(Relation.NESTED), 1)
    print(f"  extremal coloring on [{lb.m}]: red matching {red} < 3, blue non-nested {blue} < {n}")
    assert red < 3 and blue < n
    outcomes = {0: 0, 1: 0}
    for seed in range(200):
        coloring = random_coloring(2 * n + 2, 2, 32_000 + seed)
        cert = solve_r_star_3(coloring, n)
        assert validate_certificate(coloring, cert).ok
        assert len(cert.edges) == (3 if cert.color == 0 else n)
        outcomes[cert.color] += 1
    print(f"  200 random colorings of [{2 * n + 2}]: "
          f"{outcomes[0]} red size-3, {outcomes[1]} blue size-{n}")


if __name__ == "__main__":
    main()
