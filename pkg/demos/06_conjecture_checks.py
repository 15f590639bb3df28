#!/usr/bin/env python3
"""Machine verification of two open threshold conjectures at small sizes.

Two conjectures predict the forced-matching threshold for the non-nested
and non-separated families as a closed formula in the per-color target
sizes.  Each instance (a size vector) is decidable by finite search: scan
every 2-coloring at the predicted threshold and check that no coloring
avoids all targets.  Three outcomes are possible and all three are shown
here:

* holds    -- the scan completed and no counterexample exists;
* refuted  -- a concrete counterexample coloring would be returned;
* undecided -- an explicit coloring budget ran out before the scan ended.
"""

from ordram.search import verify_conjecture


def main() -> None:
    for name in ("nonnested-CL", "nonseparated-CL"):
        print(f"== {name} ==")
        for sizes in ((2, 2), (2, 3)):
            report = verify_conjecture(name, sizes)
            print(f"  sizes={sizes}: m={report.m}  holds={report.holds}")
            print(f"    {report.summary}")
            print(f"    scanned {report.stats.enumerated:,} colorings "
                  f"({report.stats.visited:,} canonical representatives)")
            assert report.holds is True
        print()

    print("== a budget too small to decide ==")
    report = verify_conjecture("nonnested-CL", (3, 3), budget=50_000)
    print(f"  sizes=(3, 3) with a 50,000-coloring budget: holds={report.holds}")
    print(f"    {report.summary}")
    assert report.holds is None and not report.stats.complete


if __name__ == "__main__":
    main()
