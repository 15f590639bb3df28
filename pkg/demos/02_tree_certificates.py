#!/usr/bin/env python3
"""Produce and check monochromatic spanning-tree certificates.

For any 2-coloring of the ordered complete graph there is always a
monochromatic spanning tree avoiding any single chosen relation: one with
no Crossing pair, one with no Nested pair, one with no Separated pair.
Each solver returns a Certificate -- the edge list, its color, and the
pairwise constraint it claims -- and an independent validator re-derives
every claim from scratch.

This script runs all three solvers on a random coloring, validates the
results, round-trips one certificate through its JSON form, and then
tampers with a certificate to show the validator rejecting it.
"""

from pathlib import Path

from ordram.core import (
    Certificate,
    certificate_from_json,
    certificate_to_json,
    validate_certificate,
)
from ordram.search import random_coloring
from ordram.trees import find_tree_noncrossing, find_tree_nonnested, find_tree_nonseparated

OUT = Path(__file__).resolve().parent / "output"
OUT.mkdir(exist_ok=True)

SOLVERS = {
    "no Crossing pair": find_tree_noncrossing,
    "no Nested pair": find_tree_nonnested,
    "no Separated pair": find_tree_nonseparated,
}


def main() -> None:
    coloring = random_coloring(m=20, t=2, seed=424_242)
    print(f"random 2-coloring of the complete graph on [{coloring.m}]")
    red, blue = coloring.counts()
    print(f"  {red} red edges, {blue} blue edges\n")

    kept = None
    for label, solver in SOLVERS.items():
        cert = solver(coloring)
        report = validate_certificate(coloring, cert)
        print(f"== spanning tree with {label} ==")
        print(f"  color={cert.color}  edges={len(cert.edges)}  producer={cert.producer}")
        print(f"  validator says: {report}")
        assert report.ok and len(cert.edges) == coloring.m - 1
        kept = cert

    print("\n== JSON round trip ==")
    text = certificate_to_json(kept)
    path = OUT / "spanning-tree-certificate.json"
    path.write_text(text)
    back = certificate_from_json(text)
    print(f"  wrote {path.name} ({len(text)} bytes); reparse equals original: {back == kept}")
    assert back == kept

    print("\n== tampering is caught ==")
    flipped = Certificate(
        kind=kept.kind,
        edges=kept.edges,
        color=1 - kept.color,
        constraint=kept.constraint,
        producer="tampered",
    )
    report = validate_certificate(coloring, flipped)
    print(f"  same edges claimed in the other color: {report}")
    assert not report.ok


if __name__ == "__main__":
    main()
