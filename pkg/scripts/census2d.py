"""Print the unimodular classes of reflexive polygons as a table."""

from __future__ import annotations

import argparse

from gfpoly.reflexive import census_histogram, classify_reflexive_2d, dual_polytope


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radius", type=int, default=4, help="coordinate bound for the vertex search")
    args = ap.parse_args()

    census = classify_reflexive_2d(args.radius)
    print(f"{'b':>2}  {'Ehrhart':<22} {'dual verts':>10}  vertices")
    for r in census:
        dual_n = dual_polytope(r.polytope).n_vertices
        verts = " ".join(f"({x},{y})" for x, y in r.polytope.vertices)
        print(f"{r.boundary_points:>2}  {str(r.ehrhart):<22} {dual_n:>10}  {verts}")
    hist = census_histogram(census)
    print(f"\n{len(census)} classes; by boundary points: " + ", ".join(f"{b}:{c}" for b, c in sorted(hist.items())))


if __name__ == "__main__":
    main()
