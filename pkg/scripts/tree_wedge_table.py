"""Homotopy types of double-directed trees: basic decompositions vs Betti numbers,
and the extreme homology dimensions over all trees on n vertices."""
import argparse

from dtc.forest_complex import directed_tree_complex
from dtc.graph_core import double_directed
from dtc.homology import betti, nonzero
from dtc.tree_shelling import all_trees, extremal_dims_report, tree_homotopy


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--betti-max-n", type=int, default=8, help="cross-check with homology up to this size")
    args = ap.parse_args()
    print("# per tree: n, edges, wedge profile {dim: count}, Betti agreement")
    for n in range(2, args.max_n + 1):
        for t in all_trees(n):
            profile = tree_homotopy(t)
            agree = "-"
            if n <= args.betti_max_n:
                agree = str(profile == nonzero(betti(directed_tree_complex(double_directed(t)))))
            edges = " ".join(f"{a}-{b}" for a, b in t.sorted_edges)
            print(f"{n}\t{edges}\t{profile}\t{agree}")
    print("\n# extremes: n, max top dim, ceil((n-2)/2), min bottom dim, n-floor(n/3)-2")
    for n in range(4, args.max_n + 1):
        rep = extremal_dims_report(n)
        print(f"{n}\t{rep.max_top}\t{rep.top_formula}\t{rep.min_bottom}\t{rep.bottom_formula}")


if __name__ == "__main__":
    main()
