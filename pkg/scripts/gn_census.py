"""h-vectors and sphere census of complete digraphs, enumeration vs closed form."""
import argparse
import time

from dtc.forest_complex import directed_tree_complex, h_vector
from dtc.graph_core import complete_digraph
from dtc.source_shelling import complete_source_shelling, gn_h_vector, gn_sphere_census, sphere_census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    print("n\tfacets\th(enumerated)\th(closed form)\tcensus(enumerated)\tcensus(closed form)\tseconds")
    for n in range(2, args.max_n + 1):
        t0 = time.perf_counter()
        d = complete_digraph(n)
        c = directed_tree_complex(d)
        complete_source_shelling(d, "1")
        h = h_vector(c)
        census = sphere_census(d, "1")
        print(f"{n}\t{len(c.facets)}\t{h}\t{gn_h_vector(n)}\t{census}\t{gn_sphere_census(n)}\t"
              f"{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
