"""Top pure skeleta of double-directed cycles: shellings or homology obstructions by n mod 3."""
import argparse
import time

from dtc.skeleton_shelling import certificate_is_obstruction, cycle_skeleton_shelling


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print("n\tn mod 3\tfacets\tdim\tverdict\tmethod\tevidence\tseconds")
    for n in range(3, args.max_n + 1):
        t0 = time.perf_counter()
        res = cycle_skeleton_shelling(n)
        if res.shellable:
            evidence = "types " + "".join(str(t) for t in sorted(set(res.order.types)))
        else:
            evidence = f"betti {res.certificate} obstruction={certificate_is_obstruction(res)}"
        verdict = "shellable" if res.shellable else "not-shellable"
        print(f"{n}\t{n % 3}\t{len(res.complex.facets)}\t{res.complex.dim}\t{verdict}\t{res.method}\t"
              f"{evidence}\t{time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
