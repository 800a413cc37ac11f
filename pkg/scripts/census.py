"""Count tables for the main constructions, printed as plain text.

Useful for eyeballing how the truncated enumerations grow with their bounds.
"""

import argparse
import time

from hocoh.adj_mnd import Adj, Mnd, enumerate_squiggles
from hocoh.corpus import categories
from hocoh.enriched import atomic_arrows
from hocoh.realization import compare_resolution_realization, cube_isomorphism
from hocoh.simplicial import isomorphism_violations


def cubes(top: int) -> None:
    print("realized simplex homs vs cubes")
    for n in range(1, top + 1):
        t = time.perf_counter()
        f = cube_isomorphism(n, 0, n)
        ok = not isomorphism_violations(f)
        print(f"  n={n}  counts={f.source.counts()}  iso={ok}  {time.perf_counter() - t:.2f}s")


def squiggles(width: int) -> None:
    print(f"strictly undulating squiggles of width <= {width}")
    for n in range(4):
        row = {k: len(enumerate_squiggles(n, k, width)) for k in ("++", "-+", "+-", "--")}
        print(f"  lines={n + 1}  " + "  ".join(f"{k}:{v}" for k, v in row.items()))


def free_adjunction(size: int) -> None:
    print(f"free adjunction and monad, ordinals of size <= {size}")
    A, M = Adj(2, size), Mnd(2, size)
    for x in A.objects:
        for y in A.objects:
            print(f"  Adj({x},{y}) counts={A.hom(x, y).counts()}")
    print(f"  Mnd counts={M.hom('+', '+').counts()}")
    print(f"  atomic arrows per level: Adj {[len(atomic_arrows(A, m)) for m in range(3)]}"
          f"  Mnd {[len(atomic_arrows(M, m)) for m in range(3)]}")


def comparisons(d: int, length: int) -> None:
    print(f"resolution vs realization of the nerve, level {d}, strings <= {length}")
    for name, A in categories().items():
        t = time.perf_counter()
        rep = compare_resolution_realization(A, d, length)
        print(f"  {name:10} ok={rep.ok}  {time.perf_counter() - t:.2f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--cube", type=int, default=5)
    p.add_argument("--width", type=int, default=6)
    p.add_argument("--size", type=int, default=2)
    p.add_argument("--length", type=int, default=4)
    args = p.parse_args()
    cubes(args.cube)
    squiggles(args.width)
    free_adjunction(args.size)
    comparisons(2, args.length)


if __name__ == "__main__":
    main()
