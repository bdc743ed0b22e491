"""Tabulate the second Coxeter coefficient a2 over all labeled trees on n vertices.

For each n the a2 values come from the determinant, and the closed form
1 - sum binom(d_i - 1, 2) is checked on every tree along the way.
"""

import argparse
from collections import Counter

from coxpoly.enumeration import enumerate_trees
from coxpoly.formulas import bipartite_orientation, tree_a2
from coxpoly.quivers import coxeter_poly


def distribution(n: int) -> Counter:
    counts = Counter()
    for t in enumerate_trees(n):
        a2 = coxeter_poly(bipartite_orientation(t)).coeffs[2]
        assert a2 == tree_a2(t), t
        counts[a2] += 1
    return counts


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=7)
    args = parser.parse_args()
    for n in range(2, args.n_max + 1):
        counts = distribution(n)
        row = "  ".join(f"{a2}:{c}" for a2, c in sorted(counts.items(), reverse=True))
        print(f"n={n}  trees={sum(counts.values())}  {row}")


if __name__ == "__main__":
    main()
