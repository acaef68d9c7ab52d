"""Tabulate e(x) for every irreducible heap-ordered tree of a given degree,
with the order pair of each term."""

import argparse

from hopf_forest.algebras import HHO
from hopf_forest.combinatorics import enumerate_objects, order_pair, phi_inv
from hopf_forest.lincomb import format_rational
from hopf_forest.machinery import eulerian


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=3)
    n = parser.parse_args().degree
    for x in enumerate_objects("irreducible-heap", n):
        ex = eulerian(HHO, x)
        print(f"e(phi({phi_inv(x)})) = e({x})  order {order_pair(x)}")
        # leading tree first, then by decreasing order
        by_order = lambda kv: (kv[0] != x, [-v for v in order_pair(kv[0]).sort_key()], str(kv[0]))
        for t, c in sorted(ex.items(), key=by_order):
            print(f"    {format_rational(c):>6}  {str(t):<24} phi({phi_inv(t)})  {order_pair(t)}")


if __name__ == "__main__":
    main()
