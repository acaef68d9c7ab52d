"""Print basis sizes and generator counts of the tree algebras per degree."""

import argparse
import math

from hopf_forest.combinatorics import catalan, enumerate_objects
from hopf_forest.isomorphisms import word_counts


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-degree", type=int, default=6)
    n_max = parser.parse_args().max_degree

    planted = [0] + [len(enumerate_objects("planted", n)) for n in range(1, n_max + 1)]
    irreducible = [0] + [len(enumerate_objects("irreducible-heap", n)) for n in range(1, n_max + 1)]
    ho_words, hho_words = word_counts(planted, n_max), word_counts(irreducible, n_max)

    print(f"{'n':>2} {'HO':>6} {'planted':>8} {'words':>6} {'HHO':>6} {'irred':>6} {'words':>6}")
    for n in range(n_max + 1):
        ho = len(enumerate_objects("ordered", n))
        hho = len(enumerate_objects("heap", n))
        assert ho == catalan(n) and hho == math.factorial(n)
        print(f"{n:>2} {ho:>6} {planted[n]:>8} {ho_words[n]:>6} {hho:>6} {irreducible[n]:>6} {hho_words[n]:>6}")


if __name__ == "__main__":
    main()
