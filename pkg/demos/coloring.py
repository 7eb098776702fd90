"""3-color every ISK4-free graph of girth at least 5 on up to 9 vertices and
tally how many colors the elimination order used.

Run: python demos/coloring.py
"""

from collections import Counter

from isk4lab.degree2 import low_degree_vertices, three_color, verify_coloring
from isk4lab.enumeration import enumerate_graphs


def main():
    for n in range(2, 10):
        used = Counter()
        fewest_low = None
        for g in enumerate_graphs(n, ["girth5", "isk4_free"]):
            c = three_color(g)
            assert verify_coloring(g, c)
            used[len(set(c.color))] += 1
            low = len(low_degree_vertices(g))
            fewest_low = low if fewest_low is None else min(fewest_low, low)
        print(f"n={n}: colors used {dict(sorted(used.items()))}, fewest vertices of degree <= 2: {fewest_low}")


if __name__ == "__main__":
    main()
