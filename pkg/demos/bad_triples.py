"""Bad triples: build one from a recipe, read the recipe back, and check
that no degree-2 vertex escapes the two closed neighbourhoods.

Run: python demos/bad_triples.py
"""

from itertools import islice

from isk4lab.degree2 import generate_recipes, is_bad_triple, recipe_build, recipe_recover, rooted_isomorphic, xy_property
from isk4lab.formats import encode_graph6


def main():
    for r in islice(generate_recipes(max_tree_order=4), 0, None, 40):
        b = recipe_build(r)
        g = b.graph
        verdict = xy_property(g, b.x, b.y)
        line = f"{encode_graph6(g):15s} n={g.n:2d} x={b.x} y={b.y} tree={r.tree.n} attachments={len(r.attachments)} -> {verdict.tag}"
        if g.n >= 5 and is_bad_triple(g, b.x, b.y):
            try:
                back = recipe_build(recipe_recover(g, b.x, b.y))
                line += f", recovered={rooted_isomorphic(g, b.x, b.y, back.graph, back.x, back.y)}"
            except ValueError as exc:
                # the built graph may fall outside the class recovery expects
                line += f", not recoverable ({exc})"
        print(line)


if __name__ == "__main__":
    main()
