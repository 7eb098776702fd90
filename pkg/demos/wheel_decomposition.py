"""Walk through the decomposition of a 4-wheel on a 12-hole.

Run: python demos/wheel_decomposition.py
"""

from isk4lab.graph import wheel_on_cycle
from isk4lab.recognition import profile
from isk4lab.wheels import check_outcome, decompose, enumerate_wheels, is_proper_wheel


def main():
    g = wheel_on_cycle(12, [0, 3, 6, 9])
    p = profile(g)
    print(f"12-hole plus a center on every third vertex: n={g.n}, girth={p.girth}, "
          f"triangle-free={p.triangle_free}, ISK4-free={p.isk4_free}, series-parallel={p.series_parallel}")
    for w in enumerate_wheels(g):
        print(f"wheel: center {w.center}, spokes {w.spokes}, proper={is_proper_wheel(g, w)}")
        for s in w.sectors():
            print(f"  sector {s.index}: {s.path}")
    out = decompose(g)
    print(f"outcome: {out.tag} (verified: {check_outcome(g, out)})")
    for sc in out.witness.sector_cutsets:
        print(f"  sector {sc.index}: cutset {sorted(sc.cutset)} leaves components "
              f"{[sorted(c) for c in sc.components]}")


if __name__ == "__main__":
    main()
