"""Lower-bound constructions and log-ratio estimates.

A lower bound on C(G,H) comes from any single target T: C(G,H) >=
log t(G,T) / log t(H,T). The scaling families here push that ratio
toward the true exponent as the size parameter grows. All densities are
exact rationals; only the final logarithms are floats.

Run:  python3 demos/demo_constructions.py
"""
from homdom import estimate_ratio, from_shorthand
from homdom.constructions import (
    ScalingFamily,
    ap3_free_set,
    behrend_graph,
    behrend_triangle_hom_count,
)
from homdom.homcount import hom_count


def show(title, g, h, family, sizes, target):
    result = estimate_ratio(from_shorthand(g), from_shorthand(h),
                            family, sizes)
    print(title)
    for size, ratio in result["ratios"]:
        print(f"  size {size:>6}: ratio = {ratio:.4f}")
    print(f"  target exponent: {target}, trend monotone: "
          f"{result['monotone']}\n")


def main():
    show("K_n plus isolated vertices drives C(K2, K3) -> 2/3:",
         "K2", "K3", ScalingFamily("clique_plus_isolated"),
         [4, 8, 16, 32, 64], "2/3")

    show("random projective-plane line unions drive C(C4, C3) -> 8/5:",
         "C4", "C3", ScalingFamily("projective", {"k": 2}, seed=1),
         [13, 31, 53], "8/5")

    n = 40
    s = ap3_free_set(n)
    g = behrend_graph(n)
    print(f"progression-free sets make triangle-rich yet diamond-poor "
          f"targets: |S({n})| = {len(s)}")
    tri = hom_count(from_shorthand("K3"), g)
    dia = hom_count(from_shorthand("K4-e"), g)
    print(f"  hom(K3)   = {tri} (closed form {behrend_triangle_hom_count(n)})")
    print(f"  hom(K4-e) = {dia} -- equal because the triangles are "
          f"edge-disjoint,\n  which is what forces C(K4-e, K3) all the "
          f"way up to 2")


if __name__ == "__main__":
    main()
