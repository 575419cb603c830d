"""Path blow-up patterns and the tropical counting oracle.

The weighted path blow-up family witnesses the sharpness of the path
exponent formula. Its growth exponents can be predicted without any
counting by a max-plus dynamic program over the pattern, and the exact
rational densities of concrete instantiations converge to the same
numbers.

Run:  python3 demos/demo_tropical_paths.py
"""
from homdom import estimate_ratio, path_graph
from homdom.constructions import ScalingFamily, path_blowup_pattern
from homdom.homcount import tropical_tree_exponent


def main():
    k, l, m = 3, 2, 1
    pattern = path_blowup_pattern(k, l, m)
    print(f"pattern for (k, l, m) = ({k}, {l}, {m}): "
          f"{pattern.base.n} vertex classes")
    print("  class exponents:", [int(e) for e in pattern.vexp])
    print("  edge exponents: ",
          [int(pattern.eexp[(i, i + 1)]) for i in range(pattern.base.n - 1)])

    for edges in (5, 13):
        expo = tropical_tree_exponent(path_graph(edges), pattern)
        print(f"max-plus exponent for the {edges}-edge path: {expo}")
    e5 = tropical_tree_exponent(path_graph(5), pattern)
    e13 = tropical_tree_exponent(path_graph(13), pattern)
    print(f"predicted density ratio: ({e5} - 5*6)/({e13} - 5*14) "
          f"= {float(e5 - 30) / float(e13 - 70):.4f} = 17/39\n")

    fam = ScalingFamily("path_blowup", {"k": k, "l": l, "m": m})
    result = estimate_ratio(path_graph(5), path_graph(13), fam,
                            [10 ** 2, 10 ** 4, 10 ** 6])
    print("measured log t(P5)/log t(P13) on exact instantiations:")
    for size, ratio in result["ratios"]:
        print(f"  n = 10^{len(str(size)) - 1}: {ratio:.5f}")
    print(f"limit 17/39 = {17 / 39:.5f}")


if __name__ == "__main__":
    main()
