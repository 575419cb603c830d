"""Tour of domination exponents C(G,H).

C(G,H) is the least c such that t(G,T) >= t(H,T)^c for every target
graph T. This script asks the dispatcher for a range of pairs and shows
whether each answer is an exact closed form or a bracketing bound, along
with the rules that produced it.

Run:  python3 demos/demo_exponents.py
"""
from homdom import dispatch_exponent, from_shorthand


PAIRS = [
    ("P5", "P13"),     # the path formula's showcase value 17/39
    ("C4", "C3"),      # even cycle vs triangle: 8/5
    ("C6", "C4"),      # 12/7
    ("K4-e", "C3"),    # diamond vs triangle: exactly 2
    ("C5+", "C3"),     # chorded 5-cycle vs triangle
    ("K2", "C5"),      # edge vs 5-cycle: 1/nu* = 2/5
    ("P2", "C6"),      # cherry vs 6-cycle: path-cover rule, 1/2
    ("K3", "K4"),      # triangle vs K4: every 3-subset works, 3/4
    ("C5", "C3"),      # odd vs odd: only bounds are known
    ("K3", "K2"),      # no homomorphism: exponent does not exist
]


def main():
    for gs, hs in PAIRS:
        g = from_shorthand(gs)
        h = from_shorthand(hs)
        bound = dispatch_exponent(g, h)
        if not bound.exists:
            print(f"C({gs:>5}, {hs:>4}) does not exist (no homomorphism)")
            continue
        if bound.exact:
            print(f"C({gs:>5}, {hs:>4}) = {bound.lower}   "
                  f"[{', '.join(bound.provenance)}]")
        else:
            print(f"C({gs:>5}, {hs:>4}) in [{bound.lower}, {bound.upper}]   "
                  f"[{', '.join(bound.provenance)}]")


if __name__ == "__main__":
    main()
