"""Closed-form domination exponents C(G,H) and the dispatching front-end.

C(G,H) is the least c with t(G,T) >= t(H,T)^c for every target T; it
exists iff hom(G,H) > 0. Everything here returns exact Fractions; bounds
carry a provenance trail naming each rule that fired.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    GraphError,
    SimpleGraph,
    cycle_graph,
    isomorphic,
    k4_minus_e,
    path_graph,
    triangle_pendant,
)
from .homcount import _cycle_structure, _path_structure, hom_count
from .ratlp import frac_to_str, make_lp, solve_lp


@dataclass(frozen=True)
class ExponentBound:
    """lower <= C(G,H) <= upper; upper None means C does not exist."""

    lower: Fraction = None
    upper: Fraction = None
    exact: bool = False
    provenance: tuple = ()
    exists: bool = True

    def __post_init__(self):
        if self.exists and self.lower is not None and self.upper is not None:
            if self.lower > self.upper:
                raise GraphError(f"crossed bounds {self.lower} > {self.upper}")
            if self.exact and self.lower != self.upper:
                raise GraphError("exact bound must have lower == upper")

    def to_json(self):
        if not self.exists:
            return json.dumps({
                "lower": "nonexistent", "upper": "nonexistent",
                "exact": True, "provenance": list(self.provenance),
            })
        return json.dumps({
            "lower": frac_to_str(self.lower) if self.lower is not None else "0",
            "upper": frac_to_str(self.upper) if self.upper is not None else "unbounded",
            "exact": self.exact,
            "provenance": list(self.provenance),
        })


def _exact(value, rule):
    return ExponentBound(Fraction(value), Fraction(value), True, (rule,))


# ---------------------------------------------------------------------------
# existence and the generic bounds
# ---------------------------------------------------------------------------

def exists_exponent(g, h):
    """C(G,H) exists iff some homomorphism G -> H exists."""
    return hom_count(g, h) > 0


def crude_upper(g, h):
    """max over r in [1, min(v(G), v(H))] of (v(G)/r)^r.

    This single max dominates both branches of the existence theorem's
    bound (the proof bounds C by (v(G)/r)^r where r is the size of the
    image of a homomorphism G -> H), avoiding any comparison against e.
    """
    if not exists_exponent(g, h):
        raise GraphError("exponent does not exist")
    rmax = min(g.n, h.n)
    return max(Fraction(g.n, r) ** r for r in range(1, rmax + 1))


def simple_lower(g, h):
    """max(e(G)/e(H), (v(G)-1)/(v(H)-1), v(G)/v(H)) for connected G, H."""
    if not g.is_connected() or not h.is_connected():
        raise GraphError("simple lower bound needs connected graphs")
    if h.num_edges == 0 or h.n < 2:
        raise GraphError("H needs at least one edge")
    return max(
        Fraction(g.num_edges, h.num_edges),
        Fraction(g.n - 1, h.n - 1),
        Fraction(g.n, h.n),
    )


# ---------------------------------------------------------------------------
# paths (P_k = path with k edges)
# ---------------------------------------------------------------------------

def path_exponent(k, ell):
    """C(P_k, P_ell), the full four-case characterization.

    The diagonal k = ell is not covered by the case list (the strict
    comparisons leave it implicit) and returns exactly 1.
    """
    if k < 1 or ell < 1:
        raise GraphError("need k, ell >= 1")
    if k == ell:
        return Fraction(1)
    if k % 2 == 1 and ell % 2 == 0:
        return Fraction(k + 1, ell)
    if k > ell:  # here k even, or both odd
        return Fraction(k, ell)
    if k % 2 == 0:  # k < ell
        return Fraction(k + 1, ell + 1)
    # k < ell, both odd
    a, r = divmod(ell, k + 1)
    return Fraction(k + ell - r, (a + 1) * ell)


# ---------------------------------------------------------------------------
# cycles (C_2 = K_2 by convention)
# ---------------------------------------------------------------------------

def even_cycle_exponent(k, ell):
    """C(C_2k, C_ell): 4k(k-1)/(2k*ell - 2k - ell) when 2k >= ell,
    and the previously known 2k/ell when 2k < ell."""
    if k < 1 or ell < 2:
        raise GraphError("need k >= 1 and ell >= 2")
    if 2 * k < ell:
        return Fraction(2 * k, ell)
    if k == 1:
        return Fraction(1)  # C_2 vs C_2
    return Fraction(4 * k * (k - 1), 2 * k * ell - 2 * k - ell)


def is_hamiltonian(h, max_n=12):
    """Brute-force Hamiltonian cycle search (small graphs only)."""
    n = h.n
    if n > max_n:
        raise GraphError("Hamiltonicity search capped at 12 vertices")
    if n < 3:
        return False
    adj = h.adjacency_lists()
    seen = [False] * n
    seen[0] = True

    def extend(v, depth):
        if depth == n:
            return 0 in adj[v]
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                if extend(w, depth + 1):
                    return True
                seen[w] = False
        return False

    return extend(0, 1)


def hamiltonian_exponent(k, h):
    """C(C_2k, H) for H with a Hamiltonian cycle and v(H) <= 2k:
    the even-cycle formula at ell = v(H)."""
    ell = h.n
    if 2 * k < ell:
        raise GraphError("need 2k >= v(H)")
    if not is_hamiltonian(h):
        raise GraphError("H has no Hamiltonian cycle")
    return even_cycle_exponent(k, ell)


def odd_cycle_bounds(k, ell):
    """(lower, upper) bounds on C(C_{2k+1}, C_{2ell+1}) for k > ell >= 1."""
    if not k > ell >= 1:
        raise GraphError("need k > ell >= 1")
    lower = Fraction(4 * k * k - 1, 4 * k * ell - 1)
    if k <= 2 * ell - 1:
        upper = Fraction(2 * (k + 1), 2 * ell + 1)
    else:
        m = 2 * k - 2 * ell + 1
        upper = Fraction(2 * k * m - 1, 2 * ell * m - 1)
    return lower, upper


# ---------------------------------------------------------------------------
# fractional matchings and the subset/cover rules
# ---------------------------------------------------------------------------

def fractional_matching(h):
    """nu*(H) by exact LP: max sum x_e, x >= 0, sum_{e at v} x_e <= 1."""
    edges = sorted(h.edges)
    if not edges:
        raise GraphError("H has no edges")
    rows = []
    for v in range(h.n):
        row = [Fraction(1) if v in e else Fraction(0) for e in edges]
        rows.append((row, "<=", Fraction(1)))
    lp = make_lp("max", [1] * len(edges), rows, nonneg=True)
    sol = solve_lp(lp)
    assert sol.status == "optimal"
    return sol.optimum


def edge_exponent(h):
    """C(K_2, H) = 1/nu*(H)."""
    return 1 / fractional_matching(h)


def has_subgraph(host, pattern):
    """Injective adjacency-preserving map pattern -> host (brute force)."""
    if pattern.n > host.n or pattern.num_edges > host.num_edges:
        return False
    hadj = host.adjacency_lists()
    padj = pattern.adjacency_lists()
    order = sorted(range(pattern.n), key=lambda v: -len(padj[v]))
    assign = [-1] * pattern.n
    used = [False] * host.n

    def place(idx):
        if idx == pattern.n:
            return True
        v = order[idx]
        earlier = [u for u in padj[v] if assign[u] >= 0]
        for w in range(host.n):
            if used[w]:
                continue
            if all(assign[u] in hadj[w] for u in earlier):
                assign[v] = w
                used[w] = True
                if place(idx + 1):
                    return True
                assign[v] = -1
                used[w] = False
        return False

    return place(0)


def kk_exponent(g, h, max_n=10):
    """C(G,H) = v(G)/v(H) when every v(G)-subset of V(H) contains a copy
    of G (Kruskal-Katona regime). None when the hypothesis fails."""
    if g.n > h.n:
        return None
    if h.n > max_n:
        raise GraphError("all-subsets check capped at 10 vertices")
    for subset in itertools.combinations(range(h.n), g.n):
        if not has_subgraph(h.subgraph(list(subset)), g):
            return None
    return Fraction(g.n, h.n)


def has_path_cover(h, max_n=12):
    """Can V(H) be partitioned into vertex-disjoint paths of >= 2 edges
    whose edges all lie in H? Exhaustive search, small graphs only."""
    if h.n > max_n:
        raise GraphError("path-cover search capped at 12 vertices")
    adj = h.adjacency_lists()
    covered = [False] * h.n

    def search(remaining):
        if remaining == 0:
            return True
        v = covered.index(False)

        # enumerate simple paths (>= 3 vertices) through v on uncovered
        # vertices, growing the right arm first, then the left arm; each
        # (left, right) shape is generated exactly once
        def grow(left, right, used, right_done):
            path = left[::-1] + [v] + right
            if len(path) >= 3:
                for u in path:
                    covered[u] = True
                if search(remaining - len(path)):
                    return True
                for u in path:
                    covered[u] = False
            if not right_done:
                tail = right[-1] if right else v
                for w in adj[tail]:
                    if not covered[w] and w not in used:
                        if grow(left, right + [w], used | {w}, False):
                            return True
            head = left[-1] if left else v
            for w in adj[head]:
                if not covered[w] and w not in used:
                    if grow(left + [w], right, used | {w}, True):
                        return True
            return False

        return grow([], [], {v}, False)

    return search(h.n)


def p2_exponent(h):
    """C(P_2, H) = 3/v(H) when H has a disjoint-path vertex cover."""
    if not has_path_cover(h):
        return None
    return Fraction(3, h.n)


def subgraph_equal_nu(g, h):
    """C(G,H) = 1 when G is a subgraph of H with nu*(G) = nu*(H)."""
    if g.num_edges == 0 or h.num_edges == 0:
        return None
    if not has_subgraph(h, g):
        return None
    if fractional_matching(g) != fractional_matching(h):
        return None
    return Fraction(1)


# ---------------------------------------------------------------------------
# the dispatcher
# ---------------------------------------------------------------------------

def _component_power(g):
    """(base graph, multiplicity) when all components are isomorphic."""
    comps = g.components()
    if len(comps) <= 1:
        return g, 1
    subs = [g.subgraph(c) for c in comps]
    first = subs[0]
    for other in subs[1:]:
        if not isomorphic(first, other):
            return g, 1
    return first, len(subs)


def _even_cycle_lengths(g):
    """Component lengths when g is a disjoint union of edges/even cycles."""
    lengths = []
    for comp in g.components():
        sub = g.subgraph(comp)
        if sub.n == 2 and sub.num_edges == 1:
            lengths.append(2)
        elif _cycle_structure(sub) is not None and sub.n % 2 == 0:
            lengths.append(sub.n)
        else:
            return None
    return lengths


def _exact_rule(g, h):
    """(value, rule-name) from a single exact closed form, else None."""
    if isomorphic(g, h):
        return Fraction(1), "identical"

    gp = _path_structure(g)
    hp = _path_structure(h)
    if gp is not None and hp is not None and g.num_edges >= 1 and h.num_edges >= 1:
        return path_exponent(g.num_edges, h.num_edges), "path-formula"

    gc = 2 if (g.n == 2 and g.num_edges == 1) else (
        g.n if _cycle_structure(g) is not None else None)
    hc = 2 if (h.n == 2 and h.num_edges == 1) else (
        h.n if _cycle_structure(h) is not None else None)
    if gc is not None and gc % 2 == 0 and hc is not None:
        return even_cycle_exponent(gc // 2, hc), "even-cycle-formula"
    if gc is not None and gc % 2 == 0 and hc is None and h.n <= 12:
        if 2 * (gc // 2) >= h.n and is_hamiltonian(h):
            return hamiltonian_exponent(gc // 2, h), "hamiltonian-target"

    if g.n == 2 and g.num_edges == 1 and h.num_edges >= 1:
        return edge_exponent(h), "edge-fractional-matching"

    if isomorphic(h, cycle_graph(3)):
        if isomorphic(g, k4_minus_e()):
            return Fraction(2), "k4-minus-e-vs-triangle"
        if isomorphic(g, triangle_pendant()):
            return Fraction(3, 2), "pendant-triangle-vs-triangle"

    if isomorphic(g, path_graph(2)) and h.n <= 12:
        val = p2_exponent(h)
        if val is not None:
            return val, "p2-path-cover"

    if h.n <= 10 and g.n <= h.n:
        val = kk_exponent(g, h)
        if val is not None:
            return val, "kruskal-katona"

    val = subgraph_equal_nu(g, h) if (g.num_edges and h.num_edges) else None
    if val is not None:
        return val, "subgraph-equal-matching"

    glens = _even_cycle_lengths(g)
    hlens = _even_cycle_lengths(h)
    if glens and hlens:
        from .cones import union_exponent_lp
        k = max(max(glens), max(hlens)) // 2
        k = max(k, 2)
        return union_exponent_lp(glens, hlens, k), "even-cycle-union-lp"

    return None


# intermediates tried for the compositional upper bound C(F,H) <= C(F,G) C(G,H)
def _composition_catalog():
    cat = [path_graph(m) for m in range(1, 7)]
    cat += [cycle_graph(m) for m in range(2, 9)]
    return cat


def dispatch_exponent(g, h, harvest=False):
    """Best available ExponentBound, with a provenance trail.

    Priority: nonexistence; union-power rewriting C(G^a, H^b) =
    (a/b) C(G,H); exact closed forms; otherwise bounds (odd-cycle pair
    bounds, the simple lower bound, the crude upper bound, depth-2
    compositions through a small catalog). harvest=True additionally runs
    the lower-bound constructions (slow; numeric ratios floor-approximated).
    """
    if not exists_exponent(g, h):
        return ExponentBound(exists=False, exact=True, provenance=("nonexistent",))

    g0, a = _component_power(g)
    h0, b = _component_power(h)
    scale = Fraction(a, b)
    prov_prefix = () if scale == 1 else ("union-power",)

    rule = _exact_rule(g0, h0)
    if rule is not None:
        val, name = rule
        return ExponentBound(scale * val, scale * val, True, prov_prefix + (name,))

    lower = Fraction(0)
    upper = None
    prov = list(prov_prefix)

    gcyc = _cycle_structure(g0)
    hcyc = _cycle_structure(h0)
    if gcyc is not None and hcyc is not None and g0.n % 2 == 1 and h0.n % 2 == 1 \
            and g0.n > h0.n:
        lo, up = odd_cycle_bounds((g0.n - 1) // 2, (h0.n - 1) // 2)
        lower, upper = lo, up
        prov.append("odd-cycle-bounds")

    if g0.is_connected() and h0.is_connected() and h0.num_edges >= 1 and h0.n >= 2:
        sl = simple_lower(g0, h0)
        if sl > lower:
            lower = sl
            prov.append("simple-lower")

    cu = crude_upper(g0, h0)
    if upper is None or cu < upper:
        upper = cu
        prov.append("crude-upper")

    if has_subgraph(h0, g0) and upper > 1:
        upper = Fraction(1)
        prov.append("subgraph-upper")

    for mid in _composition_catalog():
        if hom_count(g0, mid) == 0 or hom_count(mid, h0) == 0:
            continue
        left = _exact_rule(g0, mid)
        right = _exact_rule(mid, h0)
        if left is not None and right is not None:
            cand = left[0] * right[0]
            if cand < upper:
                upper = cand
                prov.append(f"composition({left[1]}*{right[1]})")

    if harvest:
        hl = _harvested_lower(g0, h0)
        if hl is not None and hl[0] > lower:
            lower = hl[0]
            prov.append(hl[1])

    lower = min(scale * lower, scale * upper)
    return ExponentBound(lower, scale * upper, False, tuple(prov))


def _harvested_lower(g, h):
    """Opt-in numeric lower bound from the scaling constructions.

    Samples small construction targets, takes the best exact log-density
    ratio floor (rational just below the measured float), and certifies it
    by exact cross-powering on the witnessing target.
    """
    from .constructions import ScalingFamily, estimate_ratio
    from .verifier import ratio_certified_lower

    best = None
    families = [
        (ScalingFamily("two_cliques"), [4, 6, 8]),
        (ScalingFamily("clique_plus_isolated"), [4, 6, 8]),
        (ScalingFamily("single_edge"), [6, 10, 20]),
    ]
    for fam, sizes in families:
        for size in sizes:
            target = fam.build(size)
            bound = ratio_certified_lower(g, h, target)
            if bound is not None and (best is None or bound > best):
                best = bound
    if best is None:
        return None
    return best, "harvested-construction"
