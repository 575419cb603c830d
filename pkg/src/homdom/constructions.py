"""Generators for the lower-bound target families and the ratio estimator.

Each family is a deterministic function of its parameters and a seed.
Randomized families use PCG64 streams derived from SeedSequence entropy
so corpora are reproducible bit-for-bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .graphs import GraphError, SimpleGraph, complete_graph, disjoint_union
from .homcount import (
    ResourceLimitError,
    WeightedPattern,
    WeightedTarget,
    closed_walk_counts_dense,
    hom_density,
    weighted_hom_density,
)


# ---------------------------------------------------------------------------
# path blow-up patterns
# ---------------------------------------------------------------------------

def path_blowup_pattern(k, l, m):
    """Weighted blow-up pattern of the path with 2kl+1 edges.

    Parameters follow the classical construction with b = 2l+1, s = 2l and
    indicator d_i = 1 iff k divides i. Requires 1 <= m <= k and l >= 1.
    The left-half rules leave the edge {kl-1, kl} implicit when kl is even;
    it is filled with the generic value s, which is what the mirror rule
    forces for consistency.
    """
    if not (1 <= m <= k) or l < 1:
        raise GraphError("need 1 <= m <= k and l >= 1")
    b = 2 * l + 1
    s = 2 * l
    kl = k * l
    d = [1 if i % k == 0 else 0 for i in range(kl + 1)]

    nv = 2 * kl + 2
    p_v = {0: Fraction(b), 1: Fraction(b - s)}
    for u in range(1, (kl - 1) // 2 + 1):
        p_v[2 * u + 1] = Fraction(d[0] + 2 * sum(d[1:u + 1]))
    for u in range(1, kl // 2 + 1):
        p_v[2 * u] = Fraction(s - d[0] - 2 * sum(d[1:u]))
    for u in range(0, kl + 1):
        p_v[2 * kl + 1 - u] = p_v[u]

    p_e = {}
    for u in range(0, (kl - 1) // 2 + 1):
        p_e[(2 * u, 2 * u + 1)] = Fraction(s + d[u])
    for u in range(1, kl // 2 + 1):
        edge = (2 * u - 1, 2 * u)
        if edge != (kl, kl + 1):
            p_e[edge] = Fraction(s)
    if kl % 2 == 0:
        p_e[(kl, kl + 1)] = Fraction(s + d[kl // 2])
    else:
        p_e[(kl, kl + 1)] = p_v[kl] + p_v[kl + 1]
    for u in range(0, kl):
        p_e[(2 * kl - u, 2 * kl + 1 - u)] = p_e[(u, u + 1)]

    base = SimpleGraph(nv, frozenset((i, i + 1) for i in range(nv - 1)))
    vexp = tuple(p_v[i] for i in range(nv))
    eexp = {(i, i + 1): p_e[(i, i + 1)] for i in range(nv - 1)}
    return WeightedPattern(base, vexp, eexp)


def instantiate_weighted(pattern, n):
    """Evaluate a blow-up pattern at a concrete scale n as a step graphon.

    Class v gets weight n^vexp(v); edge uv gets density
    n^(eexp(uv) - vexp(u) - vexp(v)). Raises if any density exceeds 1
    (n too small for this pattern).
    """
    n = Fraction(n)
    if n <= 1:
        raise GraphError("need scale n > 1")

    def power(base, expo):
        ex = Fraction(expo)
        if ex.denominator != 1:
            raise GraphError("non-integer exponents need an integer-power scale")
        return base ** ex.numerator

    g = pattern.base
    weights = tuple(power(n, e) for e in pattern.vexp)
    q = g.n
    dens = [[Fraction(0)] * q for _ in range(q)]
    for (u, v), ee in pattern.eexp.items():
        expo = ee - pattern.vexp[u] - pattern.vexp[v]
        dval = power(n, expo)
        if dval > 1:
            raise GraphError(f"density > 1 on edge {(u, v)} at n={n}; n too small")
        dens[u][v] = dval
        dens[v][u] = dval
    return WeightedTarget(weights, tuple(map(tuple, dens)))


# ---------------------------------------------------------------------------
# projective planes and red-line graphs
# ---------------------------------------------------------------------------

def _is_prime(p):
    if p < 2:
        return False
    for q in range(2, int(math.isqrt(p)) + 1):
        if p % q == 0:
            return False
    return True


def projective_plane(p):
    """The projective plane PG(2, p) for prime p.

    Points are normalized homogeneous triples over F_p; lines are the
    triples of dual coordinates, returned as tuples of incident point
    indices. p^2+p+1 points and lines, p+1 points per line.
    """
    if not _is_prime(p):
        raise GraphError(f"{p} is not prime")
    points = []
    for x in range(p):
        for y in range(p):
            points.append((1, x, y))
    for y in range(p):
        points.append((0, 1, y))
    points.append((0, 0, 1))
    index = {pt: i for i, pt in enumerate(points)}
    lines = []
    for coef in points:  # dual coordinates run over the same normalized triples
        a, b, c = coef
        inc = tuple(
            index[pt]
            for pt in points
            if (a * pt[0] + b * pt[1] + c * pt[2]) % p == 0
        )
        lines.append(inc)
    return points, lines


@dataclass(frozen=True)
class ProjectivePlaneSpec:
    """Red-line construction parameters: prime order p, pattern parameter k."""

    p: int
    k: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise GraphError(f"{self.p} is not prime")
        if self.k < 2:
            raise GraphError("need k >= 2")

    @property
    def num_points(self):
        return self.p ** 2 + self.p + 1

    @property
    def alpha(self):
        return Fraction(self.k, 2 * self.k - 1)

    @property
    def red_line_count(self):
        n = self.num_points
        a = self.alpha
        # floor(n^alpha) for rational alpha = floor((n^num)^(1/den))
        target = n ** a.numerator
        lo = int(round(n ** (a.numerator / a.denominator)))
        while lo ** a.denominator > target:
            lo -= 1
        while (lo + 1) ** a.denominator <= target:
            lo += 1
        return lo


def red_line_graph(spec, seed, num_lines=None):
    """Union of cliques on a seeded-random choice of red lines."""
    points, lines = projective_plane(spec.p)
    n = len(points)
    count = spec.red_line_count if num_lines is None else num_lines
    if not (1 <= count <= len(lines)):
        raise GraphError("red line count out of range")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, spec.p, spec.k])))
    chosen = rng.choice(len(lines), size=count, replace=False)
    edges = set()
    for li in chosen:
        pts = lines[li]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                edges.add((min(pts[i], pts[j]), max(pts[i], pts[j])))
    return SimpleGraph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# bipartite power targets
# ---------------------------------------------------------------------------

def bipartite_power_target(i, n, mode="weighted", seed=0, max_vertices=50_000):
    """Bipartite target with parts of size n^(i+1) and edge density n^-i.

    ``random`` mode materializes a seeded random bipartite graph (the mode
    that exhibits the degenerate-walk exponents); ``weighted`` returns the
    two-class step graphon with the same density (kept as a contrast
    fixture: its even-cycle exponents are -2ji for every j).
    """
    if i < 1 or n < 2:
        raise GraphError("need i >= 1 and n >= 2")
    part = n ** (i + 1)
    if mode == "weighted":
        d = Fraction(1, n ** i)
        return WeightedTarget(
            (Fraction(part), Fraction(part)),
            ((Fraction(0), d), (d, Fraction(0))),
        )
    if mode != "random":
        raise GraphError(f"unknown mode {mode!r}")
    if 2 * part > max_vertices:
        raise ResourceLimitError("bipartite power target too large to materialize")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, i, n])))
    block = rng.random((part, part)) < 1.0 / n ** i
    us, vs = np.nonzero(block)
    edges = frozenset((int(u), int(part + v)) for u, v in zip(us, vs))
    return SimpleGraph(2 * part, edges)


# ---------------------------------------------------------------------------
# Behrend (Ruzsa-Szemeredi) graphs
# ---------------------------------------------------------------------------

def ap3_free_set(n):
    """A large 3-term-progression-free subset of {1, .., n}.

    Sphere-digit construction: numbers whose base-q digits are at most
    (q-1)//2 and lie on a sphere of fixed squared radius. The base and the
    radius are chosen by direct search to maximize the set size.
    """
    if n < 1:
        raise GraphError("need n >= 1")
    if n <= 3:
        return [1] if n < 3 else [1, 2]
    best = []
    for q in range(3, 13):
        h = (q - 1) // 2
        if h < 1:
            continue
        ndigits = 1
        while q ** ndigits <= n:
            ndigits += 1
        spheres = {}
        stack = [(0, 0, 0)]  # (digit index, value, norm)
        while stack:
            di, val, norm = stack.pop()
            if di == ndigits:
                if 1 <= val <= n:
                    spheres.setdefault(norm, []).append(val)
                continue
            for dig in range(h + 1):
                nval = val + dig * q ** di
                if nval <= n:
                    stack.append((di + 1, nval, norm + dig * dig))
        for members in spheres.values():
            if len(members) > len(best):
                best = members
    return sorted(best)


def behrend_graph(n):
    """Tripartite union of n*|S| edge-disjoint triangles, no other triangles.

    Parts of sizes n, 2n, 3n; for x in [0, n) and d in S the triangle is
    (x, x+d, x+2d) across the parts. S is the AP3-free set for n.
    """
    if n < 3:
        raise GraphError("need n >= 3")
    s = ap3_free_set(n)
    edges = set()
    off_b = n
    off_c = 3 * n
    for x in range(n):
        for d in s:
            a = x
            b = off_b + x + d
            c = off_c + x + 2 * d
            edges.add((a, b))
            edges.add((min(b, c), max(b, c)))
            edges.add((a, c))
    return SimpleGraph(6 * n, frozenset(edges))


def behrend_triangle_hom_count(n):
    """Closed-form hom(K_3, behrend_graph(n)) = 6 n |S| (also hom(K_4 - e))."""
    return 6 * n * len(ap3_free_set(n))


# ---------------------------------------------------------------------------
# the simple families of the basic lower bounds
# ---------------------------------------------------------------------------

def simple_family(kind, n):
    """The named elementary scaling families.

    half_clique and clique_plus_isolated both mean K_n plus n isolated
    vertices (the same construction appears under both names); two_cliques
    is two disjoint copies of K_n; single_edge is one edge on n vertices.
    """
    if n < 2:
        raise GraphError("need n >= 2")
    if kind in ("half_clique", "clique_plus_isolated"):
        g = complete_graph(n)
        return SimpleGraph(2 * n, g.edges)
    if kind == "two_cliques":
        g = complete_graph(n)
        return disjoint_union(g, g)
    if kind == "single_edge":
        return SimpleGraph(n, frozenset([(0, 1)]))
    raise GraphError(f"unknown simple family {kind!r}")


# ---------------------------------------------------------------------------
# scaling families and the log-ratio estimator
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScalingFamily:
    """A named target family addressable by kind + params; pure given a seed."""

    kind: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def build(self, size):
        p = self.params
        if self.kind == "path_blowup":
            pattern = path_blowup_pattern(p["k"], p["l"], p["m"])
            return instantiate_weighted(pattern, size)
        if self.kind == "projective":
            spec = ProjectivePlaneSpec(p=size, k=p["k"])
            return red_line_graph(spec, self.seed)
        if self.kind == "bipartite_power":
            mode = p.get("mode", "random")
            return bipartite_power_target(p["i"], size, mode=mode, seed=self.seed)
        if self.kind in ("half_clique", "two_cliques", "clique_plus_isolated", "single_edge"):
            return simple_family(self.kind, size)
        if self.kind == "behrend":
            return behrend_graph(size)
        raise GraphError(f"unknown family kind {self.kind!r}")


def log_fraction(x):
    """Natural log of a positive Fraction, accurate for huge numerators."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError("log of nonpositive value")
    return math.log(x.numerator) - math.log(x.denominator)


def _density(pattern_graph, target, dense_cycle_cache=None):
    """t(H, T) for simple or weighted targets; exact Fraction when feasible."""
    from .homcount import _cycle_structure  # local import to avoid cycle

    if isinstance(target, WeightedTarget):
        return weighted_hom_density(pattern_graph, target)
    if target.n <= 64:
        return hom_density(pattern_graph, target)
    # big simple targets: only walk-countable patterns are supported
    cyc = _cycle_structure(pattern_graph)
    if cyc is None and not (pattern_graph.n == 2 and pattern_graph.num_edges == 1):
        raise ResourceLimitError("large target: only cycle/edge patterns supported")
    m = 2 if pattern_graph.n == 2 else pattern_graph.n
    if dense_cycle_cache is not None and m in dense_cycle_cache:
        cnt = dense_cycle_cache[m]
    else:
        cnt = closed_walk_counts_dense(target.adjacency_matrix(np.float64), [m])[0]
        if dense_cycle_cache is not None:
            dense_cycle_cache[m] = cnt
    return Fraction(cnt, target.n ** m)


def estimate_ratio(g, h, family, sizes):
    """Per-size log-density ratios log t(G,T)/log t(H,T) for a family.

    Returns a dict with the (size, ratio) list, the last value as the
    (deliberately naive) extrapolation, and a monotone-trend flag. Raises
    if any instantiation has t(H,T) outside (0, 1).
    """
    ratios = []
    for size in sorted(sizes):
        target = family.build(size)
        cache = {}
        tg = _density(g, target, cache)
        th = _density(h, target, cache)
        if not (0 < th < 1):
            raise GraphError(f"degenerate family: t(H,T)={th} at size {size}")
        if tg == 0:
            raise GraphError(f"degenerate family: t(G,T)=0 at size {size}")
        ratios.append((size, log_fraction(tg) / log_fraction(th)))
    vals = [r for _, r in ratios]
    diffs = [b - a for a, b in zip(vals, vals[1:])]
    monotone = all(d >= 0 for d in diffs) or all(d <= 0 for d in diffs)
    return {"ratios": ratios, "extrapolated": vals[-1], "monotone": monotone}


def exponent_vector_estimate(target, cycle_lengths, scale):
    """log t(C_m, T)/log(scale) per cycle length, via exact dense traces."""
    adj = target.adjacency_matrix(np.float64)
    counts = closed_walk_counts_dense(adj, cycle_lengths)
    out = []
    for m, cnt in zip(cycle_lengths, counts):
        t = Fraction(cnt, target.n ** m)
        out.append(log_fraction(t) / math.log(scale))
    return out
