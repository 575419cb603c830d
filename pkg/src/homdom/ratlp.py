"""Exact rational linear programming.

A small dense two-phase simplex over Fraction with Bland's anti-cycling
rule. Every optimal solve returns a dual vector and is self-checked by
exact strong duality before being handed back; performance is irrelevant
at the intended scale (a few hundred rows).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction


class LPError(Exception):
    pass


MAX_LP_DIM = 400

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class LPProblem:
    """sense in {"max","min"}; rows are (coeffs, relation, rhs) with
    relation in {"<=", ">=", "="}; nonneg[j] says whether x_j >= 0
    (False means free)."""

    sense: str
    objective: tuple
    rows: tuple
    nonneg: tuple
    names: tuple = ()

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise LPError(f"bad sense {self.sense!r}")
        n = len(self.objective)
        if len(self.nonneg) != n:
            raise LPError("nonneg length mismatch")
        for coeffs, rel, _ in self.rows:
            if len(coeffs) != n:
                raise LPError("row length mismatch")
            if rel not in ("<=", ">=", "="):
                raise LPError(f"bad relation {rel!r}")
        if n > MAX_LP_DIM or len(self.rows) > MAX_LP_DIM:
            raise LPError("problem exceeds dimension cap")

    @property
    def num_vars(self):
        return len(self.objective)


@dataclass(frozen=True)
class LPSolution:
    status: str  # optimal | infeasible | unbounded
    optimum: Fraction = None
    primal: tuple = None
    dual: tuple = None


def make_lp(sense, objective, rows, nonneg=True, names=()):
    """Convenience constructor accepting ints/strs for all coefficients."""
    obj = tuple(Fraction(c) for c in objective)
    if isinstance(nonneg, bool):
        nn = tuple(nonneg for _ in obj)
    else:
        nn = tuple(bool(b) for b in nonneg)
    rws = tuple(
        (tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))
        for coeffs, rel, rhs in rows
    )
    return LPProblem(sense, obj, rws, nn, tuple(names))


# ---------------------------------------------------------------------------
# the simplex core: max c.x  s.t.  A x <= b, x >= 0
# ---------------------------------------------------------------------------

def _simplex_canonical(c, arows, b):
    """Bland two-phase simplex on the canonical form.

    Returns (status, optimum, x, y) where y is the dual of the <= rows
    (y >= 0, y.A >= c on every column, c.x = y.b at optimality).
    """
    m = len(arows)
    n = len(c)
    # columns: 0..n-1 structural, n..n+m-1 slack, then artificials
    sign = [1] * m  # row multiplied by -1 when b < 0
    rows = []
    rhs = []
    for i in range(m):
        row = list(arows[i]) + [_ZERO] * m
        row[n + i] = _ONE
        bi = b[i]
        if bi < 0:
            row = [-v for v in row]
            bi = -bi
            sign[i] = -1
        rows.append(row)
        rhs.append(bi)
    art = [i for i in range(m) if sign[i] < 0]
    total = n + m + len(art)
    for k, i in enumerate(art):
        for r in range(m):
            rows[r].append(_ONE if r == i else _ZERO)
    basis = []
    for i in range(m):
        basis.append(n + i if sign[i] > 0 else n + m + art.index(i))

    def pivot(r, col):
        piv = rows[r][col]
        inv = _ONE / piv
        rows[r] = [v * inv for v in rows[r]]
        rhs[r] *= inv
        prow = rows[r]
        pb = rhs[r]
        for rr in range(m):
            if rr == r:
                continue
            f = rows[rr][col]
            if f:
                rows[rr] = [a - f * p for a, p in zip(rows[rr], prow)]
                rhs[rr] -= f * pb
        basis[r] = col

    def run_phase(cost, allowed):
        # maximize cost.x restricted to allowed columns; Bland's rule
        while True:
            # reduced costs: cost_j - cB . column_j
            red = None
            enter = -1
            for j in range(total):
                if not allowed[j] or j in basis_set():
                    continue
                zj = sum(cost[basis[r]] * rows[r][j] for r in range(m))
                rc = cost[j] - zj
                if rc > 0:
                    enter = j
                    red = rc
                    break  # Bland: first improving index
            if enter < 0:
                return "optimal"
            ratio = None
            leave = -1
            for r in range(m):
                a = rows[r][enter]
                if a > 0:
                    t = rhs[r] / a
                    if ratio is None or t < ratio or (t == ratio and basis[r] < basis[leave]):
                        ratio = t
                        leave = r
            if leave < 0:
                return "unbounded"
            pivot(leave, enter)

    def basis_set():
        return set(basis)

    if art:
        cost1 = [_ZERO] * total
        for k in range(len(art)):
            cost1[n + m + k] = Fraction(-1)
        allowed = [True] * total
        status = run_phase(cost1, allowed)
        assert status == "optimal"  # phase 1 is always bounded
        val1 = sum(cost1[basis[r]] * rhs[r] for r in range(m))
        if val1 != 0:
            return "infeasible", None, None, None
        # drive remaining artificials out of the basis
        for r in range(m):
            if basis[r] >= n + m:
                for j in range(n + m):
                    if rows[r][j] != 0:
                        pivot(r, j)
                        break
                # an all-zero row is redundant; its artificial stays basic
                # at value 0 and never re-enters (cost column disabled below)

    cost2 = list(c) + [_ZERO] * (total - n)
    allowed = [True] * (n + m) + [False] * len(art)
    status = run_phase(cost2, allowed)
    if status == "unbounded":
        return "unbounded", None, None, None

    x = [_ZERO] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = rhs[r]
    opt = sum(ci * xi for ci, xi in zip(c, x))
    # dual of row i = multiplier read off its slack column; the build-time
    # row negation is already baked into that column, so no sign fixup
    y = []
    for i in range(m):
        zj = sum(cost2[basis[r]] * rows[r][n + i] for r in range(m))
        y.append(zj)
    return "optimal", opt, x, y


def _canonicalize(p):
    """Rewrite an LPProblem as max c~.x~, A~ x~ <= b~, x~ >= 0.

    Free variables split into differences; = rows become two inequalities;
    >= rows are negated. Returns the canonical data plus the recovery maps.
    """
    n = p.num_vars
    colmap = []  # per original var: (pos_col, neg_col or None)
    ncols = 0
    for j in range(n):
        if p.nonneg[j]:
            colmap.append((ncols, None))
            ncols += 1
        else:
            colmap.append((ncols, ncols + 1))
            ncols += 2
    csign = 1 if p.sense == "max" else -1
    c = [_ZERO] * ncols
    for j in range(n):
        pos, neg = colmap[j]
        c[pos] = csign * p.objective[j]
        if neg is not None:
            c[neg] = -csign * p.objective[j]
    arows = []
    b = []
    rowmap = []  # per original row: (canonical index, kind)
    for coeffs, rel, rhs in p.rows:
        def widen(vec, flip=False):
            row = [_ZERO] * ncols
            for j in range(n):
                pos, neg = colmap[j]
                v = -vec[j] if flip else vec[j]
                row[pos] = v
                if neg is not None:
                    row[neg] = -v
            return row

        if rel == "<=":
            rowmap.append((len(arows), "le"))
            arows.append(widen(coeffs))
            b.append(rhs)
        elif rel == ">=":
            rowmap.append((len(arows), "ge"))
            arows.append(widen(coeffs, flip=True))
            b.append(-rhs)
        else:
            rowmap.append((len(arows), "eq"))
            arows.append(widen(coeffs))
            b.append(rhs)
            arows.append(widen(coeffs, flip=True))
            b.append(-rhs)
    return c, arows, b, colmap, rowmap, csign


def _verify_optimal(p, x, y, opt):
    """Exact optimality certificate: primal + dual feasibility + equality."""
    n = p.num_vars
    for j in range(n):
        if p.nonneg[j] and x[j] < 0:
            raise LPError("primal sign violation")
    for (coeffs, rel, rhs), yi in zip(p.rows, y):
        lhs = sum(a * xj for a, xj in zip(coeffs, x))
        if rel == "<=" and lhs > rhs:
            raise LPError("primal row violation")
        if rel == ">=" and lhs < rhs:
            raise LPError("primal row violation")
        if rel == "=" and lhs != rhs:
            raise LPError("primal row violation")
        # dual sign convention (for max: <= rows y>=0, >= rows y<=0)
        s = 1 if p.sense == "max" else -1
        if rel == "<=" and s * yi < 0:
            raise LPError("dual sign violation")
        if rel == ">=" and s * yi > 0:
            raise LPError("dual sign violation")
    for j in range(n):
        ya = sum(p.rows[i][0][j] * y[i] for i in range(len(p.rows)))
        gap = ya - p.objective[j]
        if p.sense == "min":
            gap = -gap
        # for max: y.A_j >= c_j on nonneg vars, = on free vars
        if p.nonneg[j]:
            if gap < 0:
                raise LPError("dual row violation")
            if gap != 0 and x[j] != 0:
                raise LPError("complementary slackness violation")
        elif gap != 0:
            raise LPError("dual row violation (free var)")
    yb = sum(y[i] * p.rows[i][2] for i in range(len(p.rows)))
    if yb != opt:
        raise LPError("strong duality violation")


def solve_lp(p):
    """Solve exactly; statuses are returned, never raised. The dual vector
    follows the usual sign convention for the problem's own sense and is
    verified by exact strong duality before return."""
    c, arows, b, colmap, rowmap, csign = _canonicalize(p)
    status, opt, x, y = _simplex_canonical(c, arows, b)
    if status != "optimal":
        return LPSolution(status=status)
    primal = []
    for pos, neg in colmap:
        primal.append(x[pos] - (x[neg] if neg is not None else _ZERO))
    dual = []
    for idx, kind in rowmap:
        if kind == "le":
            d = y[idx]
        elif kind == "ge":
            d = -y[idx]
        else:
            d = y[idx] - y[idx + 1]
        dual.append(csign * d)
    optimum = csign * opt
    _verify_optimal(p, primal, dual, optimum)
    return LPSolution("optimal", optimum, tuple(primal), tuple(dual))


# ---------------------------------------------------------------------------
# the hardcoded Kopparty-Rossman LP family for C_2^{2i-2} C_{2i+1}^c vs C_3
# ---------------------------------------------------------------------------

KR_VARS = ("p1", "p2", "p3", "p12", "p13", "p23", "p123", "z")


def kr_lp(i):
    """min z over the 16-row entropy-style program whose optimum is the
    homomorphism domination exponent of C_2^(2i-2) C_{2i+1}^c over C_3.

    Variables p(S) for nonempty S in {1',2',3'} plus z, all free; rows are
    the three subadditivity and three submodularity constraints, the
    normalization p(1'2'3') = 1, and nine homomorphism rows.
    """
    if i < 2:
        raise LPError("need i >= 2")
    P1, P2, P3, P12, P13, P23, P123, Z = range(8)

    def row(coeffs, rel, rhs=0):
        vec = [_ZERO] * 8
        for var, cf in coeffs.items():
            vec[var] = Fraction(cf)
        return (tuple(vec), rel, Fraction(rhs))

    a = i - 1       # the +-(i-1) coefficient
    big = 2 * i - 2
    top = 2 * i - 1
    rows = [
        row({P13: -1, P1: 1, P3: 1}, ">="),
        row({P12: -1, P1: 1, P2: 1}, ">="),
        row({P23: -1, P2: 1, P3: 1}, ">="),
        row({P123: -1, P12: 1, P13: 1, P1: -1}, ">="),
        row({P123: -1, P12: 1, P23: 1, P2: -1}, ">="),
        row({P123: -1, P13: 1, P23: 1, P3: -1}, ">="),
        row({P123: 1}, "=", 1),
        row({P123: top, P12: a, P13: -a, Z: -1}, "<="),
        row({P123: top, P12: -a, P13: a, Z: -1}, "<="),
        row({P123: top, P12: -a, P13: -a, P23: big, Z: -1}, "<="),
        row({P123: top, P12: a, P23: -a, Z: -1}, "<="),
        row({P123: top, P12: -a, P23: a, Z: -1}, "<="),
        row({P123: top, P12: -a, P13: big, P23: -a, Z: -1}, "<="),
        row({P123: top, P13: a, P23: -a, Z: -1}, "<="),
        row({P123: top, P13: -a, P23: a, Z: -1}, "<="),
        row({P123: top, P12: big, P13: -a, P23: -a, Z: -1}, "<="),
    ]
    objective = tuple(_ZERO if v != Z else _ONE for v in range(8))
    return LPProblem("min", objective, tuple(rows), tuple(False for _ in range(8)), KR_VARS)


def kr_dual_certificate(i):
    """The explicit nonnegative combination proving z >= 2i-1:
    -(2i-1) times the normalization row plus 1/2 of each of the two
    homomorphism rows whose p(12)/p(13) terms cancel (rows 8 and 9)."""
    mult = [_ZERO] * 16
    mult[6] = Fraction(-(2 * i - 1))
    mult[7] = Fraction(1, 2)
    mult[8] = Fraction(1, 2)
    return tuple(mult)


def check_kr_certificate(i):
    """Verify the hand-written certificate implies z >= 2i-1 exactly."""
    p = kr_lp(i)
    mult = kr_dual_certificate(i)
    combo = [_ZERO] * p.num_vars
    rhs = _ZERO
    for (coeffs, rel, b), w in zip(p.rows, mult):
        if w == 0:
            continue
        if rel == "<=" and w < 0:
            return False
        if rel == ">=" and w > 0:
            return False
        for j, cf in enumerate(coeffs):
            combo[j] += w * cf
        rhs += w * b
    # the combination must read  -z <= -(2i-1), i.e. z >= 2i-1
    want = [_ZERO] * p.num_vars
    want[-1] = Fraction(-1)
    return combo == want and rhs == Fraction(-(2 * i - 1))


# ---------------------------------------------------------------------------
# JSON interchange with rational strings
# ---------------------------------------------------------------------------

def frac_to_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def str_to_frac(s):
    return Fraction(s)


def lp_to_json(p):
    return json.dumps(
        {
            "sense": p.sense,
            "objective": [frac_to_str(c) for c in p.objective],
            "rows": [
                {"coeffs": [frac_to_str(c) for c in coeffs], "rel": rel, "rhs": frac_to_str(rhs)}
                for coeffs, rel, rhs in p.rows
            ],
            "nonneg": list(p.nonneg),
            "names": list(p.names),
        }
    )


def lp_from_json(text):
    d = json.loads(text)
    return make_lp(
        d["sense"],
        [Fraction(c) for c in d["objective"]],
        [([Fraction(c) for c in r["coeffs"]], r["rel"], Fraction(r["rhs"])) for r in d["rows"]],
        nonneg=[bool(b) for b in d.get("nonneg", [True] * len(d["objective"]))],
        names=tuple(d.get("names", ())),
    )


def solution_to_json(sol):
    out = {"status": sol.status}
    if sol.status == "optimal":
        out["optimum"] = frac_to_str(sol.optimum)
        out["primal"] = [frac_to_str(v) for v in sol.primal]
        out["dual"] = [frac_to_str(v) for v in sol.dual]
    return json.dumps(out)
