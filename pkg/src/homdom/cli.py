"""Command-line front-end.

Thin adapters over the library modules. Every run prints a JSON document
whose header records the full effective configuration, so identical
configurations reproduce identical output. Rationals are printed as
"p/q" strings in machine output.

Exit codes: 0 success / no violations; 1 violation found; 2 usage or
parse error; 3 requested exponent does not exist; 4 verification had
skipped targets (result incomplete).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import cones, constructions, formulas, ratlp, verifier
from .graphs import GraphError, SimpleGraph, decode_graph, encode_graph, from_shorthand
from .homcount import ResourceLimitError, WeightedTarget
from .ratlp import frac_to_str

DEFAULT_SEED = 7


@dataclass
class RunConfig:
    command: str
    seed: int
    max_hom_steps: int
    max_lp_dim: int
    max_vertices: int
    out: str


def _effective_seed(args):
    env = os.environ.get("HOMDOM_SEED")
    if env is not None:
        return int(env)
    return args.seed


def parse_graph_arg(text):
    """Named shorthand (K4-e, C5, P13, C5+, ...), a file path, inline JSON,
    or an inline graph6 string."""
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read().strip()
    stripped = text.strip()
    if stripped.startswith("{"):
        return decode_graph(stripped, "edge_json")
    try:
        return from_shorthand(stripped)
    except GraphError:
        pass
    return decode_graph(stripped, "graph6")


def parse_corpus_spec(text):
    """key=value CSV, e.g. 'exhaustive_n=6,gnp_count=200,gnp_n=10,
    gnp_p=1/2,gnp_seed=7,constructions=1'."""
    kwargs = {}
    if text:
        for part in text.split(","):
            key, _, val = part.partition("=")
            key = key.strip()
            val = val.strip()
            if key in ("exhaustive_n", "gnp_count", "gnp_n", "gnp_seed"):
                kwargs[key] = int(val)
            elif key == "gnp_p":
                kwargs["gnp_p"] = Fraction(val)
            elif key == "dedup":
                kwargs["dedup"] = val not in ("0", "false", "False")
            elif key == "constructions":
                kwargs["include_constructions"] = val not in ("0", "false", "False")
            else:
                raise GraphError(f"unknown corpus spec key {key!r}")
    return verifier.CorpusSpec(**kwargs)


def parse_params(text):
    out = {}
    if text:
        for part in text.split(","):
            key, _, val = part.partition("=")
            out[key.strip()] = int(val)
    return out


def _emit(config, payload, out_path):
    doc = {"config": asdict(config), "result": payload}
    text = json.dumps(doc, indent=2, default=str)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _target_payload(target):
    if isinstance(target, SimpleGraph):
        return {"format": "graph6", "graph": encode_graph(target, "graph6"),
                "n": target.n, "edges": target.num_edges}
    return {
        "format": "weighted",
        "weights": [frac_to_str(w) for w in target.weights],
        "densities": [[frac_to_str(d) for d in row] for row in target.density],
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_exponent(args, config):
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    bound = formulas.dispatch_exponent(g, h, harvest=args.harvest)
    _emit(config, json.loads(bound.to_json()), args.out)
    return 3 if not bound.exists else 0


def cmd_verify(args, config):
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    corpus = verifier.build_corpus(parse_corpus_spec(args.corpus_spec))
    report = verifier.check_inequality(g, h, Fraction(args.c), corpus,
                                       max_steps=config.max_hom_steps)
    _emit(config, json.loads(report.to_json()), args.out)
    return report.exit_code


def cmd_search_p6(args, config):
    corpus = verifier.build_corpus(parse_corpus_spec(args.corpus_spec))
    report = verifier.search_problem6(args.i, args.j, corpus,
                                      max_steps=config.max_hom_steps)
    _emit(config, json.loads(report.to_json()), args.out)
    return report.exit_code


def cmd_construct(args, config):
    params = parse_params(args.params)
    fam = constructions.ScalingFamily(args.family, params, seed=config.seed)
    target = fam.build(args.size)
    payload = {"family": args.family, "params": params, "size": args.size,
               "seed": config.seed, "target": _target_payload(target)}
    if args.emit and isinstance(target, SimpleGraph):
        payload = {"graph6": encode_graph(target, "graph6")}
    _emit(config, payload, args.out)
    return 0


def cmd_cone(args, config):
    if args.even is not None:
        cone = cones.even_cycle_cone(args.even)
        payload = json.loads(cones.cone_to_json(cone))
        payload["rays_ok"] = cones.verify_rays(cone)["all_member"]
        payload["equality"] = cones.cone_equals_hull(cone)
    else:
        cone = cones.all_cycle_cone(args.all, literal_text=args.literal_text)
        payload = json.loads(cones.cone_to_json(cone))
        payload["rays_ok"] = cones.hull_subset_of_cone(cone)
        payload["equality"] = "conjectured (hull-in-cone inclusion reported only)"
    _emit(config, payload, args.out)
    return 0


def cmd_lp(args, config):
    if args.kr is not None:
        problem = ratlp.kr_lp(args.kr)
    else:
        with open(args.file) as fh:
            problem = ratlp.lp_from_json(fh.read())
    sol = ratlp.solve_lp(problem)
    payload = json.loads(ratlp.solution_to_json(sol))
    if args.kr is not None:
        payload["certificate_checked"] = ratlp.check_kr_certificate(args.kr)
    _emit(config, payload, args.out)
    return 0


def cmd_estimate(args, config):
    g = parse_graph_arg(args.g)
    h = parse_graph_arg(args.h)
    kind, _, params = args.family.partition(":")
    fam = constructions.ScalingFamily(kind, parse_params(params), seed=config.seed)
    sizes = [int(s) for s in args.sizes.split(",")]
    result = constructions.estimate_ratio(g, h, fam, sizes)
    payload = {
        "family": args.family,
        "ratios": [{"size": s, "ratio": r} for s, r in result["ratios"]],
        "extrapolated": result["extrapolated"],
        "monotone": result["monotone"],
    }
    _emit(config, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="homdom",
        description="Homomorphism density domination exponents: formulas, "
                    "constructions, cones, LPs, and corpus verification.",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--max-hom-steps", type=int, default=2 * 10 ** 8)
    parser.add_argument("--max-lp-dim", type=int, default=ratlp.MAX_LP_DIM)
    parser.add_argument("--max-vertices", type=int, default=50_000)
    parser.add_argument("--out", default="")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exponent", help="best bound on C(G,H)")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--harvest", action="store_true")
    p.set_defaults(func=cmd_exponent)

    p = sub.add_parser("verify", help="check t(G,T) >= t(H,T)^c over a corpus")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--corpus-spec", default="exhaustive_n=5")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-p6", help="counterexample search for the "
                                         "odd/even cycle inequality")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--corpus-spec", default="exhaustive_n=5")
    p.set_defaults(func=cmd_search_p6)

    p = sub.add_parser("construct", help="instantiate a target family")
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--emit", action="store_true", help="graph6 only")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cone", help="cycle tropicalization cones")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--even", type=int)
    group.add_argument("--all", type=int)
    p.add_argument("--literal-text", action="store_true")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("lp", help="exact rational LP solve")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--kr", type=int)
    group.add_argument("--file")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("estimate", help="log-ratio estimates over a family")
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--sizes", required=True)
    p.set_defaults(func=cmd_estimate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        command=args.command,
        seed=_effective_seed(args),
        max_hom_steps=args.max_hom_steps,
        max_lp_dim=args.max_lp_dim,
        max_vertices=args.max_vertices,
        out=args.out,
    )
    try:
        return args.func(args, config)
    except (GraphError, ResourceLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
