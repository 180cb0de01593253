"""Command-line front end.

    reeskit gens 15 13 9 6
    reeskit trace --ideal "T0^15,T0^9*T1^6,T1^13" --format json
    reeskit resolution 15 13 9 6 --minimal --format cas
    reeskit sweep --dmax 20
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .checks import sweep, verify_instance
from .errors import InvalidParams, ParseError, ReesError
from .generators import (
    algorithm_trace,
    minimal_generators,
    normalize_input,
    plane_curve_trace,
    records_json,
    trace_json,
    trace_tsv,
)
from .graph import augment, build_graph, export_dot
from .groebner import colon_ideal_gens, groebner_basis
from .monomial import T_VARIABLES, IdealParams, Monomial, format_monomial, parse_monomial
from .resolution import (
    betti_numbers,
    build_resolution,
    minimalize,
    resolution_cas,
    resolution_json,
    resolution_text,
)

SCHEMA_VERSION = 1

FORMATS = {
    "gens": ("text", "json"),
    "trace": ("text", "json"),
    "graph": ("dot", "json", "text"),
    "gb": ("text", "json", "cas"),
    "colon": ("text", "json"),
    "resolution": ("text", "json", "cas"),
    "betti": ("text", "json"),
    "verify": ("text", "json"),
    "sweep": ("text", "json"),
}


def parse_monomial_list(s: str) -> tuple[Monomial, Monomial, Monomial]:
    """Three comma-separated monomials in T0, T1."""
    parts = s.split(",")
    if len(parts) != 3:
        pos = len(s) if len(parts) < 3 else sum(len(p) + 1 for p in parts[:3]) - 1
        raise ParseError(f"expected 3 monomials, got {len(parts)}", pos, "three comma-separated monomials")
    out = []
    offset = 0
    for part in parts:
        if not part.strip():
            raise ParseError("empty monomial", offset, "a monomial in T0, T1")
        out.append(parse_monomial(part, allowed=T_VARIABLES, offset=offset))
        offset += len(part) + 1
    return tuple(out)  # type: ignore[return-value]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _params_json(p: IdealParams) -> dict:
    d = {"d1": p.d1, "d2": p.d2, "u1": p.u1, "u2": p.u2}
    if any(p.common_factor):
        d["commonFactor"] = format_monomial((*p.common_factor, 0, 0, 0))
    return d


def _envelope(p: IdealParams, **payload) -> str:
    return dumps({"schemaVersion": SCHEMA_VERSION, "params": _params_json(p), **payload})


def resolve_params(args) -> IdealParams:
    if args.ideal is not None:
        if args.params:
            raise InvalidParams("give either four integers or --ideal, not both")
        return normalize_input(*parse_monomial_list(args.ideal))
    if len(args.params) != 4:
        raise InvalidParams("expected four integers d1 d2 u1 u2 or --ideal")
    return IdealParams(*args.params)


# --- subcommands ----------------------------------------------------------------

def cmd_gens(p: IdealParams, args) -> tuple[str, int]:
    recs = minimal_generators(p)
    if args.format == "json":
        return _envelope(p, generators=records_json(recs)), 0
    return "".join(f"{g.binomial}\n" for g in recs), 0


def cmd_trace(p: IdealParams, args) -> tuple[str, int]:
    if args.plane:
        if not (p.d1 == p.d2 and p.u1 + p.u2 == p.d1):
            raise InvalidParams(f"{p} is not equigenerated; --plane needs d1 = d2 = u1 + u2")
        rows = plane_curve_trace(p.d1, p.u1)
    else:
        rows = algorithm_trace(p)
    if args.format == "json":
        return _envelope(p, trace=trace_json(rows, args.plane)), 0
    return trace_tsv(rows, args.plane), 0


def cmd_graph(p: IdealParams, args) -> tuple[str, int]:
    g = build_graph(minimal_generators(p), name=f"Graph{p}")
    if args.augmented:
        g = augment(g)
    if args.format == "json":
        return _envelope(p, graph=g.to_json()), 0
    if args.format == "text":
        lines = [f"{row}: " + " ".join(f"g{i}" for i in g.row(row)) for row in ("top", "bottom")]
        lines.append("edges: " + " ".join(f"{j}->{k}" for j, k in g.edges))
        lines.append("triangles: " + " ".join(f"({j},{k},{l})" for j, k, l in g.triangles))
        return "\n".join(lines) + "\n", 0
    return export_dot(g), 0


def cmd_gb(p: IdealParams, args) -> tuple[str, int]:
    gb = groebner_basis(p)
    if args.format == "json":
        return _envelope(p, groebnerBasis=gb.to_json()), 0
    if args.format == "cas":
        return gb.to_cas(), 0
    return gb.to_text(), 0


def cmd_colon(p: IdealParams, args) -> tuple[str, int]:
    gb = groebner_basis(p)
    ideals = [colon_ideal_gens(gb, j) for j in range(gb.r)]
    if args.format == "json":
        return _envelope(p, colonIdeals=[
            {"j": c.j, "generators": [str(m) for m in c.generators]} for c in ideals
        ]), 0
    return "".join(f"M_{c.j}: " + ", ".join(map(str, c.generators)) + "\n" for c in ideals), 0


def cmd_resolution(p: IdealParams, args) -> tuple[str, int]:
    res = build_resolution(p)
    if args.minimal:
        res = minimalize(res)
    if args.format == "json":
        return _envelope(p, resolution=resolution_json(res)), 0
    if args.format == "cas":
        return resolution_cas(res), 0
    return resolution_text(res), 0


def cmd_betti(p: IdealParams, args) -> tuple[str, int]:
    b = betti_numbers(p)
    if args.format == "json":
        return _envelope(p, betti=[b.b0, b.b1, b.b2], pd=b.pd), 0
    return f"{b}\n", 0


def cmd_verify(p: IdealParams, args) -> tuple[str, int]:
    rep = verify_instance(p, t_bound=args.tbound)
    out = dumps(rep.to_json()) if args.format == "json" else rep.to_text()
    return out, 0 if rep.passed else 1


def cmd_sweep(args) -> tuple[str, int]:
    rep = sweep(args.dmax, dedupe=not args.no_dedupe)
    out = dumps(rep.to_json()) if args.format == "json" else rep.to_text()
    return out, 0 if rep.passed else 1


COMMANDS = {
    "gens": (cmd_gens, "normalized minimal generators of the Rees ideal"),
    "trace": (cmd_trace, "step-by-step trace of the generator sweep"),
    "graph": (cmd_graph, "two-row graph of the generators (DOT or JSON)"),
    "gb": (cmd_gb, "minimal Groebner basis including the auxiliary element g0"),
    "colon": (cmd_colon, "minimal generators of every colon ideal M_j"),
    "resolution": (cmd_resolution, "free resolution matrices phi0, phi1, phi2"),
    "betti": (cmd_betti, "Betti numbers and projective dimension"),
    "verify": (cmd_verify, "run every oracle check on one parameter set"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reeskit",
        description="Rees algebras of tri-generated monomial ideals in two variables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("params", nargs="*", type=int, metavar="N", help="d1 d2 u1 u2")
        sp.add_argument("--ideal", help='ideal generators, e.g. "T0^15,T0^9*T1^6,T1^13"')
        sp.add_argument("--format", choices=FORMATS[name], default=FORMATS[name][0])
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        if name == "trace":
            sp.add_argument("--plane", action="store_true", help="single-sequence trace for equigenerated input")
        if name == "graph":
            sp.add_argument("--augmented", action="store_true", help="include g0")
        if name == "resolution":
            sp.add_argument("--minimal", action="store_true", help="reduce to the minimal resolution")
        if name == "verify":
            sp.add_argument("--tbound", type=int, default=None, help="last layer enumerated by the oracle")
    sp = sub.add_parser("sweep", help="verify every parameter set with d1, d2 <= dmax")
    sp.add_argument("--dmax", type=int, required=True)
    sp.add_argument("--no-dedupe", action="store_true", help="verify mirrored parameter sets too")
    sp.add_argument("--format", choices=FORMATS["sweep"], default="text")
    sp.add_argument("-o", "--output")
    return parser


def _emit(text: str, path: Optional[str]) -> None:
    data = text.encode("utf-8")
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sweep":
            if args.dmax < 2:
                raise InvalidParams("--dmax must be at least 2")
            text, code = cmd_sweep(args)
        else:
            p = resolve_params(args)
            text, code = COMMANDS[args.command][0](p, args)
    except (ParseError, InvalidParams) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ReesError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 3
    _emit(text, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
