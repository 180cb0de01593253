"""Per-instance verification report and parameter sweeps.

Each check pairs a claim computed by the library with an independent
recomputation from ``oracle`` (or a direct combinatorial assertion).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .generators import (
    delta_data,
    minimal_generators,
    minimal_generators_plane_curve,
    pure_power_relation,
    skip_optimized_indices,
)
from .graph import augment, build_graph
from .groebner import colon_ideal_gens, colon_ideal_gens_bruteforce, groebner_basis
from .monomial import Binomial, IdealParams, Monomial, divide, lcm, normalize
from .oracle import (
    brute_force,
    degree_layer,
    exhaustive_relations,
    verify_gb_spolys,
    verify_syzygy_identity,
)
from .resolution import (
    betti_numbers,
    build_resolution,
    first_syzygies,
    format_poly,
    minimalize,
    second_syzygies,
    verify_complex,
)

SCHEMA_VERSION = 1
MAX_UNIQUENESS_LAYER = 30  # largest layer enumerated when probing preimage ambiguity


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class InstanceReport:
    params: IdealParams
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        d1, d2, u1, u2 = self.params.key
        return {
            "schemaVersion": SCHEMA_VERSION,
            "params": {"d1": d1, "d2": d2, "u1": u1, "u2": u2},
            "checks": [c.to_json() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"params {self.params}"]
        for c in self.checks:
            tail = f"  {c.detail}" if c.detail else ""
            lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name}{tail}")
        lines.append(f"{'all checks pass' if self.passed else 'FAILED'}")
        return "\n".join(lines) + "\n"


def _gen_text(bs) -> str:
    return "; ".join(sorted(str(b) for b in bs))


# --- individual checks --------------------------------------------------------

def _delta_set_structure(params: IdealParams) -> list[str]:
    """Structural facts about the running max/min index sets."""
    dd = delta_data(params)
    problems = []
    sets = ((dd.a1, dd.delta_max1, dd.delta_min1), (dd.a2, dd.delta_max2, dd.delta_min2))
    for k, (a, dmax, dmin) in enumerate(sets, start=1):
        if set(dmax) & set(dmin) != {1}:
            problems.append(f"seq {k}: max/min sets share {sorted(set(dmax) & set(dmin))}")
        for lo in dmin:
            for hi in dmax:
                if a[lo - 1] > a[hi - 1] or (lo != hi and a[lo - 1] == a[hi - 1]):
                    problems.append(f"seq {k}: a[{lo}] vs a[{hi}] out of order")
        for same, other in ((dmin, dmax), (dmax, dmin)):
            for x, y in zip(same, same[1:]):
                if y - x not in other:
                    problems.append(f"seq {k}: gap {y}-{x} missing from opposite set")
                if any(y - x < z < y for z in other):
                    problems.append(f"seq {k}: opposite element between {y - x} and {y}")
    for j in range(1, min(dd.i_stop, dd.t + 1)):
        if (j in dd.delta_max1) != (j in dd.delta_min2) or (j in dd.delta_min1) != (j in dd.delta_max2):
            problems.append(f"index {j}: sequences disagree")
    return problems


def _side_relations(params: IdealParams) -> list[str]:
    """A coprime neighbour relation of psi(X1^j) on the upper (lower) side
    exists exactly when j is a new max (min) of a1 and new min (max) of a2."""
    dd = delta_data(params)
    problems = []
    for j in range(2, min(dd.i_stop, dd.q)):
        layer = degree_layer(params, j)
        i = layer.preimages.index(((0, j, 0),))
        up = i > 0 and layer.preimages[i - 1][0][1] == 0
        down = i + 1 < len(layer.products) and layer.preimages[i + 1][0][1] == 0
        a1, a2 = dd.a1[:j], dd.a2[:j]
        new_upper = a1[-1] > max(a1[:-1]) and a2[-1] < min(a2[:-1])
        new_lower = a1[-1] < min(a1[:-1]) and a2[-1] > max(a2[:-1])
        if up != new_upper or down != new_lower:
            problems.append(f"layer {j}")
    return problems


def _preimage_uniqueness(params: IdealParams, t_bound: int) -> list[str]:
    """Products of a layer have unique preimages below k; at layer k the
    pure-power relation collides exactly when it is X-homogeneous."""
    pp = pure_power_relation(params)
    k = pp.k
    problems = []
    for t in range(1, min(t_bound, k - 1, MAX_UNIQUENESS_LAYER) + 1):
        if not degree_layer(params, t).all_unique:
            problems.append(f"layer {t} ambiguous below k={k}")
    if k <= MAX_UNIQUENESS_LAYER:
        collides = not degree_layer(params, k).all_unique
        if collides != (pp.k1 + pp.k2 == k):
            problems.append(f"layer k={k}: collision {collides}, k1+k2={pp.k1 + pp.k2}")
    return problems


def _edge_correspondence(gb, graph) -> list[str]:
    problems = []
    edges = set(graph.edges)
    for j in range(gb.r):
        colon = set(colon_ideal_gens_bruteforce(gb, j).generators)
        for k in range(j + 1, gb.r + 1):
            q = divide(lcm(gb.lt(j), gb.lt(k)), gb.lt(j))
            if ((j, k) in edges) != (q in colon):
                problems.append(f"({j},{k})")
    return problems


def _swap(m: Monomial) -> Monomial:
    return Monomial(m[1], m[0], m[4], m[3], m[2])


def mirror_binomial(b: Binomial) -> Binomial:
    """Image under T0 <-> T1, X0 <-> X2."""
    return normalize(_swap(b.lead), _swap(b.tail))


def verify_instance(params: IdealParams, t_bound: Optional[int] = None, exhaustive: bool = True) -> InstanceReport:
    rep = InstanceReport(params)
    add = rep.checks.append
    dd = delta_data(params)
    t_bound = dd.t + 1 if t_bound is None else t_bound
    records = minimal_generators(params)
    gens = [g.binomial for g in records]
    r = len(gens)

    # generators vs the brute-force referee
    bf = brute_force(params, t_bound)
    same = set(bf.generators) == set(gens)
    add(Check("generators_match_bruteforce", same,
              "" if same else f"algorithm {{{_gen_text(gens)}}} oracle {{{_gen_text(bf.generators)}}}"))
    late = sorted(str(b) for b, t in bf.layer_of.items() if t > dd.t)
    add(Check("no_generators_beyond_stopping_layer", not late and not bf.unexplained,
              f"stopping layer {dd.t}" + (f"; late {late}" if late else "")
              + (f"; unexplained {[str(b) for b in bf.unexplained]}" if bf.unexplained else "")))
    if exhaustive:
        missing = [
            (t, f) for t in range(1, t_bound + 1)
            for f in exhaustive_relations(params, t) if not bf.engine.contains(*f)
        ]
        add(Check("layers_generated_up_to_bound", not missing,
                  f"layers 1..{t_bound}" + (f"; {len(missing)} kernel binomials outside" if missing else "")))

    # sequence combinatorics
    problems = _delta_set_structure(params)
    add(Check("delta_set_structure", not problems, "; ".join(problems[:5])))
    steps = sorted({g.step for g in records})
    skips = skip_optimized_indices(params)
    add(Check("skip_list_matches_steps", skips == steps, f"skip {skips} steps {steps}"))
    problems = _side_relations(params)
    add(Check("side_relations_match_extrema", not problems, "; ".join(problems[:5])))
    problems = _preimage_uniqueness(params, t_bound)
    add(Check("preimage_uniqueness_below_k", not problems, "; ".join(problems)))
    d1, d2, u1, u2 = params.key
    if d1 == d2 and u1 + u2 == d1:
        plane = [g.binomial for g in minimal_generators_plane_curve(d1, u1)]
        add(Check("plane_curve_agreement", plane == gens, ""))

    # Groebner basis
    gb = groebner_basis(params)
    spol = verify_gb_spolys(gb)
    add(Check("gb_spolys_reduce_to_zero", not spol.nonzero,
              f"{spol.pairs_checked} pairs" + (f"; nonzero at {[(i, j) for i, j, *_ in spol.nonzero]}" if spol.nonzero else "")))
    add(Check("gb_leading_terms_minimal", not spol.divisible, str(spol.divisible) if spol.divisible else ""))
    neg = verify_gb_spolys(gb.elements[1:])
    add(Check("gb_without_g0_fails", bool(neg.nonzero), f"{len(neg.nonzero)} nonzero pairs"))

    # colon ideals
    bad = [j for j in range(gb.r)
           if colon_ideal_gens(gb, j, dd).generators != colon_ideal_gens_bruteforce(gb, j).generators]
    add(Check("colon_ideals_closed_form", not bad, f"mismatch at j={bad}" if bad else f"{gb.r} ideals"))

    # graph
    plain = build_graph(records)
    aug = augment(plain)
    counts = (len(plain.edges), len(plain.triangles), len(aug.edges), len(aug.triangles))
    want = (2 * (r - 2), r - 3, 2 * r - 2, r - 2)
    add(Check("graph_counts", counts == want, f"edges/triangles {counts} expected {want}"))
    problems = _edge_correspondence(gb, aug)
    add(Check("edges_match_colon_generators", not problems, "; ".join(problems[:5])))

    # syzygies and resolution
    s1 = first_syzygies(gb, aug)
    s2 = second_syzygies(gb, aug)
    bad1 = [e for e, s in zip(aug.edges, s1) if not verify_syzygy_identity(s, gb)]
    s1_map = dict(zip(aug.edges, s1))
    bad2 = [tri for tri, s in zip(aug.triangles, s2) if not verify_syzygy_identity(s, s1_map)]
    add(Check("first_syzygies_vanish", not bad1, str(bad1) if bad1 else f"{len(s1)} syzygies"))
    add(Check("second_syzygies_vanish", not bad2, str(bad2) if bad2 else f"{len(s2)} syzygies"))
    res = build_resolution(params)
    for label, rr in (("nonminimal", res), ("minimal", minimalize(res))):
        cx = verify_complex(rr)
        detail = f"{cx.products_checked} products"
        if cx.residuals:
            where, poly = cx.residuals[0]
            detail += f"; {where}: {format_poly(poly)}"
        add(Check(f"complex_{label}", cx.ok, detail))
    mres = minimalize(res)
    consts = mres.phi1.constant_entries() + mres.phi2.constant_entries()
    add(Check("minimal_has_no_constants", not consts, str(consts) if consts else ""))
    betti = betti_numbers(params)
    ranks_ok = res.ranks == (r + 1, 2 * r - 2, r - 2) and mres.ranks == (betti.b0, betti.b1, betti.b2)
    add(Check("ranks_match_betti", ranks_ok and betti.b2 == r - 3,
              f"nonminimal {res.ranks} minimal {mres.ranks} betti {tuple(betti)}"))
    return rep


# --- sweeps ----------------------------------------------------------------

def all_params(dmax: int) -> Iterator[IdealParams]:
    for d1 in range(2, dmax + 1):
        for d2 in range(2, dmax + 1):
            for u1 in range(1, d1):
                for u2 in range(1, d2):
                    yield IdealParams(d1, d2, u1, u2)


def is_canonical(p: IdealParams) -> bool:
    return p.key <= p.mirrored().key


MIRROR_SAMPLE_STRIDE = 7


def _verify_key(args) -> dict:
    key, exhaustive = args
    return verify_instance(IdealParams(*key), exhaustive=exhaustive).to_json()


def _mirror_check(key) -> Optional[str]:
    p = IdealParams(*key)
    mine = {mirror_binomial(g.binomial) for g in minimal_generators(p)}
    theirs = {g.binomial for g in minimal_generators(p.mirrored())}
    if mine != theirs:
        return f"{p} vs {p.mirrored()}: generators not mirrored"
    mirrored_oracle = set(brute_force(p.mirrored()).generators)
    if mirrored_oracle != theirs:
        return f"{p.mirrored()}: oracle disagrees"
    return None


def worker_count() -> int:
    env = os.environ.get("REESKIT_THREADS")
    n = int(env) if env else (os.cpu_count() or 1)
    return max(1, n)


@dataclass
class SweepReport:
    dmax: int
    instances: list[dict]
    total: int
    mirror_failures: list[str]
    mirrored_checked: int
    dedupe: bool

    @property
    def passed(self) -> bool:
        return not self.mirror_failures and all(
            c["pass"] for inst in self.instances for c in inst["checks"]
        )

    def totals(self) -> dict:
        out: dict = {}
        for inst in self.instances:
            for c in inst["checks"]:
                row = out.setdefault(c["name"], {"pass": 0, "fail": 0})
                row["pass" if c["pass"] else "fail"] += 1
        return out

    def failures(self) -> list[dict]:
        return [i for i in self.instances if not all(c["pass"] for c in i["checks"])]

    def to_json(self) -> dict:
        return {
            "schemaVersion": SCHEMA_VERSION,
            "dmax": self.dmax,
            "validParams": self.total,
            "verified": len(self.instances),
            "symmetryDedupe": self.dedupe,
            "mirroredChecked": self.mirrored_checked,
            "mirrorFailures": self.mirror_failures,
            "checks": self.totals(),
            "failures": self.failures(),
            "pass": self.passed,
        }

    def to_text(self) -> str:
        lines = [
            f"sweep dmax={self.dmax}: {self.total} valid params, {len(self.instances)} verified"
            + (" (symmetry dedupe)" if self.dedupe else ""),
            f"mirrored pairs checked: {self.mirrored_checked}, failures: {len(self.mirror_failures)}",
        ]
        for name, row in self.totals().items():
            lines.append(f"{name}: {row['pass']} pass, {row['fail']} fail")
        for inst in self.failures()[:20]:
            p = inst["params"]
            bad = [c["name"] for c in inst["checks"] if not c["pass"]]
            lines.append(f"FAIL ({p['d1']},{p['d2']},{p['u1']},{p['u2']}): {', '.join(bad)}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def _map(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 64:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=64))


def sweep(dmax: int, dedupe: bool = True, exhaustive: bool = True, workers: Optional[int] = None) -> SweepReport:
    """Verify every valid params with d1, d2 <= dmax.

    With ``dedupe`` only one of each mirrored pair is verified in full and
    every MIRROR_SAMPLE_STRIDE-th skipped pair is checked for symmetry.
    """
    workers = worker_count() if workers is None else workers
    everything = list(all_params(dmax))
    todo = [p for p in everything if is_canonical(p)] if dedupe else everything
    results = _map(_verify_key, [(p.key, exhaustive) for p in todo], workers)
    mirror_keys = []
    if dedupe:
        asym = [p.key for p in todo if p.mirrored().key != p.key]
        mirror_keys = asym[::MIRROR_SAMPLE_STRIDE]
    mirror = [m for m in _map(_mirror_check, mirror_keys, workers) if m]
    return SweepReport(dmax, results, len(everything), mirror, len(mirror_keys), dedupe)
