"""Minimal Groebner basis {g0, g1, ..., gr} under the block order, and the
colon ideals M_j = <lt(g_{j+1}), ..., lt(g_r)> : <lt(g_j)>."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, NotInDelta
from .generators import DeltaData, delta_data, minimal_generators
from .monomial import Binomial, IdealParams, Monomial, divide, lcm, normalize


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Binomial, ...]
    params: IdealParams

    @property
    def r(self) -> int:
        return len(self.elements) - 1

    def lt(self, j: int) -> Monomial:
        return self.elements[j].lead

    def tt(self, j: int) -> Monomial:
        return self.elements[j].tail

    def to_text(self) -> str:
        return "".join(f"{b}\n" for b in self.elements)

    def to_json(self) -> list[dict]:
        return [
            {"index": i, "lead": list(b.lead), "tail": list(b.tail), "text": str(b)}
            for i, b in enumerate(self.elements)
        ]

    def to_cas(self) -> str:
        return "{" + ", ".join(f"{b.lead} - {b.tail}" for b in self.elements) + "}\n"


@dataclass(frozen=True)
class ColonIdealGens:
    j: int
    generators: tuple[Monomial, ...]


def auxiliary_element(params: IdealParams) -> Binomial:
    """g0 = T1^d2*X0 - T0^d1*X2."""
    return normalize(Monomial(t1=params.d2, x0=1), Monomial(t0=params.d1, x2=1))


def groebner_basis(params: IdealParams) -> GroebnerBasis:
    gens = [g.binomial for g in minimal_generators(params)]
    g0 = auxiliary_element(params)
    assert g0.lead == Monomial(t1=params.d2, x0=1)
    for b in gens:
        lead = b.lead
        # leading X-block is a pure X1 power and the T-part is below (d1, d2)
        assert lead.x0 == 0 and lead.x2 == 0 and lead.x1 > 0
        assert lead.t0 < params.d1 and lead.t1 < params.d2
    return GroebnerBasis((g0, *gens), params)


def iota(dd: DeltaData, delta: int) -> int:
    """Index j >= 3 of the basis element whose leading X1-degree is delta."""
    ordered = [x for x in dd.delta if x != 1]
    try:
        return 3 + ordered.index(delta)
    except ValueError:
        raise NotInDelta(delta) from None


def colon_ideal_gens(gb: GroebnerBasis, j: int, dd: DeltaData | None = None) -> ColonIdealGens:
    """Minimal generators of M_j via the closed forms (increasing X1-degree)."""
    r = gb.r
    if not 0 <= j < r:
        raise IndexOutOfRange(f"j={j} outside 0..{r - 1}")
    if j == 0:
        return ColonIdealGens(0, (Monomial(x1=1),))
    dd = dd or delta_data(gb.params)
    t = dd.t
    if j in (1, 2):
        delta = 1
        upper = j == 1
    else:
        delta = dd.delta[j - 2]
        upper = delta in dd.delta_max1
        assert upper or delta in dd.delta_min1
    same = dd.delta_max1 if upper else dd.delta_min1
    opposite = dd.delta_min1 if upper else dd.delta_max1
    eps = min([g for g in same if delta < g < t] + [t])
    zetas = [z for z in opposite if delta < z < eps]
    x1_delta = Monomial(x1=delta)
    out = []
    if j == 1:
        out.append(Monomial(t1=gb.params.d2 - gb.params.u2))
    for z in zetas:
        out.append(divide(gb.lt(iota(dd, z)), x1_delta))
    last = gb.lt(iota(dd, eps))
    t_strip = Monomial(t0=last.t0) if upper else Monomial(t1=last.t1)
    out.append(divide(last, t_strip * x1_delta))
    return ColonIdealGens(j, tuple(out))


def minimalize_monomials(ms) -> list[Monomial]:
    """Drop duplicates and every monomial strictly divisible by another."""
    uniq = sorted(set(ms), key=lambda m: (m.x1, m.t_degree, tuple(m)))
    return [m for m in uniq if not any(o != m and o.divides(m) for o in uniq)]


def colon_ideal_gens_bruteforce(gb: GroebnerBasis, j: int) -> ColonIdealGens:
    """M_j straight from the definition: lcm quotients, then minimalize."""
    r = gb.r
    if not 0 <= j < r:
        raise IndexOutOfRange(f"j={j} outside 0..{r - 1}")
    lt_j = gb.lt(j)
    quotients = [divide(lcm(lt_j, gb.lt(k)), lt_j) for k in range(j + 1, r + 1)]
    return ColonIdealGens(j, tuple(minimalize_monomials(quotients)))
