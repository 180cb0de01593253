"""Minimal generators of the Rees ideal of <T0^d1, T0^u1*T1^u2, T1^d2>.

The generators come out of a single sweep over the remainder sequences
``a_k(i) = u_k*i mod d_k`` (k = 1, 2).  A new running maximum in the first
sequence (paired with a new running minimum in the second) yields an
*upper* generator; the dual event yields a *lower* one.  The sweep stops at
the first index where the floor quotients ``b_k(i) = u_k*i // d_k`` advance
in step, or when one remainder returns to zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Optional, Sequence

from .errors import (
    InconsistentSequences,
    NotMinimallyGenerated,
    NotTriGeneratedShape,
)
from .monomial import Binomial, IdealParams, Monomial, format_monomial, normalize, psi


class Kind(enum.Enum):
    UPPER = "upper"
    LOWER = "lower"

    def __str__(self):
        return self.value


def running_extrema(seq: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """1-based indices where ``seq`` attains a new running max / running min."""
    maxima, minima = [], []
    hi = lo = None
    for i, v in enumerate(seq, start=1):
        if hi is None or v >= hi:
            hi = v
            maxima.append(i)
        if lo is None or v <= lo:
            lo = v
            minima.append(i)
    return tuple(maxima), tuple(minima)


@dataclass(frozen=True)
class DeltaData:
    """Remainder/quotient sequences up to the stopping index ``t``.

    Sequences are stored 0-based: ``a1[i - 1]`` is the remainder at index i.
    """

    a1: tuple[int, ...]
    a2: tuple[int, ...]
    b1: tuple[int, ...]
    b2: tuple[int, ...]
    delta_max1: tuple[int, ...]
    delta_min1: tuple[int, ...]
    delta_max2: tuple[int, ...]
    delta_min2: tuple[int, ...]
    q: int
    i_stop: int
    t: int

    @property
    def delta(self) -> tuple[int, ...]:
        """X1-degrees of the leading terms of the minimal generators."""
        return tuple(sorted(set(self.delta_max1) | set(self.delta_min1) | {self.t}))


def periods(params: IdealParams) -> tuple[int, int]:
    return (
        params.d1 // gcd(params.d1, params.u1),
        params.d2 // gcd(params.d2, params.u2),
    )


def _floor_step(u: int, d: int, i: int) -> int:
    return u * i // d - u * (i - 1) // d


def stopping_index(params: IdealParams) -> int:
    """Smallest i > 1 at which both floor quotients advance by the same amount."""
    d1, d2, u1, u2 = params.key
    i = 2
    # both remainders vanish at lcm of the periods, so the loop terminates
    while _floor_step(u1, d1, i) != _floor_step(u2, d2, i):
        i += 1
    return i


def delta_data(params: IdealParams) -> DeltaData:
    d1, d2, u1, u2 = params.key
    q = min(periods(params))
    i_stop = stopping_index(params)
    t = min(i_stop, q)
    idx = range(1, t + 1)
    a1 = tuple(u1 * i % d1 for i in idx)
    a2 = tuple(u2 * i % d2 for i in idx)
    max1, min1 = running_extrema(a1)
    max2, min2 = running_extrema(a2)
    return DeltaData(
        a1=a1,
        a2=a2,
        b1=tuple(u1 * i // d1 for i in idx),
        b2=tuple(u2 * i // d2 for i in idx),
        delta_max1=max1,
        delta_min1=min1,
        delta_max2=max2,
        delta_min2=min2,
        q=q,
        i_stop=i_stop,
        t=t,
    )


@dataclass(frozen=True)
class PurePowerRelation:
    k: int
    k1: int
    k2: int


def pure_power_relation(params: IdealParams) -> PurePowerRelation:
    """Smallest (k, k1, k2) with psi(X1^k) = psi(X0^k1 * X2^k2)."""
    k = lcm(*periods(params))
    k1, r1 = divmod(k * params.u1, params.d1)
    k2, r2 = divmod(k * params.u2, params.d2)
    assert r1 == 0 and r2 == 0
    assert psi(Monomial(x1=k), params) == psi(Monomial(x0=k1, x2=k2), params)
    return PurePowerRelation(k, k1, k2)


@dataclass
class TraceRow:
    """One row of the algorithm trace; extrema are set only when updated."""

    j: int
    a1: int
    b1: int
    a2: Optional[int] = None
    b2: Optional[int] = None
    max1: Optional[int] = None
    max2: Optional[int] = None
    min1: Optional[int] = None
    min2: Optional[int] = None
    gens: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "a1": self.a1,
            "b1": self.b1,
            "a2": self.a2,
            "b2": self.b2,
            "max1": self.max1,
            "max2": self.max2,
            "min1": self.min1,
            "min2": self.min2,
            "gens": ", ".join(self.gens) if self.gens else None,
        }


@dataclass(frozen=True)
class GeneratorRecord:
    index: int
    binomial: Binomial
    step: int
    kind: Kind
    # the binomial as the algorithm writes it: first - second
    emitted_form: tuple[Monomial, Monomial]
    trace_row: TraceRow = field(compare=False, repr=False)

    def emitted_string(self) -> str:
        return f"{self.emitted_form[0]} - {self.emitted_form[1]}"


def _emit(records, row, step, kind, first, second):
    text = f"{format_monomial(first)} - {format_monomial(second)}"
    row.gens.append(text)
    records.append(
        GeneratorRecord(
            index=len(records) + 1,
            binomial=normalize(first, second),
            step=step,
            kind=kind,
            emitted_form=(first, second),
            trace_row=row,
        )
    )


def _run_general(params: IdealParams) -> tuple[list[GeneratorRecord], list[TraceRow]]:
    d1, d2, u1, u2 = params.key
    records: list[GeneratorRecord] = []
    a1, a2 = u1, u2
    b1_prev = b2_prev = 0
    max1 = min1 = a1
    max2 = min2 = a2
    j = 1
    row = TraceRow(1, a1, 0, a2, 0, max1, max2, min1, min2)
    rows = [row]
    _emit(records, row, 1, Kind.UPPER, Monomial(t1=u2, x0=1), Monomial(t0=d1 - u1, x1=1))
    _emit(records, row, 1, Kind.LOWER, Monomial(t1=d2 - u2, x1=1), Monomial(t0=u1, x2=1))
    while a1 != 0 and a2 != 0:
        j += 1
        a1, b1 = u1 * j % d1, u1 * j // d1
        a2, b2 = u2 * j % d2, u2 * j // d2
        row = TraceRow(j, a1, b1, a2, b2)
        rows.append(row)
        new_max1, new_min1 = a1 > max1, a1 < min1
        new_max2, new_min2 = a2 > max2, a2 < min2
        step1, step2 = b1 - b1_prev, b2 - b2_prev
        if step1 == step2:
            if step1 == 0:
                row.max1 = a1 if new_max1 else None
                row.max2 = a2 if new_max2 else None
                _emit(
                    records, row, j, Kind.UPPER,
                    Monomial(t0=d1 - a1, t1=d2 - a2, x1=j),
                    Monomial(x0=b1 + 1, x2=b2 + 1),
                )
            else:
                row.min1 = a1 if new_min1 else None
                row.min2 = a2 if new_min2 else None
                _emit(
                    records, row, j, Kind.LOWER,
                    Monomial(t0=a1, t1=a2, x0=b1, x2=b2),
                    Monomial(x1=j),
                )
            break
        if new_max1 != new_min2 or new_min1 != new_max2:
            raise InconsistentSequences(
                f"{params}: extrema of the two sequences disagree at j={j}"
            )
        if new_max1 and new_min2:
            max1, min2 = a1, a2
            row.max1, row.min2 = a1, a2
            _emit(
                records, row, j, Kind.UPPER,
                Monomial(t1=a2, x0=b1 + 1, x2=b2),
                Monomial(t0=d1 - a1, x1=j),
            )
        if new_min1 and new_max2:
            min1, max2 = a1, a2
            row.min1, row.max2 = a1, a2
            _emit(
                records, row, j, Kind.LOWER,
                Monomial(t1=d2 - a2, x1=j),
                Monomial(t0=a1, x0=b1, x2=b2 + 1),
            )
        b1_prev, b2_prev = b1, b2
    return records, rows


def minimal_generators(params: IdealParams) -> list[GeneratorRecord]:
    """Minimal generating set of the Rees ideal, in emission order."""
    return _run_general(params)[0]


def algorithm_trace(params: IdealParams) -> list[TraceRow]:
    """Every loop iteration of the general sweep, including silent ones."""
    return _run_general(params)[1]


def _run_plane_curve(d: int, u: int) -> tuple[list[GeneratorRecord], list[TraceRow]]:
    # validates 0 < u < d
    IdealParams(d, d, u, d - u)
    records: list[GeneratorRecord] = []
    j, a, b = 1, u, 0
    lo = hi = a
    row = TraceRow(1, a, b, max1=a, min1=a)
    rows = [row]
    _emit(records, row, 1, Kind.UPPER, Monomial(t1=d - u, x0=1), Monomial(t0=d - u, x1=1))
    _emit(records, row, 1, Kind.LOWER, Monomial(t1=u, x1=1), Monomial(t0=u, x2=1))
    while a != 0:
        j += 1
        a, b = u * j % d, u * j // d
        row = TraceRow(j, a, b)
        rows.append(row)
        if a > hi:
            hi = row.max1 = a
            _emit(
                records, row, j, Kind.UPPER,
                Monomial(t1=d - a, x0=b + 1, x2=j - b - 1),
                Monomial(t0=d - a, x1=j),
            )
        if a < lo:
            lo = row.min1 = a
            _emit(
                records, row, j, Kind.LOWER,
                Monomial(t1=a, x1=j),
                Monomial(t0=a, x0=b, x2=j - b),
            )
    return records, rows


def minimal_generators_plane_curve(d: int, u: int) -> list[GeneratorRecord]:
    """Single-sequence sweep for <T0^d, T0^u*T1^(d-u), T1^d>."""
    return _run_plane_curve(d, u)[0]


def plane_curve_trace(d: int, u: int) -> list[TraceRow]:
    return _run_plane_curve(d, u)[1]


def skip_optimized_indices(params: IdealParams) -> list[int]:
    """Emission steps, found by jumping to (last max index + last min index)."""
    d1, d2, u1, u2 = params.key
    c1 = c2 = 1
    max1 = min1 = u1
    max2 = min2 = u2
    steps = [1]
    while True:
        j = c1 + c2
        steps.append(j)
        if _floor_step(u1, d1, j) == _floor_step(u2, d2, j):
            return steps
        a1, a2 = u1 * j % d1, u2 * j % d2
        if a1 > max1 and a2 < min2:
            max1, min2, c1 = a1, a2, j
        elif a1 < min1 and a2 > max2:
            min1, max2, c2 = a1, a2, j
        else:
            raise InconsistentSequences(f"{params}: index {j} is not an extremum")
        if a1 == 0 or a2 == 0:
            return steps


def normalize_input(m1: Monomial, m2: Monomial, m3: Monomial) -> IdealParams:
    """Reduce a tri-generated monomial ideal in T0, T1 to IdealParams."""
    gens = (m1, m2, m3)
    for m in gens:
        if m.x_degree:
            raise NotTriGeneratedShape(f"{m} involves X variables")
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            if i != j and a.divides(b):
                raise NotMinimallyGenerated(f"{a} divides {b}")
    mu0 = min(m[0] for m in gens)
    mu1 = min(m[1] for m in gens)
    reduced = sorted(((m[0] - mu0, m[1] - mu1) for m in gens), reverse=True)
    (d1, z1), (u1, u2), (z0, d2) = reduced
    if z1 or z0 or not (u1 and u2):
        raise NotTriGeneratedShape(f"reduced generators {reduced} are not T0^d1, T0^u1*T1^u2, T1^d2")
    return IdealParams(d1, d2, u1, u2, (mu0, mu1))


TRACE_COLUMNS = ("j", "a1", "b1", "a2", "b2", "max1", "max2", "min1", "min2", "gens")
PLANE_TRACE_COLUMNS = ("j", "a", "b", "max", "min", "gens")


def _cell(v) -> str:
    return "" if v is None else str(v)


def trace_tsv(rows: list[TraceRow], plane: bool = False) -> str:
    lines = ["\t".join(PLANE_TRACE_COLUMNS if plane else TRACE_COLUMNS)]
    for r in rows:
        if plane:
            cells = (r.j, r.a1, r.b1, r.max1, r.min1)
        else:
            cells = (r.j, r.a1, r.b1, r.a2, r.b2, r.max1, r.max2, r.min1, r.min2)
        lines.append("\t".join([_cell(c) for c in cells] + [", ".join(r.gens)]))
    return "\n".join(lines) + "\n"


def trace_json(rows: list[TraceRow], plane: bool = False) -> list[dict]:
    out = []
    for r in rows:
        d = r.as_dict()
        if plane:
            d = {"j": d["j"], "a": d["a1"], "b": d["b1"], "max": d["max1"],
                 "min": d["min1"], "gens": d["gens"]}
        out.append(d)
    return out


def records_json(records: list[GeneratorRecord]) -> list[dict]:
    return [
        {
            "index": g.index,
            "kind": g.kind.value,
            "step": g.step,
            "lead": str(g.binomial.lead),
            "tail": str(g.binomial.tail),
            "emitted": g.emitted_string(),
        }
        for g in records
    ]

