"""First and second syzygies read off the augmented graph, the resulting
free resolution, and its reduction to the minimal one."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, NamedTuple, Union

from .errors import AlreadyMinimal
from .graph import ReesGraph, augment, build_graph, second_targeting_node
from .generators import minimal_generators
from .groebner import GroebnerBasis, groebner_basis
from .monomial import Binomial, IdealParams, Monomial, divide, format_monomial, gcd, lcm

Label = Union[int, tuple]


class Term(NamedTuple):
    coeff: int
    mono: Monomial

    def __str__(self):
        body = format_monomial(self.mono)
        return body if self.coeff == 1 else f"-{body}"


@dataclass(frozen=True)
class SyzygyVector:
    """Sparse vector of signed monomials keyed by basis label."""

    entries: dict

    def __iter__(self):
        return iter(self.entries.items())


@dataclass(frozen=True)
class MonomialMatrix:
    row_labels: tuple
    col_labels: tuple
    entries: dict = field(default_factory=dict)  # (row, col) -> Term

    def __post_init__(self):
        rows, cols = set(self.row_labels), set(self.col_labels)
        for (i, c), term in self.entries.items():
            assert i in rows and c in cols, f"entry ({i}, {c}) outside labels"
            assert term.coeff in (1, -1)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def column(self, col) -> list[tuple[Hashable, Term]]:
        return [(i, self.entries[i, col]) for i in self.row_labels if (i, col) in self.entries]

    def constant_entries(self) -> list[tuple]:
        return [k for k, t in self.entries.items() if t.mono.is_one()]

    def restrict(self, rows, cols) -> MonomialMatrix:
        keep_r, keep_c = set(rows), set(cols)
        return MonomialMatrix(
            tuple(rows),
            tuple(cols),
            {k: t for k, t in self.entries.items() if k[0] in keep_r and k[1] in keep_c},
        )


@dataclass(frozen=True)
class FreeResolution:
    phi0: dict  # label -> Binomial, in basis order
    phi1: MonomialMatrix
    phi2: MonomialMatrix
    minimal: bool = False

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (len(self.phi0), len(self.phi1.col_labels), len(self.phi2.col_labels))


def v_of(gb: GroebnerBasis, a: int, b: int) -> Monomial:
    """lcm(lt(g_a), lt(g_b)) / lt(g_a)."""
    return divide(lcm(gb.lt(a), gb.lt(b)), gb.lt(a))


def w_of(gb: GroebnerBasis, a: int, b: int) -> Monomial:
    """gcd(tt(g_a), tt(g_b))."""
    return gcd(gb.tt(a), gb.tt(b))


def first_syzygies(gb: GroebnerBasis, g: ReesGraph) -> list[SyzygyVector]:
    """One syzygy per edge (j->k): v(j,k) e_j - v(k,j) e_k + w(j,k) e_h."""
    out = []
    for j, k in g.edges:
        h = second_targeting_node(g, (j, k))
        out.append(SyzygyVector({
            j: Term(1, v_of(gb, j, k)),
            k: Term(-1, v_of(gb, k, j)),
            h: Term(1, w_of(gb, j, k)),
        }))
    return out


def second_syzygies(gb: GroebnerBasis, g: ReesGraph) -> list[SyzygyVector]:
    """One syzygy per triangle (j,k,l), h the other node targeting k."""
    out = []
    for j, k, l in g.triangles:
        h = second_targeting_node(g, (j, k))
        out.append(SyzygyVector({
            (j, k): Term(1, v_of(gb, h, k)),
            (j, l): Term(-1, v_of(gb, l, k)),
            (k, l): Term(1, v_of(gb, l, j)),
            (h, k): Term(-1, w_of(gb, j, k)),
        }))
    return out


def _matrix(rows, cols, vectors) -> MonomialMatrix:
    entries = {}
    for c, vec in zip(cols, vectors):
        for label, term in vec:
            entries[label, c] = term
    return MonomialMatrix(tuple(rows), tuple(cols), entries)


def build_resolution(params: IdealParams) -> FreeResolution:
    """Non-minimal resolution 0 -> S^(r-2) -> S^(2r-2) -> S^(r+1)."""
    gb = groebner_basis(params)
    graph = augment(build_graph(minimal_generators(params), name=f"Graph{params}"))
    s1 = first_syzygies(gb, graph)
    s2 = second_syzygies(gb, graph)
    basis = tuple(range(gb.r + 1))
    return FreeResolution(
        phi0={i: gb.elements[i] for i in basis},
        phi1=_matrix(basis, graph.edges, s1),
        phi2=_matrix(graph.edges, graph.triangles, s2),
        minimal=False,
    )


DROPPED_GENERATOR = 0
DROPPED_EDGES = ((0, 2), (1, 2))
DROPPED_TRIANGLE = (1, 2, 3)


def minimalize(res: FreeResolution) -> FreeResolution:
    """Delete g0, the edges 0->2 and 1->2, and the triangle (1,2,3)."""
    if res.minimal:
        raise AlreadyMinimal("resolution is already minimal")
    rows1 = [i for i in res.phi1.row_labels if i != DROPPED_GENERATOR]
    cols1 = [e for e in res.phi1.col_labels if e not in DROPPED_EDGES]
    cols2 = [t for t in res.phi2.col_labels if t != DROPPED_TRIANGLE]
    # plain deletion is only legitimate when the deleted rows vanish on the kept columns
    for c in cols1:
        assert (DROPPED_GENERATOR, c) not in res.phi1.entries, c
    for c in cols2:
        for e in DROPPED_EDGES:
            assert (e, c) not in res.phi2.entries, (e, c)
    return FreeResolution(
        phi0={i: b for i, b in res.phi0.items() if i != DROPPED_GENERATOR},
        phi1=res.phi1.restrict(rows1, cols1),
        phi2=res.phi2.restrict(cols1, cols2),
        minimal=True,
    )


def minimal_resolution(params: IdealParams) -> FreeResolution:
    return minimalize(build_resolution(params))


# --- symbolic verification -------------------------------------------------

def _add(acc: dict, coeff: int, mono: tuple) -> None:
    c = acc.get(mono, 0) + coeff
    if c:
        acc[mono] = c
    else:
        acc.pop(mono, None)


def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def format_poly(poly: dict) -> str:
    if not poly:
        return "0"
    parts = []
    for mono, c in sorted(poly.items(), reverse=True):
        body = format_monomial(mono)
        parts.append(f"{'+' if c > 0 else '-'} {'' if abs(c) == 1 else str(abs(c)) + '*'}{body}")
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


@dataclass
class ComplexReport:
    products_checked: int = 0
    residuals: list = field(default_factory=list)  # (description, polynomial dict)

    @property
    def ok(self) -> bool:
        return not self.residuals


def syzygy_residual(vec: SyzygyVector, targets: dict) -> dict:
    """Expand sum(coeff * target[label]) where targets map labels to polys."""
    acc: dict = {}
    for label, term in vec:
        for mono, c in targets[label].items():
            _add(acc, term.coeff * c, _mul(term.mono, mono))
    return acc


def binomial_poly(b: Binomial) -> dict:
    return {tuple(b.lead): 1, tuple(b.tail): -1}


def verify_complex(res: FreeResolution) -> ComplexReport:
    """Check phi0*phi1 = 0 and phi1*phi2 = 0 by exact expansion."""
    report = ComplexReport()
    gens = {i: binomial_poly(b) for i, b in res.phi0.items()}
    for c in res.phi1.col_labels:
        acc = syzygy_residual(SyzygyVector(dict(res.phi1.column(c))), gens)
        report.products_checked += 1
        if acc:
            report.residuals.append((f"phi0*phi1 column {c}", acc))
    for c in res.phi2.col_labels:
        accs: dict = {}
        for f, t2 in res.phi2.column(c):
            for i, t1 in res.phi1.column(f):
                _add(accs.setdefault(i, {}), t1.coeff * t2.coeff, _mul(t1.mono, t2.mono))
        for i in res.phi1.row_labels:
            report.products_checked += 1
            if accs.get(i):
                report.residuals.append((f"phi1*phi2 row {i} column {c}", accs[i]))
    return report


class Betti(NamedTuple):
    b0: int
    b1: int
    b2: int
    pd: int

    def __str__(self):
        return f"β0={self.b0} β1={self.b1} β2={self.b2} pd={self.pd}"


def betti_numbers(params: IdealParams) -> Betti:
    r = len(minimal_generators(params))
    return Betti(r, 2 * (r - 2), r - 3 if r > 3 else 0, 2 if r > 3 else 1)


# --- export ----------------------------------------------------------------

def label_text(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(map(str, label)) + ")"
    return str(label)


def _entry_text(m: MonomialMatrix, i, c) -> str:
    t = m.entries.get((i, c))
    return "0" if t is None else str(t)


def matrix_text(m: MonomialMatrix) -> str:
    header = [""] + [label_text(c) for c in m.col_labels]
    body = [[label_text(i)] + [_entry_text(m, i, c) for c in m.col_labels] for i in m.row_labels]
    grid = [header] + body
    widths = [max(len(r[k]) for r in grid) for k in range(len(header))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(r, widths)).rstrip() + "\n" for r in grid
    )


def matrix_json(m: MonomialMatrix) -> dict:
    def jl(label):
        return list(label) if isinstance(label, tuple) else label

    triplets = []
    for c in m.col_labels:
        for i, t in m.column(c):
            triplets.append({"row": jl(i), "col": jl(c), "sign": t.coeff, "monomial": format_monomial(t.mono)})
    return {
        "rows": [jl(i) for i in m.row_labels],
        "cols": [jl(c) for c in m.col_labels],
        "entries": triplets,
    }


def matrix_cas(m: MonomialMatrix) -> str:
    if not m.col_labels or not m.row_labels:
        return f"map(S^{len(m.row_labels)},S^{len(m.col_labels)},0)"
    rows = ("{" + ",".join(_entry_text(m, i, c) for c in m.col_labels) + "}" for i in m.row_labels)
    return "matrix{" + ",".join(rows) + "}"


def phi0_text(res: FreeResolution) -> str:
    return "".join(f"{label_text(i)}  {b}\n" for i, b in res.phi0.items())


def phi0_cas(res: FreeResolution) -> str:
    return "matrix{{" + ",".join(f"{b.lead}-{b.tail}" for b in res.phi0.values()) + "}}"


def resolution_json(res: FreeResolution) -> dict:
    return {
        "minimal": res.minimal,
        "ranks": list(res.ranks),
        "phi0": [{"label": i, "lead": str(b.lead), "tail": str(b.tail)} for i, b in res.phi0.items()],
        "phi1": matrix_json(res.phi1),
        "phi2": matrix_json(res.phi2),
    }


def resolution_text(res: FreeResolution) -> str:
    r0, r1, r2 = res.ranks
    kind = "minimal" if res.minimal else "non-minimal"
    return (
        f"# {kind} free resolution: 0 -> S^{r2} -> S^{r1} -> S^{r0}\n"
        f"# phi0\n{phi0_text(res)}"
        f"# phi1\n{matrix_text(res.phi1)}"
        f"# phi2\n{matrix_text(res.phi2)}"
    )


def resolution_cas(res: FreeResolution) -> str:
    return (
        "S = QQ[T0,T1,X0,X1,X2];\n"
        f"phi0 = {phi0_cas(res)};\n"
        f"phi1 = {matrix_cas(res.phi1)};\n"
        f"phi2 = {matrix_cas(res.phi2)};\n"
    )
