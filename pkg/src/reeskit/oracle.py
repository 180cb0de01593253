"""Brute-force referee for the generator, Groebner and syzygy claims.

Everything here recomputes from first principles: kernel binomials are
enumerated degree by degree from products of the three ideal generators,
and ideal membership is decided by a small Buchberger engine on
pure-difference binomials.  Nothing is imported from the closed-form code
paths except where a check compares against them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .errors import NonBinomialRemainder, NonUniquePreimage, UnknownLabel
from .monomial import Binomial, IdealParams, Monomial, block_key, normalize

Exps = tuple  # raw exponent 5-tuple


# --- degree layers -----------------------------------------------------------

@dataclass(frozen=True)
class DegreeLayer:
    t: int
    products: tuple[Monomial, ...]
    # preimages[i] lists every (a, b, c) with psi(X0^a X1^b X2^c) = products[i]
    preimages: tuple[tuple[tuple[int, int, int], ...], ...]

    def is_unique(self, i: int) -> bool:
        return len(self.preimages[i]) == 1

    @property
    def all_unique(self) -> bool:
        return all(len(p) == 1 for p in self.preimages)


@dataclass(frozen=True)
class ConsecutiveRelation:
    t: int
    i: int
    s: Monomial
    s_prime: Monomial
    binomial: Binomial


def degree_layer(params: IdealParams, t: int) -> DegreeLayer:
    """All psi-images of X-monomials of degree t, lex-sorted with T0 first."""
    if t < 1:
        raise ValueError("layer degree must be positive")
    d1, d2, u1, u2 = params.key
    found: dict[tuple[int, int], list] = {}
    for a in range(t, -1, -1):
        for b in range(t - a, -1, -1):
            c = t - a - b
            key = (d1 * a + u1 * b, u2 * b + d2 * c)
            found.setdefault(key, []).append((a, b, c))
    keys = sorted(found, reverse=True)
    return DegreeLayer(
        t=t,
        products=tuple(Monomial(k[0], k[1]) for k in keys),
        preimages=tuple(tuple(sorted(found[k], reverse=True)) for k in keys),
    )


def _x(abc) -> Monomial:
    return Monomial(0, 0, *abc)


def _cofactors(g: Monomial, h: Monomial) -> tuple[Monomial, Monomial]:
    l0, l1 = max(g[0], h[0]), max(g[1], h[1])
    return Monomial(l0 - g[0], l1 - g[1]), Monomial(l0 - h[0], l1 - h[1])


def consecutive_relations(params: IdealParams, t: int) -> list[ConsecutiveRelation]:
    """The k_t - 1 relations between lex-neighbours of layer t."""
    layer = degree_layer(params, t)
    out = []
    for i in range(len(layer.products) - 1):
        if not (layer.is_unique(i) and layer.is_unique(i + 1)):
            raise NonUniquePreimage(f"layer {t} of {params} has an ambiguous product at {i}")
        g, h = layer.products[i], layer.products[i + 1]
        s, s2 = _cofactors(g, h)
        b = normalize(s * _x(layer.preimages[i][0]), s2 * _x(layer.preimages[i + 1][0]))
        out.append(ConsecutiveRelation(t, i, s, s2, b))
    return out


def _coprime(a: Exps, b: Exps) -> bool:
    return not any(x and y for x, y in zip(a, b))


def _raw(s: Monomial, abc) -> Exps:
    return (s[0], s[1], abc[0], abc[1], abc[2])


def _ordered(a: Exps, b: Exps) -> tuple[Exps, Exps]:
    return (a, b) if block_key(a) > block_key(b) else (b, a)


def candidate_relations(layer: DegreeLayer) -> list[tuple[Exps, Exps]]:
    """Coprime lex-neighbour relations over every choice of preimage, plus
    coprime relations between two preimages of one product."""
    out = []
    n = len(layer.products)
    for i in range(n):
        pre = layer.preimages[i]
        for p, q in itertools.combinations(pre, 2):
            a, b = _raw(Monomial.one(), p), _raw(Monomial.one(), q)
            if _coprime(a, b):
                out.append(_ordered(a, b))
        if i + 1 < n:
            s, s2 = _cofactors(layer.products[i], layer.products[i + 1])
            for p in pre:
                for q in layer.preimages[i + 1]:
                    a, b = _raw(s, p), _raw(s2, q)
                    if _coprime(a, b):
                        out.append(_ordered(a, b))
    return sorted(set(out), key=lambda f: (block_key(f[0]), block_key(f[1])))


def exhaustive_relations(params: IdealParams, t: int) -> list[tuple[Exps, Exps]]:
    """Every primitive kernel binomial of X-degree t with disjoint X-supports.

    Any kernel binomial of X-degree t is a monomial multiple of one of these
    or of a lower-degree one, so together with lower layers they generate.
    """
    d1, d2, u1, u2 = params.key
    triples = [(a, b, t - a - b) for a in range(t + 1) for b in range(t + 1 - a)]
    out = set()
    for p, q in itertools.combinations(triples, 2):
        if any(x and y for x, y in zip(p, q)):
            continue
        g = Monomial(d1 * p[0] + u1 * p[1], u2 * p[1] + d2 * p[2])
        h = Monomial(d1 * q[0] + u1 * q[1], u2 * q[1] + d2 * q[2])
        s, s2 = _cofactors(g, h)
        out.add(_ordered(_raw(s, p), _raw(s2, q)))
    return sorted(out, key=lambda f: (block_key(f[0]), block_key(f[1])))


# --- binomial Buchberger engine ---------------------------------------------

def _psi_raw(m: Exps, params: IdealParams) -> tuple[int, int]:
    return (
        m[0] + params.d1 * m[2] + params.u1 * m[3],
        m[1] + params.u2 * m[3] + params.d2 * m[4],
    )


class BinomialEngine:
    """Incremental Groebner basis of an ideal generated by pure-difference
    binomials (lead - tail) under the block order.

    Only the coprime-leading-term criterion is used to skip pairs.
    """

    def __init__(self, params: Optional[IdealParams] = None):
        self.params = params
        self.leads: list[Exps] = []
        self.tails: list[Exps] = []

    def copy(self) -> BinomialEngine:
        e = BinomialEngine(self.params)
        e.leads = list(self.leads)
        e.tails = list(self.tails)
        return e

    def nf(self, m: Exps) -> Exps:
        """Normal form of a monomial; a monomial stays a monomial."""
        leads, tails = self.leads, self.tails
        n = len(leads)
        while True:
            m0, m1, m2, m3, m4 = m
            for k in range(n):
                a = leads[k]
                if a[0] <= m0 and a[1] <= m1 and a[2] <= m2 and a[3] <= m3 and a[4] <= m4:
                    b = tails[k]
                    m = (m0 - a[0] + b[0], m1 - a[1] + b[1], m2 - a[2] + b[2],
                         m3 - a[3] + b[3], m4 - a[4] + b[4])
                    break
            else:
                return m

    def contains(self, lead: Exps, tail: Exps) -> bool:
        return self.nf(lead) == self.nf(tail)

    def _check(self, a: Exps, b: Exps) -> None:
        if self.params is None:
            return
        if (a[2] + a[3] + a[4] != b[2] + b[3] + b[4]
                or _psi_raw(a, self.params) != _psi_raw(b, self.params)):
            raise NonBinomialRemainder(f"remainder {a} - {b} left the kernel")

    def add(self, lead: Exps, tail: Exps) -> bool:
        """Add a generator and restore the Groebner property.  Returns False
        if it was already a member."""
        a, b = self.nf(lead), self.nf(tail)
        if a == b:
            return False
        pending = [_ordered(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.nf(a), self.nf(b)
            if a == b:
                continue
            a, b = _ordered(a, b)
            self._check(a, b)
            new = len(self.leads)
            for k in range(new):
                c = self.leads[k]
                if _coprime(a, c):
                    continue
                l = tuple(max(x, y) for x, y in zip(a, c))
                s1 = tuple(li - ai + bi for li, ai, bi in zip(l, a, b))
                s2 = tuple(li - ci + di for li, ci, di in zip(l, c, self.tails[k]))
                pending.append((s1, s2))
            self.leads.append(a)
            self.tails.append(b)
        return True

    def basis(self) -> list[Binomial]:
        return [Binomial(Monomial.from_exponents(a), Monomial.from_exponents(b))
                for a, b in zip(self.leads, self.tails)]


def _raw_pair(f: Binomial) -> tuple[Exps, Exps]:
    return tuple(f.lead), tuple(f.tail)


def buchberger_binomial(basis: Iterable[Binomial], params: Optional[IdealParams] = None) -> list[Binomial]:
    """Groebner basis of <basis>.  With ``params`` given every new element is
    asserted to be a kernel binomial."""
    eng = BinomialEngine(params)
    for f in basis:
        eng.add(*_raw_pair(f))
    return eng.basis()


def ideal_membership(f: Binomial, basis: Iterable[Binomial], params: Optional[IdealParams] = None) -> bool:
    eng = BinomialEngine(params)
    for g in basis:
        eng.add(*_raw_pair(g))
    return eng.contains(*_raw_pair(f))


# --- brute-force minimal generators -----------------------------------------

@dataclass
class BruteForceResult:
    generators: list[Binomial]
    layer_of: dict  # Binomial -> X-degree of its layer
    t_bound: int
    # candidates that were neither kept nor in the ideal of the kept set
    unexplained: list[Binomial] = field(default_factory=list)
    engine: Optional[BinomialEngine] = None


def _to_binomial(f: tuple[Exps, Exps]) -> Binomial:
    return Binomial(Monomial.from_exponents(f[0]), Monomial.from_exponents(f[1]))


def brute_force(params: IdealParams, t_bound: Optional[int] = None) -> BruteForceResult:
    if t_bound is None:
        from .generators import delta_data  # only for the default bound
        t_bound = delta_data(params).t + 1
    eng = BinomialEngine(params)
    kept: list[tuple[Exps, Exps]] = []
    layer_of = {}
    unexplained = []
    for t in range(1, t_bound + 1):
        fresh = [f for f in candidate_relations(degree_layer(params, t)) if not eng.contains(*f)]
        chosen = []
        for i, f in enumerate(fresh):
            trial = eng.copy()
            for k, g in enumerate(fresh):
                if k != i:
                    trial.add(*g)
            if not trial.contains(*f):
                chosen.append(f)
        for f in chosen:
            eng.add(*f)
            kept.append(f)
            layer_of[_to_binomial(f)] = t
        unexplained.extend(_to_binomial(f) for f in fresh if not eng.contains(*f))
    gens = [_to_binomial(f) for f in kept]
    return BruteForceResult(gens, layer_of, t_bound, unexplained, eng)


def brute_force_minimal_generators(params: IdealParams, t_bound: Optional[int] = None) -> set[Binomial]:
    """Minimal generators found by layer-wise indispensability testing."""
    return set(brute_force(params, t_bound).generators)


# --- Groebner and syzygy referees -------------------------------------------

@dataclass
class SPolyReport:
    pairs_checked: int = 0
    nonzero: list = field(default_factory=list)  # (i, j, remainder lead, remainder tail)
    divisible: list = field(default_factory=list)  # (i, j) with lt(g_i) | lt(g_j)

    @property
    def ok(self) -> bool:
        return not self.nonzero and not self.divisible


def verify_gb_spolys(elements) -> SPolyReport:
    """Reduce every S-polynomial modulo the given binomials (no closure)."""
    elems = list(getattr(elements, "elements", elements))
    eng = BinomialEngine()
    eng.leads = [tuple(b.lead) for b in elems]
    eng.tails = [tuple(b.tail) for b in elems]
    rep = SPolyReport()
    n = len(elems)
    for i in range(n):
        for j in range(n):
            if i != j and Monomial.divides(elems[i].lead, elems[j].lead):
                rep.divisible.append((i, j))
    for i, j in itertools.combinations(range(n), 2):
        a, b = eng.leads[i], eng.tails[i]
        c, d = eng.leads[j], eng.tails[j]
        l = tuple(max(x, y) for x, y in zip(a, c))
        s1 = tuple(li - ai + bi for li, ai, bi in zip(l, a, b))
        s2 = tuple(li - ci + di for li, ci, di in zip(l, c, d))
        r1, r2 = eng.nf(s1), eng.nf(s2)
        rep.pairs_checked += 1
        if r1 != r2:
            hi, lo = _ordered(r1, r2)
            rep.nonzero.append((i, j, Monomial.from_exponents(hi), Monomial.from_exponents(lo)))
    return rep


def _expand(vec, targets: Mapping) -> dict:
    acc: dict = {}
    for label, term in vec:
        if label not in targets:
            raise UnknownLabel(label)
        coeff, mono = term
        for m, c in targets[label].items():
            key = tuple(x + y for x, y in zip(mono, m))
            v = acc.get(key, 0) + coeff * c
            if v:
                acc[key] = v
            else:
                del acc[key]
    return acc


def _as_poly_vectors(against) -> Mapping:
    """Label -> {exponent key: coefficient}; GB elements become polynomials,
    syzygy vectors become polynomials over (label, monomial) keys."""
    if hasattr(against, "elements"):
        return {i: {tuple(b.lead): 1, tuple(b.tail): -1} for i, b in enumerate(against.elements)}
    out = {}
    for label, vec in against.items():
        out[label] = {(inner,) + tuple(t.mono): t.coeff for inner, t in vec}
    return out


def verify_syzygy_identity(s, against) -> bool:
    """True iff sum(coefficient * target) vanishes identically.

    ``against`` is a GroebnerBasis (labels are element indices) or a
    mapping from edge labels to first syzygies.
    """
    targets = _as_poly_vectors(against)
    if hasattr(against, "elements"):
        return not _expand(s, targets)
    # second syzygy: coefficients multiply the monomial part of each entry
    acc: dict = {}
    for label, term in s:
        if label not in targets:
            raise UnknownLabel(label)
        for key, c in targets[label].items():
            inner, mono = key[0], key[1:]
            k = (inner,) + tuple(x + y for x, y in zip(term.mono, mono))
            v = acc.get(k, 0) + term.coeff * c
            if v:
                acc[k] = v
            else:
                del acc[k]
    return not acc
