"""Monomials and binomials in S = K[T0, T1, X0, X1, X2] and the block term order.

A monomial is an immutable exponent vector ``(T0, T1, X0, X1, X2)``.  The
term order compares the X-block first (degrevlex, X2 < X0 < X1) and breaks
ties on the T-block (degrevlex, T0 < T1).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    EqualTerms,
    ExponentOverflow,
    InvalidParams,
    NotDivisible,
    ParseError,
    WrongVariable,
)

VARIABLES = ("T0", "T1", "X0", "X1", "X2")
T_VARIABLES = VARIABLES[:2]
MAX_EXPONENT = 2**63 - 1


def block_key(e: tuple) -> tuple:
    """Sort key realising the block order on a raw exponent 5-tuple."""
    return (e[2] + e[3] + e[4], -e[4], -e[2], e[0] + e[1], -e[0])


class Monomial(tuple):
    """Exponent vector over (T0, T1, X0, X1, X2).

    Equality and hashing are those of the underlying tuple; the rich
    comparisons follow the block term order, so ``sorted`` and ``max`` do
    the expected thing.
    """

    __slots__ = ()

    def __new__(cls, t0: int = 0, t1: int = 0, x0: int = 0, x1: int = 0, x2: int = 0):
        return cls.from_exponents((t0, t1, x0, x1, x2))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Monomial:
        e = tuple(exponents)
        if len(e) != 5:
            raise ValueError(f"expected 5 exponents, got {len(e)}")
        for x in e:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"exponents must be integers, got {x!r}")
        if min(e) < 0:
            raise ValueError(f"negative exponent in {e}")
        if max(e) > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent exceeds 64-bit range in {e}")
        return tuple.__new__(cls, e)

    @classmethod
    def one(cls) -> Monomial:
        return tuple.__new__(cls, (0, 0, 0, 0, 0))

    @classmethod
    def parse(cls, text: str, allowed: tuple[str, ...] = VARIABLES) -> Monomial:
        return parse_monomial(text, allowed)

    t0 = property(lambda self: self[0])
    t1 = property(lambda self: self[1])
    x0 = property(lambda self: self[2])
    x1 = property(lambda self: self[3])
    x2 = property(lambda self: self[4])

    @property
    def x_degree(self) -> int:
        return self[2] + self[3] + self[4]

    @property
    def t_degree(self) -> int:
        return self[0] + self[1]

    @property
    def x_part(self) -> Monomial:
        return tuple.__new__(Monomial, (0, 0, self[2], self[3], self[4]))

    @property
    def t_part(self) -> Monomial:
        return tuple.__new__(Monomial, (self[0], self[1], 0, 0, 0))

    def is_one(self) -> bool:
        return not any(self)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other: Monomial) -> Monomial:  # type: ignore[override]
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial.from_exponents(a + b for a, b in zip(self, other))

    def __pow__(self, n: int) -> Monomial:
        if n < 0:
            raise ValueError("negative power")
        return Monomial.from_exponents(a * n for a in self)

    def __truediv__(self, other: Monomial) -> Monomial:
        return divide(self, other)

    def __lt__(self, other):
        return block_key(self) < block_key(other)

    def __le__(self, other):
        return block_key(self) <= block_key(other)

    def __gt__(self, other):
        return block_key(self) > block_key(other)

    def __ge__(self, other):
        return block_key(self) >= block_key(other)

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial('{self}')"


def cmp_block_order(a: Monomial, b: Monomial) -> int:
    """Three-way comparison under the block order: -1, 0 or 1."""
    ka, kb = block_key(a), block_key(b)
    return (ka > kb) - (ka < kb)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return Monomial.from_exponents(max(x, y) for x, y in zip(a, b))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return Monomial.from_exponents(min(x, y) for x, y in zip(a, b))


def divide(a: Monomial, b: Monomial) -> Monomial:
    """Return a / b; raises NotDivisible unless b | a."""
    diff = tuple(x - y for x, y in zip(a, b))
    if min(diff) < 0:
        raise NotDivisible(f"{b} does not divide {a}")
    return tuple.__new__(Monomial, diff)


def format_monomial(m: Iterable[int]) -> str:
    factors = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


_TOKEN = re.compile(r"\s*(?:(?P<var>[A-Za-z]\w*)|(?P<num>\d+)|(?P<op>[*^]))")


def parse_monomial(text: str, allowed: tuple[str, ...] = VARIABLES, offset: int = 0) -> Monomial:
    """Parse ``factor ('*' factor)*`` with ``factor := VAR ('^' uint)?``, or ``1``.

    ``offset`` is added to reported error positions (used when the text is a
    slice of a longer input).
    """
    exps = [0] * 5
    stripped = text.strip()
    if stripped == "1":
        return Monomial.one()
    pos = 0
    expect_factor = True
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if expect_factor:
            m = _TOKEN.match(text, pos)
            if not m or not m.group("var"):
                raise ParseError("malformed monomial", offset + pos, "a variable name")
            name = m.group("var")
            if name not in VARIABLES:
                raise ParseError(f"unknown variable {name!r}", offset + m.start("var"), "/".join(allowed))
            if name not in allowed:
                raise WrongVariable(f"variable {name} not allowed here", offset + m.start("var"), "/".join(allowed))
            pos = m.end()
            power = 1
            m = _TOKEN.match(text, pos)
            if m and m.group("op") == "^":
                m2 = _TOKEN.match(text, m.end())
                if not m2 or m2.group("num") is None:
                    raise ParseError("missing exponent", offset + m.end(), "an unsigned integer")
                power = int(m2.group("num"))
                pos = m2.end()
            exps[VARIABLES.index(name)] += power
            expect_factor = False
        else:
            if pos >= n:
                break
            if text[pos] != "*":
                raise ParseError("unexpected character", offset + pos, "'*' or end of monomial")
            pos += 1
            expect_factor = True
    return Monomial.from_exponents(exps)


@dataclass(frozen=True)
class IdealParams:
    """Exponents of I = <T0^d1, T0^u1*T1^u2, T1^d2> after removing the gcd.

    ``common_factor`` holds the exponents (mu0, mu1) of the extracted gcd
    h = T0^mu0 * T1^mu1.
    """

    d1: int
    d2: int
    u1: int
    u2: int
    common_factor: tuple[int, int] = (0, 0)

    def __post_init__(self):
        for name in ("d1", "d2", "u1", "u2"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidParams(f"{name} must be an integer")
            if v > MAX_EXPONENT:
                raise ExponentOverflow(f"{name} exceeds 64-bit range")
        if not (0 < self.u1 < self.d1 and 0 < self.u2 < self.d2):
            raise InvalidParams(
                f"need 0 < u1 < d1 and 0 < u2 < d2, got (d1,d2,u1,u2)={self.key}"
            )
        if min(self.common_factor) < 0:
            raise InvalidParams("common factor exponents must be non-negative")

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.d1, self.d2, self.u1, self.u2)

    def mirrored(self) -> IdealParams:
        """Parameters after swapping T0 <-> T1 (and hence X0 <-> X2)."""
        mu0, mu1 = self.common_factor
        return IdealParams(self.d2, self.d1, self.u2, self.u1, (mu1, mu0))

    def ideal_generators(self) -> tuple[Monomial, Monomial, Monomial]:
        """psi(X0), psi(X1), psi(X2): the generators of the reduced ideal."""
        return (
            Monomial(self.d1, 0),
            Monomial(self.u1, self.u2),
            Monomial(0, self.d2),
        )

    def __str__(self) -> str:
        return f"({self.d1},{self.d2},{self.u1},{self.u2})"


def psi(m: Monomial, params: IdealParams) -> Monomial:
    """Toric map X0 -> T0^d1, X1 -> T0^u1*T1^u2, X2 -> T1^d2."""
    return Monomial(
        m[0] + params.d1 * m[2] + params.u1 * m[3],
        m[1] + params.u2 * m[3] + params.d2 * m[4],
    )


@dataclass(frozen=True)
class Binomial:
    """lead - tail with lead strictly greater than tail in the block order."""

    lead: Monomial
    tail: Monomial

    def __post_init__(self):
        if not block_key(self.lead) > block_key(self.tail):
            raise ValueError(f"lead {self.lead} must exceed tail {self.tail}")

    @property
    def terms(self) -> tuple[Monomial, Monomial]:
        return (self.lead, self.tail)

    def is_coprime(self) -> bool:
        return gcd(self.lead, self.tail).is_one()

    def x_degree(self) -> int:
        return self.lead.x_degree

    def __str__(self) -> str:
        return f"{self.lead} - {self.tail}"

    def __repr__(self) -> str:
        return f"Binomial('{self}')"


def normalize(a: Monomial, b: Monomial) -> Binomial:
    """Order an unordered pair of distinct monomials as lead - tail."""
    c = cmp_block_order(a, b)
    if c == 0:
        raise EqualTerms(f"binomial with equal terms {a}")
    return Binomial(a, b) if c > 0 else Binomial(b, a)


def is_kernel_binomial(b: Binomial, params: IdealParams) -> bool:
    return (
        b.lead.x_degree == b.tail.x_degree
        and psi(b.lead, params) == psi(b.tail, params)
    )


def parse_binomial(text: str) -> Binomial:
    """Parse ``m1 - m2`` into a normalized binomial."""
    left, sep, right = text.partition("-")
    if not sep:
        raise ParseError("missing '-'", len(text), "'-' between two monomials")
    return normalize(parse_monomial(left), parse_monomial(right, offset=len(left) + 1))
