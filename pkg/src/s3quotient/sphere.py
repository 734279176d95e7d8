"""Polynomial functions on the 3-sphere and SU(2) multiplets.

A SphereFunction is a polynomial in s, t, sb, tb (sb, tb the complex
conjugates) modulo s*sb + t*tb = 1.  The canonical representative contains no
monomial divisible by t*tb; the rewrite t*tb -> 1 - s*sb reaches it in one
pass per monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence

from .binform import BinaryForm
from .cyclo import ONE, ZERO, CycloMatrix, CycloNum, nullspace, rank

Exp = tuple[int, int, int, int]

_HALF = Fraction(1, 2)

# first-order operators as (coefficient, multiply-by variable, differentiate variable);
# variables indexed s=0, t=1, sb=2, tb=3
GENERATORS: dict[str, tuple[tuple[Fraction, int, int], ...]] = {
    "JzL": ((_HALF, 0, 0), (_HALF, 3, 3), (-_HALF, 1, 1), (-_HALF, 2, 2)),
    "J+L": ((Fraction(1), 0, 1), (Fraction(-1), 3, 2)),
    "J-L": ((Fraction(1), 1, 0), (Fraction(-1), 2, 3)),
    "JzR": ((_HALF, 0, 0), (-_HALF, 3, 3), (_HALF, 1, 1), (-_HALF, 2, 2)),
    "J+R": ((Fraction(-1), 0, 3), (Fraction(1), 1, 2)),
    "J-R": ((Fraction(-1), 3, 0), (Fraction(1), 2, 1)),
}


def _reduce_into(acc: dict, e: Exp, c: CycloNum) -> None:
    a, b, cb, d = e
    m = b if b < d else d
    if m == 0:
        old = acc.get(e)
        acc[e] = c if old is None else old + c
        return
    b -= m
    d -= m
    for i in range(m + 1):
        key = (a + i, b, cb + i, d)
        w = c * ((-1) ** i * comb(m, i))
        old = acc.get(key)
        acc[key] = w if old is None else old + w


class SphereFunction:
    """Canonical polynomial in (s, t, sb, tb) modulo the sphere relation."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exp, object] | Iterable[tuple[Exp, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, CycloNum] = {}
        for e, c in items:
            c = c if isinstance(c, CycloNum) else CycloNum(c)
            if c:
                _reduce_into(acc, tuple(e), c)
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _canonical(cls, terms: dict) -> "SphereFunction":
        obj = object.__new__(cls)
        obj.terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def from_form(cls, f: BinaryForm) -> "SphereFunction":
        d = f.degree
        return cls._canonical({(a, d - a, 0, 0): c for a, c in enumerate(f.coeffs) if c})

    @classmethod
    def constant(cls, c) -> "SphereFunction":
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, name: str) -> "SphereFunction":
        e = {"s": (1, 0, 0, 0), "t": (0, 1, 0, 0), "sb": (0, 0, 1, 0), "tb": (0, 0, 0, 1)}[name]
        return cls({e: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SphereFunction):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def constant_value(self) -> CycloNum | None:
        """The value if the function is constant, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and (0, 0, 0, 0) in self.terms:
            return self.terms[(0, 0, 0, 0)]
        return None

    def __add__(self, other: "SphereFunction") -> "SphereFunction":
        out = dict(self.terms)
        for e, c in other.terms.items():
            old = out.get(e)
            out[e] = c if old is None else old + c
        return SphereFunction._canonical(out)

    def __neg__(self) -> "SphereFunction":
        return SphereFunction._canonical({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SphereFunction") -> "SphereFunction":
        return self + (-other)

    def scale(self, c) -> "SphereFunction":
        c = c if isinstance(c, CycloNum) else CycloNum(c)
        if not c:
            return SphereFunction()
        return SphereFunction._canonical({e: x * c for e, x in self.terms.items()})

    def __mul__(self, other) -> "SphereFunction":
        if not isinstance(other, SphereFunction):
            return self.scale(other)
        acc: dict[Exp, CycloNum] = {}
        for (a1, b1, c1, d1), x in self.terms.items():
            for (a2, b2, c2, d2), y in other.terms.items():
                _reduce_into(acc, (a1 + a2, b1 + b2, c1 + c2, d1 + d2), x * y)
        return SphereFunction._canonical(acc)

    __rmul__ = scale

    def conj(self) -> "SphereFunction":
        """Complex conjugate: swap s<->sb, t<->tb and conjugate coefficients."""
        return SphereFunction({(c, d, a, b): x.conj() for (a, b, c, d), x in self.terms.items()})

    def apply(self, which: str) -> "SphereFunction":
        return apply_generator(which, self)

    def sorted_terms(self) -> list[tuple[Exp, CycloNum]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c, d), x in sorted(self.terms.items(), reverse=True):
            mono = " ".join(p for p in (_pw("s", a), _pw("t", b), _pw("sb", c), _pw("tb", d)) if p)
            parts.append(f"{x}*{mono}" if mono else str(x))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SphereFunction({self})"

    def to_json(self) -> list:
        return [{"exp": list(e), "coeff": c.to_json()} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list) -> "SphereFunction":
        return cls({tuple(t["exp"]): CycloNum.from_json(t["coeff"]) for t in data})


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def reduce(terms: Mapping[Exp, object] | Iterable[tuple[Exp, object]]) -> SphereFunction:
    """Canonical form of a raw polynomial in (s, t, sb, tb)."""
    return SphereFunction(terms)


def mul(f: SphereFunction, g: SphereFunction) -> SphereFunction:
    return f * g


def conj(f: SphereFunction) -> SphereFunction:
    return f.conj()


def apply_generator(which: str, f: SphereFunction) -> SphereFunction:
    """Apply one of JzL, J+L, J-L, JzR, J+R, J-R (ASCII names) and reduce."""
    try:
        op = GENERATORS[which]
    except KeyError:
        raise ValueError(f"unknown generator {which!r}; expected one of {sorted(GENERATORS)}") from None
    acc: dict[Exp, CycloNum] = {}
    for e, x in f.terms.items():
        for coef, mv, dv in op:
            p = e[dv]
            if not p:
                continue
            new = list(e)
            new[dv] -= 1
            new[mv] += 1
            _reduce_into(acc, tuple(new), x * (coef * p))
    return SphereFunction._canonical(acc)


@dataclass
class Multiplet:
    """Spin j = twoJ/2 family; components[l] is <j, j-l> in the ladder basis
    where L_-<j,m> = (j+m)<j,m-1>."""

    twoJ: int
    components: list[SphereFunction]
    highest_weight: BinaryForm | None = None

    def __post_init__(self):
        if len(self.components) != self.twoJ + 1:
            raise ValueError(f"spin {self.twoJ}/2 multiplet needs {self.twoJ + 1} components")

    @property
    def spin(self) -> Fraction:
        return Fraction(self.twoJ, 2)

    def component(self, l: int) -> SphereFunction:
        return self.components[l]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def conj(self) -> list[SphereFunction]:
        return [c.conj() for c in self.components]

    def to_json(self) -> dict:
        return {"twoJ": self.twoJ, "components": [c.to_json() for c in self.components]}

    @classmethod
    def from_json(cls, data: dict) -> "Multiplet":
        return cls(data["twoJ"], [SphereFunction.from_json(c) for c in data["components"]])


def multiplet_from_hw(P: BinaryForm) -> Multiplet:
    """Multiplet generated from a holomorphic highest weight by J-R.

    component(l + 1) = J-R(component(l)) / (2j - l), so that
    (J-R)^l P = (2j)!/(2j-l)! * component(l).
    """
    twoJ = P.degree
    comps = [SphereFunction.from_form(P)]
    for l in range(twoJ):
        comps.append(apply_generator("J-R", comps[-1]).scale(Fraction(1, twoJ - l)))
    return Multiplet(twoJ, comps, P)


def cg_highest(M1: Multiplet, M2: Multiplet, k: int) -> SphereFunction:
    """sum_l (-1)^l C(k,l) <j1, j1-l> <j2, j2-(k-l)>, the spin j1+j2-k highest weight."""
    if k < 0 or k > M1.twoJ or k > M2.twoJ:
        raise ValueError(f"contraction order {k} out of range for spins {M1.twoJ}/2, {M2.twoJ}/2")
    acc: dict[Exp, CycloNum] = {}
    for l in range(k + 1):
        coef = (-1) ** l * comb(k, l)
        for e, c in (M1.components[l] * M2.components[k - l]).terms.items():
            w = c * coef
            old = acc.get(e)
            acc[e] = w if old is None else old + w
    return SphereFunction._canonical(acc)


def hermitian_contraction(M: Multiplet) -> SphereFunction:
    """sum_l C(2j, l) conj(<j,j-l>) <j,j-l>; constant on the sphere."""
    acc = SphereFunction()
    for l, c in enumerate(M.components):
        acc = acc + (c.conj() * c).scale(comb(M.twoJ, l))
    return acc


# -- span comparisons ------------------------------------------------------------


def coefficient_vectors(functions: Sequence[SphereFunction]) -> tuple[list[Exp], list[list[CycloNum]]]:
    """Coefficient vectors of the functions over their joint monomial support."""
    support = sorted({e for f in functions for e in f.terms})
    pos = {e: i for i, e in enumerate(support)}
    vecs = []
    for f in functions:
        v = [ZERO] * len(support)
        for e, c in f.terms.items():
            v[pos[e]] = c
        vecs.append(v)
    return support, vecs


def span_rank(functions: Sequence[SphereFunction]) -> int:
    functions = [f for f in functions if f]
    if not functions:
        return 0
    return rank(coefficient_vectors(functions)[1])


def in_span(f: SphereFunction, functions: Sequence[SphereFunction]) -> bool:
    return span_rank(list(functions) + [f]) == span_rank(functions)


def linear_relations(functions: Sequence[SphereFunction]) -> list[list[CycloNum]]:
    """Basis of coefficient vectors c with sum c_i f_i = 0."""
    support, vecs = coefficient_vectors(functions)
    if not support:
        return [[ONE if i == j else ZERO for i in range(len(functions))] for j in range(len(functions))]
    columns = vecs
    return nullspace(CycloMatrix.from_columns(columns))
