"""Finite subgroups of SU(2) as explicit lists of exact 2x2 matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .binform import BinaryForm, act
from .cyclo import (
    I,
    ONE,
    ORDER,
    SQRT5,
    ZERO,
    CycloNum,
    from_root_counts,
    root_index,
    root_of_unity,
    zeta,
)


class CertificationError(RuntimeError):
    """A construction failed one of its exact self-checks."""


class GroupElement:
    """2x2 matrix [[a, b], [c, d]] over Q(zeta_120)."""

    __slots__ = ("entries", "_hash")

    def __init__(self, a, b, c, d):
        self.entries = tuple(x if isinstance(x, CycloNum) else CycloNum(x) for x in (a, b, c, d))
        self._hash = None

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(ONE, ZERO, ZERO, ONE)

    @classmethod
    def diag(cls, x, y) -> "GroupElement":
        return cls(x, ZERO, ZERO, y)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return GroupElement(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def det(self) -> CycloNum:
        a, b, c, d = self.entries
        return a * d - b * c

    def inverse(self) -> "GroupElement":
        a, b, c, d = self.entries
        det = self.det()
        if det == 1:
            return GroupElement(d, -b, -c, a)
        k = det.inv()
        return GroupElement(d * k, -b * k, -c * k, a * k)

    def adjoint(self) -> "GroupElement":
        a, b, c, d = self.entries
        return GroupElement(a.conj(), c.conj(), b.conj(), d.conj())

    def trace(self) -> CycloNum:
        return self.entries[0] + self.entries[3]

    def is_special_unitary(self) -> bool:
        return self.det() == 1 and self.adjoint() * self == GroupElement.identity()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self) -> str:
        a, b, c, d = self.entries
        return f"[[{a}, {b}], [{c}, {d}]]"

    def to_json(self) -> list:
        a, b, c, d = self.entries
        return [[a.to_json(), b.to_json()], [c.to_json(), d.to_json()]]


def closure(generators: Sequence[GroupElement], bound: int = 1000) -> tuple[list[GroupElement], list[tuple[int, int]]]:
    """Breadth-first closure under right multiplication by the generators.

    Returns the elements (identity first) and, for each element, the pair
    (parent index, generator index) with element = parent * generator; the
    identity carries (-1, -1).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ident = GroupElement.identity()
    elements = [ident]
    words = [(-1, -1)]
    index = {ident: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for gi, gen in enumerate(generators):
                h = elements[i] * gen
                if h in index:
                    continue
                index[h] = len(elements)
                elements.append(h)
                words.append((i, gi))
                nxt.append(index[h])
                if len(elements) > bound:
                    raise CertificationError(f"closure exceeded bound {bound}")
        frontier = nxt
    return elements, words


@dataclass
class FiniteSubgroup:
    name: str
    n: int | None
    generators: list[GroupElement]
    elements: list[GroupElement]
    words: list[tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        self._index = {g: i for i, g in enumerate(self.elements)}
        self._rotation = [_rotation_index(g) for g in self.elements]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        return f"{self.name}(n={self.n})" if self.n is not None else self.name

    def index(self, g: GroupElement) -> int:
        return self._index[g]

    def __contains__(self, g: GroupElement) -> bool:
        return g in self._index

    def center(self) -> list[GroupElement]:
        return [z for z in self.elements if all(z * g == g * z for g in self.generators)]

    def contains_minus_identity(self) -> bool:
        return GroupElement.diag(-1, -1) in self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "order": self.order,
            "element_count": len(self.elements),
            "center_size": len(self.center()),
            "generators": [g.to_json() for g in self.generators],
        }


def _rotation_index(g: GroupElement) -> int:
    # exponent k with eigenvalues zeta^k, zeta^-k (k and -k are interchangeable)
    tr = g.trace()
    k = _TRACE_INDEX.get(tr)
    if k is None:
        raise CertificationError(f"trace {tr} is not zeta^k + zeta^-k")
    return k


_TRACE_INDEX: dict[CycloNum, int] = {}
for _k in range(ORDER - 1, -1, -1):
    _TRACE_INDEX[zeta(_k) + zeta(-_k)] = _k


# -- the five families -----------------------------------------------------------

CYCLIC = "cyclic"
DIHEDRAL = "binary-dihedral"
TETRAHEDRAL = "binary-tetrahedral"
OCTAHEDRAL = "binary-octahedral"
ICOSAHEDRAL = "binary-icosahedral"
FAMILIES = (CYCLIC, DIHEDRAL, TETRAHEDRAL, OCTAHEDRAL, ICOSAHEDRAL)


def _tetrahedral_generators() -> list[GroupElement]:
    half = CycloNum(Fraction(1, 2))
    return [
        GroupElement.diag(I, -I),
        GroupElement(0, 1, -1, 0),
        GroupElement(half * (1 + I), half * (I - 1), half * (1 + I), half * (1 - I)),
    ]


def generators_for(name: str, n: int | None = None) -> tuple[list[GroupElement], int]:
    """Standard generators and the expected group order."""
    if name == CYCLIC:
        if n is None or n < 1 or ORDER % n:
            raise ValueError(f"cyclic order n={n} must divide {ORDER}")
        w = root_of_unity(n, 1)
        return [GroupElement.diag(w, w.conj())], n
    if name == DIHEDRAL:
        if n is None or n < 1 or ORDER % (2 * n):
            raise ValueError(f"binary dihedral parameter n={n} needs 2n dividing {ORDER}")
        w = root_of_unity(2 * n, 1)
        return [GroupElement.diag(w, w.conj()), GroupElement(0, 1, -1, 0)], 4 * n
    if name == TETRAHEDRAL:
        return _tetrahedral_generators(), 24
    if name == OCTAHEDRAL:
        w = root_of_unity(8, 1)
        return _tetrahedral_generators() + [GroupElement.diag(w, w.conj())], 48
    if name == ICOSAHEDRAL:
        eps = root_of_unity(5, 1)
        k = SQRT5.inv()
        a = (eps - eps ** 4) * k
        b = (eps ** 2 - eps ** 3) * k
        return [GroupElement.diag(eps ** 3, eps ** 2), GroupElement(-a, b, b, a)], 120
    raise ValueError(f"unknown group family {name!r}")


def build(name: str, n: int | None = None) -> FiniteSubgroup:
    """Construct and certify one of the finite subgroups of SU(2)."""
    gens, expected = generators_for(name, n)
    for g in gens:
        if not g.is_special_unitary():
            raise CertificationError(f"{name} generator {g} is not in SU(2)")
    elements, words = closure(gens, bound=4 * expected)
    if len(elements) != expected:
        raise CertificationError(f"{name}: closure has {len(elements)} elements, expected {expected}")
    return FiniteSubgroup(name, n if name in (CYCLIC, DIHEDRAL) else None, gens, elements, words)


def certify_elements(G: FiniteSubgroup) -> None:
    """Exact determinant, unitarity, and closure checks on every element."""
    ident = GroupElement.identity()
    for g in G.elements:
        if not g.is_special_unitary():
            raise CertificationError(f"{G.label}: element {g} is not special unitary")
        if g.inverse() not in G:
            raise CertificationError(f"{G.label}: missing inverse of {g}")
    if ident not in G:
        raise CertificationError(f"{G.label}: identity missing")
    for g in G.elements:
        for h in G.generators:
            if g * h not in G:
                raise CertificationError(f"{G.label}: not closed under products")


# -- characters --------------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """A one-dimensional character, stored as root-of-unity exponents (mod 120).

    ``exponents[i]`` is k with chi(G.elements[i]) = zeta_120^k.
    """

    group: FiniteSubgroup = field(compare=False, repr=False, hash=False)
    exponents: tuple[int, ...]

    @classmethod
    def trivial(cls, G: FiniteSubgroup) -> "Character":
        return cls(G, (0,) * G.order)

    @classmethod
    def from_generator_values(cls, G: FiniteSubgroup, gen_exponents: Sequence[int]) -> "Character":
        exps = [0] * G.order
        for i, (parent, gi) in enumerate(G.words):
            if parent >= 0:
                exps[i] = (exps[parent] + gen_exponents[gi]) % ORDER
        return cls(G, tuple(exps))

    @property
    def generator_exponents(self) -> tuple[int, ...]:
        return tuple(self.exponents[self.group.index(g)] for g in self.group.generators)

    def value(self, g: GroupElement) -> CycloNum:
        return zeta(self.exponents[self.group.index(g)])

    def values(self) -> list[CycloNum]:
        return [zeta(k) for k in self.exponents]

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    @property
    def order(self) -> int:
        out = 1
        for k in self.exponents:
            m = ORDER // gcd(k, ORDER)
            out = out * m // gcd(out, m)
        return out

    def __mul__(self, other: "Character") -> "Character":
        return Character(self.group, tuple((a + b) % ORDER for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> "Character":
        return Character(self.group, tuple((a * n) % ORDER for a in self.exponents))

    def conj(self) -> "Character":
        return self ** -1

    def is_homomorphism(self) -> bool:
        G = self.group
        for i, g in enumerate(G.elements):
            for j, h in enumerate(G.elements):
                if (self.exponents[i] + self.exponents[j] - self.exponents[G.index(g * h)]) % ORDER:
                    return False
        return True

    def __repr__(self) -> str:
        return f"Character({self.describe()})"

    def describe(self) -> str:
        vals = ", ".join(f"zeta_120^{k}" for k in self.generator_exponents)
        return f"order {self.order}; on generators: [{vals}]"

    def to_json(self) -> dict:
        return {"order": self.order, "generator_exponents_mod_120": list(self.generator_exponents)}


def _eigen_multiplier(g: GroupElement, f: BinaryForm) -> int | None:
    gf = act(g, f)
    a, lead = f.leading()
    ratio = gf.coeffs[a] / lead
    k = root_index(ratio)
    if k is None or gf != f.scale(ratio):
        return None
    return k


def character_of(f: BinaryForm, G: FiniteSubgroup, exhaustive: bool = False) -> Character | None:
    """Character of f when f is a semi-invariant of G, else None.

    The default checks the generators exactly and extends along the
    closure words, which is equivalent because the action is a group
    action.  ``exhaustive=True`` substitutes every element.
    """
    if f.is_zero():
        raise ValueError("character of the zero form is undefined")
    gen_exps = []
    for g in G.generators:
        k = _eigen_multiplier(g, f)
        if k is None:
            return None
        gen_exps.append(k)
    chi = Character.from_generator_values(G, gen_exps)
    if exhaustive:
        for g, k in zip(G.elements, chi.exponents):
            if act(g, f) != f.scale(zeta(k)):
                return None
    return chi


def has_character(f: BinaryForm, G: FiniteSubgroup, chi: Character) -> bool:
    """True when every generator multiplies f by the given character value."""
    if f.is_zero():
        return True
    return all(act(g, f) == f.scale(zeta(k)) for g, k in zip(G.generators, chi.generator_exponents))


def is_invariant(f: BinaryForm, G: FiniteSubgroup) -> bool:
    chi = character_of(f, G)
    return chi is not None and chi.is_trivial()


def molien_dim(G: FiniteSubgroup, d: int, chi: Character | None = None) -> int:
    """Dimension of degree-d forms transforming by chi (trivial by default).

    (1/|G|) sum_g conj(chi(g)) * sum_{m=0..d} lambda_g^(d-2m), with the
    eigenvalue lambda_g = zeta^k read off the trace.
    """
    if d < 0:
        return 0
    counts = [0] * ORDER
    for i, k in enumerate(G._rotation):
        shift = -(chi.exponents[i]) if chi is not None else 0
        for m in range(d + 1):
            counts[(k * (d - 2 * m) + shift) % ORDER] += 1
    total = from_root_counts(counts)
    if not total.is_rational():
        raise CertificationError(f"Molien sum for {G.label}, degree {d} is not rational: {total}")
    value = total.to_rational() / G.order
    if value.denominator != 1 or value < 0:
        raise CertificationError(f"Molien sum for {G.label}, degree {d} is {value}, not a count")
    return int(value)


def invariant_dim_by_elimination(G: FiniteSubgroup, d: int) -> int:
    """Dimension of degree-d forms fixed by every generator, by exact nullspace."""
    from .cyclo import CycloMatrix, nullspace

    basis = [BinaryForm.monomial(a, d - a) for a in range(d + 1)]
    rows = []
    for g in G.generators:
        cols = [act(g, m) - m for m in basis]
        for r in range(d + 1):
            row = [c.coeffs[r] for c in cols]
            if any(row):
                rows.append(row)
    if not rows:
        return d + 1
    return len(nullspace(CycloMatrix.from_rows(rows)))


def commutator_subgroup_order(G: FiniteSubgroup) -> int:
    comms = {g.inverse() * h.inverse() * g * h for g in G.generators for h in G.elements}
    comms.discard(GroupElement.identity())
    if not comms:
        return 1
    return len(closure(sorted(comms, key=repr), bound=G.order)[0])
