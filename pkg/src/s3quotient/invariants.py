"""Klein's fundamental (semi-)invariants for each finite subgroup of SU(2)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .binform import BinaryForm, S, T, cross, hessian
from .cyclo import I, ONE, SQRT3, CycloMatrix, CycloNum, nullspace, rank
from .groups import (
    CYCLIC,
    DIHEDRAL,
    ICOSAHEDRAL,
    OCTAHEDRAL,
    TETRAHEDRAL,
    CertificationError,
    Character,
    FiniteSubgroup,
    character_of,
    molien_dim,
)


def tetrahedral_vertex_form() -> BinaryForm:
    """s^4 + t^4 + 2 i sqrt(3) s^2 t^2."""
    return BinaryForm.from_terms(4, {4: 1, 2: 2 * I * SQRT3, 0: 1})


def octahedral_vertex_form() -> BinaryForm:
    """st(s^4 - t^4)."""
    return S * T * (S ** 4 - T ** 4)


def icosahedral_vertex_form() -> BinaryForm:
    """st(s^10 + 11 s^5 t^5 - t^10)."""
    return S * T * (S ** 10 + (S ** 5 * T ** 5).scale(11) - T ** 10)


def power_sum(n: int, c=1) -> BinaryForm:
    """s^n + c t^n."""
    return BinaryForm.from_terms(n, {n: 1, 0: c}) if n else BinaryForm.constant(1 + CycloNum(c))


@dataclass
class Syzygy:
    """sum_i coeffs[i] * P^a Q^b R^c = 0 over the listed exponent triples."""

    degree: int
    exponents: list[tuple[int, int, int]]
    coeffs: list[CycloNum]

    def evaluate(self, P: BinaryForm, Q: BinaryForm, R: BinaryForm) -> BinaryForm:
        total = BinaryForm(self.degree)
        for (a, b, c), x in zip(self.exponents, self.coeffs):
            if x:
                total = total + (P ** a * Q ** b * R ** c).scale(x)
        return total

    def __str__(self) -> str:
        # highest power of R first, e.g. "R^2 + 1/2 Q^3 - 1/432 P^5 = 0"
        parts = []
        for (a, b, c), x in sorted(zip(self.exponents, self.coeffs), key=lambda t: t[0][::-1], reverse=True):
            if not x:
                continue
            mono = " ".join(f"{v}^{e}" if e > 1 else v for v, e in (("P", a), ("Q", b), ("R", c)) if e)
            coef = str(x)
            if x.is_rational() and x.to_rational() < 0:
                sign, coef = "-", str(-x)
            else:
                sign = "+"
            term = mono if coef == "1" else f"{coef} {mono}"
            parts.append((sign, term))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        text += "".join(f" {sg} {t}" for sg, t in parts[1:])
        return text + " = 0"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"exponents": list(e), "coeff": x.to_json(), "text": str(x)}
                      for e, x in zip(self.exponents, self.coeffs)],
        }


@dataclass
class InvariantSystem:
    """Fundamental forms of a group.

    For the polyhedral groups P, Q = hessian(P), R = cross(P, Q) are the three
    generating invariants.  ``seed`` is a lower-degree semi-invariant when one
    exists (tetrahedral V, octahedral st(s^4 - t^4)); ``extra`` is the
    independent generator needed in the cyclic and dihedral cases.
    """

    group: FiniteSubgroup
    P: BinaryForm
    Q: BinaryForm
    R: BinaryForm | None
    seed: BinaryForm | None = None
    extra: BinaryForm | None = None
    exceptional: bool = False
    named: dict[str, BinaryForm] = field(default_factory=dict)
    characters: dict[str, Character] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    syzygy: Syzygy | None = None

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in (self.P, self.Q, self.R) if f is not None)

    def generators(self) -> list[BinaryForm]:
        """Invariant forms generating the full ring of invariants."""
        if not self.exceptional:
            return [self.P, self.Q, self.R]
        return [f for name, f in self.named.items() if self.characters[name].is_trivial()]

    def to_json(self) -> dict:
        out = {
            "group": self.group.label,
            "degrees": list(self.degrees),
            "exceptional": self.exceptional,
            "forms": {
                name: {"form": str(f), "degree": f.degree, "character": self.characters[name].to_json(),
                       "exact": f.to_json()}
                for name, f in sorted(self.named.items())
            },
            "notes": list(self.notes),
        }
        out["syzygy"] = self.syzygy.to_json() if self.syzygy else None
        if self.syzygy:
            out["syzygy"]["text"] = str(self.syzygy)
        return out


def _certified_character(f: BinaryForm, G: FiniteSubgroup, name: str) -> Character:
    chi = character_of(f, G)
    if chi is None:
        raise CertificationError(f"{G.label}: {name} = {f} is not a semi-invariant")
    return chi


def fundamental(G: FiniteSubgroup) -> InvariantSystem:
    """Build and certify the fundamental system of G."""
    if G.name == CYCLIC:
        sys = _cyclic(G)
    elif G.name == DIHEDRAL:
        sys = _dihedral(G)
    elif G.name == TETRAHEDRAL:
        V = tetrahedral_vertex_form()
        P = octahedral_vertex_form()
        sys = _generic(G, P, seed=V, seed_name="V")
        sys.named["Vc"] = hessian(V)
    elif G.name == OCTAHEDRAL:
        seed = octahedral_vertex_form()
        P = hessian(seed)
        sys = _generic(G, P, seed=seed, seed_name="S")
        sys.named["S_cross"] = cross(seed, P)
        sys.notes.append("P is the hessian of the sign semi-invariant S = st(s^4 - t^4)")
    elif G.name == ICOSAHEDRAL:
        sys = _generic(G, icosahedral_vertex_form())
    else:
        raise ValueError(f"unknown group {G.name}")
    for name, f in sys.named.items():
        if name not in sys.characters:
            sys.characters[name] = _certified_character(f, G, name)
    if not sys.exceptional:
        for name in ("P", "Q", "R"):
            if not sys.characters[name].is_trivial():
                raise CertificationError(f"{G.label}: {name} is not invariant")
        dP = sys.P.degree
        if sys.Q.degree != 2 * dP - 4 or sys.R.degree != dP + sys.Q.degree - 2:
            raise CertificationError(f"{G.label}: unexpected degrees {sys.degrees}")
        lowest = next(d for d in range(1, dP + 1) if molien_dim(G, d))
        if lowest != dP or molien_dim(G, dP) != 1:
            raise CertificationError(f"{G.label}: P of degree {dP} is not the unique lowest invariant")
        sys.syzygy = syzygy(sys)
    return sys


def _generic(G: FiniteSubgroup, P: BinaryForm, seed: BinaryForm | None = None,
             seed_name: str | None = None) -> InvariantSystem:
    Q = hessian(P)
    R = cross(P, Q)
    named = {}
    if seed is not None:
        named[seed_name] = seed
    named.update(P=P, Q=Q, R=R)
    return InvariantSystem(G, P, Q, R, seed=seed, named=named)


def _cyclic(G: FiniteSubgroup) -> InvariantSystem:
    n = G.n
    P = S * T
    Q = hessian(P)
    X = power_sum(n)
    Y = cross(P, X)
    sys = InvariantSystem(G, P, Q, None, extra=X, exceptional=True, named={"P": P, "X": X, "Y": Y})
    sys.notes.append(f"hessian(st) = {Q.coeffs[0]} is constant; s^{n} + t^{n} enters independently")
    return sys


def _dihedral(G: FiniteSubgroup) -> InvariantSystem:
    n = G.n
    P = S ** 2 * T ** 2
    Q = hessian(P)
    X = power_sum(2 * n)
    Y = cross(P, X)
    named = {"st": S * T, "P": P, "X": X, "Y": Y, "Z": power_sum(n, 1 if n % 2 == 0 else I)}
    sys = InvariantSystem(G, P, Q, None, extra=X, exceptional=True, named=named)
    ratio = Q.ratio_to(P)
    sys.notes.append(f"hessian(s^2 t^2) = {ratio} * s^2 t^2; s^{2 * n} + t^{2 * n} enters independently")
    return sys


def syzygy(sys: InvariantSystem) -> Syzygy:
    """The unique relation among P^a Q^b R^c in the degree of R^2, with R^2 coefficient 1."""
    if sys.exceptional or sys.R is None:
        raise ValueError("syzygy requires a generic (polyhedral) invariant system")
    dP, dQ, dR = sys.degrees
    d = 2 * dR
    exps = monomial_exponents((dP, dQ, dR), d)
    forms = [sys.P ** a * sys.Q ** b * sys.R ** c for a, b, c in exps]
    null = nullspace(CycloMatrix.from_columns([f.coeffs for f in forms]))
    if len(null) != 1:
        raise CertificationError(f"{sys.group.label}: syzygy space has dimension {len(null)}, expected 1")
    v = null[0]
    r2 = v[exps.index((0, 0, 2))]
    if not r2:
        raise CertificationError(f"{sys.group.label}: syzygy does not involve R^2")
    v = [x / r2 for x in v]
    syz = Syzygy(d, exps, v)
    if not syz.evaluate(sys.P, sys.Q, sys.R).is_zero():
        raise CertificationError(f"{sys.group.label}: syzygy does not vanish")
    return syz


def monomial_exponents(degrees: tuple[int, ...], d: int) -> list[tuple[int, ...]]:
    """All exponent tuples e with sum e_i * degrees_i == d, sorted descending-last."""
    ranges = [range(d // g + 1) if g > 0 else range(1) for g in degrees]
    return sorted(e for e in product(*ranges) if sum(x * g for x, g in zip(e, degrees)) == d)


def product_span_rank(forms: list[BinaryForm], d: int) -> int:
    """Rank of the degree-d monomials in the given forms."""
    exps = monomial_exponents(tuple(f.degree for f in forms), d)
    if not exps:
        return 0
    vecs = []
    for e in exps:
        m = BinaryForm.constant(ONE)
        for f, x in zip(forms, e):
            if x:
                m = m * f ** x
        vecs.append(m.coeffs)
    return rank(vecs)


def generation_table(sys: InvariantSystem, max_degree: int = 60) -> list[dict]:
    """Per degree: rank of products of the generators against the Molien count."""
    gens = sys.generators()
    rows = []
    for d in range(max_degree + 1):
        r = product_span_rank(gens, d)
        m = molien_dim(sys.group, d)
        rows.append({"degree": d, "products_rank": r, "molien": m, "match": r == m})
    return rows
