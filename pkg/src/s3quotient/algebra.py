"""Spin decomposition of products of multiplets and the per-group claim battery.

Products of multiplets are decomposed form-side with transvectants and
cross-checked sphere-side with the Clebsch-Gordan highest-weight combination.
A spin component whose highest weight is the zero form is a relation: all of
its 2j+1 sphere functions vanish identically.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .binform import BinaryForm, S, T, cross, hessian, transvectant
from .cyclo import ONE, CycloMatrix, CycloNum, nullspace, row_echelon
from .groups import (
    CYCLIC,
    DIHEDRAL,
    ICOSAHEDRAL,
    OCTAHEDRAL,
    TETRAHEDRAL,
    CertificationError,
    Character,
    FiniteSubgroup,
    build,
    character_of,
    commutator_subgroup_order,
    has_character,
    invariant_dim_by_elimination,
    molien_dim,
)
from .invariants import (
    InvariantSystem,
    fundamental,
    generation_table,
    monomial_exponents,
    power_sum,
    product_span_rank,
    tetrahedral_vertex_form,
)
from .sphere import (
    Multiplet,
    SphereFunction,
    cg_highest,
    in_span,
    linear_relations,
    multiplet_from_hw,
)

log = logging.getLogger(__name__)

ZERO_CLASS = "Zero"
DESCENDANT = "DescendantOf"
NORMALIZATION = "NormalizationConstant"
UNCLASSIFIED = "Unclassified"


@dataclass
class SpinComponent:
    label: str
    two_j1: int
    two_j2: int
    k: int
    highest_weight: BinaryForm
    classification: str
    character: Character | None = None
    descendant: str | None = None
    constant: CycloNum | None = None
    molien: int | None = None
    antisymmetric: bool = False
    sphere_checked: bool = False
    factors: int = 2

    @property
    def two_j(self) -> int:
        return self.two_j1 + self.two_j2 - 2 * self.k

    @property
    def spin(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def forced_zero(self) -> bool:
        return self.molien == 0

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "factors": self.factors,
            "twoJ1": self.two_j1,
            "twoJ2": self.two_j2,
            "k": self.k,
            "twoJ": self.two_j,
            "classification": self.classification,
            "descendant_of": self.descendant,
            "constant": _num_json(self.constant) if self.constant is not None else None,
            "highest_weight": str(self.highest_weight),
            "character_order": self.character.order if self.character else None,
            "molien": self.molien,
            "antisymmetric_zero": self.antisymmetric,
            "sphere_checked": self.sphere_checked,
        }


def _num_json(c: CycloNum) -> dict:
    z = c.approx()
    return {"exact": str(c), "approx": [round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0]}


# -- expressing forms through named generators ---------------------------------


class Vocabulary:
    """Named semi-invariants of a group with their characters."""

    def __init__(self, G: FiniteSubgroup, named: dict[str, BinaryForm], characters: dict[str, Character]):
        self.G = G
        # invariant generators first so single-factor names win
        order = sorted(named, key=lambda n: (not characters[n].is_trivial(), list(named).index(n)))
        self.names = [n for n in order if named[n].degree > 0 and not named[n].is_zero()]
        self.forms = [named[n] for n in self.names]
        self.chars = [characters[n] for n in self.names]

    @classmethod
    def for_system(cls, sys: InvariantSystem) -> "Vocabulary":
        return cls(sys.group, sys.named, sys.characters)

    def monomials(self, d: int, chi: Character) -> list[tuple[tuple[int, ...], BinaryForm]]:
        out = []
        for e in monomial_exponents(tuple(f.degree for f in self.forms), d):
            c = Character.trivial(self.G)
            for x, ch in zip(e, self.chars):
                if x:
                    c = c * ch ** x
            if c == chi:
                out.append(e)
        out.sort(key=lambda e: (sum(e), [-x for x in e]))
        result = []
        for e in out:
            m = BinaryForm.constant(ONE)
            for x, f in zip(e, self.forms):
                if x:
                    m = m * f ** x
            result.append((e, m))
        return result

    def name_of(self, e: tuple[int, ...]) -> str:
        parts = [n if x == 1 else f"{n}^{x}" for n, x in zip(self.names, e) if x]
        return " ".join(parts) if parts else "1"

    def express(self, f: BinaryForm, chi: Character) -> tuple[str, CycloNum | None] | None:
        """Write f as a combination of monomials in the named forms.

        Returns (expression, constant) where constant is set when f is a
        multiple of a single monomial; None if f is outside their span.
        """
        monos = self.monomials(f.degree, chi)
        for e, m in monos:
            c = f.ratio_to(m)
            if c is not None:
                return f"{c}*{self.name_of(e)}", c
        if not monos:
            return None
        cols = [m.coeffs for _, m in monos] + [f.coeffs]
        for v in nullspace(CycloMatrix.from_columns(cols)):
            if v[-1]:
                scale = -v[-1].inv()
                terms = [f"{x * scale}*{self.name_of(e)}" for x, (e, _) in zip(v, monos) if x]
                return " + ".join(terms), None
        return None


# -- decomposition ------------------------------------------------------------------


def classify(hw: BinaryForm, chi: Character, G: FiniteSubgroup, vocab: Vocabulary | None,
             antisymmetric: bool = False) -> tuple[str, str | None, CycloNum | None, int]:
    m = molien_dim(G, hw.degree, chi)
    if hw.is_zero():
        return ZERO_CLASS, None, None, m
    if m == 0:
        raise CertificationError(
            f"{G.label}: nonzero component of degree {hw.degree} where no semi-invariant exists")
    if hw.degree == 0:
        return NORMALIZATION, None, hw.coeffs[0], m
    if not has_character(hw, G, chi):
        raise CertificationError(f"{G.label}: component {hw} does not carry the product character")
    if vocab is not None:
        found = vocab.express(hw, chi)
        if found is not None:
            return DESCENDANT, found[0], found[1], m
    return UNCLASSIFIED, None, None, m


def decompose_product(M1: Multiplet, M2: Multiplet, G: FiniteSubgroup,
                      vocab: Vocabulary | None = None, chi1: Character | None = None,
                      chi2: Character | None = None, labels: tuple[str, str] = ("A", "B"),
                      check_sphere: bool = True) -> list[SpinComponent]:
    """All spin components of M1 x M2, classified, highest spin first."""
    hw1, hw2 = M1.highest_weight, M2.highest_weight
    if hw1 is None or hw2 is None:
        raise ValueError("multiplets must carry their highest weight")
    chi1 = chi1 or character_of(hw1, G)
    chi2 = chi2 or character_of(hw2, G)
    if chi1 is None or chi2 is None:
        raise ValueError("highest weights must be semi-invariants of the group")
    chi = chi1 * chi2
    same = hw1 == hw2
    out = []
    for k in range(min(hw1.degree, hw2.degree) + 1):
        hw = transvectant(hw1, hw2, k)
        anti = same and k % 2 == 1
        cls, desc, const, m = classify(hw, chi, G, vocab, anti)
        comp = SpinComponent(f"({labels[0]},{labels[1]})^{k}", hw1.degree, hw2.degree, k, hw, cls,
                             chi, desc, const, m, anti and hw.is_zero())
        if check_sphere:
            sphere_side = cg_highest(M1, M2, k)
            if sphere_side != SphereFunction.from_form(hw):
                raise CertificationError(f"sphere-side and form-side disagree for {comp.label}")
            comp.sphere_checked = True
        out.append(comp)
    return out


# -- relation scans -------------------------------------------------------------


@dataclass
class SpanEntry:
    factors: int
    two_j: int
    character: Character
    rank: int
    molien: int
    basis: list[BinaryForm] = field(repr=False)

    def to_json(self) -> dict:
        return {"factors": self.factors, "twoJ": self.two_j, "character_order": self.character.order,
                "rank": self.rank, "molien": self.molien}


@dataclass
class ScanResult:
    group: FiniteSubgroup
    components: list[SpinComponent]
    spans: list[SpanEntry]

    def relations(self) -> list[SpinComponent]:
        return [c for c in self.components if c.classification == ZERO_CLASS]

    def unforced_zeros(self) -> list[SpinComponent]:
        """Zero components not explained by Molien or by antisymmetry."""
        return [c for c in self.relations() if c.molien and not c.antisymmetric]

    def span(self, factors: int, two_j: int, trivial_only: bool = False) -> list[SpanEntry]:
        return [s for s in self.spans if s.factors == factors and s.two_j == two_j
                and (not trivial_only or s.character.is_trivial())]

    def first_factor_count(self, two_j: int, trivial: bool = True) -> int | None:
        """Fewest seed factors at which a nonzero spin-j span appears."""
        hits = [s.factors for s in self.spans if s.two_j == two_j and s.rank
                and (s.character.is_trivial() or not trivial)]
        return min(hits) if hits else None

    def to_json(self) -> dict:
        return {
            "group": self.group.label,
            "components": [c.to_json() for c in self.components],
            "spans": [s.to_json() for s in self.spans],
        }


def _basis(forms: list[BinaryForm]) -> list[BinaryForm]:
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        return []
    rows, _ = row_echelon([list(f.coeffs) for f in forms], forms[0].degree + 1)
    return [BinaryForm(forms[0].degree, r) for r in rows]


def relation_scan(G: FiniteSubgroup, seeds: Sequence[tuple[str, BinaryForm]], max_degree: int = 60,
                  max_factors: int = 3, vocab: Vocabulary | None = None,
                  check_sphere: bool = True) -> ScanResult:
    """Iterated pairing of seed multiplets up to ``max_factors`` factors.

    Each product level is reduced to a basis per (spin, character) before
    pairing again, so spins of multiplicity > 1 are reported as full spans.
    A nonzero component where Molien admits no semi-invariant aborts.
    """
    if max_degree > 60:
        raise ValueError("scan degree bound is limited to 60")
    seed_chars = {}
    for name, f in seeds:
        chi = character_of(f, G)
        if chi is None:
            raise ValueError(f"seed {name} is not a semi-invariant of {G.label}")
        seed_chars[name] = chi
    seed_mults = {name: multiplet_from_hw(f) for name, f in seeds} if check_sphere else {}

    components: list[SpinComponent] = []
    spans: list[SpanEntry] = []
    # level entries: (label, form, character, input degree)
    level = [(name, f, seed_chars[name], f.degree) for name, f in seeds]
    for factors in range(2, max_factors + 1):
        produced: dict[tuple[int, tuple], list] = {}
        for label, f, chi_f, deg_f in level:
            for name, g in seeds:
                if factors == 2 and [n for n, _ in seeds].index(name) < [n for n, _ in seeds].index(label):
                    continue
                if deg_f + g.degree > max_degree:
                    continue
                chi = chi_f * seed_chars[name]
                same = factors == 2 and label == name
                for k in range(min(f.degree, g.degree) + 1):
                    hw = transvectant(f, g, k)
                    anti = same and k % 2 == 1
                    cls, desc, const, m = classify(hw, chi, G, vocab, anti)
                    comp = SpinComponent(f"({label},{name})^{k}", f.degree, g.degree, k, hw, cls, chi,
                                         desc, const, m, anti and hw.is_zero(), factors=factors)
                    if check_sphere and factors == 2:
                        side = cg_highest(seed_mults[label], seed_mults[name], k)
                        if side != SphereFunction.from_form(hw):
                            raise CertificationError(f"sphere/form mismatch for {comp.label}")
                        comp.sphere_checked = True
                    components.append(comp)
                    key = (hw.degree, chi.exponents)
                    produced.setdefault(key, [chi, deg_f + g.degree, []])[2].append((comp.label, hw))
        next_level = []
        for (deg, _), (chi, in_deg, items) in sorted(produced.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            basis = _basis([hw for _, hw in items])
            m = molien_dim(G, deg, chi)
            if len(basis) > m:
                raise CertificationError(f"{G.label}: span of rank {len(basis)} exceeds Molien count {m}")
            spans.append(SpanEntry(factors, deg, chi, len(basis), m, basis))
            for i, b in enumerate(basis):
                label = items[0][0] if len(basis) == 1 and len(items) == 1 else f"[{factors}|j={Fraction(deg, 2)}|{i}]"
                next_level.append((label, b, chi, in_deg))
        level = next_level
    return ScanResult(G, components, spans)


def pairing_spans(left: Sequence[BinaryForm], right: Sequence[BinaryForm]) -> dict[int, list[BinaryForm]]:
    """Basis, per output degree, of all transvectants (f, g)^k with f in left, g in right."""
    by_deg: dict[int, list[BinaryForm]] = {}
    for f in left:
        for g in right:
            for k in range(min(f.degree, g.degree) + 1):
                hw = transvectant(f, g, k)
                by_deg.setdefault(hw.degree, []).append(hw)
    return {d: _basis(v) for d, v in sorted(by_deg.items())}


def all_components(spans: dict[int, list[BinaryForm]]) -> list[BinaryForm]:
    return [f for d in sorted(spans) for f in spans[d]]


# -- projective coordinates ----------------------------------------------------------


def projective_coords(G: FiniteSubgroup) -> tuple[Multiplet, Character]:
    """Multiplet of the lowest semi-invariant used as coordinates."""
    if G.name == TETRAHEDRAL:
        f = tetrahedral_vertex_form()
    elif G.name == OCTAHEDRAL:
        f = S * T * (S ** 4 - T ** 4)
    elif G.name == ICOSAHEDRAL:
        f = fundamental(G).P
    else:
        raise ValueError(f"projective coordinates are defined for the polyhedral groups, not {G.label}")
    chi = character_of(f, G)
    if chi is None:
        raise CertificationError(f"{G.label}: coordinate seed is not semi-invariant")
    return multiplet_from_hw(f), chi


# -- claim battery -----------------------------------------------------------------


@dataclass
class ClaimReport:
    group: str
    id: str
    statement: str
    passed: bool
    witness: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {"id": self.id, "quote": self.statement, "status": self.status, "witness": self.witness}


class _Battery:
    def __init__(self, G: FiniteSubgroup):
        self.G = G
        self.reports: list[ClaimReport] = []

    def check(self, cid: str, statement: str, fn: Callable[[], tuple[bool, dict]]) -> bool:
        try:
            ok, witness = fn()
        except CertificationError:
            raise
        except Exception as exc:  # a failed claim is data, not a crash
            log.exception("claim %s raised", cid)
            ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
        self.reports.append(ClaimReport(self.G.label, cid, statement, bool(ok), witness))
        return ok


def _form_text(f: BinaryForm) -> str:
    return str(f)


def _component_table(comps: list[SpinComponent]) -> list[dict]:
    return [{"spin": str(c.spin), "k": c.k, "class": c.classification, "descendant_of": c.descendant,
             "constant": str(c.constant) if c.constant is not None else None} for c in comps]


_SHORT = {CYCLIC: "cyclic", DIHEDRAL: "dihedral", TETRAHEDRAL: "tetrahedral",
          OCTAHEDRAL: "octahedral", ICOSAHEDRAL: "icosahedral"}


def _common_claims(b: _Battery, sys: InvariantSystem, max_degree: int) -> None:
    G = b.G
    short = _SHORT[G.name]
    b.check(f"{short}.elements-in-su2", "every element has determinant 1 and is unitary",
            lambda: (all(g.is_special_unitary() for g in G.elements), {"order": G.order}))
    bound = min(max_degree, 16)
    b.check(f"{short}.molien-two-oracle",
            f"Molien counts equal generator-fixed form dimensions for degrees <= {bound}",
            lambda: _two_oracle(G, bound))
    b.check(f"{short}.generation",
            f"products of the fundamental invariants span every invariant of degree <= {max_degree}",
            lambda: _generation(sys, max_degree))


def _two_oracle(G: FiniteSubgroup, bound: int) -> tuple[bool, dict]:
    rows = [(d, molien_dim(G, d), invariant_dim_by_elimination(G, d)) for d in range(bound + 1)]
    return all(a == b for _, a, b in rows), {"molien": [a for _, a, _ in rows]}


def _generation(sys: InvariantSystem, max_degree: int) -> tuple[bool, dict]:
    table = generation_table(sys, max_degree)
    bad = [r["degree"] for r in table if not r["match"]]
    return not bad, {"mismatched_degrees": bad, "molien": [r["molien"] for r in table]}


def _cyclic_claims(b: _Battery, sys: InvariantSystem) -> None:
    G = b.G
    n = G.n
    P, X = sys.P, sys.extra
    b.check("cyclic.order", f"the cyclic group has {n} elements", lambda: (G.order == n, {"order": G.order}))
    b.check("cyclic.doublets", "s and t are semi-invariants; their multiplets are (s, -tb) and (t, sb)",
            lambda: _doublets(G))
    b.check("cyclic.st-hessian-constant", "the hessian of st is a constant",
            lambda: (sys.Q.degree == 0 and not sys.Q.is_zero(), {"hessian": str(sys.Q)}))
    b.check("cyclic.spin1-quadratic-relation", "the spin-1 coordinates from st satisfy one quadratic relation",
            lambda: _spin1_relation())
    b.check("cyclic.second-invariant", f"s^{n} + t^{n} is invariant",
            lambda: (sys.characters["X"].is_trivial(), {"form": str(X)}))
    comps = decompose_product(multiplet_from_hw(P), multiplet_from_hw(X), G, Vocabulary.for_system(sys),
                              labels=("st", "X"))
    by_k = {c.k: c for c in comps}
    if n >= 2:
        b.check("cyclic.spin(n/2-1)-zero", "the spin n/2 - 1 component of (spin 1) x (spin n/2) vanishes",
                lambda: (by_k[2].classification == ZERO_CLASS, {"components": _component_table(comps)}))
    Y = power_sum(n, -1)
    b.check("cyclic.spin(n/2)-is-difference", f"the spin n/2 component is proportional to s^{n} - t^{n}",
            lambda: _proportional(by_k[1].highest_weight, Y))
    b.check("cyclic.sphere-agreement", "sphere-side Clebsch-Gordan combinations equal the transvectants",
            lambda: (all(c.sphere_checked for c in comps), {"k": [c.k for c in comps]}))
    b.check("cyclic.conjugation", "conjugation pairs the s^n+t^n and s^n-t^n multiplets for odd n",
            lambda: pseudoreality(n))


def _doublets(G: FiniteSubgroup) -> tuple[bool, dict]:
    ms, mt = multiplet_from_hw(S), multiplet_from_hw(T)
    ok = (ms.components == [SphereFunction.var("s"), -SphereFunction.var("tb")]
          and mt.components == [SphereFunction.var("t"), SphereFunction.var("sb")])
    ok = ok and character_of(S, G) is not None and character_of(T, G) is not None
    return ok, {"s": [str(c) for c in ms.components], "t": [str(c) for c in mt.components]}


def spin1_relations() -> tuple[list[SphereFunction], list[list[CycloNum]]]:
    """Quadratic relations among the three st-multiplet components (with constant term)."""
    comps = multiplet_from_hw(S * T).components
    quads = [comps[i] * comps[j] for i in range(3) for j in range(i, 3)]
    funcs = quads + list(comps) + [SphereFunction.constant(1)]
    return funcs, linear_relations(funcs)


def _spin1_relation() -> tuple[bool, dict]:
    funcs, rels = spin1_relations()
    text = [" + ".join(f"{c}*[{i}]" for i, c in enumerate(r) if c) for r in rels]
    return len(rels) == 1, {"relations": text, "contraction": str(cg_highest(*[multiplet_from_hw(S * T)] * 2, 2))}


def _proportional(f: BinaryForm, g: BinaryForm) -> tuple[bool, dict]:
    c = f.ratio_to(g)
    return (c is not None and bool(c)), {"form": str(f), "reference": str(g), "constant": str(c)}


def pseudoreality(n: int) -> tuple[bool, dict]:
    """Conjugates of the s^n+t^n multiplet lie in the s^n-t^n multiplet span
    (odd n) or in their own span (even n)."""
    plus = multiplet_from_hw(power_sum(n, 1))
    minus = multiplet_from_hw(power_sum(n, -1))
    conj_plus = plus.conj()
    into_minus = all(in_span(c, minus.components) for c in conj_plus)
    into_plus = all(in_span(c, plus.components) for c in conj_plus)
    ok = (into_minus and not into_plus) if n % 2 else into_plus
    return ok, {"n": n, "conj_in_minus_span": into_minus, "conj_in_plus_span": into_plus}


def _dihedral_claims(b: _Battery, sys: InvariantSystem) -> None:
    G = b.G
    n = G.n
    b.check("dihedral.order", f"the binary dihedral group has 4n = {4 * n} elements",
            lambda: (G.order == 4 * n, {"order": G.order}))
    st_chi, z_chi = sys.characters["st"], sys.characters["Z"]
    zform = sys.named["Z"]
    b.check("dihedral.nontrivial-semi-invariants",
            "st and s^n + t^n (s^n + i t^n for odd n) are semi-invariants with nontrivial characters",
            lambda: (not st_chi.is_trivial() and not z_chi.is_trivial(),
                     {"Z": str(zform), "st_character_order": st_chi.order, "Z_character_order": z_chi.order}))
    b.check("dihedral.hessian-proportional", "s^2 t^2 is invariant with hessian proportional to itself",
            lambda: (sys.characters["P"].is_trivial() and sys.Q.ratio_to(sys.P) is not None,
                     {"ratio": str(sys.Q.ratio_to(sys.P))}))
    comps = decompose_product(multiplet_from_hw(S * T), multiplet_from_hw(zform), G,
                              Vocabulary.for_system(sys), labels=("st", "Z"))
    by_k = {c.k: c for c in comps}
    b.check("dihedral.relations-as-cyclic", "the spin n/2 - 1 component of st x Z vanishes",
            lambda: (by_k[2].classification == ZERO_CLASS if n >= 2 else True,
                     {"components": _component_table(comps)}))
    b.check("dihedral.sphere-agreement", "sphere-side Clebsch-Gordan combinations equal the transvectants",
            lambda: (all(c.sphere_checked for c in comps), {}))


def _tetrahedral_claims(b: _Battery, sys: InvariantSystem) -> None:
    G = b.G
    V = sys.seed
    vocab = Vocabulary.for_system(sys)
    b.check("tetrahedral.order", "the binary tetrahedral group has 24 elements",
            lambda: (G.order == 24, {"order": G.order}))
    chiV = sys.characters["V"]
    b.check("tetrahedral.V-cube-root", "V is multiplied by a cube root of unity, not fully invariant",
            lambda: (chiV.order == 3, {"character": chiV.describe()}))
    b.check("tetrahedral.P-invariant", "st(s^4 - t^4) is the lowest-degree invariant",
            lambda: (sys.characters["P"].is_trivial() and next(d for d in range(1, 13) if molien_dim(G, d)) == 6,
                     {"P": str(sys.P)}))
    b.check("tetrahedral.degrees", "fundamental invariants have degrees 6, 8, 12",
            lambda: (sys.degrees == (6, 8, 12) and [molien_dim(G, d) for d in (6, 8, 12)] == [1, 1, 2],
                     {"degrees": list(sys.degrees), "molien": [molien_dim(G, d) for d in (6, 8, 12)]}))
    M, chi = projective_coords(G)
    b.check("tetrahedral.projective-coords", "V generates a spin-2 multiplet of 5 coordinates",
            lambda: (len(M.components) == 5 and chi.order == 3, {"components": len(M.components)}))
    quad = decompose_product(M, M, G, vocab, chiV, chiV, labels=("V", "V"))
    by_k = {c.k: c for c in quad}
    b.check("tetrahedral.spin0-zero", "the spin-0 part of the quadratic products vanishes",
            lambda: (by_k[4].classification == ZERO_CLASS, {"components": _component_table(quad)}))
    Vc = sys.named["Vc"]
    b.check("tetrahedral.spin2-conjugate", "the quadratic spin-2 part is V with i replaced by -i",
            lambda: _proportional(by_k[2].highest_weight, Vc))
    b.check("tetrahedral.reality", "conjugation maps the V multiplet into the quadratic spin-2 multiplet",
            lambda: _conj_into(M, multiplet_from_hw(by_k[2].highest_weight)))
    scan = relation_scan(G, [("V", V)], max_degree=12, max_factors=3, vocab=vocab)
    cubic = {s.two_j: s for s in scan.spans if s.factors == 3}
    b.check("tetrahedral.cubic-spins", "cubic products have nonzero spins exactly 0, 2(zero), 3, 4, 6",
            lambda: _cubic_spins(cubic, expected_nonzero={0, 6, 8, 12}))
    b.check("tetrahedral.cubic-spin2-zero", "the cubic spin-2 part vanishes",
            lambda: (cubic.get(4) is not None and cubic[4].rank == 0, {"span": _span_info(cubic.get(4))}))
    b.check("tetrahedral.cubic-spin0-constant", "the cubic spin-0 part is a nonzero constant",
            lambda: (cubic.get(0) is not None and cubic[0].rank == 1, {"span": _span_info(cubic.get(0))}))
    b.check("tetrahedral.cubic-descendants", "cubic spins 3, 4, 6 are spanned by the invariants of degree 6, 8, 12",
            lambda: _descendants(cubic, {6: [sys.P], 8: [sys.Q], 12: [sys.R, sys.P * sys.P]}))
    b.check("tetrahedral.cross-hessian", "cross(hessian(V), V) is proportional to st(s^4 - t^4)",
            lambda: _proportional(cross(hessian(V), V), sys.P))
    b.check("tetrahedral.cubic-generation",
            "invariants up to degree 36 are polynomials in the cubic blocks of V",
            lambda: _cubic_generation(G, cubic, 36))
    b.check("tetrahedral.syzygy", "one relation among P, Q, R in degree 24",
            lambda: (sys.syzygy is not None and sys.syzygy.degree == 24, {"syzygy": str(sys.syzygy)}))


def _span_info(s: SpanEntry | None) -> dict | None:
    if s is None:
        return None
    return {"rank": s.rank, "molien": s.molien, "basis": [str(f) for f in s.basis]}


def _conj_into(M: Multiplet, N: Multiplet) -> tuple[bool, dict]:
    ok = all(in_span(c, N.components) for c in M.conj())
    return ok, {"source_spin": str(M.spin), "target_spin": str(N.spin)}


def _cubic_spins(cubic: dict[int, SpanEntry], expected_nonzero: set[int]) -> tuple[bool, dict]:
    nonzero = {d for d, s in cubic.items() if s.rank and s.character.is_trivial()}
    return nonzero == expected_nonzero, {"nonzero_degrees": sorted(nonzero)}


def _descendants(spans: dict[int, SpanEntry], expected: dict[int, list[BinaryForm]]) -> tuple[bool, dict]:
    ok = True
    info = {}
    for d, forms in expected.items():
        s = spans.get(d)
        if s is None or s.rank == 0:
            ok = False
            info[str(d)] = None
            continue
        r_span = product_basis_rank(s.basis)
        r_joint = product_basis_rank(s.basis + forms)
        inside = r_joint == product_basis_rank(forms)
        ok = ok and inside
        info[str(d)] = {"rank": s.rank, "inside_invariant_span": inside, "span_rank": r_span}
    return ok, info


def product_basis_rank(forms: list[BinaryForm]) -> int:
    from .cyclo import rank

    forms = [f for f in forms if not f.is_zero()]
    return rank([f.coeffs for f in forms]) if forms else 0


def _cubic_generation(G: FiniteSubgroup, cubic: dict[int, SpanEntry], bound: int) -> tuple[bool, dict]:
    blocks = [f for d, s in sorted(cubic.items()) if d > 0 and s.character.is_trivial() for f in s.basis]
    bad = []
    for d in range(bound + 1):
        if product_span_rank(blocks, d) != molien_dim(G, d):
            bad.append(d)
    return not bad, {"block_degrees": [f.degree for f in blocks], "mismatched_degrees": bad}


def _octahedral_claims(b: _Battery, sys: InvariantSystem) -> None:
    G = b.G
    vocab = Vocabulary.for_system(sys)
    b.check("octahedral.order", "the binary octahedral group has 48 elements and contains the tetrahedral one",
            lambda: (G.order == 48 and all(g in G for g in build(TETRAHEDRAL).elements), {"order": G.order}))
    M, chi = projective_coords(G)
    b.check("octahedral.sign-character", "st(s^4 - t^4) is invariant up to a sign",
            lambda: (chi.order == 2, {"character": chi.describe()}))
    b.check("octahedral.projective-coords", "the seed generates a spin-3 multiplet of 7 coordinates",
            lambda: (len(M.components) == 7, {"components": len(M.components)}))
    b.check("octahedral.reality", "conjugation maps the spin-3 multiplet into itself",
            lambda: _conj_into(M, M))
    quad = decompose_product(M, M, G, vocab, chi, chi, labels=("S", "S"))
    by_k = {c.k: c for c in quad}
    b.check("octahedral.quadratic", "quadratic spins 6 and 4 are invariant descendants, spin 2 is zero, spin 0 a constant",
            lambda: (by_k[0].classification == DESCENDANT and by_k[2].classification == DESCENDANT
                     and by_k[4].classification == ZERO_CLASS and by_k[6].classification == NORMALIZATION
                     and by_k[0].character.is_trivial() and by_k[2].highest_weight.ratio_to(sys.P) is not None,
                     {"components": _component_table(quad)}))
    scan = relation_scan(G, [("S", sys.seed)], max_degree=24, max_factors=4, vocab=vocab)
    cubic = {s.two_j: s for s in scan.spans if s.factors == 3}
    b.check("octahedral.cubic-spin6", "a cubic spin-6 part is generated by the third tetrahedral invariant",
            lambda: _descendants(cubic, {12: [sys.named["S_cross"]]}))
    first = scan.first_factor_count(18, trivial=True)
    b.check("octahedral.spin9-first", "the degree-18 invariant's spin-9 multiplet first appears among products of four seed factors",
            lambda: (first == 4 and _descendants(_trivial_spans(scan, 4), {18: [sys.R]})[0],
                     {"first_factor_count": first, "first_any_character": scan.first_factor_count(18, trivial=False)}))
    b.check("octahedral.syzygy", "one relation among the invariants of degree 8, 12, 18 in degree 36",
            lambda: (sys.syzygy is not None and sys.syzygy.degree == 36, {"syzygy": str(sys.syzygy)}))


def _trivial_spans(scan: ScanResult, factors: int) -> dict[int, SpanEntry]:
    return {s.two_j: s for s in scan.spans if s.factors == factors and s.character.is_trivial()}


def _icosahedral_claims(b: _Battery, sys: InvariantSystem) -> None:
    G = b.G
    vocab = Vocabulary.for_system(sys)
    b.check("icosahedral.order", "the binary icosahedral group has 120 elements",
            lambda: (G.order == 120, {"order": G.order}))
    b.check("icosahedral.no-characters", "there is no nontrivial one-dimensional character",
            lambda: (commutator_subgroup_order(G) == G.order, {"commutator_subgroup_order": commutator_subgroup_order(G)}))
    dims = {d: molien_dim(G, d) for d in range(31)}
    b.check("icosahedral.molien", "invariant dimensions are 1 at degrees 12, 20, 30 and 0 below 12 except degree 0",
            lambda: ((dims[12], dims[20], dims[30]) == (1, 1, 1) and all(dims[d] == 0 for d in range(1, 12))
                     and dims[0] == 1, {"dims": [dims[d] for d in range(31)]}))
    b.check("icosahedral.degrees", "fundamental invariants have degrees 12, 20, 30",
            lambda: (sys.degrees == (12, 20, 30), {"degrees": list(sys.degrees)}))
    M, chi = projective_coords(G)
    b.check("icosahedral.coords", "the degree-12 invariant generates 13 coordinate functions",
            lambda: (len(M.components) == 13 and chi.is_trivial(), {"components": len(M.components)}))
    quad = decompose_product(M, M, G, vocab, chi, chi, labels=("P", "P"))
    by_spin = {c.two_j: c for c in quad}
    b.check("icosahedral.quadratic-spin10", "quadratic spin 10 is the degree-20 invariant",
            lambda: _proportional(by_spin[20].highest_weight, sys.Q))
    b.check("icosahedral.quadratic-zeros", "quadratic spins 2, 4, 8 vanish",
            lambda: (all(by_spin[d].classification == ZERO_CLASS for d in (4, 8, 16)),
                     {"components": _component_table(quad)}))
    b.check("icosahedral.quadratic-spin6", "quadratic spin 6 is a nonzero multiple of the degree-12 invariant",
            lambda: _proportional(by_spin[12].highest_weight, sys.P))
    b.check("icosahedral.quadratic-spin0", "quadratic spin 0 is a nonzero constant",
            lambda: (by_spin[0].classification == NORMALIZATION and bool(by_spin[0].constant),
                     {"constant": str(by_spin[0].constant)}))
    b.check("icosahedral.even-spins", "quadratic products only carry even spins 0..12",
            lambda: (all(c.two_j % 4 == 0 or c.classification == ZERO_CLASS for c in quad), {}))
    scan = relation_scan(G, [("P", sys.P)], max_degree=36, max_factors=3, vocab=vocab)
    cubic = {s.two_j: s for s in scan.spans if s.factors == 3}
    b.check("icosahedral.cubic-spin15", "cubic products contain the spin-15 multiplet of the degree-30 invariant",
            lambda: _descendants(cubic, {30: [sys.R]}))
    b.check("icosahedral.syzygy", "one relation among the invariants of degree 12, 20, 30 in degree 60",
            lambda: (sys.syzygy is not None and sys.syzygy.degree == 60, {"syzygy": str(sys.syzygy)}))


def verify_claims(G: FiniteSubgroup, max_degree: int = 60) -> list[ClaimReport]:
    """Run the fixed claim battery for one group; failures are returned as data."""
    sys = fundamental(G)
    b = _Battery(G)
    if G.name == CYCLIC:
        _cyclic_claims(b, sys)
    elif G.name == DIHEDRAL:
        _dihedral_claims(b, sys)
    elif G.name == TETRAHEDRAL:
        _tetrahedral_claims(b, sys)
    elif G.name == OCTAHEDRAL:
        _octahedral_claims(b, sys)
    elif G.name == ICOSAHEDRAL:
        _icosahedral_claims(b, sys)
    _common_claims(b, sys, max_degree)
    return b.reports
