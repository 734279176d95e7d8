"""Binary forms in (s, t) and their transvectants.

A form of degree d stores d+1 coefficients; index a holds the coefficient of
s^a t^(d-a).  A form of degree 2j is the highest weight of a spin-j multiplet.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import TYPE_CHECKING, Mapping, Sequence

from .cyclo import ONE, ZERO, CycloNum

if TYPE_CHECKING:
    from .groups import GroupElement


class DegreeError(ValueError):
    pass


def _c(x) -> CycloNum:
    return x if isinstance(x, CycloNum) else CycloNum(x)


class BinaryForm:
    """Homogeneous polynomial in s and t with coefficients in Q(zeta_120)."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence | None = None):
        if degree < 0:
            raise DegreeError("negative degree")
        if coeffs is None:
            coeffs = [ZERO] * (degree + 1)
        if len(coeffs) != degree + 1:
            raise DegreeError(f"degree {degree} form needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = tuple(_c(x) for x in coeffs)

    @classmethod
    def from_terms(cls, degree: int, terms: Mapping[int, object]) -> "BinaryForm":
        """Build from ``{power of s: coefficient}``."""
        coeffs = [ZERO] * (degree + 1)
        for a, c in terms.items():
            if not 0 <= a <= degree:
                raise DegreeError(f"power s^{a} outside degree {degree}")
            coeffs[a] = coeffs[a] + _c(c)
        return cls(degree, coeffs)

    @classmethod
    def monomial(cls, a: int, b: int, coeff=1) -> "BinaryForm":
        return cls.from_terms(a + b, {a: coeff})

    @classmethod
    def constant(cls, c) -> "BinaryForm":
        return cls(0, [c])

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def coeff(self, a: int) -> CycloNum:
        """Coefficient of s^a t^(d-a)."""
        return self.coeffs[a]

    def leading(self) -> tuple[int, CycloNum]:
        """(index, coefficient) of the highest s-power with nonzero coefficient."""
        for a in range(self.degree, -1, -1):
            if self.coeffs[a]:
                return a, self.coeffs[a]
        raise ValueError("zero form has no leading term")

    def ratio_to(self, other: "BinaryForm") -> CycloNum | None:
        """Return c with self == c * other, or None when not proportional."""
        if self.degree != other.degree:
            return None
        if other.is_zero():
            return ZERO if self.is_zero() else None
        a, lead = other.leading()
        c = self.coeffs[a] / lead
        return c if self == other.scale(c) else None

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise DegreeError(f"cannot add forms of degree {self.degree} and {other.degree}")
        return BinaryForm(self.degree, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(self.degree, [-x for x in self.coeffs])

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def scale(self, c) -> "BinaryForm":
        c = _c(c)
        return BinaryForm(self.degree, [x * c if x else x for x in self.coeffs])

    def __mul__(self, other) -> "BinaryForm":
        if isinstance(other, BinaryForm):
            return BinaryForm(self.degree + other.degree, _convolve(self.coeffs, other.coeffs))
        return self.scale(other)

    def __rmul__(self, other) -> "BinaryForm":
        return self.scale(other)

    def __pow__(self, n: int) -> "BinaryForm":
        result = BinaryForm.constant(ONE)
        for _ in range(n):
            result = result * self
        return result

    # -- differentiation --------------------------------------------------------

    def derivative(self, i: int, j: int) -> "BinaryForm":
        """d^i/ds^i d^j/dt^j of the form."""
        d = self.degree
        if i + j > d:
            return BinaryForm(0)
        out = []
        for a in range(i, d - j + 1):
            c = self.coeffs[a]
            if c:
                b = d - a
                c = c * (_falling(a, i) * _falling(b, j))
            out.append(c)
        return BinaryForm(d - i - j, out)

    def diff_s(self) -> "BinaryForm":
        return self.derivative(1, 0) if self.degree else BinaryForm(0)

    def diff_t(self) -> "BinaryForm":
        return self.derivative(0, 1) if self.degree else BinaryForm(0)

    # -- group action -----------------------------------------------------------

    def substitute(self, a, b, c, d) -> "BinaryForm":
        """f(a s + b t, c s + d t), by a Horner scheme in the two linear forms."""
        n = self.degree
        lin_s = (_c(b), _c(a))  # coefficients of t^1 s^0, s^1 t^0 in index order
        lin_t = (_c(d), _c(c))
        acc = [self.coeffs[n]]
        t_pow = [ONE]
        for i in range(1, n + 1):
            t_pow = _convolve(t_pow, lin_t)
            acc = _convolve(acc, lin_s)
            ci = self.coeffs[n - i]
            if ci:
                acc = [x + ci * y if y else x for x, y in zip(acc, t_pow)]
        return BinaryForm(n, acc)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"BinaryForm({self.degree}, {render(self)})"

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "BinaryForm":
        return cls(data["degree"], [CycloNum.from_json(c) for c in data["coeffs"]])


def _falling(n: int, k: int) -> int:
    out = 1
    for x in range(n - k + 1, n + 1):
        out *= x
    return out


def _convolve(a: Sequence[CycloNum], b: Sequence[CycloNum]) -> list[CycloNum]:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def render(f: BinaryForm) -> str:
    """Text rendering as a sum of ``c * s^a t^b`` terms, highest s-power first."""
    terms = []
    for a in range(f.degree, -1, -1):
        c = f.coeffs[a]
        if not c:
            continue
        b = f.degree - a
        mono = " ".join(p for p in (_pw("s", a), _pw("t", b)) if p)
        terms.append(f"{c}*{mono}" if mono else str(c))
    return " + ".join(terms) if terms else "0"


def _pw(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


S = BinaryForm(1, [0, 1])
T = BinaryForm(1, [1, 0])


def add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    return f + g


def scale(c, f: BinaryForm) -> BinaryForm:
    return f.scale(c)


def mul(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    return f * g


def diff_s(f: BinaryForm) -> BinaryForm:
    return f.diff_s()


def diff_t(f: BinaryForm) -> BinaryForm:
    return f.diff_t()


def transvectant_prefactor(m: int, n: int, k: int) -> Fraction:
    """(m-k)!(n-k)!/(m! n!) for forms of degrees m, n."""
    return Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))


def raw_transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """The alternating derivative sum, without the factorial prefactor."""
    m, n = f.degree, g.degree
    if k < 0 or k > m or k > n:
        raise DegreeError(f"transvectant order {k} exceeds degrees ({m}, {n})")
    acc = [ZERO] * (m + n - 2 * k + 1)
    for l in range(k + 1):
        fd = f.derivative(k - l, l)
        if fd.is_zero():
            continue
        gd = g.derivative(l, k - l)
        if gd.is_zero():
            continue
        coef = (-1) ** l * comb(k, l)
        prod = _convolve(fd.coeffs, gd.coeffs)
        acc = [x + y * coef if y else x for x, y in zip(acc, prod)]
    return BinaryForm(m + n - 2 * k, acc)


def transvectant(f: BinaryForm, g: BinaryForm, k: int) -> BinaryForm:
    """The normalized k-th transvectant (f, g)^k.

    (m-k)!(n-k)!/(m!n!) * sum_l (-1)^l C(k,l) d_s^(k-l) d_t^l f * d_s^l d_t^(k-l) g
    """
    return raw_transvectant(f, g, k).scale(transvectant_prefactor(f.degree, g.degree, k))


def hessian(f: BinaryForm) -> BinaryForm:
    if f.degree < 2:
        raise DegreeError("hessian needs degree >= 2")
    return transvectant(f, f, 2)


def cross(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """First transvectant, the Jacobian up to normalization."""
    if f.degree < 1 or g.degree < 1:
        raise DegreeError("cross product needs degrees >= 1")
    return transvectant(f, g, 1)


def act(g: "GroupElement", f: BinaryForm) -> BinaryForm:
    """(g . f)(v) = f(g^-1 v); a left action on forms."""
    a, b, c, d = g.inverse().entries
    return f.substitute(a, b, c, d)
