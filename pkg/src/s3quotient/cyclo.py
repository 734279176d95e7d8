"""Exact arithmetic in the cyclotomic field Q(zeta_120).

Every scalar used by the package (i, sqrt 2, sqrt 3, sqrt 5 and every root of
unity whose order divides 120) lives in this one field.  Elements are stored
in the power basis zeta^0 .. zeta^31, reduced modulo the 120th cyclotomic
polynomial, so equality is coordinate-wise equality of rationals.

Internally an element is a sparse mapping ``power -> mpq``; most values met in
practice are rational or live in a small subfield, which keeps products cheap.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

ORDER = 120


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients (lowest degree first) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return num


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


PHI = cyclotomic_polynomial(ORDER)
DIM = len(PHI) - 1  # 32


def _reduction_table() -> list[tuple[tuple[int, int], ...]]:
    # x^k mod PHI for k < ORDER, as sparse integer vectors
    table = []
    cur = [0] * DIM
    cur[0] = 1
    for _ in range(ORDER):
        table.append(tuple((j, c) for j, c in enumerate(cur) if c))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(DIM):
                cur[j] -= top * PHI[j]
    return table


_REDUCE = _reduction_table()
_ZERO_Q = mpq(0)
_ONE_Q = mpq(1)


def _to_mpq(x) -> mpq:
    if isinstance(x, str):
        return mpq(Fraction(x))
    return mpq(x)


class CycloNum:
    """An element of Q(zeta_120), immutable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, value=0):
        if isinstance(value, CycloNum):
            self._c = value._c
        else:
            q = _to_mpq(value)
            self._c = {0: q} if q else {}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "CycloNum":
        obj = object.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def from_powers(cls, terms: dict[int, object] | Iterable[tuple[int, object]]) -> "CycloNum":
        """Build sum(coeff * zeta^power) for arbitrary integer powers."""
        items = terms.items() if isinstance(terms, dict) else terms
        acc: dict[int, mpq] = {}
        for k, v in items:
            v = _to_mpq(v)
            if not v:
                continue
            for j, c in _REDUCE[k % ORDER]:
                acc[j] = acc.get(j, _ZERO_Q) + c * v
        return cls._raw({j: v for j, v in acc.items() if v})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "CycloNum":
        if len(coeffs) != DIM:
            raise ValueError(f"expected {DIM} coordinates, got {len(coeffs)}")
        return cls._raw({j: _to_mpq(v) for j, v in enumerate(coeffs) if v})

    # -- inspection -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """The 32 rational coordinates in the power basis."""
        return tuple(Fraction(int(self._c[j].numerator), int(self._c[j].denominator))
                     if j in self._c else Fraction(0) for j in range(DIM))

    def is_zero(self) -> bool:
        return not self._c

    def is_rational(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        q = self._c.get(0, _ZERO_Q)
        return Fraction(int(q.numerator), int(q.denominator))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNum):
            return self._c == other._c
        if isinstance(other, (int, Fraction)) or type(other) is type(_ONE_Q):
            q = mpq(other)
            return self._c == ({0: q} if q else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum(other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for j, v in other._c.items():
            w = c.get(j)
            if w is None:
                c[j] = v
            else:
                w = w + v
                if w:
                    c[j] = w
                else:
                    del c[j]
        return CycloNum._raw(c)

    __radd__ = __add__

    def __neg__(self) -> "CycloNum":
        return CycloNum._raw({j: -v for j, v in self._c.items()})

    def __sub__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            other = CycloNum(other)
        return self + (-other)

    def __rsub__(self, other) -> "CycloNum":
        return CycloNum(other) - self

    def __mul__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            q = _to_mpq(other)
            if not q:
                return ZERO
            return CycloNum._raw({j: v * q for j, v in self._c.items()})
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(b) == 1 and 0 in b:
            q = b[0]
            return CycloNum._raw({j: v * q for j, v in a.items()})
        if len(a) == 1 and 0 in a:
            q = a[0]
            return CycloNum._raw({j: v * q for j, v in b.items()})
        acc: dict[int, mpq] = {}
        for i, x in a.items():
            for j, y in b.items():
                k = i + j
                acc[k] = acc.get(k, _ZERO_Q) + x * y
        out: dict[int, mpq] = {}
        for k, v in acc.items():
            if not v:
                continue
            if k < DIM:
                out[k] = out.get(k, _ZERO_Q) + v
            else:
                for j, c in _REDUCE[k]:
                    out[j] = out.get(j, _ZERO_Q) + c * v
        return CycloNum._raw({j: v for j, v in out.items() if v})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "CycloNum":
        if not isinstance(other, CycloNum):
            q = _to_mpq(other)
            if not q:
                raise ZeroDivisionError("division by zero in Q(zeta_120)")
            return CycloNum._raw({j: v / q for j, v in self._c.items()})
        return self * other.inv()

    def __rtruediv__(self, other) -> "CycloNum":
        return CycloNum(other) * self.inv()

    def __pow__(self, n: int) -> "CycloNum":
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inv(self) -> "CycloNum":
        """Multiplicative inverse via the extended Euclidean algorithm against PHI."""
        if not self._c:
            raise ZeroDivisionError("inverse of zero in Q(zeta_120)")
        if self.is_rational():
            return CycloNum._raw({0: 1 / self._c[0]})
        a = [self._c.get(j, _ZERO_Q) for j in range(DIM)]
        u = _poly_inverse_mod(a, [mpq(c) for c in PHI])
        return CycloNum._raw({j: v for j, v in enumerate(u) if v})

    def conj(self) -> "CycloNum":
        """Complex conjugation, the automorphism zeta -> zeta^-1."""
        if self.is_rational():
            return self
        return CycloNum.from_powers((-j, v) for j, v in self._c.items())

    def approx(self) -> complex:
        """Floating-point value under zeta -> exp(2 pi i / 120); for display only."""
        total = 0j
        for j, v in self._c.items():
            total += float(v) * cmath.exp(2j * math.pi * j / ORDER)
        return total

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycloNum({self})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        if self.is_rational():
            return str(self.to_rational())
        parts = []
        for j in sorted(self._c):
            v = Fraction(int(self._c[j].numerator), int(self._c[j].denominator))
            mono = "1" if j == 0 else ("z" if j == 1 else f"z^{j}")
            if v == 1:
                parts.append(mono if j else "1")
            elif v == -1:
                parts.append("-" + mono if j else "-1")
            else:
                parts.append(f"{v}*{mono}" if j else str(v))
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    def to_json(self) -> dict:
        coeffs = [[str(f.numerator), str(f.denominator)] for f in self.coeffs]
        z = self.approx()
        return {"coeffs": coeffs, "approx": [_clean_float(z.real), _clean_float(z.imag)]}

    @classmethod
    def from_json(cls, data: dict) -> "CycloNum":
        return cls.from_coeffs([Fraction(int(n), int(d)) for n, d in data["coeffs"]])


def _clean_float(x: float) -> float:
    x = round(x, 12)
    return 0.0 if x == 0 else x


# -- polynomial helpers for the inverse ----------------------------------------


def _trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [_ZERO_Q] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] / lead
        if f:
            q[i] = f
            for j, c in enumerate(b):
                a[i + j] -= f * c
    return _trim(q), _trim(a[: len(b) - 1])


def _poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [_ZERO_Q] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else _ZERO_Q) - (b[i] if i < len(b) else _ZERO_Q)
                  for i in range(n)])


def _poly_inverse_mod(a: list, m: list) -> list:
    r0, r1 = list(m), _trim(list(a))
    s0, s1 = [], [_ONE_Q]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    out = [v / c for v in s1]
    out = _poly_divmod(out, m)[1] if len(out) > DIM else out
    return out + [_ZERO_Q] * (DIM - len(out))


# -- constants and roots of unity ----------------------------------------------

ZERO = CycloNum(0)
ONE = CycloNum(1)
_ROOTS = tuple(CycloNum.from_powers({k: 1}) for k in range(ORDER))
_ROOT_INDEX = {r: k for k, r in enumerate(_ROOTS)}


def zeta(k: int = 1) -> CycloNum:
    """zeta_120 ** k."""
    return _ROOTS[k % ORDER]


def root_of_unity(n: int, k: int = 1) -> CycloNum:
    """exp(2 pi i k / n) for n dividing 120."""
    if n <= 0 or ORDER % n:
        raise ValueError(f"order {n} does not divide {ORDER}")
    return _ROOTS[(ORDER // n * k) % ORDER]


def root_index(x: CycloNum) -> int | None:
    """Return k with x == zeta^k, or None when x is not a 120th root of unity."""
    return _ROOT_INDEX.get(x)


def from_root_counts(counts: Sequence[int]) -> CycloNum:
    """sum(counts[k] * zeta^k) for a length-120 integer vector."""
    return CycloNum.from_powers((k, c) for k, c in enumerate(counts) if c)


I = zeta(30)
SQRT2 = zeta(15) + zeta(105)
SQRT3 = zeta(10) + zeta(110)
SQRT5 = 2 * (zeta(24) + zeta(96)) + 1


def add(a: CycloNum, b: CycloNum) -> CycloNum:
    return a + b


def mul(a: CycloNum, b: CycloNum) -> CycloNum:
    return a * b


def inv(a: CycloNum) -> CycloNum:
    return a.inv()


def conj(a: CycloNum) -> CycloNum:
    return a.conj()


def approx(a: CycloNum) -> tuple[float, float]:
    """(re, im) rounded to 12 places, as written to JSON."""
    z = a.approx()
    return (_clean_float(z.real), _clean_float(z.imag))


# -- exact linear algebra --------------------------------------------------------


class CycloMatrix:
    """Dense row-major matrix over Q(zeta_120)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(e if isinstance(e, CycloNum) else CycloNum(e) for e in entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "CycloMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "CycloMatrix":
        columns = [list(c) for c in columns]
        nrows = len(columns[0]) if columns else 0
        return cls(nrows, len(columns), [columns[j][i] for i in range(nrows) for j in range(len(columns))])

    def row(self, i: int) -> list[CycloNum]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def __getitem__(self, ij: tuple[int, int]) -> CycloNum:
        i, j = ij
        return self.entries[i * self.cols + j]

    def apply(self, v: Sequence[CycloNum]) -> list[CycloNum]:
        out = []
        for i in range(self.rows):
            acc = ZERO
            for a, x in zip(self.row(i), v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return out


def row_echelon(rows: list[list[CycloNum]], ncols: int) -> tuple[list[list[CycloNum]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pinv = m[r][c].inv()
        m[r] = [x * pinv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(M: CycloMatrix) -> list[list[CycloNum]]:
    """Basis of {v : M v = 0}, one vector per free column; empty when trivial."""
    rref, pivots = row_echelon([M.row(i) for i in range(M.rows)], M.cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * M.cols
        v[free] = ONE
        for row, pc in zip(rref, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def rank(vectors: Sequence[Sequence[CycloNum]]) -> int:
    """Rank of a list of equal-length vectors."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    return len(row_echelon(vectors, len(vectors[0]))[1])
