"""Exact exterior algebra of (p,q)-forms on a d-dimensional complex vector space.

A monomial is a pair of bitmasks over the d coordinate indices: one selecting
holomorphic generators dz_j, one selecting their antiholomorphic conjugates,
written dzb_j here.  The canonical normal form of a monomial puts all dz
factors first in ascending index order, followed by all dzb factors in
ascending index order.  Every Koszul sign in the algebra is computed against
this normal form, which makes the wedge sign a pure popcount computation.

Forms are sparse maps from monomials to Gaussian-rational coefficients.  They
are immutable after construction and every operation here is pure.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .gaussian import GaussianRational, I, as_fraction

MaskPair = tuple[int, int]


def mask_of(indices: Iterable[int], d: int) -> int:
    """Bitmask for a set of 1-based coordinate indices."""
    m = 0
    for j in indices:
        if not 1 <= j <= d:
            raise ValueError(f"index {j} out of range 1..{d}")
        bit = 1 << (j - 1)
        if m & bit:
            raise ValueError(f"repeated index {j}")
        m |= bit
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    """1-based indices of the set bits, ascending."""
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def _merge_sign(x: int, y: int) -> int:
    # Sign of the shuffle that interleaves two ascending generator blocks x, y
    # (disjoint masks) into one ascending block: one transposition for every
    # pair i in x, j in y with i > j.
    sign = 1
    while y:
        low = y & -y
        if (x & ~((low << 1) - 1)).bit_count() & 1:
            sign = -sign
        y &= y - 1
    return sign


def monomial_wedge(h1: int, a1: int, h2: int, a2: int):
    """Wedge two canonical monomials.

    Returns (sign, hmask, amask), or None when a generator repeats.
    The sign moves the dz block of the second factor left across the dzb
    block of the first, then merges both blocks into ascending order.
    """
    if h1 & h2 or a1 & a2:
        return None
    sign = _merge_sign(h1, h2) * _merge_sign(a1, a2)
    if (a1.bit_count() * h2.bit_count()) & 1:
        sign = -sign
    return sign, h1 | h2, a1 | a2


class Form:
    """Sparse element of the exterior algebra on d generators and conjugates."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[MaskPair, GaussianRational] | None = None):
        if d < 1:
            raise ValueError("dimension must be positive")
        clean: dict[MaskPair, GaussianRational] = {}
        if terms:
            full = (1 << d) - 1
            for (h, a), c in terms.items():
                if h & ~full or a & ~full:
                    raise ValueError("monomial index exceeds dimension")
                c = GaussianRational.of(c)
                if c:
                    clean[(h, a)] = c
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(d: int) -> "Form":
        return Form(d)

    @staticmethod
    def scalar(d: int, value) -> "Form":
        return Form(d, {(0, 0): GaussianRational.of(value)})

    @staticmethod
    def term(d: int, dz: Iterable[int], dzbar: Iterable[int], coeff=1) -> "Form":
        return Form(d, {(mask_of(dz, d), mask_of(dzbar, d)): GaussianRational.of(coeff)})

    @staticmethod
    def dz(d: int, j: int) -> "Form":
        return Form.term(d, [j], [])

    @staticmethod
    def dzbar(d: int, j: int) -> "Form":
        return Form.term(d, [], [j])

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, dz: Iterable[int], dzbar: Iterable[int]) -> GaussianRational:
        return self.terms.get((mask_of(dz, self.d), mask_of(dzbar, self.d)), GaussianRational(0))

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(h.bit_count(), a.bit_count()) for (h, a) in self.terms}

    def homogeneous_bidegree(self) -> tuple[int, int] | None:
        """The (p,q) shared by all monomials, or None for zero or mixed forms."""
        degs = self.bidegrees()
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self, p: int, q: int) -> bool:
        return self.is_zero() or self.bidegrees() == {(p, q)}

    def is_real(self) -> bool:
        return conjugate(self) == self

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if other.d != self.d:
            raise ValueError("dimension mismatch")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            acc = terms.get(key)
            s = c if acc is None else acc + c
            if s:
                terms[key] = s
            elif acc is not None:
                del terms[key]
        out = Form.__new__(Form)
        object.__setattr__(out, "d", self.d)
        object.__setattr__(out, "terms", terms)
        return out

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, value) -> "Form":
        c = GaussianRational.of(value)
        out = Form.__new__(Form)
        object.__setattr__(out, "d", self.d)
        if not c:
            object.__setattr__(out, "terms", {})
        else:
            object.__setattr__(out, "terms", {k: v * c for k, v in self.terms.items()})
        return out

    def __mul__(self, other):
        if isinstance(other, Form):
            return wedge(self, other)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("form powers need a non-negative integer exponent")
        out = Form.scalar(self.d, 1)
        for _ in range(k):
            out = wedge(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return f"Form(d={self.d}, 0)"
        bits = []
        for (h, a) in sorted(self.terms):
            c = self.terms[(h, a)]
            gens = [f"dz{j}" for j in indices_of(h)] + [f"dzb{j}" for j in indices_of(a)]
            mono = "^".join(gens) if gens else "1"
            bits.append(f"({c})*{mono}")
        return f"Form(d={self.d}, " + " + ".join(bits) + ")"

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for (h, a) in sorted(self.terms):
            terms.append(
                {
                    "monomial": {"dz": list(indices_of(h)), "dzbar": list(indices_of(a))},
                    "coeff": self.terms[(h, a)].to_json(),
                }
            )
        return {"dimension": self.d, "terms": terms}

    @staticmethod
    def from_json(obj: dict) -> "Form":
        d = int(obj["dimension"])
        terms: dict[MaskPair, GaussianRational] = {}
        for t in obj["terms"]:
            key = (mask_of(t["monomial"]["dz"], d), mask_of(t["monomial"]["dzbar"], d))
            if key in terms:
                raise ValueError("duplicate monomial in serialized form")
            terms[key] = GaussianRational.from_json(t["coeff"])
        return Form(d, terms)


def wedge(a: Form, b: Form) -> Form:
    """Exterior product.  Bilinear, associative, graded-commutative."""
    if not isinstance(a, Form) or not isinstance(b, Form):
        raise TypeError("wedge expects two forms")
    if a.d != b.d:
        raise ValueError("dimension mismatch")
    terms: dict[MaskPair, GaussianRational] = {}
    for (h1, a1), c1 in a.terms.items():
        for (h2, a2), c2 in b.terms.items():
            hit = monomial_wedge(h1, a1, h2, a2)
            if hit is None:
                continue
            sign, h, am = hit
            c = c1 * c2
            if sign < 0:
                c = -c
            key = (h, am)
            acc = terms.get(key)
            s = c if acc is None else acc + c
            if s:
                terms[key] = s
            elif acc is not None:
                del terms[key]
    out = Form.__new__(Form)
    object.__setattr__(out, "d", a.d)
    object.__setattr__(out, "terms", terms)
    return out


def conjugate(a: Form) -> Form:
    """Antilinear involution swapping dz and dzb; maps bidegree (p,q) to (q,p)."""
    terms: dict[MaskPair, GaussianRational] = {}
    for (h, am), c in a.terms.items():
        cc = c.conjugate()
        # dz block and dzb block swap roles; restoring canonical order costs
        # one transposition per crossing pair.
        if (h.bit_count() * am.bit_count()) & 1:
            cc = -cc
        terms[(am, h)] = cc
    out = Form.__new__(Form)
    object.__setattr__(out, "d", a.d)
    object.__setattr__(out, "terms", terms)
    return out


@lru_cache(maxsize=None)
def _vol_unit(d: int) -> GaussianRational:
    # Coefficient of the canonical monomial dz_1..dz_d ^ dzb_1..dzb_d in the
    # volume form i*dz1^dzb1 ^ ... ^ i*dzd^dzbd.  Equals i**(d*d); the test
    # suite re-derives this from the direct product expansion for small d.
    return I ** (d * d)


def vol_form(d: int) -> Form:
    """The canonical volume form i*dz1^dzb1 ^ ... ^ i*dzd^dzbd, built by wedging."""
    out = Form.scalar(d, 1)
    for j in range(1, d + 1):
        out = wedge(out, Form.term(d, [j], [j], I))
    return out


def identity_form(d: int) -> Form:
    """i * sum_j dz_j^dzb_j, the coordinate avatar of the identity matrix."""
    return Form(d, {((1 << (j - 1)), (1 << (j - 1))): I for j in range(1, d + 1)})


def top_coefficient(a: Form) -> GaussianRational:
    """Coefficient r with a = r * vol, allowing complex r.

    The input must be homogeneous of bidegree (d,d); the zero form counts.
    """
    if a.is_zero():
        return GaussianRational(0)
    full = (1 << a.d) - 1
    if set(a.terms) != {(full, full)}:
        raise ValueError("top extraction needs a homogeneous (d,d)-form")
    return a.terms[(full, full)] / _vol_unit(a.d)


def top_ratio(a: Form) -> Fraction:
    """The unique rational r with a = r * vol, for real (d,d)-forms."""
    r = top_coefficient(a)
    if r.im != 0:
        raise ValueError("top ratio of a non-real form")
    return r.re


class HermitianMatrix:
    """d x d Gaussian-rational matrix with exact Hermitian symmetry."""

    __slots__ = ("d", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(GaussianRational.of(x) for x in row) for row in entries)
        d = len(rows)
        if d < 1 or any(len(r) != d for r in rows):
            raise ValueError("entries must form a square matrix")
        for j in range(d):
            for k in range(j, d):
                if rows[j][k] != rows[k][j].conjugate():
                    raise ValueError("matrix is not Hermitian")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("HermitianMatrix is immutable")

    @staticmethod
    def identity(d: int) -> "HermitianMatrix":
        return HermitianMatrix(
            [[GaussianRational(1 if j == k else 0) for k in range(d)] for j in range(d)]
        )

    @staticmethod
    def diagonal(values) -> "HermitianMatrix":
        vals = [as_fraction(v) for v in values]
        d = len(vals)
        return HermitianMatrix(
            [[GaussianRational(vals[j] if j == k else 0) for k in range(d)] for j in range(d)]
        )

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"HermitianMatrix({[[repr(x) for x in row] for row in self.entries]})"

    def to_json(self) -> dict:
        return {"d": self.d, "entries": [[x.to_json() for x in row] for row in self.entries]}

    @staticmethod
    def from_json(obj: dict) -> "HermitianMatrix":
        return HermitianMatrix(
            [[GaussianRational.from_json(x) for x in row] for row in obj["entries"]]
        )


def hermitian_to_form(H: HermitianMatrix) -> Form:
    """The real (1,1)-form i * sum_{j,k} H[j][k] dz_j^dzb_k."""
    terms: dict[MaskPair, GaussianRational] = {}
    for j in range(H.d):
        for k in range(H.d):
            c = I * H.entries[j][k]
            if c:
                terms[(1 << j, 1 << k)] = c
    return Form(H.d, terms)


def form_to_hermitian(a: Form) -> HermitianMatrix:
    """Inverse of hermitian_to_form; rejects non-(1,1) and non-real input."""
    if not a.is_homogeneous(1, 1):
        raise ValueError("expected a (1,1)-form")
    d = a.d
    rows = [[GaussianRational(0)] * d for _ in range(d)]
    for (h, am), c in a.terms.items():
        j = h.bit_length() - 1
        k = am.bit_length() - 1
        rows[j][k] = c / I
    for j in range(d):
        for k in range(j, d):
            if rows[j][k] != rows[k][j].conjugate():
                raise ValueError("form is not real")
    return HermitianMatrix(rows)


@lru_cache(maxsize=None)
def basis_11_real(d: int) -> tuple[Form, ...]:
    """Ordered basis of the real (1,1)-forms; length d*d.

    First the d diagonal forms i*dz_j^dzb_j.  Then for each pair j < k in
    lexicographic order the two off-diagonal forms

        i*(dz_j^dzb_k + dz_k^dzb_j)      and      -(dz_j^dzb_k - dz_k^dzb_j)

    i.e. the images under hermitian_to_form of E_jj, E_jk + E_kj and
    i*(E_jk - E_kj).  The scaling constant of the second off-diagonal form is
    fixed at -1 so that coordinates read off as (Re H_jk, Im H_jk).
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    out = []
    for j in range(1, d + 1):
        out.append(Form(d, {((1 << (j - 1)), (1 << (j - 1))): I}))
    one = GaussianRational(1)
    for j in range(1, d + 1):
        for k in range(j + 1, d + 1):
            bj, bk = 1 << (j - 1), 1 << (k - 1)
            out.append(Form(d, {(bj, bk): I, (bk, bj): I}))
            out.append(Form(d, {(bj, bk): -one, (bk, bj): one}))
    return tuple(out)


def coords_11_real(a: Form) -> list[Fraction]:
    """Coordinates of a real (1,1)-form in the basis_11_real ordering."""
    H = form_to_hermitian(a)
    d = a.d
    coords = [H.entries[j][j].re for j in range(d)]
    for j in range(d):
        for k in range(j + 1, d):
            coords.append(H.entries[j][k].re)
            coords.append(H.entries[j][k].im)
    return coords
