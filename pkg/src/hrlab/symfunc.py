"""Partitions and Schur polynomials evaluated in the algebra of real (p,p)-forms.

Every evaluation routine has two layers: a generic one that works in any
commutative ring given via duck typing (elements need +, * and multiplication
by ints), and a thin wrapper specialized to forms.  The generic layer is what
lets the test suite replay the same determinants over plain commuting scalar
variables.

The Schur determinant convention is: for a partition (l_1 >= ... >= l_N) the
entry in row i, column j (1-based) is c_{l_i - i + j}, with c_0 = 1 and c_k = 0
for k < 0 or k beyond the number of arguments.  Padding a partition with zero
parts never changes the determinant.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Sequence

from .exterior import Form
from .gaussian import as_fraction, fraction_to_str


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """Parts extended with zeros to length n (evaluations are unchanged)."""
        if n < len(self.parts):
            raise ValueError("cannot pad below the number of parts")
        return self.parts + (0,) * (n - len(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @staticmethod
    def from_json(obj) -> "Partition":
        return Partition(obj)


@lru_cache(maxsize=None)
def partitions(b: int, e: int) -> tuple[Partition, ...]:
    """Partitions of b with parts at most e, lexicographically decreasing."""
    if b < 0:
        raise ValueError("weight must be non-negative")
    if e < 1:
        raise ValueError("largest-part cap must be at least 1")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(b, e, [])
    return tuple(out)


@dataclass(frozen=True)
class WeightVector:
    """Non-negative rational weights summing to one, indexed like partitions(b, e)."""

    x: tuple[Fraction, ...]

    def __init__(self, x):
        vals = tuple(as_fraction(v) for v in x)
        if not vals:
            raise ValueError("weight vector cannot be empty")
        if any(v < 0 for v in vals):
            raise ValueError("weights must be non-negative")
        if sum(vals) != 1:
            raise ValueError("weights must sum to one exactly")
        object.__setattr__(self, "x", vals)

    def __iter__(self):
        return iter(self.x)

    def __len__(self):
        return len(self.x)

    def to_json(self) -> list[str]:
        return [fraction_to_str(v) for v in self.x]

    @staticmethod
    def from_json(obj) -> "WeightVector":
        return WeightVector([Fraction(s) for s in obj])


# -- generic ring layer ----------------------------------------------------


def elementary_elements(k: int, xs: Sequence, one):
    """k-th elementary symmetric function of xs in any commutative ring."""
    if k < 0 or k > len(xs):
        return one * 0
    if k == 0:
        return one
    # Running coefficients of prod (1 + x_i T) up to degree k; descending
    # in-place updates keep the previous round's values where needed.
    coeffs = [one]
    for x in xs:
        if len(coeffs) < k + 1:
            coeffs.append(coeffs[-1] * x)
            start = len(coeffs) - 2
        else:
            start = k
        for j in range(start, 0, -1):
            coeffs[j] = coeffs[j] + coeffs[j - 1] * x
    return coeffs[k]


def schur_elements(lam, xs: Sequence, one):
    """Schur polynomial of xs, via the determinant in elementary functions."""
    lam = Partition(lam)
    zero = one * 0
    n = len(lam.parts)
    if n == 0:
        return one
    need = lam.largest + n - 1
    cs = [elementary_elements(k, xs, one) for k in range(need + 1)]

    def entry(i: int, j: int):
        k = lam.parts[i] - i + j
        if k < 0 or k > need:
            return zero
        return cs[k]

    total = zero
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        prod = one
        dead = False
        for i in range(n):
            f = entry(i, perm[i])
            if not f:
                dead = True
                break
            prod = prod * f
        if dead:
            continue
        total = total + (prod if inversions % 2 == 0 else prod * -1)
    return total


class UniPoly:
    """Polynomial in one central variable with coefficients in any ring."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.coeffs[0] * 0

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return UniPoly(out)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            out = [self.coeffs[0] * 0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b:
                        continue
                    out[i + j] = out[i + j] + a * b
            return UniPoly(out)
        return UniPoly([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return UniPoly([other * c for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        la, lb = len(self.coeffs), len(other.coeffs)
        pad_a = self.coeffs + tuple(self.coeffs[0] * 0 for _ in range(max(0, lb - la)))
        pad_b = other.coeffs + tuple(other.coeffs[0] * 0 for _ in range(max(0, la - lb)))
        return all(a == b for a, b in zip(pad_a, pad_b))

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"


def derived_schur_all_elements(lam, xs: Sequence, one) -> list:
    """Coefficients [s^(0), s^(1), ...] of the uniform shift expansion.

    Substituting x_i + T for every argument and expanding in the central
    variable T gives the derived values; index j is the coefficient of T^j.
    """
    lam = Partition(lam)
    lifted = [UniPoly((x, one)) for x in xs]
    s = schur_elements(lam, lifted, UniPoly((one,)))
    zero = one * 0
    out = [s.coeff(j) for j in range(s.degree() + 1)]
    while len(out) <= lam.weight:
        out.append(zero)
    return out


def derived_schur_elements(lam, xs: Sequence, j: int, one):
    lam = Partition(lam)
    if j < 0 or j > lam.weight:
        return one * 0
    return derived_schur_all_elements(lam, xs, one)[j]


def twisted_chern_elements(cs: Sequence, e: int, delta, p: int, one):
    """Twisted class c_p: sum over k of binom(e-k, p-k) * c_k * delta^(p-k)."""
    if not 0 <= p <= e:
        raise ValueError(f"index {p} out of range 0..{e}")
    total = one * 0
    dpow = one
    # Walk k from p down to 0 so delta powers build incrementally.
    for k in range(p, -1, -1):
        if k < len(cs):
            total = total + comb(e - k, p - k) * (cs[k] * dpow)
        dpow = dpow * delta
    return total


# -- form layer -------------------------------------------------------------


def _common_dimension(forms: Sequence[Form]) -> int:
    if not forms:
        raise ValueError("need at least one form")
    d = forms[0].d
    for f in forms:
        if not isinstance(f, Form):
            raise TypeError("expected forms")
        if f.d != d:
            raise ValueError("mixed dimensions")
    return d


def elementary(k: int, forms: Sequence[Form]) -> Form:
    """k-th elementary symmetric function of (1,1)-forms under wedge."""
    d = _common_dimension(forms)
    return elementary_elements(k, list(forms), Form.scalar(d, 1))


def schur(lam, forms: Sequence[Form]) -> Form:
    """Schur polynomial of (1,1)-forms; a real form of bidegree (|lam|, |lam|)."""
    lam = Partition(lam)
    d = _common_dimension(forms)
    if lam.largest > len(forms):
        warnings.warn(
            f"partition part {lam.largest} exceeds the number of forms "
            f"({len(forms)}); outside the guaranteed signature range",
            RuntimeWarning,
            stacklevel=2,
        )
    return schur_elements(lam, list(forms), Form.scalar(d, 1))


def derived_schur(lam, forms: Sequence[Form], j: int) -> Form:
    """Coefficient of the j-th power of a uniform (1,1) shift of the arguments."""
    d = _common_dimension(forms)
    return derived_schur_elements(lam, list(forms), j, Form.scalar(d, 1))


def derived_schur_all(lam, forms: Sequence[Form]) -> list[Form]:
    d = _common_dimension(forms)
    return derived_schur_all_elements(lam, list(forms), Form.scalar(d, 1))


def twisted_chern(cs: Sequence[Form], e: int, delta, p: int):
    """Twist of a Chern-class list by a (1,1)-form delta.

    Passing a UniPoly for delta computes the twist with a formal central
    variable instead; the class list is lifted into that polynomial ring.
    """
    d = _common_dimension(cs)
    one = Form.scalar(d, 1)
    if isinstance(delta, UniPoly):
        return twisted_chern_elements(
            [UniPoly((c,)) for c in cs], e, delta, p, UniPoly((one,))
        )
    return twisted_chern_elements(list(cs), e, delta, p, one)


def schur_combination(weights: WeightVector, b: int, e: int, forms: Sequence[Form]) -> Form:
    """Convex combination of the Schur forms indexed by partitions(b, e)."""
    lams = partitions(b, e)
    if len(weights) != len(lams):
        raise ValueError(
            f"weight vector has {len(weights)} entries but there are "
            f"{len(lams)} partitions of {b} with parts at most {e}"
        )
    d = _common_dimension(forms)
    total = Form.zero(d)
    for w, lam in zip(weights, lams):
        if w:
            total = total + schur(lam, forms).scale(w)
    return total
