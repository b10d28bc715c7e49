"""Independent brute-force implementations used only as test oracles.

Nothing here shares code with the package: the exterior algebra is replayed
over generator tuples with insertion-sort sign counting, determinants are
expanded by cofactors, elementary symmetric functions by explicit subsets,
and the mixed discriminant by the double permutation sum.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from hrlab.exterior import Form, indices_of
from hrlab.gaussian import GaussianRational

# -- naive exterior algebra over generator tuples ---------------------------
# Generators are coded 1..d for the holomorphic ones and d+1..2d for the
# conjugates; a multivector is a dict from ascending generator tuples to
# GaussianRational coefficients.


def sort_with_sign(seq):
    """Insertion sort; returns (sorted tuple, sign) or (None, 0) on repeats."""
    arr = list(seq)
    sign = 1
    for i in range(1, len(arr)):
        j = i
        while j > 0 and arr[j - 1] > arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(arr, arr[1:]):
        if a == b:
            return None, 0
    return tuple(arr), sign


def naive_mul(a: dict, b: dict) -> dict:
    out = {}
    for ta, ca in a.items():
        for tb, cb in b.items():
            tup, sign = sort_with_sign(ta + tb)
            if tup is None:
                continue
            c = ca * cb
            if sign < 0:
                c = -c
            acc = out.get(tup, GaussianRational(0)) + c
            if acc:
                out[tup] = acc
            elif tup in out:
                del out[tup]
    return out


def naive_from_form(f: Form, d: int) -> dict:
    out = {}
    for (h, am), c in f.terms.items():
        tup = tuple(indices_of(h)) + tuple(d + j for j in indices_of(am))
        out[tup] = c
    return out


def naive_product_of_forms(forms, d: int) -> dict:
    acc = {(): GaussianRational(1)}
    for f in forms:
        acc = naive_mul(acc, naive_from_form(f, d))
    return acc


def naive_vol(d: int) -> dict:
    acc = {(): GaussianRational(1)}
    for j in range(1, d + 1):
        acc = naive_mul(acc, {(j, d + j): GaussianRational(0, 1)})
    return acc


def naive_top_coefficient(mv: dict, d: int) -> GaussianRational:
    """Coefficient against the naive volume expansion."""
    vol = naive_vol(d)
    (vol_tup, vol_c), = vol.items()
    coeff = mv.get(vol_tup, GaussianRational(0))
    return coeff / vol_c


# -- scalar polynomials ------------------------------------------------------


class Poly:
    """Multivariate polynomial over Fractions, dict keyed by exponent tuples."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for k, v in terms.items():
                v = Fraction(v)
                if v:
                    self.terms[tuple(k)] = v

    @staticmethod
    def const(n, value):
        return Poly(n, {(0,) * n: Fraction(value)})

    @staticmethod
    def var(i, n):
        key = tuple(1 if j == i else 0 for j in range(n))
        return Poly(n, {key: Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            acc = out.get(k, Fraction(0)) + v
            if acc:
                out[k] = acc
            elif k in out:
                del out[k]
        return Poly(self.n, out)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.n, {k: v * other for k, v in self.terms.items()})
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                acc = out.get(key, Fraction(0)) + va * vb
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return Poly(self.n, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return self + (other * -1)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.n, other)
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.terms})"


def oracle_elementary(k: int, xs: list) -> object:
    """Elementary symmetric function by explicit subset sums."""
    n = xs[0].n
    if k < 0 or k > len(xs):
        return Poly(n)
    if k == 0:
        return Poly.const(n, 1)
    total = Poly(n)
    for combo in combinations(xs, k):
        prod = Poly.const(n, 1)
        for x in combo:
            prod = prod * x
        total = total + prod
    return total


def oracle_cofactor_det(rows: list) -> object:
    """Determinant by recursive first-row cofactor expansion."""
    size = len(rows)
    if size == 0:
        raise ValueError("use the 1x1 base case upstream")
    if size == 1:
        return rows[0][0]
    n = rows[0][0].n
    total = Poly(n)
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * oracle_cofactor_det(minor)
        total = total + (term if j % 2 == 0 else term * -1)
    return total


def oracle_schur(parts: tuple, nvars: int) -> object:
    """Schur polynomial in nvars scalar variables via the cofactor oracle."""
    xs = [Poly.var(i, nvars) for i in range(nvars)]
    size = len(parts)
    if size == 0:
        return Poly.const(nvars, 1)
    need = parts[0] + size - 1
    cs = [oracle_elementary(k, xs) for k in range(need + 1)]

    def entry(i, j):
        k = parts[i] - (i + 1) + (j + 1)
        if k < 0 or k > need:
            return Poly(nvars)
        return cs[k]

    rows = [[entry(i, j) for j in range(size)] for i in range(size)]
    return oracle_cofactor_det(rows)


# -- mixed discriminant ------------------------------------------------------


def perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def mixed_discriminant(mats) -> GaussianRational:
    """Double permutation sum, normalized so D(A, ..., A) = det(A)."""
    d = mats[0].d
    total = GaussianRational(0)
    for sigma in permutations(range(d)):
        s1 = perm_sign(sigma)
        for tau in permutations(range(d)):
            s2 = perm_sign(tau)
            prod = GaussianRational(1)
            for k in range(d):
                prod = prod * mats[k].entries[sigma[k]][tau[k]]
            total = total + (prod if s1 * s2 > 0 else -prod)
    return total / factorial(d)


def brute_partitions(b: int, e: int) -> set:
    """All bounded partitions by filtering tuples, for enumeration cross-checks."""
    if b == 0:
        return {()}
    out = set()

    def rec(remaining, prefix):
        if remaining == 0:
            out.add(tuple(prefix))
            return
        lo = 1
        for p in range(lo, min(e, remaining, prefix[-1] if prefix else e) + 1):
            rec(remaining - p, prefix + [p])

    rec(b, [])
    return out
