"""Exact symmetric bilinear forms, signatures, and the Hodge-Riemann predicates.

Signatures come from symmetric congruence reduction over the rationals:
diagonal pivots where available, and when the remaining diagonal vanishes a
symmetric row/column addition exposes a nonzero diagonal entry from any
nonzero off-diagonal pair.  Sylvester's law makes the count basis independent,
so the result is exact.

A form Q with Q(h) > 0 for some h has the Hodge-Riemann property when its
signature is (1, n-1, 0); the weak variant with respect to h asks only for a
single positive direction plus Q(h) > 0.  The quantified Hodge-index
inequality Q(v)Q(h) <= Q(v,h)^2 for all v is decided exactly by testing
positive semidefiniteness of the assembled quadratic form
T(v) = Q(v,h)^2 - Q(v)Q(h).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .exterior import Form, basis_11_real, top_ratio, wedge
from .gaussian import GaussianRational, as_fraction, fraction_to_str


class Signature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    def to_json(self) -> list[int]:
        return [self.n_plus, self.n_minus, self.n_zero]


Vector = Sequence[Fraction]


def _as_vector(v, n: int) -> tuple[Fraction, ...]:
    vec = tuple(as_fraction(x) for x in v)
    if len(vec) != n:
        raise ValueError(f"vector has length {len(vec)}, expected {n}")
    return vec


class SymBilinearForm:
    """Rational symmetric matrix over a declared ordered basis."""

    __slots__ = ("matrix", "basis_tag")

    def __init__(self, matrix, basis_tag: str = ""):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "matrix", rows)
        object.__setattr__(self, "basis_tag", basis_tag)

    def __setattr__(self, name, value):
        raise AttributeError("SymBilinearForm is immutable")

    @staticmethod
    def zero(n: int, basis_tag: str = "") -> "SymBilinearForm":
        z = Fraction(0)
        return SymBilinearForm([[z] * n for _ in range(n)], basis_tag)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)

    def value(self, u: Vector, v: Vector) -> Fraction:
        u = _as_vector(u, self.n)
        v = _as_vector(v, self.n)
        return sum(u[i] * sum(self.matrix[i][j] * v[j] for j in range(self.n)) for i in range(self.n))

    def quad(self, v: Vector) -> Fraction:
        return self.value(v, v)

    def pairing_vector(self, h: Vector) -> tuple[Fraction, ...]:
        """The vector of values Q(e_i, h) over the declared basis."""
        h = _as_vector(h, self.n)
        return tuple(sum(row[j] * h[j] for j in range(self.n)) for row in self.matrix)

    def restrict_indices(self, indices: Sequence[int], basis_tag: str | None = None) -> "SymBilinearForm":
        tag = self.basis_tag + "|sub" if basis_tag is None else basis_tag
        return SymBilinearForm(
            [[self.matrix[i][j] for j in indices] for i in indices], tag
        )

    def restrict_span(self, vectors: Sequence[Vector], basis_tag: str | None = None) -> "SymBilinearForm":
        vecs = [_as_vector(v, self.n) for v in vectors]
        tag = self.basis_tag + "|span" if basis_tag is None else basis_tag
        images = [self.pairing_vector(v) for v in vecs]
        return SymBilinearForm(
            [[sum(u[k] * img[k] for k in range(self.n)) for img in images] for u in vecs],
            tag,
        )

    def __add__(self, other):
        if not isinstance(other, SymBilinearForm):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("size mismatch")
        return SymBilinearForm(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.matrix, other.matrix)],
            self.basis_tag,
        )

    def __sub__(self, other):
        if not isinstance(other, SymBilinearForm):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return SymBilinearForm(
                [[x * c for x in row] for row in self.matrix], self.basis_tag
            )
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __eq__(self, other):
        if not isinstance(other, SymBilinearForm):
            return NotImplemented
        return self.matrix == other.matrix and self.basis_tag == other.basis_tag

    def __repr__(self):
        return f"SymBilinearForm(n={self.n}, tag={self.basis_tag!r})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis_tag,
            "matrix": [[fraction_to_str(x) for x in row] for row in self.matrix],
        }

    @staticmethod
    def from_json(obj: dict) -> "SymBilinearForm":
        return SymBilinearForm(
            [[Fraction(s) for s in row] for row in obj["matrix"]], obj["basis"]
        )


def _inertia(rows: list[list[Fraction]]) -> Signature:
    n = len(rows)
    active = list(range(n))
    plus = minus = 0
    while active:
        pivot = next((k for k in active if rows[k][k] != 0), None)
        if pivot is None:
            pair = next(
                (
                    (j, k)
                    for j in active
                    for k in active
                    if j != k and rows[j][k] != 0
                ),
                None,
            )
            if pair is None:
                return Signature(plus, minus, len(active))
            j, k = pair
            # b_j += b_k turns the zero diagonal entry into 2*rows[j][k].
            for c in active:
                rows[j][c] += rows[k][c]
            for r in active:
                rows[r][j] += rows[r][k]
            pivot = j
        p = rows[pivot][pivot]
        if p > 0:
            plus += 1
        else:
            minus += 1
        active.remove(pivot)
        for r in active:
            f = rows[r][pivot]
            if f == 0:
                continue
            f = f / p
            for c in active:
                rows[r][c] -= f * rows[pivot][c]
            rows[r][pivot] = Fraction(0)
        for c in active:
            rows[pivot][c] = Fraction(0)
    return Signature(plus, minus, 0)


def signature(Q: SymBilinearForm) -> Signature:
    """Exact inertia (n_plus, n_minus, n_zero) via rational congruence."""
    return _inertia([list(row) for row in Q.matrix])


def is_psd(Q: SymBilinearForm) -> bool:
    return signature(Q).n_minus == 0


def is_hr(Q: SymBilinearForm) -> bool:
    """Signature (1, n-1, 0): one positive direction, no kernel."""
    return signature(Q) == Signature(1, Q.n - 1, 0)


def is_hr_wrt(Q: SymBilinearForm, h: Vector) -> bool:
    return Q.quad(h) > 0 and is_hr(Q)


def is_weak_hr_wrt(Q: SymBilinearForm, h: Vector) -> bool:
    """Q(h) > 0 and exactly one positive eigenvalue (closure of the HR forms)."""
    return Q.quad(h) > 0 and signature(Q).n_plus == 1


def hodge_index_defect(Q: SymBilinearForm, h: Vector) -> SymBilinearForm:
    """The quadratic form T(v) = Q(v,h)^2 - Q(v)Q(h).

    T positive semidefinite is equivalent to the Hodge-index inequality
    holding for every v, turning the universal quantifier into one exact
    signature computation.
    """
    w = Q.pairing_vector(h)
    qh = Q.quad(h)
    n = Q.n
    rows = [
        [w[i] * w[j] - qh * Q.matrix[i][j] for j in range(n)]
        for i in range(n)
    ]
    return SymBilinearForm(rows, Q.basis_tag + "|hodge-index-defect")


def kernel_basis(rows: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Basis of the null space of a rational matrix, deterministic pivots."""
    m = [list(as_fraction(x) for x in row) for row in rows]
    if not m:
        raise ValueError("empty matrix")
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        hit = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * ncols
        v[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][c]
        basis.append(tuple(v))
    return basis


def solve_in_span(vectors: Sequence[Vector], target: Vector):
    """Coefficients expressing target in the given spanning vectors, or None."""
    if not vectors:
        return None
    n = len(vectors[0])
    cols = [_as_vector(v, n) for v in vectors]
    t = list(_as_vector(target, n))
    m = [[cols[j][i] for j in range(len(cols))] + [t[i]] for i in range(n)]
    ncols = len(cols)
    pivots = []
    r = 0
    for c in range(ncols):
        hit = next((i for i in range(r, n) if m[i][c] != 0), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if m[i][ncols] != 0:
            return None
    coeffs = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        coeffs[pc] = m[i][ncols]
    return tuple(coeffs)


def primitive_restriction(Q: SymBilinearForm, h: Vector) -> SymBilinearForm:
    """Q restricted to the orthogonal complement {v : Q(v,h) = 0}.

    Requires Q(h) != 0; for Hodge-Riemann forms with Q(h) > 0 the result is
    negative definite.
    """
    if Q.quad(h) == 0:
        raise ValueError("primitive restriction needs Q(h) != 0")
    w = Q.pairing_vector(h)
    basis = kernel_basis([w])
    return Q.restrict_span(basis, Q.basis_tag + "|primitive")


def proportionality_witness(
    Q: SymBilinearForm,
    vprime: Sequence[Vector],
    beta: Vector,
    gamma: Vector,
) -> Fraction:
    """The factor kappa with beta = kappa * gamma, under the null-pair hypotheses.

    Hypotheses checked exactly: Q has the Hodge-Riemann property, Q is
    negative semidefinite on span(vprime), beta and gamma lie in that span,
    both are null vectors of Q, and gamma is nonzero.  Existence of kappa is
    then guaranteed; failing to find one indicates a bug and raises.
    """
    beta = _as_vector(beta, Q.n)
    gamma = _as_vector(gamma, Q.n)
    if not is_hr(Q):
        raise ValueError("form does not have the Hodge-Riemann property")
    sub = Q.restrict_span(vprime)
    if signature(sub).n_plus != 0:
        raise ValueError("form is not negative semidefinite on the subspace")
    if solve_in_span(vprime, beta) is None or solve_in_span(vprime, gamma) is None:
        raise ValueError("vectors must lie in the given subspace")
    if Q.quad(beta) != 0 or Q.quad(gamma) != 0:
        raise ValueError("vectors must be null vectors of the form")
    if all(x == 0 for x in gamma):
        raise ValueError("gamma must be nonzero")
    k = next(i for i in range(Q.n) if gamma[i] != 0)
    kappa = beta[k] / gamma[k]
    if any(b != kappa * g for b, g in zip(beta, gamma)):
        raise RuntimeError("proportionality guaranteed by hypotheses but not found")
    return kappa


def gram(omega: Form) -> SymBilinearForm:
    """Intersection form (a, b) -> top_ratio(a ^ omega ^ b) over basis_11_real.

    omega must be a real homogeneous (d-2, d-2)-form with d >= 2; the result
    is the d^2 x d^2 rational symmetric matrix of the pairing.
    """
    d = omega.d
    if d < 2:
        raise ValueError("need dimension at least 2")
    if not omega.is_homogeneous(d - 2, d - 2):
        raise ValueError(f"expected a ({d-2},{d-2})-form")
    if not omega.is_real():
        raise ValueError("expected a real form")
    basis = basis_11_real(d)
    n = len(basis)
    left = [wedge(b, omega) for b in basis]
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = top_ratio(wedge(left[i], basis[j]))
    return SymBilinearForm(rows, f"w11(d={d})")


def hermitian_inertia(entries) -> Signature:
    """Exact inertia of a Hermitian Gaussian-rational matrix."""
    sig, _diag, _vecs = hermitian_inertia_with_basis(entries)
    return sig


def hermitian_inertia_with_basis(entries):
    """Inertia plus a diagonalizing basis: vectors b with value(b) = diag entry."""
    rows = [list(GaussianRational.of(x) for x in row) for row in entries]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    basis = [
        [GaussianRational(1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    active = list(range(n))
    diag: list[tuple[Fraction, list[GaussianRational]]] = []
    plus = minus = 0
    while active:
        pivot = next((k for k in active if rows[k][k]), None)
        if pivot is None:
            pair = next(
                (
                    (j, k)
                    for j in active
                    for k in active
                    if j != k and rows[j][k]
                ),
                None,
            )
            if pair is None:
                break
            j, k = pair
            c = rows[j][k].conjugate()
            # b_j += conj(a) * b_k gives the real diagonal value 2|a|^2.
            for col in active:
                rows[j][col] = rows[j][col] + c.conjugate() * rows[k][col]
            for r in active:
                rows[r][j] = rows[r][j] + c * rows[r][k]
            for t in range(n):
                basis[j][t] = basis[j][t] + c * basis[k][t]
            pivot = j
        p = rows[pivot][pivot]
        if p.im != 0:
            raise RuntimeError("Hermitian reduction produced a complex pivot")
        if p.re > 0:
            plus += 1
        else:
            minus += 1
        diag.append((p.re, list(basis[pivot])))
        active.remove(pivot)
        for r in active:
            f = rows[r][pivot]
            if not f:
                continue
            t = f / p
            for c in active:
                rows[r][c] = rows[r][c] - t * rows[pivot][c]
            for s in range(n):
                basis[r][s] = basis[r][s] - (rows[pivot][r] / p) * basis[pivot][s]
            rows[r][pivot] = GaussianRational(0)
        for c in active:
            rows[pivot][c] = GaussianRational(0)
    zero = n - plus - minus
    return Signature(plus, minus, zero), diag, basis
