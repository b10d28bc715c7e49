"""Positivity tests for forms, at the levels where they are exactly decidable.

Strict positivity of a (1,1)-form reduces to positive definiteness of its
Hermitian matrix, decided by leading principal minors.  Positivity of a real
(p,p)-form is decided by assembling the induced Hermitian pairing on the
complementary space of holomorphic top fragments and computing its exact
inertia.  Weak positivity is dual to the simple-form cone and only gets a
sampling falsifier: a refutation carries a witness, absence of one proves
nothing, and the verdict name says so.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .bilinear import hermitian_inertia_with_basis
from .exterior import Form, HermitianMatrix, top_coefficient, top_ratio, wedge
from .gaussian import GaussianRational, I
from .sampling import derive_seed, random_one_form

POSITIVE = "POSITIVE"
STRICTLY_POSITIVE = "STRICTLY_POSITIVE"
NOT_POSITIVE = "NOT_POSITIVE"
WEAKLY_POSITIVE_UNFALSIFIED = "WEAKLY_POSITIVE_UNFALSIFIED"
WEAKLY_POSITIVE_FALSIFIED = "WEAKLY_POSITIVE_FALSIFIED"


@dataclass(frozen=True)
class ConeVerdict:
    cone: str
    witness: Optional[Form] = None

    def __post_init__(self):
        if self.cone in (NOT_POSITIVE, WEAKLY_POSITIVE_FALSIFIED) and self.witness is None:
            raise ValueError(f"{self.cone} verdicts must carry a witness")

    def to_json(self) -> dict:
        return {
            "cone": self.cone,
            "witness": self.witness.to_json() if self.witness is not None else None,
        }


def hermitian_det(rows: Sequence[Sequence[GaussianRational]]) -> GaussianRational:
    """Exact determinant by fraction elimination with row-swap sign tracking."""
    m = [list(row) for row in rows]
    n = len(m)
    sign = 1
    det = GaussianRational(1)
    for c in range(n):
        hit = next((r for r in range(c, n) if m[r][c]), None)
        if hit is None:
            return GaussianRational(0)
        if hit != c:
            m[c], m[hit] = m[hit], m[c]
            sign = -sign
        p = m[c][c]
        det = det * p
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / p
                for k in range(c, n):
                    m[r][k] = m[r][k] - f * m[c][k]
    return det if sign > 0 else -det


def leading_principal_minors(H: HermitianMatrix) -> list[Fraction]:
    """Determinants of the leading k x k blocks; real for Hermitian input."""
    out = []
    for k in range(1, H.d + 1):
        det = hermitian_det([row[:k] for row in H.entries[:k]])
        if det.im != 0:
            raise RuntimeError("Hermitian minor came out complex")
        out.append(det.re)
    return out


def is_positive_definite_11(H: HermitianMatrix) -> bool:
    """Exact positive definiteness through the leading principal minor test."""
    return all(m > 0 for m in leading_principal_minors(H))


def is_positive_pp(eta: Form) -> ConeVerdict:
    """Decide membership of a real (p,p)-form in the positive cone.

    The pairing sends a holomorphic (d-p)-fragment b to the top ratio of
    eta ^ i^((d-p)^2) b ^ conj(b); eta is positive exactly when the induced
    Hermitian matrix over the canonical fragment basis is positive
    semidefinite, and strictly positive when definite.
    """
    d = eta.d
    deg = eta.homogeneous_bidegree()
    if eta.is_zero():
        return ConeVerdict(POSITIVE)
    if deg is None or deg[0] != deg[1]:
        raise ValueError("expected a homogeneous (p,p)-form")
    p = deg[0]
    if not eta.is_real():
        raise ValueError("expected a real form")
    q = d - p
    subsets = list(combinations(range(1, d + 1), q))
    unit = I ** (q * q)
    mat = []
    for S in subsets:
        row = []
        dzS = Form.term(d, S, [])
        left = wedge(eta, dzS)
        for T in subsets:
            row.append(unit * top_coefficient(wedge(left, Form.term(d, [], T))))
        mat.append(row)
    for a in range(len(subsets)):
        for b in range(len(subsets)):
            if mat[a][b] != mat[b][a].conjugate():
                raise RuntimeError("induced pairing is not Hermitian")
    sig, diag, _basis = hermitian_inertia_with_basis(mat)
    if sig.n_minus > 0:
        vec = next(v for value, v in diag if value < 0)
        witness = Form(d, {})
        for coeff, S in zip(vec, subsets):
            if coeff:
                witness = witness + Form.term(d, S, [], coeff.conjugate())
        return ConeVerdict(NOT_POSITIVE, witness)
    if sig.n_zero == 0:
        return ConeVerdict(STRICTLY_POSITIVE)
    return ConeVerdict(POSITIVE)


def simple_form(alphas: Sequence[Form]) -> Form:
    """The product of i*a^conj(a) over the given (1,0)-forms."""
    if not alphas:
        raise ValueError("need at least one (1,0)-form")
    d = alphas[0].d
    if len(alphas) > d:
        raise ValueError("more factors than the dimension allows")
    out = Form.scalar(d, 1)
    for a in alphas:
        if a.d != d:
            raise ValueError("mixed dimensions")
        if not a.is_homogeneous(1, 0):
            raise ValueError("factors must be (1,0)-forms")
        from .exterior import conjugate

        out = wedge(out, wedge(a, conjugate(a)).scale(I))
    return out


def falsify_weak_positivity(eta: Form, trials: int, seed: int) -> ConeVerdict:
    """Search for a simple form of complementary degree pairing negatively.

    Returns FALSIFIED with the witness on success.  UNFALSIFIED is explicitly
    not a membership proof; it only reports that the sampled dual directions
    all paired non-negatively.
    """
    d = eta.d
    deg = eta.homogeneous_bidegree()
    if not eta.is_zero():
        if deg is None or deg[0] != deg[1]:
            raise ValueError("expected a homogeneous (p,p)-form")
        if not eta.is_real():
            raise ValueError("expected a real form")
        p = deg[0]
    else:
        p = 0
    q = d - p
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, "weak-positivity", trial))
        if q == 0:
            gamma = Form.scalar(d, 1)
        else:
            gamma = simple_form([random_one_form(rng, d) for _ in range(q)])
        if top_ratio(wedge(eta, gamma)) < 0:
            return ConeVerdict(WEAKLY_POSITIVE_FALSIFIED, gamma)
    return ConeVerdict(WEAKLY_POSITIVE_UNFALSIFIED)
