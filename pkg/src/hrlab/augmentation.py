"""Families of intersection forms on a space extended by one formal direction.

The ambient space V is the real (1,1)-basis W of dimension d^2 extended by a
single extra vector zeta, modelling one formal positive direction whose powers
truncate above degree d.  For a partition lam and strictly positive data
(h, omega_1..omega_e) the weighted intersection forms

    Q_i(b, b') = integral of  b * s_lam(omega_hat) * zeta^i * h^(d-i) * b'

are assembled two independent ways: from the derived Schur coefficients of
s_lam (intersection_form), and by multiplying everything out in the truncated
polynomial ring over the exterior algebra (intersection_form_by_product).
Their exact equality is a test target, not an assumption.

The one-parameter families

    R_{i,t} = sum_k binom(d-i+k, k) t^k Q_{i-k}

support two verification routes to the Hodge-Riemann property: a first-order
route (property A: five conditions on R, its derivative and zeta) driving a
recursion in i, and a second-order route (property B) whose conclusion is the
restriction to W.  Each check here is exact: the quantified inequalities are
decided by positive semidefiniteness of assembled quadratic forms, never by
sampling vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .bilinear import (
    Signature,
    SymBilinearForm,
    hodge_index_defect,
    is_hr_wrt,
    is_psd,
    signature,
    gram,
)
from .exterior import (
    Form,
    basis_11_real,
    coords_11_real,
    form_to_hermitian,
    identity_form,
    top_ratio,
    wedge,
)
from .gaussian import as_fraction, fraction_to_str
from .positivity import is_positive_definite_11
from .symfunc import Partition, UniPoly, derived_schur_all, schur_elements

DEFAULT_T_SAMPLES = (
    Fraction(0),
    Fraction(1, 100),
    Fraction(-1, 100),
    Fraction(1, 10),
    Fraction(-1, 10),
)

CONSISTENT = "CONSISTENT"
INCONSISTENT = "INCONSISTENT"
NOT_APPLICABLE = "NOT-APPLICABLE"


def _normalize_t_samples(t_samples) -> tuple[Fraction, ...]:
    # t = 0 is always checked; the rest of the grid is configurable.
    vals = {Fraction(0)}
    for t in t_samples if t_samples is not None else DEFAULT_T_SAMPLES:
        vals.add(as_fraction(t))
    return tuple(sorted(vals, key=lambda t: (abs(t), t)))


class AugmentedSpace:
    """W + R*zeta with strictly positive reference data h and omega_1..omega_e.

    The basis order is basis_11_real(d) followed by zeta.  Instances cache the
    derived Schur coefficients and assembled matrices per partition; caches
    are private memoization of pure values, so instances stay safe to share
    across threads and to rebuild per process.
    """

    def __init__(self, omegas: Sequence[Form], h: Form | None = None):
        omegas = list(omegas)
        if not omegas:
            raise ValueError("need at least one strictly positive form")
        d = omegas[0].d
        if d < 2:
            raise ValueError("need dimension at least 2")
        h = identity_form(d) if h is None else h
        if h.d != d or any(w.d != d for w in omegas):
            raise ValueError("mixed dimensions")
        for name, f in [("h", h)] + [(f"omega_{j+1}", w) for j, w in enumerate(omegas)]:
            if not is_positive_definite_11(form_to_hermitian(f)):
                raise ValueError(f"{name} is not strictly positive")
        self.d = d
        self.e = len(omegas)
        self.h = h
        self.omegas = tuple(omegas)
        self.w_basis = basis_11_real(d)
        self.dim_w = d * d
        self.dim_v = d * d + 1
        self.zeta_index = d * d
        self.basis_tag = f"w11+zeta(d={d})"
        self.h_coords = tuple(coords_11_real(h)) + (Fraction(0),)
        self.zeta_coords = tuple(
            Fraction(1) if i == self.zeta_index else Fraction(0)
            for i in range(self.dim_v)
        )
        self._hpow: dict[int, Form] = {}
        self._derived: dict[tuple[int, ...], list[Form]] = {}
        self._schur_hat: dict[tuple[int, ...], UniPoly] = {}
        self._qi: dict[tuple[tuple[int, ...], int], SymBilinearForm] = {}
        self._qi_product: dict[tuple[tuple[int, ...], int], SymBilinearForm] = {}

    def w_indices(self) -> range:
        return range(self.dim_w)

    def h_coords_w(self) -> tuple[Fraction, ...]:
        return self.h_coords[: self.dim_w]

    def h_power(self, k: int) -> Form:
        if k < 0:
            return Form.zero(self.d)
        cached = self._hpow.get(k)
        if cached is None:
            cached = Form.scalar(self.d, 1) if k == 0 else wedge(self.h_power(k - 1), self.h)
            self._hpow[k] = cached
        return cached

    def derived_coeffs(self, lam: Partition) -> list[Form]:
        key = lam.parts
        cached = self._derived.get(key)
        if cached is None:
            cached = derived_schur_all(lam, self.omegas)
            self._derived[key] = cached
        return cached

    def schur_shifted(self, lam: Partition) -> UniPoly:
        """s_lam evaluated at omega_j + zeta in the polynomial ring over forms."""
        key = lam.parts
        cached = self._schur_hat.get(key)
        if cached is None:
            one = Form.scalar(self.d, 1)
            hats = [UniPoly((w, one)) for w in self.omegas]
            cached = schur_elements(lam, hats, UniPoly((one,)))
            self._schur_hat[key] = cached
        return cached


def _integral(form: Form) -> Fraction:
    return Fraction(0) if form.is_zero() else top_ratio(form)


def _check_weight(space: AugmentedSpace, lam: Partition) -> None:
    # The integrand slices only land in top degree when |lam| = d - 2.
    if lam.weight != space.d - 2:
        raise ValueError(
            f"partition weight must be d-2 = {space.d - 2}, got {lam.weight}"
        )


def _assemble(space: AugmentedSpace, ww: Form, wz: Form, zz: Form) -> SymBilinearForm:
    """Matrix over V from the three homogeneous slices of the integrand.

    ww pairs two W vectors, wz pairs a W vector with zeta, zz pairs zeta with
    itself; each slice is wedged against basis forms and integrated.
    """
    n = space.dim_v
    rows = [[Fraction(0)] * n for _ in range(n)]
    if not ww.is_zero():
        block = gram(ww).matrix
        for a in range(space.dim_w):
            row_a = rows[a]
            for b in range(space.dim_w):
                row_a[b] = block[a][b]
    if not wz.is_zero():
        for a, alpha in enumerate(space.w_basis):
            v = _integral(wedge(alpha, wz))
            rows[a][space.zeta_index] = v
            rows[space.zeta_index][a] = v
    rows[space.zeta_index][space.zeta_index] = _integral(zz)
    return SymBilinearForm(rows, space.basis_tag)


def intersection_form(space: AugmentedSpace, lam, i: int) -> SymBilinearForm:
    """Q_i assembled from derived Schur coefficients.

    The W x W slice uses coefficient d-i, the W x zeta slice d-i-1, and the
    zeta x zeta slice d-i-2, each wedged with h^(d-i).  Outside 0 <= i <= d
    the form is zero.
    """
    lam = Partition(lam)
    _check_weight(space, lam)
    key = (lam.parts, i)
    cached = space._qi.get(key)
    if cached is not None:
        return cached
    d = space.d
    if i < 0 or i > d:
        out = SymBilinearForm.zero(space.dim_v, space.basis_tag)
    else:
        coeffs = space.derived_coeffs(lam)

        def sd(j: int) -> Form:
            if 0 <= j < len(coeffs):
                return coeffs[j]
            return Form.zero(d)

        hp = space.h_power(d - i)
        out = _assemble(
            space,
            wedge(sd(d - i), hp),
            wedge(sd(d - i - 1), hp),
            wedge(sd(d - i - 2), hp),
        )
    space._qi[key] = out
    return out


def intersection_form_by_product(space: AugmentedSpace, lam, i: int) -> SymBilinearForm:
    """Q_i by direct multiplication in the truncated ring over the algebra.

    Computes s_lam(omega_hat) * zeta^i * h^(d-i) as a polynomial in zeta with
    form coefficients and integrates against the basis: integration reads the
    zeta^d slice, so any zeta power above d contributes nothing.  Must agree
    with intersection_form exactly.
    """
    lam = Partition(lam)
    _check_weight(space, lam)
    key = (lam.parts, i)
    cached = space._qi_product.get(key)
    if cached is not None:
        return cached
    d = space.d
    if i < 0 or i > d:
        out = SymBilinearForm.zero(space.dim_v, space.basis_tag)
    else:
        s_hat = space.schur_shifted(lam)
        hp = space.h_power(d - i)

        def slice_at(m: int) -> Form:
            # coefficient of zeta^m in s_hat * zeta^i * h^(d-i)
            c = s_hat.coeff(m - i) if m - i >= 0 else Form.zero(d)
            return wedge(c, hp)

        out = _assemble(space, slice_at(d), slice_at(d - 1), slice_at(d - 2))
    space._qi_product[key] = out
    return out


@dataclass(frozen=True)
class FormFamily:
    """Polynomial in one real parameter t with symmetric-form coefficients."""

    coeffs: tuple[SymBilinearForm, ...]

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least one coefficient")
        n = coeffs[0].n
        tag = coeffs[0].basis_tag
        if any(c.n != n or c.basis_tag != tag for c in coeffs):
            raise ValueError("coefficients must share dimension and basis")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def n(self) -> int:
        return self.coeffs[0].n

    @property
    def basis_tag(self) -> str:
        return self.coeffs[0].basis_tag

    def at(self, t) -> SymBilinearForm:
        """Exact Horner evaluation at a rational parameter."""
        t = as_fraction(t)
        out = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            out = t * out + c
        return out

    def derivative(self) -> "FormFamily":
        if len(self.coeffs) == 1:
            return FormFamily((SymBilinearForm.zero(self.n, self.basis_tag),))
        return FormFamily(tuple(k * c for k, c in enumerate(self.coeffs) if k >= 1))

    def __eq__(self, other):
        if not isinstance(other, FormFamily):
            return NotImplemented
        la, lb = len(self.coeffs), len(other.coeffs)
        zero = SymBilinearForm.zero(self.n, self.basis_tag)
        pa = self.coeffs + (zero,) * max(0, lb - la)
        pb = other.coeffs + (zero,) * max(0, la - lb)
        return all(a == b for a, b in zip(pa, pb))

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return FormFamily(tuple(c * m for m in self.coeffs))
        return NotImplemented

    __mul__ = __rmul__


def twist_family(space: AugmentedSpace, lam, i: int) -> FormFamily:
    """The family R_{i,t} = sum_k binom(d-i+k, k) t^k Q_{i-k}; zero outside 0..d."""
    lam = Partition(lam)
    _check_weight(space, lam)
    d = space.d
    if i < 0 or i > d:
        return FormFamily((SymBilinearForm.zero(space.dim_v, space.basis_tag),))
    return FormFamily(
        tuple(
            comb(d - i + k, k) * intersection_form(space, lam, i - k)
            for k in range(i + 1)
        )
    )


def derivative_inequality_defect(
    q: SymBilinearForm, qp: SymBilinearForm, h
) -> SymBilinearForm:
    """Matrix of S(v) = 2*Qp(v,h)*Q(v,h) - Qp(v)*Q(h).

    S positive semidefinite decides the first-derivative inequality
    Qp(v)Q(h) <= 2*Qp(v,h)Q(v,h) for every v at once.
    """
    u = qp.pairing_vector(h)
    w = q.pairing_vector(h)
    qh = q.quad(h)
    n = q.n
    rows = [
        [u[a] * w[b] + w[a] * u[b] - qh * qp.matrix[a][b] for b in range(n)]
        for a in range(n)
    ]
    return SymBilinearForm(rows, q.basis_tag + "|derivative-defect")


def _weak_hr_sample(qt: SymBilinearForm, h) -> dict:
    sig = signature(qt)
    qh = qt.quad(h)
    weak = qh > 0 and sig.n_plus == 1
    defect_psd = is_psd(hodge_index_defect(qt, h))
    # Spectral characterization and Hodge-index characterization must agree
    # whenever Q(h) > 0; a mismatch is an implementation bug.
    if qh > 0 and weak != defect_psd:
        raise RuntimeError("weak HR characterizations disagree; implementation bug")
    return {"signature": sig, "q_h": qh, "weak_hr": weak, "hodge_index_psd": defect_psd}


def _max_passing_radius(per_t: list[dict], keys: Sequence[str]) -> Optional[Fraction]:
    passing = [
        abs(entry["t"])
        for entry in per_t
        if all(entry[k] for k in keys)
    ]
    return max(passing) if passing else None


@dataclass(frozen=True)
class PropertyAReport:
    """Verdicts for the five first-order conditions of a family.

    a1: R_0(h) > 0 and R'_0(h) > 0.
    a2: weak Hodge-Riemann with respect to h at every sampled t.
    a3: the derivative inequality at t = 0, as exact semidefiniteness.
    a4: R'_0(., zeta) is a constant multiple of R_0(., h); the multiple is
        reported as `constant`.
    a5: R_0(zeta, h) > 0.
    """

    a1: bool
    a2: bool
    a3: bool
    a4: bool
    a5: bool
    constant: Optional[Fraction]
    r0_h: Fraction
    r0p_h: Fraction
    r0_zeta_h: Fraction
    r0_signature: Signature
    t_samples: tuple[Fraction, ...]
    per_t: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return self.a1 and self.a2 and self.a3 and self.a4 and self.a5

    @property
    def checks(self) -> dict[str, bool]:
        return {"A1": self.a1, "A2": self.a2, "A3": self.a3, "A4": self.a4, "A5": self.a5}

    @property
    def max_passing_radius(self) -> Optional[Fraction]:
        return _max_passing_radius(list(self.per_t), ["weak_hr"])

    def to_json(self) -> dict:
        return {
            "label": "A",
            "checks": self.checks,
            "passed": self.passed,
            "constant": fraction_to_str(self.constant) if self.constant is not None else None,
            "values": {
                "r0_h": fraction_to_str(self.r0_h),
                "r0_derivative_h": fraction_to_str(self.r0p_h),
                "r0_zeta_h": fraction_to_str(self.r0_zeta_h),
            },
            "r0_signature": self.r0_signature.to_json(),
            "t_samples": [fraction_to_str(t) for t in self.t_samples],
            "per_t": [
                {
                    "t": fraction_to_str(entry["t"]),
                    "signature": entry["signature"].to_json(),
                    "weak_hr": entry["weak_hr"],
                    "hodge_index_psd": entry["hodge_index_psd"],
                }
                for entry in self.per_t
            ],
            "max_passing_radius": (
                fraction_to_str(self.max_passing_radius)
                if self.max_passing_radius is not None
                else None
            ),
        }


@dataclass(frozen=True)
class PropertyBReport:
    """Verdicts for the five second-order conditions of a family.

    b1: R_0(h) > 0.
    b2: weak Hodge-Riemann with respect to h at every sampled t.
    b3: the derivative inequality at every sampled t.
    b4: R''_0(a, zeta) = 2 R'_0(a, h) for every basis vector a of W.
    b5: R''_0(zeta, zeta) = 2 R_0(h).
    """

    b1: bool
    b2: bool
    b3: bool
    b4: bool
    b5: bool
    r0_h: Fraction
    r0_signature: Signature
    t_samples: tuple[Fraction, ...]
    per_t: tuple[dict, ...]

    @property
    def passed(self) -> bool:
        return self.b1 and self.b2 and self.b3 and self.b4 and self.b5

    @property
    def checks(self) -> dict[str, bool]:
        return {"B1": self.b1, "B2": self.b2, "B3": self.b3, "B4": self.b4, "B5": self.b5}

    @property
    def max_passing_radius(self) -> Optional[Fraction]:
        return _max_passing_radius(list(self.per_t), ["weak_hr", "derivative_inequality_psd"])

    def to_json(self) -> dict:
        return {
            "label": "B",
            "checks": self.checks,
            "passed": self.passed,
            "values": {"r0_h": fraction_to_str(self.r0_h)},
            "r0_signature": self.r0_signature.to_json(),
            "t_samples": [fraction_to_str(t) for t in self.t_samples],
            "per_t": [
                {
                    "t": fraction_to_str(entry["t"]),
                    "signature": entry["signature"].to_json(),
                    "weak_hr": entry["weak_hr"],
                    "hodge_index_psd": entry["hodge_index_psd"],
                    "derivative_inequality_psd": entry["derivative_inequality_psd"],
                }
                for entry in self.per_t
            ],
            "max_passing_radius": (
                fraction_to_str(self.max_passing_radius)
                if self.max_passing_radius is not None
                else None
            ),
        }


def check_property_a(family: FormFamily, h, zeta, t_samples=None) -> PropertyAReport:
    """Evaluate the five first-order conditions; verdicts, not exceptions."""
    ts = _normalize_t_samples(t_samples)
    r0 = family.at(0)
    r0p = family.derivative().at(0)
    r0_h = r0.quad(h)
    r0p_h = r0p.quad(h)
    a1 = r0_h > 0 and r0p_h > 0

    per_t = []
    a2 = True
    for t in ts:
        entry = {"t": t}
        entry.update(_weak_hr_sample(family.at(t), h))
        per_t.append(entry)
        a2 = a2 and entry["weak_hr"]

    a3 = is_psd(derivative_inequality_defect(r0, r0p, h))

    lhs = r0p.pairing_vector(zeta)
    rhs = r0.pairing_vector(h)
    pivot = next((k for k in range(r0.n) if rhs[k] != 0), None)
    if pivot is None:
        constant = None
        a4 = all(x == 0 for x in lhs)
    else:
        constant = lhs[pivot] / rhs[pivot]
        a4 = all(x == constant * y for x, y in zip(lhs, rhs))

    r0_zeta_h = r0.value(zeta, h)
    a5 = r0_zeta_h > 0

    return PropertyAReport(
        a1=a1,
        a2=a2,
        a3=a3,
        a4=a4,
        a5=a5,
        constant=constant,
        r0_h=r0_h,
        r0p_h=r0p_h,
        r0_zeta_h=r0_zeta_h,
        r0_signature=signature(r0),
        t_samples=ts,
        per_t=tuple(per_t),
    )


def check_property_b(family: FormFamily, h, zeta, t_samples=None) -> PropertyBReport:
    """Evaluate the five second-order conditions; verdicts, not exceptions.

    The basis vectors of W are taken to be the coordinate directions where
    zeta has coordinate zero.
    """
    ts = _normalize_t_samples(t_samples)
    deriv = family.derivative()
    r0 = family.at(0)
    rp0 = deriv.at(0)
    rpp0 = deriv.derivative().at(0)
    r0_h = r0.quad(h)
    b1 = r0_h > 0

    per_t = []
    b2 = b3 = True
    for t in ts:
        qt = family.at(t)
        entry = {"t": t}
        entry.update(_weak_hr_sample(qt, h))
        entry["derivative_inequality_psd"] = is_psd(
            derivative_inequality_defect(qt, deriv.at(t), h)
        )
        per_t.append(entry)
        b2 = b2 and entry["weak_hr"]
        b3 = b3 and entry["derivative_inequality_psd"]

    zeta_vec = [as_fraction(x) for x in zeta]
    w_indices = [a for a in range(family.n) if zeta_vec[a] == 0]
    second_zeta = rpp0.pairing_vector(zeta)
    first_h = rp0.pairing_vector(h)
    b4 = all(second_zeta[a] == 2 * first_h[a] for a in w_indices)
    b5 = rpp0.value(zeta, zeta) == 2 * r0_h

    return PropertyBReport(
        b1=b1,
        b2=b2,
        b3=b3,
        b4=b4,
        b5=b5,
        r0_h=r0_h,
        r0_signature=signature(r0),
        t_samples=ts,
        per_t=tuple(per_t),
    )


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one verification: hypothesis flags, conclusion, and status.

    INCONSISTENT (hypotheses hold, conclusion fails) always indicates an
    implementation bug and fails any driver that sees it; NOT-APPLICABLE means
    the hypotheses themselves did not hold for the given data.
    """

    name: str
    hypotheses: dict
    conclusion: bool
    status: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "hypotheses": self.hypotheses,
            "conclusion": self.conclusion,
            "status": self.status,
            "details": self.details,
        }


def _verdict(name: str, hypotheses: dict, conclusion: bool, details: dict) -> TheoremVerdict:
    if all(hypotheses.values()):
        status = CONSISTENT if conclusion else INCONSISTENT
    else:
        status = NOT_APPLICABLE
    return TheoremVerdict(name, hypotheses, conclusion, status, details)


def verify_augmentation1(family: FormFamily, h, zeta, t_samples=None) -> TheoremVerdict:
    """First-order upgrade: property A plus R'_0 Hodge-Riemann forces R_0 to be.

    The conclusion is tested independently of the hypotheses; a CONSISTENT
    verdict means both sides came out true.
    """
    rep = check_property_a(family, h, zeta, t_samples)
    r0p = family.derivative().at(0)
    hyps = {
        "property_A": rep.passed,
        "derivative_hr_wrt_h": is_hr_wrt(r0p, h),
    }
    conclusion = is_hr_wrt(family.at(0), h)
    details = {
        "property_A": rep.to_json(),
        "r0_signature": signature(family.at(0)).to_json(),
        "derivative_signature": signature(r0p).to_json(),
    }
    return _verdict("augmentation1", hyps, conclusion, details)


def verify_recursion(space: AugmentedSpace, lam, j: int, t_samples=None) -> TheoremVerdict:
    """Recursive upgrade along i = 2..j for the twist families of (space, lam).

    Hypotheses: (1) the first-order conditions for each family, where the
    base family i = 2 is only required to satisfy the conditions its base
    case actually uses (R_0(h) > 0, weak HR at the samples, the constant
    identity, and R_0(zeta, h) > 0; its derivative pairs to zero on W by
    construction, so the derivative half of the first condition is excluded);
    (2) R'_{i,0} = (d-i+1) R_{i-1,0} exactly; (3) R_{1,0} vanishes on W;
    (4) R_{2,0} restricted to W is Hodge-Riemann with respect to h;
    (5) the reported constant of the i = 2 family is nonzero.

    Conclusion: R_{i,0} is Hodge-Riemann with respect to h for every i in 2..j.
    """
    lam = Partition(lam)
    d = space.d
    if not 2 <= j <= d - 1:
        raise ValueError(f"need 2 <= j <= d-1, got j={j}, d={d}")
    h = space.h_coords
    zeta = space.zeta_coords
    fams = {i: twist_family(space, lam, i) for i in range(1, j + 1)}
    reports = {i: check_property_a(fams[i], h, zeta, t_samples) for i in range(2, j + 1)}

    per_i_ok = {}
    for i in range(2, j + 1):
        rep = reports[i]
        if i == 2:
            per_i_ok[i] = rep.r0_h > 0 and rep.a2 and rep.a4 and rep.a5
        else:
            per_i_ok[i] = rep.passed
    hyp1 = all(per_i_ok.values())

    hyp2 = all(
        fams[i].derivative().at(0) == (d - i + 1) * fams[i - 1].at(0)
        for i in range(2, j + 1)
    )
    w_idx = list(space.w_indices())
    hyp3 = fams[1].at(0).restrict_indices(w_idx, f"w11(d={d})").is_zero()
    hyp4 = is_hr_wrt(
        fams[2].at(0).restrict_indices(w_idx, f"w11(d={d})"), space.h_coords_w()
    )
    c2 = reports[2].constant
    hyp5 = c2 is not None and c2 != 0

    hyps = {
        "property_A_families": hyp1,
        "derivative_recursion": hyp2,
        "r1_vanishes_on_w": hyp3,
        "r2_hr_on_w": hyp4,
        "r2_constant_nonzero": hyp5,
    }
    conclusions = {i: is_hr_wrt(fams[i].at(0), h) for i in range(2, j + 1)}
    details = {
        "per_i_property_A": {str(i): reports[i].to_json() for i in reports},
        "per_i_base_conditions_ok": {str(i): per_i_ok[i] for i in per_i_ok},
        "per_i_conclusion": {str(i): conclusions[i] for i in conclusions},
        "constants": {
            str(i): (
                fraction_to_str(reports[i].constant)
                if reports[i].constant is not None
                else None
            )
            for i in reports
        },
    }
    return _verdict("recursion", hyps, all(conclusions.values()), details)


def verify_augmentation2(space: AugmentedSpace, lam, t_samples=None) -> TheoremVerdict:
    """Second-order upgrade at i = d: the conclusion restricts to W.

    Hypotheses: property B for the i = d family, the exact identity
    R''_{d,0} = 2 R_{d-2,0}, and that this second derivative is Hodge-Riemann
    with respect to h.  Conclusion: R_{d,0} restricted to W is Hodge-Riemann
    with respect to h, which is exactly the signature statement for the
    intersection form of s_lam(omega).
    """
    lam = Partition(lam)
    d = space.d
    fam = twist_family(space, lam, d)
    h = space.h_coords
    zeta = space.zeta_coords
    rep = check_property_b(fam, h, zeta, t_samples)
    rpp0 = fam.derivative().derivative().at(0)
    identity_ok = rpp0 == 2 * twist_family(space, lam, d - 2).at(0)
    hyps = {
        "property_B": rep.passed,
        "second_derivative_identity": identity_ok,
        "second_derivative_hr_wrt_h": is_hr_wrt(rpp0, h),
    }
    w_idx = list(space.w_indices())
    restricted = fam.at(0).restrict_indices(w_idx, f"w11(d={d})")
    conclusion = is_hr_wrt(restricted, space.h_coords_w())
    details = {
        "property_B": rep.to_json(),
        "restricted_signature": signature(restricted).to_json(),
    }
    return _verdict("augmentation2", hyps, conclusion, details)


def rank_drop_family(n: int = 3) -> FormFamily:
    """A family on R^n whose t = 0 member acquires a one-dimensional kernel.

    The quadratic form is (1+t)x1^2 + 2x1x2 + (1-t)x2^2 - (1+t)(x3^2+...):
    Hodge-Riemann for small nonzero t, degenerate at t = 0, with the constant
    derivative family Hodge-Riemann throughout.  Useful as the stock example
    of why the first-order upgrade needs its side conditions.
    """
    if n < 2:
        raise ValueError("need dimension at least 2")
    z = Fraction(0)
    c0 = [[z] * n for _ in range(n)]
    c0[0][0] = Fraction(1)
    c0[0][1] = c0[1][0] = Fraction(1)
    c0[1][1] = Fraction(1)
    c1 = [[z] * n for _ in range(n)]
    c1[0][0] = Fraction(1)
    c1[1][1] = Fraction(-1)
    for k in range(2, n):
        c0[k][k] = Fraction(-1)
        c1[k][k] = Fraction(-1)
    tag = f"rank-drop(n={n})"
    return FormFamily((SymBilinearForm(c0, tag), SymBilinearForm(c1, tag)))
