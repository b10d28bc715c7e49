"""Seeded random generators for exactly positive test data.

Strictly positive Hermitian matrices come from the construction B*B + I with
B drawn from a small Gaussian-integer box, so positivity holds by construction
and every draw is reproducible from its seed.  Task seeds are derived by
hashing, never by reusing a shared stream, so campaigns parallelize without
order dependence.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .exterior import Form, HermitianMatrix, hermitian_to_form
from .gaussian import GaussianRational


def derive_seed(*parts) -> int:
    """Deterministic 64-bit seed from a tuple of hashable labels."""
    material = "|".join(repr(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


def random_gaussian_rational(rng: random.Random, box: int = 2) -> GaussianRational:
    return GaussianRational(rng.randint(-box, box), rng.randint(-box, box))


def random_one_form(rng: random.Random, d: int, box: int = 2) -> Form:
    """A (1,0)-form with Gaussian-integer coefficients from the box."""
    out = Form.zero(d)
    for j in range(1, d + 1):
        c = random_gaussian_rational(rng, box)
        if c:
            out = out + Form.term(d, [j], [], c)
    return out


def random_hermitian(rng: random.Random, d: int, box: int = 2) -> HermitianMatrix:
    """A + A*, an arbitrary Hermitian matrix over the Gaussian-integer box."""
    a = [[random_gaussian_rational(rng, box) for _ in range(d)] for _ in range(d)]
    return HermitianMatrix(
        [[a[j][k] + a[k][j].conjugate() for k in range(d)] for j in range(d)]
    )


def random_positive_hermitian(rng: random.Random, d: int, box: int = 2) -> HermitianMatrix:
    """B*B + I: exactly positive definite by construction."""
    b = [[random_gaussian_rational(rng, box) for _ in range(d)] for _ in range(d)]
    entries = []
    for j in range(d):
        row = []
        for k in range(d):
            acc = GaussianRational(1 if j == k else 0)
            for m in range(d):
                acc = acc + b[m][j].conjugate() * b[m][k]
            row.append(acc)
        entries.append(row)
    return HermitianMatrix(entries)


def random_positive_form(rng: random.Random, d: int, box: int = 2) -> Form:
    """A strictly positive real (1,1)-form, reproducible from the generator."""
    return hermitian_to_form(random_positive_hermitian(rng, d, box))


def random_rational(rng: random.Random, box: int = 5, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-box, box), rng.randint(1, den))


def random_symmetric_rows(rng: random.Random, n: int, box: int = 5) -> list[list[Fraction]]:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-box, box))
    return rows
