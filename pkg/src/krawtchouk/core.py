"""Krawtchouk matrices and the tridiagonal master-equation machinery.

The order-n Krawtchouk matrix K is the (n+1) x (n+1) integer matrix whose
q-th column lists the coefficients of (1+t)^(n-q) (1-t)^q.  This module
builds K two independent ways (generating-function expansion and the signed
binomial sum), together with the Kac matrix M, the eigenvalue matrix
Lambda = diag(n, n-2, ..., -n), the binomial-weight matrix Gamma, and the
checks for the identities that tie them together:

    M K = K Lambda          (master equation)
    K K = 2^n I             (involution)
    K^T = Gamma^-1 K Gamma  (orthogonality)

Two further constructions live in :mod:`krawtchouk.sympow` (symmetric tensor
power of the 2x2 Hadamard matrix) and :mod:`krawtchouk.pathsum` (sum over
lattice paths); :func:`krawtchouk.hadamard.reduce_to_symmetric` gives the
Sylvester-matrix route to the symmetric variant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .matrix import CheckReport, Matrix
from .rings import QQ, ZZ

# Above this order the CLI warns about output size; the library still works.
DEFAULT_ORDER_BOUND = 64

METHODS = ("GenFunc", "BinomialSum", "SymTensorPower",
           "PyramidRecurrence", "PathSumOracle")


@dataclass(frozen=True)
class KrawtchoukMatrix:
    """An order-n Krawtchouk matrix tagged with the method that built it."""

    order: int
    mat: Matrix
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown construction method {self.method!r}")

    def __getitem__(self, key):
        return self.mat[key]

    def __eq__(self, other):
        if isinstance(other, KrawtchoukMatrix):
            return self.mat == other.mat  # method tags intentionally ignored
        if isinstance(other, Matrix):
            return self.mat == other
        return NotImplemented


def poly_mul(p: list, q: list) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def genfunc_column(n: int, q: int) -> list:
    """Coefficients of (1+t)^(n-q) (1-t)^q, lowest degree first."""
    coeffs = [1]
    for _ in range(n - q):
        coeffs = poly_mul(coeffs, [1, 1])
    for _ in range(q):
        coeffs = poly_mul(coeffs, [1, -1])
    return coeffs


def k_genfunc(n: int) -> KrawtchoukMatrix:
    """Krawtchouk matrix by expanding the column generating functions."""
    if n < 0:
        raise ValueError("order must be non-negative")
    cols = [genfunc_column(n, q) for q in range(n + 1)]
    rows = [[cols[q][p] for q in range(n + 1)] for p in range(n + 1)]
    return KrawtchoukMatrix(n, Matrix(ZZ, rows), "GenFunc")


def k_entry(n: int, p: int, q: int) -> int:
    """Single entry K^(n)_{pq} via the signed binomial sum."""
    if not (0 <= p <= n and 0 <= q <= n):
        raise ValueError(f"indices ({p},{q}) out of range for order {n}")
    return sum((-1) ** k * comb(q, k) * comb(n - q, p - k)
               for k in range(max(0, p - (n - q)), min(q, p) + 1))


def k_binsum(n: int) -> KrawtchoukMatrix:
    """Krawtchouk matrix assembled entry by entry from the binomial sum."""
    if n < 0:
        raise ValueError("order must be non-negative")
    rows = [[k_entry(n, p, q) for q in range(n + 1)] for p in range(n + 1)]
    return KrawtchoukMatrix(n, Matrix(ZZ, rows), "BinomialSum")


def kac_matrix(n: int) -> Matrix:
    """Tridiagonal Kac matrix: superdiagonal 1..n, subdiagonal n..1."""
    if n < 1:
        raise ValueError("Kac matrix needs order >= 1")
    m = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n):
        m[j][j + 1] = j + 1      # drawing one of the j+1 marked balls
        m[j + 1][j] = n - j      # or one of the n-j unmarked ones
    return Matrix(ZZ, m)


def lambda_matrix(n: int) -> Matrix:
    """diag(n, n-2, ..., -n), the Kac-matrix spectrum."""
    if n < 0:
        raise ValueError("order must be non-negative")
    return Matrix.diag([n - 2 * i for i in range(n + 1)], ZZ)


def gamma_matrix(n: int) -> Matrix:
    """diag(C(n,0), ..., C(n,n)) defining the binomial inner product."""
    return Matrix.diag([comb(n, i) for i in range(n + 1)], ZZ)


def gamma_inverse(n: int) -> Matrix:
    return Matrix.diag([Fraction(1, comb(n, i)) for i in range(n + 1)], QQ)


def k_symmetric(n: int) -> Matrix:
    """Symmetric Krawtchouk matrix S = K * Gamma (column q scaled by C(n,q))."""
    k = k_genfunc(n).mat
    return Matrix(ZZ, [[k[p, q] * comb(n, q) for q in range(n + 1)]
                       for p in range(n + 1)])


# ---------------------------------------------------------------------------
# identity checks
# ---------------------------------------------------------------------------

def master_check(n: int) -> CheckReport:
    """M K = K Lambda, exactly."""
    if n < 1:
        raise ValueError("master equation needs order >= 1")
    k = k_genfunc(n).mat
    lhs = kac_matrix(n) @ k
    rhs = k @ lambda_matrix(n)
    return CheckReport.of_matrices(lhs, rhs, n=n, note="M K = K Lambda")


def involution_check(n: int) -> CheckReport:
    """K^2 = 2^n I, exactly."""
    k = k_genfunc(n).mat
    target = Matrix.identity(n + 1, ZZ).scale(2 ** n)
    return CheckReport.of_matrices(k @ k, target, n=n, note="K^2 = 2^n I")


def ortho_check(n: int) -> CheckReport:
    """The three binomial-weight orthogonality identities over the rationals.

    K^T = G^-1 K G,  K^T G^-1 K = 2^n G^-1,  K G K^T = 2^n G,
    with G the binomial diagonal matrix.
    """
    if n < 1:
        raise ValueError("orthogonality check needs order >= 1")
    k = k_genfunc(n).mat.map(Fraction, QQ)
    g = gamma_matrix(n).map(Fraction, QQ)
    ginv = gamma_inverse(n)
    scale = 2 ** n
    checks = [
        (k.T, ginv @ k @ g, "K^T = G^-1 K G"),
        (k.T @ ginv @ k, ginv.scale(scale), "K^T G^-1 K = 2^n G^-1"),
        (k @ g @ k.T, g.scale(scale), "K G K^T = 2^n G"),
    ]
    for lhs, rhs, note in checks:
        report = CheckReport.of_matrices(lhs, rhs, n=n, note=note)
        if not report.ok:
            return report
    return CheckReport.passed(n=n, note="orthogonality")


def covector_transform(n: int, row) -> list:
    """Act on a covector from the right: row -> row * K^(n).

    Sends sampled exponential sequences to sampled exponential sequences,
    e.g. [8,4,2,1] -> [27,9,3,1] at n = 3.
    """
    row = list(row)
    if len(row) != n + 1:
        raise ValueError(f"covector length {len(row)} != {n + 1}")
    return k_genfunc(n).mat.vector_mul(row)


def construction_equivalence_check(n: int) -> CheckReport:
    """The two in-module constructions agree entrywise."""
    a, b = k_genfunc(n), k_binsum(n)
    return CheckReport.of_matrices(a.mat, b.mat, n=n,
                                   note="GenFunc = BinomialSum")


def symmetry_identities_check(n: int) -> CheckReport:
    """K_{pq} = (-1)^q K_{n-p,q} and K_{pq} = (-1)^p K_{p,n-q}."""
    k = k_genfunc(n).mat
    for p in range(n + 1):
        for q in range(n + 1):
            if k[p, q] != (-1) ** q * k[n - p, q]:
                return CheckReport(False, n=n, location=(p, q),
                                   lhs=str(k[p, q]),
                                   rhs=str((-1) ** q * k[n - p, q]),
                                   note="row reversal symmetry")
            if k[p, q] != (-1) ** p * k[p, n - q]:
                return CheckReport(False, n=n, location=(p, q),
                                   lhs=str(k[p, q]),
                                   rhs=str((-1) ** p * k[p, n - q]),
                                   note="column reversal symmetry")
    return CheckReport.passed(n=n, note="symmetries")
