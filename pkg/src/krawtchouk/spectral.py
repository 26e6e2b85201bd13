"""Skew-diagonalization and exact eigenvectors of Krawtchouk matrices.

K maps the truncated binomial vector b^(k) (entries C(k,i), zero beyond k)
to 2^k times the complementary one:  K b^(k) = 2^k b^(n-k).  Collectively
K B = B D with B the unitriangular binomial matrix and D the skew-diagonal
matrix carrying 2^q in column q, so K = B D B^{-1}.

Pairing complementary columns produces genuine eigenvectors once the scalar
2^(k/2) is available, which is why the eigen-factor matrices X and E live in
the quadratic ring Q[sqrt(2)]:

    v(+-, k) = 2^((n-k)/2) b^(k) +- 2^(k/2) b^(n-k),
    K v = +-2^(n/2) v.

Note on indexing: making K B = B D hold forces D's skew entry in column q to
be 2^q (i.e. D_{n-q,q} = 2^q); the n = 3 instance is skewdiag(8, 4, 2, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import k_genfunc
from .matrix import CheckReport, Matrix
from .rings import ROOT2, RootTwo, ZZ, sqrt2_power


def binomial_vector(n: int, k: int) -> list:
    """b^(k): entries C(k,i) for i <= k, then zeros, length n+1."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} out of range for order {n}")
    return [comb(k, i) if i <= k else 0 for i in range(n + 1)]


def binomial_matrix(n: int) -> Matrix:
    """Upper-triangular B with B_{ij} = C(j,i); columns are the b^(k)."""
    return Matrix(ZZ, [[comb(j, i) for j in range(n + 1)]
                       for i in range(n + 1)])


def skew_power_matrix(n: int) -> Matrix:
    """Skew-diagonal D with 2^q in column q, so D * D = 2^n I."""
    return Matrix.skewdiag([2 ** (n - i) for i in range(n + 1)], ZZ)


def b_inverse(n: int) -> Matrix:
    """B^{-1} = S B S with S = diag(1,-1,1,...); verified against B."""
    b = binomial_matrix(n)
    s = Matrix.diag([(-1) ** i for i in range(n + 1)], ZZ)
    inv = s @ b @ s
    if b @ inv != Matrix.identity(n + 1, ZZ):
        raise AssertionError("B * (S B S) != I; alternating-sign inverse broke")
    return inv


def binomial_transform_check(n: int) -> CheckReport:
    """K b^(k) = 2^k b^(n-k) for every k, plus the collective K B = B D."""
    k = k_genfunc(n).mat
    for j in range(n + 1):
        got = k.mul_vector(binomial_vector(n, j))
        want = [2 ** j * x for x in binomial_vector(n, n - j)]
        if got != want:
            return CheckReport(False, n=n, location=(j,),
                               lhs=str(got), rhs=str(want),
                               note=f"K b^({j}) = 2^{j} b^({n - j})")
    b = binomial_matrix(n)
    return CheckReport.of_matrices(k @ b, b @ skew_power_matrix(n),
                                   n=n, note="K B = B D")


def k_from_BDBinv(n: int):
    """Build K as B D B^{-1} and cross-check against the generating function."""
    b = binomial_matrix(n)
    product = b @ skew_power_matrix(n) @ b_inverse(n)
    reference = k_genfunc(n)
    if product != reference.mat:
        raise AssertionError(f"B D B^-1 disagrees with K at order {n}")
    return reference  # method tag GenFunc: the product is its cross-check


@dataclass(frozen=True)
class EigenFactor:
    """X and E of the spectral identity K (B X) = (B X) E over Q[sqrt(2)]."""

    order: int
    x: Matrix
    e: Matrix


def eigen_factors(n: int) -> EigenFactor:
    """The diagonal-plus-skew matrix X and eigenvalue matrix E.

    Column j of B X is the eigenvector of K with eigenvalue +2^(n/2) when
    j <= n/2 and -2^(n/2) otherwise.  For even n the diagonal and skew
    patterns collide at the center cell; the single value 2^(n/4) is
    written once, matching the fact that the odd combination of the two
    central binomial vectors vanishes.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    zero = RootTwo(0)
    x = [[zero] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        diag = sqrt2_power(n - j)
        x[j][j] = diag if 2 * j <= n else -diag
        if j != n - j:
            x[n - j][j] = sqrt2_power(j)
    xm = Matrix(ROOT2, x)
    lam = sqrt2_power(n)
    e = Matrix.diag([lam if 2 * j <= n else -lam for j in range(n + 1)], ROOT2)

    bx = binomial_matrix(n).map(RootTwo, ROOT2) @ xm
    k = k_genfunc(n).mat.map(RootTwo, ROOT2)
    if k @ bx != bx @ e:
        raise AssertionError(f"K (B X) != (B X) E at order {n}")
    return EigenFactor(n, xm, e)


def eigenvector(n: int, k: int, sign: str) -> list:
    """Eigenvector 2^((n-k)/2) b^(k) +- 2^(k/2) b^(n-k) over Q[sqrt(2)].

    The +/- sign selects the eigenvalue +-2^(n/2).  For 2k = n the minus
    combination cancels identically and is rejected; the plus combination
    collapses to the single central column 2^(k/2) b^(k).
    """
    if not 0 <= k <= n // 2:
        raise ValueError(f"k={k} must lie in 0..floor(n/2) for order {n}")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if 2 * k == n and sign == "-":
        raise ValueError("zero vector: the odd combination vanishes at k = n/2")
    if 2 * k == n:
        vec = [sqrt2_power(k) * x for x in binomial_vector(n, k)]
    else:
        lo = binomial_vector(n, k)
        hi = binomial_vector(n, n - k)
        clo, chi = sqrt2_power(n - k), sqrt2_power(k)
        if sign == "-":
            chi = -chi
        vec = [clo * a + chi * b for a, b in zip(lo, hi)]

    kmat = k_genfunc(n).mat.map(RootTwo, ROOT2)
    lam = sqrt2_power(n) if sign == "+" else -sqrt2_power(n)
    if kmat.mul_vector(vec) != [lam * x for x in vec]:
        raise AssertionError("eigenvector failed its own eigen-equation")
    return vec


def spectral_suite_check(n: int) -> CheckReport:
    """Everything above at once, plus E^2 = 2^n I; used by the CLI."""
    report = binomial_transform_check(n)
    if not report.ok:
        return report
    try:
        k_from_BDBinv(n)
        factors = eigen_factors(n)
    except AssertionError as exc:
        return CheckReport(False, n=n, note=str(exc))
    e2 = factors.e @ factors.e
    target = Matrix.identity(n + 1, ROOT2).scale(RootTwo(2 ** n))
    return CheckReport.of_matrices(e2, target, n=n, note="E^2 = 2^n I")
