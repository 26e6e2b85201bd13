"""The Ehrenfest master equation and the exact spectral theory.

The Kac matrix M records the ball-swap transitions of the two-urn model.
Its full eigensystem is a Krawtchouk matrix: M K = K Lambda with
eigenvalues n, n-2, ..., -n.  Squaring, K K = 2^n I, so K is (a scaled)
involution, and its own eigenvectors come from pairing complementary
binomial vectors with sqrt(2)-weights -- no floating point anywhere.
"""

from krawtchouk import (
    b_inverse,
    binomial_matrix,
    eigen_factors,
    eigenvector,
    k_genfunc,
    kac_matrix,
    lambda_matrix,
    skew_power_matrix,
)
from krawtchouk.rings import ROOT2, RootTwo

n = 5
K = k_genfunc(n).mat
M = kac_matrix(n)
L = lambda_matrix(n)

print("Kac matrix M:")
print(M.pretty())
print("M K == K Lambda:", M @ K == K @ L)

from krawtchouk.matrix import Matrix  # noqa: E402

print("K^2 == 2^n I:", K @ K == Matrix.identity(n + 1).scale(2 ** n))

print()
print("Skew-diagonalization K = B D B^-1:")
B = binomial_matrix(n)
D = skew_power_matrix(n)
print("K B == B D:", K @ B == B @ D)
print("B D B^-1 == K:", B @ D @ b_inverse(n) == K)

print()
print("Exact eigenvectors over Q[sqrt(2)]:")
factors = eigen_factors(n)
BX = B.map(RootTwo, ROOT2) @ factors.x
Kr = K.map(RootTwo, ROOT2)
print("K (B X) == (B X) E:", Kr @ BX == BX @ factors.e)
v = eigenvector(n, 0, "+")
print("v(+,0) =", [str(x) for x in v])
print("K v    =", [str(x) for x in Kr.mul_vector(v)],
      f"  (eigenvalue 2^(5/2) = {factors.e[0, 0]})")
