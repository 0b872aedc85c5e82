"""The polynomial families living inside the matrix elements.

Jacobi polynomials evaluated three independent ways, the orthogonality norm
against quadrature, the Krawtchouk reflection identity, and a Pfaff
transformation for terminating series.
"""
import numpy as np
from numpy.polynomial.legendre import leggauss

from wignerkit import (
    JacobiParams,
    hyp2f1,
    jacobi_eval,
    jacobi_norm,
    jacobi_rodrigues,
    jacobi_via_2f1,
    krawtchouk,
    legendre,
)

print("P_4^(2,1) at a few points, three routes:")
print(f"{'x':>6} {'series':>14} {'2F1 form':>14} {'rodrigues':>14}")
for x in (-1.0, -0.4, 0.0, 0.7, 1.0):
    p = JacobiParams(2, 1, 4)
    print(
        f"{x:6.2f} {jacobi_eval(p, x):14.8f} {jacobi_via_2f1(p, x):14.8f} "
        f"{jacobi_rodrigues(p, x):14.8f}"
    )

print("\nweighted orthogonality of P_n^(1,2) by Gauss-Legendre quadrature:")
alpha, beta = 1, 2
x, w = leggauss(12)
weight = (1 - x) ** alpha * (1 + x) ** beta
for n1, n2 in ((2, 2), (2, 5), (5, 5)):
    p1 = np.array([jacobi_eval(JacobiParams(alpha, beta, n1), xi) for xi in x])
    p2 = np.array([jacobi_eval(JacobiParams(alpha, beta, n2), xi) for xi in x])
    integral = float(np.dot(w, p1 * p2 * weight))
    target = jacobi_norm(JacobiParams(alpha, beta, n1)) if n1 == n2 else 0.0
    print(f"  <P_{n1}, P_{n2}> = {integral:14.10f}   closed-form norm = {target:14.10f}")

print("\nKrawtchouk reflection: K_n(x) against (1-1/p)^(x+n-N) K_(N-n)(N-x):")
N, p = 6, 0.3
for n, xv in ((1, 4), (3, 2), (5, 6)):
    lhs = krawtchouk(n, xv, p, N)
    rhs = (1 - 1 / p) ** (xv + n - N) * krawtchouk(N - n, N - xv, p, N)
    print(f"  n={n} x={xv}:  {lhs:16.10f}  vs  {rhs:16.10f}")

print("\nPfaff transformation of a terminating 2F1:")
n, b, c, z = 5, 0.5, 1.5, -0.7
lhs = hyp2f1(-n, b, c, z)
rhs = (1 - z) ** n * hyp2f1(-n, c - b, c, z / (z - 1))
print(f"  2F1(-{n}, {b}; {c}; {z}) = {lhs:.12f}")
print(f"  transformed           = {rhs:.12f}")

print("\nLegendre values are the (0,0) Jacobi family:")
for lv in range(4):
    print(f"  P_{lv}(0.3) = {legendre(lv, 0.3): .10f}")
