"""Quadrature of the SU(2) class-operator integral against its closed form.

The class of g(psi) is a sphere; integrating the spin-j matrices over it with
a Gauss-Legendre x uniform product rule must converge to the scalar
sin((2j+1) psi/2) / ((2j+1) sin(psi/2)) times the identity.  The table shows
the spectral convergence as the polar node count doubles.
"""

import numpy as np

from classops import SphereQuadrature, class_operator_quadrature, closed_form_eigenvalue

psi = 2 * np.pi / 3
print(f"class angle psi = {psi:.6f}\n")
print(f"{'j':>5} {'closed form':>14} " + "".join(f"{'err n=' + str(n):>12}" for n in (4, 8, 16, 32)))
for j2 in range(1, 13):
    value = closed_form_eigenvalue(j2, psi)
    errs = []
    for n_theta in (4, 8, 16, 32):
        quad = SphereQuadrature.build(n_theta, 2 * n_theta)
        op = class_operator_quadrature(j2, psi, quad)
        errs.append(np.max(np.abs(op - value * np.eye(j2 + 1))))
    label = f"{j2 // 2}" if j2 % 2 == 0 else f"{j2}/2"
    print(f"{label:>5} {value:>14.8f} " + "".join(f"{e:>12.2e}" for e in errs))

print("\nat psi = pi the spin-1/2 class operator vanishes identically:")
quad = SphereQuadrature.build(16, 32)
print(np.round(class_operator_quadrature(1, np.pi, quad), 12))
