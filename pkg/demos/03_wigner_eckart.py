"""Wigner-Eckart factorization of weighted class operators, finite and SU(2).

For a weight taken from an irreducible family of functions on the conjugacy
class, the matrix coefficients of the weighted class operator factor into a
coupling coefficient times a reduced matrix element.  Both sides are computed
independently: a brute-force operator on the group algebra (finite case) or a
sphere quadrature (SU(2)), against the coupling-table prediction.
"""

import numpy as np

from classops import (
    adapt_irreps_to_class,
    build_group,
    character_table,
    conjugacy_classes,
    conjugation_decomposition,
    irreps,
    su2_coupling_table,
    wigner_eckart_bruteforce,
    wigner_eckart_matrix,
)
from classops.su2 import SphereQuadrature, WignerD, fixed_column_index, weighted_class_operator_su2

# -- finite case: S3, transposition class ------------------------------------
group = build_group("S3")
table = character_table(group)
reps = irreps(group, table)
cls = conjugacy_classes(group)[1]
g0 = cls.base_element
adapted, m_alphas = adapt_irreps_to_class(reps, cls)
print(f"S3, class of {group.labels[g0]}; fixed-subspace dims per irrep: {m_alphas}")

alpha, sigma = 2, 2  # standard weight family, standard block
tab = conjugation_decomposition(group, adapted, table, sigma)
for k in range(adapted[alpha].dim):
    pred, rmes = wigner_eckart_matrix(
        tab, alpha, adapted[alpha].dim, range(m_alphas[alpha]), k, 0,
        adapted[sigma].matrices[g0], g0=g0,
    )
    brute = wigner_eckart_bruteforce(group, adapted, alpha, k, 0, g0)[(sigma, sigma)]
    dev = max(
        np.max(np.abs(brute[:, j, :, j] - pred.T)) for j in range(adapted[sigma].dim)
    )
    print(
        f"  weight conj(t^std_{{{k},0}}): reduced element {rmes[0].value:+.6f}, "
        f"prediction vs brute force: {dev:.2e}"
    )

# -- SU(2): spin-1/2 block, spin-1 weight -------------------------------------
print("\nSU(2), sigma = 1/2, class angle psi = pi/2, weight spin l = 1")
sigma2, alpha2, psi = 1, 2, np.pi / 2
quad = SphereQuadrature.build(24, 48)
su2_tab = su2_coupling_table(sigma2)
col = fixed_column_index(alpha2)
t_g0 = WignerD(sigma2).euler(0.0, 0.0, psi)
for k in range(alpha2 + 1):
    pred, rmes = wigner_eckart_matrix(su2_tab, alpha2, alpha2 + 1, [col], k, col, t_g0)
    quadr = weighted_class_operator_su2(sigma2, psi, [(alpha2, k, 1.0)], quad)
    print(
        f"  weight conj(D^1_{{{k},0}}): reduced element {rmes[0].value:+.6f}, "
        f"prediction vs quadrature: {np.max(np.abs(pred - quadr)):.2e}"
    )
