"""Group construction, conjugacy structure, and group-algebra operations."""

import numpy as np
import pytest

from classops.groups import (
    GroupConstructionError,
    build_group,
    conjugacy_classes,
    convolve,
    cycle_notation,
    group_from_table,
    inner_product,
    left_regular_matrix,
    parse_cycles,
    regular_actions,
)
from helpers import CATALOG_LEQ_24, oracle_classes


@pytest.mark.parametrize("spec,order", [
    ("C1", 1), ("C2", 2), ("C6", 6), ("S3", 6), ("D4", 8), ("Q8", 8), ("S4", 24), ("S5", 120),
])
def test_catalog_orders(spec, order):
    group = build_group(spec)
    assert group.order == order
    assert group.identity == 0
    group.validate()  # exhaustive <= 60, sampled above


def test_trivial_group():
    group = build_group("C1")
    assert group.order == 1
    classes = conjugacy_classes(group)
    assert len(classes) == 1
    assert classes[0].members == (0,)
    assert classes[0].centralizer == (0,)


@pytest.mark.parametrize("spec,n_classes", [("S3", 3), ("Q8", 5), ("S4", 5), ("D4", 5), ("C4", 4)])
def test_class_counts_match_bruteforce(spec, n_classes):
    group = build_group(spec)
    classes = conjugacy_classes(group)
    brute = oracle_classes(group)
    assert len(classes) == n_classes
    assert len(brute) == n_classes
    assert [set(c.members) for c in classes] == brute


@pytest.mark.parametrize("spec", CATALOG_LEQ_24)
def test_class_structure(spec):
    group = build_group(spec)
    classes = conjugacy_classes(group)
    seen = set()
    for c in classes:
        assert c.base_element == min(c.members)
        assert not seen & set(c.members)
        seen |= set(c.members)
        assert len(c.members) * len(c.centralizer) == group.order
        # centralizer closed under product and inverse
        cent = set(c.centralizer)
        assert all(group.mul(a, b) in cent for a in cent for b in cent)
        assert all(group.inv(a) in cent for a in cent)
        # coset representatives hit each member
        for k, member in enumerate(c.members):
            assert group.conjugate(c.base_element, c.coset_reps[k]) == member
    assert seen == set(range(group.order))
    assert [c.base_element for c in classes] == sorted(c.base_element for c in classes)


def test_s3_class_sizes_and_centralizers():
    group = build_group("S3")
    classes = conjugacy_classes(group)
    assert [c.size for c in classes] == [1, 3, 2]
    assert [len(c.centralizer) for c in classes] == [6, 2, 3]


def test_abelian_classes_are_singletons():
    group = build_group("C4")
    for c in conjugacy_classes(group):
        assert c.size == 1
        assert c.centralizer == tuple(range(4))


def test_deterministic_element_order():
    a = build_group("S4")
    b = build_group("S4")
    assert a.labels == b.labels
    assert np.array_equal(a.mult_table, b.mult_table)


def test_cycle_notation_round_trip():
    for text in ["e", "(1 2)", "(1 2 3)(4 5)", "(2 4)"]:
        perm = parse_cycles(text)
        assert parse_cycles(cycle_notation(perm)) == perm
    assert parse_cycles("(1, 2, 3)") == parse_cycles("(1 2 3)")
    with pytest.raises(GroupConstructionError):
        parse_cycles("(1 2")
    with pytest.raises(GroupConstructionError):
        parse_cycles("(1 1)")


def test_build_group_descriptors():
    by_dict = build_group({"catalog": {"family": "symmetric", "n": 3}})
    assert by_dict.order == 6
    by_gens = build_group({"generators": ["(1 2)", "(1 2 3)"]})
    assert by_gens.order == 6
    table = build_group("C2").mult_table
    by_table = build_group({"table": table.tolist()})
    assert by_table.order == 2
    with pytest.raises(GroupConstructionError):
        build_group({"catalog": {"family": "monster", "n": 1}})
    with pytest.raises(GroupConstructionError):
        build_group("X9")
    with pytest.raises(GroupConstructionError):
        build_group({"table": [[0, 1], [1, 1]]})


def test_non_associative_table_rejected():
    # latin square with identity that is not associative
    table = [
        [0, 1, 2, 3, 4],
        [1, 4, 3, 2, 0],
        [2, 3, 0, 4, 1],
        [3, 2, 4, 1, 0],
        [4, 0, 1, 0, 3],
    ]
    with pytest.raises(GroupConstructionError):
        group_from_table(table)


def test_order_cap():
    with pytest.raises(GroupConstructionError, match="too large"):
        build_group({"generators": ["(1 2)", "(1 2 3 4 5 6 7)"]}, order_cap=100)


def test_associativity_exhaustive_small():
    for spec in ["S3", "Q8", "D4"]:
        t = build_group(spec).mult_table
        n = t.shape[0]
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    assert t[t[a, b], c] == t[a, t[b, c]]


# ---------------------------------------------------------------------------
# group algebra
# ---------------------------------------------------------------------------


def test_convolution_identity():
    group = build_group("S3")
    rng = np.random.default_rng(0)
    psi = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    delta = np.zeros(6, dtype=complex)
    delta[0] = group.order
    assert np.allclose(convolve(group, delta, psi), psi, atol=1e-14)


def test_convolution_of_deltas():
    group = build_group("S3")
    n = group.order
    for a in range(n):
        for b in range(n):
            da = np.zeros(n, complex); da[a] = n
            db = np.zeros(n, complex); db[b] = n
            expected = np.zeros(n, complex)
            expected[group.mul(a, b)] = n
            assert np.allclose(convolve(group, da, db), expected)


def test_convolution_of_constants():
    group = build_group("D4")
    one = np.ones(group.order, dtype=complex)
    assert np.allclose(convolve(group, one, one), one)


@pytest.mark.parametrize("spec", ["S3", "Q8", "S4"])
def test_convolution_associative(spec):
    group = build_group(spec)
    rng = np.random.default_rng(1)
    n = group.order
    for _ in range(10):
        phi, psi, chi = (rng.standard_normal(n) + 1j * rng.standard_normal(n) for _ in range(3))
        left = convolve(group, convolve(group, phi, psi), chi)
        right = convolve(group, phi, convolve(group, psi, chi))
        assert np.max(np.abs(left - right)) < 1e-12


def test_convolution_size_mismatch():
    group = build_group("S3")
    with pytest.raises(ValueError):
        convolve(group, np.ones(5), np.ones(6))
    with pytest.raises(ValueError):
        inner_product(group, np.ones(6), np.ones(7))


def test_inner_product():
    group = build_group("S4")
    n = group.order
    one = np.ones(n, dtype=complex)
    assert inner_product(group, one, one) == pytest.approx(1.0)
    d0 = np.zeros(n, complex); d0[0] = 1
    d1 = np.zeros(n, complex); d1[1] = 1
    assert inner_product(group, d0, d1) == 0
    # conjugate-linear in the second argument
    rng = np.random.default_rng(2)
    phi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    assert inner_product(group, phi, 2j * psi) == pytest.approx(
        -2j * inner_product(group, phi, psi)
    )
    # positive definite
    for _ in range(20):
        f = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        value = inner_product(group, f, f)
        assert value.real > 0 and abs(value.imag) < 1e-15


def test_left_regular_matrix_on_deltas():
    group = build_group("S3")
    n = group.order
    delta_e = np.zeros(n, complex); delta_e[0] = 1
    assert np.allclose(left_regular_matrix(group, delta_e), np.eye(n))
    for a in range(n):
        delta_a = np.zeros(n, complex); delta_a[a] = 1
        lam_a, _ = regular_actions(group, a)
        assert np.allclose(left_regular_matrix(group, delta_a), lam_a)


def test_left_regular_matrix_is_convolution():
    group = build_group("Q8")
    rng = np.random.default_rng(3)
    n = group.order
    phi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    psi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    m = left_regular_matrix(group, phi)
    assert np.allclose(m @ psi, convolve(group, n * phi, psi))


@pytest.mark.parametrize("spec", ["S4", "Q8"])
def test_regular_actions_homomorphism(spec):
    group = build_group(spec)
    rng = np.random.default_rng(4)
    lam_e, rho_e = regular_actions(group, 0)
    assert np.allclose(lam_e, np.eye(group.order))
    assert np.allclose(rho_e, np.eye(group.order))
    for _ in range(20):
        g, h = rng.integers(0, group.order, size=2)
        lam_g, rho_g = regular_actions(group, g)
        lam_h, rho_h = regular_actions(group, h)
        lam_gh, rho_gh = regular_actions(group, group.mul(g, h))
        assert np.allclose(lam_g @ lam_h, lam_gh)
        assert np.allclose(rho_g @ rho_h, rho_gh)
        assert np.allclose(lam_g @ rho_h, rho_h @ lam_g)


def test_translation_covariance_of_multiplication_operator():
    # lambda(g) o M(phi) = M(lambda(g) phi), and conjugation acts on the
    # kernel by the adjoint translation lambda(g) rho(g)
    group = build_group("S4")
    rng = np.random.default_rng(5)
    n = group.order
    phi = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    m = left_regular_matrix(group, phi)
    for g in rng.integers(0, n, size=8):
        lam_g, rho_g = regular_actions(group, g)
        left_shift = phi[group.mult_table[group.inverse_table[g]]]
        assert np.max(np.abs(lam_g @ m - left_regular_matrix(group, left_shift))) < 1e-13
        adjoint = left_shift[group.mult_table[:, g]]  # phi(g^-1 x g)
        assert np.max(
            np.abs(lam_g @ m @ lam_g.conj().T - left_regular_matrix(group, adjoint))
        ) < 1e-13


def test_element_index_resolution():
    group = build_group("S3")
    assert group.element_index("(1 2)") == group.labels.index("(1 2)")
    assert group.element_index(3) == 3
    assert group.element_index("2") == 2
    with pytest.raises(GroupConstructionError):
        group.element_index("(9 9)")
