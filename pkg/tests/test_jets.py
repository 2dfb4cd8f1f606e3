import random

import pytest

from queerlab.amodule import SuperPoly, m_generators
from queerlab.jets import (
    a_ring,
    k_ring,
    phi_apply,
    phi_map,
    psi_map,
    psi_of_phi_on_generators,
)
from queerlab.scalars import ZETA
from queerlab.spoly import p_inverse

rng = random.Random(2)


def test_phi_base_formulas():
    ring, phi = phi_map(1, 4)
    assert phi[("x", 1, 1)] == ring.add(ring.one(), ring.even_var(("abar", 1, 1)))
    assert phi[("y", 1, 1)] == ring.scale(ring.odd_var(("b", 1, 1)), -ZETA)


def test_phi_general_formula_n2():
    ring, phi = phi_map(2, 4)
    # phi(x_22) = a_12 a'_12 + zeta b_12 b'_12 + a_22 a'_22 + zeta b_22 b'_22
    #           = a_12 a'_12 + zeta b_12 b'_12 + (1 + abar_22)
    want = ring.mul(ring.even_var(("a", 1, 2)), ring.even_var(("ap", 1, 2)))
    want = ring.add(
        want,
        ring.scale(
            ring.mul(ring.odd_var(("b", 1, 2)), ring.odd_var(("bp", 1, 2))), ZETA
        ),
    )
    want = ring.add(want, ring.add(ring.one(), ring.even_var(("abar", 2, 2))))
    assert phi[("x", 2, 2)] == want


def test_phi_vanishes_at_identity_on_m_generators():
    for n in (1, 2, 3):
        ring, _ = phi_map(n, 3)
        for g in m_generators(n):
            assert ring.constant_term(phi_apply(n, 3, g)).is_zero()


def test_phi_multiplicative_on_degree_two_pairs():
    for n in (1, 2, 3):
        ring, _ = phi_map(n, 4)
        gens = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                gens.append(SuperPoly.x(n, n, i, j))
                gens.append(SuperPoly.y(n, n, i, j))
        for _ in range(8):
            p = rng.choice(gens) * rng.choice(gens)
            q = rng.choice(gens) * rng.choice(gens)
            assert phi_apply(n, 4, p * q) == ring.mul(
                phi_apply(n, 4, p), phi_apply(n, 4, q)
            )


def test_psi_base_cases():
    aring, psi = psi_map(2, 3)
    assert psi[("a", 1, 1)] == aring.add(aring.one(), aring.even_var(("xbar", 1, 1)))
    assert psi[("b", 1, 1)] == aring.scale(aring.odd_var(("y", 1, 1)), ZETA)


def test_psi_of_phi_is_identity():
    for n in (1, 2, 3):
        for key, got, want in psi_of_phi_on_generators(n, 3):
            assert got == want, (n, key)


def test_jet_inverse():
    ring = a_ring(1, 5)
    p = ring.add(ring.one(), ring.even_var(("xbar", 1, 1)))
    inv = ring.inverse(p)
    assert ring.mul(p, inv) == ring.one()
    with pytest.raises(ZeroDivisionError):
        p_inverse(ring.even_var(("xbar", 1, 1)), ring.n_even, 5)


def test_odd_jets_square_to_zero():
    ring = k_ring(2, 4)
    q = ring.add(
        ring.odd_var(("b", 1, 1)),
        ring.scale(ring.odd_var(("bp", 1, 2)), ZETA),
    )
    assert ring.mul(q, q) == {}


def test_truncation():
    ring = a_ring(1, 2)
    x = ring.even_var(("xbar", 1, 1))
    x2 = ring.mul(x, x)
    assert ring.mul(x2, x) == {}  # order-3 terms are cut
