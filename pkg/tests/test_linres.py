import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linprod import monideal as mi
from linprod.groebner import PolyIdeal
from linprod.linres import (
    BettiTable,
    betti_ideal,
    has_linear_resolution,
    multigraded_betti_support,
    reg0_truncated,
    regularity,
    romer_bound_check,
)
from linprod.monideal import MonomialIdeal
from linprod.polyring import Ring, monomials_of_degree
from linprod.reesalg import present, product_ideal

R3 = Ring(("x", "y", "z"))


def test_betti_table_views():
    B = betti_ideal(MonomialIdeal(R3, ["x^2", "y^2"]))
    assert B.items() == [((0, (2,)), 2), ((1, (4,)), 1)]
    assert B.reg() == 3 and not B.is_linear()
    assert B.as_quotient().totals() == [1, 2, 1]
    assert BettiTable.from_json(B.to_json()) == B
    assert "3: . 1" in B.pretty()


def test_linear_resolution_of_polynomial_ideal():
    # twisted cubic: 2x2 minors of a 2x3 matrix of linear forms have a linear resolution
    I = PolyIdeal(R3.extend(["w"]), ["x*z - y^2", "x*w - y*z", "y*w - z^2"])
    assert has_linear_resolution(I)
    ok, why = has_linear_resolution(MonomialIdeal(R3, ["x^2", "y^3"]), diagnostic=True)
    assert not ok and why


@pytest.mark.parametrize("gens,reg", [(["x", "y"], 1), (["x^2", "y^2"], 3), (["x^2", "x*y", "y^2"], 2)])
def test_regularity_values(gens, reg):
    assert regularity(MonomialIdeal(R3, gens)) == reg


def test_multigraded_support_of_complete_intersection():
    supp = multigraded_betti_support(MonomialIdeal(R3, ["x^2", "y^2"]))
    assert sorted(supp) == [(0, (0, 2, 0)), (0, (2, 0, 0)), (1, (2, 2, 0))]


@given(st.integers(0, 10**6))
def test_multigraded_support_matches_upper_koszul(seed):
    rng = random.Random(seed)
    gens = [tuple(rng.randint(0, 2) for _ in range(3)) for _ in range(rng.randint(1, 4))]
    gens = [g for g in gens if any(g)] or [(1, 0, 0)]
    I = MonomialIdeal(R3, gens)
    fine = mi.betti_multigraded(I)
    expected = sorted({(k, b) for (k, b), r in fine.items() if r})
    assert sorted(set(multigraded_betti_support(I))) == expected


@pytest.mark.parametrize("gens,reg0", [(["x"], 0), (["x^2", "x*y", "y^2"], 0), (["x^2", "y^2"], 1)])
def test_reg0_small_examples(gens, reg0):
    cert = reg0_truncated(present([MonomialIdeal(R3, gens)]), 2)
    assert cert.reg0 == reg0


def test_reg0_square_tor1_record():
    cert = reg0_truncated(present([MonomialIdeal(R3, ["x^2", "x*y", "y^2"])]), 2)
    assert cert["tor1"] == {(1, (1,)): 2, (0, (2,)): 1}


@given(st.integers(0, 10**6))
def test_reg0_agrees_with_product_regularities(seed):
    # truncated reg_0 is max over |h| <= B of reg(I^h) - d.h
    rng = random.Random(seed)
    ideals = []
    for _ in range(rng.randint(1, 2)):
        d = rng.randint(1, 2)
        pool = list(monomials_of_degree(3, d))
        ideals.append(MonomialIdeal(R3, rng.sample(pool, rng.randint(1, min(4, len(pool))))))
    degs = [I.max_degree() for I in ideals]
    B = 2
    want = 0
    from linprod.families import hvectors

    for h in hvectors(len(ideals), B):
        P = product_ideal(ideals, h)
        want = max(want, regularity(P) - sum(a * b for a, b in zip(degs, h)))
    assert reg0_truncated(present(ideals), B).reg0 == want


def test_romer_bound():
    ideals = [MonomialIdeal(R3, ["x", "y"]), MonomialIdeal(R3, ["x", "z"])]
    assert romer_bound_check(ideals, (1, 1), 0)
