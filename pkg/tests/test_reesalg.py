import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linprod.groebner import PolyIdeal, ideal_equal
from linprod.monideal import MonomialIdeal
from linprod.polyring import Ring, monomials_of_degree
from linprod.reesalg import (
    collapse_tally,
    defining_ideal,
    fiber_ring,
    h_polynomial,
    h_polynomial_direct,
    initial_criterion,
    is_fiber_type,
    normality_evidence,
    present,
    product_ideal,
)

R3 = Ring(("x", "y", "z"))


def mono(*gens):
    return MonomialIdeal(R3, list(gens))


def random_family(seed):
    rng = random.Random(seed)
    out = []
    for _ in range(rng.randint(1, 2)):
        d = rng.randint(1, 2)
        pool = list(monomials_of_degree(3, d))
        out.append(MonomialIdeal(R3, rng.sample(pool, rng.randint(1, min(3, len(pool))))))
    return out


def test_defining_ideal_of_maximal_ideal_of_plane():
    pres = present([mono("x", "y")])
    I = defining_ideal(pres)
    assert collapse_tally(pres.tally) == {(1, 1): 1}
    assert len(I.gens) == 1


def test_square_of_maximal_ideal():
    pres = present([mono("x^2", "x*y", "y^2")])
    defining_ideal(pres)
    assert collapse_tally(pres.tally) == {(1, 1): 2, (0, 2): 1}
    assert is_fiber_type(pres)


def test_generators_lie_in_kernel():
    pres = present([mono("x^2", "x*y", "y*z"), mono("x", "z")])
    for F in defining_ideal(pres).gens:
        assert pres.phi(F).is_zero()


@given(st.integers(0, 10**6))
def test_degreewise_matches_elimination(seed):
    fam = random_family(seed)
    a, b = present(fam), present(fam)
    Ia = defining_ideal(a, method="degreewise", bound=4)
    Ib = defining_ideal(b, method="elimination")
    assert collapse_tally(a.tally) == collapse_tally(b.tally)
    assert ideal_equal(Ia, Ib)


@given(st.integers(0, 10**6))
def test_h_polynomial_two_routes(seed):
    fam = random_family(seed)
    pres = present(fam)
    defining_ideal(pres, method="elimination")
    h = h_polynomial(pres)
    assert h_polynomial_direct(pres, len(h) + 3) == h


def test_fiber_ring_of_notquad_is_a_cubic():
    fam = [mono("x", "y"), mono("x", "z"), mono("y", "z")]
    pres = present(fam)
    F = fiber_ring(pres)
    assert len(F.gens) == 1 and F.gens[0].total_degree() == 3
    assert len(F.gens[0].terms) == 2


def test_product_ideal_polynomial_and_monomial():
    fam = [mono("x", "y"), mono("x", "z")]
    assert product_ideal(fam, (1, 1)) == mono("x^2", "x*y", "x*z", "y*z")
    P = product_ideal([PolyIdeal(R3, ["x + y"]), PolyIdeal(R3, ["x - z"])], (2, 1))
    assert ideal_equal(P, PolyIdeal(R3, [R3("(x + y)^2*(x - z)")]))


def test_initial_criterion_on_linear_type_ideal():
    pres = present([mono("x", "y", "z")])
    res = initial_criterion(pres)
    assert res["all_quadratic"] and res["all_linear_in_X"]


def test_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        present([PolyIdeal(R3, ["x", "y^2"])])


def test_normality_evidence():
    assert normality_evidence([mono("x^2", "x*y", "y^2")])["all_closed"]
    assert not normality_evidence([mono("x^2", "y^2")], hmax=1)["all_closed"]
