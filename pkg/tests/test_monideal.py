import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linprod import monideal as mi
from linprod.linres import betti_ideal
from linprod.groebner import PolyIdeal, minimal_resolution
from linprod.monideal import MonomialIdeal
from linprod.polyring import Ring, monomials_of_degree

R3 = Ring(("x", "y", "z"))
R4 = Ring(("x1", "x2", "x3", "x4"))

mono3 = st.tuples(*[st.integers(0, 3)] * 3).filter(any)
ideals3 = st.lists(mono3, min_size=1, max_size=5).map(lambda gs: MonomialIdeal(R3, gs))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def count_standard(I, d):
    """Hilbert function of R/I by brute force."""
    return sum(1 for m in monomials_of_degree(I.nvars, d) if not any(divides(g, m) for g in I.gens))


def borel_oracle(u, n):
    """Monomials of degree |u| that are Borel moves of u: prefix sums dominate."""
    pre = list(itertools.accumulate(u))
    out = []
    for v in monomials_of_degree(n, sum(u)):
        if all(a >= b for a, b in zip(itertools.accumulate(v), pre)):
            out.append(v)
    return sorted(out)


@given(ideals3)
def test_hilbert_function_matches_count(I):
    H = mi.hilbert_series(I)
    for d in range(7):
        assert H.hilbert_function(d) == count_standard(I, d)


@given(ideals3)
def test_primary_decomposition_intersects_back(I):
    comps = mi.primary_decomposition_monomial(I)
    assert mi.intersect_all([Q for _, Q in comps]) == I
    for P, Q in comps:
        assert mi.radical(Q) == mi.prime_ideal(R3, P)


@given(ideals3, ideals3)
def test_lattice_operations(I, J):
    K = mi.intersect(I, J)
    for g in K.gens:
        assert I.contains(g) and J.contains(g)
    P = mi.product(I, J)
    assert all(K.contains(g) for g in P.gens)


@given(st.tuples(*[st.integers(0, 3)] * 3).filter(any))
def test_principal_borel_matches_definition(u):
    I = mi.principal_borel(u, R3)
    assert sorted(I.gens) == borel_oracle(u, 3)
    assert mi.is_strongly_stable(I)
    assert mi.principal_borel_intersection(u, R3) == I


def test_strongly_stable_detection():
    assert mi.is_strongly_stable(MonomialIdeal(R3, ["x^2", "x*y", "y^2"]))
    assert not mi.is_strongly_stable(MonomialIdeal(R3, ["x^2", "y^2"]))


def test_polymatroidal_detection():
    assert mi.is_polymatroidal(MonomialIdeal(R3, ["x*y", "x*z", "y*z"]))
    assert mi.is_polymatroidal(mi.principal_borel((0, 2, 1), R3))
    assert not mi.is_polymatroidal(MonomialIdeal(R3, ["x^2", "y^2"]))
    assert not mi.is_polymatroidal(MonomialIdeal(R3, ["x", "y^2"]))


def test_transversal_presentation():
    I = MonomialIdeal(R3, ["x^2", "x*z", "x*y", "y*z"])
    sets = mi.is_transversal_presentable(I)
    assert sets is not None
    J = mi.unit_ideal(R3)
    for A in sets:
        J = J * mi.prime_ideal(R3, A)
    assert J == I


def test_integral_closure():
    assert mi.integral_closure(MonomialIdeal(R3, ["x^2", "y^2"])) == MonomialIdeal(R3, ["x^2", "x*y", "y^2"])
    assert mi.is_integrally_closed(MonomialIdeal(R3, ["x^2", "x*y", "y^2"]))
    assert not mi.is_integrally_closed(MonomialIdeal(R3, ["x^3", "y^3"]))


def test_associated_primes_of_veronese_square():
    I = MonomialIdeal(R3, ["x*y", "x*z", "y*z"])
    assert mi.associated_primes(I) == [(0, 1), (0, 2), (1, 2)]
    assert (0, 1, 2) in mi.associated_primes(I * I)


def test_h_polynomial_of_complete_intersection():
    # R/(x^2, y^2) in three variables: h = (1 + t)^2, dimension 1
    h, dim = mi.hilbert_series(MonomialIdeal(R3, ["x^2", "y^2"])).reduced()
    assert (h, dim) == ([1, 2, 1], 1)


def random_strongly_stable(rng, n=3, maxdeg=4, k=3):
    ring = R3 if n == 3 else R4
    gens = []
    for _ in range(rng.randint(1, k)):
        d = rng.randint(1, maxdeg)
        gens.append(rng.choice(list(monomials_of_degree(n, d))))
    return mi.borel_closure(gens, ring)


@given(st.integers(0, 10**6))
def test_betti_routes_agree_on_strongly_stable(seed):
    I = random_strongly_stable(random.Random(seed))
    ek = mi.eliahou_kervaire_betti(I)
    assert ek == mi.betti_upper_koszul(I)
    res = minimal_resolution(PolyIdeal(I.ring, [I.ring.monomial(g) for g in I.gens])).betti().as_ideal()
    assert ek == res


@given(st.integers(0, 10**6))
def test_linear_quotients_betti(seed):
    rng = random.Random(seed)
    u = tuple(rng.randint(0, 2) for _ in range(3))
    if not any(u):
        u = (1, 0, 0)
    I = mi.principal_borel(u, R3)
    assert mi.linear_quotients(I) is not None
    assert mi.betti_from_linear_quotients(I) == betti_ideal(I)


def test_regularity_of_powers_of_maximal_ideal():
    m = MonomialIdeal(R3, ["x", "y", "z"])
    for k in range(1, 4):
        assert mi.regularity(mi.power(m, k)) == k


def test_upper_koszul_reduced_homology():
    # boundary of a triangle has one loop
    faces = [(0, 1), (1, 2), (0, 2), (0,), (1,), (2,), ()]
    H = mi.reduced_homology(faces)
    assert H.get(1, 0) == 1 and H.get(0, 0) == 0
