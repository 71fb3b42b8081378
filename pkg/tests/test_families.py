import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linprod import families as fam
from linprod import monideal as mi
from linprod.groebner import PolyIdeal, ideal_equal
from linprod.monideal import MonomialIdeal

R4 = fam.variable_ring(4)


def L(*forms):
    return fam.LinearIdeal.from_strings(R4, list(forms))


# --- linear ideals -----------------------------------------------------------

def test_linear_ideal_is_canonical():
    assert L("x1 + x2", "x1 - x2") == L("x1", "x2")
    assert L("x1", "x2").rank == 2
    assert L("x1").issubset(L("x1", "x3"))
    assert (L("x1") + L("x2")) == L("x1", "x2")
    assert L("x1", "x2").is_monomial()
    assert not L("x1 + x2").is_monomial()


def test_product_matches_ideal_product():
    Ps = [L("x1", "x2"), L("x2 + x3"), L("x1 - x4", "x3")]
    direct = Ps[0].to_poly_ideal() * Ps[1].to_poly_ideal() * Ps[2].to_poly_ideal()
    assert ideal_equal(fam.linforms_product(Ps), direct)


def test_zero_factor_rejected():
    with pytest.raises(ValueError):
        fam.linforms_product([fam.LinearIdeal(R4, [])])


@given(st.integers(0, 10**6))
def test_linear_valuation_is_containment_count(seed):
    rng = random.Random(seed)
    Ps = fam.random_linforms_instance(rng.randint(2, 3), rng.randint(1, 3), rng)
    I = fam.linforms_product(Ps)
    for _, P in fam.candidate_primes(Ps):
        assert fam.linear_valuation(I, P, len(Ps)) == sum(Q.issubset(P) for Q in Ps)


@given(st.integers(0, 10**6))
def test_linear_forms_decomposition(seed):
    rng = random.Random(seed)
    Ps = fam.random_linforms_instance(rng.randint(2, 3), rng.randint(1, 3), rng)
    d = fam.linforms_decompose(Ps, irredundant=True)
    assert d.equal
    I = fam.linforms_product(Ps)
    for P, v in d.components:
        assert I.issubset(P.to_poly_ideal() ** v)


def test_three_general_planes():
    Ps = fam.three_general_planes()
    m = fam.LinearIdeal.variables(R4, range(4))
    g = fam.gp_graph(Ps, m)
    assert not g.edges
    assert not g.is_connected()
    assert fam.is_associated(Ps, m)
    tests = fam.gp_tests(Ps, m)
    assert tests["consistent"]
    assert fam.split_witness(Ps, m) is None


def test_split_witness_excludes_association():
    # P1 = (x1, x2), P2 = (x3, x4): the sum splits, so the maximal ideal is not associated
    Ps = [L("x1", "x2"), L("x3", "x4")]
    m = L("x1", "x2", "x3", "x4")
    assert fam.split_witness(Ps, m) is not None
    assert not fam.is_associated(Ps, m)


@given(st.integers(0, 10**6))
def test_transversal_association_is_connectivity(seed):
    rng = random.Random(seed)
    Ps = fam.random_transversal_instance(rng.randint(2, 4), rng.randint(2, 3), rng)
    for _, P in fam.candidate_primes(Ps):
        assert fam.is_associated(Ps, P) == fam.gp_graph(Ps, P).is_connected()


def test_candidate_prime_check():
    with pytest.raises(ValueError):
        fam.gp_graph([L("x1"), L("x2")], L("x3"))


# --- polymatroids ------------------------------------------------------------

def vp_oracle(I, P):
    """Largest k with I inside P^k: the smallest P-degree of a generator."""
    return min(sum(g[i] for i in P) for g in I.gens)


@given(st.integers(0, 10**6))
def test_polymatroid_vP_matches_containment(seed):
    rng = random.Random(seed)
    I = fam.random_polymatroidal(rng.randint(2, 4), 3, rng)
    assert mi.is_polymatroidal(I)
    n = I.nvars
    for P in [(0,), (0, 1), tuple(range(n)), (n - 1,)]:
        assert fam.polymatroid_vP(I, P) == vp_oracle(I, P)
    assert fam.polymatroid_decompose(I).equal


def test_polymatroid_rejects_non_polymatroidal():
    with pytest.raises(ValueError):
        fam.polymatroid_decompose(MonomialIdeal(R4, ["x1^2", "x2^2"]))


def test_veronese_ass_gain():
    R = fam.variable_ring(3)
    chain = fam.polymatroid_ass_chain(MonomialIdeal(R, ["x1*x2", "x1*x3", "x2*x3"]), kmax=2)
    assert [0, 1, 2] not in chain["ass"][0]
    assert [0, 1, 2] in chain["ass"][1]
    assert chain["ok"] and not chain["transversal"]


def test_transversal_ass_constant():
    R = fam.variable_ring(3)
    chain = fam.polymatroid_ass_chain(MonomialIdeal(R, ["x1^2", "x1*x3", "x1*x2", "x2*x3"]), kmax=3)
    assert chain["transversal"] and chain["constant"]


def test_hvectors():
    assert sorted(fam.hvectors(2, 2)) == [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


# --- northeast ideals --------------------------------------------------------

def test_northeast_spec_validation():
    with pytest.raises(ValueError):
        fam.NortheastSpec(3, ((3, 2),))
    spec = fam.NortheastSpec(3, ((1, 2), (2, 1)))
    assert fam.NortheastSpec.from_json(spec.to_json()) == spec


def test_northeast_minors_and_diagonals():
    # I_1(2) of a 3x3 matrix: the top-right 1x2 block
    assert [str(f) for f in fam.ne_minors(1, 2, 3)] == ["x12", "x13"]
    # I_2(1): 2-minors of the top 2x3 block
    assert len(fam.ne_minors(2, 1, 3)) == 3
    assert fam.ne_diagonals(3, 1, 3).gens == [(1, 0, 0, 0, 1, 0, 0, 0, 1)]


@pytest.mark.parametrize("t,a", [(t, a) for t in range(1, 4) for a in range(1, 5 - t)])
def test_northeast_initial_ideals(t, a):
    assert fam.ne_initial_check(t, a, 3)


def test_northeast_exponents_and_decomposition():
    spec = fam.NortheastSpec(3, ((1, 2), (2, 1)))
    d = fam.ne_decompose(spec)
    assert d["e"]["1,1"] == 2 and d["e"]["1,2"] == 1 and d["e"]["2,1"] == 1
    assert d["I_equal"] and d["J_equal"]


def test_northeast_proviso_failures():
    failing = []
    for S in [((1, 2), (3, 1)), ((1, 3), (2, 1)), ((1, 2), (2, 1))]:
        r = fam.ne_irredundant(fam.NortheastSpec(3, S))
        assert r["equal"] and r["consistent"]
        if not r["proviso"]:
            failing.append(S)
    assert failing == [((1, 2), (3, 1)), ((1, 3), (2, 1))]


def test_northeast_j_power():
    assert fam.ne_jpower_decompose(2, 1, k=2, n=3)["equal"]
