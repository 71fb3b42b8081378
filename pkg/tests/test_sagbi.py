import itertools

from hypothesis import given
from hypothesis import strategies as st

from linprod import families as fam
from linprod import sagbi
from linprod.polyring import QQ, Polynomial, Ring, lex

R2 = Ring(("x", "y"), order=lex(2))


def test_symmetric_polynomials_form_a_sagbi_basis():
    inst = sagbi.SagbiInstance([R2("x + y"), R2("x*y")])
    assert sagbi.is_sagbi(inst)["verdict"]


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-4, 4).filter(bool), max_size=4))
def test_subduction_kills_algebra_elements(coeffs):
    gens = [R2("x + y"), R2("x*y")]
    inst = sagbi.SagbiInstance(gens)
    f = R2.zero()
    for (a, b), c in coeffs.items():
        f = f + (gens[0] ** a) * (gens[1] ** b) * R2.const(c)
    assert sagbi.subduct(f, inst).is_zero()


def test_non_sagbi_examples():
    # both sets miss part of the initial algebra, so some binomial leaves a remainder
    bad = sagbi.SagbiInstance([R2("x + y"), R2("x*y"), R2("x*y^2")])
    res = sagbi.is_sagbi(bad)
    assert not res["verdict"]
    assert any(c["remainder"] != "0" for c in res["certificates"])
    assert not sagbi.is_sagbi(sagbi.SagbiInstance([R2("x + y"), R2("x^2")]))["verdict"]


def test_y_not_in_subalgebra_remainder():
    inst = sagbi.SagbiInstance([R2("x + y"), R2("x*y")])
    assert not sagbi.subduct(R2("x"), inst).is_zero()


def test_monoid_factorization():
    assert sagbi.monoid_factorization((2, 1), [(1, 0), (1, 1)]) == (1, 1)
    assert sagbi.monoid_factorization((0, 1), [(1, 0), (1, 1)]) is None


def test_veronese_gb_lift():
    R = Ring(("x", "y", "z"))
    gens = [R.monomial(m) for m in itertools.combinations_with_replacement(range(3), 2) for m in [
        tuple(sum(1 for i in m if i == j) for j in range(3))]]
    inst = sagbi.SagbiInstance(gens)
    res = sagbi.is_sagbi(inst)
    assert res["verdict"]
    assert sagbi.gb_lift_check(inst, res)["verdict"]


def test_rees_sagbi_northeast_instance():
    spec = fam.NortheastSpec(3, ((1, 2), (2, 1)))
    out = sagbi.rees_sagbi_check(spec)
    assert out["verdict"]
    assert out["gb_lift"]
    assert out["initial"]["all_quadratic"]
