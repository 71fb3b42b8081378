"""Instance files and the verification batteries run by the command line.

An instance file is a JSON object with a ``kind`` and the data for it:

* ``ideals``: ``ring`` plus ``ideals`` (lists of generator strings)
* ``polymatroidal``: same layout, every ideal must be polymatroidal
* ``linear_forms``: ``ring`` plus ``factors`` (lists of linear forms)
* ``northeast``: ``n`` and ``S`` (a list of pairs, or ``"all"`` for every
  set of at most ``--tmax`` pairs)
* ``sagbi``: ``ring``, ``order`` and ``generators``

An optional ``expected`` object lists values the battery must reproduce.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Any

from . import families as fam
from . import monideal as mi
from .groebner import BudgetExceeded, PolyIdeal, minimal_generators
from .linres import betti_ideal, has_linear_resolution, reg0_truncated
from .monideal import MonomialIdeal
from .polyring import Field, ParseError, Ring, order_from_name
from .reesalg import (
    collapse_tally,
    defining_ideal,
    fiber_ring,
    h_polynomial,
    initial_criterion,
    is_fiber_type,
    present,
    product_ideal,
)

SCHEMA = 1
KINDS = ("ideals", "polymatroidal", "linear_forms", "northeast", "sagbi")


class InputError(ValueError):
    """Malformed or invalid instance data (exit code 3)."""


@dataclass
class Bounds:
    tmax: int = 2
    bound: int = 3
    n: int | None = None
    budget: int | None = 10**6

    def as_dict(self) -> dict:
        return {"tmax": self.tmax, "bound": self.bound, "n": self.n, "budget": self.budget}


@dataclass
class Instance:
    name: str
    kind: str
    data: dict
    field: Field
    expected: dict = field(default_factory=dict)

    # -- constructors of the mathematical objects ---------------------------
    def ring(self) -> Ring:
        try:
            r = Ring.from_json(self.data["ring"])
        except KeyError:
            raise InputError(f"{self.name}: missing 'ring'") from None
        return r.with_field(self.field)

    def ideals(self) -> list:
        R = self.ring()
        out = []
        for gens in self.data.get("ideals", []):
            polys = [R(g) for g in gens]
            if not polys:
                raise InputError(f"{self.name}: empty generator list")
            if all(p.is_monomial() for p in polys):
                out.append(MonomialIdeal(R, [p.lm() for p in polys]))
            else:
                out.append(PolyIdeal(R, polys))
        return out

    def factors(self) -> list:
        R = self.ring()
        return [fam.LinearIdeal.from_strings(R, f) for f in self.data.get("factors", [])]

    def specs(self, bounds: Bounds) -> list:
        n = bounds.n or int(self.data.get("n", 3))
        S = self.data.get("S", "all")
        try:
            if S == "all":
                pairs = fam.ne_pairs(n)
                size = int(self.data.get("max_size", bounds.tmax))
                out = []
                for r in range(1, size + 1):
                    out.extend(itertools.combinations(pairs, r))
                return [fam.NortheastSpec(n, s, self.field) for s in out]
            return [fam.NortheastSpec(n, tuple(tuple(p) for p in S), self.field)]
        except (TypeError, ValueError) as exc:
            raise InputError(f"{self.name}: {exc}") from None


def load_instance(source, field: Field | None = None, name: str | None = None) -> Instance:
    """Parse an instance from a path, a JSON string or a dict."""
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if not str(source).lstrip().startswith("{"):
            try:
                with open(source, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"cannot read {source}: {exc.strerror}") from None
            name = name or _stem(str(source))
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno} (char {exc.pos}): {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise InputError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise InputError(f"unsupported schema {schema}")
    fld = field
    if fld is None:
        try:
            fld = Field.parse(str(data.get("field", data.get("ring", {}).get("field", "QQ"))))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return Instance(data.get("name", name or "instance"), kind, data, fld, dict(data.get("expected", {})))


def _stem(path: str) -> str:
    import os

    return os.path.splitext(os.path.basename(path))[0]


# ---------------------------------------------------------------------------
# verdict bookkeeping


class Verdicts:
    def __init__(self, bounds: Bounds):
        self.bounds = bounds
        self.items: dict = {}

    def add(self, name: str, ok, reason: str | None = None, **bounds):
        if ok is None:
            status = "skipped"
        else:
            status = "pass" if ok else "fail"
        entry = {"status": status, "bounds": bounds or {"tmax": self.bounds.tmax}}
        if reason:
            entry["reason"] = reason
        self.items[name] = entry

    @property
    def failed(self) -> bool:
        return any(v["status"] == "fail" for v in self.items.values())


def _hkey(h) -> str:
    return str(h) if isinstance(h, int) else ",".join(map(str, h))


def _products(ideals, tmax):
    for h in fam.hvectors(len(ideals), tmax):
        yield h, product_ideal(ideals, h)


def _linear_products(ideals, tmax) -> dict:
    return {_hkey(h): bool(has_linear_resolution(P)) for h, P in _products(ideals, tmax)}


def _reg0_agreement(ideals, tmax, lin: dict, V: Verdicts, payload: dict, label: str = "reg0_agreement"):
    """Truncated reg_0 is 0 exactly when every product up to the same bound is linear."""
    cert = reg0_truncated(present(ideals), tmax)
    payload[label] = {"reg0_up_to_bound": cert.reg0, "bound": tmax, "witnesses": cert["witnesses"]}
    V.add(label, (cert.reg0 == 0) == all(lin.values()), bound=tmax)


def _fmt_tally(t: dict) -> dict:
    return {f"{a},{_hkey(h)}": r for (a, h), r in sorted(t.items())}


def _parse_tally(d: dict) -> dict:
    out = {}
    for k, v in d.items():
        parts = [int(x) for x in k.split(",")]
        out[(parts[0], parts[1] if len(parts) == 2 else tuple(parts[1:]))] = v
    return out


def _expect(V: Verdicts, inst: Instance, key: str, value, **bounds):
    if key in inst.expected:
        exp = inst.expected[key]
        V.add(f"expected:{key}", value == exp, None if value == exp else f"got {value!r}, expected {exp!r}", **bounds)


# ---------------------------------------------------------------------------
# batteries


def check_ideals(inst: Instance, bounds: Bounds, V: Verdicts) -> dict:
    ideals = inst.ideals()
    payload: dict = {}
    lin = _linear_products(ideals, bounds.tmax)
    payload["linear_products"] = lin
    _expect(V, inst, "linear_products", all(lin.values()), tmax=bounds.tmax)
    _reg0_agreement(ideals, bounds.tmax, lin, V, payload)
    _rees_expectations(inst, ideals, bounds, V, payload)
    return payload


def _rees_expectations(inst, ideals, bounds, V, payload):
    exp = inst.expected
    if "tally" in exp or "h_polynomial_has_negative" in exp:
        pres = present(ideals)
        defining_ideal(pres, bound=bounds.bound, budget=bounds.budget)
        tally = collapse_tally(pres.tally)
        payload["tally"] = _fmt_tally(tally)
        if "tally" in exp:
            ok = tally == _parse_tally(exp["tally"])
            V.add("expected:tally", ok, None if ok else f"got {payload['tally']}", bound=bounds.bound)
        if "h_polynomial_has_negative" in exp:
            hp = h_polynomial(pres, budget=bounds.budget)
            payload["h_polynomial"] = [int(c) for c in hp]
            neg = any(c < 0 for c in hp)
            V.add("expected:h_polynomial_has_negative", neg == exp["h_polynomial_has_negative"], bound=bounds.bound)
    if "fiber_principal_cubic" in exp:
        pres = present(ideals)
        F = fiber_ring(pres, budget=bounds.budget)
        gens = minimal_generators(F.gens)
        payload["fiber_relations"] = [str(g) for g in gens]
        ok = len(gens) == 1 and gens[0].total_degree() == 3 and len(gens[0].terms) == 2
        V.add("expected:fiber_principal_cubic", ok == exp["fiber_principal_cubic"])


def _vp_oracle(I: MonomialIdeal, P) -> int:
    """``min_u Σ_{i∈P} u_i``: the P-degree valuation of the generators."""
    return min(sum(u[i] for i in P) for u in I.gens)


def check_polymatroidal(inst: Instance, bounds: Bounds, V: Verdicts) -> dict:
    ideals = inst.ideals()
    if not all(isinstance(I, MonomialIdeal) and mi.is_polymatroidal(I) for I in ideals):
        raise InputError(f"{inst.name}: every ideal must be polymatroidal")
    payload: dict = {}
    lin = _linear_products(ideals, bounds.tmax)
    payload["linear_products"] = lin
    V.add("linear_products", all(lin.values()), tmax=bounds.tmax)
    decs, vp_ok, closed = {}, True, {}
    for h, P in _products(ideals, bounds.tmax):
        d = fam.polymatroid_decompose(P)
        decs[_hkey(h)] = {"components": [[list(p), v] for p, v in d.components],
                          "irredundant": [[list(p), v] for p, v in d.irredundant], "equal": d.equal}
        n = P.nvars
        for r in range(1, n + 1):
            for Q in itertools.combinations(range(n), r):
                vp_ok = vp_ok and fam.polymatroid_vP(P, Q) == _vp_oracle(P, Q)
        closed[_hkey(h)] = mi.is_integrally_closed(P)
    payload["decompositions"] = decs
    V.add("decomposition", all(d["equal"] for d in decs.values()), tmax=bounds.tmax)
    V.add("vP_regularity_matches_valuation", vp_ok, tmax=bounds.tmax)
    V.add("integrally_closed", all(closed.values()), tmax=bounds.tmax)
    kmax = bounds.tmax + 1
    chains = [fam.polymatroid_ass_chain(I, kmax) for I in ideals]
    payload["ass_chains"] = chains
    V.add("ass_chain", all(c["ok"] for c in chains), kmax=kmax)
    if "ass_gain" in inst.expected:
        c = chains[0]["ass"]
        gain = sorted(p for p in c[1] if p not in c[0])
        V.add("expected:ass_gain", gain == inst.expected["ass_gain"], None, kmax=2)
    if "transversal_ass_constant" in inst.expected:
        V.add("expected:transversal_ass_constant",
              all(c["transversal"] and c["constant"] for c in chains) == inst.expected["transversal_ass_constant"], kmax=kmax)
    _reg0_agreement(ideals, bounds.tmax, lin, V, payload)
    _rees_expectations(inst, ideals, bounds, V, payload)
    payload["evidence"] = _fiber_type_evidence(ideals, bounds)
    return payload


def _fiber_type_evidence(ideals, bounds) -> dict:
    """Multi-fiber type and fiber relation degrees; recorded, never judged."""
    pres = present(ideals)
    try:
        defining_ideal(pres, bound=bounds.bound, budget=bounds.budget)
        F = fiber_ring(pres, budget=bounds.budget)
    except BudgetExceeded:
        return {"multi_fiber_type": None, "fiber_relation_degrees": None, "bound": bounds.bound}
    degs = sorted(g.total_degree() for g in minimal_generators(F.gens))
    return {"multi_fiber_type": is_fiber_type(pres), "fiber_relation_degrees": degs, "bound": bounds.bound}


def check_linear_forms(inst: Instance, bounds: Bounds, V: Verdicts) -> dict:
    Ps = inst.factors()
    if not Ps or any(P.rank == 0 for P in Ps):
        raise InputError(f"{inst.name}: factors must be nonzero")
    payload: dict = {}
    lin, decs = {}, {}
    val_ok = True
    for h in fam.hvectors(len(Ps), bounds.tmax):
        factors = [P for P, k in zip(Ps, h) for _ in range(k)]
        I = fam.linforms_product(factors)
        lin[_hkey(h)] = bool(has_linear_resolution(I))
        d = fam.linforms_decompose(factors)
        decs[_hkey(h)] = {"components": [[P.to_json(), v] for P, v in d.components], "equal": d.equal}
        for P, v in d.components:
            val_ok = val_ok and v == sum(1 for Q in factors if Q.issubset(P))
    payload["linear_products"] = lin
    payload["decompositions"] = decs
    V.add("linear_products", all(lin.values()), tmax=bounds.tmax)
    V.add("decomposition", all(d["equal"] for d in decs.values()), tmax=bounds.tmax)
    V.add("valuation_matches_count", val_ok, tmax=bounds.tmax)
    tests = []
    for A, P in fam.candidate_primes(Ps):
        t = fam.gp_tests(Ps, P)
        t["A"] = list(A)
        t["prime"] = P.to_json()
        tests.append(t)
    payload["gp_tests"] = tests
    V.add("gp_lemma_consistent", all(t["consistent"] for t in tests))
    transversal = all(P.is_monomial() for P in Ps)
    if transversal:
        V.add("transversal_corollary", all(t["is_associated"] == t["connected"] for t in tests))
    full = fam.linear_sum(Ps)
    top = next(t for t in tests if t["prime"] == full.to_json())
    if "max_ideal_associated" in inst.expected:
        V.add("expected:max_ideal_associated", top["is_associated"] == inst.expected["max_ideal_associated"])
    if "gp_edgeless" in inst.expected:
        V.add("expected:gp_edgeless", (not top["edges"]) == inst.expected["gp_edgeless"])
    # open questions: when is the sum associated, and is Ass(R/I) = Ass(R/I^2)?
    ass1 = fam.linforms_ass(Ps)
    ass2 = fam.linforms_ass([P for P in Ps for _ in range(2)])
    payload["evidence"] = {
        "sum_associated": top["is_associated"],
        "ass": [P.to_json() for P in ass1],
        "ass_square": [P.to_json() for P in ass2],
        "ass_stable_k2": set(ass1) == set(ass2),
    }
    _reg0_agreement([P.forms() for P in Ps], bounds.tmax, lin, V, payload)
    return payload


def check_northeast(inst: Instance, bounds: Bounds, V: Verdicts) -> dict:
    specs = inst.specs(bounds)
    per = []
    agg = {k: True for k in ("initial", "I_decomposition", "J_decomposition", "refined", "proviso_consistent",
                             "linear_products", "sagbi", "quadratic_gb", "reg0_agreement", "jpowers")}
    seen_pairs = set()
    for spec in specs:
        n = spec.n
        entry: dict = {"S": [list(p) for p in spec.S]}
        for p in spec.S:
            if p not in seen_pairs:
                seen_pairs.add(p)
                agg["initial"] &= fam.ne_initial_check(*p, n, spec.field)
                jp = [fam.ne_jpower_decompose(*p, k, n)["equal"] for k in (1, 2)]
                agg["jpowers"] &= all(jp)
        d = fam.ne_decompose(spec)
        r = fam.ne_irredundant(spec)
        entry["e"] = d["e"]
        entry["decomposition"] = {"I_equal": d["I_equal"], "J_equal": d["J_equal"], "components": d["components"]}
        entry["refined"] = {k: r[k] for k in ("Y", "components", "equal", "proviso", "irredundant")}
        agg["I_decomposition"] &= d["I_equal"]
        agg["J_decomposition"] &= d["J_equal"]
        agg["refined"] &= r["equal"]
        agg["proviso_consistent"] &= r["consistent"]
        Is = [fam.ne_I(t, a, n, spec.field) for t, a in spec.S]
        Js = [fam.ne_diagonals(t, a, n, spec.field) for t, a in spec.S]
        lin = _linear_products(Is, bounds.tmax)
        linJ = _linear_products(Js, bounds.tmax)
        entry["linear_products"] = {"I": lin, "J": linJ}
        agg["linear_products"] &= all(lin.values()) and all(linJ.values())
        sg = _sagbi_summary(spec, bounds.budget)
        entry["sagbi"] = sg
        agg["sagbi"] &= sg["verdict"] and bool(sg["gb_lift"])
        agg["quadratic_gb"] &= bool(sg["quadratic"])
        sub = Verdicts(bounds)
        tmp: dict = {}
        _reg0_agreement(Is, bounds.tmax, lin, sub, tmp)
        entry["reg0"] = tmp["reg0_agreement"]
        agg["reg0_agreement"] &= sub.items["reg0_agreement"]["status"] == "pass"
        per.append(entry)
    nmax = max((s.n for s in specs), default=0)
    V.add("initial_is_diagonal", agg["initial"], n=nmax)
    V.add("I_decomposition", agg["I_decomposition"], n=nmax)
    V.add("J_decomposition", agg["J_decomposition"], n=nmax)
    V.add("refined_decomposition", agg["refined"], n=nmax)
    V.add("irredundant_when_proviso", agg["proviso_consistent"], n=nmax)
    V.add("J_power_decomposition", agg["jpowers"], n=nmax, k=2)
    V.add("linear_products", agg["linear_products"], n=nmax, tmax=bounds.tmax)
    V.add("sagbi_lifting", agg["sagbi"], n=nmax)
    V.add("quadratic_groebner_basis", agg["quadratic_gb"], n=nmax)
    V.add("reg0_agreement", agg["reg0_agreement"], n=nmax, bound=bounds.tmax)
    return {"specs": per}


def _sagbi_summary(spec, budget: int | None = 10**6) -> dict:
    from .sagbi import rees_sagbi_check

    res = rees_sagbi_check(spec, budget=budget)
    crit = res["initial"]
    return {
        "verdict": res["verdict"],
        "gb_lift": res["gb_lift"],
        "kernel_size": res["result"]["kernel_size"],
        "quadratic": crit["all_quadratic"],
        "linear_in_X": crit["all_linear_in_X"],
    }


def check_sagbi(inst: Instance, bounds: Bounds, V: Verdicts) -> dict:
    from .sagbi import SagbiInstance, gb_lift_check, is_sagbi

    R = inst.ring()
    order = order_from_name(inst.data.get("order", "degrevlex"), R.ngens)
    R = R.with_order(order)
    try:
        gens = [R(g) for g in inst.data["generators"]]
    except KeyError:
        raise InputError(f"{inst.name}: missing 'generators'") from None
    si = SagbiInstance(gens, order)
    res = is_sagbi(si, bounds.budget)
    payload = {
        "verdict": res["verdict"],
        "kernel_size": res["kernel_size"],
        "certificates": [{k: v for k, v in c.items() if not k.startswith("_")} for c in res["certificates"]],
    }
    if res["verdict"]:
        lift = gb_lift_check(si, res)
        payload["gb_lift"] = {"precondition": lift["precondition"], "verdict": lift["verdict"]}
    _expect(V, inst, "sagbi", res["verdict"])
    if res["verdict"]:
        V.add("gb_lift", payload["gb_lift"]["verdict"])
    return payload


BATTERIES = {
    "ideals": check_ideals,
    "polymatroidal": check_polymatroidal,
    "linear_forms": check_linear_forms,
    "northeast": check_northeast,
    "sagbi": check_sagbi,
}


def run_check(inst: Instance, bounds: Bounds) -> tuple:
    """``(verdicts, payload, seconds)`` for the full battery of ``inst``."""
    V = Verdicts(bounds)
    t = time.perf_counter()
    try:
        payload = BATTERIES[inst.kind](inst, bounds, V)
    except ParseError as exc:
        raise InputError(f"{inst.name}: {exc}") from None
    return V, payload, time.perf_counter() - t


def betti_payload(I) -> dict:
    tab = betti_ideal(I)
    return {"table": tab.to_json(), "text": tab.pretty(), "linear_resolution": bool(has_linear_resolution(I)),
            "regularity": tab.reg()}


def jsonable(x: Any):
    """Convert tuples, sets and number types into plain JSON values."""
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, str) else k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    try:
        return int(x) if int(x) == x else str(x)
    except (TypeError, ValueError):
        return str(x)


__all__ = ["BudgetExceeded", "Bounds", "Instance", "InputError", "load_instance", "run_check", "SCHEMA"]
