"""The three families with linear products: polymatroidal ideals, products of
ideals of linear forms, and northeast ideals of maximal minors.

Each family comes with its decomposition formula ``I = ⋂ P^{v_P(I)}``, the
valuations ``v_P`` and the associated-prime tests.  Decompositions are always
re-verified: monomial families by monomial intersection, the others by
comparing reduced Gröbner bases.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

from . import monideal as mi
from .groebner import PolyIdeal, colon_ideal, ideal_equal, intersect_all
from .linalg import rank as _rank
from .linalg import rref
from .monideal import MonomialIdeal
from .polyring import QQ, Field, Polynomial, Ring, degrevlex


# ---------------------------------------------------------------------------
# ideals generated by linear forms


class LinearIdeal:
    """Ideal generated by linear forms, stored as the RREF of its coefficient rows.

    The canonical form makes equality of ideals equality of row lists.
    """

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Iterable):
        self.ring = ring
        n = ring.ngens
        vecs = []
        for r in rows:
            if isinstance(r, Polynomial):
                if any(sum(m) != 1 for m in r.terms):
                    raise ValueError(f"{r} is not a linear form")
                vecs.append({m.index(1): c for m, c in r.terms.items()})
            elif isinstance(r, dict):
                vecs.append({j: mpq(c) for j, c in r.items() if c})
            else:
                r = list(r)
                if len(r) != n:
                    raise ValueError("row length differs from the number of variables")
                vecs.append({j: mpq(Fraction(c)) for j, c in enumerate(r) if c})
        self.rows = tuple(tuple(sorted(row.items())) for row in rref(vecs, ring.field))

    @classmethod
    def from_strings(cls, ring: Ring, forms: Sequence[str]) -> "LinearIdeal":
        return cls(ring, [ring(f) for f in forms])

    @classmethod
    def variables(cls, ring: Ring, idx: Iterable[int]) -> "LinearIdeal":
        return cls(ring, [{i: 1} for i in idx])

    def __eq__(self, other):
        return isinstance(other, LinearIdeal) and self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LinearIdeal({', '.join(map(str, self.forms()))})"

    @property
    def rank(self) -> int:
        return len(self.rows)

    def vectors(self) -> list:
        return [dict(r) for r in self.rows]

    def dense(self) -> list:
        out = []
        for r in self.rows:
            v = [mpq(0)] * self.ring.ngens
            for j, c in r:
                v[j] = c
            out.append(v)
        return out

    def forms(self) -> list:
        n = self.ring.ngens
        out = []
        for r in self.rows:
            terms = {}
            for j, c in r:
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = c
            out.append(Polynomial(self.ring, terms))
        return out

    def __add__(self, other: "LinearIdeal") -> "LinearIdeal":
        return LinearIdeal(self.ring, self.vectors() + other.vectors())

    def issubset(self, other: "LinearIdeal") -> bool:
        return (self + other).rank == other.rank

    def meet_rank(self, other: "LinearIdeal") -> int:
        """Dimension of the space of linear forms in ``self ∩ other``."""
        return self.rank + other.rank - (self + other).rank

    def to_poly_ideal(self) -> PolyIdeal:
        return PolyIdeal(self.ring, self.forms())

    def is_monomial(self) -> bool:
        return all(len(r) == 1 for r in self.rows)

    def to_json(self) -> list:
        return [str(f) for f in self.forms()]


def linear_sum(Ps: Sequence[LinearIdeal]) -> LinearIdeal:
    out = Ps[0]
    for P in Ps[1:]:
        out = out + P
    return out


def linforms_product(Ps: Sequence[LinearIdeal]) -> PolyIdeal:
    """``P_1 ⋯ P_w``, generated by all products of basis forms."""
    if not Ps:
        raise ValueError("empty product")
    if any(P.rank == 0 for P in Ps):
        raise ValueError("zero ideal among the factors")
    ring = Ps[0].ring
    gens = [ring.one()]
    for P in Ps:
        gens = list(dict.fromkeys(g * f for g in gens for f in P.forms()))
    return PolyIdeal(ring, gens)


def _power_of_linear(P: LinearIdeal, k: int) -> PolyIdeal:
    if k == 0:
        return PolyIdeal(P.ring, [P.ring.one()])
    return linforms_product([P] * k)


def linear_valuation(I: PolyIdeal, P: LinearIdeal, upper: int) -> int:
    """Largest ``k <= upper`` with ``I ⊆ P^k``, by binary search on Gröbner membership.

    Powers of a linear prime are primary, so ordinary and symbolic powers agree.
    """
    lo, hi = 0, upper
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if I.issubset(_power_of_linear(P, mid)):
            lo = mid
        else:
            hi = mid - 1
    return lo


def candidate_primes(Ps: Sequence[LinearIdeal]) -> list:
    """Distinct ``P_A = Σ_{i∈A} P_i`` over non-empty ``A``, with the first ``A`` producing each."""
    seen: dict = {}
    w = len(Ps)
    for r in range(1, w + 1):
        for A in itertools.combinations(range(w), r):
            P = linear_sum([Ps[i] for i in A])
            seen.setdefault(P, A)
    return [(A, P) for P, A in seen.items()]


@dataclass
class Decomposition:
    """``I = ⋂ component^exponent`` together with its verification."""

    components: list
    equal: bool
    irredundant: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def to_json(self, fmt=str) -> dict:
        return {
            "components": [[fmt(c), e] for c, e in self.components],
            "equal": self.equal,
            "irredundant": [[fmt(c), e] for c, e in self.irredundant],
            **{k: v for k, v in self.notes.items() if not k.startswith("_")},
        }


def linforms_decompose(Ps: Sequence[LinearIdeal], irredundant: bool = False) -> Decomposition:
    """Decomposition of ``P_1 ⋯ P_w`` over the primes ``P_A``, verified by Gröbner equality."""
    I = linforms_product(Ps)
    comps = []
    for A, P in candidate_primes(Ps):
        v = linear_valuation(I, P, len(Ps))
        if v > 0:
            comps.append((P, v))
    J = intersect_all([_power_of_linear(P, v) for P, v in comps])
    eq = ideal_equal(I, J)
    irr = []
    if irredundant and eq:
        irr = _prune(comps, lambda cs: ideal_equal(I, intersect_all([_power_of_linear(P, v) for P, v in cs])))
    return Decomposition(comps, eq, irr, {"_ideal": I})


def _prune(comps: list, still_equal) -> list:
    """Drop components one at a time while the intersection is unchanged."""
    keep = list(comps)
    for c in list(reversed(comps)):
        if len(keep) == 1:
            break
        trial = [d for d in keep if d is not c]
        if still_equal(trial):
            keep = trial
    return keep


# ---------------------------------------------------------------------------
# the graph G_P and associated primes


@dataclass(frozen=True)
class PGraph:
    vertices: tuple
    edges: frozenset

    def components(self) -> list:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for i, j in self.edges:
            parent[find(i)] = find(j)
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def _check_candidate(Ps, P):
    if not any(Q == P for _, Q in candidate_primes(Ps)):
        raise ValueError("P is not a sum of some of the P_i")


def gp_graph(Ps: Sequence[LinearIdeal], P: LinearIdeal) -> PGraph:
    """Vertices ``{i : P_i ⊆ P}``; ``{i,j}`` is an edge iff ``P_i ∩ P_j`` holds a nonzero linear form."""
    _check_candidate(Ps, P)
    V = tuple(i for i, Q in enumerate(Ps) if Q.issubset(P))
    E = frozenset((i, j) for i, j in itertools.combinations(V, 2) if Ps[i].meet_rank(Ps[j]) >= 1)
    return PGraph(V, E)


def split_witness(Ps: Sequence[LinearIdeal], P: LinearIdeal):
    """A bipartition ``(A, B)`` of ``V`` with ``P = P_A ⊕ P_B``, or None.

    Every ``P_i`` with ``i ∈ V`` lies in ``P_A`` or ``P_B`` by construction, and a
    direct sum has no common linear form, so this is exactly the split hypothesis.
    """
    _check_candidate(Ps, P)
    V = [i for i, Q in enumerate(Ps) if Q.issubset(P)]
    if len(V) < 2:
        return None
    first, rest = V[0], V[1:]
    for r in range(0, len(rest)):
        for extra in itertools.combinations(rest, r):
            A = (first,) + extra
            B = tuple(i for i in rest if i not in extra)
            PA = linear_sum([Ps[i] for i in A])
            PB = linear_sum([Ps[i] for i in B])
            if PA.rank + PB.rank == P.rank and (PA + PB) == P:
                return A, B
    return None


def _coordinate_change(P: LinearIdeal):
    """Matrix ``C`` such that substituting ``x = C y`` sends the forms of ``P`` to ``y_1..y_m``."""
    n = P.ring.ngens
    rows = P.dense()
    piv = {r[0][0] for r in P.rows}
    for j in range(n):
        if j not in piv:
            e = [mpq(0)] * n
            e[j] = mpq(1)
            rows.append(e)
    # invert the square matrix whose rows are the new coordinates
    aug = [list(r) + [mpq(1) if i == k else mpq(0) for k in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def is_associated(Ps: Sequence[LinearIdeal], P: LinearIdeal) -> bool:
    """Decide ``P ∈ Ass(R/P_1⋯P_w)`` by localizing at ``P``.

    After localization only the factors inside ``P`` survive.  In coordinates
    where ``P = (y_1..y_m)`` their product lives in ``K[y_1..y_m]``, and ``P`` is
    associated iff that product differs from its colon by the maximal ideal.
    """
    _check_candidate(Ps, P)
    V = [i for i, Q in enumerate(Ps) if Q.issubset(P)]
    if not V:
        return False
    m = P.rank
    C = _coordinate_change(P)
    small = Ring(tuple(f"y{i + 1}" for i in range(m)), P.ring.field, None, None, degrevlex(m))
    ys = small.gens()
    new_factors = []
    for i in V:
        forms = []
        for row in Ps[i].rows:
            # a form c·x becomes (c C)·y; only y_1..y_m can appear
            coeffs = [sum((c * C[j][k] for j, c in row), mpq(0)) for k in range(P.ring.ngens)]
            if any(coeffs[m:]):
                raise AssertionError("factor not contained in P after the coordinate change")
            f = small.zero()
            for k in range(m):
                if coeffs[k]:
                    f = f + ys[k].scale(coeffs[k])
            forms.append(f)
        new_factors.append(forms)
    gens = [small.one()]
    for forms in new_factors:
        gens = list(dict.fromkeys(g * f for g in gens for f in forms))
    I = PolyIdeal(small, gens)
    maxi = PolyIdeal(small, ys)
    return not ideal_equal(colon_ideal(I, maxi), I)


def gp_tests(Ps: Sequence[LinearIdeal], P: LinearIdeal) -> dict:
    """The two graph criteria next to the exact decision; ``consistent`` flags agreement."""
    G = gp_graph(Ps, P)
    split = split_witness(Ps, P)
    ass = is_associated(Ps, P)
    conn = G.is_connected()
    return {
        "vertices": list(G.vertices),
        "edges": sorted(G.edges),
        "connected": conn,
        "split": None if split is None else [list(split[0]), list(split[1])],
        "connected_implies_ass": (ass if conn else None),
        "split_implies_not_ass": (not ass if split is not None else None),
        "is_associated": ass,
        "consistent": (not conn or ass) and (split is None or not ass),
    }


def linforms_ass(Ps: Sequence[LinearIdeal]) -> list:
    """Associated primes of ``R/P_1⋯P_w`` among the candidates ``P_A``."""
    return [P for _, P in candidate_primes(Ps) if is_associated(Ps, P)]


# ---------------------------------------------------------------------------
# polymatroidal ideals


def _prime_vars(P) -> tuple:
    if isinstance(P, MonomialIdeal):
        if not all(sum(g) == 1 for g in P.gens):
            raise ValueError("not a monomial prime")
        return tuple(sorted(g.index(1) for g in P.gens))
    return tuple(sorted(set(P)))


def polymatroid_vP(I: MonomialIdeal, P) -> int:
    """``v_P(I)``: regularity after setting the variables outside ``P`` to 1."""
    if not mi.is_polymatroidal(I):
        raise ValueError("input is not polymatroidal")
    keep = _prime_vars(P)
    return mi.regularity(I.substitute_one(keep))


def polymatroid_decompose(I: MonomialIdeal) -> Decomposition:
    """``I = ⋂ P^{v_P}`` over monomial primes with ``v_P > 0``, plus an irredundant sublist."""
    if not mi.is_polymatroidal(I):
        raise ValueError("input is not polymatroidal")
    n = I.nvars
    comps = []
    for r in range(1, n + 1):
        for P in itertools.combinations(range(n), r):
            v = polymatroid_vP(I, P)
            if v > 0:
                comps.append((P, v))

    def inter(cs):
        return mi.intersect_all([mi.prime_power(I.ring, P, v) for P, v in cs])

    eq = inter(comps) == I
    irr = _prune(comps, lambda cs: inter(cs) == I) if eq else []
    return Decomposition(comps, eq, irr)


def polymatroid_ass_chain(I: MonomialIdeal, kmax: int = 4) -> dict:
    """``Ass(R/I^k)`` for ``k = 1..kmax`` with the chain and (transversal) stability checks."""
    if not mi.is_polymatroidal(I):
        raise ValueError("input is not polymatroidal")
    chain = [mi.associated_primes(mi.power(I, k)) for k in range(1, kmax + 1)]
    increasing = all(set(a) <= set(b) for a, b in zip(chain, chain[1:]))
    transversal = mi.is_transversal_presentable(I) is not None
    constant = all(a == chain[0] for a in chain)
    return {
        "ass": [[list(P) for P in A] for A in chain],
        "kmax": kmax,
        "increasing": increasing,
        "transversal": transversal,
        "constant": constant,
        "ok": increasing and (constant or not transversal),
    }


# ---------------------------------------------------------------------------
# northeast ideals of maximal minors


@dataclass(frozen=True)
class NortheastSpec:
    """Matrix size ``n`` and the pairs ``(t_i, a_i)`` with ``t_i + a_i <= n + 1``."""

    n: int
    S: tuple
    field: Field = QQ

    def __post_init__(self):
        S = tuple((int(t), int(a)) for t, a in self.S)
        object.__setattr__(self, "S", S)
        if self.n < 1:
            raise ValueError("n must be positive")
        for t, a in S:
            if t < 1 or a < 1 or t + a > self.n + 1:
                raise ValueError(f"pair {(t, a)} violates t, a >= 1 and t + a <= n + 1")

    @property
    def ring(self) -> Ring:
        return ne_ring(self.n, self.field)

    def to_json(self) -> dict:
        return {"n": self.n, "S": [list(p) for p in self.S]}

    @classmethod
    def from_json(cls, d, field: Field = QQ) -> "NortheastSpec":
        return cls(int(d["n"]), tuple(tuple(p) for p in d["S"]), field)


_RINGS: dict = {}


def ne_ring(n: int, field: Field = QQ) -> Ring:
    """Generic ``n x n`` matrix ring with the diagonal lex order."""
    if (n, field) not in _RINGS:
        _RINGS[(n, field)] = Ring.matrix(n, field=field)
    return _RINGS[(n, field)]


def _det(rows: list, ring: Ring) -> Polynomial:
    if len(rows) == 1:
        return rows[0][0]
    out = ring.zero()
    for j, a in enumerate(rows[0]):
        if a.is_zero():
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * _det(sub, ring)
        out = out + term if j % 2 == 0 else out - term
    return out


def ne_minors(t: int, a: int, n: int, field: Field = QQ) -> list:
    """The ``t``-minors of rows ``1..t``, columns ``a..n``, in column-combination order."""
    R = ne_ring(n, field)
    X = [[R.gen(R.matrix_index(i, j)) for j in range(1, n + 1)] for i in range(1, t + 1)]
    out = []
    for cols in itertools.combinations(range(a, n + 1), t):
        out.append(_det([[X[i][c - 1] for c in cols] for i in range(t)], R))
    return out


def ne_diagonals(t: int, a: int, n: int, field: Field = QQ) -> MonomialIdeal:
    """``J_t(a)``: the diagonal products ``x_{1 b_1} ⋯ x_{t b_t}`` with ``a <= b_1 < ... < b_t``."""
    R = ne_ring(n, field)
    gens = []
    for cols in itertools.combinations(range(a, n + 1), t):
        e = [0] * R.ngens
        for i, c in enumerate(cols, start=1):
            e[R.matrix_index(i, c)] = 1
        gens.append(tuple(e))
    return MonomialIdeal(R, gens)


def ne_I(t: int, a: int, n: int, field: Field = QQ) -> PolyIdeal:
    return PolyIdeal(ne_ring(n, field), ne_minors(t, a, n, field))


def ne_ideals(spec: NortheastSpec) -> dict:
    """``{(t, a): {"I": minors, "J": diagonals}}`` for the pairs of ``spec``."""
    f = spec.field
    return {p: {"I": ne_minors(*p, spec.n, f), "J": ne_diagonals(*p, spec.n, f)} for p in dict.fromkeys(spec.S)}


def ne_initial_check(t: int, a: int, n: int, field: Field = QQ) -> bool:
    """``ini(I_t(a)) = J_t(a)`` for the diagonal order."""
    ini = MonomialIdeal(ne_ring(n, field), ne_I(t, a, n, field).initial_monomials())
    return ini == ne_diagonals(t, a, n, field)


def ne_e(spec: NortheastSpec, u: int, b: int) -> int:
    """``e_{ub}(S) = |{i : b <= a_i and u <= t_i}|``."""
    return sum(1 for t, a in spec.S if b <= a and u <= t)


def ne_pairs(n: int) -> list:
    return [(t, a) for t in range(1, n + 1) for a in range(1, n + 2 - t)]


def ne_products(spec: NortheastSpec) -> tuple:
    """``(I_S, J_S)``."""
    n, f = spec.n, spec.field
    R = ne_ring(n, f)
    I = PolyIdeal(R, [R.one()])
    J = mi.unit_ideal(R)
    for t, a in spec.S:
        I = I * ne_I(t, a, n, f)
        J = J * ne_diagonals(t, a, n, f)
    return I, J


def _ne_intersection(pairs_exps: list, n: int, field: Field = QQ):
    I = intersect_all([ne_I(u, b, n, field) ** e for (u, b), e in pairs_exps])
    J = mi.intersect_all([mi.power(ne_diagonals(u, b, n, field), e) for (u, b), e in pairs_exps])
    return I, J


def ne_decompose(spec: NortheastSpec) -> dict:
    """``I_S = ⋂ I_u(b)^{e_ub}`` and ``J_S = ⋂ J_u(b)^{e_ub}``, both verified."""
    n = spec.n
    comps = [((u, b), ne_e(spec, u, b)) for u, b in ne_pairs(n)]
    comps = [c for c in comps if c[1] > 0]
    IS, JS = ne_products(spec)
    if not comps:
        return {"e": {}, "I_equal": True, "J_equal": True, "components": []}
    I, J = _ne_intersection(comps, n, spec.field)
    return {
        "e": {f"{u},{b}": ne_e(spec, u, b) for u, b in ne_pairs(n)},
        "components": [[list(p), e] for p, e in comps],
        "I_equal": ideal_equal(IS, I),
        "J_equal": JS == J,
    }


def ne_Y(spec: NortheastSpec) -> dict:
    """``Y`` with, for each point, the witnesses ``(u, b)`` (``(t,b), (u,a) ∈ S``, ``t<u``, ``a<b``)."""
    S = set(spec.S)
    Y: dict = {}
    for t, b in S:
        for u, a in S:
            if t < u and a < b and (t, a) not in S:
                Y.setdefault((t, a), []).append((u, b))
    return {k: sorted(v) for k, v in sorted(Y.items())}


def ne_irredundant(spec: NortheastSpec, check_irredundant: bool = True) -> dict:
    """Refined decomposition over ``S ∪ Y`` with the removal test and the proviso."""
    n = spec.n
    Y = ne_Y(spec)
    pts = sorted(set(spec.S) | set(Y))
    comps = [(p, ne_e(spec, *p)) for p in pts]
    IS, _ = ne_products(spec)
    I, _ = _ne_intersection(comps, n, spec.field)
    eq = ideal_equal(IS, I)
    proviso = all(any(u + b <= n + 1 for u, b in w) for w in Y.values())
    redundant = []
    if check_irredundant and eq and len(comps) > 1:
        for c in comps:
            rest = [d for d in comps if d is not c]
            J, _ = _ne_intersection(rest, n, spec.field)
            if ideal_equal(IS, J):
                redundant.append(list(c[0]))
    return {
        "Y": [list(p) for p in Y],
        "components": [[list(p), e] for p, e in comps],
        "equal": eq,
        "proviso": proviso,
        "redundant": redundant if check_irredundant else None,
        "irredundant": (not redundant) if check_irredundant else None,
        "consistent": (not proviso) or not redundant or not check_irredundant,
    }


def ne_jpower_decompose(u: int, b: int, k: int = 2, n: int = 3) -> dict:
    """``J_u(b)^k = ⋂_F P_F^k`` over the facet primes of the squarefree ideal ``J_u(b)``."""
    J = ne_diagonals(u, b, n)
    primes = mi.associated_primes(J)
    inter = mi.intersect_all([mi.prime_power(J.ring, P, k) for P in primes])
    R = J.ring
    return {
        "primes": [[R.variables[i] for i in P] for P in primes],
        "k": k,
        "equal": inter == mi.power(J, k),
    }


def ne_rees_presentation(spec: NortheastSpec):
    """Presentation of ``R(I_{t_1}(a_1), ..., I_{t_w}(a_w))`` over the matrix ring."""
    from .reesalg import present

    return present([ne_minors(t, a, spec.n, spec.field) for t, a in spec.S])


def ne_rees_presentation_initial(spec: NortheastSpec):
    from .reesalg import present

    return present([ne_diagonals(t, a, spec.n, spec.field) for t, a in spec.S])


# ---------------------------------------------------------------------------
# random instances


def variable_ring(n: int, field: Field = QQ) -> Ring:
    return Ring(tuple(f"x{i + 1}" for i in range(n)), field)


def random_polymatroidal(n: int, max_degree: int, rng: random.Random) -> MonomialIdeal:
    """A random polymatroidal ideal: transversal, Veronese type or principal Borel."""
    R = variable_ring(n)
    while True:
        kind = rng.choice(("transversal", "veronese", "borel"))
        d = rng.randint(1, max_degree)
        if kind == "transversal":
            I = mi.unit_ideal(R)
            for _ in range(d):
                A = rng.sample(range(n), rng.randint(1, n))
                I = I * mi.prime_ideal(R, A)
        elif kind == "veronese":
            caps = [rng.randint(0, d) for _ in range(n)]
            gens = [m for m in _monos(n, d) if all(e <= c for e, c in zip(m, caps))]
            if not gens:
                continue
            I = MonomialIdeal(R, gens)
        else:
            u = [0] * n
            for _ in range(d):
                u[rng.randrange(n)] += 1
            I = mi.principal_borel(tuple(u), R)
        if mi.is_polymatroidal(I):
            return I


def _monos(n, d):
    from .polyring import monomials_of_degree

    return list(monomials_of_degree(n, d))


def random_linear_ideal(ring: Ring, r: int, rng: random.Random, coeff: int = 3) -> LinearIdeal:
    """Rank-``r`` ideal of linear forms with small integer coefficients; redrawn until the rank is right."""
    n = ring.ngens
    while True:
        rows = [[rng.randint(-coeff, coeff) for _ in range(n)] for _ in range(r)]
        if _rank([{j: c for j, c in enumerate(row) if c} for row in rows], ring.field) == r:
            return LinearIdeal(ring, rows)


def random_linforms_instance(n: int, w: int, rng: random.Random, coordinate_prob: float = 0.3) -> list:
    """``w`` nonzero linear ideals in ``n`` variables; some are generated by variables.

    Random (non-coordinate) factors have rank below ``n``, since a full-rank one is
    just the maximal ideal again. The first factor is always a random one.
    """
    R = variable_ring(n)
    out = []
    for i in range(w):
        if i and rng.random() < coordinate_prob:
            out.append(LinearIdeal.variables(R, rng.sample(range(n), rng.randint(1, n))))
        else:
            out.append(random_linear_ideal(R, rng.randint(1, max(1, n - 1)), rng))
    return out


def random_transversal_instance(n: int, w: int, rng: random.Random) -> list:
    R = variable_ring(n)
    return [LinearIdeal.variables(R, rng.sample(range(n), rng.randint(1, n))) for _ in range(w)]


def three_general_planes(seed: int = 0) -> list:
    """Three ideals of two general linear forms each in four variables."""
    R = variable_ring(4)
    rng = random.Random(seed)
    while True:
        Ps = [random_linear_ideal(R, 2, rng) for _ in range(3)]
        # general position: pairwise sums fill the space, no common forms
        if all(P.meet_rank(Q) == 0 for P, Q in itertools.combinations(Ps, 2)) and linear_sum(Ps).rank == 4:
            return Ps


def hvectors(w: int, total: int) -> list:
    """Nonzero ``h ∈ N^w`` with ``|h| <= total``."""
    return [h for h in itertools.product(range(total + 1), repeat=w) if 0 < sum(h) <= total]
