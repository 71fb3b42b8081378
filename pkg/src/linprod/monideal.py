"""Monomial ideals: arithmetic, stability predicates, closure, decomposition, Betti numbers.

A :class:`MonomialIdeal` stores its minimal generators as exponent tuples.
Everything here is combinatorial; the only linear algebra is the reduced
homology of the upper Koszul simplicial complexes used for Betti numbers and
a small exact simplex method for Newton-polyhedron membership.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from gmpy2 import mpq

from .polyring import Polynomial, Ring, divides, mono_div, mono_lcm, mono_mul, monomials_of_degree


class MonomialIdeal:
    """Monomial ideal given by its minimal generators."""

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: Ring, gens: Iterable = ()):
        self.ring = ring
        monos = []
        for g in gens:
            if isinstance(g, str):
                g = ring(g)
            if isinstance(g, Polynomial):
                if not g.is_monomial():
                    raise ValueError(f"{g} is not a monomial")
                g = next(iter(g.terms))
            g = tuple(int(e) for e in g)
            if len(g) != ring.ngens or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
            monos.append(g)
        self.gens = _minimalize(monos, ring)
        self._hash = hash((ring.variables, tuple(self.gens)))

    # basic protocol
    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring.variables == other.ring.variables and self.gens == other.gens

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "MonomialIdeal(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"

    def __str__(self):
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"

    def __len__(self):
        return len(self.gens)

    @property
    def nvars(self) -> int:
        return self.ring.ngens

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def contains(self, m) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m):
        return self.contains(m)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def degrees(self) -> list:
        return sorted({sum(g) for g in self.gens})

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def support(self) -> set:
        return {i for g in self.gens for i, e in enumerate(g) if e}

    def lcm(self):
        out = (0,) * self.nvars
        for g in self.gens:
            out = mono_lcm(out, g)
        return out

    def to_poly_ideal(self):
        from .groebner import PolyIdeal

        J = PolyIdeal(self.ring, [self.ring.monomial(g) for g in self.gens])
        J.set_groebner(sorted(J.gens, key=lambda f: self.ring.order.key(f.lm()), reverse=True))
        return J

    def polys(self) -> list:
        return [self.ring.monomial(g) for g in self.gens]

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "generators": [self.ring.format_monomial(g) for g in self.gens]}

    @classmethod
    def from_json(cls, d) -> "MonomialIdeal":
        ring = Ring.from_json(d["ring"])
        return cls(ring, d["generators"])

    # arithmetic
    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, {mono_mul(a, b) for a in self.gens for b in other.gens})

    def __pow__(self, k: int) -> "MonomialIdeal":
        return power(self, k)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ring, {mono_lcm(a, b) for a in self.gens for b in other.gens})

    def colon(self, m) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, {tuple(max(0, x - y) for x, y in zip(g, m)) for g in self.gens})

    def substitute_one(self, keep: Iterable[int]) -> "MonomialIdeal":
        """Set every variable outside ``keep`` to 1."""
        keep = set(keep)
        return MonomialIdeal(self.ring, {tuple(e if i in keep else 0 for i, e in enumerate(g)) for g in self.gens})

    def in_degree(self, d: int) -> list:
        """All monomials of degree ``d`` lying in the ideal."""
        return [m for m in monomials_of_degree(self.nvars, d) if self.contains(m)]


def _minimalize(monos, ring: Ring) -> list:
    uniq = sorted(set(monos), key=sum)
    out = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    out.sort(key=ring.order.key, reverse=True)
    return out


def unit_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, [(0,) * ring.ngens])


def prime_ideal(ring: Ring, variables: Iterable[int]) -> MonomialIdeal:
    """The monomial prime generated by the given variable indices."""
    out = []
    for i in sorted(set(variables)):
        e = [0] * ring.ngens
        e[i] = 1
        out.append(tuple(e))
    return MonomialIdeal(ring, out)


def prime_power(ring: Ring, variables: Iterable[int], k: int) -> MonomialIdeal:
    vs = sorted(set(variables))
    if k == 0:
        return unit_ideal(ring)
    out = []
    for c in itertools.combinations_with_replacement(vs, k):
        e = [0] * ring.ngens
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return MonomialIdeal(ring, out)


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I * J


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("negative power")
    out = unit_ideal(I.ring)
    base = I
    while k:
        if k & 1:
            out = out * base
        k >>= 1
        if k:
            base = base * base
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I.intersect(J)


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    out = ideals[0]
    for J in ideals[1:]:
        out = out.intersect(J)
    return out


def colon(I: MonomialIdeal, m) -> MonomialIdeal:
    return I.colon(m)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return I + J


def multi_power(ideals: Sequence[MonomialIdeal], h: Sequence[int]) -> MonomialIdeal:
    """``I_1^{h_1} ... I_w^{h_w}``."""
    out = unit_ideal(ideals[0].ring)
    for I, k in zip(ideals, h):
        out = out * power(I, k)
    return out


# ---------------------------------------------------------------------------
# strongly stable and polymatroidal ideals


def is_strongly_stable(I: MonomialIdeal) -> bool:
    for m in I.gens:
        for j, e in enumerate(m):
            if not e:
                continue
            for i in range(j):
                s = list(m)
                s[j] -= 1
                s[i] += 1
                if not I.contains(tuple(s)):
                    return False
    return True


def principal_borel(u, ring: Ring) -> MonomialIdeal:
    """``I(u) = prod_i (X_1..X_i)^{a_i}``, the smallest strongly stable ideal containing ``u``."""
    if isinstance(u, str):
        u = next(iter(ring(u).terms))
    out = unit_ideal(ring)
    for i, a in enumerate(u):
        if a:
            out = out * prime_power(ring, range(i + 1), a)
    return out


def principal_borel_intersection(u, ring: Ring) -> MonomialIdeal:
    """``⋂_i (X_1..X_i)^{b_i}`` with ``b_i = a_1 + ... + a_i``."""
    if isinstance(u, str):
        u = next(iter(ring(u).terms))
    out = unit_ideal(ring)
    b = 0
    for i, a in enumerate(u):
        b += a
        if b:
            out = out.intersect(prime_power(ring, range(i + 1), b))
    return out


def borel_closure(monos, ring: Ring) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    out = MonomialIdeal(ring, [])
    for u in monos:
        out = out + principal_borel(u, ring)
    return out


def is_polymatroidal(I: MonomialIdeal) -> bool:
    """Equigenerated and the generators satisfy the exchange property."""
    if not I.gens or not I.is_equigenerated():
        return False
    gens = set(I.gens)
    for u in I.gens:
        for v in I.gens:
            for i in range(I.nvars):
                if u[i] <= v[i]:
                    continue
                ok = False
                for j in range(I.nvars):
                    if u[j] < v[j]:
                        w = list(u)
                        w[i] -= 1
                        w[j] += 1
                        if tuple(w) in gens:
                            ok = True
                            break
                if not ok:
                    return False
    return True


def is_transversal_presentable(I: MonomialIdeal, max_degree: int = 6):
    """Variable sets ``A_1..A_d`` with ``I = P_{A_1} ... P_{A_d}``, or None.

    Exhaustive search; inputs of degree above ``max_degree`` return None.
    """
    if not I.gens or not I.is_equigenerated():
        return None
    d = I.max_degree()
    if d > max_degree:
        return None
    if d == 0:
        return []
    res = _transversal(I, d)
    return None if res is None else [sorted(A) for A in sorted(res, key=lambda s: sorted(s))]


def _transversal(I: MonomialIdeal, d: int):
    if d == 0:
        return [] if I.is_unit() else None
    n = I.nvars
    supp = sorted(I.support())
    for r in range(1, len(supp) + 1):
        for A in itertools.combinations(supp, r):
            if not all(any(g[a] for a in A) for g in I.gens):
                continue
            cands = [w for w in monomials_of_degree(n, d - 1) if all(I.contains(_bump(w, a)) for a in A)]
            if not cands:
                continue
            J = MonomialIdeal(I.ring, cands)
            if prime_ideal(I.ring, A) * J == I:
                rest = _transversal(J, d - 1)
                if rest is not None:
                    return [set(A)] + rest
    return None


def _bump(m, i):
    e = list(m)
    e[i] += 1
    return tuple(e)


# ---------------------------------------------------------------------------
# Betti numbers


def lcm_lattice(I: MonomialIdeal) -> set:
    """All lcms of nonempty subsets of the minimal generators."""
    seen = set(I.gens)
    frontier = list(seen)
    while frontier:
        new = []
        for a in frontier:
            for g in I.gens:
                c = mono_lcm(a, g)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
        frontier = new
    return seen


def upper_koszul_complex(I: MonomialIdeal, b) -> list:
    """Faces (as tuples of variable indices) of ``{τ ⊆ supp b : x^(b-τ) ∈ I}``."""
    supp = [i for i, e in enumerate(b) if e]
    faces = []
    for r in range(len(supp) + 1):
        for tau in itertools.combinations(supp, r):
            c = list(b)
            for i in tau:
                c[i] -= 1
            if I.contains(tuple(c)):
                faces.append(tau)
    return faces


def reduced_homology(faces: Sequence[tuple]) -> dict:
    """Ranks of reduced homology over QQ: ``{dim: rank}`` (nonzero only).

    ``faces`` must be closed under taking subsets; the empty face is included
    when the complex is not void.
    """
    from .linalg import Echelon

    if not faces:
        return {}
    by_dim: dict = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(f))
    index = {dim: {f: i for i, f in enumerate(fs)} for dim, fs in by_dim.items()}
    ranks = {}
    for dim, fs in by_dim.items():
        if dim - 1 not in by_dim:
            ranks[dim] = 0
            continue
        idx = index[dim - 1]
        e = Echelon()
        for f in fs:
            col = {}
            for k in range(len(f)):
                col[idx[f[:k] + f[k + 1 :]]] = mpq(-1 if k % 2 else 1)
            e.insert(col)
        ranks[dim] = e.rank
    out = {}
    for dim, fs in by_dim.items():
        h = len(fs) - ranks.get(dim, 0) - ranks.get(dim + 1, 0)
        if h:
            out[dim] = h
    return out


def betti_multigraded(I: MonomialIdeal) -> dict:
    """``{(k, b): beta_{k,b}(I)}`` for the ideal itself (k = 0 are generators)."""
    out = {}
    for b in lcm_lattice(I):
        supp = [i for i, e in enumerate(b) if e]
        top = tuple(e - (1 if e else 0) for e in b)
        if supp and I.contains(top):
            continue  # full simplex, acyclic
        for dim, r in reduced_homology(upper_koszul_complex(I, b)).items():
            out[(dim + 1, b)] = r
    return out


def betti_upper_koszul(I: MonomialIdeal, fine: bool = False):
    """Betti table of the ideal ``I`` from upper Koszul simplicial complexes.

    The table is indexed like the ideal (``β_0`` = minimal generators).  With
    ``fine=True`` degrees are exponent vectors, otherwise total degrees.
    """
    from .linres import BettiTable

    data = betti_multigraded(I)
    if fine:
        return BettiTable(data, module="ideal")
    coarse: dict = {}
    for (k, b), r in data.items():
        key = (k, (sum(b),))
        coarse[key] = coarse.get(key, 0) + r
    return BettiTable(coarse, module="ideal")


def eliahou_kervaire_betti(I: MonomialIdeal):
    """Betti table of a strongly stable ideal: ``β_{k, deg u + k} = Σ_u C(max(u) - 1, k)``."""
    from .linres import BettiTable

    if not is_strongly_stable(I):
        raise ValueError("Eliahou–Kervaire formula needs a strongly stable ideal")
    out: dict = {}
    for u in I.gens:
        mx = max((i + 1 for i, e in enumerate(u) if e), default=0)
        du = sum(u)
        for k in range(max(mx, 1)):
            c = comb(mx - 1, k) if mx else (1 if k == 0 else 0)
            if c:
                key = (k, (du + k,))
                out[key] = out.get(key, 0) + c
    return BettiTable(out, module="ideal")


def regularity(I: MonomialIdeal) -> int:
    """Castelnuovo–Mumford regularity of the ideal (not of the quotient)."""
    if I.is_zero():
        return 0
    if is_strongly_stable(I):
        return I.max_degree()
    return betti_upper_koszul(I).reg()


# ---------------------------------------------------------------------------
# integral closure


def _simplex_feasible(A: list, b: list) -> bool:
    """Exact feasibility of ``A x = b, x >= 0`` with ``b >= 0`` (phase one, Bland's rule)."""
    m = len(A)
    nx = len(A[0]) if A else 0
    # tableau rows: [A | I_art | b]
    T = [[mpq(v) for v in A[i]] + [mpq(1 if j == i else 0) for j in range(m)] + [mpq(b[i])] for i in range(m)]
    basis = [nx + i for i in range(m)]
    ncol = nx + m
    while True:
        # reduced costs for minimizing the sum of artificials
        cost = [mpq(0)] * ncol
        for j in range(ncol):
            c = mpq(1) if j >= nx else mpq(0)
            for i in range(m):
                cb = mpq(1) if basis[i] >= nx else mpq(0)
                c -= cb * T[i][j]
            cost[j] = c
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        ratios = [(T[i][-1] / T[i][enter], basis[i], i) for i in range(m) if T[i][enter] > 0]
        if not ratios:
            break
        _, _, r = min(ratios)
        piv = T[r][enter]
        T[r] = [v / piv for v in T[r]]
        for i in range(m):
            if i != r and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * c for a, c in zip(T[i], T[r])]
        basis[r] = enter
    return sum(T[i][-1] for i in range(m) if basis[i] >= nx) == 0


def in_newton_polyhedron(a, points: Sequence) -> bool:
    """Is ``a`` in ``conv(points) + R_{>=0}^n``?"""
    if any(divides(p, a) for p in points):
        return True
    n = len(a)
    k = len(points)
    # sum_j l_j p_j + s = a, sum l_j = 1
    A = [[points[j][i] for j in range(k)] + [1 if t == i else 0 for t in range(n)] for i in range(n)]
    A.append([1] * k + [0] * n)
    return _simplex_feasible(A, list(a) + [1])


def closure_degree_bound(I: MonomialIdeal) -> int:
    """Generators of the integral closure have degree at most ``max deg + n - 1``."""
    return I.max_degree() + I.nvars - 1


def integral_closure(I: MonomialIdeal, degree_bound: int | None = None) -> MonomialIdeal:
    if I.is_zero():
        return I
    bound = closure_degree_bound(I) if degree_bound is None else degree_bound
    extra = []
    mind = min(sum(g) for g in I.gens)
    for d in range(mind, bound + 1):
        for m in monomials_of_degree(I.nvars, d):
            if not I.contains(m) and in_newton_polyhedron(m, I.gens):
                extra.append(m)
    return MonomialIdeal(I.ring, list(I.gens) + extra)


def is_integrally_closed(I: MonomialIdeal) -> bool:
    if I.is_zero():
        return True
    mind = min(sum(g) for g in I.gens)
    for d in range(mind, closure_degree_bound(I) + 1):
        for m in monomials_of_degree(I.nvars, d):
            if not I.contains(m) and in_newton_polyhedron(m, I.gens):
                return False
    return True


# ---------------------------------------------------------------------------
# primary decomposition


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """Irredundant irreducible components, each generated by pure powers."""
    if I.is_unit():
        return []
    comps = set()
    stack = [tuple(I.gens)]
    seen = set()
    while stack:
        gens = stack.pop()
        if gens in seen:
            continue
        seen.add(gens)
        split = None
        for g in gens:
            supp = [i for i, e in enumerate(g) if e]
            if len(supp) > 1:
                split = (g, supp[0])
                break
        if split is None:
            comps.add(gens)
            continue
        g, i = split
        pure = [0] * I.nvars
        pure[i] = g[i]
        rest = list(g)
        rest[i] = 0
        for extra in (tuple(pure), tuple(rest)):
            J = MonomialIdeal(I.ring, list(gens) + [extra])
            stack.append(tuple(J.gens))
    ideals = [MonomialIdeal(I.ring, c) for c in comps]
    ideals = [J for J in ideals if not J.is_unit()]
    ideals = sorted(set(ideals), key=lambda J: (len(J.gens), J.gens))
    out = []
    for J in ideals:
        if not any(K.issubset(J) for K in out):
            out = [K for K in out if not J.issubset(K)] + [J]
    return out


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(I.ring, {tuple(1 if e else 0 for e in g) for g in I.gens})


def prime_of(I: MonomialIdeal) -> frozenset:
    """Variables of the radical of an irreducible (pure power) ideal."""
    return frozenset(i for g in I.gens for i, e in enumerate(g) if e)


def primary_decomposition_monomial(I: MonomialIdeal) -> list:
    """Irredundant primary decomposition as ``[(prime variable set, primary component)]``.

    Irreducible components are grouped by radical and intersected.
    """
    groups: dict = {}
    for J in irreducible_decomposition(I):
        groups.setdefault(prime_of(J), []).append(J)
    out = [(P, intersect_all(comps)) for P, comps in groups.items()]
    out.sort(key=lambda t: (len(t[0]), sorted(t[0])))
    return out


def associated_primes(I: MonomialIdeal) -> list:
    """Associated primes of ``R/I`` as sorted tuples of variable indices."""
    return sorted({tuple(sorted(prime_of(J))) for J in irreducible_decomposition(I)}, key=lambda t: (len(t), t))


# ---------------------------------------------------------------------------
# Hilbert series


class HilbertSeries:
    """``numerator(t) / (1 - t)^n`` for ``R/I`` with ``n`` variables."""

    def __init__(self, numerator: Sequence[int], n: int):
        num = list(numerator)
        while len(num) > 1 and num[-1] == 0:
            num.pop()
        self.numerator = num
        self.n = n

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and (self.numerator, self.n) == (other.numerator, other.n)

    def __repr__(self):
        return f"HilbertSeries({self.numerator}, n={self.n})"

    def reduced(self):
        """``(h, dim)``: the h-polynomial after cancelling ``(1 - t)`` factors and the Krull dimension."""
        h = list(self.numerator)
        d = self.n
        while d > 0 and h and sum(h) == 0:
            # divide by (1 - t)
            q = []
            acc = 0
            for c in h[:-1]:
                acc += c
                q.append(acc)
            h = q or [0]
            d -= 1
        return h, d

    def h_polynomial(self) -> list:
        return self.reduced()[0]

    def dimension(self) -> int:
        return self.reduced()[1]

    def hilbert_function(self, d: int) -> int:
        return sum(c * comb(d - i + self.n - 1, self.n - 1) for i, c in enumerate(self.numerator) if i <= d) if self.n else (
            self.numerator[d] if d < len(self.numerator) else 0
        )


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _hs_numerator(gens: tuple, n: int, memo: dict) -> list:
    if gens in memo:
        return memo[gens]
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    # coprime generators: product formula
    used = [0] * n
    coprime = True
    for g in gens:
        for i, e in enumerate(g):
            if e:
                if used[i]:
                    coprime = False
                used[i] = 1
    if coprime:
        out = [1]
        for g in gens:
            out = _poly_mul(out, [1] + [0] * (sum(g) - 1) + [-1])
        memo[gens] = out
        return out
    # pivot on the most frequent variable of a non-linear generator
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    i = max(range(n), key=lambda j: counts[j])
    g = next(g for g in gens if g[i])
    p = [0] * n
    p[i] = 1
    p = tuple(p)
    plus = _min_gens(list(gens) + [p])
    col = _min_gens([tuple(max(0, x - y) for x, y in zip(h, p)) for h in gens])
    a = _hs_numerator(plus, n, memo)
    b = _hs_numerator(col, n, memo)
    out = _poly_add(a, [0] + b)
    memo[gens] = out
    return out


def _min_gens(monos) -> tuple:
    uniq = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in uniq:
        if not any(divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def hilbert_series(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of ``R/I`` (standard grading) by the pivot recursion."""
    num = _hs_numerator(_min_gens(I.gens), I.nvars, {})
    return HilbertSeries(num, I.nvars)


def hilbert_function_bruteforce(I: MonomialIdeal, d: int) -> int:
    return sum(1 for m in monomials_of_degree(I.nvars, d) if not I.contains(m))


# ---------------------------------------------------------------------------
# linear quotients


def _colon_is_linear(prev: list, u) -> tuple | None:
    """Variables generating ``(prev) : u`` if that colon is generated by variables."""
    if not prev:
        return ()
    quots = {tuple(max(0, x - y) for x, y in zip(v, u)) for v in prev}
    lin = {q for q in quots if sum(q) == 1}
    for q in quots:
        if sum(q) != 1 and not any(divides(l, q) for l in lin):
            return None
    return tuple(sorted(next(i for i, e in enumerate(l) if e) for l in lin))


def linear_quotients(I: MonomialIdeal):
    """An ordering of the generators with linear quotients, as ``[(u, colon variables)]``, or None.

    Tries the generator orders that work for the families handled here
    (revlex and lex, both directions, plus the ring order).
    """
    from .polyring import degrevlex, lex

    if not I.gens:
        return []
    n = I.nvars
    keys = [
        I.ring.order.key,
        lex(n).key,
        degrevlex(n).key,
        lambda m: tuple(reversed(m)),
    ]
    for key in keys:
        for rev in (True, False):
            gens = sorted(I.gens, key=key, reverse=rev)
            out = []
            for i, u in enumerate(gens):
                c = _colon_is_linear(gens[:i], u)
                if c is None:
                    break
                out.append((u, c))
            else:
                return out
    return None


def betti_from_linear_quotients(I: MonomialIdeal, lq=None):
    """Betti table of an equigenerated ideal with linear quotients: ``β_k = Σ_i C(r_i, k)``."""
    from .linres import BettiTable

    lq = linear_quotients(I) if lq is None else lq
    if lq is None or not I.is_equigenerated():
        raise ValueError("ideal has no equigenerated linear-quotient order")
    d = I.max_degree()
    out: dict = {}
    for _, c in lq:
        for k in range(len(c) + 1):
            key = (k, (d + k,))
            out[key] = out.get(key, 0) + comb(len(c), k)
    return BettiTable(out, module="ideal")
