"""Buchberger's algorithm and the ideal operations built on it.

Reduced Gröbner bases are computed with the normal selection strategy and the
Gebauer–Möller installation of Buchberger's coprime and chain criteria.
Every computation runs against a step budget (reduction steps); exhausting it
raises :class:`BudgetExceeded` carrying a checkpoint that can be passed back
as ``resume=`` to continue.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, Sequence

from .polyring import (
    InhomogeneousError,
    MonomialOrder,
    Polynomial,
    Ring,
    RingMismatch,
    block_order,
    degrevlex,
    divides,
    lex,
    weight_order,
    mono_div,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
    multidegree,
)

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """A computation ran out of reduction steps.

    ``checkpoint`` resumes a Buchberger run; ``partial`` holds the basis
    elements found so far.
    """

    def __init__(self, steps: int, partial=None, checkpoint=None, what="groebner"):
        self.steps = steps
        self.partial = partial or []
        self.checkpoint = checkpoint
        self.what = what
        super().__init__(f"{what}: step budget of {steps} reduction steps exhausted")


class _Counter:
    __slots__ = ("steps", "limit")

    def __init__(self, limit):
        self.steps = 0
        self.limit = limit

    def tick(self):
        self.steps += 1
        if self.limit is not None and self.steps > self.limit:
            raise _OutOfSteps


class _OutOfSteps(Exception):
    pass


def _mask(m) -> int:
    b = 0
    for i, e in enumerate(m):
        if e:
            b |= 1 << i
    return b


class _Elem:
    """A monic basis element prepared for reduction."""

    __slots__ = ("lm", "mask", "tail", "poly", "deg")

    def __init__(self, poly: Polynomial, lm):
        self.poly = poly
        self.lm = lm
        self.mask = _mask(lm)
        self.deg = sum(lm)
        self.tail = [(m, c) for m, c in poly.terms.items() if m != lm]


def _normal_form(terms: dict, reducers: list, key, p, counter: _Counter | None) -> dict:
    """Full reduction of ``terms`` by monic ``reducers`` (``_Elem``)."""
    acc = dict(terms)
    heap = [(tuple(-x for x in key(m)), m) for m in acc]
    heapq.heapify(heap)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = acc.pop(m, 0)
        if not c:
            continue
        mm = _mask(m)
        red = None
        for r in reducers:
            if r.mask & ~mm == 0 and divides(r.lm, m):
                red = r
                break
        if red is None:
            rem[m] = c
            continue
        if counter is not None:
            counter.tick()
        q = mono_div(m, red.lm)
        for tm, tc in red.tail:
            nm = tuple(x + y for x, y in zip(tm, q))
            old = acc.get(nm)
            v = (0 if old is None else old) - c * tc
            if p:
                v %= p
            if v:
                acc[nm] = v
                if old is None:
                    heapq.heappush(heap, (tuple(-x for x in key(nm)), nm))
            else:
                acc[nm] = 0
    return rem


def _monic(ring: Ring, terms: dict, lm) -> Polynomial:
    p = ring.field.p
    inv = ring.field.inv(terms[lm])
    if inv == 1:
        return Polynomial(ring, terms, False)
    return Polynomial(ring, {m: (c * inv % p if p else c * inv) for m, c in terms.items()}, False)


def _spoly_terms(a: _Elem, b: _Elem, p) -> dict:
    L = mono_lcm(a.lm, b.lm)
    qa = mono_div(L, a.lm)
    qb = mono_div(L, b.lm)
    t: dict = {}
    for m, c in a.tail:
        t[mono_mul(m, qa)] = c
    for m, c in b.tail:
        nm = mono_mul(m, qb)
        v = t.get(nm, 0) - c
        if p:
            v %= p
        if v:
            t[nm] = v
        else:
            t.pop(nm, None)
    return t


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    budget: int | None = DEFAULT_BUDGET,
    resume=None,
) -> list:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    The result is autoreduced, monic, and sorted by leading monomial
    (descending).  Raises :class:`BudgetExceeded` past ``budget`` steps.
    """
    gens = [g for g in gens if not g.is_zero()]
    if resume is not None:
        ring = resume["ring"]
        order = resume["order"]
    else:
        if not gens:
            return []
        ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatch("generators live in different rings")
    order = order or ring.order
    key = order.key
    p = ring.field.p
    counter = _Counter(budget)

    if resume is not None:
        elems, G, B = resume["elems"], set(resume["G"]), set(resume["B"])
        pending = list(resume.get("pending", []))
    else:
        elems, G, B = [], set(), set()
        pending = sorted(gens, key=lambda f: (f.total_degree(), len(f.terms)))

    def lcm_of(pair):
        return mono_lcm(elems[pair[0]].lm, elems[pair[1]].lm)

    def add(poly):
        lm = max(poly.terms, key=key)
        e = _Elem(_monic(ring, poly.terms, lm), lm)
        elems.append(e)
        ih = len(elems) - 1
        nonlocal G, B
        G, B = _update(elems, G, B, ih)

    try:
        while pending:
            f = pending.pop(0)
            r = _normal_form(f.terms, [elems[i] for i in G], key, p, counter)
            if r:
                add(Polynomial(ring, r, False))
        # normal selection strategy through a lazy heap: pairs dropped by the
        # Gebauer-Moeller update stay in the heap and are skipped on pop
        heap: list = []
        queued: set = set()

        def enqueue():
            for pr in B:
                if pr not in queued:
                    queued.add(pr)
                    m = lcm_of(pr)
                    heapq.heappush(heap, (sum(m), key(m), pr))

        enqueue()
        while B:
            pair = heapq.heappop(heap)[2]
            if pair not in B:
                continue
            B.discard(pair)
            counter.tick()
            s = _spoly_terms(elems[pair[0]], elems[pair[1]], p)
            if not s:
                continue
            r = _normal_form(s, [elems[i] for i in G], key, p, counter)
            if r:
                add(Polynomial(ring, r, False))
                enqueue()
    except _OutOfSteps:
        partial = [elems[i].poly for i in sorted(G)]
        ck = {"ring": ring, "order": order, "elems": elems, "G": set(G), "B": set(B), "pending": pending}
        raise BudgetExceeded(budget, partial, ck) from None

    return _interreduce([elems[i] for i in G], ring, key, p)


def _update(elems, G, B, ih):
    """Gebauer-Moeller update after adding ``elems[ih]``.

    New pairs ``(h, g)`` are grouped by lcm; only lcms that are minimal under
    divisibility survive, one pair per lcm, and a group containing a coprime
    pair is dropped altogether (product criterion).
    """
    h = elems[ih]
    mh, maskh = h.lm, h.mask
    groups: dict = {}
    for ig in G:
        groups.setdefault(mono_lcm(mh, elems[ig].lm), []).append(ig)
    minimal = []
    for L in sorted(groups, key=sum):
        mL = _mask(L)
        dL = sum(L)
        if not any(d < dL and m & ~mL == 0 and divides(M, L) for M, m, d in minimal):
            minimal.append((L, mL, dL))
    E = set()
    for L, _, _ in minimal:
        igs = groups[L]
        if not any(elems[ig].mask & maskh == 0 for ig in igs):
            E.add((ih, min(igs)))
    B_new = set()
    for pr in B:
        a, b = elems[pr[0]].lm, elems[pr[1]].lm
        l12 = mono_lcm(a, b)
        if not divides(mh, l12) or mono_lcm(a, mh) == l12 or mono_lcm(b, mh) == l12:
            B_new.add(pr)
    B_new |= E
    G_new = {ig for ig in G if not (maskh & ~elems[ig].mask == 0 and divides(mh, elems[ig].lm))}
    G_new.add(ih)
    return G_new, B_new


def _interreduce(basis: list, ring: Ring, key, p) -> list:
    basis = sorted(basis, key=lambda e: key(e.lm))
    out = []
    for i, e in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        tail = _normal_form(dict(e.tail), others, key, p, None)
        tail[e.lm] = ring.field.coerce(1)
        out.append(Polynomial(ring, tail, False))
    out.sort(key=lambda f: key(max(f.terms, key=key)), reverse=True)
    return out


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on full division by ``basis`` (monic-normalized internally)."""
    order = order or f.ring.order
    key = order.key
    reducers = []
    for g in basis:
        if g.is_zero():
            continue
        lm = max(g.terms, key=key)
        reducers.append(_Elem(_monic(f.ring, g.terms, lm), lm))
    return Polynomial(f.ring, _normal_form(f.terms, reducers, key, f.ring.field.p, None), False)


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Division algorithm with quotients: ``f = sum q_i g_i + r``."""
    order = order or f.ring.order
    key = order.key
    ring = f.ring
    fld = ring.field
    lms = [max(g.terms, key=key) for g in divisors]
    lcs_inv = [fld.inv(g.terms[m]) for g, m in zip(divisors, lms)]
    quots = [dict() for _ in divisors]
    rem = {}
    h = Polynomial(ring, dict(f.terms), False)
    while h.terms:
        m = max(h.terms, key=key)
        c = h.terms[m]
        for i, lm in enumerate(lms):
            if divides(lm, m):
                q = mono_div(m, lm)
                a = c * lcs_inv[i]
                if fld.p:
                    a %= fld.p
                quots[i][q] = quots[i].get(q, 0) + a
                h = h - divisors[i].mul_term(q, a)
                break
        else:
            rem[m] = c
            h = Polynomial(ring, {k: v for k, v in h.terms.items() if k != m}, False)
    return [Polynomial(ring, q) for q in quots], Polynomial(ring, rem, False)


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    (q,), r = divide(f, [g])
    if not r.is_zero():
        raise ValueError(f"{g} does not divide {f}")
    return q


# ---------------------------------------------------------------------------
# ideals


class PolyIdeal:
    """Ideal of a polynomial ring given by generators; Gröbner bases cached per order."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial | str] = ()):
        self.ring = ring
        out = []
        for g in gens:
            if isinstance(g, str):
                g = ring(g)
            if g.ring != ring:
                raise RingMismatch("generator from a different ring")
            if not g.is_zero():
                out.append(g)
        self.gens = out
        self._gb: dict = {}

    def __repr__(self):
        return f"PolyIdeal({[str(g) for g in self.gens]})"

    def groebner(self, order: MonomialOrder | None = None, budget: int | None = DEFAULT_BUDGET) -> list:
        order = order or self.ring.order
        if order not in self._gb:
            self._gb[order] = buchberger(self.gens, order, budget)
        return self._gb[order]

    def set_groebner(self, basis: list, order: MonomialOrder | None = None):
        """Install a basis already known to be the reduced Gröbner basis."""
        self._gb[order or self.ring.order] = list(basis)

    def initial_monomials(self, order: MonomialOrder | None = None) -> list:
        order = order or self.ring.order
        return [max(g.terms, key=order.key) for g in self.groebner(order)]

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        if f.is_zero():
            return True
        return normal_form(f, self.groebner(order), order).is_zero()

    def __contains__(self, f):
        return self.contains(f)

    def issubset(self, other: "PolyIdeal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __add__(self, other: "PolyIdeal") -> "PolyIdeal":
        _same(self, other)
        return PolyIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "PolyIdeal") -> "PolyIdeal":
        _same(self, other)
        prods = {}
        for f in self.gens:
            for g in other.gens:
                h = f * g
                prods[h] = None
        return PolyIdeal(self.ring, list(prods))

    def __pow__(self, k: int) -> "PolyIdeal":
        out = PolyIdeal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def generator_degrees(self) -> list:
        return sorted(g.total_degree() for g in self.gens)

    def minimal_generators(self) -> list:
        """A minimal homogeneous generating set (degree-by-degree linear algebra)."""
        return minimal_generators(self.gens)


def _same(I, J):
    if I.ring != J.ring:
        raise RingMismatch("ideals live in different rings")


def as_ideal(x, ring: Ring | None = None) -> PolyIdeal:
    if isinstance(x, PolyIdeal):
        return x
    if hasattr(x, "to_poly_ideal"):
        return x.to_poly_ideal()
    return PolyIdeal(ring, list(x))


def ideal_equal(I: PolyIdeal, J: PolyIdeal, order: MonomialOrder | None = None) -> bool:
    """True iff the reduced Gröbner bases coincide."""
    I, J = as_ideal(I), as_ideal(J)
    _same(I, J)
    return I.groebner(order) == J.groebner(order)


# ---------------------------------------------------------------------------
# elimination and ideal operations


def _embed(f: Polynomial, ring: Ring, offset: int, width: int) -> Polynomial:
    pre = (0,) * offset
    post = (0,) * (ring.ngens - offset - width)
    return Polynomial(ring, {pre + m + post: c for m, c in f.terms.items()}, False)


def _restrict(f: Polynomial, ring: Ring, offset: int) -> Polynomial:
    w = ring.ngens
    return Polynomial(ring, {m[offset : offset + w]: c for m, c in f.terms.items()}, False)


def eliminate(I: PolyIdeal, k: int, budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    """Eliminate the first ``k`` variables of ``I.ring``; result lives in the remaining ones.

    Uses the block order (degrevlex on the first block) >> (ring order on the rest).
    """
    ring = I.ring
    rest = Ring(ring.variables[k:], ring.field, None, None, _tail_order(ring, k))
    order = block_order([degrevlex(k), rest.order])
    gb = I.groebner(order, budget)
    keep = [_restrict(g, rest, k) for g in gb if all(not any(m[:k]) for m in g.terms)]
    out = PolyIdeal(rest, keep)
    out.set_groebner(sorted(keep, key=lambda f: rest.order.key(f.lm()), reverse=True))
    return out


def _tail_order(ring: Ring, k: int) -> MonomialOrder:
    return degrevlex(ring.ngens - k) if ring.order.name != "lex" else lex(ring.ngens - k)


def _with_aux(ring: Ring, names: Sequence[str]) -> Ring:
    k = len(names)
    order = block_order([degrevlex(k), ring.order])
    return Ring(tuple(names) + ring.variables, ring.field, None, None, order)


def _fresh(ring: Ring, base: str, k: int = 1) -> list:
    out = []
    i = 0
    while len(out) < k:
        name = f"{base}{i}" if (k > 1 or i) else base
        if name not in ring.variables:
            out.append(name)
        i += 1
    return out


def intersect(I: PolyIdeal, J: PolyIdeal, budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    """``I ∩ J`` by eliminating ``t`` from ``t I + (1 - t) J``."""
    I, J = as_ideal(I), as_ideal(J)
    _same(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return PolyIdeal(ring, [])
    big = _with_aux(ring, _fresh(ring, "t"))
    t = big.gen(0)
    gens = [t * _embed(f, big, 1, ring.ngens) for f in I.gens]
    gens += [(big.one() - t) * _embed(g, big, 1, ring.ngens) for g in J.gens]
    gb = buchberger(gens, big.order, budget)
    keep = [_restrict(g, ring, 1) for g in gb if all(m[0] == 0 for m in g.terms)]
    out = PolyIdeal(ring, keep)
    if ring.order == _tail_order_full(ring):
        out.set_groebner(sorted(keep, key=lambda f: ring.order.key(f.lm()), reverse=True))
    return out


def _tail_order_full(ring):
    return ring.order


def intersect_all(ideals: Sequence[PolyIdeal], budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    ideals = list(ideals)
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J, budget)
    return out


def colon(I: PolyIdeal, f: Polynomial, budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    """``I : f`` via ``(I ∩ (f)) / f``."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    K = intersect(I, PolyIdeal(I.ring, [f]), budget)
    return PolyIdeal(I.ring, [divide_exact(g, f) for g in K.gens])


def colon_ideal(I: PolyIdeal, J: PolyIdeal, budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    _same(I, J)
    parts = [colon(I, g, budget) for g in J.gens]
    if not parts:
        return PolyIdeal(I.ring, [I.ring.one()])
    return intersect_all(parts, budget)


def saturate(I: PolyIdeal, J: PolyIdeal, budget: int | None = DEFAULT_BUDGET, max_iter: int = 64) -> PolyIdeal:
    """``I : J^∞``, iterating ``K -> K : J`` until it stabilizes."""
    K = I
    for _ in range(max_iter):
        K2 = colon_ideal(K, J, budget)
        if ideal_equal(K2, K):
            return K2
        K = K2
    raise RuntimeError("saturation did not stabilize")


# ---------------------------------------------------------------------------
# kernels of ring maps


def kernel_of_map(
    images: Sequence[Polynomial],
    source: Ring | None = None,
    budget: int | None = DEFAULT_BUDGET,
) -> PolyIdeal:
    """Defining ideal of ``K[f_1..f_m]``: kernel of ``Z_i -> images[i]``.

    Computed by eliminating the target variables from the graph ideal
    ``(Z_i - f_i)`` under a block order.
    """
    if not images:
        raise ValueError("no images")
    target = images[0].ring
    m = len(images)
    if source is None:
        source = Ring(tuple(f"Z{i+1}" for i in range(m)), target.field)
    if source.ngens != m:
        raise ValueError("source ring must have one variable per image")
    names = list(target.variables)
    clash = set(names) & set(source.variables)
    if clash:
        names = [f"{v}_t" for v in names]
    big = Ring(tuple(names) + source.variables, target.field, None, None,
               block_order([degrevlex(target.ngens), source.order]))
    gens = []
    for i, f in enumerate(images):
        z = big.gen(target.ngens + i)
        gens.append(z - _embed(f, big, 0, target.ngens))
    gb = buchberger(gens, big.order, budget)
    n = target.ngens
    keep = [_restrict(g, source, n) for g in gb if all(not any(mm[:n]) for mm in g.terms)]
    out = PolyIdeal(source, keep)
    out.set_groebner(sorted(keep, key=lambda f: source.order.key(f.lm()), reverse=True))
    return out


def map_polynomial(f: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    return f.subs(images, images[0].ring)


# ---------------------------------------------------------------------------
# homogeneous linear algebra helpers


def homogeneous_components(f: Polynomial, grading=None) -> dict:
    out: dict = {}
    for m, c in f.terms.items():
        d = f.ring.degree_of(m) if grading is None else tuple(
            sum(e * g[k] for e, g in zip(m, grading)) for k in range(len(grading[0]))
        )
        out.setdefault(d, {})[m] = c
    return {d: Polynomial(f.ring, t, False) for d, t in out.items()}


def minimal_generators(gens: Sequence[Polynomial]) -> list:
    """Minimal generators of a homogeneous ideal, picked from ``gens``.

    Processes degrees upward; a generator is kept iff it is not in the span of
    ``R_1``-multiples of what was kept before plus same-degree kept ones.
    """
    from .linalg import Echelon

    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        multidegree(g)
    by_deg: dict = {}
    for g in gens:
        by_deg.setdefault(g.total_degree(), []).append(g)
    kept: list = []
    for d in sorted(by_deg):
        span = Echelon(ring.field)
        for h in kept:
            e = d - h.total_degree()
            for mono in monomials_of_degree(ring.ngens, e):
                span.insert(h.mul_term(mono).terms)
        for g in by_deg[d]:
            if span.insert(g.terms):
                kept.append(g)
    return kept


# ---------------------------------------------------------------------------
# syzygies (Schreyer)


def groebner_with_cofactors(gens: Sequence[Polynomial], order: MonomialOrder | None = None):
    """Reduced Gröbner basis ``G`` with a matrix ``A`` such that ``G[j] = sum_i A[j][i] gens[i]``.

    Straightforward tracked Buchberger (no pair criteria); intended for the
    small inputs of syzygy computations.
    """
    gens = list(gens)
    ring = gens[0].ring
    order = order or ring.order
    key = order.key
    r = len(gens)
    zero = ring.zero()
    one = ring.one()

    def unit(i):
        return [one if j == i else zero for j in range(r)]

    basis: list = []  # (poly, cofactors)

    def reduce_tracked(f, cof):
        f = Polynomial(ring, dict(f.terms), False)
        cof = list(cof)
        rem_terms = {}
        while f.terms:
            m = max(f.terms, key=key)
            c = f.terms[m]
            for g, gc in basis:
                lm = max(g.terms, key=key)
                if divides(lm, m):
                    q = mono_div(m, lm)
                    a = c * ring.field.inv(g.terms[lm])
                    f = f - g.mul_term(q, a)
                    cof = [x - y.mul_term(q, a) for x, y in zip(cof, gc)]
                    break
            else:
                rem_terms[m] = c
                f = Polynomial(ring, {k: v for k, v in f.terms.items() if k != m}, False)
        return Polynomial(ring, rem_terms, False), cof

    for i, g in enumerate(gens):
        if g.is_zero():
            continue
        h, cof = reduce_tracked(g, unit(i))
        if not h.is_zero():
            basis.append((h, cof))
    pairs = list(itertools.combinations(range(len(basis)), 2))
    while pairs:
        i, j = pairs.pop(0)
        (f, cf), (g, cg) = basis[i], basis[j]
        lf, lg = max(f.terms, key=key), max(g.terms, key=key)
        if _coprime(lf, lg):
            continue
        L = mono_lcm(lf, lg)
        af = ring.field.inv(f.terms[lf])
        ag = ring.field.inv(g.terms[lg])
        s = f.mul_term(mono_div(L, lf), af) - g.mul_term(mono_div(L, lg), ag)
        scof = [x.mul_term(mono_div(L, lf), af) - y.mul_term(mono_div(L, lg), ag) for x, y in zip(cf, cg)]
        h, hcof = reduce_tracked(s, scof)
        if not h.is_zero():
            basis.append((h, hcof))
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # express the reduced basis through the tracked one
    tracked = [f for f, _ in basis]
    G = buchberger(gens, order, None)
    A = []
    for g in G:
        quots, rem = divide(g, tracked, order)
        cof = [zero] * r
        for q, (_, ct) in zip(quots, basis):
            if q.is_zero():
                continue
            cof = [x + q * y for x, y in zip(cof, ct)]
        A.append(cof)
    return G, A


def syzygies(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> list:
    """Generators of the syzygy module of ``gens`` (vectors of polynomials).

    Schreyer: the S-pair relations of a Gröbner basis ``G`` generate ``Syz(G)``;
    they are pulled back along ``G = A·F`` and completed by the columns of
    ``I - A·B`` where ``F = B·G``.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatch("generators live in different rings")
        multidegree(g)
    order = order or ring.order
    key = order.key
    r = len(gens)
    nz = [i for i, g in enumerate(gens) if not g.is_zero()]
    zero = ring.zero()
    out = []
    for i in range(r):
        if gens[i].is_zero():
            v = [zero] * r
            v[i] = ring.one()
            out.append(v)
    if not nz:
        return out
    G, A = groebner_with_cofactors([gens[i] for i in nz], order)
    s = len(G)
    lms = [max(g.terms, key=key) for g in G]
    sub = [gens[i] for i in nz]
    rr = len(sub)
    syzG = []
    for i, j in itertools.combinations(range(s), 2):
        L = mono_lcm(lms[i], lms[j])
        qi, qj = mono_div(L, lms[i]), mono_div(L, lms[j])
        sp = G[i].mul_term(qi) - G[j].mul_term(qj)
        quots, rem = divide(sp, G, order)
        assert rem.is_zero()
        vec = [zero] * s
        vec[i] = vec[i] + ring.monomial(qi)
        vec[j] = vec[j] - ring.monomial(qj)
        for k in range(s):
            vec[k] = vec[k] - quots[k]
        syzG.append(vec)
    # pull back: F-syzygy = A^T applied to G-syzygy
    for v in syzG:
        w = [zero] * rr
        for k in range(s):
            if v[k].is_zero():
                continue
            for i in range(rr):
                if not A[k][i].is_zero():
                    w[i] = w[i] + v[k] * A[k][i]
        if any(not x.is_zero() for x in w):
            out.append(_lift(w, nz, r, zero))
    # F = B G: each f_i reduces to zero by G
    for i in range(rr):
        quots, rem = divide(sub[i], G, order)
        w = [zero] * rr
        w[i] = ring.one()
        for k in range(s):
            if quots[k].is_zero():
                continue
            for l in range(rr):
                if not A[k][l].is_zero():
                    w[l] = w[l] - quots[k] * A[k][l]
        if any(not x.is_zero() for x in w):
            out.append(_lift(w, nz, r, zero))
    return out


def _lift(w, nz, r, zero):
    v = [zero] * r
    for a, i in enumerate(nz):
        v[i] = w[a]
    return v


def is_syzygy(vec: Sequence[Polynomial], gens: Sequence[Polynomial]) -> bool:
    acc = gens[0].ring.zero()
    for a, g in zip(vec, gens):
        acc = acc + a * g
    return acc.is_zero()


# ---------------------------------------------------------------------------
# fine gradings and minimal free resolutions


def torus_grading(polys: Sequence[Polynomial], nvars: int | None = None) -> list:
    """Integral weight rows ``W`` (one per grading coordinate) making every input homogeneous.

    This is a lattice basis (up to scaling) of the vectors orthogonal to all
    term differences, i.e. the finest torus grading the polynomials respect.
    Returns a list of per-variable degree vectors.
    """
    from fractions import Fraction
    from math import lcm

    from .linalg import kernel

    if nvars is None:
        nvars = polys[0].ring.ngens
    diffs = []
    for f in polys:
        ms = list(f.terms)
        for m in ms[1:]:
            diffs.append(tuple(x - y for x, y in zip(m, ms[0])))
    cols = [{r: d[j] for r, d in enumerate(diffs) if d[j]} for j in range(nvars)]
    rels = kernel(cols)
    rows = []
    for rel in rels:
        den = lcm(*[Fraction(int(v.numerator), int(v.denominator)).denominator for v in rel.values()])
        rows.append([int(rel.get(j, 0) * den) for j in range(nvars)])
    return [tuple(r[j] for r in rows) for j in range(nvars)]


def _wdeg(mono, W) -> tuple:
    if not W or not W[0]:
        return ()
    k = len(W[0])
    out = [0] * k
    for i, e in enumerate(mono):
        if e:
            w = W[i]
            for t in range(k):
                out[t] += e * w[t]
    return tuple(out)


class _MonoBuckets:
    """Monomials of each total degree bucketed by fine degree (cached)."""

    def __init__(self, nvars, W):
        self.nvars = nvars
        self.W = W
        self.cache: dict = {}

    def get(self, d: int, wdeg: tuple) -> list:
        if d < 0:
            return []
        if d not in self.cache:
            b: dict = {}
            for m in monomials_of_degree(self.nvars, d):
                b.setdefault(_wdeg(m, self.W), []).append(m)
            self.cache[d] = b
        return self.cache[d].get(wdeg, [])


class FreeResolution:
    """Minimal graded free resolution of ``R/I``.

    ``degrees[k]`` lists ``(total degree, fine degree)`` of the basis of
    ``F_k`` (``F_0 = R``); ``maps[k]`` (k >= 1) lists, for each basis element
    of ``F_k``, its image in ``F_{k-1}`` as a dict ``{(index, monomial): coeff}``.
    """

    def __init__(self, ring: Ring, degrees: list, maps: list, grading: list):
        self.ring = ring
        self.degrees = degrees
        self.maps = maps
        self.grading = grading

    @property
    def length(self) -> int:
        return max((k for k, d in enumerate(self.degrees) if d), default=0)

    def rank(self, k: int) -> int:
        return len(self.degrees[k]) if k < len(self.degrees) else 0

    def matrix(self, k: int) -> list:
        """``maps[k]`` as a list of columns of polynomials."""
        n_rows = self.rank(k - 1)
        cols = []
        for img in self.maps[k]:
            col = [dict() for _ in range(n_rows)]
            for (i, m), c in img.items():
                col[i][m] = c
            cols.append([Polynomial(self.ring, t) for t in col])
        return cols

    def compose_is_zero(self) -> bool:
        for k in range(2, len(self.maps)):
            for img in self.maps[k]:
                acc: dict = {}
                for (i, m), c in img.items():
                    for (l, m2), c2 in self.maps[k - 1][i].items():
                        key = (l, mono_mul(m, m2))
                        v = acc.get(key, 0) + c * c2
                        if self.ring.field.p:
                            v %= self.ring.field.p
                        acc[key] = v
                if any(acc.values()):
                    return False
        return True

    def is_minimal(self) -> bool:
        """No nonzero constant entries in any differential."""
        for k in range(1, len(self.maps)):
            for img in self.maps[k]:
                if any(not any(m) for (_, m) in img):
                    return False
        return True

    def betti(self):
        from .linres import BettiTable

        data: dict = {}
        for k, degs in enumerate(self.degrees):
            for d, _ in degs:
                data[(k, (d,))] = data.get((k, (d,)), 0) + 1
        return BettiTable(data, module="quotient")


def _kernel_gens(images: list, src_degs: list, W, buckets: _MonoBuckets, field, degrees_needed) -> tuple:
    """Minimal generators of the kernel of ``e_i -> images[i]``, only in ``degrees_needed``.

    Returns ``(gens, degs)`` with gens as dicts ``{(i, mono): coeff}``.
    """
    from .linalg import Echelon

    chosen: list = []
    chosen_degs: list = []
    for j in sorted(degrees_needed):
        # fine degrees occurring in total degree j of the source
        wdegs: dict = {}
        for i, (d, wd) in enumerate(src_degs):
            e = j - d
            if e < 0:
                continue
            buckets.get(e, ())
            for w in buckets.cache[e]:
                wdegs.setdefault(tuple(a + b for a, b in zip(w, wd)) if wd else w, []).append(i)
        for delta, idxs in wdegs.items():
            basis = []
            for i in idxs:
                d, wd = src_degs[i]
                w = tuple(a - b for a, b in zip(delta, wd)) if wd else delta
                for mu in buckets.get(j - d, w):
                    basis.append((i, mu))
            if not basis:
                continue
            cols = []
            for i, mu in basis:
                col = {}
                for (l, m), c in images[i].items():
                    col[(l, mono_mul(m, mu))] = c
                cols.append(col)
            e = Echelon(field, track=True)
            for t, col in enumerate(cols):
                e.insert(col, label=t)
            rels = e.relations
            if not rels:
                continue
            span = Echelon(field)
            for s, (sd, swd) in zip(chosen, chosen_degs):
                if sd >= j:
                    continue
                w = tuple(a - b for a, b in zip(delta, swd)) if swd else delta
                for mu in buckets.get(j - sd, w):
                    span.insert({(i, mono_mul(m, mu)): c for (i, m), c in s.items()})
            for rel in rels:
                vec = {basis[t]: c for t, c in rel.items()}
                if span.insert(vec):
                    chosen.append(vec)
                    chosen_degs.append((j, delta))
    return chosen, chosen_degs


def minimal_resolution(I, order: MonomialOrder | None = None) -> FreeResolution:
    """Minimal free resolution of ``R/I`` by graded linear algebra.

    Kernels are computed one (total, fine) degree at a time.  Only the degrees
    where the initial ideal has nonzero Betti numbers are visited, which is
    enough because ``β_{k,j}(I) <= β_{k,j}(ini I)``.
    """
    from .monideal import MonomialIdeal, betti_multigraded

    I = as_ideal(I)
    ring = I.ring
    for g in I.gens:
        multidegree(g)
    if I.is_zero():
        return FreeResolution(ring, [[(0, ())]], [[]], [])
    order = order or ring.order
    ini = MonomialIdeal(ring, I.initial_monomials(order))
    support: dict = {}
    for (k, b) in betti_multigraded(ini):
        support.setdefault(k + 1, set()).add(sum(b))
    W = torus_grading(I.gens)
    buckets = _MonoBuckets(ring.ngens, W)
    zero_w = _wdeg((0,) * ring.ngens, W)
    degrees = [[(0, zero_w)]]
    maps: list = [[]]
    # F_1: minimal generators of I, visited by degree
    gens = minimal_generators(I.gens)
    images = [{(0, m): c for m, c in g.terms.items()} for g in gens]
    degs = [(g.total_degree(), _wdeg(next(iter(g.terms)), W)) for g in gens]
    degrees.append(degs)
    maps.append(images)
    k = 2
    while k in support and degrees[-1]:
        ker, kdegs = _kernel_gens(maps[-1], degrees[-1], W, buckets, ring.field, support[k])
        if not ker:
            break
        degrees.append(kdegs)
        maps.append(ker)
        k += 1
    return FreeResolution(ring, degrees, maps, W)


# ---------------------------------------------------------------------------
# toric ideals


def integer_kernel(vectors: Sequence[Sequence[int]]) -> list:
    """A Z-basis of ``{c in Z^m : sum_i c_i vectors[i] = 0}`` (saturated lattice).

    Integer row reduction of ``[A | I_m]`` where row i of A is ``vectors[i]``.
    """
    m = len(vectors)
    if m == 0:
        return []
    k = len(vectors[0])
    rows = [list(vectors[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    r0 = 0
    for col in range(k):
        while True:
            nz = [i for i in range(r0, m) if rows[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r0], rows[piv] = rows[piv], rows[r0]
            done = True
            for i in range(r0 + 1, m):
                if rows[i][col]:
                    q = rows[i][col] // rows[r0][col]
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[r0])]
                    if rows[i][col]:
                        done = False
            if done:
                r0 += 1
                break
        if r0 == m:
            break
    return [row[k:] for row in rows[r0:]]


def _binomial(ring: Ring, c) -> Polynomial:
    one = ring.field.coerce(1)
    pos = tuple(max(x, 0) for x in c)
    neg = tuple(max(-x, 0) for x in c)
    if pos == neg:
        return ring.zero()
    return Polynomial(ring, {pos: one, neg: -one}, False)


def toric_ideal(exponents: Sequence[Sequence[int]], source: Ring, budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    """Kernel of ``Z_i -> x^{exponents[i]}``: the lattice ideal of the saturated kernel lattice.

    Start from the binomials of a lattice basis and saturate by each variable in
    turn; saturation by ``z_i`` divides a Gröbner basis for a weighted
    degrevlex order with ``z_i`` last by the largest power of ``z_i``.
    Requires every exponent vector to be nonzero (positive grading).
    """
    m = len(exponents)
    if any(not any(e) for e in exponents):
        raise ValueError("toric_ideal needs nonconstant monomials")
    weights = [sum(e) for e in exponents]
    basis = integer_kernel(exponents)
    gens = [_binomial(source, c) for c in basis]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return PolyIdeal(source, [])
    for i in range(m):
        perm = [j for j in range(m) if j != i] + [i]
        order = weight_order([weights], degrevlex(m, perm))
        gb = buchberger(gens, order, budget)
        new = []
        for g in gb:
            e = min(mm[i] for mm in g.terms)
            if e:
                g = Polynomial(source, {tuple(x - (e if j == i else 0) for j, x in enumerate(mm)): c for mm, c in g.terms.items()}, False)
            new.append(g)
        gens = new
    I = PolyIdeal(source, gens)
    return I


def kernel_of_monomial_map(images: Sequence[Polynomial], source: Ring | None = None,
                           budget: int | None = DEFAULT_BUDGET) -> PolyIdeal:
    """Kernel of a map sending each variable to a monomial (times a nonzero scalar)."""
    if source is None:
        source = Ring(tuple(f"Z{i+1}" for i in range(len(images))), images[0].ring.field)
    exps = []
    for f in images:
        if not f.is_monomial():
            raise ValueError("images must be monomials")
        exps.append(next(iter(f.terms)))
    scal = [next(iter(f.terms.values())) for f in images]
    I = toric_ideal(exps, source, budget)
    if any(c != 1 for c in scal):
        # rescale Z_i -> Z_i / c_i
        fld = source.field
        inv = [fld.inv(c) for c in scal]
        gens = []
        for g in I.gens:
            t = {}
            for mm, c in g.terms.items():
                v = c
                for j, e in enumerate(mm):
                    if e:
                        v = v * inv[j] ** e
                t[mm] = v
            gens.append(Polynomial(source, t))
        I = PolyIdeal(source, gens)
    return I
