"""Multi-Rees algebras: presentations, defining ideals, tallies, fiber rings, h-polynomials.

For equigenerated ideals ``I_1..I_w`` of R with generators ``f_ij`` of degree
``d_i`` the Rees algebra is the image of ``S = R[Z_ij] -> R[T_1..T_w]``,
``Z_ij -> f_ij T_i``.  S is ``Z^{w+1}``-graded by ``deg x = e_0`` and
``deg Z_ij = e_i``; a degree is written ``(a, h)`` with ``a`` the X-degree and
``h`` the T-degree.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .groebner import (
    BudgetExceeded,
    PolyIdeal,
    _MonoBuckets,
    _wdeg,
    as_ideal,
    block_order,
    buchberger,
    kernel_of_map,
    minimal_generators,
    torus_grading,
)
from .linalg import Echelon
from .monideal import MonomialIdeal, hilbert_series, is_integrally_closed, multi_power
from .polyring import Polynomial, Ring, degrevlex, mono_mul, monomials_of_degree


class ReesPresentation:
    """Presentation data of the multi-Rees algebra of equigenerated ideals."""

    def __init__(self, ring: Ring, generators: Sequence[Sequence[Polynomial]]):
        self.ring = ring
        self.generators = [list(g) for g in generators]
        if not self.generators or any(not g for g in self.generators):
            raise ValueError("need at least one nonzero ideal")
        self.degrees = []
        for g in self.generators:
            ds = {f.total_degree() for f in g}
            if len(ds) != 1 or not all(f.is_homogeneous() for f in g):
                raise ValueError("each ideal must be generated by forms of a single degree")
            self.degrees.append(ds.pop())
        self.w = len(self.generators)
        n = ring.ngens
        names = list(ring.variables)
        self.z_index = []
        for i, g in enumerate(self.generators):
            for j in range(len(g)):
                names.append(f"Z{i + 1}_{j + 1}")
                self.z_index.append((i, j))
        grading = []
        for _ in range(n):
            grading.append((1,) + (0,) * self.w)
        for i, _ in self.z_index:
            e = [0] * (self.w + 1)
            e[i + 1] = 1
            grading.append(tuple(e))
        self.ambient = Ring(tuple(names), ring.field, None, tuple(grading), degrevlex(len(names)))
        self._defining = None
        self.tally: dict | None = None
        self.method = None
        self.bound = None
        self.xbound = None

    @property
    def is_monomial(self) -> bool:
        return all(f.is_monomial() for g in self.generators for f in g)

    @property
    def nz(self) -> int:
        return len(self.z_index)

    def images(self) -> tuple:
        """``(target ring R[T], images of the ambient variables under Phi)``."""
        n = self.ring.ngens
        tnames = [f"T{i + 1}" for i in range(self.w)]
        target = Ring(self.ring.variables + tuple(tnames), self.ring.field)
        imgs = []
        for k in range(n):
            imgs.append(target.gen(k))
        for i, j in self.z_index:
            f = self.generators[i][j]
            imgs.append(_lift(f, target) * target.gen(n + i))
        return target, imgs

    def phi(self, F: Polynomial) -> Polynomial:
        target, imgs = self.images()
        return F.subs(imgs, target)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "ideals": [[str(f) for f in g] for g in self.generators],
            "degrees": self.degrees,
            "grading": [list(g) for g in self.ambient.grading],
        }


def _lift(f: Polynomial, target: Ring) -> Polynomial:
    pad = (0,) * (target.ngens - f.ring.ngens)
    return Polynomial(target, {m + pad: c for m, c in f.terms.items()}, False)


def _gens_of(I) -> list:
    if isinstance(I, MonomialIdeal):
        return I.polys()
    if isinstance(I, PolyIdeal):
        return minimal_generators(I.gens)
    return minimal_generators(list(I))


def present(ideals) -> ReesPresentation:
    """Presentation of ``R(I_1, ..., I_w)`` from ideals or generator lists."""
    gens = [_gens_of(I) for I in ideals]
    ring = gens[0][0].ring
    return ReesPresentation(ring, gens)


def product_ideal(ideals, h: Sequence[int]):
    """``I_1^{h_1} ... I_w^{h_w}`` (monomial ideals stay monomial)."""
    if all(isinstance(I, MonomialIdeal) for I in ideals):
        return multi_power(ideals, h)
    ideals = [as_ideal(I) if not isinstance(I, MonomialIdeal) else I.to_poly_ideal() for I in ideals]
    ring = ideals[0].ring
    gens = [ring.one()]
    for I, k in zip(ideals, h):
        for _ in range(k):
            prods = {}
            for a in gens:
                for b in I.gens:
                    prods[a * b] = None
            gens = minimal_generators(list(prods))
    return PolyIdeal(ring, gens)


# ---------------------------------------------------------------------------
# defining ideal


def _hvectors(w: int, bound: int):
    for tot in range(bound + 1):
        for c in itertools.combinations_with_replacement(range(w), tot):
            h = [0] * w
            for i in c:
                h[i] += 1
            yield tuple(h)


def _z_monomials(pres: ReesPresentation, h: tuple) -> list:
    """Exponent vectors on the Z variables with T-degree ``h``."""
    per = []
    for i, k in enumerate(h):
        idx = [t for t, (ii, _) in enumerate(pres.z_index) if ii == i]
        per.append([c for c in itertools.combinations_with_replacement(idx, k)])
    out = []
    for combo in itertools.product(*per):
        e = [0] * pres.nz
        for part in combo:
            for t in part:
                e[t] += 1
        out.append(tuple(e))
    return out


def default_xbound(pres: ReesPresentation, h: tuple, regs: dict) -> int:
    """X-degree bound for minimal generators of T-degree ``h``.

    ``Tor_1`` of the Rees algebra in degree ``(a, h)`` vanishes for
    ``a > 1 + max_{h' <= h} (reg(I^{h'}) - d.h')``; regularities of initial
    ideals are used as upper bounds.
    """
    r = 0
    for h2, v in regs.items():
        if all(x <= y for x, y in zip(h2, h)):
            r = max(r, v)
    return 1 + r


def _power_regs(pres: ReesPresentation, bound: int) -> dict:
    from .linres import _ReesPieces, _ini_regularity

    W = torus_grading([f for g in pres.generators for f in g], pres.ring.ngens)
    pieces = _ReesPieces(pres.ring, pres.generators, W)
    out = {}
    for h in _hvectors(pres.w, bound):
        if not any(h):
            out[h] = 0
        else:
            out[h] = _ini_regularity(pieces, h) - sum(a * b for a, b in zip(pres.degrees, h))
    return out


def defining_ideal(pres: ReesPresentation, method: str = "degreewise", bound: int = 3, xbound=None,
                   budget: int | None = 10**6) -> PolyIdeal:
    """Defining ideal of the Rees algebra.

    ``"degreewise"`` finds minimal generators degree by degree up to T-degree
    ``bound`` (and X-degree ``xbound``, by default the rigorous bound of
    :func:`default_xbound`).  ``"elimination"`` eliminates the T variables from
    ``(Z_ij - f_ij T_i)``; on budget exhaustion it falls back to the degreewise
    method.  The generator tally is stored in ``pres.tally``.
    """
    if method == "elimination":
        try:
            I = _defining_elimination(pres, budget)
            pres.method = "elimination"
            pres.bound = None
            pres._defining = I
            pres.tally = tally_of(pres, minimal_generators(I.gens))
            return I
        except BudgetExceeded:
            method = "degreewise"
    if method != "degreewise":
        raise ValueError(f"unknown method {method!r}")
    gens, tally = _defining_degreewise(pres, bound, xbound)
    I = PolyIdeal(pres.ambient, gens)
    pres._defining = I
    pres.tally = tally
    pres.method = "degreewise"
    pres.bound = bound
    return I


def _defining_elimination(pres: ReesPresentation, budget) -> PolyIdeal:
    n = pres.ring.ngens
    w = pres.w
    names = tuple(f"T{i + 1}" for i in range(w)) + pres.ambient.variables
    big = Ring(names, pres.ring.field, None, None, block_order([degrevlex(w), pres.ambient.order]))
    gens = []
    for t, (i, j) in enumerate(pres.z_index):
        f = pres.generators[i][j]
        z = big.gen(w + n + t)
        fl = Polynomial(big, {(0,) * w + m + (0,) * pres.nz: c for m, c in f.terms.items()}, False)
        gens.append(z - fl * big.gen(i))
    gb = buchberger(gens, big.order, budget)
    keep = []
    for g in gb:
        if all(not any(m[:w]) for m in g.terms):
            keep.append(Polynomial(pres.ambient, {m[w:]: c for m, c in g.terms.items()}, False))
    I = PolyIdeal(pres.ambient, keep)
    I.set_groebner(sorted(keep, key=lambda f: pres.ambient.order.key(f.lm()), reverse=True))
    return I


def degree_of(pres: ReesPresentation, F: Polynomial) -> tuple:
    """``(a, h)`` of a homogeneous element of the ambient ring."""
    m = next(iter(F.terms))
    n = pres.ring.ngens
    a = sum(m[:n])
    h = [0] * pres.w
    for t, (i, _) in enumerate(pres.z_index):
        h[i] += m[n + t]
    return a, tuple(h)


def tally_of(pres: ReesPresentation, gens: Sequence[Polynomial]) -> dict:
    out: dict = {}
    for g in gens:
        key = degree_of(pres, g)
        out[key] = out.get(key, 0) + 1
    return out


def collapse_tally(tally: dict) -> dict:
    """``{(a, |h|): count}``."""
    out: dict = {}
    for (a, h), c in tally.items():
        key = (a, sum(h))
        out[key] = out.get(key, 0) + c
    return dict(sorted(out.items()))


def _defining_degreewise(pres: ReesPresentation, bound: int, xbound):
    ring = pres.ring
    n = ring.ngens
    allf = [f for g in pres.generators for f in g]
    W = torus_grading(allf, n)
    zw = [_wdeg(next(iter(pres.generators[i][j].terms)), W) for i, j in pres.z_index]
    regs = _power_regs(pres, bound) if xbound is None else None
    monomial = pres.is_monomial
    chosen: list = []  # (a, h, fine, vector as dict over ambient monomials)
    tally: dict = {}
    pres.xbound = {}
    for h in _hvectors(pres.w, bound):
        if not any(h):
            continue
        xb = default_xbound(pres, h, regs) if xbound is None else xbound
        pres.xbound[h] = xb
        zmons = _z_monomials(pres, h)
        zimg = {}
        for c in zmons:
            img = ring.one()
            for t, e in enumerate(c):
                if e:
                    i, j = pres.z_index[t]
                    img = img * pres.generators[i][j] ** e
            zimg[c] = img
        for a in range(0, xb + 1):
            # group ambient monomials x^alpha Z^c of degree (a, h) by fine degree
            groups: dict = {}
            for alpha in monomials_of_degree(n, a):
                wa = _wdeg(alpha, W)
                for c in zmons:
                    wc = wa
                    for t, e in enumerate(c):
                        if e:
                            wc = tuple(x + e * y for x, y in zip(wc, zw[t]))
                    groups.setdefault(wc, []).append((alpha, c))
            for delta, members in groups.items():
                if len(members) < 2:
                    continue
                if monomial:
                    new = _fiber_monomial(members, zimg)
                else:
                    new = _fiber_linear(pres, members, zimg, chosen, a, h, delta, W, zw, ring.field)
                for vec in new:
                    chosen.append((a, h, delta, vec))
                    tally[(a, h)] = tally.get((a, h), 0) + 1
    gens = [Polynomial(pres.ambient, vec, False) for (_, _, _, vec) in chosen]
    return gens, dict(sorted(tally.items()))


def _fiber_monomial(members, zimg):
    """Minimal binomial generators in one monomial fiber: one per extra gcd-component."""
    # members share the fine degree; split further by the actual image monomial
    by_img: dict = {}
    for alpha, c in members:
        m = mono_mul(alpha, next(iter(zimg[c].terms)))
        by_img.setdefault(m, []).append(alpha + c)
    out = []
    for monos in by_img.values():
        if len(monos) < 2:
            continue
        parent = list(range(len(monos)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
        for i in range(len(monos)):
            for j in range(i + 1, len(monos)):
                if supports[i] & supports[j]:
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
        roots = sorted({find(i) for i in range(len(monos))}, key=lambda r: min(monos[k] for k in range(len(monos)) if find(k) == r))
        reps = [max(monos[k] for k in range(len(monos)) if find(k) == r) for r in roots]
        for r in reps[1:]:
            out.append({reps[0]: 1, r: -1})
    return [{m: _one(c) for m, c in v.items()} for v in out]


def _one(c):
    from gmpy2 import mpq

    return mpq(c)


def _fiber_linear(pres, members, zimg, chosen, a, h, delta, W, zw, field):
    n = pres.ring.ngens
    cols = []
    for alpha, c in members:
        img = zimg[c]
        cols.append({mono_mul(m, alpha): v for m, v in img.terms.items()})
    e = Echelon(field, track=True)
    for t, col in enumerate(cols):
        e.insert(col, label=t)
    rels = e.relations
    if not rels:
        return []
    span = Echelon(field)
    mem_set = {alpha + c for alpha, c in members}
    for (a2, h2, d2, vec) in chosen:
        if a2 > a or any(x > y for x, y in zip(h2, h)) or (a2 == a and h2 == h):
            continue
        da = a - a2
        dh = tuple(x - y for x, y in zip(h, h2))
        for alpha in monomials_of_degree(n, da):
            for c in _z_monomials(pres, dh):
                wc = _wdeg(alpha, W)
                for t, ex in enumerate(c):
                    if ex:
                        wc = tuple(x + ex * y for x, y in zip(wc, zw[t]))
                if tuple(x + y for x, y in zip(wc, d2)) != delta:
                    continue
                mu = alpha + c
                span.insert({mono_mul(m, mu): v for m, v in vec.items()})
    out = []
    for rel in rels:
        vec = {}
        for t, v in rel.items():
            alpha, c = members[t]
            vec[alpha + c] = v
        if span.insert(vec):
            out.append(vec)
    return out


# ---------------------------------------------------------------------------
# fiber ring and classification


def fiber_ring(pres: ReesPresentation, budget: int | None = 10**6) -> PolyIdeal:
    """Defining ideal of the multi-fiber ring: kernel of ``K[Z] -> R[T]``, ``Z_ij -> f_ij T_i``."""
    target, imgs = pres.images()
    n = pres.ring.ngens
    zimgs = imgs[n:]
    source = Ring(pres.ambient.variables[n:], pres.ring.field)
    return kernel_of_map(zimgs, source, budget)


def is_fiber_type(pres: ReesPresentation) -> bool:
    """Minimal generators are all linear in Z or free of X (checked on the computed tally)."""
    if pres.tally is None:
        defining_ideal(pres)
    return all(sum(h) == 1 or a == 0 for (a, h) in pres.tally)


def initial_criterion(pres: ReesPresentation, order=None, gb=None, budget: int | None = 10**6) -> dict:
    """Classify the minimal generators of ``ini(defining ideal)``.

    ``all_linear_in_X``: every generator has X-degree at most 1 (bounded reg_0
    certificate); ``all_quadratic``: every generator is a quadratic monomial.
    If the Gröbner basis is too expensive and the tally shows a minimal
    generator of degree above 2, ``all_quadratic`` is decided from the tally.
    """
    if pres._defining is None:
        defining_ideal(pres)
    I = pres._defining
    if I.is_zero():
        return {"all_linear_in_X": True, "all_quadratic": True, "source": "zero ideal", "generators": 0}
    order = order or pres.ambient.order
    n = pres.ring.ngens
    try:
        basis = gb if gb is not None else I.groebner(order, budget)
    except BudgetExceeded:
        tot = {a + sum(h) for (a, h) in (pres.tally or {})}
        if any(t > 2 for t in tot):
            return {"all_linear_in_X": None, "all_quadratic": False, "source": "tally (minimal generator of degree > 2)"}
        raise
    lms = [max(g.terms, key=order.key) for g in basis]
    from .monideal import MonomialIdeal as _MI

    ini = _MI(pres.ambient, lms)
    return {
        "all_linear_in_X": all(sum(m[:n]) <= 1 for m in ini.gens),
        "all_quadratic": all(sum(m) == 2 for m in ini.gens),
        "source": "groebner",
        "generators": len(ini.gens),
        "max_degree": ini.max_degree(),
    }


# ---------------------------------------------------------------------------
# Hilbert series and normality


def hilbert_function_direct(pres: ReesPresentation, s: int) -> int:
    """``dim R(I)_s`` in the standard grading, as ``Σ_{a+|h|=s} dim (I^h)_{a + d.h}``."""
    from .linres import _ReesPieces

    W = torus_grading([f for g in pres.generators for f in g], pres.ring.ngens)
    pieces = _ReesPieces(pres.ring, pres.generators, W)
    return _hf_direct(pres, pieces, s)


def _hf_direct(pres, pieces, s):
    total = 0
    for h in _hvectors(pres.w, s):
        a = s - sum(h)
        D = a + sum(x * y for x, y in zip(pres.degrees, h))
        pieces.buckets.get(D, ())
        for delta in pieces.buckets.cache[D]:
            total += len(pieces.piece(h, D, delta))
    return total


def h_polynomial(pres: ReesPresentation, order=None, budget: int | None = 10**6) -> list:
    """h-polynomial of the Rees algebra from the Hilbert series of ``S / ini(defining ideal)``."""
    if pres._defining is None:
        defining_ideal(pres)
    I = pres._defining
    order = order or pres.ambient.order
    if I.is_zero():
        lms = []
    else:
        lms = [max(g.terms, key=order.key) for g in I.groebner(order, budget)]
    M = MonomialIdeal(Ring(pres.ambient.variables, pres.ambient.field), lms)
    return hilbert_series(M).h_polynomial()


def h_polynomial_direct(pres: ReesPresentation, upto: int) -> list:
    """Numerator of ``Σ HF(s) t^s`` times ``(1-t)^{n+w}``, truncated at degree ``upto``."""
    from math import comb

    from .linres import _ReesPieces

    W = torus_grading([f for g in pres.generators for f in g], pres.ring.ngens)
    pieces = _ReesPieces(pres.ring, pres.generators, W)
    hf = [_hf_direct(pres, pieces, s) for s in range(upto + 1)]
    dim = pres.ring.ngens + pres.w
    num = []
    for s in range(upto + 1):
        num.append(sum((-1) ** i * comb(dim, i) * hf[s - i] for i in range(min(dim, s) + 1)))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def normality_evidence(ideals: Sequence[MonomialIdeal], hmax: int = 2) -> dict:
    """Integral closedness of every product ``I^h`` with ``|h| <= hmax`` (monomial ideals only)."""
    if not all(isinstance(I, MonomialIdeal) for I in ideals):
        raise TypeError("normality evidence is only available for monomial ideals")
    checks = {}
    for h in _hvectors(len(ideals), hmax):
        if not any(h):
            continue
        checks[",".join(map(str, h))] = is_integrally_closed(multi_power(ideals, h))
    return {"hmax": hmax, "products": checks, "all_closed": all(checks.values())}
