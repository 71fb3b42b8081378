"""Betti tables, partial regularities and bounded reg_0 certificates.

Betti tables are computed by the cheapest exact route available: the
Eliahou–Kervaire formula for strongly stable ideals, the linear-quotient
formula when an ordering with linear quotients exists, simplicial homology for
other monomial ideals, and for polynomial ideals the transfer from the initial
ideal when that one has a linear resolution (otherwise a minimal free
resolution is computed).

``reg0_truncated`` computes ``Tor^S(K, R(I_1..I_w))`` of a multi-Rees algebra
as homology of the Koszul complex on the ambient variables, one fine
multidegree at a time.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .groebner import PolyIdeal, _MonoBuckets, _wdeg, as_ideal, minimal_resolution, torus_grading, minimal_generators
from .linalg import Echelon
from .monideal import (
    MonomialIdeal,
    betti_from_linear_quotients,
    betti_upper_koszul,
    eliahou_kervaire_betti,
    is_strongly_stable,
    linear_quotients,
)
from .polyring import Polynomial, mono_mul


class BettiTable:
    """Graded Betti numbers ``{(k, degree): rank}``.

    ``module`` is ``"ideal"`` (k = 0 are the minimal generators of I) or
    ``"quotient"`` (the table of R/I, with ``β_{0,0} = 1``).  Degrees are
    tuples; partial regularities use their coordinates, ``reg`` the sum.
    """

    def __init__(self, data: dict, module: str = "ideal"):
        if module not in ("ideal", "quotient"):
            raise ValueError("module must be 'ideal' or 'quotient'")
        self.data = {(int(k), tuple(int(x) for x in g)): int(r) for (k, g), r in data.items() if r}
        self.module = module

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.module == other.module and self.data == other.data

    def __repr__(self):
        return f"BettiTable({self.module}, {self.totals()})"

    def items(self):
        return sorted(self.data.items())

    def rank(self, k: int, degree=None) -> int:
        if degree is None:
            return sum(r for (kk, _), r in self.data.items() if kk == k)
        if isinstance(degree, int):
            return sum(r for (kk, g), r in self.data.items() if kk == k and sum(g) == degree)
        return self.data.get((k, tuple(degree)), 0)

    def totals(self) -> list:
        top = max((k for k, _ in self.data), default=-1)
        return [self.rank(k) for k in range(top + 1)]

    @property
    def length(self) -> int:
        return max((k for k, _ in self.data), default=0)

    def t(self, k: int, i: int | None = None):
        """Largest shift at homological index k: coordinate ``i`` or total degree."""
        vals = [sum(g) if i is None else g[i] for (kk, g) in self.data if kk == k]
        return max(vals) if vals else None

    def reg(self, i: int | None = None):
        """``sup_k (t_{ik} - k)``; ``None`` for the zero module."""
        vals = [(sum(g) if i is None else g[i]) - k for (k, g) in self.data]
        return max(vals) if vals else None

    def partial_regs(self) -> list:
        dim = len(next(iter(self.data))[1]) if self.data else 0
        return [self.reg(i) for i in range(dim)]

    def coarse(self) -> "BettiTable":
        out: dict = {}
        for (k, g), r in self.data.items():
            key = (k, (sum(g),))
            out[key] = out.get(key, 0) + r
        return BettiTable(out, self.module)

    def as_quotient(self) -> "BettiTable":
        if self.module == "quotient":
            return self
        dim = len(next(iter(self.data))[1]) if self.data else 1
        out = {(0, (0,) * dim): 1}
        for (k, g), r in self.data.items():
            out[(k + 1, g)] = r
        return BettiTable(out, "quotient")

    def as_ideal(self) -> "BettiTable":
        if self.module == "ideal":
            return self
        return BettiTable({(k - 1, g): r for (k, g), r in self.data.items() if k >= 1}, "ideal")

    def is_linear(self) -> bool:
        """Ideal indexing: all shifts equal ``d + k`` for a single ``d``."""
        tab = self.as_ideal()
        if not tab.data:
            return True
        ds = {sum(g) - k for (k, g) in tab.data}
        return len(ds) == 1

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "entries": [{"k": k, "degree": list(g), "rank": r} for (k, g), r in self.items()],
            "reg": [self.reg()] + (self.partial_regs() if self.data and len(next(iter(self.data))[1]) > 1 else []),
        }

    @classmethod
    def from_json(cls, d) -> "BettiTable":
        return cls({(e["k"], tuple(e["degree"])): e["rank"] for e in d["entries"]}, d.get("module", "ideal"))

    def pretty(self) -> str:
        """Aligned text table (rows ``j - k``, columns ``k``) for total degrees."""
        tab = self.coarse()
        if not tab.data:
            return "(zero)"
        ks = range(tab.length + 1)
        rows = sorted({sum(g) - k for (k, g) in tab.data})
        width = max(len(str(r)) for r in tab.data.values()) + 1
        lines = ["     " + "".join(f"{k:>{width}}" for k in ks)]
        for r in rows:
            cells = []
            for k in ks:
                v = tab.data.get((k, (r + k,)), 0)
                cells.append(f"{(v if v else '.'):>{width}}")
            lines.append(f"{r:>4}:" + "".join(cells))
        return "\n".join(lines)


# ---------------------------------------------------------------------------


def _monomial_ideal_of(I):
    if isinstance(I, MonomialIdeal):
        return I
    if isinstance(I, PolyIdeal) and all(g.is_monomial() for g in I.gens):
        return MonomialIdeal(I.ring, [next(iter(g.terms)) for g in I.gens])
    return None


def betti_ideal(I) -> BettiTable:
    """Betti table of the ideal itself (generators at k = 0), total degrees."""
    M = _monomial_ideal_of(I)
    if M is not None:
        return _betti_monomial(M)
    I = as_ideal(I)
    ini = MonomialIdeal(I.ring, I.initial_monomials())
    tab = _betti_monomial(ini)
    if tab.is_linear() and len(ini.degrees()) == 1:
        # β(I) <= β(ini) and both share a Hilbert function, so a linear
        # table for ini is the table of I
        return tab
    return minimal_resolution(I).betti().as_ideal()


def _betti_monomial(M: MonomialIdeal) -> BettiTable:
    if M.is_zero():
        return BettiTable({}, "ideal")
    if is_strongly_stable(M):
        return eliahou_kervaire_betti(M)
    if M.is_equigenerated():
        lq = linear_quotients(M)
        if lq is not None:
            return betti_from_linear_quotients(M, lq)
    return betti_upper_koszul(M)


def betti(I) -> BettiTable:
    """Betti table of ``R/I``."""
    return betti_ideal(I).as_quotient()


def regularity(I) -> int:
    """Regularity of the ideal ``I`` (``reg R/I + 1``); 0 for the unit ideal."""
    tab = betti_ideal(I)
    r = tab.reg()
    return 0 if r is None else r


def has_linear_resolution(I, diagnostic: bool = False):
    """True iff I is generated in one degree d and ``β_{k,j}(I) = 0`` for ``j != d + k``."""
    M = _monomial_ideal_of(I)
    gens_degs = M.degrees() if M is not None else sorted({g.total_degree() for g in minimal_generators(as_ideal(I).gens)})
    if len(gens_degs) > 1:
        res = (False, f"generated in degrees {gens_degs}")
        return res if diagnostic else False
    if M is not None and M.is_equigenerated() and linear_quotients(M) is not None:
        return (True, "linear quotients") if diagnostic else True
    tab = betti_ideal(I)
    ok = tab.is_linear()
    if diagnostic:
        return ok, ("linear" if ok else f"nonlinear shifts: {tab.items()}")
    return ok


# ---------------------------------------------------------------------------
# Koszul homology of multi-Rees algebras


class _ReesPieces:
    """Graded pieces ``(I^h)_D`` in a fine degree, for products of the given ideals."""

    def __init__(self, ring, gens: Sequence[Sequence[Polynomial]], W):
        self.ring = ring
        self.gens = [list(g) for g in gens]
        self.w = len(self.gens)
        self.W = W
        self.buckets = _MonoBuckets(ring.ngens, W)
        self.monomial = all(f.is_monomial() for g in self.gens for f in g)
        self._prod: dict = {}
        self._mon: dict = {}
        self._piece: dict = {}

    def product_gens(self, h: tuple) -> list:
        if h not in self._prod:
            if not any(h):
                out = [self.ring.one()]
            else:
                i = next(i for i, x in enumerate(h) if x)
                lower = list(h)
                lower[i] -= 1
                prev = self.product_gens(tuple(lower))
                prods = {}
                for a in prev:
                    for b in self.gens[i]:
                        prods[a * b] = None
                out = list(prods) if self.monomial else minimal_generators(list(prods))
            self._prod[h] = out
        return self._prod[h]

    def monomial_ideal(self, h: tuple) -> MonomialIdeal:
        if h not in self._mon:
            self._mon[h] = MonomialIdeal(self.ring, [next(iter(f.terms)) for f in self.product_gens(h)])
        return self._mon[h]

    def piece(self, h: tuple, D: int, delta: tuple) -> list:
        """A basis (list of term dicts) of ``(I^h)_D`` in fine degree ``delta``."""
        key = (h, D, delta)
        if key in self._piece:
            return self._piece[key]
        if D < 0:
            out = []
        elif self.monomial:
            M = self.monomial_ideal(h)
            out = [{m: 1} for m in self.buckets.get(D, delta) if M.contains(m)]
        else:
            e = Echelon(self.ring.field)
            for g in self.product_gens(h):
                dg = g.total_degree()
                wg = _wdeg(next(iter(g.terms)), self.W)
                w = tuple(a - b for a, b in zip(delta, wg))
                for mu in self.buckets.get(D - dg, w):
                    e.insert({mono_mul(m, mu): c for m, c in g.terms.items()})
            out = e.basis()
        self._piece[key] = out
        return out


def _hvectors(w: int, bound: int):
    for tot in range(bound + 1):
        for c in itertools.combinations_with_replacement(range(w), tot):
            h = [0] * w
            for i in c:
                h[i] += 1
            yield tuple(h)


def _leq(a, b):
    return all(x <= y for x, y in zip(a, b))


class Reg0Certificate(dict):
    """Result of :func:`reg0_truncated` (a dict with attribute access for the main fields)."""

    @property
    def reg0(self):
        return self["reg0_up_to_bound"]


def reg0_truncated(pres, degree_bound: int = 3, slack: dict | None = None, tor1_all: bool = True) -> Reg0Certificate:
    """Bounded computation of ``reg_0`` of the multi-Rees algebra of ``pres``.

    ``pres`` needs ``ring`` (the base ring R), ``generators`` (one list of
    polynomials per ideal) and ``degrees`` (the generating degrees ``d_i``).

    For every T-degree ``h`` with ``|h| <= degree_bound`` the Koszul homology
    ``Tor_k(K, R)_{(a,h)}`` is computed for ``0 <= a - k <= s(h)``, where
    ``s(h) = max(1, max_{h' <= h} reg(ini I^{h'}) - d.h')``; the spectral
    sequence of the Koszul complex shows ``Tor_k`` vanishes for ``a - k`` above
    ``max_{h'<=h} reg(I^{h'}) - d.h'``, so the reported value is exact within
    the bound.  With ``tor1_all`` also ``Tor_1`` in degrees ``a = 0`` is
    computed, exposing relations such as the pure fiber relations.
    """
    ring = pres.ring
    gens = [list(g) for g in pres.generators]
    d = list(pres.degrees)
    w = len(gens)
    n = ring.ngens
    allf = [f for g in gens for f in g]
    W = torus_grading(allf + ring.gens(), n) if allf else [()] * n
    pieces = _ReesPieces(ring, gens, W)
    # ambient variables: x_0..x_{n-1}, then Z_ij
    zvars = [(i, f) for i, g in enumerate(gens) for f in g]
    var_w = [W[l] for l in range(n)] + [_wdeg(next(iter(f.terms)), W) for _, f in zvars]
    var_t = [(0,) * w for _ in range(n)]
    for i, _ in zvars:
        t = [0] * w
        t[i] = 1
        var_t.append(tuple(t))
    var_x = [1] * n + [0] * len(zvars)
    var_r = [1] * n + [d[i] for i, _ in zvars]

    hs = list(_hvectors(w, degree_bound))
    # slack per h from regularities of initial ideals of the powers
    if slack is None:
        slack = {}
        base = {}
        for h in hs:
            dh = sum(a * b for a, b in zip(d, h))
            if not any(h):
                base[h] = 0
            else:
                base[h] = _ini_regularity(pieces, h) - dh
        for h in hs:
            slack[h] = max([1] + [base[h2] for h2 in hs if _leq(h2, h)])

    # E1 page of the Koszul double complex: Tor_k can only live in degrees
    # (a, h, delta) carried by some Λ^q(Z_zeta) ⊗ Tor_p^R(K, I^{h-t}); the
    # initial ideals bound those Betti numbers from above
    support = {h: _ini_betti_support(pieces, h) for h in hs}
    zw = [(i, _wdeg(next(iter(f.terms)), W)) for i, f in zvars]
    todo: dict = {}
    for h in hs:
        s = slack[h]
        for zeta in _z_subsets(zw, h):
            t = [0] * w
            zdeg = [0] * len(W[0]) if W and W[0] else []
            for z in zeta:
                i, wd = zw[z]
                t[i] += 1
                zdeg = [x + y for x, y in zip(zdeg, wd)]
            h2 = tuple(x - y for x, y in zip(h, t))
            q = len(zeta)
            dh2 = sum(x * y for x, y in zip(d, h2))
            for p, wd, D in support[h2]:
                k = p + q
                a = D - dh2
                if 0 <= a - k <= s or (tor1_all and a == 0 and k == 1):
                    delta = tuple(x + y for x, y in zip(wd, zdeg))
                    todo.setdefault((h, a, delta), set()).add(k)
    tor: dict = {}
    for (h, a, delta), ks in sorted(todo.items()):
        for k, r in _koszul_homology(pieces, h, a, delta, sorted(ks), var_w, var_t, var_x, var_r, n, zvars).items():
            if r:
                key = (k, a, h)
                tor[key] = tor.get(key, 0) + r
    vals = [a - k for (k, a, h) in tor]
    reg0 = max(vals) if vals else None
    witnesses = sorted(
        [{"k": k, "a": a, "h": list(h), "rank": r} for (k, a, h), r in tor.items() if a - k == reg0],
        key=lambda e: (e["k"], e["a"], e["h"]),
    )
    tor1 = {}
    for (k, a, h), r in tor.items():
        if k == 1:
            tor1[(a, h)] = r
    return Reg0Certificate(
        reg0_up_to_bound=reg0,
        bound=degree_bound,
        witnesses=witnesses,
        slack={",".join(map(str, h)): s for h, s in slack.items()},
        tor=sorted(([k, a, list(h), r] for (k, a, h), r in tor.items())),
        tor1=tor1,
    )


def _z_subsets(zw: list, h: tuple):
    """Sets of ambient Z variables whose T-degree is at most ``h``."""
    by_ideal: dict = {}
    for z, (i, _) in enumerate(zw):
        by_ideal.setdefault(i, []).append(z)
    choices = []
    for i, cap in enumerate(h):
        zs = by_ideal.get(i, [])
        opts = []
        for r in range(0, min(cap, len(zs)) + 1):
            opts.extend(itertools.combinations(zs, r))
        choices.append(opts)
    for combo in itertools.product(*choices):
        yield tuple(z for part in combo for z in part)


def _ini_betti_support(pieces: _ReesPieces, h: tuple) -> list:
    """``(p, fine degree, total degree)`` where ``Tor_p(K, ini I^h)`` is nonzero."""
    if not any(h):
        return [(0, _wdeg((0,) * pieces.ring.ngens, pieces.W), 0)]
    M = _ini_ideal(pieces, h)
    out = set()
    for p, b in multigraded_betti_support(M):
        out.add((p, _wdeg(b, pieces.W), sum(b)))
    return sorted(out)


def multigraded_betti_support(M: MonomialIdeal) -> list:
    """Pairs ``(k, b)`` with ``β_{k,b}(M) != 0`` (ideal indexing, ``b`` an exponent vector)."""
    out = []
    if is_strongly_stable(M):
        # Eliahou–Kervaire: shifts u * x_F with F inside the variables before max(u)
        for u in M.gens:
            mx = max((i for i, e in enumerate(u) if e), default=-1)
            for k in range(max(mx, 0) + 1):
                for F in itertools.combinations(range(max(mx, 0)), k):
                    out.append((k, _bump_all(u, F)))
        return out
    if M.is_equigenerated():
        lq = linear_quotients(M)
        if lq is not None:
            for u, c in lq:
                for k in range(len(c) + 1):
                    for F in itertools.combinations(c, k):
                        out.append((k, _bump_all(u, F)))
            return out
    from .monideal import betti_multigraded

    return list(betti_multigraded(M))


def _bump_all(u, F):
    e = list(u)
    for i in F:
        e[i] += 1
    return tuple(e)


def _ini_ideal(pieces: _ReesPieces, h: tuple) -> MonomialIdeal:
    key = ("ini", h)
    if key not in pieces._mon:
        if pieces.monomial:
            pieces._mon[key] = pieces.monomial_ideal(h)
        else:
            J = PolyIdeal(pieces.ring, pieces.product_gens(h))
            pieces._mon[key] = MonomialIdeal(pieces.ring, J.initial_monomials())
    return pieces._mon[key]


def _ini_regularity(pieces: _ReesPieces, h: tuple) -> int:
    r = _betti_monomial(_ini_ideal(pieces, h)).reg()
    return 0 if r is None else r


def _koszul_homology(pieces, h, a, delta, ks, var_w, var_t, var_x, var_r, n, zvars) -> dict:
    """Ranks of ``H_k`` of the Koszul complex in degree ``(a, h)``, fine R-degree ``delta``."""
    need = sorted(set(ks) | {k + 1 for k in ks})
    nv = len(var_w)
    zidx = list(range(n, nv))
    htot = sum(h)
    chains: dict = {}
    for k in need:
        basis = []
        for p in range(0, min(k, n) + 1):
            q = k - p
            if q > htot or p > a:
                continue
            for sig in itertools.combinations(range(n), p):
                for zeta in itertools.combinations(zidx, q):
                    t = list(h)
                    ok = True
                    for z in zeta:
                        for i, x in enumerate(var_t[z]):
                            t[i] -= x
                            if t[i] < 0:
                                ok = False
                    if not ok:
                        continue
                    tau = sig + zeta
                    wt = list(delta)
                    D = 0
                    for v in tau:
                        D += var_r[v]
                        for i, x in enumerate(var_w[v]):
                            wt[i] -= x
                    a2 = a - p
                    D2 = a2 + sum(x * y for x, y in zip(pieces_degrees(pieces), t))
                    for vec in pieces.piece(tuple(t), D2, tuple(wt)):
                        basis.append((tau, vec))
        chains[k] = basis
    ranks = {}
    for k in need:
        if k == 0:
            ranks[0] = 0
            continue
        e = Echelon(pieces.ring.field)
        for tau, vec in chains[k]:
            img: dict = {}
            for pos, v in enumerate(tau):
                sign = -1 if pos % 2 else 1
                rest = tau[:pos] + tau[pos + 1 :]
                if v < n:
                    for m, c in vec.items():
                        mm = list(m)
                        mm[v] += 1
                        key = (rest, tuple(mm))
                        img[key] = img.get(key, 0) + sign * c
                else:
                    f = zvars[v - n][1]
                    for m, c in vec.items():
                        for m2, c2 in f.terms.items():
                            key = (rest, mono_mul(m, m2))
                            img[key] = img.get(key, 0) + sign * c * c2
            e.insert({kk: vv for kk, vv in img.items() if vv})
        ranks[k] = e.rank
    out = {}
    for k in ks:
        out[k] = len(chains[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def pieces_degrees(pieces: _ReesPieces) -> list:
    return [g[0].total_degree() for g in pieces.gens]


def romer_bound_check(ideals, h: Sequence[int], reg0: int) -> bool:
    """``reg(I^h) <= d.h + reg0`` for the product ``I_1^{h_1}...I_w^{h_w}``."""
    from .reesalg import product_ideal

    if not any(h):
        return 0 <= reg0
    P = product_ideal(ideals, h)
    dh = sum(k * _gen_degree(I) for I, k in zip(ideals, h))
    return regularity(P) <= dh + reg0


def _gen_degree(I) -> int:
    if isinstance(I, MonomialIdeal):
        return I.max_degree()
    return max(g.total_degree() for g in as_ideal(I).gens)
