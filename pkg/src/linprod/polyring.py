"""Polynomial rings over exact fields, monomial orders, gradings and the text parser.

Monomials are plain tuples of nonnegative exponents.  Every monomial order used
in the package is a *matrix order*: the sort key of a monomial is ``W @ a`` for
an integer weight matrix ``W``, so keys are additive under multiplication.

Polynomial text grammar (whitespace is ignored)::

    poly    = [sign] term { sign term } ;
    sign    = "+" | "-" ;
    term    = factor { "*" factor } ;
    factor  = primary [ "^" integer ] ;
    primary = integer [ "/" integer ] | variable | "(" poly ")" ;
    variable = letter { letter | digit | "_" } ;

``/`` is only accepted between two integer literals (a rational constant).
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass, field as dc_field
from operator import add, sub
from typing import Iterable, Mapping, Sequence

import gmpy2
from gmpy2 import mpq

Monomial = tuple  # tuple[int, ...]

MAX_EXPONENT = 2**31 - 1


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int | None = None):
        self.pos = pos
        super().__init__(msg if pos is None else f"{msg} (at position {pos})")


class RingMismatch(ValueError):
    pass


class InhomogeneousError(ValueError):
    """Raised when a polynomial is not homogeneous for the requested grading."""

    def __init__(self, deg_a, deg_b):
        self.degrees = (tuple(deg_a), tuple(deg_b))
        super().__init__(f"inhomogeneous polynomial: terms of degree {tuple(deg_a)} and {tuple(deg_b)}")


# ---------------------------------------------------------------------------
# coefficient fields


@dataclass(frozen=True)
class Field:
    """Exact rationals (``p is None``) or the prime field GF(p)."""

    p: int | None = None

    @property
    def exact(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    def to_json(self) -> str:
        return "QQ" if self.p is None else f"p:{self.p}"

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip()
        if text in ("QQ", "q", "Q"):
            return QQ
        m = re.fullmatch(r"(?:p:|GF\()(\d+)\)?", text)
        if not m:
            raise ValueError(f"unknown field {text!r}")
        p = int(m.group(1))
        if not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        return cls(p)

    def coerce(self, c):
        if self.p is None:
            return mpq(c)
        if isinstance(c, int):
            return c % self.p
        c = mpq(c)
        return int(c.numerator) * pow(int(c.denominator), -1, self.p) % self.p

    def inv(self, c):
        if self.p is None:
            return 1 / mpq(c)
        return pow(int(c), -1, self.p)

    def fmt(self, c) -> str:
        return str(c)


QQ = Field()


# ---------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(sub, a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True if the monomial ``a`` divides ``b``."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, d: int):
    """All exponent vectors of total degree ``d`` (lex-descending)."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# monomial orders


class Cmp(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder:
    """A matrix monomial order: ``a > b`` iff ``W a`` is lexicographically larger.

    Use the constructors :func:`lex`, :func:`deglex`, :func:`degrevlex`,
    :func:`block_order`, :func:`weight_order` and :func:`lifted_order`.
    """

    __slots__ = ("name", "nvars", "matrix", "_key", "_hash")

    def __init__(self, name: str, matrix: Sequence[Sequence[int]], nvars: int, fast=None):
        self.name = name
        self.nvars = nvars
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if any(len(row) != nvars for row in self.matrix):
            raise ValueError("weight matrix has wrong width")
        self._hash = hash((self.matrix, nvars))
        if fast is not None:
            self._key = fast
        else:
            rows = [[(j, w) for j, w in enumerate(row) if w] for row in self.matrix]

            def key(a, rows=rows):
                return tuple(sum(w * a[j] for j, w in r) for r in rows)

            self._key = key

    def key(self, a: Monomial) -> tuple:
        return self._key(a)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.matrix == other.matrix and self.nvars == other.nvars

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialOrder({self.name}, nvars={self.nvars})"

    def compare(self, a: Monomial, b: Monomial) -> Cmp:
        if len(a) != self.nvars or len(b) != self.nvars:
            raise RingMismatch("monomial length does not match the order")
        ka, kb = self._key(a), self._key(b)
        return Cmp.GT if ka > kb else Cmp.LT if ka < kb else Cmp.EQ

    def max(self, monos: Iterable[Monomial]) -> Monomial:
        return max(monos, key=self._key)

    def sort_desc(self, monos: Iterable[Monomial]) -> list:
        return sorted(monos, key=self._key, reverse=True)


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Cmp:
    return order.compare(a, b)


def _perm_rows(nvars: int, perm: Sequence[int] | None):
    perm = list(range(nvars)) if perm is None else list(perm)
    if sorted(perm) != list(range(nvars)):
        raise ValueError("perm must be a permutation of the variable indices")
    rows = []
    for p in perm:
        row = [0] * nvars
        row[p] = 1
        rows.append(row)
    return perm, rows


def lex(nvars: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    """Lexicographic order; ``perm`` lists variable indices from largest to smallest."""
    perm, rows = _perm_rows(nvars, perm)
    if perm == list(range(nvars)):
        return MonomialOrder("lex", rows, nvars, fast=lambda a: a)
    return MonomialOrder("lex", rows, nvars, fast=lambda a, p=perm: tuple(a[i] for i in p))


def deglex(nvars: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    perm, rows = _perm_rows(nvars, perm)
    p = tuple(perm)
    return MonomialOrder("deglex", [[1] * nvars] + rows, nvars, fast=lambda a: (sum(a),) + tuple(a[i] for i in p))


def degrevlex(nvars: int, perm: Sequence[int] | None = None) -> MonomialOrder:
    perm, _ = _perm_rows(nvars, perm)
    rows = [[1] * nvars]
    for i in reversed(perm):
        row = [0] * nvars
        row[i] = -1
        rows.append(row)
    rev = tuple(reversed(perm))
    return MonomialOrder(
        "degrevlex", rows[: nvars], nvars, fast=lambda a: (sum(a),) + tuple(-a[i] for i in rev[:-1])
    ) if nvars > 0 else MonomialOrder("degrevlex", [], 0, fast=lambda a: ())


def weight_order(weights: Sequence[Sequence[int]], tiebreak: MonomialOrder, name="weight") -> MonomialOrder:
    """Compare by the weight rows first, then by ``tiebreak``."""
    n = tiebreak.nvars
    rows = [list(w) for w in weights] + [list(r) for r in tiebreak.matrix]
    wrows = [[(j, x) for j, x in enumerate(w) if x] for w in weights]
    tk = tiebreak._key

    def key(a):
        return tuple(sum(x * a[j] for j, x in r) for r in wrows) + tuple(tk(a))

    return MonomialOrder(name, rows, n, fast=key)


def block_order(blocks: Sequence[MonomialOrder]) -> MonomialOrder:
    """Elimination order: the first block dominates, then the second, and so on."""
    n = sum(b.nvars for b in blocks)
    rows = []
    offsets = []
    off = 0
    for b in blocks:
        offsets.append(off)
        for r in b.matrix:
            rows.append([0] * off + list(r) + [0] * (n - off - b.nvars))
        off += b.nvars
    parts = [(o, o + b.nvars, b._key) for o, b in zip(offsets, blocks)]

    def key(a):
        out = ()
        for s, e, k in parts:
            out += tuple(k(a[s:e]))
        return out

    return MonomialOrder("block(" + ",".join(b.name for b in blocks) + ")", rows, n, fast=key)


def lifted_order(images: Sequence[Monomial], base: MonomialOrder, tiebreak: MonomialOrder) -> MonomialOrder:
    """The order ``mu < nu`` iff ``Psi(mu) < Psi(nu)``, ties broken by ``tiebreak``.

    ``images[i]`` is the exponent vector of ``Psi(Z_i)`` in the ring of ``base``.
    """
    m = len(images)
    if m != tiebreak.nvars:
        raise ValueError("one image per source variable required")
    rows = []
    for r in base.matrix:
        rows.append([sum(r[k] * img[k] for k in range(len(r))) for img in images])
    rows += [list(r) for r in tiebreak.matrix]
    return MonomialOrder("lifted", rows, m)


def order_from_name(name: str, nvars: int) -> MonomialOrder:
    try:
        return {"lex": lex, "deglex": deglex, "degrevlex": degrevlex}[name](nvars)
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None


# ---------------------------------------------------------------------------
# rings


_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, eq=True)
class Ring:
    variables: tuple
    field: Field = QQ
    matrix_layout: tuple | None = None
    grading: tuple | None = None
    order: MonomialOrder | None = dc_field(default=None, compare=True)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        for v in self.variables:
            if not _NAME.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if self.matrix_layout is not None:
            m, n = self.matrix_layout
            if m * n != len(self.variables):
                raise ValueError("matrix layout does not cover the variable list")
            object.__setattr__(self, "matrix_layout", (int(m), int(n)))
        if self.grading is not None:
            g = tuple(tuple(int(x) for x in d) for d in self.grading)
            if len(g) != len(self.variables) or len({len(d) for d in g}) > 1:
                raise ValueError("grading must give one degree vector per variable")
            if any(sum(d) < 0 for d in g):
                raise ValueError("variable degrees must have nonnegative total weight")
            object.__setattr__(self, "grading", g)
        if self.order is None:
            object.__setattr__(self, "order", degrevlex(len(self.variables)))
        elif self.order.nvars != len(self.variables):
            raise ValueError("order does not match the number of variables")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.variables)})

    # construction helpers
    @classmethod
    def matrix(cls, m: int, n: int | None = None, name: str = "x", field: Field = QQ, order: str = "lex"):
        """Generic ``m x n`` matrix ring, variables row-major; default order is the diagonal lex order."""
        n = m if n is None else n
        sep = "" if max(m, n) <= 9 else "_"
        names = [f"{name}{i}{sep}{j}" for i in range(1, m + 1) for j in range(1, n + 1)]
        return cls(tuple(names), field, (m, n), None, order_from_name(order, m * n))

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def matrix_index(self, i: int, j: int) -> int:
        """Index of the matrix variable in row ``i``, column ``j`` (1-based)."""
        if self.matrix_layout is None:
            raise ValueError("ring has no matrix layout")
        m, n = self.matrix_layout
        if not (1 <= i <= m and 1 <= j <= n):
            raise IndexError((i, j))
        return (i - 1) * n + (j - 1)

    def with_order(self, order: MonomialOrder | str) -> "Ring":
        if isinstance(order, str):
            order = order_from_name(order, self.ngens)
        return Ring(self.variables, self.field, self.matrix_layout, self.grading, order)

    def with_field(self, fld: Field) -> "Ring":
        return Ring(self.variables, fld, self.matrix_layout, self.grading, self.order)

    def with_grading(self, grading) -> "Ring":
        return Ring(self.variables, self.field, self.matrix_layout, grading, self.order)

    def extend(self, names: Sequence[str], front: bool = False, order: MonomialOrder | None = None) -> "Ring":
        vs = tuple(names) + self.variables if front else self.variables + tuple(names)
        return Ring(vs, self.field, None, None, order or degrevlex(len(vs)))

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.coerce(1)})

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.ngens)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        return Polynomial(self, {(0,) * self.ngens: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.ngens or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        c = self.field.coerce(coeff)
        return Polynomial(self, {exps: c} if c else {})

    def degree_of(self, mono: Monomial) -> tuple:
        """Multidegree of a monomial under the ring grading (total degree if ungraded)."""
        if self.grading is None:
            return (sum(mono),)
        g = self.grading
        out = [0] * len(g[0]) if g else []
        for i, e in enumerate(mono):
            if e:
                for k, x in enumerate(g[i]):
                    out[k] += e * x
        return tuple(out)

    def __call__(self, text: str) -> "Polynomial":
        return parse(text, self)

    def format_monomial(self, mono: Monomial) -> str:
        parts = []
        for v, e in zip(self.variables, mono):
            if e == 1:
                parts.append(v)
            elif e:
                parts.append(f"{v}^{e}")
        return "*".join(parts) if parts else "1"

    # JSON
    def to_json(self) -> dict:
        d = {"variables": list(self.variables), "field": self.field.to_json()}
        if self.matrix_layout is not None:
            d["matrix_layout"] = {"rows": self.matrix_layout[0], "cols": self.matrix_layout[1]}
        if self.grading is not None:
            d["grading"] = [list(g) for g in self.grading]
        if self.order is not None and self.order != degrevlex(self.ngens):
            d["order"] = self.order.name
        return d

    @classmethod
    def from_json(cls, d: Mapping | str) -> "Ring":
        if isinstance(d, str):
            d = json.loads(d)
        fld = Field.parse(str(d.get("field", "QQ")))
        layout = d.get("matrix_layout")
        if layout is not None:
            if isinstance(layout, Mapping):
                layout = (layout["rows"], layout["cols"])
            layout = tuple(layout)
        variables = d.get("variables")
        if variables is None:
            if layout is None:
                raise ValueError("ring needs 'variables' or 'matrix_layout'")
            r = cls.matrix(layout[0], layout[1], field=fld)
            variables = r.variables
        grading = d.get("grading")
        if isinstance(grading, Mapping):
            grading = [grading[v] for v in variables]
        order_name = d.get("order", "lex" if layout is not None and "variables" not in d else "degrevlex")
        return cls(tuple(variables), fld, layout, grading, order_from_name(order_name, len(variables)))


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Sparse polynomial: a dict from exponent tuples to nonzero field elements."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping | None = None, _clean: bool = True):
        self.ring = ring
        if terms is None:
            terms = {}
        elif _clean:
            terms = {m: c for m, c in terms.items() if c}
        self.terms = terms

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def monomials(self) -> list:
        return self.ring.order.sort_desc(self.terms)

    def lm(self, order: MonomialOrder | None = None) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=(order or self.ring.order)._key)

    def lc(self, order: MonomialOrder | None = None):
        return self.terms[self.lm(order)]

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.lc(order))
        return self.scale(inv)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, grading=None) -> bool:
        try:
            multidegree(self, grading)
        except InhomogeneousError:
            return False
        return True

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def support(self) -> set:
        s = set()
        for m in self.terms:
            s.update(i for i, e in enumerate(m) if e)
        return s

    # arithmetic
    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        p = self.ring.field.p
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if p:
                v %= p
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t, False)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {m: (-c % p if p else -c) for m, c in self.terms.items()}, False)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.coerce(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.p
        return Polynomial(self.ring, {m: (v * c % p if p else v * c) for m, v in self.terms.items()}, False)

    def mul_term(self, mono: Monomial, c=1) -> "Polynomial":
        p = self.ring.field.p
        c = self.ring.field.coerce(c)
        return Polynomial(
            self.ring,
            {tuple(x + y for x, y in zip(m, mono)): (v * c % p if p else v * c) for m, v in self.terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        p = self.ring.field.p
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        if p:
            t = {m: c % p for m, c in t.items()}
        return Polynomial(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, type(mpq(0)))):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def subs(self, images: Sequence["Polynomial"], target: Ring | None = None) -> "Polynomial":
        """Apply the ring map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.ngens:
            raise ValueError("need one image per variable")
        target = target or (images[0].ring if images else self.ring)
        out = target.zero()
        powers: dict = {}
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    term = term * powers[key]
            out = out + term
        return out

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def format_poly(f: Polynomial) -> str:
    """Canonical text: terms descending in the ring order, reduced-fraction coefficients."""
    if not f.terms:
        return "0"
    out = []
    for m in f.monomials():
        c = f.terms[m]
        neg = f.ring.field.p is None and c < 0
        a = -c if neg else c
        mono = f.ring.format_monomial(m)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def multidegree(f: Polynomial, grading=None) -> tuple:
    """Common degree of all terms of ``f`` under ``grading`` (one vector per variable).

    Without a grading the ring grading is used, and total degree if there is none.
    """
    if not f.terms:
        raise ValueError("the zero polynomial has no degree")
    if grading is None:
        degf = f.ring.degree_of
    else:
        g = [tuple(d) for d in grading]
        width = len(g[0]) if g else 0

        def degf(m):
            out = [0] * width
            for i, e in enumerate(m):
                if e:
                    for k, x in enumerate(g[i]):
                        out[k] += e * x
            return tuple(out)

    first = None
    for m in f.terms:
        d = degf(m)
        if first is None:
            first = d
        elif d != first:
            raise InhomogeneousError(first, d)
    return first


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str):
    pos = 0
    toks = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "" and m.end() == len(text):
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        t = self.toks[self.i]
        if kind is not None and t[0] != kind:
            raise ParseError(f"expected {kind!r}, got {t[1]!r}", t[2])
        self.i += 1
        return t

    def poly(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] in ("*", "/"):
            t = self.take()
            if t[0] == "/":
                raise ParseError("division is not allowed in polynomial input", t[2])
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            t = self.peek()
            if t[0] != "int":
                raise ParseError("malformed exponent", t[2])
            self.take()
            if t[1] > MAX_EXPONENT:
                raise ParseError("exponent too large", t[2])
            base = base ** t[1]
        return base

    def primary(self):
        t = self.peek()
        if t[0] == "int":
            self.take()
            num = t[1]
            if self.peek()[0] == "/":
                slash = self.take()
                d = self.peek()
                if d[0] != "int":
                    raise ParseError("division is not allowed in polynomial input", slash[2])
                self.take()
                if d[1] == 0:
                    raise ParseError("zero denominator", d[2])
                return self.ring.const(mpq(num, d[1]))
            return self.ring.const(num)
        if t[0] == "name":
            self.take()
            if t[1] not in self.ring._index:
                raise ParseError(f"unknown variable {t[1]!r}", t[2])
            return self.ring.gen(t[1])
        if t[0] == "(":
            self.take()
            p = self.poly()
            self.take(")")
            return p
        raise ParseError(f"unexpected token {t[1]!r}", t[2])


def parse(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring`` (see the module docstring for the grammar)."""
    p = _Parser(text, ring)
    if p.peek()[0] == "end":
        raise ParseError("empty input", 0)
    f = p.poly()
    t = p.peek()
    if t[0] != "end":
        raise ParseError(f"unexpected token {t[1]!r}", t[2])
    return f


def parse_many(texts: Iterable[str], ring: Ring) -> list:
    return [parse(t, ring) for t in texts]
