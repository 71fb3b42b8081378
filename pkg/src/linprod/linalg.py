"""Exact sparse linear algebra over QQ or GF(p).

Vectors are dicts ``{column: value}`` with nonzero values.  The workhorse is
:class:`Echelon`, an incrementally grown basis of a subspace kept in echelon
form: inserting a vector reports whether it was independent, and reducing a
vector gives its normal form modulo the subspace.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

from .polyring import QQ, Field


class Echelon:
    """Row-echelon basis of a subspace, built one vector at a time.

    Each stored row is fully reduced against the pivots that existed when it
    was inserted, so reducing in insertion order terminates after one pass.
    With ``track=True`` every row also remembers the combination of inserted
    vectors it came from (used to extract kernels).
    """

    def __init__(self, field: Field = QQ, track: bool = False):
        self.field = field
        self.p = field.p
        self.rows: list = []  # (pivot, row, combo)
        self.pivots: dict = {}
        self.track = track
        self.count = 0

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _axpy(self, v: dict, a, row: dict):
        p = self.p
        for c, x in row.items():
            y = v.get(c, 0) - a * x
            if p:
                y %= p
            if y:
                v[c] = y
            else:
                v.pop(c, None)

    def reduce(self, vec: dict, combo: dict | None = None):
        v = dict(vec)
        if not v:
            return v, combo
        for piv, row, rcombo in self.rows:
            a = v.get(piv)
            if a:
                self._axpy(v, a, row)
                if combo is not None:
                    self._axpy(combo, a, rcombo)
        return v, combo

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def insert(self, vec: dict, label=None) -> bool:
        """Add ``vec``; return True if it enlarged the span.

        With tracking on, a dependent vector yields a kernel relation stored in
        :attr:`relations` as a dict ``{label: coeff}``.
        """
        combo = None
        if self.track:
            lab = self.count if label is None else label
            combo = {lab: self.field.coerce(1)}
        self.count += 1
        v, combo = self.reduce(vec, combo)
        if not v:
            if self.track:
                self.relations.append(combo)
            return False
        piv = min(v)
        inv = self.field.inv(v[piv])
        p = self.p
        if inv != 1:
            v = {c: (x * inv % p if p else x * inv) for c, x in v.items()}
            if combo is not None:
                combo = {c: (x * inv % p if p else x * inv) for c, x in combo.items()}
        self.rows.append((piv, v, combo))
        self.pivots[piv] = len(self.rows) - 1
        return True

    @property
    def relations(self) -> list:
        if not hasattr(self, "_relations"):
            self._relations = []
        return self._relations

    def basis(self) -> list:
        return [row for _, row, _ in self.rows]


def rank(vectors: Iterable[dict], field: Field = QQ) -> int:
    e = Echelon(field)
    for v in vectors:
        e.insert(v)
    return e.rank


def kernel(columns: Sequence[dict], field: Field = QQ) -> list:
    """Basis of ``{c : sum_j c_j columns[j] = 0}`` as dicts ``{j: c_j}``."""
    e = Echelon(field, track=True)
    for j, col in enumerate(columns):
        e.insert(col, label=j)
    return e.relations


def extend_to_complement(span: Echelon, candidates: Iterable[dict]) -> list:
    """Candidates (in order) that are independent modulo ``span``; ``span`` is grown in place."""
    picked = []
    for v in candidates:
        if span.insert(v):
            picked.append(v)
    return picked


def rref(vectors: Iterable[dict], field: Field = QQ) -> list:
    """Reduced row echelon form; rows sorted by pivot, pivots normalized to 1."""
    e = Echelon(field)
    for v in vectors:
        e.insert(v)
    rows = sorted(e.rows, key=lambda r: r[0])
    out = []
    p = field.p
    # back substitution: clear pivot columns above
    done: list = []
    for piv, row, _ in reversed(rows):
        row = dict(row)
        for piv2, row2 in done:
            a = row.get(piv2)
            if a:
                for c, x in row2.items():
                    y = row.get(c, 0) - a * x
                    if p:
                        y %= p
                    if y:
                        row[c] = y
                    else:
                        row.pop(c, None)
        done.append((piv, row))
    for piv, row in reversed(done):
        out.append(row)
    return out


def dense_to_sparse(row: Sequence) -> dict:
    return {j: mpq(x) for j, x in enumerate(row) if x}
