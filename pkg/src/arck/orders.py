"""Monomial orders encoded as integer key matrices.

Every supported order (lex, weighted grevlex, elimination blocks) compares two
exponent vectors by computing an integer key vector through a fixed matrix and
comparing keys lexicographically.  All key rows are linear in the exponents,
which makes every order multiplicative, and every key of a nonconstant
monomial is positive in its first nonzero entry, which makes 1 minimal.
"""

from __future__ import annotations

import numpy as np

from .errors import StructureError

LT, EQ, GT = -1, 0, 1


class TermOrder:
    """A matrix term order on exponent vectors of a fixed length.

    `nelim` is the longest prefix of variables with the elimination property:
    any monomial involving one of the first `nelim` variables is larger than
    every monomial free of them.
    """

    __slots__ = ("kind", "nvars", "matrix", "nelim", "_np_matrix")

    def __init__(self, kind: str, matrix, nelim: int = 0):
        self.kind = kind
        self.matrix = tuple(tuple(row) for row in matrix)
        self.nvars = len(self.matrix[0])
        self.nelim = nelim
        self._np_matrix = None

    def key(self, expts) -> tuple:
        """Integer key; comparing keys lexicographically compares monomials."""
        return tuple(sum(m * e for m, e in zip(row, expts)) for row in self.matrix)

    def compare(self, a, b) -> int:
        """Return LT, EQ or GT for exponent vectors a, b."""
        if len(a) != self.nvars or len(b) != self.nvars:
            raise StructureError(
                f"exponent length mismatch: order on {self.nvars} variables")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return LT
        if ka > kb:
            return GT
        return EQ

    def np_matrix(self) -> np.ndarray:
        if self._np_matrix is None:
            self._np_matrix = np.array(self.matrix, dtype=np.int64)
        return self._np_matrix

    def restrict(self, k: int) -> "TermOrder":
        """The induced order on the last nvars-k variables after eliminating k."""
        if k == 0:
            return self
        if k > self.nelim:
            raise StructureError(
                f"order {self.kind} cannot eliminate the first {k} variables")
        rows = []
        for row in self.matrix:
            tail = row[k:]
            if any(row[:k]):
                continue
            if any(tail):
                rows.append(tail)
        if not rows:
            raise StructureError("restriction produced an empty key matrix")
        kind = self.kind if self.kind == "lex" else f"{self.kind}|last{self.nvars - k}"
        return TermOrder(kind, rows, nelim=max(0, self.nelim - k))

    def __eq__(self, other):
        return (isinstance(other, TermOrder) and other.matrix == self.matrix
                and other.kind == self.kind)

    def __hash__(self):
        return hash((self.kind, self.matrix))

    def __repr__(self):
        return f"TermOrder({self.kind}, {self.nvars} vars)"


def lex_order(nvars: int) -> TermOrder:
    rows = [[1 if j == i else 0 for j in range(nvars)] for i in range(nvars)]
    # lex eliminates every prefix
    return TermOrder("lex", rows, nelim=nvars)


def _grevlex_rows(weights, offset: int, total: int):
    """Key rows for grevlex on a block of variables inside a longer vector."""
    n = len(weights)
    rows = [[0] * offset + list(weights) + [0] * (total - offset - n)]
    for i in range(n - 1, 0, -1):
        row = [0] * total
        row[offset + i] = -1
        rows.append(row)
    return rows


def grevlex_order(weights) -> TermOrder:
    """Degree-first order: weighted total degree, ties by reverse lexicography."""
    weights = tuple(weights)
    return TermOrder("grevlex", _grevlex_rows(weights, 0, len(weights)), nelim=0)


def elimination_order(k: int, weights) -> TermOrder:
    """Block order eliminating the first k variables, grevlex inside each block."""
    weights = tuple(weights)
    n = len(weights)
    if not 0 < k <= n:
        raise StructureError(f"cannot eliminate {k} of {n} variables")
    rows = _grevlex_rows(weights[:k], 0, n)
    if k < n:
        rows += _grevlex_rows(weights[k:], k, n)
    return TermOrder(f"block({k})", rows, nelim=k)


def make_order(kind: str, weights) -> TermOrder:
    """Build an order from its session-file name ('lex' or 'grevlex')."""
    if kind == "lex":
        return lex_order(len(tuple(weights)))
    if kind == "grevlex":
        return grevlex_order(weights)
    raise StructureError(f"unknown order kind {kind!r}")
