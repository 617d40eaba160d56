"""Solving ``M x = b`` over the integers by unimodular row reduction."""
from __future__ import annotations

from typing import List, Optional, Sequence


def _swap(rows, i, j):
    rows[i], rows[j] = rows[j], rows[i]


def _axpy(rows, dst, src, q):
    """rows[dst] -= q * rows[src]"""
    s = rows[src]
    rows[dst] = [x - q * y for x, y in zip(rows[dst], s)]


class IntegerSystem:
    """Row echelon form of ``M^T`` together with the unimodular transform.

    Factor once, then call :meth:`solve` for as many right-hand sides as needed.
    """

    def __init__(self, matrix: Sequence[Sequence[int]]):
        m = [list(r) for r in matrix]
        self.nrows = len(m)
        self.ncols = len(m[0]) if m else 0
        # columns of M become rows; column operations on M are row operations here
        t = [[m[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        u = [[int(i == j) for j in range(self.ncols)] for i in range(self.ncols)]
        self.pivots: List[int] = []
        r = 0
        for col in range(self.nrows):
            if r == self.ncols:
                break
            while True:
                live = [i for i in range(r, self.ncols) if t[i][col]]
                if not live:
                    break
                best = min(live, key=lambda i: abs(t[i][col]))
                _swap(t, r, best)
                _swap(u, r, best)
                others = [i for i in range(r + 1, self.ncols) if t[i][col]]
                if not others:
                    break
                for i in others:
                    q = t[i][col] // t[r][col]
                    _axpy(t, i, r, q)
                    _axpy(u, i, r, q)
            if t[r][col]:
                self.pivots.append(col)
                r += 1
        self.rank = r
        self._echelon = t
        self._transform = u

    def solve(self, rhs: Sequence[int]) -> Optional[List[int]]:
        """An integer solution of ``M x = rhs``, or None if there is none."""
        if len(rhs) != self.nrows:
            raise ValueError(f"rhs has length {len(rhs)}, expected {self.nrows}")
        residual = list(rhs)
        y = [0] * self.ncols
        for i, col in enumerate(self.pivots):
            row = self._echelon[i]
            q, rem = divmod(residual[col], row[col])
            if rem:
                return None
            y[i] = q
            if q:
                residual = [a - q * b for a, b in zip(residual, row)]
        if any(residual):
            return None
        x = [0] * self.ncols
        for i in range(self.rank):
            if y[i]:
                ui = self._transform[i]
                x = [a + y[i] * b for a, b in zip(x, ui)]
        return x
