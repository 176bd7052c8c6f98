"""Linear algebra over the prime field F_q with plain integer lists."""

from __future__ import annotations

from typing import Optional, Sequence


def rank_mod(rows: Sequence[Sequence[int]], q: int) -> int:
    mat = [[v % q for v in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], -1, q)
        mat[rank] = [v * inv % q for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                c = mat[i][col]
                mat[i] = [(a - c * b) % q for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


class _Echelon:
    """Rows added one at a time; each independent row becomes a coordinate
    ``z_j`` and each dependent row is recorded as a combination of them."""

    def __init__(self, ncols: int, q: int):
        self.q = q
        self.ncols = ncols
        self.basis = []  # (pivot, vec, comb) with vec = sum comb[j] * R_j
        self.independent = []  # original row indices
        self.dependent = []  # (original index, alpha)

    def add(self, index: int, row: Sequence[int]):
        q = self.q
        w = [v % q for v in row]
        coeffs = []
        for piv, vec, _ in self.basis:
            c = w[piv] * pow(vec[piv], -1, q) % q
            coeffs.append(c)
            if c:
                w = [(a - c * b) % q for a, b in zip(w, vec)]
        r = len(self.independent)
        comb_len = r + 1
        acc = [0] * comb_len
        for c, (_, _, bcomb) in zip(coeffs, self.basis):
            if c:
                for j, v in enumerate(bcomb):
                    acc[j] = (acc[j] + c * v) % q
        if not any(w):
            self.dependent.append((index, acc[:r]))
            return
        self.independent.append(index)
        comb = [(-v) % q for v in acc]
        comb[r] = 1
        piv = next(i for i, v in enumerate(w) if v)
        self.basis.append((piv, w, comb))

    def solve(self, z: Sequence[int]) -> list[int]:
        """Some ``b`` with ``R_j . b = z_j`` for all independent rows."""
        q = self.q
        b = [0] * self.ncols
        for piv, vec, comb in reversed(self.basis):
            y = sum(c * zj for c, zj in zip(comb, z)) % q
            rest = sum(vec[c] * b[c] for c in range(self.ncols) if c != piv)
            b[piv] = (y - rest) * pow(vec[piv], -1, q) % q
        return b


def avoid_values(rows: Sequence[Sequence[int]], forbidden: Sequence[int],
                 q: int, budget: int = 1_000_000) -> Optional[list[int]]:
    """Find ``b`` over F_q with ``rows[i] . b != forbidden[i]`` for every i.

    Independent rows become free coordinates that just dodge their own
    forbidden value; each dependent row forbids one more value of the last
    coordinate it involves.  Coordinates are assigned in order with
    backtracking, so a solution is found whenever one exists (within budget).
    """
    if not rows:
        return []
    ech = _Echelon(len(rows[0]), q)
    for i, row in enumerate(rows):
        ech.add(i, row)
    r = len(ech.independent)
    target = [forbidden[i] % q for i in ech.independent]
    checks: list[list] = [[] for _ in range(r)]
    for index, alpha in ech.dependent:
        support = [j for j, a in enumerate(alpha) if a]
        if not support:
            if forbidden[index] % q == 0:
                return None  # zero row that must avoid zero
            continue
        checks[support[-1]].append((alpha, forbidden[index] % q))

    z = [0] * r
    choice = [0] * (r + 1)
    j = 0
    nodes = 0
    while 0 <= j < r:
        placed = False
        while choice[j] < q:
            v = choice[j]
            choice[j] += 1
            if v == target[j]:
                continue
            z[j] = v
            nodes += 1
            if nodes > budget:
                return None
            if all(sum(a * zz for a, zz in zip(alpha, z[: j + 1])) % q != bad
                   for alpha, bad in checks[j]):
                placed = True
                break
        if placed:
            j += 1
            if j < r:
                choice[j] = 0
        else:
            j -= 1
    if j < 0:
        return None
    return ech.solve(z)
