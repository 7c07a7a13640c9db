"""Exact integer and modular linear algebra on small dense matrices.

Matrices are lists of lists of Python ints; nothing here overflows.
"""

from __future__ import annotations

from math import gcd

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def rref_mod_p(a: Matrix, p: int) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over the field Z_p, with pivot columns."""
    m = [[x % p for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def nullspace_mod_p(a: Matrix, ncols: int, p: int) -> list[list[int]]:
    """Basis of ``{x : a·x ≡ 0 (mod p)}``, one vector per free column."""
    if not a:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref_mod_p(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = -r[row][f] % p
        basis.append(v)
    return basis


def smith_normal_form(a: Matrix, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(S, P, Q)`` with ``P·A·Q = S`` diagonal and ``P``, ``Q`` unimodular.

    Diagonal entries are non-negative and each divides the next.
    """
    rows = len(a)
    cols = ncols if ncols is not None else (len(a[0]) if a else 0)
    s = [list(row) for row in a]
    p = identity(rows)
    q = identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        s[dst] = [x + f * y for x, y in zip(s[dst], s[src])]
        p[dst] = [x + f * y for x, y in zip(p[dst], p[src])]

    def add_col(dst, src, f):
        for row in s:
            row[dst] += f * row[src]
        for row in q:
            row[dst] += f * row[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
            if not entries:
                return s, p, q
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            piv = s[t][t]
            clean = True
            for i in range(t + 1, rows):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // piv))
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, cols):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // piv))
                    clean = clean and s[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # fold the offending row in so the next pass sees a smaller remainder
            add_row(t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            p[t] = [-x for x in p[t]]
    return s, p, q


def kernel_generators_snf(a: Matrix, ncols: int, d: int) -> list[list[int]]:
    """Generators of ``{x ∈ Z_d^n : a·x ≡ 0 (mod d)}`` via the Smith form over Z."""
    s, _, q = smith_normal_form(a, ncols)
    gens = []
    for i in range(ncols):
        diag = s[i][i] if i < len(s) else 0
        mult = d // gcd(diag, d)
        v = [q[r][i] * mult % d for r in range(ncols)]
        if any(v):
            gens.append(v)
    return gens
