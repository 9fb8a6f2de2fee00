"""Dense exact linear algebra over F_p; matrices are lists of int lists."""

from __future__ import annotations


def inv_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, p - 2, p)


def _rref(rows, p):
    """Reduced row echelon form; returns (rank, matrix, pivot columns)."""
    m = [[x % p for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = inv_mod(m[rank][col], p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(nrows):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
        if rank == nrows:
            break
    return rank, m, pivots


def rank_mod(rows, p):
    return _rref(rows, p)[0]


def nullspace_mod(rows, p):
    """Basis of the right kernel, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    rank, m, pivots = _rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-m[r][fc]) % p
        basis.append(v)
    return basis


def det_mod(rows, p):
    m = [[x % p for x in row] for row in rows]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det % p
        det = det * m[col][col] % p
        inv = inv_mod(m[col][col], p)
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] * inv % p
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[col])]
    return det % p


def pfaffian_mod(rows, p):
    """Pfaffian of a skew matrix over F_p by skew elimination, O(n^3)."""
    n = len(rows)
    if n % 2:
        return 0
    if n == 0:
        return 1
    m = [[x % p for x in row] for row in rows]
    result = 1
    for i in range(0, n, 2):
        piv = next((j for j in range(i + 1, n) if m[i][j]), None)
        if piv is None:
            return 0
        if piv != i + 1:
            m[piv], m[i + 1] = m[i + 1], m[piv]
            for row in m:
                row[piv], row[i + 1] = row[i + 1], row[piv]
            result = -result % p
        a = m[i][i + 1]
        result = result * a % p
        ainv = inv_mod(a, p)
        for r in range(i + 2, n):
            mir = m[i][r]
            mi1r = m[i + 1][r]
            if mir == 0 and mi1r == 0:
                continue
            for c in range(r + 1, n):
                delta = (mir * m[i + 1][c] - m[i][c] * mi1r) % p
                if delta:
                    val = (m[r][c] - delta * ainv) % p
                    m[r][c] = val
                    m[c][r] = -val % p
    return result % p


def random_matrix_mod(nrows, ncols, p, rng):
    return [[rng.randrange(p) for _ in range(ncols)] for _ in range(nrows)]


def random_skew_mod(n, p, rng):
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randrange(p)
            m[i][j] = x
            m[j][i] = (-x) % p
    return m
