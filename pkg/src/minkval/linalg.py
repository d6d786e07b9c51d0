"""Small exact linear-algebra routines over rationals.

Matrices are lists of row tuples with ``int`` or ``fractions.Fraction``
entries.  Ambient dimensions are at most 4 and interpolation systems have
at most a dozen unknowns, so everything here is plain Gaussian
elimination; clarity and exactness win over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant of a square matrix, exact."""
    n = len(rows)
    m = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / pivot
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    result = Fraction(sign)
    for i in range(n):
        result *= m[i][i]
    return result


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix via fraction-free (Bareiss) elimination.

    Stays in ``int`` throughout, which is considerably faster than Fraction
    arithmetic for the hull kernel's orientation tests.
    """
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(row) for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = m[col][col]
    return sign * m[n - 1][n - 1]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a (rectangular) matrix, exact."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][col]
        for i in range(nrows):
            if i != r and m[i][col] != 0:
                factor = m[i][col] / pivot
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def solve(a_rows: Sequence[Sequence], b: Sequence) -> Vec:
    """Solve the square system ``A x = b`` exactly.

    Raises ``ValueError`` if the matrix is singular.
    """
    n = len(a_rows)
    m = [[Fraction(x) for x in row] + [Fraction(rhs)]
         for row, rhs in zip(a_rows, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        pivot = m[col][col]
        m[col] = [x / pivot for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def normal_to(vectors: Sequence[Sequence[int]], d: int) -> tuple[int, ...]:
    """Integer vector orthogonal to ``d - 1`` integer vectors in Z^d.

    Generalized cross product: component ``i`` is the signed cofactor of
    the matrix whose rows are the input vectors with column ``i`` removed.
    Returns the zero vector iff the inputs are linearly dependent.
    """
    comps = []
    for i in range(d):
        minor = [[v[j] for j in range(d) if j != i] for v in vectors]
        c = int_det(minor) if d > 1 else 1
        comps.append(c if i % 2 == 0 else -c)
    return tuple(comps)


def independent_rows(rows: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset of rows, greedily."""
    basis: list[list[Fraction]] = []
    picked: list[int] = []
    for idx, row in enumerate(rows):
        vec = [Fraction(x) for x in row]
        for b in basis:
            lead = next((j for j, x in enumerate(b) if x != 0), None)
            if lead is not None and vec[lead] != 0:
                factor = vec[lead] / b[lead]
                vec = [a - factor * c for a, c in zip(vec, b)]
        if any(x != 0 for x in vec):
            basis.append(vec)
            picked.append(idx)
    return picked


def int_independent_rows(rows: Sequence[Sequence[int]]) -> list[int]:
    """Greedy independent subset of integer rows, fraction-free.

    Cross-multiplication keeps everything in int; each accepted basis row
    has zeros at the lead positions of all earlier basis rows, so the
    sequential elimination never reintroduces cleared entries.
    """
    basis: list[list[int]] = []
    leads: list[int] = []
    picked: list[int] = []
    for idx, row in enumerate(rows):
        v = list(row)
        for b, lead in zip(basis, leads):
            if v[lead] != 0:
                f_keep, f_drop = b[lead], v[lead]
                v = [a * f_keep - c * f_drop for a, c in zip(v, b)]
        lead = next((j for j, x in enumerate(v) if x != 0), None)
        if lead is not None:
            basis.append(v)
            leads.append(lead)
            picked.append(idx)
    return picked


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(int_independent_rows(rows))
