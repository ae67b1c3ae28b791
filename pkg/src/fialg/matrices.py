"""Exact dense matrix kernels used by the linear-map layer.

Matrices are lists of columns (column[j][i] is the (i, j) entry), matching
how linear maps store basis images.  Inversion demands a unit determinant:
Bareiss's fraction-free elimination yields the determinant over integer
lifts (integers and residue rings), then the inverse is assembled from the
integral adjugate; rationals invert by ordinary exact elimination.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotInvertibleError
from .rings import IntegerRing, ModularRing, RationalRing, Ring


def identity_columns(ring: Ring, n: int):
    return [
        [ring.one if i == j else ring.zero for i in range(n)] for j in range(n)
    ]


def mat_vec(ring: Ring, columns, vec):
    """Matrix times coordinate vector: sum_j vec[j] * columns[j]."""
    n = len(columns[0]) if columns else 0
    out = [ring.zero] * n
    add, mul = ring.add, ring.mul
    for j, a in enumerate(vec):
        if not a:
            continue
        col = columns[j]
        for i in range(n):
            c = col[i]
            if c:
                out[i] = add(out[i], mul(a, c))
    return out


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix.

    Every intermediate value stays an integer; each elimination step divides
    exactly by the previous pivot (Bareiss's one-step condensation).
    """
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _gauss_jordan_inverse(rows):
    """Exact inverse over the rationals, or None when singular.

    Input rows may be ints or Fractions; output rows are Fractions.
    """
    n = len(rows)
    a = [[Fraction(v) for v in row] for row in rows]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            return None
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = a[col][col]
        if pivot != 1:
            a[col] = [v / pivot for v in a[col]]
            inv[col] = [v / pivot for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
                inv[r] = [v - factor * w for v, w in zip(inv[r], inv[col])]
    return inv


def invert_columns(ring: Ring, columns):
    """Exact two-sided inverse of a square column matrix over the ring.

    Raises NotInvertibleError unless the determinant is a unit.
    """
    n = len(columns)
    if any(len(col) != n for col in columns):
        raise NotInvertibleError("matrix is not square")
    if n == 0:
        return []
    rows = [[columns[j][i] for j in range(n)] for i in range(n)]

    if isinstance(ring, RationalRing):
        inv_rows = _gauss_jordan_inverse(rows)
        if inv_rows is None:
            raise NotInvertibleError("determinant is zero over the rationals")
        return [[inv_rows[i][j] for i in range(n)] for j in range(n)]

    det = bareiss_determinant(rows)

    if isinstance(ring, IntegerRing):
        if det not in (1, -1):
            raise NotInvertibleError(
                f"determinant {det} is not a unit of the integers"
            )
        inv_rows = _gauss_jordan_inverse(rows)
        out = []
        for j in range(n):
            col = []
            for i in range(n):
                v = inv_rows[i][j]
                assert v.denominator == 1
                col.append(int(v))
            out.append(col)
        return out

    if isinstance(ring, ModularRing):
        det_mod = det % ring.modulus
        inv_det = ring.try_invert(det_mod)
        if inv_det is None:
            raise NotInvertibleError(
                f"determinant {det_mod} is not a unit mod {ring.modulus}"
            )
        # det != 0 in Z here, since det % n is a unit; the integral adjugate
        # det * A^-1 reduces mod n to the adjugate of the residue matrix.
        inv_rows = _gauss_jordan_inverse(rows)
        out = []
        for j in range(n):
            col = []
            for i in range(n):
                adj = inv_rows[i][j] * det
                assert adj.denominator == 1
                col.append((int(adj) * inv_det) % ring.modulus)
            out.append(col)
        return out

    raise NotInvertibleError(f"no inversion routine for ring {ring!r}")
