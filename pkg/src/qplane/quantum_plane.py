"""The reduced quantum plane M: xy = q yx, x^N = y^N = 1.

Elements are linear combinations of normal-ordered monomials x^r y^s with
0 <= r, s < N.  ``realize`` maps them onto N x N matrices (x diagonal, y the
cyclic shift) and ``unrealize`` inverts that map.
"""

from .element import Element
from .linalg import inverse, Subspace

__all__ = [
    "PlaneElement",
    "PlaneMatrix",
    "x",
    "y",
    "monomial",
    "plane_basis",
    "plane_mul",
    "realize",
    "unrealize",
    "monomial_matrix_rank",
]


class PlaneElement(Element):
    """Element of M keyed by exponent pairs (r, s) meaning x^r y^s."""

    __slots__ = ()
    algebra = "plane"
    unit_key = (0, 0)

    def _normalize_key(self, key):
        n = self.field.n
        r, s = key
        return (r % n, s % n)

    def _mul_keys(self, k1, k2):
        # x^a y^b x^c y^d = q^(-bc) x^(a+c) y^(b+d)
        n = self.field.n
        a, b = k1
        c, d = k2
        return {((a + c) % n, (b + d) % n): self.field.q_pow(-b * c)}


def monomial(field, r, s):
    return PlaneElement(field, {(r, s): field.one})


def x(field):
    return monomial(field, 1, 0)


def y(field):
    return monomial(field, 0, 1)


def plane_basis(field):
    n = field.n
    return [(r, s) for r in range(n) for s in range(n)]


def plane_mul(u, v):
    return u * v


class PlaneMatrix:
    """Dense N x N matrix over Q(q)."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        n = field.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"PlaneMatrix must be {n}x{n}")
        self.field = field
        self.rows = tuple(tuple(field(c) for c in r) for r in rows)

    @classmethod
    def identity(cls, field):
        n = field.n
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, field, i, j):
        n = field.n
        return cls(field, [[1 if (a, b) == (i, j) else 0 for b in range(n)] for a in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, PlaneMatrix):
            return NotImplemented
        n = self.field.n
        zero = self.field.zero
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    a = self.rows[i][k]
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PlaneMatrix(self.field, out)

    def __add__(self, other):
        return PlaneMatrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return PlaneMatrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                        for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, s):
        return PlaneMatrix(self.field, [[a * s for a in r] for r in self.rows])

    def __pow__(self, k):
        result = PlaneMatrix.identity(self.field)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, PlaneMatrix):
            return NotImplemented
        return self.field is other.field and self.rows == other.rows

    __hash__ = None

    def flatten(self):
        """Sparse vector keyed by (i, j)."""
        n = self.field.n
        return {(i, j): self.rows[i][j] for i in range(n) for j in range(n) if self.rows[i][j]}

    def __str__(self):
        width = max(len(str(c)) for r in self.rows for c in r)
        return "\n".join("[" + "  ".join(str(c).rjust(width) for c in r) + "]" for r in self.rows)


def _monomial_matrix_entries(field, r, s):
    # x^r y^s has entry q^(-r i) at (i, i + s mod N)
    n = field.n
    return {(i, (i + s) % n): field.q_pow(-r * i) for i in range(n)}


def realize(u):
    """Matrix of u with x = diag(1, q^-1, ..., q^-(N-1)) and y the cyclic shift."""
    field = u.field
    n = field.n
    grid = [[field.zero] * n for _ in range(n)]
    for (r, s), c in u.terms.items():
        for (i, j), e in _monomial_matrix_entries(field, r, s).items():
            grid[i][j] = grid[i][j] + c * e
    return PlaneMatrix(field, grid)


def _vandermonde_inverse(field):
    """Inverse of V[i][r] = q^(-r i).

    realize(x^r y^s) only touches the s-th cyclic diagonal, so the N^2 x N^2
    change of basis is block diagonal with N copies of V.
    """
    cache = field.cache("vandermonde_inverse")
    inv = cache.get("inv")
    if inv is None:
        n = field.n
        v = [[field.q_pow(-r * i) for r in range(n)] for i in range(n)]
        try:
            inv = inverse(v, field)
        except ZeroDivisionError as exc:  # only possible if q were not primitive
            raise RuntimeError("monomial-to-matrix map is singular; q is not primitive") from exc
        cache["inv"] = inv
    return inv


def unrealize(m):
    """Expand an N x N matrix in the monomial basis x^r y^s."""
    field = m.field
    n = field.n
    inv = _vandermonde_inverse(field)
    terms = {}
    for s in range(n):
        diag = [m.rows[i][(i + s) % n] for i in range(n)]
        if not any(diag):
            continue
        for r in range(n):
            acc = field.zero
            for i in range(n):
                if diag[i]:
                    acc = acc + inv[r][i] * diag[i]
            if acc:
                terms[(r, s)] = acc
    return PlaneElement(field, terms)


def monomial_matrix_rank(field):
    """Rank of the N^2 flattened matrices realize(x^r y^s); N^2 when independent."""
    return Subspace(realize(monomial(field, r, s)).flatten() for r, s in plane_basis(field)).dim
