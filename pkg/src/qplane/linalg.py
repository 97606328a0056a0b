"""Exact sparse linear algebra over Q(q).

Vectors are plain dicts ``{key: CycScalar}`` holding only nonzero entries;
keys must be mutually comparable (ints or exponent tuples).  Elimination is
pivoted on the smallest key of each row, which keeps row echelon form valid
without ever reordering columns.
"""

__all__ = [
    "vec_add",
    "vec_scale",
    "vec_axpy",
    "Subspace",
    "kernel",
    "rank",
    "solve",
    "determinant",
    "inverse",
    "is_zero",
]


def is_zero(v):
    return not v


def vec_axpy(y, a, x):
    """Return y + a*x as a new dict."""
    out = dict(y)
    if not a:
        return out
    for k, c in x.items():
        s = out.get(k)
        s = c * a if s is None else s + c * a
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _axpy_inplace(y, a, x):
    for k, c in x.items():
        s = y.get(k)
        s = c * a if s is None else s + c * a
        if s:
            y[k] = s
        else:
            del y[k]


def vec_add(x, y):
    out = dict(x)
    for k, c in y.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a, x):
    if not a:
        return {}
    return {k: c * a for k, c in x.items()}


class Subspace:
    """Span of a growing set of sparse vectors, kept in row echelon form.

    When ``track`` is true every echelon row remembers which combination of
    the inserted vectors (numbered by insertion order) produced it, so
    coordinates and kernel relations can be recovered.
    """

    def __init__(self, vectors=(), track=False, field=None):
        self.field = field
        self.rows = {}  # pivot key -> row with leading coefficient 1
        self.track = track
        self.combos = {}
        self.relations = []
        self._count = 0
        for v in vectors:
            self.add(v)

    @property
    def dim(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def _reduce(self, v, combo=None):
        v = dict(v)
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                break
            c = v[p]
            _axpy_inplace(v, -c, row)
            if combo is not None:
                _axpy_inplace(combo, -c, self.combos[p])
        return v

    def reduce(self, v):
        """Residue of v after elimination against the echelon rows."""
        return self._reduce(v)

    def normal_form(self, v):
        """Representative of v modulo the span with no pivot keys in its support."""
        v = dict(v)
        done = set()
        while True:
            todo = [k for k in v if k in self.rows and k not in done]
            if not todo:
                return v
            p = min(todo)
            c = v[p]
            _axpy_inplace(v, -c, self.rows[p])
            done.add(p)

    def __contains__(self, v):
        return not self._reduce(v)

    def add(self, v):
        """Insert v; returns True when the span grew."""
        index = self._count
        self._count += 1
        combo = None
        if self.track:
            if self.field is None:
                raise ValueError("a tracking Subspace needs its field")
            combo = {index: self.field.one}
        res = self._reduce(v, combo)
        if not res:
            if self.track:
                self.relations.append(combo)
            return False
        p = min(res)
        lead = res[p].inverse()
        self.rows[p] = {k: c * lead for k, c in res.items()}
        if self.track:
            self.combos[p] = {k: c * lead for k, c in combo.items()}
        return True

    def extend(self, vectors):
        grew = False
        for v in vectors:
            grew = self.add(v) or grew
        return grew

    def basis(self):
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self):
        return sorted(self.rows)

    def express(self, v):
        """Coefficients c_i with v = sum c_i * (i-th inserted vector).

        Requires ``track=True``; raises ValueError when v is outside the span.
        """
        if not self.track:
            raise ValueError("express() needs a tracking Subspace")
        combo = {}
        v = dict(v)
        while v:
            p = min(v)
            row = self.rows.get(p)
            if row is None:
                raise ValueError("vector is not in the span")
            c = v[p]
            _axpy_inplace(v, -c, row)
            _axpy_inplace(combo, c, self.combos[p])
        return combo

    def is_subspace_of(self, other):
        return all(r in other for r in self.rows.values())

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.is_subspace_of(other)

    __hash__ = None

    def copy(self):
        s = Subspace(field=self.field)
        s.rows = dict(self.rows)
        return s

    def sum(self, other):
        s = self.copy()
        s.extend(other.rows.values())
        return s


def kernel(columns, field):
    """Basis of the null space of the linear map sending e_j to columns[j].

    ``columns`` is a sequence of sparse vectors; returned kernel vectors are
    dicts keyed by column index.
    """
    space = Subspace(track=True, field=field)
    for col in columns:
        space.add(col)
    return space.relations


def rank(vectors):
    return Subspace(vectors).dim


def solve(columns, rhs, field):
    """Some x with sum_j x_j * columns[j] = rhs, or None if inconsistent."""
    space = Subspace(track=True, field=field)
    for col in columns:
        space.add(col)
    try:
        return space.express(rhs)
    except ValueError:
        return None


def determinant(matrix, field):
    """Exact determinant of a dense square matrix (list of rows of scalars)."""
    n = len(matrix)
    rows = [list(r) for r in matrix]
    det = field.one
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            return field.zero
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det = det * p
        inv = p.inverse()
        for r in range(col + 1, n):
            f = rows[r][col]
            if f:
                f = f * inv
                rows[r] = [a - f * b if b else a for a, b in zip(rows[r], rows[col])]
    return det


def inverse(matrix, field):
    """Exact inverse of a dense square matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [a * inv for a in aug[col]]
        for r in range(n):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [a - f * b if b else a for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
