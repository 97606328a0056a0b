"""Block model of H over the Grassmann algebra Gr(2).

A block M_{e|o} consists of (e+o) x (e+o) matrices whose entries are even
Grassmann elements (alpha + beta t1 t2) on the two diagonal blocks and odd ones
(gamma t1 + delta t2) off the diagonal.  Its column modules are the principal
indecomposable modules; their submodules are found by span closure under left
multiplication by a basis of the block.
"""

from dataclasses import dataclass

from .linalg import Subspace, kernel

__all__ = [
    "GrassmannElement",
    "BlockShape",
    "ColumnChain",
    "block_shapes",
    "model_block_dimensions",
    "model_radical_dimension",
    "column_chain",
    "model_chains",
]

# basis order: 1, t1, t2, t1 t2
_ONE, _T1, _T2, _T12 = 0, 1, 2, 3
_EVEN = (_ONE, _T12)
_ODD = (_T1, _T2)

# product table of basis monomials: (i, j) -> (k, sign) or absent if zero
_TABLE = {
    (_ONE, _ONE): (_ONE, 1), (_ONE, _T1): (_T1, 1), (_ONE, _T2): (_T2, 1), (_ONE, _T12): (_T12, 1),
    (_T1, _ONE): (_T1, 1), (_T2, _ONE): (_T2, 1), (_T12, _ONE): (_T12, 1),
    (_T1, _T2): (_T12, 1), (_T2, _T1): (_T12, -1),
}


class GrassmannElement:
    """c0 + c1 t1 + c2 t2 + c12 t1 t2 with t1^2 = t2^2 = 0, t1 t2 = -t2 t1."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, c0=0, c1=0, c2=0, c12=0):
        self.field = field
        self.coeffs = tuple(field(c) for c in (c0, c1, c2, c12))

    @property
    def c0(self):
        return self.coeffs[0]

    @property
    def c1(self):
        return self.coeffs[1]

    @property
    def c2(self):
        return self.coeffs[2]

    @property
    def c12(self):
        return self.coeffs[3]

    def __add__(self, other):
        return GrassmannElement(self.field, *(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return GrassmannElement(self.field, *(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        out = [self.field.zero] * 4
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                hit = _TABLE.get((i, j))
                if hit and b:
                    k, sign = hit
                    out[k] = out[k] + a * b * sign
        return GrassmannElement(self.field, *out)

    def __eq__(self, other):
        return isinstance(other, GrassmannElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def parity(self):
        """0 for even, 1 for odd, None for mixed or zero."""
        even = any(self.coeffs[i] for i in _EVEN)
        odd = any(self.coeffs[i] for i in _ODD)
        if even and not odd:
            return 0
        if odd and not even:
            return 1
        return None

    def __repr__(self):
        return "GrassmannElement(%s)" % ", ".join(str(c) for c in self.coeffs)


@dataclass
class BlockShape:
    """M_{n_even|n_odd}: index i < n_even is even, the rest odd."""

    n_even: int
    n_odd: int

    @property
    def size(self):
        return self.n_even + self.n_odd

    def index_parity(self, i):
        return 0 if i < self.n_even else 1

    def entry_parity(self, i, j):
        return self.index_parity(i) ^ self.index_parity(j)

    def allowed(self, i, j):
        return _EVEN if self.entry_parity(i, j) == 0 else _ODD

    def dimension(self):
        if self.n_odd == 0:
            return self.n_even ** 2  # plain matrix block, no Grassmann variables
        return sum(len(self.allowed(i, j)) for i in range(self.size) for j in range(self.size))

    def basis(self):
        """Basis elements (i, j, g): the unit matrix E_ij times Grassmann monomial g."""
        if self.n_odd == 0:
            return [(i, j, _ONE) for i in range(self.size) for j in range(self.size)]
        return [(i, j, g) for i in range(self.size) for j in range(self.size)
                for g in self.allowed(i, j)]

    def radical_basis(self):
        """Basis elements with entries in the ideal generated by t1, t2."""
        return [b for b in self.basis() if b[2] != _ONE]

    def column_basis(self, col):
        """Keys (row, g) of the column module at the given column."""
        if self.n_odd == 0:
            return [(i, _ONE) for i in range(self.size)]
        return [(i, g) for i in range(self.size) for g in self.allowed(i, col)]


def _mul_monomials(g1, g2):
    return _TABLE.get((g1, g2))


def _left_mult(field, elem, v):
    """Basis element (i, j, g) times a column vector {(row, g'): scalar}."""
    i, j, g = elem
    out = {}
    for (row, g2), c in v.items():
        if row != j:
            continue
        hit = _mul_monomials(g, g2)
        if hit is None:
            continue
        k, sign = hit
        key = (i, k)
        val = out.get(key, field.zero) + c * sign
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return out


def block_shapes(n):
    """M_N, M_{N-1|1}, ..., M_{(N+1)/2|(N-1)/2}."""
    return [BlockShape(n - p, p) for p in range((n - 1) // 2 + 1)]


def model_block_dimensions(n):
    return [s.dimension() for s in block_shapes(n)]


def model_radical_dimension(n):
    return sum(len(s.radical_basis()) for s in block_shapes(n) if s.n_odd)


def check_closure(field, shape):
    """Products of basis elements respect the parity pattern."""
    allowed = set(shape.basis())
    for i, j, g in shape.basis():
        for j2, k, g2 in shape.basis():
            if j != j2:
                continue
            hit = _mul_monomials(g, g2)
            if hit and (i, k, hit[0]) not in allowed:
                return False
    return True


class _ColumnModule:
    def __init__(self, field, shape, col):
        self.field = field
        self.shape = shape
        self.col = col
        self.keys = shape.column_basis(col)
        self.algebra_basis = shape.basis()

    def generated(self, vectors):
        sub = Subspace(field=self.field)
        queue = []
        for v in vectors:
            res = sub.reduce(v)
            if res:
                sub.add(res)
                queue.append(res)
        while queue:
            v = queue.pop()
            for b in self.algebra_basis:
                w = _left_mult(self.field, b, v)
                if w:
                    res = sub.reduce(w)
                    if res:
                        sub.add(res)
                        queue.append(res)
        return sub

    def radical(self):
        out = Subspace(field=self.field)
        one = self.field.one
        for b in self.shape.radical_basis():
            for k in self.keys:
                w = _left_mult(self.field, b, {k: one})
                if w:
                    out.add(w)
        return out

    def socle(self):
        """Vectors killed by every radical element of the block."""
        one = self.field.one
        rad = self.shape.radical_basis()
        columns = []
        for k in self.keys:
            col = {}
            for idx, b in enumerate(rad):
                for key, c in _left_mult(self.field, b, {k: one}).items():
                    col[(idx,) + key] = c
            columns.append(col)
        out = Subspace(field=self.field)
        for rel in kernel(columns, self.field):
            out.add({self.keys[i]: c for i, c in rel.items()})
        return out


@dataclass
class ColumnChain:
    shape: tuple
    column_parity: int
    top_dim: int
    dims: list
    middle: dict  # lambda (l1, l2) -> (dim, invariant dim)


def column_chain(field, shape, col, lambdas=((1, 0), (0, 1), (1, 1), (2, -3))):
    """Submodule chain 0 < soc < N_lambda < rad < P of a column module."""
    mod = _ColumnModule(field, shape, col)
    total = len(mod.keys)
    top_dim = shape.n_even if shape.index_parity(col) == 0 else shape.n_odd
    if shape.n_odd == 0:
        whole = mod.generated([{k: field.one} for k in mod.keys])
        return ColumnChain((shape.n_even, shape.n_odd), 0, top_dim, [0, whole.dim], {})
    rad = mod.radical()
    soc = mod.socle()
    middle = {}
    mids = []
    # odd-parity rows relative to the column carry odd entries gamma t1 + delta t2
    other_rows = [i for i in range(shape.size) if shape.entry_parity(i, col) == 1]
    for l1, l2 in lambdas:
        v = {}
        if l1:
            v[(other_rows[0], _T1)] = field(l1)
        if l2:
            v[(other_rows[0], _T2)] = field(l2)
        sub = mod.generated([v] + soc.basis())
        middle[(l1, l2)] = (sub.dim, soc.dim)
        mids.append(sub)
    for a_i, a in enumerate(mids):
        for b in mids[a_i + 1:]:
            if a == b:
                raise RuntimeError("distinct lambda gave the same middle module")
    dims = [0, soc.dim, mids[0].dim, rad.dim, total]
    return ColumnChain((shape.n_even, shape.n_odd), shape.index_parity(col), top_dim, dims, middle)


def model_chains(field):
    """One chain per column type of each block: {top dimension: ColumnChain}."""
    out = {}
    for shape in block_shapes(field.n):
        cols = [0] if shape.n_odd == 0 else [0, shape.size - 1]
        for col in cols:
            ch = column_chain(field, shape, col)
            out[ch.top_dim] = ch
    return out
