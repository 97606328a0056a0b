"""The dual quantum group F: a, b, c (d eliminated), its coproduct, the pairing
with H and the two H-actions on F.

Relations used for normal ordering in the basis a^i b^j c^k:
    ba = q^-1 ab,  ca = q^-1 ac,  cb = bc,  a^N = 1,  b^N = c^N = 0,
and d = a^(N-1)(1 + q bc) is substituted on input.
"""

from .element import Element
from .hopf import HElement, h_basis, _coproduct_basis
from .linalg import determinant

__all__ = [
    "FElement",
    "FTensor",
    "fa",
    "fb",
    "fc",
    "fd",
    "f_basis",
    "f_mul",
    "f_coproduct",
    "f_counit",
    "f_tensor",
    "pair",
    "pair_tensor",
    "h_act_on_f",
    "gram_matrix",
    "gram_determinant",
    "generator_matrix",
]


class FElement(Element):
    """Element of F keyed by (i, j, k) for a^i b^j c^k."""

    __slots__ = ()
    algebra = "dual"
    unit_key = (0, 0, 0)

    def _normalize_key(self, key):
        n = self.field.n
        i, j, k = key
        if j >= n or k >= n:
            return None
        return (i % n, j, k)

    def _mul_keys(self, k1, k2):
        return _f_key_product(self.field, k1, k2)


def f_basis(field):
    n = field.n
    return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]


def fa(field):
    return FElement(field, {(1, 0, 0): field.one})


def fb(field):
    return FElement(field, {(0, 1, 0): field.one})


def fc(field):
    return FElement(field, {(0, 0, 1): field.one})


def fd(field):
    """d = a^(N-1) (1 + q bc)."""
    n = field.n
    return FElement(field, {(n - 1, 0, 0): field.one, (n - 1, 1, 1): field.q})


def f_mul(u, v):
    return u * v


class FTensor(Element):
    """Element of F (x) F (or more legs): keys are tuples of F basis keys."""

    __slots__ = ()
    algebra = "dual_tensor"

    def _normalize_key(self, key):
        n = self.field.n
        out = []
        for i, j, k in key:
            if j >= n or k >= n:
                return None
            out.append((i % n, j, k))
        return tuple(out)

    def _mul_keys(self, k1, k2):
        field = self.field
        coeff = field.one
        out = []
        for l1, l2 in zip(k1, k2):
            prod = _f_key_product(field, l1, l2)
            if not prod:
                return {}
            (k, c), = prod.items()
            coeff = coeff * c
            out.append(k)
        return {tuple(out): coeff}


def _f_key_product(field, k1, k2):
    # b^j c^m a^i2 = q^(-(j+m) i2) a^i2 b^j c^m
    n = field.n
    i1, j1, m1 = k1
    i2, j2, m2 = k2
    if j1 + j2 >= n or m1 + m2 >= n:
        return {}
    return {((i1 + i2) % n, j1 + j2, m1 + m2): field.q_pow(-(j1 + m1) * i2)}


def f_tensor(*factors):
    field = factors[0].field
    terms = {(): field.one}
    for f in factors:
        nxt = {}
        for prefix, v in terms.items():
            for k, w in f.terms.items():
                nxt[prefix + (k,)] = v * w
        terms = nxt
    return FTensor(field, terms)


def _generator_coproducts(field):
    cache = field.cache("f_gen_coproduct")
    if not cache:
        a, b, c, d = fa(field), fb(field), fc(field), fd(field)
        cache["a"] = f_tensor(a, a) + f_tensor(b, c)
        cache["b"] = f_tensor(a, b) + f_tensor(b, d)
        cache["c"] = f_tensor(c, a) + f_tensor(d, c)
        cache["d"] = f_tensor(c, b) + f_tensor(d, d)
    return cache


def _f_coproduct_basis(field, key):
    cache = field.cache("f_coproduct")
    hit = cache.get(key)
    if hit is not None:
        return hit
    gens = _generator_coproducts(field)
    i, j, k = key
    result = FTensor._from_clean(field, {((0, 0, 0), (0, 0, 0)): field.one})
    for _ in range(i):
        result = result * gens["a"]
    for _ in range(j):
        result = result * gens["b"]
    for _ in range(k):
        result = result * gens["c"]
    cache[key] = result
    return result


def f_coproduct(u):
    """Matrix coproduct Delta T_ij = sum_k T_ik (x) T_kj with d eliminated."""
    field = u.field
    out = FTensor.zero(field)
    for key, v in u.terms.items():
        out = out + _f_coproduct_basis(field, key).scale(v)
    return out


def f_counit(u):
    field = u.field
    acc = field.zero
    for (i, j, k), v in u.terms.items():
        if j == 0 and k == 0:
            acc = acc + v
    return acc


# Pairing.  The 2x2 matrix rho(h)[i][j] = <h, T_ij> with T = (a b; c d) is
# multiplicative in h; the generator table gives
#     rho(K) = diag(q, q^-1),  rho(X+) = E_01,  rho(X-) = E_10.

def _mat_mul(field, m1, m2):
    return tuple(
        tuple(sum((m1[i][k] * m2[k][j] for k in range(2)), field.zero) for j in range(2))
        for i in range(2)
    )


def generator_matrix(field, hkey):
    """rho(K^a X+^b X-^c): the pairings of one H basis element with a, b, c, d."""
    cache = field.cache("pair_rho")
    hit = cache.get(hkey)
    if hit is not None:
        return hit
    zero, one = field.zero, field.one
    a, b, c = hkey
    rho_k = ((field.q_pow(a), zero), (zero, field.q_pow(-a)))
    rho_xp = ((zero, one), (zero, zero))
    rho_xm = ((zero, zero), (one, zero))
    m = rho_k
    for _ in range(b):
        m = _mat_mul(field, m, rho_xp)
    for _ in range(c):
        m = _mat_mul(field, m, rho_xm)
    cache[hkey] = m
    return m


_FIRST_GENERATOR = {0: (0, 0), 1: (0, 1), 2: (1, 0)}  # a, b, c as T-entries


def _pair_basis(field, hkey, fkey):
    cache = field.cache("pair")
    key = (hkey, fkey)
    hit = cache.get(key)
    if hit is not None:
        return hit
    i, j, k = fkey
    if i == j == k == 0:
        # <h, 1> = counit of h
        result = field.one if hkey[1] == hkey[2] == 0 else field.zero
    else:
        # f = g * rest with g the leftmost generator; <h, g rest> = <Delta h, g (x) rest>
        if i:
            slot, rest = _FIRST_GENERATOR[0], (i - 1, j, k)
        elif j:
            slot, rest = _FIRST_GENERATOR[1], (0, j - 1, k)
        else:
            slot, rest = _FIRST_GENERATOR[2], (0, 0, k - 1)
        result = field.zero
        for (h1, h2), v in _coproduct_basis(field, hkey).terms.items():
            g = generator_matrix(field, h1)[slot[0]][slot[1]]
            if g:
                inner = _pair_basis(field, h2, rest)
                if inner:
                    result = result + v * g * inner
    cache[key] = result
    return result


def pair(h, f):
    """The bilinear pairing <h, f> between H and F."""
    if h.field is not f.field:
        raise ValueError("pairing elements from different contexts")
    field = h.field
    acc = field.zero
    for hk, hv in h.terms.items():
        for fk, fv in f.terms.items():
            p = _pair_basis(field, hk, fk)
            if p:
                acc = acc + hv * fv * p
    return acc


def pair_tensor(t, s):
    """<h1 (x) h2, f1 (x) f2> = <h1, f1><h2, f2>, extended bilinearly."""
    field = t.field
    acc = field.zero
    for hk, hv in t.terms.items():
        for fk, fv in s.terms.items():
            p = hv * fv
            for h1, f1 in zip(hk, fk):
                p = p * _pair_basis(field, h1, f1)
                if not p:
                    break
            acc = acc + p
    return acc


def h_act_on_f(h, f, side="left"):
    """h^L[f] = f_(1) <h, f_(2)>  and  h^R[f] = <h, f_(1)> f_(2)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    field = f.field
    paired, kept = (1, 0) if side == "left" else (0, 1)
    out = {}
    for fk, fv in f.terms.items():
        for legs, v in _f_coproduct_basis(field, fk).terms.items():
            w = field.zero
            for hk, hv in h.terms.items():
                p = _pair_basis(field, hk, legs[paired])
                if p:
                    w = w + hv * p
            if w:
                key = legs[kept]
                s = out.get(key, field.zero) + fv * v * w
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return FElement._from_clean(field, out)


def gram_matrix(field):
    """Dense matrix <h_i, f_j> over the bases of H (rows) and F (columns)."""
    cache = field.cache("gram")
    if "matrix" not in cache:
        hb, fb_ = h_basis(field), f_basis(field)
        cache["matrix"] = [[_pair_basis(field, hk, fk) for fk in fb_] for hk in hb]
    return cache["matrix"]


def gram_determinant(field):
    return determinant(gram_matrix(field), field)
