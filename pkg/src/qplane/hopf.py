"""The finite-dimensional quantum group H = U_q sl(2) / (K^N - 1, X+^N, X-^N).

Basis K^a X+^b X-^c with 0 <= a, b, c < N.  Products are brought to this
normal order by right-multiplying with one generator at a time:

    (K^a X+^b X-^c) K   = q^(2(c-b)) K^(a+1) X+^b X-^c
    (K^a X+^b X-^c) X-  = K^a X+^b X-^(c+1)
    (K^a X+^b X-^c) X+  = K^a X+^b (X-^c X+)

where X-^c X+ is expanded once per context with the commutator
[X+, X-] = (K - K^-1)/(q - q^-1).
"""

from .element import Element

__all__ = [
    "HElement",
    "HTensor",
    "K",
    "Xp",
    "Xm",
    "h_basis",
    "h_mul",
    "h_coproduct",
    "h_counit",
    "h_antipode",
    "h_unit",
    "casimir",
    "casimir_eigenvalue",
    "tensor",
    "multiply_legs",
]


class HElement(Element):
    """Element of H keyed by (a, b, c) for K^a X+^b X-^c."""

    __slots__ = ()
    algebra = "hopf"
    unit_key = (0, 0, 0)

    def _normalize_key(self, key):
        n = self.field.n
        a, b, c = key
        if b >= n or c >= n:
            return None
        if b < 0 or c < 0:
            raise ValueError(f"negative X exponent in {key}")
        return (a % n, b, c)

    def _mul_keys(self, k1, k2):
        return _basis_product(self.field, k1, k2)

    def degree(self):
        """Set of X-degrees b - c occurring in the element."""
        return {b - c for (_, b, c) in self.terms}


def h_basis(field):
    n = field.n
    return [(a, b, c) for a in range(n) for b in range(n) for c in range(n)]


def K(field, power=1):
    return HElement(field, {(power, 0, 0): field.one})


def Xp(field):
    return HElement(field, {(0, 1, 0): field.one})


def Xm(field):
    return HElement(field, {(0, 0, 1): field.one})


def h_unit(field):
    return HElement.unit(field)


def h_mul(u, v):
    return u * v


def _add_into(out, key, value):
    v = out.get(key)
    v = value if v is None else v + value
    if v:
        out[key] = v
    else:
        out.pop(key, None)


def _xm_power_times_xp(field, c):
    """Normal form of X-^c X+ as a dict of basis keys."""
    cache = field.cache("xm_pow_xp")
    if c in cache:
        return cache[c]
    n = field.n
    q = field.q
    if c == 0:
        result = {(0, 1, 0): field.one}
    else:
        prev = _xm_power_times_xp(field, c - 1)
        result = {}
        # X-^(c-1) X+ X-
        for (i, j, k), v in prev.items():
            if k + 1 < n:
                _add_into(result, (i, j, k + 1), v)
        # - X-^(c-1) (K - K^-1)/(q - q^-1), with X-^m K^e = q^(2me) K^e X-^m
        denom = (q - q.inverse()).inverse()
        m = c - 1
        _add_into(result, (1, 0, m), -field.q_pow(2 * m) * denom)
        _add_into(result, (n - 1, 0, m), field.q_pow(-2 * m) * denom)
    cache[c] = result
    return result


def _basis_product(field, k1, k2):
    cache = field.cache("h_product")
    key = (k1, k2)
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = field.n
    alpha, beta, gamma = k2
    a, b, c = k1
    cur = {((a + alpha) % n, b, c): field.q_pow(2 * (c - b) * alpha)}
    for _ in range(beta):
        nxt = {}
        for (a1, b1, c1), v in cur.items():
            for (i, j, k), w in _xm_power_times_xp(field, c1).items():
                if b1 + j >= n:
                    continue
                coeff = v * w * field.q_pow(-2 * b1 * i)
                _add_into(nxt, ((a1 + i) % n, b1 + j, k), coeff)
        cur = nxt
    if gamma:
        cur = {(a1, b1, c1 + gamma): v for (a1, b1, c1), v in cur.items() if c1 + gamma < n}
    cache[key] = cur
    return cur


class HTensor(Element):
    """Element of H^(tensor L): keys are L-tuples of H basis keys."""

    __slots__ = ()
    algebra = "hopf_tensor"

    def _normalize_key(self, key):
        n = self.field.n
        out = []
        for a, b, c in key:
            if b >= n or c >= n:
                return None
            out.append((a % n, b, c))
        return tuple(out)

    def _mul_keys(self, k1, k2):
        field = self.field
        result = {(): field.one}
        for l1, l2 in zip(k1, k2):
            prod = _basis_product(field, l1, l2)
            nxt = {}
            for prefix, v in result.items():
                for k, w in prod.items():
                    nxt[prefix + (k,)] = v * w
            result = nxt
        return result

    @classmethod
    def unit_of(cls, field, legs):
        return cls._from_clean(field, {((0, 0, 0),) * legs: field.one})

    def legs(self):
        for k in self.terms:
            return len(k)
        return 0


def tensor(*factors):
    """Elementary tensor u1 (x) u2 (x) ... of HElements."""
    field = factors[0].field
    terms = {(): field.one}
    for f in factors:
        nxt = {}
        for prefix, v in terms.items():
            for k, w in f.terms.items():
                nxt[prefix + (k,)] = v * w
        terms = nxt
    return HTensor(field, terms)


def multiply_legs(t):
    """m: H (x) ... (x) H -> H, multiply the legs in order."""
    field = t.field
    out = HElement.zero(field)
    for key, v in t.terms.items():
        prod = HElement.unit(field)
        for leg in key:
            prod = prod * HElement._from_clean(field, {leg: field.one})
        out = out + prod.scale(v)
    return out


def _coproduct_basis(field, key):
    cache = field.cache("h_coproduct")
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = field.n
    a, b, c = key
    one = (0, 0, 0)
    kk = HTensor(field, {((a, 0, 0), (a, 0, 0)): field.one})
    dxp = HTensor(field, {((0, 1, 0), one): field.one, ((1, 0, 0), (0, 1, 0)): field.one})
    dxm = HTensor(field, {((0, 0, 1), (n - 1, 0, 0)): field.one, (one, (0, 0, 1)): field.one})
    result = kk
    for _ in range(b):
        result = result * dxp
    for _ in range(c):
        result = result * dxm
    cache[key] = result
    return result


def h_coproduct(u):
    """Coproduct with Delta K = K(x)K, Delta X+ = X+(x)1 + K(x)X+,
    Delta X- = X-(x)K^-1 + 1(x)X-, extended multiplicatively."""
    field = u.field
    out = HTensor.zero(field)
    for key, v in u.terms.items():
        out = out + _coproduct_basis(field, key).scale(v)
    return out


def h_counit(u):
    field = u.field
    acc = field.zero
    for (a, b, c), v in u.terms.items():
        if b == 0 and c == 0:
            acc = acc + v
    return acc


def _antipode_basis(field, key):
    cache = field.cache("h_antipode")
    hit = cache.get(key)
    if hit is not None:
        return hit
    n = field.n
    a, b, c = key
    s_k = K(field, n - 1)
    s_xp = -(K(field, n - 1) * Xp(field))
    s_xm = -(Xm(field) * K(field))
    # anti-morphism: S(K^a X+^b X-^c) = S(X-)^c S(X+)^b S(K)^a
    result = s_xm ** c * s_xp ** b * s_k ** a
    cache[key] = result
    return result


def h_antipode(u):
    """S(K) = K^-1, S(X+) = -K^-1 X+, S(X-) = -X- K, as an anti-morphism."""
    field = u.field
    out = HElement.zero(field)
    for key, v in u.terms.items():
        out = out + _antipode_basis(field, key).scale(v)
    return out


def casimir(field):
    """C = X- X+ + (q K + q^-1 K^-1) / (q - q^-1)^2, central in H."""
    q = field.q
    n = field.n
    denom = ((q - q.inverse()) ** 2).inverse()
    return Xm(field) * Xp(field) + (K(field).scale(q) + K(field, n - 1).scale(q.inverse())).scale(denom)


def casimir_eigenvalue(field, dim):
    """Scalar by which the Casimir acts on the simple module of dimension dim."""
    q = field.q
    return (field.q_pow(dim) + field.q_pow(-dim)) * ((q - q.inverse()) ** 2).inverse()
