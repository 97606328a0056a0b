"""Left action of H on the reduced quantum plane M.

Two independent routes:

* ``act`` uses the closed formulas on monomials
      K[x^r y^s]  = q^(r-s) x^r y^s
      X+[x^r y^s] = q^r [s] x^(r+1) y^(s-1)
      X-[x^r y^s] = q^s [r] x^(r-1) y^(s+1)
  with [n] = 1 + q^-2 + ... + q^-2(n-1); exponents wrap modulo N.
* ``act_via_coaction`` contracts the right F-coaction
      delta(x) = x (x) a + y (x) c,   delta(y) = x (x) b + y (x) d
  against h using only the pairing and the coproduct of H.
"""

import random

from .hopf import HElement, h_coproduct, _coproduct_basis, h_basis
from .quantum_plane import PlaneElement, plane_basis
from .dual import generator_matrix, FElement, fa, fb, fc, fd, pair

__all__ = [
    "act",
    "act_generator",
    "act_via_coaction",
    "coaction",
    "contract_coaction",
    "PlaneDual",
    "random_monomial_pairs",
    "check_module_algebra",
    "operator_matrix",
    "representation_relations",
]

GENERATORS = ("K", "X+", "X-")
_GENERATOR_KEYS = {"K": (1, 0, 0), "X+": (0, 1, 0), "X-": (0, 0, 1)}


def act_generator(name, m):
    """Apply K, X+ or X- (by name) to a plane element with the closed formulas."""
    field = m.field
    n = field.n
    out = {}
    for (r, s), c in m.terms.items():
        if name == "K":
            key, coeff = (r, s), field.q_pow(r - s)
        elif name == "X+":
            key, coeff = ((r + 1) % n, (s - 1) % n), field.q_pow(r) * field.q_bracket(s)
        elif name == "X-":
            key, coeff = ((r - 1) % n, (s + 1) % n), field.q_pow(s) * field.q_bracket(r)
        else:
            raise ValueError(f"unknown generator {name!r}")
        if coeff:
            v = out.get(key, field.zero) + c * coeff
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return PlaneElement._from_clean(field, out)


def _act_basis(field, hkey, m):
    a, b, c = hkey
    for _ in range(c):
        m = act_generator("X-", m)
        if not m:
            return m
    for _ in range(b):
        m = act_generator("X+", m)
        if not m:
            return m
    for _ in range(a % field.n):
        m = act_generator("K", m)
    return m


def act(h, m):
    """h[m] for h in H and m in M; (h1 h2)[m] = h1[h2[m]]."""
    if h.field is not m.field:
        raise ValueError("action arguments from different contexts")
    field = m.field
    out = PlaneElement.zero(field)
    for hkey, hv in h.terms.items():
        out = out + _act_basis(field, hkey, m).scale(hv)
    return out


# coaction route

_SLOT_OF_LETTER = {"x": 0, "y": 1}


def _coact_pair(field, hkey, r, s):
    """sum m_(1) <h, f_(2)> for delta(x^r y^s), h a basis element.

    Recursion on the leftmost letter w of the word x^r y^s:
        delta(w rest) = sum_j e_j rest_(1) (x) T_{j,w} rest_(2)
    and <h, T rest> = sum <h_(1), T> <h_(2), rest>.
    """
    cache = field.cache("coact_pair")
    key = (hkey, r, s)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if r == 0 and s == 0:
        unit = hkey[1] == 0 and hkey[2] == 0
        result = PlaneElement.unit(field) if unit else PlaneElement.zero(field)
    else:
        if r:
            col, rest = _SLOT_OF_LETTER["x"], (r - 1, s)
        else:
            col, rest = _SLOT_OF_LETTER["y"], (0, s - 1)
        letters = (PlaneElement.basis(field, (1, 0)), PlaneElement.basis(field, (0, 1)))
        result = PlaneElement.zero(field)
        for (h1, h2), v in _coproduct_basis(field, hkey).terms.items():
            rho = generator_matrix(field, h1)
            tail = None
            for j in (0, 1):
                g = rho[j][col]
                if not g:
                    continue
                if tail is None:
                    tail = _coact_pair(field, h2, *rest)
                if tail:
                    result = result + (letters[j] * tail).scale(v * g)
    cache[key] = result
    return result


def act_via_coaction(h, m):
    """h[m] = m_(1) <h, f_(2)> with the coaction built from the 2x2 matrix (a b; c d)."""
    if h.field is not m.field:
        raise ValueError("action arguments from different contexts")
    field = m.field
    out = PlaneElement.zero(field)
    for (r, s), mv in m.terms.items():
        for hkey, hv in h.terms.items():
            out = out + _coact_pair(field, hkey, r, s).scale(mv * hv)
    return out


class PlaneDual:
    """Element of M (x) F as a dict {((r, s), (i, j, k)): scalar}."""

    algebra = "plane_dual"

    def __init__(self, field, terms):
        self.field = field
        self.terms = {k: v for k, v in terms.items() if v}

    def __mul__(self, other):
        field = self.field
        out = {}
        for (m1, f1), v1 in self.terms.items():
            pm1 = PlaneElement.basis(field, m1)
            pf1 = FElement.basis(field, f1)
            for (m2, f2), v2 in other.terms.items():
                pm = pm1 * PlaneElement.basis(field, m2)
                pf = pf1 * FElement.basis(field, f2)
                for mk, mv in pm.terms.items():
                    for fk, fv in pf.terms.items():
                        key = (mk, fk)
                        out[key] = out.get(key, field.zero) + v1 * v2 * mv * fv
        return PlaneDual(field, out)

    def __eq__(self, other):
        return isinstance(other, PlaneDual) and self.terms == other.terms


def coaction(m):
    """Materialized right coaction delta_R(m) in M (x) F (small N only)."""
    field = m.field
    a, b, c, d = fa(field), fb(field), fc(field), fd(field)

    def elem(plane_key, f):
        return PlaneDual(field, {(plane_key, fk): fv for fk, fv in f.terms.items()})

    dx = elem((1, 0), a)
    dx.terms.update(elem((0, 1), c).terms)
    dy = elem((1, 0), b)
    dy.terms.update(elem((0, 1), d).terms)
    out = {}
    for (r, s), v in m.terms.items():
        prod = PlaneDual(field, {((0, 0), (0, 0, 0)): field.one})
        for _ in range(r):
            prod = prod * dx
        for _ in range(s):
            prod = prod * dy
        for k, w in prod.terms.items():
            out[k] = out.get(k, field.zero) + v * w
    return PlaneDual(field, out)


def contract_coaction(h, delta):
    """m_(1) <h, f_(2)> for a materialized coaction."""
    field = delta.field
    out = PlaneElement.zero(field)
    for (mk, fk), v in delta.terms.items():
        p = pair(h, FElement.basis(field, fk))
        if p:
            out = out + PlaneElement.basis(field, mk).scale(v * p)
    return out


def check_module_algebra(h, m1, m2):
    """True when h[m1 m2] = sum h_(1)[m1] h_(2)[m2]."""
    field = h.field
    lhs = act(h, m1 * m2)
    rhs = PlaneElement.zero(field)
    for (k1, k2), v in h_coproduct(h).terms.items():
        left = act(HElement.basis(field, k1), m1)
        if not left:
            continue
        right = act(HElement.basis(field, k2), m2)
        rhs = rhs + (left * right).scale(v)
    return lhs == rhs


def operator_matrix(field, h):
    """The action of h on M as {basis key: image PlaneElement}."""
    return {key: act(h, PlaneElement.basis(field, key)) for key in plane_basis(field)}


def representation_relations(field):
    """Check the defining relations of H as operators on M.

    Returns a dict {relation name: bool}.
    """
    from .hopf import K, Xp, Xm

    q = field.q
    n = field.n
    k, xp, xm = K(field), Xp(field), Xm(field)
    kinv = K(field, n - 1)
    denom = (q - q.inverse()).inverse()
    results = {"K X+ = q^2 X+ K": True, "K X- = q^-2 X- K": True,
               "[X+, X-] = (K - K^-1)/(q - q^-1)": True,
               "K^N = 1": True, "X+^N = 0": True, "X-^N = 0": True}
    for key in plane_basis(field):
        m = PlaneElement.basis(field, key)
        if act(k, act(xp, m)) != act(xp, act(k, m)).scale(q * q):
            results["K X+ = q^2 X+ K"] = False
        if act(k, act(xm, m)) != act(xm, act(k, m)).scale(q.inverse() ** 2):
            results["K X- = q^-2 X- K"] = False
        comm = act(xp, act(xm, m)) - act(xm, act(xp, m))
        if comm != (act(k, m) - act(kinv, m)).scale(denom):
            results["[X+, X-] = (K - K^-1)/(q - q^-1)"] = False
        mk, mp, mm = m, m, m
        for _ in range(n):
            mk, mp, mm = act(k, mk), act(xp, mp), act(xm, mm)
        if mk != m:
            results["K^N = 1"] = False
        if mp:
            results["X+^N = 0"] = False
        if mm:
            results["X-^N = 0"] = False
    return results


def random_monomial_pairs(field, count, seed=0):
    rng = random.Random(seed)
    basis = plane_basis(field)
    return [(rng.choice(basis), rng.choice(basis)) for _ in range(count)]
