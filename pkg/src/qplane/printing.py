"""Canonical text rendering of scalars and algebra elements.

Output is re-readable by :mod:`qplane.parser`: terms are sorted by exponent
tuple and each term prints its coefficient first, e.g. ``(1 + q)*x^2 y``.
"""

_WZ_DIFFERENTIALS = {0: "", 1: "dx", 2: "dy", 3: "dx dy"}


def _power(name, k):
    if k == 0:
        return ""
    if k == 1:
        return name
    return f"{name}^{k}"


def _join(*parts):
    return " ".join(p for p in parts if p)


def monomial_str(algebra, key):
    if algebra == "plane":
        r, s = key
        return _join(_power("x", r), _power("y", s))
    if algebra == "hopf":
        a, b, c = key
        return _join(_power("K", a), _power("X+", b), _power("X-", c))
    if algebra == "dual":
        a, b, c = key
        return _join(_power("a", a), _power("b", b), _power("c", c))
    if algebra == "wz":
        w, r, s = key
        return _join(_power("x", r), _power("y", s), _WZ_DIFFERENTIALS[w])
    if algebra in ("hopf_tensor", "dual_tensor", "plane_dual"):
        legs = []
        inner = {"hopf_tensor": ["hopf"], "dual_tensor": ["dual"], "plane_dual": ["plane", "dual"]}[algebra]
        for i, leg in enumerate(key):
            kind = inner[i % len(inner)] if algebra != "plane_dual" else inner[i]
            legs.append(monomial_str(kind, leg) or "1")
        return " (x) ".join(legs)
    raise ValueError(f"unknown algebra {algebra!r}")


def _scalar_term(c, mono):
    """(sign, body) for coefficient c times the monomial string."""
    nonzero = [(k, v) for k, v in enumerate(c.coefficients()) if v]
    if len(nonzero) == 1:
        k, v = nonzero[0]
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if k == 0:
            if mag == 1:
                return sign, mono or "1"
            return sign, f"{mag}*{mono}" if mono else str(mag)
        power = "q" if k == 1 else f"q^{k}"
        coeff = power if mag == 1 else f"{mag}*{power}"
        return sign, f"{coeff}*{mono}" if mono else coeff
    inner = str(c)
    if algebra_tensor(mono):
        return "+", f"({inner})*({mono})"
    return "+", f"({inner})*{mono}" if mono else f"({inner})"


def algebra_tensor(mono):
    return "(x)" in mono


def format_terms(terms):
    """Render a list of (coefficient, monomial string) pairs."""
    pieces = [_scalar_term(c, mono) for c, mono in terms]
    if not pieces:
        return "0"
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_element(e):
    algebra = e.algebra
    return format_terms([(c, monomial_str(algebra, k)) for k, c in e.items()])
