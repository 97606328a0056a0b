"""Expression parser for elements of M, H, F and the WZ complex.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*          juxtaposition multiplies
    factor := primary ('^' uint)?
    primary:= atom | rational | '(' expr ')'

Products keep their written order (the algebras are noncommutative).
"""

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ParseError",
    "Expr",
    "ALGEBRAS",
    "tokenize",
    "parse",
    "infer_algebra",
    "evaluate",
    "parse_element",
    "parse_scalar",
]

ALGEBRAS = {
    "scalar": frozenset(),
    "plane": frozenset({"x", "y"}),
    "hopf": frozenset({"K", "X+", "X-"}),
    "dual": frozenset({"a", "b", "c", "d"}),
    "wz": frozenset({"x", "y", "dx", "dy"}),
}
_ALL_ATOMS = frozenset().union(*ALGEBRAS.values())
_HOME = {"x": "plane", "y": "plane", "K": "hopf", "X+": "hopf", "X-": "hopf",
         "a": "dual", "b": "dual", "c": "dual", "d": "dual", "dx": "wz", "dy": "wz"}

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<atom>dx|dy|X[+-]|[A-Za-z])|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    """Syntax or typing error; ``offset`` is a byte offset into the input."""

    def __init__(self, message, offset=None):
        self.offset = offset
        where = "" if offset is None else f" at byte {offset}"
        super().__init__(message + where)


@dataclass(frozen=True)
class Expr:
    kind: str  # "atom", "num", "add", "sub", "neg", "mul", "pow"
    value: object = None
    args: tuple = ()
    offset: int = 0


def _byte_offset(text, pos):
    return len(text[:pos].encode("utf-8"))


def tokenize(text):
    """List of (kind, value, byte offset); ends with ("end", None, len)."""
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), _byte_offset(text, start)))
        pos = m.end()
    out.append(("end", None, _byte_offset(text, len(text))))
    return out


class _Parser:
    def __init__(self, text, algebra):
        self.tokens = tokenize(text)
        self.i = 0
        self.algebra = algebra

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, off = self.take()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", off)

    def parse(self):
        e = self.expr()
        kind, value, off = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", off)
        return e

    def expr(self):
        kind, value, off = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            e = self.term()
            if value == "-":
                e = Expr("neg", args=(e,), offset=off)
        else:
            e = self.term()
        while True:
            kind, value, off = self.peek()
            if kind == "op" and value in "+-":
                self.take()
                rhs = self.term()
                e = Expr("add" if value == "+" else "sub", args=(e, rhs), offset=off)
            else:
                return e

    def _starts_factor(self):
        kind, value, _ = self.peek()
        return kind in ("atom", "num") or (kind == "op" and value == "(")

    def term(self):
        e = self.factor()
        while True:
            kind, value, off = self.peek()
            if kind == "op" and value == "*":
                self.take()
                e = Expr("mul", args=(e, self.factor()), offset=off)
            elif self._starts_factor():
                e = Expr("mul", args=(e, self.factor()), offset=off)
            else:
                return e

    def factor(self):
        base = self.primary()
        kind, value, off = self.peek()
        if kind == "op" and value == "^":
            self.take()
            kind, value, noff = self.take()
            if kind != "num" or "/" in value:
                raise ParseError("exponent must be a nonnegative integer", noff)
            return Expr("pow", int(value), (base,), off)
        return base

    def primary(self):
        kind, value, off = self.take()
        if kind == "num":
            return Expr("num", Fraction(value), offset=off)
        if kind == "atom":
            self._check_atom(value, off)
            return Expr("atom", value, offset=off)
        if kind == "op" and value == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if kind == "end":
            raise ParseError("unexpected end of input", off)
        raise ParseError(f"unexpected {value!r}", off)

    def _check_atom(self, atom, off):
        if atom == "q":
            return
        if atom not in _ALL_ATOMS:
            raise ParseError(f"unknown atom {atom!r}", off)
        if self.algebra is not None and atom not in ALGEBRAS[self.algebra]:
            raise ParseError(
                f"{_HOME[atom]} atom {atom!r} in {self.algebra} expression", off)


def parse(text, algebra=None):
    """Parse text into an :class:`Expr`; ``algebra=None`` accepts any atom."""
    if algebra is not None and algebra not in ALGEBRAS:
        raise ValueError(f"unknown algebra {algebra!r}")
    return _Parser(text, algebra).parse()


def _atoms(e, acc):
    if e.kind == "atom":
        acc.append((e.value, e.offset))
    for a in e.args:
        _atoms(a, acc)
    return acc


def infer_algebra(text):
    """The single algebra whose atom set covers the expression."""
    atoms = [(a, off) for a, off in _atoms(parse(text), []) if a != "q"]
    if not atoms:
        return "scalar"
    names = {a for a, _ in atoms}
    if names & {"dx", "dy"}:
        target = "wz"
    else:
        target = _HOME[atoms[0][0]]
    for a, off in atoms:
        if a not in ALGEBRAS[target]:
            raise ParseError(f"{_HOME[a]} atom {a!r} mixed into {target} expression", off)
    return target


def _generators(field, algebra):
    if algebra == "plane":
        from .quantum_plane import x, y
        return {"x": x(field), "y": y(field)}
    if algebra == "hopf":
        from .hopf import K, Xp, Xm
        return {"K": K(field), "X+": Xp(field), "X-": Xm(field)}
    if algebra == "dual":
        from .dual import fa, fb, fc, fd
        return {"a": fa(field), "b": fb(field), "c": fc(field), "d": fd(field)}
    if algebra == "wz":
        from .wess_zumino import wz_x, wz_y, wz_dx, wz_dy
        return {"x": wz_x(field), "y": wz_y(field), "dx": wz_dx(field), "dy": wz_dy(field)}
    return {}


def _unit(field, algebra):
    if algebra == "scalar":
        return field.one
    from .quantum_plane import PlaneElement
    from .hopf import HElement
    from .dual import FElement
    from .wess_zumino import WZForm
    cls = {"plane": PlaneElement, "hopf": HElement, "dual": FElement, "wz": WZForm}[algebra]
    return cls.unit(field)


def evaluate(expr, field, algebra):
    gens = _generators(field, algebra)

    def ev(e):
        k = e.kind
        if k == "num":
            return field(e.value)
        if k == "atom":
            return field.q if e.value == "q" else gens[e.value]
        if k == "neg":
            return -ev(e.args[0])
        if k == "add":
            return ev(e.args[0]) + ev(e.args[1])
        if k == "sub":
            return ev(e.args[0]) - ev(e.args[1])
        if k == "mul":
            return ev(e.args[0]) * ev(e.args[1])
        if k == "pow":
            return ev(e.args[0]) ** e.value
        raise ValueError(f"bad node {k!r}")

    value = ev(expr)
    if algebra != "scalar" and not hasattr(value, "terms"):
        value = _unit(field, algebra) * value
    return value


def parse_element(field, text, algebra=None):
    """Parse and evaluate; returns (algebra name, element)."""
    if algebra is None:
        algebra = infer_algebra(text)
        if algebra == "scalar":
            algebra = "plane"
    expr = parse(text, algebra)
    return algebra, evaluate(expr, field, algebra)


def parse_scalar(field, text):
    return evaluate(parse(text, "scalar"), field, "scalar")
