"""Exact arithmetic in the cyclotomic field Q(q), q a primitive N-th root of unity.

Elements are residues of Q[t] modulo the N-th cyclotomic polynomial, stored as
an integer numerator vector over a common positive denominator.  Nothing here
ever touches floating point.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
import json

__all__ = [
    "CyclotomicField",
    "CycScalar",
    "make_root",
    "cyclotomic_polynomial",
    "euler_phi",
]


def _poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first), den monic."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n(t), lowest degree first.

    Phi_n = (t^n - 1) / prod(Phi_d for d | n, d < n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n):
    return len(cyclotomic_polynomial(n)) - 1


def _normalize(num, den):
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = gcd(den, *num)
    if g > 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CyclotomicField:
    """The field Q(q) for a fixed odd N >= 3, with q primitive.

    Use :func:`make_root` to obtain instances; they are cached so that two
    contexts for the same N are the same object.
    """

    def __init__(self, n):
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("N must be an integer")
        if n < 3:
            raise ValueError(f"N must be at least 3, got {n}")
        if n % 2 == 0:
            raise ValueError(f"N must be odd, got {n}")
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        # t^k mod Phi for degree <= k <= 2*degree - 2
        table = {}
        cur = [0] * self.degree
        cur[-1] = 1  # t^(degree-1)
        for k in range(self.degree, 2 * self.degree - 1):
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(self.degree):
                    cur[i] -= top * self.modulus[i]
            table[k] = tuple(cur)
        self._reduction = table
        self.zero = CycScalar(self, (0,) * self.degree, 1)
        self.one = self.from_rational(1)
        powers = [self.one]
        t = [0] * self.degree
        t[1 % self.degree] = 1
        gen = CycScalar(self, tuple(t), 1) if self.degree > 1 else None
        for _ in range(1, n):
            powers.append(powers[-1] * gen)
        self._powers = tuple(powers)
        self.q = powers[1]
        self._brackets = {}
        self._caches = {}

    def __repr__(self):
        return f"CyclotomicField(N={self.n})"

    def __reduce__(self):
        return (make_root, (self.n,))

    def cache(self, name):
        """Named memo table owned by this context (filled lazily, never evicted)."""
        table = self._caches.get(name)
        if table is None:
            table = self._caches[name] = {}
        return table

    def from_rational(self, value):
        value = Fraction(value)
        num = [0] * self.degree
        num[0] = value.numerator
        return CycScalar(self, tuple(num), value.denominator)

    def __call__(self, value):
        if isinstance(value, CycScalar):
            if value.field is not self:
                raise ValueError("scalar belongs to a different field context")
            return value
        if isinstance(value, (int, Fraction)):
            return self.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self!r}")

    def from_coefficients(self, coeffs):
        """Build an element from rational coefficients of 1, q, q^2, ...

        Any length is accepted; higher powers are reduced modulo Phi_N.
        """
        acc = self.zero
        for k, c in enumerate(coeffs):
            if c:
                acc = acc + self.q_pow(k) * Fraction(c)
        return acc

    def q_pow(self, k):
        """q^k for any integer k (negative allowed)."""
        return self._powers[k % self.n]

    def q_bracket(self, n):
        """(1 - q^(-2n)) / (1 - q^(-2)) = 1 + q^-2 + ... + q^(-2(n-1)), n >= 0."""
        if n < 0:
            raise ValueError("q_bracket needs n >= 0")
        cached = self._brackets.get(n)
        if cached is None:
            acc = self.zero
            for j in range(n):
                acc = acc + self.q_pow(-2 * j)
            cached = self._brackets[n] = acc
        return cached

    def _mul_raw(self, a, b):
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                red = self._reduction[k]
                for i in range(d):
                    if red[i]:
                        out[i] += c * red[i]
        return out

    def parse(self, text):
        """Parse the canonical text form, e.g. ``"1/2 + 3*q - q^2"``."""
        from .parser import parse_scalar

        return parse_scalar(self, text)

    def from_json(self, data):
        return self.from_coefficients([Fraction(c) for c in data])


class CycScalar:
    """Immutable element of Q(q).  ``num/den`` with ``den > 0`` in lowest terms."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, field, num, den):
        num, den = _normalize(num, den)
        return cls(field, num, den)

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise ValueError("scalars from different field contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not any(other.num):
            return self
        if not any(self.num):
            return other
        if self.den == other.den:
            num = [a + b for a, b in zip(self.num, other.num)]
            return CycScalar._make(self.field, num, self.den)
        num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
        return CycScalar._make(self.field, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CycScalar._make(self.field, [a * other for a in self.num], self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not any(self.num) or not any(other.num):
            return self.field.zero
        num = self.field._mul_raw(self.num, other.num)
        return CycScalar._make(self.field, num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not any(self.num):
            raise ZeroDivisionError("inverse of zero in Q(q)")
        field = self.field
        if not any(self.num[1:]):
            return field.from_rational(Fraction(self.den, self.num[0]))
        # extended Euclid over Q[t]: find u with u*a = 1 mod Phi
        a = [Fraction(c, self.den) for c in self.num]
        m = [Fraction(c) for c in field.modulus]
        r0, r1 = _trim(m), _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(quo, s1)))
        # r1 is a nonzero constant
        c = r1[0]
        return field.from_coefficients([x / c for x in s1])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.field.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return (
                self.field is other.field
                and self.den == other.den
                and self.num == other.num
            )
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not any(self.num[1:]):
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def coefficients(self):
        """Rational coefficients of 1, q, ..., q^(phi(N)-1)."""
        return [Fraction(c, self.den) for c in self.num]

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def n_terms(self):
        return sum(1 for c in self.num if c)

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coefficients()):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"CycScalar({self}; N={self.field.n})"

    def to_json(self):
        return [str(c) for c in self.coefficients()]

    def dumps(self):
        return json.dumps(self.to_json())


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(quo) - 1, -1, -1):
        c = a[k + len(b) - 1] / lead
        quo[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    rem = _trim(a[: len(b) - 1] or [Fraction(0)])
    return quo, rem


@lru_cache(maxsize=None)
def make_root(n):
    """Field context for a primitive N-th root of unity q (N odd, N >= 3)."""
    return CyclotomicField(n)
