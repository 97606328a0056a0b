"""Sparse linear combinations of basis monomials with coefficients in Q(q)."""

from fractions import Fraction

from .cyclotomic import CycScalar


class Element:
    """Immutable sparse vector ``{basis key: CycScalar}`` with zero pruning.

    Subclasses fix the key shape, implement ``_mul_keys`` (product of two basis
    keys, returned as a coefficient dict) and ``_key_str``.
    """

    __slots__ = ("field", "terms", "_hash")
    algebra = None
    unit_key = None

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    key = self._normalize_key(k)
                    if key is None:
                        continue
                    c = field(c)
                    prev = clean.get(key)
                    c = c if prev is None else prev + c
                    if c:
                        clean[key] = c
                    else:
                        clean.pop(key, None)
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, field, terms):
        obj = cls.__new__(cls)
        obj.field = field
        obj.terms = terms
        obj._hash = None
        return obj

    def _normalize_key(self, key):
        """Canonical form of a basis key, or None if the monomial vanishes."""
        return key

    # construction helpers

    @classmethod
    def zero(cls, field):
        return cls._from_clean(field, {})

    @classmethod
    def basis(cls, field, key, coeff=None):
        return cls(field, {key: field.one if coeff is None else coeff})

    @classmethod
    def unit(cls, field):
        return cls._from_clean(field, {cls.unit_key: field.one})

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.field is not self.field:
            raise ValueError("elements from different contexts")

    def _scalar(self, value):
        if isinstance(value, (CycScalar, int, Fraction)) and not isinstance(value, bool):
            return self.field(value)
        return None

    # vector space

    def __add__(self, other):
        s = self._scalar(other)
        if s is not None:
            other = self.unit(self.field) * s
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._from_clean(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean(self.field, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        s = self._scalar(other)
        if s is not None:
            other = self.unit(self.field) * s
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s):
        s = self.field(s)
        if not s:
            return self.zero(self.field)
        return self._from_clean(self.field, {k: c * s for k, c in self.terms.items()})

    # algebra

    def __mul__(self, other):
        s = self._scalar(other)
        if s is not None:
            return self.scale(s)
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = {}
        mul = self._mul_keys
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                c = c1 * c2
                for k, b in mul(k1, k2).items():
                    v = out.get(k)
                    v = b * c if v is None else v + b * c
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return self._from_clean(self.field, out)

    def __rmul__(self, other):
        s = self._scalar(other)
        if s is not None:
            return self.scale(s)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.unit(self.field)
        for _ in range(k):
            result = result * self
        return result

    # comparison

    def __eq__(self, other):
        s = self._scalar(other)
        if s is not None:
            other = self.unit(self.field) * s
        if type(other) is not type(self):
            return NotImplemented
        return self.field is other.field and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        """Terms in canonical order (sorted by exponent tuple)."""
        return sorted(self.terms.items())

    def coeff(self, key):
        return self.terms.get(self._normalize_key(key), self.field.zero)

    def as_vector(self):
        return dict(self.terms)

    @classmethod
    def from_vector(cls, field, vec):
        return cls._from_clean(field, {k: c for k, c in vec.items() if c})

    # text

    def __str__(self):
        from .printing import format_element

        return format_element(self)

    def __repr__(self):
        return f"{type(self).__name__}({self})"
