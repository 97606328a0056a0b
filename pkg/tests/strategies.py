"""Hypothesis strategies for exact scalars and algebra elements."""

from fractions import Fraction

from hypothesis import strategies as st

from qplane.cyclotomic import make_root
from qplane.dual import FElement
from qplane.hopf import HElement
from qplane.quantum_plane import PlaneElement
from qplane.wess_zumino import WZForm

small_n = st.sampled_from([3, 5, 7])
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def scalars(field, nonzero=False):
    s = st.lists(rationals, min_size=field.degree, max_size=field.degree).map(
        field.from_coefficients)
    return s.filter(bool) if nonzero else s


def _elements(cls, field, key_strategy, max_terms=4):
    return st.dictionaries(key_strategy, scalars(field), max_size=max_terms).map(
        lambda d: cls(field, d))


def plane_elements(field, max_terms=4):
    r = st.integers(0, field.n - 1)
    return _elements(PlaneElement, field, st.tuples(r, r), max_terms)


def h_elements(field, max_terms=3):
    e = st.integers(0, field.n - 1)
    return _elements(HElement, field, st.tuples(e, e, e), max_terms)


def f_elements(field, max_terms=3):
    e = st.integers(0, field.n - 1)
    return _elements(FElement, field, st.tuples(e, e, e), max_terms)


def wz_forms(field, max_terms=3, degree=None):
    ws = [0, 1, 2, 3] if degree is None else {0: [0], 1: [1, 2], 2: [3]}[degree]
    e = st.integers(0, field.n - 1)
    return _elements(WZForm, field, st.tuples(st.sampled_from(ws), e, e), max_terms)


def fields():
    return small_n.map(make_root)


def with_field(builder, *args, **kw):
    """Strategy of (field, element) pairs."""
    return fields().flatmap(lambda f: builder(f, *args, **kw).map(lambda e: (f, e)))
