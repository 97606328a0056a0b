"""Exact computations on the reduced quantum plane at an odd root of unity.

The context is a cyclotomic field Q(q) with q a primitive N-th root of unity,
obtained from :func:`make_root`.  Elements of the plane M, of the quantum
group H, of its dual F and of the Wess-Zumino complex are sparse
combinations of normal-ordered monomials with exact coefficients.
"""

from .cyclotomic import CycScalar, CyclotomicField, make_root
from .quantum_plane import PlaneElement, monomial, plane_basis, realize, unrealize, x, y
from .hopf import HElement, K, Xm, Xp, casimir, h_antipode, h_coproduct, h_counit
from .dual import FElement, fa, fb, fc, fd, f_coproduct, h_act_on_f, pair
from .action import act, act_via_coaction
from .decomposition import decompose, invariant_subspaces, summand_of
from .wess_zumino import WZForm, act_on_form, cohomology_dims, differential, wz_mul
from .parser import ParseError, parse, parse_element

__version__ = "0.1.0"
