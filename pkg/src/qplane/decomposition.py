"""Decomposition of M into N indecomposable H-modules of dimension N.

Monomials x^r y^s are grouped by (r + s) mod N; each class is stable under
K, X+ and X-.  The class r + s = N - 1 is irreducible; the class c < N - 1
contains the invariant subspace spanned by the monomials with r + s = c
(no wrap-around), of dimension c + 1, which labels the summand.
"""

from dataclasses import dataclass, field as dc_field

from .action import act_generator
from .linalg import Subspace
from .modules import HModule, is_chain, lattice_from_generators
from .quantum_plane import PlaneElement, plane_basis

__all__ = [
    "DecompositionError",
    "ModuleSummand",
    "Decomposition",
    "plane_module",
    "decompose",
    "invariant_subspaces",
    "summand_of",
    "congruence_class",
]


class DecompositionError(RuntimeError):
    """Raised when a computed summand disagrees with the expected structure."""


@dataclass
class ModuleSummand:
    label: int
    basis: list
    invariant_basis: list
    congruence_class: int

    @property
    def dim(self):
        return len(self.basis)

    def to_json(self):
        return {
            "label": self.label,
            "class": self.congruence_class,
            "basis": [list(k) for k in self.basis],
            "invariant_basis": [list(k) for k in self.invariant_basis],
        }


@dataclass
class Decomposition:
    n: int
    summands: list = dc_field(default_factory=list)

    def labels(self):
        return [s.label for s in self.summands]

    def by_label(self, p):
        for s in self.summands:
            if s.label == p:
                return s
        raise KeyError(p)

    def to_json(self):
        return {"summands": [s.to_json() for s in self.summands]}


def congruence_class(field, key):
    r, s = key
    return (r + s) % field.n


def _plane_apply(field):
    def apply(g, v):
        return act_generator(g, PlaneElement._from_clean(field, dict(v))).terms
    return apply


def plane_module(field, keys=None):
    """M (or the span of the given monomials) as an :class:`HModule`."""
    one = field.one
    keys = plane_basis(field) if keys is None else keys
    space = Subspace([{k: one} for k in keys])
    return HModule(field, _plane_apply(field), space, name="M")


def _summand_module(field, summand):
    return plane_module(field, summand.basis)


def invariant_subspaces(field, summand):
    """All act-invariant subspaces of a summand, sorted by dimension.

    K acts on the class by the eigenvalues q^(r-s), which are pairwise
    distinct there, so every invariant subspace is spanned by monomials and
    is a sum of cyclic submodules generated by single monomials.
    """
    module = _summand_module(field, summand)
    eigen = {(r - s) % field.n for r, s in summand.basis}
    if len(eigen) != len(summand.basis):
        raise DecompositionError("K has a repeated eigenvalue on the summand")
    one = field.one
    cyclic = []
    for key in summand.basis:
        sub = module.generated([{key: one}])
        if not any(sub == c for c in cyclic):
            cyclic.append(sub)
    return lattice_from_generators(module, cyclic)


def _class_keys(field, c):
    n = field.n
    return sorted((r, (c - r) % n) for r in range(n))


def decompose(field):
    """Split M into its N summands, verifying each against the expected shape."""
    n = field.n
    one = field.one
    out = Decomposition(n)
    for c in range(n - 1, -1, -1):
        keys = _class_keys(field, c)
        module = plane_module(field, keys)
        if not module.is_invariant(module.space):
            raise DecompositionError(f"class {c} is not invariant")
        probe = ModuleSummand(label=0, basis=keys, invariant_basis=[], congruence_class=c)
        lattice = invariant_subspaces(field, probe)
        if not is_chain(lattice):
            raise DecompositionError(f"class {c} has a non-chain lattice")
        proper = [s for s in lattice if 0 < s.dim < n]
        if not proper:
            label, inv = n, list(keys)
        else:
            top = max(proper, key=lambda s: s.dim)
            label = top.dim
            inv = sorted(k for k in keys if top.reduce({k: one}) == {})
            if len(inv) != label:
                raise DecompositionError(f"class {c}: invariant subspace is not monomial")
        expected = n if c == n - 1 else c + 1
        literal = sorted(k for k in keys if k[0] + k[1] == c)
        if label != expected or (label < n and inv != literal):
            raise DecompositionError(
                f"class {c}: found label {label}, expected {expected}")
        if len(lattice) != (2 if label == n else 3):
            raise DecompositionError(f"class {c}: unexpected lattice of size {len(lattice)}")
        out.summands.append(ModuleSummand(label, keys, inv, c))
    total = sorted(k for s in out.summands for k in s.basis)
    if total != sorted(plane_basis(field)):
        raise DecompositionError("summand bases do not exhaust M")
    return out


def summand_of(m):
    """Split a plane element by congruence class: [(label, component), ...]."""
    field = m.field
    n = field.n
    parts = {}
    for key, v in m.terms.items():
        parts.setdefault(congruence_class(field, key), {})[key] = v
    out = []
    for c in sorted(parts, reverse=True):
        label = n if c == n - 1 else c + 1
        out.append((label, PlaneElement._from_clean(field, parts[c])))
    return out
