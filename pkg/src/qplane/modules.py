"""Finite-dimensional H-modules given by the action of K, X+, X- on sparse vectors.

Submodules are represented as :class:`~qplane.linalg.Subspace` objects in the
ambient coordinates of the module.
"""

from itertools import combinations

from .linalg import Subspace, kernel, vec_axpy

GENERATORS = ("K", "X+", "X-")


class HModule:
    """An H-module: ``apply(g, v)`` maps a sparse vector to a sparse vector.

    ``space`` is the subspace of the ambient coordinates that the module lives
    in; it must be stable under the generators.
    """

    def __init__(self, field, apply, space, name=""):
        self.field = field
        self._apply = apply
        self.space = space
        self.name = name

    @property
    def dim(self):
        return self.space.dim

    def apply(self, g, v):
        return self._apply(g, v)

    def generated(self, vectors):
        """Smallest submodule containing the given vectors (span closure)."""
        sub = Subspace(field=self.field)
        queue = []
        for v in vectors:
            res = sub.reduce(v)
            if res:
                sub.add(res)
                queue.append(res)
        while queue:
            v = queue.pop()
            for g in GENERATORS:
                w = self.apply(g, v)
                if w:
                    res = sub.reduce(w)
                    if res:
                        sub.add(res)
                        queue.append(res)
        return sub

    def is_invariant(self, sub):
        return all(self.apply(g, v) in sub for v in sub.basis() for g in GENERATORS)

    def weight_spaces(self):
        """K-eigenspaces as {exponent j: Subspace} for eigenvalue q^j.

        Raises ValueError if K is not diagonalizable on the module.
        """
        field = self.field
        basis = self.space.basis()
        spaces = {}
        total = 0
        for j in range(field.n):
            lam = field.q_pow(j)
            cols = [vec_axpy(self.apply("K", v), -lam, v) for v in basis]
            rels = kernel(cols, field)
            if rels:
                vecs = []
                for rel in rels:
                    acc = {}
                    for idx, c in rel.items():
                        acc = vec_axpy(acc, c, basis[idx])
                    vecs.append(acc)
                spaces[j] = Subspace(vecs)
                total += len(vecs)
        if total != self.dim:
            raise ValueError("K is not diagonalizable on this module")
        return spaces

    def weight_vectors(self):
        """List of (exponent, vector) running over a weight basis."""
        out = []
        for j, sp in sorted(self.weight_spaces().items()):
            out.extend((j, v) for v in sp.basis())
        return out

    def quotient_is_simple(self, big, small):
        """Is big/small a simple module?  Both must be submodules, small < big.

        Requires the weight spaces of big/small to be at most one-dimensional,
        which holds for every simple H-module; then every submodule of the
        quotient is spanned by images of weight vectors and it is enough to
        check that each weight vector outside ``small`` regenerates ``big``.
        """
        if not small.is_subspace_of(big) or small.dim >= big.dim:
            return False
        sub = HModule(self.field, self._apply, big)
        for j, sp in sub.weight_spaces().items():
            rel = Subspace(small.basis())
            fresh = [v for v in sp.basis() if rel.add(v)]
            if len(fresh) > 1:
                return False
            for v in fresh:
                if self.generated([v] + small.basis()).dim != big.dim:
                    return False
        return True

    def socle_candidates(self):
        """Cyclic submodules generated by single weight basis vectors."""
        seen = []
        for _, v in self.weight_vectors():
            g = self.generated([v])
            if not any(g == s for s in seen):
                seen.append(g)
        return seen


def lattice_from_generators(module, cyclic):
    """All sums of the given submodules (including 0 and their total)."""
    lattice = [Subspace(field=module.field)]
    for r in range(1, len(cyclic) + 1):
        for combo in combinations(cyclic, r):
            total = Subspace(field=module.field)
            for c in combo:
                total.extend(c.basis())
            if not any(total == s for s in lattice):
                lattice.append(total)
    lattice.sort(key=lambda s: s.dim)
    return lattice


def is_chain(lattice):
    """Totally ordered by inclusion?"""
    ordered = sorted(lattice, key=lambda s: s.dim)
    return all(a.is_subspace_of(b) for a, b in zip(ordered, ordered[1:]))


def matrix_of(module, basis, g):
    """Matrix (list of columns as {row index: scalar}) of g in the given module basis."""
    tracker = Subspace(track=True, field=module.field)
    for v in basis:
        tracker.add(v)
    return [tracker.express(module.apply(g, v)) for v in basis]
