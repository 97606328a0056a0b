"""Ring structure of H computed intrinsically from its multiplication table.

* the Jacobson radical is the kernel of the trace form tr(L_uv) of the left
  regular representation;
* the blocks are the generalized eigenspaces of left multiplication by the
  Casimir element (a central element separating the blocks);
* principal indecomposable modules are H e with e = e_w eps_p, where e_w
  projects onto a K-weight and eps_p is a central block idempotent;
* chains 0 < soc < N_lambda < rad < P are certified by checking that the
  successive quotients are simple.
"""

from dataclasses import dataclass, field as dc_field

from .hopf import HElement, h_basis, casimir, casimir_eigenvalue, _basis_product
from .linalg import Subspace, kernel, vec_axpy
from .modules import HModule, matrix_of

__all__ = [
    "StructureError",
    "SubmoduleChain",
    "Intertwiner",
    "regular_representation",
    "jacobson_radical",
    "radical_is_ideal",
    "radical_nilpotency_index",
    "quotient_is_semisimple",
    "blocks",
    "block_dimensions",
    "central_idempotents",
    "weight_idempotent",
    "pim",
    "pim_chain",
    "pim_chains",
    "match_summands_to_chains",
    "structure_report",
]

_GEN_KEYS = {"K": (1, 0, 0), "X+": (0, 1, 0), "X-": (0, 0, 1)}
DEFAULT_LAMBDAS = ((1, 0), (0, 1), (1, 1), (2, -3))


class StructureError(RuntimeError):
    """A computed structure disagrees with the expected one."""


def _degree(key):
    return key[1] - key[2]


def mul_vec(field, u, v):
    """Product of two sparse H vectors."""
    out = {}
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            c = c1 * c2
            for k, w in _basis_product(field, k1, k2).items():
                s = out.get(k)
                s = c * w if s is None else s + c * w
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
    return out


def _left_gen(field):
    def apply(g, v):
        return mul_vec(field, {_GEN_KEYS[g]: field.one}, v)
    return apply


def regular_module(field, space=None):
    """H (or a left ideal inside it) as a left module over itself."""
    if space is None:
        space = Subspace([{k: field.one} for k in h_basis(field)])
    return HModule(field, _left_gen(field), space, name="H")


def regular_representation(field):
    """Left multiplication by K, X+, X- as {generator: {basis key: image vector}}."""
    basis = h_basis(field)
    apply = _left_gen(field)
    return {g: {k: apply(g, {k: field.one}) for k in basis} for g in _GEN_KEYS}


# radical

def _trace_functional(field):
    """tau(w) = trace of left multiplication by the basis element w."""
    cache = field.cache("trace_functional")
    if cache:
        return cache
    basis = h_basis(field)
    for w in basis:
        if _degree(w):
            continue  # left multiplication shifts degree: zero diagonal
        t = field.zero
        for k in basis:
            c = _basis_product(field, w, k).get(k)
            if c:
                t = t + c
        if t:
            cache[w] = t
    return cache


def _tau(tau, vec):
    acc = None
    for k, c in vec.items():
        t = tau.get(k)
        if t:
            acc = c * t if acc is None else acc + c * t
    return acc


def jacobson_radical(field):
    """Kernel of the trace form (u, v) -> tr(L_uv), as a Subspace of H."""
    cache = field.cache("structure")
    if "radical" in cache:
        return cache["radical"]
    tau = _trace_functional(field)
    n = field.n
    by_degree = {}
    for k in h_basis(field):
        by_degree.setdefault(_degree(k), []).append(k)
    rad = Subspace(field=field)
    for d, keys in by_degree.items():
        partners = by_degree.get(-d, [])
        columns = []
        for u in keys:
            col = {}
            for j, v in enumerate(partners):
                t = _tau(tau, _basis_product(field, u, v))
                if t:
                    col[j] = t
            columns.append(col)
        for rel in kernel(columns, field):
            rad.add({keys[i]: c for i, c in rel.items()})
    cache["radical"] = rad
    return rad


def radical_is_ideal(field, rad=None):
    rad = jacobson_radical(field) if rad is None else rad
    for v in rad.basis():
        for g in _GEN_KEYS.values():
            gv = {g: field.one}
            if mul_vec(field, gv, v) not in rad or mul_vec(field, v, gv) not in rad:
                return False
    return True


def _left_generators(field, space):
    """A small set R of vectors with H R = space (space a left ideal)."""
    module = regular_module(field)
    gens = []
    cur = Subspace(field=field)
    for v in space.basis():
        if v not in cur:
            gens.append(v)
            cur = module.generated(gens)
            if cur.dim == space.dim:
                break
    return gens


def radical_nilpotency_index(field, bound=6):
    """Smallest k with J^k = 0 (None if above bound).

    Uses J^(k+1) = J^k R for a left generating set R of J, valid since J^k is
    a right ideal.
    """
    rad = jacobson_radical(field)
    gens = _left_generators(field, rad)
    power = rad
    for k in range(1, bound + 1):
        if power.dim == 0:
            return k - 1 if k > 1 else 0
        nxt = Subspace(field=field)
        for v in power.basis():
            for r in gens:
                w = mul_vec(field, v, r)
                if w:
                    nxt.add(w)
        power = nxt
        if power.dim == 0:
            return k + 1
    return None


def quotient_is_semisimple(field):
    """The trace form of H/J (on its own regular representation) is nondegenerate."""
    rad = jacobson_radical(field)
    basis = h_basis(field)
    comp = [k for k in basis if k not in rad.rows]
    tau = {}
    for w in basis:
        if _degree(w):
            continue
        t = field.zero
        for k in comp:
            c = rad.normal_form(_basis_product(field, w, k)).get(k)
            if c:
                t = t + c
        if t:
            tau[w] = t
    columns = []
    for u in comp:
        col = {}
        for j, v in enumerate(comp):
            t = _tau(tau, _basis_product(field, u, v))
            if t:
                col[j] = t
        columns.append(col)
    return not kernel(columns, field)


# blocks

def _block_labels(field):
    n = field.n
    return [0] + list(range(1, (n - 1) // 2 + 1))


def _block_eigenvalue(field, p):
    return casimir_eigenvalue(field, p if p else field.n)


def blocks(field):
    """{p: Subspace} generalized eigenspaces of left multiplication by the Casimir."""
    cache = field.cache("structure")
    if "blocks" in cache:
        return cache["blocks"]
    c_vec = casimir(field).terms
    by_degree = {}
    for k in h_basis(field):
        by_degree.setdefault(_degree(k), []).append(k)
    out = {}
    for p in _block_labels(field):
        lam = _block_eigenvalue(field, p)

        def shifted(v):
            return vec_axpy(mul_vec(field, c_vec, v), -lam, v)

        sub = Subspace(field=field)
        for keys in by_degree.values():
            images = [{k: field.one} for k in keys]
            prev = -1
            found = []
            while True:
                images = [shifted(v) for v in images]
                rels = kernel(images, field)
                if len(rels) == prev:
                    break
                prev = len(rels)
                found = rels
            for rel in found:
                sub.add({keys[i]: c for i, c in rel.items()})
        out[p] = sub
    total = sum(s.dim for s in out.values())
    if total != field.n ** 3:
        raise StructureError(f"blocks cover {total} of {field.n ** 3} dimensions")
    cache["blocks"] = out
    return out


def block_dimensions(field):
    """[(shape (N-p, p), dimension)] for p = 0 .. (N-1)/2."""
    n = field.n
    return [((n - p, p), sub.dim) for p, sub in sorted(blocks(field).items())]


def central_idempotents(field):
    """{p: eps_p} with 1 = sum eps_p and eps_p in block p."""
    cache = field.cache("structure")
    if "idempotents" in cache:
        return cache["idempotents"]
    bl = blocks(field)
    tracker = Subspace(track=True, field=field)
    owner = []
    for p, sub in sorted(bl.items()):
        for v in sub.basis():
            tracker.add(v)
            owner.append((p, v))
    combo = tracker.express({(0, 0, 0): field.one})
    out = {p: {} for p in bl}
    for idx, c in combo.items():
        p, v = owner[idx]
        out[p] = vec_axpy(out[p], c, v)
    cache["idempotents"] = out
    return out


def weight_idempotent(field, w):
    """e_w = (1/N) sum_j q^(-w j) K^j; K e_w = q^w e_w."""
    inv_n = field(1) / field.n
    return {(j, 0, 0): field.q_pow(-w * j) * inv_n for j in range(field.n)}


def _block_of_top(field, m):
    n = field.n
    return 0 if m == n else min(m, n - m)


def pim(field, m):
    """(module, generator e) for the projective cover of the simple of dimension m."""
    cache = field.cache("pim")
    if m in cache:
        return cache[m]
    e = mul_vec(field, weight_idempotent(field, m - 1),
                central_idempotents(field)[_block_of_top(field, m)])
    module = regular_module(field)
    space = module.generated([e])
    result = (regular_module(field, space), e)
    cache[m] = result
    return result


@dataclass
class SubmoduleChain:
    pim_label: tuple  # (block p, top dimension)
    dims: list
    lambdas: list = dc_field(default_factory=list)
    middle: dict = dc_field(default_factory=dict)  # lambda -> (dim, invariant dim)
    spaces: dict = dc_field(default_factory=dict, repr=False)

    def to_json(self):
        return {
            "block": self.pim_label[0],
            "top": self.pim_label[1],
            "dims": self.dims,
            "middle": [{"lambda": list(l), "dim": d, "invariant_dim": i}
                       for l, (d, i) in self.middle.items()],
        }


def _radical_of(field, module, e):
    rad = jacobson_radical(field)
    out = Subspace(field=field)
    for j in rad.basis():
        w = mul_vec(field, j, e)
        if w:
            out.add(w)
    return out


def _socle_of(field, module):
    rad_basis = jacobson_radical(field).basis()
    basis = module.space.basis()
    columns = []
    for v in basis:
        col = {}
        for idx, j in enumerate(rad_basis):
            for k, c in mul_vec(field, j, v).items():
                col[(idx,) + k] = c
        columns.append(col)
    out = Subspace(field=field)
    for rel in kernel(columns, field):
        acc = {}
        for i, c in rel.items():
            acc = vec_axpy(acc, c, basis[i])
        out.add(acc)
    return out


def middle_generators(field, m, rad=None):
    """v1, v2 spanning the radical's weight space of the highest weight of L(N-m)."""
    module, e = pim(field, m)
    rad = _radical_of(field, module, e) if rad is None else rad
    w = (field.n - m - 1) % field.n
    sub = regular_module(field, rad).weight_spaces().get(w)
    if sub is None or sub.dim != 2:
        raise StructureError(f"P{m}: expected a 2-dimensional weight space, got {sub and sub.dim}")
    return sub.basis()


def pim_chain(field, m, lambdas=DEFAULT_LAMBDAS):
    """Chain of the projective cover of the simple of dimension m, certified."""
    n = field.n
    module, e = pim(field, m)
    p = _block_of_top(field, m)
    full = module.space
    if m == n:
        if full.dim != n or not module.quotient_is_simple(full, Subspace(field=field)):
            raise StructureError("irreducible PIM is not simple of dimension N")
        return SubmoduleChain((p, m), [0, n], spaces={"full": full})
    rad = _radical_of(field, module, e)
    soc = _socle_of(field, module)
    v1, v2 = middle_generators(field, m, rad)
    mids = []
    middle = {}
    for l1, l2 in lambdas:
        v = vec_axpy(vec_axpy({}, field(l1), v1), field(l2), v2)
        mid = module.generated([v] + soc.basis())
        mids.append(mid)
        middle[(l1, l2)] = (mid.dim, soc.dim)
    chain = [Subspace(field=field), soc, mids[0], rad, full]
    for small, big in zip(chain, chain[1:]):
        if not module.quotient_is_simple(big, small):
            raise StructureError(f"P{m}: a chain quotient is not simple")
    for mid in mids[1:]:
        if not (soc.is_subspace_of(mid) and mid.is_subspace_of(rad)):
            raise StructureError(f"P{m}: middle module outside soc..rad")
        if not module.quotient_is_simple(mid, soc):
            raise StructureError(f"P{m}: middle quotient is not simple")
    for i, a in enumerate(mids):
        for b in mids[i + 1:]:
            if a == b:
                raise StructureError(f"P{m}: two lambdas give the same middle module")
    dims = [s.dim for s in chain]
    expected = [0, m, n, 2 * n - m, 2 * n]
    if dims != expected:
        raise StructureError(f"P{m}: chain dims {dims}, expected {expected}")
    return SubmoduleChain((p, m), dims, list(lambdas), middle,
                          spaces={"soc": soc, "rad": rad, "full": full,
                                  "v1": v1, "v2": v2})


def pim_chains(field, lambdas=DEFAULT_LAMBDAS):
    """{top dimension m: SubmoduleChain} for m = 1 .. N."""
    return {m: pim_chain(field, m, lambdas) for m in range(1, field.n + 1)}


@dataclass
class Intertwiner:
    label: int
    images: dict  # monomial key -> H vector
    lam: tuple = None

    def to_json(self):
        lam = None if self.lam is None else [str(c) for c in self.lam]
        return {"label": self.label, "lambda": lam}


def _intertwiner_space(field, src, src_basis, dst, dst_basis):
    """Basis of Hom_H(src, dst) as lists of image vectors of src_basis."""
    a = {g: matrix_of(src, src_basis, g) for g in _GEN_KEYS}
    b = {g: matrix_of(dst, dst_basis, g) for g in _GEN_KEYS}
    ns, nd = len(src_basis), len(dst_basis)
    unknowns = [(i, j) for i in range(nd) for j in range(ns)]
    columns = []
    for i, j in unknowns:
        col = {}
        for g in _GEN_KEYS:
            # (B_g T)[i', j] += B_g[i', i] T[i, j]
            for i2, c in b[g][i].items():
                key = (g, i2, j)
                col[key] = col.get(key, field.zero) + c
            # (T A_g)[i, j'] -= T[i, j] A_g[j, j']
            for j2 in range(ns):
                c = a[g][j2].get(j)
                if c:
                    key = (g, i, j2)
                    col[key] = col.get(key, field.zero) - c
        columns.append({k: v for k, v in col.items() if v})
    out = []
    for rel in kernel(columns, field):
        images = [{} for _ in range(ns)]
        for idx, c in rel.items():
            i, j = unknowns[idx]
            images[j] = vec_axpy(images[j], c, dst_basis[i])
        out.append(images)
    return out


def match_summands_to_chains(field, decomposition):
    """{label p: Intertwiner} embedding each summand of M into P_p as N_lambda."""
    from .decomposition import plane_module

    n = field.n
    out = {}
    for summand in decomposition.summands:
        p = summand.label
        src = plane_module(field, summand.basis)
        src_basis = [{k: field.one} for k in summand.basis]
        chain = pim_chain(field, p, lambdas=DEFAULT_LAMBDAS[:1])
        dst, _ = pim(field, p)
        dst_basis = dst.space.basis()
        homs = _intertwiner_space(field, src, src_basis, dst, dst_basis)
        chosen = None
        for images in homs + [_sum_images(homs)]:
            if images and Subspace(images).dim == n:
                chosen = images
                break
        if chosen is None:
            raise StructureError(f"summand {p}: no injective intertwiner")
        for key, img in zip(summand.basis, chosen):
            m = {key: field.one}
            for g in _GEN_KEYS:
                lhs = _apply_linear(field, summand.basis, chosen, src.apply(g, m))
                if lhs != dst.apply(g, img):
                    raise StructureError(f"summand {p}: intertwiner check failed")
        image = Subspace(chosen)
        lam = None
        if p < n:
            soc, rad = chain.spaces["soc"], chain.spaces["rad"]
            if not (soc.is_subspace_of(image) and image.is_subspace_of(rad)):
                raise StructureError(f"summand {p}: image is not between soc and rad")
            lam = _lambda_of(field, image, chain)
        out[p] = Intertwiner(p, dict(zip(summand.basis, chosen)), lam)
    return out


def _sum_images(homs):
    if not homs:
        return None
    total = [{} for _ in homs[0]]
    for images in homs:
        total = [_vadd(t, v) for t, v in zip(total, images)]
    return total


def _vadd(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _apply_linear(field, keys, images, v):
    out = {}
    index = {k: i for i, k in enumerate(keys)}
    for k, c in v.items():
        out = vec_axpy(out, c, images[index[k]])
    return out


def _lambda_of(field, image, chain):
    """(l1, l2) with the image's top weight vector = l1 v1 + l2 v2."""
    w = (field.n - chain.pim_label[1] - 1) % field.n
    top = regular_module(field, image).weight_spaces()[w].basis()[0]
    v1, v2 = chain.spaces["v1"], chain.spaces["v2"]
    t = Subspace(track=True, field=field)
    t.add(v1)
    t.add(v2)
    combo = t.express(top)
    return (combo.get(0, field.zero), combo.get(1, field.zero))


def structure_report(field, with_chains=True):
    rad = jacobson_radical(field)
    report = {
        "blocks": [{"shape": list(s), "dim": d} for s, d in block_dimensions(field)],
        "radical_dim": rad.dim,
        "quotient_dim": field.n ** 3 - rad.dim,
    }
    if with_chains:
        report["chains"] = [c.to_json() for _, c in sorted(pim_chains(field).items())]
    return report
