"""Right H-comodule algebras, coinvariants, and the dual module picture.

A comodule algebra is an algebra A with a right coaction
delta: A -> A (x) H (an algebra map, coassociative and counital).  The
coaction is an (m*n) x m matrix with the flattening a_i (x) h_j -> i*n + j.

Coinvariants come in two flavours:

* plain:    A^{co H}   = {a : delta(a) = a (x) 1}
* relative: A^{co H/I} = {a : delta(a) - a (x) 1 in A (x) I} for a coideal
  right ideal I <= H (membership tested by projecting the H-leg mod I).

The dual picture (finite dimensional): A is a module algebra over the dual
Hopf algebra via f . a = (id (x) f)(delta(a)), invariants equal
coinvariants, and the hom-valued canonical map a1 (x) a2 -> (h -> a1 (h.a2))
is bijective exactly when the comodule-side canonical map is.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .hopf import (
    AlgebraData,
    AxiomCheck,
    HopfAlgebraData,
    LinearHom,
    ValidationReport,
    convolution_inverse,
    dict_add_scaled,
    dict_mul,
    dict_tensor_mul,
    dual,
    is_unital_subalgebra,
    tensor_algebra,
    to_dict,
    to_vec,
)
from .linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    kernel,
    kron,
    quotient_data,
    subspace_le,
    unit_vector,
)


@dataclass(frozen=True)
class ComoduleAlgebraData:
    """An algebra with a right H-coaction."""

    hopf: HopfAlgebraData
    algebra: AlgebraData
    coaction: Matrix  # (dim A * dim H) x dim A

    def __post_init__(self):
        m, n = self.algebra.dim, self.hopf.dim
        if self.algebra.field != self.hopf.field:
            raise DimensionMismatchError("algebra/hopf field mismatch")
        if self.coaction.shape != (m * n, m):
            raise DimensionMismatchError(
                f"coaction must be {m * n}x{m} (A -> A (x) H with legs i*dimH + j)"
            )

    @property
    def field(self):
        return self.algebra.field

    @cached_property
    def coaction_table(self):
        """coaction_table[l] = [(i, j, c), ...]: delta(a_l) = sum c a_i (x) h_j."""
        m, n = self.algebra.dim, self.hopf.dim
        rows = self.coaction.rows
        table = []
        for l in range(m):
            entries = []
            for r in range(m * n):
                c = rows[r][l]
                if c != 0:
                    entries.append((r // n, r % n, c))
            table.append(entries)
        return table

    @cached_property
    def coinvariants_space(self) -> Subspace:
        m = self.algebra.dim
        return kernel(self.coaction - kron(Matrix.identity(self.field, m), self.hopf.unit))


def regular(h: HopfAlgebraData) -> ComoduleAlgebraData:
    """H as a right comodule algebra over itself (coaction = comult)."""
    return ComoduleAlgebraData(h, h.algebra, h.comult)


def trivial(algebra: AlgebraData, h: HopfAlgebraData) -> ComoduleAlgebraData:
    """The trivial coaction a -> a (x) 1."""
    m = algebra.dim
    return ComoduleAlgebraData(
        h, algebra, kron(Matrix.identity(algebra.field, m), h.unit)
    )


def validate_comodule_algebra(a: ComoduleAlgebraData) -> ValidationReport:
    """Coassociativity, counitality, multiplicativity, delta(1) = 1 (x) 1."""
    f = a.field
    m, n = a.algebra.dim, a.hopf.dim
    ct = a.coaction_table
    hct = a.hopf.comult_table
    labels = a.algebra.labels
    checks = []

    # (delta (x) id) delta = (id (x) Delta) delta, on each basis element
    ok, w = True, ""
    for l in range(m):
        lhs, rhs = {}, {}
        for i, j, c in ct[l]:
            for p, q, c2 in ct[i]:
                dict_add_scaled(f, lhs, {(p * n + q) * n + j: f.one}, f.mul(c, c2))
            for p, q, c2 in hct[j]:
                dict_add_scaled(f, rhs, {(i * n + p) * n + q: f.one}, f.mul(c, c2))
        if lhs != rhs:
            ok, w = False, f"coassociativity fails on {labels[l]}"
            break
    checks.append(AxiomCheck("coaction coassociative", ok, w))

    eps = a.hopf.coalgebra.counit_vec
    ok, w = True, ""
    for l in range(m):
        acc = {}
        for i, j, c in ct[l]:
            if eps[j] != 0:
                dict_add_scaled(f, acc, {i: f.one}, f.mul(c, eps[j]))
        if acc != {l: f.one}:
            ok, w = False, f"counit law fails on {labels[l]}"
            break
    checks.append(AxiomCheck("coaction counital", ok, w))

    # delta(a b) = delta(a) delta(b) in A (x) H
    amt, hmt = a.algebra.mult_table, a.hopf.mult_table
    delta_cols = [{i * n + j: c for i, j, c in ct[l]} for l in range(m)]
    ok, w = True, ""
    for p in range(m):
        if not ok:
            break
        for q in range(m):
            lhs = {}
            for k, c in amt[p][q].items():
                dict_add_scaled(f, lhs, delta_cols[k], c)
            rhs = dict_tensor_mul(f, amt, hmt, n, delta_cols[p], delta_cols[q])
            if lhs != rhs:
                ok, w = False, f"delta({labels[p]}.{labels[q]}) != delta({labels[p]})delta({labels[q]})"
                break
    checks.append(AxiomCheck("coaction is an algebra map", ok, w))

    one_a = to_dict(a.algebra.unit_vec)
    one_h = to_dict(a.hopf.algebra.unit_vec)
    lhs = {}
    for l, c in one_a.items():
        dict_add_scaled(f, lhs, delta_cols[l], c)
    rhs = {}
    for i, ci in one_a.items():
        for j, cj in one_h.items():
            dict_add_scaled(f, rhs, {i * n + j: f.one}, f.mul(ci, cj))
    checks.append(AxiomCheck("delta(1) = 1 (x) 1", lhs == rhs))

    return ValidationReport("comodule algebra", tuple(checks))


def coinvariants(a: ComoduleAlgebraData) -> Subspace:
    """A^{co H} = {a : delta(a) = a (x) 1}."""
    return a.coinvariants_space


def coinvariants_q(a: ComoduleAlgebraData, ideal: Subspace, check: bool = True) -> Subspace:
    """A^{co H/I} = {a : delta(a) - a (x) 1 in A (x) I}.

    ``ideal`` must live in H's coordinate space.  With ``check`` (the
    default, intended for validated coideal right ideals) the result is
    verified to be a unital subalgebra containing A^{co H}.
    """
    f = a.field
    m, n = a.algebra.dim, a.hopf.dim
    if ideal.ambient != n:
        raise DimensionMismatchError(f"ideal ambient {ideal.ambient} != dim H = {n}")
    proj, _ = quotient_data(ideal)
    im = Matrix.identity(f, m)
    displaced = a.coaction - kron(im, a.hopf.unit)
    space = kernel(kron(im, proj) @ displaced)
    if check:
        if not is_unital_subalgebra(a.algebra, space):
            raise ValueError("relative coinvariants failed the subalgebra check "
                             "(is the ideal a coideal right ideal?)")
        if not subspace_le(a.coinvariants_space, space):
            raise ValueError("relative coinvariants do not contain A^{co H}")
    return space


# ---------------------------------------------------------------------------
# dual module-algebra picture


@dataclass(frozen=True)
class ModuleAlgebraData:
    """An algebra with a left action of a Hopf algebra.

    The action is an m x (n*m) matrix (h_j (x) a_l at column j*m + l).
    """

    hopf: HopfAlgebraData
    algebra: AlgebraData
    action: Matrix

    def __post_init__(self):
        m, n = self.algebra.dim, self.hopf.dim
        if self.algebra.field != self.hopf.field:
            raise DimensionMismatchError("algebra/hopf field mismatch")
        if self.action.shape != (m, n * m):
            raise DimensionMismatchError(f"action must be {m}x{n * m}")

    @property
    def field(self):
        return self.algebra.field

    def act(self, j: int, vec) -> tuple:
        """Action of basis element h_j on a coefficient vector."""
        f = self.field
        m = self.algebra.dim
        out = [f.zero] * m
        for l, c in enumerate(vec):
            if c == 0:
                continue
            col = j * m + l
            for i in range(m):
                e = self.action.rows[i][col]
                if e != 0:
                    out[i] = f.add(out[i], f.mul(c, e))
        return tuple(out)


def to_module_algebra(a: ComoduleAlgebraData) -> ModuleAlgebraData:
    """The dual-side module algebra: f . a = (id (x) f)(delta(a))."""
    f = a.field
    m, n = a.algebra.dim, a.hopf.dim
    rows = [[f.zero] * (n * m) for _ in range(m)]
    for l in range(m):
        for i, j, c in a.coaction_table[l]:
            rows[i][j * m + l] = c
    return ModuleAlgebraData(dual(a.hopf), a.algebra, Matrix(f, rows, n * m))


def validate_module_algebra(mod: ModuleAlgebraData) -> ValidationReport:
    """Module axioms plus the module-algebra compatibilities."""
    f = mod.field
    m, n = mod.algebra.dim, mod.hopf.dim
    amt, hmt = mod.algebra.mult_table, mod.hopf.mult_table
    hct = mod.hopf.comult_table
    labels_h = mod.hopf.labels
    checks = []

    basis = [unit_vector(f, m, l) for l in range(m)]

    ok, w = True, ""
    for i in range(n):
        if not ok:
            break
        for j in range(n):
            for l in range(m):
                lhs = mod.act(i, mod.act(j, basis[l]))
                rhs = [f.zero] * m
                for k, c in hmt[i][j].items():
                    img = mod.act(k, basis[l])
                    for t in range(m):
                        if img[t] != 0:
                            rhs[t] = f.add(rhs[t], f.mul(c, img[t]))
                if lhs != tuple(rhs):
                    ok, w = False, f"({labels_h[i]}.{labels_h[j]}) acts wrong"
                    break
            if not ok:
                break
    checks.append(AxiomCheck("module associativity", ok, w))

    one_h = to_dict(mod.hopf.algebra.unit_vec)
    ok, w = True, ""
    for l in range(m):
        acc = [f.zero] * m
        for j, c in one_h.items():
            img = mod.act(j, basis[l])
            for t in range(m):
                if img[t] != 0:
                    acc[t] = f.add(acc[t], f.mul(c, img[t]))
        if tuple(acc) != basis[l]:
            ok, w = False, f"1 does not act as identity on index {l}"
            break
    checks.append(AxiomCheck("unit acts as identity", ok, w))

    # h . (a b) = sum (h1 . a)(h2 . b)
    ok, w = True, ""
    for j in range(n):
        if not ok:
            break
        for p in range(m):
            if not ok:
                break
            for q in range(m):
                prod = to_vec(f, m, amt[p][q])
                lhs = mod.act(j, prod)
                rhs = {}
                for h1, h2, c in hct[j]:
                    left = to_dict(mod.act(h1, basis[p]))
                    right = to_dict(mod.act(h2, basis[q]))
                    dict_add_scaled(f, rhs, dict_mul(f, amt, left, right), c)
                if to_dict(lhs) != rhs:
                    ok, w = False, f"{labels_h[j]} is not a measuring on ({p},{q})"
                    break
    checks.append(AxiomCheck("module-algebra law", ok, w))

    eps = mod.hopf.coalgebra.counit_vec
    one_a = mod.algebra.unit_vec
    ok, w = True, ""
    for j in range(n):
        lhs = mod.act(j, one_a)
        rhs = tuple(f.mul(eps[j], c) for c in one_a)
        if lhs != rhs:
            ok, w = False, f"{labels_h[j]} . 1 != eps({labels_h[j]}) 1"
            break
    checks.append(AxiomCheck("action on 1 is the counit", ok, w))

    return ValidationReport("module algebra", tuple(checks))


def invariants(mod: ModuleAlgebraData) -> Subspace:
    """A^H = {a : h . a = eps(h) a for all h}."""
    f = mod.field
    m, n = mod.algebra.dim, mod.hopf.dim
    eps = mod.hopf.coalgebra.counit_vec
    blocks = []
    for j in range(n):
        rows = []
        for i in range(m):
            row = []
            for l in range(m):
                e = mod.action.rows[i][j * m + l]
                if i == l:
                    e = f.sub(e, eps[j])
                row.append(e)
            rows.append(row)
        blocks.append(Matrix(f, rows, m))
    stacked = blocks[0]
    for b in blocks[1:]:
        stacked = stacked.stack(b)
    return kernel(stacked)


# ---------------------------------------------------------------------------
# relative tensor product over a base subalgebra


@dataclass(frozen=True)
class TensorOverBase:
    """A (x)_B A, presented as a quotient of A (x) A.

    dim: dimension of the quotient; relations: the subspace
    span{(a b) (x) a' - a (x) (b a')}; proj/incl: quotient data for it.
    """

    dim: int
    relations: Subspace
    proj: Matrix
    incl: Matrix


def tensor_over(algebra: AlgebraData, base: Subspace) -> TensorOverBase:
    """The relative tensor square A (x)_B A for a unital subalgebra B <= A."""
    if base.ambient != algebra.dim:
        raise DimensionMismatchError("base ambient != algebra dim")
    if not is_unital_subalgebra(algebra, base):
        raise ValueError("base is not a unital subalgebra")
    f = algebra.field
    m = algebra.dim
    vecs = []
    for b in base.basis.rows:
        for i in range(m):
            left = algebra.mul_vec(unit_vector(f, m, i), b)  # a_i b
            for j in range(m):
                right = algebra.mul_vec(b, unit_vector(f, m, j))  # b a_j
                v = [f.zero] * (m * m)
                for k, c in enumerate(left):
                    if c != 0:
                        v[k * m + j] = c
                for k, c in enumerate(right):
                    if c != 0:
                        v[i * m + k] = f.sub(v[i * m + k], c)
                vecs.append(v)
    relations = Subspace.span(f, m * m, vecs)
    proj, incl = quotient_data(relations)
    return TensorOverBase(m * m - relations.dim, relations, proj, incl)


@dataclass(frozen=True)
class HomCanonical:
    """The Chase-Sweedler canonical map A (x)_B A -> Hom(H, A)."""

    base: TensorOverBase
    matrix: Matrix  # (dim A * dim H) x dim(A (x)_B A), target basis a_i h*_j at i*n+j
    bijective: bool


def hom_canonical(mod: ModuleAlgebraData, base: Subspace) -> HomCanonical:
    """a1 (x) a2 -> (h -> a1 (h . a2)), induced on A (x)_B A.

    ``base`` must consist of invariants; otherwise the map does not factor
    through the relations and a ValueError reports it.
    """
    f = mod.field
    m, n = mod.algebra.dim, mod.hopf.dim
    t = tensor_over(mod.algebra, base)
    cols = []
    for p in range(m):
        ep = unit_vector(f, m, p)
        for q in range(m):
            eq = unit_vector(f, m, q)
            col = [f.zero] * (m * n)
            for j in range(n):
                w = mod.algebra.mul_vec(ep, mod.act(j, eq))
                for i, c in enumerate(w):
                    if c != 0:
                        col[i * n + j] = c
            cols.append(col)
    lifted = Matrix(f, cols, m * n).transpose()
    for row in t.relations.basis.rows:
        if any(c != 0 for c in lifted.apply(row)):
            raise ValueError("base is not contained in the invariants: "
                             "canonical map does not descend to A (x)_B A")
    induced = lifted @ t.incl
    bijective = t.dim == m * n and induced.rank() == t.dim
    return HomCanonical(t, induced, bijective)


# ---------------------------------------------------------------------------
# cleft data


@dataclass(frozen=True)
class CleftData:
    comodule: ComoduleAlgebraData
    gamma: LinearHom
    gamma_inv: LinearHom


@dataclass(frozen=True)
class NotCleft:
    reason: str

    def __bool__(self):
        return False


def verify_cleft(a: ComoduleAlgebraData, gamma: LinearHom):
    """Check gamma: H -> A is a comodule map with a convolution inverse.

    Returns CleftData on success, NotCleft(reason) otherwise.
    """
    h = a.hopf
    n = h.dim
    if gamma.map.shape != (a.algebra.dim, n):
        raise DimensionMismatchError("gamma must map H to A")
    lhs = a.coaction @ gamma.map
    rhs = kron(gamma.map, Matrix.identity(a.field, n)) @ h.comult
    if lhs != rhs:
        return NotCleft("gamma is not an H-comodule map")
    inv = convolution_inverse(LinearHom(h, a.algebra, gamma.map))
    if inv is None:
        return NotCleft("gamma has no two-sided convolution inverse")
    return CleftData(a, LinearHom(h, a.algebra, gamma.map), inv)


def trivial_cleft(base: AlgebraData, h: HopfAlgebraData):
    """The trivially cleft comodule algebra B (x) H.

    Componentwise product, coaction id (x) Delta, cleaving map
    gamma(h) = 1 (x) h with inverse 1 (x) S(h).
    Returns (ComoduleAlgebraData, CleftData).
    """
    if base.field != h.field:
        raise DimensionMismatchError("field mismatch")
    f = h.field
    mb, n = base.dim, h.dim
    algebra = tensor_algebra(base, h.algebra)
    coaction = kron(Matrix.identity(f, mb), h.comult)
    a = ComoduleAlgebraData(h, algebra, coaction)
    gamma = LinearHom(h, algebra, kron(base.unit, Matrix.identity(f, n)))
    result = verify_cleft(a, gamma)
    if isinstance(result, NotCleft):
        raise RuntimeError(f"trivial cleft construction failed: {result.reason}")
    return a, result
