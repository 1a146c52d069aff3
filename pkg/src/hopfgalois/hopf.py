"""Finite-dimensional Hopf algebras as exact structure constants.

A Hopf algebra H of dimension n over an exact field is stored as five
matrices with respect to a fixed basis e_0..e_{n-1}:

* mult     n   x n^2   e_i e_j       = sum_k mult[k, i*n+j] e_k
* unit     n   x 1     the element 1
* comult   n^2 x n     Delta(e_k)    = sum_{i,j} comult[i*n+j, k] e_i (x) e_j
* counit   1   x n
* antipode n   x n

``validate_hopf`` checks the ten axioms exactly, by evaluating both sides
of each law on basis elements (equality of multilinear maps on a basis is
equality everywhere).  Constructors are provided for group algebras, the
Sweedler algebra, Taft algebras, duals and (co)opposites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    flip_map,
    kernel,
    kron,
    solve,
)


class StructureError(ValueError):
    """Raised when construction data fails its preconditions."""


# ---------------------------------------------------------------------------
# data carriers


@dataclass(frozen=True)
class AlgebraData:
    """A finite-dimensional associative unital algebra."""

    field: object
    dim: int
    mult: Matrix  # dim x dim^2
    unit: Matrix  # dim x 1
    labels: tuple

    def __post_init__(self):
        n = self.dim
        if self.mult.shape != (n, n * n):
            raise DimensionMismatchError(f"mult must be {n}x{n * n}")
        if self.unit.shape != (n, 1):
            raise DimensionMismatchError(f"unit must be {n}x1")
        if len(self.labels) != n:
            raise DimensionMismatchError("one label per basis element")

    @cached_property
    def mult_table(self):
        """mult_table[i][j] = {k: coefficient of e_k in e_i e_j}, zeros dropped."""
        n = self.dim
        rows = self.mult.rows
        table = []
        for i in range(n):
            ti = []
            for j in range(n):
                c = i * n + j
                ti.append({k: rows[k][c] for k in range(n) if rows[k][c] != 0})
            table.append(ti)
        return table

    @property
    def unit_vec(self) -> tuple:
        return self.unit.col(0)

    def mul_vec(self, u, v) -> tuple:
        """Product of two coefficient vectors."""
        f = self.field
        acc = dict_mul(f, self.mult_table, to_dict(u), to_dict(v))
        return to_vec(f, self.dim, acc)


@dataclass(frozen=True)
class CoalgebraData:
    """A finite-dimensional coassociative counital coalgebra."""

    field: object
    dim: int
    comult: Matrix  # dim^2 x dim
    counit: Matrix  # 1 x dim
    labels: tuple

    def __post_init__(self):
        n = self.dim
        if self.comult.shape != (n * n, n):
            raise DimensionMismatchError(f"comult must be {n * n}x{n}")
        if self.counit.shape != (1, n):
            raise DimensionMismatchError(f"counit must be 1x{n}")
        if len(self.labels) != n:
            raise DimensionMismatchError("one label per basis element")

    @cached_property
    def comult_table(self):
        """comult_table[k] = [(i, j, c), ...] with Delta(e_k) = sum c e_i (x) e_j."""
        n = self.dim
        rows = self.comult.rows
        table = []
        for k in range(n):
            entries = []
            for r in range(n * n):
                c = rows[r][k]
                if c != 0:
                    entries.append((r // n, r % n, c))
            table.append(entries)
        return table

    @property
    def counit_vec(self) -> tuple:
        return tuple(self.counit.rows[0])


@dataclass(frozen=True)
class HopfAlgebraData:
    """Algebra + coalgebra + antipode over one basis."""

    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: Matrix  # dim x dim

    def __post_init__(self):
        if self.algebra.dim != self.coalgebra.dim:
            raise DimensionMismatchError("algebra/coalgebra dimension mismatch")
        if self.algebra.field != self.coalgebra.field:
            raise DimensionMismatchError("algebra/coalgebra field mismatch")
        n = self.algebra.dim
        if self.antipode.shape != (n, n):
            raise DimensionMismatchError(f"antipode must be {n}x{n}")

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple:
        return self.algebra.labels

    @property
    def mult(self) -> Matrix:
        return self.algebra.mult

    @property
    def unit(self) -> Matrix:
        return self.algebra.unit

    @property
    def comult(self) -> Matrix:
        return self.coalgebra.comult

    @property
    def counit(self) -> Matrix:
        return self.coalgebra.counit

    @property
    def mult_table(self):
        return self.algebra.mult_table

    @property
    def comult_table(self):
        return self.coalgebra.comult_table


@dataclass(frozen=True)
class LinearHom:
    """A linear map from (the space of) a coalgebra to an algebra.

    Carries enough structure for convolution: source needs comult/counit,
    target needs mult/unit.  Both may also be full Hopf algebra data.
    """

    source: object
    target: object
    map: Matrix

    def __post_init__(self):
        if self.map.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f"hom matrix must be {self.target.dim}x{self.source.dim}"
            )


# ---------------------------------------------------------------------------
# sparse helpers (coefficient dicts index -> scalar, zeros absent)


def to_dict(vec) -> dict:
    return {i: c for i, c in enumerate(vec) if c != 0}

def to_vec(field, n: int, d: dict) -> tuple:
    v = [field.zero] * n
    for i, c in d.items():
        v[i] = c
    return tuple(v)

def dict_add_scaled(field, acc: dict, d: dict, scale) -> None:
    add, mul = field.add, field.mul
    for i, c in d.items():
        t = add(acc.get(i, field.zero), mul(scale, c))
        if t == 0:
            acc.pop(i, None)
        else:
            acc[i] = t

def dict_mul(field, mult_table, u: dict, v: dict) -> dict:
    acc = {}
    for i, ci in u.items():
        row = mult_table[i]
        for j, cj in v.items():
            dict_add_scaled(field, acc, row[j], field.mul(ci, cj))
    return acc

def dict_tensor_mul(field, table_a, table_b, dim_b: int, u: dict, v: dict) -> dict:
    """Product in A (x) B of sparse elements indexed i*dim_b + j."""
    mul = field.mul
    acc = {}
    for x, cx in u.items():
        ia, ja = divmod(x, dim_b)
        for y, cy in v.items():
            ib, jb = divmod(y, dim_b)
            scale = mul(cx, cy)
            for k1, c1 in table_a[ia][ib].items():
                base = k1 * dim_b
                for k2, c2 in table_b[ja][jb].items():
                    idx = base + k2
                    t = field.add(acc.get(idx, field.zero), mul(scale, mul(c1, c2)))
                    if t == 0:
                        acc.pop(idx, None)
                    else:
                        acc[idx] = t
    return acc


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    ok: bool
    witness: str = ""


@dataclass(frozen=True)
class ValidationReport:
    subject: str
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def summary(self) -> str:
        passed = sum(1 for c in self.checks if c.ok)
        return f"{passed}/{len(self.checks)} axioms pass"

    def lines(self):
        out = []
        for c in self.checks:
            mark = "ok" if c.ok else "FAIL"
            suffix = f"  [{c.witness}]" if (c.witness and not c.ok) else ""
            out.append(f"{mark:4s} {c.name}{suffix}")
        return out


def _check_associativity(alg: AlgebraData):
    f, n, table = alg.field, alg.dim, alg.mult_table
    for i in range(n):
        for j in range(n):
            ij = table[i][j]
            for k in range(n):
                lhs = {}
                for t, c in ij.items():
                    dict_add_scaled(f, lhs, table[t][k], c)
                rhs = {}
                for t, c in table[j][k].items():
                    dict_add_scaled(f, rhs, table[i][t], c)
                if lhs != rhs:
                    lab = alg.labels
                    return False, f"({lab[i]}.{lab[j]}).{lab[k]} != {lab[i]}.({lab[j]}.{lab[k]})"
    return True, ""


def _check_unit_law(alg: AlgebraData):
    f, n = alg.field, alg.dim
    one = to_dict(alg.unit_vec)
    for i in range(n):
        e = {i: f.one}
        if dict_mul(f, alg.mult_table, one, e) != e:
            return False, f"1.{alg.labels[i]} != {alg.labels[i]}"
        if dict_mul(f, alg.mult_table, e, one) != e:
            return False, f"{alg.labels[i]}.1 != {alg.labels[i]}"
    return True, ""


def validate_algebra(alg: AlgebraData) -> ValidationReport:
    checks = []
    ok, w = _check_associativity(alg)
    checks.append(AxiomCheck("associativity", ok, w))
    ok, w = _check_unit_law(alg)
    checks.append(AxiomCheck("unit law", ok, w))
    return ValidationReport("algebra", tuple(checks))


def _check_coassociativity(co: CoalgebraData):
    f, n, table = co.field, co.dim, co.comult_table
    for k in range(n):
        lhs, rhs = {}, {}
        for i, j, c in table[k]:
            for a, b, c2 in table[i]:
                dict_add_scaled(f, lhs, {(a * n + b) * n + j: f.one}, f.mul(c, c2))
            for a, b, c2 in table[j]:
                dict_add_scaled(f, rhs, {(i * n + a) * n + b: f.one}, f.mul(c, c2))
        if lhs != rhs:
            return False, f"coassociativity fails on {co.labels[k]}"
    return True, ""


def _check_counit_law(co: CoalgebraData):
    f, n, table = co.field, co.dim, co.comult_table
    eps = co.counit_vec
    for k in range(n):
        left, right = {}, {}
        for i, j, c in table[k]:
            if eps[i] != 0:
                dict_add_scaled(f, left, {j: f.one}, f.mul(eps[i], c))
            if eps[j] != 0:
                dict_add_scaled(f, right, {i: f.one}, f.mul(eps[j], c))
        if left != {k: f.one} or right != {k: f.one}:
            return False, f"counit law fails on {co.labels[k]}"
    return True, ""


def validate_coalgebra(co: CoalgebraData) -> ValidationReport:
    checks = []
    ok, w = _check_coassociativity(co)
    checks.append(AxiomCheck("coassociativity", ok, w))
    ok, w = _check_counit_law(co)
    checks.append(AxiomCheck("counit law", ok, w))
    return ValidationReport("coalgebra", tuple(checks))


def validate_hopf(h: HopfAlgebraData) -> ValidationReport:
    """Exact check of the ten Hopf algebra axioms.

    Order: associativity, unit, coassociativity, counit, Delta
    multiplicative, counit multiplicative, Delta(1) = 1 (x) 1,
    counit(1) = 1, both antipode identities (one check), antipode
    invertible.
    """
    f, n = h.field, h.dim
    mt, ct = h.mult_table, h.comult_table
    lab = h.labels
    checks = []

    ok, w = _check_associativity(h.algebra)
    checks.append(AxiomCheck("associativity", ok, w))
    ok, w = _check_unit_law(h.algebra)
    checks.append(AxiomCheck("unit law", ok, w))
    ok, w = _check_coassociativity(h.coalgebra)
    checks.append(AxiomCheck("coassociativity", ok, w))
    ok, w = _check_counit_law(h.coalgebra)
    checks.append(AxiomCheck("counit law", ok, w))

    # Delta(a b) = Delta(a) Delta(b) in H (x) H
    ok, w = True, ""
    for i in range(n):
        if not ok:
            break
        di = {a * n + b: c for a, b, c in ct[i]}
        for j in range(n):
            lhs = {}
            for k, c in mt[i][j].items():
                for a, b, c2 in ct[k]:
                    dict_add_scaled(f, lhs, {a * n + b: f.one}, f.mul(c, c2))
            dj = {a * n + b: c for a, b, c in ct[j]}
            rhs = dict_tensor_mul(f, mt, mt, n, di, dj)
            if lhs != rhs:
                ok, w = False, f"Delta({lab[i]}.{lab[j]}) != Delta({lab[i]}).Delta({lab[j]})"
                break
    checks.append(AxiomCheck("comultiplication is an algebra map", ok, w))

    eps = h.coalgebra.counit_vec
    ok, w = True, ""
    for i in range(n):
        if not ok:
            break
        for j in range(n):
            lhs = f.zero
            for k, c in mt[i][j].items():
                lhs = f.add(lhs, f.mul(c, eps[k]))
            if lhs != f.mul(eps[i], eps[j]):
                ok, w = False, f"eps({lab[i]}.{lab[j]}) != eps({lab[i]})eps({lab[j]})"
                break
    checks.append(AxiomCheck("counit is an algebra map", ok, w))

    one = to_dict(h.algebra.unit_vec)
    d_one = {}
    for i, c in one.items():
        for a, b, c2 in ct[i]:
            dict_add_scaled(f, d_one, {a * n + b: f.one}, f.mul(c, c2))
    one_one = {}
    for i, ci in one.items():
        for j, cj in one.items():
            dict_add_scaled(f, one_one, {i * n + j: f.one}, f.mul(ci, cj))
    checks.append(AxiomCheck("Delta(1) = 1 (x) 1", d_one == one_one))

    eps_one = f.zero
    for i, c in one.items():
        eps_one = f.add(eps_one, f.mul(c, eps[i]))
    checks.append(AxiomCheck("eps(1) = 1", eps_one == f.one))

    s_cols = [to_dict(h.antipode.col(j)) for j in range(n)]
    ok, w = True, ""
    for k in range(n):
        left, right = {}, {}
        for i, j, c in ct[k]:
            dict_add_scaled(f, left, dict_mul(f, mt, s_cols[i], {j: f.one}), c)
            dict_add_scaled(f, right, dict_mul(f, mt, {i: f.one}, s_cols[j]), c)
        target = {}
        dict_add_scaled(f, target, one, eps[k])
        if left != target:
            ok, w = False, f"m(S (x) id)Delta != unit.eps on {lab[k]}"
            break
        if right != target:
            ok, w = False, f"m(id (x) S)Delta != unit.eps on {lab[k]}"
            break
    checks.append(AxiomCheck("antipode identities", ok, w))

    s_rank = h.antipode.rank()
    checks.append(
        AxiomCheck(
            "antipode invertible",
            s_rank == n,
            "" if s_rank == n else f"rank {s_rank} < {n}",
        )
    )
    return ValidationReport("hopf algebra", tuple(checks))


def ker_counit(h: HopfAlgebraData) -> Subspace:
    """The augmentation ideal ker(eps) as a subspace of k^dim."""
    return kernel(h.counit)


def is_unital_subalgebra(alg: AlgebraData, v: Subspace) -> bool:
    """Does v contain 1 and close under the product?"""
    if v.ambient != alg.dim:
        raise DimensionMismatchError("subspace ambient != algebra dim")
    if not v.contains(alg.unit_vec):
        return False
    rows = v.basis.rows
    for a in rows:
        for b in rows:
            if not v.contains(alg.mul_vec(a, b)):
                return False
    return True


def tensor_algebra(x: AlgebraData, y: AlgebraData) -> AlgebraData:
    """X (x) Y with the componentwise product, basis labels joined by '.'."""
    if x.field != y.field:
        raise DimensionMismatchError("tensor factors over different fields")
    f = x.field
    mx, my = x.dim, y.dim
    dim = mx * my
    xmt, ymt = x.mult_table, y.mult_table
    rows = [[f.zero] * (dim * dim) for _ in range(dim)]
    for p1 in range(dim):
        i1, j1 = divmod(p1, my)
        for p2 in range(dim):
            i2, j2 = divmod(p2, my)
            col = p1 * dim + p2
            for kx, cx in xmt[i1][i2].items():
                for ky, cy in ymt[j1][j2].items():
                    rows[kx * my + ky][col] = f.mul(cx, cy)
    labels = tuple(f"{xl}.{yl}" for xl in x.labels for yl in y.labels)
    return AlgebraData(f, dim, Matrix(f, rows, dim * dim), kron(x.unit, y.unit), labels)


# ---------------------------------------------------------------------------
# constructors


def cyclic_table(n: int):
    """Cayley table of the cyclic group C_n."""
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_table(n: int):
    """Cayley table of S_n on lexicographically sorted permutation words.

    Composition convention: (p q)(x) = p(q(x)).
    Returns (table, labels); labels are the permutation words, e.g. "120".
    """
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms
    ]
    labels = tuple("".join(map(str, p)) for p in perms)
    return table, labels


def group_algebra(table, field, labels=None) -> HopfAlgebraData:
    """The group algebra k[G] from a Cayley table (list of lists of indices).

    The table is verified to be a group: closure, identity, inverses,
    associativity.  Group elements are group-like; the antipode sends each
    element to its inverse.
    """
    n = len(table)
    if n == 0:
        raise StructureError("empty Cayley table")
    for row in table:
        if len(row) != n or any(not (0 <= x < n) for x in row):
            raise StructureError("Cayley table is not closed over n elements")
    identity = None
    for e in range(n):
        if all(table[e][g] == g and table[g][e] == g for g in range(n)):
            identity = e
            break
    if identity is None:
        raise StructureError("Cayley table has no identity element")
    inv = [None] * n
    for g in range(n):
        for k in range(n):
            if table[g][k] == identity and table[k][g] == identity:
                inv[g] = k
                break
        if inv[g] is None:
            raise StructureError(f"element {g} has no inverse")
    for i in range(n):
        for j in range(n):
            tij = table[i][j]
            for k in range(n):
                if table[tij][k] != table[i][table[j][k]]:
                    raise StructureError(f"Cayley table not associative at ({i},{j},{k})")

    f = field
    zero, one = f.zero, f.one
    mult_rows = [[zero] * (n * n) for _ in range(n)]
    for i in range(n):
        for j in range(n):
            mult_rows[table[i][j]][i * n + j] = one
    unit_rows = [[one if i == identity else zero] for i in range(n)]
    comult_rows = [[zero] * n for _ in range(n * n)]
    for g in range(n):
        comult_rows[g * n + g][g] = one
    counit_row = [[one] * n]
    anti_rows = [[zero] * n for _ in range(n)]
    for g in range(n):
        anti_rows[inv[g]][g] = one

    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    return HopfAlgebraData(
        AlgebraData(f, n, Matrix(f, mult_rows, n * n), Matrix(f, unit_rows, 1), tuple(labels)),
        CoalgebraData(f, n, Matrix(f, comult_rows, n), Matrix(f, counit_row, n), tuple(labels)),
        Matrix(f, anti_rows, n),
    )


def sweedler(field) -> HopfAlgebraData:
    """Sweedler's 4-dimensional Hopf algebra on basis {1, g, x, gx}.

    g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g (x) g,
    Delta(x) = x (x) 1 + g (x) x; S(g) = g, S(x) = -gx.
    Requires characteristic != 2.
    """
    if field.characteristic == 2:
        raise StructureError("Sweedler algebra needs characteristic != 2")
    f = field
    zero, one = f.zero, f.one
    minus = f.neg(one)
    n = 4
    I, G, X, GX = 0, 1, 2, 3

    products = {
        (I, I): {I: one}, (I, G): {G: one}, (I, X): {X: one}, (I, GX): {GX: one},
        (G, I): {G: one}, (G, G): {I: one}, (G, X): {GX: one}, (G, GX): {X: one},
        (X, I): {X: one}, (X, G): {GX: minus}, (X, X): {}, (X, GX): {},
        (GX, I): {GX: one}, (GX, G): {X: minus}, (GX, X): {}, (GX, GX): {},
    }
    mult_rows = [[zero] * (n * n) for _ in range(n)]
    for (i, j), d in products.items():
        for k, c in d.items():
            mult_rows[k][i * n + j] = c

    coproducts = {
        I: {(I, I): one},
        G: {(G, G): one},
        X: {(X, I): one, (G, X): one},
        GX: {(GX, G): one, (I, GX): one},
    }
    comult_rows = [[zero] * n for _ in range(n * n)]
    for k, d in coproducts.items():
        for (a, b), c in d.items():
            comult_rows[a * n + b][k] = c

    counit_row = [[one, one, zero, zero]]
    anti_rows = [[zero] * n for _ in range(n)]
    anti_rows[I][I] = one
    anti_rows[G][G] = one
    anti_rows[GX][X] = minus  # S(x) = -gx
    anti_rows[X][GX] = one    # S(gx) = x
    labels = ("1", "g", "x", "gx")
    return HopfAlgebraData(
        AlgebraData(f, n, Matrix(f, mult_rows, n * n), Matrix(f, [[one], [zero], [zero], [zero]], 1), labels),
        CoalgebraData(f, n, Matrix(f, comult_rows, n), Matrix(f, counit_row, n), labels),
        Matrix(f, anti_rows, n),
    )


def taft(n: int, q, field) -> HopfAlgebraData:
    """The n^2-dimensional Taft algebra for a primitive n-th root of unity q.

    Basis g^a x^b (index a*n + b), with g^n = 1, x^n = 0, x g = q g x,
    Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x.
    """
    if n < 2:
        raise StructureError("Taft algebra needs n >= 2")
    f = field
    q = f.coerce(q)
    power = f.one
    for k in range(1, n):
        power = f.mul(power, q)
        if power == f.one:
            raise StructureError(f"q is not a primitive {n}-th root of unity (q^{k} = 1)")
    power = f.mul(power, q)
    if power != f.one:
        raise StructureError(f"q is not a primitive {n}-th root of unity (q^{n} != 1)")

    dim = n * n
    zero, one = f.zero, f.one

    def idx(a: int, b: int) -> int:
        return a * n + b

    # q powers
    qpow = [one]
    for _ in range(n * n):
        qpow.append(f.mul(qpow[-1], q))

    mult_rows = [[zero] * (dim * dim) for _ in range(dim)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d >= n:
                        continue
                    k = idx((a + c) % n, b + d)
                    mult_rows[k][idx(a, b) * dim + idx(c, d)] = qpow[b * c]
    mult = Matrix(f, mult_rows, dim * dim)
    unit = Matrix(f, [[one if i == idx(0, 0) else zero] for i in range(dim)], 1)

    # labels
    def label(a: int, b: int) -> str:
        ga = "" if a == 0 else ("g" if a == 1 else f"g{a}")
        xb = "" if b == 0 else ("x" if b == 1 else f"x{b}")
        return (ga + xb) or "1"

    labels = tuple(label(a, b) for a in range(n) for b in range(n))

    # Delta by multiplying out (g (x) g)^a (x(x)1 + g(x)x)^b in H (x) H
    alg = AlgebraData(f, dim, mult, unit, labels)
    mt = alg.mult_table
    d_g = {idx(1, 0) * dim + idx(1, 0): one}
    d_x = {idx(0, 1) * dim + idx(0, 0): one, idx(1, 0) * dim + idx(0, 1): one}
    d_unit = {idx(0, 0) * dim + idx(0, 0): one}

    def tmul(u, v):
        return dict_tensor_mul(f, mt, mt, dim, u, v)

    comult_rows = [[zero] * dim for _ in range(dim * dim)]
    acc_a = dict(d_unit)
    for a in range(n):
        acc = dict(acc_a)
        for b in range(n):
            for pos, c in acc.items():
                comult_rows[pos][idx(a, b)] = c
            acc = tmul(acc, d_x)
        acc_a = tmul(acc_a, d_g)
    comult = Matrix(f, comult_rows, dim)

    counit = Matrix(f, [[one if (i % n) == 0 else zero for i in range(dim)]], dim)

    # S(g) = g^{n-1}, S(x) = -g^{n-1} x; S(g^a x^b) = S(x)^b S(g)^a
    s_g = {idx(n - 1, 0): one}
    s_x = {idx(n - 1, 1): f.neg(one)}
    anti_rows = [[zero] * dim for _ in range(dim)]
    sx_pow = {idx(0, 0): one}
    for b in range(n):
        sg_pow = {idx(0, 0): one}
        for a in range(n):
            img = dict_mul(f, mt, sx_pow, sg_pow)
            for k, c in img.items():
                anti_rows[k][idx(a, b)] = c
            sg_pow = dict_mul(f, mt, sg_pow, s_g)
        sx_pow = dict_mul(f, mt, sx_pow, s_x)
    antipode = Matrix(f, anti_rows, dim)

    return HopfAlgebraData(
        alg,
        CoalgebraData(f, dim, comult, counit, labels),
        antipode,
    )


def dual(h: HopfAlgebraData) -> HopfAlgebraData:
    """The dual Hopf algebra on the dual basis; all structure transposes.

    Labels gain a trailing ``*`` (dropped again on the double dual, so
    dual(dual(h)) == h on the nose).
    """
    f, n = h.field, h.dim
    labels = tuple(l[:-1] if l.endswith("*") else f"{l}*" for l in h.labels)
    return HopfAlgebraData(
        AlgebraData(f, n, h.comult.transpose(), h.counit.transpose(), labels),
        CoalgebraData(f, n, h.mult.transpose(), h.unit.transpose(), labels),
        h.antipode.transpose(),
    )


def opposite(h: HopfAlgebraData) -> HopfAlgebraData:
    """Reversed multiplication; the antipode becomes S^{-1}."""
    f, n = h.field, h.dim
    return HopfAlgebraData(
        AlgebraData(f, n, h.mult @ flip_map(f, n, n), h.unit, h.labels),
        h.coalgebra,
        h.antipode.inverse(),
    )


def coopposite(h: HopfAlgebraData) -> HopfAlgebraData:
    """Reversed comultiplication; the antipode becomes S^{-1}."""
    f, n = h.field, h.dim
    return HopfAlgebraData(
        h.algebra,
        CoalgebraData(f, n, flip_map(f, n, n) @ h.comult, h.counit, h.labels),
        h.antipode.inverse(),
    )


# ---------------------------------------------------------------------------
# convolution


def convolution_unit(source, target) -> LinearHom:
    """The convolution identity unit . counit."""
    return LinearHom(source, target, target.unit @ source.counit)


def convolve(f_hom: LinearHom, g_hom: LinearHom) -> LinearHom:
    """Convolution product f * g = mult . (f (x) g) . comult."""
    if f_hom.source is not g_hom.source and f_hom.source != g_hom.source:
        raise DimensionMismatchError("convolution needs a common source")
    if f_hom.target is not g_hom.target and f_hom.target != g_hom.target:
        raise DimensionMismatchError("convolution needs a common target")
    src, tgt = f_hom.source, f_hom.target
    m = tgt.mult @ kron(f_hom.map, g_hom.map) @ src.comult
    return LinearHom(src, tgt, m)


def convolution_inverse(f_hom: LinearHom) -> LinearHom | None:
    """Two-sided convolution inverse, or None when no inverse exists.

    Solves the linear system f * x = unit . counit, then verifies
    x * f as well; a one-sided solution returns None.
    """
    src, tgt = f_hom.source, f_hom.target
    field = f_hom.map.field
    n, m = src.dim, tgt.dim
    e = convolution_unit(src, tgt).map

    # linear operator x -> f * x on vec'd homs (row-major: X[i][k] -> i*n + k)
    cols = []
    for s in range(m):
        for t in range(n):
            basis_map = Matrix(
                field,
                [
                    [field.one if (i == s and k == t) else field.zero for k in range(n)]
                    for i in range(m)
                ],
                n,
            )
            image = convolve(f_hom, LinearHom(src, tgt, basis_map)).map
            cols.append([image.rows[i][k] for i in range(m) for k in range(n)])
    op = Matrix(field, cols, m * n).transpose()
    rhs = [e.rows[i][k] for i in range(m) for k in range(n)]
    sol = solve(op, rhs)
    if sol is None:
        return None
    x = Matrix(field, [[sol[i * n + k] for k in range(n)] for i in range(m)], n)
    candidate = LinearHom(src, tgt, x)
    if convolve(candidate, f_hom).map != e or convolve(f_hom, candidate).map != e:
        return None
    return candidate
