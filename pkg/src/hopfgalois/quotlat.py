"""Generalised quotients of a Hopf algebra and their lattice structure.

A generalised quotient Q = H/I is the quotient of H by a coideal right
ideal I: a subspace with eps(I) = 0, I.H <= I, and
Delta(I) <= I (x) H + H (x) I.  Q inherits a coalgebra structure and a
right H-module structure but in general no algebra structure.

The family of all such I inside a fixed H is a complete lattice under
inclusion: the join of two ideals is their sum (again a coideal right
ideal), while the meet is the largest coideal right ideal contained in the
intersection, computed by a decreasing fixpoint (``cogenerated_rico``).
The bottom ideal 0 gives Q = H; the top ideal ker(eps) gives Q = k.

Coideal subalgebras K <= H (the other side of the Takeuchi picture) are
validated and enumerated here as well.  All enumeration is exhaustive
exactly when the field is finite and the dimension is under the cap, and
every family records whether it is.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property

from .hopf import (
    AlgebraData,
    AxiomCheck,
    HopfAlgebraData,
    ValidationReport,
    is_unital_subalgebra,
    ker_counit,
)
from .linalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    kernel,
    kron,
    quotient_data,
    subspace_intersect,
    subspace_le,
    subspace_sum,
    unit_vector,
)


@dataclass(frozen=True)
class InvalidReason:
    """A named validation failure; falsy so it reads as `not valid`."""

    condition: str
    witness: str = ""

    def __bool__(self):
        return False

    def __str__(self):
        return f"{self.condition}" + (f" ({self.witness})" if self.witness else "")


@dataclass(frozen=True)
class GeneralisedQuotient:
    """H/I for a coideal right ideal I, with the inherited structure.

    proj/incl present Q on the non-pivot coordinates of I's canonical
    basis; comult_q and counit_q make Q a coalgebra, action_q makes it a
    right H-module, and proj intertwines all three with H's structure.
    """

    hopf: HopfAlgebraData
    ideal: Subspace

    def __post_init__(self):
        if self.ideal.ambient != self.hopf.dim:
            raise DimensionMismatchError("ideal ambient != dim H")
        if self.ideal.field != self.hopf.field:
            raise DimensionMismatchError("ideal/hopf field mismatch")

    @property
    def field(self):
        return self.hopf.field

    @property
    def q_dim(self) -> int:
        return self.hopf.dim - self.ideal.dim

    @cached_property
    def _quotient_data(self):
        return quotient_data(self.ideal)

    @property
    def proj(self) -> Matrix:
        return self._quotient_data[0]

    @property
    def incl(self) -> Matrix:
        return self._quotient_data[1]

    @cached_property
    def comult_q(self) -> Matrix:
        p = self.proj
        return kron(p, p) @ self.hopf.comult @ self.incl

    @cached_property
    def counit_q(self) -> Matrix:
        return self.hopf.counit @ self.incl

    @cached_property
    def action_q(self) -> Matrix:
        n = self.hopf.dim
        return self.proj @ self.hopf.mult @ kron(self.incl, Matrix.identity(self.field, n))

    def key(self):
        return self.ideal.key()

    def is_top(self) -> bool:
        """Q = H (ideal 0)."""
        return self.ideal.dim == 0

    def is_bottom(self) -> bool:
        """Q = k (ideal ker eps)."""
        return self.q_dim == 1


@dataclass(frozen=True)
class CoidealSubalgebra:
    """A unital subalgebra K <= H with Delta(K) <= H (x) K (side='left')
    or Delta(K) <= K (x) H (side='right')."""

    hopf: HopfAlgebraData
    space: Subspace
    side: str = "left"

    def key(self):
        return self.space.key()

    @property
    def dim(self) -> int:
        return self.space.dim


def _comult_coefficients(h: HopfAlgebraData, vec) -> Matrix:
    """Delta(vec) as the n x n matrix M with Delta = sum M[i][j] e_i (x) e_j."""
    f = h.field
    n = h.dim
    rows = [[f.zero] * n for _ in range(n)]
    for l, c in enumerate(vec):
        if c == 0:
            continue
        for i, j, c2 in h.comult_table[l]:
            rows[i][j] = f.add(rows[i][j], f.mul(c, c2))
    return Matrix(f, rows, n)


def validate_rico(h: HopfAlgebraData, ideal: Subspace):
    """Check that ideal is a coideal right ideal of H.

    Returns True, or an InvalidReason naming the first failed condition
    (checked in the order: counit, right ideal, coideal).  On success the
    induced quotient structure is verified too.
    """
    f = h.field
    n = h.dim
    if ideal.ambient != n:
        raise DimensionMismatchError("ideal ambient != dim H")
    eps = h.coalgebra.counit_vec

    for row in ideal.basis.rows:
        s = f.zero
        for c, e in zip(row, eps):
            if c != 0 and e != 0:
                s = f.add(s, f.mul(c, e))
        if s != 0:
            return InvalidReason("counit does not vanish on the ideal")

    for row in ideal.basis.rows:
        for j in range(n):
            if not ideal.contains(h.algebra.mul_vec(row, unit_vector(f, n, j))):
                return InvalidReason(
                    "not a right ideal", f"misses y.{h.labels[j]}"
                )

    proj, incl = quotient_data(ideal)
    projt = proj.transpose()
    for row in ideal.basis.rows:
        m = _comult_coefficients(h, row)
        if any(x != 0 for r in (proj @ m @ projt).rows for x in r):
            return InvalidReason("not a coideal")

    q = GeneralisedQuotient(h, ideal)
    reason = _validate_induced(q)
    if reason is not None:
        return reason
    return True


def _validate_induced(q: GeneralisedQuotient):
    """Defensive checks on the inherited quotient structure."""
    f = q.field
    n, qd = q.hopf.dim, q.q_dim
    iq = Matrix.identity(f, qd)
    dq, eq, aq = q.comult_q, q.counit_q, q.action_q

    if kron(dq, iq) @ dq != kron(iq, dq) @ dq:
        return InvalidReason("induced comultiplication not coassociative")
    if kron(eq, iq) @ dq != iq or kron(iq, eq) @ dq != iq:
        return InvalidReason("induced counit law fails")
    if aq @ kron(aq, Matrix.identity(f, n)) != aq @ kron(iq, q.hopf.mult):
        return InvalidReason("induced right action not associative")
    if aq @ kron(iq, q.hopf.unit) != iq:
        return InvalidReason("induced right action not unital")
    p = q.proj
    if kron(p, p) @ q.hopf.comult != dq @ p:
        return InvalidReason("projection does not intertwine comultiplication")
    if q.hopf.counit != eq @ p:
        return InvalidReason("projection does not intertwine counit")
    if p @ q.hopf.mult != aq @ kron(p, Matrix.identity(f, n)):
        return InvalidReason("projection does not intertwine multiplication")
    p1 = p.apply(q.hopf.algebra.unit_vec)
    sq = [f.zero] * (qd * qd)
    for i, a in enumerate(p1):
        for j, b in enumerate(p1):
            sq[i * qd + j] = f.mul(a, b)
    if list(dq.apply(p1)) != sq:
        return InvalidReason("image of 1 is not group-like")
    s = f.zero
    for c, e in zip(p1, eq.rows[0]):
        s = f.add(s, f.mul(c, e))
    if s != f.one:
        return InvalidReason("counit of the image of 1 is not 1")
    return None


def validate_coideal_subalgebra(h: HopfAlgebraData, space: Subspace, side: str = "left"):
    """Check that space is a unital subalgebra and a one-sided coideal.

    side='left' demands Delta(K) <= H (x) K, side='right' the mirror.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if space.ambient != h.dim:
        raise DimensionMismatchError("space ambient != dim H")
    if not space.contains(h.algebra.unit_vec):
        return InvalidReason("does not contain 1")
    for i, a in enumerate(space.basis.rows):
        for b in space.basis.rows:
            if not space.contains(h.algebra.mul_vec(a, b)):
                return InvalidReason("not closed under multiplication",
                                     f"basis row {i}")
    proj, _ = quotient_data(space)
    for row in space.basis.rows:
        m = _comult_coefficients(h, row)
        bad = (m @ proj.transpose()) if side == "left" else (proj @ m)
        if any(x != 0 for r in bad.rows for x in r):
            return InvalidReason(f"not a {side} coideal")
    return True


# ---------------------------------------------------------------------------
# lattice operations


def cogenerated_rico(h: HopfAlgebraData, space: Subspace) -> Subspace:
    """The largest coideal right ideal of H contained in ``space``.

    Decreasing fixpoint: start from space /\\ ker(eps), repeatedly cut to
    the part whose comultiplication lands in I (x) H + H (x) I and whose
    right translates stay inside, until the dimension stabilises.
    """
    f = h.field
    n = h.dim
    if space.ambient != n:
        raise DimensionMismatchError("space ambient != dim H")
    current = subspace_intersect(space, ker_counit(h))
    while current.dim > 0:
        proj, _ = quotient_data(current)
        # right-ideal cut: pi(y . e_j) = 0 for all j
        stacked = None
        for j in range(n):
            rj = Matrix(
                f,
                [[h.mult.rows[i][l * n + j] for l in range(n)] for i in range(n)],
                n,
            )
            piece = proj @ rj
            stacked = piece if stacked is None else stacked.stack(piece)
        # coideal cut: (pi (x) pi) Delta(y) = 0
        stacked = stacked.stack(kron(proj, proj) @ h.comult)
        new = subspace_intersect(current, kernel(stacked))
        if new.dim == current.dim:
            break
        current = new
    return current


def join_q(q1: GeneralisedQuotient, q2: GeneralisedQuotient, check: bool = True) -> GeneralisedQuotient:
    """The quotient by I1 + I2: the least ideal containing both.

    As quotients, this is the finest common quotient of q1 and q2 (each
    factors onto it); its coinvariants contain those of either input.
    """
    _check_same_hopf(q1, q2)
    ideal = subspace_sum(q1.ideal, q2.ideal)
    if check:
        valid = validate_rico(q1.hopf, ideal)
        if not valid:
            raise ValueError(f"sum of ideals failed validation: {valid}")
    return GeneralisedQuotient(q1.hopf, ideal)


def meet_q(q1: GeneralisedQuotient, q2: GeneralisedQuotient) -> GeneralisedQuotient:
    """The quotient by the largest coideal right ideal inside I1 /\\ I2.

    As quotients, this is the coarsest one both q1 and q2 factor from: the
    supremum in the refinement order, and the place where coinvariants
    intersect.
    """
    _check_same_hopf(q1, q2)
    ideal = cogenerated_rico(q1.hopf, subspace_intersect(q1.ideal, q2.ideal))
    return GeneralisedQuotient(q1.hopf, ideal)


def _check_same_hopf(q1, q2):
    if q1.hopf != q2.hopf:
        raise ValueError("quotients live over different Hopf algebras")


# ---------------------------------------------------------------------------
# enumeration


def enumerate_subspaces(field, ambient: int, dims=None):
    """All subspaces of field^ambient, canonically ordered.

    Yields Subspace objects grouped by dimension (ascending), each group
    sorted by the canonical basis key.  Needs a finite field.
    """
    if not hasattr(field, "elements"):
        raise ValueError("subspace enumeration needs a finite field")
    elems = [field.coerce(x) for x in field.elements()]
    if dims is None:
        dims = range(ambient + 1)
    for d in dims:
        block = []
        if d == 0:
            yield Subspace.zero(field, ambient)
            continue
        for pivots in itertools.combinations(range(ambient), d):
            pivot_set = set(pivots)
            free = [
                [c for c in range(ambient) if c not in pivot_set and c > pivots[r]]
                for r in range(d)
            ]
            slots = [(r, c) for r in range(d) for c in free[r]]
            for values in itertools.product(elems, repeat=len(slots)):
                rows = [[field.zero] * ambient for _ in range(d)]
                for r in range(d):
                    rows[r][pivots[r]] = field.one
                for (r, c), v in zip(slots, values):
                    rows[r][c] = v
                block.append(Subspace(field, ambient, Matrix(field, rows, ambient)))
        block.sort(key=lambda s: s.key())
        yield from block


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """The number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


@dataclass(frozen=True)
class QuotientFamily:
    """An enumerated family of generalised quotients of one Hopf algebra."""

    hopf: HopfAlgebraData
    quotients: tuple
    exhaustive: bool

    def __len__(self):
        return len(self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def __getitem__(self, i):
        return self.quotients[i]

    def index_of(self, ideal: Subspace) -> int:
        for i, q in enumerate(self.quotients):
            if q.ideal == ideal:
                return i
        raise KeyError("ideal not in family")


@dataclass(frozen=True)
class CoidealFamily:
    hopf: HopfAlgebraData
    side: str
    members: tuple
    exhaustive: bool

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


def _rico_chunk(args):
    h, chunk = args
    return [bool(validate_rico(h, s)) for s in chunk]


def _coideal_chunk(args):
    h, side, chunk = args
    return [bool(validate_coideal_subalgebra(h, s, side)) for s in chunk]


def _run_filter(worker, args_list, jobs: int):
    if jobs <= 1 or len(args_list) <= 1:
        return [worker(a) for a in args_list]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, args_list))


def _chunked(items, pieces: int):
    size = max(1, -(-len(items) // pieces))
    return [items[i : i + size] for i in range(0, len(items), size)]


def enumerate_ricos(h: HopfAlgebraData, cap: int = 6, jobs: int = 1) -> QuotientFamily:
    """All coideal right ideals of H, as a QuotientFamily.

    Exhaustive when the field is finite and dim H <= cap; otherwise the
    family holds only the two ideals that always exist (0 and ker eps) and
    is marked non-exhaustive.  With jobs > 1 candidates are checked in a
    process pool; the resulting order is identical either way.
    """
    if not hasattr(h.field, "elements") or h.dim > cap:
        quotients = (
            GeneralisedQuotient(h, Subspace.zero(h.field, h.dim)),
            GeneralisedQuotient(h, ker_counit(h)),
        )
        return QuotientFamily(h, quotients, False)
    candidates = list(enumerate_subspaces(h.field, h.dim))
    chunks = _chunked(candidates, max(jobs, 1) * 4)
    flags = _run_filter(_rico_chunk, [(h, c) for c in chunks], jobs)
    keep = [s for chunk, fl in zip(chunks, flags) for s, ok in zip(chunk, fl) if ok]
    return QuotientFamily(h, tuple(GeneralisedQuotient(h, s) for s in keep), True)


def enumerate_coideal_subalgebras(
    h: HopfAlgebraData, side: str = "left", cap: int = 6, jobs: int = 1
) -> CoidealFamily:
    """All one-sided coideal subalgebras of H.

    Same cap semantics as enumerate_ricos; the non-exhaustive fallback
    holds k.1 and H themselves.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if not hasattr(h.field, "elements") or h.dim > cap:
        members = (
            CoidealSubalgebra(h, Subspace.span(h.field, h.dim, [h.algebra.unit_vec]), side),
            CoidealSubalgebra(h, Subspace.full(h.field, h.dim), side),
        )
        return CoidealFamily(h, side, members, False)
    candidates = list(enumerate_subspaces(h.field, h.dim))
    chunks = _chunked(candidates, max(jobs, 1) * 4)
    flags = _run_filter(_coideal_chunk, [(h, side, c) for c in chunks], jobs)
    keep = [s for chunk, fl in zip(chunks, flags) for s, ok in zip(chunk, fl) if ok]
    return CoidealFamily(h, side, tuple(CoidealSubalgebra(h, s, side) for s in keep), True)


@dataclass(frozen=True)
class SubalgebraFamily:
    algebra: AlgebraData
    members: tuple  # Subspace, each a unital subalgebra containing the base
    exhaustive: bool

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def enumerate_subalgebras_over(algebra: AlgebraData, base: Subspace, cap: int = 6) -> SubalgebraFamily:
    """All unital subalgebras of ``algebra`` containing ``base``.

    Candidates are lifted from subspaces of A/base, so the cap applies to
    the codimension of the base, not to dim A.
    """
    if not is_unital_subalgebra(algebra, base):
        raise ValueError("base is not a unital subalgebra")
    f = algebra.field
    codim = algebra.dim - base.dim
    if not hasattr(f, "elements") or codim > cap:
        members = [base, Subspace.full(f, algebra.dim)]
        if base.dim == algebra.dim:
            members = [base]
        return SubalgebraFamily(algebra, tuple(members), False)
    _, incl = quotient_data(base)
    keep = []
    for w in enumerate_subspaces(f, codim):
        lifted = Subspace.span(
            f,
            algebra.dim,
            list(base.basis.rows) + [incl.apply(r) for r in w.basis.rows],
        )
        if is_unital_subalgebra(algebra, lifted):
            keep.append(lifted)
    keep.sort(key=lambda s: s.key())
    return SubalgebraFamily(algebra, tuple(keep), True)


def generated_subalgebra(algebra: AlgebraData, space: Subspace) -> Subspace:
    """The smallest unital subalgebra of ``algebra`` containing ``space``."""
    f = algebra.field
    current = Subspace.span(
        f, algebra.dim, list(space.basis.rows) + [algebra.unit_vec]
    )
    while True:
        products = [
            algebra.mul_vec(a, b)
            for a in current.basis.rows
            for b in current.basis.rows
        ]
        bigger = Subspace.span(
            f, algebra.dim, list(current.basis.rows) + products
        )
        if bigger.dim == current.dim:
            return current
        current = bigger


# ---------------------------------------------------------------------------
# finite posets


@dataclass(frozen=True)
class FinitePoset:
    """A finite family of subspaces ordered by inclusion.

    items carries the original objects (GeneralisedQuotient,
    CoidealSubalgebra, or bare Subspace); spaces holds the subspace each
    item is ordered by.
    """

    items: tuple
    spaces: tuple
    exhaustive: bool = True

    @staticmethod
    def from_quotients(family: QuotientFamily) -> "FinitePoset":
        return FinitePoset(
            tuple(family.quotients),
            tuple(q.ideal for q in family.quotients),
            family.exhaustive,
        )

    @staticmethod
    def from_coideals(family: CoidealFamily) -> "FinitePoset":
        return FinitePoset(
            tuple(family.members),
            tuple(k.space for k in family.members),
            family.exhaustive,
        )

    @staticmethod
    def from_subspaces(spaces, exhaustive: bool = True) -> "FinitePoset":
        spaces = tuple(spaces)
        return FinitePoset(spaces, spaces, exhaustive)

    def __len__(self):
        return len(self.items)

    @cached_property
    def _leq(self):
        n = len(self.spaces)
        return tuple(
            tuple(subspace_le(self.spaces[i], self.spaces[j]) for j in range(n))
            for i in range(n)
        )

    def leq(self, i: int, j: int) -> bool:
        return self._leq[i][j]

    def bottom_index(self):
        for i in range(len(self)):
            if all(self._leq[i][j] for j in range(len(self))):
                return i
        return None

    def top_index(self):
        for j in range(len(self)):
            if all(self._leq[i][j] for i in range(len(self))):
                return j
        return None

    def covers(self):
        """Hasse diagram edges (i, j) with j covering i."""
        n = len(self)
        edges = []
        for i in range(n):
            for j in range(n):
                if i == j or not self._leq[i][j]:
                    continue
                if any(
                    k != i and k != j and self._leq[i][k] and self._leq[k][j]
                    for k in range(n)
                ):
                    continue
                edges.append((i, j))
        return tuple(edges)

    def join_index(self, i: int, j: int):
        """Index of the least upper bound, or None if not unique."""
        ubs = [k for k in range(len(self)) if self._leq[i][k] and self._leq[j][k]]
        least = [k for k in ubs if all(self._leq[k][l] for l in ubs)]
        return least[0] if len(least) == 1 else None

    def meet_index(self, i: int, j: int):
        ubs = [k for k in range(len(self)) if self._leq[k][i] and self._leq[k][j]]
        greatest = [k for k in ubs if all(self._leq[l][k] for l in ubs)]
        return greatest[0] if len(greatest) == 1 else None

    def is_lattice(self) -> bool:
        n = len(self)
        return all(
            self.join_index(i, j) is not None and self.meet_index(i, j) is not None
            for i in range(n)
            for j in range(n)
        )


def poset_report(poset: FinitePoset) -> ValidationReport:
    """Order axioms, bounds, lattice property, and (for quotient posets)
    agreement of the table operations with join_q/meet_q."""
    n = len(poset)
    checks = []
    leq = poset._leq

    checks.append(AxiomCheck("reflexive", all(leq[i][i] for i in range(n))))
    anti = all(
        not (leq[i][j] and leq[j][i]) or i == j for i in range(n) for j in range(n)
    )
    checks.append(AxiomCheck("antisymmetric", anti))
    trans = all(
        not (leq[i][j] and leq[j][k]) or leq[i][k]
        for i in range(n)
        for j in range(n)
        for k in range(n)
    )
    checks.append(AxiomCheck("transitive", trans))
    checks.append(AxiomCheck("has a bottom", poset.bottom_index() is not None))
    checks.append(AxiomCheck("has a top", poset.top_index() is not None))
    lattice = poset.is_lattice()
    checks.append(AxiomCheck("all pairwise joins and meets exist", lattice))

    if n and isinstance(poset.items[0], GeneralisedQuotient) and poset.exhaustive and lattice:
        ok_join, ok_meet, w1, w2 = True, True, "", ""
        for i in range(n):
            for j in range(i, n):
                ji = poset.join_index(i, j)
                expected = subspace_sum(poset.spaces[i], poset.spaces[j])
                if poset.spaces[ji] != expected:
                    ok_join, w1 = False, f"pair ({i},{j})"
                mi = poset.meet_index(i, j)
                hopf = poset.items[0].hopf
                expected = cogenerated_rico(
                    hopf, subspace_intersect(poset.spaces[i], poset.spaces[j])
                )
                if poset.spaces[mi] != expected:
                    ok_meet, w2 = False, f"pair ({i},{j})"
        checks.append(AxiomCheck("joins are ideal sums", ok_join, w1))
        checks.append(AxiomCheck("meets are cogenerated intersections", ok_meet, w2))

    return ValidationReport("poset", tuple(checks))
