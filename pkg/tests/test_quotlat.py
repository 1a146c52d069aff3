"""Generalised quotients, coideal subalgebras, enumeration, lattice laws."""

import functools
import itertools

from hopfgalois.fields import PrimeField, Rational
from hopfgalois.hopf import (
    cyclic_table,
    group_algebra,
    is_unital_subalgebra,
    ker_counit,
    sweedler,
    symmetric_table,
    taft,
)
from hopfgalois.linalg import Subspace, subspace_intersect, subspace_le, unit_vector
from hopfgalois.quotlat import (
    CoidealSubalgebra,
    FinitePoset,
    GeneralisedQuotient,
    InvalidReason,
    cogenerated_rico,
    enumerate_coideal_subalgebras,
    enumerate_ricos,
    enumerate_subalgebras_over,
    enumerate_subspaces,
    gaussian_binomial,
    generated_subalgebra,
    join_q,
    meet_q,
    poset_report,
    validate_coideal_subalgebra,
    validate_rico,
)

import pytest

GF2 = PrimeField(2)
GF3 = PrimeField(3)
QQ = Rational()

# sweedler basis indices
ONE, G, X, GX = 0, 1, 2, 3


def sw():
    return sweedler(GF3)


def sp(vectors, ambient=4, field=GF3):
    return Subspace.span(field, ambient, vectors)


@functools.lru_cache(maxsize=None)
def sweedler_family():
    return enumerate_ricos(sw())


def s3_gf2():
    table, labels = symmetric_table(3)
    return group_algebra(table, GF2, labels=labels)


@functools.lru_cache(maxsize=None)
def s3_family():
    return enumerate_ricos(s3_gf2())


def test_gaussian_binomial():
    assert gaussian_binomial(4, 0, 3) == 1
    assert gaussian_binomial(4, 1, 3) == 40
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(5, 2, 2) == 155
    assert gaussian_binomial(6, 3, 2) == 1395
    assert gaussian_binomial(3, 5, 2) == 0
    assert gaussian_binomial(5, 5, 7) == 1


def test_enumerate_subspaces_counts_and_canonicity():
    subs = list(enumerate_subspaces(GF3, 4))
    assert len(subs) == sum(gaussian_binomial(4, d, 3) for d in range(5)) == 212
    keys = [s.key() for s in subs]
    assert len(set(keys)) == 212
    # grouped by dimension, ascending, each group sorted by key
    assert keys == sorted(keys)
    for s in subs[:50]:
        assert s == Subspace.span(GF3, 4, s.basis.rows)

    assert len(list(enumerate_subspaces(GF2, 5))) == 374


def test_enumerate_subspaces_needs_finite_field():
    with pytest.raises(ValueError):
        list(enumerate_subspaces(QQ, 3))


SWEEDLER_IDEALS = {
    "zero": [],
    "xgx": [(0, 0, 1, 0), (0, 0, 0, 1)],
    "gm1": [(2, 1, 0, 0), (0, 0, 2, 1)],           # (g-1)H
    "mix1": [(2, 1, 1, 0), (0, 0, 2, 1)],          # (g+x-1)H
    "mix2": [(2, 1, 2, 0), (0, 0, 2, 1)],          # (g+2x-1)H
    "aug": [(2, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
}


def test_quotient_inventory_sweedler():
    fam = sweedler_family()
    assert fam.exhaustive
    assert len(fam) == 6
    expected = {sp(v).key() for v in SWEEDLER_IDEALS.values()}
    assert {q.key() for q in fam} == expected
    dims = sorted(q.q_dim for q in fam)
    assert dims == [1, 2, 2, 2, 2, 4]
    tops = [q for q in fam if q.is_top()]
    bottoms = [q for q in fam if q.is_bottom()]
    assert len(tops) == 1 and tops[0].ideal.dim == 0
    assert len(bottoms) == 1 and bottoms[0].ideal == ker_counit(sw())


def test_quotient_inventory_c2():
    h = group_algebra(cyclic_table(2), GF3, labels=("e", "g"))
    fam = enumerate_ricos(h)
    assert fam.exhaustive and len(fam) == 2
    assert {q.key() for q in fam} == {
        Subspace.zero(GF3, 2).key(),
        Subspace.span(GF3, 2, [(2, 1)]).key(),  # g - 1
    }


def test_validate_rico_named_failures():
    h = sw()
    r = validate_rico(h, sp([(1, 0, 0, 0)]))
    assert isinstance(r, InvalidReason) and not r
    assert "counit" in r.condition

    r = validate_rico(h, sp([(2, 1, 0, 0)]))  # span{g-1} alone: (g-1)x escapes
    assert not r and "right ideal" in r.condition

    r = validate_rico(h, sp([(0, 0, 2, 1)]))  # span{gx-x}: right ideal, no coideal
    assert not r and "coideal" in r.condition

    assert validate_rico(h, sp(SWEEDLER_IDEALS["mix1"])) is True


def test_quotient_structure_matrices():
    h = sw()
    q = GeneralisedQuotient(h, sp(SWEEDLER_IDEALS["xgx"]))
    assert q.q_dim == 2
    # pi . incl = id on the quotient
    assert (q.proj @ q.incl).rank() == 2
    # the quotient of Sweedler by span{x, gx} is the group algebra k[C2]
    c2 = group_algebra(cyclic_table(2), GF3)
    assert q.comult_q == c2.comult
    assert q.counit_q == c2.counit


def test_cogenerated_rico_fixpoints():
    h = sw()
    assert cogenerated_rico(h, Subspace.full(GF3, 4)) == ker_counit(h)
    assert cogenerated_rico(h, sp(SWEEDLER_IDEALS["xgx"])) == sp(SWEEDLER_IDEALS["xgx"])
    assert cogenerated_rico(h, ker_counit(h)) == ker_counit(h)
    # span{gx - x} is a right ideal but not a coideal; the fixpoint kills it
    assert cogenerated_rico(h, sp([(0, 0, 2, 1)])).dim == 0
    assert cogenerated_rico(h, sp([(0, 0, 1, 0)])).dim == 0
    # span{1, x, gx} cuts down to span{x, gx}
    got = cogenerated_rico(h, sp([(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]))
    assert got == sp(SWEEDLER_IDEALS["xgx"])


def test_cogenerated_is_maximal_inside():
    h = sw()
    fam = sweedler_family()
    for sub in enumerate_subspaces(GF3, 4):
        best = cogenerated_rico(h, sub)
        assert subspace_le(best, sub) or best.dim == 0
        assert validate_rico(h, best) is True
        # no family member inside sub may exceed it
        for q in fam:
            if subspace_le(q.ideal, sub):
                assert subspace_le(q.ideal, best)


def test_join_meet_sweedler_pairs():
    h = sw()
    fam = sweedler_family()
    by_key = {q.key(): q for q in fam}
    q1 = by_key[sp(SWEEDLER_IDEALS["xgx"]).key()]
    q2 = by_key[sp(SWEEDLER_IDEALS["gm1"]).key()]

    assert join_q(q1, q2).ideal == ker_counit(h)
    assert meet_q(q1, q2).ideal.dim == 0

    # the four 2-dimensional ideals intersect pairwise in span{gx - x},
    # which cogenerates 0: the lattice is the height-two diamond
    middles = [q for q in fam if q.ideal.dim == 2]
    assert len(middles) == 4
    for a, b in itertools.combinations(middles, 2):
        inter = subspace_intersect(a.ideal, b.ideal)
        assert inter == sp([(0, 0, 2, 1)])
        assert meet_q(a, b).ideal.dim == 0
        assert join_q(a, b).ideal == ker_counit(h)

    for q in fam:
        assert meet_q(q, q) == q
        assert join_q(q, q) == q


def test_poset_laws_sweedler():
    fam = sweedler_family()
    poset = FinitePoset.from_quotients(fam)
    rep = poset_report(poset)
    assert rep.ok, rep.summary()
    assert {c.name for c in rep.checks} >= {
        "reflexive",
        "antisymmetric",
        "transitive",
        "joins are ideal sums",
        "meets are cogenerated intersections",
    }

    n = len(poset)
    # absorption and commutativity through the index tables
    for i in range(n):
        for j in range(n):
            assert poset.join_index(i, j) == poset.join_index(j, i)
            assert poset.meet_index(i, j) == poset.meet_index(j, i)
            assert poset.meet_index(i, poset.join_index(i, j)) == i
            assert poset.join_index(i, poset.meet_index(i, j)) == i
    for i, j, k in itertools.product(range(n), repeat=3):
        assert poset.join_index(poset.join_index(i, j), k) == poset.join_index(
            i, poset.join_index(j, k)
        )
        assert poset.meet_index(poset.meet_index(i, j), k) == poset.meet_index(
            i, poset.meet_index(j, k)
        )


def test_hasse_diamond_sweedler():
    poset = FinitePoset.from_quotients(sweedler_family())
    edges = poset.covers()
    assert len(edges) == 8
    bot, top = poset.bottom_index(), poset.top_index()
    assert poset.items[bot].is_top()       # ideal 0 <-> quotient H
    assert poset.items[top].is_bottom()    # ideal ker eps <-> quotient k
    assert sum(1 for i, _ in edges if i == bot) == 4
    assert sum(1 for _, j in edges if j == top) == 4


def test_coideal_subalgebras_sweedler():
    fam = enumerate_coideal_subalgebras(sw(), side="left")
    assert fam.exhaustive and len(fam) == 6
    keys = {k.key() for k in fam}
    e = lambda i: unit_vector(GF3, 4, i)
    for vecs in [
        [e(ONE)],
        [e(ONE), e(G)],
        [e(ONE), e(X)],
        [e(ONE), (0, 1, 1, 0)],   # span{1, g + x}
        [e(ONE), (0, 1, 2, 0)],   # span{1, g + 2x}
        list(Subspace.full(GF3, 4).basis.rows),
    ]:
        assert sp(vecs).key() in keys

    # the mirror family swaps x for gx
    fam_r = enumerate_coideal_subalgebras(sw(), side="right")
    assert len(fam_r) == 6
    assert sp([e(ONE), e(GX)]).key() in {k.key() for k in fam_r}
    assert sp([e(ONE), e(X)]).key() not in {k.key() for k in fam_r}


def test_validate_coideal_subalgebra_failures():
    h = sw()
    r = validate_coideal_subalgebra(h, sp([(0, 0, 1, 0)]))
    assert not r and "1" in r.condition
    r = validate_coideal_subalgebra(h, sp([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]))
    assert not r and "closed" in r.condition
    r = validate_coideal_subalgebra(h, sp([(1, 0, 0, 0), (0, 0, 0, 1)]), side="left")
    assert not r and "coideal" in r.condition
    assert validate_coideal_subalgebra(h, sp([(1, 0, 0, 0), (0, 0, 0, 1)]), side="right") is True
    with pytest.raises(ValueError):
        validate_coideal_subalgebra(h, sp([(1, 0, 0, 0)]), side="middle")


def test_takeuchi_counts_match():
    # finite-dimensional correspondence: as many generalised quotients
    # as one-sided coideal subalgebras
    h = sw()
    assert len(sweedler_family()) == len(enumerate_coideal_subalgebras(h, "left"))
    c2 = group_algebra(cyclic_table(2), GF3)
    assert len(enumerate_ricos(c2)) == len(enumerate_coideal_subalgebras(c2, "left")) == 2
    assert len(s3_family()) == len(enumerate_coideal_subalgebras(s3_gf2(), "left"))


def test_subgroup_ideals_inside_s3_family():
    h = s3_gf2()
    labels = list(h.labels)
    idx = {w: i for i, w in enumerate(labels)}
    table, _ = symmetric_table(3)

    subgroups = [
        ["012"],
        ["012", "021"],
        ["012", "102"],
        ["012", "210"],
        ["012", "120", "201"],
        labels,
    ]
    fam = s3_family()
    assert fam.exhaustive
    keys = {q.key() for q in fam}
    for grp in subgroups:
        vecs = []
        for k in grp:
            for g in labels:
                prod = table[idx[k]][idx[g]]
                v = [GF2.zero] * 6
                v[prod] = GF2.add(v[prod], GF2.one)
                v[idx[g]] = GF2.sub(v[idx[g]], GF2.one)
                vecs.append(v)
        ideal = Subspace.span(GF2, 6, vecs)
        assert ideal.dim == 6 - 6 // len(grp)
        assert validate_rico(h, ideal) is True
        assert ideal.key() in keys

    poset = FinitePoset.from_quotients(fam)
    assert poset_report(poset).ok


def test_enumerate_ricos_parallel_matches_serial():
    h = sw()
    serial = enumerate_ricos(h, jobs=1)
    parallel = enumerate_ricos(h, jobs=3)
    assert [q.key() for q in serial] == [q.key() for q in parallel]


def test_enumeration_caps():
    fam = enumerate_ricos(taft(3, 2, PrimeField(7)))  # dim 9 > default cap
    assert not fam.exhaustive and len(fam) == 2
    fam = enumerate_ricos(sweedler(QQ))  # infinite field
    assert not fam.exhaustive
    assert {q.q_dim for q in fam} == {1, 4}
    cfam = enumerate_coideal_subalgebras(sweedler(QQ))
    assert not cfam.exhaustive and len(cfam) == 2


def test_enumerate_subalgebras_over_matches_bruteforce():
    h = sw()
    base = sp([unit_vector(GF3, 4, ONE)])
    fam = enumerate_subalgebras_over(h.algebra, base)
    assert fam.exhaustive
    brute = {
        s.key()
        for s in enumerate_subspaces(GF3, 4)
        if s.contains(unit_vector(GF3, 4, ONE)) and is_unital_subalgebra(h.algebra, s)
    }
    assert {s.key() for s in fam} == brute
    # every 2-dim subspace span{1, ag + bx + c.gx} squares into the line k1
    assert sum(1 for s in fam if s.dim == 2) == 13

    over = enumerate_subalgebras_over(h.algebra, sp([unit_vector(GF3, 4, ONE), unit_vector(GF3, 4, G)]))
    for s in over:
        assert subspace_le(sp([unit_vector(GF3, 4, G)]), s)


def test_generated_subalgebra():
    h = sw()
    e = lambda i: unit_vector(GF3, 4, i)
    assert generated_subalgebra(h.algebra, Subspace.zero(GF3, 4)) == sp([e(ONE)])
    assert generated_subalgebra(h.algebra, sp([e(X)])) == sp([e(ONE), e(X)])
    assert generated_subalgebra(h.algebra, sp([e(G)])) == sp([e(ONE), e(G)])
    assert generated_subalgebra(h.algebra, sp([e(G), e(X)])).dim == 4


def test_subspace_poset_of_gf2_cube():
    spaces = list(enumerate_subspaces(GF2, 3))
    assert len(spaces) == 16
    poset = FinitePoset.from_subspaces(spaces)
    rep = poset_report(poset)
    assert rep.ok, rep.summary()
    assert len(poset.covers()) == 7 + 21 + 7  # dim steps 0-1, 1-2, 2-3
