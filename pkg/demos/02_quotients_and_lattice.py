"""Enumerate generalised quotients and walk their lattice.

A generalised quotient of H is H/I for a coideal right ideal I
(eps(I) = 0, I.H <= I, Delta(I) <= I (x) H + H (x) I).  Over a finite
field and small dimension the enumeration is exhaustive: every subspace
is tested.  Joins are ideal sums; meets cut the intersection down to the
largest contained coideal right ideal by a decreasing fixpoint.
"""

from hopfgalois import (
    FinitePoset,
    PrimeField,
    cogenerated_rico,
    enumerate_coideal_subalgebras,
    enumerate_ricos,
    join_q,
    meet_q,
    poset_report,
    sweedler,
)
from hopfgalois.linalg import Subspace

GF3 = PrimeField(3)
h = sweedler(GF3)


def show(space):
    if space.dim == 0:
        return "0"
    names = []
    for row in space.basis.rows:
        terms = [
            (lab if c == GF3.one else f"{c}*{lab}")
            for c, lab in zip(row, h.labels)
            if c != GF3.zero
        ]
        names.append(" + ".join(terms))
    return "{" + "; ".join(names) + "}"


print("== all generalised quotients of Sweedler's algebra over GF(3) ==")
fam = enumerate_ricos(h)
print(f"exhaustive: {fam.exhaustive}, count: {len(fam)}")
for i, q in enumerate(fam):
    print(f"  q{i}: ideal dim {q.ideal.dim}, quotient dim {q.q_dim}, I = {show(q.ideal)}")

print()
print("== the lattice is the height-two diamond M4 ==")
poset = FinitePoset.from_quotients(fam)
print(f"order axioms and bounds: {'ok' if poset_report(poset).ok else 'BROKEN'}")
middles = [i for i, q in enumerate(fam) if q.ideal.dim == 2]
print(f"four incomparable middles: {middles}")
q1, q2 = fam[middles[0]], fam[middles[1]]
print(f"join of two middles: ideal dim {join_q(q1, q2).ideal.dim} (the augmentation ideal)")
print(f"meet of two middles: ideal dim {meet_q(q1, q2).ideal.dim} (the zero ideal)")

print()
print("== meets need the fixpoint: intersections of ricos are not ricos ==")
inter = Subspace.span(GF3, 4, [(0, 0, 2, 1)])  # span{gx - x} = I1 /\ I2
print(f"I1 /\\ I2 = {show(inter)} (dim {inter.dim})")
print(f"largest rico inside it: dim {cogenerated_rico(h, inter).dim}")

print()
print("== the matching count on the subalgebra side ==")
cois = enumerate_coideal_subalgebras(h, side="left")
print(f"left coideal subalgebras: {len(cois)}")
for i, k in enumerate(cois):
    print(f"  k{i}: {show(k.space)}")
assert len(cois) == len(fam)
