"""Cleft extensions, the dual module picture, and quotient Hopf algebras.

Three constructions around one comodule algebra A = B (x) H:

* trivially cleft extensions, with the cleaving map gamma = 1_B (x) id
  and its convolution inverse checked by actual convolution;
* the dual module algebra over H*, whose invariants coincide with the
  coinvariants and whose canonical map is the same matrix;
* normal ideals and the induced quotient Hopf algebra, plus the
  codiagonal coaction on A (x) A descending to A (x)_B A.
"""

from hopfgalois import (
    PrimeField,
    bigalois_descent,
    coinvariants,
    cyclic_table,
    group_algebra,
    hom_canonical,
    hopf_quotient,
    invariants,
    is_normal_ideal,
    is_normal_subalgebra,
    regular,
    sweedler,
    to_module_algebra,
    trivial_cleft,
    validate_hopf,
)
from hopfgalois.linalg import Subspace

GF3 = PrimeField(3)
h = sweedler(GF3)
c2 = group_algebra(cyclic_table(2), GF3)

print("== a trivially cleft extension B (x) H ==")
a, cleft = trivial_cleft(c2.algebra, h)
print(f"B dim {c2.dim}, H dim {h.dim}, extension dim {a.algebra.dim}")
print(f"coinvariants dim {coinvariants(a).dim} (a copy of B)")
print(f"gamma: {cleft.gamma.map.nrows}x{cleft.gamma.map.ncols}, "
      f"convolution inverse found: {cleft.gamma_inv is not None}")

print()
print("== the dual picture: H*-module algebra ==")
mod = to_module_algebra(a)
print(f"invariants = coinvariants: {invariants(mod) == coinvariants(a)}")
hc = hom_canonical(mod, coinvariants(a))
print(f"module-side canonical map {hc.matrix.nrows}x{hc.matrix.ncols}, "
      f"bijective: {hc.bijective}")

print()
print("== normal ideals give honest quotient Hopf algebras ==")
xgx = Subspace.span(GF3, 4, [(0, 0, 1, 0), (0, 0, 0, 1)])  # span{x, gx}
print(f"span{{x, gx}} normal: {is_normal_ideal(h, xgx) is True}")
quot = hopf_quotient(h, xgx)
print(f"H/I: dim {quot.dim}, {validate_hopf(quot).summary()} (it is k[C2])")

span_1g = Subspace.span(GF3, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
verdict = is_normal_subalgebra(h, span_1g)
print(f"span{{1, g}} normal subalgebra: {verdict if verdict is True else f'no: {verdict}'}")

print()
print("== the codiagonal coaction descends over the coinvariants ==")
descent = bigalois_descent(a, coinvariants(a))
print(f"A (x)_B A dim {descent.tensor.dim}, "
      f"descended coaction {descent.coaction.nrows}x{descent.coaction.ncols}")

try:
    bigalois_descent(regular(h), Subspace.span(GF3, 4, [(1, 0, 0, 0), (0, 0, 1, 0)]))
except ValueError as exc:
    print(f"over span{{1, x}} instead: {exc}")
