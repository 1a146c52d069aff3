"""Build finite-dimensional Hopf algebras and check every axiom.

Structures are plain matrices over an exact field: multiplication is
n x n^2, comultiplication n^2 x n, the antipode n x n.  Nothing is
trusted at construction; validate_hopf replays all ten defining
identities and names the first failing witness.
"""

from hopfgalois import (
    PrimeField,
    Rational,
    cyclic_table,
    dual,
    group_algebra,
    opposite,
    sweedler,
    symmetric_table,
    taft,
    validate_hopf,
)

GF2, GF3, GF7 = PrimeField(2), PrimeField(3), PrimeField(7)

print("== a zoo of small Hopf algebras ==")
table, labels = symmetric_table(3)
zoo = [
    ("k[C2] over GF(3)", group_algebra(cyclic_table(2), GF3)),
    ("k[S3] over GF(2)", group_algebra(table, GF2, labels=labels)),
    ("Sweedler's 4-dim algebra over Q", sweedler(Rational())),
    ("Sweedler's 4-dim algebra over GF(3)", sweedler(GF3)),
    ("Taft algebra T_3(2) over GF(7)", taft(3, 2, GF7)),
]
for name, h in zoo:
    report = validate_hopf(h)
    print(f"{name}: dim {h.dim}, {report.summary()}")
    assert report.ok

print()
print("== duality and opposites are again Hopf algebras ==")
sw = sweedler(GF3)
for name, h in (("dual", dual(sw)), ("opposite", opposite(sw))):
    print(f"{name} of Sweedler: {validate_hopf(h).summary()}")

print()
print("== a deliberately broken structure is caught ==")
from hopfgalois import AlgebraData, CoalgebraData, HopfAlgebraData, Matrix

rows = [list(r) for r in sw.comult.rows]
rows[0][0] = GF3.coerce(2)  # Delta(1) = 2 (1 (x) 1)
broken = HopfAlgebraData(
    sw.algebra,
    CoalgebraData(GF3, 4, Matrix(GF3, rows, 4), sw.counit, sw.labels),
    sw.antipode,
)
report = validate_hopf(broken)
print(report.summary())
for line in report.lines():
    if line.startswith("FAIL"):
        print(" ", line)
assert not report.ok
