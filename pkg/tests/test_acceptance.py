"""Acceptance gate: twelve end-to-end criteria, one pass/fail line each.

Each test prints `criterion NN: PASS/FAIL (detail)`; the assertion carries
the same line, so a failing run shows it in the report.  All arithmetic is
exact, so every check is an equality, never a tolerance.
"""

import functools
import subprocess
import sys
import time
from pathlib import Path

from hopfgalois.comod import (
    coinvariants,
    coinvariants_q,
    hom_canonical,
    invariants,
    regular,
    to_module_algebra,
    trivial,
    trivial_cleft,
)
from hopfgalois.fields import PrimeField, Rational
from hopfgalois.galois import (
    canonical_inverse_regular,
    check_fdim_bijection,
    check_mono_on_qgalois,
    check_montgomery_conditions,
    is_closed,
    is_q_galois,
    phi,
    psi_enum,
    psi_regular,
)
from hopfgalois.hopf import (
    HopfAlgebraData,
    Matrix,
    cyclic_table,
    dual,
    group_algebra,
    opposite,
    sweedler,
    symmetric_table,
    taft,
    validate_hopf,
)
from hopfgalois.linalg import Subspace, subspace_intersect, subspace_le, unit_vector
from hopfgalois.quotlat import (
    enumerate_coideal_subalgebras,
    enumerate_ricos,
    enumerate_subalgebras_over,
    join_q,
    meet_q,
)

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF7 = PrimeField(7)
QQ = Rational()

DATA = Path(__file__).resolve().parent.parent / "data"


def report(num: int, ok: bool, detail: str):
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    assert ok, line


def sw3():
    return sweedler(GF3)


def c2_gf3():
    return group_algebra(cyclic_table(2), GF3)


def s3_gf2():
    table, labels = symmetric_table(3)
    return group_algebra(table, GF2, labels=labels)


@functools.lru_cache(maxsize=None)
def fam_sw():
    return enumerate_ricos(sw3())


@functools.lru_cache(maxsize=None)
def fam_c2():
    return enumerate_ricos(c2_gf3())


@functools.lru_cache(maxsize=None)
def fam_s3():
    return enumerate_ricos(s3_gf2())


def comodule_corpus():
    """The comodule algebras exercised by the cross-cutting criteria."""
    h = sw3()
    cleft, _ = trivial_cleft(c2_gf3().algebra, h)
    return [
        ("regular sweedler/GF(3)", regular(h), fam_sw()),
        ("regular C2/GF(3)", regular(c2_gf3()), fam_c2()),
        ("regular S3/GF(2)", regular(s3_gf2()), fam_s3()),
        ("cleft C2 (x) sweedler", cleft, fam_sw()),
        ("trivial coaction", trivial(h.algebra, h), fam_sw()),
    ]


def _bumped(mat: Matrix, r: int, c: int) -> Matrix:
    rows = [list(row) for row in mat.rows]
    rows[r][c] = GF3.add(rows[r][c], GF3.one)
    return Matrix(GF3, rows, mat.ncols)


def test_criterion_01_axiom_suite():
    t0 = time.monotonic()
    corpus = [s3_gf2(), sweedler(QQ), sw3(), taft(3, 2, GF7)]
    validated = 0
    for h in corpus:
        for variant in (h, dual(h), opposite(h)):
            assert validate_hopf(variant).ok
            validated += 1

    h = sw3()
    from hopfgalois.hopf import AlgebraData, CoalgebraData

    def rebuild(mult=None, unit=None, comult=None, counit=None, antipode=None):
        alg = AlgebraData(GF3, 4, mult or h.mult, unit or h.unit, h.labels)
        co = CoalgebraData(GF3, 4, comult or h.comult, counit or h.counit, h.labels)
        return HopfAlgebraData(alg, co, antipode or h.antipode)

    perturbed = [
        rebuild(mult=_bumped(h.mult, 0, 0)),
        rebuild(mult=_bumped(h.mult, 0, 5)),          # g.g
        rebuild(mult=_bumped(h.mult, 2, 2)),          # 1.x
        rebuild(unit=_bumped(h.unit, 1, 0)),
        rebuild(comult=_bumped(h.comult, 0, 0)),      # Delta(1)
        rebuild(comult=_bumped(h.comult, 5, 1)),      # Delta(g) at g(x)g
        rebuild(comult=_bumped(h.comult, 8, 2)),      # Delta(x) at x(x)1
        rebuild(counit=_bumped(h.counit, 0, 2)),      # eps(x)
        rebuild(antipode=_bumped(h.antipode, 0, 0)),  # S(1)
        rebuild(antipode=_bumped(h.antipode, 3, 2)),  # S(x)
    ]
    rejected = sum(1 for p in perturbed if not validate_hopf(p).ok)
    elapsed = time.monotonic() - t0
    report(
        1,
        validated == 12 and rejected == 10 and elapsed < 5.0,
        f"{validated}/12 validations ok, {rejected}/10 perturbations rejected, "
        f"{elapsed:.2f}s < 5s",
    )


def test_criterion_02_galois_property_exhaustive():
    t0 = time.monotonic()
    h = sw3()
    a = regular(h)
    fam = fam_sw()
    unit_line = Subspace.span(GF3, 4, [unit_vector(GF3, 4, 0)])
    subs = list(enumerate_subalgebras_over(h.algebra, unit_line))
    b_ok = sum(
        1 for b in subs if subspace_le(b, phi(a, psi_enum(a, b, fam)))
    )
    q_ok = sum(
        1 for q in fam if subspace_le(psi_enum(a, phi(a, q), fam).ideal, q.ideal)
    )
    elapsed = time.monotonic() - t0
    report(
        2,
        b_ok == len(subs) and q_ok == len(fam) and elapsed < 60.0,
        f"B <= phi(psi(B)) for {b_ok}/{len(subs)} subalgebras, "
        f"Q <= psi(phi(Q)) for {q_ok}/{len(fam)} quotients, {elapsed:.2f}s < 60s",
    )


def test_criterion_03_suprema_reversal():
    pairs = 0
    for h, fam in ((sw3(), fam_sw()), (c2_gf3(), fam_c2())):
        a = regular(h)
        for q1 in fam:
            for q2 in fam:
                sup = meet_q(q1, q2)  # supremum in the quotient order
                lhs = coinvariants_q(a, sup.ideal)
                rhs = subspace_intersect(
                    coinvariants_q(a, q1.ideal), coinvariants_q(a, q2.ideal)
                )
                assert lhs == rhs, (q1.ideal, q2.ideal)
                pairs += 1
    report(3, pairs == 36 + 4, f"A^co(Q1 v Q2) = A^co(Q1) /\\ A^co(Q2) on {pairs} pairs")


def test_criterion_04_psi_formula_agreement():
    checked = 0
    for h, fam in ((sw3(), fam_sw()), (c2_gf3(), fam_c2())):
        a = regular(h)
        for k in enumerate_coideal_subalgebras(h, side="left"):
            assert psi_enum(a, k.space, fam).ideal == psi_regular(h, k).ideal
            checked += 1
    report(4, checked == 8, f"psi_enum = psi_regular on {checked} coideal subalgebras")


def test_criterion_05_closed_iff_qgalois():
    t0 = time.monotonic()
    h = sw3()
    cleft, _ = trivial_cleft(c2_gf3().algebra, h)
    fam = fam_sw()
    mismatches = 0
    checked = 0
    for a in (regular(h), cleft):
        for q in fam:
            if is_closed(a, q, fam) != is_q_galois(a, q):
                mismatches += 1
            checked += 1
    elapsed = time.monotonic() - t0
    report(
        5,
        mismatches == 0 and elapsed < 120.0,
        f"closed <=> Q-Galois on {checked} (comodule, quotient) pairs, "
        f"0 counterexamples, {elapsed:.2f}s < 120s",
    )


def test_criterion_06_finite_bijection():
    sizes = {}
    for name, h, fam in (
        ("sweedler/GF(3)", sw3(), fam_sw()),
        ("C2/GF(3)", c2_gf3(), fam_c2()),
        ("S3/GF(2)", s3_gf2(), fam_s3()),
    ):
        cert = check_fdim_bijection(regular(h), family=fam)
        assert cert.ok, name
        assert len(cert.pairs) == len(fam)
        sizes[name] = len(fam)
    ok = sizes == {"sweedler/GF(3)": 6, "C2/GF(3)": 2, "S3/GF(2)": 6}
    report(6, ok, "certificates of size " + ", ".join(f"{v} ({k})" for k, v in sizes.items()))


def test_criterion_07_regular_inverse():
    h = sw3()
    a = regular(h)
    count = 0
    for k in enumerate_coideal_subalgebras(h, side="left"):
        cert = canonical_inverse_regular(h, k)  # raises if either composite fails
        assert subspace_le(k.space, coinvariants_q(a, cert.canonical.quotient.ideal))
        count += 1
    report(7, count == 6, f"two-sided inverse verified for {count}/6 coideal subalgebras")


def test_criterion_08_mono_on_qgalois():
    total_pairs = 0
    for name, a, fam in comodule_corpus():
        r = check_mono_on_qgalois(a, fam)
        assert r.ok, name
        total_pairs += r.pairs_checked
    report(8, True, f"no phi-collision among {total_pairs} Q-Galois pairs over 5 comodule algebras")


def test_criterion_09_module_side_duality():
    agreements = 0
    for name, a, fam in comodule_corpus():
        mod = to_module_algebra(a)
        assert invariants(mod) == coinvariants(a), name
        hc = hom_canonical(mod, coinvariants(a))
        top = next(q for q in fam if q.is_top())
        assert hc.bijective == is_q_galois(a, top), name
        agreements += 1
    report(9, agreements == 5, "invariants = coinvariants and module-side canonical "
                               "map agrees on 5/5 comodule algebras")


def test_criterion_10_lattice_laws():
    fam = fam_sw()
    subs = list(fam)
    for q1 in subs:
        assert join_q(q1, q1).ideal == q1.ideal
        assert meet_q(q1, q1).ideal == q1.ideal
        for q2 in subs:
            j12 = join_q(q1, q2)
            m12 = meet_q(q1, q2)
            assert j12.ideal == join_q(q2, q1).ideal
            assert m12.ideal == meet_q(q2, q1).ideal
            assert join_q(q1, m12).ideal == q1.ideal  # absorption
            assert meet_q(q1, j12).ideal == q1.ideal
            # oracle: the meet is the largest enumerated rico inside both
            inter = subspace_intersect(q1.ideal, q2.ideal)
            best = max(
                (q.ideal for q in subs if subspace_le(q.ideal, inter)),
                key=lambda s: s.dim,
            )
            assert m12.ideal == best
            for q3 in subs:
                assert join_q(join_q(q1, q2), q3).ideal == join_q(q1, join_q(q2, q3)).ideal
                assert meet_q(meet_q(q1, q2), q3).ideal == meet_q(q1, meet_q(q2, q3)).ideal
    report(10, True, "join/meet laws and the meet oracle hold on all 6^2 pairs and 6^3 triples")


def test_criterion_11_montgomery():
    results = {}
    for name, h in (("C2/GF(3)", c2_gf3()), ("sweedler/GF(3)", sw3()), ("S3/GF(2)", s3_gf2())):
        r = check_montgomery_conditions(h)
        assert r.equivalence_ok, name
        results[name] = (r.cond1, r.cond2, r.bijective)
    ok = results["C2/GF(3)"] == (True, True, True)
    report(11, ok, f"equivalence holds on 3 Hopf algebras; C2 gives {results['C2/GF(3)']}")


def test_criterion_12_cli_determinism():
    args = ["closure", str(DATA / "sweedler_gf3.hopf"), "--regular"]
    outputs = []
    for jobs in ("1", "1", "4", "4"):
        proc = subprocess.run(
            [sys.executable, "-m", "hopfgalois.cli", *args, "--jobs", jobs],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        outputs.append(proc.stdout + "\x00" + proc.stderr)
    ok = len(set(outputs)) == 1
    report(12, ok, "hgl closure byte-identical across --jobs 1/4, two runs each")
