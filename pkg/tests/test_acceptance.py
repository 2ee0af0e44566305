"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line (shown in the terminal summary, and
printed directly when this file is run as a script) and then asserts.
Expected values are written out literally here rather than read from the
library's own tables.
"""
import time
from math import comb

from cycshuffle import perm as P
from cycshuffle import theorems as TH
from cycshuffle.compat import check_csc, check_equiv, check_sc, cyclic_pattern_pairs, pattern_pairs
from cycshuffle.counterexamples import verify_counterexample
from cycshuffle.cyc import (
    CycPerm,
    Induced,
    ccomp,
    ceval,
    cyclic_classes,
    lift_M,
    lift_S,
    ocmaj,
    reconstruct_ccomp,
)
from cycshuffle.series import verify_majdes_gf
from cycshuffle.shuffle import cyclic_shuffles, distribution, shuffles
from cycshuffle.values import Comp, CycWord, IntSet, Multiset, Pair

I = Induced


def _sets(*xs):
    return Multiset(IntSet(x) for x in xs)


def _pairs(*items):
    out = []
    for (a, b), c in items:
        out.extend([Pair(a, b)] * c)
    return Multiset(out)


# -- 1 ------------------------------------------------------------------------

def criterion_1():
    t0 = time.perf_counter()
    bad, checked = [], 0
    for s in range(2, 8):
        for m in range(1, s):
            for p, q in pattern_pairs(m, s - m):
                checked += 1
                if len(shuffles(p, q)) != comb(s, m):
                    bad.append((p, q))
            for a, b in cyclic_pattern_pairs(m, s - m):
                checked += 1
                if len(cyclic_shuffles(a, b)) != (s - 1) * comb(s - 2, m - 1):
                    bad.append((a, b))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10
    return ok, f"counting laws on all {checked} pattern pairs with m+n <= 7, {elapsed:.2f}s, mismatches {bad[:3]}"


def test_criterion_1_counting_laws(acceptance):
    ok, detail = criterion_1()
    assert acceptance(1, ok, detail), detail


# -- 2 ------------------------------------------------------------------------

def criterion_2():
    pp = P.parse_perm
    checks = {
        "71 shuffle 25": shuffles((7, 1), (2, 5)) == {pp(x) for x in ("7125", "7215", "7251", "2715", "2751", "2571")},
        "des S3": distribution("des", P.perms(3)) == Multiset([0, 1, 1, 1, 1, 2]),
        "cDes[168425]": ceval("cDes", pp("168425")) == _sets(
            {3, 4, 6}, {1, 4, 5}, {2, 5, 6}, {1, 3, 6}, {1, 2, 4}, {2, 3, 5}),
        "cDes[279358]": ceval("cDes", pp("279358")) == _sets({3, 6}, {3, 6}, {1, 4}, {1, 4}, {2, 5}, {2, 5}),
        "cPk[184756]": ceval("cPk", pp("184756")) == _sets({2, 4, 6}, {2, 4, 6}, {2, 4, 6}, {1, 3, 5}, {1, 3, 5}, {1, 3, 5}),
        "Comp 4783291": P.descent_composition(pp("4783291")) == Comp((3, 1, 2, 1)),
        "cComp[179624]": ccomp(pp("179624")) == CycWord((1, 2, 3)),
        "S4[162453]": lift_S(4, CycPerm(pp("162453"))) == pp("453162"),
        "M[162453]": lift_M(CycPerm(pp("162453"))) == pp("24531"),
    }
    row = {"val": 3, "Ddes": IntSet({5}), "ddes": 1, "Lpk": IntSet({1, 4, 7}), "lpk": 3,
           "Rpk": IntSet({4, 7, 9}), "rpk": 3, "Epk": IntSet({1, 4, 7, 9}), "epk": 4, "br": 6, "udr": 7}
    p = pp("713942658")
    for name, value in row.items():
        checks[f"{name}(713942658)"] = P.evaluate(name, p) == value
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks) - len(bad)}/{len(checks)} worked examples exact, mismatches {bad}"


def test_criterion_2_worked_examples(acceptance):
    ok, detail = criterion_2()
    assert acceptance(2, ok, detail), detail


# -- 3 ------------------------------------------------------------------------

CYCLIC_COMPATIBLE = [
    "cDes", "cdes", "cPk", "cpk", ("cpk", "cdes"), "ocmaj", "cbr",
    I("Des"), I("des"), I("Pk"), I("pk"), I("Val"), I("val"), "cval", I("epk"),
    (I("val"), I("des")), (I("epk"), I("des")),
]
LINEAR_COMPATIBLE = ["Des", "des", "maj", ("des", "maj"), "Pk", "pk", "Val", "val",
                     "Lpk", "lpk", "Epk", "epk", "udr"]


def criterion_3():
    t0 = time.perf_counter()
    bad = [c for c in CYCLIC_COMPATIBLE if check_csc(c, 6).verdict != "compatible"]
    bad += [s for s in LINEAR_COMPATIBLE if check_sc(s, 6).verdict != "compatible"]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    n = len(CYCLIC_COMPATIBLE) + len(LINEAR_COMPATIBLE)
    return ok, f"{n - len(bad)}/{n} statistics compatible at max-n 6, {elapsed:.1f}s, failures {bad}"


def test_criterion_3_positive_suite(acceptance):
    ok, detail = criterion_3()
    assert acceptance(3, ok, detail), detail


# -- 4 ------------------------------------------------------------------------

E = IntSet()

# (stored name, printed multiset, printed multiplicities; None = "present")
PRINTED_WITNESSES = {
    "cmaj": (Multiset([22, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35]), (None, 0)),
    "Ddes": (Multiset([E] * 5), (3, 2)),
    "br": (Multiset([5] * 4 + [6] * 4 + [7]), (4, 2)),
    "lpk": (Multiset([3] * 9), (None, 0)),
    "udr": (Multiset([6] * 6 + [7] * 3), (None, 0)),
    "lpk_des": (_pairs(((3, 5), 6), ((3, 6), 3)), (None, 0)),
    "udr_des": (_pairs(((6, 5), 3), ((6, 6), 3), ((7, 5), 3)), (None, 0)),
    "Pk_Val": (_pairs(((E, E), 1), ((E, IntSet([5])), 1), ((IntSet([2]), E), 1),
                      ((IntSet([3]), IntSet([2])), 1), ((IntSet([4]), IntSet([3])), 1),
                      ((IntSet([5]), IntSet([4])), 1)), (None, 0)),
    "pk_val": (_pairs(((0, 0), 1), ((0, 1), 1), ((1, 0), 1), ((1, 1), 3)), (None, 0)),
}
# entries whose printed data is expected to need the single-letter repair
LETTER_REPAIR = ("Lpk", "Epk")
# entries without a printed multiset: only separation is required
SEPARATION_ONLY = ("cdes_cmaj", "ddes", "br_des")


def _matches(counts, want):
    first, second = want
    return (counts[0] >= 1 if first is None else counts[0] == first) and counts[1] == second


def criterion_4():
    bad, notes = [], []
    for name, (witness, want) in PRINTED_WITNESSES.items():
        r = verify_counterexample(name)
        if not (r.preconditions and r.distributions_differ and r.literal_valid
                and r.witness == witness and _matches(r.counts, want)):
            bad.append(name)
            if r.repair:
                notes.append(f"{name}: printed multiset not attainable ({r.repair.get('reason')}); "
                             f"library reports {r.witness!r} with counts {r.counts}")
    for name in LETTER_REPAIR:
        r = verify_counterexample(name)
        if r.literal_valid or not r.ok or r.repair is None:
            bad.append(name)
        else:
            notes.append(f"{name}: repaired position {r.repair['position']} "
                         f"{r.repair['old']}->{r.repair['new']}, counts {r.counts}")
    for name in SEPARATION_ONLY:
        if not verify_counterexample(name).ok:
            bad.append(name)
    total = len(PRINTED_WITNESSES) + len(LETTER_REPAIR) + len(SEPARATION_ONLY)
    return not bad, f"{total - len(bad)}/{total} entries reproduced as printed, failing {bad}; " + "; ".join(notes)


def test_criterion_4_negative_suite(acceptance):
    ok, detail = criterion_4()
    assert acceptance(4, ok, detail), detail


# -- 5 ------------------------------------------------------------------------

EQUIVALENT_PAIRS = [
    (I("Des"), "cDes"), (I("des"), "cdes"), (I("Pk"), "cPk"), (I("pk"), "cpk"),
    (I("val"), "cval"), ("cval", "cpk"), (I("epk"), "cpk"), (I("maj"), I("cmajL")),
    (I(("des", "maj")), ("cdes", I("cmajL"))), ("ocmaj", "cDes"),
]


def criterion_5():
    bad = [(a, b) for a, b in EQUIVALENT_PAIRS if check_equiv(a, b, 7).verdict != "equivalent"]
    value_eq = all(ceval("cval", c) == ceval("cpk", c) for n in range(1, 8) for c in cyclic_classes(n))
    roundtrip = all(reconstruct_ccomp(ocmaj(c), n) == ccomp(c) for n in range(2, 8) for c in cyclic_classes(n))
    ok = not bad and value_eq and roundtrip
    return ok, (f"{len(EQUIVALENT_PAIRS) - len(bad)}/{len(EQUIVALENT_PAIRS)} equivalences at max-n 7, "
                f"cval = cpk as values: {value_eq}, ocmaj roundtrip n <= 7: {roundtrip}")


def test_criterion_5_equivalences(acceptance):
    ok, detail = criterion_5()
    assert acceptance(5, ok, detail), detail


# -- 6 ------------------------------------------------------------------------

def criterion_6():
    results = {"fundamental product": TH.verify_fqsym(6), "cyclic fundamental product": TH.verify_fcycmult(6),
               "cyclic K product": TH.verify_kcycmult(6)}
    ok = all(r[0] for r in results.values())
    return ok, ", ".join(f"{k}: {'holds' if r[0] else 'fails'} ({r[1]} cases)" for k, r in results.items())


def test_criterion_6_qsym(acceptance):
    ok, detail = criterion_6()
    assert acceptance(6, ok, detail), detail


# -- 7 ------------------------------------------------------------------------

def criterion_7():
    results = {
        "v four-term = closed form, n <= 8": TH.verify_v_closed(8),
        "(pk,des) homomorphism, m+n <= 5": TH.verify_pkdes_hom(5),
        "(cpk,cdes) homomorphism, m+n <= 5": TH.verify_cpkcdes_hom(5),
        "cdes t-form = p-form, n <= 8, p <= 20": TH.verify_cdes_forms(8, T=20),
        "cpk t-form = p-form, n <= 8, p <= 20": TH.verify_cpk_forms(8, T=20),
        "y=1 and y=0 specializations": TH.verify_specializations(8),
    }
    ok = all(r[0] for r in results.values())
    return ok, ", ".join(f"{k}: {'holds' if r[0] else 'fails'}" for k, r in results.items())


def test_criterion_7_series(acceptance):
    ok, detail = criterion_7()
    assert acceptance(7, ok, detail), detail


# -- 8 ------------------------------------------------------------------------

def criterion_8():
    maj = TH.verify_maj_gf(7)
    # the des-refined identity exactly as displayed: the first binomial is
    # [m-j+i, k-j] and the second [n-i+j, k-i]
    printed = TH.verify_majdes_gf(7, printed=True)
    corrected = TH.verify_majdes_gf(7)
    adin = TH.verify_adin_cdes(6)
    ok = maj[0] and printed[0] and adin[0]
    detail = (f"maj gf: {'holds' if maj[0] else 'fails'} ({maj[1]} pairs); "
              f"des-refined gf as displayed: {'holds' if printed[0] else 'fails'}")
    if not printed[0]:
        first = TH.verify_majdes_gf(7, printed=True, lo=1)[2]
        p, q = first[0] if first else printed[2][0]
        k = next(k for k in range(len(p) + len(q) + 1) if not verify_majdes_gf(p, q, k, printed=True))
        detail += (f" (first failure with both sides nonempty: p={P.format_perm(p)}, q={P.format_perm(q)}, k={k}); "
                   f"with m and n exchanged it {'holds' if corrected[0] else 'fails'} for all {corrected[1]} pairs")
    detail += f"; cyclic descent gf: {'holds' if adin[0] else 'fails'} ({adin[1]} pairs)"
    return ok, detail


def test_criterion_8_q_identities(acceptance):
    ok, detail = criterion_8()
    assert acceptance(8, ok, detail), detail


# -- 9 ------------------------------------------------------------------------

def criterion_9():
    formulas = {"cdes": lambda n: n - 1, "cpk": lambda n: n // 2, ("cpk", "cdes"): lambda n: n * n // 4}
    bad = []
    for cst, f in formulas.items():
        for n in range(2, 9):
            if not (TH.class_dimension(cst, n) == TH.image_dimension(cst, n) == f(n)):
                bad.append((cst, n))
    return not bad, f"class and image counts match n-1, floor(n/2), floor(n^2/4) for n <= 8, mismatches {bad}"


def test_criterion_9_dimensions(acceptance):
    ok, detail = criterion_9()
    assert acceptance(9, ok, detail), detail


# -- 10 -----------------------------------------------------------------------

def criterion_10():
    bad = []
    for n in range(2, 9):
        attained = {(ceval("cpk", c), ceval("cdes", c)) for c in cyclic_classes(n)}
        want = {(j, k) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1)}
        if attained != want:
            bad.append(n)
    return not bad, f"attained (cpk, cdes) range exact for 2 <= n <= 8, mismatches at n in {bad}"


def test_criterion_10_range(acceptance):
    ok, detail = criterion_10()
    assert acceptance(10, ok, detail), detail


if __name__ == "__main__":
    for i in range(1, 11):
        ok, detail = globals()[f"criterion_{i}"]()
        print(f"{'PASS' if ok else 'FAIL'} criterion {i}: {detail}")
