import pytest

from cycshuffle import perm as P
from cycshuffle.compat import (
    brute_bijection,
    check_csc,
    check_equiv,
    check_f_equiv,
    check_refines,
    check_sc,
    compare_pairs,
    lifting_check,
    matching_bijection,
)
from cycshuffle.cyc import CycPerm, Induced, cyclic_classes
from cycshuffle.errors import UnknownStat


@pytest.mark.parametrize("st", ["Des", "Pk", "des", "maj", ("des", "maj")])
def test_linear_compatible(st):
    assert check_sc(st, 6).verdict == "compatible"


@pytest.mark.parametrize("st", ["ddes", "Ddes", "br"])
def test_linear_incompatible(st):
    r = check_sc(st, 5)
    assert r.verdict == "incompatible"
    assert r.witness.count_first != r.witness.count_second


@pytest.mark.parametrize("cst", ["cDes", ("cpk", "cdes"), Induced("des")])
def test_cyclic_compatible(cst):
    assert check_csc(cst, 6).verdict == "compatible"


@pytest.mark.parametrize("cst, size", [(Induced("Ddes"), 5), (Induced("ddes"), 5), (Induced(("Pk", "Val")), 4)])
def test_cyclic_incompatible_witness_replays(cst, size):
    r = check_csc(cst, size)
    assert r.verdict == "incompatible"
    w = r.witness
    d1, d2 = compare_pairs(cst, w.first, w.second)
    assert d1 != d2
    assert d1.multiplicity(w.value) == w.count_first
    assert d2.multiplicity(w.value) == w.count_second


def test_ddes_witness_shape():
    # the stored Ddes pair: 1234 and 1324 each shuffled with 5
    d1, d2 = compare_pairs(Induced("Ddes"), (CycPerm((1, 2, 3, 4)), CycPerm((5,))),
                           (CycPerm((1, 3, 2, 4)), CycPerm((5,))))
    assert d1 != d2


def test_unknown_stat():
    with pytest.raises(UnknownStat):
        check_sc("nope", 3)


def test_equivalences():
    assert check_equiv(Induced("des"), "cdes", 7).verdict == "equivalent"
    assert check_equiv(Induced("maj"), Induced("cmajL"), 7).verdict == "equivalent"
    assert check_equiv("ocmaj", "cDes", 7).verdict == "equivalent"
    assert check_equiv("cdes", "cpk", 5).verdict == "inequivalent"


def test_refinement():
    assert check_refines("cDes", "cpk", 6)
    assert not check_refines("cpk", "cDes", 6)


def test_f_equivalences():
    assert check_f_equiv("Pk", "Val", "c", 7)
    assert check_f_equiv("pk", "val", "c", 7)
    assert check_f_equiv("maj", "comaj", "rc", 7)
    assert not check_f_equiv("Des", "Pk", "r", 5)


@pytest.mark.parametrize("cst, st", [("cDes", "Des"), ("cpk", "pk"), ("cdes", "des"), (("cpk", "cdes"), ("pk", "des"))])
def test_lifting_conditions(cst, st):
    r = lifting_check(cst, st, 5)
    assert r.cond_a and r.cond_b


def test_bijection_search_agrees_with_matching():
    for n in range(1, 5):
        classes = cyclic_classes(n)
        for c1 in classes:
            for c2 in classes:
                fast = matching_bijection("des", c1, c2)
                slow = brute_bijection("des", c1, c2)
                assert (fast is None) == (slow is None)
