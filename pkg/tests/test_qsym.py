import pytest

from cycshuffle import qsym as Q
from cycshuffle.cyc import CycPerm, cyclic_classes
from cycshuffle import perm as P
from cycshuffle.errors import EscherSet, InvalidPeakSet
from cycshuffle.theorems import verify_fcycmult, verify_fqsym, verify_kcycmult


def test_small_product():
    assert Q.F((1,)) * Q.F((1,)) == Q.F((2,)) + Q.F((1, 1))
    assert Q.F((2, 1)) * Q.ONE == Q.F((2, 1))


def test_monomial_expansion():
    assert Q.expand_monomials(Q.F((1, 1)), 2) == {(1, 1): 1}
    assert Q.expand_monomials(Q.F((3,)), 1) == {(3,): 1}
    assert Q.expand_monomials(Q.F((1, 1, 1)), 2) == {}


def test_fundamental_product_oracle():
    ok, count, failures = verify_fqsym(5)
    assert ok, failures


def test_f_cyc_shift_invariance():
    for n in range(1, 7):
        for S in Q.non_escher_sets(n):
            for i in range(n):
                assert Q.f_cyc(n, S) == Q.f_cyc(n, Q.shift_set(S, i, n))


def test_f_cyc_matches_rotations():
    assert Q.f_cyc(1, ()) == Q.F((1,))
    for n in range(2, 7):
        for c in cyclic_classes(n):
            assert Q.f_cyc(n, P.cDes(c.rep)) == Q.f_cyc_of(c)


def test_f_cyc_rejects_escher():
    with pytest.raises(EscherSet):
        Q.f_cyc(3, (1, 2, 3))


def test_fcyc_mult():
    ok, count, failures = verify_fcycmult(5)
    assert ok, failures


def test_fcyc_mult_detects_perturbation():
    lhs, rhs = Q.fcyc_mult_sides(2, 2, (1,), (2,))
    key = next(iter(rhs))
    broken = rhs - Q.QSymElem({key: rhs[key]})
    assert lhs == rhs and lhs != broken


def test_peak_products():
    a, b = Q.K(3, (2,)), Q.K(2, ())
    ab, ba = a * b, b * a
    assert ab == ba
    with pytest.raises(InvalidPeakSet):
        Q.K(4, (2, 3))


def test_k_cyc_shift_invariance():
    for n in range(2, 7):
        for S in Q.cyclic_peak_sets(n):
            assert Q.k_cyc(n, S) == Q.k_cyc(n, Q.shift_set(S, 1, n))


def test_cyclic_peak_sets_are_realized():
    for n in range(1, 8):
        realized = {P.cPk(p) for p in P.perms(n)}
        assert realized == set(Q.cyclic_peak_sets(n))


def test_kcyc_mult():
    ok, count, failures = verify_kcycmult(5)
    assert ok, failures
