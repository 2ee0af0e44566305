"""Named exhaustive verifications, dimension counts and the (cpk, cdes) range law.

Every ``verify_*`` function returns ``(verdict, params_checked, failures)``
where ``failures`` lists the first few failing parameter tuples.
"""
import itertools

from . import perm as P
from . import qsym as Q
from . import series as S
from .cyc import ceval, cyclic_classes
from .compat import cyclic_pattern_pairs, pattern_pairs

_MAX_FAILURES = 5


def _run(cases, check):
    count, failures = 0, []
    for case in cases:
        count += 1
        if not check(*case):
            failures.append(case)
            if len(failures) >= _MAX_FAILURES:
                break
    return not failures, count, failures


def all_compositions(n):
    for r in range(max(n, 1)):
        for cut in itertools.combinations(range(1, n), r):
            yield P.comp_of_set(cut, n)
    if n == 0:
        return


def _split_sizes(N, lo=0):
    for s in range(N + 1):
        for m in range(lo, s + 1 - lo):
            yield m, s - m


def verify_fqsym(N):
    """Fundamental product against the monomial oracle in m+n variables."""
    def cases():
        for m, n in _split_sizes(N):
            if m + n == 0:
                continue
            for A in all_compositions(m):
                for B in all_compositions(n):
                    yield A, B

    def check(A, B):
        k = sum(A) + sum(B)
        lhs = Q.expand_monomials(Q.F(A) * Q.F(B), k)
        rhs = Q.poly_mul(Q.expand_monomials(Q.F(A), k), Q.expand_monomials(Q.F(B), k))
        return lhs == rhs

    return _run(cases(), check)


def verify_fcycmult(N):
    def cases():
        for m, n in _split_sizes(N):
            for A in Q.non_escher_sets(m):
                for B in Q.non_escher_sets(n):
                    yield m, n, A, B
    return _run(cases(), Q.verify_fcyc_mult)


def verify_kcycmult(N):
    def cases():
        for m, n in _split_sizes(N):
            for A in Q.cyclic_peak_sets(m):
                for B in Q.cyclic_peak_sets(n):
                    yield m, n, A, B
    return _run(cases(), Q.verify_kcyc_mult)


def _linear_pairs(N, lo=1):
    for m, n in _split_sizes(N, lo):
        yield from pattern_pairs(m, n)


def _cyclic_pairs(N, lo=1):
    for m, n in _split_sizes(N, lo):
        yield from cyclic_pattern_pairs(m, n)


def verify_pkdes_hom(N):
    return _run(_linear_pairs(N, 0), S.pkdes_hom)


def verify_cpkcdes_hom(N):
    return _run(_cyclic_pairs(N, 0), S.cpkcdes_hom)


def verify_v_closed(N):
    cases = ((n, j, k) for n in range(2, N + 1) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1))
    return _run(cases, S.v_closed_identity)


def verify_cpk_forms(N, T=20):
    cases = [(1, 0)] + [(n, j) for n in range(2, N + 1) for j in range(1, n // 2 + 1)]
    return _run(cases, lambda n, j: S.forms_agree(S.cpk_series(n, j, T), S.w_cpk(n, j, T)))


def verify_cdes_forms(N, T=20):
    cases = [(1, 0)] + [(n, k) for n in range(2, N + 1) for k in range(1, n)]
    return _run(cases, lambda n, k: S.forms_agree(S.cdes_series(n, k, T), S.cdes_pform(n, k, T)))


def verify_specializations(N, T=20):
    """v at y = 1 is the cpk series and v at y = 0 is the cdes series."""
    cases = ((n, j, k) for n in range(2, N + 1) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1))

    def check(n, j, k):
        v = S.v_cpkcdes(n, j, k, T)
        return v.subs_y(1).equals(S.cpk_series(n, j, T)) and v.subs_y(0).equals(S.cdes_series(n, k, T))

    return _run(cases, check)


def verify_maj_gf(N):
    return _run(_linear_pairs(N, 0), S.verify_maj_gf)


def verify_majdes_gf(N, printed=False, lo=0):
    return _run(_linear_pairs(N, lo), lambda p, q: S.verify_majdes_gf_all(p, q, printed))


def verify_adin_cdes(N):
    return _run(_linear_pairs(N, 1), S.verify_adin_cdes)


# -- dimensions and ranges ----------------------------------------------------

DIM_FORMULAS = {
    "cdes": lambda n: n - 1,
    "cpk": lambda n: n // 2,
    ("cpk", "cdes"): lambda n: n * n // 4,
}


def class_dimension(cst, n):
    """Number of distinct values of cst over cyclic permutations of length n."""
    return len({ceval(cst, c) for c in cyclic_classes(n)})


def image_dimension(cst, n, T=S.DEFAULT_T):
    """Number of pairwise distinct formula images at length n (n >= 2)."""
    if cst == "cdes":
        images = [S.cdes_series(n, k, T) for k in range(1, n)]
    elif cst == "cpk":
        images = [S.cpk_series(n, j, T) for j in range(1, n // 2 + 1)]
    elif cst == ("cpk", "cdes"):
        images = [S.v_cpkcdes(n, j, k, T) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1)]
    else:
        raise ValueError(f"no formula images for {cst!r}")
    distinct = []
    for im in images:
        if not any(im.equals(other) for other in distinct):
            distinct.append(im)
    return len(distinct)


def verify_dims(N):
    cases = ((cst, n) for cst in DIM_FORMULAS for n in range(2, N + 1))

    def check(cst, n):
        want = DIM_FORMULAS[cst](n)
        return class_dimension(cst, n) == want and image_dimension(cst, n) == want

    return _run(cases, check)


def attained_range(n):
    return {(ceval("cpk", c), ceval("cdes", c)) for c in cyclic_classes(n)}


def predicted_range(n):
    return {(j, k) for j in range(1, n // 2 + 1) for k in range(j, n - j + 1)}


def verify_range(N):
    return _run(((n,) for n in range(2, N + 1)), lambda n: attained_range(n) == predicted_range(n))


THEOREMS = {
    "fqsym": (verify_fqsym, 6),
    "fcycmult": (verify_fcycmult, 6),
    "kcycmult": (verify_kcycmult, 6),
    "pkdes-hom": (verify_pkdes_hom, 5),
    "cpkcdes-hom": (verify_cpkcdes_hom, 5),
    "v-closed": (verify_v_closed, 8),
    "cpk-forms": (verify_cpk_forms, 8),
    "cdes-forms": (verify_cdes_forms, 8),
    "specializations": (verify_specializations, 8),
    "maj-gf": (verify_maj_gf, 7),
    "majdes-gf": (verify_majdes_gf, 7),
    "majdes-gf-printed": (lambda N: verify_majdes_gf(N, printed=True), 7),
    "adin-cdes": (verify_adin_cdes, 6),
    "dims": (verify_dims, 8),
    "range": (verify_range, 8),
}
