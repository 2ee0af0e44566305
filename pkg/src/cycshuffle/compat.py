"""Exhaustive deciders for shuffle-compatibility, equivalence and the lifting lemma.

Compatibility is decided on pattern pairs: two permutations whose letters
partition [m+n].  Every relative order of two disjoint permutations occurs
among these, and statistics only see relative order.

Enumeration order, which fixes the reported witness: total length s
ascending, then m ascending, then the letter set of the first permutation in
``itertools.combinations`` order, then the two patterns lexicographically.
"""
import itertools
from dataclasses import dataclass, field
from typing import Any, Optional

from . import perm as P
from .cyc import CycPerm, ceval, cyclic_classes, lift_M, lift_S
from .shuffle import cyclic_shuffles, cyc_distribution, distribution, shuffles
from .values import Multiset, value_key


@dataclass
class Witness:
    """Two inputs with equal statistic data whose shuffle distributions differ."""

    first: tuple
    second: tuple
    value: Any
    count_first: int
    count_second: int


@dataclass
class CompatReport:
    verdict: str
    max_checked: int
    witness: Optional[Witness] = None
    checked: int = 0
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict in ("compatible", "equivalent", "refines", "holds")


def pattern_pairs(m, n):
    """Every (p, q) with p of length m, q of length n, letters partitioning [m+n]."""
    letters = range(1, m + n + 1)
    for A in itertools.combinations(letters, m):
        B = [x for x in letters if x not in A]
        for pa in itertools.permutations(A):
            for pb in itertools.permutations(B):
                yield pa, pb


def cyclic_pattern_pairs(m, n):
    """Every pair of cyclic classes with letter sets partitioning [m+n]."""
    letters = range(1, m + n + 1)
    for A in itertools.combinations(letters, m):
        B = [x for x in letters if x not in A]
        for ra in itertools.permutations(A[1:]):
            for rb in itertools.permutations(B[1:]):
                yield CycPerm(A[:1] + ra), CycPerm(tuple(B[:1]) + rb)


def first_difference(d1, d2):
    """Least value (in canonical order) whose multiplicities differ."""
    c1, c2 = d1.counts(), d2.counts()
    keys = sorted(set(c1) | set(c2), key=value_key)
    for v in keys:
        if c1.get(v, 0) != c2.get(v, 0):
            return v, c1.get(v, 0), c2.get(v, 0)
    return None


def _grouped_check(pairs_by_size, key_of, dist_of, N):
    seen = {}
    checked = 0
    for pair in pairs_by_size:
        checked += 1
        key = key_of(pair)
        d = dist_of(pair)
        if key not in seen:
            seen[key] = (pair, d)
            continue
        ref, dref = seen[key]
        if d != dref:
            v, c1, c2 = first_difference(dref, d)
            return CompatReport("incompatible", N, Witness(ref, pair, v, c1, c2), checked)
    return CompatReport("compatible", N, None, checked)


def _sizes(N):
    for s in range(2, N + 1):
        for m in range(1, s):
            yield m, s - m


def check_sc(st, N):
    """Exhaustive linear shuffle-compatibility test up to total length N."""
    P.check_stat(st)

    def pairs():
        for m, n in _sizes(N):
            yield from pattern_pairs(m, n)

    return _grouped_check(
        pairs(),
        lambda pq: (len(pq[0]), P.evaluate(st, pq[0]), len(pq[1]), P.evaluate(st, pq[1])),
        lambda pq: distribution(st, shuffles(*pq)),
        N,
    )


def check_csc(cst, N):
    """Exhaustive cyclic shuffle-compatibility test up to total length N."""
    def pairs():
        for m, n in _sizes(N):
            yield from cyclic_pattern_pairs(m, n)

    return _grouped_check(
        pairs(),
        lambda ab: (ab[0].n, ceval(cst, ab[0]), ab[1].n, ceval(cst, ab[1])),
        lambda ab: cyc_distribution(cst, cyclic_shuffles(*ab)),
        N,
    )


def compare_pairs(cst, pair1, pair2):
    """Cyclic shuffle distributions of two explicit pairs, for witness replay."""
    d1 = cyc_distribution(cst, cyclic_shuffles(*pair1))
    d2 = cyc_distribution(cst, cyclic_shuffles(*pair2))
    return d1, d2


# -- refinement and equivalence -----------------------------------------------

def _refines_on(items, f, g, N):
    """Does f(x) = f(x') imply g(x) = g(x') over items?"""
    table = {}
    count = 0
    for x in items:
        count += 1
        fx, gx = f(x), g(x)
        if fx in table:
            x0, g0 = table[fx]
            if g0 != gx:
                return CompatReport("fails", N, Witness(x0, x, fx, 0, 0), count,
                                    {"values": (g0, gx)})
        else:
            table[fx] = (x, gx)
    return CompatReport("refines", N, None, count, {"classes": len(table)})


def check_refines(cst1, cst2, N):
    """cst1 refines cst2 on cyclic permutations of every length 1..N."""
    total = 0
    for n in range(1, N + 1):
        r = _refines_on(cyclic_classes(n), lambda c: ceval(cst1, c), lambda c: ceval(cst2, c), N)
        total += r.checked
        if r.verdict != "refines":
            r.checked = total
            return r
    return CompatReport("refines", N, None, total)


def check_equiv(cst1, cst2, N):
    a = check_refines(cst1, cst2, N)
    if not a:
        return CompatReport("inequivalent", N, a.witness, a.checked, {"direction": "forward"})
    b = check_refines(cst2, cst1, N)
    if not b:
        return CompatReport("inequivalent", N, b.witness, a.checked + b.checked, {"direction": "backward"})
    return CompatReport("equivalent", N, None, a.checked + b.checked)


def class_count(cst, n):
    return len({ceval(cst, c) for c in cyclic_classes(n)})


def check_f_equiv(st1, st2, f, N):
    """st1(p^f) = st1(q^f) iff st2(p) = st2(q), over S_n for n <= N."""
    P.check_stat(st1)
    P.check_stat(st2)
    total = 0
    for n in range(1, N + 1):
        perms = list(P.perms(n))
        f1 = lambda p: P.evaluate(st1, P.apply_symmetry(f, p))
        f2 = lambda p: P.evaluate(st2, p)
        for a, b in ((f1, f2), (f2, f1)):
            r = _refines_on(perms, a, b, N)
            total += r.checked
            if r.verdict != "refines":
                r.verdict = "inequivalent"
                r.checked = total
                return r
    return CompatReport("equivalent", N, None, total)


# -- lifting lemma ------------------------------------------------------------

@dataclass
class LiftingReport:
    n: int
    cond_a: bool
    cond_b: bool
    witness_a: Optional[tuple] = None
    witness_b: Optional[tuple] = None
    bijection_example: Optional[dict] = None

    def __bool__(self):
        return self.cond_a and self.cond_b


def letter_values(st, c):
    """{letter i: st(S_i[c])}."""
    return {i: P.evaluate(st, lift_S(i, c)) for i in c.rep}


def matching_bijection(st, c1, c2):
    """A bijection f on letters with st(S_i c1) = st(S_f(i) c2), or None.

    Letters of equal value are paired in increasing order, which succeeds
    exactly when the two value multisets coincide.
    """
    v1, v2 = letter_values(st, c1), letter_values(st, c2)
    buckets = {}
    for i in sorted(v2):
        buckets.setdefault(v2[i], []).append(i)
    f = {}
    for i in sorted(v1):
        pool = buckets.get(v1[i])
        if not pool:
            return None
        f[i] = pool.pop(0)
    return f


def brute_bijection(st, c1, c2):
    """Search all bijections directly; small n only."""
    v1, v2 = letter_values(st, c1), letter_values(st, c2)
    src = sorted(v1)
    for img in itertools.permutations(sorted(v2)):
        if all(v1[i] == v2[j] for i, j in zip(src, img)):
            return dict(zip(src, img))
    return None


def lifting_check(cst, st, n):
    classes = cyclic_classes(n)
    # condition (a): st(M[c]) determines cst[c]
    cond_a, wa = True, None
    table = {}
    for c in classes:
        key = P.evaluate(st, lift_M(c)) if n else None
        val = ceval(cst, c)
        if key in table and table[key][1] != val:
            cond_a, wa = False, (table[key][0], c)
            break
        table.setdefault(key, (c, val))
    # condition (b): equal cst forces a value-matching bijection of lifts
    cond_b, wb, example = True, None, None
    groups = {}
    for c in classes:
        groups.setdefault(ceval(cst, c), []).append(c)
    for members in groups.values():
        c0 = members[0]
        ref = Multiset(letter_values(st, c0).values())
        for c in members[1:]:
            if Multiset(letter_values(st, c).values()) != ref:
                cond_b, wb = False, (c0, c)
                break
            if example is None:
                example = {"first": c0, "second": c, "bijection": matching_bijection(st, c0, c)}
        if not cond_b:
            break
    return LiftingReport(n, cond_a, cond_b, wa, wb, example)
