"""Quasisymmetric functions in the fundamental basis, cyclic fundamentals,
and the peak algebra with its formal K basis.

Elements are dicts with exact rational values.  ``QSymElem`` keys are
``(n, Comp)``; ``PkAlgElem`` keys are ``(n, IntSet)`` with the IntSet a linear
peak set of length n.  Products come from structure constants obtained by
enumerating shuffles of fixed representatives.
"""
import itertools
from fractions import Fraction
from functools import lru_cache

from . import perm as P
from .cyc import CycPerm, block_perm, cyc_from_cdes_set, non_escher
from .errors import EscherSet, InvalidPeakSet
from .shuffle import cyclic_shuffles, shuffles
from .values import Comp, IntSet


class _LinComb(dict):
    """Finitely supported formal sum: key -> nonzero Fraction."""

    def __init__(self, items=()):
        super().__init__()
        for k, v in dict(items).items():
            if v:
                self[k] = Fraction(v)

    def __add__(self, other):
        out = dict(self)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return type(self)(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return type(self)({k: c * v for k, v in self.items()})

    def __mul__(self, other):
        out = {}
        for ka, va in self.items():
            for kb, vb in other.items():
                for k, c in self._basis_product(ka, kb).items():
                    out[k] = out.get(k, 0) + va * vb * c
        return type(self)(out)

    def __repr__(self):
        if not self:
            return "0"
        return " + ".join(f"{v}*{self._name(k)}" for k, v in sorted(self.items(), key=lambda kv: (kv[0][0], tuple(kv[0][1]))))


class QSymElem(_LinComb):

    @staticmethod
    def _basis_product(a, b):
        return _fund_product(a[1], b[1])

    @staticmethod
    def _name(key):
        return f"F{key[1]!r}"


def F(L):
    """Fundamental quasisymmetric function indexed by a composition."""
    L = Comp(L)
    return QSymElem({(L.size, L): 1})


def F_set(n, S):
    return F(P.comp_of_set(S, n))


ONE = F(())


@lru_cache(maxsize=None)
def _fund_product(A, B):
    # descending-block representatives: A on [m], B on {m+1, ..., m+n}
    m = sum(A)
    p = block_perm(A)
    q = tuple(x + m for x in block_perm(B))
    out = {}
    for tau in shuffles(p, q):
        key = (len(tau), P.descent_composition(tau))
        out[key] = out.get(key, 0) + 1
    return out


def f_mult(a, b):
    return a * b


# -- monomial expansion in k variables ----------------------------------------

def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


@lru_cache(maxsize=None)
def _expand_fundamental(L, k):
    n = sum(L)
    des = set(P.des_of_comp(L))
    out = {}
    for chain in itertools.combinations_with_replacement(range(k), n):
        if all(chain[i - 1] < chain[i] for i in des):
            e = [0] * k
            for v in chain:
                e[v] += 1
            e = tuple(e)
            out[e] = out.get(e, 0) + 1
    return out


def expand_monomials(e, k):
    """Image in Q[x_1..x_k] as {exponent tuple: coefficient}."""
    out = {}
    for (n, L), c in e.items():
        for mono, m in _expand_fundamental(L, k).items():
            out[mono] = out.get(mono, 0) + c * m
    return {m: c for m, c in out.items() if c}


# -- cyclic fundamentals ------------------------------------------------------

def shift_set(S, i, n):
    """S + i with entries reduced into [n]."""
    return IntSet(((s + i - 1) % n) + 1 for s in S)


def f_cyc(n, S):
    S = IntSet(S)
    if not non_escher(S, n):
        raise EscherSet(f"{S!r} is not a non-Escher subset of [{n}]")
    if n == 0:
        return ONE
    out = QSymElem()
    for i in range(1, n + 1):
        out = out + F_set(n, [s for s in shift_set(S, i, n) if s <= n - 1])
    return out


def f_cyc_of(c):
    """Sum of F over the descent sets of the rotations of c."""
    c = c if isinstance(c, CycPerm) else CycPerm(c)
    out = QSymElem() if c.n else ONE
    for r in c.rotations() if c.n else ():
        out = out + F(P.descent_composition(r))
    return out


def fcyc_mult_sides(m, n, A, B):
    """Left and right sides of the cyclic fundamental product rule."""
    lhs = f_cyc(m, A) * f_cyc(n, B)
    pi = cyc_from_cdes_set(A, m)
    sigma = tuple(x + m for x in cyc_from_cdes_set(B, n))
    rhs = QSymElem()
    for c in cyclic_shuffles(CycPerm(pi), CycPerm(sigma)):
        rhs = rhs + f_cyc(m + n, P.cDes(c.rep))
    return lhs, rhs


def verify_fcyc_mult(m, n, A, B):
    lhs, rhs = fcyc_mult_sides(m, n, A, B)
    return lhs == rhs


def non_escher_sets(n):
    for r in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), r):
            if non_escher(S, n):
                yield IntSet(S)


# -- the peak algebra ---------------------------------------------------------

class PkAlgElem(_LinComb):

    @staticmethod
    def _basis_product(a, b):
        return _peak_product(a, b)

    @staticmethod
    def _name(key):
        return f"K[{key[0]},{key[1]!r}]"


def valid_peak_set(n, S):
    S = sorted(S)
    return all(2 <= s <= n - 1 for s in S) and all(b - a >= 2 for a, b in zip(S, S[1:]))


@lru_cache(maxsize=None)
def peak_representative(n, S):
    """Lexicographically first permutation of [n] with peak set S."""
    S = IntSet(S)
    if not valid_peak_set(n, S):
        raise InvalidPeakSet(f"{S!r} is not a peak set of length {n}")
    for p in P.perms(n):
        if P.Pk(p) == S:
            return p
    raise InvalidPeakSet(f"{S!r} is not a peak set of length {n}")


def K(n, S):
    S = IntSet(S)
    if not valid_peak_set(n, S):
        raise InvalidPeakSet(f"{S!r} is not a peak set of length {n}")
    return PkAlgElem({(n, S): 1})


@lru_cache(maxsize=None)
def _peak_product(a, b):
    (m, A), (n, B) = a, b
    p = peak_representative(m, A)
    q = tuple(x + m for x in peak_representative(n, B))
    out = {}
    for tau in shuffles(p, q):
        key = (m + n, P.Pk(tau))
        out[key] = out.get(key, 0) + 1
    return out


def pk_product(a, b):
    return a * b


def valid_cyclic_peak_set(n, S):
    S = IntSet(S)
    if any(s < 1 or s > n for s in S):
        return False
    if n < 2:
        return not S
    if not S:
        return False
    if n == 2:
        return len(S) == 1
    return all(((s % n) + 1) not in S for s in S)


def k_cyc(n, S):
    """Sum over i of K at (S + i) minus {1, n}."""
    S = IntSet(S)
    if not valid_cyclic_peak_set(n, S):
        raise InvalidPeakSet(f"{S!r} is not a cyclic peak set of [{n}]")
    if n == 0:
        return PkAlgElem({(0, IntSet()): 1})
    out = PkAlgElem()
    for i in range(1, n + 1):
        out = out + K(n, [s for s in shift_set(S, i, n) if s not in (1, n)])
    return out


@lru_cache(maxsize=None)
def cyclic_peak_representative(n, S):
    S = IntSet(S)
    if not valid_cyclic_peak_set(n, S):
        raise InvalidPeakSet(f"{S!r} is not a cyclic peak set of [{n}]")
    for p in P.perms(n):
        if P.cPk(p) == S:
            return p
    raise InvalidPeakSet(f"{S!r} is not a cyclic peak set of [{n}]")


def kcyc_mult_sides(m, n, A, B):
    lhs = k_cyc(m, A) * k_cyc(n, B)
    pi = cyclic_peak_representative(m, A)
    sigma = tuple(x + m for x in cyclic_peak_representative(n, B))
    rhs = PkAlgElem()
    for c in cyclic_shuffles(CycPerm(pi), CycPerm(sigma)):
        rhs = rhs + k_cyc(m + n, P.cPk(c.rep))
    return lhs, rhs


def verify_kcyc_mult(m, n, A, B):
    lhs, rhs = kcyc_mult_sides(m, n, A, B)
    return lhs == rhs


def cyclic_peak_sets(n):
    for r in range(n + 1):
        for S in itertools.combinations(range(1, n + 1), r):
            if valid_cyclic_peak_set(n, S):
                yield IntSet(S)
