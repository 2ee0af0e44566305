"""Linear and cyclic shuffles, and distributions of statistics over sets."""
from . import perm as P
from .cyc import CycPerm, ceval
from .errors import NotDisjoint
from .values import Multiset


def _check_disjoint(p, q):
    common = set(p) & set(q)
    if common:
        raise NotDisjoint(f"permutations share letters {sorted(common)}")


def _interleave(p, q):
    if not p:
        yield q
        return
    if not q:
        yield p
        return
    for rest in _interleave(p[1:], q):
        yield (p[0],) + rest
    for rest in _interleave(p, q[1:]):
        yield (q[0],) + rest


def shuffles(p, q):
    """All interleavings of p and q that keep both in order."""
    p, q = P.make_perm(p), P.make_perm(q)
    _check_disjoint(p, q)
    return set(_interleave(p, q))


def shuffles_with_des(p, q, k):
    return {t for t in shuffles(p, q) if len(P.Des(t)) == k}


def _as_cyc(c):
    return c if isinstance(c, CycPerm) else CycPerm(c)


def cyclic_shuffles(a, b):
    """Set of cyclic classes containing a shuffle of some rotation of a with
    some rotation of b.

    Each class is generated once: its rotation starting at the least letter
    of a is that letter followed by a shuffle of the rest of a's canonical
    representative with one rotation of b.
    """
    a, b = _as_cyc(a), _as_cyc(b)
    _check_disjoint(a.rep, b.rep)
    if not a.rep or not b.rep:
        return {a if b.rep == () else b}
    head, tail = a.rep[:1], a.rep[1:]
    out = set()
    for bb in b.rotations():
        for t in _interleave(tail, bb):
            out.add(CycPerm(head + t))
    return out


def cyclic_shuffles_naive(a, b):
    """Definition-level version: shuffle every pair of rotations and dedupe."""
    a, b = _as_cyc(a), _as_cyc(b)
    _check_disjoint(a.rep, b.rep)
    out = set()
    for aa in a.rotations():
        for bb in b.rotations():
            out.update(CycPerm(t) for t in _interleave(aa, bb))
    return out


class Distribution(Multiset):
    """Multiset of statistic values over a finite set of permutations."""

    __slots__ = ()

    @property
    def entries(self):
        return tuple(self)


def distribution(st, perms):
    return Distribution(P.evaluate(st, p) for p in perms)


def cyc_distribution(cst, classes):
    return Distribution(ceval(cst, c) for c in classes)
