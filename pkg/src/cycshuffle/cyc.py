"""Cyclic permutations and cyclic permutation statistics.

A cyclic statistic id is one of

* an intrinsic name: ``cdes``, ``cpk``, ``cbr``, ``cval`` (integers, constant
  on the orbit), ``cDes``, ``cPk`` (multisets of cyclic descent/peak sets),
  ``cComp`` (cyclic descent composition), ``ocmaj`` (cyclic word);
* ``Induced(st)`` for a linear statistic id ``st``: the multiset of ``st``
  over every rotation;
* a 2-tuple of cyclic statistic ids, evaluated componentwise.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import perm as P
from .errors import (
    ElementOutOfRange,
    EscherSet,
    MalformedWord,
    NotALetter,
    NotInOrbit,
    UnknownStat,
)
from .values import CycWord, IntSet, Multiset, Pair


class CycPerm:
    """Rotation class of a permutation, stored by the rotation starting at its minimum."""

    __slots__ = ("rep",)

    def __init__(self, letters):
        p = P.make_perm(letters)
        if p:
            i = p.index(min(p))
            p = p[i:] + p[:i]
        object.__setattr__(self, "rep", p)

    def __setattr__(self, name, value):
        raise AttributeError("CycPerm is immutable")

    @property
    def n(self):
        return len(self.rep)

    def __len__(self):
        return len(self.rep)

    def __eq__(self, other):
        return isinstance(other, CycPerm) and self.rep == other.rep

    def __hash__(self):
        return hash(("CycPerm", self.rep))

    def __lt__(self, other):
        return self.rep < other.rep

    def __repr__(self):
        return f"[{P.format_perm(self.rep)}]"

    def letters(self):
        return frozenset(self.rep)

    def rotations(self):
        """The orbit, starting at the canonical representative."""
        return rotations_ordered(self, self.rep)

    def standardized(self):
        return CycPerm(P.standardize(self.rep))


def rotate_last_to_front(p):
    return p[-1:] + p[:-1] if p else p


def rotations_ordered(c, start):
    """``start`` followed by successive last-letter-to-front rotations."""
    start = tuple(start)
    if CycPerm(start) != c:
        raise NotInOrbit(f"{P.format_perm(start)} is not a rotation of {c!r}")
    out = [start]
    for _ in range(len(start) - 1):
        out.append(rotate_last_to_front(out[-1]))
    return out


def cyclic_classes(n):
    """One CycPerm per rotation class of S_n, in lexicographic order of representatives."""
    if n == 0:
        return [CycPerm(())]
    return [CycPerm((1,) + rest) for rest in itertools.permutations(range(2, n + 1))]


# -- cyclic statistic ids ---------------------------------------------------

@dataclass(frozen=True)
class Induced:
    st: object

    def __post_init__(self):
        P.check_stat(self.st)

    def __repr__(self):
        return f"ind:{P.stat_name(self.st)}"


INTRINSIC = ("cdes", "cpk", "cbr", "cval", "cDes", "cPk", "cComp", "ocmaj")


def check_cyc_stat(cst):
    if isinstance(cst, Induced):
        return cst
    if isinstance(cst, tuple):
        if len(cst) != 2:
            raise UnknownStat(f"pair statistic must have two components: {cst!r}")
        check_cyc_stat(cst[0])
        check_cyc_stat(cst[1])
        return cst
    if cst not in INTRINSIC:
        raise UnknownStat(f"unknown cyclic statistic {cst!r}")
    return cst


def parse_cyc_stat(text):
    """``ind:des`` / ``cdes`` / ``cpk,cdes`` / ``ind:(lpk,des)``."""
    text = P._strip_parens(text)
    parts = P.split_top_level(text)
    if len(parts) == 2:
        return (parse_cyc_stat(parts[0]), parse_cyc_stat(parts[1]))
    if len(parts) > 2:
        raise UnknownStat(f"only pairs are supported: {text!r}")
    text = parts[0]
    if text.startswith("ind:"):
        return Induced(P.parse_stat(text[4:]))
    return check_cyc_stat(text)


def cyc_stat_name(cst):
    if isinstance(cst, tuple):
        return f"({cyc_stat_name(cst[0])},{cyc_stat_name(cst[1])})"
    return repr(cst) if isinstance(cst, Induced) else cst


# -- evaluation -------------------------------------------------------------

def ceval(cst, c):
    """Value of the cyclic statistic ``cst`` on the cyclic permutation ``c``."""
    if not isinstance(c, CycPerm):
        c = CycPerm(c)
    return _ceval(cst, P.standardize(c.rep))


@lru_cache(maxsize=None)
def _ceval(cst, rep):
    # rep is a standardized canonical representative
    if isinstance(cst, Induced):
        return Multiset(P.evaluate(cst.st, q) for q in rotations_ordered(CycPerm(rep), rep))
    if isinstance(cst, tuple):
        return Pair(_ceval(cst[0], rep), _ceval(cst[1], rep))
    if cst == "cdes":
        return len(P.cDes(rep))
    if cst == "cpk":
        return len(P.cPk(rep))
    if cst == "cval":
        return len(P.cVal(rep))
    if cst == "cbr":
        return P.cbr(rep)
    if cst == "cDes":
        return _ceval(Induced("cDesL"), rep)
    if cst == "cPk":
        return _ceval(Induced("cPkL"), rep)
    if cst == "cComp":
        return ccomp_of_set(P.cDes(rep), len(rep))
    if cst == "ocmaj":
        return ocmaj(CycPerm(rep))
    raise UnknownStat(f"unknown cyclic statistic {cst!r}")


def ccomp_of_set(S, n):
    """Cyclic descent composition of a non-Escher set, as a least-rotation word."""
    if n == 0:
        return CycWord()
    if n == 1:
        return CycWord((1,))
    s = sorted(S)
    parts = [b - a for a, b in zip(s, s[1:])] + [n - s[-1] + s[0]]
    return CycWord(parts)


def ccomp(c):
    if not isinstance(c, CycPerm):
        c = CycPerm(c)
    return ccomp_of_set(P.cDes(c.rep), c.n)


def non_escher(S, n):
    S = IntSet(S)
    if any(s < 1 or s > n for s in S):
        raise ElementOutOfRange(f"{S!r} is not a subset of [{n}]")
    if n <= 1:
        return not S
    return 0 < len(S) < n


def ocmaj(c):
    """Cyclic word of cmaj along last-letter-to-front rotations."""
    if not isinstance(c, CycPerm):
        c = CycPerm(c)
    return CycWord(P.cmaj(q) for q in rotations_ordered(c, c.rep))


def reconstruct_ccomp(w, n):
    """Recover the cyclic descent composition from an ocmaj word.

    The orbit-order positions of the cyclic descents of ``w`` run through the
    cyclic descent set in decreasing order, so the gaps are read backwards.
    """
    w = tuple(w)
    if len(w) != n:
        raise MalformedWord(f"word of length {len(w)} does not have length {n}")
    if n < 2:
        raise MalformedWord("reconstruction needs n >= 2")
    if any(w[i] == w[(i + 1) % n] for i in range(n)):
        raise MalformedWord(f"adjacent equal entries in {w}")
    descents = [i for i in range(n) if w[i] > w[(i + 1) % n]]
    if not descents:
        raise MalformedWord(f"no cyclic descent in {w}")
    gaps = [(b - a) % n or n for a, b in zip(descents, descents[1:] + descents[:1])]
    return CycWord(reversed(gaps))


# -- lifting-lemma maps -----------------------------------------------------

def lift_S(i, c):
    """The orbit member of ``c`` beginning with the letter ``i``."""
    if not isinstance(c, CycPerm):
        c = CycPerm(c)
    rep = c.rep
    if i not in rep:
        raise NotALetter(f"{i} is not a letter of {c!r}")
    k = rep.index(i)
    return rep[k:] + rep[:k]


def lift_M(c):
    """Rotate the maximum letter to the front and delete it."""
    if not isinstance(c, CycPerm):
        c = CycPerm(c)
    if not c.rep:
        raise NotALetter("M is undefined on the empty cyclic permutation")
    return lift_S(max(c.rep), c)[1:]


def cyc_from_cdes_set(S, n):
    """A linear permutation of [n] whose cyclic descent set is exactly ``S``.

    The cyclic ascending runs end at the elements of ``S``.  One run of length
    at least two gets the letters 1 and n at its ends; the other runs, read
    cyclically after it, get successively smaller blocks from the rest.
    """
    S = IntSet(S)
    if not non_escher(S, n):
        raise EscherSet(f"{S!r} is not a non-Escher subset of [{n}]")
    if n <= 1:
        return tuple(range(1, n + 1))
    # runs as lists of 0-based positions, each starting right after a descent
    runs = []
    for a, b in zip(S, S[1:] + S[:1]):
        length = (b - a) % n or n
        runs.append([(a + j) % n for j in range(length)])
    k = next(i for i, r in enumerate(runs) if len(r) >= 2)
    runs = runs[k + 1:] + runs[:k + 1]
    out = [0] * n
    top = n - 1
    for r in runs[:-1]:
        for pos, letter in zip(r, range(top - len(r) + 1, top + 1)):
            out[pos] = letter
        top -= len(r)
    last = runs[-1]
    out[last[0]], out[last[-1]] = 1, n
    for pos, letter in zip(last[1:-1], range(2, n)):
        out[pos] = letter
    return tuple(out)


def block_perm(L):
    """Permutation of [n] with descent composition L: increasing runs filled
    with successively smaller blocks of letters."""
    n = sum(L)
    out, top = [], n
    for part in L:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(out)
