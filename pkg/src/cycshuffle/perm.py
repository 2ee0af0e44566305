"""Linear permutations and the registry of linear permutation statistics.

A permutation is a plain ``tuple`` of distinct positive integers.  Positions
are 1-based everywhere, so ``Des((3, 1, 2)) == {1}``.  Cyclic statistics with
an ``L`` suffix are evaluated on a linear representative with position
``n + 1`` identified with position ``1``.
"""
import itertools
import re

from .errors import ElementOutOfRange, InvalidPermutation, UnknownStat
from .values import Comp, IntSet, Pair

Perm = tuple


def make_perm(letters):
    p = tuple(letters)
    for x in p:
        if not isinstance(x, int) or isinstance(x, bool) or x <= 0:
            raise InvalidPermutation(f"letters must be positive integers, got {x!r}")
    if len(set(p)) != len(p):
        dup = sorted({x for x in p if p.count(x) > 1})
        raise InvalidPermutation(f"repeated letters {dup} in {p}")
    return p


def parse_perm(text):
    """Parse ``"179624"`` (single-digit letters) or ``"1 4 7 10"`` / ``"1,4,7,10"``."""
    text = text.strip()
    if not text:
        return ()
    if re.search(r"[\s,]", text):
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
    else:
        tokens = list(text)
    try:
        return make_perm(int(t) for t in tokens)
    except ValueError as exc:
        if isinstance(exc, InvalidPermutation):
            raise
        raise InvalidPermutation(f"cannot parse permutation {text!r}") from None


def format_perm(p):
    if all(x < 10 for x in p):
        return "".join(map(str, p))
    return " ".join(map(str, p))


def standardize(p):
    rank = {x: i for i, x in enumerate(sorted(p), 1)}
    return tuple(rank[x] for x in p)


def perms(n):
    """All of S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


# -- symmetries -------------------------------------------------------------

def reverse(p):
    return tuple(reversed(p))


def complement(p):
    s = sorted(p)
    flip = dict(zip(s, reversed(s)))
    return tuple(flip[x] for x in p)


SYMMETRIES = {
    "r": reverse,
    "c": complement,
    "rc": lambda p: reverse(complement(p)),
}


def apply_symmetry(f, p):
    try:
        return SYMMETRIES[f](p)
    except KeyError:
        raise UnknownStat(f"unknown symmetry {f!r}; expected one of r, c, rc") from None


# -- compositions -----------------------------------------------------------

def comp_of_set(S, n):
    S = sorted(S)
    if any(s < 1 or s > n - 1 for s in S):
        raise ElementOutOfRange(f"{set(S)} is not a subset of [{n - 1}]")
    if n == 0:
        return Comp()
    cuts = [0] + S + [n]
    return Comp(b - a for a, b in zip(cuts, cuts[1:]))


def des_of_comp(L):
    return IntSet(itertools.accumulate(L[:-1])) if L else IntSet()


def descent_composition(p):
    return comp_of_set(Des(p), len(p))


# -- linear statistics ------------------------------------------------------

def Des(p):
    return IntSet(i for i in range(1, len(p)) if p[i - 1] > p[i])


def Pk(p):
    return IntSet(i for i in range(2, len(p)) if p[i - 2] < p[i - 1] > p[i])


def Val(p):
    return IntSet(i for i in range(2, len(p)) if p[i - 2] > p[i - 1] < p[i])


def Ddes(p):
    return IntSet(i for i in range(2, len(p)) if p[i - 2] > p[i - 1] > p[i])


def Lpk(p):
    extra = [1] if len(p) >= 2 and p[0] > p[1] else []
    return IntSet(list(Pk(p)) + extra)


def Rpk(p):
    n = len(p)
    extra = [n] if n >= 2 and p[n - 2] < p[n - 1] else []
    return IntSet(list(Pk(p)) + extra)


def Epk(p):
    # Exterior peaks pad with zeros at both ends, so a single letter is a peak.
    n = len(p)
    return IntSet(
        i for i in range(1, n + 1)
        if (i == 1 or p[i - 2] < p[i - 1]) and (i == n or p[i - 1] > p[i])
    )


def maj(p):
    return sum(Des(p))


def comaj(p):
    n = len(p)
    return sum(n - i for i in Des(p))


def br(p):
    n = len(p)
    if n < 2:
        return n
    # every interior peak or valley starts a new monotone run
    return 1 + len(Pk(p)) + len(Val(p))


def udr(p):
    return br(p) + (1 if len(p) >= 2 and p[0] > p[1] else 0)


def cDes(p):
    n = len(p)
    return IntSet(i for i in range(1, n + 1) if p[i - 1] > p[i % n])


def cPk(p):
    n = len(p)
    if n < 2:
        return IntSet()
    return IntSet(i for i in range(1, n + 1) if p[i - 2] < p[i - 1] > p[i % n])


def cVal(p):
    n = len(p)
    if n < 2:
        return IntSet()
    return IntSet(i for i in range(1, n + 1) if p[i - 2] > p[i - 1] < p[i % n])


def cmaj(p):
    return sum(cDes(p))


def ccomaj(p):
    n = len(p)
    return sum(n - i for i in cDes(p))


def cbr(p):
    """Number of maximal monotone runs read cyclically."""
    if len(p) < 2:
        return 0
    return len(cPk(p)) + len(cVal(p))


def _count(f):
    return lambda p: len(f(p))


STATS = {
    "Des": Des,
    "des": _count(Des),
    "maj": maj,
    "comaj": comaj,
    "Pk": Pk,
    "pk": _count(Pk),
    "Val": Val,
    "val": _count(Val),
    "Lpk": Lpk,
    "lpk": _count(Lpk),
    "Rpk": Rpk,
    "rpk": _count(Rpk),
    "Epk": Epk,
    "epk": _count(Epk),
    "Ddes": Ddes,
    "ddes": _count(Ddes),
    "br": br,
    "udr": udr,
    "cDesL": cDes,
    "cdesL": _count(cDes),
    "cPkL": cPk,
    "cpkL": _count(cPk),
    "cValL": cVal,
    "cvalL": _count(cVal),
    "cmajL": cmaj,
    "ccomajL": ccomaj,
    "cbrL": cbr,
}


def check_stat(st):
    """Validate a statistic id: a registry name or a 2-tuple of ids."""
    if isinstance(st, tuple):
        if len(st) != 2:
            raise UnknownStat(f"pair statistic must have two components: {st!r}")
        check_stat(st[0])
        check_stat(st[1])
    elif st not in STATS:
        raise UnknownStat(f"unknown statistic {st!r}")
    return st


def evaluate(st, p):
    """Value of the statistic ``st`` on ``p``; pairs evaluate componentwise."""
    if isinstance(st, tuple):
        return Pair(evaluate(st[0], p), evaluate(st[1], p))
    try:
        f = STATS[st]
    except (KeyError, TypeError):
        raise UnknownStat(f"unknown statistic {st!r}") from None
    return f(p)


def split_top_level(text, sep=","):
    """Split on ``sep`` outside parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [s.strip() for s in parts]


def _strip_parens(text):
    text = text.strip()
    while text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    return text


def parse_stat(text):
    """``"des"`` -> ``"des"``; ``"des,maj"`` -> ``("des", "maj")``."""
    text = _strip_parens(text)
    parts = split_top_level(text)
    if len(parts) == 1:
        return check_stat(parts[0])
    if len(parts) == 2:
        return (parse_stat(parts[0]), parse_stat(parts[1]))
    raise UnknownStat(f"only pairs are supported, got {len(parts)} components in {text!r}")


def stat_name(st):
    if isinstance(st, tuple):
        return f"({stat_name(st[0])},{stat_name(st[1])})"
    return st
