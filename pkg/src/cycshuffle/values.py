"""Canonical, hashable statistic values.

Integers stay plain ``int``.  Everything else is a tuple subclass whose
constructor puts the payload into canonical form, so equality and hashing are
plain tuple equality and hashing.  ``value_key`` gives the cross-type total
order (tag first, payload second) used when sorting multisets.
"""
from collections import Counter
from fractions import Fraction


class IntSet(tuple):
    """Finite set of integers, stored ascending."""

    __slots__ = ()

    def __new__(cls, items=()):
        return super().__new__(cls, sorted(set(items)))

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"


class Comp(tuple):
    """Composition (sequence of positive parts)."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if any(not isinstance(x, int) or x <= 0 for x in parts):
            raise ValueError(f"composition parts must be positive integers: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def least_rotation(word):
    word = tuple(word)
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))


class CycWord(tuple):
    """Word up to cyclic shift, stored as its lexicographically least rotation."""

    __slots__ = ()

    def __new__(cls, word=()):
        return super().__new__(cls, least_rotation(word))

    def __repr__(self):
        return "[" + ",".join(map(str, self)) + "]"


class Pair(tuple):
    __slots__ = ()

    def __new__(cls, first, second):
        return super().__new__(cls, (first, second))

    def __repr__(self):
        return f"({self[0]!r}, {self[1]!r})"


class Multiset(tuple):
    """Finite multiset, stored as ``(value, count)`` pairs sorted by ``value_key``."""

    __slots__ = ()

    def __new__(cls, values=()):
        counts = Counter(values)
        items = sorted(counts.items(), key=lambda vc: value_key(vc[0]))
        return super().__new__(cls, items)

    @classmethod
    def from_counts(cls, counts):
        items = sorted(((v, c) for v, c in dict(counts).items() if c), key=lambda vc: value_key(vc[0]))
        return tuple.__new__(cls, items)

    @property
    def total(self):
        return sum(c for _, c in self)

    def multiplicity(self, value):
        for v, c in self:
            if v == value:
                return c
        return 0

    def counts(self):
        return dict(self)

    def elements(self):
        for v, c in self:
            for _ in range(c):
                yield v

    def __repr__(self):
        body = ", ".join(repr(v) if c == 1 else f"{v!r}^{c}" for v, c in self)
        return "{{" + body + "}}"


_TAGS = {int: 0, IntSet: 1, Comp: 2, Pair: 3, Multiset: 4, CycWord: 5}


def value_key(v):
    """Sort key giving a total order across all canonical value kinds."""
    t = type(v)
    if t is int or t is bool:
        return (0, int(v))
    if t is Pair:
        return (3, (value_key(v[0]), value_key(v[1])))
    if t is Multiset:
        return (4, tuple((value_key(x), c) for x, c in v))
    if t in _TAGS:
        return (_TAGS[t], tuple(v))
    if isinstance(v, Fraction):
        return (0, v)
    raise TypeError(f"not a canonical statistic value: {v!r}")


def to_json(v):
    """Recursive JSON-ready form: sets, compositions and cyclic words become
    arrays, pairs become two-element arrays, multisets become value/count lists."""
    if isinstance(v, Multiset):
        return [{"value": to_json(x), "count": c} for x, c in v]
    if isinstance(v, Pair):
        return [to_json(v[0]), to_json(v[1])]
    if isinstance(v, tuple):
        return [to_json(x) for x in v]
    if isinstance(v, Fraction):
        return str(v)
    return v
