"""Exact polynomials over the rationals: univariate in q, bivariate in (t, y)."""
from fractions import Fraction
from functools import lru_cache
from math import comb


def binom(a, b):
    """Binomial coefficient with an arbitrary integer top and the usual zero for b < 0.

    ``binom(-1, r) == (-1) ** r``, which is what the p-indexed peak formula
    needs when its top argument goes negative.
    """
    if b < 0:
        return 0
    if a >= 0:
        return comb(a, b)
    return (-1) ** b * comb(b - a - 1, b)


def multichoose(n, k):
    """Number of k-element multisubsets of an n-set."""
    return binom(n + k - 1, k) if k >= 0 else 0


class QPoly:
    """Polynomial in q with exact rational coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [x if isinstance(x, (int, Fraction)) else Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, e, c=1):
        return cls([0] * e + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def shift(self, e):
        """Multiply by q^e."""
        return QPoly((0,) * e + self.coeffs) if self.coeffs else self

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        other = _qp(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_qp(other))

    def __mul__(self, other):
        other = _qp(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = QPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms)


def _qp(x):
    return x if isinstance(x, QPoly) else QPoly([x])


@lru_cache(maxsize=None)
def gauss_binom(a, b):
    """Gaussian binomial [a choose b]_q; zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return QPoly()
    # row-by-row q-Pascal: [a,b] = [a-1,b-1] + q^b [a-1,b]
    row = [QPoly([1])]
    for r in range(1, a + 1):
        new = [QPoly([1])]
        for c in range(1, r):
            new.append(row[c - 1] + QPoly.monomial(c) * row[c])
        new.append(QPoly([1]))
        row = new
    return row[b]


class Poly2:
    """Polynomial in t and y, as a dict {(t_exp, y_exp): Fraction} without zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for k, v in (terms or {}).items():
            v = Fraction(v)
            if v:
                t[k] = v
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def __add__(self, other):
        other = _p2(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly2({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_p2(other))

    def __mul__(self, other):
        other = _p2(other)
        out = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                k = (a + c, b + d)
                out[k] = out.get(k, 0) + u * v
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly2.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly2.const(other)
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def t_degree(self):
        return max((a for a, _ in self.terms), default=-1)

    def t_coeff(self, a):
        """Coefficient of t^a as a y-coefficient tuple, low degree first."""
        ys = {b: v for (aa, b), v in self.terms.items() if aa == a}
        if not ys:
            return ()
        return tuple(ys.get(b, Fraction(0)) for b in range(max(ys) + 1))

    def subs_y(self, y):
        out = {}
        for (a, b), v in self.terms.items():
            out[(a, 0)] = out.get((a, 0), 0) + v * Fraction(y) ** b
        return Poly2(out)

    def least_monomial(self):
        """Least (t_exp, y_exp) under lex order by t exponent then y exponent."""
        return min(self.terms) if self.terms else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), v in sorted(self.terms.items()):
            parts.append(f"{v}*t^{a}*y^{b}")
        return " + ".join(parts)


def _p2(x):
    return x if isinstance(x, Poly2) else Poly2.const(x)


T = Poly2({(1, 0): 1})
Y = Poly2({(0, 1): 1})
ONE = Poly2.const(1)
