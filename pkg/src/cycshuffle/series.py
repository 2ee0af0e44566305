"""Truncated power series images of the (cyclic) shuffle algebras, and q-identities.

A ``SeriesElem`` is an x-homogeneous element N(t, y) / (1 - t)^(n+1) * x^n kept
as its first T+1 coefficients in t, each a polynomial in y.  The coefficient
of t^p is a polynomial in p of degree at most ``d``; agreement of the first
d+1 coefficients therefore decides equality exactly.
"""
from fractions import Fraction
from functools import lru_cache

from . import perm as P
from .cyc import CycPerm, ceval
from .errors import RangeViolation, TruncationMismatch
from .poly import ONE, T as t, Y as y, Poly2, QPoly, binom, gauss_binom, multichoose
from .shuffle import cyclic_shuffles, shuffles, shuffles_with_des

DEFAULT_T = 24


# -- y-polynomials as coefficient tuples --------------------------------------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _yadd(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def _ymul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return _trim(out)


def _yscale(a, c):
    return _trim(c * u for u in a)


class SeriesElem:
    __slots__ = ("x_grade", "coeffs", "d")

    def __init__(self, x_grade, coeffs, d):
        self.x_grade = x_grade
        self.coeffs = tuple(_trim(Fraction(v) for v in c) for c in coeffs)
        self.d = d

    @property
    def T(self):
        return len(self.coeffs) - 1

    @classmethod
    def from_rational(cls, numerator, n, T=DEFAULT_T):
        """Expand numerator / (1 - t)^(n+1) * x^n up to t^T.

        The numerator's t-degree must not exceed n, which keeps every
        coefficient a single polynomial in p of degree n from p = 0 on.
        """
        if numerator.t_degree > n:
            raise ValueError("numerator t-degree exceeds the denominator exponent")
        coeffs = []
        for p in range(T + 1):
            c = ()
            for a in range(min(p, numerator.t_degree) + 1):
                c = _yadd(c, _yscale(numerator.t_coeff(a), binom(p - a + n, n)))
            coeffs.append(c)
        return cls(n, coeffs, n)

    def truncate(self, T):
        return SeriesElem(self.x_grade, self.coeffs[:T + 1], self.d)

    def coeff(self, p):
        return self.coeffs[p]

    def __add__(self, other):
        if other == 0:
            return self
        if self.x_grade != other.x_grade:
            raise ValueError("can only add series of the same x-grade")
        n = min(len(self.coeffs), len(other.coeffs))
        return SeriesElem(self.x_grade, [_yadd(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n])],
                          max(self.d, other.d))

    __radd__ = __add__

    def scale(self, c):
        return SeriesElem(self.x_grade, [_yscale(a, Fraction(c)) for a in self.coeffs], self.d)

    def subs_y(self, value):
        value = Fraction(value)
        out = []
        for c in self.coeffs:
            out.append((sum(v * value ** i for i, v in enumerate(c)),))
        return SeriesElem(self.x_grade, out, self.d)

    def equals(self, other):
        """Exact equality, decided from the first d+1 coefficients."""
        if self.x_grade != other.x_grade:
            return False
        d = max(self.d, other.d)
        if min(self.T, other.T) < d + 1:
            raise TruncationMismatch(f"need at least {d + 2} coefficients to decide equality")
        return self.coeffs[:d + 1] == other.coeffs[:d + 1]

    def __eq__(self, other):
        return isinstance(other, SeriesElem) and self.x_grade == other.x_grade and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.x_grade, self.coeffs))

    def __repr__(self):
        return f"SeriesElem(x^{self.x_grade}, T={self.T}, d={self.d}, {list(self.coeffs[:4])}...)"


def hadamard(a, b):
    """Coefficientwise product in t, ordinary product in x and y."""
    d = a.d + b.d
    T = min(a.T, b.T)
    if T < d + 1:
        raise TruncationMismatch(f"truncation {T} too short for degree bound {d}")
    return SeriesElem(a.x_grade + b.x_grade, [_ymul(u, v) for u, v in zip(a.coeffs, b.coeffs)], d)


def unit(T=DEFAULT_T):
    """1 / (1 - t), the Hadamard unit and the image of the empty permutation."""
    return SeriesElem.from_rational(ONE, 0, T)


# -- the (pk, des) and (cpk, cdes) images ------------------------------------

def u_numerator(n, j, k):
    return t ** (j + 1) * (y + t) ** (k - j) * (ONE + y * t) ** (n - j - k - 1) * (ONE + y) ** (2 * j + 1)


def _check_u(n, j, k):
    if not (n >= 1 and 0 <= j <= (n - 1) // 2 and j <= k <= n - j - 1):
        raise RangeViolation(f"(n, j, k) = ({n}, {j}, {k}) is outside the (pk, des) range")


def u_pkdes(n, j, k, T=DEFAULT_T):
    _check_u(n, j, k)
    return SeriesElem.from_rational(u_numerator(n, j, k), n, T)


def _check_v(n, j, k):
    if not (n >= 2 and 1 <= j <= n // 2 and j <= k <= n - j):
        raise RangeViolation(f"(n, j, k) = ({n}, {j}, {k}) is outside the (cpk, cdes) range")


def v_numerator(n, j, k):
    """Numerator over (1 - t)^(n+1) of the four-term rotation sum."""
    _check_v(n, j, k)
    terms = [(j, j - 1, k), (j, j - 1, k - 1), (k - j, j, k - 1), (n - j - k, j, k)]
    out = Poly2()
    for c, jj, kk in terms:
        if c:
            out = out + c * u_numerator(n, jj, kk)
    return out


def v_closed_identity(n, j, k):
    """Check the product form of v against the four-term sum.

    The product form carries (y+t)^(k-j-1) and (1+yt)^(n-j-k-1), which can be
    negative powers; both sides are multiplied by the missing factors first.
    """
    _check_v(n, j, k)
    a = max(0, -(k - j - 1))
    b = max(0, -(n - j - k - 1))
    bracket = (j * (y + t) * (ONE + y * t) * (ONE + y + t + y * t)
               + ((k - j) * (ONE + y * t) + (n - j - k) * (y + t)) * t * (ONE + y) ** 2)
    closed = bracket * t ** j * (y + t) ** (k - j - 1 + a) * (ONE + y * t) ** (n - j - k - 1 + b) * (ONE + y) ** (2 * j - 1)
    lhs = v_numerator(n, j, k) * (y + t) ** a * (ONE + y * t) ** b
    return lhs == closed


def v_cpkcdes(n, j, k, T=DEFAULT_T):
    return SeriesElem.from_rational(v_numerator(n, j, k), n, T)


def pkdes_image(p, T=DEFAULT_T):
    if len(p) == 0:
        return unit(T)
    return u_pkdes(len(p), P.evaluate("pk", p), P.evaluate("des", p), T)


def cpkcdes_image(c, T=DEFAULT_T):
    c = c if isinstance(c, CycPerm) else CycPerm(c)
    if c.n == 0:
        return unit(T)
    if c.n == 1:
        return SeriesElem.from_rational(t * (ONE + y), 1, T)
    return v_cpkcdes(c.n, ceval("cpk", c), ceval("cdes", c), T)


# -- cpk and cdes forms -------------------------------------------------------

def cdes_numerator(n, k):
    if n <= 1:
        return t ** n
    if not 1 <= k <= n - 1:
        raise RangeViolation(f"cdes = {k} is impossible for length {n}")
    return k * t ** k + (n - k) * t ** (k + 1)


def cdes_series(n, k, T=DEFAULT_T):
    return SeriesElem.from_rational(cdes_numerator(n, k), n, T)


def cpk_numerator(n, j):
    if n == 0:
        return ONE
    if n == 1:
        return 2 * t
    if not 1 <= j <= n // 2:
        raise RangeViolation(f"cpk = {j} is impossible for length {n}")
    bracket = j * (ONE + t) ** 2 + 2 * (n - 2 * j) * t
    if n == 2 * j:
        # (1+t)^(-1) cancels against the bracket, which is then j(1+t)^2
        return j * (ONE + t) * (4 * t) ** j
    return bracket * (4 * t) ** j * (ONE + t) ** (n - 2 * j - 1)


def cpk_series(n, j, T=DEFAULT_T):
    return SeriesElem.from_rational(cpk_numerator(n, j), n, T)


class PSeqElem:
    """Function p -> rational (times x^n), kept as a formula and a table for p = 0..T."""

    __slots__ = ("x_grade", "formula", "table")

    def __init__(self, x_grade, formula, T=DEFAULT_T):
        self.x_grade = x_grade
        self.formula = formula
        self.table = tuple(Fraction(formula(p)) for p in range(T + 1))

    def __call__(self, p):
        return Fraction(self.formula(p))

    def pointwise(self, other):
        f, g = self.formula, other.formula
        return PSeqElem(self.x_grade + other.x_grade, lambda p: f(p) * g(p), min(len(self.table), len(other.table)) - 1)

    def __repr__(self):
        return f"PSeqElem(x^{self.x_grade}, {list(self.table[:6])}...)"


def cdes_pform(n, k, T=DEFAULT_T):
    if n == 0:
        return PSeqElem(0, lambda p: 1, T)
    if n >= 2 and not 1 <= k <= n - 1:
        raise RangeViolation(f"cdes = {k} is impossible for length {n}")
    return PSeqElem(n, lambda p: binom(p + n - k - 1, n - 1) * p, T)


def w_cpk(n, j, T=DEFAULT_T):
    if n == 0:
        return PSeqElem(0, lambda p: 1, T)
    if n >= 2 and not 1 <= j <= n // 2:
        raise RangeViolation(f"cpk = {j} is impossible for length {n}")

    def w(p):
        first = sum(multichoose(n + 1, k) * binom(n - 2 * j + 1, p - j - k) for k in range(p - j + 1))
        second = sum(multichoose(n + 1, k) * binom(n - 2 * j - 1, p - j - k - 1) for k in range(p - j))
        return j * 4 ** j * first + 2 * (n - 2 * j) * 4 ** j * second

    return PSeqElem(n, w, T)


def forms_agree(series, pseq):
    """Coefficient of t^p in the series equals the p-form value, for every stored p."""
    T = min(series.T, len(pseq.table) - 1)
    return all(sum(series.coeffs[p]) == pseq.table[p] for p in range(T + 1))


# -- homomorphism checks ------------------------------------------------------

def pkdes_hom(p, q, T=None):
    """Image of p times image of q equals the sum of images over p ⧢ q."""
    T = T if T is not None else 2 * (len(p) + len(q)) + 2
    lhs = hadamard(pkdes_image(p, T), pkdes_image(q, T))
    rhs = sum((pkdes_image(tau, T) for tau in shuffles(p, q)), 0)
    return lhs.equals(rhs)


def cpkcdes_hom(a, b, T=None):
    a = a if isinstance(a, CycPerm) else CycPerm(a)
    b = b if isinstance(b, CycPerm) else CycPerm(b)
    T = T if T is not None else 2 * (a.n + b.n) + 2
    lhs = hadamard(cpkcdes_image(a, T), cpkcdes_image(b, T))
    rhs = sum((cpkcdes_image(c, T) for c in cyclic_shuffles(a, b)), 0)
    return lhs.equals(rhs)


# -- q-identities -------------------------------------------------------------

def _qpoly_from_exponents(exps):
    counts = {}
    for e in exps:
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPoly()
    return QPoly(counts.get(i, 0) for i in range(max(counts) + 1))


def maj_gf(p, q):
    """Both sides of the shuffle identity for q^maj."""
    lhs = _qpoly_from_exponents(P.maj(tau) for tau in shuffles(p, q))
    rhs = gauss_binom(len(p) + len(q), len(p)).shift(P.maj(p) + P.maj(q))
    return lhs, rhs


def verify_maj_gf(p, q):
    lhs, rhs = maj_gf(p, q)
    return lhs == rhs


def majdes_rhs(p, q, k, printed=False):
    """Product side of the des-refined q^maj shuffle identity.

    With m = |p|, n = |q|, i = des p, j = des q the identity that holds is
    q^(maj p + maj q + (k-i)(k-j)) [m-i+j, k-i]_q [n-j+i, k-j]_q.
    ``printed=True`` gives the variant with m and n transposed,
    [m-j+i, k-j]_q [n-i+j, k-i]_q, which enumeration refutes (e.g. p = 1,
    q = 32, k = 1).
    """
    m, n = len(p), len(q)
    i, j = len(P.Des(p)), len(P.Des(q))
    if k < 0:
        return QPoly()
    return _majdes_binoms(m, n, i, j, k, printed).shift(P.maj(p) + P.maj(q) + (k - i) * (k - j))


@lru_cache(maxsize=None)
def _majdes_binoms(m, n, i, j, k, printed):
    if printed:
        return gauss_binom(m - j + i, k - j) * gauss_binom(n - i + j, k - i)
    return gauss_binom(m - i + j, k - i) * gauss_binom(n - j + i, k - j)


def majdes_gf(p, q, k, printed=False):
    lhs = _qpoly_from_exponents(P.maj(tau) for tau in shuffles_with_des(p, q, k))
    return lhs, majdes_rhs(p, q, k, printed)


def verify_majdes_gf(p, q, k, printed=False):
    lhs, rhs = majdes_gf(p, q, k, printed)
    return lhs == rhs


def verify_majdes_gf_all(p, q, printed=False):
    """The refined identity for every k at once, from one pass over p ⧢ q."""
    by_k = {}
    for tau in shuffles(p, q):
        d = P.Des(tau)
        by_k.setdefault(len(d), []).append(sum(d))
    top = len(p) + len(q)
    return all(_qpoly_from_exponents(by_k.get(k, ())) == majdes_rhs(p, q, k, printed)
               for k in range(-1, top + 2))


def adin_cdes(p, q):
    """Both sides of the cyclic descent generating function for [p] ⧢ [q].

    The right side is a series; multiplying it by (1-q)^(m+n) leaves a
    polynomial, so computing it to order 2(m+n)+2 and comparing with the
    left side (padded by zeros) decides the identity.
    """
    m, n = len(p), len(q)
    a, b = CycPerm(p), CycPerm(q)
    lhs = _qpoly_from_exponents(ceval("cdes", c) for c in cyclic_shuffles(a, b))
    ca, cb = ceval("cdes", a), ceval("cdes", b)
    order = 2 * (m + n) + 2
    series = QPoly([binom(k + m - ca - 1, m - 1) * binom(k + n - cb - 1, n - 1) * k for k in range(order + 1)])
    full = QPoly([1, -1]) ** (m + n) * series
    rhs = QPoly(full[i] for i in range(order + 1))
    return lhs, rhs


def verify_adin_cdes(p, q):
    lhs, rhs = adin_cdes(p, q)
    return lhs == rhs
