"""Exact arithmetic over the Gaussian rationals Q(i).

Scalars are kept as pairs of Fractions. Rank computations go through a
fraction-free elimination over Z[i] (rows are first cleared of denominators),
which keeps everything in Python integers.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm


class ExactScalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        o = as_scalar(other)
        return ExactScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other)
        return ExactScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        o = as_scalar(other)
        return ExactScalar(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return ExactScalar(-self.re, -self.im)

    def conjugate(self):
        return ExactScalar(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        d = self.norm()
        if not d:
            raise ZeroDivisionError("inverse of zero")
        return ExactScalar(self.re / d, -self.im / d)

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __eq__(self, other):
        if not isinstance(other, (ExactScalar, int, Fraction)):
            return NotImplemented
        o = as_scalar(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{_coef(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_coef(abs(self.im))}i"

    def to_json(self):
        return [str(self.re), str(self.im)]


def _coef(x):
    if x == 1:
        return ""
    if x == -1:
        return "-"
    return str(x)


def as_scalar(x) -> ExactScalar:
    return x if isinstance(x, ExactScalar) else ExactScalar(x)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


# ---- vectors ---------------------------------------------------------------

def unit_vector(m: int, k: int, coeff=1) -> tuple:
    """c * e_k in C^m (k is 1-based)."""
    v = [ZERO] * m
    v[k - 1] = as_scalar(coeff)
    return tuple(v)


def vec_add(*vs) -> tuple:
    return tuple(reduce(lambda a, b: a + b, col) for col in zip(*vs))


def vec_scale(c, v) -> tuple:
    c = as_scalar(c)
    return tuple(c * x for x in v)


def combo(m: int, *terms) -> tuple:
    """Sum of coeff * e_k for (k, coeff) pairs."""
    v = [ZERO] * m
    for k, c in terms:
        v[k - 1] = v[k - 1] + as_scalar(c)
    return tuple(v)


def vec_str(v) -> str:
    parts = []
    for k, c in enumerate(v, 1):
        if not c:
            continue
        s = str(c)
        if c.re and c.im:
            s = f"({s})"
        elif s == "1":
            s = ""
        elif s == "-1":
            s = "-"
        parts.append(f"{s}e{k}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def conjugate_vector(v) -> tuple:
    return tuple(x.conjugate() for x in v)


def solve(basis, target):
    """Coordinates c with sum_k c_k * basis[k] = target (basis must be a basis)."""
    m = len(basis)
    rows = [[basis[k][i] for k in range(m)] + [target[i]] for i in range(m)]
    return _gauss_jordan(rows, m)


def _gauss_jordan(rows, ncols):
    m = len(rows)
    for c in range(ncols):
        p = next((i for i in range(c, m) if rows[i][c]), None)
        if p is None:
            raise ValueError("singular system")
        rows[c], rows[p] = rows[p], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for i in range(m):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return [r[ncols] for r in rows]


def inverse_matrix(cols):
    """Given basis vectors (as columns), return rows R with R @ v = coordinates."""
    m = len(cols)
    rows = [[cols[k][i] for k in range(m)] + [ONE if j == i else ZERO for j in range(m)]
            for i in range(m)]
    for c in range(m):
        p = next((i for i in range(c, m) if rows[i][c]), None)
        if p is None:
            raise ValueError("singular basis")
        rows[c], rows[p] = rows[p], rows[c]
        inv = rows[c][c].inverse()
        rows[c] = [x * inv for x in rows[c]]
        for i in range(m):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return [tuple(r[m:]) for r in rows]


def apply_rows(R, v) -> tuple:
    return tuple(reduce(lambda a, b: a + b, (r * x for r, x in zip(row, v) if r and x), ZERO)
                 for row in R)


# ---- fraction-free rank over Z[i] ------------------------------------------

def to_gaussian_integers(v):
    """Scale a Q(i) vector to Z[i]; entries become (re, im) int pairs."""
    den = 1
    for x in v:
        den = lcm(den, x.re.denominator, x.im.denominator)
    return [(int(x.re * den), int(x.im * den)) for x in v]


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _reduce_content(row):
    g = 0
    for a, b in row:
        g = gcd(g, a, b)
    if g > 1:
        return [(a // g, b // g) for a, b in row]
    return row


class IncrementalRank:
    """Row echelon form over Z[i], built one row at a time.

    Pivots are the first nonzero column of each stored row; a new row is
    reduced by cross-multiplication (no division), then stored if nonzero.
    """

    def __init__(self):
        self.rows = {}  # pivot column -> row

    @property
    def rank(self):
        return len(self.rows)

    def copy(self):
        twin = IncrementalRank()
        twin.rows = dict(self.rows)
        return twin

    def add(self, row):
        """Insert a row; return its pivot column, or None if it was dependent."""
        row = list(row)
        while True:
            c = next((j for j, x in enumerate(row) if x != (0, 0)), None)
            if c is None:
                return None
            p = self.rows.get(c)
            if p is None:
                self.rows[c] = _reduce_content(row)
                return c
            a, b = p[c], row[c]
            row = _reduce_content([(x[0] - y[0], x[1] - y[1])
                                   for x, y in zip((_gmul(a, r) for r in row),
                                                   (_gmul(b, s) for s in p))])


def rank(vectors) -> int:
    """Exact rank of a list of Q(i) vectors."""
    ech = IncrementalRank()
    for v in vectors:
        ech.add(to_gaussian_integers(v))
    return ech.rank
