"""The four real forms: parameters, dimensions, the psi bijection between the
two Weyl group labellings, the form matrices, the closed-orbit base basis and
the T_S eigenvector pool.

Signed-label convention (both for the base basis and for the eigenvector
pool, both listed as m vectors): label +k is the k-th vector, label -k the
(m+1-k)-th one, its b-dual partner. For odd m the middle vector sits at
position n+1 and never appears in one-line notation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .exact import ZERO, ONE, ExactScalar, combo, conjugate_vector, rank, unit_vector
from .weyl_core import EVEN, FULL, SignedPermutation, WeylFamily

KINDS = ("SpR", "SOStar", "SO_pq", "Sp_pq")


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class RealForm:
    kind: str
    n: int
    p: int | None = None
    q: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FormError(f"unknown real form {self.kind!r}")
        if self.n < 1:
            raise FormError("rank must be positive")
        if self.kind in ("SO_pq", "Sp_pq") and not (self.p >= self.q >= 1):
            raise FormError("need p >= q >= 1")

    @property
    def m(self) -> int:
        if self.kind == "SO_pq":
            return self.p + self.q
        return 2 * self.n

    @property
    def weyl_family(self) -> WeylFamily:
        if self.kind == "SOStar":
            return EVEN
        if self.kind == "SO_pq":
            return EVEN if self.m % 2 == 0 else FULL
        return FULL

    @property
    def code(self) -> str:
        if self.kind == "SpR":
            return f"sp2n-r:{self.n}"
        if self.kind == "SOStar":
            return f"so-star:{self.n}"
        if self.kind == "SO_pq":
            return f"so-pq:{self.p},{self.q}"
        return f"sp-pq:{self.p},{self.q}"

    def __str__(self):
        return {
            "SpR": f"Sp({2 * self.n},R)",
            "SOStar": f"SO*({2 * self.n})",
            "SO_pq": f"SO({self.p},{self.q})",
            "Sp_pq": f"Sp({2 * (self.p or 0)},{2 * (self.q or 0)})",
        }[self.kind]

    def perm(self, entries) -> SignedPermutation:
        return SignedPermutation(tuple(entries), self.weyl_family)

    def describe(self) -> dict:
        return {"form": self.code, "n": self.n, "p": self.p, "q": self.q}


def sp2n_r(n: int) -> RealForm:
    return RealForm("SpR", n)


def so_star(n: int) -> RealForm:
    if n < 2:
        raise FormError("SO*(2n) needs n >= 2")
    return RealForm("SOStar", n)


def so_pq(p: int, q: int) -> RealForm:
    if p + q < 3:
        raise FormError("SO(p,q) needs p+q >= 3")
    return RealForm("SO_pq", (p + q) // 2, p, q)


def sp_pq(p: int, q: int) -> RealForm:
    return RealForm("Sp_pq", p + q, p, q)


SpR, SOStar, SO_pq, Sp_pq = sp2n_r, so_star, so_pq, sp_pq

_CODE = re.compile(r"^(sp2n-r|so-star|so-pq|sp-pq):(\d+)(?:,(\d+))?$")


def parse_form(code: str) -> RealForm:
    mt = _CODE.match(code.strip())
    if not mt:
        raise FormError(f"bad form code {code!r}")
    tag, a, b = mt.group(1), int(mt.group(2)), mt.group(3)
    if tag in ("sp2n-r", "so-star"):
        if b is not None:
            raise FormError(f"{tag} takes a single parameter")
        return sp2n_r(a) if tag == "sp2n-r" else so_star(a)
    if b is None:
        raise FormError(f"{tag} needs p,q")
    return so_pq(a, int(b)) if tag == "so-pq" else sp_pq(a, int(b))


# ---- dimensions --------------------------------------------------------------

def _exact_div(a, b):
    if a % b:
        raise ArithmeticError(f"{a}/{b} is not integral")
    return a // b


def dim_flag_manifold(rf: RealForm) -> int:
    n = rf.n
    return n * n if rf.weyl_family is FULL else n * n - n


def dim_base_cycle(rf: RealForm) -> int:
    n, p, q = rf.n, rf.p, rf.q
    if rf.kind in ("SpR", "SOStar"):
        return n * (n - 1) // 2
    if rf.kind == "Sp_pq":
        return p * p + q * q
    if rf.m % 2 == 0:
        if q % 2 == 0:
            return _exact_div(p * (p - 2), 4) + _exact_div(q * (q - 2), 4)
        return _exact_div((p - 1) ** 2, 4) + _exact_div((q - 1) ** 2, 4)
    if q % 2 == 0:
        return _exact_div((p - 1) ** 2, 4) + _exact_div(q * (q - 2), 4)
    return _exact_div(p * (p - 2), 4) + _exact_div((q - 1) ** 2, 4)


def dim_dual_schubert(rf: RealForm) -> int:
    n, p, q = rf.n, rf.p, rf.q
    if rf.kind == "SpR":
        return n * (n + 1) // 2
    if rf.kind == "SOStar":
        return n * (n - 1) // 2
    if rf.kind == "Sp_pq":
        return 2 * p * q
    return p * q // 2 if (p * q) % 2 == 0 else (p * q - 1) // 2


# ---- psi: Iwasawa labels -> standard-torus labels -------------------------------

def psi_value(rf: RealForm, x: int) -> int:
    """Image of a single signed label."""
    s = 1 if x > 0 else -1
    a = abs(x)
    n, q = rf.n, rf.q
    if rf.kind == "SpR":
        return -x
    if rf.kind == "SOStar":
        if a == n and n % 2:
            return x
        return -x
    if rf.kind == "Sp_pq":
        if a > 2 * q:
            return x
        if a % 2:
            return s * (2 * q - (a + 1) // 2 + 1)
        return -s * (a // 2)
    # SO(p,q)
    if q % 2 == 0:
        if a > q:
            return x
        i = (a + 1) // 2
        return -s * (i if a % 2 else q - i + 1)
    if a < q:
        i = (a + 1) // 2
        return -s * (i if a % 2 else q - i)
    if a == q:
        # even m: +-q -> +-n; odd m: left fixed
        return s * n if rf.m % 2 == 0 else x
    return s * (a - 1) if rf.m % 2 == 0 else x


def psi(rf: RealForm, w: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(tuple(psi_value(rf, x) for x in w), w.family)


# ---- form matrices -------------------------------------------------------------

def _zeros(m):
    return [[ZERO] * m for _ in range(m)]


@lru_cache(maxsize=None)
def bilinear_matrix(rf: RealForm) -> tuple:
    """Gram matrix B of b, so that b(v, w) = v^T B w."""
    m, n = rf.m, rf.n
    B = _zeros(m)
    if rf.kind in ("SpR", "Sp_pq"):
        for i in range(m):
            B[i][m - 1 - i] = ONE if i < n else -ONE
    elif rf.kind == "SOStar":
        for i in range(m):
            B[i][m - 1 - i] = ONE
    else:
        q = rf.q
        for i in range(m):
            B[i][i] = -ONE if i < q else ONE
        if rf.p % 2 and q % 2:
            # odd/odd: the (q, q+1) block becomes off-diagonal
            B[q - 1][q - 1] = ZERO
            B[q][q] = ZERO
            B[q - 1][q] = ONE
            B[q][q - 1] = ONE
    return tuple(tuple(r) for r in B)


@lru_cache(maxsize=None)
def hermitian_matrix(rf: RealForm) -> tuple:
    """Gram matrix H of h, so that h(v, w) = v^T H conj(w)."""
    m, n = rf.m, rf.n
    H = _zeros(m)
    for i in range(m):
        if rf.kind in ("SpR", "SOStar"):
            neg = i >= n
        elif rf.kind == "Sp_pq":
            neg = i < rf.q or i >= m - rf.q
        else:
            neg = i < rf.q
        H[i][i] = -ONE if neg else ONE
    return tuple(tuple(r) for r in H)


def hermitian_signature(rf: RealForm) -> tuple:
    """(negative, positive) index of h."""
    if rf.kind in ("SpR", "SOStar"):
        return (rf.n, rf.n)
    if rf.kind == "Sp_pq":
        return (2 * rf.q, 2 * rf.p)
    return (rf.q, rf.p)


# ---- bases ------------------------------------------------------------------------

def _e(m, k, c=1):
    return unit_vector(m, k, c)


def _pair(m, a, c):
    """e_a + c e_{a+1}"""
    return combo(m, (a, 1), (a + 1, c))


@lru_cache(maxsize=None)
def iwasawa_basis(rf: RealForm) -> tuple:
    """Ordered basis of C^m whose flag is the closed-orbit base point."""
    m, n = rf.m, rf.n
    I = ExactScalar(0, 1)
    if rf.kind == "SpR":
        first = [combo(m, (j, 1), (m + 1 - j, -1)) for j in range(1, n + 1)]
        second = [combo(m, (j, 1), (m + 1 - j, 1)) for j in range(n, 0, -1)]
        return tuple(first + second)

    if rf.kind == "SOStar":
        # indices j and n+1-j are kept adjacent; c_j = +i on the smaller one
        order = []
        for a in range(1, n // 2 + 1):
            order += [a, n + 1 - a]
        coeff = {j: (I if j < n + 1 - j else -I) for j in order}
        first = [combo(m, (j, 1), (n + j, coeff[j])) for j in order]
        partners = [combo(m, (2 * n + 1 - j, 1), (n + 1 - j, -coeff[j])) for j in order]
        middle = []
        if n % 2:
            j0 = (n + 1) // 2
            first.append(_e(m, j0))
            partners.append(_e(m, n + j0))
        return tuple(first + partners[::-1])

    if rf.kind == "Sp_pq":
        q = rf.q
        first, second = [], []
        for r in range(1, q + 1):
            first += [combo(m, (r, 1), (2 * q - r + 1, 1)),
                      combo(m, (2 * n - 2 * q + r, 1), (2 * n - r + 1, -1))]
        first += [_e(m, k) for k in range(2 * q + 1, n + 1)]
        second += [_e(m, k) for k in range(n + 1, 2 * n - 2 * q + 1)]
        for r in range(q, 0, -1):
            second += [combo(m, (r, 1), (2 * q - r + 1, -1)),
                       combo(m, (2 * n - 2 * q + r, 1), (2 * n - r + 1, 1))]
        return tuple(first + second)

    p, q = rf.p, rf.q
    first = [combo(m, (i, 1), (2 * q + 1 - i, 1)) for i in range(1, q + 1)]
    last = [combo(m, (i, 1), (2 * q + 1 - i, -1)) for i in range(1, q + 1)]
    if p % 2 and q % 2:
        first[q - 1] = _e(m, q + 1)
        last[q - 1] = _e(m, q)
    if m % 2 == 0:
        starts, mid = range(2 * q + 1, m, 2), []
    else:
        starts, mid = range(2 * q + 2, m, 2), [_e(m, 2 * q + 1)]
    plus = [_pair(m, a, I) for a in starts]
    minus = [conjugate_vector(v) for v in plus]
    return tuple(first + plus + mid + minus[::-1] + last[::-1])


@lru_cache(maxsize=None)
def standard_fixed_eigenbasis(rf: RealForm) -> tuple:
    """The T_S eigenvector pool, as (vector, sign) pairs in label order, where
    sign is '+' for E^+ and '-' for E^- (the sign of the h-norm)."""
    m = rf.m
    I = ExactScalar(0, 1)
    if rf.kind != "SO_pq":
        vecs = [_e(m, k) for k in range(1, m + 1)]
    else:
        q = rf.q
        if m % 2 == 0 and q % 2 == 0:
            starts, extra_plus, extra_minus, mid = list(range(1, m, 2)), [], [], []
        elif m % 2 == 0:
            starts = list(range(1, q - 1, 2)) + list(range(q + 2, m, 2))
            extra_plus, extra_minus, mid = [_e(m, q)], [_e(m, q + 1)], []
        elif q % 2 == 0:
            starts = list(range(1, q, 2)) + list(range(q + 2, m, 2))
            extra_plus, extra_minus, mid = [], [], [_e(m, q + 1)]
        else:
            starts = list(range(1, q - 1, 2)) + list(range(q + 1, m, 2))
            extra_plus, extra_minus, mid = [], [], [_e(m, q)]
        plus = [_pair(m, a, I) for a in starts] + extra_plus
        minus = [_pair(m, a, -I) for a in starts] + extra_minus
        vecs = plus + mid + minus[::-1]
    if rf.weyl_family is EVEN and not _same_family(rf, vecs[:rf.n], iwasawa_basis(rf)[:rf.n]):
        # keep the identity flag in the same family of maximal isotropic
        # subspaces as the base flag, by exchanging the labels +n and -n
        n = rf.n
        vecs = list(vecs)
        vecs[n - 1], vecs[n] = vecs[n], vecs[n - 1]
    H = hermitian_matrix(rf)
    out = []
    for v in vecs:
        norm = sum((v[i] * H[i][i] * v[i].conjugate() for i in range(m)), ZERO)
        out.append((v, "+" if norm.re > 0 else "-"))
    return tuple(out)


def _same_family(rf, a, b) -> bool:
    """Two maximal isotropic subspaces of an even orthogonal space lie in the
    same family iff their intersection has dimension congruent to n mod 2."""
    meet = len(a) + len(b) - rank(list(a) + list(b))
    return (meet - rf.n) % 2 == 0


def label_index(rf: RealForm, label: int) -> int:
    """0-based position in an m-vector basis of a signed label."""
    return label - 1 if label > 0 else rf.m + label


@lru_cache(maxsize=None)
def _flag_domains(rf: RealForm) -> tuple:
    from .flag_oracle import enumerate_fixed_flags, flag_signature
    return tuple(sorted({flag_signature(rf, f) for f in enumerate_fixed_flags(rf)}))


def enumerate_flag_domains(rf: RealForm) -> list:
    """Signature vectors realized by T_S-fixed maximally isotropic flags."""
    return list(_flag_domains(rf))


def is_signature(text: str, n: int) -> bool:
    return len(text) == n and set(text) <= {"+", "-"}
