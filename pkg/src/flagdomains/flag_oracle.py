"""Independent geometric oracle: exact linear algebra over Q(i) for the forms
b and h, T_S-fixed flags, the split (base cycle) condition and Schubert cell
membership through rank matrices against the base flag F_I.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import (ZERO, ExactScalar, IncrementalRank, apply_rows, as_scalar,
                    inverse_matrix, rank, solve, to_gaussian_integers, vec_str)
from .real_forms import (RealForm, bilinear_matrix, hermitian_matrix, iwasawa_basis,
                         label_index, standard_fixed_eigenbasis)
from .weyl_core import SignedPermutation, enumerate_group

FIXED_FLAG_CAP = 5


class OracleError(ValueError):
    pass


# ---- forms -----------------------------------------------------------------

def _check_dim(rf, *vs):
    for v in vs:
        if len(v) != rf.m:
            raise OracleError(f"vector of length {len(v)} in C^{rf.m}")


def _gram(M, v, w):
    s = ZERO
    for i, vi in enumerate(v):
        if not vi:
            continue
        row = M[i]
        for j, wj in enumerate(w):
            if row[j] and wj:
                s = s + vi * row[j] * wj
    return s


def bilinear(rf: RealForm, v, w) -> ExactScalar:
    _check_dim(rf, v, w)
    return _gram(bilinear_matrix(rf), v, w)


def hermitian(rf: RealForm, v, w) -> ExactScalar:
    _check_dim(rf, v, w)
    return _gram(hermitian_matrix(rf), v, [x.conjugate() for x in w])


def hermitian_inertia(gram) -> tuple:
    """(negative, positive, zero) counts of an exact Hermitian matrix,
    by congruence diagonalization."""
    A = [list(map(as_scalar, r)) for r in gram]
    k = len(A)
    neg = pos = 0
    active = list(range(k))
    while active:
        piv = next((i for i in active if A[i][i]), None)
        if piv is None:
            hit = next(((i, j) for i in active for j in active if i != j and A[i][j]), None)
            if hit is None:
                break
            i, j = hit
            # v_i -> v_i + c v_j with c = A_ij makes the diagonal 2|A_ij|^2
            c = A[i][j]
            for r in range(k):
                A[i][r] = A[i][r] + c * A[j][r]
            for r in range(k):
                A[r][i] = A[r][i] + c.conjugate() * A[r][j]
            piv = i
        d = A[piv][piv]
        if d.re > 0:
            pos += 1
        else:
            neg += 1
        inv = d.inverse()
        for r in active:
            if r == piv or not A[r][piv]:
                continue
            f = A[r][piv] * inv
            for c in range(k):
                A[r][c] = A[r][c] - f * A[piv][c]
            for c in range(k):
                A[c][r] = A[c][r] - A[c][piv] * f.conjugate()
        active.remove(piv)
    return neg, pos, k - neg - pos


# ---- fixed flags -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class FixedFlag:
    """A T_S-fixed maximally isotropic flag, named by its signed labels into
    the eigenvector pool (one-line notation in the standard-torus Weyl group)."""
    labels: tuple
    rf: RealForm = field(compare=False, repr=False)

    @property
    def vectors(self) -> tuple:
        pool = standard_fixed_eigenbasis(self.rf)
        return tuple(pool[label_index(self.rf, x)][0] for x in self.labels)

    @property
    def signs(self) -> str:
        pool = standard_fixed_eigenbasis(self.rf)
        return "".join(pool[label_index(self.rf, x)][1] for x in self.labels)

    def full(self) -> tuple:
        return complete_flag(self.rf, self.labels, [v for v, _ in standard_fixed_eigenbasis(self.rf)])

    def label_text(self) -> str:
        return ",".join(str(x) for x in self.labels)

    def to_json(self) -> dict:
        return {"labels": self.label_text(), "vectors": [vec_str(v) for v in self.vectors]}


def complete_flag(rf: RealForm, labels, basis) -> tuple:
    """Full length-m flag basis from first-half labels into an m-vector basis."""
    first = [label_index(rf, x) for x in labels]
    mid = [rf.n] if rf.m % 2 else []
    second = [rf.m - 1 - k for k in reversed(first)]
    return tuple(basis[k] for k in first + mid + second)


def fixed_flag(rf: RealForm, labels) -> FixedFlag:
    labels = tuple(int(x) for x in labels)
    if sorted(abs(x) for x in labels) != list(range(1, rf.n + 1)):
        raise OracleError(f"labels {labels} are not a signed permutation of 1..{rf.n}")
    return FixedFlag(labels, rf)


def enumerate_fixed_flags(rf: RealForm, cap: int = FIXED_FLAG_CAP):
    """All T_S-fixed flags in G/B: the standard-torus Weyl orbit of the flag of
    the first n pool vectors."""
    if rf.n > cap:
        raise OracleError(f"n={rf.n} exceeds fixed-flag cap {cap}")
    for w in enumerate_group(rf.n, rf.weyl_family, cap=cap):
        yield FixedFlag(w.entries, rf)


def _vectors_of(rf, f):
    if isinstance(f, FixedFlag):
        return f.full()
    return tuple(f)


def is_max_isotropic(rf: RealForm, f) -> bool:
    """b(v_k, v_l) = 0 whenever k + l <= m (1-based), i.e. V_{m-i} is the
    b-orthogonal of V_i. A half flag (n vectors) is checked for isotropy."""
    vs = f.vectors if isinstance(f, FixedFlag) else tuple(f)
    m = rf.m
    if rank(vs) != len(vs):
        return False
    if len(vs) <= rf.n:
        return all(not bilinear(rf, vs[k], vs[l]) for k in range(len(vs)) for l in range(k, len(vs)))
    if len(vs) != m:
        raise OracleError("flag must list n or m vectors")
    return all(not bilinear(rf, vs[k], vs[l])
               for k in range(m) for l in range(m) if k + l + 2 <= m)


def flag_signature(rf: RealForm, f) -> str:
    """i-th sign: the sign h gains when passing from V_{i-1} to V_i."""
    vs = f.vectors if isinstance(f, FixedFlag) else tuple(f)[:rf.n]
    out = []
    prev = (0, 0, 0)
    for i in range(1, len(vs) + 1):
        gram = [[hermitian(rf, a, b) for b in vs[:i]] for a in vs[:i]]
        cur = hermitian_inertia(gram)
        if cur[2]:
            raise OracleError(f"h is degenerate on V_{i}")
        out.append("+" if cur[1] > prev[1] else "-")
        prev = cur
    return "".join(out)


@lru_cache(maxsize=None)
def _eigenspaces(rf: RealForm):
    pool = standard_fixed_eigenbasis(rf)
    plus = [v for v, s in pool if s == "+"]
    minus = [v for v, s in pool if s == "-"]
    return plus, minus


def _meet_dim(a, b):
    return len(a) + len(b) - rank(list(a) + list(b))


def is_split(rf: RealForm, f) -> bool:
    """Every step V_i equals (V_i cap E^+) + (V_i cap E^-)."""
    vs = f.vectors if isinstance(f, FixedFlag) else tuple(f)
    plus, minus = _eigenspaces(rf)
    for i in range(1, len(vs) + 1):
        if _meet_dim(vs[:i], plus) + _meet_dim(vs[:i], minus) != i:
            return False
    return True


# ---- Schubert cells -------------------------------------------------------------

def base_flag(rf: RealForm) -> tuple:
    return iwasawa_basis(rf)


def translate_base_flag(rf: RealForm, w: SignedPermutation) -> tuple:
    """The flag w(F_I), as a full basis."""
    return complete_flag(rf, w.entries, iwasawa_basis(rf))


def label_position(rf: RealForm, x: int) -> int:
    """1-based position in the length-m base flag of a signed label."""
    return label_index(rf, x) + 1


def schubert_rank_matrix(rf: RealForm, w: SignedPermutation) -> tuple:
    """r[i][j] = dim(V_i(wF_I) cap V_j(F_I)) for 0 <= i, j <= m."""
    m = rf.m
    pos = [label_position(rf, x) for x in w.entries]
    if m % 2:
        pos.append(rf.n + 1)
    pos += [m + 1 - p for p in reversed(pos[:rf.n])]
    return tuple(tuple(sum(1 for k in range(i) if pos[k] <= j) for j in range(m + 1))
                 for i in range(m + 1))


def rank_matrix(flag, reference) -> tuple:
    """dim(V_i cap U_j) by exact ranks of stacked spanning sets in the ambient
    space: dim = i + j - rank(V_i, U_j)."""
    m = len(reference)
    V = [to_gaussian_integers(v) for v in flag]
    U = [to_gaussian_integers(u) for u in reference]
    out = [[0] * (m + 1) for _ in range(m + 1)]
    base = IncrementalRank()
    for j in range(m + 1):
        if j:
            base.add(U[j - 1])
        ech = base.copy()
        for i in range(1, m + 1):
            ech.add(V[i - 1])
            out[i][j] = i + j - ech.rank
    return tuple(tuple(r) for r in out)


def in_schubert_cell(rf: RealForm, w: SignedPermutation, f) -> bool:
    return rank_matrix(_vectors_of(rf, f), iwasawa_basis(rf)) == schubert_rank_matrix(rf, w)


@lru_cache(maxsize=None)
def _base_coordinates(rf: RealForm):
    return inverse_matrix(iwasawa_basis(rf))


def relative_position(rf: RealForm, f) -> SignedPermutation:
    """The w with f in B_I.w(F_I), by echelon form of the first n flag vectors
    in base-flag coordinates, pivoting on the last nonzero coordinate."""
    R = _base_coordinates(rf)
    vs = f.vectors if isinstance(f, FixedFlag) else tuple(f)[:rf.n]
    m, n = rf.m, rf.n
    ech = IncrementalRank()
    out = []
    for v in vs:
        coords = to_gaussian_integers(apply_rows(R, v))
        c = ech.add(coords[::-1])
        if c is None:
            raise OracleError("flag vectors are dependent")
        p = m - c
        if p == n + 1 and m % 2:
            raise OracleError("isotropic flag cannot pivot on the middle vector")
        out.append(p if p <= n else -(m + 1 - p))
    return SignedPermutation(tuple(out), rf.weyl_family)


@lru_cache(maxsize=None)
def fixed_point_table(rf: RealForm) -> tuple:
    """(flag, cell, signature, split) for every T_S-fixed flag, with the cell
    found through rank matrices."""
    by_matrix = {}
    for w in enumerate_group(rf.n, rf.weyl_family):
        by_matrix[schubert_rank_matrix(rf, w)] = w
    ref = iwasawa_basis(rf)
    rows = []
    for f in enumerate_fixed_flags(rf):
        r = rank_matrix(f.full(), ref)
        w = by_matrix.get(r)
        if w is None:
            raise OracleError(f"fixed flag {f.label_text()} matches no Schubert cell")
        split = is_split(rf, f)
        sig = flag_signature(rf, f) if split else None
        rows.append((f, w, sig, split))
    return tuple(rows)


def oracle_points(rf: RealForm) -> dict:
    """w -> {alpha -> sorted fixed flags in S_w that are split with signature alpha}."""
    out = {}
    for f, w, sig, split in fixed_point_table(rf):
        if split:
            out.setdefault(w, {}).setdefault(sig, []).append(f)
    for d in out.values():
        for k in d:
            d[k].sort()
    return out


# ---- closed orbit certificate ----------------------------------------------------

def _real_nullspace(rows, ncol):
    rows = [list(r) for r in rows if any(r)]
    piv = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(ncol) if c not in piv):
        v = [Fraction(0)] * ncol
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def _real_rank(rows):
    return len(rows[0]) - len(_real_nullspace(rows, len(rows[0]))) if rows else 0


def _matvec(X, v):
    return tuple(sum((X[a][b] * v[b] for b in range(len(v)) if X[a][b] and v[b]), ZERO)
                 for a in range(len(v)))


def real_lie_algebra(rf: RealForm) -> list:
    """Real basis of g0 = {X : X^T B + B X = 0, X^* H + H X = 0}."""
    m = rf.m
    B, H = bilinear_matrix(rf), hermitian_matrix(rf)
    N = 2 * m * m

    def unit(k):
        a, b = divmod(k // 2, m)
        X = [[ZERO] * m for _ in range(m)]
        X[a][b] = ExactScalar(1) if k % 2 == 0 else ExactScalar(0, 1)
        return X

    def constraints(X):
        out = []
        for a in range(m):
            for b in range(m):
                s = t = ZERO
                for c in range(m):
                    s = s + X[c][a] * B[c][b] + B[a][c] * X[c][b]
                    t = t + X[c][a].conjugate() * H[c][b] + H[a][c] * X[c][b]
                out += [s.re, s.im, t.re, t.im]
        return out

    cols = [constraints(unit(k)) for k in range(N)]
    rows = [[cols[k][r] for k in range(N)] for r in range(len(cols[0]))]
    mats = []
    for v in _real_nullspace(rows, N):
        mats.append([[ExactScalar(v[2 * (a * m + b)], v[2 * (a * m + b) + 1]) for b in range(m)]
                     for a in range(m)])
    return mats


def _orbit_dim(mats, basis):
    m = len(basis)
    rows = []
    for X in mats:
        row = []
        for k in range(m):
            c = solve(basis, _matvec(X, basis[k]))
            for j in range(k + 1, m):
                row += [c[j].re, c[j].im]
        rows.append(row)
    return _real_rank(rows)


def _compact_part(rf, mats):
    plus, minus = _eigenspaces(rf)
    basis = plus + minus
    m = len(basis)
    npl = len(plus)
    cons = []
    for X in mats:
        row = []
        for i, u in enumerate(basis):
            c = solve(basis, _matvec(X, u))
            for j in (range(npl, m) if i < npl else range(npl)):
                row += [c[j].re, c[j].im]
        cons.append(row)
    N = len(mats)
    rows = [[cons[k][r] for k in range(N)] for r in range(len(cons[0]))]
    out = []
    for v in _real_nullspace(rows, N):
        out.append([[sum((mats[k][a][b] * v[k] for k in range(N) if v[k]), ZERO)
                     for b in range(m)] for a in range(m)])
    return out


def closed_orbit_certificate(rf: RealForm) -> dict:
    """Real dimensions of g0, k0 and of their orbits through F_I. The base flag
    lies on the closed G0-orbit exactly when both orbit dimensions agree."""
    g0 = real_lie_algebra(rf)
    k0 = _compact_part(rf, g0)
    U = iwasawa_basis(rf)
    return {"dim_g0": len(g0), "dim_k0": len(k0),
            "g0_orbit": _orbit_dim(g0, U), "k0_orbit": _orbit_dim(k0, U)}


# ---- verification driver -----------------------------------------------------------

def verify(rf: RealForm, theorem: str, caps: dict | None = None) -> dict:
    from .verification import run_theorem
    return run_theorem(rf, theorem, caps or {})
