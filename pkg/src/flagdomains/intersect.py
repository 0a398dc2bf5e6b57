"""Intersection points of complementary-dimension Schubert varieties with
base cycles, produced by the switching constructions and realized as explicit
T_S-fixed flags grouped by their computed signature."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .classify import (ClassifyError, is_dense, is_generous, is_harmonic, is_major,
                       super_dense)
from .flag_oracle import FixedFlag, fixed_flag, flag_signature
from .real_forms import RealForm, enumerate_flag_domains, is_signature, psi
from .weyl_core import SignedPermutation


class IntersectError(ValueError):
    pass


@dataclass(frozen=True)
class IntersectionReport:
    rf: RealForm
    w: SignedPermutation
    points: tuple        # sorted FixedFlags
    by_domain: dict      # signature -> tuple of FixedFlags

    @property
    def counts(self) -> dict:
        sizes = sorted({len(v) for v in self.by_domain.values()})
        return {
            "total_points": len(self.points),
            "domains_touched": len(self.by_domain),
            "points_per_domain": sizes[0] if len(sizes) == 1 else sizes,
        }

    def to_json(self) -> dict:
        return {
            "w": str(self.w),
            "counts": self.counts,
            "by_domain": {a: [f.to_json() for f in fs] for a, fs in sorted(self.by_domain.items())},
        }


def _report(rf, w, label_words) -> IntersectionReport:
    flags = sorted({fixed_flag(rf, lw) for lw in label_words})
    groups = {}
    for f in flags:
        groups.setdefault(flag_signature(rf, f), []).append(f)
    return IntersectionReport(rf, w, tuple(flags),
                              {a: tuple(v) for a, v in sorted(groups.items())})


def _sign_variants(w, flippable):
    """Words obtained from w by negating any subset of the given positions."""
    ents = list(w)
    for mask in product((False, True), repeat=len(flippable)):
        out = list(ents)
        for k, flip in zip(flippable, mask):
            if flip:
                out[k] = -out[k]
        yield tuple(out)


def _check_element(rf, w):
    if w.family is not rf.weyl_family or w.n != rf.n:
        raise IntersectError(f"{w} is not an element of the Weyl group of {rf}")


def supset(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    """Sp(2n,R): every way of turning negative entries of a generous w positive,
    read as a flag in the standard basis."""
    if rf.kind != "SpR":
        raise IntersectError("supset is defined for Sp(2n,R)")
    _check_element(rf, w)
    if not is_generous(w):
        raise IntersectError(f"{w} is not generous")
    flippable = [k for k, x in enumerate(w) if x < 0]
    return _report(rf, w, _sign_variants(w, flippable))


def supset_sostar(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    """SO*(2n): as for Sp(2n,R) on the super dense element, also flipping n
    when n is odd; only even sign parities survive."""
    if rf.kind != "SOStar":
        raise IntersectError("supset_sostar is defined for SO*(2n)")
    _check_element(rf, w)
    if w != super_dense(rf.n):
        raise IntersectError(f"{w} is not super dense")
    flippable = [k for k, x in enumerate(w) if x < 0 or abs(x) == rf.n]
    words = [v for v in _sign_variants(w, flippable) if sum(1 for x in v if x < 0) % 2 == 0]
    return _report(rf, w, words)


def _switches(left, right, double_negative=False):
    """The four ways a pair (left, right) may be switched in place."""
    a, b = abs(left), abs(right)
    if double_negative:
        return [(-a, -b), (-b, -a), (b, a), (a, b)]
    return [(left, right), (right, left), (-right, -left), (-left, -right)]


def _switched_words(w, pairs):
    """pairs: list of (value, value, double_negative) present in w."""
    ents = list(w)
    slots = []
    for x, y, dn in pairs:
        i, j = ents.index(x), ents.index(y)
        if i > j:
            i, j, x, y = j, i, y, x
        slots.append((i, j, _switches(x, y, dn)))
    for choice in product(*(s[2] for s in slots)):
        out = list(ents)
        for (i, j, _), (u, v) in zip(slots, choice):
            out[i], out[j] = u, v
        yield tuple(out)


def _harmonic_pairs(rf, w):
    q = rf.q
    out = []
    top = q // 2 if q % 2 == 0 else (q - 1) // 2
    for i in range(1, top + 1):
        partner = 2 * i if 2 * i in w.entries else -2 * i
        out.append((-(2 * i - 1), partner, partner < 0))
    return out


def swite(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    """SO(p,q), q even: psi of all switchings of the pairs (-(2i-1), +-2i)."""
    if rf.kind != "SO_pq" or rf.q % 2:
        raise IntersectError("swite is defined for SO(p,q) with q even")
    return _harmonic_report(rf, w)


def swito(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    """SO(p,q), q odd: psi of all switchings of the pairs (-(2i-1), 2i)."""
    if rf.kind != "SO_pq" or rf.q % 2 == 0:
        raise IntersectError("swito is defined for SO(p,q) with q odd")
    return _harmonic_report(rf, w)


def _harmonic_report(rf, w):
    _check_element(rf, w)
    if not is_harmonic(rf, w):
        raise IntersectError(f"{w} is not harmonic")
    words = (psi(rf, SignedPermutation(v, rf.weyl_family)).entries
             for v in _switched_words(w, _harmonic_pairs(rf, w)))
    return _report(rf, w, words)


def swit(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    """Sp(2p,2q): psi of all switchings of the pairs (-2i, 2i-1)."""
    if rf.kind != "Sp_pq":
        raise IntersectError("swit is defined for Sp(2p,2q)")
    _check_element(rf, w)
    if not is_major(rf, w):
        raise IntersectError(f"{w} is not major")
    pairs = []
    for i in range(1, rf.q + 1):
        if -2 * i not in w.entries or (2 * i - 1) not in w.entries:
            raise IntersectError(f"{w} does not contain the pair ({-2 * i},{2 * i - 1})")
        pairs.append((-2 * i, 2 * i - 1, False))
    words = (psi(rf, SignedPermutation(v, rf.weyl_family)).entries
             for v in _switched_words(w, pairs))
    return _report(rf, w, words)


def intersection_report(rf: RealForm, w: SignedPermutation) -> IntersectionReport:
    if rf.kind == "SpR":
        return supset(rf, w)
    if rf.kind == "SOStar":
        return supset_sostar(rf, w)
    if rf.kind == "SO_pq":
        return swite(rf, w) if rf.q % 2 == 0 else swito(rf, w)
    return swit(rf, w)


def intersection_points(rf: RealForm, w: SignedPermutation, alpha: str) -> set:
    if not is_signature(alpha, rf.n) or alpha not in enumerate_flag_domains(rf):
        raise IntersectError(f"{alpha!r} is not a flag domain of {rf}")
    return set(intersection_report(rf, w).by_domain.get(alpha, ()))
