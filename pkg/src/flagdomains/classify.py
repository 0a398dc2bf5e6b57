"""Permutation taxonomy: generous / dense / harmonic / major, their
complementary-dimension ("super" / "perfect") refinements, and the counting
formulas for the perfect sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from .real_forms import RealForm, dim_dual_schubert
from .weyl_core import (EVEN, FULL, SignedPermutation, WeylError, length_bfs,
                        length_paper, negatives)

PERFECT_CAP = 12


class ClassifyError(ValueError):
    pass


def _need_family(w, family):
    if w.family is not family:
        raise ClassifyError(f"expected a {family.value} element")


def _need_kind(rf, kind):
    if rf.kind != kind:
        raise ClassifyError(f"{rf} is not of kind {kind}")


# ---- Sp(2n,R) ---------------------------------------------------------------------

def is_generous(w: SignedPermutation) -> bool:
    _need_family(w, FULL)
    return all(x < 0 for x in w)


def super_generous(n: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(-n, 0)), FULL)


# ---- SO*(2n) ------------------------------------------------------------------------

def is_dense(w: SignedPermutation) -> bool:
    """n even: every entry negative. n odd: every entry negative except the
    one of modulus n, which is positive."""
    _need_family(w, EVEN)
    n = w.n
    if n % 2 == 0:
        return all(x < 0 for x in w)
    return all((x > 0) if abs(x) == n else (x < 0) for x in w)


def is_dense_by_position(w: SignedPermutation) -> bool:
    """Alternative reading for odd n: the entry in the last position is the
    positive one."""
    _need_family(w, EVEN)
    if w.n % 2 == 0:
        return all(x < 0 for x in w)
    return w[-1] > 0 and all(x < 0 for x in w.entries[:-1])


def super_dense(n: int) -> SignedPermutation:
    if n < 2:
        raise ClassifyError("super dense element needs n >= 2")
    if n % 2 == 0:
        return SignedPermutation(tuple(range(-n, 0)), EVEN)
    return SignedPermutation((n,) + tuple(range(-(n - 1), 0)), EVEN)


# ---- SO(p,q) ------------------------------------------------------------------------

def _positions(w):
    return {x: k for k, x in enumerate(w)}


def is_harmonic(rf: RealForm, w: SignedPermutation) -> bool:
    _need_kind(rf, "SO_pq")
    q = rf.q
    pos = _positions(w)
    if q % 2 == 0:
        for i in range(1, q // 2 + 1):
            lead = -(2 * i - 1)
            partner = 2 * i if 2 * i in pos else -2 * i
            if lead not in pos or pos[lead] > pos[partner]:
                return False
        return True
    if w[-1] != -q:
        return False
    for i in range(1, (q - 1) // 2 + 1):
        lead = -(2 * i - 1)
        if lead not in pos or 2 * i not in pos or pos[lead] > pos[2 * i]:
            return False
    return True


def _place_pairs(n, pairs, boxes=None):
    """All ways to put the given (left, right) pairs, in order, into n boxes so
    that each pair is adjacent once earlier pairs are ignored. Yields lists of
    length n with None in the untouched boxes."""
    if boxes is None:
        boxes = [None] * n
    if not pairs:
        yield list(boxes)
        return
    left, right = pairs[0]
    # slots not used by earlier pairs; includes boxes the remainder fills later
    free = [k for k in range(len(boxes)) if boxes[k] is None]
    for a, b in zip(free, free[1:]):
        boxes[a], boxes[b] = left, right
        yield from _place_pairs(n, pairs[1:], boxes)
        boxes[a] = boxes[b] = None


def _fill_remainder(boxes, moduli):
    out = list(boxes)
    empty = [k for k in range(len(out)) if out[k] is None]
    for k, x in zip(empty, sorted(moduli)):
        out[k] = x
    return out


def _span(word, values):
    ks = [k for k, x in enumerate(word) if x in values]
    return min(ks), max(ks)


def _harmonic_even_words(rf):
    n, q = rf.n, rf.q
    allow_double_negative = rf.weyl_family is EVEN
    kinds = (("mixed", "negative") if allow_double_negative else ("mixed",))
    npairs = q // 2
    remainder = list(range(q + 1, n + 1))

    def choose(j, acc):
        if j > npairs:
            yield list(acc)
            return
        for kind in kinds:
            acc.append(kind)
            yield from choose(j + 1, acc)
            acc.pop()

    for kinds_chosen in choose(1, []):
        pairs = []
        for j, kind in enumerate(kinds_chosen, 1):
            pairs.append((-(2 * j - 1), 2 * j if kind == "mixed" else -2 * j))
        for boxes in _place_pairs(n, pairs):
            word = _fill_remainder(boxes, remainder)
            neg = negatives(word)
            if neg % 2 and rf.weyl_family is EVEN:
                if not remainder or n not in word:
                    continue
                word[word.index(n)] = -n
            if not _double_negative_rules(word, pairs, remainder):
                continue
            yield tuple(word)


def _double_negative_rules(word, pairs, remainder):
    spans = [_span(word, set(p)) for p in pairs]
    rem_pos = [k for k, x in enumerate(word) if abs(x) in remainder]
    for j, (lead, partner) in enumerate(pairs):
        if partner > 0:
            continue
        lo, hi = spans[j]
        # every later pair lies entirely to the left
        if any(spans[i][1] > lo for i in range(j + 1, len(pairs))):
            return False
        # earlier double-negative pairs lie to the right, in decreasing order of index
        right = [i for i in range(j) if pairs[i][1] < 0]
        if any(spans[i][0] < hi for i in right):
            return False
        starts = [spans[i][0] for i in sorted(right, reverse=True)]
        if starts != sorted(starts):
            return False
        # the remainder lies to the left
        if any(k > lo for k in rem_pos):
            return False
    return True


def _harmonic_odd_words(rf):
    n, q = rf.n, rf.q
    pairs = [(-(2 * j - 1), 2 * j) for j in range(1, (q - 1) // 2 + 1)]
    remainder = list(range(q + 1, n + 1))
    for boxes in _place_pairs(n - 1, pairs):
        word = _fill_remainder(boxes + [-q], remainder)
        if negatives(word) % 2 and rf.weyl_family is EVEN:
            if n not in word:
                continue
            word[word.index(n)] = -n
        yield tuple(word)


@lru_cache(maxsize=None)
def _perfect_harmonic(rf: RealForm) -> tuple:
    if rf.n > PERFECT_CAP:
        raise ClassifyError(f"n={rf.n} exceeds cap {PERFECT_CAP}")
    words = _harmonic_even_words(rf) if rf.q % 2 == 0 else _harmonic_odd_words(rf)
    return tuple(sorted({SignedPermutation(wd, rf.weyl_family) for wd in words}))


def generate_perfect_harmonic(rf: RealForm) -> list:
    _need_kind(rf, "SO_pq")
    return list(_perfect_harmonic(rf))


def is_perfect_harmonic(rf: RealForm, w: SignedPermutation) -> bool:
    return w in set(generate_perfect_harmonic(rf))


def perfect_harmonic_count_formula(rf: RealForm) -> int:
    _need_kind(rf, "SO_pq")
    n, q = rf.n, rf.q
    if q % 2:
        return prod(n - 2 - 2 * k for k in range((q - 1) // 2))
    top = n if rf.m % 2 == 0 else n - 1
    return prod(top - 2 * k for k in range(q // 2))


# ---- Sp(2p,2q) -------------------------------------------------------------------------

def is_major(rf: RealForm, w: SignedPermutation) -> bool:
    _need_kind(rf, "Sp_pq")
    pos = _positions(w)

    def before(lead, partner_mod):
        partner = partner_mod if partner_mod in pos else -partner_mod
        return lead in pos and pos[lead] < pos[partner]

    return all(before(-(2 * i - 1), 2 * i) or before(-2 * i, 2 * i - 1)
               for i in range(1, rf.q + 1))


@lru_cache(maxsize=None)
def _perfect_major(rf: RealForm) -> tuple:
    if rf.n > PERFECT_CAP:
        raise ClassifyError(f"n={rf.n} exceeds cap {PERFECT_CAP}")
    n, q = rf.n, rf.q
    pairs = [(-2 * j, 2 * j - 1) for j in range(1, q + 1)]
    remainder = list(range(2 * q + 1, n + 1))
    words = {tuple(_fill_remainder(b, remainder)) for b in _place_pairs(n, pairs)}
    return tuple(sorted(SignedPermutation(wd, FULL) for wd in words))


def generate_perfect_major(rf: RealForm) -> list:
    _need_kind(rf, "Sp_pq")
    return list(_perfect_major(rf))


def is_perfect_major(rf: RealForm, w: SignedPermutation) -> bool:
    return w in set(generate_perfect_major(rf))


def perfect_major_count_formula(rf: RealForm) -> int:
    _need_kind(rf, "Sp_pq")
    return prod(rf.n - 1 - 2 * k for k in range(rf.q))


# ---- dispatch -----------------------------------------------------------------------------

def nonempty_predicate(rf: RealForm):
    """The per-form condition for a Schubert cell to meet some flag domain."""
    return {
        "SpR": lambda w: is_generous(w),
        "SOStar": lambda w: is_dense(w),
        "SO_pq": lambda w: is_harmonic(rf, w),
        "Sp_pq": lambda w: is_major(rf, w),
    }[rf.kind]


def complementary_elements(rf: RealForm) -> list:
    """The super / perfect elements of the form."""
    if rf.kind == "SpR":
        return [super_generous(rf.n)]
    if rf.kind == "SOStar":
        return [super_dense(rf.n)]
    if rf.kind == "SO_pq":
        return generate_perfect_harmonic(rf)
    return generate_perfect_major(rf)


def perfect_count_formula(rf: RealForm) -> int | None:
    if rf.kind == "SO_pq":
        return perfect_harmonic_count_formula(rf)
    if rf.kind == "Sp_pq":
        return perfect_major_count_formula(rf)
    return 1


@dataclass(frozen=True)
class Classification:
    flags: dict = field(default_factory=dict)
    length_paper: int = 0
    length_bfs: int | None = None

    def to_json(self) -> dict:
        return {**self.flags, "length_paper": self.length_paper, "length_bfs": self.length_bfs}


def classify(rf: RealForm, w: SignedPermutation) -> Classification:
    if w.family is not rf.weyl_family or w.n != rf.n:
        raise ClassifyError(f"{w} is not an element of the Weyl group of {rf}")
    if rf.kind == "SpR":
        flags = {"generous": is_generous(w), "super_generous": w == super_generous(rf.n)}
    elif rf.kind == "SOStar":
        flags = {"dense": is_dense(w), "super_dense": w == super_dense(rf.n)}
    elif rf.kind == "SO_pq":
        flags = {"harmonic": is_harmonic(rf, w), "perfect_harmonic": is_perfect_harmonic(rf, w)}
    else:
        flags = {"major": is_major(rf, w), "perfect_major": is_perfect_major(rf, w)}
    try:
        bfs = length_bfs(w)
    except WeylError:
        bfs = None
    return Classification(flags, length_paper(w), bfs)


def is_complementary(rf: RealForm, w: SignedPermutation) -> bool:
    return length_paper(w) == dim_dual_schubert(rf)
