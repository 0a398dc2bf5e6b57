"""Signed permutations as Weyl groups of types B/C (all sign changes) and D
(even number of sign changes).

Elements are stored in one-line notation: the images w_1..w_n, a minus sign
marking that position i carries the dual partner of vector |w_i|.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations, product
from math import factorial

DEFAULT_CAP = 7
BFS_CAP = 6


class WeylFamily(str, Enum):
    FULL_SIGN = "FullSign"    # S_n x| Z_2^n
    EVEN_SIGN = "EvenSign"    # S_n x| Z_2^(n-1)


FULL = WeylFamily.FULL_SIGN
EVEN = WeylFamily.EVEN_SIGN


class WeylError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class SignedPermutation:
    entries: tuple
    family: WeylFamily = FULL

    def __post_init__(self):
        ents = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", ents)
        n = len(ents)
        if n == 0:
            raise WeylError("empty permutation")
        if sorted(abs(x) for x in ents) != list(range(1, n + 1)):
            raise WeylError(f"moduli of {ents} are not a permutation of 1..{n}")
        if self.family is EVEN and negatives(ents) % 2:
            raise WeylError(f"{format_perm(ents)} has an odd number of negative entries")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return format_perm(self.entries)


def negatives(entries) -> int:
    return sum(1 for x in entries if x < 0)


def format_perm(w) -> str:
    return ",".join(str(x) for x in w)


def parse(text: str, n: int, family: WeylFamily = FULL) -> SignedPermutation:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    try:
        ents = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise WeylError(f"not a list of signed integers: {text!r}") from exc
    if len(ents) != n:
        raise WeylError(f"expected {n} entries, got {len(ents)}")
    if 0 in ents:
        raise WeylError("entries must be nonzero")
    return SignedPermutation(ents, WeylFamily(family))


def identity(n: int, family: WeylFamily = FULL) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, n + 1)), family)


def _check_same(u, w):
    if u.n != w.n or u.family != w.family:
        raise WeylError("permutations differ in size or family")


def compose(u: SignedPermutation, w: SignedPermutation) -> SignedPermutation:
    """(u o w)_i = sign(w_i) * u_{|w_i|}."""
    _check_same(u, w)
    ents = tuple((1 if x > 0 else -1) * u.entries[abs(x) - 1] for x in w.entries)
    return SignedPermutation(ents, u.family)


def inverse(w: SignedPermutation) -> SignedPermutation:
    out = [0] * w.n
    for k, x in enumerate(w.entries, 1):
        out[abs(x) - 1] = k if x > 0 else -k
    return SignedPermutation(tuple(out), w.family)


def simple_generators(n: int, family: WeylFamily = FULL) -> list:
    """Adjacent transpositions, then the sign flip at the last position
    (FullSign) or the coupled flip (.., a, b) -> (.., -b, -a) (EvenSign)."""
    if n < 2:
        raise WeylError("simple generators need n >= 2")
    gens = []
    for i in range(n - 1):
        e = list(range(1, n + 1))
        e[i], e[i + 1] = e[i + 1], e[i]
        gens.append(SignedPermutation(tuple(e), family))
    e = list(range(1, n + 1))
    if family is FULL:
        e[-1] = -n
    else:
        e[-2], e[-1] = -n, -(n - 1)
    gens.append(SignedPermutation(tuple(e), family))
    return gens


def group_order(n: int, family: WeylFamily = FULL) -> int:
    return factorial(n) * 2 ** (n if family is FULL else n - 1)


def enumerate_group(n: int, family: WeylFamily = FULL, cap: int = DEFAULT_CAP):
    """All elements, ordered lexicographically by (moduli, sign pattern) with
    '+' before '-' in the sign pattern."""
    if n > cap:
        raise WeylError(f"n={n} exceeds enumeration cap {cap}")
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if family is EVEN and signs.count(-1) % 2:
                continue
            yield SignedPermutation(tuple(s * x for s, x in zip(signs, perm)), family)


@lru_cache(maxsize=None)
def _bfs_table(n: int, family: WeylFamily) -> dict:
    if n > BFS_CAP:
        raise WeylError(f"n={n} exceeds BFS cap {BFS_CAP}")
    start = tuple(range(1, n + 1))
    if n == 1:
        # B_1/C_1: the single flip; D_1 is trivial
        return {start: 0, (-1,): 1} if family is FULL else {start: 0}
    gens = [g.entries for g in simple_generators(n, family)]
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        d = dist[w] + 1
        for g in gens:
            # right multiplication w o g acts on positions
            nxt = tuple((1 if x > 0 else -1) * w[abs(x) - 1] for x in g)
            if nxt not in dist:
                dist[nxt] = d
                queue.append(nxt)
    return dist


def length_bfs(w: SignedPermutation) -> int:
    """Word length over simple_generators, via a memoized BFS of the whole group."""
    return _bfs_table(w.n, w.family)[w.entries]


def box_fill(w) -> tuple:
    """Positive entries keep their order in the leading boxes; the absolute
    values of the negative entries, read left to right, fill the trailing
    boxes from the last one backwards."""
    ents = tuple(w)
    pos = [x for x in ents if x > 0]
    neg = [-x for x in ents if x < 0]
    return tuple(pos + neg[::-1])


def inversion_defect(seq) -> int:
    """n(n-1)/2 minus the number of increasing pairs."""
    n = len(seq)
    ups = sum(1 for i in range(n) for k in range(i + 1, n) if seq[i] < seq[k])
    return n * (n - 1) // 2 - ups


def length_paper_C(w: SignedPermutation) -> int:
    if w.family is not FULL:
        raise WeylError("type C length needs a FullSign element")
    n = w.n
    neg_pos = [j for j, x in enumerate(w.entries, 1) if x < 0]
    return inversion_defect(box_fill(w)) + sum(n - j for j in neg_pos) + len(neg_pos)


def length_paper_D(w: SignedPermutation) -> int:
    if w.family is not EVEN:
        raise WeylError("type D length needs an EvenSign element")
    n = w.n
    ks = [j for j, x in enumerate(w.entries, 1) if x < 0]
    pairs = [(ks[2 * j], ks[2 * j + 1]) for j in range(len(ks) // 2)]
    f = sum(2 * n - 1 - a - b for a, b in pairs)
    return inversion_defect(box_fill(w)) + f + len(pairs)


def length_paper(w: SignedPermutation) -> int:
    return length_paper_C(w) if w.family is FULL else length_paper_D(w)


def length_discrepancies(n: int, family: WeylFamily) -> list:
    """Elements where the box-filling length and the BFS length disagree."""
    out = []
    for w in enumerate_group(n, family):
        a, b = length_paper(w), length_bfs(w)
        if a != b:
            out.append({"w": str(w), "length_paper": a, "length_bfs": b})
    return out
