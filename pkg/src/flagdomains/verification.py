"""Exhaustive cross-checks between the combinatorial layer and the geometric
oracle. Each check returns a plain report dict
{theorem, params, pass, checked, counterexamples}."""
from __future__ import annotations

import json

from . import classify as C
from . import flag_oracle as O
from .intersect import intersection_report
from .real_forms import (RealForm, dim_base_cycle, dim_dual_schubert, dim_flag_manifold,
                         enumerate_flag_domains, iwasawa_basis, psi)
from .weyl_core import BFS_CAP, enumerate_group, length_bfs, length_paper

DEFAULT_CAPS = {"max_n": 6, "oracle_max_n": 4, "max_counterexamples": 50}


class UnknownTheorem(ValueError):
    pass


def _report(rf, name, caps, checked, bad):
    limit = caps.get("max_counterexamples", DEFAULT_CAPS["max_counterexamples"])
    bad = sorted(bad, key=lambda d: (d.get("w", ""), json.dumps(d, sort_keys=True)))
    return {
        "theorem": name,
        "params": {**rf.describe(), "caps": dict(sorted(caps.items()))},
        "pass": not bad,
        "checked": checked,
        "counterexamples": bad[:limit],
    }


def _need_n(rf, caps, key):
    cap = caps.get(key, DEFAULT_CAPS[key])
    if rf.n > cap:
        raise O.OracleError(f"n={rf.n} exceeds {key}={cap}")


def check_length_agreement(rf, caps):
    _need_n(rf, caps, "max_n")
    if rf.n > BFS_CAP:
        raise O.OracleError(f"n={rf.n} exceeds BFS cap {BFS_CAP}")
    bad, checked = [], 0
    for w in enumerate_group(rf.n, rf.weyl_family):
        checked += 1
        a, b = length_paper(w), length_bfs(w)
        if a != b:
            bad.append({"w": str(w), "length_paper": a, "length_bfs": b})
    return checked, bad


def check_dimension_identity(rf, caps):
    a, b, c = dim_base_cycle(rf), dim_dual_schubert(rf), dim_flag_manifold(rf)
    bad = [] if a + b == c else [{"base_cycle": a, "dual_schubert": b, "flag_manifold": c}]
    return 1, bad


def check_psi_bijection(rf, caps):
    _need_n(rf, caps, "max_n")
    group = list(enumerate_group(rf.n, rf.weyl_family))
    images = [psi(rf, w) for w in group]
    bad = []
    if len(set(images)) != len(group) or set(images) != set(group):
        bad.append({"distinct_images": len(set(images)), "group_order": len(group)})
    return len(group), bad


def check_base_point(rf, caps):
    _need_n(rf, caps, "oracle_max_n")
    U = iwasawa_basis(rf)
    bad = []
    if not O.is_max_isotropic(rf, U):
        bad.append({"issue": "base flag is not maximally isotropic"})
    cert = O.closed_orbit_certificate(rf)
    if cert["g0_orbit"] != cert["k0_orbit"]:
        bad.append({"issue": "base flag is not on the closed orbit", **cert})
    return 2, bad


def check_fixed_flags(rf, caps):
    _need_n(rf, caps, "oracle_max_n")
    bad, checked = [], 0
    for f in O.enumerate_fixed_flags(rf):
        checked += 1
        if not O.is_max_isotropic(rf, f.full()):
            bad.append({"flag": f.label_text(), "issue": "not maximally isotropic"})
        elif not O.is_split(rf, f):
            bad.append({"flag": f.label_text(), "issue": "not split"})
        elif O.flag_signature(rf, f) != f.signs:
            bad.append({"flag": f.label_text(), "issue": "signature disagrees with eigenvector signs"})
    return checked, bad


def check_rank_consistency(rf, caps):
    _need_n(rf, caps, "oracle_max_n")
    bad, checked = [], 0
    for f, w, _, _ in O.fixed_point_table(rf):
        checked += 1
        fast = O.relative_position(rf, f)
        if fast != w:
            bad.append({"flag": f.label_text(), "rank_route": str(w), "pivot_route": str(fast)})
    for w in enumerate_group(rf.n, rf.weyl_family):
        checked += 1
        if not O.in_schubert_cell(rf, w, O.translate_base_flag(rf, w)):
            bad.append({"w": str(w), "issue": "w(F_I) outside its own cell"})
    return checked, bad


def _oracle_domains(rf):
    pts = O.oracle_points(rf)
    return {w: sorted(d) for w, d in pts.items()}


def check_nonempty_equivalence(rf, caps):
    _need_n(rf, caps, "oracle_max_n")
    pred = C.nonempty_predicate(rf)
    doms = _oracle_domains(rf)
    bad, checked = [], 0
    for w in enumerate_group(rf.n, rf.weyl_family):
        checked += 1
        hit = w in doms
        if hit != pred(w):
            bad.append({"w": str(w), "predicate": pred(w), "oracle_domains": doms.get(w, [])})
    return checked, bad


def check_points_completeness(rf, caps):
    _need_n(rf, caps, "oracle_max_n")
    pts = O.oracle_points(rf)
    domains = enumerate_flag_domains(rf)
    bad, checked = [], 0
    for w in C.complementary_elements(rf):
        rep = intersection_report(rf, w)
        truth = pts.get(w, {})
        for a in domains:
            checked += 1
            want = sorted(f.label_text() for f in truth.get(a, []))
            got = sorted(f.label_text() for f in rep.by_domain.get(a, ()))
            if want != got:
                bad.append({"w": str(w), "alpha": a, "oracle": want, "algorithm": got})
    return checked, bad


def check_perfect_characterization(rf, caps):
    """Complementary-length elements passing the predicate and meeting some
    cycle are exactly the super / perfect elements."""
    _need_n(rf, caps, "oracle_max_n")
    pred = C.nonempty_predicate(rf)
    doms = _oracle_domains(rf)
    dual = dim_dual_schubert(rf)
    found = {w for w in enumerate_group(rf.n, rf.weyl_family)
             if pred(w) and length_paper(w) == dual and w in doms}
    listed = set(C.complementary_elements(rf))
    bad = [{"w": str(w), "in_generated_set": w in listed, "oracle_nonempty": w in found}
           for w in found ^ listed]
    return len(found | listed), bad


def alternating_signature(rf: RealForm) -> str:
    q = rf.q
    if rf.kind == "SO_pq" and q % 2:
        return "+-" * ((q - 1) // 2) + "++"
    return ("+-" * rf.n)[:rf.n]


def check_alternating_saturation(rf, caps):
    if rf.kind not in ("SO_pq", "Sp_pq") or rf.n != rf.q + 1:
        raise O.OracleError("saturation applies to SO(p,q) / Sp(2p,2q) with n = q+1")
    _need_n(rf, caps, "oracle_max_n")
    alpha = alternating_signature(rf)
    doms = _oracle_domains(rf)
    dual = dim_dual_schubert(rf)
    targets = {w for w in doms if length_paper(w) == dual} | set(C.complementary_elements(rf))
    bad = [{"w": str(w), "alpha": alpha, "oracle_domains": doms.get(w, [])}
           for w in sorted(targets) if alpha not in doms.get(w, [])]
    return len(targets), bad


CHECKS = {
    "length-agreement": check_length_agreement,
    "dimension-identity": check_dimension_identity,
    "psi-bijection": check_psi_bijection,
    "base-point": check_base_point,
    "fixed-flags": check_fixed_flags,
    "rank-consistency": check_rank_consistency,
    "nonempty-equivalence": check_nonempty_equivalence,
    "points-completeness": check_points_completeness,
    "perfect-characterization": check_perfect_characterization,
    "alternating-saturation": check_alternating_saturation,
}

# per-form names for the two geometric equivalences
ALIASES = {
    "generous-equivalence": ("nonempty-equivalence", "SpR"),
    "dense-equivalence": ("nonempty-equivalence", "SOStar"),
    "harmonic-nonemptiness": ("nonempty-equivalence", "SO_pq"),
    "major-nonemptiness": ("nonempty-equivalence", "Sp_pq"),
    "supset-completeness": ("points-completeness", "SpR"),
    "supset-sostar-completeness": ("points-completeness", "SOStar"),
    "swite-completeness": ("points-completeness", "SO_pq"),
    "swito-completeness": ("points-completeness", "SO_pq"),
    "swit-completeness": ("points-completeness", "Sp_pq"),
}


def theorem_ids() -> list:
    return sorted(set(CHECKS) | set(ALIASES))


def theorems_for(rf: RealForm) -> list:
    out = [t for t in CHECKS if t != "alternating-saturation"]
    if rf.kind in ("SO_pq", "Sp_pq") and rf.n == rf.q + 1:
        out.append("alternating-saturation")
    return out


def run_theorem(rf: RealForm, theorem: str, caps: dict) -> dict:
    caps = {**DEFAULT_CAPS, **caps}
    if theorem in ALIASES:
        target, kind = ALIASES[theorem]
        if rf.kind != kind:
            raise UnknownTheorem(f"{theorem} does not apply to {rf}")
        fn = CHECKS[target]
    elif theorem in CHECKS:
        fn = CHECKS[theorem]
    else:
        raise UnknownTheorem(f"unknown theorem {theorem!r}")
    checked, bad = fn(rf, caps)
    return _report(rf, theorem, caps, checked, bad)
