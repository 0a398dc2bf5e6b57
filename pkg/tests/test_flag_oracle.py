import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from flagdomains.exact import ExactScalar, combo, unit_vector
from flagdomains.flag_oracle import (OracleError, bilinear, closed_orbit_certificate,
                                     enumerate_fixed_flags, fixed_flag, flag_signature, hermitian,
                                     hermitian_inertia, in_schubert_cell, is_max_isotropic, is_split,
                                     oracle_points, rank_matrix, relative_position,
                                     schubert_rank_matrix, translate_base_flag)
from flagdomains.real_forms import iwasawa_basis, so_pq, so_star, sp2n_r, sp_pq
from flagdomains.weyl_core import enumerate_group, identity, parse

ZERO = ExactScalar(0, 0)
I = ExactScalar(0, 1)


def e(m, k):
    return unit_vector(m, k)


def test_bilinear_examples():
    rf = sp2n_r(3)
    assert bilinear(rf, e(6, 1), e(6, 6)) == ExactScalar(1, 0)
    assert bilinear(rf, e(6, 6), e(6, 1)) == ExactScalar(-1, 0)
    assert bilinear(so_star(3), e(6, 1), e(6, 6)) == ExactScalar(1, 0)
    assert bilinear(so_star(3), e(6, 6), e(6, 1)) == ExactScalar(1, 0)


def test_hermitian_examples():
    rf = sp2n_r(3)
    assert hermitian(rf, e(6, 1), e(6, 1)) == ExactScalar(1, 0)
    assert hermitian(rf, e(6, 6), e(6, 6)) == ExactScalar(-1, 0)
    assert hermitian(sp_pq(3, 2), e(10, 1), e(10, 1)) == ExactScalar(-1, 0)
    v = combo(6, (1, 1), (2, I))
    assert hermitian(so_pq(4, 2), v, v) == ExactScalar(-2, 0)


def test_dimension_mismatch():
    with pytest.raises(OracleError):
        bilinear(sp2n_r(2), e(4, 1), e(6, 1))


@pytest.mark.parametrize("rf", [sp2n_r(2), so_star(3), so_pq(4, 2), so_pq(5, 3), sp_pq(2, 1)], ids=str)
def test_form_symmetries(rf):
    basis = iwasawa_basis(rf)
    sym = -1 if rf.kind in ("SpR", "Sp_pq") else 1
    for a in basis[:4]:
        for b in basis[-4:]:
            assert bilinear(rf, a, b) == bilinear(rf, b, a) * ExactScalar(sym, 0)
            assert hermitian(rf, a, b) == hermitian(rf, b, a).conjugate()


def test_inertia():
    one, minus = ExactScalar(1, 0), ExactScalar(-1, 0)
    assert hermitian_inertia([[ZERO, one], [one, ZERO]]) == (1, 1, 0)
    assert hermitian_inertia([[minus, ZERO], [ZERO, ZERO]]) == (1, 0, 1)
    assert hermitian_inertia([[ZERO, I], [ExactScalar(0, -1), ZERO]]) == (1, 1, 0)


def test_isotropy_examples():
    rf = sp2n_r(3)
    assert is_max_isotropic(rf, [e(6, 1), e(6, 2), e(6, 3)])
    assert not is_max_isotropic(rf, [e(6, 1), e(6, 6)])


def test_signature_examples():
    rf = sp2n_r(3)
    assert flag_signature(rf, [e(6, 1), e(6, 2), e(6, 3)]) == "+++"
    assert flag_signature(rf, [e(6, 6), e(6, 2), e(6, 3)]) == "-++"
    assert flag_signature(rf, fixed_flag(rf, (-1, 2, 3))) == "-++"


def test_split_examples():
    rf = sp2n_r(2)
    assert is_split(rf, [e(4, 1), e(4, 2)])
    assert not is_split(rf, [combo(4, (1, 1), (3, 1))])
    # the base point is never on a base cycle
    for n in (1, 2, 3):
        assert not is_split(sp2n_r(n), iwasawa_basis(sp2n_r(n))[:n])


@pytest.mark.parametrize("rf,count", [(sp2n_r(2), 8), (so_star(2), 4), (so_pq(4, 2), 24), (sp_pq(2, 1), 48)],
                         ids=str)
def test_fixed_flag_counts(rf, count):
    flags = list(enumerate_fixed_flags(rf))
    assert len(flags) == len(set(flags)) == count
    assert all(is_max_isotropic(rf, f) and is_max_isotropic(rf, f.full()) for f in flags)


def test_fixed_flag_label_check():
    with pytest.raises(OracleError):
        fixed_flag(sp2n_r(3), (1, 1, 2))


@pytest.mark.parametrize("rf", [sp2n_r(2), so_star(3), so_pq(4, 2), so_pq(5, 2), sp_pq(1, 1)], ids=str)
def test_rank_matrix_shape(rf):
    m = rf.m
    ident = schubert_rank_matrix(rf, identity(rf.n, rf.weyl_family))
    assert ident == tuple(tuple(min(i, j) for j in range(m + 1)) for i in range(m + 1))
    mats = {schubert_rank_matrix(rf, w) for w in enumerate_group(rf.n, rf.weyl_family)}
    assert len(mats) == sum(1 for _ in enumerate_group(rf.n, rf.weyl_family))


def test_longest_element_rank_matrix():
    rf = sp2n_r(3)
    w0 = parse("-1,-2,-3", 3)
    r = schubert_rank_matrix(rf, w0)
    assert r == tuple(tuple(max(0, i + j - 6) for j in range(7)) for i in range(7))


@pytest.mark.parametrize("rf", [sp2n_r(2), so_star(3), so_pq(4, 2), so_pq(5, 3), so_pq(5, 2), sp_pq(2, 1)],
                         ids=str)
def test_translates_lie_in_their_cell(rf):
    base = iwasawa_basis(rf)
    for w in enumerate_group(rf.n, rf.weyl_family):
        f = translate_base_flag(rf, w)
        assert rank_matrix(f, base) == schubert_rank_matrix(rf, w)
        assert relative_position(rf, f) == w
        if w != identity(rf.n, rf.weyl_family):
            assert not in_schubert_cell(rf, w, base)


@pytest.mark.parametrize("rf", [sp2n_r(3), so_star(4), so_pq(4, 2), so_pq(5, 3), sp_pq(2, 1)], ids=str)
def test_two_membership_routes_agree(rf):
    for f in enumerate_fixed_flags(rf):
        assert in_schubert_cell(rf, relative_position(rf, f), f)


def test_supset_point_in_cell():
    rf = sp2n_r(2)
    w = parse("-2,-1", 2)
    pts = oracle_points(rf)[w]
    assert [p.label_text() for p in pts["--"]] == ["-2,-1"]
    assert in_schubert_cell(rf, w, pts["--"][0])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([sp2n_r(3), so_star(3), so_pq(4, 2), sp_pq(2, 1)]), st.data())
def test_rank_matrix_monotone(rf, data):
    flags = list(enumerate_fixed_flags(rf))
    f = data.draw(st.sampled_from(flags))
    r = rank_matrix(f.full(), iwasawa_basis(rf))
    m = rf.m
    for i in range(m + 1):
        for j in range(m + 1):
            assert r[i][j] <= min(i, j)
            if i < m:
                assert r[i][j] <= r[i + 1][j] <= r[i][j] + 1
            if j < m:
                assert r[i][j] <= r[i][j + 1] <= r[i][j] + 1
    assert r[m][m] == m


@pytest.mark.parametrize("rf", [sp2n_r(2), so_star(3), so_pq(4, 2), sp_pq(1, 1)], ids=str)
def test_base_point_on_closed_orbit(rf):
    cert = closed_orbit_certificate(rf)
    assert cert["g0_orbit"] == cert["k0_orbit"]


def test_lie_algebra_dimensions():
    assert closed_orbit_certificate(sp2n_r(2))["dim_g0"] == 10
    assert closed_orbit_certificate(so_star(3))["dim_g0"] == 15
    assert closed_orbit_certificate(sp_pq(1, 1))["dim_g0"] == 10


# Cell -> domains met, computed by a separate implementation of the forms
# (its own Q(i) arithmetic, coordinate solve and pivot-based relative
# position). Every listed (cell, domain) pair holds exactly one fixed point.
SOSTAR6_CELLS = {
    "-3,-2,1": {"-+-", "--+"}, "-3,-1,2": {"-+-", "--+"},
    "-2,-3,1": {"+--", "--+"}, "-1,-3,2": {"+--", "--+"},
    "-2,-1,3": {"+++", "--+"}, "-1,-2,3": {"+++", "--+"},
    "-2,1,-3": {"+--", "-+-"}, "-1,2,-3": {"+--", "-+-"},
    "-2,3,-1": {"+++", "-+-"}, "-1,3,-2": {"+++", "-+-"},
    "3,-2,-1": {"+++", "+--"}, "3,-1,-2": {"+++", "+--"},
}


def _sp21_domains(w):
    # the domains met depend only on where the modulus-3 entry sits
    if abs(w[0]) == 3:
        return {"++-", "+-+"}
    if abs(w[1]) == 3:
        return {"++-", "-++"}
    return {"+-+", "-++"}


def _cells(rf):
    pts = oracle_points(rf)
    return {str(w): set(d) for w, d in pts.items()}, pts


def test_sostar6_fixed_point_table():
    cells, pts = _cells(so_star(3))
    assert cells == SOSTAR6_CELLS
    assert all(len(fs) == 1 for d in pts.values() for fs in d.values())


def test_sp21_fixed_point_table():
    cells, pts = _cells(sp_pq(2, 1))
    assert len(cells) == 24
    for w in pts:
        assert cells[str(w)] == _sp21_domains(w), w
    assert all(len(fs) == 1 for d in pts.values() for fs in d.values())
    cert = closed_orbit_certificate(sp_pq(2, 1))
    assert cert == {"dim_g0": 21, "dim_k0": 13, "g0_orbit": 11, "k0_orbit": 11}
