"""Exact homology, Betti numbers, and depth."""

from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathdepth.depth import (
    PolarizationCapError,
    UnitIdealError,
    betti,
    build_lcm_lattice,
    depth_quotient,
    depth_via_polarization,
    max_ideal_associated,
    open_interval_homology,
    rank_exact,
    reduced_homology,
)
from pathdepth.families import cycle_ideal, path_ideal
from pathdepth.monomials import Monomial, MonomialIdeal, parse_ideal

# linear algebra ------------------------------------------------------


def test_rank_exact_small_matrices():
    assert rank_exact([]) == 0
    assert rank_exact([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert rank_exact([{0: 1}, {1: 1}, {0: 1, 1: 1}]) == 2
    # integer arithmetic that would break floating-point elimination
    cols = [{0: 10**30, 1: 1}, {0: 10**30 + 1, 1: 1}]
    assert rank_exact(cols) == 2


# simplicial homology -------------------------------------------------


def naive_homology(faces):
    """Dense brute-force reduced homology, as an independent oracle."""
    from fractions import Fraction

    all_faces = {tuple(sorted(f)) for f in faces}
    closed = set()
    for f in all_faces:
        for r in range(1, len(f) + 1):
            closed.update(combinations(f, r))
    by_dim = {}
    for f in closed:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for d in by_dim:
        by_dim[d].sort()
    if not closed:
        return {-1: 1}
    top = max(by_dim)
    ranks_of_boundary = {}
    for d in range(0, top + 1):
        rows = {f: i for i, f in enumerate(by_dim.get(d - 1, [()]))}
        matrix = []
        for f in by_dim.get(d, []):
            col = [Fraction(0)] * len(rows)
            if d == 0:
                col[0] = Fraction(1)
            else:
                for j in range(d + 1):
                    col[rows[f[:j] + f[j + 1:]]] += Fraction(-1 if j % 2 else 1)
            matrix.append(col)
        # dense elimination
        rank = 0
        m = [list(c) for c in matrix]
        cols_n = len(m)
        rows_n = len(rows)
        pivot_row = 0
        for c in range(cols_n):
            pr = None
            for r in range(pivot_row, rows_n):
                if m[c][r]:
                    pr = r
                    break
            if pr is None:
                continue
            m[c][pivot_row], m[c][pr] = m[c][pr], m[c][pivot_row]
            for c2 in range(c + 1, cols_n):
                m[c2][pivot_row], m[c2][pr] = m[c2][pr], m[c2][pivot_row]
            for c2 in range(c + 1, cols_n):
                if m[c2][pivot_row]:
                    factor = m[c2][pivot_row] / m[c][pivot_row]
                    for r in range(rows_n):
                        m[c2][r] -= factor * m[c][r]
            rank += 1
            pivot_row += 1
        ranks_of_boundary[d] = rank
    ranks_of_boundary[top + 1] = 0
    out = {}
    h = 1 - ranks_of_boundary[0]
    if h:
        out[-1] = h
    for d in range(0, top + 1):
        r = len(by_dim.get(d, [])) - ranks_of_boundary[d] - ranks_of_boundary[d + 1]
        if r:
            out[d] = r
    return out


def test_homology_of_known_complexes():
    # circle: boundary of a triangle
    circle = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]
    assert reduced_homology(circle) == {1: 1}
    # two points
    assert reduced_homology([(1,), (2,)]) == {0: 1}
    # solid triangle is contractible
    solid = circle + [(1, 2, 3)]
    assert reduced_homology(solid) == {}
    # empty complex (only the empty face)
    assert reduced_homology([]) == {-1: 1}
    # 2-sphere: boundary of a tetrahedron
    verts = (1, 2, 3, 4)
    sphere = [f for r in (1, 2, 3) for f in combinations(verts, r)]
    assert reduced_homology(sphere) == {2: 1}


@given(st.sets(st.frozensets(st.integers(1, 5), min_size=1, max_size=3), max_size=8))
@settings(max_examples=40, deadline=None)
def test_homology_matches_naive_oracle(gen_faces):
    closed = set()
    for f in gen_faces:
        for r in range(1, len(f) + 1):
            closed.update(combinations(sorted(f), r))
    assert reduced_homology(closed) == naive_homology(closed)


# lcm lattice ---------------------------------------------------------


def test_lcm_lattice_of_two_edges():
    I = parse_ideal("x1*x2, x2*x3", 3)
    lat = build_lcm_lattice(I)
    assert set(str(e) for e in lat.elements) == {"x1*x2", "x2*x3", "x1*x2*x3"}
    assert str(lat.top) == "x1*x2*x3"
    assert len(lat.below(lat.top)) == 2


def test_open_interval_homology_of_square_cycle():
    # the 4-cycle edge ideal: open interval under the top has a circle
    I = cycle_ideal(4, 2)
    lat = build_lcm_lattice(I)
    assert open_interval_homology(lat, lat.top) == {1: 1}


def test_open_interval_agrees_with_koszul_betti():
    for I in (
        parse_ideal("x1*x2, x2*x3", 3),
        cycle_ideal(4, 2),
        parse_ideal("x1^2, x1*x2, x2^3", 2),
        path_ideal(5, 3),
    ):
        table = betti(I)
        lat = build_lcm_lattice(I)
        for a in lat.elements:
            expected = {
                i - 2: r for (i, b), r in table.entries.items() if b == a and i >= 1
            }
            got = {
                d: r for d, r in open_interval_homology(lat, a).items()
            }
            assert got == expected, (str(I), str(a))


# Betti numbers -------------------------------------------------------


def test_betti_of_maximal_ideal_is_binomial():
    for n in (1, 2, 3, 4):
        table = betti(MonomialIdeal.maximal(n))
        for i in range(0, n + 1):
            assert table.total(i) == comb(n, i)
        assert table.projective_dimension() == n


def test_betti_of_two_adjacent_edges():
    table = betti(parse_ideal("x1*x2, x2*x3", 3))
    assert table.total(1) == 2
    assert table.total(2) == 1
    assert table.projective_dimension() == 2


def test_betti_rejects_unit_ideal():
    with pytest.raises(UnitIdealError):
        betti(MonomialIdeal.whole_ring(2))


# depth ---------------------------------------------------------------


def test_depth_reference_values():
    assert depth_quotient(MonomialIdeal.zero(3)).depth == 3
    assert depth_quotient(MonomialIdeal.maximal(4)).depth == 0
    assert depth_quotient(parse_ideal("x1*x2", 2)).depth == 1
    # complete intersection of two disjoint edges in 4 variables
    assert depth_quotient(parse_ideal("x1*x2, x3*x4", 4)).depth == 2
    assert depth_quotient(cycle_ideal(4, 2)).depth == 1


def test_depth_result_invariant():
    r = depth_quotient(parse_ideal("x1*x2, x2*x3", 3))
    assert r.depth + r.pd == r.n_vars == 3
    assert r.as_dict()["method"] == "lattice"


def test_depth_rejects_unit_ideal():
    with pytest.raises(UnitIdealError):
        depth_quotient(MonomialIdeal.whole_ring(2))


# polarization cross-check --------------------------------------------


def test_polarization_preserves_projective_dimension():
    I = parse_ideal("x1^2, x1*x2", 2)
    assert depth_via_polarization(I).depth == depth_quotient(I).depth


def test_polarization_agrees_on_cycle_square():
    J = cycle_ideal(6, 3)
    assert depth_via_polarization(J).depth == depth_quotient(J).depth


def test_polarization_cap():
    with pytest.raises(PolarizationCapError):
        depth_via_polarization(parse_ideal("x1^10, x2^10", 2), cap=4)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_polarization_agreement_random(data):
    n = data.draw(st.integers(1, 3))
    gens = []
    for _ in range(data.draw(st.integers(1, 3))):
        exps = tuple(data.draw(st.integers(0, 2)) for _ in range(n))
        if any(exps):
            gens.append(Monomial(exps))
    if not gens:
        gens = [Monomial(tuple([1] + [0] * (n - 1)))]
    I = MonomialIdeal(n, gens)
    assert depth_via_polarization(I).depth == depth_quotient(I).depth


# associated maximal ideal --------------------------------------------


def test_max_ideal_associated_with_witness():
    assoc, witness = max_ideal_associated(MonomialIdeal.maximal(2))
    assert assoc
    assert witness == Monomial((0, 0))
    assoc, witness = max_ideal_associated(parse_ideal("x1*x2", 2))
    assert not assoc and witness is None


def test_max_ideal_associated_witness_certifies():
    I = cycle_ideal(4, 3).power(3)
    assoc, w = max_ideal_associated(I)
    assert assoc
    assert w is not None
    assert not I.contains(w)
    for j in range(1, 5):
        assert I.contains(w * Monomial.variable(j, 4))
