"""Commutative symmetric and quasisymmetric substrate."""

from fractions import Fraction

import pytest

from chromheap.partitions import (
    compositions,
    composition_to_subset,
    conjugate,
    dominates,
    multiset_permutations,
    partitions,
    revlex_sorted,
    subset_to_composition,
    word_type,
    z_factor,
)
from chromheap.qpoly import QPoly
from chromheap.symfunc import (
    NotSymmetricError,
    QSymFunc,
    SymFunc,
    _rows_to_m,
    basis_to_m,
    m_in_basis_coords,
    monomial_ones,
    transition_M,
)


# ---------------------------------------------------------------------------
# partition helpers


def test_partitions_counts():
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for d in range(9):
        assert len(partitions(d)) == counts[d]
    assert partitions(4, 2) == ((2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)
    assert conjugate(()) == ()


def test_z_factor():
    assert z_factor((1, 1, 1)) == 6
    assert z_factor((2, 1)) == 2
    assert z_factor((3,)) == 3
    assert z_factor((2, 2)) == 8


def test_dominates():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert dominates((2, 2), (2, 2))
    assert not dominates((3,), (2, 2))  # different sizes


def test_revlex_order():
    assert revlex_sorted(partitions(4)) == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]


def test_subset_composition_round_trip():
    for d in range(1, 7):
        for alpha in compositions(d):
            s = composition_to_subset(alpha)
            assert subset_to_composition(d, s) == alpha


def test_multiset_permutations():
    words = list(multiset_permutations((1, 0, 2)))
    assert words == [(1, 3, 3), (3, 1, 3), (3, 3, 1)]
    assert word_type((3, 1, 3), 3) == (1, 0, 2)


# ---------------------------------------------------------------------------
# transitions into the monomial basis


def test_transition_triangular():
    """e_lam = m_{lam'} + lower terms in dominance order."""
    for d in range(1, 7):
        for lam in partitions(d):
            assert transition_M(lam, conjugate(lam)) == 1
            for mu in partitions(d):
                if transition_M(lam, mu):
                    assert dominates(conjugate(lam), mu)


def test_h_expansion_small():
    assert basis_to_m("h", (2,)) == {(2,): 1, (1, 1): 1}
    assert basis_to_m("h", (1, 1)) == {(2,): 1, (1, 1): 2}
    assert basis_to_m("p", (2,)) == {(2,): 1}
    assert basis_to_m("p", (2, 1)) == {(3,): 1, (2, 1): 1}
    assert basis_to_m("e", (2, 1)) == {(2, 1): 1, (1, 1, 1): 3}


def _ssyt_count(lam, mu):
    """Semistandard tableaux of shape lam and content mu, by backtracking."""
    lam = tuple(lam)
    rows = [[0] * r for r in lam]
    counts = list(mu)
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]

    def rec(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for v in range(1, len(counts) + 1):
            if counts[v - 1] == 0:
                continue
            if c > 0 and rows[r][c - 1] > v:
                continue
            if r > 0 and rows[r - 1][c] >= v:
                continue
            rows[r][c] = v
            counts[v - 1] -= 1
            total += rec(idx + 1)
            counts[v - 1] += 1
            rows[r][c] = 0
        return total

    return rec(0)


def test_schur_matches_tableau_oracle():
    for d in range(1, 7):
        for lam in partitions(d):
            expansion = basis_to_m("s", lam)
            for mu in partitions(d):
                assert expansion.get(mu, 0) == _ssyt_count(lam, mu), (lam, mu)


def test_eh_relation():
    """sum_j (-1)^j e_j h_{k-j} = 0 for k >= 1, up to degree 8."""
    for k in range(1, 9):
        total = {}
        for j in range(k + 1):
            rows = []
            if j:
                rows.append(("e", j))
            if k - j:
                rows.append(("h", k - j))
            for nu, c in _rows_to_m(tuple(rows)).items():
                total[nu] = total.get(nu, 0) + (-1) ** j * c
        assert all(c == 0 for c in total.values()), k


def test_peh_relation():
    """p_k = sum_j (-1)^(j-1) j e_j h_{k-j}, up to degree 8."""
    for k in range(1, 9):
        total = {}
        for j in range(1, k + 1):
            rows = [("e", j)]
            if k - j:
                rows.append(("h", k - j))
            for nu, c in _rows_to_m(tuple(rows)).items():
                total[nu] = total.get(nu, 0) + (-1) ** (j - 1) * j * c
        want = basis_to_m("p", (k,))
        assert {nu: c for nu, c in total.items() if c} == want


def test_forgotten_is_omega_of_monomial():
    for d in range(1, 6):
        for lam in partitions(d):
            f = SymFunc.basis_element("f", lam)
            m = SymFunc.basis_element("m", lam)
            assert m.omega() == f


# ---------------------------------------------------------------------------
# SymFunc


def test_symfunc_validation():
    with pytest.raises(ValueError):
        SymFunc(3, {(2,): 1})
    with pytest.raises(ValueError):
        SymFunc(3, {(1, 2): 1})


def test_basis_round_trips():
    f = SymFunc(
        4,
        {
            (4,): QPoly((1, 2)),
            (2, 2): QPoly((0, 1)),
            (1, 1, 1, 1): QPoly((3,)),
        },
    )
    for basis in "ehpsm":
        coords = f.in_basis(basis)
        assert SymFunc.from_coords(basis, 4, coords) == f


def test_omega_laws():
    f = SymFunc(4, {(3, 1): QPoly((1, 1)), (2, 2): QPoly((2,))})
    assert f.omega().omega() == f
    for d in range(1, 6):
        for lam in partitions(d):
            e = SymFunc.basis_element("e", lam)
            h = SymFunc.basis_element("h", lam)
            assert e.omega() == h
            assert h.omega() == e
            p = SymFunc.basis_element("p", lam)
            sign = (-1) ** (d - len(lam))
            assert p.omega() == p.scale(sign)
    # omega on Schur functions conjugates the shape
    for d in range(1, 6):
        for lam in partitions(d):
            s = SymFunc.basis_element("s", lam)
            assert s.omega() == SymFunc.basis_element("s", conjugate(lam))


def test_schur_coordinates_exact():
    # h_lam is Schur-positive with Kostka coefficients
    h = SymFunc.basis_element("h", (2, 1))
    assert h.in_basis("s") == {(3,): QPoly.one(), (2, 1): QPoly.one()}
    assert h.is_positive_in("s")
    e = SymFunc.basis_element("e", (2, 1))
    assert e.in_basis("s") == {(1, 1, 1): QPoly.one(), (2, 1): QPoly.one()}


def test_rational_coordinates():
    m = SymFunc.basis_element("m", (1, 1))
    coords = m.in_basis("p")
    # m_11 = (p_1^2 - p_2) / 2
    assert coords == {
        (1, 1): QPoly((Fraction(1, 2),)),
        (2,): QPoly((Fraction(-1, 2),)),
    }


def test_eval_ones():
    assert monomial_ones((2, 1), 3) == 6
    assert monomial_ones((1, 1), 3) == 3
    assert monomial_ones((1, 1, 1, 1), 3) == 0
    # e_2 at three ones counts the 2-subsets of a 3-set
    assert SymFunc.basis_element("e", (2,)).eval_ones(3) == 3
    # h_2 at three ones counts multisets
    assert SymFunc.basis_element("h", (2,)).eval_ones(3) == 6
    assert SymFunc.basis_element("m", (2,), QPoly((0, 1))).eval_ones(3, 2) == 6


def test_symfunc_json_round_trip():
    f = SymFunc(3, {(2, 1): QPoly((1, 1)), (3,): QPoly((0, 0, 2))})
    for basis in "mehps":
        assert SymFunc.from_json(f.to_json(basis)) == f


# ---------------------------------------------------------------------------
# QSymFunc


def test_fundamental_expansion():
    F = QSymFunc.fundamental(3, {1})
    assert F.terms == {
        (1, 2): QPoly.one(),
        (1, 1, 1): QPoly.one(),
    }
    F0 = QSymFunc.fundamental(2, set())
    assert F0.terms == {(2,): QPoly.one(), (1, 1): QPoly.one()}


def test_f_coords_round_trip():
    for d in range(1, 6):
        for alpha in compositions(d):
            s = composition_to_subset(alpha)
            F = QSymFunc.fundamental(d, s, QPoly((1, 2)))
            coords = F.f_coords()
            assert coords == {s: QPoly((1, 2))}
    # a random-ish combination
    g = (
        QSymFunc.fundamental(4, {1, 3}, QPoly((1,)))
        + QSymFunc.fundamental(4, {2}, QPoly((0, 5)))
    )
    rebuilt = QSymFunc(4)
    for s, c in g.f_coords().items():
        rebuilt = rebuilt + QSymFunc.fundamental(4, s, c)
    assert rebuilt == g


def test_omega_involution():
    g = QSymFunc.fundamental(4, {1, 3}) + QSymFunc.fundamental(4, {2}, QPoly((0, 1)))
    assert g.omega_involution().omega_involution() == g
    F = QSymFunc.fundamental(3, {1})
    assert F.omega_involution() == QSymFunc.fundamental(3, {2})


def test_to_symmetric():
    # sum of all fundamentals of degree d is h_1^d, hence symmetric
    total = QSymFunc(3)
    for alpha in compositions(3):
        total = total + QSymFunc(3, {alpha: QPoly.one()})
    f = total.to_symmetric()
    assert f.terms == {lam: QPoly.one() for lam in partitions(3)}

    lopsided = QSymFunc(3, {(2, 1): QPoly.one()})
    with pytest.raises(NotSymmetricError) as exc:
        lopsided.to_symmetric()
    alpha, beta, ca, cb = exc.value.witness
    assert sorted(alpha, reverse=True) == sorted(beta, reverse=True) == [2, 1]
    assert ca != cb


def test_m_in_basis_coords_consistency():
    for d in range(1, 6):
        for basis in "ehp":
            coords = m_in_basis_coords(d, basis)
            for lam, row in coords.items():
                back = {}
                for mu, c in row.items():
                    for nu, a in basis_to_m(basis, mu).items():
                        back[nu] = back.get(nu, Fraction(0)) + Fraction(c) * a
                back = {nu: c for nu, c in back.items() if c}
                assert back == {lam: 1}, (basis, lam)
