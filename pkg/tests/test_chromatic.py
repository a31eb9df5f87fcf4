"""Chromatic functions: oracle, word route, expansions and theorems."""

import json
import random

import pytest

from chromheap.chromatic import (
    CrossCheckError,
    asc_des_symmetry_check,
    chromatic_sym,
    class_qsym,
    class_sym,
    closed_form_two_column,
    coeff_e_hook,
    coeff_e_two_column,
    coloring_ascents,
    coloring_descents,
    coloring_qsym,
    expansion,
    heap_qsym,
    omega_chromatic_sym,
    positivity_report,
    proper_coloring_count,
    proper_colorings,
    scaling_check,
    sink_sum,
)
from chromheap.heaps import enumerate_classes, enumerate_heaps
from chromheap.posets import UnitIntervalOrder
from chromheap.qpoly import QPoly, q_factorial
from chromheap.symfunc import NotSymmetricError

P233 = UnitIntervalOrder((2, 3, 3))
P23455 = UnitIntervalOrder((2, 3, 4, 5, 5))


# ---------------------------------------------------------------------------
# coloring oracle


def test_coloring_statistics_frozen_example():
    # path on three vertices; vertex 1 gets {1,3,6}, vertex 2 gets {4},
    # vertex 3 gets {2,6}
    kappa = {1: (1, 3, 6), 2: (4,), 3: (2, 6)}
    assert coloring_ascents(P233, kappa) == 3
    assert coloring_descents(P233, kappa) == 2
    found = any(
        {a: frozenset(c) for a, c in k.items()}
        == {a: frozenset(c) for a, c in kappa.items()}
        for k in proper_colorings(P233, (3, 1, 2), 6)
    )
    assert found


def test_proper_colorings_disjointness():
    for kappa in proper_colorings(P233, (2, 1, 1), 4):
        assert not set(kappa[1]) & set(kappa[2])
        assert not set(kappa[2]) & set(kappa[3])
        assert len(kappa[1]) == 2


def test_coloring_counts_chain_and_antichain():
    chain = UnitIntervalOrder((1, 2, 3))
    assert proper_coloring_count(chain, (1, 1, 1), 2) == 8
    antichain = UnitIntervalOrder((3, 3, 3))
    assert proper_coloring_count(antichain, (1, 1, 1), 3) == 6


def test_coloring_qsym_needs_enough_colors():
    with pytest.raises(ValueError):
        coloring_qsym(P233, (1, 1, 2), colors=3)


def test_oracle_color_supply_irrelevant():
    mu = (1, 1, 2)
    a = coloring_qsym(P233, mu, colors=4).to_symmetric()
    b = coloring_qsym(P233, mu, colors=5).to_symmetric()
    assert a == b


# ---------------------------------------------------------------------------
# word route agrees with the oracle


def test_oracle_vs_words_running_example():
    mu = (1, 1, 2)
    assert chromatic_sym(P233, mu) == coloring_qsym(P233, mu).to_symmetric()
    assert asc_des_symmetry_check(P233, mu)


def test_omega_route_is_the_omega_image():
    mu = (1, 1, 2)
    assert omega_chromatic_sym(P233, mu).omega() == chromatic_sym(P233, mu)


def test_q_one_specialization_counts_colorings():
    for order, mu in [(P233, (1, 1, 2)), (UnitIntervalOrder((2, 2)), (2, 1))]:
        x = chromatic_sym(order, mu)
        d = sum(mu)
        for colors in (d, d + 1):
            assert x.eval_ones(colors, 1) == proper_coloring_count(order, mu, colors)


def test_chain_and_antichain_expansions():
    chain = UnitIntervalOrder((1, 2, 3, 4))
    x = chromatic_sym(chain, (1, 1, 1, 1))
    assert x.in_basis("e") == {(1, 1, 1, 1): QPoly.one()}
    antichain = UnitIntervalOrder((4, 4, 4, 4))
    x = chromatic_sym(antichain, (1, 1, 1, 1))
    assert x.in_basis("e") == {(4,): q_factorial(4)}


# ---------------------------------------------------------------------------
# heap and class generating functions


def test_class_functions_symmetric_and_sum_to_omega_x():
    mu = (1, 1, 2)
    total = None
    for cls in enumerate_classes(P233, mu):
        k = class_qsym(cls)
        class_sym(cls)  # must not raise NotSymmetricError
        scaled = k.scale(QPoly.monomial(cls.ascents))
        total = scaled if total is None else total + scaled
    assert total.to_symmetric() == omega_chromatic_sym(P233, mu)


def test_single_heap_function_need_not_be_symmetric():
    raised = False
    for heap in enumerate_heaps(P233, (1, 1, 1)):
        try:
            heap_qsym(heap).to_symmetric()
        except NotSymmetricError as exc:
            alpha, beta, ca, cb = exc.witness
            assert sorted(alpha, reverse=True) == sorted(beta, reverse=True)
            assert ca != cb
            raised = True
    assert raised


# ---------------------------------------------------------------------------
# expansions


def test_expansion_frozen_running_example():
    mu = (1, 1, 2)
    rep = expansion(P233, mu, "f")
    assert rep.coefficients[(3, 1)] == QPoly((1, 3, 3, 1))
    rep = expansion(P233, mu, "p")
    assert rep.coefficients[(3, 1)] == QPoly((1, 2, 2, 1))
    rep = expansion(P233, mu, "s")
    assert rep.coefficients[(3, 1)] == QPoly((0, 1, 1))
    assert rep.positive


def test_expansion_frozen_e_coefficients():
    rep = expansion(P23455, (1, 1, 1, 1, 1), "e")
    assert rep.coefficients[(2, 2, 1)] == QPoly((0, 0, 1))
    assert rep.coefficients[(4, 1)] == QPoly((0, 1, 1, 1))
    assert (3, 1, 1) not in rep.coefficients
    assert rep.provenance[(2, 2, 1)] == "theorem+basis-change"
    assert rep.provenance[(4, 1)] == "theorem+basis-change"
    assert rep.provenance[(3, 2)] == "basis-change"


def test_expansion_bases_are_consistent():
    mu = (1, 1, 2)
    x = chromatic_sym(P233, mu)
    for basis in "fpsemh":
        rep = expansion(P233, mu, basis)
        if basis == "f":
            rebuilt = x  # f-coefficients are the omega image's m-coefficients
            from chromheap.symfunc import SymFunc

            back = SymFunc(rep.degree, rep.coefficients).omega()
            assert back == x
        else:
            from chromheap.symfunc import SymFunc

            coords = dict(rep.coefficients)
            if basis == "p":
                from chromheap.partitions import z_factor
                from fractions import Fraction

                coords = {
                    lam: c * Fraction(1, z_factor(lam)) for lam, c in coords.items()
                }
                back = SymFunc.from_coords("p", rep.degree, coords).omega()
            elif basis == "s":
                back = SymFunc.from_coords("s", rep.degree, coords).omega()
            else:
                back = SymFunc.from_coords(basis, rep.degree, coords)
            assert back == x, basis


def test_expansion_rejects_unknown_basis():
    with pytest.raises(ValueError):
        expansion(P233, (1, 1, 2), "z")


def test_expansion_report_json():
    rep = expansion(P233, (1, 1, 2), "e")
    data = rep.to_json()
    text = json.dumps(data)
    parsed = json.loads(text)
    assert parsed["poset"] == "2,3,3"
    assert parsed["positive"] is True
    polys = {
        tuple(t["partition"]): QPoly.from_json(t["poly"]) for t in parsed["terms"]
    }
    assert polys == rep.coefficients


# ---------------------------------------------------------------------------
# theorem-path coefficients


def test_two_column_and_hook_cross_checks_pass():
    mu = (1, 1, 1, 1, 1)
    for l in range(0, 3):
        coeff_e_two_column(P23455, mu, 5 - l, l)
    coeff_e_hook(P23455, mu, 3, 1)
    coeff_e_hook(P23455, mu, 1, 3)
    with pytest.raises(ValueError):
        coeff_e_two_column(P233, (1, 1, 1), 1, 2)
    with pytest.raises(ValueError):
        coeff_e_hook(P233, (1, 1, 1), 0, 1)


def test_sink_sum():
    mu = (1, 1, 2)
    total = QPoly()
    for k in range(1, 5):
        total = total + sink_sum(P233, mu, k)
    # every heap has some number of sinks, so the sums add up to all heaps
    want = QPoly()
    for h in enumerate_heaps(P233, mu):
        want = want + QPoly.monomial(h.ascents)
    assert total == want
    with pytest.raises(ValueError):
        sink_sum(P233, mu, 0)


def test_closed_form_path():
    # single path on 4 vertices: one even component
    order = UnitIntervalOrder((2, 3, 4, 4))
    rep = expansion(order, (1, 1, 1, 1), "e")
    lam = (2, 2)
    want = closed_form_two_column(order, lam)
    assert want == QPoly((0, 1, 1))  # q (1 + q)
    assert rep.coefficients[lam] == want


def test_closed_form_triangle_returns_zero():
    order = UnitIntervalOrder((3, 3, 3))
    assert closed_form_two_column(order, (2, 1)) == QPoly()


def test_closed_form_singleton():
    order = UnitIntervalOrder((1,))
    assert closed_form_two_column(order, (1,)) == QPoly.one()


# ---------------------------------------------------------------------------
# positivity and scaling


def test_positivity_report_running_example():
    rep = positivity_report(P233, (1, 1, 2))
    assert rep["all_classes_h_positive"]
    assert rep["e_positive"]
    assert len(rep["classes"]) == 4


def test_scaling_examples():
    assert scaling_check(P233, (1, 1, 2))
    assert scaling_check(UnitIntervalOrder((1, 2)), (2, 1))
    rng = random.Random(7)
    for _ in range(5):
        n = rng.randint(1, 3)
        orders = list(UnitIntervalOrder.all_orders(n))
        order = rng.choice(orders)
        mu = tuple(rng.randint(0, 2) for _ in range(n))
        if sum(mu) == 0 or sum(mu) > 5:
            mu = (1,) * n
        assert scaling_check(order, mu), (order.m, mu)


def test_cross_check_error_is_assertion():
    assert issubclass(CrossCheckError, AssertionError)
