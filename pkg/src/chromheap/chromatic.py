"""Chromatic quasisymmetric functions of unit interval orders.

Two independent routes are provided. The oracle enumerates proper
multi-colorings with a finite color supply and accumulates monomials
weighted by the ascent statistic. The word route assembles the omega
image of the function from fundamental quasisymmetric pieces indexed by
descent sets of words, then changes basis. Theorem-driven coefficient
formulas (pairings, rank profiles of heaps, sink counts) are always
cross-checked against the linear-algebra route; a disagreement raises
CrossCheckError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .heaps import (
    Heap,
    HeapClass,
    descent_positions,
    enumerate_classes,
    enumerate_heaps,
    inversion_count,
)
from .ncsf import nc_h, nc_p, nc_s, pair_gamma
from .partitions import (
    conjugate,
    multiset_permutations,
    partitions,
    revlex_sorted,
    z_factor,
)
from .posets import UnitIntervalOrder
from .qpoly import QPoly, q_factorial
from .symfunc import QSymFunc, SymFunc


class CrossCheckError(AssertionError):
    """Two supposedly equal computation paths disagreed."""


# ---------------------------------------------------------------------------
# coloring oracle


def proper_colorings(order: UnitIntervalOrder, mu, colors: int):
    """All proper multi-colorings: vertex a gets mu[a-1] colors from
    [colors], disjoint across incomparability edges."""
    mu = tuple(mu)
    if len(mu) != order.n:
        raise ValueError("type vector length must equal n")
    verts = [a for a in range(1, order.n + 1) if mu[a - 1] > 0]
    palette = range(1, colors + 1)
    chosen: dict = {}

    def rec(idx):
        if idx == len(verts):
            yield dict(chosen)
            return
        a = verts[idx]
        blocked = set()
        for b in order.neighbors(a):
            blocked.update(chosen.get(b, ()))
        for combo in combinations(palette, mu[a - 1]):
            if blocked.isdisjoint(combo):
                chosen[a] = combo
                yield from rec(idx + 1)
        chosen.pop(a, None)

    yield from rec(0)


def coloring_ascents(order: UnitIntervalOrder, coloring) -> int:
    """Pairs of colors across an edge increasing with the vertex labels."""
    count = 0
    for i, j in order.edges:
        ci = coloring.get(i, ())
        cj = coloring.get(j, ())
        for r in ci:
            for s in cj:
                if r < s:
                    count += 1
    return count


def coloring_descents(order: UnitIntervalOrder, coloring) -> int:
    """Pairs of colors across an edge decreasing with the vertex labels.

    Written against the edge list directly, not as a complement of the
    ascent count, so the symmetry check is non-circular.
    """
    count = 0
    for i, j in order.edges:
        for r in coloring.get(i, ()):
            for s in coloring.get(j, ()):
                if r > s:
                    count += 1
    return count


def proper_coloring_count(order: UnitIntervalOrder, mu, colors: int) -> int:
    return sum(1 for _ in proper_colorings(order, mu, colors))


def coloring_qsym(
    order: UnitIntervalOrder, mu, colors: int | None = None, stat: str = "asc"
) -> QSymFunc:
    """The coloring generating function in the quasisymmetric monomial
    basis, from brute-force enumeration with a finite color supply."""
    mu = tuple(mu)
    d = sum(mu)
    if colors is None:
        colors = d
    if colors < d:
        raise ValueError(f"need at least {d} colors to determine the function")
    if stat == "asc":
        statistic = coloring_ascents
    elif stat == "des":
        statistic = coloring_descents
    else:
        raise ValueError(f"unknown statistic {stat!r}")
    monos: dict = {}
    for kappa in proper_colorings(order, mu, colors):
        exp = [0] * colors
        for cs in kappa.values():
            for c in cs:
                exp[c - 1] += 1
        key = tuple(exp)
        w = statistic(order, kappa)
        monos[key] = monos.get(key, QPoly()) + QPoly.monomial(w)
    terms = {}
    for exp, poly in monos.items():
        ell = colors
        while ell and exp[ell - 1] == 0:
            ell -= 1
        alpha = exp[:ell]
        if all(x > 0 for x in alpha):
            terms[tuple(alpha)] = poly
    return QSymFunc(d, terms)


def asc_des_symmetry_check(order: UnitIntervalOrder, mu, colors: int | None = None) -> bool:
    return coloring_qsym(order, mu, colors, "asc") == coloring_qsym(
        order, mu, colors, "des"
    )


# ---------------------------------------------------------------------------
# word route


def omega_chromatic_qsym(order: UnitIntervalOrder, mu) -> QSymFunc:
    """The omega image of the chromatic function, assembled from words:
    sum over words of type mu of q^inversions times the fundamental
    function of the descent set."""
    return _omega_chromatic_qsym(order, tuple(mu))


@lru_cache(maxsize=256)
def _omega_chromatic_qsym(order, mu):
    d = sum(mu)
    by_descents: dict = {}
    for w in multiset_permutations(mu):
        s = descent_positions(order, w)
        by_descents[s] = by_descents.get(s, QPoly()) + QPoly.monomial(
            inversion_count(order, w)
        )
    out = QSymFunc(d)
    for s, c in by_descents.items():
        out = out + QSymFunc.fundamental(d, s, c)
    return out


def omega_chromatic_sym(order: UnitIntervalOrder, mu) -> SymFunc:
    return omega_chromatic_qsym(order, mu).to_symmetric()


def chromatic_sym(order: UnitIntervalOrder, mu) -> SymFunc:
    """The chromatic function itself, via words and one omega involution."""
    return omega_chromatic_sym(order, mu).omega()


# ---------------------------------------------------------------------------
# heap and class generating functions


def heap_qsym(heap: Heap) -> QSymFunc:
    """Fundamental-basis sum over the words of one heap."""
    d = heap.size
    out = QSymFunc(d)
    for w in heap.words():
        out = out + QSymFunc.fundamental(d, descent_positions(heap.order, w))
    return out


def class_qsym(cls: HeapClass) -> QSymFunc:
    out = None
    for h in cls.heaps:
        k = heap_qsym(h)
        out = k if out is None else out + k
    return out


def class_sym(cls: HeapClass) -> SymFunc:
    """The class generating function, which is genuinely symmetric."""
    return class_qsym(cls).to_symmetric()


# ---------------------------------------------------------------------------
# basis expansions


@dataclass
class ExpansionReport:
    """Coefficients of the chromatic function (or its omega image) in a
    basis, with per-partition provenance and positivity flags."""

    order: UnitIntervalOrder
    mu: tuple
    basis: str
    degree: int
    coefficients: dict
    provenance: dict
    positive: bool = field(init=False)

    def __post_init__(self):
        self.positive = all(c.is_nonnegative() for c in self.coefficients.values())

    def to_json(self) -> dict:
        parts = revlex_sorted(self.coefficients)
        return {
            "poset": self.order.text(),
            "mu": list(self.mu),
            "basis": self.basis,
            "degree": self.degree,
            "positive": self.positive,
            "terms": [
                {
                    "partition": list(lam),
                    "poly": self.coefficients[lam].to_json(),
                    "provenance": self.provenance[lam],
                }
                for lam in parts
            ],
        }


def expansion(order: UnitIntervalOrder, mu, basis: str) -> ExpansionReport:
    """Expand the chromatic function in a basis of {f, p, s, e, m, h}.

    f/p/s coefficients come from theorem pairings and are cross-checked
    against the basis change of the word-route function; e coefficients
    additionally get theorem cross-checks at two-column and hook shapes.
    """
    mu = tuple(mu)
    d = sum(mu)
    omega_x = omega_chromatic_sym(order, mu)
    coeffs: dict = {}
    prov: dict = {}
    if basis == "f":
        # X = sum a_lam f_lam, i.e. omega X = sum a_lam m_lam
        change = omega_x.terms
        for lam in partitions(d):
            theorem = pair_gamma(nc_h(order, lam), mu)
            other = change.get(lam, QPoly())
            if theorem != other:
                raise CrossCheckError(
                    f"f-coefficient of {lam}: pairing {theorem.pretty()} vs "
                    f"basis change {other.pretty()}"
                )
            if theorem:
                coeffs[lam] = theorem
                prov[lam] = "theorem+basis-change"
    elif basis == "p":
        # omega X = sum (1/z_lam) b_lam p_lam; report b_lam
        change = omega_x.in_basis("p")
        for lam in partitions(d):
            theorem = pair_gamma(nc_p(order, lam), mu)
            other = change.get(lam, QPoly()) * z_factor(lam)
            if theorem != other:
                raise CrossCheckError(
                    f"p-coefficient of {lam}: pairing {theorem.pretty()} vs "
                    f"basis change {other.pretty()}"
                )
            if theorem:
                coeffs[lam] = theorem
                prov[lam] = "theorem+basis-change"
    elif basis == "s":
        change = omega_x.in_basis("s")
        for lam in partitions(d):
            theorem = pair_gamma(nc_s(order, lam), mu)
            other = change.get(lam, QPoly())
            if theorem != other:
                raise CrossCheckError(
                    f"s-coefficient of {lam}: pairing {theorem.pretty()} vs "
                    f"basis change {other.pretty()}"
                )
            if theorem:
                coeffs[lam] = theorem
                prov[lam] = "theorem+basis-change"
    elif basis == "e":
        # X in e equals omega X in h
        for lam, c in omega_x.in_basis("h").items():
            coeffs[lam] = c
            prov[lam] = "basis-change"
        _cross_check_e(order, mu, coeffs)
        for lam in list(coeffs):
            if _two_column_params(lam) or _hook_params(lam):
                prov[lam] = "theorem+basis-change"
    elif basis == "m":
        for lam, c in omega_x.omega().terms.items():
            coeffs[lam] = c
            prov[lam] = "basis-change"
    elif basis == "h":
        for lam, c in omega_x.in_basis("e").items():
            coeffs[lam] = c
            prov[lam] = "basis-change"
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return ExpansionReport(order, mu, basis, d, coeffs, prov)


def _two_column_params(lam):
    """(k, l) with lam = (2^l, 1^(k-l)), or None."""
    if any(p > 2 for p in lam):
        return None
    l = sum(1 for p in lam if p == 2)
    k = len(lam)
    return (k, l)


def _hook_params(lam):
    """(a, l) with lam = (a+1, 1^l), a, l >= 1, or None."""
    if len(lam) < 2 or lam[0] < 3 or any(p != 1 for p in lam[1:]):
        return None
    return (lam[0] - 1, len(lam) - 1)


def _cross_check_e(order, mu, coeffs):
    d = sum(mu)
    for lam in partitions(d):
        tc = _two_column_params(lam)
        if tc is not None:
            got = coeff_e_two_column(order, mu, *tc, _cross_check=False)
            want = coeffs.get(lam, QPoly())
            if got != want:
                raise CrossCheckError(
                    f"two-column e-coefficient of {lam}: heaps give "
                    f"{got.pretty()}, basis change gives {want.pretty()}"
                )
        hk = _hook_params(lam)
        if hk is not None:
            got = coeff_e_hook(order, mu, *hk, _cross_check=False)
            want = coeffs.get(lam, QPoly())
            if got != want:
                raise CrossCheckError(
                    f"hook e-coefficient of {lam}: heaps give "
                    f"{got.pretty()}, basis change gives {want.pretty()}"
                )


# ---------------------------------------------------------------------------
# theorem-path e-coefficients


def coeff_e_two_column(
    order: UnitIntervalOrder, mu, k: int, l: int, _cross_check: bool = True
) -> QPoly:
    """e-coefficient at (2^l, 1^(k-l)): heaps with k rank-1 blocks and
    l rank-2 blocks and no connected component of type W."""
    mu = tuple(mu)
    if not k >= l >= 0:
        raise ValueError("need k >= l >= 0")
    out = QPoly()
    if k + l == sum(mu):
        for h in enumerate_heaps(order, mu):
            if h.rank > 2:
                continue
            n1 = sum(1 for r in h.levels if r == 1)
            n2 = sum(1 for r in h.levels if r == 2)
            if n1 != k or n2 != l:
                continue
            if any(h.component_type(c) == "W" for c in h.components):
                continue
            out = out + QPoly.monomial(h.ascents)
    if _cross_check:
        lam = (2,) * l + (1,) * (k - l)
        if not lam or sum(lam) != sum(mu):
            want = QPoly()
        else:
            want = omega_chromatic_sym(order, mu).in_basis("h").get(lam, QPoly())
        if out != want:
            raise CrossCheckError(
                f"two-column coefficient ({k},{l}): {out.pretty()} vs {want.pretty()}"
            )
    return out


def coeff_e_hook(
    order: UnitIntervalOrder, mu, a: int, l: int, _cross_check: bool = True
) -> QPoly:
    """e-coefficient at (a+1, 1^l): heaps with a+l+1 blocks, l+1 sinks,
    and the prescribed rank-2 structure."""
    mu = tuple(mu)
    if a < 1 or l < 1:
        raise ValueError("need a, l >= 1")
    out = QPoly()
    if a + l + 1 == sum(mu):
        for h in enumerate_heaps(order, mu):
            if _in_hook_family(h, l):
                out = out + QPoly.monomial(h.ascents)
    if _cross_check:
        lam = (a + 1,) + (1,) * l
        if sum(lam) != sum(mu):
            want = QPoly()
        else:
            want = omega_chromatic_sym(order, mu).in_basis("h").get(lam, QPoly())
        if out != want:
            raise CrossCheckError(
                f"hook coefficient ({a},{l}): {out.pretty()} vs {want.pretty()}"
            )
    return out


def _in_hook_family(h: Heap, l: int) -> bool:
    if h.sink_count != l + 1:
        return False
    rank2 = [b for b in range(h.size) if h.levels[b] == 2]
    if len(rank2) == 1:
        return True
    if len(rank2) != 2:
        return False
    p, r = rank2
    # (A) some rank-1 block q makes (p, q, r) flippable
    q = None
    for x, y, z in h.flippable_triples():
        if h.levels[y] == 1 and {x, z} == {p, r}:
            q = y
            break
    if q is None:
        return False
    # (B) q is the only block directly under p or r
    if h._lower[p] != (q,) or h._lower[r] != (q,):
        return False
    # (C) no forbidden path anywhere in the heap
    return not h.forbidden_paths()


def sink_sum(order: UnitIntervalOrder, mu, k: int, _cross_check: bool = True) -> QPoly:
    """Sum of q^ascents over type-mu heaps with exactly k sinks; equals
    the sum of e-coefficients over partitions of length k."""
    mu = tuple(mu)
    if k < 1:
        raise ValueError("need k >= 1")
    out = QPoly()
    for h in enumerate_heaps(order, mu):
        if h.sink_count == k:
            out = out + QPoly.monomial(h.ascents)
    if _cross_check:
        ecoeffs = omega_chromatic_sym(order, mu).in_basis("h")
        want = QPoly()
        for lam, c in ecoeffs.items():
            if len(lam) == k:
                want = want + c
        if out != want:
            raise CrossCheckError(
                f"sink sum k={k}: heaps give {out.pretty()}, e-report row "
                f"sums give {want.pretty()}"
            )
    return out


def closed_form_two_column(order: UnitIntervalOrder, lam) -> QPoly:
    """Closed form for two-column e-coefficients when the
    incomparability graph is triangle-free (a disjoint union of paths),
    with mu = (1^n)."""
    lam = tuple(lam)
    n = order.n
    if any(order.m[i - 1] >= i + 2 for i in range(1, n - 1)):
        return QPoly()  # a triangle forces every heap to rank >= 3
    comps = _graph_components(order)
    n_e = sum(1 for c in comps if len(c) % 2 == 0)
    n_o = sum(1 for c in comps if len(c) % 2 == 1)
    if (n + n_o) % 2:
        return QPoly()
    target = tuple(c for c in ((n + n_o) // 2, (n - n_o) // 2) if c)
    if conjugate(lam) != target:
        return QPoly()
    power = (n - 2 * n_e - n_o) // 2
    return QPoly.monomial(power) * (QPoly((1, 1)) ** n_e)


def _graph_components(order: UnitIntervalOrder) -> list:
    seen = set()
    comps = []
    for v in range(1, order.n + 1):
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in order.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# conjecture evidence


def positivity_report(order: UnitIntervalOrder, mu) -> dict:
    """Report (never assert) h-positivity of each class function and
    e-positivity of the chromatic function."""
    mu = tuple(mu)
    classes = enumerate_classes(order, mu)
    class_reports = []
    for cls in classes:
        hcoeffs = class_sym(cls).in_basis("h")
        class_reports.append(
            {
                "representative": "".join(map(str, cls.representative)),
                "size": len(cls),
                "ascents": cls.ascents,
                "h_positive": all(c.is_nonnegative() for c in hcoeffs.values()),
            }
        )
    e_report = expansion(order, mu, "e")
    return {
        "poset": order.text(),
        "mu": list(mu),
        "classes": class_reports,
        "all_classes_h_positive": all(r["h_positive"] for r in class_reports),
        "e_positive": e_report.positive,
    }


def scaling_check(order: UnitIntervalOrder, mu) -> bool:
    """Blow-up comparison: the plain chromatic function of the blown-up
    order equals the multi-color function times the product of
    q-factorials of the multiplicities."""
    mu = tuple(mu)
    blown = order.blow_up(mu)
    lhs = chromatic_sym(blown, (1,) * blown.n)
    factor = QPoly.one()
    for x in mu:
        factor = factor * q_factorial(x)
    rhs = chromatic_sym(order, mu).scale(factor)
    return lhs == rhs
