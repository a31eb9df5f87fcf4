"""Commutative symmetric and quasisymmetric functions with exact
q-polynomial coefficients.

Symmetric functions are stored in the monomial basis, indexed by
partitions of a fixed homogeneous degree. Expansions of the elementary,
complete homogeneous, power sum and Schur bases into monomials are
computed by counting matrices with prescribed row structure and column
sums; basis changes in the other direction invert the (rational)
transition matrix exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .partitions import (
    compositions,
    composition_to_subset,
    conjugate,
    multiset_permutations,
    partitions,
    revlex_sorted,
    subset_to_composition,
)
from .qpoly import QPoly


class NotSymmetricError(ValueError):
    """Raised when a quasisymmetric function fails to be symmetric.

    The witness records two compositions with the same part multiset
    whose monomial coefficients differ.
    """

    def __init__(self, alpha, beta, coeff_alpha, coeff_beta):
        self.witness = (alpha, beta, coeff_alpha, coeff_beta)
        super().__init__(
            f"coefficient of M_{list(alpha)} is {coeff_alpha.pretty()} but "
            f"coefficient of M_{list(beta)} is {coeff_beta.pretty()}"
        )


def _fills(k, caps):
    """Vectors v with 0 <= v_j <= caps[j] and sum k."""
    if not caps:
        if k == 0:
            yield ()
        return
    for v in range(min(k, caps[0]) + 1):
        for rest in _fills(k - v, caps[1:]):
            yield (v,) + rest


def _canon(rem):
    return tuple(sorted((x for x in rem if x > 0), reverse=True))


@lru_cache(maxsize=None)
def _count_matrices(rows, rem):
    """Matrices with prescribed rows and column sums rem (a partition).

    Each row is ('e', k): 0/1 entries summing to k; ('h', k): nonnegative
    entries summing to k; or ('p', k): the single entry k in one column.
    The count is symmetric in the columns, so rem is kept sorted.
    """
    if not rows:
        return 1 if not rem else 0
    kind, k = rows[0]
    rest = rows[1:]
    total = 0
    if kind == "e":
        if k > len(rem):
            return 0
        for idxs in combinations(range(len(rem)), k):
            new = list(rem)
            for j in idxs:
                new[j] -= 1
            total += _count_matrices(rest, _canon(new))
    elif kind == "h":
        for fill in _fills(k, rem):
            total += _count_matrices(
                rest, _canon(tuple(r - v for r, v in zip(rem, fill)))
            )
    elif kind == "p":
        seen = set()
        for j, r in enumerate(rem):
            if r >= k and r not in seen:
                seen.add(r)
                mult = sum(1 for x in rem if x == r)
                new = list(rem)
                new[j] -= k
                total += mult * _count_matrices(rest, _canon(new))
    else:
        raise ValueError(f"unknown row kind {kind!r}")
    return total


def _rows_to_m(rows) -> dict:
    """Monomial expansion of a product of e/h/p generators."""
    d = sum(k for _, k in rows)
    rows = tuple(sorted(rows, key=lambda r: (-r[1], r[0])))
    out = {}
    for nu in partitions(d):
        c = _count_matrices(rows, nu)
        if c:
            out[nu] = c
    return out


def transition_M(lam, mu) -> int:
    """Number of 0/1 matrices with row sums lam and column sums mu.

    This is the coefficient of m_mu in e_lam.
    """
    if sum(lam) != sum(mu):
        return 0
    rows = tuple(sorted((("e", k) for k in lam), key=lambda r: -r[1]))
    return _count_matrices(rows, tuple(sorted(mu, reverse=True)))


@lru_cache(maxsize=None)
def basis_to_m(basis: str, lam: tuple) -> dict:
    """Monomial expansion of a basis element, partition -> exact scalar."""
    lam = tuple(lam)
    d = sum(lam)
    if basis == "m":
        return {lam: 1}
    if basis in ("e", "h", "p"):
        return _rows_to_m(tuple((basis, k) for k in lam))
    if basis == "s":
        return _schur_to_m(lam)
    if basis == "f":
        # forgotten basis: the omega image of the monomial basis
        coords = m_in_basis_coords(d, "e")[lam]
        out = {}
        for mu, c in coords.items():
            for nu, a in basis_to_m("h", mu).items():
                out[nu] = out.get(nu, Fraction(0)) + c * a
        return {nu: _as_int(c) for nu, c in out.items() if c != 0}
    raise ValueError(f"unknown basis {basis!r}")


def _as_int(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            return c
        return int(c)
    return c


def _schur_to_m(lam) -> dict:
    """Dual Jacobi-Trudi: signed sum over permutations of e-products."""
    if not lam:
        return {(): 1}
    mcols = lam[0]
    colsums = conjugate(lam)
    out = {}
    for sigma, sign in _signed_perms(mcols):
        rows = []
        ok = True
        for j in range(mcols):
            k = colsums[j] + sigma[j] - (j + 1)
            if k < 0:
                ok = False
                break
            if k > 0:
                rows.append(("e", k))
        if not ok:
            continue
        for nu, c in _rows_to_m(tuple(rows)).items():
            out[nu] = out.get(nu, 0) + sign * c
    return {nu: c for nu, c in out.items() if c != 0}


@lru_cache(maxsize=None)
def _signed_perms(m: int) -> tuple:
    """All permutations of [m] as tuples, with their signs."""
    if m == 0:
        return (((), 1),)
    out = []
    for perm, sign in _signed_perms(m - 1):
        for pos in range(m):
            new = perm[:pos] + (m,) + perm[pos:]
            out.append((new, sign * (-1) ** (m - 1 - pos)))
    return tuple(out)


@lru_cache(maxsize=None)
def _inverse_transition(basis: str, d: int):
    """Partitions of d (decreasing revlex) and the inverse of the
    basis-to-monomial transition matrix, as exact Fractions."""
    parts = revlex_sorted(partitions(d))
    idx = {lam: i for i, lam in enumerate(parts)}
    p = len(parts)
    mat = [[Fraction(0)] * p for _ in range(p)]
    for j, lam in enumerate(parts):
        for mu, c in basis_to_m(basis, lam).items():
            mat[idx[mu]][j] = Fraction(c)
    inv = _invert(mat)
    return tuple(parts), inv


def _invert(mat):
    """Exact Gauss-Jordan inverse of a rational matrix."""
    p = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(p)] for i, row in enumerate(mat)]
    for col in range(p):
        pivot = next((r for r in range(col, p) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("transition matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(p):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[p:]) for row in aug)


@lru_cache(maxsize=None)
def m_in_basis_coords(d: int, basis: str) -> dict:
    """For each partition lam of d, the coordinates of m_lam in the basis."""
    parts, inv = _inverse_transition(basis, d)
    out = {}
    for i, lam in enumerate(parts):
        out[lam] = {
            parts[j]: inv[j][i] for j in range(len(parts)) if inv[j][i] != 0
        }
    return out


def monomial_ones(lam, N: int) -> int:
    """Value of m_lam with N variables all set to 1."""
    ell = len(lam)
    if ell > N:
        return 0
    count = factorial(N) // factorial(N - ell)
    for part in set(lam):
        count //= factorial(lam.count(part))
    return count


class SymFunc:
    """Homogeneous symmetric function, stored in the monomial basis."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"{lam} is not a partition of {degree}")
            if tuple(sorted(lam, reverse=True)) != lam:
                raise ValueError(f"{lam} is not weakly decreasing")
            if not isinstance(c, QPoly):
                c = QPoly((c,))
            if c:
                clean[lam] = c
        self.terms = clean

    @classmethod
    def basis_element(cls, basis: str, lam, coeff=None) -> "SymFunc":
        lam = tuple(sorted(lam, reverse=True))
        coeff = QPoly.one() if coeff is None else coeff
        if not isinstance(coeff, QPoly):
            coeff = QPoly((coeff,))
        terms = {}
        for mu, c in basis_to_m(basis, lam).items():
            terms[mu] = coeff * c
        return cls(sum(lam), terms)

    @classmethod
    def from_coords(cls, basis: str, degree: int, coords) -> "SymFunc":
        out = cls(degree)
        for lam, c in coords.items():
            out = out + cls.basis_element(basis, lam, c)
        return out

    def m_coeff(self, lam) -> QPoly:
        return self.terms.get(tuple(lam), QPoly())

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, QPoly()) + c
        return SymFunc(self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        return SymFunc(self.degree, {lam: v * c for lam, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, SymFunc)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def in_basis(self, basis: str) -> dict:
        """Coordinates in the chosen basis, partition -> QPoly."""
        if basis == "m":
            return dict(self.terms)
        parts, inv = _inverse_transition(basis, self.degree)
        vec = [self.terms.get(lam, QPoly()) for lam in parts]
        out = {}
        for j, lam in enumerate(parts):
            c = QPoly()
            for i, v in enumerate(vec):
                if v and inv[j][i] != 0:
                    c = c + v * inv[j][i]
            if c:
                out[lam] = c
        return out

    def omega(self) -> "SymFunc":
        """The involution exchanging elementary and complete bases."""
        return SymFunc.from_coords("h", self.degree, self.in_basis("e"))

    def is_positive_in(self, basis: str) -> bool:
        return all(c.is_nonnegative() for c in self.in_basis(basis).values())

    def eval_ones(self, N: int, q_value=1):
        """Specialize all of x_1..x_N to 1 and q to q_value."""
        return sum(
            c(q_value) * monomial_ones(lam, N) for lam, c in self.terms.items()
        )

    def to_json(self, basis: str = "m") -> dict:
        coords = self.in_basis(basis)
        return {
            "degree": self.degree,
            "basis": basis,
            "terms": [
                {"partition": list(lam), "poly": coords[lam].to_json()}
                for lam in revlex_sorted(coords)
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        coords = {
            tuple(t["partition"]): QPoly.from_json(t["poly"])
            for t in data["terms"]
        }
        return cls.from_coords(data["basis"], data["degree"], coords)

    def __repr__(self):
        body = " + ".join(
            f"({c.pretty()})*m{list(lam)}" for lam, c in sorted(self.terms.items(), reverse=True)
        )
        return f"SymFunc({body or '0'})"


class QSymFunc:
    """Homogeneous quasisymmetric function in the monomial basis,
    indexed by compositions."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if sum(alpha) != degree or any(a <= 0 for a in alpha):
                raise ValueError(f"{alpha} is not a composition of {degree}")
            if not isinstance(c, QPoly):
                c = QPoly((c,))
            if c:
                clean[alpha] = c
        self.terms = clean

    @classmethod
    def fundamental(cls, degree: int, subset, coeff=None) -> "QSymFunc":
        """F_{degree,S} expanded in the monomial basis."""
        subset = frozenset(subset)
        coeff = QPoly.one() if coeff is None else coeff
        if not isinstance(coeff, QPoly):
            coeff = QPoly((coeff,))
        rest = sorted(set(range(1, degree)) - subset)
        terms = {}
        for r in range(len(rest) + 1):
            for extra in combinations(rest, r):
                alpha = subset_to_composition(degree, subset | set(extra))
                terms[alpha] = terms.get(alpha, QPoly()) + coeff
        return cls(degree, terms)

    def __add__(self, other):
        if not isinstance(other, QSymFunc):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("degrees differ")
        terms = dict(self.terms)
        for alpha, c in other.terms.items():
            terms[alpha] = terms.get(alpha, QPoly()) + c
        return QSymFunc(self.degree, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "QSymFunc":
        return QSymFunc(self.degree, {a: v * c for a, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, QSymFunc)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def m_coeff(self, alpha) -> QPoly:
        return self.terms.get(tuple(alpha), QPoly())

    def f_coords(self) -> dict:
        """Coordinates in the fundamental basis, subset -> QPoly.

        Inverts F_{n,S} = sum over supersets T of M_{alpha(T)} by
        inclusion-exclusion.
        """
        d = self.degree
        out = {}
        for alpha in compositions(d):
            s = composition_to_subset(alpha)
            inside = sorted(s)
            c = QPoly()
            for r in range(len(inside) + 1):
                for sub in combinations(inside, r):
                    beta = subset_to_composition(d, set(sub))
                    v = self.terms.get(beta)
                    if v:
                        c = c + v * ((-1) ** (len(inside) - r))
            if c:
                out[s] = c
        return out

    def omega_involution(self) -> "QSymFunc":
        """Complement descent sets in the fundamental basis."""
        d = self.degree
        full = set(range(1, d))
        out = QSymFunc(d)
        for s, c in self.f_coords().items():
            out = out + QSymFunc.fundamental(d, full - s, c)
        return out

    def to_symmetric(self) -> SymFunc:
        """Reinterpret as a symmetric function or raise NotSymmetricError."""
        groups = {}
        for alpha in self.terms:
            groups.setdefault(tuple(sorted(alpha, reverse=True)), []).append(alpha)
        sym_terms = {}
        for lam, present in groups.items():
            ref = self.terms[present[0]]
            for alpha in multiset_permutations(_parts_as_mu(lam)):
                beta = _mu_word_to_composition(alpha, lam)
                c = self.terms.get(beta, QPoly())
                if c != ref:
                    raise NotSymmetricError(present[0], beta, ref, c)
            sym_terms[lam] = ref
        return SymFunc(self.degree, sym_terms)

    def __repr__(self):
        body = " + ".join(
            f"({c.pretty()})*M{list(a)}" for a, c in sorted(self.terms.items())
        )
        return f"QSymFunc({body or '0'})"


def _parts_as_mu(lam):
    """Multiplicity vector of the distinct parts of lam (sorted ascending)."""
    distinct = sorted(set(lam))
    return tuple(lam.count(p) for p in distinct)


def _mu_word_to_composition(word, lam):
    """Map a word over distinct-part indices back to a composition."""
    distinct = sorted(set(lam))
    return tuple(distinct[a - 1] for a in word)
