"""Centralizers C_S(a), condition D(ell), and free K[a]-module bases.

All computations work on truncations: an element ``b = sum c_ij y^j x^i`` of
S is represented by its coordinates over the monomials ``y^j x^i`` with
``i <= n`` and ``j <= coeff_bound``, flattened in the order (i ascending,
j ascending).  The centralizer slice is the kernel of ``b -> [a, b]`` on that
space.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .basepoly import NEG_INF, BasePoly
from .errors import (
    BoundExhaustedError,
    DegenerateInputError,
    DomainError,
    NonCommutingError,
)
from .linalg import kernel_basis, solve
from .ore import OrePoly, chi, commutator, leading_coeff

log = logging.getLogger(__name__)

DEFAULT_MIN_COEFF_BOUND = 4
DEFAULT_MAX_DOUBLINGS = 3


def require_domain(algebra):
    if not algebra.is_domain:
        raise DomainError(
            f"s = deg_y(sigma(y)) = {algebra.s}: sigma is not injective, so S has "
            "zero divisors; centralizer computations need s >= 1"
        )


def require_nonscalar(a):
    if a.is_scalar():
        raise DegenerateInputError(
            f"a = {a} lies in K; its centralizer is all of S"
        )


@dataclass(frozen=True)
class CentralizerSlice:
    """K-basis of ``{b in C_S(a) : chi(b) <= n, deg_y of coefficients <= coeff_bound}``.

    The basis is in echelon form: every element has a distinct top monomial
    ``y^j x^i`` (highest i, then highest j) with coefficient 1, and elements
    are sorted by that monomial.
    """

    a: OrePoly
    n: int
    coeff_bound: int
    basis: tuple
    stable: bool = True

    @property
    def dimension(self):
        return len(self.basis)

    def degrees(self):
        return [chi(b) for b in self.basis]

    def leading_dims(self):
        """Dimension of the leading-coefficient space at each degree 0..n."""
        counts = Counter(self.degrees())
        return {d: counts.get(d, 0) for d in range(self.n + 1)}


def _commutator_matrix(a, n, coeff_bound):
    algebra = a.algebra
    unknowns = [(i, j) for i in range(n + 1) for j in range(coeff_bound + 1)]
    images = [
        commutator(a, OrePoly.monomial(algebra, i, j)).coordinates() for i, j in unknowns
    ]
    rows = sorted({key for img in images for key in img})
    index = {key: r for r, key in enumerate(rows)}
    M = [[Fraction(0)] * len(unknowns) for _ in rows]
    for col, img in enumerate(images):
        for key, c in img.items():
            M[index[key]][col] = c
    return M, unknowns


def _normalize_top(b):
    # leading coefficient's leading y-term becomes 1
    return b.scale(1 / leading_coeff(b).leading())


def _slice_basis(a, n, coeff_bound):
    M, unknowns = _commutator_matrix(a, n, coeff_bound)
    basis = []
    for v in kernel_basis(M, len(unknowns)):
        coords = {key: c for key, c in zip(unknowns, v) if c}
        basis.append(_normalize_top(OrePoly.from_coordinates(a.algebra, coords)))
    return tuple(basis)


def default_coeff_bound(a, n):
    """Starting coefficient bound for a slice of degree ``n``.

    The largest of: the minimum bound, the y-degrees of ``a``'s coefficients,
    and (when s >= 2) the leading-coefficient degrees forced by the balance
    equation for every degree up to ``n``.
    """
    cands = [DEFAULT_MIN_COEFF_BOUND, a.max_y_degree()]
    if a.algebra.s >= 2 and chi(a) >= 1:
        for k in range(n + 1):
            d = leading_coeff_degree_bound(a, k)
            if d is not None:
                cands.append(d)
    return max(cands)


def centralizer_slice(a, n, coeff_bound=None, max_doublings=DEFAULT_MAX_DOUBLINGS):
    """Exact K-basis of the degree-``n`` slice of C_S(a).

    With an explicit ``coeff_bound`` the slice is computed once.  Otherwise the
    bound starts at :func:`default_coeff_bound` and is doubled until two
    consecutive bounds give the same dimension (at most ``max_doublings``
    times; the result is then flagged ``stable=False``).
    """
    require_domain(a.algebra)
    require_nonscalar(a)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if coeff_bound is not None:
        if coeff_bound < 0:
            raise ValueError("coeff_bound must be nonnegative")
        return CentralizerSlice(a, n, coeff_bound, _slice_basis(a, n, coeff_bound))

    D = default_coeff_bound(a, n)
    basis = _slice_basis(a, n, D)
    for _ in range(max_doublings):
        wider = _slice_basis(a, n, 2 * D)
        if len(wider) == len(basis):
            return CentralizerSlice(a, n, D, basis)
        D, basis = 2 * D, wider
    log.warning(
        "centralizer slice of %s did not stabilize up to coefficient bound %d", a, D
    )
    return CentralizerSlice(a, n, D, basis, stable=False)


def leading_coeff_degree_bound(a, n):
    """deg_y of the leading coefficient of any degree-``n`` element of C_S(a).

    Comparing y-degrees of the top coefficients of ``ab`` and ``ba`` gives
    ``e + s^m d = d + s^n e`` with ``e = deg_y(a_m)``, hence
    ``d = e (s^n - 1) / (s^m - 1)``.  Returns ``None`` when that is not a
    nonnegative integer, in which case no such element exists.
    """
    s = a.algebra.s
    if s <= 1:
        raise ValueError(f"the balance equation is degenerate for s = {s}; need s >= 2")
    m = chi(a)
    if m == NEG_INF or m < 1:
        raise DegenerateInputError("a must have positive x-degree")
    if n < 0:
        raise ValueError("n must be nonnegative")
    e = leading_coeff(a).degree
    num, den = e * (s**n - 1), s**m - 1
    if num % den:
        return None
    return num // den


def leading_space_dim(a, n, coeff_bound=None):
    """dim_K of the leading coefficients of degree-``n`` centralizer elements."""
    return centralizer_slice(a, n, coeff_bound).leading_dims()[n]


@dataclass
class ConditionDReport:
    a: OrePoly
    ell: int
    max_degree: int
    coeff_bound: int
    dims: dict
    violations: list = field(default_factory=list)
    negative_degree: list = field(default_factory=list)
    stable: bool = True

    @property
    def passed(self):
        return not self.violations and not self.negative_degree


def check_condition_D(a, ell, N, coeff_bound=None):
    """Check D(ell) for C_S(a) on every degree 0..N.

    D(ell) at degree n holds iff the leading-coefficient space has dimension
    at most ``ell``; additionally every nonzero element must have chi >= 0.
    """
    sl = centralizer_slice(a, N, coeff_bound)
    dims = sl.leading_dims()
    report = ConditionDReport(a, ell, N, sl.coeff_bound, dims, stable=sl.stable)
    report.violations = [n for n, d in dims.items() if d > ell]
    report.negative_degree = [str(b) for b in sl.basis if chi(b) < 0]
    return report


@dataclass(frozen=True)
class ModuleBasis:
    """Greedy K[a]-module basis ``b_1 = 1, b_2, ...`` of the centralizer."""

    a: OrePoly
    m: int
    elements: tuple
    degrees: tuple
    max_degree: int = 0
    coeff_bound: int = 0

    def __len__(self):
        return len(self.elements)

    def residue_counts(self):
        return Counter(d % self.m for d in self.degrees)


def greedy_basis(a, N, coeff_bound=None):
    """Greedy free K[a]-module basis of C_S(a) found from the degree-N slice.

    Starts from ``b_1 = 1`` and repeatedly adjoins a slice element of minimal
    x-degree that does not reduce to zero against the current basis.  Slice
    elements are visited in echelon order, which makes the choice
    deterministic.
    """
    require_domain(a.algebra)
    require_nonscalar(a)
    m = chi(a)
    if m < 1:
        raise DegenerateInputError(f"a = {a} has x-degree 0; the basis needs chi(a) > 0")
    if N < m:
        raise BoundExhaustedError(f"degree bound N = {N} is below chi(a) = {m}")
    sl = centralizer_slice(a, N, coeff_bound)
    one = OrePoly.one(a.algebra)
    basis = ModuleBasis(a, m, (one,), (0,), N, sl.coeff_bound)
    for c in sl.basis:
        member, _ = span_membership(c, basis)
        if not member:
            basis = ModuleBasis(
                a, m, basis.elements + (c,), basis.degrees + (chi(c),), N, sl.coeff_bound
            )
    return basis


def span_membership(c, basis):
    """Decide whether ``c`` lies in the K[a]-span of ``basis``.

    Repeatedly cancels the top x-degree of ``c`` with a K-combination of the
    products ``a^j b_i`` of that degree.  If the top term cannot be cancelled,
    ``c`` is not in the span: a K[a]-combination of the greedy basis always
    has degree equal to its largest term degree.

    Returns ``(True, phis)`` with ``phis[i]`` the coefficient polynomial of
    ``b_i`` in the variable ``a`` (as a BasePoly), or ``(False, None)``.
    """
    a, m = basis.a, basis.m
    if commutator(a, c):
        raise NonCommutingError(f"{c} does not commute with a = {a}")
    phis = [dict() for _ in basis.elements]
    a_pows = [OrePoly.one(a.algebra)]
    rem = c
    while rem:
        d = chi(rem)
        terms = []
        for idx, (b, db) in enumerate(zip(basis.elements, basis.degrees)):
            if db <= d and (d - db) % m == 0:
                j = (d - db) // m
                while len(a_pows) <= j:
                    a_pows.append(a_pows[-1] * a)
                terms.append((idx, j, a_pows[j] * b))
        if not terms:
            return False, None
        target = leading_coeff(rem)
        lcs = [leading_coeff(t) for _, _, t in terms]
        height = max(len(target), *(len(p) for p in lcs))
        M = [[p[r] for p in lcs] for r in range(height)]
        alphas = solve(M, [target[r] for r in range(height)], len(lcs))
        if alphas is None:
            return False, None
        for alpha, (idx, j, t) in zip(alphas, terms):
            if alpha:
                rem = rem - t.scale(alpha)
                phis[idx][j] = phis[idx].get(j, 0) + alpha
    out = []
    for ph in phis:
        dense = [0] * (max(ph) + 1 if ph else 0)
        for j, v in ph.items():
            dense[j] = v
        out.append(BasePoly(dense))
    return True, out


def combine(basis, phis):
    """``sum_i phis[i](a) * b_i`` for coefficient polynomials in the variable a."""
    a = basis.a
    total = OrePoly.zero(a.algebra)
    a_pows = [OrePoly.one(a.algebra)]
    for phi, b in zip(phis, basis.elements):
        for j, c in enumerate(phi.coeffs):
            if not c:
                continue
            while len(a_pows) <= j:
                a_pows.append(a_pows[-1] * a)
            total = total + (a_pows[j] * b).scale(c)
    return total


def check_rank_divides(basis):
    return basis.m % len(basis.elements) == 0


@dataclass
class CommutativityReport:
    a: OrePoly
    max_degree: int
    coeff_bound: int
    basis: tuple
    noncommuting: list = field(default_factory=list)
    stable: bool = True

    @property
    def passed(self):
        return not self.noncommuting


def check_commutative(a, N, coeff_bound=None):
    """Check that all elements of the degree-N slice of C_S(a) commute pairwise."""
    sl = centralizer_slice(a, N, coeff_bound)
    report = CommutativityReport(a, N, sl.coeff_bound, sl.basis, stable=sl.stable)
    for i, b in enumerate(sl.basis):
        for c in sl.basis[i + 1:]:
            if commutator(b, c):
                report.noncommuting.append((str(b), str(c)))
    return report
