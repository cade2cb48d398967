"""Annihilating polynomials f(s, t) with f(P, Q) = 0 for commuting P, Q."""

from fractions import Fraction
from math import gcd, lcm

from .basepoly import join_terms
from .centralizer import require_nonscalar, require_domain
from .errors import BudgetExhaustedError, NonCommutingError
from .linalg import kernel_basis
from .ore import OrePoly, chi, commutator

DEFAULT_MAX_DOUBLINGS = 5


class BivariatePoly:
    """Polynomial in two commuting variables s, t over Q.

    Stored as a mapping ``(i, j) -> c`` for the monomials ``s^i t^j``; only
    nonzero coefficients are kept.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v}
        object.__setattr__(self, "coeffs", dict(sorted(coeffs.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BivariatePoly is immutable")

    def __getitem__(self, key):
        return self.coeffs.get(key, Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BivariatePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def monomials(self):
        return list(self.coeffs)

    def normalized(self):
        """Primitive integer multiple whose first coefficient in (i, j)-lex order is positive."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs.values():
            den = lcm(den, c.denominator)
        ints = {k: int(c * den) for k, c in self.coeffs.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if next(iter(ints.values())) < 0:
            g = -g
        return BivariatePoly({k: Fraction(c, g) for k, c in ints.items()})

    def __str__(self):
        terms = []
        for (i, j), c in self.coeffs.items():
            parts = []
            if i:
                parts.append("s" if i == 1 else f"s^{i}")
            if j:
                parts.append("t" if j == 1 else f"t^{j}")
            terms.append((c, "*".join(parts)))
        return join_terms(terms)

    def __repr__(self):
        return f"BivariatePoly({str(self)!r})"


def _require_commuting(P, Q):
    if commutator(P, Q):
        raise NonCommutingError(
            f"commutator [P, Q] is nonzero: [{P}, {Q}] = {commutator(P, Q)}"
        )


def _powers(P, k):
    out = [OrePoly.one(P.algebra)]
    for _ in range(k):
        out.append(out[-1] * P)
    return out


def evaluate(f, P, Q):
    """``f(P, Q) = sum c_ij P^i Q^j``."""
    _require_commuting(P, Q)
    top_i = max((i for i, _ in f.coeffs), default=0)
    top_j = max((j for _, j in f.coeffs), default=0)
    Ps, Qs = _powers(P, top_i), _powers(Q, top_j)
    total = OrePoly.zero(P.algebra)
    for (i, j), c in f.coeffs.items():
        total = total + (Ps[i] * Qs[j]).scale(c)
    return total


def annihilating_polynomial(P, Q, I, J):
    """Nonzero f with deg_s f <= I, deg_t f <= J and f(P, Q) = 0, or ``None``.

    The products ``P^i Q^j`` are flattened to coordinates and a kernel vector
    is taken.  Columns are ordered (i, j)-lexicographically, so the first
    kernel vector is the one with the smallest leading monomial.
    """
    require_domain(P.algebra)
    require_nonscalar(P)
    _require_commuting(P, Q)
    Ps, Qs = _powers(P, I), _powers(Q, J)
    monos = [(i, j) for i in range(I + 1) for j in range(J + 1)]
    images = [(Ps[i] * Qs[j]).coordinates() for i, j in monos]
    rows = sorted({key for img in images for key in img})
    index = {key: r for r, key in enumerate(rows)}
    M = [[Fraction(0)] * len(monos) for _ in rows]
    for col, img in enumerate(images):
        for key, c in img.items():
            M[index[key]][col] = c
    kernel = kernel_basis(M, len(monos))
    if not kernel:
        return None
    f = BivariatePoly(dict(zip(monos, kernel[0]))).normalized()
    if evaluate(f, P, Q):
        raise ArithmeticError(f"kernel vector {f} does not annihilate (P, Q)")
    return f


def annihilating_polynomial_auto(P, Q, max_doublings=DEFAULT_MAX_DOUBLINGS):
    """Search bounds ``I = chi(Q) + 1, J = chi(P) + 1``, doubling both until f exists."""
    I = max(chi(Q), 0) + 1
    J = max(chi(P), 0) + 1
    for _ in range(max_doublings + 1):
        f = annihilating_polynomial(P, Q, I, J)
        if f is not None:
            return f
        I, J = 2 * I, 2 * J
    raise BudgetExhaustedError(
        f"no annihilating polynomial with deg_s <= {I // 2}, deg_t <= {J // 2} "
        f"after {max_doublings} doublings"
    )
