"""Exact scalars, the coefficient ring K[y], and the twisting maps sigma, delta.

Scalars are :class:`fractions.Fraction` values (always in lowest terms with a
positive denominator).  A :class:`BasePoly` is a dense tuple of scalars indexed
by the power of ``y``; the zero polynomial is the empty tuple.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

NEG_INF = float("-inf")

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value):
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational scalar")


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class BasePoly:
    """Univariate polynomial with rational coefficients, immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, BasePoly):
            coeffs = coeffs.coeffs
        elif isinstance(coeffs, (Rational, str)):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _strip([as_scalar(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("BasePoly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        # coeffs already Fractions
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", _strip(coeffs))
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, c=1):
        return cls._raw([ZERO] * degree + [as_scalar(c)])

    @classmethod
    def gen(cls):
        """The generator ``y``."""
        return cls.monomial(1)

    # ---- inspection -------------------------------------------------------

    @property
    def degree(self):
        """deg_y; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __getitem__(self, j):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return ZERO

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BasePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self):
        return hash(("BasePoly", self.coeffs))

    # ---- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, BasePoly):
            return other
        if isinstance(other, Rational):
            return BasePoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for j, c in enumerate(b):
            res[j] += c
        return BasePoly._raw(res)

    __radd__ = __add__

    def __neg__(self):
        return BasePoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return BasePoly._raw(())
        res = [ZERO] * (len(a) + len(b) - 1)
        # skip zeros: images under sigma are often sparse
        nz_b = [(j, c) for j, c in enumerate(b) if c]
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in nz_b:
                res[i + j] += ca * cb
        return BasePoly._raw(res)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = BasePoly._raw([ONE]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = as_scalar(c)
        return BasePoly._raw([c * x for x in self.coeffs])

    def compose(self, inner):
        """Return ``self(inner)``."""
        result = BasePoly._raw(())
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def __call__(self, value):
        if isinstance(value, BasePoly):
            return self.compose(value)
        result = ZERO
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    # ---- text -------------------------------------------------------------

    def format(self, var="y"):
        terms = [(j, c) for j, c in enumerate(self.coeffs) if c]
        if not terms:
            return "0"
        return join_terms(
            (c, _power(var, j)) for j, c in reversed(terms)
        )

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BasePoly({self.format()!r})"


def _power(var, k):
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{k}"


def format_scalar(c):
    return str(c)  # Fraction prints as "a" or "a/b"


def join_terms(terms):
    """Join ``(coefficient, monomial_text)`` pairs as ``c*m + ...``.

    Unit coefficients are dropped in front of a nonempty monomial and signs
    are folded into the separators.
    """
    out = []
    for c, mono in terms:
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{format_scalar(mag)}*{mono}"
        else:
            body = format_scalar(mag)
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out) if out else "0"


Y = BasePoly.gen()


@dataclass(frozen=True)
class OreAlgebra:
    """Presentation of S = K[y][x; sigma, delta].

    sigma is the K-algebra endomorphism with ``y -> sigma_y``; delta is the
    K-linear sigma-derivation with ``y -> delta_y``.
    """

    sigma_y: BasePoly
    delta_y: BasePoly
    _sigma_pows: list = field(default_factory=list, init=False, repr=False, compare=False)
    _delta_pows: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma_y", BasePoly(self.sigma_y))
        object.__setattr__(self, "delta_y", BasePoly(self.delta_y))
        if not self.sigma_y:
            raise ValueError("sigma(y) must be nonzero")

    @property
    def s(self):
        return self.sigma_y.degree

    @property
    def is_domain(self):
        """True iff sigma is injective (s >= 1), so S has no zero divisors."""
        return self.s >= 1

    @classmethod
    def weyl(cls):
        return cls(Y, BasePoly.constant(1))

    @classmethod
    def qpower(cls):
        return cls(Y * Y, BasePoly())

    def sigma_power(self, k):
        """sigma(y)^k, cached on the algebra."""
        pows = self._sigma_pows
        if not pows:
            pows.append(BasePoly.constant(1))
        while len(pows) <= k:
            pows.append(pows[-1] * self.sigma_y)
        return pows[k]

    def delta_power(self, k):
        """delta(y^k), via delta(y^k) = sigma(y) delta(y^(k-1)) + delta(y) y^(k-1)."""
        pows = self._delta_pows
        if not pows:
            pows.append(BasePoly())
        while len(pows) <= k:
            n = len(pows)
            pows.append(self.sigma_y * pows[-1] + self.delta_y * BasePoly.monomial(n - 1))
        return pows[k]

    def __str__(self):
        return f"K[y][x; y -> {self.sigma_y}, y -> {self.delta_y}]"


def base_add(p, q):
    return p + q


def base_mul(p, q):
    return p * q


def apply_sigma(p, algebra):
    """p(sigma(y))."""
    result = BasePoly()
    for j, c in enumerate(p.coeffs):
        if c:
            result = result + algebra.sigma_power(j).scale(c)
    return result


def apply_delta(p, algebra):
    result = BasePoly()
    for j, c in enumerate(p.coeffs):
        if c and j:
            result = result + algebra.delta_power(j).scale(c)
    return result


def apply_sigma_n(p, algebra, n):
    for _ in range(n):
        p = apply_sigma(p, algebra)
    return p
