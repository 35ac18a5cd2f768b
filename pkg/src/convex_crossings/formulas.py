"""Exact closed forms for outerplanar crossing numbers.

Covers K_{m,n} with m | n, the balanced K_{m^(n)}, and K(p^(1), m^(n)) in the
two divisibility regimes p | mn and mn | p. Everything is evaluated over
``fractions.Fraction``; a non-integral or negative result is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .errors import PreconditionError

# (coefficient, exponent of m, exponent of n, exponent of p)
THEOREM1_TERMS: Tuple[Tuple[Fraction, int, int, int], ...] = (
    (Fraction(1, 24), 4, 4, 0),
    (Fraction(1, 12), 2, 3, 0),
    (Fraction(-1, 12), 4, 3, 0),
    (Fraction(-1, 4), 3, 3, 0),
    (Fraction(1, 2), 3, 2, 0),
    (Fraction(1, 24), 4, 2, 0),
    (Fraction(-1, 4), 3, 1, 0),
    (Fraction(1, 6), 2, 2, 2),
    (Fraction(-1, 4), 1, 1, 2),
    (Fraction(-3, 4), 2, 2, 1),
    (Fraction(1, 12), 1, 1, 1),
    (Fraction(1, 2), 2, 1, 1),
    (Fraction(-1, 6), 3, 2, 1),
    (Fraction(1, 6), 3, 3, 1),
    (Fraction(1, 6), 1, 2, 1),
)

# Same terms scaled by the common denominator 24.
_TERMS_24 = tuple((int(c * 24), a, b, e) for c, a, b, e in THEOREM1_TERMS)


class NonIntegralValue(ArithmeticError):
    """A crossing-number formula produced a fraction or a negative number."""


def _count(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralValue(f"{what} evaluated to non-integer {value}")
    if value < 0:
        raise NonIntegralValue(f"{what} evaluated to negative {value}")
    return value.numerator


def _positive(**kwargs: int) -> None:
    for name, v in kwargs.items():
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {v!r}")


@dataclass(frozen=True)
class FormulaInput:
    m: int
    n: int
    p: int

    def __post_init__(self) -> None:
        _positive(m=self.m, n=self.n, p=self.p)

    @property
    def mn(self) -> int:
        return self.m * self.n

    @property
    def p_divides_mn(self) -> bool:
        return self.mn % self.p == 0

    @property
    def mn_divides_p(self) -> bool:
        return self.p % self.mn == 0

    @property
    def applicable(self) -> bool:
        return self.p_divides_mn or self.mn_divides_p


def nu1_bipartite(m: int, n: int) -> int:
    """nu_1(K_{m,n}) for m | n: n(m-1)(2mn-3m-n)/12."""
    _positive(m=m, n=n)
    if n % m:
        raise PreconditionError(f"bipartite formula needs m | n, got m={m}, n={n}")
    return _count(Fraction(n * (m - 1) * (2 * m * n - 3 * m - n), 12), "nu1(K_{m,n})")


def nu1_balanced(m: int, n: int) -> int:
    """nu_1(K_{m^(n)}), the complete n-partite graph with all sets of size m."""
    _positive(m=m, n=n)
    value = Fraction(
        m * m * n * (n - 1) * (m * m * n * n + 2 * n - m * m * n - 6 * m * n + 6 * m), 24
    )
    return _count(value, "nu1(K_{m^(n)})")


def phi(m: int, n: int, p: int) -> Fraction:
    """The fifteen-term polynomial in m, n, p, without any divisibility check."""
    return Fraction(sum(c * m**a * n**b * p**e for c, a, b, e in _TERMS_24), 24)


def nu1_theorem1(m: int, n: int, p: int) -> int:
    """nu_1(K(p^(1), m^(n))) when p | mn."""
    args = FormulaInput(m, n, p)
    if not args.p_divides_mn:
        raise PreconditionError(f"needs p | mn, got p={p}, mn={args.mn}")
    return _count(phi(m, n, p), "phi(m,n,p)")


def nu1_theorem2(m: int, n: int, p: int) -> int:
    """nu_1(K(p^(1), m^(n))) when mn | p: phi - (mn)^2/12 + p^2/12."""
    args = FormulaInput(m, n, p)
    if not args.mn_divides_p:
        raise PreconditionError(f"needs mn | p, got p={p}, mn={args.mn}")
    value = phi(m, n, p) - Fraction(args.mn**2, 12) + Fraction(p * p, 12)
    return _count(value, "phi(m,n,p) - (mn)^2/12 + p^2/12")


def nu1_special(m: int, n: int, p: int) -> Tuple[str, int]:
    """Pick the applicable theorem for K(p^(1), m^(n)).

    Returns ``("t1", value)`` when p | mn (including p = mn) and
    ``("t2", value)`` when only mn | p.
    """
    args = FormulaInput(m, n, p)
    if args.p_divides_mn:
        return "t1", nu1_theorem1(m, n, p)
    if args.mn_divides_p:
        return "t2", nu1_theorem2(m, n, p)
    raise PreconditionError("no applicable theorem")


def closed_form_value(m: int, n: int, p: int) -> int:
    return nu1_special(m, n, p)[1]


def floor_sum(m: int, n: int) -> int:
    """Sum of floor((k-1)/n) for k = 1..mn, in closed form mn(m-1)/2."""
    _positive(m=m, n=n)
    return m * n * (m - 1) // 2
