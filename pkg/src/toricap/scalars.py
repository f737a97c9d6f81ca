"""Exact scalars: rationals plus one symbolic infinitesimal.

Action values of perturbed domains live in Q + Q*delta, where delta > 0 is an
infinitesimal tie-breaker (the "b -> b + delta" replacement).  Representing the
delta coefficient symbolically makes every comparison exact: no epsilon is ever
instantiated as a float, so the "sufficiently small" limit is taken literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "n" into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class PerturbedScalar:
    """base + delta_coefficient * delta, ordered lexicographically.

    The lexicographic order (base first, then delta coefficient) is the limit
    order for delta -> 0+.  Addition and scaling by nonnegative integers act
    componentwise; that is all the arithmetic the action filtration needs.
    """

    base: Fraction
    delta: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.base, Fraction):
            object.__setattr__(self, "base", Fraction(self.base))

    def __add__(self, other: "PerturbedScalar") -> "PerturbedScalar":
        return PerturbedScalar(self.base + other.base, self.delta + other.delta)

    def __mul__(self, n: int) -> "PerturbedScalar":
        if n < 0:
            raise ValueError("PerturbedScalar scaling requires a nonnegative integer")
        return PerturbedScalar(self.base * n, self.delta * n)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"base": format_rational(self.base), "delta": str(self.delta)}

    @staticmethod
    def from_json(data: dict) -> "PerturbedScalar":
        return PerturbedScalar(parse_rational(data["base"]), int(data["delta"]))

    def __str__(self) -> str:
        if self.delta == 0:
            return format_rational(self.base)
        return f"{format_rational(self.base)}+{self.delta}d"


PS_ZERO = PerturbedScalar(Fraction(0), 0)
