"""The differential graded Lie algebra on alpha/beta generators and its bar complex.

Generators: alpha_{i,j} (i,j >= 1, odd degree -1-2i-2j) and beta_{i,j}
((i,j) != (0,0), even degree -2-2i-2j).  Structure maps:

    d(alpha_{i,j}) = j*beta_{i-1,j} - i*beta_{i,j-1},      d(beta_{i,j}) = 0
    [alpha_{i,j}, alpha_{k,l}] = (i*l - j*k) * alpha_{i+k,j+l}
    [alpha_{i,j}, beta_{k,l}]  = (i*l - j*k) * beta_{i+k,j+l}
    [beta, beta] = 0

Linear combinations are plain dicts generator -> nonzero Fraction.  The bar
complex is the reduced symmetric coalgebra: words are canonically sorted tuples
of generators, with Koszul signs from permuting odd factors, and a word with a
repeated odd factor is zero.  The coderivation extending d and the bracket acts
by the shuffle formula; since every generator of odd degree contributes a sign
only against other odd factors, signs reduce to inversion counts among alphas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Optional, Tuple

from .scalars import format_rational, parse_rational


@dataclass(frozen=True, order=True)
class Generator:
    family: str  # "a" (alpha) or "b" (beta)
    i: int
    j: int

    @property
    def degree(self) -> int:
        if self.family == "a":
            return -1 - 2 * (self.i + self.j)
        return -2 - 2 * (self.i + self.j)

    @property
    def weight(self) -> int:
        return self.i + self.j

    @property
    def is_odd(self) -> bool:
        return self.family == "a"

    def __str__(self) -> str:
        return f"{self.family}:{self.i},{self.j}"


def alpha(i: int, j: int) -> Generator:
    if i < 1 or j < 1:
        raise ValueError(f"alpha indices must satisfy i,j >= 1, got ({i},{j})")
    return Generator("a", i, j)


def beta(i: int, j: int) -> Generator:
    if i < 0 or j < 0 or (i, j) == (0, 0):
        raise ValueError(f"beta indices must be nonnegative and not (0,0), got ({i},{j})")
    return Generator("b", i, j)


def parse_generator(text: str) -> Generator:
    fam, _, idx = text.partition(":")
    i, j = (int(part) for part in idx.split(","))
    if fam == "a":
        return alpha(i, j)
    if fam == "b":
        return beta(i, j)
    raise ValueError(f"unknown generator family {fam!r}")


# A linear combination over Q; zero coefficients are never stored.
Element = Dict[Generator, Fraction]


def el_add_into(acc: Element, x: Element, scale: Fraction = Fraction(1)) -> None:
    for g, c in x.items():
        new = acc.get(g, Fraction(0)) + c * scale
        if new:
            acc[g] = new
        else:
            acc.pop(g, None)


def el_scale(x: Element, scale: Fraction) -> Element:
    if not scale:
        return {}
    return {g: c * scale for g, c in x.items()}


def differential(x: Element) -> Element:
    out: Element = {}
    for g, c in x.items():
        if g.family != "a":
            continue
        # Both beta indices stay valid: j >= 1 keeps (i-1,j) nonzero, i >= 1
        # keeps (i,j-1) nonzero.
        el_add_into(out, {beta(g.i - 1, g.j): Fraction(g.j)}, c)
        el_add_into(out, {beta(g.i, g.j - 1): Fraction(-g.i)}, c)
    return out


def bracket_pair(g: Generator, h: Generator) -> Optional[Tuple[int, Generator]]:
    """[g, h] on basis elements; None when zero."""
    if g.family == "b" and h.family == "b":
        return None
    if g.family == "a" and h.family == "a":
        coeff = g.i * h.j - g.j * h.i
        if coeff == 0:
            return None
        return coeff, alpha(g.i + h.i, g.j + h.j)
    a_gen, b_gen = (g, h) if g.family == "a" else (h, g)
    coeff = a_gen.i * b_gen.j - a_gen.j * b_gen.i
    if coeff == 0:
        return None
    return coeff, beta(g.i + h.i, g.j + h.j)


def bracket(x: Element, y: Element) -> Element:
    out: Element = {}
    for g, cg in x.items():
        for h, ch in y.items():
            pair = bracket_pair(g, h)
            if pair is None:
                continue
            coeff, target = pair
            el_add_into(out, {target: Fraction(coeff)}, cg * ch)
    return out


def _barred_factor(g: Generator) -> int:
    # barred-alpha_{i,j} = (i-1)!(j-1)! alpha_{i,j};  barred-beta_{i,j} = i!j! beta_{i,j}
    if g.family == "a":
        return factorial(g.i - 1) * factorial(g.j - 1)
    return factorial(g.i) * factorial(g.j)


def to_barred(x: Element) -> Element:
    """Rewrite coordinates from the standard basis into the barred basis."""
    return {g: c / _barred_factor(g) for g, c in x.items()}


def from_barred(x: Element) -> Element:
    return {g: c * _barred_factor(g) for g, c in x.items()}


# ---------------------------------------------------------------------------
# Words and the bar complex


Word = Tuple[Generator, ...]
BarElement = Dict[Word, Fraction]


def canonical_word(factors: Iterable[Generator]) -> Optional[Tuple[Word, int]]:
    """Sort factors into canonical order; return (word, koszul_sign).

    Returns None when the word is zero, i.e. contains a repeated odd factor.
    The sign is the parity of inversions among odd factors only: swapping two
    odd factors costs -1, every other adjacent swap costs +1.
    """
    factors = list(factors)
    odds = [g for g in factors if g.is_odd]
    if len(odds) != len(set(odds)):
        return None
    inversions = 0
    for p in range(len(odds)):
        for q in range(p + 1, len(odds)):
            if odds[p] > odds[q]:
                inversions += 1
    return tuple(sorted(factors)), -1 if inversions % 2 else 1


def word_degree(w: Word) -> int:
    return sum(g.degree for g in w)


def word_weight(w: Word) -> int:
    return sum(g.weight for g in w)


def bar_add_into(acc: BarElement, x: BarElement, scale: Fraction = Fraction(1)) -> None:
    for w, c in x.items():
        new = acc.get(w, Fraction(0)) + c * scale
        if new:
            acc[w] = new
        else:
            acc.pop(w, None)


def bar_element(factors: Iterable[Generator], coeff: Fraction = Fraction(1)) -> BarElement:
    cw = canonical_word(factors)
    if cw is None or not coeff:
        return {}
    word, sign = cw
    return {word: coeff * sign}


@lru_cache(maxsize=None)
def _bar_diff_word(word: Word) -> Tuple[Tuple[Word, Fraction], ...]:
    """The coderivation extending d and [.,.] on a single canonical word."""
    n = len(word)
    odd_prefix = [0] * (n + 1)
    for idx, g in enumerate(word):
        odd_prefix[idx + 1] = odd_prefix[idx] + (1 if g.is_odd else 0)

    out: BarElement = {}
    for idx, g in enumerate(word):
        if g.family != "a":
            continue
        sign = -1 if (odd_prefix[idx] % 2) else 1
        rest = word[:idx] + word[idx + 1 :]
        for h, ch in differential({g: Fraction(1)}).items():
            bar_add_into(out, bar_element((h,) + rest, ch), Fraction(sign))
    for p in range(n):
        for q in range(p + 1, n):
            pair = bracket_pair(word[p], word[q])
            if pair is None:
                continue
            parity = 0
            if word[p].is_odd:
                parity += odd_prefix[p]
            if word[q].is_odd:
                parity += odd_prefix[q] - (1 if word[p].is_odd else 0)
            sign = -1 if parity % 2 else 1
            coeff, h = pair
            rest = tuple(word[r] for r in range(n) if r not in (p, q))
            bar_add_into(out, bar_element((h,) + rest, Fraction(coeff)), Fraction(sign))
    return tuple(out.items())


def bar_differential(x: BarElement) -> BarElement:
    out: BarElement = {}
    for word, c in x.items():
        for tw, tc in _bar_diff_word(word):
            new = out.get(tw, Fraction(0)) + c * tc
            if new:
                out[tw] = new
            else:
                out.pop(tw, None)
    return out


# ---------------------------------------------------------------------------
# Literals and JSON


def format_word(w: Word) -> str:
    return "*".join(str(g) for g in w)


def parse_word(text: str) -> Word:
    factors = tuple(parse_generator(part) for part in text.split("*"))
    cw = canonical_word(factors)
    if cw is None:
        raise ValueError(f"word {text!r} is zero (repeated odd factor)")
    word, _ = cw
    return word


def bar_element_to_json(x: BarElement) -> list:
    items = sorted(x.items())
    return [
        {"coeff": format_rational(c), "word": [str(g) for g in w]} for w, c in items
    ]


def bar_element_from_json(data: list) -> BarElement:
    out: BarElement = {}
    for entry in data:
        factors = tuple(parse_generator(t) for t in entry["word"])
        bar_add_into(out, bar_element(factors, parse_rational(entry["coeff"])))
    return out
