"""Convex toric domains with an infinitesimal perturbation, and their exact geometry.

A domain is described by the support vertices of its moment image in the closed
first quadrant.  The dual norm of a lattice direction v = (i,j) with i,j >= 0 is
the maximum of <v,w> over those vertices; convexity makes the maximum
vertex-attained, so evaluation is exact and O(#vertices).

One coordinate (by default the second) carries an implicit +delta: every
support vertex with a positive entry in that coordinate is shifted by delta
there, exactly as E(a,b) becomes E(a,b+delta).  Dual norms are therefore
PerturbedScalar-valued and almost all ties are broken; the few that survive
(possible only for degenerate polygons) raise NonUniqueMinimizer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from .dgla import Generator
from .scalars import PerturbedScalar, format_rational, parse_rational

Vertex = Tuple[Fraction, Fraction]


class NonUniqueMinimizer(ValueError):
    """Two lattice pairs of equal total weight tie even after perturbation."""


@dataclass(frozen=True)
class ToricDomain:
    kind: str  # "ellipsoid" | "polydisk" | "polygon"
    vertices: Tuple[Vertex, ...]
    perturbed_axis: int = 1  # coordinate carrying the implicit +delta
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.perturbed_axis not in (0, 1):
            raise ValueError("perturbed_axis must be 0 or 1")
        for x, y in self.vertices:
            if x < 0 or y < 0:
                raise ValueError("vertices must lie in the closed first quadrant")
        # A point of the first quadrant has (0,0) in its convex hull only if
        # (0,0) is itself one of the points.
        if (Fraction(0), Fraction(0)) not in self.vertices:
            raise ValueError("the convex hull must contain (0,0)")

    def literal(self) -> str:
        if self.kind == "polygon":
            body = ";".join(
                f"{format_rational(x)},{format_rational(y)}" for x, y in self.vertices
            )
        else:
            body = f"{format_rational(self.a)},{format_rational(self.b)}"
        prefix = "" if self.perturbed_axis == 1 else "!1:"
        return f"{prefix}{self.kind}:{body}"

    def __str__(self) -> str:
        return self.literal()


def _check_ab(a: Fraction, b: Fraction) -> None:
    if not (0 < a <= b):
        raise ValueError(f"require 0 < a <= b, got a={a}, b={b}")


def ellipsoid(a, b, perturbed_axis: int = 1) -> ToricDomain:
    a, b = Fraction(a), Fraction(b)
    _check_ab(a, b)
    zero = Fraction(0)
    verts = ((zero, zero), (a, zero), (zero, b))
    return ToricDomain("ellipsoid", verts, perturbed_axis, a, b)


def polydisk(a, b, perturbed_axis: int = 1) -> ToricDomain:
    a, b = Fraction(a), Fraction(b)
    _check_ab(a, b)
    zero = Fraction(0)
    verts = ((zero, zero), (a, zero), (zero, b), (a, b))
    return ToricDomain("polydisk", verts, perturbed_axis, a, b)


def polygon(vertices, perturbed_axis: int = 1) -> ToricDomain:
    verts = tuple((Fraction(x), Fraction(y)) for x, y in vertices)
    return ToricDomain("polygon", verts, perturbed_axis)


def parse_domain(text: str) -> ToricDomain:
    """Parse `ellipsoid:a,b`, `polydisk:a,b` or `polygon:x1,y1;x2,y2;...`.

    A leading `!0:` or `!1:` overrides which coordinate is perturbed.
    """
    text = text.strip()
    axis = 1
    if text.startswith("!"):
        head, _, text = text.partition(":")
        axis = int(head[1:])
    kind, _, body = text.partition(":")
    if kind in ("ellipsoid", "polydisk"):
        a_txt, b_txt = body.split(",")
        maker = ellipsoid if kind == "ellipsoid" else polydisk
        return maker(parse_rational(a_txt), parse_rational(b_txt), axis)
    if kind == "polygon":
        verts = []
        for part in body.split(";"):
            x_txt, y_txt = part.split(",")
            verts.append((parse_rational(x_txt), parse_rational(y_txt)))
        return polygon(verts, axis)
    raise ValueError(f"unknown domain kind {kind!r}")


def dual_norm(domain: ToricDomain, v: Tuple[int, int]) -> PerturbedScalar:
    """max over perturbed support vertices of <v, w>, tracked exactly."""
    i, j = v
    if i < 0 or j < 0:
        raise ValueError("dual_norm expects a nonnegative lattice pair")
    best = PerturbedScalar(Fraction(0), 0)
    for x, y in domain.vertices:
        base = i * x + j * y
        if domain.perturbed_axis == 1:
            delta = j if y > 0 else 0
        else:
            delta = i if x > 0 else 0
        cand = PerturbedScalar(base, delta)
        if cand > best:
            best = cand
    return best


def action_of_generator(domain: ToricDomain, g: Generator) -> PerturbedScalar:
    return dual_norm(domain, (g.i, g.j))


@lru_cache(maxsize=None)
def argmin_pair(domain: ToricDomain, q: int) -> Tuple[int, int]:
    """The unique (i,j), i+j = q, minimizing the perturbed dual norm."""
    if q < 1:
        raise ValueError("q must be >= 1")
    best_pair = None
    best_val = None
    tie = False
    for i in range(q + 1):
        val = dual_norm(domain, (i, q - i))
        if best_val is None or val < best_val:
            best_pair, best_val, tie = (i, q - i), val, False
        elif val == best_val:
            tie = True
    if tie:
        raise NonUniqueMinimizer(
            f"two action minimizers at weight {q} for {domain.literal()};"
            " pick a different perturbation axis"
        )
    return best_pair


def gh_capacity(domain: ToricDomain, q: int) -> PerturbedScalar:
    """The q-th linear spectral invariant min_{i+j=q} ||(i,j)||*."""
    return dual_norm(domain, argmin_pair(domain, q))


@dataclass(frozen=True)
class ReebOrbitEntry:
    action: PerturbedScalar
    family: str  # "short" | "long"
    multiplicity: int
    q: int
    degree: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", -2 - 2 * self.q)

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "action": self.action.to_json(),
            "family": self.family,
            "multiplicity": self.multiplicity,
            "degree": self.degree,
        }


def reeb_spectrum(a, b, count: int) -> List[ReebOrbitEntry]:
    """First `count` orbits of the perturbed ellipsoid boundary, by action.

    The k-fold covers of the two simple orbits have actions k*a and k*(b+delta);
    the perturbation makes the merged order strict.
    """
    a, b = Fraction(a), Fraction(b)
    _check_ab(a, b)
    entries = []
    for k in range(1, count + 1):
        entries.append((PerturbedScalar(k * a, 0), "short", k))
        entries.append((PerturbedScalar(k * b, k), "long", k))
    entries.sort(key=lambda e: e[0])
    return [
        ReebOrbitEntry(action, family, mult, q)
        for q, (action, family, mult) in enumerate(entries[:count], start=1)
    ]


def orbit_multiplicity(a, b, q: int) -> int:
    """Covering multiplicity of the q-th Reeb orbit of the perturbed ellipsoid.

    Equals i* when the perturbed max at the argmin pair sits on the a-side
    (delta coefficient 0), else j*.
    """
    a, b = Fraction(a), Fraction(b)
    domain = ellipsoid(a, b)
    i_star, j_star = argmin_pair(domain, q)
    value = dual_norm(domain, (i_star, j_star))
    return i_star if value.delta == 0 else j_star
