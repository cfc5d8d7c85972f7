"""Constructors for the packing families, with rank and unrank for each.

Every family couples a sector with a (quasi-)polynomial that enumerates the
sector's lattice points in a specific order:

* cantor F/G: the classical quadrant bijections, by diagonals;
* steep F/G: integer-slope sectors, column by column;
* divides F/G: slopes r/s with r | s-1, by the slanted blocks that tile
  the sector when the step d = (s-1)/r is an integer;
* quasi H: any reduced slope r/s, interleaving the s residue classes of x,
  one quasi-polynomial branch per class.

rank(p) evaluates the stored form (asserting the value is a nonnegative
integer); unrank(n) inverts it by exact integer bracketing/bisection on
block-prefix counts, so both directions are total and overflow-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Union

from .core import Point, Sector, SectorPackError, Slope
from .poly import QuadPoly, QuasiPoly


class FamilyKind(Enum):
    CANTOR_F = "cantor-f"
    CANTOR_G = "cantor-g"
    STEEP_F = "steep-f"
    STEEP_G = "steep-g"
    DIVIDES_F = "div-f"
    DIVIDES_G = "div-g"
    QUASI_H = "quasi"


class OrderTag(Enum):
    """Coarse direction of the enumeration that the family's form realizes."""

    BOTTOM_UP = "bottom-up"
    TOP_DOWN = "top-down"
    DIAGONAL = "diagonal"


def _block_prefix(r: int, a: int) -> int:
    """Points in blocks 0..a-1 when block i holds r*i + 1 points: r*a*(a-1)/2 + a."""
    return r * a * (a - 1) // 2 + a


def _largest_with(count: Callable[[int], int], n: int) -> int:
    """Largest a >= 0 with count(a) <= n, for nondecreasing count, count(0) = 0.

    Brackets by doubling, then bisects; exact at any magnitude.
    """
    lo, hi = 0, 1
    while count(hi) <= n:
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if count(mid) <= n:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class PackingFamily:
    """A verified packing function: sector + polynomial form + enumeration order."""

    kind: FamilyKind
    r: int | None
    s: int | None
    form: Union[QuadPoly, QuasiPoly]
    sector: Sector
    order: OrderTag

    @property
    def name(self) -> str:
        """CLI name: cantor-f, steep-f:r, div-f:r/s, quasi:r/s, ..."""
        if self.kind in (FamilyKind.CANTOR_F, FamilyKind.CANTOR_G):
            return self.kind.value
        if self.kind in (FamilyKind.STEEP_F, FamilyKind.STEEP_G):
            return f"{self.kind.value}:{self.r}"
        return f"{self.kind.value}:{self.r}/{self.s}"

    @property
    def step(self) -> int:
        """Block step d = (s-1)/r of the divides families."""
        if self.kind not in (FamilyKind.DIVIDES_F, FamilyKind.DIVIDES_G):
            raise SectorPackError(f"{self.name} has no block step")
        return (self.s - 1) // self.r

    @cached_property
    def _integer_forms(self) -> tuple:
        # scaled integer coefficients per branch, so rank stays in plain int math
        if isinstance(self.form, QuadPoly):
            return (self.form.scaled_integer_form(),)
        return tuple(branch.scaled_integer_form() for branch in self.form.branches)

    def rank(self, p: Point) -> int:
        """Position of p in the family's enumeration: the form's value at p."""
        self.sector.require(p)
        forms = self._integer_forms
        x, y = p
        den, (a, b, c, d, e, g) = forms[x % len(forms)]
        num = a * x * x + b * x * y + c * y * y + d * x + e * y + g
        if num % den or num < 0:
            raise SectorPackError(
                f"{self.name} evaluated to {Fraction(num, den)} at {p}; construction is broken")
        return num // den

    def unrank(self, n: int) -> Point:
        """The unique sector point with rank n; total on the nonnegative integers."""
        if n < 0:
            raise SectorPackError(f"rank must be nonnegative, got {n}")
        kind = self.kind
        if kind is FamilyKind.CANTOR_F or kind is FamilyKind.CANTOR_G:
            t = _largest_with(lambda a: a * (a + 1) // 2, n)
            k = n - t * (t + 1) // 2
            return (k, t - k) if kind is FamilyKind.CANTOR_G else (t - k, k)
        if kind is FamilyKind.QUASI_H:
            ell = n % self.s
            m = n // self.s
            u = (self.r * ell) // self.s
            block = lambda a: self.r * a * (a - 1) // 2 + (u + 1) * a
            a = _largest_with(block, m)
            return (self.s * a + ell, m - block(a))
        # steep and divides families share the block-prefix count
        count = lambda a: _block_prefix(self.r, a)
        a = _largest_with(count, n)
        offset = n - count(a)
        if kind is FamilyKind.STEEP_F:
            return (a, offset)
        if kind is FamilyKind.STEEP_G:
            return (a, self.r * a - offset)
        j = offset if kind is FamilyKind.DIVIDES_F else self.r * a - offset
        return (a + self.step * j, j)


_X = QuadPoly.x()
_Y = QuadPoly.y()
_ONE = QuadPoly.constant(1)


def _require_variant(variant: str) -> str:
    if variant not in ("F", "G"):
        raise SectorPackError(f'variant must be "F" or "G", got {variant!r}')
    return variant


def cantor(variant: str) -> PackingFamily:
    """The two quadrant packing polynomials, enumerating by antidiagonals."""
    _require_variant(variant)
    square = (_X + _Y) * (_X + _Y)
    if variant == "F":
        kind, form = FamilyKind.CANTOR_F, (square + _X + 3 * _Y) / 2
    else:
        kind, form = FamilyKind.CANTOR_G, (square + 3 * _X + _Y) / 2
    return PackingFamily(kind, None, None, form, Sector(Slope.infinite()), OrderTag.DIAGONAL)


def steep(variant: str, r: int) -> PackingFamily:
    """Packing polynomials on the integer-slope sector, column by column.

    F counts each column bottom-up: r*x*(x-1)/2 + x + y.
    G counts each column top-down:  r*x*(x+1)/2 + x - y.
    """
    _require_variant(variant)
    if r < 1:
        raise SectorPackError(f"slope must be a positive integer, got {r}")
    if variant == "F":
        kind = FamilyKind.STEEP_F
        form = r * _X * (_X - _ONE) / 2 + _X + _Y
        order = OrderTag.BOTTOM_UP
    else:
        kind = FamilyKind.STEEP_G
        form = r * _X * (_X + _ONE) / 2 + _X - _Y
        order = OrderTag.TOP_DOWN
    return PackingFamily(kind, r, 1, form, Sector(Slope(r, 1)), order)


def _require_divides_params(r: int, s: int) -> int:
    """Validate the divides-family preconditions and return the step d = (s-1)/r."""
    if r < 1 or s < 1:
        raise SectorPackError(f"parameters must be positive, got ({r}, {s})")
    if gcd(r, s) != 1:
        raise SectorPackError(f"parameters ({r}, {s}) are not coprime")
    if not r < s:
        raise SectorPackError(f"need r < s, got ({r}, {s})")
    if (s - 1) % r != 0:
        raise SectorPackError(f"{r} does not divide {s} - 1")
    return (s - 1) // r


def divides(variant: str, r: int, s: int) -> PackingFamily:
    """Packing polynomials on the slope-r/s sector when r divides s-1, by slanted blocks."""
    _require_variant(variant)
    d = _require_divides_params(r, s)
    t = _X - d * _Y
    square_part = r * (t * t) / 2
    if variant == "F":
        kind = FamilyKind.DIVIDES_F
        form = square_part + ((2 - r) * _X + (d * r - 2 * d + 2) * _Y) / 2
        order = OrderTag.BOTTOM_UP
    else:
        kind = FamilyKind.DIVIDES_G
        form = square_part + ((r + 2) * _X - (2 * d + s + 1) * _Y) / 2
        order = OrderTag.TOP_DOWN
    return PackingFamily(kind, r, s, form, Sector(Slope(r, s)), order)


def sector_decompose(r: int, s: int, p: Point) -> tuple[int, int]:
    """Locate p in its slanted block: (a, j) with p = (a + d*j, j), 0 <= j <= r*a."""
    d = _require_divides_params(r, s)
    Sector(Slope(r, s)).require(p)
    x, y = p
    a = x - d * y
    assert 0 <= y <= r * a, "block decomposition out of range for a sector point"
    return (a, y)


def quasi_h(r: int, s: int) -> PackingFamily:
    """Quasi-polynomial packing function with period s on the slope-r/s sector.

    Branch for residue class ell interleaves the class's own column-by-column
    packing polynomial into every s-th value.  For s = 1 the single branch
    collapses to the integer-slope polynomial steep("F", r).
    """
    if r < 1 or s < 1:
        raise SectorPackError(f"parameters must be positive, got ({r}, {s})")
    if gcd(r, s) != 1:
        raise SectorPackError(f"parameters ({r}, {s}) are not coprime")
    branches = []
    for ell in range(s):
        u = (r * ell) // s
        shifted = _X - ell * _ONE
        per_class = (r * (shifted * (shifted - s * _ONE))) / (2 * s * s) \
            + Fraction(u + 1, s) * shifted + _Y
        branches.append(s * per_class + QuadPoly.constant(ell))
    form = QuasiPoly(s, tuple(branches))
    return PackingFamily(FamilyKind.QUASI_H, r, s, form, Sector(Slope(r, s)), OrderTag.BOTTOM_UP)


def parse_family(name: str) -> PackingFamily:
    """Build a family from its CLI name (cantor-f, steep-g:3, div-f:2/3, quasi:3/2).

    Parameters are taken literally: div-f:2/4 is rejected rather than reduced.
    """
    head, sep, params = name.partition(":")
    if head in ("cantor-f", "cantor-g"):
        if sep:
            raise SectorPackError(f"{head} takes no parameters")
        return cantor("F" if head.endswith("f") else "G")
    if not sep:
        raise SectorPackError(f"unknown family {name!r}")
    if head in ("steep-f", "steep-g"):
        return steep("F" if head.endswith("f") else "G", _parse_param_int(params))
    if head in ("div-f", "div-g", "quasi"):
        num, slash, den = params.partition("/")
        r = _parse_param_int(num)
        s = _parse_param_int(den) if slash else 1
        if head == "quasi":
            return quasi_h(r, s)
        return divides("F" if head.endswith("f") else "G", r, s)
    raise SectorPackError(f"unknown family {name!r}")


def _parse_param_int(token: str) -> int:
    if not (token.isascii() and token.isdigit()):
        raise SectorPackError(f"malformed family parameter {token!r}")
    return int(token)
