"""Brute-force enumeration oracles, packing verification, and bounded search.

`enumerate_sector` is the ground truth everything else is measured against:
it walks a sector's lattice points in a stated order using nothing but the
membership predicate, so a point's rank is simply its position.

`verify_packing` checks an arbitrary candidate on a finite prefix of the
sector: values must be nonnegative integers, pairwise distinct, and cover
{0..prefix-1}.  The examined region holds a slope-dependent multiple of
`prefix` points so that every preimage of a small value is actually looked
at.

The search tools sweep the half-integer coefficient lattice (every
integer-valued quadratic on the integer lattice lives there), funnel
candidates through exact vectorized screens, and certify the survivors with
`verify_packing` itself.  Results are deterministic regardless of worker
count: the lattice is partitioned into chunks and survivors are re-sorted.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterator, Optional, Union

import numpy as np

from .core import Point, Sector, SectorPackError
from .packing import FamilyKind, PackingFamily
from .poly import QuadPoly, QuasiPoly, _quad_to_object

PolyLike = Union[QuadPoly, QuasiPoly]

# Base examined-region size as a multiple of the requested prefix; the
# effective margin is max(COVERAGE_MARGIN, 2s) for slope denominator s, see
# verify_packing.
COVERAGE_MARGIN = 4


class OrderKind(Enum):
    DIAGONAL = "diagonal"
    REVERSE_DIAGONAL = "reverse-diagonal"
    COLUMN_BOTTOM_UP = "column-bottom-up"
    COLUMN_TOP_DOWN = "column-top-down"
    BLOCK_BOTTOM_UP = "block-bottom-up"
    BLOCK_TOP_DOWN = "block-top-down"
    RESIDUE_INTERLEAVED = "residue-interleaved"


@dataclass(frozen=True)
class EnumerationOrder:
    """A total order on a sector's points in which every point has finite rank."""

    kind: OrderKind
    param: int | None = None  # block step d, or the residue period s

    def __str__(self) -> str:
        return self.kind.value if self.param is None else f"{self.kind.value}({self.param})"


DIAGONAL = EnumerationOrder(OrderKind.DIAGONAL)
REVERSE_DIAGONAL = EnumerationOrder(OrderKind.REVERSE_DIAGONAL)
COLUMN_BOTTOM_UP = EnumerationOrder(OrderKind.COLUMN_BOTTOM_UP)
COLUMN_TOP_DOWN = EnumerationOrder(OrderKind.COLUMN_TOP_DOWN)


def block_bottom_up(d: int) -> EnumerationOrder:
    return EnumerationOrder(OrderKind.BLOCK_BOTTOM_UP, d)


def block_top_down(d: int) -> EnumerationOrder:
    return EnumerationOrder(OrderKind.BLOCK_TOP_DOWN, d)


def residue_interleaved(s: int) -> EnumerationOrder:
    return EnumerationOrder(OrderKind.RESIDUE_INTERLEAVED, s)


def order_for_family(family: PackingFamily) -> EnumerationOrder:
    """The precise enumeration order a family's polynomial realizes."""
    kind = family.kind
    if kind is FamilyKind.CANTOR_F:
        return DIAGONAL
    if kind is FamilyKind.CANTOR_G:
        return REVERSE_DIAGONAL
    if kind is FamilyKind.STEEP_F:
        return COLUMN_BOTTOM_UP
    if kind is FamilyKind.STEEP_G:
        return COLUMN_TOP_DOWN
    if kind is FamilyKind.DIVIDES_F:
        return block_bottom_up(family.step)
    if kind is FamilyKind.DIVIDES_G:
        return block_top_down(family.step)
    return residue_interleaved(family.s)


def _iter_diagonal(reverse: bool) -> Iterator[Point]:
    d = 0
    while True:
        for k in range(d + 1):
            yield (k, d - k) if reverse else (d - k, k)
        d += 1


def _iter_columns(sector: Sector, top_down: bool) -> Iterator[Point]:
    x = 0
    while True:
        top = sector.column_height(x)
        span = range(top, -1, -1) if top_down else range(top + 1)
        for y in span:
            yield (x, y)
        x += 1


def _iter_blocks(sector: Sector, d: int, top_down: bool) -> Iterator[Point]:
    r = sector.slope.r
    a = 0
    while True:
        span = range(r * a, -1, -1) if top_down else range(r * a + 1)
        for j in span:
            yield (a + d * j, j)
        a += 1


def _iter_residues(sector: Sector, s: int) -> Iterator[Point]:
    def column_scan(ell: int) -> Iterator[Point]:
        x = ell
        while True:
            for y in range(sector.column_height(x) + 1):
                yield (x, y)
            x += s

    scans = [column_scan(ell) for ell in range(s)]
    n = 0
    while True:
        yield next(scans[n % s])
        n += 1


def _order_iterator(sector: Sector, order: EnumerationOrder) -> Iterator[Point]:
    kind, param = order.kind, order.param
    slope = sector.slope
    if kind in (OrderKind.DIAGONAL, OrderKind.REVERSE_DIAGONAL):
        if not slope.is_infinite:
            raise SectorPackError(f"{order} requires the infinite sector")
        return _iter_diagonal(reverse=kind is OrderKind.REVERSE_DIAGONAL)
    if slope.is_infinite:
        raise SectorPackError(f"{order} requires a finite slope")
    if kind in (OrderKind.COLUMN_BOTTOM_UP, OrderKind.COLUMN_TOP_DOWN):
        return _iter_columns(sector, top_down=kind is OrderKind.COLUMN_TOP_DOWN)
    if kind in (OrderKind.BLOCK_BOTTOM_UP, OrderKind.BLOCK_TOP_DOWN):
        if param is None:
            raise SectorPackError(f"{order.kind.value} needs its block step")
        r, s = slope.r, slope.s
        if (s - 1) % r != 0 or param != (s - 1) // r:
            raise SectorPackError(
                f"block step {param} does not match slope {slope} (needs r | s-1)")
        return _iter_blocks(sector, param, top_down=kind is OrderKind.BLOCK_TOP_DOWN)
    if param != slope.s:
        raise SectorPackError(f"residue period {param} does not match slope {slope}")
    return _iter_residues(sector, slope.s)


def enumerate_sector(sector: Sector, order: EnumerationOrder, count: int) -> list[Point]:
    """First `count` points of the order; a point's rank is its position here."""
    if count < 1:
        raise SectorPackError(f"count must be positive, got {count}")
    it = _order_iterator(sector, order)
    return [next(it) for _ in range(count)]


# ---------------------------------------------------------------------------
# Packing verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PackingVerdict:
    """Outcome of a prefix check; on failure, the first witness found."""

    ok: bool
    reason: str | None = None  # "non-integer" | "negative" | "collision" | "missing"
    witness: tuple | None = None
    column_bound: int = 0
    points_examined: int = 0

    def describe(self) -> str:
        if self.ok:
            return f"pass ({self.points_examined} points, columns 0..{self.column_bound})"
        return f"fail: {self.reason} at {self.witness}"


def _examined_region(sector: Sector, target: int) -> tuple[int, list[Point]]:
    """Smallest column bound (or square side, for the quadrant) holding >= target points."""
    points: list[Point] = []
    if sector.slope.is_infinite:
        n = 0
        while (n + 1) * (n + 1) < target:
            n += 1
        return n, [(x, y) for x in range(n + 1) for y in range(n + 1)]
    x = 0
    while True:
        points.extend((x, y) for y in range(sector.column_height(x) + 1))
        if len(points) >= target:
            return x, points
        x += 1


def _scaled_forms(f: PolyLike) -> list[tuple[int, tuple[int, ...]]]:
    if isinstance(f, QuadPoly):
        return [f.scaled_integer_form()]
    return [branch.scaled_integer_form() for branch in f.branches]


def verify_packing(f: PolyLike, sector: Sector, prefix: int,
                   margin: int = COVERAGE_MARGIN) -> PackingVerdict:
    """Check the packing property of f on a prefix of the sector.

    Pass iff on the examined region: all values are nonnegative integers,
    pairwise distinct, and {0..prefix-1} all occur.  The region holds
    max(margin, 2s) * prefix points for slope r/s: block-enumerating
    polynomials place preimages of rank < n as far out as column s*sqrt(2n/r),
    about s * prefix points in, so the flat base margin alone would miss
    them for larger denominators (and s alone leaves no headroom).
    """
    if prefix < 1:
        raise SectorPackError(f"prefix must be positive, got {prefix}")
    period = f.period if isinstance(f, QuasiPoly) else 1
    forms = _scaled_forms(f)
    bound, points = _examined_region(sector, max(margin, 2 * sector.slope.s) * prefix)
    seen: dict[int, Point] = {}
    examined = len(points)

    def fail(reason, witness):
        return PackingVerdict(False, reason, witness, bound, examined)

    for p in points:
        x, y = p
        den, (a, b, c, d, e, g) = forms[x % period]
        num = a * x * x + b * x * y + c * y * y + d * x + e * y + g
        if num % den:
            return fail("non-integer", p)
        value = num // den
        if value < 0:
            return fail("negative", p)
        if value in seen:
            return fail("collision", (seen[value], p))
        seen[value] = p
    for value in range(prefix):
        if value not in seen:
            return fail("missing", (value,))
    return PackingVerdict(True, None, None, bound, examined)


# ---------------------------------------------------------------------------
# Bounded exhaustive search over packing candidates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchReport:
    """Outcome of an exhaustive coefficient sweep; survivors are prefix-certified only."""

    sector: Sector
    degree: int
    coeff_bound: int
    prefix: int
    survivors: tuple[QuadPoly, ...]
    exhausted: bool

    def to_json_obj(self) -> dict:
        return {
            "sector": str(self.sector.slope),
            "degree": self.degree,
            "coeff_bound": self.coeff_bound,
            "prefix": self.prefix,
            "survivors": [_quad_to_object(f) for f in self.survivors],
            "exhausted": self.exhausted,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


_SCREEN_POINTS = 48  # small first-stage screen; stage two re-checks on the whole region

# worker payload, installed once per process by _search_init
_WORK: dict = {}


def _search_init(payload: dict) -> None:
    _WORK.update(payload)


def _candidate_rows(fixed: tuple[int, ...], free: int, bound: int) -> np.ndarray:
    """Candidate numerator tuples: `fixed` columns then a full grid over `free` columns."""
    span = np.arange(-bound, bound + 1, dtype=np.int64)
    grids = np.meshgrid(*([span] * free), indexing="ij")
    rows = np.column_stack([g.reshape(-1) for g in grids])
    if fixed:
        head = np.tile(np.array(fixed, dtype=np.int64), (rows.shape[0], 1))
        rows = np.hstack([head, rows])
    return rows


def _screen(rows: np.ndarray, basis: np.ndarray, prefix: int | None) -> np.ndarray:
    """Exact int64 filter: evenness, nonnegativity, distinctness, and (full stage)
    coverage of {0..prefix-1}, which for distinct nonnegative integers is just a count."""
    values = rows @ basis.T  # 2*f at each point, exactly
    keep = ((values & 1) == 0).all(axis=1) & (values >= 0).all(axis=1)
    rows, values = rows[keep], values[keep]
    if rows.size:
        ordered = np.sort(values, axis=1)
        keep = (np.diff(ordered, axis=1) != 0).all(axis=1)
        rows, values = rows[keep], values[keep]
    if prefix is not None and rows.size:
        keep = (values < 2 * prefix).sum(axis=1) == prefix
        rows = rows[keep]
    return rows


_FULL_SCREEN_SLICE = 1024  # rows per full-region batch, to cap the value matrix size


def _search_chunk(fixed: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Screen one slice of the coefficient lattice; returns surviving numerator tuples."""
    rows = _candidate_rows(fixed, _WORK["free"], _WORK["bound"])
    if _WORK["degree"] == 1:
        rows = np.hstack([np.zeros((rows.shape[0], 3), dtype=np.int64), rows])
    rows = _screen(rows, _WORK["screen_basis"], None)
    out: list[tuple[int, ...]] = []
    for start in range(0, rows.shape[0], _FULL_SCREEN_SLICE):
        batch = _screen(rows[start:start + _FULL_SCREEN_SLICE],
                        _WORK["full_basis"], _WORK["prefix"])
        out.extend(tuple(int(v) for v in row) for row in batch)
    return out


def _monomial_basis(points: list[Point]) -> np.ndarray:
    xs = np.array([p[0] for p in points], dtype=np.int64)
    ys = np.array([p[1] for p in points], dtype=np.int64)
    return np.column_stack([xs * xs, xs * ys, ys * ys, xs, ys, np.ones_like(xs)])


def _poly_from_numerators(nums: tuple[int, ...]) -> QuadPoly:
    return QuadPoly(*(Fraction(k, 2) for k in nums))


def _run_search(sector: Sector, degree: int, coeff_bound: int, prefix: int,
                workers: Optional[int],
                progress: Optional[Callable[[int, int], None]]) -> SearchReport:
    if sector.slope.is_infinite:
        raise SectorPackError("search is defined for finite slopes only")
    if coeff_bound < 1:
        raise SectorPackError(f"coefficient bound must be positive, got {coeff_bound}")
    if prefix < 1:
        raise SectorPackError(f"prefix must be positive, got {prefix}")

    bound = 2 * coeff_bound  # numerators of the half-integer lattice
    # same region as verify_packing, so the screen is exactly its restriction
    _, points = _examined_region(sector, max(COVERAGE_MARGIN, 2 * sector.slope.s) * prefix)
    full_basis = _monomial_basis(points)
    # int64 safety: the largest |2*f| over the region must stay well inside the range
    worst = 6 * bound * int(np.abs(full_basis).max())
    if worst >= 2 ** 62:
        raise SectorPackError("search region too large for the integer screen")

    payload = {
        "degree": degree,
        "bound": bound,
        "prefix": prefix,
        "screen_basis": full_basis[:_SCREEN_POINTS],
        "full_basis": full_basis,
        "free": 3 if degree == 1 else 4,
    }
    if degree == 1:
        chunks = [()]  # one grid over (x, y, 1) numerators
    else:
        span = range(-bound, bound + 1)
        chunks = [(k20, k11) for k20 in span for k11 in span]

    if workers is None:
        workers = os.cpu_count() or 1
    found: list[tuple[int, ...]] = []
    if workers > 1 and len(chunks) > 1:
        with multiprocessing.Pool(workers, initializer=_search_init,
                                  initargs=(payload,)) as pool:
            for done, part in enumerate(pool.imap(_search_chunk, chunks), 1):
                found.extend(part)
                if progress:
                    progress(done, len(chunks))
    else:
        _search_init(payload)
        for done, fixed in enumerate(chunks, 1):
            found.extend(_search_chunk(fixed))
            if progress:
                progress(done, len(chunks))

    # Final certification runs through verify_packing itself, independently of
    # the vectorized screen.
    survivors = []
    for nums in sorted(found):
        candidate = _poly_from_numerators(nums)
        if verify_packing(candidate, sector, prefix).ok:
            survivors.append(candidate)
    return SearchReport(sector, degree, coeff_bound, prefix, tuple(survivors), True)


def search_quadratic(sector: Sector, coeff_bound: int, prefix: int,
                     workers: Optional[int] = None,
                     progress: Optional[Callable[[int, int], None]] = None) -> SearchReport:
    """Sweep all degree <= 2 candidates with half-integer coefficients |c| <= bound.

    Survivors passed integrality, injectivity, and coverage on the examined
    prefix; that certifies prefix behavior only, not the packing property.
    """
    return _run_search(sector, 2, coeff_bound, prefix, workers, progress)


def linear_impossibility_check(sector: Sector, coeff_bound: int, prefix: int,
                               workers: Optional[int] = None,
                               progress: Optional[Callable[[int, int], None]] = None) -> SearchReport:
    """Same pipeline over degree-1 candidates; expected to find no survivors."""
    return _run_search(sector, 1, coeff_bound, prefix, workers, progress)
