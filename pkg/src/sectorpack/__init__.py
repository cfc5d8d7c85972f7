"""Packing polynomials and quasi-polynomial packing functions on integer sectors.

Rank/unrank bijections between sector lattice points and the nonnegative
integers, the linear maps that move them between sectors, brute-force
verification and bounded search, and a sector-shaped array container that
uses the bijections as storage mapping functions.
"""

from .core import (OutsideSectorError, Point, Sector, SectorPackError, Slope,
                   SlopeSyntaxError, parse_slope)
from .layout import CapacityError, SectorArray
from .packing import (FamilyKind, OrderTag, PackingFamily, cantor, divides,
                      parse_family, quasi_h, sector_decompose, steep)
from .poly import (PolySyntaxError, QuadPoly, QuasiPoly, deserialize,
                   format_rational, parse_rational, serialize)
from .transforms import LinearMap2, lambda_map, m_map, phi_map, psi_map
from .verify import (COVERAGE_MARGIN, EnumerationOrder, OrderKind,
                     PackingVerdict, SearchReport, block_bottom_up,
                     block_top_down, enumerate_sector,
                     linear_impossibility_check, order_for_family,
                     residue_interleaved, search_quadratic, verify_packing)

__all__ = [
    "CapacityError", "COVERAGE_MARGIN", "EnumerationOrder", "FamilyKind",
    "LinearMap2", "OrderKind", "OrderTag", "OutsideSectorError",
    "PackingFamily", "PackingVerdict", "Point", "PolySyntaxError", "QuadPoly",
    "QuasiPoly", "SearchReport", "Sector", "SectorArray", "SectorPackError",
    "Slope", "SlopeSyntaxError", "block_bottom_up", "block_top_down",
    "cantor", "deserialize", "divides", "enumerate_sector", "format_rational",
    "lambda_map", "linear_impossibility_check", "m_map", "order_for_family",
    "parse_family", "parse_rational", "parse_slope", "phi_map", "psi_map",
    "quasi_h", "residue_interleaved", "search_quadratic", "sector_decompose",
    "serialize", "steep", "verify_packing",
]

__version__ = "0.1.0"
