"""Exact truncated character series and the fixed-point counting identities.

Both identities equate three independent counts, degree by degree: the
coefficient of a pure product series over odd exponents, the number of
twisted-crystal vertices at that depth, and a signed-index sum over
Mullineux-fixed partitions grouped by two residue tallies.  Everything is
plain integer arithmetic; nothing is floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .involution import mullineux_map
from .partitions import (
    CrystalKind,
    InternalConsistencyError,
    Partition,
    residue_counts,
)
from .twisted import enumerate_twisted
from .typea import CrystalGraph


@dataclass(frozen=True)
class SeriesCoeffs:
    """Exact coefficients of a truncated power series, index = degree."""

    coeffs: tuple[int, ...]
    trunc: int

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree]


def character_series(kind: CrystalKind, trunc: int) -> SeriesCoeffs:
    """Coefficients of prod 1/(1 - t^i) over the kind's exponents, degree <= trunc.

    Odd kind: odd i not divisible by e.  Even kind: all odd i.
    """
    if trunc < 0:
        raise ValueError(f"trunc must be non-negative, got {trunc}")
    coeffs = [0] * (trunc + 1)
    coeffs[0] = 1
    for i in range(1, trunc + 1, 2):
        if kind.is_odd and i % kind.e == 0:
            continue
        for d in range(i, trunc + 1):
            coeffs[d] += coeffs[d - i]
    return SeriesCoeffs(tuple(coeffs), trunc)


@dataclass(frozen=True)
class CountsTable:
    """Fixed-partition counts keyed by (size, zero-residue tally, middle tally)."""

    e: int
    ell: int
    max_size: int
    counts: Mapping[tuple[int, int, int], int]

    def count(self, n: int, m: int, mp: int) -> int:
        if n > self.max_size:
            raise ValueError(
                f"size {n} exceeds the table bound {self.max_size}")
        return self.counts.get((n, m, mp), 0)


def counts_table(e: int, max_size: int,
                 images: dict[Partition, Partition] | None = None) -> CountsTable:
    """Group the Mullineux-fixed partitions of every size <= max_size by
    (N_0, N_ell) with ell = e // 2, asserting the parity constraints that
    fixed partitions are known to satisfy."""
    ell = e // 2
    if images is None:
        images = mullineux_map(e, max_size)
    counts: dict[tuple[int, int, int], int] = {}
    for lam, image in images.items():
        if image != lam:
            continue
        n = sum(lam)
        profile = residue_counts(lam, e)
        m, mp = profile[0], profile[ell]
        if e % 2 == 1:
            if mp % 2 or (n - m) % 2:
                raise InternalConsistencyError(
                    f"fixed {lam} (e={e}) violates the odd-case parity constraints")
        elif (n - m - mp) % 2:
            raise InternalConsistencyError(
                f"fixed {lam} (e={e}) violates the even-case parity constraint")
        counts[(n, m, mp)] = counts.get((n, m, mp), 0) + 1
    return CountsTable(e, ell, max_size, counts)


def fixed_size_bound(kind: CrystalKind, max_degree: int) -> int:
    """Largest fixed-partition size the degree-n sum can reach: 4n for the
    odd kind (index 2n - m + 2m'), 2n for the even kind (index 2n - m - m')."""
    return (4 if kind.is_odd else 2) * max_degree


def rhs_from_counts(kind: CrystalKind, n: int, table: CountsTable) -> int:
    """Fixed-point side of the identity at degree n."""
    total = 0
    for m in range(n + 1):
        for mp in range(n - m + 1):
            if kind.is_odd:
                total += table.count(2 * n - m + 2 * mp, m, 2 * mp)
            else:
                total += table.count(2 * n - m - mp, m, mp)
    return total


@dataclass(frozen=True)
class IdentityRow:
    degree: int
    lhs: int
    rhs_counts: int
    rhs_crystal: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs_counts == self.rhs_crystal


@dataclass(frozen=True)
class IdentityReport:
    kind: CrystalKind
    max_degree: int
    rows: tuple[IdentityRow, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def first_failure(self) -> IdentityRow | None:
        for row in self.rows:
            if not row.ok:
                return row
        return None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.parity,
            "ell": self.kind.ell,
            "max_degree": self.max_degree,
            "rows": [{"degree": r.degree, "lhs": r.lhs,
                      "rhs_counts": r.rhs_counts, "rhs_crystal": r.rhs_crystal,
                      "ok": r.ok} for r in self.rows],
            "ok": self.ok,
        }


def verify_identity(kind: CrystalKind, max_degree: int, *,
                    table: CountsTable | None = None,
                    graph: CrystalGraph | None = None) -> IdentityReport:
    """Three-way comparison per degree n <= max_degree: series coefficient,
    crystal depth-n census, and the fixed-point sum from the counts table.

    The table must cover fixed sizes up to fixed_size_bound(kind, max_degree);
    by default it is built from scratch (the dominant cost at larger degrees).
    """
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {max_degree}")
    bound = fixed_size_bound(kind, max_degree)
    if table is None:
        table = counts_table(kind.e, bound)
    if table.e != kind.e or table.max_size < bound:
        raise ValueError(
            f"counts table (e={table.e}, max_size={table.max_size}) does not "
            f"cover e={kind.e} up to size {bound}")
    if graph is None:
        graph = enumerate_twisted(kind, max_degree)
    series = character_series(kind, max_degree)
    rows = []
    for n in range(max_degree + 1):
        rows.append(IdentityRow(
            degree=n,
            lhs=series[n],
            rhs_counts=rhs_from_counts(kind, n, table),
            rhs_crystal=len(graph.levels[n]),
        ))
    return IdentityReport(kind, max_degree, tuple(rows))
