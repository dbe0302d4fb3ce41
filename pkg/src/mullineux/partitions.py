"""Partitions, residue labelings, and the strictness classes the crystals live on.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the empty partition.  Nodes of the Young diagram are 1-based
(row, col) pairs, so (1, 1) is the top-left box.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import groupby
from typing import Iterator

Partition = tuple[int, ...]
Node = tuple[int, int]


class InternalConsistencyError(RuntimeError):
    """A structural fact the algorithms rely on failed at runtime."""


def check_partition(parts) -> Partition:
    """Validate and normalize an iterable of parts into a partition tuple."""
    lam = tuple(int(p) for p in parts)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"parts must be positive, got {p}")
        if i and lam[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse the canonical text encoding: comma-separated parts, '-' for empty."""
    text = text.strip()
    if text == "-":
        return ()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed partition literal: {text!r}") from exc
    return check_partition(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition."""
    return ",".join(str(p) for p in lam) if lam else "-"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column j of lam becomes row j."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def is_e_regular(lam: Partition, e: int) -> bool:
    """True iff every part value occurs fewer than e times."""
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    return all(sum(1 for _ in group) < e for _, group in groupby(lam))


class StrictClass(Enum):
    STRICT = "strict"
    RESTRICTED = "restricted"
    DOUBLE_RESTRICTED = "double-restricted"


def is_strict(lam: Partition, f: int) -> bool:
    """f-strict: adjacent equal parts are allowed only when divisible by f."""
    if f < 2:
        raise ValueError(f"f must be at least 2, got {f}")
    return all(lam[i] % f == 0
               for i in range(len(lam) - 1) if lam[i] == lam[i + 1])


def _gaps_within(lam: Partition, f: int, bound: int) -> bool:
    # Parts past the end count as 0, so the last part's own gap is included.
    for i, part in enumerate(lam):
        gap = part - (lam[i + 1] if i + 1 < len(lam) else 0)
        if gap > (bound - 1 if part % f == 0 else bound):
            return False
    return True


def is_restricted_strict(lam: Partition, f: int) -> bool:
    """f-strict with part gaps at most f (strictly less when f divides the part)."""
    return is_strict(lam, f) and _gaps_within(lam, f, f)


def is_double_restricted_strict(lam: Partition, f: int) -> bool:
    """f-strict with part gaps at most 2f (strictly less when f divides the part)."""
    return is_strict(lam, f) and _gaps_within(lam, f, 2 * f)


def is_strict_class(lam: Partition, f: int, cls: StrictClass) -> bool:
    if cls is StrictClass.STRICT:
        return is_strict(lam, f)
    if cls is StrictClass.RESTRICTED:
        return is_restricted_strict(lam, f)
    if cls is StrictClass.DOUBLE_RESTRICTED:
        return is_double_restricted_strict(lam, f)
    raise ValueError(f"unknown strictness class: {cls!r}")


def is_symmetric(lam: Partition) -> bool:
    """True iff the partition equals its conjugate."""
    return lam == conjugate(lam)


def has_distinct_parts(lam: Partition) -> bool:
    return all(lam[i] > lam[i + 1] for i in range(len(lam) - 1))


@dataclass(frozen=True)
class Residue:
    """A residue class, stored reduced; the modulus rides along so that values
    taken mod different moduli can never be confused for one another."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.modulus})"


def residue_type_a(node: Node, e: int) -> Residue:
    """Diagonal residue (col - row) mod e of a node."""
    row, col = node
    if row < 1 or col < 1:
        raise ValueError(f"nodes are 1-based, got {node}")
    return Residue(col - row, e)


@dataclass(frozen=True)
class CrystalKind:
    """Flavor of a twisted crystal: parity 'odd' means e = 2*ell + 1, parity
    'even' means e = 2*ell.  Residues are taken mod ell + 1 in both flavors."""

    parity: str
    ell: int

    def __post_init__(self):
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")
        if self.ell < 1:
            raise ValueError(f"ell must be at least 1, got {self.ell}")

    @classmethod
    def odd(cls, ell: int) -> "CrystalKind":
        return cls("odd", ell)

    @classmethod
    def even(cls, ell: int) -> "CrystalKind":
        return cls("even", ell)

    @property
    def is_odd(self) -> bool:
        return self.parity == "odd"

    @property
    def e(self) -> int:
        return 2 * self.ell + (1 if self.is_odd else 0)

    @property
    def strict_f(self) -> int:
        """Strictness parameter: e in the odd flavor, ell + 1 in the even one."""
        return self.e if self.is_odd else self.ell + 1

    @property
    def modulus(self) -> int:
        return self.ell + 1

    @property
    def column_pattern(self) -> tuple[int, ...]:
        return _column_pattern(self.parity, self.ell)


@lru_cache(maxsize=None)
def _column_pattern(parity: str, ell: int) -> tuple[int, ...]:
    up = tuple(range(ell + 1))
    if parity == "odd":
        return up + tuple(range(ell - 1, -1, -1))  # period 2*ell + 1
    return up + tuple(range(ell, -1, -1))          # period 2*ell + 2, ell doubled


def residue_twisted(col: int, kind: CrystalKind) -> Residue:
    """Column residue under the kind's repeating palindromic pattern."""
    if col < 1:
        raise ValueError(f"columns are 1-based, got {col}")
    pattern = kind.column_pattern
    return Residue(pattern[(col - 1) % len(pattern)], kind.modulus)


def residue_counts(lam: Partition, e: int) -> tuple[int, ...]:
    """Number of diagram nodes of each type-A residue; entries sum to |lam|."""
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    counts = [0] * e
    for row, part in enumerate(lam, start=1):
        for col in range(1, part + 1):
            counts[(col - row) % e] += 1
    return tuple(counts)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n (parts bounded by max_part), largest first part first."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def e_regular_partitions(n: int, e: int) -> list[Partition]:
    """The e-regular partitions of n, sorted lexicographically."""
    return sorted(p for p in partitions_of(n) if is_e_regular(p, e))
