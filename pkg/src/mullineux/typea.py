"""Kleshchev's e-good lattice on e-regular partitions.

For a fixed residue x, the addable and removable x-nodes are read off the
boundary top down.  Writing A for addable and R for removable gives a word
in which every adjacent "AR" is cancelled, repeatedly, until none is left.
Surviving R's are the normal x-nodes (the last one is the good x-node) and
surviving A's are the conormal x-nodes (the first one is the cogood x-node).
Removing good nodes and adding cogood nodes are mutually inverse moves and
generate the whole lattice from the empty partition.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import (
    InternalConsistencyError,
    Node,
    Partition,
    Residue,
    e_regular_partitions,
    is_e_regular,
)


@dataclass(frozen=True)
class SignatureReport:
    """A/R word of one residue plus the survivors of AR-cancellation."""

    raw: tuple[tuple[Node, str], ...]
    normal: tuple[Node, ...]
    conormal: tuple[Node, ...]
    good: Node | None
    cogood: Node | None

    @property
    def epsilon(self) -> int:
        return len(self.normal)

    @property
    def phi(self) -> int:
        return len(self.conormal)

    @property
    def letters(self) -> str:
        return "".join(letter for _, letter in self.raw)


def removable_nodes(lam: Partition) -> list[Node]:
    """Boxes whose removal leaves a Young diagram, top row first."""
    out = []
    for r, part in enumerate(lam, start=1):
        below = lam[r] if r < len(lam) else 0
        if part > below:
            out.append((r, part))
    return out


def addable_nodes(lam: Partition) -> list[Node]:
    """Concave corners where a box can be added, top row first."""
    out = []
    for r, part in enumerate(lam, start=1):
        if r == 1 or lam[r - 2] > part:
            out.append((r, part + 1))
    out.append((len(lam) + 1, 1))
    return out


def cancel_ar(pairs):
    """Drop every adjacent 'A then R' pair, repeatedly; survivors keep order.

    Items are (payload, letter) pairs.  A single left-to-right pass with a
    stack is equivalent to iterated deletion of "AR" substrings.
    """
    stack = []
    for pair in pairs:
        if pair[1] == "R" and stack and stack[-1][1] == "A":
            stack.pop()
        else:
            stack.append(pair)
    return stack


def _boundary(lam: Partition) -> list[tuple[Node, str]]:
    # Top-down reading order; a row holds at most one A and one R, at
    # different columns, so sorting by (row, col) never has to break ties.
    merged = [(node, "R") for node in removable_nodes(lam)]
    merged += [(node, "A") for node in addable_nodes(lam)]
    merged.sort(key=lambda pair: pair[0])
    return merged


def _residue_value(x, modulus: int) -> int:
    if isinstance(x, Residue):
        if x.modulus != modulus:
            raise ValueError(
                f"residue modulus {x.modulus} does not match modulus {modulus}")
        return x.value
    return int(x) % modulus


def signature_report(lam: Partition, x, e: int) -> SignatureReport:
    """Signature of lam at residue x, with good/cogood nodes and counts."""
    if not is_e_regular(lam, e):
        raise ValueError(f"{lam} is not {e}-regular")
    xv = _residue_value(x, e)
    raw = tuple(pair for pair in _boundary(lam)
                if (pair[0][1] - pair[0][0]) % e == xv)
    survivors = cancel_ar(raw)
    normal = tuple(node for node, letter in survivors if letter == "R")
    conormal = tuple(node for node, letter in survivors if letter == "A")
    return SignatureReport(
        raw=raw,
        normal=normal,
        conormal=conormal,
        good=normal[-1] if normal else None,
        cogood=conormal[0] if conormal else None,
    )


def _drop_box(lam: Partition, row: int) -> Partition:
    part = lam[row - 1] - 1
    return lam[:row - 1] + ((part,) if part else ()) + lam[row:]


def _put_box(lam: Partition, row: int) -> Partition:
    if row == len(lam) + 1:
        return lam + (1,)
    return lam[:row - 1] + (lam[row - 1] + 1,) + lam[row:]


def remove_good(lam: Partition, x, e: int) -> Partition | None:
    """Remove the good x-node, or None when there is none."""
    report = signature_report(lam, x, e)
    if report.good is None:
        return None
    return _drop_box(lam, report.good[0])


def add_cogood(lam: Partition, x, e: int) -> Partition | None:
    """Add the cogood x-node, or None when there is none."""
    report = signature_report(lam, x, e)
    if report.cogood is None:
        return None
    return _put_box(lam, report.cogood[0])


def good_nodes(lam: Partition, e: int) -> list[Node | None]:
    """Good node for every residue, from a single boundary scan."""
    buckets: list[list[tuple[Node, str]]] = [[] for _ in range(e)]
    for node, letter in _boundary(lam):
        buckets[(node[1] - node[0]) % e].append((node, letter))
    out: list[Node | None] = []
    for bucket in buckets:
        normals = [node for node, letter in cancel_ar(bucket) if letter == "R"]
        out.append(normals[-1] if normals else None)
    return out


def _residue_order(e: int, tie_break: str) -> range:
    if tie_break == "min":
        return range(e)
    if tie_break == "max":
        return range(e - 1, -1, -1)
    raise ValueError(f"tie_break must be 'min' or 'max', got {tie_break!r}")


def canonical_path(lam: Partition, e: int, tie_break: str = "min") -> tuple[int, ...]:
    """A residue word whose cogood-addition replay from empty rebuilds lam.

    Strips good nodes one at a time, always at the first residue (in
    tie_break order) that has one, and returns the reversed removal word.
    """
    if not is_e_regular(lam, e):
        raise ValueError(f"{lam} is not {e}-regular")
    order = _residue_order(e, tie_break)
    word = []
    cur = lam
    while cur:
        goods = good_nodes(cur, e)
        for x in order:
            if goods[x] is not None:
                word.append(x)
                cur = _drop_box(cur, goods[x][0])
                break
        else:
            raise InternalConsistencyError(
                f"nonempty {e}-regular partition {cur} has no good node")
    word.reverse()
    return tuple(word)


class ReplayError(ValueError):
    """A residue word demanded a cogood node that does not exist."""


def replay_path(word, e: int) -> Partition:
    """Apply cogood additions from the empty partition along a residue word."""
    lam: Partition = ()
    for step, x in enumerate(word, start=1):
        nxt = add_cogood(lam, x, e)
        if nxt is None:
            raise ReplayError(
                f"step {step}: no cogood {int(x) % e}-node on {lam}")
        lam = nxt
    return lam


@dataclass(frozen=True)
class CrystalGraph:
    """Levels (lex-sorted) and labeled edges of a level-bounded crystal."""

    levels: tuple[tuple[Partition, ...], ...]
    edges: tuple[tuple[Partition, Partition, int], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)


def enumerate_kleshchev(e: int, max_n: int) -> CrystalGraph:
    """Levels 0..max_n of the e-good lattice with residue-labeled edges.

    Built by cogood addition from the empty partition; every level is then
    cross-checked against the e-regular filter, and a mismatch raises (the
    two constructions agreeing is a correctness signal, not an assumption).
    """
    if max_n < 0:
        raise ValueError(f"max_n must be non-negative, got {max_n}")
    if e < 2:
        raise ValueError(f"e must be at least 2, got {e}")
    levels: list[tuple[Partition, ...]] = [((),)]
    edges: list[tuple[Partition, Partition, int]] = []
    level: list[Partition] = [()]
    for n in range(max_n):
        seen = set()
        for lam in level:
            for x in range(e):
                mu = add_cogood(lam, x, e)
                if mu is not None:
                    edges.append((lam, mu, x))
                    seen.add(mu)
        level = sorted(seen)
        if level != e_regular_partitions(n + 1, e):
            raise InternalConsistencyError(
                f"e={e} level {n + 1}: reachable set differs from the regular filter")
        levels.append(tuple(level))
    return CrystalGraph(tuple(levels), tuple(edges))
