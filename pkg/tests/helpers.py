"""Independent oracles shared across test modules.

Everything here recomputes facts from first principles (cell sets, iterated
string deletion, direct recursive counting) so the library is checked
against a second route, not against itself.
"""

from __future__ import annotations


def all_partitions(n, max_part=None):
    """Recursive generator, independent of the library's enumerator."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def diagram(lam):
    """Cell set of the Young diagram."""
    return {(r, c) for r, part in enumerate(lam, start=1)
            for c in range(1, part + 1)}


def from_diagram(cells):
    """Partition whose diagram is the given cell set, or None."""
    if not cells:
        return ()
    rows = {}
    for r, c in cells:
        rows.setdefault(r, set()).add(c)
    height = max(rows)
    if set(rows) != set(range(1, height + 1)):
        return None
    parts = []
    for r in range(1, height + 1):
        cols = rows[r]
        if cols != set(range(1, len(cols) + 1)):
            return None
        parts.append(len(cols))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        return None
    return tuple(parts)


def conjugate_by_columns(lam):
    """Transpose via the cell set."""
    cells = diagram(lam)
    return from_diagram({(c, r) for r, c in cells})


def cancel_by_deletion(letters):
    """Iterated deletion of 'AR' substrings, tracking surviving positions."""
    items = list(enumerate(letters))
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            if items[i][1] == "A" and items[i + 1][1] == "R":
                del items[i:i + 2]
                changed = True
                break
    return [pos for pos, _ in items]


def count_partitions_with_parts(n, allowed):
    """Number of partitions of n into parts from the set `allowed`."""
    allowed = sorted(a for a in allowed if a <= n)

    def rec(remaining, idx):
        if remaining == 0:
            return 1
        total = 0
        for k in range(idx, len(allowed)):
            if allowed[k] > remaining:
                break
            total += rec(remaining - allowed[k], k)
        return total

    return rec(n, 0)


def distinct_partitions(n):
    """Partitions of n into pairwise distinct parts."""
    return [p for p in all_partitions(n)
            if all(p[i] > p[i + 1] for i in range(len(p) - 1))]


def symmetric_partitions(n):
    """Self-conjugate partitions of n."""
    return [p for p in all_partitions(n) if conjugate_by_columns(p) == p]
