"""Pure-Python enumeration core.

Walks every proper coloring of a unit interval graph by depth-first
search over vertices 1..n, pruning as soon as two adjacent vertices
share a color, and tallies colorings by (color-content vector, number
of ascending edges).  csfkit._speedups is the compiled twin with the
same interface; csfkit.kernel picks one at import time.
"""

from __future__ import annotations

BACKEND = "python"


def _earlier_neighbors(hvec: tuple[int, ...]) -> list[list[int]]:
    # nbrs[i] = 0-based vertices j < i adjacent to i, i.e. h(j+1) >= i+1
    n = len(hvec)
    return [[j for j in range(i) if hvec[j] >= i + 1] for i in range(n)]


def coloring_table(hvec, k: int) -> dict:
    """Tally proper colorings of the unit interval graph of hvec with
    colors 0..k-1.

    Returns {content vector (length k): {ascent count: multiplicity}}
    where content[c] counts vertices colored c and an ascent is an edge
    {i, j}, i < j, whose colors satisfy color(i) < color(j).
    """
    hvec = tuple(hvec)
    n = len(hvec)
    nbrs = _earlier_neighbors(hvec)
    table: dict[tuple[int, ...], dict[int, int]] = {}
    colors = [0] * n
    content = [0] * k

    def rec(i: int, asc: int) -> None:
        if i == n:
            row = table.setdefault(tuple(content), {})
            row[asc] = row.get(asc, 0) + 1
            return
        for c in range(k):
            up = 0
            ok = True
            for j in nbrs[i]:
                cj = colors[j]
                if cj == c:
                    ok = False
                    break
                if cj < c:
                    up += 1
            if not ok:
                continue
            colors[i] = c
            content[c] += 1
            rec(i + 1, asc + up)
            content[c] -= 1

    rec(0, 0)
    return table


def count_colorings(hvec, k: int) -> int:
    """Number of proper colorings with k colors (no tallying)."""
    hvec = tuple(hvec)
    n = len(hvec)
    nbrs = _earlier_neighbors(hvec)
    colors = [0] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        total = 0
        for c in range(k):
            ok = True
            for j in nbrs[i]:
                if colors[j] == c:
                    ok = False
                    break
            if ok:
                colors[i] = c
                total += rec(i + 1)
        return total

    return rec(0)
