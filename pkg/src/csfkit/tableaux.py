"""Semistandard tableau counting: Kostka numbers via horizontal-strip
peeling and Littlewood-Richardson coefficients via ballot-word
enumeration of skew tableaux."""

from __future__ import annotations

from .partitions import is_partition


class SizeMismatch(ValueError):
    """Raised when tableau counts are requested for incompatible sizes."""


_KOSTKA_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}


def _horizontal_strip_removals(lam: tuple[int, ...], size: int):
    """All partitions nu obtained from lam by removing a horizontal
    strip of the given size (nu interlaces lam row by row)."""
    rows = len(lam)

    def rec(row: int, remaining: int, acc: list[int]):
        if row == rows:
            if remaining == 0:
                yield tuple(p for p in acc if p)
            return
        hi = lam[row]
        lo = lam[row + 1] if row + 1 < rows else 0
        # nu[row] ranges over [lo, hi]; removal from this row is hi - nu[row]
        for nr in range(lo, hi + 1):
            removed = hi - nr
            if removed > remaining:
                continue
            acc.append(nr)
            yield from rec(row + 1, remaining - removed, acc)
            acc.pop()

    yield from rec(0, size, [])


def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Number of semistandard Young tableaux of shape lam and content mu.

    Both arguments are partitions of the same size; a SizeMismatch is
    raised otherwise.  Computed by peeling the largest entry of the
    filling off as a horizontal strip, with memoization.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if not (is_partition(lam) and is_partition(mu)):
        raise ValueError("kostka expects partitions, got %r, %r" % (lam, mu))
    if sum(lam) != sum(mu):
        raise SizeMismatch("|lam| = %d but |mu| = %d" % (sum(lam), sum(mu)))
    return _kostka_rec(lam, mu)


def _kostka_rec(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    key = (lam, mu)
    cached = _KOSTKA_MEMO.get(key)
    if cached is not None:
        return cached
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strip_removals(lam, last):
        total += _kostka_rec(nu, rest)
    _KOSTKA_MEMO[key] = total
    return total


def kostka_memo_export() -> list[list]:
    """Memo contents as sorted [[lam...], [mu...], value] rows."""
    rows = [[list(lam), list(mu), v] for (lam, mu), v in _KOSTKA_MEMO.items()]
    rows.sort()
    return rows

def kostka_memo_import(rows) -> int:
    """Load rows produced by kostka_memo_export; returns entries added."""
    added = 0
    for lam, mu, v in rows:
        key = (tuple(lam), tuple(mu))
        if key not in _KOSTKA_MEMO:
            _KOSTKA_MEMO[key] = int(v)
            added += 1
    return added


def kostka_memo_size() -> int:
    return len(_KOSTKA_MEMO)


def lr_tableau_count(
    lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]
) -> int:
    """Littlewood-Richardson coefficient by direct enumeration.

    Counts semistandard fillings of the skew shape nu/lam with content
    mu whose reverse reading word (rows top to bottom, each row right to
    left) is a ballot word.  The fill follows reading order so the
    ballot condition prunes as it goes.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    nu = tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        raise SizeMismatch(
            "|lam| + |mu| = %d but |nu| = %d" % (sum(lam) + sum(mu), sum(nu))
        )
    if len(lam) > len(nu) or any(
        lam[i] > nu[i] for i in range(len(lam))
    ):
        return 0  # lam not contained in nu: no skew shape
    if not mu:
        return 1 if lam == nu else 0

    nrows = len(nu)
    inner = list(lam) + [0] * (nrows - len(lam))
    nvals = len(mu)
    # grid[r][c] holds the filled value (1-based); row r spans columns
    # inner[r]..nu[r]-1
    grid = [[0] * nu[r] for r in range(nrows)]
    remaining = list(mu)
    ballot = [0] * (nvals + 1)  # ballot[v] = copies of v placed so far

    cells = []  # reading order: top to bottom, right to left
    for r in range(nrows):
        for c in range(nu[r] - 1, inner[r] - 1, -1):
            cells.append((r, c))

    count = 0

    def rec(idx: int) -> None:
        nonlocal count
        if idx == len(cells):
            count += 1
            return
        r, c = cells[idx]
        right = grid[r][c + 1] if c + 1 < nu[r] else None
        above = grid[r - 1][c] if r > 0 and c < nu[r - 1] and (
            c >= inner[r - 1]
        ) else None
        lo = 1 if above is None else above + 1
        hi = nvals if right is None else right
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if ballot[v - 1] <= ballot[v] and v > 1:
                continue  # placing v would break the ballot prefix condition
            grid[r][c] = v
            remaining[v - 1] -= 1
            ballot[v] += 1
            rec(idx + 1)
            ballot[v] -= 1
            remaining[v - 1] += 1
            grid[r][c] = 0

    rec(0)
    return count
