"""Hessenberg functions, root ideals, unit interval graphs and the
dictionary between them.

A Hessenberg function of size n is a weakly increasing map h:[n]->[n]
with h(i) >= i (so h(n) = n).  Its unit interval graph joins i < j
exactly when j <= h(i).  The complementary encoding is the root ideal:
the upward-closed set of pairs (i, j), i < j, with j > h(i).  Both
families are counted by the Catalan numbers; the Dyck-path encoding
used at the boundaries of this package is the area sequence
a_i = h(i) - i.
"""

from __future__ import annotations

import re
import warnings
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence


class HessenbergError(ValueError):
    """Base class for invalid Hessenberg input."""


class NotWeaklyIncreasing(HessenbergError):
    pass


class ValueBelowIndex(HessenbergError):
    pass


class LastValueNotN(HessenbergError):
    pass


class Hessenberg:
    """A validated Hessenberg function, stored as the tuple of values.

    >>> Hessenberg((2, 3, 3)).area()
    (1, 1, 0)
    """

    __slots__ = ("values",)

    def __init__(self, values: Sequence[int]):
        values = tuple(int(v) for v in values)
        if not values:
            raise HessenbergError("empty sequence")
        n = len(values)
        for i in range(n - 1):
            if values[i] > values[i + 1]:
                raise NotWeaklyIncreasing(
                    "h(%d) = %d > %d = h(%d)" % (i + 1, values[i], values[i + 1], i + 2)
                )
        for i, v in enumerate(values, start=1):
            if v < i:
                raise ValueBelowIndex("h(%d) = %d < %d" % (i, v, i))
        if values[-1] != n:
            raise LastValueNotN("h(%d) = %d, expected %d" % (n, values[-1], n))
        self.values = values

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str) -> "Hessenberg":
        """Parse the comma-separated form, e.g. '2,3,3'."""
        try:
            values = [int(tok) for tok in text.strip().split(",") if tok.strip()]
        except ValueError as exc:
            raise HessenbergError("cannot parse %r" % text) from exc
        return cls(values)

    @classmethod
    def from_area(cls, areas: Sequence[int]) -> "Hessenberg":
        """Build from the Dyck-path area sequence a_i = h(i) - i."""
        return cls(tuple(a + i for i, a in enumerate(areas, start=1)))

    def area(self) -> tuple[int, ...]:
        return tuple(v - i for i, v in enumerate(self.values, start=1))

    def edges(self) -> frozenset[tuple[int, int]]:
        """Edge set of the unit interval graph, as (i, j) pairs, i < j."""
        return frozenset(
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.values[i - 1] + 1)
        )

    def edge_count(self) -> int:
        return sum(v - i for i, v in enumerate(self.values, start=1))

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Hessenberg) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self) -> str:
        return "Hessenberg(%r)" % (self.values,)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


class RootIdeal:
    """An upward-closed set of pairs (i, j), 1 <= i < j <= n.

    Upward closure: membership of (i, j) forces (i', j) for i' < i and
    (i, j') for j' > j.
    """

    __slots__ = ("n", "roots")

    def __init__(self, n: int, roots):
        roots = frozenset((int(i), int(j)) for i, j in roots)
        for i, j in roots:
            if not (1 <= i < j <= n):
                raise ValueError("pair (%d, %d) out of range for n=%d" % (i, j, n))
            if i > 1 and (i - 1, j) not in roots:
                raise ValueError("not upward closed: (%d, %d) missing" % (i - 1, j))
            if j < n and (i, j + 1) not in roots:
                raise ValueError("not upward closed: (%d, %d) missing" % (i, j + 1))
        self.n = n
        self.roots = roots

    @classmethod
    def full(cls, n: int) -> "RootIdeal":
        return cls(n, [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)])

    @classmethod
    def parse(cls, text: str, n: int) -> "RootIdeal":
        """Parse the brace form, e.g. '{(1,3),(2,3)}'."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        pairs = re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", body)
        if re.sub(r"[\s,]", "", re.sub(r"\(\s*\d+\s*,\s*\d+\s*\)", "", body)):
            raise ValueError("cannot parse root ideal %r" % text)
        return cls(n, [(int(a), int(b)) for a, b in pairs])

    def size(self) -> int:
        return len(self.roots)

    def __contains__(self, pair) -> bool:
        return pair in self.roots

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RootIdeal)
            and self.n == other.n
            and self.roots == other.roots
        )

    def __hash__(self):
        return hash((self.n, self.roots))

    def __repr__(self) -> str:
        return "RootIdeal(%d, %s)" % (self.n, str(self))

    def __str__(self) -> str:
        return "{%s}" % ",".join("(%d,%d)" % p for p in sorted(self.roots))


class UnitIntervalGraph(NamedTuple):
    n: int
    edges: frozenset[tuple[int, int]]


class ModularTriple(NamedTuple):
    psi0: RootIdeal
    psi: RootIdeal
    psi1: RootIdeal
    index: int
    branch: int


def validate_hessenberg(seq: Sequence[int]) -> Hessenberg:
    """Validate a raw sequence; raises a HessenbergError subclass on
    failure (NotWeaklyIncreasing, ValueBelowIndex, LastValueNotN)."""
    return Hessenberg(seq)


def hess_to_ideal(h: Hessenberg) -> RootIdeal:
    """The complementary root ideal: (i, j) is in the ideal iff j > h(i)."""
    n = h.n
    return RootIdeal(
        n,
        [
            (i, j)
            for i in range(1, n + 1)
            for j in range(h.values[i - 1] + 1, n + 1)
        ],
    )


def ideal_to_hess(psi: RootIdeal) -> Hessenberg:
    """Inverse of hess_to_ideal: h(i) is the largest j with (i, j)
    outside the ideal, or i when every pair from i is inside."""
    n = psi.n
    values = []
    for i in range(1, n + 1):
        best = i
        for j in range(i + 1, n + 1):
            if (i, j) not in psi.roots:
                best = max(best, j)
        values.append(best)
    return Hessenberg(values)


def h_profile(psi: RootIdeal) -> tuple[int, ...]:
    """Column profile of the ideal: slot i holds the largest j < i with
    (j, i) in the ideal, or 0 when the column is empty."""
    n = psi.n
    out = []
    for i in range(1, n + 1):
        best = 0
        for j in range(1, i):
            if (j, i) in psi.roots:
                best = max(best, j)
        out.append(best)
    return tuple(out)


def theta(psi: RootIdeal) -> RootIdeal:
    """The flip (i, j) -> (n+1-j, n+1-i); an involution on root ideals."""
    n = psi.n
    return RootIdeal(n, [(n + 1 - j, n + 1 - i) for i, j in psi.roots])


def unit_interval_graph(h: Hessenberg) -> UnitIntervalGraph:
    return UnitIntervalGraph(h.n, h.edges())


def connected_components(h: Hessenberg) -> list[Hessenberg]:
    """Components of the unit interval graph, each relabelled to a
    Hessenberg function on 1..m by subtracting the block offset.

    Components of a unit interval graph are consecutive vertex blocks,
    so concatenation in order recovers the original labels.
    """
    values = h.values
    out = []
    start = 1
    while start <= h.n:
        reach = start
        i = start
        while i <= reach:
            reach = max(reach, values[i - 1])
            i += 1
        out.append(Hessenberg(tuple(values[k - 1] - (start - 1) for k in range(start, reach + 1))))
        start = reach + 1
    return out


def enumerate_hessenberg(n: int) -> Iterator[Hessenberg]:
    """Every Hessenberg function of size n exactly once, in
    lexicographic order of the value vector.  There are Catalan(n).

    >>> [str(h) for h in enumerate_hessenberg(3)]
    ['1,2,3', '1,3,3', '2,2,3', '2,3,3', '3,3,3']
    """
    if n < 1:
        raise ValueError("n must be positive")

    def rec(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            yield Hessenberg(tuple(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        hi = n
        for v in range(lo, hi + 1):
            if i == n and v != n:
                continue
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([])


@lru_cache(maxsize=None)
def _all_hessenberg(n: int) -> tuple[Hessenberg, ...]:
    return tuple(enumerate_hessenberg(n))


def is_stable_under_swap(psi: RootIdeal, i: int) -> bool:
    """Whether swapping index i <-> i+1 in both coordinates maps the
    ideal to itself.  An ideal containing (i, i+1) is never stable,
    since the swap carries that pair out of the upper triangle."""
    if not 1 <= i < psi.n:
        raise ValueError("swap index must satisfy 1 <= i < n")
    if (i, i + 1) in psi.roots:
        return False

    def swap(k: int) -> int:
        if k == i:
            return i + 1
        if k == i + 1:
            return i
        return k

    image = {(min(swap(a), swap(b)), max(swap(a), swap(b))) for a, b in psi.roots}
    return image == psi.roots


def _is_upward_closed(n: int, roots: frozenset) -> bool:
    for i, j in roots:
        if i > 1 and (i - 1, j) not in roots:
            return False
        if j < n and (i, j + 1) not in roots:
            return False
    return True


def find_modular_triples(n: int) -> list[ModularTriple]:
    """All triples (psi0, psi, psi1, i) of nested root ideals differing
    by one root on each side, with psi0 and psi1 stable under the
    i <-> i+1 swap, satisfying one of the two one-root patterns:

      branch 1: psi \\ psi0 = {(i, j)} and psi1 \\ psi = {(i+1, j)}
                for some i < j < n;
      branch 2: psi \\ psi0 = {(j, i)} and psi1 \\ psi = {(j, i+1)}
                for some j < i < n.

    Branch 2 contradicts upward closure ((j, i) inside forces (j, i+1)
    inside), so it should never fire; a warning is emitted if it does.
    """
    triples = []
    for h in _all_hessenberg(n):
        psi = hess_to_ideal(h)
        roots = psi.roots
        for i in range(1, n):
            candidates = []
            for j in range(i + 1, n):  # branch 1: i < j < n
                candidates.append((1, (i, j), (i + 1, j)))
            for j in range(1, i):  # branch 2: j < i < n (needs i < n)
                if i < n:
                    candidates.append((2, (j, i), (j, i + 1)))
            for branch, removed, added in candidates:
                if removed not in roots:
                    continue
                a, b = added
                if not (1 <= a < b <= n) or added in roots:
                    continue
                roots0 = roots - {removed}
                roots1 = roots | {added}
                if not _is_upward_closed(n, roots0):
                    continue
                if not _is_upward_closed(n, roots1):
                    continue
                psi0 = RootIdeal(n, roots0)
                psi1 = RootIdeal(n, roots1)
                if not is_stable_under_swap(psi0, i):
                    continue
                if not is_stable_under_swap(psi1, i):
                    continue
                if branch == 2:
                    warnings.warn(
                        "modular-law branch 2 fired at n=%d, i=%d, h=%s; "
                        "this pattern should be unsatisfiable" % (n, i, h),
                        RuntimeWarning,
                    )
                triples.append(ModularTriple(psi0, psi, psi1, i, branch))
    return triples
