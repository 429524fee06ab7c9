"""The affine weight lattice of gl(n), its simple-reflection action,
and the product formula that evaluates a unit interval graph's
symmetric function as a sum over reflection-word tuples.

Weights live in Z*delta + Z*Lambda0 + Z^n (the eps coordinates).  The
generator s_i for i < n reflects in eps_i - eps_{i+1}; the affine node
(index n, with 0 accepted as an alias) reflects in eps_n - eps_1 +
delta and picks up the level term.  The inner form pairs eps_i with
eps_j by delta_{ij} and kills delta and Lambda0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .hessenberg import Hessenberg, h_profile, hess_to_ideal


class IndexOutOfRange(ValueError):
    pass


class InvalidProfile(ValueError):
    pass


class BadWeight(ValueError):
    pass


WEIGHTSUM_JSON_VERSION = "weightsum-v1"


@dataclass(frozen=True)
class AffineWeight:
    """An integer weight: delta * delta-coeff + Lambda0 * level + sum
    of eps coordinates."""

    delta: int
    level: int
    eps: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.eps)


def fundamental_weight(n: int, i: int) -> AffineWeight:
    """Lambda_i: level 1 with the first i eps coordinates equal to 1
    (all of them for i = n; none for i = 0)."""
    if not 0 <= i <= n:
        raise IndexOutOfRange("fundamental index %d out of range for n=%d" % (i, n))
    return AffineWeight(0, 1, tuple(1 if j < i else 0 for j in range(n)))


def _resolve_node(i: int, n: int) -> int:
    if i == 0:
        return n
    if 1 <= i <= n:
        return i
    raise IndexOutOfRange("reflection index %d out of range for n=%d" % (i, n))


def reflect(i: int, w: AffineWeight) -> AffineWeight:
    """Apply the simple reflection s_i.

    For i < n the pairing is eps_i - eps_{i+1}; for the affine node the
    root is eps_n - eps_1 + delta and the level contributes to the
    coefficient.  Involutive for n >= 2 (for n = 1 the affine root
    degenerates to delta, which translates instead of reflecting).
    """
    n = w.n
    i = _resolve_node(i, n)
    eps = w.eps
    if i < n:
        c = eps[i - 1] - eps[i]
        if c == 0:
            return w
        new_eps = list(eps)
        new_eps[i - 1] -= c
        new_eps[i] += c
        return AffineWeight(w.delta, w.level, tuple(new_eps))
    c = (eps[n - 1] - eps[0] if n > 1 else 0) + w.level
    if c == 0:
        return w
    new_eps = list(eps)
    new_eps[n - 1] -= c
    new_eps[0] += c
    return AffineWeight(w.delta - c, w.level, tuple(new_eps))


def s_set(i: int, h: int, n: int) -> list[tuple[int, ...]]:
    """The n-i+h+1 reflection words attached to slot i with profile h.

    Each word is returned as the tuple of generator indices in the
    order they are applied (so the written form reads right to left).
    The word of length L applies s_i, then s_{i+1}, ... with indices
    wrapping cyclically through the affine node.
    """
    if not 1 <= i <= n:
        raise IndexOutOfRange("slot %d out of range for n=%d" % (i, n))
    if not 0 <= h < i:
        raise InvalidProfile("profile value %d must satisfy 0 <= h < i=%d" % (h, i))
    words = []
    chain: list[int] = []
    j = i
    for _ in range(n - i + h):
        chain.append(j)
        j = j % n + 1
    for length in range(len(chain) + 1):
        words.append(tuple(chain[:length]))
    return words


def word_str(word: tuple[int, ...]) -> str:
    """Display form, rightmost generator applied first."""
    if not word:
        return "1"
    return "*".join("s%d" % j for j in reversed(word))


class WeightSum:
    """An integer combination of affine weights."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for w, c in terms.items():
                if c:
                    data[w] = c
        self.terms = data

    def total_mass(self) -> int:
        return sum(self.terms.values())

    def items(self):
        """Terms sorted by (delta, level, eps)."""
        return sorted(
            self.terms.items(), key=lambda wc: (wc[0].delta, wc[0].level, wc[0].eps)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightSum) and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def project_eps(self) -> dict[tuple[int, ...], int]:
        """Erase delta and Lambda0: tally coefficients by eps vector."""
        out: dict[tuple[int, ...], int] = {}
        for w, c in self.terms.items():
            out[w.eps] = out.get(w.eps, 0) + c
        return out

    def dump_lines(self) -> list[str]:
        return [
            "%d  delta=%d lambda0=%d eps=%s"
            % (c, w.delta, w.level, ",".join(str(e) for e in w.eps))
            for w, c in self.items()
        ]

    def to_json_dict(self) -> dict:
        return {
            "version": WEIGHTSUM_JSON_VERSION,
            "terms": [
                {
                    "coeff": c,
                    "delta": w.delta,
                    "lambda0": w.level,
                    "eps": list(w.eps),
                }
                for w, c in self.items()
            ],
        }


class FormulaResult(NamedTuple):
    decorated: WeightSum
    projected: dict[tuple[int, ...], int]


def formula_term_count(h: Hessenberg) -> int:
    """Number of reflection-word tuples the product expands into:
    the product over slots j of (n + 1 - j + profile_j)."""
    n = h.n
    profile = h_profile(hess_to_ideal(h))
    out = 1
    for j in range(1, n + 1):
        out *= n + 1 - j + profile[j - 1]
    return out


def evaluate_formula(h: Hessenberg) -> FormulaResult:
    """Expand the operator product over all reflection-word tuples.

    Slots are applied right to left (slot n first) to the top weight
    Lambda_n, and within each slot the nested words are walked
    incrementally, one extra generator at a time.  The decorated sum
    keeps full weights (delta and Lambda0 included); the projection
    tallies integer counts by eps vector only.
    """
    n = h.n
    profile = h_profile(hess_to_ideal(h))
    acc: dict[AffineWeight, int] = {fundamental_weight(n, n): 1}
    for i in range(n, 0, -1):
        steps = n - i + profile[i - 1]
        nxt: dict[AffineWeight, int] = {}
        for w, c in acc.items():
            u = w
            nxt[u] = nxt.get(u, 0) + c
            j = i
            for _ in range(steps):
                u = reflect(j, u)
                nxt[u] = nxt.get(u, 0) + c
                j = j % n + 1
        acc = nxt
    decorated = WeightSum(acc)
    return FormulaResult(decorated, decorated.project_eps())


@lru_cache(maxsize=None)
def _fixed_point_table(hvec: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    h = Hessenberg(hvec)
    n = h.n
    profile = h_profile(hess_to_ideal(h))
    out: dict[tuple[int, ...], int] = {}

    def eps_reflect(j: int, eps: tuple[int, ...]) -> tuple[int, ...]:
        if j < n:
            c = eps[j - 1] - eps[j]
            if c == 0:
                return eps
            vec = list(eps)
            vec[j - 1] -= c
            vec[j] += c
            return tuple(vec)
        c = (eps[n - 1] - eps[0] if n > 1 else 0) + 1  # level is always 1
        if c == 0:
            return eps
        vec = list(eps)
        vec[n - 1] -= c
        vec[0] += c
        return tuple(vec)

    def rec(i: int, eps: tuple[int, ...]) -> None:
        if i == 0:
            out[eps] = out.get(eps, 0) + 1
            return
        rec(i - 1, eps)
        cur = eps
        j = i
        for _ in range(n - i + profile[i - 1]):
            cur = eps_reflect(j, cur)
            rec(i - 1, cur)
            j = j % n + 1

    rec(n, (1,) * n)
    return out


def fixed_point_distribution(h: Hessenberg) -> dict[tuple[int, ...], int]:
    """Tuple-by-tuple enumeration of the word product: for each choice
    of one word per slot, apply the product to Lambda_n and tally the
    resulting eps vector.  One count per tuple; no merging along the
    way, so this is the independent slow route to the projection."""
    return dict(_fixed_point_table(h.values))


def count_fixed_points(h: Hessenberg, gamma) -> int:
    """How many word tuples land on the monomial with exponent vector
    gamma (nonnegative entries summing to n)."""
    gamma = tuple(int(g) for g in gamma)
    n = h.n
    if len(gamma) != n or any(g < 0 for g in gamma) or sum(gamma) != n:
        raise BadWeight(
            "gamma must have %d nonnegative entries summing to %d, got %r"
            % (n, n, gamma)
        )
    return _fixed_point_table(h.values).get(gamma, 0)
