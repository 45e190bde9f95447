"""Bruhat order: comparisons, lower intervals, covers, Poincare polynomials.

``leq`` decides u <= w by the standard descent recursion: pick a left
descent s of w; if s is also a left descent of u compare (su, sw), else
compare (u, sw).  Lower intervals use the subword characterisation -- the
interval below w is exactly the set of elements of subwords of one reduced
word of w -- computed as a left-to-right closure so equal subwords are
merged early.  Both are memoised per system.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Element
from .errors import IntervalTooLarge
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class Interval:
    """The lower Bruhat interval [e, top]."""

    top: Element
    members: frozenset[Element]
    rank_sizes: tuple[int, ...]  # rank_sizes[k] = number of members of length k

    def sorted_members(self) -> list[Element]:
        return sorted(self.members)

    def at_length(self, k: int) -> frozenset[Element]:
        return frozenset(w for w in self.members if w.length == k)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w: Element) -> bool:
        return w in self.members

    def __iter__(self):
        return iter(self.sorted_members())


def leq(u: Element, w: Element) -> bool:
    """Bruhat order comparison u <= w."""
    sys = u.system
    sys._check_mine(w)
    if u is w:
        return True
    if u.length > w.length:
        return False
    if u.length == 0:
        return True
    cache = sys._leq_cache
    key = (u.word, w.word)
    hit = cache.get(key)
    if hit is not None:
        return hit
    s = min(w.left_descents)
    sw = sys._lmul_gen(s, w)
    if s in u.left_descents:
        res = leq(sys._lmul_gen(s, u), sw)
    else:
        res = leq(u, sw)
    cache[key] = res
    return res


def lower_interval(w: Element, *, cap: int | None = None) -> Interval:
    """All elements u <= w, with rank sizes.

    Enumerates the subwords of the canonical word of w (as a closure over
    prefixes, deduplicating as it goes).  Raises IntervalTooLarge when
    length(w) exceeds the cap (the system's interval_cap by default).
    """
    sys = w.system
    if cap is None:
        cap = sys.interval_cap
    if w.length > cap:
        raise IntervalTooLarge(f"length {w.length} exceeds interval cap {cap}")
    cached = sys._interval_cache.get(w.word)
    if cached is not None:
        return cached
    members = {sys.identity}
    for s in w.word:
        members |= {sys._mul_gen(u, s) for u in members}
    sizes = [0] * (w.length + 1)
    for u in members:
        sizes[u.length] += 1
    itv = Interval(top=w, members=frozenset(members), rank_sizes=tuple(sizes))
    sys._interval_cache[w.word] = itv
    return itv


def covers(w: Element) -> frozenset[Element]:
    """Elements covered by w: all u <= w with length(u) = length(w) - 1."""
    if w.length == 0:
        return frozenset()
    return lower_interval(w).at_length(w.length - 1)


def poincare(w: Element) -> IntPolynomial:
    """Rank generating function of [e, w]."""
    return IntPolynomial.from_coeffs(lower_interval(w).rank_sizes)
