"""Parabolic subgroups W_J: coset representatives and decompositions.

For J a subset of the generators, every w factors uniquely as w = v u with
u in W_J, v of minimal length in the coset w W_J (equivalently: v has no
right descent in J) and length(w) = length(v) + length(u); mirrored on the
left.  The minimal representative is found by greedily stripping descents
lying in J.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bruhat import lower_interval
from .core import Element, GenSet
from .errors import BadSubsetChain, InternalAssertionFailed, NotMinimalRep


@dataclass(frozen=True)
class ParabolicDecomposition:
    """w = v u (side="right", u in W_J) or w = u v (side="left")."""

    v: Element
    u: Element
    side: str
    J: GenSet


def is_min_rep(w: Element, J: Iterable[int], side: str = "right") -> bool:
    """True when w is the minimal-length element of its W_J coset.

    side="right": minimal in w W_J (no right descent inside J);
    side="left": minimal in W_J w (no left descent inside J).
    """
    J = w.system.check_genset(J)
    if side == "right":
        return not (w.right_descents & J)
    if side == "left":
        return not (w.left_descents & J)
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def decompose(w: Element, J: Iterable[int], side: str = "right") -> ParabolicDecomposition:
    """Length-additive parabolic factorisation of w with respect to J."""
    sys = w.system
    J = sys.check_genset(J)
    u = sys.identity
    cur = w
    if side == "right":
        while True:
            ds = cur.right_descents & J
            if not ds:
                break
            t = min(ds)
            cur = sys._mul_gen(cur, t)
            u = sys._lmul_gen(t, u)
    elif side == "left":
        while True:
            ds = cur.left_descents & J
            if not ds:
                break
            t = min(ds)
            cur = sys._lmul_gen(t, cur)
            u = sys._mul_gen(u, t)
    else:
        raise ValueError(f"side must be 'right' or 'left', got {side!r}")
    return ParabolicDecomposition(v=cur, u=u, side=side, J=J)


def coset_rep(w: Element, J: Iterable[int]) -> Element:
    """The minimal-length representative of the coset w W_J."""
    return decompose(w, J, "right").v


def min_reps_leq(w: Element, J: Iterable[int]) -> frozenset[Element]:
    """All minimal coset representatives below w: [e, w] intersected with W^J."""
    J = w.system.check_genset(J)
    return frozenset(
        u for u in lower_interval(w).members if not (u.right_descents & J)
    )


def relative_rep(w: Element, J: Iterable[int], K: Iterable[int]) -> tuple[Element, Element]:
    """Split w in W^J as x y with x in W^K and y in W^J restricted to W_K.

    Requires J contained in K and w a minimal representative for J.  The
    factorisation is length additive and unique.
    """
    sys = w.system
    J = sys.check_genset(J)
    K = sys.check_genset(K)
    if not J <= K:
        raise BadSubsetChain(f"J={sys.genset_str(J)} is not a subset of K={sys.genset_str(K)}")
    if w.right_descents & J:
        raise NotMinimalRep(f"{w} is not a minimal representative for J={sys.genset_str(J)}")
    d = decompose(w, K, "right")
    if d.u.right_descents & J:
        raise InternalAssertionFailed("relative factor left the J-minimal representatives")
    return d.v, d.u
