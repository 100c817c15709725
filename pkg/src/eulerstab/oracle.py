"""Brute-force descent statistics over (signed) permutation groups.

This module is the ground truth the closed-form generators are checked
against.  Elements are windows: tuples (s_1, ..., s_n) of nonzero integers
whose absolute values are a permutation of 1..n.  Statistics are computed
from padded-window characterizations:

* type A   - descents of the plain sequence
* type B   - descents of (0, s_1, ..., s_n)
* type D   - descents of (-s_2, s_1, ..., s_n)
* affine B - type-B descents, plus one extra when the window entry of
             smaller absolute value among {s_1, s_2} is positive (the image
             of e_1 + e_2 is then a positive root)

Nothing here shares code with `eulerstab.eulerian`, so distribution
agreement between the two is meaningful evidence that both are right.

Enumeration is exhaustive and deterministic: permutations in lexicographic
order, sign masks in increasing order, mask bit i negating window entry i.
A budget guard refuses group orders that are too large to enumerate.
"""

from __future__ import annotations

import dataclasses
import itertools
from math import factorial
from typing import Iterable, Sequence, Tuple, Union

from .polynomial import Polynomial

GROUPS = ("A", "B", "D")
STATS = ("des", "affdes", "des_d")
FILTERS = ("all", "last_positive", "last_negative")

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


@dataclasses.dataclass(frozen=True)
class SignedPerm:
    """Signed permutation in window notation."""

    window: Tuple[int, ...]

    def __post_init__(self) -> None:
        w = tuple(self.window)
        object.__setattr__(self, "window", w)
        if sorted(abs(v) for v in w) != list(range(1, len(w) + 1)):
            raise ValueError(
                "window entries must be nonzero and cover 1..n in absolute value"
            )

    @property
    def n(self) -> int:
        return len(self.window)

    def is_even_signed(self) -> bool:
        """True when the element lies in the type-D subgroup."""
        return sum(1 for v in self.window if v < 0) % 2 == 0


WindowLike = Union[SignedPerm, Sequence[int]]


def _window_of(sp: WindowLike) -> Tuple[int, ...]:
    if isinstance(sp, SignedPerm):
        return sp.window
    return SignedPerm(tuple(sp)).window


def _descents(seq: Tuple[int, ...]) -> int:
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def des_a(perm: Iterable[int]) -> int:
    """Descents of a sequence of distinct integers."""
    seq = tuple(perm)
    if len(set(seq)) != len(seq):
        raise ValueError("entries must be distinct")
    return _descents(seq)


def des_b(sp: WindowLike) -> int:
    """Type-B descents: descents of the window padded with s_0 = 0."""
    w = _window_of(sp)
    return _descents((0,) + w)


def des_d(sp: WindowLike) -> int:
    """Type-D descents: descents of the window padded with s_0 = -s_2.

    Defined on every signed permutation of rank >= 2, not only on
    even-signed ones.
    """
    w = _window_of(sp)
    if len(w) < 2:
        raise ValueError("the type-D statistic needs rank >= 2")
    return _descents((-w[1],) + w)


def _node0_affine_descent(w: Tuple[int, ...]) -> bool:
    a, b = w[0], w[1]
    return (a if abs(a) < abs(b) else b) > 0


def affdes_b(sp: WindowLike) -> int:
    """Affine type-B descents: des_b plus the node-0 contribution."""
    w = _window_of(sp)
    if len(w) < 2:
        raise ValueError("the affine type-B statistic needs rank >= 2")
    return _descents((0,) + w) + (1 if _node0_affine_descent(w) else 0)


def group_order(group: str, n: int) -> int:
    if group == "A":
        return factorial(n)
    if group == "B":
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def distribution(
    group: str,
    stat: str,
    n: int,
    filter: str = "all",
    budget: int = DEFAULT_BUDGET,
) -> Polynomial:
    """Exact distribution polynomial of a statistic over a filtered group.

    group selects the element set (A: permutations of 1..n, B: all signed
    permutations, D: even-signed ones); stat selects the statistic, where
    "des" means the group's own descent statistic and "des_d" forces the
    type-D rule on any signed group; filter restricts by the sign of the
    last window entry.
    """
    if group not in GROUPS:
        raise ValueError(f"unknown group {group!r}")
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}")
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    if group == "A":
        if stat != "des":
            raise ValueError("group A supports only the des statistic")
        if n < 1:
            raise ValueError("group A needs at least one letter")
    else:
        min_rank = 2 if (group == "D" or stat in ("affdes", "des_d")) else 1
        if n < min_rank:
            raise ValueError(f"group {group} with statistic {stat} needs rank >= {min_rank}")
    if stat == "affdes" and group != "B":
        raise ValueError("the affine statistic is only defined over group B")
    if group_order(group, n) > budget:
        raise BudgetExceededError(
            f"group order {group_order(group, n)} exceeds the enumeration budget {budget}"
        )

    hist = [0] * (n + 2)
    descents = _descents

    if group == "A":
        if filter == "last_negative":
            return Polynomial()
        for perm in itertools.permutations(range(1, n + 1)):
            hist[descents(perm)] += 1
        return Polynomial(hist)

    masks: Iterable[int] = range(1 << n)
    if filter == "last_positive":
        masks = [m for m in masks if not (m >> (n - 1)) & 1]
    elif filter == "last_negative":
        masks = [m for m in masks if (m >> (n - 1)) & 1]
    if group == "D":
        masks = [m for m in masks if m.bit_count() % 2 == 0]
    masks = list(masks)

    d_pad = stat == "des_d" or (stat == "des" and group == "D")
    affine = stat == "affdes"

    for perm in itertools.permutations(range(1, n + 1)):
        for mask in masks:
            w = tuple(-v if (mask >> i) & 1 else v for i, v in enumerate(perm))
            head = -w[1] if d_pad else 0
            k = descents((head,) + w)
            if affine and _node0_affine_descent(w):
                k += 1
            hist[k] += 1
    return Polynomial(hist)
