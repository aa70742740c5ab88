"""Integral weights of gl(m|n) as integer label tuples.

A weight is stored as m "left" labels and n "right" labels, written
``a_1,...,a_m|b_1,...,b_n``.  The labels are the pairings of the shifted
weight with the standard basis of the dual Cartan; all predicates of
interest (dominance, singularity, atypicality, orbit membership, central
character) become elementary combinatorics of the labels.

Conventions baked in here and relied on everywhere else:

* left part dominant = weakly decreasing, right part dominant = weakly
  increasing;
* the central-character invariant of a weight is the map
  ``x -> (#left labels equal to x) - (#right labels equal to x)``;
* ``n = 0`` is allowed, so a plain gl(m) weight is the degenerate case.

All values are immutable; everything in this module is safe to share
between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import WeightParseError

__all__ = [
    "SuperWeight",
    "CentralCharacter",
    "from_rho_shifted",
    "central_character",
    "atypicality_degree",
    "is_dominant",
    "is_antidominant",
    "is_regular",
    "is_typical",
    "orbit_equal",
    "dominant_representative",
    "antidominant_representative",
]

_WEIGHT_RE = re.compile(r"^\s*\(?\s*([^|()]*)\|([^|()]*)\)?\s*$")


@dataclass(frozen=True, slots=True)
class SuperWeight:
    """An element of Z^(m|n): m left labels and n right labels."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(a) for a in self.left))
        object.__setattr__(self, "right", tuple(int(b) for b in self.right))
        if len(self.left) < 1:
            raise WeightParseError("a weight needs at least one left label")

    @property
    def m(self) -> int:
        return len(self.left)

    @property
    def n(self) -> int:
        return len(self.right)

    @property
    def labels(self) -> tuple[int, ...]:
        """All m+n labels, left part first."""
        return self.left + self.right

    def label(self, position: int) -> int:
        """Label at a 1-based position in 1..m+n."""
        if not 1 <= position <= self.m + self.n:
            raise IndexError(f"position {position} out of range")
        return self.labels[position - 1]

    def replace(self, position: int, value: int) -> "SuperWeight":
        """Copy with the label at a 1-based position replaced."""
        labels = list(self.labels)
        labels[position - 1] = value
        m = self.m
        return SuperWeight(tuple(labels[:m]), tuple(labels[m:]))

    @classmethod
    def parse(cls, text: str) -> "SuperWeight":
        """Parse ``"a1,...,am|b1,...,bn"`` (spaces allowed, ``|`` mandatory).

        >>> SuperWeight.parse("7,6, 2|4, 3")
        SuperWeight(left=(7, 6, 2), right=(4, 3))
        >>> SuperWeight.parse("2,1,0|")
        SuperWeight(left=(2, 1, 0), right=())
        """
        match = _WEIGHT_RE.match(text)
        if not match:
            raise WeightParseError(
                f"cannot parse weight {text!r}: expected 'a1,...,am|b1,...,bn'"
            )
        try:
            left = tuple(int(tok) for tok in match.group(1).split(",") if tok.strip())
            right = tuple(int(tok) for tok in match.group(2).split(",") if tok.strip())
        except ValueError as exc:
            raise WeightParseError(f"non-integer label in {text!r}") from exc
        if not left:
            raise WeightParseError(f"empty left part in {text!r}")
        return cls(left, right)

    def __str__(self) -> str:
        return "{}|{}".format(
            ",".join(map(str, self.left)), ",".join(map(str, self.right))
        )


def from_rho_shifted(
    coeffs: Sequence[int | Fraction | str], m: int, n: int
) -> SuperWeight:
    """Labels of a weight given by its m+n coordinates in the epsilon/delta basis.

    The shift added before reading off labels is the integral shift with
    left coordinates ``m-i`` and right coordinates ``1-j``; the bilinear
    form gives the epsilon directions square +1 and the delta directions
    square -1, so right labels are the *negated* shifted delta coordinates.

    >>> from_rho_shifted([0, 0, 0, 0], 3, 1)
    SuperWeight(left=(2, 1, 0), right=(0,))
    >>> from_rho_shifted([0, 0, 1, -1], 3, 1)
    SuperWeight(left=(2, 1, 1), right=(1,))
    """
    if len(coeffs) != m + n:
        raise WeightParseError(f"expected {m + n} coordinates, got {len(coeffs)}")
    values = [Fraction(c) for c in coeffs]
    left_shifted = [values[i] + (m - 1 - i) for i in range(m)]
    right_shifted = [-(values[m + j] + (1 - (j + 1))) for j in range(n)]
    for v in left_shifted + right_shifted:
        if v.denominator != 1:
            raise WeightParseError(
                f"non-integral weight: shifted coordinate {v} is not an integer"
            )
    return SuperWeight(
        tuple(int(v) for v in left_shifted), tuple(int(v) for v in right_shifted)
    )


@dataclass(frozen=True, slots=True)
class CentralCharacter:
    """The label-count invariant separating central characters.

    Stores the nonzero values of ``x -> (left count of x) - (right count
    of x)`` as sorted pairs.  Two integral weights have equal central
    character exactly when these maps agree.
    """

    items: tuple[tuple[int, int], ...]

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.items)

    def __str__(self) -> str:
        inner = ", ".join(f"{x}: {c}" for x, c in self.items)
        return "{" + inner + "}"


def _count_sides(weight: SuperWeight) -> tuple[dict[int, int], dict[int, int]]:
    left: dict[int, int] = {}
    right: dict[int, int] = {}
    for a in weight.left:
        left[a] = left.get(a, 0) + 1
    for b in weight.right:
        right[b] = right.get(b, 0) + 1
    return left, right


def central_character(weight: SuperWeight) -> CentralCharacter:
    """The invariant x -> left count minus right count, zeros dropped.

    >>> central_character(SuperWeight((1, 0), (0, 1))).counts
    {}
    >>> central_character(SuperWeight((2, 1, 0), ())).counts
    {0: 1, 1: 1, 2: 1}
    """
    left, right = _count_sides(weight)
    counts = {}
    for x in set(left) | set(right):
        c = left.get(x, 0) - right.get(x, 0)
        if c:
            counts[x] = c
    return CentralCharacter(tuple(sorted(counts.items())))


def atypicality_degree(weight: SuperWeight) -> int:
    """Number of disjoint equal-label pairs across the separator.

    >>> atypicality_degree(SuperWeight.parse("7,6,2,3,6,1,3,1|4,3,4,5"))
    1
    >>> atypicality_degree(SuperWeight.parse("1,0|0,1"))
    2
    """
    left, right = _count_sides(weight)
    return sum(min(c, right.get(x, 0)) for x, c in left.items())


def is_typical(weight: SuperWeight) -> bool:
    return atypicality_degree(weight) == 0


def is_dominant(weight: SuperWeight) -> bool:
    """Left labels weakly decreasing and right labels weakly increasing."""
    left, right = weight.left, weight.right
    return all(left[i] >= left[i + 1] for i in range(len(left) - 1)) and all(
        right[j] <= right[j + 1] for j in range(len(right) - 1)
    )


def is_antidominant(weight: SuperWeight) -> bool:
    """Left labels weakly increasing and right labels weakly decreasing."""
    left, right = weight.left, weight.right
    return all(left[i] <= left[i + 1] for i in range(len(left) - 1)) and all(
        right[j] >= right[j + 1] for j in range(len(right) - 1)
    )


def is_regular(weight: SuperWeight) -> bool:
    """No repeated label within the left part and none within the right part."""
    return len(set(weight.left)) == weight.m and len(set(weight.right)) == weight.n


def orbit_equal(a: SuperWeight, b: SuperWeight) -> bool:
    """Same orbit of the product of symmetric groups acting per side.

    >>> orbit_equal(SuperWeight.parse("2,0,1|0"), SuperWeight.parse("0,2,1|0"))
    True
    """
    if (a.m, a.n) != (b.m, b.n):
        raise ValueError("weights live in different Z^(m|n)")
    return sorted(a.left) == sorted(b.left) and sorted(a.right) == sorted(b.right)


def dominant_representative(weight: SuperWeight) -> SuperWeight:
    return SuperWeight(
        tuple(sorted(weight.left, reverse=True)), tuple(sorted(weight.right))
    )


def antidominant_representative(weight: SuperWeight) -> SuperWeight:
    return SuperWeight(
        tuple(sorted(weight.left)), tuple(sorted(weight.right, reverse=True))
    )
