"""Permutations, Robinson-Schensted insertion, and descent-set invariants.

Permutations are tuples in one-line notation over ``1..m`` (``w[k-1]`` is
the image of k).  The descent set ``tau(w)`` lives in positions ``1..m-1``.
For the stratification machinery a simple root can also be addressed by its
gamma-index ``i``, related to the position by ``position = m - i``.

The Robinson-Schensted map sends a permutation to a pair of standard
tableaux (A, B) of one shape: A is built by row insertion of the one-line
word and B records the growth.  Equalities of primitive-ideal labels in a
fixed orbit are controlled by the A-tableau of the "rank word" computed
here (the longest-coset-representative reading of a label tuple).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Literal, Sequence

__all__ = [
    "Permutation",
    "StandardTableau",
    "is_permutation",
    "identity",
    "longest_element",
    "inverse",
    "inversions",
    "all_permutations",
    "robinson_schensted",
    "tau",
    "tau_of_weight",
    "strict_tau",
    "rank_word",
    "gamma_index_to_position",
    "position_to_gamma_index",
    "involution_count",
]

Permutation = tuple[int, ...]


def is_permutation(word: Sequence[int]) -> bool:
    """True iff `word` is a bijection of 1..len(word) in one-line notation.

    >>> is_permutation((2, 1, 3)), is_permutation((1, 1, 2))
    (True, False)
    """
    return sorted(word) == list(range(1, len(word) + 1))


def identity(m: int) -> Permutation:
    return tuple(range(1, m + 1))


def longest_element(m: int) -> Permutation:
    return tuple(range(m, 0, -1))


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for k, wk in enumerate(w):
        out[wk - 1] = k + 1
    return tuple(out)


def inversions(w: Permutation) -> int:
    """Coxeter length of w.

    >>> inversions((3, 1, 2))
    2
    """
    return sum(
        1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j]
    )


def all_permutations(m: int) -> Iterator[Permutation]:
    return _itertools_permutations(range(1, m + 1))


@dataclass(frozen=True, slots=True)
class StandardTableau:
    """Rows strictly increasing, columns strictly increasing, entries 1..m."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = [x for row in rows for x in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries are not exactly 1..m: {rows}")
        for r in rows:
            if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
                raise ValueError(f"row not strictly increasing: {r}")
        for i in range(len(rows) - 1):
            if len(rows[i + 1]) > len(rows[i]):
                raise ValueError("row lengths must weakly decrease")
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise ValueError("column not strictly increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row_of(self, entry: int) -> int:
        """1-based row index of an entry."""
        for i, row in enumerate(self.rows):
            if entry in row:
                return i + 1
        raise ValueError(f"{entry} not in tableau")

    def transpose(self) -> "StandardTableau":
        cols = [
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(len(self.rows[0]))
        ] if self.rows else []
        return StandardTableau(tuple(cols))

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


def robinson_schensted(w: Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Row-insert the one-line word of w; return (insertion A, recording B).

    >>> a, b = robinson_schensted((2, 3, 1))
    >>> str(a), str(b)
    ('1,3/2', '1,2/3')
    >>> all(robinson_schensted(v)[0] == robinson_schensted(v)[1]
    ...     for v in [(1, 2), (2, 1)])
    True
    """
    insertion: list[list[int]] = []
    recording: list[list[int]] = []
    for step, value in enumerate(w, start=1):
        x = value
        for r, row in enumerate(insertion):
            bump = next((c for c, y in enumerate(row) if y > x), None)
            if bump is None:
                row.append(x)
                recording[r].append(step)
                break
            row[bump], x = x, row[bump]
        else:
            insertion.append([x])
            recording.append([step])
    return (
        StandardTableau(tuple(map(tuple, insertion))),
        StandardTableau(tuple(map(tuple, recording))),
    )


def tau(w: Permutation) -> frozenset[int]:
    """Descent positions {p in 1..m-1 : w(p) > w(p+1)}.

    >>> sorted(tau((3, 1, 2)))
    [1]
    """
    return frozenset(p for p in range(1, len(w)) if w[p - 1] > w[p])


def rank_word(labels: Sequence[int]) -> Permutation:
    """Ranks of the labels from largest to smallest, ties broken backwards.

    Equal labels receive consecutive ranks assigned right-to-left, which
    realizes the longest permutation sorting the tuple to its dominant
    (weakly decreasing) rearrangement.  The word is the inverse of that
    longest permutation.

    >>> rank_word((1, 3, 0, 2))
    (3, 1, 4, 2)
    >>> rank_word((1, 1, 0))
    (2, 1, 3)
    """
    order = sorted(range(len(labels)), key=lambda i: (-labels[i], -i))
    ranks = [0] * len(labels)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def tau_of_weight(
    labels: Sequence[int], orientation: Literal["left", "right"] = "left"
) -> frozenset[int]:
    """Descent set of the longest permutation whose inverse sorts `labels`.

    With the right orientation (dominant = weakly increasing) the tuple is
    read reversed and positions are mirrored.

    >>> sorted(tau_of_weight((0, 1, 2)))
    [1, 2]
    >>> sorted(tau_of_weight((1, 1, 0)))
    [1]
    >>> sorted(tau_of_weight((1, 3, 0, 2)))
    [2]
    """
    if orientation == "right":
        rev = tuple(reversed(labels))
        n = len(labels)
        return frozenset(n - p for p in tau_of_weight(rev, "left"))
    return tau(inverse(rank_word(labels)))


def strict_tau(
    labels: Sequence[int], orientation: Literal["left", "right"] = "left"
) -> frozenset[int]:
    """Positions where the simple reflection acts finitely on the simple.

    Strict comparisons only: a repeated adjacent label means the weight
    sits on that wall and the reflection fixes it.  At singular weights
    this is smaller than `tau_of_weight`, and it is the invariant actually
    preserved by the translation maps on ideals.

    >>> sorted(strict_tau((5, 4, 3, 4)))
    [1, 2]
    >>> sorted(strict_tau((4, 3, 4, 5), "right"))
    [2, 3]
    """
    if orientation == "right":
        return frozenset(
            p for p in range(1, len(labels)) if labels[p - 1] < labels[p]
        )
    return frozenset(p for p in range(1, len(labels)) if labels[p - 1] > labels[p])


def gamma_index_to_position(i: int, m: int) -> int:
    """The simple root addressed by gamma-index i sits at position m - i."""
    return m - i


def position_to_gamma_index(p: int, m: int) -> int:
    return m - p


def involution_count(m: int) -> int:
    """Number of involutions in the symmetric group on m letters.

    >>> [involution_count(m) for m in range(6)]
    [1, 1, 2, 4, 10, 26]
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    prev, cur = 1, 1
    for k in range(2, m + 1):
        prev, cur = cur, cur + (k - 1) * prev
    return cur if m >= 1 else 1
