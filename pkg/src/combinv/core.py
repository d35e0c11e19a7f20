"""Partitions, compositions, diagrams, fillings, and shared scalar invariants.

Shapes are plain tuples of positive integers; all arithmetic is exact
(Python ints and fractions.Fraction).  Every function here is pure, so the
whole module is safe for concurrent use.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Cell = tuple[int, int]


# ---------------------------------------------------------------------------
# Enumeration with canonical orders
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple[Composition, ...]:
    if n == 0:
        return ((),)
    out: list[Composition] = []
    for first in range(n, 0, -1):
        out.extend((first,) + rest for rest in _compositions(n - first))
    return tuple(out)


def compositions(n: int) -> list[Composition]:
    """All compositions of n, largest first part first, then recursively.

    The order is descending lexicographic; |result| = 2^(n-1) for n >= 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_compositions(n))


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in _partitions_bounded(n - first, first))
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions_bounded(n, n)) if n else [()]


def is_partition(seq: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(seq, seq[1:])) and all(a >= 1 for a in seq)


def sort_comp(alpha: Composition) -> Partition:
    """Weakly decreasing rearrangement of a composition."""
    return tuple(sorted(alpha, reverse=True))


def truncate(beta: Composition) -> tuple[Composition, int]:
    """Split off the last part: (2,3,2) -> ((2,3), 2)."""
    if not beta:
        raise ValueError("empty composition has no last part")
    return beta[:-1], beta[-1]


# ---------------------------------------------------------------------------
# Scalar invariants
# ---------------------------------------------------------------------------

def partial_sum_product(beta: Composition) -> int:
    """Product of the partial sums b1, b1+b2, ..., b1+...+bs (1 for ())."""
    out, acc = 1, 0
    for part in beta:
        acc += part
        out *= acc
    return out


def centralizer_order(lam: Partition) -> int:
    """prod_k m_k! * k^m_k over the part multiplicities m_k of lam.

    This is the number of permutations commuting with a fixed permutation of
    cycle type lam; n!/centralizer_order(lam) is the conjugacy class size.
    """
    out = 1
    for part, mult in Counter(lam).items():
        out *= factorial(mult) * part**mult
    return out


def last_part_sum(mu: Partition) -> int:
    """Sum of the last part over all distinct rearrangements of mu.

    Equals (|mu|/len(mu)) * multinomial(len(mu); multiplicities), which is
    always an integer.
    """
    if not mu:
        raise ValueError("undefined for the empty partition")
    ell = len(mu)
    ways = factorial(ell)
    for mult in Counter(mu).values():
        ways //= factorial(mult)
    total = sum(mu) * ways
    if total % ell:
        raise AssertionError("last_part_sum is not integral")
    return total // ell


# ---------------------------------------------------------------------------
# Multiset operations on partitions
# ---------------------------------------------------------------------------

def multiplicity(lam: Partition, i: int) -> int:
    """Number of parts of lam equal to i."""
    return lam.count(i)


def _from_counter(counts: Counter) -> Partition:
    parts: list[int] = []
    for value, mult in counts.items():
        if mult > 0:
            parts.extend([value] * mult)
    return tuple(sorted(parts, reverse=True))


def multiset_union(lam: Partition, mu: Partition) -> Partition:
    return _from_counter(Counter(lam) + Counter(mu))


def multiset_intersect(lam: Partition, mu: Partition) -> Partition:
    return _from_counter(Counter(lam) & Counter(mu))


def multiset_diff(lam: Partition, mu: Partition) -> Partition:
    """Multiset difference; multiplicities clamp at zero."""
    return _from_counter(Counter(lam) - Counter(mu))


def multiset_contains(lam: Partition, mu: Partition) -> bool:
    """True when every part of lam occurs in mu at least as often."""
    counts = Counter(mu)
    return all(counts[v] >= m for v, m in Counter(lam).items())


# ---------------------------------------------------------------------------
# Diagrams
# ---------------------------------------------------------------------------

def diagram(shape: tuple[int, ...]) -> frozenset[Cell]:
    """Cells (row, col), 1-based, of a left-justified diagram."""
    return frozenset(
        (i, j) for i, row in enumerate(shape, start=1) for j in range(1, row + 1)
    )


def shape_of_cells(cells: frozenset[Cell]) -> tuple[int, ...]:
    """Recover the row-length tuple of a left-justified cell set."""
    rows: dict[int, set[int]] = {}
    for i, j in cells:
        rows.setdefault(i, set()).add(j)
    if not rows:
        return ()
    if set(rows) != set(range(1, max(rows) + 1)):
        raise ValueError("cells skip a row")
    shape = []
    for i in range(1, max(rows) + 1):
        cols = rows[i]
        if cols != set(range(1, len(cols) + 1)):
            raise ValueError("row %d is not left-justified" % i)
        shape.append(len(cols))
    return tuple(shape)


def shape_contains(outer: Partition, inner: Partition) -> bool:
    """dg(inner) subset of dg(outer), comparing row lengths."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def column_length(shape: Partition, col: int) -> int:
    """Number of rows of the diagram having at least `col` cells."""
    return sum(1 for row in shape if row >= col)


def skew_sign(outer: tuple[int, ...], inner: tuple[int, ...]) -> int:
    """(-1)^(rows occupied by dg(outer)\\dg(inner) minus 1)."""
    padded = inner + (0,) * (len(outer) - len(inner))
    rows = sum(1 for a, b in zip(outer, padded) if a > b)
    if rows == 0:
        raise ValueError("empty skew shape has no sign")
    return -1 if (rows - 1) % 2 else 1


# ---------------------------------------------------------------------------
# Fillings
# ---------------------------------------------------------------------------

class Filling:
    """A left-justified diagram with one positive integer label per cell.

    Immutable; specializations (semistandard, rim-hook, brick-style fillings)
    are expressed as validator predicates in the application modules.
    """

    __slots__ = ("rows", "shape")

    def __init__(self, rows: tuple[tuple[int, ...], ...]):
        self.rows = tuple(tuple(r) for r in rows)
        if any(len(r) == 0 for r in self.rows):
            raise ValueError("empty row in filling")
        if any(v < 1 for r in self.rows for v in r):
            raise ValueError("labels must be positive")
        self.shape = tuple(len(r) for r in self.rows)

    @classmethod
    def from_cells(cls, labels: dict[Cell, int]) -> "Filling":
        shape = shape_of_cells(frozenset(labels))
        return cls(
            tuple(
                tuple(labels[(i, j)] for j in range(1, row + 1))
                for i, row in enumerate(shape, start=1)
            )
        )

    def cell_labels(self) -> dict[Cell, int]:
        return {
            (i, j): v
            for i, row in enumerate(self.rows, start=1)
            for j, v in enumerate(row, start=1)
        }

    def content(self) -> Composition:
        """Occurrence counts of 1..max; every label up to the max must occur."""
        counts = Counter(v for row in self.rows for v in row)
        if not counts:
            return ()
        top = max(counts)
        if sorted(counts) != list(range(1, top + 1)):
            raise ValueError("labels are not contiguous from 1")
        return tuple(counts[k] for k in range(1, top + 1))

    def max_label(self) -> int:
        return max((v for row in self.rows for v in row), default=0)

    def cells_of(self, label: int) -> frozenset[Cell]:
        return frozenset(
            (i, j)
            for i, row in enumerate(self.rows, start=1)
            for j, v in enumerate(row, start=1)
            if v == label
        )

    def without_label(self, label: int) -> "Filling":
        kept = {c: v for c, v in self.cell_labels().items() if v != label}
        return Filling.from_cells(kept)

    def with_cells(self, cells: frozenset[Cell], label: int) -> "Filling":
        labels = self.cell_labels()
        for c in cells:
            if c in labels:
                raise ValueError("cell %r already filled" % (c,))
            labels[c] = label
        return Filling.from_cells(labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Filling) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "Filling(%r)" % (self.rows,)

    def pretty(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "Filling":
        filling = cls(tuple(tuple(r) for r in data["rows"]))
        if "shape" in data and tuple(data["shape"]) != filling.shape:
            raise ValueError("shape field disagrees with rows")
        return filling


EMPTY_FILLING = Filling(())


def row_filling(shape: Partition) -> Filling:
    """The filling of dg(shape) whose row i is filled with the label i."""
    return Filling(tuple((i,) * row for i, row in enumerate(shape, start=1)))


# ---------------------------------------------------------------------------
# JSON helpers for scalars and shapes
# ---------------------------------------------------------------------------

def rational_to_json(q: Fraction) -> list[int]:
    return [q.numerator, q.denominator]


def rational_from_json(pair) -> Fraction:
    num, den = pair
    if den <= 0:
        raise ValueError("denominator must be positive")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """p/q with the denominator omitted when it is 1."""
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)
