"""Rim-hook tableaux, the abacus bead model, and cycle statistics.

The A-family here is the signed rim-hook tableau count (the irreducible
symmetric-group character values on a rectangular index set); the B-family
rescales each row by the reciprocal of the partial-sum product of its key.
Rim-hook removal/addition is mirrored on abaci as bead jumps, which is how
the off-diagonal cancellation is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import (
    Cell,
    Composition,
    Filling,
    Partition,
    column_length,
    diagram,
    partial_sum_product,
    partitions,
    shape_of_cells,
    skew_sign,
)
from .framework import IndexedMatrix, LocalSystem, Pairing, build_B
from .kostka import hook_sign, is_rim_hook


# ---------------------------------------------------------------------------
# Border rim-hooks
# ---------------------------------------------------------------------------

def cell_at(shape: tuple[int, ...], number: int) -> Cell:
    """The `number`-th cell of dg(shape) in row-major reading order."""
    if number < 1 or number > sum(shape):
        raise ValueError("cell number out of range")
    for i, row in enumerate(shape, start=1):
        if number <= row:
            return (i, number)
        number -= row
    raise AssertionError


def reading_number(shape: tuple[int, ...], cell: Cell) -> int:
    i, j = cell
    return sum(shape[: i - 1]) + j


def border_hook(
    shape: Partition, cell: Cell
) -> tuple[Partition, frozenset[Cell], int]:
    """The removable border rim-hook attached to a cell of the diagram.

    The hook runs along the border from the bottom of the cell's column to
    the end of the cell's row; its size is the cell's hook length and the
    map cell <-> removable border hook is a bijection.
    """
    i, j = cell
    if i < 1 or i > len(shape) or j < 1 or j > shape[i - 1]:
        raise ValueError("cell not in diagram")
    bottom = column_length(shape, j)
    new = list(shape)
    for r in range(i, bottom):
        new[r - 1] = shape[r] - 1
    new[bottom - 1] = j - 1
    gamma = tuple(p for p in new if p)
    cells = diagram(shape) - diagram(gamma)
    sign = -1 if (bottom - i) % 2 else 1
    return gamma, cells, sign


def border_hook_by_number(
    shape: Partition, number: int
) -> tuple[Partition, frozenset[Cell], int]:
    return border_hook(shape, cell_at(shape, number))


def hook_removals(lam: Partition) -> list[tuple[Partition, frozenset[Cell], int]]:
    """All removable border rim-hooks in reading-order of their cells."""
    return [border_hook_by_number(lam, c) for c in range(1, sum(lam) + 1)]


def border_number_of_hook(shape: Partition, cells: frozenset[Cell]) -> int:
    """Inverse of `border_hook`: the reading number indexing a border hook."""
    if not cells:
        raise ValueError("empty hook")
    hand_row = min(i for i, _ in cells)
    foot_row = max(i for i, _ in cells)
    foot_col = min(j for i, j in cells if i == foot_row)
    number = reading_number(shape, (hand_row, foot_col))
    _, expected, _ = border_hook(shape, (hand_row, foot_col))
    if expected != cells:
        raise ValueError("cells are not a removable border rim-hook")
    return number


# ---------------------------------------------------------------------------
# Rim-hook tableaux
# ---------------------------------------------------------------------------

def enumerate_rht(lam: Partition, beta: Composition) -> list[tuple[Filling, int]]:
    """All rim-hook tableaux of shape lam, content beta, with signs.

    Recurses on removal of the top-label hook, visiting removable hooks in
    border-number order so the output order is deterministic.
    """
    if sum(lam) != sum(beta):
        raise ValueError("size mismatch")

    def rec(shape: Partition, k: int) -> list[tuple[Filling, int]]:
        if k == 0:
            return [(Filling(()), 1)] if not shape else []
        length = beta[k - 1]
        out = []
        for gamma, cells, sign in hook_removals(shape):
            if len(cells) != length:
                continue
            for sub, subsign in rec(gamma, k - 1):
                out.append((sub.with_cells(cells, k), subsign * sign))
        return out

    return rec(tuple(lam), len(beta))


def is_rht(filling: Filling, lam: Partition, beta: Composition) -> bool:
    """Label classes are rim-hooks of the right sizes and every label prefix
    of the filling is a partition diagram."""
    if filling.shape != tuple(lam):
        return False
    try:
        if filling.content() != tuple(beta):
            return False
    except ValueError:
        return False
    cells: set[Cell] = set()
    for k in range(1, len(beta) + 1):
        hook = filling.cells_of(k)
        if not is_rim_hook(hook):
            return False
        cells |= hook
        try:
            prefix = shape_of_cells(frozenset(cells))
        except ValueError:
            return False
        if not all(a >= b for a, b in zip(prefix, prefix[1:])):
            return False
    return True


def rht_sign(filling: Filling) -> int:
    sign = 1
    for k in range(1, filling.max_label() + 1):
        sign *= hook_sign(filling.cells_of(k))
    return sign


def rimhook_system() -> LocalSystem:
    """Signed rim-hook removal on both sides, B rescaled by 1/|shape|."""

    def succ(shape, length):
        return [g for g, cells, _ in hook_removals(shape) if len(cells) == length]

    return LocalSystem(
        name="rimhook",
        shapes=partitions,
        succ_a=succ,
        succ_b=succ,
        weight_a=lambda lam, gamma: Fraction(skew_sign(lam, gamma)),
        weight_b=lambda mu, delta: Fraction(skew_sign(mu, delta), sum(mu)),
    )


# ---------------------------------------------------------------------------
# Abacus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Abacus:
    """Binary bead/gap word with finite support, positions 0-based.

    Beads (1s) read left to right give the partition rows bottom-up: a bead
    preceded by g gaps contributes a part of size g.
    """

    beads: int
    word: tuple[int, ...]

    def __post_init__(self):
        if sum(self.word) != self.beads:
            raise ValueError("bead count disagrees with word")
        if self.word and self.word[-1] == 0:
            raise ValueError("word must not carry trailing gaps")

    def bit(self, position: int) -> int:
        if position < 0:
            raise ValueError("negative position")
        return self.word[position] if position < len(self.word) else 0

    def partition(self) -> Partition:
        parts = []
        gaps = 0
        for b in self.word:
            if b:
                if gaps:
                    parts.append(gaps)
            else:
                gaps += 1
        return tuple(sorted(parts, reverse=True))

    def word_string(self, length: int | None = None) -> str:
        bits = list(self.word)
        if length is not None:
            bits += [0] * (length - len(bits))
        return "".join(str(b) for b in bits)

    def to_json(self) -> dict:
        return {"beads": self.beads, "word": self.word_string()}

    @classmethod
    def from_json(cls, data: dict) -> "Abacus":
        word = tuple(int(ch) for ch in data["word"])
        while word and word[-1] == 0:
            word = word[:-1]
        return cls(int(data["beads"]), word)


def abacus_from_partition(lam: Partition, beads: int) -> Abacus:
    """The bead word whose gaps trace the border path of dg(lam)."""
    if beads < len(lam):
        raise ValueError("need at least one bead per row")
    bits = [1] * (beads - len(lam))
    prev = 0
    for part in reversed(lam):
        bits.extend([0] * (part - prev))
        bits.append(1)
        prev = part
    return Abacus(beads, tuple(bits))


def abacus_move_bead(abacus: Abacus, source: int, target: int) -> tuple[Abacus, int]:
    """Jump one bead; the sign is (-1)^(beads strictly between the endpoints).

    target < source is rim-hook removal of size source-target; target > source
    is addition (the caller must have enough leading beads for additions).
    """
    if abacus.bit(source) != 1:
        raise ValueError("no bead at source position")
    if abacus.bit(target) != 0:
        raise ValueError("target position is occupied")
    lo, hi = min(source, target), max(source, target)
    between = sum(abacus.bit(p) for p in range(lo + 1, hi))
    bits = list(abacus.word) + [0] * (max(source, target) + 1 - len(abacus.word))
    bits[source], bits[target] = 0, 1
    while bits and bits[-1] == 0:
        bits.pop()
    return Abacus(abacus.beads, tuple(bits)), (-1 if between % 2 else 1)


# ---------------------------------------------------------------------------
# Local pairing via bead jumps
# ---------------------------------------------------------------------------

def rimhook_pair(lam: Partition, mu: Partition) -> Pairing:
    """Resolve the rim-hook cancellation at (lam, mu) on the abacus.

    For lam == mu, the shared intermediates are the |lam| border-hook
    removals, each contributing +1 (a squared sign).  For lam != mu, the two
    abaci must differ in exactly two beads and two gaps; the two down/up bead
    pairings then give the two oppositely-signed intermediates, listed with
    the diagram-intersection one first.
    """
    n = sum(lam)
    if n != sum(mu) or n == 0:
        raise ValueError("shapes must have equal positive size")
    if lam == mu:
        return Pairing(
            "diagonal", tuple((gamma, 1) for gamma, _, _ in hook_removals(lam))
        )
    beads = max(len(lam), len(mu))
    source = abacus_from_partition(lam, beads)
    dest = abacus_from_partition(mu, beads)
    horizon = max(len(source.word), len(dest.word))
    lost = [p for p in range(horizon) if source.bit(p) == 1 and dest.bit(p) == 0]
    gained = [p for p in range(horizon) if source.bit(p) == 0 and dest.bit(p) == 1]
    if len(lost) != 2 or len(gained) != 2:
        return Pairing("empty", ())
    members = []
    for assignment in ((0, 1), (1, 0)):
        moves = sorted(
            zip(lost, (gained[assignment[0]], gained[assignment[1]])),
            key=lambda m: m[1] - m[0],
        )
        down, up = moves
        if down[0] <= down[1] or up[0] >= up[1]:
            raise AssertionError("bead moves must split into one down, one up")
        mid, sign_down = abacus_move_bead(source, *down)
        final, sign_up = abacus_move_bead(mid, *up)
        if final.partition() != mu:
            raise AssertionError("bead pairing did not reach the target shape")
        members.append((mid.partition(), sign_down * sign_up))
    if members[0][1] == members[1][1]:
        raise AssertionError("paired intermediates must have opposite signs")
    meet = tuple(
        p
        for p in (min(a, b) for a, b in zip(lam + (0,) * len(mu), mu + (0,) * len(lam)))
        if p
    )
    members.sort(key=lambda m: m[0] != meet)
    if members[0][0] != meet:
        raise AssertionError("neither intermediate is the diagram intersection")
    return Pairing("matched", tuple(members))


# ---------------------------------------------------------------------------
# Permutations and cycle statistics
# ---------------------------------------------------------------------------

class Permutation:
    """A bijection on an arbitrary finite set of integers."""

    __slots__ = ("ground", "mapping")

    def __init__(self, mapping: dict[int, int]):
        self.ground = tuple(sorted(mapping))
        if sorted(mapping.values()) != list(self.ground):
            raise ValueError("mapping is not a bijection on its ground set")
        self.mapping = dict(mapping)

    @classmethod
    def from_cycles(
        cls, cycles: list[tuple[int, ...]], ground: tuple[int, ...] | None = None
    ) -> "Permutation":
        mapping: dict[int, int] = {}
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if a in mapping:
                    raise ValueError("cycles are not disjoint")
                mapping[a] = b
        if ground is not None:
            for x in ground:
                mapping.setdefault(x, x)
        return cls(mapping)

    @classmethod
    def identity(cls, ground: tuple[int, ...]) -> "Permutation":
        return cls({x: x for x in ground})

    def canonical_cycles(self) -> tuple[tuple[int, ...], ...]:
        """Each cycle starts at its minimum; minima decrease left to right."""
        seen: set[int] = set()
        cycles = []
        for start in self.ground:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.mapping[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.mapping[nxt]
            cycles.append(tuple(cyc))
        cycles.sort(key=lambda c: -c[0])
        return tuple(cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.mapping.items())))

    def __repr__(self) -> str:
        return "".join(
            "(%s)" % ",".join(str(x) for x in cyc) for cyc in self.canonical_cycles()
        )

    def to_json(self) -> dict:
        return {
            "ground": list(self.ground),
            "cycles": [list(c) for c in self.canonical_cycles()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Permutation":
        return cls.from_cycles(
            [tuple(c) for c in data["cycles"]], tuple(data["ground"])
        )


def cyc_comp(sigma: Permutation) -> Composition:
    """Cycle lengths read left to right in canonical cycle notation."""
    return tuple(len(c) for c in sigma.canonical_cycles())


def cyc_part(sigma: Permutation) -> Partition:
    return tuple(sorted(cyc_comp(sigma), reverse=True))


def count_by_cyc_comp(n: int, beta: Composition) -> int:
    """Number of permutations of an n-set whose canonical cycle lengths are beta."""
    if sum(beta) != n:
        raise ValueError("size mismatch")
    z = partial_sum_product(beta)
    count, rem = divmod(factorial(n), z)
    if rem:
        raise AssertionError("partial-sum product must divide n!")
    return count


def factorial_scaled_b(n: int) -> IndexedMatrix:
    """n! times the B matrix; integral because each row's denominator is the
    partial-sum product of its key, which divides n!."""
    matrix = build_B(rimhook_system(), n)
    scale = factorial(n)
    scaled = [[e * scale for e in row] for row in matrix.entries]
    if any(e.denominator != 1 for row in scaled for e in row):
        raise AssertionError("scaled entries must be integers")
    return IndexedMatrix(matrix.row_keys, matrix.col_keys, scaled)
