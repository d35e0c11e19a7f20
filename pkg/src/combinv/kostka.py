"""Semistandard tableaux, special rim-hook tableaux, and their local pairing.

The A-family counts semistandard Young tableaux (Kostka numbers on a
rectangular P(n) x C(n) index set); the B-family counts signed special
rim-hook tableaux, of which at most one exists per (shape, content).
"""

from __future__ import annotations

from fractions import Fraction

from .core import (
    Cell,
    Composition,
    Filling,
    Partition,
    diagram,
    partitions,
    shape_contains,
    skew_sign,
)
from .framework import LocalSystem, Pairing


# ---------------------------------------------------------------------------
# Cell-set predicates
# ---------------------------------------------------------------------------

def is_horizontal_strip(cells: frozenset[Cell]) -> bool:
    """All cells in distinct columns."""
    cols = [j for _, j in cells]
    return len(cols) == len(set(cols))


def is_rim_hook(cells: frozenset[Cell]) -> bool:
    """Traversable by unit right/up steps from some starting cell.

    Each step changes the antidiagonal col-row by exactly +1, so the cells
    must occupy consecutive distinct antidiagonals with adjacent neighbors.
    """
    if not cells:
        return False
    by_diag = {j - i: (i, j) for i, j in cells}
    if len(by_diag) != len(cells):
        return False
    diags = sorted(by_diag)
    if diags[-1] - diags[0] != len(cells) - 1:
        return False
    for d1, d2 in zip(diags, diags[1:]):
        (i1, j1), (i2, j2) = by_diag[d1], by_diag[d2]
        if (i2, j2) not in ((i1, j1 + 1), (i1 - 1, j1)):
            return False
    return True


def is_special_rim_hook(cells: frozenset[Cell]) -> bool:
    """A rim hook whose starting (lowest) cell lies in column 1."""
    if not is_rim_hook(cells):
        return False
    start = min(cells, key=lambda c: c[1] - c[0])
    return start[1] == 1


def hook_sign(cells: frozenset[Cell]) -> int:
    """(-1)^(rows occupied - 1)."""
    rows = {i for i, _ in cells}
    return -1 if (len(rows) - 1) % 2 else 1


# ---------------------------------------------------------------------------
# Semistandard Young tableaux
# ---------------------------------------------------------------------------

def is_ssyt(filling: Filling, lam: Partition, beta: Composition) -> bool:
    """Shape lam, content beta, rows weakly increasing, columns strict."""
    if filling.shape != tuple(lam):
        return False
    try:
        if filling.content() != tuple(beta):
            return False
    except ValueError:
        return False
    for row in filling.rows:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(filling.rows, filling.rows[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return True


def strip_removals(lam: Partition, length: int) -> list[Partition]:
    """Partitions gamma inside lam with lam/gamma a horizontal strip of `length`."""
    target = sum(lam) - length
    if length < 1 or target < 0:
        return []
    out: list[Partition] = []

    def rec(i: int, remaining: int, acc: tuple[int, ...]):
        if i == len(lam):
            if remaining == 0:
                out.append(tuple(p for p in acc if p))
            return
        low = lam[i + 1] if i + 1 < len(lam) else 0
        hi = min(lam[i], remaining)
        for g in range(hi, low - 1, -1):
            rec(i + 1, remaining - g, acc + (g,))

    rec(0, target, ())
    return out


def is_strip_removal(lam: Partition, gamma: Partition) -> bool:
    """lam/gamma is a (possibly empty-checked) horizontal strip."""
    if not shape_contains(lam, gamma):
        return False
    padded = gamma + (0,) * (len(lam) - len(gamma))
    return all(padded[i] >= lam[i + 1] for i in range(len(lam) - 1))


def enumerate_ssyt(lam: Partition, beta: Composition) -> list[Filling]:
    """All semistandard tableaux of the given shape and content.

    Built by peeling the top-label horizontal strip, which mirrors the
    recursion the Kostka matrices satisfy; output is sorted row-major for
    reproducibility.
    """
    if sum(lam) != sum(beta):
        raise ValueError("size mismatch")

    def rec(shape: Partition, content: Composition) -> list[Filling]:
        if not content:
            return [Filling(())] if not shape else []
        out = []
        for gamma in strip_removals(shape, content[-1]):
            cells = diagram(shape) - diagram(gamma)
            for sub in rec(gamma, content[:-1]):
                out.append(sub.with_cells(cells, len(content)))
        return out

    return sorted(rec(tuple(lam), tuple(beta)), key=lambda f: f.rows)


# ---------------------------------------------------------------------------
# Special rim-hook removals and tableaux
# ---------------------------------------------------------------------------

def srh_removals(mu: Partition) -> list[tuple[Partition, frozenset[Cell], int]]:
    """The removable special rim-hooks of dg(mu), one per row index.

    The hook ending in row i leaves (mu_1..mu_{i-1}, mu_{i+1}-1, ..., mu_s-1)
    and occupies rows i..s, so its sign is (-1)^(s-i).  Hook sizes strictly
    decrease with i, so sizes identify hooks uniquely.
    """
    s = len(mu)
    out = []
    for i in range(1, s + 1):
        tail = tuple(mu[j] - 1 for j in range(i, s) if mu[j] > 1)
        gamma = mu[: i - 1] + tail
        cells = diagram(mu) - diagram(gamma)
        sign = -1 if (s - i) % 2 else 1
        out.append((gamma, cells, sign))
    return out


def srht_find(mu: Partition, beta: Composition) -> tuple[Filling, int] | None:
    """The unique special rim-hook tableau of shape mu, content beta, if any.

    Greedy removal from the last part of beta backwards; uniqueness of each
    removal makes backtracking unnecessary.
    """
    if sum(mu) != sum(beta):
        raise ValueError("size mismatch")
    labels: dict[Cell, int] = {}
    sign = 1
    shape = tuple(mu)
    for k in range(len(beta), 0, -1):
        found = None
        for gamma, cells, hsign in srh_removals(shape):
            if len(cells) == beta[k - 1]:
                found = (gamma, cells, hsign)
                break
        if found is None:
            return None
        gamma, cells, hsign = found
        for c in cells:
            labels[c] = k
        sign *= hsign
        shape = gamma
    if shape:
        return None
    return Filling.from_cells(labels), sign


def is_srht(filling: Filling, mu: Partition, beta: Composition) -> bool:
    """Each label class a special rim-hook of the right size; column 1 sorted."""
    if filling.shape != tuple(mu):
        return False
    try:
        if filling.content() != tuple(beta):
            return False
    except ValueError:
        return False
    for k in range(1, len(beta) + 1):
        if not is_special_rim_hook(filling.cells_of(k)):
            return False
    col1 = [row[0] for row in filling.rows]
    return all(a <= b for a, b in zip(col1, col1[1:]))


def srht_sign(filling: Filling) -> int:
    sign = 1
    for k in range(1, filling.max_label() + 1):
        sign *= hook_sign(filling.cells_of(k))
    return sign


# ---------------------------------------------------------------------------
# The local system and pairing
# ---------------------------------------------------------------------------

def kostka_system() -> LocalSystem:
    """Horizontal-strip removals against signed special rim-hook removals."""

    def succ_b(mu, length):
        return [g for g, cells, _ in srh_removals(mu) if len(cells) == length]

    return LocalSystem(
        name="kostka",
        shapes=partitions,
        succ_a=strip_removals,
        succ_b=succ_b,
        weight_a=lambda lam, gamma: Fraction(1),
        weight_b=lambda mu, delta: Fraction(skew_sign(mu, delta)),
    )


def kostka_pair(lam: Partition, mu: Partition) -> Pairing:
    """Resolve the strip-vs-special-rim-hook cancellation at (lam, mu).

    Off the diagonal the shared intermediates are either none or exactly two
    consecutive special-rim-hook removals of mu carrying opposite signs; on
    the diagonal the sole intermediate deletes the last part.
    """
    if sum(lam) != sum(mu) or not lam:
        raise ValueError("shapes must have equal positive size")
    if lam == mu:
        return Pairing("diagonal", ((lam[:-1], 1),))
    removals = srh_removals(mu)
    first = None
    for idx, (gamma, cells, sign) in enumerate(removals):
        if is_strip_removal(lam, gamma):
            first = idx
            break
    if first is None:
        return Pairing("empty", ())
    i = first + 1  # 1-based row index of the hook
    s = len(mu)
    corner = (i, mu[i - 1])  # rightmost cell of row i
    if corner in diagram(lam):
        if i == s:
            raise AssertionError("unreachable: matched removal in the last row")
        partner = i + 1
    else:
        if i == 1:
            raise AssertionError("unreachable: unmatched removal in the first row")
        partner = i - 1
    g1, _, s1 = removals[i - 1]
    g2, _, s2 = removals[partner - 1]
    if not is_strip_removal(lam, g2) or s1 == s2:
        raise AssertionError("local pairing failed structural check")
    return Pairing("matched", ((g1, s1), (g2, s2)))
