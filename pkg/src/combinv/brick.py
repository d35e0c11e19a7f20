"""Ordered brick tabloids and weighted brick-tabloid matrices.

The A-family counts tilings of a partition diagram by labeled horizontal
bricks (one label per brick, labels weakly increasing along rows); the
B-family weighs row tilings by their last-brick lengths and divides by the
partial-sum product of the row profile.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

from .core import (
    Composition,
    Filling,
    Partition,
    compositions,
    last_part_sum,
    multiset_diff,
    multiset_intersect,
    multiset_union,
    multiplicity,
    partial_sum_product,
    partitions,
    sort_comp,
)
from .framework import IndexedMatrix, LocalSystem


# ---------------------------------------------------------------------------
# Ordered brick tabloids
# ---------------------------------------------------------------------------

def enumerate_obt(lam: Partition, beta: Composition) -> list[Filling]:
    """All fillings of dg(lam) where label i occupies beta_i cells of a single
    row and labels weakly increase along each row.

    Equivalently: assignments of bricks 1..len(beta) to rows such that each
    row is exactly tiled; the filling is then forced.
    """
    if sum(lam) != sum(beta):
        raise ValueError("size mismatch")
    assignments: list[tuple[int, ...]] = []

    def rec(k: int, remaining: tuple[int, ...], acc: tuple[int, ...]):
        if k == len(beta):
            if all(r == 0 for r in remaining):
                assignments.append(acc)
            return
        for row in range(len(lam)):
            if remaining[row] >= beta[k]:
                nxt = remaining[:row] + (remaining[row] - beta[k],) + remaining[row + 1 :]
                rec(k + 1, nxt, acc + (row,))

    rec(0, tuple(lam), ())
    out = []
    for acc in assignments:
        rows: list[list[int]] = [[] for _ in lam]
        for k, row in enumerate(acc):
            rows[row].extend([k + 1] * beta[k])
        out.append(Filling(tuple(tuple(r) for r in rows)))
    return out


def is_obt(filling: Filling, lam: Partition, beta: Composition) -> bool:
    if filling.shape != tuple(lam):
        return False
    try:
        if filling.content() != tuple(beta):
            return False
    except ValueError:
        return False
    for k in range(1, len(beta) + 1):
        if len({i for i, _ in filling.cells_of(k)}) != 1:
            return False
    return all(
        all(a <= b for a, b in zip(row, row[1:])) for row in filling.rows
    )


# ---------------------------------------------------------------------------
# Brick tabloids of composition shape and partition type
# ---------------------------------------------------------------------------

def _row_fillings(target: int, avail: Counter) -> list[Composition]:
    """Ordered part sequences from `avail` summing to `target`, largest-first
    recursively (canonical composition order)."""
    if target == 0:
        return [()]
    out = []
    for part in sorted(avail, reverse=True):
        if part > target or avail[part] == 0:
            continue
        avail[part] -= 1
        out.extend((part,) + rest for rest in _row_fillings(target - part, avail))
        avail[part] += 1
    return out


def brick_tabloids(beta: Composition, mu: Partition) -> list[tuple[Composition, ...]]:
    """Row tilings of dg(beta) by bricks forming the multiset mu.

    Each tabloid is reported as its tuple of per-row compositions; the
    concatenated contents run through the rearrangements of mu compatible
    with the row lengths, in canonical composition order.
    """
    if sum(beta) != sum(mu):
        raise ValueError("size mismatch")
    out: list[tuple[Composition, ...]] = []

    def rec(i: int, avail: Counter, acc: tuple[Composition, ...]):
        if i == len(beta):
            out.append(acc)
            return
        for row in _row_fillings(beta[i], avail):
            for p in row:
                avail[p] -= 1
            rec(i + 1, avail, acc + (row,))
            for p in row:
                avail[p] += 1

    rec(0, Counter(mu), ())
    return out


def tabloid_weight(rows: tuple[Composition, ...]) -> int:
    """Product of the lengths of the last brick in each row."""
    weight = 1
    for row in rows:
        weight *= row[-1]
    return weight


def w_of(beta: Composition, mu: Partition) -> int:
    """Total last-brick weight over all brick tabloids of shape beta, type mu."""
    return sum(tabloid_weight(rows) for rows in brick_tabloids(beta, mu))


# ---------------------------------------------------------------------------
# The local system
# ---------------------------------------------------------------------------

def part_decrements(lam: Partition, length: int) -> list[Partition]:
    """Partitions from replacing one part i >= length of lam by i - length."""
    out = []
    for i in sorted(set(lam), reverse=True):
        if i < length:
            continue
        rest = multiset_diff(lam, (i,))
        out.append(multiset_union(rest, (i - length,)) if i > length else rest)
    return out


def sub_multisets_of_size(mu: Partition, removed: int) -> list[Partition]:
    """Sub-multisets of mu obtained by deleting parts summing to `removed`."""
    distinct = sorted(set(mu), reverse=True)
    out: list[Partition] = []

    def rec(idx: int, left: int, acc: tuple[int, ...]):
        if left == 0:
            kept = multiset_diff(mu, acc)
            out.append(kept)
            return
        if idx == len(distinct):
            return
        value = distinct[idx]
        max_take = min(multiplicity(mu, value), left // value)
        for take in range(max_take, -1, -1):
            rec(idx + 1, left - take * value, acc + (value,) * take)

    rec(0, removed, ())
    return out


def obt_system() -> LocalSystem:
    """Largest-brick removal with multiplicity weights against part deletion
    with last-part-sum weights."""

    def weight_a(lam, gamma):
        removed = multiset_diff(lam, gamma)
        if len(removed) != 1:
            raise ValueError("successor does not decrement a single part")
        return Fraction(multiplicity(lam, removed[0]))

    def weight_b(mu, delta):
        eps = multiset_diff(mu, delta)
        sign = -1 if (len(mu) - len(delta) - 1) % 2 else 1
        return Fraction(sign * last_part_sum(eps), sum(mu))

    return LocalSystem(
        name="brick",
        shapes=partitions,
        succ_a=part_decrements,
        succ_b=sub_multisets_of_size,
        weight_a=weight_a,
        weight_b=weight_b,
    )


def brick_B_closed(n: int) -> IndexedMatrix:
    """Closed-form B: entry (beta, mu) = (-1)^(len(mu)-len(beta)) w_{beta,mu} / Z_beta."""
    rows = compositions(n)
    cols = partitions(n)
    entries = []
    for beta in rows:
        z = partial_sum_product(beta)
        row = []
        for mu in cols:
            sign = -1 if (len(mu) - len(beta)) % 2 else 1
            row.append(Fraction(sign * w_of(beta, mu), z))
        entries.append(row)
    return IndexedMatrix(rows, cols, entries)


# ---------------------------------------------------------------------------
# The brick-removal bijection behind the A recursion
# ---------------------------------------------------------------------------

def obt_split(tabloid: Filling) -> tuple[int, Filling]:
    """Remove the largest-labeled brick, witnessing the multiplicity weight.

    The brick sits at the end of the k-th highest row of its length i; the
    truncated row is re-inserted as the highest row of length i - L.
    Returns (k, smaller tabloid); `obt_unsplit` is the two-sided inverse.
    """
    label = tabloid.max_label()
    if label == 0:
        raise ValueError("empty tabloid has no brick to remove")
    rows = list(tabloid.rows)
    row_idx = next(i for i, row in enumerate(rows) if label in row)
    length = len(rows[row_idx])
    brick = sum(1 for v in rows[row_idx] if v == label)
    if any(v == label for v in rows[row_idx][: length - brick]):
        raise ValueError("largest brick is not at the end of its row")
    k = sum(1 for row in rows[: row_idx + 1] if len(row) == length)
    truncated = rows[row_idx][: length - brick]
    del rows[row_idx]
    if truncated:
        insert_at = next(
            (i for i, row in enumerate(rows) if len(row) <= len(truncated)),
            len(rows),
        )
        rows.insert(insert_at, truncated)
    return k, Filling(tuple(rows))


def obt_unsplit(lam: Partition, k: int, tabloid: Filling) -> Filling:
    """Re-attach a brick of the next label so the result has shape lam."""
    gamma = tabloid.shape
    removed = multiset_diff(lam, sort_comp(gamma))
    if len(removed) != 1:
        raise ValueError("target shape does not decrement a single part")
    i = removed[0]
    if not 1 <= k <= multiplicity(lam, i):
        raise ValueError("row index exceeds the multiplicity weight")
    brick = sum(lam) - sum(gamma)
    label = tabloid.max_label() + 1
    rows = list(tabloid.rows)
    if i > brick:
        take = next(idx for idx, row in enumerate(rows) if len(row) == i - brick)
        grown = rows.pop(take) + (label,) * brick
    else:
        grown = (label,) * brick
    block = next((idx for idx, row in enumerate(rows) if len(row) <= i), len(rows))
    rows.insert(block + k - 1, grown)
    return Filling(tuple(rows))


# ---------------------------------------------------------------------------
# Marked-tiling bijection behind the last-part-sum closed form
# ---------------------------------------------------------------------------

def marked_brick_bijection(
    alpha: Composition, marked_cell: int
) -> tuple[Composition, int, int]:
    """Swap the brick holding the marked cell with the last brick.

    Input: a row tiling alpha (a rearrangement of its sorted type) and a
    marked cell position in 1..n.  Output: the swapped tiling, the index of
    the now-marked brick (the brick that used to be last), and the new
    position of the marked cell, which lands in the rightmost brick.
    """
    n = sum(alpha)
    if not 1 <= marked_cell <= n:
        raise ValueError("marked cell out of range")
    start = 0
    brick = None
    for idx, length in enumerate(alpha, start=1):
        if marked_cell <= start + length:
            brick = idx
            offset = marked_cell - start  # 1-based within its brick
            break
        start += length
    swapped = list(alpha)
    swapped[brick - 1], swapped[-1] = swapped[-1], swapped[brick - 1]
    new_cell = n - alpha[brick - 1] + offset
    return tuple(swapped), brick, new_cell


def marked_brick_bijection_inv(
    alpha: Composition, marked_brick: int, marked_cell: int
) -> tuple[Composition, int]:
    """Inverse: swap the marked brick back with the last brick."""
    n = sum(alpha)
    if not 1 <= marked_brick <= len(alpha):
        raise ValueError("marked brick out of range")
    if not n - alpha[-1] + 1 <= marked_cell <= n:
        raise ValueError("marked cell must lie in the last brick")
    offset = marked_cell - (n - alpha[-1])
    swapped = list(alpha)
    swapped[marked_brick - 1], swapped[-1] = swapped[-1], swapped[marked_brick - 1]
    new_cell = sum(swapped[: marked_brick - 1]) + offset
    return tuple(swapped), new_cell


# ---------------------------------------------------------------------------
# Local evaluation
# ---------------------------------------------------------------------------

def brick_local_g(
    lam: Partition, mu: Partition
) -> tuple[list[tuple[Partition, Fraction]], Fraction]:
    """Shared intermediates with their terms, and the total.

    Off the diagonal, the multiset difference lam minus mu must be a single
    part i; the intermediates are lam with that part removed entirely or
    shrunk to any smaller part of mu minus lam, and their terms telescope
    through the last-part-sum recursion to zero.
    """
    n = sum(lam)
    if n != sum(mu) or n == 0:
        raise ValueError("shapes must have equal positive size")

    def term(gamma: Partition) -> Fraction:
        removed = multiset_diff(lam, gamma)
        eps = multiset_diff(mu, gamma)
        sign = -1 if (len(mu) - len(gamma) - 1) % 2 else 1
        return Fraction(
            multiplicity(lam, removed[0]) * sign * last_part_sum(eps), n
        )

    if lam == mu:
        gammas = [multiset_diff(lam, (i,)) for i in sorted(set(lam), reverse=True)]
        terms = [(gamma, term(gamma)) for gamma in gammas]
        return terms, sum(t for _, t in terms)
    extra = multiset_diff(lam, mu)
    if len(extra) != 1:
        return [], Fraction(0)
    i = extra[0]
    rho = multiset_diff(mu, lam)
    meet = multiset_intersect(lam, mu)
    gammas = [meet]
    gammas.extend(
        multiset_union(meet, (j,)) for j in sorted(set(rho), reverse=True) if j < i
    )
    terms = [(gamma, term(gamma)) for gamma in gammas]
    return terms, sum(t for _, t in terms)
