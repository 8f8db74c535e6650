"""Partition combinatorics: shapes, nodes, residues, cores and blocks.

Partitions are tuples of weakly decreasing positive integers; () is the empty
partition.  Nodes are 1-based (row, column) pairs.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]
Node = tuple[int, int]


def validate_partition(lam) -> Partition:
    """Return lam as a canonical tuple, rejecting anything non-partition."""
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def degree(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff lam is dominated by mu.

    Requires equal degree; partitions of different degree are incomparable
    and yield False.
    """
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def removable_nodes(lam: Partition) -> list[Node]:
    """Nodes whose removal leaves a partition, top row first."""
    out = []
    for i, part in enumerate(lam):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if part > below:
            out.append((i + 1, part))
    return out


def addable_nodes(lam: Partition) -> list[Node]:
    """Nodes whose addition gives a partition, top row first."""
    out = []
    for i in range(len(lam) + 1):
        part = lam[i] if i < len(lam) else 0
        above = lam[i - 1] if i >= 1 else None
        if i == 0 or part < above:
            out.append((i + 1, part + 1))
    return out


def remove_node(lam: Partition, node: Node) -> Partition:
    i, j = node
    if (i, j) not in removable_nodes(lam):
        raise ValueError(f"{node} is not removable from {lam}")
    out = list(lam)
    out[i - 1] -= 1
    return tuple(x for x in out if x > 0)


def residue(node: Node, p: int) -> int:
    """(col - row) mod p."""
    i, j = node
    return (j - i) % p


def residue_content(lam: Partition, p: int) -> tuple[int, ...]:
    """Multiset of node residues as a length-p vector of counts."""
    counts = [0] * p
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            counts[(j - i) % p] += 1
    return tuple(counts)


def first_column_hooks(lam: Partition) -> list[int]:
    """Beta-numbers: hook lengths of the first-column nodes."""
    height = len(lam)
    return [lam[i] + height - (i + 1) for i in range(height)]


def p_core(lam: Partition, p: int) -> Partition:
    """p-core via the abacus on first-column hook lengths.

    Slide each beta-number down by p while the slot below is free; the
    surviving configuration, re-read as a partition, is independent of the
    removal order.
    """
    betas = set(first_column_hooks(lam))
    changed = True
    while changed:
        changed = False
        for b in sorted(betas):
            if b >= p and (b - p) not in betas:
                betas.remove(b)
                betas.add(b - p)
                changed = True
    ordered = sorted(betas, reverse=True)
    out = tuple(b - (len(ordered) - (k + 1)) for k, b in enumerate(ordered))
    return tuple(x for x in out if x > 0)


def same_block(lam: Partition, mu: Partition, p: int) -> bool:
    """Nakayama: same block iff same p-core (equal degree required)."""
    if sum(lam) != sum(mu):
        raise ValueError(
            f"blocks are only defined within one group algebra: "
            f"degree {sum(lam)} != {sum(mu)}"
        )
    return p_core(lam, p) == p_core(mu, p)


def is_p_regular(lam: Partition, p: int) -> bool:
    """No part repeated p or more times."""
    run = 1
    for i in range(1, len(lam)):
        run = run + 1 if lam[i] == lam[i - 1] else 1
        if run >= p:
            return False
    return True


def is_p_restricted(lam: Partition, p: int) -> bool:
    """Successive differences (and the last part) all < p."""
    if not lam:
        return True
    for i in range(len(lam) - 1):
        if lam[i] - lam[i + 1] >= p:
            return False
    return lam[-1] < p


@lru_cache(maxsize=None)
def char0_dim(lam: Partition) -> int:
    """Ordinary (characteristic 0) dimension by the hook-length formula."""
    lam = validate_partition(lam)
    if not lam:
        raise ValueError("dimension of the empty partition is not defined here")
    cols = conjugate(lam)
    hooks = 1
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            hooks *= part - j + cols[j - 1] - i + 1
    return math.factorial(sum(lam)) // hooks


def normal_nodes(lam: Partition, p: int) -> list[Node]:
    """Removable nodes R whose same-residue addable nodes above R can be
    matched injectively to same-residue removable nodes strictly between.

    Implemented as the usual signature scan upward from R: +1 on a
    same-residue removable, -1 on a same-residue addable; R is normal iff
    the running count never goes negative.
    """
    rem = removable_nodes(lam)
    add = addable_nodes(lam)
    out = []
    for node in rem:
        alpha = residue(node, p)
        rem_rows = {r[0] for r in rem if residue(r, p) == alpha}
        add_rows = {a[0] for a in add if residue(a, p) == alpha}
        count = 0
        ok = True
        for row in range(node[0] - 1, 0, -1):
            if row in rem_rows:
                count += 1
            if row in add_rows:
                count -= 1
                if count < 0:
                    ok = False
                    break
        if ok:
            out.append(node)
    return out


def partitions_of(n: int, max_part: int | None = None,
                  max_length: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest-part-first lexicographic descending."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    if max_length is not None and max_length <= 0:
        return
    for first in range(top, 0, -1):
        tail_len = None if max_length is None else max_length - 1
        for rest in partitions_of(n - first, max_part=first, max_length=tail_len):
            yield (first,) + rest


def parse_partition(text: str) -> Partition:
    """Parse "4,3,1" or exponent shorthand "4^2,1"; "0" or "" is empty."""
    text = text.strip()
    if text in ("", "0", "()"):
        return ()
    parts: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if "^" in item:
            base, _, exp = item.partition("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(item))
    return validate_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(x) for x in lam) if lam else "0"
