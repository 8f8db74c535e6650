"""Standard tableaux, skew shapes, Littlewood-Richardson sections and
branching data.

Section lists are ordered lexicographically descending, which refines
dominance-descending (a strict dominance raises the first differing part).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (
    Partition,
    Node,
    parse_partition,
    removable_nodes,
    remove_node,
    residue,
    validate_partition,
)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        outer = validate_partition(self.outer)
        inner = validate_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if len(inner) > len(outer) or any(
            inner[i] > outer[i] for i in range(len(inner))
        ):
            raise ValueError(f"inner shape {inner} does not fit inside {outer}")

    @property
    def degree(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[Node]:
        """Skew cells in row-reading order (1-based)."""
        out = []
        for i, part in enumerate(self.outer, start=1):
            lo = self.inner[i - 1] if i - 1 < len(self.inner) else 0
            out.extend((i, j) for j in range(lo + 1, part + 1))
        return out

    def __str__(self) -> str:
        from .partitions import format_partition

        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def parse_skew(text: str) -> SkewShape:
    """Parse "5,5,1/4,1"; a plain partition means empty inner shape."""
    outer, _, inner = text.partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner) if inner else ())


Tableau = tuple[tuple[int, ...], ...]


def standard_tableaux(lam: Partition) -> list[Tableau]:
    """All standard Young tableaux of a straight shape, as row tuples."""
    lam = validate_partition(lam)
    n = sum(lam)
    if n == 0:
        return [()]
    out: list[Tableau] = []
    rows = [[0] * part for part in lam]
    filled = [0] * len(lam)

    def place(k: int) -> None:
        if k > n:
            out.append(tuple(tuple(r[: filled[i]]) for i, r in enumerate(rows)))
            return
        for i in range(len(lam)):
            if filled[i] < lam[i] and (i == 0 or filled[i - 1] > filled[i]):
                rows[i][filled[i]] = k
                filled[i] += 1
                place(k + 1)
                filled[i] -= 1

    place(1)
    return out


@lru_cache(maxsize=None)
def skew_standard_count(shape: SkewShape) -> int:
    """Number of standard fillings of a skew shape."""
    n = shape.degree
    if n == 0:
        return 1
    inner_full = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    total = 0
    for i, part in enumerate(shape.outer, start=1):
        below = shape.outer[i] if i < len(shape.outer) else 0
        if part > below and part > inner_full[i - 1]:
            outer2 = list(shape.outer)
            outer2[i - 1] -= 1
            trimmed = tuple(x for x in outer2 if x > 0)
            total += skew_standard_count(SkewShape(trimmed, shape.inner))
    return total


def lr_tableaux(shape: SkewShape) -> list[tuple[int, ...]]:
    """Littlewood-Richardson fillings of a skew shape, returned as content
    vectors (one per filling).

    A filling is column-strict with weakly increasing rows whose reverse
    reading word is a lattice word; its content is then automatically a
    partition.
    """
    cells: list[Node] = []
    for i, part in enumerate(shape.outer, start=1):
        lo = shape.inner[i - 1] if i - 1 < len(shape.inner) else 0
        cells.extend((i, j) for j in range(part, lo, -1))
    n = shape.degree
    if n == 0:
        return [()]
    grid: dict[Node, int] = {}
    counts = [0] * (n + 1)
    results: list[tuple[int, ...]] = []

    def fill(idx: int) -> None:
        if idx == len(cells):
            content = []
            for v in range(1, n + 1):
                if counts[v] == 0:
                    break
                content.append(counts[v])
            results.append(tuple(content))
            return
        i, j = cells[idx]
        right = grid.get((i, j + 1))
        above = grid.get((i - 1, j), 0)
        hi = right if right is not None else n
        for v in range(above + 1, hi + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            grid[(i, j)] = v
            counts[v] += 1
            fill(idx + 1)
            counts[v] -= 1
        grid.pop((i, j), None)

    fill(0)
    return results


def section_sort(parts: list[Partition]) -> list[Partition]:
    """Lexicographic descending; refines dominance-descending."""
    return sorted(parts, reverse=True)


def lr_sections(shape: SkewShape) -> list[tuple[Partition, int]]:
    """Specht filtration sections of a skew module: (content, multiplicity)
    pairs ordered descending."""
    mults: dict[Partition, int] = {}
    for content in lr_tableaux(shape):
        mults[content] = mults.get(content, 0) + 1
    return [(nu, mults[nu]) for nu in section_sort(list(mults))]


def branching_sections(lam: Partition) -> list[Partition]:
    """Sections of the restriction to the next symmetric group down,
    ordered descending (the top section first)."""
    return section_sort([remove_node(lam, node) for node in removable_nodes(lam)])


def branching_splits(lam: Partition, p: int) -> bool:
    """The restriction is a direct sum iff removable residues are distinct."""
    res = [residue(node, p) for node in removable_nodes(lam)]
    return len(res) == len(set(res))


def young_filtration_sections(
    lam: Partition, m: int
) -> list[tuple[Partition, SkewShape]]:
    """Sections (mu, lam/mu) over mu of degree m inside lam, descending."""
    lam = validate_partition(lam)
    if not 0 <= m <= sum(lam):
        raise ValueError(f"subgroup degree {m} out of range for {lam}")
    mus = _subpartitions_of_degree(lam, m)
    return [(mu, SkewShape(lam, mu)) for mu in section_sort(mus)]


def _subpartitions_of_degree(lam: Partition, m: int) -> list[Partition]:
    out: list[Partition] = []

    def build(row: int, remaining: int, prev: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        if row >= len(lam):
            return
        hi = min(lam[row], prev, remaining)
        for part in range(hi, 0, -1):
            acc.append(part)
            build(row + 1, remaining - part, part, acc)
            acc.pop()

    build(0, m, m, [])
    return out


def principal_block_sections(
    lam: Partition, p: int
) -> dict[Partition, list[tuple[Partition, int]]]:
    """Sections of the principal-block projection filtration: the inner
    shapes (p), (p-1,1), (p-2,1,1) paired with the LR sections of lam/inner.

    Only shapes with at most three rows are supported; inner shapes that do
    not fit contribute empty section lists.
    """
    lam = validate_partition(lam)
    if p < 3:
        raise ValueError("principal-block filtration requires p >= 3")
    if len(lam) > 3:
        raise ValueError(
            f"principal-block sections unsupported for more than 3 rows: {lam}"
        )
    if sum(lam) <= p:
        raise ValueError(f"degree must exceed p; got {lam} at p={p}")
    inners: list[Partition] = [(p,), (p - 1, 1), (p - 2, 1, 1)]
    out: dict[Partition, list[tuple[Partition, int]]] = {}
    for inner in inners:
        try:
            shape = SkewShape(lam, inner)
        except ValueError:
            out[inner] = []
            continue
        out[inner] = lr_sections(shape)
    return out
