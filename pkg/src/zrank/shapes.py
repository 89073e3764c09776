"""Partitions, skew shapes, cell geometry, and small-shape enumeration.

Conventions: matrix coordinates, 1-indexed. Cell (i, j) sits in row i from
the top and column j from the left; its content is j - i. A skew shape is a
pair of partitions mu <= lam; mu is stored zero-padded to the length of lam.
The empty shape is legal everywhere.
"""

from __future__ import annotations

from typing import Iterable, Iterator

Cell = tuple[int, int]


def _as_partition(parts, *, allow_zero=False) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ValueError(f"parts not weakly decreasing: {parts}")
    if parts and parts[-1] < (0 if allow_zero else 1):
        raise ValueError(f"parts must be positive: {parts}")
    return parts


def content(cell: Cell) -> int:
    """Diagonal index of a cell: column minus row."""
    return cell[1] - cell[0]


class SkewShape:
    """Skew partition lam/mu with mu zero-padded to len(lam)."""

    __slots__ = ("lam", "mu")

    def __init__(self, lam, mu=()):
        lam = _as_partition(lam)
        mu = _as_partition(mu, allow_zero=True)
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        if len(mu) > len(lam):
            raise ValueError(f"mu has more parts than lam: {mu} vs {lam}")
        mu = mu + (0,) * (len(lam) - len(mu))
        for a, b in zip(mu, lam):
            if a > b:
                raise ValueError(f"mu not contained in lam: {mu} vs {lam}")
        self.lam = lam
        self.mu = mu

    # -- basic geometry ------------------------------------------------

    @property
    def n_rows(self) -> int:
        return len(self.lam)

    @property
    def width(self) -> int:
        return self.lam[0] if self.lam else 0

    @property
    def n_cells(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def is_empty(self) -> bool:
        return self.n_cells == 0

    def cells(self) -> list[Cell]:
        """All cells, row-major order."""
        out = []
        for i, (l, m) in enumerate(zip(self.lam, self.mu), start=1):
            out.extend((i, j) for j in range(m + 1, l + 1))
        return out

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.lam) and self.mu[i - 1] < j <= self.lam[i - 1]

    def min_content(self) -> int:
        """Smallest content among cells; undefined on the empty shape."""
        if self.is_empty():
            raise ValueError("empty shape has no contents")
        return min(m + 1 - (i + 1) for i, (l, m) in enumerate(zip(self.lam, self.mu)) if l > m)

    def max_content(self) -> int:
        if self.is_empty():
            raise ValueError("empty shape has no contents")
        return max(l - (i + 1) for i, (l, m) in enumerate(zip(self.lam, self.mu)) if l > m)

    def components(self) -> list[tuple["SkewShape", int, int]]:
        """Edgewise-connected components as (tight shape, row offset, col offset).

        A tight component has every row nonempty and its last row starting in
        column 1. Global cell = (tight row + row_offset, tight col + col_offset).
        """
        return [
            (SkewShape(lam_c, mu_c), roff, coff)
            for lam_c, mu_c, roff, coff in split_components(self.lam, self.mu)
        ]

    # -- presentation ----------------------------------------------------

    def literal(self) -> str:
        mu = self.mu
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        text = ",".join(str(p) for p in self.lam)
        if mu:
            text += "/" + ",".join(str(p) for p in mu)
        return text

    def __repr__(self):
        return f"SkewShape({self.lam}, {self.mu})"

    def __eq__(self, other):
        return isinstance(other, SkewShape) and self.lam == other.lam and self.mu == other.mu

    def __hash__(self):
        return hash((self.lam, self.mu))


def split_components(lam, mu) -> list[tuple[list[int], int, int]]:
    """Connected-row runs of a padded (lam, mu) pair.

    Returns (row indices, unused, column offset) triples; row indices are
    0-based into lam. Rows i-1 and i share a column iff mu[i-1] < lam[i];
    empty rows separate runs.
    """
    runs = []
    run: list[int] = []
    for i in range(len(lam)):
        if lam[i] == mu[i]:
            if run:
                runs.append(run)
                run = []
            continue
        if run and mu[i - 1] >= lam[i]:
            runs.append(run)
            run = []
        run.append(i)
    if run:
        runs.append(run)
    return [(r, 0, mu[r[-1]]) for r in runs]


def parse_shape(text: str) -> SkewShape:
    """Parse a shape literal like "7,6,6,3/3,1"; omitted mu means empty."""
    if not text or any(c.isspace() for c in text):
        raise ValueError(f"malformed shape literal: {text!r}")
    head, sep, tail = text.partition("/")
    try:
        lam = tuple(int(p) for p in head.split(","))
        mu = tuple(int(p) for p in tail.split(",")) if sep else ()
    except ValueError:
        raise ValueError(f"malformed shape literal: {text!r}") from None
    if any(p < 1 for p in lam) or any(p < 1 for p in mu):
        raise ValueError(f"malformed shape literal: {text!r}")
    return SkewShape(lam, mu)


def diagonals(shape: SkewShape) -> dict[int, set[Cell]]:
    """Cells grouped by content; empty shape gives an empty map."""
    out: dict[int, set[Cell]] = {}
    for cell in shape.cells():
        out.setdefault(content(cell), set()).add(cell)
    return dict(sorted(out.items()))


def _adjacent(cell: Cell) -> tuple[Cell, Cell, Cell, Cell]:
    i, j = cell
    return (i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)


def is_connected(shape_or_cells) -> bool:
    """Edge connectivity of the cell set; corner contact does not connect.

    Empty sets count as connected.
    """
    cells = set(shape_or_cells.cells()) if isinstance(shape_or_cells, SkewShape) else set(shape_or_cells)
    if not cells:
        return True
    seen = set()
    stack = [next(iter(cells))]
    while stack:
        c = stack.pop()
        if c in seen:
            continue
        seen.add(c)
        stack.extend(nb for nb in _adjacent(c) if nb in cells and nb not in seen)
    return len(seen) == len(cells)


def is_border_strip(shape_or_cells) -> bool:
    """Border strip test.

    For a SkewShape: nonempty, edgewise connected, and free of 2x2 blocks.
    For a bare cell set (a decomposition block): exactly one cell per content,
    contents contiguous, and cells of consecutive contents edge-adjacent.
    """
    if isinstance(shape_or_cells, SkewShape):
        cells = set(shape_or_cells.cells())
        if not cells:
            return False
        for (i, j) in cells:
            if (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells:
                return False
        return is_connected(cells)
    cells = set(shape_or_cells)
    if not cells:
        return False
    by_content = {}
    for c in cells:
        t = content(c)
        if t in by_content:
            return False
        by_content[t] = c
    ts = sorted(by_content)
    if ts[-1] - ts[0] + 1 != len(ts):
        return False
    for t in ts[:-1]:
        (i, j), (i2, j2) = by_content[t], by_content[t + 1]
        if (i2, j2) not in ((i - 1, j), (i, j + 1)):
            return False
    return True


def iter_shape_tuples(max_cells: int, max_width=None, max_length=None) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Raw (lam, padded mu) pairs for every canonical shape, deterministic order.

    Canonical: lam has no zero parts, mu_1 < lam_1, mu contained in lam,
    and 1 <= |lam| - |mu| <= max_cells. Width and length caps default to
    max_cells; translation duplicates (empty rows, leading empty columns)
    are permitted.
    """
    if max_cells < 1:
        raise ValueError("max_cells must be >= 1")
    width = max_width if max_width is not None else max_cells
    length = max_length if max_length is not None else max_cells

    def lams(prefix, maxpart, rows_left):
        if prefix:
            yield prefix
        if rows_left == 0:
            return
        for p in range(min(maxpart, width), 0, -1):
            yield from lams(prefix + (p,), p, rows_left - 1)

    for lam in lams((), width, length):
        ell = len(lam)
        mus = []

        def rec(i, prev, deficit, acc):
            if i == ell:
                if deficit >= 1:
                    mus.append(acc)
                return
            hi = min(lam[i], prev) if i else lam[0] - 1
            for m in range(hi, -1, -1):
                d = deficit + (lam[i] - m)
                if d > max_cells:
                    break
                rec(i + 1, m, d, acc + (m,))

        rec(0, 10 ** 9, 0, ())
        for mu in mus:
            yield lam, mu


def enumerate_shapes(max_cells: int, max_width=None, max_length=None) -> Iterator[SkewShape]:
    """Canonical skew shapes with 1..max_cells cells (see iter_shape_tuples)."""
    for lam, mu in iter_shape_tuples(max_cells, max_width, max_length):
        yield SkewShape(lam, mu)


def shape_from_cells(cells: Iterable[Cell]) -> SkewShape:
    """Re-anchor a cell set that forms rows of contiguous intervals as a SkewShape."""
    cells = sorted(cells)
    if not cells:
        return SkewShape((), ())
    rows: dict[int, list[int]] = {}
    for i, j in cells:
        rows.setdefault(i, []).append(j)
    r0, r1 = min(rows), max(rows)
    c0 = min(min(js) for js in rows.values())
    lam, mu = [], []
    for i in range(r0, r1 + 1):
        js = rows.get(i)
        if js is None:
            raise ValueError("cell set has an empty interior row")
        if js[-1] - js[0] + 1 != len(js):
            raise ValueError("cell set has a gap inside a row")
        lam.append(js[-1] - c0 + 1)
        mu.append(js[0] - c0)
    return SkewShape(tuple(lam), tuple(mu))
