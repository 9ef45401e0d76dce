"""Container diagrams, the coinversion code and its inverse, and the D-sets.

A container diagram for ``(n, lam)`` is the Young diagram of the conjugate
``lam'`` (row r has ``lam'_r`` boxes, column c has ``lam_c`` boxes) holding
the numbers 1..n. A number sits either in a box or floats above a column.
Columns are decreasing from top to bottom and boxes fill from the bottom, so
empty boxes are always at the top of a column and a column with an empty box
carries no floating numbers. Empty boxes behave as if they held infinity.

Rows and columns are 1-based throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .partitions import ShapeError, conjugate, partition, remove_corner, size, valid_corners

INF = math.inf


class DiagramError(ValueError):
    """A container diagram that violates the container conditions."""


@dataclass(frozen=True)
class ContainerDiagram:
    """Immutable container diagram.

    ``rows`` is the conjugate partition (row lengths), ``boxes`` the sorted
    ``(row, col, value)`` triples of filled boxes and ``floats`` the sorted
    ``(value, col)`` pairs of floating numbers.
    """

    n: int
    rows: tuple
    boxes: tuple
    floats: tuple

    @classmethod
    def build(cls, n, lam, boxes, floats, validate=True) -> "ContainerDiagram":
        rows = conjugate(lam)
        d = cls(
            n,
            rows,
            tuple(sorted((int(r), int(c), int(v)) for r, c, v in boxes)),
            tuple(sorted((int(v), int(c)) for v, c in floats)),
        )
        if validate:
            d.validate()
        return d

    @property
    def lam(self) -> tuple:
        return conjugate(self.rows)

    @property
    def ncols(self) -> int:
        return self.rows[0] if self.rows else 0

    def col_height(self, c: int) -> int:
        return sum(1 for r in self.rows if r >= c)

    def cells(self):
        for r, w in enumerate(self.rows, start=1):
            for c in range(1, w + 1):
                yield r, c

    def grid(self) -> dict:
        """(row, col) -> value, with INF for empty boxes."""
        return dict(self._grid)

    @cached_property
    def _grid(self) -> dict:
        g = {cell: INF for cell in self.cells()}
        for r, c, v in self.boxes:
            g[r, c] = v
        return g

    def num_empty(self) -> int:
        return size(self.rows) - len(self.boxes)

    def empty_cells(self) -> list:
        g = self.grid()
        return sorted(cell for cell, v in g.items() if v == INF)

    def position(self) -> dict:
        """value -> ("box", row, col) or ("float", col)."""
        pos = {v: ("box", r, c) for r, c, v in self.boxes}
        pos.update({v: ("float", c) for v, c in self.floats})
        return pos

    def validate(self):
        if self.__dict__.get("_valid"):
            return True
        if tuple(partition(self.rows)) != tuple(self.rows):
            raise DiagramError(f"row lengths {self.rows} do not form a partition")
        seen = [v for _, _, v in self.boxes] + [v for v, _ in self.floats]
        if sorted(seen) != list(range(1, self.n + 1)):
            raise DiagramError(f"numbers {sorted(seen)} are not exactly 1..{self.n}")
        cells = set(self.cells())
        placed = [(r, c) for r, c, _ in self.boxes]
        if len(set(placed)) != len(placed):
            raise DiagramError("a box holds more than one number")
        if any(cell not in cells for cell in placed):
            raise DiagramError("a number is placed in a box outside the diagram")
        if any(c < 1 for _, c in self.floats):
            raise DiagramError("floating column must be >= 1")
        g = self._grid
        stacks: dict = {}
        for v, fc in self.floats:
            stacks.setdefault(fc, []).append(v)
        heights = conjugate(self.rows)
        for c in range(1, self.ncols + 1):
            column = [g[r, c] for r in range(1, heights[c - 1] + 1)]
            above = sorted(stacks.get(c, ()), reverse=True)
            if above and column and column[0] == INF:
                raise DiagramError(f"column {c} has numbers above an empty box")
            # top-to-bottom sequence must be strictly decreasing; INF only at the top
            seq = above + column
            for a, b in zip(seq, seq[1:]):
                if not a > b and not (a == INF and b == INF):
                    raise DiagramError(f"column {c} is not decreasing top to bottom")
        self.__dict__["_valid"] = True
        return True

    def to_json(self) -> dict:
        return {
            "shape": list(self.rows),
            "boxes": [list(b) for b in self.boxes],
            "floats": [list(f) for f in self.floats],
        }

    @classmethod
    def from_json(cls, data: dict, n: int | None = None) -> "ContainerDiagram":
        rows = partition(data["shape"])
        boxes = [tuple(b) for b in data.get("boxes", [])]
        floats = [tuple(f) for f in data.get("floats", [])]
        if n is None:
            n = len(boxes) + len(floats)
        return cls.build(n, conjugate(rows), boxes, floats)

    def render(self) -> str:
        """Plain-text picture; floats stacked above their columns, '.' is empty."""
        g = self.grid()
        width = max([self.ncols] + [c for _, c in self.floats] + [1])
        stacks = {c: sorted((v for v, fc in self.floats if fc == c)) for c in range(1, width + 1)}
        depth = max((len(s) for s in stacks.values()), default=0)
        cw = max(len(str(self.n)), 1) + 1
        lines = []
        for k in range(depth, 0, -1):
            line = ""
            for c in range(1, width + 1):
                s = stacks[c]
                line += (str(s[k - 1]) if len(s) >= k else "").rjust(cw)
            lines.append(line)
        for r, w in enumerate(self.rows, start=1):
            line = ""
            for c in range(1, w + 1):
                v = g[r, c]
                line += ("." if v == INF else str(v)).rjust(cw)
            lines.append(line + " |")
        return "\n".join(lines)


def code(sigma: ContainerDiagram) -> tuple:
    """The coinversion code of a container diagram."""
    sigma.validate()
    g = sigma._grid
    rows = sigma.rows
    out = [0] * sigma.n
    for r, c, v in sigma.boxes:
        k = sum(1 for cc in range(c + 1, rows[r - 1] + 1) if g[r, cc] > v)
        if r < len(rows):
            k += sum(1 for cc in range(1, min(c - 1, rows[r]) + 1) if g[r + 1, cc] > v)
        out[v - 1] = k
    width = rows[0] if rows else 0
    for v, c in sigma.floats:
        out[v - 1] = c - 1 + sum(1 for cc in range(c + 1, width + 1) if g[1, cc] > v)
    return tuple(out)


class _Inserter:
    """Mutable state of the code^{-1} insertion algorithm."""

    def __init__(self, n: int, lam):
        self.n = n
        self.lam = partition(lam)
        self.rows = conjugate(self.lam)
        self.ncols = len(self.lam)
        self.heights = list(self.lam)
        self.filled = [0] * self.ncols
        self.boxes = []
        self.floats = []

    def num_empty(self) -> int:
        return sum(h - f for h, f in zip(self.heights, self.filled))

    def priority(self, p: int) -> int:
        """The column c_{p+1} of the priority list (p is 0-based)."""
        empties = [
            (self.heights[c] - self.filled[c], c + 1)
            for c in range(self.ncols)
            if self.filled[c] < self.heights[c]
        ]
        # deeper bottom-most empty box first, ties to the larger column index
        empties.sort(reverse=True)
        if p < len(empties):
            return empties[p][1]
        p -= len(empties)
        full = [c + 1 for c in range(self.ncols) if self.filled[c] == self.heights[c]]
        if p < len(full):
            return full[p]
        return self.ncols + 1 + (p - len(full))

    def priority_list(self, length: int) -> list:
        return [self.priority(p) for p in range(length)]

    def insert(self, t: int, col: int):
        """Put t at the bottom-most available spot of column col."""
        c = col - 1
        if c < self.ncols and self.filled[c] < self.heights[c]:
            row = self.heights[c] - self.filled[c]
            self.filled[c] += 1
            self.boxes.append((row, col, t))
        else:
            self.floats.append((t, col))

    def diagram(self) -> ContainerDiagram:
        d = ContainerDiagram(
            self.n, self.rows, tuple(sorted(self.boxes)), tuple(sorted(self.floats))
        )
        # bottom-most-spot insertion of 1..n always yields a valid diagram
        d.__dict__["_valid"] = True
        return d


def code_inv(alpha, n: int, lam, trace=None) -> ContainerDiagram:
    """Inverse of :func:`code` via the column-priority insertion algorithm.

    If ``trace`` is a list, the priority list (first ``n + 2`` columns) seen
    before each insertion is appended to it.
    """
    alpha = tuple(alpha)
    if len(alpha) != n:
        raise ShapeError(f"composition {alpha} does not have length {n}")
    if any(a < 0 for a in alpha):
        raise ShapeError(f"negative entry in {alpha}")
    ins = _Inserter(n, lam)
    for t, a in enumerate(alpha, start=1):
        if trace is not None:
            trace.append(ins.priority_list(ins.ncols + n + 2))
        ins.insert(t, ins.priority(a))
    return ins.diagram()


def all_diagrams(n: int, lam, max_col: int):
    """Every container diagram of (n, lam) with floating columns <= max_col."""
    lam = partition(lam)

    def rec(t, ins: _Inserter):
        if t > n:
            yield ins.diagram()
            return
        for col in range(1, max_col + 1):
            saved = (list(ins.filled), len(ins.boxes), len(ins.floats))
            ins.insert(t, col)
            yield from rec(t + 1, ins)
            ins.filled, nb, nf = saved
            del ins.boxes[nb:]
            del ins.floats[nf:]

    yield from rec(1, _Inserter(n, lam))


# -- the three conditions -------------------------------------------------


def condition1(sigma: ContainerDiagram) -> bool:
    return sigma.num_empty() == 1


def condition2(sigma: ContainerDiagram) -> bool:
    g = sigma.grid()
    if not sigma.rows or g[1, 1] != INF:
        return False
    for r, w in enumerate(sigma.rows, start=1):
        if any(not g[r, c] > g[r, c + 1] for c in range(1, w)):
            return False
    return True


def condition3(sigma: ContainerDiagram) -> bool:
    g = sigma.grid()
    for v, c in sigma.floats:
        for k in range(1, c):
            h = sigma.col_height(k)
            if not any(g[r, k] > v for r in range(1, h + 1)):
                return False
    return True


def in_D_conditions(sigma: ContainerDiagram) -> bool:
    return condition1(sigma) and condition2(sigma) and condition3(sigma)


def _check_range(n, lam):
    if n < 1 or not 1 <= size(lam) <= n + 1:
        raise ShapeError(f"need n >= 1 and 1 <= |lambda| <= n + 1, got n={n}, lambda={lam}")


def D_diagrams_direct(n: int, lam) -> list:
    """All diagrams of (n, lam) satisfying Conditions 1-3, by pruned search.

    Floating columns are searched up to ``l(lam) + 2``; Condition 3 confines
    them to ``l(lam) + 1`` and the slack column is asserted unused.
    """
    lam = partition(lam)
    _check_range(n, lam)
    ncols = len(lam)
    max_col = ncols + 2
    rows = conjugate(lam)
    found = []

    def rec(t, ins: _Inserter, grid: dict):
        empties = ins.num_empty()
        if empties < 1 or empties - (n - t + 1) > 1:
            return
        if t > n:
            d = ins.diagram()
            if in_D_conditions(d):
                found.append(d)
            return
        for col in range(1, max_col + 1):
            c = col - 1
            if c < ncols and ins.filled[c] < ins.heights[c]:
                row = ins.heights[c] - ins.filled[c]
                if (row, col) == (1, 1):
                    continue
                # the right neighbour must already hold a smaller number
                if col < rows[row - 1] and (row, col + 1) not in grid:
                    continue
                ins.filled[c] += 1
                ins.boxes.append((row, col, t))
                grid[row, col] = t
                rec(t + 1, ins, grid)
                del grid[row, col]
                ins.boxes.pop()
                ins.filled[c] -= 1
            else:
                # every column to the left must still have an unfilled top box
                if any(k > ncols or (1, k) in grid for k in range(1, col)):
                    continue
                ins.floats.append((t, col))
                rec(t + 1, ins, grid)
                ins.floats.pop()

    rec(1, _Inserter(n, lam), {})
    assert all(c < max_col for d in found for _, c in d.floats), "float column bound reached"
    return found


def build_D_direct(n: int, lam) -> set:
    """D_{n, lam}: codes of the diagrams satisfying Conditions 1-3."""
    return {code(d) for d in D_diagrams_direct(n, lam)}


@lru_cache(maxsize=None)
def _build_D(n: int, lam: tuple) -> frozenset:
    if not lam:
        return frozenset()
    if n == 1:
        if lam == (1,):
            return frozenset({(1,)})
        if lam in ((2,), (1, 1)):
            return frozenset({(0,)})
        raise ShapeError(f"no base case for n=1, lambda={lam}")
    conj = conjugate(lam)
    out = set()
    firsts = set()
    for j in valid_corners(n, lam):
        a = conj[j] if j < len(conj) else 0
        if a in firsts:
            raise AssertionError(f"prepended value {a} repeats across corners of {lam}")
        firsts.add(a)
        child = _build_D(n - 1, remove_corner(lam, j))
        branch = {(a,) + beta for beta in child}
        if out & branch:
            raise AssertionError(f"recursive union for ({n}, {lam}) is not disjoint")
        out |= branch
    return frozenset(out)


def build_D(n: int, lam) -> set:
    """D_{n, lam} by the recursion over corners."""
    lam = partition(lam)
    _check_range(n, lam)
    return set(_build_D(n, lam))


def corner_for_first_entry(n: int, lam) -> dict:
    """Map lam'_{j+1} -> j over the admissible corners (asserted injective)."""
    lam = partition(lam)
    conj = conjugate(lam)
    out = {}
    for j in valid_corners(n, lam):
        a = conj[j] if j < len(conj) else 0
        if a in out:
            raise AssertionError(f"corner lookup for ({n}, {lam}) is not injective")
        out[a] = j
    return out


def minimal_elements(compositions) -> set:
    """Entrywise-minimal elements (a convenience filter, not part of D itself)."""
    comps = set(map(tuple, compositions))
    return {
        a
        for a in comps
        if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in comps)
    }


# -- constructive descent into D -------------------------------------------


def _critical_index(alpha, n, lam) -> int:
    """Largest N such that, right before inserting N, #empty - #remaining = 1."""
    ins = _Inserter(n, lam)
    best = None
    for t in range(1, n + 1):
        if ins.num_empty() - (n - t + 1) == 1:
            best = t
        ins.insert(t, ins.priority(alpha[t - 1]))
    if best is None:
        raise AssertionError(f"no critical index for {alpha}")
    return best


class _Mutable:
    def __init__(self, sigma: ContainerDiagram):
        self.n = sigma.n
        self.rows = sigma.rows
        self.grid = sigma.grid()
        self.floats = {v: c for v, c in sigma.floats}

    def freeze(self) -> ContainerDiagram:
        boxes = [(r, c, v) for (r, c), v in self.grid.items() if v != INF]
        return ContainerDiagram(
            self.n, self.rows, tuple(sorted(boxes)), tuple(sorted((v, c) for v, c in self.floats.items()))
        )

    def lowest_inversion(self):
        for r in range(len(self.rows), 0, -1):
            for c in range(1, self.rows[r - 1]):
                if self.grid[r, c] < self.grid[r, c + 1]:
                    return r, c
        return None

    def resolve(self, r0: int, cl: int):
        """Swap the inverted prefix of columns cl, cl+1 upward from row r0."""
        cr = cl + 1
        m = r0 - 1
        i = 0
        while i < m and self.grid[r0 - i - 1, cl] < self.grid[r0 - i - 1, cr]:
            i += 1
        for j in range(i + 1):
            a, b = (r0 - j, cl), (r0 - j, cr)
            self.grid[a], self.grid[b] = self.grid[b], self.grid[a]
        if i == m:
            top_right_before = self.grid[1, cl]  # r_m, now on top of the left column
            for v, c in list(self.floats.items()):
                if c == cl and v < top_right_before:
                    self.floats[v] = cr

    def fix_floats(self):
        ncols = self.rows[0] if self.rows else 0
        changed = True
        while changed:
            changed = False
            for v in sorted(self.floats):
                c = self.floats[v]
                for k in range(1, c):
                    h = sum(1 for w in self.rows if w >= k) if k <= ncols else 0
                    if not any(self.grid[r, k] > v for r in range(1, h + 1)):
                        self.floats[v] = k
                        changed = True
                        break


def dominate_down(alpha, n: int, lam) -> tuple:
    """Return beta in D_{n, lam} with beta <=_e alpha, for alpha outside C_{n, lam, inf}."""
    lam = partition(lam)
    _check_range(n, lam)
    alpha = tuple(alpha)
    sigma = code_inv(alpha, n, lam)
    if sigma.num_empty() == 0:
        raise ShapeError(f"{alpha} lies in C_(n,lambda,inf); nothing to dominate")
    if sigma.num_empty() > 1:
        N = _critical_index(alpha, n, lam)
        beta = alpha[: N - 1] + (0,) * (n - N + 1)
        sigma = code_inv(beta, n, lam)
        assert sigma.num_empty() == 1
    state = _Mutable(sigma)
    while (inv := state.lowest_inversion()) is not None:
        state.resolve(*inv)
    state.fix_floats()
    gamma = state.freeze()
    gamma.validate()
    assert in_D_conditions(gamma), gamma
    return code(gamma)
