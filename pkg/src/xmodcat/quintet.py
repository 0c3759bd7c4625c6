"""Squares over a crossed module and their two pasting directions.

A square carries four G-edges and an H-face:

        top
    +--------+
  left      right        boundary law:
    +--------+           bnd(face) = bottom * right * top^-1 * left^-1
       bottom

Same-row squares paste with compose_h(a, b) when a.right == b.left; stacked
squares paste with compose_v(upper, lower) when upper.bottom == lower.top.
Both directions have strict inverses and satisfy the interchange law, so a
rectangular grid of adjacent squares has one well-defined value; see
evaluate_grid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catgroup import Mor2G
from .errors import BoundaryViolation, MixedStructures, NotAdjacent
from .xmod import CrossedModule


@dataclass(frozen=True)
class Quintet:
    xm: CrossedModule
    left: int
    top: int
    right: int
    bottom: int
    face: int

    def edges(self) -> tuple[int, int, int, int]:
        return self.left, self.top, self.right, self.bottom


def make_square(
    xm: CrossedModule, left: int, top: int, right: int, bottom: int, face: int
) -> Quintet:
    """Checked constructor enforcing the boundary law."""
    for e in (left, top, right, bottom):
        if not 0 <= e < xm.g.order:
            raise BoundaryViolation(f"edge {e} out of range", (left, top, right, bottom, face))
    if not 0 <= face < xm.h.order:
        raise BoundaryViolation(f"face {face} out of range", (left, top, right, bottom, face))
    g = xm.g
    word = g.prod(bottom, right, g.inverse[top], g.inverse[left])
    if xm.bnd(face) != word:
        raise BoundaryViolation(
            f"bnd(face)={xm.bnd(face)} but bottom*right*top^-1*left^-1={word}",
            (left, top, right, bottom, face),
        )
    return Quintet(xm, left, top, right, bottom, face)


def square_from_edges(
    xm: CrossedModule, left: int, top: int, right: int, face: int
) -> Quintet:
    """The unique square with the given left/top/right edges and face.

    The bottom edge is forced: bottom = bnd(face) * left * top * right^-1.
    """
    g = xm.g
    bottom = g.prod(xm.bnd(face), left, top, g.inverse[right])
    return Quintet(xm, left, top, right, bottom, face)


def h_identity(xm: CrossedModule, edge: int) -> Quintet:
    """Identity for compose_h on the vertical edge `edge`."""
    e = xm.g.identity
    return Quintet(xm, edge, e, edge, e, xm.h.identity)


def v_identity(xm: CrossedModule, edge: int) -> Quintet:
    """Identity for compose_v on the horizontal edge `edge`."""
    e = xm.g.identity
    return Quintet(xm, e, edge, e, edge, xm.h.identity)


def _same_xm(a: Quintet, b: Quintet) -> CrossedModule:
    if a.xm != b.xm:
        raise MixedStructures("squares over different crossed modules")
    return a.xm


def compose_h(a: Quintet, b: Quintet) -> Quintet:
    """Paste b to the right of a; requires a.right == b.left.

    The face is a.face * ((a.left * a.top * a.right^-1) |> b.face).
    """
    xm = _same_xm(a, b)
    if a.right != b.left:
        raise NotAdjacent(f"a.right={a.right} but b.left={b.left}")
    g, h = xm.g, xm.h
    w = g.prod(a.left, a.top, g.inverse[a.right])
    return make_square(
        xm,
        a.left,
        g.table[a.top][b.top],
        b.right,
        g.table[a.bottom][b.bottom],
        h.table[a.face][xm.act(w, b.face)],
    )


def compose_h_face_alt(a: Quintet, b: Quintet) -> int:
    """Equivalent face formula (a.bottom |> b.face) * a.face, for cross-checks."""
    xm = _same_xm(a, b)
    return xm.h.table[xm.act(a.bottom, b.face)][a.face]


def compose_v(upper: Quintet, lower: Quintet) -> Quintet:
    """Paste lower underneath upper; requires upper.bottom == lower.top.

    The face is lower.face * (lower.left |> upper.face).
    """
    xm = _same_xm(upper, lower)
    if upper.bottom != lower.top:
        raise NotAdjacent(f"upper.bottom={upper.bottom} but lower.top={lower.top}")
    g, h = xm.g, xm.h
    return make_square(
        xm,
        g.table[lower.left][upper.left],
        upper.top,
        g.table[lower.right][upper.right],
        lower.bottom,
        h.table[lower.face][xm.act(lower.left, upper.face)],
    )


def invert(sq: Quintet, axis: str) -> Quintet:
    """Inverse square along "horizontal" or "vertical" (aliases "h"/"v")."""
    xm = sq.xm
    g, h = xm.g, xm.h
    if axis in ("h", "horizontal"):
        w = g.inverse[sq.bottom]
        return make_square(
            xm, sq.right, g.inverse[sq.top], sq.left, w, xm.act(w, h.inverse[sq.face])
        )
    if axis in ("v", "vertical"):
        w = g.inverse[sq.left]
        return make_square(
            xm, w, sq.bottom, g.inverse[sq.right], sq.top, xm.act(w, h.inverse[sq.face])
        )
    raise ValueError(f"unknown axis {axis!r}")


invert_square = invert  # package-level name, clear of the 2-group invert


def embed_morphism(m: Mor2G) -> Quintet:
    """A 2-group pair (g, eta) as the square with identity top/bottom edges.

    Under this identification compose_h realises categorical-group
    composition: adjacency left-to-right is exactly src/tgt matching.
    """
    xm = m.xm
    e = xm.g.identity
    right = xm.g.table[xm.bnd(m.eta)][m.g]
    return make_square(xm, m.g, e, right, e, m.eta)


def extract_morphism(sq: Quintet) -> Mor2G:
    e = sq.xm.g.identity
    if sq.top != e or sq.bottom != e:
        raise BoundaryViolation("square does not have identity top/bottom edges")
    return Mor2G(sq.xm, sq.left, sq.face)


@dataclass(frozen=True)
class QuintetGrid:
    cells: tuple[tuple[Quintet, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.cells)

    @property
    def n_cols(self) -> int:
        return len(self.cells[0])

    @property
    def xm(self) -> CrossedModule:
        return self.cells[0][0].xm


def make_grid(cells) -> QuintetGrid:
    """Checked grid constructor: rectangular, one crossed module, edges agree."""
    rows = tuple(tuple(r) for r in cells)
    if not rows or not rows[0]:
        raise NotAdjacent("grid must have at least one row and column")
    xm = rows[0][0].xm
    for i, row in enumerate(rows):
        if len(row) != len(rows[0]):
            raise NotAdjacent(f"row {i} has {len(row)} cells, expected {len(rows[0])}")
        for j, sq in enumerate(row):
            if sq.xm != xm:
                raise MixedStructures(f"cell ({i},{j}) uses a different crossed module")
            if j > 0 and row[j - 1].right != sq.left:
                raise NotAdjacent(
                    f"cells ({i},{j - 1})|({i},{j}): right edge "
                    f"{row[j - 1].right} != left edge {sq.left}"
                )
            if i > 0 and rows[i - 1][j].bottom != sq.top:
                raise NotAdjacent(
                    f"cells ({i - 1},{j})/({i},{j}): bottom edge "
                    f"{rows[i - 1][j].bottom} != top edge {sq.top}"
                )
    return QuintetGrid(rows)


def evaluate_grid(grid: QuintetGrid, order: str = "rows") -> Quintet:
    """Collapse a grid to one square.

    order="rows" folds each row left-to-right, then the row results top to
    bottom; order="columns" folds each column first. The interchange law
    makes both orders agree, which the verification suite exercises.
    """
    if order == "rows":
        strips = []
        for row in grid.cells:
            acc = row[0]
            for sq in row[1:]:
                acc = compose_h(acc, sq)
            strips.append(acc)
        out = strips[0]
        for nxt in strips[1:]:
            out = compose_v(out, nxt)
        return out
    if order == "columns":
        strips = []
        for j in range(grid.n_cols):
            acc = grid.cells[0][j]
            for i in range(1, grid.n_rows):
                acc = compose_v(acc, grid.cells[i][j])
            strips.append(acc)
        out = strips[0]
        for nxt in strips[1:]:
            out = compose_h(out, nxt)
        return out
    raise ValueError(f"unknown evaluation order {order!r}")


def enumerate_squares(xm: CrossedModule) -> list[Quintet]:
    """All squares: left/top/right edges and face are free, bottom is forced."""
    out = []
    for left in xm.g.elements():
        for top in xm.g.elements():
            for right in xm.g.elements():
                for face in xm.h.elements():
                    out.append(square_from_edges(xm, left, top, right, face))
    return out


def random_square(xm: CrossedModule, rng: random.Random) -> Quintet:
    return square_from_edges(
        xm,
        rng.randrange(xm.g.order),
        rng.randrange(xm.g.order),
        rng.randrange(xm.g.order),
        rng.randrange(xm.h.order),
    )


def random_grid(
    xm: CrossedModule, n_rows: int, n_cols: int, rng: random.Random
) -> QuintetGrid:
    """A uniformly random adjacency-valid grid (free edges drawn uniformly)."""
    cells: list[list[Quintet]] = []
    for i in range(n_rows):
        row: list[Quintet] = []
        for j in range(n_cols):
            left = row[j - 1].right if j > 0 else rng.randrange(xm.g.order)
            top = cells[i - 1][j].bottom if i > 0 else rng.randrange(xm.g.order)
            right = rng.randrange(xm.g.order)
            face = rng.randrange(xm.h.order)
            row.append(square_from_edges(xm, left, top, right, face))
        cells.append(row)
    return make_grid(cells)
