"""Path and spider pieces, and the per-node cover records built from them.

A piece is either a path (ordered vertex sequence, first and second
endpoints at the ends) or a spider (a center with outward legs; both
endpoints coincide with the center).  A single vertex is a valid path and
a valid spider.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooFewVerticesError


@dataclass(frozen=True)
class PathPiece:
    kind: str                                 # "path" | "spider"
    vertices: tuple                           # path order f..s; for spiders (center,)
    legs: tuple = ()                          # spider legs, center excluded, inner->outer

    def __post_init__(self):
        if self.kind == "path":
            if not self.vertices or self.legs:
                raise ValueError("a path needs vertices and carries no legs")
        elif self.kind == "spider":
            if len(self.vertices) != 1:
                raise ValueError("a spider stores only its center in vertices")
            if any(not leg for leg in self.legs):
                raise ValueError("spider legs must be nonempty")
        else:
            raise ValueError(f"unknown piece kind {self.kind!r}")
        seen = set(self.all_vertices())
        if len(seen) != self.vertex_count:
            raise ValueError("a piece may not repeat a vertex")

    @property
    def first(self):
        """The endpoint whose parent lies outside the piece's module."""
        return self.vertices[0]

    @property
    def second(self):
        """The endpoint that may parent a vertex outside the module."""
        if self.kind == "path":
            return self.vertices[-1]
        return self.vertices[0]

    @property
    def vertex_count(self) -> int:
        if self.kind == "path":
            return len(self.vertices)
        return 1 + sum(len(leg) for leg in self.legs)

    def all_vertices(self):
        if self.kind == "path":
            yield from self.vertices
        else:
            yield self.vertices[0]
            for leg in self.legs:
                yield from leg

    def chain_edges(self):
        """Consecutive pairs along the path, or along each leg from the center."""
        if self.kind == "path":
            for a, b in zip(self.vertices, self.vertices[1:]):
                yield a, b
        else:
            center = self.vertices[0]
            for leg in self.legs:
                yield center, leg[0]
                for a, b in zip(leg, leg[1:]):
                    yield a, b


def path_piece(vertices) -> PathPiece:
    return PathPiece("path", tuple(vertices))


def spider_piece(center, legs=()) -> PathPiece:
    return PathPiece("spider", (center,), tuple(tuple(leg) for leg in legs))


@dataclass(frozen=True)
class CoverRecord:
    """Per-node data: sizes, minimum piece counts, and witness covers.

    ham_cover holds exactly `ham` vertex-disjoint paths; spi_cover holds one
    spider (listed first) plus `spi - 1` paths.  Witnesses always use the
    host graph's original vertex ids.
    """

    size: int
    ham: int
    spi: int
    ham_cover: tuple
    spi_cover: tuple


def leaf_record(v) -> CoverRecord:
    """Record for a single vertex: one piece either way."""
    return CoverRecord(
        size=1,
        ham=1,
        spi=1,
        ham_cover=(path_piece([v]),),
        spi_cover=(spider_piece(v),),
    )


def _cut_path(piece: PathPiece):
    """Split the last edge off a path: f..a,b -> (f..a, [b])."""
    return path_piece(piece.vertices[:-1]), path_piece(piece.vertices[-1:])


def _cut_spider(piece: PathPiece):
    """Split the last edge of the longest leg off a spider."""
    lengths = [len(leg) for leg in piece.legs]
    k = lengths.index(max(lengths))
    leg = piece.legs[k]
    tail = path_piece(leg[-1:])
    new_legs = list(piece.legs)
    if len(leg) == 1:
        del new_legs[k]
    else:
        new_legs[k] = leg[:-1]
    return spider_piece(piece.vertices[0], new_legs), tail


def trim_cover(cover, pieces_wanted: int):
    """Cut edges until the cover has exactly `pieces_wanted` pieces.

    Each cut removes the last edge of the currently longest piece (for
    spiders, of its longest leg; ties go to the earliest piece) and appends
    the severed path at the end, so a leading spider stays in front.
    """
    cover = list(cover)
    if pieces_wanted < len(cover):
        raise ValueError(
            f"cannot trim a {len(cover)}-piece cover down to {pieces_wanted}"
        )
    total = sum(p.vertex_count for p in cover)
    if pieces_wanted > total:
        raise TooFewVerticesError(
            f"cover holds {total} vertices, cannot make {pieces_wanted} pieces"
        )
    while len(cover) < pieces_wanted:
        sizes = [p.vertex_count for p in cover]
        k = sizes.index(max(sizes))
        piece = cover[k]
        if piece.kind == "path":
            kept, tail = _cut_path(piece)
        else:
            kept, tail = _cut_spider(piece)
        cover[k] = kept
        cover.append(tail)
    return cover


def cover_vertex_set(cover):
    out = set()
    for piece in cover:
        out.update(piece.all_vertices())
    return out
