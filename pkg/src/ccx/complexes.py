"""Combinatorial complexes and their special cases.

A combinatorial complex is a vertex set together with a family of non-empty
vertex subsets ("cells"), each carrying a non-negative integer rank.  Every
singleton is a cell of rank 0, and the rank function must be order-preserving:
a cell contained in another can never out-rank it.  Graphs, hypergraphs and
abstract simplicial complexes are all encoded this way:

* graph / hypergraph: singletons at rank 0, (hyper)edges at rank 1;
* simplicial complex: every simplex at rank ``len(simplex) - 1``.

Cells are stored in a canonical order (by rank, then lexicographically on the
sorted vertex tuple), so the position of a cell inside its rank is a stable
row/column index for every matrix built on top of the complex.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DuplicateCell,
    EmptyCell,
    InvalidRankPair,
    RankOrderViolation,
    VertexOutOfRange,
)


@dataclass(frozen=True, order=True)
class Cell:
    """A ranked relation: a non-empty set of vertices plus its rank."""

    vertices: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        if len(self.vertices) == 0:
            raise EmptyCell("a cell must contain at least one vertex")
        if self.rank < 0:
            raise ValueError(f"rank must be non-negative, got {self.rank}")
        ordered = tuple(sorted(set(self.vertices)))
        if ordered != self.vertices:
            object.__setattr__(self, "vertices", ordered)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CombinatorialComplex:
    """An immutable, validated combinatorial complex.

    ``cells`` holds every cell (rank-0 singletons included) sorted by
    ``(rank, vertices)``.  Construct instances through :func:`new_cc`,
    :func:`from_simplicial` or :func:`from_hypergraph`, which perform the
    validation; the raw constructor trusts its input.
    """

    num_vertices: int
    cells: tuple[Cell, ...]
    _by_rank: dict[int, tuple[Cell, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        buckets: dict[int, list[Cell]] = {}
        for cell in self.cells:
            buckets.setdefault(cell.rank, []).append(cell)
        object.__setattr__(
            self, "_by_rank", {r: tuple(cs) for r, cs in buckets.items()}
        )

    @property
    def max_rank(self) -> int:
        return max(self._by_rank) if self._by_rank else 0

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(sorted(self._by_rank))

    def cells_of_rank(self, k: int) -> tuple[Cell, ...]:
        """Cells of rank ``k`` in canonical (lexicographic) order.

        The position of a cell in this tuple is its permanent row/column
        index in every matrix derived from the complex.
        """
        return self._by_rank.get(k, ())

    def num_cells_of_rank(self, k: int) -> int:
        return len(self._by_rank.get(k, ()))

    def incidence_pairs(self, r: int, s: int) -> list[tuple[int, int]]:
        """All (i, j) with the i-th rank-r cell contained in the j-th rank-s cell."""
        if r >= s:
            raise InvalidRankPair(f"need r < s, got r={r}, s={s}")
        lows = self.cells_of_rank(r)
        highs = [(j, c.vertex_set) for j, c in enumerate(self.cells_of_rank(s))]
        pairs: list[tuple[int, int]] = []
        for i, low in enumerate(lows):
            low_set = low.vertex_set
            for j, high_set in highs:
                if low_set <= high_set:
                    pairs.append((i, j))
        pairs.sort()
        return pairs

    def to_dict(self) -> dict:
        return {
            "num_vertices": self.num_vertices,
            "cells": [
                {"vertices": list(c.vertices), "rank": c.rank} for c in self.cells
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _validated_cells(
    num_vertices: int, ranked_cells: Iterable[tuple[Iterable[int], int]]
) -> list[Cell]:
    cells: list[Cell] = []
    for raw_vertices, rank in ranked_cells:
        cell = Cell(tuple(raw_vertices), rank)
        for v in cell.vertices:
            if not 0 <= v < num_vertices:
                raise VertexOutOfRange(
                    f"vertex {v} outside 0..{num_vertices - 1} in cell {cell.vertices}"
                )
        cells.append(cell)
    return cells


def _check_rank_order(by_rank: dict[int, list[Cell]]) -> None:
    # Only a nested pair with rank(inner) > rank(outer) can violate
    # monotonicity, and the inner cell cannot be larger than the outer one.
    ranks = sorted(by_rank)
    for hi_pos, hi_rank in enumerate(ranks):
        for lo_rank in ranks[:hi_pos]:
            for inner in by_rank[hi_rank]:
                inner_set = inner.vertex_set
                for outer in by_rank[lo_rank]:
                    if len(inner) <= len(outer) and inner_set <= outer.vertex_set:
                        raise RankOrderViolation(
                            f"cell {inner.vertices} (rank {hi_rank}) is contained in "
                            f"{outer.vertices} (rank {lo_rank})"
                        )


def new_cc(
    num_vertices: int, ranked_cells: Iterable[tuple[Iterable[int], int]]
) -> CombinatorialComplex:
    """Build and validate a combinatorial complex.

    Missing rank-0 singletons are inserted automatically.  Raises
    ``EmptyCell``, ``VertexOutOfRange``, ``DuplicateCell`` or
    ``RankOrderViolation`` on invalid input.
    """
    if num_vertices < 0:
        raise ValueError("num_vertices must be non-negative")
    cells = _validated_cells(num_vertices, ranked_cells)

    seen: dict[frozenset[int], Cell] = {}
    for cell in cells:
        prior = seen.get(cell.vertex_set)
        if prior is not None:
            detail = (
                "twice at the same rank"
                if prior.rank == cell.rank
                else f"at ranks {prior.rank} and {cell.rank}"
            )
            raise DuplicateCell(f"cell {cell.vertices} given {detail}")
        seen[cell.vertex_set] = cell

    for v in range(num_vertices):
        singleton = frozenset((v,))
        prior = seen.get(singleton)
        if prior is None:
            cell = Cell((v,), 0)
            seen[singleton] = cell
            cells.append(cell)
        elif prior.rank != 0:
            raise DuplicateCell(
                f"singleton {prior.vertices} must have rank 0, got {prior.rank}"
            )

    by_rank: dict[int, list[Cell]] = {}
    for cell in cells:
        by_rank.setdefault(cell.rank, []).append(cell)
    _check_rank_order(by_rank)

    ordered = tuple(sorted(cells, key=lambda c: (c.rank, c.vertices)))
    return CombinatorialComplex(num_vertices=num_vertices, cells=ordered)


def from_simplicial(
    num_vertices: int, maximal_simplices: Iterable[Iterable[int]]
) -> CombinatorialComplex:
    """Downward closure of the given simplices, ranked by dimension |x| - 1."""
    closure: set[frozenset[int]] = set()
    for raw in maximal_simplices:
        simplex = frozenset(raw)
        if not simplex:
            raise EmptyCell("a maximal simplex must be non-empty")
        _subsets_into(tuple(sorted(simplex)), closure)
    ranked = [(tuple(sorted(s)), len(s) - 1) for s in closure]
    return new_cc(num_vertices, ranked)


def _subsets_into(vertices: tuple[int, ...], out: set[frozenset[int]]) -> None:
    n = len(vertices)
    for bits in range(1, 1 << n):
        out.add(frozenset(vertices[i] for i in range(n) if bits >> i & 1))


def from_hypergraph(
    num_vertices: int, hyperedges: Iterable[Iterable[int]]
) -> CombinatorialComplex:
    """Encode a hypergraph with the trivial rank function.

    Singletons sit at rank 0 and every hyperedge at rank 1; hyperedges that
    are themselves singletons are kept at rank 0 only.
    """
    seen: set[frozenset[int]] = set()
    ranked: list[tuple[tuple[int, ...], int]] = []
    for raw in hyperedges:
        edge = frozenset(raw)
        if not edge:
            raise EmptyCell("a hyperedge must be non-empty")
        if edge in seen:
            raise DuplicateCell(f"hyperedge {tuple(sorted(edge))} given twice")
        seen.add(edge)
        if len(edge) > 1:
            ranked.append((tuple(sorted(edge)), 1))
    return new_cc(num_vertices, ranked)


def from_dict(data: dict) -> CombinatorialComplex:
    """Inverse of :meth:`CombinatorialComplex.to_dict`, with full validation."""
    return new_cc(
        data["num_vertices"],
        [(entry["vertices"], entry["rank"]) for entry in data["cells"]],
    )


def from_json(text: str) -> CombinatorialComplex:
    return from_dict(json.loads(text))
