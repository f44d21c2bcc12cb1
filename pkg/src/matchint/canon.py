"""Canonical labelling of small graphs.

The canonical key is the minimum column-major adjacency bit-string taken over
the vertex orderings reachable by individualisation and colour refinement.
Refinement is isomorphism-invariant, so two graphs share a key exactly when
they are isomorphic.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph

__all__ = ["canonical_key", "canonical_order", "canonical_graph", "adjacency_bits"]


def adjacency_bits(masks: tuple[int, ...], order: list[int]) -> int:
    """Bits x(0,1), x(0,2), x(1,2), x(0,3), ... of the relabelled graph, MSB first."""
    val = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            val = val << 1 | (mj >> order[i] & 1)
    return val


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cell_masks.append(m)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((masks[v] & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                split = True
                for sig in sorted(groups):
                    out.append(groups[sig])
            else:
                out.append(cell)
        if not split:
            return out
        cells = out


def _twins(masks: tuple[int, ...], u: int, v: int) -> bool:
    return masks[u] & ~(1 << v) == masks[v] & ~(1 << u)


def canonical_order(masks: tuple[int, ...]) -> tuple[int, list[int]]:
    """Return ``(key_bits, order)`` where ``order[i]`` is the vertex placed at position i."""
    n = len(masks)
    if n <= 1:
        return 0, list(range(n))
    best_bits: int | None = None
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_bits, best_order
        cells = _refine(masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            bits = adjacency_bits(masks, order)
            if best_bits is None or bits < best_bits:
                best_bits, best_order = bits, order
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # swapping twins is an automorphism fixing the current partition
            if any(_twins(masks, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(n))])
    assert best_bits is not None
    return best_bits, best_order


@lru_cache(maxsize=1 << 16)
def _key(masks: tuple[int, ...]) -> tuple[int, int]:
    return len(masks), canonical_order(masks)[0]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism-class key ``(n, bits)``."""
    return _key(g.masks)


def canonical_graph(g: Graph) -> Graph:
    """The representative of ``g``'s isomorphism class, relabelled canonically."""
    _, order = canonical_order(g.masks)
    pos = {v: i for i, v in enumerate(order)}
    masks = [0] * g.n
    for i, v in enumerate(order):
        m = g.masks[v]
        while m:
            low = m & -m
            masks[i] |= 1 << pos[low.bit_length() - 1]
            m ^= low
    return Graph(g.n, masks)
