"""Search graph6 streams or generated small graphs for matching-integral graphs."""

from __future__ import annotations

import json
import multiprocessing
import sys
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass

from .canon import canonical_graph, canonical_key
from .graph import Graph, Graph6Error, parse_graph6, to_graph6, vertex_connectivity_at_least
from .matching import is_matching_integral

__all__ = [
    "MAX_GENERATED_N",
    "SearchConfig",
    "SearchHit",
    "generate_small_graphs",
    "is_candidate",
    "filter_stream",
    "format_hit",
]

MAX_GENERATED_N = 8


@dataclass(frozen=True)
class SearchConfig:
    min_connectivity: int = 0
    max_n: int = MAX_GENERATED_N
    parallelism: int = 1
    ordered_output: bool = True

    def __post_init__(self):
        if self.min_connectivity < 0:
            raise ValueError("min_connectivity must be non-negative")
        if self.max_n < 1:
            raise ValueError("max_n must be positive")
        if self.min_connectivity > self.max_n:
            raise ValueError("min_connectivity cannot exceed max_n")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")


@dataclass(frozen=True)
class SearchHit:
    graph6: str
    n: int
    zeros: tuple[tuple[int, int], ...]
    connectivity_checked: int
    line: int | None = None

    def zeros_text(self) -> str:
        return ",".join(str(z) if m == 1 else f"{z}^{m}" for z, m in self.zeros)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "zeros": [[z, m] for z, m in self.zeros],
            "connectivity_checked": self.connectivity_checked,
            "line": self.line,
        }


def format_hit(hit: SearchHit, as_json: bool = False) -> str:
    if as_json:
        return json.dumps(hit.to_dict())
    return f"{hit.graph6}\tn={hit.n}\tzeros={hit.zeros_text()}"


def _augment(g: Graph) -> Iterator[Graph]:
    # add vertex n joined to each subset of the existing vertices
    n = g.n
    for nbrs in range(1 << n):
        masks = [m | ((nbrs >> v & 1) << n) for v, m in enumerate(g.masks)]
        masks.append(nbrs)
        yield Graph(n + 1, masks)


def generate_small_graphs(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class on n vertices.

    Classes on n vertices are grown from those on n - 1 by adding a vertex in
    every possible way and keeping one graph per canonical key. Output is
    sorted by key, so it is reproducible. Capped at n = 8; pipe an external
    graph6 stream (e.g. from nauty's geng) for anything larger.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > MAX_GENERATED_N:
        raise ValueError(
            f"built-in generator is limited to n <= {MAX_GENERATED_N}; "
            "feed a graph6 stream (e.g. `geng -c {n}`) to `search` instead"
        )
    level = {canonical_key(Graph(1, [0])): Graph(1, [0])}
    for _ in range(n - 1):
        nxt: dict[tuple[int, int], Graph] = {}
        for g in level.values():
            for h in _augment(g):
                key = canonical_key(h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt
    for key in sorted(level):
        yield canonical_graph(level[key])


def is_candidate(g: Graph, cfg: SearchConfig) -> SearchHit | None:
    """Return a hit iff ``g`` is ``min_connectivity``-connected and matching integral."""
    c = cfg.min_connectivity
    if c >= 2:
        if not vertex_connectivity_at_least(g, c):
            return None
        integral, report = is_matching_integral(g)
        if not integral:
            return None
    else:
        integral, report = is_matching_integral(g)
        if not integral or not vertex_connectivity_at_least(g, c):
            return None
    return SearchHit(to_graph6(g), g.n, report.zeros, c)


def _work(item: tuple[int, str, int]) -> tuple[int, SearchHit | None, str | None]:
    lineno, text, c = item
    try:
        g = parse_graph6(text)
    except Graph6Error as exc:
        return lineno, None, str(exc)
    hit = is_candidate(g, SearchConfig(min_connectivity=c, max_n=max(c, 1)))
    if hit is not None:
        hit = SearchHit(hit.graph6, hit.n, hit.zeros, hit.connectivity_checked, lineno)
    return lineno, hit, None


def _stderr_diag(lineno: int, message: str) -> None:
    print(f"ERR line={lineno}: {message}", file=sys.stderr)


def filter_stream(
    cfg: SearchConfig,
    lines: Iterable[str],
    diagnostics: Callable[[int, str], None] | None = None,
) -> Iterator[SearchHit]:
    """Yield a hit for every matching-integral graph in a graph6 line stream.

    Blank lines are skipped. Unparseable lines go to ``diagnostics`` as
    ``(line_number, message)`` (default: ``ERR line=<k>: ...`` on stderr)
    and processing continues. With ``parallelism > 1`` graphs are checked
    in a process pool; unordered mode yields hits as they complete.
    """
    report = diagnostics or _stderr_diag
    items = (
        (i, line.strip(), cfg.min_connectivity)
        for i, line in enumerate(lines, start=1)
        if line.strip()
    )
    if cfg.parallelism == 1:
        results: Iterable = map(_work, items)
        pool = None
    else:
        pool = multiprocessing.get_context("spawn").Pool(cfg.parallelism)
        mapper = pool.imap if cfg.ordered_output else pool.imap_unordered
        results = mapper(_work, items, chunksize=32)
    try:
        for lineno, hit, err in results:
            if err is not None:
                report(lineno, err)
            elif hit is not None:
                yield hit
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()


def generated_lines(max_n: int, min_n: int = 1) -> Iterator[str]:
    """graph6 lines for every isomorphism class with min_n <= n <= max_n."""
    for n in range(min_n, max_n + 1):
        for g in generate_small_graphs(n):
            yield to_graph6(g)
