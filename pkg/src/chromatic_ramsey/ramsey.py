"""Ramsey graph enumeration, family Ramsey numbers and chromatic Ramsey numbers.

The chromatic Ramsey number of ``G`` equals the Ramsey number of the family
of its minimal homomorphic images.  Two routes compute it:

* :func:`chromatic_ramsey_small` searches 2-edge-colourings of ``K_N`` up to
  isomorphism, which is exhaustive and practical while ``N <= 8``;
* :func:`algorithm1` scans catalogues of Ramsey(k,k)-graphs from the top
  level downwards and stops at the first level holding a graph that avoids
  every image other than ``K_k`` in both colours.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .core import (
    Graph,
    canonical_form,
    chromatic_number,
    clique_number,
    complement,
    complete_graph,
    graph6_encode,
    graph6_str,
    has_clique,
    has_independent_set,
    independence_number,
    is_isomorphic,
)
from .core.graph6 import read_file
from .errors import BudgetExceededError, DatasetError, Graph6Error, GraphError
from .generate import extend_level, hereditary_levels
from .homo import GraphFamily, brute_force_is_subgraph, is_subgraph, minimal_hom_images

# classical diagonal Ramsey numbers R(k, k) for the k this module handles
DIAGONAL_RAMSEY = {1: 1, 2: 2, 3: 6, 4: 18}
DEFAULT_PATTERN = "r{s}{s}_{n}.g6"
CACHE_NAME = "chromatic_ramsey.cache"
BRUTE_FORCE_RECHECK_MAX = 7


@dataclass(frozen=True)
class EdgeColoring:
    """2-colouring of the edges of ``K_N``: the red class, blue being the rest."""

    red: Graph

    @property
    def order(self) -> int:
        return self.red.n

    @property
    def blue(self) -> Graph:
        return complement(self.red)

    def has_monochromatic(self, fam: GraphFamily) -> bool:
        blue = self.blue
        return any(is_subgraph(h, self.red) or is_subgraph(h, blue) for h in fam)


def turan_density(value: int) -> Fraction:
    """Limit density ``1 - 1/(R - 1)`` of the 2-colour Turan number."""
    if value < 2:
        raise ValueError("chromatic Ramsey value must be at least 2")
    return 1 - Fraction(1, value - 1)


@dataclass
class RamseyReport:
    graph: str
    chromatic_number: int
    hom_prime: GraphFamily
    value: int
    method: str
    witness: tuple[int, str] | None = None
    canonical_witness: bool = True
    dataset_provenance: list[tuple[int, str, int, str]] = field(default_factory=list)
    elapsed: dict[int, float] = field(default_factory=dict)

    @property
    def turan_density_2(self) -> Fraction:
        return turan_density(self.value)

    def to_dict(self, timings: bool = False) -> dict:
        """Fixed field order; timings are opt-in so reports stay reproducible."""
        out = {
            "graph": self.graph,
            "chromatic_number": self.chromatic_number,
            "method": self.method,
            "hom_prime": self.hom_prime.graph6_list(),
            "value": self.value,
            "turan_density_2": str(self.turan_density_2),
            "witness": None
            if self.witness is None
            else {"level": self.witness[0], "graph6": self.witness[1]},
            "canonical_witness": self.canonical_witness,
            "dataset_provenance": [
                {"level": lv, "path": p, "count": c, "sha256": s}
                for lv, p, c, s in self.dataset_provenance
            ],
        }
        if timings:
            out["elapsed"] = {str(k): round(v, 6) for k, v in sorted(self.elapsed.items())}
        return out

    def to_json(self, timings: bool = False) -> str:
        return json.dumps(self.to_dict(timings), indent=2)


def is_ramsey_graph(f: Graph, s: int, t: int) -> bool:
    """True iff ``f`` has no ``K_s`` and no independent set of size ``t``."""
    return not has_clique(f, s) and not has_independent_set(f, t)


def enumerate_ramsey_graphs(
    s: int, t: int, n: int, max_graphs: int | None = 2_000_000
) -> GraphFamily:
    """All Ramsey(s,t,n)-graphs up to isomorphism, by one-vertex extension."""

    def accept(parent: Graph, nbrs: int, child: Graph) -> bool:
        # only sets through the new vertex can be new
        non_nbrs = parent.full_mask & ~nbrs
        return not has_clique(parent, s - 1, nbrs) and not has_independent_set(
            parent, t - 1, non_nbrs
        )

    if s < 1 or t < 1:
        raise ValueError("s and t must be positive")
    if n == 0:
        return GraphFamily([Graph(0, ())])
    if s == 1 or t == 1:
        return GraphFamily()
    levels = hereditary_levels(n, accept, max_graphs)
    return GraphFamily(levels[n])


def _avoiding_levels(fam: GraphFamily, n_cap: int):
    """Yield ``(N, red graphs on N vertices with no monochromatic member)``."""

    def avoids(red: Graph) -> bool:
        return not EdgeColoring(red).has_monochromatic(fam)

    def accept(parent: Graph, nbrs: int, child: Graph) -> bool:
        return avoids(child)

    level = [Graph(0, ())] if avoids(Graph(0, ())) else []
    yield 0, level
    for n in range(1, n_cap + 1):
        level = extend_level(level, accept)
        yield n, level


def family_ramsey_number(fam: GraphFamily, n_cap: int = 8) -> int | None:
    """Least ``N <= n_cap`` forcing a monochromatic member; ``None`` past the cap."""
    for n, level in _avoiding_levels(fam, n_cap):
        if not level:
            return n
    return None


def _small_ramsey(fam: GraphFamily, n_cap: int) -> tuple[int, Graph | None] | None:
    previous: list[Graph] = []
    for n, level in _avoiding_levels(fam, n_cap):
        if not level:
            witness = min(previous, key=graph6_encode) if previous else None
            return n, witness
        previous = level
    return None


def chromatic_ramsey_small(g: Graph, n_cap: int = 8) -> RamseyReport:
    """Chromatic Ramsey number by exhaustive search over colourings of ``K_N``.

    The witness is a red graph on ``value - 1`` vertices (smallest canonical
    graph6) whose colouring avoids every minimal image in both colours.
    """
    k = chromatic_number(g)
    if k < 2:
        raise GraphError("chromatic Ramsey numbers need a graph with at least one edge")
    start = time.perf_counter()
    hom = minimal_hom_images(g)
    found = _small_ramsey(hom, n_cap)
    if found is None:
        raise BudgetExceededError(f"no value up to N = {n_cap}")
    value, witness = found
    return RamseyReport(
        graph=graph6_str(canonical_form(g)),
        chromatic_number=k,
        hom_prime=hom,
        value=value,
        method="exhaustive",
        witness=None if witness is None else (value - 1, graph6_str(witness)),
        elapsed={value: time.perf_counter() - start},
    )


# ---------------------------------------------------------------------------
# catalogue scan


def _hits(fam: Sequence[Graph], f: Graph) -> bool:
    fc = complement(f)
    return any(is_subgraph(h, f) or is_subgraph(h, fc) for h in fam)


def _scan_chunk(args) -> list[int]:
    fam, graphs, offset, stop_early = args
    misses = []
    for i, f in enumerate(graphs):
        if not _hits(fam, f):
            misses.append(offset + i)
            if stop_early:
                break
    return misses


def _chunks(items: Sequence, size: int):
    for i in range(0, len(items), size):
        yield i, items[i:i + size]


def scan_level(
    fam: Sequence[Graph], graphs: Sequence[Graph], workers: int = 1, fast: bool = False,
    chunk_size: int = 2000,
) -> list[int]:
    """Indices of catalogue graphs avoiding ``fam`` in both colours, ascending.

    With ``fast`` the scan may stop after the first miss it sees.  Otherwise
    the result is the full set of misses and does not depend on ``workers``.
    """
    fam = list(fam)
    if workers <= 1 or len(graphs) <= chunk_size:
        return _scan_chunk((fam, list(graphs), 0, fast))
    misses: list[int] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        jobs = ((fam, list(chunk), off, fast) for off, chunk in _chunks(graphs, chunk_size))
        for found in pool.map(_scan_chunk, jobs):
            misses.extend(found)
            if fast and misses:
                break
    return sorted(misses)


def _recheck_witness(f: Graph, fam: Sequence[Graph], k: int) -> None:
    if not is_ramsey_graph(f, k, k):
        raise DatasetError(f"witness {graph6_str(f)} is not a Ramsey({k},{k}) graph")
    fc = complement(f)
    for h in fam:
        if h.n <= BRUTE_FORCE_RECHECK_MAX and (
            brute_force_is_subgraph(h, f) or brute_force_is_subgraph(h, fc)
        ):
            raise AssertionError(f"witness {graph6_str(f)} contains {graph6_str(h)}")


def algorithm1(
    g: Graph,
    hom_prime: GraphFamily | None,
    lists: Mapping[int, Sequence[Graph]],
    mode: str = "canonical",
    workers: int = 1,
    trusted_levels: Sequence[int] = (),
    provenance: Sequence[tuple[int, str, int, str]] = (),
) -> RamseyReport:
    """Chromatic Ramsey number from complete catalogues of Ramsey(k,k)-graphs.

    ``k = chi(g)``.  Levels run from ``R(k) - 1`` down to ``(k-1)^2 + 1``;
    the first level holding a graph with no copy of any image other than
    ``K_k`` in it or its complement gives the value ``level + 1``.  When no
    level has one the value is the lower bound ``(k-1)^2 + 1``.

    Each catalogue entry is checked to be a Ramsey(k,k)-graph of the right
    order unless its level is listed in ``trusted_levels``.
    """
    if mode not in ("canonical", "fast"):
        raise ValueError(f"unknown mode {mode!r}")
    k = chromatic_number(g)
    if k not in DIAGONAL_RAMSEY or k < 2:
        raise GraphError(f"chromatic number {k} is out of scope (supported: 2, 3, 4)")
    if hom_prime is None:
        hom_prime = minimal_hom_images(g)
    kk = complete_graph(k)
    fam = [h for h in hom_prime if not is_isomorphic(h, kk)]
    top = DIAGONAL_RAMSEY[k] - 1
    bottom = (k - 1) ** 2 + 1
    trusted = set(trusted_levels)

    value = bottom
    witness = None
    elapsed: dict[int, float] = {}
    for level in range(top, bottom - 1, -1):
        if level not in lists:
            raise DatasetError(f"missing catalogue for level {level}")
        graphs = lists[level]
        start = time.perf_counter()
        if level not in trusted:
            validate_catalogue(graphs, level, k)
        misses = scan_level(fam, graphs, workers, fast=(mode == "fast"))
        elapsed[level] = time.perf_counter() - start
        if misses:
            f = min((canonical_form(graphs[i]) for i in misses), key=graph6_encode)
            _recheck_witness(f, fam, k)
            value = level + 1
            witness = (level, graph6_str(f))
            break
    return RamseyReport(
        graph=graph6_str(canonical_form(g)),
        chromatic_number=k,
        hom_prime=hom_prime,
        value=value,
        method="catalogue",
        witness=witness,
        canonical_witness=(mode == "canonical"),
        dataset_provenance=list(provenance),
        elapsed=elapsed,
    )


def in_house_lists(k: int) -> dict[int, list[Graph]]:
    """Catalogues for the levels ``algorithm1`` scans, generated here (``k <= 3``)."""
    if k not in (2, 3):
        raise ValueError("in-house catalogues only for k = 2 or 3; k = 4 needs ingested lists")
    top = DIAGONAL_RAMSEY[k] - 1
    bottom = (k - 1) ** 2 + 1
    return {n: list(enumerate_ramsey_graphs(k, k, n)) for n in range(bottom, top + 1)}


# ---------------------------------------------------------------------------
# catalogue ingestion


def validate_catalogue(graphs: Sequence[Graph], level: int, k: int) -> None:
    for pos, f in enumerate(graphs, 1):
        if f.n != level:
            raise DatasetError(f"level {level} entry {pos} has {f.n} vertices: {graph6_str(f)}")
        if not is_ramsey_graph(f, k, k):
            raise DatasetError(
                f"level {level} entry {pos} is not Ramsey({k},{k}): {graph6_str(f)} "
                f"(omega={clique_number(f)}, alpha={independence_number(f)})"
            )


@dataclass
class LevelSummary:
    level: int
    path: str
    count: int
    sha256: str
    validated: bool  # False when accepted from the cache


def _sha256(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def read_cache(data_dir: Path) -> dict[int, tuple[int, str]]:
    path = data_dir / CACHE_NAME
    out: dict[int, tuple[int, str]] = {}
    if not path.exists():
        return out
    for line in path.read_text().splitlines():
        parts = line.split()
        if len(parts) == 3 and parts[0].isdigit() and parts[1].isdigit():
            out[int(parts[0])] = (int(parts[1]), parts[2])
    return out


def write_cache(data_dir: Path, entries: dict[int, tuple[int, str]]) -> None:
    lines = [f"{lv} {c} {s}" for lv, (c, s) in sorted(entries.items())]
    try:
        (data_dir / CACHE_NAME).write_text("\n".join(lines) + "\n")
    except OSError:
        pass  # read-only dataset directories are fine, validation just repeats


def load_lists(
    data_dir: str | os.PathLike,
    levels: Sequence[int],
    k: int = 4,
    pattern: str = DEFAULT_PATTERN,
    use_cache: bool = True,
) -> tuple[dict[int, list[Graph]], list[LevelSummary]]:
    """Read and validate one graph6 file per level.

    A file whose checksum and count match the sidecar cache skips the
    clique/independence validation; anything else is validated in full and
    the cache is rewritten.
    """
    root = Path(data_dir)
    if not root.is_dir():
        raise DatasetError(f"dataset directory {root} does not exist")
    cache = read_cache(root) if use_cache else {}
    lists: dict[int, list[Graph]] = {}
    summaries = []
    for level in levels:
        path = root / pattern.format(s=k, n=level)
        if not path.exists():
            raise DatasetError(f"missing catalogue file {path}")
        digest = _sha256(path)
        try:
            graphs = [g for _, g in read_file(path)]
        except Graph6Error as exc:
            raise DatasetError(str(exc)) from exc
        cached = cache.get(level) == (len(graphs), digest)
        if not cached:
            validate_catalogue(graphs, level, k)
            cache[level] = (len(graphs), digest)
        lists[level] = graphs
        summaries.append(LevelSummary(level, str(path), len(graphs), digest, not cached))
    write_cache(root, cache)
    return lists, summaries


def catalogue_levels(k: int) -> list[int]:
    return list(range((k - 1) ** 2 + 1, DIAGONAL_RAMSEY[k]))
