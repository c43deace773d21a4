"""The graph P_n^d: vertices {0,...,n}^d with edges between coordinate
vectors differing by one in a single component.

Provides adjacency, an edge stream, the left-to-right lexicographic
labeling, loading of explicit labeling files, and exact edge-scan
evaluation of any labeling's bandwidth.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .hales import Vertex, hales_enumerate, hales_rank

DEFAULT_SCAN_BUDGET = 1_000_000


class BudgetExceededError(Exception):
    """An operation would enumerate more vertices/lines than its budget allows."""

    def __init__(self, message: str, budget: int, required: int):
        super().__init__(message)
        self.budget = budget
        self.required = required


@dataclass(frozen=True)
class GridParams:
    """The pair (n, d): paths with n edges, d-fold product."""

    n: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")

    @property
    def vertex_count(self) -> int:
        return (self.n + 1) ** self.d

    @property
    def edge_count(self) -> int:
        return self.d * self.n * (self.n + 1) ** (self.d - 1)


@dataclass(frozen=True)
class LabelingSpec:
    """Which bijection V -> {1,...,(n+1)^d} to evaluate."""

    kind: str  # "hales" | "lex" | "file"
    path: str | None = None

    @classmethod
    def hales(cls) -> "LabelingSpec":
        return cls("hales")

    @classmethod
    def lex(cls) -> "LabelingSpec":
        return cls("lex")

    @classmethod
    def from_file(cls, path: str) -> "LabelingSpec":
        return cls("file", path)


@dataclass(frozen=True)
class BandwidthReport:
    """A bandwidth value, a witness edge achieving it, and how it was obtained."""

    value: int
    witness: tuple[Vertex, Vertex] | None
    method: str  # "formula" | "edge-scan" | "brute-force" | "bound"


def weight(u: Vertex) -> int:
    """Sum of the coordinates."""
    return sum(u)


def parse_vertex(text: str) -> Vertex:
    """Parse the comma-separated text form, e.g. "1,0,2"."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad vertex {text!r}: {exc}") from None


def format_vertex(u: Vertex) -> str:
    return ",".join(str(c) for c in u)


def neighbors(u: Vertex, params: GridParams) -> list[Vertex]:
    """All vertices adjacent to u: one coordinate moved by +-1, kept in range."""
    n, d = params.n, params.d
    if len(u) != d:
        raise ValueError(f"vertex has {len(u)} coordinates, expected {d}")
    out = []
    for p, c in enumerate(u):
        if c < 0 or c > n:
            raise ValueError(f"coordinate {c} outside [0, {n}] in {u}")
        if c > 0:
            out.append(u[:p] + (c - 1,) + u[p + 1 :])
        if c < n:
            out.append(u[:p] + (c + 1,) + u[p + 1 :])
    return out


def edges(params: GridParams) -> Iterator[tuple[Vertex, Vertex]]:
    """Each undirected edge exactly once, lighter (Hales-smaller) endpoint first."""
    n, d = params.n, params.d
    for u in product(range(n + 1), repeat=d):
        for p, c in enumerate(u):
            if c < n:
                yield u, u[:p] + (c + 1,) + u[p + 1 :]


def lex_rank(u: Vertex, params: GridParams) -> int:
    """Base-(n+1) value of the coordinates, leftmost most significant."""
    n, d = params.n, params.d
    if len(u) != d:
        raise ValueError(f"vertex has {len(u)} coordinates, expected {d}")
    r = 0
    for c in u:
        if c < 0 or c > n:
            raise ValueError(f"coordinate {c} outside [0, {n}] in {u}")
        r = r * (n + 1) + c
    return r


def lex_unrank(r: int, params: GridParams) -> Vertex:
    n, d = params.n, params.d
    if r < 0 or r >= params.vertex_count:
        raise ValueError(f"rank {r} outside [0, {params.vertex_count - 1}]")
    coords = [0] * d
    for p in range(d - 1, -1, -1):
        r, coords[p] = divmod(r, n + 1)
    return tuple(coords)


def load_labeling_file(path: str, params: GridParams) -> dict[Vertex, int]:
    """Read an explicit labeling: one `<coords><TAB><label>` line per vertex.

    Lines starting with '#' and blank lines are ignored.  The mapping must be
    a bijection onto {1,...,(n+1)^d}; duplicates or gaps raise ValueError.
    """
    mapping: dict[Vertex, int] = {}
    seen_labels: set[int] = set()
    total = params.vertex_count
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected '<coords>\\t<label>'")
            u = parse_vertex(parts[0])
            if len(u) != params.d or any(c < 0 or c > params.n for c in u):
                raise ValueError(f"{path}:{lineno}: vertex {parts[0]} not in the grid")
            label = int(parts[1])
            if label < 1 or label > total:
                raise ValueError(f"{path}:{lineno}: label {label} outside 1..{total}")
            if u in mapping:
                raise ValueError(f"{path}:{lineno}: duplicate vertex {parts[0]}")
            if label in seen_labels:
                raise ValueError(f"{path}:{lineno}: duplicate label {label}")
            mapping[u] = label
            seen_labels.add(label)
    if len(mapping) != total:
        raise ValueError(
            f"{path}: {len(mapping)} vertices labeled, expected {total} (not a bijection)"
        )
    return mapping


def _labels_by_lex_index(spec: LabelingSpec, params: GridParams) -> list[int]:
    """The labeling as an array indexed by lex rank."""
    n, d = params.n, params.d
    total = params.vertex_count
    if spec.kind == "lex":
        return list(range(1, total + 1))
    if spec.kind == "hales":
        labels = [0] * total
        label = 1
        for u in hales_enumerate(n, d):
            labels[lex_rank(u, params)] = label
            label += 1
        return labels
    if spec.kind == "file":
        if spec.path is None:
            raise ValueError("file labeling requires a path")
        mapping = load_labeling_file(spec.path, params)
        labels = [0] * total
        for u, label in mapping.items():
            labels[lex_rank(u, params)] = label
        return labels
    raise ValueError(f"unknown labeling kind {spec.kind!r}")


def _coerce_spec(spec: LabelingSpec | str) -> LabelingSpec:
    if isinstance(spec, str):
        if spec not in ("hales", "lex"):
            raise ValueError(f"unknown labeling {spec!r} (use 'hales' or 'lex')")
        return LabelingSpec(spec)
    return spec


def labeling_bandwidth(
    spec: LabelingSpec | str,
    params: GridParams,
    max_vertices: int = DEFAULT_SCAN_BUDGET,
) -> BandwidthReport:
    """Exact max |f(u) - f(v)| over all edges, with a deterministic witness.

    The witness is the maximizing edge whose (hales rank, hales rank) pair is
    smallest, independent of scan order.  Grids larger than max_vertices are
    refused outright rather than scanned for hours.
    """
    spec = _coerce_spec(spec)
    n, d = params.n, params.d
    total = params.vertex_count
    if total > max_vertices:
        raise BudgetExceededError(
            f"P_{n}^{d} has {total} vertices; too large for edge scan "
            f"(budget {max_vertices} vertices)",
            budget=max_vertices,
            required=total,
        )
    labels = _labels_by_lex_index(spec, params)

    strides = [(n + 1) ** (d - 1 - p) for p in range(d)]
    best = -1
    best_pair: tuple[int, int] | None = None
    best_edge: tuple[Vertex, Vertex] | None = None
    for i, u in enumerate(product(range(n + 1), repeat=d)):
        lu = labels[i]
        for p, c in enumerate(u):
            if c < n:
                j = i + strides[p]
                diff = lu - labels[j]
                if diff < 0:
                    diff = -diff
                if diff < best:
                    continue
                v = u[:p] + (c + 1,) + u[p + 1 :]
                # u has the smaller weight, hence the smaller Hales rank
                pair = (hales_rank(u, n, d), hales_rank(v, n, d))
                if diff > best or best_pair is None or pair < best_pair:
                    best = diff
                    best_pair = pair
                    best_edge = (u, v)
    return BandwidthReport(value=best, witness=best_edge, method="edge-scan")
