"""Directed graphs: construction, seeded generators, file formats, mutation.

All randomness is drawn from numpy's PCG64 bit generator through
``Generator.random()`` only, so a fixed seed reproduces identical graphs
across runs, platforms, and numpy releases. Seeds are plain 64-bit
integers; ensemble drivers derive per-run seeds as ``base_seed + index``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError, ParseError

FAMILIES = ("sf", "er", "hier3", "hier2")


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable directed graph on the dense node set 0..n-1.

    Edges are a set of ordered (source, target) pairs; there are no multi
    edges. Self-loops are rejected unless ``allow_self_loops`` is set at
    construction (file loaders set it, since real datasets contain them).
    """

    n: int
    edges: frozenset
    allow_self_loops: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.n < 0:
            raise ParameterError("node count must be >= 0")
        for s, t in self.edges:
            if not (0 <= s < self.n and 0 <= t < self.n):
                raise ParameterError(f"edge ({s}, {t}) out of range for n={self.n}")
            if s == t and not self.allow_self_loops:
                raise ParameterError(f"self-loop at node {s} not allowed here")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges sorted by (source, target); the canonical serialization order."""
        return sorted(self.edges)

    def in_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for _, t in self.edges:
            deg[t] += 1
        return deg

    def out_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for s, _ in self.edges:
            deg[s] += 1
        return deg


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters of one seeded graph construction.

    family selects the model: "sf" (directed preferential attachment),
    "er" (independent directed edges), "hier3" (ternary hierarchy, 3**n_gen
    nodes), "hier2" (outerplanar hierarchy, 2**(n_gen+1) nodes). Only the
    fields relevant to the chosen family are read.
    """

    family: str
    n: int = 0
    p: float = 0.125
    sf_alpha: float = 0.41
    sf_beta: float = 0.54
    sf_gamma: float = 0.05
    sf_delta_in: float = 0.2
    sf_delta_out: float = 0.0
    n_gen: int = 1
    seed: int = 0
    allow_self_loops: bool = False

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.family == "sf":
            probs = (self.sf_alpha, self.sf_beta, self.sf_gamma)
            if min(probs) < 0 or abs(sum(probs) - 1.0) > 1e-9:
                raise ParameterError("sf move probabilities must be nonnegative and sum to 1")
            if self.sf_delta_in < 0 or self.sf_delta_out < 0:
                raise ParameterError("sf degree offsets must be nonnegative")
        if self.family == "er" and not 0.0 <= self.p <= 1.0:
            raise ParameterError(f"edge probability p={self.p} outside [0, 1]")
        if self.family in ("hier3", "hier2") and self.n_gen < 1:
            raise ParameterError("generation index must be >= 1")


def generate(spec: GeneratorSpec) -> DirectedGraph:
    """Build the graph described by ``spec``."""
    if spec.family == "sf":
        return gen_scale_free(
            spec.n,
            alpha=spec.sf_alpha,
            beta=spec.sf_beta,
            gamma=spec.sf_gamma,
            delta_in=spec.sf_delta_in,
            delta_out=spec.sf_delta_out,
            seed=spec.seed,
            allow_self_loops=spec.allow_self_loops,
        )
    if spec.family == "er":
        return gen_erdos_renyi(spec.n, spec.p, seed=spec.seed)
    if spec.family == "hier3":
        return gen_hierarchical_ternary(spec.n_gen)
    return gen_hierarchical_outerplanar(spec.n_gen)


def _preferential_pick(rng: np.random.Generator, degrees: np.ndarray, offset: float, total: float) -> int:
    # P(i) proportional to degrees[i] + offset; total = degrees.sum() + offset*len
    r = rng.random() * total
    idx = int(np.searchsorted(np.cumsum(degrees + offset), r, side="right"))
    return min(idx, len(degrees) - 1)


def gen_scale_free(
    n: int,
    *,
    alpha: float = 0.41,
    beta: float = 0.54,
    gamma: float = 0.05,
    delta_in: float = 0.2,
    delta_out: float = 0.0,
    seed: int = 0,
    allow_self_loops: bool = False,
) -> DirectedGraph:
    """Grow a directed graph by degree-preferential attachment.

    Starting from the 3-cycle 0 -> 1 -> 2 -> 0, each iteration performs one
    of three moves: with probability ``alpha`` add a new node with an edge to
    an existing node chosen proportionally to in-degree + ``delta_in``; with
    probability ``beta`` add an edge between two existing nodes, the source
    chosen by out-degree + ``delta_out`` and the target by in-degree; with
    probability ``gamma`` add a new node receiving an edge from an existing
    node chosen by out-degree. Growth stops when ``n`` nodes exist. Repeat
    edges count toward degrees during growth but collapse in the result;
    self-loops (possible in the middle move) are dropped unless flagged.
    """
    if n < 3:
        raise ParameterError("scale-free growth needs n >= 3 (3-node seed cycle)")
    probs = (alpha, beta, gamma)
    if min(probs) < 0 or abs(sum(probs) - 1.0) > 1e-9:
        raise ParameterError("move probabilities must be nonnegative and sum to 1")
    if delta_in < 0 or delta_out < 0:
        raise ParameterError("degree offsets must be nonnegative")
    if n > 3 and alpha + gamma <= 0:
        raise ParameterError("alpha + gamma must be positive for the graph to grow")

    rng = np.random.default_rng(seed)
    in_deg = np.zeros(n, dtype=np.float64)
    out_deg = np.zeros(n, dtype=np.float64)
    multi_edges = [(0, 1), (1, 2), (2, 0)]
    for s, t in multi_edges:
        out_deg[s] += 1
        in_deg[t] += 1
    num_nodes = 3
    num_edges = 3

    while num_nodes < n:
        r = rng.random()
        if r < alpha:
            w = _preferential_pick(rng, in_deg[:num_nodes], delta_in, num_edges + delta_in * num_nodes)
            v = num_nodes
            num_nodes += 1
        elif r < alpha + beta:
            v = _preferential_pick(rng, out_deg[:num_nodes], delta_out, num_edges + delta_out * num_nodes)
            w = _preferential_pick(rng, in_deg[:num_nodes], delta_in, num_edges + delta_in * num_nodes)
        else:
            v = _preferential_pick(rng, out_deg[:num_nodes], delta_out, num_edges + delta_out * num_nodes)
            w = num_nodes
            num_nodes += 1
        multi_edges.append((v, w))
        out_deg[v] += 1
        in_deg[w] += 1
        num_edges += 1

    edges = {(s, t) for s, t in multi_edges if s != t or allow_self_loops}
    return DirectedGraph(n, frozenset(edges), allow_self_loops)


def gen_erdos_renyi(n: int, p: float, seed: int = 0) -> DirectedGraph:
    """Each ordered pair (i, j), i != j, is an edge independently with probability p."""
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"edge probability p={p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    draws = rng.random((n, n))
    mask = draws < p
    np.fill_diagonal(mask, False)
    edges = {(int(s), int(t)) for s, t in zip(*np.nonzero(mask))}
    return DirectedGraph(n, frozenset(edges))


def gen_hierarchical_ternary(n_gen: int) -> DirectedGraph:
    """Deterministic ternary hierarchy with 3**n_gen nodes, root at node 0.

    Generation 1 is the directed 3-cycle 0 -> 1 -> 2 -> 0. Generation g
    relabels three copies A, B, C of generation g-1 into consecutive id
    blocks; the root of copy A stays the global root, the three copy roots
    are joined in a directed 3-cycle, and every non-root node of copies B
    and C gains a directed edge to the global root.
    """
    if n_gen not in (1, 2, 3, 4):
        raise ParameterError("ternary hierarchy supports generations 1..4")
    edges = {(0, 1), (1, 2), (2, 0)}
    size = 3
    for _ in range(n_gen - 1):
        copies = set(edges)
        copies |= {(s + size, t + size) for s, t in edges}
        copies |= {(s + 2 * size, t + 2 * size) for s, t in edges}
        copies |= {(0, size), (size, 2 * size), (2 * size, 0)}
        copies |= {(size + k, 0) for k in range(1, size)}
        copies |= {(2 * size + k, 0) for k in range(1, size)}
        edges = copies
        size *= 3
    return DirectedGraph(size, frozenset(edges))


def gen_hierarchical_outerplanar(n_gen: int) -> DirectedGraph:
    """Deterministic outerplanar hierarchy with 2**(n_gen+1) nodes.

    The recursion bottoms out at the single edge 0 -> 1. Each generation
    doubles the previous one: copy B is relabeled by +size and chained into
    copy A with two edges from the newer copy to the older, B.head -> A.tail
    and B.tail -> A.head. With nodes laid out in id order on a circle every
    edge is a non-crossing chord, so all vertices stay on the outer face.
    """
    if not 1 <= n_gen <= 6:
        raise ParameterError("outerplanar hierarchy supports generations 1..6")
    edges = {(0, 1)}
    size = 2
    for _ in range(n_gen):
        doubled = set(edges)
        doubled |= {(s + size, t + size) for s, t in edges}
        doubled |= {(size, size - 1), (2 * size - 1, 0)}
        edges = doubled
        size *= 2
    return DirectedGraph(size, frozenset(edges))


def remove_node(g: DirectedGraph, v: int) -> tuple[DirectedGraph, dict[int, int]]:
    """Drop node v with all incident edges; survivors compact to 0..n-2.

    Re-indexing preserves relative order (old id -> old id, or old id - 1
    past the removed node). Returns the reduced graph and the old-to-new map.
    """
    if not 0 <= v < g.n:
        raise ParameterError(f"node {v} out of range for n={g.n}")
    remap = {old: (old if old < v else old - 1) for old in range(g.n) if old != v}
    edges = {(remap[s], remap[t]) for s, t in g.edges if s != v and t != v}
    return DirectedGraph(g.n - 1, frozenset(edges), g.allow_self_loops), remap


def degree_distribution(g: DirectedGraph) -> tuple[np.ndarray, np.ndarray]:
    """(in-degree histogram, out-degree histogram); entry k counts nodes of degree k."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.bincount(g.in_degrees()), np.bincount(g.out_degrees())


# ---------------------------------------------------------------------------
# Pajek .net format
#
# *Vertices N            (case-insensitive keywords, % starts a comment line)
# 1 "label"              (vertex lines are optional and skipped)
# *Arcs                  (directed; lines "src dst [weight ...]", 1-based)
# *Edges                 (undirected; each line expands to both directions)
# ---------------------------------------------------------------------------


def load_pajek(text: str) -> DirectedGraph:
    """Parse Pajek .net content into a directed graph.

    Endpoints are re-indexed from the file's 1-based ids to 0-based.
    Duplicate arcs collapse; self-loop arcs are kept as stated in the file.
    Malformed content raises ParseError carrying the offending line number.
    """
    n: int | None = None
    edges: set[tuple[int, int]] = set()
    section: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            keyword = line.split()[0].lower()
            if keyword == "*vertices":
                parts = line.split()
                if len(parts) < 2:
                    raise ParseError("*Vertices header missing a count", lineno)
                try:
                    n = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
                if n < 0:
                    raise ParseError(f"negative vertex count {n}", lineno)
                section = "vertices"
            elif keyword in ("*arcs", "*edges"):
                if n is None:
                    raise ParseError(f"{keyword} section before *Vertices", lineno)
                section = keyword[1:]
            else:
                raise ParseError(f"unsupported section {keyword!r}", lineno)
            continue
        if section == "vertices":
            continue
        if section in ("arcs", "edges"):
            parts = line.split()
            if len(parts) < 2:
                raise ParseError("expected two endpoints", lineno)
            try:
                s, t = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= s <= n and 1 <= t <= n):
                raise ParseError(f"endpoint out of range 1..{n} in {line!r}", lineno)
            edges.add((s - 1, t - 1))
            if section == "edges":
                edges.add((t - 1, s - 1))
            continue
        raise ParseError(f"content before any section: {line!r}", lineno)
    if n is None:
        raise ParseError("missing *Vertices header")
    return DirectedGraph(n, frozenset(edges), allow_self_loops=True)


def write_pajek(g: DirectedGraph) -> str:
    """Serialize to Pajek .net text; load_pajek(write_pajek(g)) reproduces g."""
    lines = [f"*Vertices {g.n}"]
    lines.extend(f'{i + 1} "{i + 1}"' for i in range(g.n))
    lines.append("*Arcs")
    lines.extend(f"{s + 1} {t + 1}" for s, t in g.edge_list())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Plain edge list: one "src dst" pair per line, 0-based, # starts a comment.
# The writer records the node count in a leading "# nodes N" comment so that
# trailing isolated nodes survive a round trip.
# ---------------------------------------------------------------------------


def load_edge_list(text: str) -> DirectedGraph:
    n_header: int | None = None
    edges: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "nodes" and parts[1].isdigit():
                n_header = int(parts[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'src dst', got {line!r}", lineno)
        try:
            s, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if s < 0 or t < 0:
            raise ParseError(f"negative endpoint in {line!r}", lineno)
        edges.add((s, t))
        max_id = max(max_id, s, t)
    n = n_header if n_header is not None else max_id + 1
    if max_id >= n:
        raise ParseError(f"endpoint {max_id} exceeds declared node count {n}")
    return DirectedGraph(n, frozenset(edges), allow_self_loops=True)


def write_edge_list(g: DirectedGraph) -> str:
    lines = [f"# nodes {g.n}"]
    lines.extend(f"{s} {t}" for s, t in g.edge_list())
    return "\n".join(lines) + "\n"
