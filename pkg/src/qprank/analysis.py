"""Derived measurements on importance vectors.

Covers localization (inverse participation ratio and its size scaling),
stability under the damping parameter (pairwise overlap and max-difference
grids), power-law structure of sorted rankings, rank-order correlation, the
iterated hub-removal experiment, and seeded ensemble aggregation.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError
from .google import DEFAULT_MAX_ITER, DEFAULT_TOL, classical_pagerank, google_from_graph
from .graphs import DirectedGraph, GeneratorSpec, generate, remove_node
from .walk import DEFAULT_HORIZON, SzegedyWalk

MODES = ("quantum", "classical")

# Classification thresholds for the IPR size-scaling slope.
LOCALIZED_MAX_ABS_SLOPE = 0.25
DELOCALIZED_MAX_SLOPE = -0.6


def rank_list(p: np.ndarray) -> list[tuple[int, float]]:
    """Nodes sorted by importance descending; ties break by ascending node id."""
    order = np.lexsort((np.arange(len(p)), -np.asarray(p)))
    return [(int(i), float(p[i])) for i in order]


def ranking_order(p: np.ndarray) -> list[int]:
    return [node for node, _ in rank_list(p)]


def node_ranks(p: np.ndarray) -> np.ndarray:
    """1-based rank of each node under rank_list ordering."""
    ranks = np.empty(len(p), dtype=np.int64)
    for position, node in enumerate(ranking_order(p), start=1):
        ranks[node] = position
    return ranks


def importance_vector(
    g: DirectedGraph,
    mode: str,
    alpha: float = 0.85,
    horizon: int = DEFAULT_HORIZON,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> np.ndarray:
    """One ranking vector for a graph: time-averaged walk or stationary distribution."""
    if mode not in MODES:
        raise ParameterError(f"unknown mode {mode!r}, expected one of {MODES}")
    gm = google_from_graph(g, alpha)
    if mode == "quantum":
        return SzegedyWalk(gm).average(horizon)
    return classical_pagerank(gm, tol=tol, max_iter=max_iter)


# ---------------------------------------------------------------------------
# Localization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IprSample:
    """Inverse participation ratio of one distribution: xi = sum_i p_i**(2r)."""

    n: int
    xi: float
    r: int


def ipr(p: np.ndarray, r: int = 1) -> IprSample:
    if r < 1 or int(r) != r:
        raise ParameterError("order parameter r must be a positive integer")
    p = np.asarray(p, dtype=np.float64)
    if abs(p.sum() - 1.0) > 1e-6:
        raise ParameterError("input must be a normalized distribution")
    return IprSample(n=len(p), xi=float((p ** (2 * r)).sum()), r=int(r))


@dataclass(frozen=True)
class IprScaling:
    slope: float
    intercept: float
    label: str  # "localized" | "delocalized" | "intermediate"


def classify_slope(slope: float) -> str:
    if abs(slope) <= LOCALIZED_MAX_ABS_SLOPE:
        return "localized"
    if slope <= DELOCALIZED_MAX_SLOPE:
        return "delocalized"
    return "intermediate"


def ipr_scaling(samples: list[IprSample]) -> IprScaling:
    """Least-squares fit of log xi against log n across graph sizes.

    A flat slope means the distribution stays concentrated as the graph
    grows (localized); slope near 1 - 2r is the uniform limit (delocalized).
    """
    if len({s.n for s in samples}) < 2:
        raise ParameterError("need samples at >= 2 distinct graph sizes")
    x = np.log([s.n for s in samples])
    y = np.log([s.xi for s in samples])
    slope, intercept = np.polyfit(x, y, 1)
    return IprScaling(float(slope), float(intercept), classify_slope(float(slope)))


# ---------------------------------------------------------------------------
# Damping stability
# ---------------------------------------------------------------------------


def classical_fidelity(p: np.ndarray, q: np.ndarray) -> float:
    """Bhattacharyya overlap sum_j sqrt(p_j q_j); 1 iff the vectors coincide."""
    p, q = np.asarray(p), np.asarray(q)
    if p.shape != q.shape:
        raise ParameterError("vectors must have the same length")
    return float(np.sqrt(p * q).sum())


def qpr_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Largest per-node importance difference, max_i |p_i - q_i|."""
    p, q = np.asarray(p), np.asarray(q)
    if p.shape != q.shape:
        raise ParameterError("vectors must have the same length")
    return float(np.abs(p - q).max())


@dataclass(frozen=True)
class StabilityGrid:
    """Pairwise overlap/difference of rankings across damping values."""

    alphas: np.ndarray
    fidelity: np.ndarray
    distance: np.ndarray


def coarse_alpha_grid(points: int = 20) -> np.ndarray:
    """Evenly spaced damping values spanning 0.01 to 0.98 inclusive."""
    return np.linspace(0.01, 0.98, points)


def pairwise_stability(vectors: list[np.ndarray], alphas) -> StabilityGrid:
    k = len(vectors)
    fid = np.empty((k, k))
    dist = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            fid[i, j] = fid[j, i] = classical_fidelity(vectors[i], vectors[j])
            dist[i, j] = dist[j, i] = qpr_distance(vectors[i], vectors[j])
    return StabilityGrid(np.asarray(alphas, dtype=np.float64), fid, dist)


def stability_grid(
    g: DirectedGraph,
    alphas,
    horizon: int = DEFAULT_HORIZON,
    mode: str = "quantum",
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> StabilityGrid:
    """Rank ``g`` at every damping value and compare all pairs."""
    for a in alphas:
        if not 0.0 < a < 1.0:
            raise ParameterError(f"damping alpha={a} outside (0, 1)")
    vectors = [
        importance_vector(g, mode, alpha=a, horizon=horizon, tol=tol, max_iter=max_iter)
        for a in alphas
    ]
    return pairwise_stability(vectors, alphas)


# ---------------------------------------------------------------------------
# Power-law structure of sorted rankings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PowerLawFit:
    """Least-squares line on (log rank index, log importance).

    beta is the negated slope of importance against 1-based rank index, c the
    fitted prefactor, residual the RMS of the log-log residuals.
    """

    beta: float
    c: float
    i_min: int
    i_max: int
    residual: float


def power_law_fit(
    ranks: list[tuple[int, float]], i_min: int = 1, i_max: int | None = None
) -> PowerLawFit:
    """Fit importance ~ c * index**(-beta) over rank indices [i_min, i_max].

    By default the fit ends just before the block of entries tied with the
    minimum importance (the degenerate tail of near-identical values); when
    every entry is tied, the full list is used.
    """
    values = np.array([imp for _, imp in ranks], dtype=np.float64)
    n = len(values)
    if n == 0:
        raise ParameterError("empty ranking")
    if i_min < 1:
        raise ParameterError("i_min must be >= 1")
    if i_max is None:
        tied = np.isclose(values, values[-1], rtol=1e-9, atol=0.0)
        first_tied = int(np.argmax(tied))
        i_max = first_tied if first_tied >= 1 else n
    if i_max > n or i_max < i_min:
        raise ParameterError(f"bad fit range [{i_min}, {i_max}] for {n} entries")
    window = values[i_min - 1 : i_max]
    if window.min() <= 0.0:
        raise ParameterError("nonpositive importance inside the fit range")
    if len(window) < 2:
        raise ParameterError("fit range must contain at least 2 entries")
    x = np.log(np.arange(i_min, i_max + 1, dtype=np.float64))
    y = np.log(window)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return PowerLawFit(
        beta=float(-slope),
        c=float(np.exp(intercept)),
        i_min=i_min,
        i_max=i_max,
        residual=float(np.sqrt(np.mean(resid**2))),
    )


# ---------------------------------------------------------------------------
# Rank-order correlation and the hub-removal experiment
# ---------------------------------------------------------------------------


def kendall_coefficient(order_a, order_b) -> float:
    """Concordant-pair fraction of two orderings of one element set.

    1.0 when the orders agree, 0.0 when one is the exact reverse of the
    other. Equals (1 + tau) / 2 for the classic correlation tau.
    """
    a = list(order_a)
    b = list(order_b)
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        raise ParameterError("orderings must not contain duplicates")
    if len(a) != len(b) or set(a) != set(b):
        raise ParameterError("orderings must cover the same element set")
    k = len(a)
    if k < 2:
        return 1.0
    pos_b = {element: i for i, element in enumerate(b)}
    rb = np.array([pos_b[element] for element in a], dtype=np.int64)
    concordant = 0
    for i in range(k - 1):
        concordant += int((rb[i + 1 :] > rb[i]).sum())
    return concordant / (k * (k - 1) / 2)


@dataclass(frozen=True)
class AttackRun:
    """One iterated hub-removal run: removed original ids, K after each removal."""

    removed: tuple[int, ...]
    kendall: tuple[float, ...]


def attack_experiment(
    g: DirectedGraph,
    n_max: int,
    mode: str = "quantum",
    alpha: float = 0.85,
    horizon: int = DEFAULT_HORIZON,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> AttackRun:
    """Repeatedly knock out the currently most important node.

    Each round removes the top node of the current ranking (ties go to the
    lowest id), re-ranks the reduced graph, and scores the new ordering
    against the original ordering restricted to the survivors. Node identity
    is tracked through the removal re-indexing, so all reported ids and
    comparisons refer to the original graph's labels.
    """
    if not 0 <= n_max < g.n:
        raise ParameterError(f"removal count {n_max} must lie in [0, n)")
    kwargs = dict(alpha=alpha, horizon=horizon, tol=tol, max_iter=max_iter)
    original_order = ranking_order(importance_vector(g, mode, **kwargs))
    current_graph = g
    to_original = list(range(g.n))
    current_order = list(original_order)
    removed: list[int] = []
    scores: list[float] = []
    for _ in range(n_max):
        top = current_order[0]
        removed.append(to_original[top])
        current_graph, _ = remove_node(current_graph, top)
        del to_original[top]
        current_order = ranking_order(importance_vector(current_graph, mode, **kwargs))
        reduced_as_original = [to_original[i] for i in current_order]
        surviving = set(to_original)
        restricted = [v for v in original_order if v in surviving]
        scores.append(kendall_coefficient(reduced_as_original, restricted))
    return AttackRun(tuple(removed), tuple(scores))


# ---------------------------------------------------------------------------
# Seeded ensembles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnsembleReport:
    """Per-metric mean and sample standard deviation over seeded runs."""

    count: int
    failures: int
    failure_messages: tuple[str, ...]
    means: dict[str, float]
    stds: dict[str, float]


def run_ensemble_item(args) -> tuple[str, object]:
    """Build one seeded graph and apply the experiment; failures are reported,
    not raised, so one bad draw cannot sink the ensemble. Top-level so that
    process pools can pickle it."""
    spec, experiment = args
    try:
        return "ok", experiment(generate(spec))
    except Exception as exc:  # any per-run failure becomes a report entry
        return "fail", f"seed {spec.seed}: {exc}"


def aggregate_metrics(metric_dicts: list[dict[str, float]]) -> tuple[dict, dict]:
    keys: list[str] = []
    for metrics in metric_dicts:
        for key in metrics:
            if key not in keys:
                keys.append(key)
    means: dict[str, float] = {}
    stds: dict[str, float] = {}
    for key in keys:
        vals = np.array([m[key] for m in metric_dicts if key in m], dtype=np.float64)
        means[key] = float(vals.mean())
        stds[key] = float(vals.std(ddof=1)) if len(vals) >= 2 else 0.0
    return means, stds


def ensemble_run(spec: GeneratorSpec, count: int, experiment, map_fn=map) -> EnsembleReport:
    """Apply ``experiment(graph)`` to ``count`` graphs seeded spec.seed + index.

    ``experiment`` returns a flat dict of named metrics. Aggregation is a
    deterministic reduction in seed order, so reports do not depend on the
    mapper's execution schedule (``map_fn`` may be a process pool's map).
    """
    if count < 1:
        raise ParameterError("ensemble count must be >= 1")
    items = [(replace(spec, seed=spec.seed + i), experiment) for i in range(count)]
    outcomes = list(map_fn(run_ensemble_item, items))
    metric_dicts = [payload for status, payload in outcomes if status == "ok"]
    failures = tuple(payload for status, payload in outcomes if status == "fail")
    if not metric_dicts:
        raise ParameterError(f"all {count} ensemble runs failed; first: {failures[0]}")
    means, stds = aggregate_metrics(metric_dicts)
    return EnsembleReport(
        count=count,
        failures=len(failures),
        failure_messages=failures,
        means=means,
        stds=stds,
    )


def attack_metrics(
    g: DirectedGraph,
    removals: int,
    modes: tuple[str, ...] = ("quantum", "classical"),
    alpha: float = 0.85,
    horizon: int = DEFAULT_HORIZON,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict[str, float]:
    """Flat metric dict of one hub-removal run per mode, for ensemble aggregation."""
    out: dict[str, float] = {}
    for mode in modes:
        run = attack_experiment(
            g, removals, mode=mode, alpha=alpha, horizon=horizon, tol=tol, max_iter=max_iter
        )
        for i, k in enumerate(run.kendall, start=1):
            out[f"kendall_{mode}_{i}"] = k
    return out


def powerlaw_metrics(
    g: DirectedGraph,
    modes: tuple[str, ...] = ("quantum", "classical"),
    alpha: float = 0.85,
    horizon: int = DEFAULT_HORIZON,
    i_min: int = 1,
    i_max: int | None = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict[str, float]:
    """Flat metric dict of per-mode power-law fits, for ensemble aggregation."""
    out: dict[str, float] = {}
    for mode in modes:
        p = importance_vector(g, mode, alpha=alpha, horizon=horizon, tol=tol, max_iter=max_iter)
        fit = power_law_fit(rank_list(p), i_min=i_min, i_max=i_max)
        out[f"beta_{mode}"] = fit.beta
        out[f"c_{mode}"] = fit.c
        out[f"residual_{mode}"] = fit.residual
    return out


def degeneracy_resolution(p: np.ndarray, resolution: float = 1e-9) -> int:
    """Distinct importance values in the low half of the ranking.

    Values are binned at the given absolute resolution; a larger count means
    the ranking separates the unimportant nodes instead of lumping them.
    """
    ranks = rank_list(p)
    bottom = [imp for _, imp in ranks[len(ranks) - len(ranks) // 2 :]]
    if not bottom:
        return 0
    return len(np.unique(np.round(np.array(bottom) / resolution).astype(np.int64)))
