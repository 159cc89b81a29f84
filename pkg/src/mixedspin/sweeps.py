"""Parameter sweeps, threshold location, and boundary curves.

Grid points that share couplings reuse one spectral decomposition (the
dominant cost is the O(D^3) eigensolve), and coupling groups may be computed
concurrently; results are always assembled in axis1-major order so output is
deterministic regardless of the degree of concurrency.

Thresholds are found by bisecting the indicator "negativity > EPS_NONZERO",
not the value itself, so boundaries driven by level crossings (where the
value jumps) are handled the same way as smooth zeros.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

import numpy as np

from .models import ModelSpec, build_model
from .negativity import pair_negativity
from .thermal import (SpectralDecomposition, diagonalize, ground_manifold,
                      internal_energy, log_partition, thermal_state)

# Negativity above this counts as "nonzero" when locating thresholds: far
# above eigensolver noise (~1e-12), far below physical values (~1e-2).
EPS_NONZERO = 1e-9

SWEEPABLE = ("temperature", "field_b", "j2")

# Canonical representative sites for each pair kind on the alternating ring.
PAIR_SITES = {
    "half_one": (0, 1),
    "half_half": (0, 2),
    "one_one": (1, 3),
}


@dataclass(frozen=True)
class PairSelector:
    label: str
    site_a: int
    site_b: int


def available_pair_kinds(n: int) -> tuple[str, ...]:
    """Pair kinds that exist on an n-site ring, in canonical column order."""
    if n == 2:
        return ("half_one",)
    if n == 3 or n == 4:
        kinds = ["half_one", "half_half"]
        if n == 4:
            kinds.append("one_one")
        return tuple(kinds)
    return ("half_one", "half_half", "one_one")


def resolve_pairs(n: int, kinds: Optional[Sequence[str]] = None) -> tuple[PairSelector, ...]:
    """Map symbolic pair kinds to canonical site pairs for an n-site ring."""
    if kinds is None:
        kinds = available_pair_kinds(n)
    selectors = []
    for kind in kinds:
        if kind not in PAIR_SITES:
            raise ValueError(f"unknown pair kind {kind!r}; expected one of {sorted(PAIR_SITES)}")
        a, b = PAIR_SITES[kind]
        if b >= n:
            raise ValueError(f"pair kind {kind!r} needs at least {b + 1} sites, ring has {n}")
        selectors.append(PairSelector(label=f"N_{kind}", site_a=a, site_b=b))
    return tuple(selectors)


@dataclass(frozen=True)
class Axis:
    parameter: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.parameter not in SWEEPABLE:
            raise ValueError(f"parameter must be one of {SWEEPABLE}, got {self.parameter!r}")
        if self.steps < 2:
            raise ValueError("axis needs at least 2 steps")
        if not self.lo < self.hi:
            raise ValueError("axis requires lo < hi")
        if self.parameter == "temperature" and self.lo <= 0.0:
            raise ValueError("temperature axis must stay positive")

    @property
    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepRequest:
    """Model template plus one or two sweep axes and the pair columns."""

    base: ModelSpec
    axis1: Axis
    axis2: Optional[Axis] = None
    pairs: tuple[PairSelector, ...] = ()
    temperature: Optional[float] = None    # fixed T when no axis sweeps it

    def __post_init__(self):
        if not self.pairs:
            object.__setattr__(self, "pairs", resolve_pairs(self.base.n_sites))
        axes = [self.axis1.parameter] + ([self.axis2.parameter] if self.axis2 else [])
        if len(set(axes)) != len(axes):
            raise ValueError("axes must sweep distinct parameters")
        if "temperature" not in axes:
            if self.temperature is None or self.temperature <= 0.0:
                raise ValueError("a positive fixed temperature is required when no axis sweeps it")
        # validate every coupling corner so errors surface before the run
        for ax in filter(None, (self.axis1, self.axis2)):
            if ax.parameter != "temperature":
                for v in (ax.lo, ax.hi):
                    replace(self.base, **{ax.parameter: v})


@dataclass(frozen=True)
class SweepResult:
    request: SweepRequest
    columns: tuple[str, ...]
    params: np.ndarray          # (npoints, naxes)
    negativities: np.ndarray    # (npoints, npairs)
    internal_energy: np.ndarray
    log_z: np.ndarray


@dataclass(frozen=True)
class ThresholdResult:
    parameter: str
    value: Optional[float]
    bracket: Optional[tuple[float, float]]
    status: str                 # "found" or "none-in-range"


class SpectralCache:
    """Thread-safe memo of spectral decompositions keyed by couplings."""

    def __init__(self):
        self._lock = threading.Lock()
        self._store: dict[tuple, SpectralDecomposition] = {}

    def get(self, spec: ModelSpec) -> SpectralDecomposition:
        key = spec.coupling_key
        with self._lock:
            hit = self._store.get(key)
        if hit is not None:
            return hit
        decomp = diagonalize(build_model(spec))
        with self._lock:
            return self._store.setdefault(key, decomp)

    def __len__(self) -> int:
        with self._lock:
            return len(self._store)


def evaluate_point(decomp: SpectralDecomposition, temperature: float,
                   pairs: Iterable[PairSelector]):
    """Negativities, internal energy, and log Z at one (couplings, T) point."""
    state = thermal_state(decomp, temperature)
    negs = [pair_negativity(state, (p.site_a, p.site_b)) for p in pairs]
    beta = 1.0 / temperature
    return (np.array(negs), internal_energy(decomp, beta),
            log_partition(decomp.eigenvalues, beta))


def ground_point(decomp: SpectralDecomposition, pairs: Iterable[PairSelector]) -> np.ndarray:
    """Pair negativities of the ground-manifold mixture (T = 0)."""
    state = ground_manifold(decomp)
    return np.array([pair_negativity(state, (p.site_a, p.site_b)) for p in pairs])


def _grid_points(req: SweepRequest):
    """Axis1-major list of (param dict, row index)."""
    points = []
    v2s = req.axis2.values if req.axis2 else [None]
    for v1 in req.axis1.values:
        for v2 in v2s:
            entry = {req.axis1.parameter: float(v1)}
            if req.axis2 is not None:
                entry[req.axis2.parameter] = float(v2)
            points.append(entry)
    return points


def _point_spec(base: ModelSpec, entry: dict) -> ModelSpec:
    overrides = {k: v for k, v in entry.items() if k != "temperature"}
    return replace(base, **overrides) if overrides else base


def run_sweep(req: SweepRequest, jobs: Optional[int] = None,
              cache: Optional[SpectralCache] = None) -> SweepResult:
    """Evaluate the request on its full grid.

    Points are grouped by coupling so each group diagonalizes once; groups
    run on a thread pool (LAPACK releases the GIL). Output rows are
    axis1-major regardless of scheduling.
    """
    cache = cache if cache is not None else SpectralCache()
    points = _grid_points(req)
    npairs = len(req.pairs)
    naxes = 2 if req.axis2 else 1

    groups: dict[tuple, list[int]] = {}
    for idx, entry in enumerate(points):
        groups.setdefault(_point_spec(req.base, entry).coupling_key, []).append(idx)

    params = np.zeros((len(points), naxes))
    negativities = np.zeros((len(points), npairs))
    energies = np.zeros(len(points))
    log_zs = np.zeros(len(points))

    def run_group(indices: list[int]) -> None:
        decomp = cache.get(_point_spec(req.base, points[indices[0]]))
        for idx in indices:
            entry = points[idx]
            temperature = entry.get("temperature", req.temperature)
            negs, u, lz = evaluate_point(decomp, temperature, req.pairs)
            row = [entry[req.axis1.parameter]]
            if req.axis2 is not None:
                row.append(entry[req.axis2.parameter])
            params[idx] = row
            negativities[idx] = negs
            energies[idx] = u
            log_zs[idx] = lz

    group_list = list(groups.values())
    if jobs is not None and jobs <= 1:
        for g in group_list:
            run_group(g)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            list(pool.map(run_group, group_list))

    columns = ([req.axis1.parameter]
               + ([req.axis2.parameter] if req.axis2 else [])
               + [p.label for p in req.pairs] + ["U", "logZ"])
    return SweepResult(request=req, columns=tuple(columns), params=params,
                       negativities=negativities, internal_energy=energies,
                       log_z=log_zs)


def _negativity_at(base: ModelSpec, parameter: str, value: float, pair: PairSelector,
                   fixed_temperature: Optional[float], cache: SpectralCache) -> float:
    if parameter == "temperature":
        spec = base
        temperature = value
    else:
        spec = replace(base, **{parameter: float(value)})
        temperature = fixed_temperature
    decomp = cache.get(spec)
    if temperature == 0.0:
        return float(ground_point(decomp, [pair])[0])
    state = thermal_state(decomp, temperature)
    return pair_negativity(state, (pair.site_a, pair.site_b))


def find_threshold(base: ModelSpec, parameter: str, pair: PairSelector,
                   search_range: tuple[float, float],
                   fixed_temperature: Optional[float] = None,
                   scan_points: int = 64, rtol: float = 1e-6,
                   cache: Optional[SpectralCache] = None) -> ThresholdResult:
    """Locate the boundary where the pair negativity stops exceeding EPS_NONZERO.

    A coarse scan finds the first flip of the indicator inside search_range,
    then bisection narrows the bracket until its width is below
    rtol * max(1, threshold). Returns status "none-in-range" when the
    indicator never flips.
    """
    if parameter not in SWEEPABLE:
        raise ValueError(f"parameter must be one of {SWEEPABLE}")
    if parameter != "temperature" and (fixed_temperature is None or fixed_temperature < 0.0):
        raise ValueError("coupling thresholds need a fixed temperature (>= 0)")
    cache = cache if cache is not None else SpectralCache()

    def entangled(v: float) -> bool:
        return _negativity_at(base, parameter, v, pair, fixed_temperature, cache) > EPS_NONZERO

    grid = np.linspace(search_range[0], search_range[1], scan_points)
    flags = [entangled(v) for v in grid]
    flip = next((i for i in range(1, len(grid)) if flags[i] != flags[i - 1]), None)
    if flip is None:
        return ThresholdResult(parameter=parameter, value=None, bracket=None,
                               status="none-in-range")
    lo, hi = float(grid[flip - 1]), float(grid[flip])
    lo_flag = flags[flip - 1]
    while hi - lo > rtol * max(1.0, 0.5 * abs(lo + hi)):
        mid = 0.5 * (lo + hi)
        if entangled(mid) == lo_flag:
            lo = mid
        else:
            hi = mid
    return ThresholdResult(parameter=parameter, value=0.5 * (lo + hi),
                           bracket=(lo, hi), status="found")


def threshold_curve(base: ModelSpec, pair: PairSelector,
                    curve_parameter: str, curve_values: Sequence[float],
                    search_parameter: str, search_range: tuple[float, float],
                    fixed_temperature: Optional[float] = None,
                    scan_points: int = 64,
                    cache: Optional[SpectralCache] = None) -> list[tuple[float, Optional[float]]]:
    """Threshold of search_parameter at each value of curve_parameter.

    With curve_parameter="j2" and search_parameter="temperature" this yields
    the zero-negativity boundary T_th(J2); swapping the roles gives the
    transposed view J2_th(T).
    """
    cache = cache if cache is not None else SpectralCache()
    out = []
    for v in curve_values:
        if curve_parameter == "temperature":
            point_base, point_temp = base, float(v)
        else:
            point_base = replace(base, **{curve_parameter: float(v)})
            point_temp = fixed_temperature
        res = find_threshold(point_base, search_parameter, pair, search_range,
                             fixed_temperature=point_temp, scan_points=scan_points,
                             cache=cache)
        out.append((float(v), res.value))
    return out
