"""Periodic rectilinear spacetime and phase-space grids with discrete Fourier duals.

Axes carry a role tag (``spatial``, ``momentum`` or ``time``); the dual
coordinate attached to grid index ``j`` on an axis of length ``N`` and spacing
``h`` is ``2*pi*wrap(j)/(N*h)`` with ``wrap(j) = j`` for ``j <= N/2`` and
``j - N`` otherwise.  The time-axis dual is reported negated so that a field
``exp(i*(k.x - w*t))`` has dual coordinates ``(k, w)``; with that convention
derivative multipliers read ``d/dx -> i*k`` and ``d/dt -> -i*w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

ROLE_SPATIAL = "spatial"
ROLE_MOMENTUM = "momentum"
ROLE_TIME = "time"
ROLES = (ROLE_SPATIAL, ROLE_MOMENTUM, ROLE_TIME)


@dataclass(frozen=True)
class Axis:
    """One periodic grid axis: ``length`` points at uniform ``spacing``."""

    length: int
    spacing: float
    role: str


@dataclass(frozen=True)
class DualPoint:
    """Fourier coordinates (k, k_p, omega) attached to one grid index."""

    k: tuple[float, ...]
    k_p: tuple[float, ...]
    omega: float

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (
            np.asarray(self.k, dtype=float),
            np.asarray(self.k_p, dtype=float),
            np.asarray(self.omega, dtype=float),
        )


@dataclass(frozen=True)
class SpacetimeGrid:
    """Validated periodic grid; immutable and hashable (usable as a cache key)."""

    axes: tuple[Axis, ...]

    @property
    def ndim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(ax.length for ax in self.axes)

    @property
    def npoints(self) -> int:
        return int(np.prod(self.shape, dtype=np.int64))

    @property
    def cell_measure(self) -> float:
        out = 1.0
        for ax in self.axes:
            out *= ax.spacing
        return out

    @property
    def spatial_indices(self) -> tuple[int, ...]:
        return tuple(i for i, ax in enumerate(self.axes) if ax.role == ROLE_SPATIAL)

    @property
    def momentum_indices(self) -> tuple[int, ...]:
        return tuple(i for i, ax in enumerate(self.axes) if ax.role == ROLE_MOMENTUM)

    @property
    def time_index(self) -> int | None:
        for i, ax in enumerate(self.axes):
            if ax.role == ROLE_TIME:
                return i
        return None

    @property
    def spatial_dim(self) -> int:
        return len(self.spatial_indices)

    @property
    def momentum_dim(self) -> int:
        return len(self.momentum_indices)

    def has_time_axis(self) -> bool:
        return self.time_index is not None


def make_grid(axes: Iterable[Sequence]) -> SpacetimeGrid:
    """Build a validated grid from ``(length, spacing, role)`` axis specs."""
    parsed = []
    for spec in axes:
        if isinstance(spec, Axis):
            length, spacing, role = spec.length, spec.spacing, spec.role
        else:
            length, spacing, role = spec
        if role not in ROLES:
            raise ValueError(f"unknown axis role {role!r}; expected one of {ROLES}")
        length = int(length)
        spacing = float(spacing)
        if length < 1:
            raise ValueError(f"axis length must be >= 1, got {length}")
        if not spacing > 0:
            raise ValueError(f"axis spacing must be positive, got {spacing}")
        parsed.append(Axis(length, spacing, role))
    n_time = sum(1 for ax in parsed if ax.role == ROLE_TIME)
    if n_time > 1:
        raise ValueError(f"at most one time axis allowed, got {n_time}")
    return SpacetimeGrid(tuple(parsed))


def _wrap_indices(n: int) -> np.ndarray:
    # signed index branch; the Nyquist index of an even axis wraps to -N/2
    return np.rint(np.fft.fftfreq(n) * n).astype(np.int64)


def dual_axis_values(grid: SpacetimeGrid, axis: int) -> np.ndarray:
    """Reported dual coordinates along one axis (time axis negated)."""
    ax = grid.axes[axis]
    vals = 2.0 * np.pi * _wrap_indices(ax.length) / (ax.length * ax.spacing)
    if ax.role == ROLE_TIME:
        vals = -vals
    return vals


def coordinate_values(grid: SpacetimeGrid, axis: int) -> np.ndarray:
    """Real-space coordinates along one axis: 0, h, ..., (N-1)h."""
    ax = grid.axes[axis]
    return np.arange(ax.length) * ax.spacing


def signed_coordinate_values(grid: SpacetimeGrid, axis: int) -> np.ndarray:
    """Coordinates wrapped to the symmetric branch (used for momentum axes)."""
    ax = grid.axes[axis]
    return _wrap_indices(ax.length) * ax.spacing


def dual_coordinates(grid: SpacetimeGrid, index: Sequence[int]) -> DualPoint:
    """Dual point for a multi-index; index 0 maps to the zero dual point."""
    index = tuple(int(i) for i in index)
    if len(index) != grid.ndim:
        raise ValueError(f"index has {len(index)} entries for a {grid.ndim}-axis grid")
    for i, (j, ax) in enumerate(zip(index, grid.axes)):
        if not 0 <= j < ax.length:
            raise ValueError(f"index {j} out of range for axis {i} of length {ax.length}")
    k = []
    k_p = []
    omega = 0.0
    for i, j in enumerate(index):
        val = float(dual_axis_values(grid, i)[j])
        role = grid.axes[i].role
        if role == ROLE_SPATIAL:
            k.append(val)
        elif role == ROLE_MOMENTUM:
            k_p.append(val)
        else:
            omega = val
    return DualPoint(tuple(k), tuple(k_p), omega)


@lru_cache(maxsize=128)
def dual_meshes(grid: SpacetimeGrid) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Meshed dual coordinates: arrays ``k (*shape, ds)``, ``k_p (*shape, dp)``,
    ``omega (*shape)`` ready for vectorized symbol evaluation."""
    per_axis = [dual_axis_values(grid, i) for i in range(grid.ndim)]
    meshes = np.meshgrid(*per_axis, indexing="ij") if grid.ndim else []
    shape = grid.shape
    ks = grid.spatial_indices
    kps = grid.momentum_indices
    k = np.stack([meshes[i] for i in ks], axis=-1) if ks else np.zeros(shape + (0,))
    k_p = np.stack([meshes[i] for i in kps], axis=-1) if kps else np.zeros(shape + (0,))
    ti = grid.time_index
    omega = meshes[ti] if ti is not None else np.zeros(shape)
    return k, k_p, omega


def forward_values(grid: SpacetimeGrid, values: np.ndarray) -> np.ndarray:
    """Unnormalized forward DFT over all grid axes (trailing dims untouched)."""
    axes = tuple(range(grid.ndim))
    return np.fft.fftn(values, axes=axes)


def inverse_values(grid: SpacetimeGrid, values: np.ndarray) -> np.ndarray:
    """Normalized inverse DFT over all grid axes; inverse of forward_values."""
    axes = tuple(range(grid.ndim))
    return np.fft.ifftn(values, axes=axes)
