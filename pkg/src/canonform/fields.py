"""Multicomponent complex fields over spacetime grids and their algebra.

``ComponentField`` holds every physical field (fields E, J, sources, and
potentials); ``MediumField`` holds the per-point constitutive matrix L(x, t).
The inner product sums the componentwise Hermitian dot product over grid
points weighted by the cell measure, which makes every catalog projection
family self-adjoint.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from .grid import SpacetimeGrid, forward_values, inverse_values

REP_REAL = "real"
REP_DUAL = "dual"


@dataclass(frozen=True, eq=False)
class ComponentField:
    """Complex multicomponent field; values indexed ``(*grid.shape, ncomp)``."""

    grid: SpacetimeGrid
    labels: tuple[str, ...]
    values: np.ndarray
    representation: str = REP_REAL

    @property
    def ncomp(self) -> int:
        return len(self.labels)

    def copy(self) -> "ComponentField":
        return replace(self, values=self.values.copy())

    def __post_init__(self):
        expected = self.grid.shape + (len(self.labels),)
        if tuple(self.values.shape) != expected:
            raise ValueError(
                f"field values shape {self.values.shape} does not match {expected}"
            )
        if self.representation not in (REP_REAL, REP_DUAL):
            raise ValueError(f"unknown representation {self.representation!r}")


@dataclass(frozen=True, eq=False)
class MediumField:
    """Dense n-by-n constitutive matrix per real-space grid point."""

    grid: SpacetimeGrid
    n: int
    values: np.ndarray  # (*grid.shape, n, n) complex

    def __post_init__(self):
        expected = self.grid.shape + (self.n, self.n)
        if tuple(self.values.shape) != expected:
            raise ValueError(
                f"medium values shape {self.values.shape} does not match {expected}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ValueError("medium contains non-finite entries")


def zeros_field(grid: SpacetimeGrid, labels, representation=REP_REAL) -> ComponentField:
    labels = tuple(labels)
    vals = np.zeros(grid.shape + (len(labels),), dtype=np.complex128)
    return ComponentField(grid, labels, vals, representation)


def default_labels(ncomp: int) -> tuple[str, ...]:
    return tuple(f"c{i}" for i in range(ncomp))


def forward_transform(field: ComponentField) -> ComponentField:
    """Unnormalized forward DFT per axis, componentwise."""
    if field.representation == REP_DUAL:
        raise ValueError("field already in dual representation")
    vals = forward_values(field.grid, field.values)
    return ComponentField(field.grid, field.labels, vals, REP_DUAL)


def inverse_transform(field: ComponentField) -> ComponentField:
    """Normalized inverse DFT; inverse of :func:`forward_transform`."""
    if field.representation == REP_REAL:
        raise ValueError("field already in real representation")
    vals = inverse_values(field.grid, field.values)
    return ComponentField(field.grid, field.labels, vals, REP_REAL)


def inner_product(a: ComponentField, b: ComponentField) -> complex:
    """Cell-measure-weighted sum of the conjugate-linear-in-first dot product."""
    if a.grid != b.grid:
        raise ValueError("fields live on different grids")
    if a.ncomp != b.ncomp:
        raise ValueError(f"component mismatch: {a.ncomp} vs {b.ncomp}")
    if a.representation != b.representation:
        raise ValueError("fields are in different representations")
    return complex(np.vdot(a.values, b.values) * a.grid.cell_measure)


def norm(a: ComponentField) -> float:
    return float(np.sqrt(abs(inner_product(a, a))))


def apply_medium(L: MediumField, e: ComponentField) -> ComponentField:
    """Pointwise matrix-vector product L(x, t) e(x, t)."""
    if e.representation != REP_REAL:
        raise ValueError("apply_medium requires a real-space field")
    if L.grid != e.grid:
        raise ValueError("medium and field live on different grids")
    if L.n != e.ncomp:
        raise ValueError(f"medium size {L.n} does not match field ncomp {e.ncomp}")
    vals = kernels.apply_pointwise_matrices(L.values, e.values)
    return ComponentField(e.grid, e.labels, vals, REP_REAL)


def lincomb(coeffs, fields) -> ComponentField:
    """Linear combination of same-layout fields."""
    first = fields[0]
    vals = np.zeros_like(first.values)
    for c, f in zip(coeffs, fields):
        if f.grid != first.grid or f.representation != first.representation:
            raise ValueError("incompatible fields in linear combination")
        vals = vals + c * f.values
    return ComponentField(first.grid, first.labels, vals, first.representation)


def random_bandlimited_field(
    grid: SpacetimeGrid,
    ncomp: int,
    max_mode: int,
    seed: int,
    labels=None,
) -> ComponentField:
    """Deterministic random field whose spectrum is supported on
    ``|wrapped index| <= max_mode`` along every axis."""
    for i, ax in enumerate(grid.axes):
        if ax.length > 1 and max_mode > (ax.length - 1) // 2:
            raise ValueError(
                f"max_mode {max_mode} reaches the Nyquist index on axis {i} "
                f"(length {ax.length})"
            )
    rng = np.random.default_rng(seed)
    shape = grid.shape + (ncomp,)
    spectrum = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    for axis, ax in enumerate(grid.axes):
        j = np.fft.fftfreq(ax.length) * ax.length
        mask_1d = np.abs(np.rint(j).astype(int)) <= max_mode
        bshape = [1] * (grid.ndim + 1)
        bshape[axis] = ax.length
        spectrum = spectrum * mask_1d.reshape(bshape)
    vals = inverse_values(grid, spectrum)
    if labels is None:
        labels = default_labels(ncomp)
    return ComponentField(grid, tuple(labels), vals, REP_REAL)


def zero_spatial_mean(field: ComponentField) -> ComponentField:
    """Zero every mode whose spatial dual vanishes (all spatial indices 0).

    The canonical triples of the diffusion family leave those modes
    undetermined, so manufactured oracles exclude them.
    """
    sp = field.grid.spatial_indices
    if not sp:
        return field
    if field.representation == REP_DUAL:
        spec = field.values.copy()
    else:
        spec = forward_values(field.grid, field.values)
    sl = [slice(None)] * (field.grid.ndim + 1)
    for i in sp:
        sl[i] = slice(0, 1)
    spec[tuple(sl)] = 0.0
    if field.representation == REP_DUAL:
        return ComponentField(field.grid, field.labels, spec, REP_DUAL)
    vals = inverse_values(field.grid, spec)
    return ComponentField(field.grid, field.labels, vals, REP_REAL)
