"""Catalog of physics models: layout + projection family + constitutive matrix.

``build_model`` is table-driven; see :mod:`canonform.catalog.tables` for the
per-model transcription maps that double as the audit artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Mapping, Sequence

import numpy as np

from ..fields import MediumField
from ..grid import SpacetimeGrid, signed_coordinate_values
from ..projections import (
    ProjectionFamily,
    compose_block_gamma,
    gamma_acoustic_N,
    gamma_boltzmann,
    gamma_diffusion_G,
    gamma_em,
    gamma_fluid_pair,
    gamma_longitudinal,
    gamma_poisson_block,
    gamma_schrodinger_S,
    gamma_thermo_Y,
    lift_first_index,
)
from . import tables

__all__ = [
    "PhysicsModel",
    "Layout",
    "DirectionSet",
    "build_model",
    "catalog_ids",
    "model_table",
    "build_direction_set",
    "build_radiative_W",
    "compute_two_fluid_coefficients",
    "expanded_entries",
    "resolve_entry_block",
]


@dataclass(frozen=True)
class Layout:
    """Resolved component partition: named blocks with shapes and offsets."""

    blocks: tuple[tuple[str, tuple[int, ...], int, int], ...]  # (name, shape, size, offset)

    @property
    def total(self) -> int:
        name, shape, size, off = self.blocks[-1]
        return off + size

    @property
    def labels(self) -> tuple[str, ...]:
        out = []
        for name, shape, size, _ in self.blocks:
            if not shape:
                out.append(name)
            elif len(shape) == 1:
                out.extend(f"{name}[{i}]" for i in range(shape[0]))
            else:
                for idx in np.ndindex(*shape):
                    out.append(f"{name}[{','.join(map(str, idx))}]")
        return tuple(out)

    def block(self, name: str) -> tuple[tuple[int, ...], int, int]:
        for bname, shape, size, off in self.blocks:
            if bname == name:
                return shape, size, off
        raise KeyError(f"unknown block {name!r}")

    def slice_of(self, name: str) -> slice:
        _, size, off = self.block(name)
        return slice(off, off + size)


@dataclass(eq=False)
class PhysicsModel:
    """One catalog instantiation: (layout, gamma, L, source slots, params)."""

    id: str
    equation: str
    grid: SpacetimeGrid
    layout: Layout
    gamma: ProjectionFamily
    L: MediumField
    source_slots: tuple[str, ...]
    params: dict
    entries: list  # resolved transcription map (audit artifact)

    @property
    def n(self) -> int:
        return self.layout.total

    @property
    def labels(self) -> tuple[str, ...]:
        return self.layout.labels

    def with_medium(self, L: MediumField) -> "PhysicsModel":
        if L.n != self.n:
            raise ValueError("replacement medium has wrong size")
        return replace(self, L=L)


@dataclass(frozen=True)
class DirectionSet:
    """Unit directions with quadrature weights on the sphere."""

    directions: np.ndarray  # (ndir, 3)
    weights: np.ndarray  # (ndir,)

    @property
    def ndir(self) -> int:
        return len(self.weights)


def catalog_ids() -> tuple[str, ...]:
    return tuple(sorted(tables.MODELS))


def model_table(model_id: str) -> dict:
    try:
        return tables.MODELS[model_id]
    except KeyError:
        raise KeyError(f"unknown catalog id {model_id!r}") from None


# ---------------------------------------------------------------------------
# quadrature / coupling helpers
# ---------------------------------------------------------------------------


def build_direction_set(n_polar: int, n_azimuth: int) -> DirectionSet:
    """Gauss-Legendre in the polar cosine crossed with uniform azimuth."""
    if n_polar < 1 or n_azimuth < 1:
        raise ValueError("need at least one polar and one azimuthal node")
    x, w = np.polynomial.legendre.leggauss(n_polar)
    phis = 2.0 * np.pi * np.arange(n_azimuth) / n_azimuth
    dirs = []
    wts = []
    for ct, wi in zip(x, w):
        st = np.sqrt(max(0.0, 1.0 - ct * ct))
        for phi in phis:
            dirs.append((st * np.cos(phi), st * np.sin(phi), ct))
            wts.append(wi * 2.0 * np.pi / n_azimuth)
    return DirectionSet(np.asarray(dirs), np.asarray(wts))


def build_radiative_W(dirset: DirectionSet, mu_t: float, mu_s: float, phase="isotropic") -> np.ndarray:
    """Extinction-minus-scattering coupling over the direction set.

    ``W[i, j] = mu_t delta_ij - mu_s * P(n_j, n_i) * w_j``; with the isotropic
    phase the scattering part of each row sums to mu_s.
    """
    if mu_t < 0 or mu_s < 0:
        raise ValueError("extinction and scattering coefficients must be nonnegative")
    nd = dirset.ndir
    if phase == "isotropic" or phase is None:
        P = np.full((nd, nd), 1.0 / (4.0 * np.pi))
    elif callable(phase):
        P = np.empty((nd, nd))
        for i in range(nd):
            for j in range(nd):
                P[i, j] = phase(dirset.directions[j], dirset.directions[i])
        if np.any(P < 0):
            raise ValueError("phase function produced negative probabilities")
    else:
        P = np.asarray(phase, dtype=float)
        if P.shape != (nd, nd):
            raise ValueError(f"phase matrix must be {(nd, nd)}, got {P.shape}")
    return mu_t * np.eye(nd) - mu_s * P * dirset.weights[None, :]


def compute_two_fluid_coefficients(
    dmu_drho: float, dT_drho: float, dT_dS: float, rho_n: float, rho_s: float, S: float
) -> tuple[float, float, float]:
    """Quadratic-form coefficients of the two-fluid constitutive matrix."""
    if not S > 0:
        raise ValueError("entropy density must be positive")
    c1 = -(rho_s**2) * dmu_drho
    c2 = -S * rho_s * dT_drho
    c3 = S**2 * dT_dS + 2.0 * S * rho_n * dT_drho
    return c1, c2, c3


# ---------------------------------------------------------------------------
# parameter handling
# ---------------------------------------------------------------------------

_STRUCT_RANK = {
    "scalar": 0, "cscalar": 0, "const": 0, "cconst": 0,
    "vector": 1, "vector_p": 1, "vector3": 1,
    "matrix": 2, "matrix33": 2,
    "tensor4": 4, "tensor4_nmr": 4, "third": 3,
}


def _kind_shape(kind: str, d: int, dp: int) -> tuple[int, ...]:
    return {
        "scalar": (), "cscalar": (), "const": (), "cconst": (),
        "vector": (d,), "vector_p": (dp,), "vector3": (3,),
        "matrix": (d, d), "matrix33": (3, 3),
        "tensor4": (d, d, d, d), "tensor4_nmr": (d, 3, d, 3),
        "third": (d, d, d),
    }[kind]


def _promote(kind: str, value, shape: tuple[int, ...]):
    """Scalar inputs fill the natural isotropic element of the kind."""
    value = np.asarray(value)
    if value.ndim == 0 and shape:
        s = complex(value)
        if kind in ("matrix", "matrix33"):
            return s * np.eye(shape[0])
        if kind in ("vector", "vector_p", "vector3"):
            return np.full(shape, s)
        if kind == "tensor4_nmr":
            d, m = shape[0], shape[1]
            out = np.einsum("ik,jl->ijkl", np.eye(d), np.eye(m))
            return s * out
        if kind == "tensor4":
            d = shape[0]
            return s * np.einsum("ik,jl->ijkl", np.eye(d), np.eye(d))
        raise ValueError(f"cannot promote scalar to kind {kind}")
    return value


def _normalize_param(name, kind, value, grid: SpacetimeGrid, d: int, dp: int) -> np.ndarray:
    if kind == "object":
        return value
    shape = _kind_shape(kind, d, dp)
    value = _promote(kind, value, shape)
    arr = np.asarray(value, dtype=np.complex128)
    if arr.shape == shape:
        pass
    elif arr.shape == grid.shape + shape:
        pass
    else:
        raise ValueError(
            f"parameter {name!r}: expected shape {shape} or {grid.shape + shape}, "
            f"got {arr.shape}"
        )
    if kind in ("scalar", "const") and arr.size and np.max(np.abs(arr.imag)) > 0:
        # complex values enter only through the cscalar/cconst kinds
        raise ValueError(f"parameter {name!r} must be real-valued")
    if kind in ("const", "cconst") and arr.shape != shape:
        raise ValueError(f"parameter {name!r} must be spatially constant")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"parameter {name!r} contains non-finite values")
    return arr


def _check_symmetry(name: str, kind: str, arr: np.ndarray, symmetry: str | None) -> None:
    if symmetry is None or arr.ndim == 0:
        return
    tol = 1e-12 * max(1.0, float(np.max(np.abs(arr))))
    if symmetry == "symmetric":
        if np.max(np.abs(arr - np.swapaxes(arr, -1, -2))) > tol:
            raise ValueError(f"parameter {name!r} must be symmetric")
    elif symmetry == "hermitian":
        if np.max(np.abs(arr - np.conj(np.swapaxes(arr, -1, -2)))) > tol:
            raise ValueError(f"parameter {name!r} must be Hermitian")
    elif symmetry == "minor":
        if (np.max(np.abs(arr - np.swapaxes(arr, -3, -4))) > tol
                or np.max(np.abs(arr - np.swapaxes(arr, -1, -2))) > tol):
            raise ValueError(f"parameter {name!r} must have both minor symmetries")


def _struct_rank_of(arr: np.ndarray, grid: SpacetimeGrid) -> int:
    if arr.ndim >= grid.ndim and arr.shape[: grid.ndim] == grid.shape:
        return arr.ndim - grid.ndim
    return arr.ndim


def _align(arr: np.ndarray, rank: int, target: int) -> np.ndarray:
    for _ in range(target - rank):
        arr = arr[..., None]
    return arr


def _eval_derived(spec, values: dict, grid: SpacetimeGrid) -> np.ndarray:
    op = spec[0]
    if op == "param":
        return values[spec[1]]
    if op == "const":
        return np.asarray(spec[1], dtype=np.complex128)
    if op == "momentum_coords":
        axes = grid.momentum_indices
        meshes = np.meshgrid(*[np.arange(n) for n in grid.shape], indexing="ij")
        cols = [signed_coordinate_values(grid, i)[meshes[i]] for i in axes]
        return np.stack(cols, axis=-1).astype(np.complex128)
    a = _eval_derived(spec[1], values, grid)
    if op == "neg":
        return -a
    if op == "recip":
        return 1.0 / a
    if op == "inv":
        return np.linalg.inv(a)
    if op == "transpose":
        return np.swapaxes(a, -1, -2)
    b = _eval_derived(spec[2], values, grid)
    if op == "mul":
        ra, rb = _struct_rank_of(a, grid), _struct_rank_of(b, grid)
        target = max(ra, rb)
        return _align(a, ra, target) * _align(b, rb, target)
    if op in ("add", "sub"):
        return a + b if op == "add" else a - b
    if op == "matvec":
        return np.einsum("...ij,...j->...i", a, b)
    if op == "matmul":
        return a @ b
    raise ValueError(f"unknown derived op {op!r}")


# ---------------------------------------------------------------------------
# entry resolution (shared by builder and audit)
# ---------------------------------------------------------------------------


def resolve_entry_block(entry: Mapping, layout: Layout, values: Mapping, grid: SpacetimeGrid) -> tuple[slice, slice, np.ndarray]:
    """Resolve one transcription entry to (row slice, col slice, value block).

    The value is ``scale * prod(scalars) * base`` with the multiplications
    performed left to right in the listed order.
    """
    row_shape, r, roff = layout.block(entry["row"])
    col_shape, c, coff = layout.block(entry["col"])
    scal = np.asarray(complex(entry.get("scale", 1.0)))
    for name in entry.get("scalars", ()):
        arr = np.asarray(values[name])
        scal = scal * arr
    kind = entry["kind"]
    if "param" in entry:
        base = np.asarray(values[entry["param"]])
    elif "const" in entry:
        base = np.asarray(entry["const"], dtype=np.complex128)
    else:
        base = None

    if kind == "iso":
        if r != c:
            raise ValueError(f"iso entry on non-square block {entry['row']}x{entry['col']}")
        block = scal[..., None, None] * np.eye(r)
    elif kind == "scalar":
        if base is not None:
            scal = scal * base
        block = scal[..., None, None] * np.ones((1, 1))
    elif kind == "tensor":
        block = scal[..., None, None] * base
    elif kind == "tensor4":
        flat = base.reshape(base.shape[:-4] + (r, c))
        block = scal[..., None, None] * flat
    elif kind == "row_vec":
        block = scal[..., None, None] * base[..., None, :]
    elif kind == "col_vec":
        block = scal[..., None, None] * base[..., :, None]
    elif kind == "flat_col":
        block = scal[..., None, None] * base.reshape(base.shape[:-2] + (r,))[..., :, None]
    elif kind == "flat_row":
        block = scal[..., None, None] * base.reshape(base.shape[:-2] + (c,))[..., None, :]
    elif kind == "conv_row":
        d = row_shape[0]
        conv = np.einsum("...k,il->...ikl", base, np.eye(d))
        block = scal[..., None, None] * conv.reshape(conv.shape[:-3] + (d, d * d))
    elif kind == "iso_proj":
        d = int(round(np.sqrt(r)))
        vec = np.eye(d).reshape(d * d)
        block = scal[..., None, None] * (np.outer(vec, vec) / d)
    elif kind == "third":
        block = scal[..., None, None] * base.reshape(base.shape[:-3] + (r, c))
    elif kind == "third_T":
        moved = np.moveaxis(base, -1, -3)
        block = scal[..., None, None] * moved.reshape(moved.shape[:-3] + (r, c))
    else:
        raise ValueError(f"unknown entry kind {kind!r}")
    if block.shape[-2:] != (r, c):
        raise ValueError(
            f"entry {entry['row']}x{entry['col']} resolved to block {block.shape[-2:]}, "
            f"expected {(r, c)}"
        )
    return slice(roff, roff + r), slice(coff, coff + c), block


# ---------------------------------------------------------------------------
# gamma dispatch and model building
# ---------------------------------------------------------------------------


def _gamma_for(spec: str, d: int, dp: int, ndir: int | None = None) -> ProjectionFamily:
    atoms = {
        "G": lambda: gamma_diffusion_G(d),
        "N": lambda: gamma_acoustic_N(d),
        "S": lambda: gamma_schrodinger_S(d),
        "Y": lambda: gamma_thermo_Y(d),
        "em": gamma_em,
        "poisson": lambda: gamma_poisson_block(d),
        "long": lambda: gamma_longitudinal(d),
        "fluid": lambda: gamma_fluid_pair(d),
        "boltzmann": lambda: gamma_boltzmann(d, dp),
        "G_lift3": lambda: lift_first_index(gamma_diffusion_G(d), 3),
        "G_liftd": lambda: lift_first_index(gamma_diffusion_G(d), d),
        "N_liftd": lambda: lift_first_index(gamma_acoustic_N(d), d),
    }
    if spec == "radiative":
        return compose_block_gamma([gamma_diffusion_G(d) for _ in range(ndir)], name=f"radiative_{ndir}dirs")
    parts = [atoms[p]() for p in spec.split("+")]
    return compose_block_gamma(parts) if len(parts) > 1 else parts[0]


def _resolve_blocks(raw, d: int, dp: int) -> Layout:
    resolved = []
    off = 0
    for name, shape_spec in raw:
        shape = tuple({"d": d, "dp": dp, "3": 3}[s] if isinstance(s, str) else int(s) for s in shape_spec)
        size = int(np.prod(shape)) if shape else 1
        resolved.append((name, shape, size, off))
        off += size
    return Layout(tuple(resolved))


def build_model(model_id: str, grid: SpacetimeGrid, params: Mapping) -> PhysicsModel:
    """Instantiate a catalog model on a grid from a parameter record."""
    table = model_table(model_id)
    d = grid.spatial_dim
    dp = grid.momentum_dim
    if d < 1:
        raise ValueError(f"{model_id}: grid needs at least one spatial axis")
    if table.get("needs_time") == "forbidden" and grid.has_time_axis():
        raise ValueError(f"{model_id} is posed without a time axis")
    if table.get("needs_momentum"):
        if dp != d:
            raise ValueError(
                f"{model_id}: needs momentum axes matching the spatial axes (got {dp} vs {d})"
            )
    elif dp:
        raise ValueError(f"{model_id} does not use momentum axes")
    if model_id == "em" and d > 3:
        raise ValueError("em model supports at most 3 spatial axes")
    if model_id not in ("schrodinger", "schrodinger_magnetic", "em") and d > 3:
        raise ValueError(f"{model_id}: spatial dimension {d} out of range")

    params = dict(params)
    values: dict[str, np.ndarray] = {}
    schema = table["params"]
    known = {name for name, _, _ in schema}
    for key in params:
        if key not in known:
            raise ValueError(f"{model_id}: unknown parameter {key!r}")
    for name, kind, opts in schema:
        if name in params:
            raw = params[name]
        elif "default" in opts:
            raw = opts["default"]
            if isinstance(raw, str) and raw == "momentum_coords":
                raw = _eval_derived(("momentum_coords",), {}, grid)
        else:
            raise ValueError(f"{model_id}: missing required parameter {name!r}")
        val = _normalize_param(name, kind, raw, grid, d, dp)
        if kind != "object":
            _check_symmetry(name, kind, val, opts.get("symmetry"))
        values[name] = val

    ndir = None
    entries = table["entries"]
    blocks_raw = table["blocks"]
    sources = table["sources"]
    if model_id == "radiative_transfer":
        dirset = values["directions"]
        if not isinstance(dirset, DirectionSet):
            raise ValueError("radiative_transfer: 'directions' must be a DirectionSet")
        ndir = dirset.ndir
        mu_s = float(np.real(values["mu_s"]))
        mu_t = float(np.real(values["mu_t"]))
        if mu_t < 0:  # sentinel: extinction = absorption + scattering
            mu_t = float(np.real(values["mu_a"])) + mu_s
            values["mu_t"] = np.asarray(mu_t, dtype=np.complex128)
        W = build_radiative_W(dirset, mu_t, mu_s, values.get("phase", "isotropic"))
        blocks_raw = tables.radiative_blocks(ndir)
        entries = tables.radiative_entries(ndir, dirset.directions, W, d)
        sources = tables.radiative_sources(ndir)

    layout = _resolve_blocks(blocks_raw, d, dp)

    for name, spec in table.get("derived", {}).items():
        values[name] = _eval_derived(spec, values, grid)

    n = layout.total
    L_vals = np.zeros(grid.shape + (n, n), dtype=np.complex128)
    for entry in entries:
        rs, cs, block = resolve_entry_block(entry, layout, values, grid)
        L_vals[..., rs, cs] += block
    L = MediumField(grid, n, L_vals)

    gamma = _gamma_for(table["gamma"], d, dp, ndir)
    if gamma.n != n:
        raise AssertionError(
            f"{model_id}: projection size {gamma.n} != layout total {n}"
        )
    return PhysicsModel(
        id=model_id,
        equation=table["equation"],
        grid=grid,
        layout=layout,
        gamma=gamma,
        L=L,
        source_slots=tuple(sources),
        params=values,
        entries=list(entries),
    )


def expanded_entries(model: PhysicsModel) -> list[dict]:
    """Fully indexed audit map: every nonzero entry with resolved coordinates."""
    out = []
    for entry in model.entries:
        rs, cs, block = resolve_entry_block(entry, model.layout, model.params, model.grid)
        out.append({
            "row_block": entry["row"],
            "col_block": entry["col"],
            "rows": [rs.start, rs.stop],
            "cols": [cs.start, cs.stop],
            "kind": entry["kind"],
            "param": entry.get("param"),
            "scalars": list(entry.get("scalars", ())),
            "scale": str(complex(entry.get("scale", 1.0))),
        })
    return out


def isotropic_stiffness(lam: float, mu: float, dim: int) -> np.ndarray:
    """Isotropic 4th-order stiffness lam*I(x)I + mu*(sym pair) with minor symmetries."""
    eye = np.eye(dim)
    C = (lam * np.einsum("ij,kl->ijkl", eye, eye)
         + mu * (np.einsum("ik,jl->ijkl", eye, eye) + np.einsum("il,jk->ijkl", eye, eye)))
    return C
