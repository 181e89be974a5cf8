"""Fourier-space projection families: closed forms, symbol factorizations,
block composition, index lifting, and numerical certification.

Every family evaluates to an n-by-n Hermitian idempotent matrix at a dual
point ``(k, k_p, omega)``.  Where a closed form degenerates to 0/0 (the pure
wave families at the zero dual) the declared convention is the zero matrix,
matching the pseudo-inverse limit of the symbol factorization
``P = D (D^H D)^+ D^H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Sequence

import numpy as np

from .fields import REP_REAL, ComponentField, forward_transform, inverse_transform
from .grid import DualPoint, SpacetimeGrid, dual_meshes
from . import kernels

Evaluator = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]


@dataclass(eq=False)
class Symbol:
    """Polynomial matrix D(ik, ik_p, -iw) representing a differential operator."""

    n_rows: int
    n_cols: int
    dx: int
    dp: int
    evaluator: Evaluator  # (..., dx), (..., dp), (...) -> (..., n_rows, n_cols)

    def __call__(self, k, k_p, omega) -> np.ndarray:
        k, k_p, omega = _as_batched(k, k_p, omega, self.dx, self.dp)
        return self.evaluator(k, k_p, omega)


@dataclass(eq=False)
class ProjectionFamily:
    """Map from dual points to Hermitian idempotent matrices."""

    name: str
    n: int
    dx: int
    dp: int
    evaluator: Evaluator  # -> (..., n, n)
    symbol: Symbol | None = None
    _cache: dict = dataclass_field(default_factory=dict, repr=False)

    def __call__(self, k, k_p=(), omega=0.0) -> np.ndarray:
        k, k_p, omega = _as_batched(k, k_p, omega, self.dx, self.dp)
        return self.evaluator(k, k_p, omega)

    def at(self, dual: DualPoint) -> np.ndarray:
        return self(*dual.as_arrays())

    def tabulate(self, grid: SpacetimeGrid) -> np.ndarray:
        """Matrices at every grid dual point, cached per grid."""
        hit = self._cache.get(grid)
        if hit is not None:
            return hit
        k, k_p, omega = dual_meshes(grid)
        k = _pad_last(k, self.dx, f"{self.name}: grid has more spatial axes")
        k_p = _pad_last(k_p, self.dp, f"{self.name}: grid has more momentum axes")
        tab = self.evaluator(k, k_p, omega)
        self._cache[grid] = tab
        return tab


@dataclass(frozen=True)
class ProjectionReport:
    """Worst-case defects of one family over a dual-point sample set."""

    name: str
    hermiticity_defect: float
    idempotency_defect: float
    factorization_defect: float | None
    samples: int
    worst_dual: tuple

    def within(self, tol: float) -> bool:
        defects = [self.hermiticity_defect, self.idempotency_defect]
        if self.factorization_defect is not None:
            defects.append(self.factorization_defect)
        return max(defects) <= tol


def _as_batched(k, k_p, omega, dx, dp):
    k = np.atleast_1d(np.asarray(k, dtype=float))
    k = _pad_last(k, dx, "too many spatial duals")
    k_p = np.asarray(k_p, dtype=float)
    if k_p.ndim == 0 or k_p.size == 0:
        k_p = np.zeros(k.shape[:-1] + (0,))
    k_p = _pad_last(np.atleast_1d(k_p), dp, "too many momentum duals")
    omega = np.asarray(omega, dtype=float)
    return k, k_p, omega


def _pad_last(arr: np.ndarray, target: int, msg: str) -> np.ndarray:
    have = arr.shape[-1]
    if have == target:
        return arr
    if have > target:
        raise ValueError(f"{msg} (got {have}, family expects {target})")
    pad = np.zeros(arr.shape[:-1] + (target - have,))
    return np.concatenate([arr, pad], axis=-1)


def _dyad(v: np.ndarray, denom: np.ndarray) -> np.ndarray:
    """v v^H / denom with the zero-matrix convention where denom == 0."""
    safe = np.where(denom == 0.0, 1.0, denom)
    out = v[..., :, None] * np.conj(v)[..., None, :] / safe[..., None, None]
    return np.where((denom == 0.0)[..., None, None], 0.0, out)


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------


def gamma_diffusion_G(dim: int) -> ProjectionFamily:
    """Rank-1 family of the dynamic diffusion triple; size dim + 2, never singular."""
    _check_dim(dim)

    def sym(k, k_p, omega):
        return _column(1j * k, omega[..., None], _ones_like(omega))

    def ev(k, k_p, omega):
        v = sym(k, k_p, omega)[..., 0]
        denom = _sq(k) + omega**2 + 1.0
        return _dyad(v, denom)

    symbol = Symbol(dim + 2, 1, dim, 0, sym)
    return ProjectionFamily(f"diffusion_G_{dim}d", dim + 2, dim, 0, ev, symbol)


def gamma_acoustic_N(dim: int) -> ProjectionFamily:
    """Rank-1 wave family; size dim + 1; zero matrix at the zero dual."""
    _check_dim(dim)

    def sym(k, k_p, omega):
        return _column(1j * k, 1j * omega[..., None])

    def ev(k, k_p, omega):
        v = sym(k, k_p, omega)[..., 0]
        return _dyad(v, _sq(k) + omega**2)

    symbol = Symbol(dim + 1, 1, dim, 0, sym)
    return ProjectionFamily(f"acoustic_N_{dim}d", dim + 1, dim, 0, ev, symbol)


def gamma_schrodinger_S(dim: int) -> ProjectionFamily:
    """Rank-1 family for the full dynamic wavefunction triple; size dim + 2."""
    _check_dim(dim, allow_large=True)

    def sym(k, k_p, omega):
        return _column(1j * k, -1j * omega[..., None], _ones_like(omega))

    def ev(k, k_p, omega):
        v = sym(k, k_p, omega)[..., 0]
        return _dyad(v, _sq(k) + omega**2 + 1.0)

    symbol = Symbol(dim + 2, 1, dim, 0, sym)
    return ProjectionFamily(f"schrodinger_S_{dim}d", dim + 2, dim, 0, ev, symbol)


def gamma_thermo_Y(dim: int) -> ProjectionFamily:
    """Thermal block of the thermoelastic family; same matrix family as the
    wavefunction one (generated by the (grad, d/dt, 1) symbol)."""
    fam = gamma_schrodinger_S(dim)
    return ProjectionFamily(f"thermo_Y_{dim}d", fam.n, dim, 0, fam.evaluator, fam.symbol)


def gamma_em() -> ProjectionFamily:
    """Size-6 electromagnetic family on (b, e) pairs; zero at the zero dual."""

    def sym(k, k_p, omega):
        eta = _eta(k)  # (..., 3, 3)
        batch = eta.shape[:-2]
        D = np.zeros(batch + (6, 4), dtype=np.complex128)
        D[..., 0:3, 0:3] = 1j * eta
        D[..., 3:6, 0:3] = 1j * omega[..., None, None] * np.eye(3)
        D[..., 3:6, 3] = -1j * k
        return D

    def ev(k, k_p, omega):
        ksq = _sq(k)
        denom = ksq + omega**2
        eta = _eta(k)
        kk = k[..., :, None] * k[..., None, :]
        eye = np.eye(3)
        top_left = ksq[..., None, None] * eye - kk
        bottom_right = (omega**2)[..., None, None] * eye + kk
        wet = omega[..., None, None] * eta
        batch = np.broadcast_shapes(k.shape[:-1], omega.shape)
        out = np.zeros(batch + (6, 6), dtype=np.complex128)
        out[..., 0:3, 0:3] = top_left
        out[..., 0:3, 3:6] = wet
        out[..., 3:6, 0:3] = -wet
        out[..., 3:6, 3:6] = bottom_right
        safe = np.where(denom == 0.0, 1.0, denom)
        out = out / safe[..., None, None]
        return np.where((denom == 0.0)[..., None, None], 0.0, out)

    symbol = Symbol(6, 4, 3, 0, sym)
    return ProjectionFamily("em", 6, 3, 0, ev, symbol)


def gamma_boltzmann(dx: int, dp: int) -> ProjectionFamily:
    """Phase-space diffusion-like family; size dx + dp + 2, never singular."""
    if dx < 1 or dp < 1:
        raise ValueError("phase-space family needs dx >= 1 and dp >= 1")

    def sym(k, k_p, omega):
        return _column(1j * k, 1j * k_p, omega[..., None], _ones_like(omega))

    def ev(k, k_p, omega):
        v = sym(k, k_p, omega)[..., 0]
        denom = _sq(k) + _sq(k_p) + omega**2 + 1.0
        return _dyad(v, denom)

    symbol = Symbol(dx + dp + 2, 1, dx, dp, sym)
    return ProjectionFamily(f"boltzmann_{dx}x{dp}p", dx + dp + 2, dx, dp, ev, symbol)


def gamma_poisson_block(dim: int) -> ProjectionFamily:
    """Rank-1 static family on (gradient, value) pairs; size dim + 1.

    Serves the Laplace-domain diffusion triple and the electrostatic blocks
    of the charged-species triples; never singular.
    """
    _check_dim(dim)

    def sym(k, k_p, omega):
        return _column(1j * k, _ones_like(omega))

    def ev(k, k_p, omega):
        v = sym(k, k_p, omega)[..., 0]
        return _dyad(v, _sq(k) + 1.0)

    symbol = Symbol(dim + 1, 1, dim, 0, sym)
    return ProjectionFamily(f"poisson_{dim}d", dim + 1, dim, 0, ev, symbol)


def gamma_longitudinal(dim: int) -> ProjectionFamily:
    """Static longitudinal projector k (x) k / k^2; zero matrix at k = 0."""
    _check_dim(dim)

    def sym(k, k_p, omega):
        return _column(1j * k)

    def ev(k, k_p, omega):
        return _dyad(1j * k + 0j, _sq(k))

    symbol = Symbol(dim, 1, dim, 0, sym)
    return ProjectionFamily(f"longitudinal_{dim}d", dim, dim, 0, ev, symbol)


def gamma_fluid_pair(dim: int) -> ProjectionFamily:
    """Projection for (divergence, time-derivative) pairs of a vector potential.

    Components ordered scalar-first: (div u, du/dt).  Closed form
    I - u u^T/(k^2 + w^2) with u = (w, -k); rank dim away from the zero dual,
    zero matrix at the zero dual.  No symbol is attached: the factorized
    projection drops rank on the whole w = 0 plane while this closed form
    keeps the transverse directions, which is the solver-friendly convention.
    """
    _check_dim(dim)

    def ev(k, k_p, omega):
        denom = _sq(k) + omega**2
        u = _column(omega[..., None], -k)[..., 0]
        dyad = _dyad(u, denom)
        eye = np.eye(dim + 1)
        out = eye - dyad
        return np.where((denom == 0.0)[..., None, None], 0.0, out)

    return ProjectionFamily(f"fluid_pair_{dim}d", dim + 1, dim, 0, ev)


def constant_family(name: str, matrix: np.ndarray, dx: int = 3, dp: int = 0) -> ProjectionFamily:
    """Family equal to a fixed matrix at every dual point (tests, identities)."""
    matrix = np.asarray(matrix, dtype=np.complex128)
    n = matrix.shape[0]

    def ev(k, k_p, omega):
        batch = np.broadcast_shapes(k.shape[:-1], omega.shape)
        return np.broadcast_to(matrix, batch + (n, n)).copy()

    return ProjectionFamily(name, n, dx, dp, ev)


def scale_family(base: ProjectionFamily, factor: float) -> ProjectionFamily:
    """Scaled copy of a family (deliberately breaks idempotency; test hook)."""

    def ev(k, k_p, omega):
        return factor * base.evaluator(k, k_p, omega)

    return ProjectionFamily(f"{base.name}*{factor:g}", base.n, base.dx, base.dp, ev, base.symbol)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def gamma_from_symbol(D: Symbol) -> ProjectionFamily:
    """Projection D (D^H D)^+ D^H with the pseudo-inverse taken on the range
    of D^H (relative singular-value cutoff 1e-12)."""

    def ev(k, k_p, omega):
        Dm = D.evaluator(k, k_p, omega)
        F = np.conj(np.swapaxes(Dm, -1, -2)) @ Dm
        Fp = np.linalg.pinv(F, rcond=1e-12, hermitian=True)
        M = Dm @ Fp @ np.conj(np.swapaxes(Dm, -1, -2))
        return 0.5 * (M + np.conj(np.swapaxes(M, -1, -2)))

    return ProjectionFamily(f"factorized[{D.n_rows}x{D.n_cols}]", D.n_rows, D.dx, D.dp, ev, D)


def compose_block_gamma(parts: Sequence[ProjectionFamily], name: str | None = None) -> ProjectionFamily:
    """Block-diagonal family; Hermitian/idempotent whenever the parts are."""
    parts = list(parts)
    if not parts:
        raise ValueError("compose_block_gamma needs at least one part")
    if len(parts) == 1:
        return parts[0]
    n = sum(p.n for p in parts)
    dx = max(p.dx for p in parts)
    dp = max(p.dp for p in parts)

    def ev(k, k_p, omega):
        batch = np.broadcast_shapes(k.shape[:-1], omega.shape)
        out = np.zeros(batch + (n, n), dtype=np.complex128)
        off = 0
        for p in parts:
            blk = p.evaluator(k[..., : p.dx], k_p[..., : p.dp], omega)
            out[..., off : off + p.n, off : off + p.n] = blk
            off += p.n
        return out

    symbol = None
    if all(p.symbol is not None for p in parts):
        n_cols = sum(p.symbol.n_cols for p in parts)

        def sym(k, k_p, omega):
            batch = np.broadcast_shapes(k.shape[:-1], omega.shape)
            out = np.zeros(batch + (n, n_cols), dtype=np.complex128)
            r = c = 0
            for p in parts:
                blk = p.symbol.evaluator(k[..., : p.dx], k_p[..., : p.dp], omega)
                out[..., r : r + p.symbol.n_rows, c : c + p.symbol.n_cols] = blk
                r += p.symbol.n_rows
                c += p.symbol.n_cols
            return out

        symbol = Symbol(n, n_cols, dx, dp, sym)

    label = name or "+".join(p.name for p in parts)
    return ProjectionFamily(label, n, dx, dp, ev, symbol)


def lift_first_index(base: ProjectionFamily, trailing) -> ProjectionFamily:
    """Family acting on the first index of matrix-valued fields: base (x) I.

    ``trailing`` is the trailing component shape; the lifted size is
    ``base.n * prod(trailing)`` with components ordered base-slot major.
    """
    if isinstance(trailing, int):
        trailing = (trailing,)
    trailing = tuple(int(t) for t in trailing)
    if not trailing or any(t < 1 for t in trailing):
        raise ValueError("trailing shape must be a nonempty tuple of positive ints")
    m = int(np.prod(trailing))
    eye = np.eye(m)

    def ev(k, k_p, omega):
        B = base.evaluator(k, k_p, omega)
        return _batched_kron(B, eye)

    symbol = None
    if base.symbol is not None:
        bs = base.symbol

        def sym(k, k_p, omega):
            return _batched_kron(bs.evaluator(k, k_p, omega), eye)

        symbol = Symbol(bs.n_rows * m, bs.n_cols * m, bs.dx, bs.dp, sym)

    return ProjectionFamily(
        f"{base.name}(x){m}", base.n * m, base.dx, base.dp, ev, symbol
    )


def fix_omega(base: ProjectionFamily, omega0: float) -> ProjectionFamily:
    """Time-harmonic reduction: evaluate the family at a fixed frequency."""

    def ev(k, k_p, omega):
        return base.evaluator(k, k_p, np.broadcast_to(omega0, np.asarray(omega).shape))

    return ProjectionFamily(f"{base.name}@w={omega0:g}", base.n, base.dx, base.dp, ev)


# ---------------------------------------------------------------------------
# application to fields and certification
# ---------------------------------------------------------------------------


def apply_projection_family(P: ProjectionFamily, e: ComponentField) -> ComponentField:
    """Multiply by P(k, k_p, w) at every dual point, preserving representation."""
    if P.n != e.ncomp:
        raise ValueError(f"family size {P.n} does not match field ncomp {e.ncomp}")
    was_real = e.representation == REP_REAL
    dual = forward_transform(e) if was_real else e
    tab = P.tabulate(e.grid)
    vals = kernels.apply_pointwise_matrices(tab, dual.values)
    out = ComponentField(e.grid, e.labels, vals, "dual")
    return inverse_transform(out) if was_real else out


def sample_duals(dx: int, dp: int, n_samples: int, box: float = 3.5) -> list[tuple]:
    """Deterministic dual-point samples: zero dual, coordinate-axis points,
    then a low-discrepancy Halton fill of the box."""
    dims = dx + dp + 1
    pts: list[np.ndarray] = [np.zeros(dims)]
    for d in range(dims):
        for mag in (1.0, -1.0, 2.5, -0.6):
            p = np.zeros(dims)
            p[d] = mag
            pts.append(p)
    i = 0
    while len(pts) < n_samples:
        pts.append(box * (2.0 * _halton_point(i + 1, dims) - 1.0))
        i += 1
    return [(tuple(p[:dx]), tuple(p[dx : dx + dp]), float(p[-1])) for p in pts]


def check_projection(P: ProjectionFamily, samples=200) -> ProjectionReport:
    """Certify Hermiticity/idempotency (and the symbol factorization when
    present) over sampled dual points; defects are Frobenius norms."""
    if isinstance(samples, int):
        duals = sample_duals(P.dx, P.dp, samples)
    else:
        duals = list(samples)
    herm = idem = fact = 0.0
    worst = duals[0]
    factorized = gamma_from_symbol(P.symbol) if P.symbol is not None else None
    for dual in duals:
        k, k_p, omega = dual
        M = np.asarray(P(k, k_p, omega))
        h = float(np.linalg.norm(M - M.conj().T))
        q = float(np.linalg.norm(M @ M - M))
        f = 0.0
        if factorized is not None:
            Mf = np.asarray(factorized(k, k_p, omega))
            f = float(np.linalg.norm(M - Mf))
        score = max(h, q, f)
        if score > max(herm, idem, fact):
            worst = dual
        herm = max(herm, h)
        idem = max(idem, q)
        fact = max(fact, f)
    return ProjectionReport(
        name=P.name,
        hermiticity_defect=herm,
        idempotency_defect=idem,
        factorization_defect=fact if factorized is not None else None,
        samples=len(duals),
        worst_dual=worst,
    )


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def _check_dim(dim: int, allow_large: bool = False) -> None:
    if dim < 1 or (not allow_large and dim > 3):
        raise ValueError(f"spatial dimension {dim} out of range")


def _sq(vecs: np.ndarray) -> np.ndarray:
    return np.sum(vecs**2, axis=-1)


def _ones_like(omega: np.ndarray) -> np.ndarray:
    return np.ones(np.asarray(omega).shape + (1,))


def _column(*parts: np.ndarray) -> np.ndarray:
    """Stack 1D-slotted parts into a (..., n, 1) complex column."""
    parts = [np.asarray(p) for p in parts]
    batch = np.broadcast_shapes(*[p.shape[:-1] for p in parts])
    cols = [np.broadcast_to(p, batch + p.shape[-1:]) for p in parts]
    v = np.concatenate(cols, axis=-1).astype(np.complex128)
    return v[..., None]


def _eta(k: np.ndarray) -> np.ndarray:
    """Antisymmetric matrix with eta(k) m = k x m (k padded to 3 components)."""
    k = _pad_last(np.asarray(k, dtype=float), 3, "cross-product needs <= 3 components")
    batch = k.shape[:-1]
    out = np.zeros(batch + (3, 3))
    k1, k2, k3 = k[..., 0], k[..., 1], k[..., 2]
    out[..., 0, 1] = -k3
    out[..., 0, 2] = k2
    out[..., 1, 0] = k3
    out[..., 1, 2] = -k1
    out[..., 2, 0] = -k2
    out[..., 2, 1] = k1
    return out


def _batched_kron(B: np.ndarray, eye: np.ndarray) -> np.ndarray:
    m = eye.shape[0]
    r, c = B.shape[-2], B.shape[-1]
    out = np.einsum("...ab,cd->...acbd", B, eye)
    return out.reshape(B.shape[:-2] + (r * m, c * m))


def _halton_point(index: int, dims: int) -> np.ndarray:
    primes = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    if dims > len(primes):
        raise ValueError("too many dual dimensions for the sampler")
    out = np.empty(dims)
    for d in range(dims):
        base = primes[d]
        f, x, i = 1.0, 0.0, index
        while i > 0:
            f /= base
            x += f * (i % base)
            i //= base
        out[d] = x
    return out
