"""Transcription tables for every catalog model.

Each model's constitutive matrix is assembled exclusively from its entry list
below; the same list is the machine-readable audit map (tests re-interpret it
independently and demand exact equality with the built matrix, plus 100%
coverage of nonzero entries).

Entry semantics: the block at (row, col) receives
``scale * prod(scalars...) * base`` where ``base`` is selected by ``kind``:

==========  ================================================================
kind        base block
==========  ================================================================
iso         identity on the (square) block
scalar      1x1 one
tensor      matrix-valued param (block-shaped)
tensor4     4-index param reshaped row-major to (r1*r2, c1*c2)
row_vec     vector param as a 1 x c row
col_vec     vector param as an r x 1 column
flat_col    matrix param flattened row-major to an (r1*r2) x 1 column
flat_row    matrix param flattened row-major to a 1 x (c1*c2) row
conv_row    [(i),(k,l)] = v_k delta_il  (advection row acting on a gradient)
iso_proj    projector onto matrices proportional to the identity (trace/d)
third       3-index param reshaped to (r1*r2, c)
third_T     3-index param reshaped to (r, c1*c2): [(k),(i,j)] = P[i,j,k]
==========  ================================================================

``const`` entries carry an inline value instead of a param name.  ``scalars``
names scalar-valued params multiplied in (in order).  Derived params are
evaluated from the ``derived`` spec before assembly and behave like inputs.
"""

from __future__ import annotations

import numpy as np

# derived-value operators: ("param", name), ("const", v), ("mul", a, b),
# ("add", a, b), ("sub", a, b), ("neg", a), ("recip", a), ("inv", m),
# ("transpose", m), ("matvec", m, v), ("momentum_coords",)

MODELS: dict[str, dict] = {}


def _model(mid, **kw):
    kw["id"] = mid
    MODELS[mid] = kw
    return kw


_model(
    "convective_diffusion",
    equation="x12",
    description="Heat/particle diffusion in a convecting medium (dynamic form)",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="G",
    params=[
        ("K", "matrix", {"symmetry": "symmetric"}),
        ("alpha", "scalar", {"default": 1.0}),
        ("v", "vector", {"default": 0.0}),
    ],
    derived={},
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "K"},
        {"row": "dt", "col": "val", "kind": "scalar", "scalars": ["alpha"], "scale": 0.5j},
        {"row": "val", "col": "grad", "kind": "row_vec", "param": "v", "scale": -1.0},
        {"row": "val", "col": "dt", "kind": "scalar", "scalars": ["alpha"], "scale": -0.5j},
    ],
    sources=["val"],
)

_model(
    "diffusion_laplace",
    equation="lp1",
    description="Diffusion with convection in the Laplace domain (no time axis)",
    needs_time="forbidden",
    blocks=[("grad", ("d",)), ("val", ())],
    gamma="poisson",
    params=[
        ("K", "matrix", {}),
        ("alpha", "cscalar", {"default": 1.0}),
        ("p", "cconst", {}),
        ("v", "vector", {"default": 0.0}),
    ],
    derived={},
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "K"},
        {"row": "val", "col": "grad", "kind": "row_vec", "param": "v", "scale": -1.0},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["p", "alpha"]},
    ],
    sources=["val"],
)

_model(
    "light_diffusion",
    equation="ld",
    description="Light diffusion with absorption in a convecting medium",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="G",
    params=[
        ("D", "matrix", {}),
        ("c", "scalar", {}),
        ("mu_a", "scalar", {"default": 0.0}),
        ("v", "vector", {"default": 0.0}),
    ],
    derived={},
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "D"},
        {"row": "dt", "col": "val", "kind": "scalar", "scalars": ["c"], "scale": 0.5j},
        {"row": "val", "col": "grad", "kind": "row_vec", "param": "v", "scale": -1.0},
        {"row": "val", "col": "dt", "kind": "scalar", "scalars": ["c"], "scale": -0.5j},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["mu_a"]},
    ],
    sources=["val"],
)

_model(
    "reaction_diffusion_slaved",
    equation="rdeslave",
    description="Concentration slaved to an already-solved autocatalytic partner",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="G",
    params=[
        ("D_B", "matrix", {}),
        ("k_rate", "scalar", {}),
        ("A_bg", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "D_B"},
        {"row": "dt", "col": "val", "kind": "scalar", "scale": 0.5j},
        {"row": "val", "col": "dt", "kind": "scalar", "scale": -0.5j},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["k_rate", "A_bg"]},
    ],
    sources=["val"],
)

_model(
    "reaction_diffusion_two_species",
    equation="rde3",
    description="Linearized two-species autocatalytic reaction-diffusion",
    blocks=[
        ("gradA", ("d",)), ("dtA", ()), ("valA", ()),
        ("gradB", ("d",)), ("dtB", ()), ("valB", ()),
    ],
    gamma="G+G",
    params=[
        ("D_A", "matrix", {}),
        ("D_B", "matrix", {}),
        ("k_rate", "scalar", {}),
        ("A_bg", "scalar", {}),
        ("B_bg", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "gradA", "col": "gradA", "kind": "tensor", "param": "D_A"},
        {"row": "dtA", "col": "valA", "kind": "scalar", "scale": 0.5j},
        {"row": "valA", "col": "dtA", "kind": "scalar", "scale": -0.5j},
        {"row": "valA", "col": "valA", "kind": "scalar", "scalars": ["k_rate", "B_bg"], "scale": -1.0},
        {"row": "valA", "col": "valB", "kind": "scalar", "scalars": ["k_rate", "A_bg"], "scale": -1.0},
        {"row": "gradB", "col": "gradB", "kind": "tensor", "param": "D_B"},
        {"row": "dtB", "col": "valB", "kind": "scalar", "scale": 0.5j},
        {"row": "valB", "col": "valA", "kind": "scalar", "scalars": ["k_rate", "B_bg"]},
        {"row": "valB", "col": "dtB", "kind": "scalar", "scale": -0.5j},
        {"row": "valB", "col": "valB", "kind": "scalar", "scalars": ["k_rate", "A_bg"]},
    ],
    sources=["valA", "valB"],
)

_model(
    "predator_prey",
    equation="rde7",
    description="Linearized two-population model with migration and diffusion",
    blocks=[
        ("gradA", ("d",)), ("dtA", ()), ("valA", ()),
        ("gradB", ("d",)), ("dtB", ()), ("valB", ()),
    ],
    gamma="G+G",
    params=[
        ("D_A", "matrix", {}),
        ("D_B", "matrix", {}),
        ("c_A", "vector", {}),
        ("c_B", "vector", {}),
        ("f_A", "scalar", {}),
        ("f_B", "scalar", {}),
        ("g_A", "scalar", {}),
        ("g_B", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "gradA", "col": "gradA", "kind": "tensor", "param": "D_A"},
        {"row": "dtA", "col": "valA", "kind": "scalar", "scale": 0.5j},
        {"row": "valA", "col": "gradA", "kind": "row_vec", "param": "c_A"},
        {"row": "valA", "col": "dtA", "kind": "scalar", "scale": -0.5j},
        {"row": "valA", "col": "valA", "kind": "scalar", "scalars": ["f_A"], "scale": -1.0},
        {"row": "valA", "col": "valB", "kind": "scalar", "scalars": ["f_B"], "scale": -1.0},
        {"row": "gradB", "col": "gradB", "kind": "tensor", "param": "D_B"},
        {"row": "dtB", "col": "valB", "kind": "scalar", "scale": 0.5j},
        {"row": "valB", "col": "valA", "kind": "scalar", "scalars": ["g_A"], "scale": -1.0},
        {"row": "valB", "col": "gradB", "kind": "row_vec", "param": "c_B"},
        {"row": "valB", "col": "dtB", "kind": "scalar", "scale": -0.5j},
        {"row": "valB", "col": "valB", "kind": "scalar", "scalars": ["g_B"], "scale": -1.0},
    ],
    sources=["valA", "valB"],
)

_model(
    "nernst_planck_fixed_potential",
    equation="np3",
    description="Charged-species electrodiffusion in a fixed electric potential",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="G",
    params=[
        ("D", "matrix", {}),
        ("beta", "scalar", {}),
        ("q_charge", "const", {}),
        ("grad_phi", "vector", {}),
        ("v", "vector", {"default": 0.0}),
    ],
    derived={
        "drift": (
            "sub",
            ("mul", ("mul", ("param", "beta"), ("param", "q_charge")),
             ("matvec", ("param", "D"), ("param", "grad_phi"))),
            ("param", "v"),
        ),
    },
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "D"},
        {"row": "grad", "col": "val", "kind": "col_vec", "param": "drift"},
        {"row": "dt", "col": "val", "kind": "scalar", "scale": 0.5j},
        {"row": "val", "col": "dt", "kind": "scalar", "scale": -0.5j},
    ],
    sources=["val"],
)

_model(
    "nernst_planck_poisson",
    equation="np6",
    description="Single-species electrodiffusion coupled to the Poisson equation",
    blocks=[("phi_grad", ("d",)), ("phi_val", ()), ("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="poisson+G",
    params=[
        ("eps", "matrix", {"symmetry": "hermitian"}),
        ("D", "matrix", {}),
        ("beta", "scalar", {}),
        ("q_charge", "const", {}),
        ("rho_bg", "scalar", {}),
        ("grad_phi", "vector", {}),
        ("v", "vector", {"default": 0.0}),
    ],
    derived={
        "drift": (
            "sub",
            ("mul", ("mul", ("param", "beta"), ("param", "q_charge")),
             ("matvec", ("param", "D"), ("param", "grad_phi"))),
            ("param", "v"),
        ),
        "D_beta_q_rho": (
            "mul",
            ("mul", ("param", "beta"), ("mul", ("param", "q_charge"), ("param", "rho_bg"))),
            ("param", "D"),
        ),
    },
    entries=[
        {"row": "phi_grad", "col": "phi_grad", "kind": "tensor", "param": "eps"},
        {"row": "phi_val", "col": "val", "kind": "scalar", "scalars": ["q_charge"], "scale": -1.0},
        {"row": "grad", "col": "phi_grad", "kind": "tensor", "param": "D_beta_q_rho"},
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "D"},
        {"row": "grad", "col": "val", "kind": "col_vec", "param": "drift"},
        {"row": "dt", "col": "val", "kind": "scalar", "scale": 0.5j},
        {"row": "val", "col": "dt", "kind": "scalar", "scale": -0.5j},
    ],
    sources=["phi_val", "val"],
)

_model(
    "semiconductor",
    equation="sc2",
    description="Linearized electron/hole drift-diffusion with the Poisson equation",
    blocks=[
        ("e_grad", ("d",)), ("e_val", ()),
        ("n_grad", ("d",)), ("n_dt", ()), ("n_val", ()),
        ("p_grad", ("d",)), ("p_dt", ()), ("p_val", ()),
    ],
    gamma="poisson+G+G",
    params=[
        ("eps", "matrix", {"symmetry": "hermitian"}),
        ("q_charge", "const", {}),
        ("n_bg", "scalar", {}),
        ("p_bg", "scalar", {}),
        ("mu_n", "matrix", {}),
        ("mu_p", "matrix", {}),
        ("D_n", "matrix", {}),
        ("D_p", "matrix", {}),
        ("e_bg", "vector", {}),
    ],
    derived={
        "qn_mu_n": ("mul", ("mul", ("param", "q_charge"), ("param", "n_bg")), ("param", "mu_n")),
        "qp_mu_p": ("mul", ("mul", ("param", "q_charge"), ("param", "p_bg")), ("param", "mu_p")),
        "qD_n": ("mul", ("param", "q_charge"), ("param", "D_n")),
        "qD_p": ("mul", ("param", "q_charge"), ("param", "D_p")),
        "q_mu_n_e": ("mul", ("param", "q_charge"), ("matvec", ("param", "mu_n"), ("param", "e_bg"))),
        "q_mu_p_e": ("mul", ("param", "q_charge"), ("matvec", ("param", "mu_p"), ("param", "e_bg"))),
    },
    entries=[
        {"row": "e_grad", "col": "e_grad", "kind": "tensor", "param": "eps"},
        {"row": "e_val", "col": "n_val", "kind": "scalar", "scalars": ["q_charge"]},
        {"row": "e_val", "col": "p_val", "kind": "scalar", "scalars": ["q_charge"], "scale": -1.0},
        {"row": "n_grad", "col": "e_grad", "kind": "tensor", "param": "qn_mu_n"},
        {"row": "n_grad", "col": "n_grad", "kind": "tensor", "param": "qD_n"},
        {"row": "n_grad", "col": "n_val", "kind": "col_vec", "param": "q_mu_n_e"},
        {"row": "n_dt", "col": "n_val", "kind": "scalar", "scalars": ["q_charge"], "scale": 0.5j},
        {"row": "n_val", "col": "n_dt", "kind": "scalar", "scalars": ["q_charge"], "scale": -0.5j},
        {"row": "p_grad", "col": "e_grad", "kind": "tensor", "param": "qp_mu_p"},
        {"row": "p_grad", "col": "p_grad", "kind": "tensor", "param": "qD_p", "scale": -1.0},
        {"row": "p_grad", "col": "p_val", "kind": "col_vec", "param": "q_mu_p_e"},
        {"row": "p_dt", "col": "p_val", "kind": "scalar", "scalars": ["q_charge"], "scale": -0.5j},
        {"row": "p_val", "col": "p_dt", "kind": "scalar", "scalars": ["q_charge"], "scale": 0.5j},
    ],
    sources=["e_val", "n_val", "p_val"],
)

_model(
    "spintronic",
    equation="pse3",
    description="Linearized two-component spin drift-diffusion",
    blocks=[
        ("v_grad", ("d",)),
        ("up_grad", ("d",)), ("up_dt", ()), ("up_val", ()),
        ("dn_grad", ("d",)), ("dn_dt", ()), ("dn_val", ()),
    ],
    gamma="long+G+G",
    params=[
        ("q_charge", "const", {}),
        ("D", "matrix", {}),
        ("mu", "matrix", {}),
        ("n_up", "scalar", {}),
        ("n_dn", "scalar", {}),
        ("e_bg", "vector", {}),
        ("tau_sf", "const", {}),
    ],
    derived={
        "sigma_up": ("mul", ("mul", ("param", "q_charge"), ("param", "n_up")), ("param", "mu")),
        "sigma_dn": ("mul", ("mul", ("param", "q_charge"), ("param", "n_dn")), ("param", "mu")),
        "qD": ("mul", ("param", "q_charge"), ("param", "D")),
        "q_mu_e": ("mul", ("param", "q_charge"), ("matvec", ("param", "mu"), ("param", "e_bg"))),
        "q_over_2tau": ("mul", ("const", 0.5), ("mul", ("param", "q_charge"), ("recip", ("param", "tau_sf")))),
    },
    entries=[
        {"row": "up_grad", "col": "v_grad", "kind": "tensor", "param": "sigma_up"},
        {"row": "up_grad", "col": "up_grad", "kind": "tensor", "param": "qD"},
        {"row": "up_grad", "col": "up_val", "kind": "col_vec", "param": "q_mu_e"},
        {"row": "up_dt", "col": "up_val", "kind": "scalar", "scalars": ["q_charge"], "scale": -0.5j},
        {"row": "up_val", "col": "up_dt", "kind": "scalar", "scalars": ["q_charge"], "scale": 0.5j},
        {"row": "up_val", "col": "up_val", "kind": "scalar", "scalars": ["q_over_2tau"]},
        {"row": "up_val", "col": "dn_val", "kind": "scalar", "scalars": ["q_over_2tau"], "scale": -1.0},
        {"row": "dn_grad", "col": "v_grad", "kind": "tensor", "param": "sigma_dn"},
        {"row": "dn_grad", "col": "dn_grad", "kind": "tensor", "param": "qD"},
        {"row": "dn_grad", "col": "dn_val", "kind": "col_vec", "param": "q_mu_e"},
        {"row": "dn_dt", "col": "dn_val", "kind": "scalar", "scalars": ["q_charge"], "scale": -0.5j},
        {"row": "dn_val", "col": "up_val", "kind": "scalar", "scalars": ["q_over_2tau"], "scale": -1.0},
        {"row": "dn_val", "col": "dn_dt", "kind": "scalar", "scalars": ["q_charge"], "scale": 0.5j},
        {"row": "dn_val", "col": "dn_val", "kind": "scalar", "scalars": ["q_over_2tau"]},
    ],
    sources=["up_val", "dn_val"],
)

_model(
    "nmr_bloch_torrey",
    equation="nmr4",
    description="Magnetization dynamics with diffusion and relaxation",
    blocks=[("gradm", ("d", "3")), ("dtm", ("3",)), ("m", ("3",))],
    gamma="G_lift3",
    params=[
        ("D4", "tensor4_nmr", {}),
        ("C", "matrix33", {}),
    ],
    derived={},
    entries=[
        {"row": "gradm", "col": "gradm", "kind": "tensor4", "param": "D4"},
        {"row": "dtm", "col": "m", "kind": "iso", "scale": 0.5j},
        {"row": "m", "col": "dtm", "kind": "iso", "scale": -0.5j},
        {"row": "m", "col": "m", "kind": "tensor", "param": "C", "scale": -1.0},
    ],
    sources=["gradm", "m"],
)

_model(
    "radiative_transfer",
    equation="rt4",
    description="Radiative transfer over a discrete-ordinates direction set",
    blocks="radiative",  # generated per direction count
    gamma="radiative",
    params=[
        ("c", "scalar", {}),
        ("mu_s", "const", {}),
        ("mu_t", "const", {"default": -1.0}),   # -1 sentinel: derive as mu_a + mu_s
        ("mu_a", "const", {"default": 0.0}),
        ("directions", "object", {}),
        ("phase", "object", {"default": "isotropic"}),
    ],
    derived={},
    entries="radiative",
    sources="radiative",
)

_model(
    "boltzmann_bgk",
    equation="bzm2",
    description="Phase-space single-relaxation-time kinetic model",
    needs_momentum=True,
    blocks=[("gradx", ("d",)), ("gradp", ("dp",)), ("dt", ()), ("val", ())],
    gamma="boltzmann",
    params=[
        ("m_mass", "const", {}),
        ("F", "vector_p", {}),
        ("nu", "scalar", {}),
        ("p_coords", "vector_p", {"default": "momentum_coords"}),
    ],
    derived={
        "p_over_m": ("mul", ("recip", ("param", "m_mass")), ("param", "p_coords")),
    },
    entries=[
        {"row": "dt", "col": "val", "kind": "scalar", "scale": 0.5j},
        {"row": "val", "col": "gradx", "kind": "row_vec", "param": "p_over_m", "scale": -1.0},
        {"row": "val", "col": "gradp", "kind": "row_vec", "param": "F", "scale": -1.0},
        {"row": "val", "col": "dt", "kind": "scalar", "scale": -0.5j},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["nu"], "scale": -1.0},
    ],
    sources=["val"],
)

_model(
    "boussinesq",
    equation="Bou5",
    description="Perturbed buoyant flow with penalized incompressibility",
    blocks=[
        ("gradv", ("d", "d")), ("dtv", ("d",)), ("v", ("d",)),
        ("gradT", ("d",)), ("dtT", ()), ("T", ()),
    ],
    gamma="G_liftd+G",
    params=[
        ("lambda_h", "const", {}),
        ("v_bg", "vector", {}),
        ("grad_v_bg", "matrix", {}),
        ("rho_b", "scalar", {}),
        ("alpha", "scalar", {}),
        ("g", "vector", {}),
        ("K", "scalar", {}),
        ("T0", "const", {}),
        ("grad_T_bg", "vector", {}),
    ],
    derived={
        "grad_v_bg_T": ("transpose", ("param", "grad_v_bg")),
        "alpha_rho_g": ("mul", ("mul", ("param", "alpha"), ("param", "rho_b")), ("param", "g")),
    },
    entries=[
        {"row": "gradv", "col": "gradv", "kind": "iso_proj", "scalars": ["lambda_h"]},
        {"row": "v", "col": "gradv", "kind": "conv_row", "param": "v_bg"},
        {"row": "v", "col": "v", "kind": "tensor", "param": "grad_v_bg_T"},
        {"row": "v", "col": "v", "kind": "iso", "scalars": ["rho_b"]},
        {"row": "v", "col": "T", "kind": "col_vec", "param": "alpha_rho_g"},
        {"row": "gradT", "col": "gradT", "kind": "iso", "scalars": ["K"]},
        {"row": "dtT", "col": "T", "kind": "scalar", "scale": 0.5j},
        {"row": "T", "col": "v", "kind": "row_vec", "param": "grad_T_bg"},
        {"row": "T", "col": "gradT", "kind": "row_vec", "param": "v_bg"},
        {"row": "T", "col": "dtT", "kind": "scalar", "scale": -0.5j},
    ],
    sources=["v"],
)

_model(
    "acoustics",
    equation="x11xx",
    description="Dynamic pressure waves in a nondispersive fluid",
    blocks=[("gradP", ("d",)), ("dtP", ())],
    gamma="N",
    params=[
        ("rho", "scalar", {}),
        ("kappa", "scalar", {}),
    ],
    derived={
        "inv_rho": ("recip", ("param", "rho")),
        "inv_kappa": ("recip", ("param", "kappa")),
    },
    entries=[
        {"row": "gradP", "col": "gradP", "kind": "iso", "scalars": ["inv_rho"], "scale": -1.0},
        {"row": "dtP", "col": "dtP", "kind": "scalar", "scalars": ["inv_kappa"]},
    ],
    sources=[],
)

_model(
    "elastodynamics",
    equation="x7a",
    description="Dynamic stress waves in a nondispersive elastic solid",
    blocks=[("gradv", ("d", "d")), ("dtv", ("d",))],
    gamma="N_liftd",
    params=[
        ("C", "tensor4", {"symmetry": "minor"}),
        ("rho", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "gradv", "col": "gradv", "kind": "tensor4", "param": "C", "scale": -1.0},
        {"row": "dtv", "col": "dtv", "kind": "iso", "scalars": ["rho"]},
    ],
    sources=[],
)

_model(
    "thermoelasticity",
    equation="x7b1",
    description="Coupled stress waves and rapid heat-flux dynamics",
    blocks=[
        ("gradv", ("d", "d")), ("dtv", ("d",)),
        ("gradth", ("d",)), ("dtth", ()), ("th", ()),
    ],
    gamma="N_liftd+Y",
    params=[
        ("C", "tensor4", {"symmetry": "minor"}),
        ("rho", "scalar", {}),
        ("K", "matrix", {}),
        ("T0", "const", {}),
        ("tau", "const", {}),
        ("c_heat", "scalar", {}),
        ("beta", "matrix", {"symmetry": "symmetric"}),
    ],
    derived={
        "beta_T0": ("mul", ("param", "T0"), ("param", "beta")),
        "K_T0_over_tau": ("mul", ("mul", ("param", "T0"), ("recip", ("param", "tau"))), ("param", "K")),
        "rho_c": ("mul", ("param", "rho"), ("param", "c_heat")),
    },
    entries=[
        {"row": "gradv", "col": "gradv", "kind": "tensor4", "param": "C"},
        {"row": "gradv", "col": "dtth", "kind": "flat_col", "param": "beta_T0", "scale": -1.0},
        {"row": "dtv", "col": "dtv", "kind": "iso", "scalars": ["rho"], "scale": -1.0},
        {"row": "gradth", "col": "gradth", "kind": "tensor", "param": "K_T0_over_tau", "scale": -1.0},
        {"row": "dtth", "col": "gradv", "kind": "flat_row", "param": "beta_T0", "scale": -1.0},
        {"row": "dtth", "col": "dtth", "kind": "scalar", "scalars": ["rho_c"], "scale": -1.0},
    ],
    sources=["dtv", "th"],
)

_model(
    "piezoelectricity",
    equation="x7b2",
    description="Dynamic elasticity quasistatically coupled to the electric field",
    blocks=[("strain", ("d", "d")), ("dtv", ("d",)), ("dte", ("d",))],
    gamma="N_liftd+long",
    params=[
        ("C", "tensor4", {"symmetry": "minor"}),
        ("A3", "third", {}),
        ("rho", "scalar", {}),
        ("eps", "matrix", {"symmetry": "hermitian"}),
    ],
    derived={},
    entries=[
        {"row": "strain", "col": "strain", "kind": "tensor4", "param": "C", "scale": -1.0},
        {"row": "strain", "col": "dte", "kind": "third", "param": "A3", "scale": -1.0},
        {"row": "dtv", "col": "dtv", "kind": "iso", "scalars": ["rho"]},
        {"row": "dte", "col": "strain", "kind": "third_T", "param": "A3", "scale": -1.0},
        {"row": "dte", "col": "dte", "kind": "tensor", "param": "eps"},
    ],
    sources=[],
)

_model(
    "poroelasticity",
    equation="x7b3",
    description="High-frequency solid/fluid wave coupling in a porous medium",
    blocks=[("gradv", ("d", "d")), ("dtv", ("d",)), ("divw", ()), ("dtw", ("d",))],
    gamma="N_liftd+fluid",
    params=[
        ("C", "tensor4", {"symmetry": "minor"}),
        ("M_c", "matrix", {"symmetry": "symmetric"}),
        ("M_scalar", "scalar", {}),
        ("rho", "scalar", {}),
        ("rho_f", "const", {}),
        ("m_inertia", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "gradv", "col": "gradv", "kind": "tensor4", "param": "C", "scale": -1.0},
        {"row": "gradv", "col": "divw", "kind": "flat_col", "param": "M_c"},
        {"row": "dtv", "col": "dtv", "kind": "iso", "scalars": ["rho"]},
        {"row": "dtv", "col": "dtw", "kind": "iso", "scalars": ["rho_f"]},
        {"row": "divw", "col": "gradv", "kind": "flat_row", "param": "M_c"},
        {"row": "divw", "col": "divw", "kind": "scalar", "scalars": ["M_scalar"]},
        {"row": "dtw", "col": "dtv", "kind": "iso", "scalars": ["rho_f"]},
        {"row": "dtw", "col": "dtw", "kind": "iso", "scalars": ["m_inertia"]},
    ],
    sources=[],
)

_model(
    "em",
    equation="x14",
    description="Full dynamic electromagnetism in a nondispersive medium",
    blocks=[("b", ("3",)), ("e", ("3",))],
    gamma="em",
    params=[
        ("mu", "matrix33", {"symmetry": "hermitian"}),
        ("eps", "matrix33", {"symmetry": "hermitian"}),
    ],
    derived={
        "inv_mu": ("inv", ("param", "mu")),
    },
    entries=[
        {"row": "b", "col": "b", "kind": "tensor", "param": "inv_mu", "scale": -1.0},
        {"row": "e", "col": "e", "kind": "tensor", "param": "eps"},
    ],
    sources=["b", "e"],
)

_model(
    "schrodinger",
    equation="x19a",
    description="Full dynamic wavefunction evolution with a stationary potential",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="S",
    params=[
        ("A", "matrix", {"symmetry": "hermitian"}),
        ("V", "scalar", {}),
        ("hbar", "const", {"default": 1.0}),
    ],
    derived={},
    entries=[
        {"row": "grad", "col": "grad", "kind": "tensor", "param": "A", "scale": -1.0},
        {"row": "dt", "col": "val", "kind": "scalar", "scalars": ["hbar"], "scale": -0.5j},
        {"row": "val", "col": "dt", "kind": "scalar", "scalars": ["hbar"], "scale": 0.5j},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["V"], "scale": -1.0},
    ],
    sources=["val"],
)

_model(
    "schrodinger_magnetic",
    equation="x20",
    description="Single-particle wavefunction evolution in a magnetic potential",
    blocks=[("grad", ("d",)), ("dt", ()), ("val", ())],
    gamma="S",
    params=[
        ("m_mass", "const", {}),
        ("e_charge", "const", {"default": 1.0}),
        ("q_charge", "const", {"default": 1.0}),
        ("Phi", "vector", {"default": 0.0}),
        ("V", "scalar", {"default": 0.0}),
    ],
    derived={
        "inv_2m": ("recip", ("mul", ("const", 2.0), ("param", "m_mass"))),
        "phi_coef": ("mul", ("mul", ("param", "e_charge"), ("recip", ("mul", ("const", 2.0), ("param", "m_mass")))), ("param", "Phi")),
    },
    entries=[
        {"row": "grad", "col": "grad", "kind": "iso", "scalars": ["inv_2m"], "scale": -1.0},
        {"row": "grad", "col": "val", "kind": "col_vec", "param": "phi_coef", "scale": 1.0j},
        {"row": "val", "col": "grad", "kind": "row_vec", "param": "phi_coef", "scale": -1.0j},
        {"row": "dt", "col": "val", "kind": "scalar", "scale": -0.5j},
        {"row": "val", "col": "dt", "kind": "scalar", "scale": 0.5j},
        {"row": "val", "col": "val", "kind": "scalar", "scalars": ["q_charge", "V"], "scale": -1.0},
    ],
    sources=["val"],
)

_model(
    "superfluid",
    equation="sf5",
    description="Linearized two-fluid dynamics (first and second sound)",
    blocks=[("divn", ()), ("dtn", ("d",)), ("divs", ()), ("dts", ("d",))],
    gamma="fluid+fluid",
    params=[
        ("c1", "scalar", {}),
        ("c2", "scalar", {}),
        ("c3", "scalar", {}),
        ("rho_n", "scalar", {}),
        ("rho_s", "scalar", {}),
    ],
    derived={},
    entries=[
        {"row": "divn", "col": "divn", "kind": "scalar", "scalars": ["c1"]},
        {"row": "divn", "col": "divs", "kind": "scalar", "scalars": ["c2"]},
        {"row": "dtn", "col": "dtn", "kind": "iso", "scalars": ["rho_n"], "scale": -1.0},
        {"row": "divs", "col": "divn", "kind": "scalar", "scalars": ["c2"]},
        {"row": "divs", "col": "divs", "kind": "scalar", "scalars": ["c3"]},
        {"row": "dts", "col": "dts", "kind": "iso", "scalars": ["rho_s"], "scale": -1.0},
    ],
    sources=[],
)


def radiative_blocks(ndir: int) -> list[tuple[str, tuple]]:
    blocks = []
    for i in range(ndir):
        blocks += [(f"dir{i}_grad", ("d",)), (f"dir{i}_dt", ()), (f"dir{i}_val", ())]
    return blocks


def radiative_entries(ndir: int, directions: np.ndarray, W: np.ndarray, dim: int) -> list[dict]:
    """Per-direction transport blocks plus the dense scattering coupling."""
    entries: list[dict] = []
    for i in range(ndir):
        entries.append({"row": f"dir{i}_dt", "col": f"dir{i}_val", "kind": "scalar",
                        "scalars": ["c"], "scale": 0.5j})
        entries.append({"row": f"dir{i}_val", "col": f"dir{i}_grad", "kind": "row_vec",
                        "const": directions[i, :dim].copy(), "scalars": ["c"], "scale": -1.0})
        entries.append({"row": f"dir{i}_val", "col": f"dir{i}_dt", "kind": "scalar",
                        "scalars": ["c"], "scale": -0.5j})
        for j in range(ndir):
            w = complex(W[i, j])
            if w != 0.0:
                entries.append({"row": f"dir{i}_val", "col": f"dir{j}_val", "kind": "scalar",
                                "const": w, "scale": -1.0})
    return entries


def radiative_sources(ndir: int) -> list[str]:
    return [f"dir{i}_val" for i in range(ndir)]
