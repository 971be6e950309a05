"""Exact electromagnetic modes on constant-curvature backgrounds.

Matrix (complex 3-vector) form of the vacuum Maxwell equations, closed-form
mode families on the spherical, elliptic and hyperbolic charts in cylindrical
coordinates, and independent numerical verification of every closed form.
"""

from ._accel import KERNELS_COMPILED
from .geometry import ELLIPTIC, FLAT, H3, S3, GeometryContext, SpaceKind
from .modes import (
    ModeSolution,
    SpectrumEntry,
    construct_h3_general,
    construct_h3_k0,
    construct_h3_m0,
    construct_s3,
    construct_s3_general,
    construct_s3_k0,
    construct_s3_m0,
    elliptic_filter,
    spectrum_s3,
)
from .radial import Branch, ModeSpec
from .verify import IntegrationConfig, integrate_radial, residual_scan, shoot_spectrum_s3

__version__ = "0.1.0"

__all__ = [
    "KERNELS_COMPILED",
    "S3", "ELLIPTIC", "H3", "FLAT",
    "GeometryContext", "SpaceKind", "Branch", "ModeSpec",
    "ModeSolution", "SpectrumEntry",
    "construct_s3", "construct_s3_m0", "construct_s3_k0", "construct_s3_general",
    "construct_h3_m0", "construct_h3_k0", "construct_h3_general",
    "spectrum_s3", "elliptic_filter",
    "IntegrationConfig", "integrate_radial", "residual_scan", "shoot_spectrum_s3",
    "__version__",
]
