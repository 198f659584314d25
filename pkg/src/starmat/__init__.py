"""Exact star-product matrix algebra and its map onto the hyperbolic motion group."""

from . import codec, errors
from .checks import PROPERTIES, run_check
from .expr import evaluate, format_value, parse
from .group import (hn_decompose, is_star_invertible, star_inverse, star_power,
                    zero_divisor_witness)
from .hyperbolic import (HypRotation, Motion, Vec2, alpha, beta, embed_affine, gamma, phi_map,
                         phi_real, psi, rho)
from .matrix import Matrix, star
from .scalars import FLOAT, RATIONAL

__version__ = "0.1.0"

__all__ = [
    "FLOAT", "PROPERTIES", "RATIONAL", "HypRotation", "Matrix", "Motion", "Vec2", "alpha",
    "beta", "codec", "embed_affine", "errors", "evaluate", "format_value", "gamma",
    "hn_decompose", "is_star_invertible", "parse", "phi_map", "phi_real", "psi", "rho",
    "run_check", "star", "star_inverse", "star_power", "zero_divisor_witness",
]
