from .base import UnivarBackend, UnivariateOracle
from .lagrange import LagrangeBackend, lagrange_interpolate
from .ben_or_tiwari import (BenOrTiwariBackend, bot_interpolate, evaluation_base,
                            simple_roots)
from .berlekamp_massey import berlekamp_massey, connection_polynomial
from .vandermonde import master_polynomial, solve_transposed_vandermonde

__all__ = [
    "UnivarBackend",
    "UnivariateOracle",
    "LagrangeBackend",
    "lagrange_interpolate",
    "BenOrTiwariBackend",
    "bot_interpolate",
    "evaluation_base",
    "simple_roots",
    "berlekamp_massey",
    "connection_polynomial",
    "master_polynomial",
    "solve_transposed_vandermonde",
]
