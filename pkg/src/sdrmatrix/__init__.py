"""Exact lower-triangular combinatorial matrices and Star-of-David checks."""

from .algebra import (hadamard_inverse, hadamard_power, hadamard_product, matmul, matrix_power,
                      product_inverse_closed, product_power_closed, series_inverse_B,
                      series_power_C, tri_inverse)
from .minors import det, minor_triangle, toeplitz_minor_closed
from .riordan import (RiordanPair, Series, riordan_inverse, riordan_mul, riordan_window,
                      series_comp_inverse, series_compose, series_mul, series_reciprocal)
from .sdr import check_identity, check_order, infinity_evidence, max_order
from .triangle import (Triangle, Window, build_triangle, entry, materialize, sequence_eval)

__version__ = "0.1.0"
