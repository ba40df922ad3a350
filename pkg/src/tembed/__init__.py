"""Exact recurrences for perfect t-embeddings of the two-periodic Aztec diamond."""

from .rings import (
    DualRational,
    GaussianRational,
    dual_lift,
    dual_log_derivative,
    gaussian,
    rational,
    rational_from_str,
    rational_to_str,
    to_float_complex,
)
from .octahedron import InitialData, TField, closed_form_T, coeff_L, coeff_R, density_dual, evolve_T
from .wavefield import BoundaryData, DirectionalSolver, WaveField, fundamental, solve_wave, tilde_gamma
from .dimer import (
    AztecGraph,
    WeightedDimerInstance,
    build_aztec,
    check_T_equals_Z,
    enumerate_Z,
    expect_one_minus_D,
    weights_from_faces,
)
from .embedding import (
    Embedding,
    base_embedding,
    compare_theorem,
    run_recurrence,
    step,
    validate_perfect,
)
from .render import csv_text, read_csv, svg_text, write_csv, write_svg
from .verify import run_suite

__version__ = "0.1.0"
