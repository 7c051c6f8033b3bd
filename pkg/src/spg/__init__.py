"""Strong power graphs of finite groups: construction, exact characteristic
polynomials, closed-form spectra, and verification tooling."""

from .exactalg import (
    InexactDivision,
    IntMatrix,
    IntPolynomial,
    NotPrime,
    PrimeOrTrivialN,
    UnsupportedN,
    adjacency_charpoly_formula,
    bareiss_det,
    binom_power,
    charpoly,
    distance_charpoly_formula,
    permuted,
    poly_div_exact,
    poly_eval,
    poly_mul,
    prime_adjacency_charpoly,
)
from .graphs import (
    DisconnectedGraph,
    SimpleGraph,
    adjacency_matrix,
    components,
    diameter,
    display_order,
    distance_matrix,
    is_complete,
    is_connected,
    matrix_to_csv,
    neighbors,
    strong_power_graph,
    strong_power_graph_structural,
    to_dot,
)
from .groups import (
    CayleyGroup,
    CayleyTableError,
    CyclicGroup,
    DihedralGroup,
    DirectProductGroup,
    GroupSpec,
    is_composite,
    is_prime,
    load_cayley_table,
    totient,
    validate_cayley_table,
)
from .spectra import (
    ClosedFormSpectrum,
    ComplexRoots,
    CountMismatch,
    NoConvergence,
    NonSymmetric,
    NotComposite,
    PrimeOrder,
    SpectrumComparison,
    adjacency_spectrum_closed,
    compare_spectra,
    distance_spectrum_closed,
    solve_cubic_trig,
    spectral_radius_adjacency,
    spectral_radius_distance,
    spectrum_document,
    symmetric_eigenvalues,
)
from .verify import VerificationRecord, VerificationReport, verify_range

__version__ = "0.1.0"
