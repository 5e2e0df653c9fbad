"""Superadditive classical capacity of pure-state channels: square-root
and minimum-error measurements, block-coding mutual information, fast
closed-form code profiles, and decoder synthesis."""

from .detection import (
    Measurement,
    OptimalityReport,
    ThresholdCertificate,
    bayes_cost_reduction,
    check_optimality,
    full_product_code,
    helstrom_binary,
    overlap_matrix,
    product_pom,
    square_root_measurement,
    threshold_certificate,
    tm_family_min_eig,
    verify_sqm_orthonormal,
)
from .ensembles import (
    Code,
    LetterEnsemble,
    build_nn12_code,
    build_simplex_code,
    code_from_text,
    code_to_text,
    codeword_states,
    embed_binary_letters,
    extend_code_sequences,
    gram,
)
from .errors import (
    InvalidInput,
    LinearDependence,
    NoRoot,
    NotPSD,
    ResourceLimit,
    SupaddError,
    Unconverged,
)
from .fastcode import (
    CoefficientTable,
    SimplexProfile,
    SpectralProfile,
    block_gain,
    find_kappa_star,
    nn12_coefficients,
    nn12_error_probability,
    nn12_mutual_information,
    nn12_profile,
    pair_block_information,
    simplex_profile,
)
from .information import (
    CapacityPoint,
    InfoResult,
    binary_flip_probability,
    c1_binary,
    code_information,
    holevo_binary,
    holevo_general,
    memory_effect_residual,
    mutual_information,
    random_collective_max_info,
    separable_pair_info,
    superadditivity_gain,
    threshold_quantities,
)
from .psdlinalg import (
    EigenDecomp,
    eig_sym,
    hadamard,
    is_positive_definite,
    sqrt_psd,
)
from .synth import (
    RotationSchedule,
    SynthesizedUnitary,
    letter_frame,
    reck_decompose,
    reconstruct_unitary,
    schedule_from_csv,
    schedule_to_csv,
    schmidt_extend,
    synthesize_unitary,
    unitary_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "Measurement",
    "OptimalityReport",
    "ThresholdCertificate",
    "bayes_cost_reduction",
    "check_optimality",
    "full_product_code",
    "helstrom_binary",
    "overlap_matrix",
    "product_pom",
    "square_root_measurement",
    "threshold_certificate",
    "tm_family_min_eig",
    "verify_sqm_orthonormal",
    "Code",
    "LetterEnsemble",
    "build_nn12_code",
    "build_simplex_code",
    "code_from_text",
    "code_to_text",
    "codeword_states",
    "embed_binary_letters",
    "extend_code_sequences",
    "gram",
    "InvalidInput",
    "LinearDependence",
    "NoRoot",
    "NotPSD",
    "ResourceLimit",
    "SupaddError",
    "Unconverged",
    "CoefficientTable",
    "SimplexProfile",
    "SpectralProfile",
    "block_gain",
    "find_kappa_star",
    "nn12_coefficients",
    "nn12_error_probability",
    "nn12_mutual_information",
    "nn12_profile",
    "pair_block_information",
    "simplex_profile",
    "CapacityPoint",
    "InfoResult",
    "binary_flip_probability",
    "c1_binary",
    "code_information",
    "holevo_binary",
    "holevo_general",
    "memory_effect_residual",
    "mutual_information",
    "random_collective_max_info",
    "separable_pair_info",
    "superadditivity_gain",
    "threshold_quantities",
    "EigenDecomp",
    "eig_sym",
    "hadamard",
    "is_positive_definite",
    "sqrt_psd",
    "RotationSchedule",
    "SynthesizedUnitary",
    "letter_frame",
    "reck_decompose",
    "reconstruct_unitary",
    "schedule_from_csv",
    "schedule_to_csv",
    "schmidt_extend",
    "synthesize_unitary",
    "unitary_to_text",
    "__version__",
]
