"""Quadrinomial APN family over GF(2^(3k)): construction, exhaustive
verification, CCZ-style invariants and machine checks of the argument."""

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    InputError,
    InvalidKS,
    InvalidParams,
    MethodDisagreement,
    NotAPermutation,
    NotASubfield,
    NotQuadratic,
    ReducibleModulus,
    UnsupportedDegree,
    UnsupportedOnThisField,
    WrongDegree,
    ZeroExponent,
)
from .field import FieldCtx, exp_residue, make_field, primitive_elements, two_power
from .vbf import (
    AffineMap,
    UnivariatePoly,
    VBFunction,
    algebraic_degree,
    apply_ea_transform,
    evaluate_poly,
    function_from_spec_dict,
    function_to_spec_dict,
    load_function_spec,
    load_table_file,
    make_poly,
    mobius_anf,
    random_affine_map,
    save_function_spec,
    save_table_file,
)
from .family import (
    FamilyParams,
    N6_FORMS,
    bcfl_binomial,
    construct,
    dillon_trinomial,
    dobbertin,
    enumerate_params,
    family_exponents,
    find_dillon_u,
    gold,
    identity_fn,
    inverse_fn,
    kasami,
    known,
    ks_violations,
    niho,
    random_params,
    specialize_n6,
    validate_params,
    welch,
)
from .spectra import (
    DifferentialSpectrum,
    KernelReport,
    WalshSpectrum,
    component_masks,
    ddt,
    diff_uniformity_exhaustive,
    diff_uniformity_quadratic,
    is_apn,
    walsh_spectrum,
    walsh_transform_row,
)
from .codes import (
    CodeMatrix,
    EquivalenceVerdict,
    InvariantBundle,
    build_code,
    code_dimension,
    compare_bundles,
    compare_invariants,
    invariant_bundle,
    linearized_factor_check,
    weight_enumerator,
)
from .proofsteps import (
    AReport,
    DeltaCoefficients,
    ProofCheck,
    ProofReport,
    a_exponent,
    check_nonvanishing,
    check_reduced_equations,
    compute_a,
    delta_coefficients,
    delta_eval,
    delta_kernel,
    is_power_residue,
    l_theta,
    l_theta_annihilates,
    proof_report,
    sample_theta,
)

__version__ = "0.1.0"
