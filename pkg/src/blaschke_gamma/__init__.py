"""Discriminant quotients of finite Blaschke products.

Evaluate the quotient Gamma attached to a degree-n inner generator and a
second holomorphic function, classify the closure of the two-generator
algebra in Hardy spaces or the disk algebra, and expand functions along
fibers of the generator.
"""
from .blaschke import (BlaschkeProduct, CriticalData, Fiber, blaschke_eval,
                       critical_data, discriminant_d, fiber,
                       generator_degree, generator_derivative,
                       generator_eval, generator_is_disk_map,
                       generator_rational, normalize_origin,
                       symmetric_reduce)
from .decompose import (DecompositionReport, DecompositionSample,
                        Degree2Split, MembershipCertificate,
                        MembershipCondition, decomposition_grid,
                        degree2_involution, degree2_membership,
                        degree2_split, fiber_constancy, lagrange_coeffs,
                        raw_lagrange_coeffs, verify_decomposition)
from .errors import (BlaschkeGammaError, DomainError, Inconclusive,
                     NearCriticalPoint, NearDegenerate, NotRational,
                     SpecParseError, StructureNotFound)
from .funcspec import (loads_function_spec, loads_generator,
                       parse_function_spec, parse_generator)
from .gamma import (GammaFunction, GammaSettings, WitnessCase, circle_grid,
                    gamma_eval, gamma_exact, gamma_scaling_law_check,
                    gamma_zero_witness, golden_spiral_grid)
from .oracle import (AnalyticOracle, as_oracle, blaschke_oracle,
                     compose_oracle, poly_oracle, product_oracle,
                     rational_oracle, scale_oracle, singular_inner_oracle,
                     sum_oracle)
from .polycore import (BivariatePoly, ComplexPoly, GaussianRational,
                       RationalFn, RootSet, disk_zero_count, poly_eval,
                       poly_from_roots, poly_gcd, poly_roots, resultant_in)
from .verdict import (Annihilator, DefectReport, VanishingStructure,
                      Verdict, VerdictSettings, annihilator_at_zero,
                      annihilator_self_test, classify, count_zeros_argument,
                      disk_algebra_classify, family_common_zeros,
                      family_min_zero_count, find_zeros, find_zeros_report,
                      monomial_codim, outer_defect, vanishing_structure)

__all__ = [
    # polynomial / rational core
    "ComplexPoly", "GaussianRational", "RationalFn", "RootSet",
    "BivariatePoly", "poly_eval", "poly_roots", "poly_gcd",
    "disk_zero_count", "resultant_in", "poly_from_roots",
    # generators and fibers
    "BlaschkeProduct", "Fiber", "CriticalData", "blaschke_eval", "fiber",
    "critical_data", "discriminant_d", "generator_degree", "generator_eval",
    "generator_rational", "generator_derivative", "generator_is_disk_map",
    "normalize_origin", "symmetric_reduce",
    # oracles and specs
    "AnalyticOracle", "as_oracle", "poly_oracle", "rational_oracle",
    "blaschke_oracle", "singular_inner_oracle", "sum_oracle",
    "product_oracle", "compose_oracle", "scale_oracle",
    "parse_function_spec", "parse_generator", "loads_function_spec",
    "loads_generator",
    # gamma
    "GammaFunction", "GammaSettings", "WitnessCase", "gamma_eval",
    "gamma_exact", "gamma_zero_witness", "gamma_scaling_law_check",
    "golden_spiral_grid", "circle_grid",
    # classification
    "Verdict", "VerdictSettings", "DefectReport", "VanishingStructure",
    "Annihilator", "classify", "disk_algebra_classify", "find_zeros",
    "find_zeros_report", "count_zeros_argument", "outer_defect",
    "vanishing_structure", "annihilator_at_zero", "annihilator_self_test",
    "monomial_codim", "family_common_zeros", "family_min_zero_count",
    # decomposition
    "DecompositionSample", "DecompositionReport", "Degree2Split",
    "MembershipCondition", "MembershipCertificate", "lagrange_coeffs",
    "raw_lagrange_coeffs", "fiber_constancy", "decomposition_grid",
    "verify_decomposition", "degree2_involution", "degree2_split",
    "degree2_membership",
    # errors
    "BlaschkeGammaError", "SpecParseError", "DomainError", "NotRational",
    "Inconclusive", "NearDegenerate", "NearCriticalPoint",
    "StructureNotFound",
]

__version__ = "0.1.0"
