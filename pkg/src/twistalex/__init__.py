"""Exact computation of twisted Alexander polynomials of links and
verification of Torres-type factorization conditions.

The pipeline: parse an oriented PD diagram, build its Wirtinger
presentation, tensor a unimodular representation with the abelianization,
take determinants of the resulting Alexander matrix over an exact Laurent
polynomial ring, and compare specializations across component deletion.
"""

from .algebra import (LaurentPoly, PolyMatrix, PrimeField, QQ, RationalField,
                      canonical_unit_form, equal_up_to_units, exact_divide,
                      field_from_name)
from .diagram import (Arc, ComponentDeletion, Crossing, LinkDiagram,
                      delete_component, linking_numbers, parse_pd, wirtinger)
from .errors import (DegenerateInputError, DimensionError, ParseError,
                     TwistalexError, ValidationError)
from .freegroup import (GroupRingElement, Presentation, Word, fox_derivative,
                        parse_presentation, parse_word, render_presentation,
                        render_word, word_invert, word_multiply)
from .representation import (Representation, RepresentationFile,
                             parse_representation_file, phi, pullback,
                             reducible_sl2_representations,
                             unimodular_upper_triangular, validate)
from .torres import (ClassicalTorresReport, EpsilonExtraction, TorresReport,
                     bracket_polynomial, cyclotomic_quotient,
                     extract_bracket_coefficients,
                     reducible_bracket_coefficient,
                     triangular_bracket_coefficients, verify_classical_torres,
                     verify_torres)
from .twisted import (AlexanderMatrix, TwistedInvariant, alexander_matrix,
                      classical_alexander, generator_denominator,
                      twisted_invariant)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "PolyMatrix", "PrimeField", "QQ", "RationalField",
    "canonical_unit_form", "equal_up_to_units", "exact_divide", "field_from_name",
    "Arc", "ComponentDeletion", "Crossing", "LinkDiagram", "delete_component",
    "linking_numbers", "parse_pd", "wirtinger",
    "DegenerateInputError", "DimensionError", "ParseError", "TwistalexError",
    "ValidationError",
    "GroupRingElement", "Presentation", "Word", "fox_derivative",
    "parse_presentation", "parse_word", "render_presentation", "render_word",
    "word_invert", "word_multiply",
    "Representation", "RepresentationFile", "parse_representation_file", "phi",
    "pullback", "reducible_sl2_representations", "unimodular_upper_triangular",
    "validate",
    "ClassicalTorresReport", "EpsilonExtraction", "TorresReport",
    "bracket_polynomial", "cyclotomic_quotient", "extract_bracket_coefficients",
    "reducible_bracket_coefficient", "triangular_bracket_coefficients",
    "verify_classical_torres", "verify_torres",
    "AlexanderMatrix", "TwistedInvariant", "alexander_matrix",
    "classical_alexander", "generator_denominator", "twisted_invariant",
]
