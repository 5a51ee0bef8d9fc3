"""Exact arithmetic for cell-layer algebras over block-symmetric Laurent rings.

The layers of the algebras studied here are generalized matrix algebras
over the representation ring of a product of general linear groups.  The
package realises that ring as block-symmetric Laurent polynomials with
exact rational coefficients and half-integer powers of a parameter q, and
builds outward: Schur characters and expansions, constant-term inner
products, the layer multiplication and its anti-involution, and
specialisation at rational points to classify simple modules.
"""

from .laurent import (
    BlockShape,
    LaurentPoly,
    Monomial,
    ShapeMismatchError,
    bar_involution,
    constant_term,
    dict_poly,
    evaluate,
    format_poly,
    lp_add,
    lp_mul,
)
from .symfunc import (
    AsymmetricInputError,
    GLWeight,
    SchurExpansion,
    dual_weight,
    format_expansion,
    gl_weights,
    is_symmetric,
    lr_mul,
    schur,
    schur_block,
    schur_expand,
    trivial_weights,
)
from .pairing import (
    PairingContext,
    macdonald_kernel,
    scalar_pairing,
    schur_projection,
    sf_inner,
)
from .cellalg import (
    AxiomCheck,
    AxiomReport,
    CellDatum,
    CellElement,
    DatumMismatchError,
    DatumValidationError,
    ModuleVector,
    WeightData,
    cell_mul,
    format_cell_element,
    layer_idempotent,
    module_pairing,
    q_exponent,
    sharp,
    verify_cell_axioms,
)
from .simples import (
    Classification,
    DrinfeldPoint,
    DrinfeldPolynomial,
    NoRationalRootsError,
    classify_point,
    point_to_polynomial,
    polynomial_to_point,
    specialize_gram,
)
from .exprparse import (
    ParseError,
    parse_blocks,
    parse_cell_element,
    parse_drinfeld_polynomial,
    parse_point,
    parse_poly,
    parse_weight,
)
from .datum_io import (
    DatumParseError,
    format_cell_datum,
    load_cell_datum,
    parse_cell_datum,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricInputError",
    "AxiomCheck",
    "AxiomReport",
    "BlockShape",
    "CellDatum",
    "CellElement",
    "Classification",
    "DatumMismatchError",
    "DatumParseError",
    "DatumValidationError",
    "DrinfeldPoint",
    "DrinfeldPolynomial",
    "GLWeight",
    "LaurentPoly",
    "ModuleVector",
    "Monomial",
    "NoRationalRootsError",
    "PairingContext",
    "ParseError",
    "SchurExpansion",
    "ShapeMismatchError",
    "WeightData",
    "bar_involution",
    "cell_mul",
    "classify_point",
    "constant_term",
    "dict_poly",
    "dual_weight",
    "evaluate",
    "lp_add",
    "lp_mul",
    "format_cell_datum",
    "format_cell_element",
    "format_expansion",
    "format_poly",
    "gl_weights",
    "is_symmetric",
    "layer_idempotent",
    "load_cell_datum",
    "lr_mul",
    "macdonald_kernel",
    "module_pairing",
    "parse_blocks",
    "parse_cell_datum",
    "parse_cell_element",
    "parse_drinfeld_polynomial",
    "parse_point",
    "parse_poly",
    "parse_weight",
    "point_to_polynomial",
    "polynomial_to_point",
    "q_exponent",
    "scalar_pairing",
    "schur",
    "schur_block",
    "schur_expand",
    "schur_projection",
    "sf_inner",
    "sharp",
    "specialize_gram",
    "trivial_weights",
    "verify_cell_axioms",
]
