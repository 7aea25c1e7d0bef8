"""Polynomial forms, the PL de Rham algebra and Sullivan minimal models."""
from .apl import (
    AplAlgebra,
    AplCohomologyReport,
    GlobalForm,
    InconclusiveError,
    apl_basis,
    apl_cohomology,
)
from .forms import (
    Nabla,
    PolynomialForm,
    degeneracy_pullback,
    face_pullback,
    form_keys,
    nabla,
    surjection_pullback,
)
from .minimal import (
    MinimalModelResult,
    NotSimplyConnectedError,
    is_realization_point,
    minimal_model,
    rational_homotopy_dims,
)

__all__ = [
    "AplAlgebra",
    "AplCohomologyReport",
    "GlobalForm",
    "InconclusiveError",
    "apl_basis",
    "apl_cohomology",
    "Nabla",
    "PolynomialForm",
    "degeneracy_pullback",
    "face_pullback",
    "form_keys",
    "nabla",
    "surjection_pullback",
    "MinimalModelResult",
    "NotSimplyConnectedError",
    "is_realization_point",
    "minimal_model",
    "rational_homotopy_dims",
]
