"""Exact point counting, bounds, and extremal constructions over small finite fields."""

from .bounds import (
    BoundReport,
    CSV_FIELDS,
    MarginReport,
    bound_affine,
    bound_conjectural,
    bound_equidimensional,
    bound_linear_arrangement,
    bound_projective,
    bound_serre,
    csv_row,
    restriction_margin,
    section_scale,
    tubular_count,
    tubular_report,
)
from .constructions import (
    ArrangementSpec,
    FlowerSpec,
    SpreadSpec,
    build_extremal_arrangement,
    build_flower,
    build_partial_spread,
    enumerate_subspaces,
    exact_linear_count,
    to_variety_doc,
)
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    InvalidSpecError,
    ParseError,
    ToolkitError,
)
from .gf import (
    FieldElement,
    FieldSpec,
    enumerate_field,
    field_arith,
    field_from_order,
    make_field,
)
from .groebner import (
    GroebnerBasis,
    HilbertData,
    Ideal,
    buchberger,
    hilbert,
    hilbert_of_ideal,
    hyperplane_section,
    normal_form,
)
from .incidence import (
    IncidenceCensus,
    census_linear_component,
    census_through_point,
)
from .mpoly import (
    GREVLEX,
    LEX,
    Polynomial,
    enumerate_forms,
    monomials_of_degree,
    parse_poly,
)
from .projgeom import (
    LinearSubspace,
    PiSequence,
    ProjectivePoint,
    enumerate_hyperplanes,
    enumerate_points,
    pi,
    point_from_text,
)
from .variety import (
    AffineChart,
    Classification,
    Component,
    PointCount,
    Variety,
    affine_chart,
    classify_components,
    count_points,
    dimension_degree_sequences,
    load_variety,
    load_variety_file,
    rational_points,
)

__all__ = [
    "AffineChart",
    "ArrangementSpec",
    "BoundReport",
    "BudgetExceededError",
    "CSV_FIELDS",
    "Classification",
    "Component",
    "FieldElement",
    "FieldSpec",
    "FlowerSpec",
    "GREVLEX",
    "GroebnerBasis",
    "HilbertData",
    "Ideal",
    "IncidenceCensus",
    "InfeasibleError",
    "InvalidSpecError",
    "LEX",
    "LinearSubspace",
    "MarginReport",
    "ParseError",
    "PiSequence",
    "PointCount",
    "Polynomial",
    "ProjectivePoint",
    "SpreadSpec",
    "ToolkitError",
    "Variety",
    "affine_chart",
    "bound_affine",
    "bound_conjectural",
    "bound_equidimensional",
    "bound_linear_arrangement",
    "bound_projective",
    "bound_serre",
    "buchberger",
    "build_extremal_arrangement",
    "build_flower",
    "build_partial_spread",
    "census_linear_component",
    "census_through_point",
    "classify_components",
    "count_points",
    "csv_row",
    "dimension_degree_sequences",
    "enumerate_field",
    "enumerate_forms",
    "enumerate_hyperplanes",
    "enumerate_points",
    "enumerate_subspaces",
    "exact_linear_count",
    "field_arith",
    "field_from_order",
    "hilbert",
    "hilbert_of_ideal",
    "hyperplane_section",
    "load_variety",
    "load_variety_file",
    "make_field",
    "monomials_of_degree",
    "normal_form",
    "parse_poly",
    "pi",
    "point_from_text",
    "rational_points",
    "restriction_margin",
    "section_scale",
    "to_variety_doc",
    "tubular_count",
    "tubular_report",
]

__version__ = "0.1.0"
