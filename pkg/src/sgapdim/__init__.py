"""Dimension bounds for subfractals of two-map IFSs coded by S-gap shifts."""

from .errors import ConfigError, DomainError, InputError, NumericError, SGapError, UndefinedPressure
from .language import (
    GapSet,
    RunProfile,
    count_core,
    count_language,
    enumerate_core,
    enumerate_language,
    gap_contains,
    gap_enumerate,
    is_allowable,
    sample_word,
)
from .pressure import (
    ContractionPair,
    PressureSample,
    core_pressure_limsup,
    cylinder_measure_estimate,
    pressure_estimate,
    pressure_table,
    weighted_core_sum,
    weighted_language_sum,
)
from .solver import (
    DimensionBounds,
    Enclosure,
    bounds,
    cross_check_golden_mean,
    golden_mean_spectral_radius,
    series_value,
    solve_dimension_root,
    solve_entropy,
)
from .geometry import (
    BoxCountSeries,
    PointCloud,
    Similarity,
    SimilarityIFS,
    box_counts,
    compose_map,
    default_scales,
    estimate_box_dimension,
    generate_points,
    verify_bounds,
)
from .config import Scenario, parse_config

__version__ = "0.1.0"
