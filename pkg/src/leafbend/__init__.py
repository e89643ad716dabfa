"""Geometric model of a bent paper leaf and 1-D image dewarping built on it.

The cross-section of a curved page is modelled as an Euler (Cornu) spiral
moved so its axial end sits at the origin, then laterally stretched by a
weight that vanishes at one end. Tabulating the stretched curve's projected
coordinate against arc length gives a monotone lookup table used to bend
flat images and to flatten bent ones column by column.
"""

from .bentframe import (
    BentProfile,
    Frame,
    axial_frame,
    build_profile,
    stretch_weight,
    stretched_point,
    transformed_point,
)
from .curves import (
    Cornu,
    ElasticaParams,
    Point2,
    SampledCurve,
    ShiftedEuler,
    SpiralParams,
    WeightMode,
    elastica_point,
    sample_elastica,
    sample_spiral,
    spiral_curvature,
    spiral_phase,
    spiral_point,
    spiral_tangent,
)
from .errors import (
    DomainError,
    FormatError,
    GeometryError,
    LeafBendError,
    NonMonotoneError,
    OutOfDomainError,
)
from .flattenmap import (
    FitGrid,
    FitResult,
    FlattenMap,
    build_map,
    fit_params,
    longest_monotone_range,
    monotone_runs,
)
from .imagewarp import (
    RasterImage,
    ResampleMode,
    bend_image,
    dewarp_image,
    read_pgm,
    read_pnm,
    write_pgm,
    write_pnm,
)
from .presets import PRESETS, get_preset
from .specfun import (
    fresnel_c,
    fresnel_s,
    jacobi_cn,
    jacobi_dn,
    jacobi_ellipj,
    jacobi_epsilon,
    jacobi_sn,
    phase_integral,
)

__version__ = "0.1.0"
