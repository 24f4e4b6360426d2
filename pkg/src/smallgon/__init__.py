"""Small (unit-diameter) polygons of maximal width: construction, measurement, checks."""

from .geometry import (
    HeightGraph,
    InvalidPolygonError,
    Polygon,
    WidthReport,
    canonicalize,
    classify,
    diameter,
    height_graph,
    perimeter,
    point_side_height,
    width,
)

__version__ = "0.1.0"
