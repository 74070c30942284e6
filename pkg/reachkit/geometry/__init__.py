"""Point sets, distances and rasterization for reachkit."""

from reachkit.geometry.base import PointSet
from reachkit.geometry.distances import dist_point_set, hausdorff, neighbourhood_contains, projection, semi_distance
from reachkit.geometry.rasterize import dfog_pointset, sublevel_pointset

__all__ = [
    "PointSet",
    "dfog_pointset",
    "dist_point_set",
    "hausdorff",
    "neighbourhood_contains",
    "projection",
    "semi_distance",
    "sublevel_pointset",
]
