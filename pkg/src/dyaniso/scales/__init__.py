from .crossings import (
    ad_mdd_crossing,
    crossing_radius,
    crossing_table,
    spin_flip_radius,
)
from .splittings import (
    ad_scale,
    mdd_scale,
    rotational_scale,
    scale_curve,
    scale_function,
    zeeman_scale,
)

__all__ = [
    "ad_mdd_crossing",
    "ad_scale",
    "crossing_radius",
    "crossing_table",
    "mdd_scale",
    "rotational_scale",
    "scale_curve",
    "scale_function",
    "spin_flip_radius",
    "zeeman_scale",
]
