"""Static gauge transformations and the observer-S_g energy functional."""

from .models import GaugeError, GaugeFunction, GaugeUnitary
from .transform import (
    apply_gauge,
    divergence_of_current,
    gradient_on_links,
    make_unitary,
    sg_energy,
    transform_vacuum,
)

__all__ = [
    "GaugeError",
    "GaugeFunction",
    "GaugeUnitary",
    "apply_gauge",
    "divergence_of_current",
    "gradient_on_links",
    "make_unitary",
    "sg_energy",
    "transform_vacuum",
]
