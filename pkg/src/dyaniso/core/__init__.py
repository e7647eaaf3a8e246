"""Settings, run configuration and units."""

from .config import Settings, get_settings
from .run_config import RunConfig, load_run_config
from .units import CODATA2018, PhysicalConstants, Unit, from_au, to_au

__all__ = [
    "CODATA2018",
    "PhysicalConstants",
    "RunConfig",
    "Settings",
    "Unit",
    "from_au",
    "get_settings",
    "load_run_config",
    "to_au",
]
