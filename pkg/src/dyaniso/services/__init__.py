from .export_service import (
    barriers_frame,
    crossings_frame,
    curves_frame,
    deviations_frame,
    format_scientific,
    rate_frames,
    resolve_output_dir,
    scales_frame,
    spectra_frame,
    write_table,
)

__all__ = [
    "barriers_frame",
    "crossings_frame",
    "curves_frame",
    "deviations_frame",
    "format_scientific",
    "rate_frames",
    "resolve_output_dir",
    "scales_frame",
    "spectra_frame",
    "write_table",
]
