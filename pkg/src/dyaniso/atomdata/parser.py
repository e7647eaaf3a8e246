"""
Reader for the columnar transition line-list format.

UTF-8 text; lines starting with '#' and blank lines are ignored; each data row is

    excited_j   energy_cm^-1   f_value

separated by whitespace. Energies are converted to Hartree on ingest.
"""

import logging
import math
from pathlib import Path
from typing import Iterable, List, TextIO, Union

from pydantic import ValidationError

from dyaniso.core.units import Unit, to_au
from dyaniso.exceptions import LineListParseError, LineListValidationError
from dyaniso.models.atomic import TransitionLine

logger = logging.getLogger(__name__)


def _parse_row(fields: List[str], line_number: int) -> tuple:
    if len(fields) != 3:
        raise LineListParseError(
            f"expected 3 columns (excited_j energy_cm^-1 f_value), found {len(fields)}",
            line_number,
        )
    try:
        excited_j = int(fields[0])
    except ValueError as exc:
        raise LineListParseError(f"excited_j {fields[0]!r} is not an integer", line_number) from exc
    try:
        energy_cm = float(fields[1])
        f_value = float(fields[2])
    except ValueError as exc:
        raise LineListParseError(f"non-numeric value in {fields[1:]}", line_number) from exc
    if not (math.isfinite(energy_cm) and math.isfinite(f_value)):
        raise LineListParseError("energy and f_value must be finite", line_number)
    return excited_j, energy_cm, f_value


def check_selection_rule(line: TransitionLine, j_ground: int) -> None:
    """
    Enforces |j_ground - 1| <= excited_j <= j_ground + 1.

    Raises:
        LineListValidationError: If the transition is not electric-dipole allowed.
    """
    j = line.excited_j
    if not abs(j_ground - 1) <= j <= j_ground + 1:
        raise LineListValidationError(
            f"excited_j = {j} is dipole-forbidden from ground j = {j_ground}",
            line.line_number,
        )


def parse_linelist(source: Union[TextIO, Iterable[str]], j_ground: int = 8) -> List[TransitionLine]:
    """
    Parses a transition line list.

    Args:
        source: An open text stream or any iterable of lines.
        j_ground: Ground-level angular momentum, for the dipole selection rule.

    Returns:
        One TransitionLine per data row, carrying its source line number.

    Raises:
        LineListParseError: For a malformed row.
        LineListValidationError: For non-positive energies, negative f values or
            dipole-forbidden excited levels.
    """
    lines: List[TransitionLine] = []
    for line_number, raw in enumerate(source, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        excited_j, energy_cm, f_value = _parse_row(text.split(), line_number)
        if energy_cm <= 0:
            raise LineListValidationError(
                f"excitation energy must be positive, got {energy_cm} cm^-1", line_number
            )
        if f_value < 0:
            raise LineListValidationError(
                f"oscillator strength must be non-negative, got {f_value}", line_number
            )
        try:
            line = TransitionLine(
                excited_j=excited_j,
                energy=to_au(energy_cm, Unit.WAVENUMBER),
                oscillator_strength=f_value,
                line_number=line_number,
            )
        except ValidationError as exc:
            raise LineListValidationError(str(exc), line_number) from exc
        check_selection_rule(line, j_ground)
        lines.append(line)
    logger.info("Parsed %d transition lines", len(lines))
    return lines


def load_linelist(path: Union[str, Path], j_ground: int = 8) -> List[TransitionLine]:
    """Opens ``path`` as UTF-8 and parses it with :func:`parse_linelist`."""
    with open(path, "r", encoding="utf-8") as handle:
        return parse_linelist(handle, j_ground)
