import io

import numpy as np
import pytest

from dyaniso.atomdata import (
    TABLE1_VALUES,
    baked_table1,
    build_k_tensor,
    load_linelist,
    parse_linelist,
    reduced_dipole_sq_from_f,
)
from dyaniso.core.units import Unit, to_au
from dyaniso.exceptions import LineListParseError, LineListValidationError
from dyaniso.models import KTensor, TransitionLine

LINELIST = """\
# excited_j  energy_cm^-1  f
9   23736.610   0.392
8   24708.970   0.257

7   25000.000   0.100   # trailing comment is not allowed
"""


def test_parse_linelist_skips_comments_and_blanks():
    text = LINELIST.replace("   # trailing comment is not allowed", "")
    lines = parse_linelist(io.StringIO(text))
    assert [line.excited_j for line in lines] == [9, 8, 7]
    assert [line.line_number for line in lines] == [2, 3, 5]
    assert lines[0].energy == pytest.approx(to_au(23736.610, Unit.WAVENUMBER))
    assert lines[0].oscillator_strength == 0.392


def test_parse_error_carries_line_number():
    with pytest.raises(LineListParseError) as excinfo:
        parse_linelist(io.StringIO(LINELIST))
    assert excinfo.value.line_number == 5


def test_non_numeric_column():
    with pytest.raises(LineListParseError):
        parse_linelist(["9 abc 0.3"])
    with pytest.raises(LineListParseError):
        parse_linelist(["9.5 20000 0.3"])


def test_forbidden_transition_rejected():
    with pytest.raises(LineListValidationError) as excinfo:
        parse_linelist(["# header", "10 20000 0.1"])
    assert excinfo.value.line_number == 2


def test_negative_values_rejected():
    with pytest.raises(LineListValidationError):
        parse_linelist(["8 -20000 0.1"])
    with pytest.raises(LineListValidationError):
        parse_linelist(["8 20000 -0.1"])


def test_load_linelist_from_file(tmp_path):
    path = tmp_path / "lines.txt"
    path.write_text("8 20000 0.1\n", encoding="utf-8")
    lines = load_linelist(path)
    assert len(lines) == 1


def test_reduced_dipole_from_f():
    line = TransitionLine(excited_j=9, energy=0.1, oscillator_strength=0.2)
    assert reduced_dipole_sq_from_f(line, 8) == pytest.approx(1.5 * 17 * 0.2 / 0.1)


def test_transition_line_needs_exactly_one_strength():
    with pytest.raises(ValueError):
        TransitionLine(excited_j=9, energy=0.1)
    with pytest.raises(ValueError):
        TransitionLine(
            excited_j=9, energy=0.1, oscillator_strength=0.2, reduced_dipole_squared=1.0
        )


def test_k_tensor_single_line():
    line = TransitionLine(excited_j=9, energy=0.1, reduced_dipole_squared=4.0)
    k = build_k_tensor([line])
    assert k.get(9, 9) == pytest.approx(16.0 / 0.2)
    assert k.get(7, 8) == 0.0


def test_k_tensor_is_symmetric():
    lines = [
        TransitionLine(excited_j=7, energy=0.08, reduced_dipole_squared=2.0),
        TransitionLine(excited_j=9, energy=0.11, reduced_dipole_squared=3.0),
        TransitionLine(excited_j=8, energy=0.10, oscillator_strength=0.3),
    ]
    values = build_k_tensor(lines).as_array()
    assert np.allclose(values, values.T)
    assert values[0, 2] == pytest.approx(6.0 / 0.19)


def test_k_tensor_empty_list():
    with pytest.raises(LineListValidationError):
        build_k_tensor([])


def test_baked_table():
    k = baked_table1()
    assert k.j_values == (7, 8, 9)
    assert k.get(8, 8) == TABLE1_VALUES[1][1]
    assert k.get(7, 8) == k.get(8, 7) == 81313.663
    with pytest.raises(KeyError):
        k.get(10, 8)


def test_k_tensor_validation():
    with pytest.raises(ValueError):
        KTensor(values=[[1.0, 2.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    with pytest.raises(ValueError):
        KTensor(values=[[1.0, 0.0], [0.0, 1.0]])
