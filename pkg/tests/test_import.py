"""Test imports and basic functionality."""


def test_import_main_package():
    """Test that the main package can be imported."""
    import dyaniso

    assert hasattr(dyaniso, "__version__")
    assert hasattr(dyaniso, "PairInteractionClient")


def test_import_client():
    from dyaniso import PairInteractionClient

    assert PairInteractionClient is not None


def test_import_settings():
    from dyaniso import RunConfig, Settings

    assert Settings is not None
    assert RunConfig is not None


def test_import_models():
    from dyaniso.models import OmegaBlock, RateTable, TransitionLine

    assert OmegaBlock is not None
    assert RateTable is not None
    assert TransitionLine is not None


def test_version_format():
    """Test that version follows semantic versioning."""
    import dyaniso

    parts = dyaniso.__version__.split(".")
    assert len(parts) >= 2
    assert all(part.isdigit() for part in parts[:2])


def test_cli_import():
    from dyaniso.cli.main import main

    assert main is not None
