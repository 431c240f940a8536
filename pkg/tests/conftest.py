import pytest

from utils.config import Settings


@pytest.fixture(scope="session")
def small_settings() -> Settings:
    """Verification ranges small enough for a default test run."""
    return Settings(
        verify_xcap=8,
        verify_ycap=8,
        verify_setpart_max=6,
        verify_vw_max=2,
        verify_blocks_max=3,
        verify_columns_max=8,
        verify_closed_blocks_max=3,
        verify_closed_columns_max=8,
        verify_asymptotic_window=3,
    )
