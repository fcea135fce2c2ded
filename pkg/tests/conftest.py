import pytest

from tripos.properties import PolySeq
from tripos.triangles import build_preset, row_polys

CONVEX_PRESETS = ("aigner_catalan", "shapiro_catalan", "motzkin", "schroder_large")


@pytest.fixture(scope="session")
def preset_rowgens():
    """Row generating functions (rows 0..31) of the strongly q-log-convex presets."""
    return {
        name: PolySeq(tuple(row_polys(build_preset(name, 31))))
        for name in CONVEX_PRESETS
    }
