"""
Pytest configuration and shared fixtures for Lowner tests
"""

import pytest
import sys
from pathlib import Path

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))


@pytest.fixture
def upper_half_plane_points():
    """Points in the open upper half-plane away from the real axis"""
    return [1j, 0.5 + 0.5j, -2.0 + 0.1j, 3.0 + 4.0j, -0.5 + 2.0j, 10.0 + 0.01j]
