"""pytest共通設定とフィクスチャ

全テストで使用可能な共通フィクスチャを定義。
"""

from pathlib import Path

import pytest

from trimcx.ring.field import CoefficientField
from trimcx.ring.polynomial import PolyRing

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def ring_xyz() -> PolyRing:
    """QQ[x, y, z]"""
    return PolyRing(variables=("x", "y", "z"))


@pytest.fixture
def ring_xyz_gf() -> PolyRing:
    """GF(32003)[x, y, z]"""
    return PolyRing(variables=("x", "y", "z"), field=CoefficientField.prime())


@pytest.fixture
def worked_skew_path() -> Path:
    """5 x 5 交代行列の計算例ファイル"""
    return FIXTURES / "worked_pfaffian.skew"


@pytest.fixture
def workspace(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """TRIMCX_WORKSPACEを一時ディレクトリに向ける"""
    monkeypatch.setenv("TRIMCX_WORKSPACE", str(tmp_path))
    return tmp_path
