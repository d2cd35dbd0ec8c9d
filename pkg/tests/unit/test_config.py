"""Configuration Modelsのユニットテスト"""

from pathlib import Path

import pytest
from pydantic import ValidationError

FIXTURES = Path(__file__).parent.parent / "fixtures"


# GuardConfig / VerifyConfig tests
def test_guard_config_defaults() -> None:
    """デフォルト値の確認"""
    from trimcx.config.models import GuardConfig

    guards = GuardConfig()
    assert guards.max_oracle_vars == 10
    assert guards.max_oracle_degree == 12
    assert guards.max_fvector_ground == 20
    assert guards.max_colon_monomials == 4000


def test_guard_config_positive() -> None:
    """0以下の上限でValidationError"""
    from trimcx.config.models import GuardConfig

    with pytest.raises(ValidationError, match="max_oracle_vars"):
        GuardConfig(max_oracle_vars=0)


def test_verify_config_defaults() -> None:
    """デフォルト値の確認"""
    from trimcx.config.models import VerifyConfig

    verify = VerifyConfig()
    assert verify.dmax_slack == 3
    assert verify.seeds == [17, 4099]
    assert verify.run_oracle


def test_verify_config_requires_seed() -> None:
    """空のseedsでValidationError"""
    from trimcx.config.models import VerifyConfig

    with pytest.raises(ValidationError, match="seeds"):
        VerifyConfig(seeds=[])


# RunConfig tests
def test_run_config_pfaffian() -> None:
    """pfaffianのremove省略時は第1生成元"""
    from trimcx.config.models import RunConfig

    config = RunConfig(command="betti", preset="pfaffian", size=7)
    assert config.removal_indices == (1,)
    assert config.coefficient_field.label == "QQ"


def test_run_config_pfaffian_size() -> None:
    """偶数または5未満のsizeでValidationError"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="5以上の奇数"):
        RunConfig(command="betti", preset="pfaffian", size=6)
    with pytest.raises(ValidationError, match="5以上の奇数"):
        RunConfig(command="betti", preset="pfaffian", size=3)


def test_run_config_pfaffian_remove_out_of_range() -> None:
    """範囲外のremoveでValidationError"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="範囲外"):
        RunConfig(command="betti", preset="pfaffian", size=5, remove=(6,))


def test_run_config_minors_default_sigma() -> None:
    """minorsのremove_sets省略時は σ = {1, ..., n}"""
    from trimcx.config.models import RunConfig

    config = RunConfig(command="betti", preset="minors", rows=2, cols=4)
    assert [s.indices for s in config.sigmas] == [(1, 2)]


@pytest.mark.parametrize("remove_sets", ["1,2;3,4", ["1,2", "3,4"], [[1, 2], [3, 4]]])
def test_run_config_remove_sets_forms(remove_sets: object) -> None:
    """文字列・文字列のリスト・整数のリストのいずれも受け付ける"""
    from trimcx.config.models import RunConfig

    config = RunConfig(command="betti", preset="minors", rows=2, cols=4, remove_sets=remove_sets)
    assert [s.indices for s in config.sigmas] == [(1, 2), (3, 4)]


def test_run_config_overlapping_sigmas() -> None:
    """重なる σ でValidationError"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="互いに素"):
        RunConfig(command="betti", preset="minors", rows=2, cols=4, remove_sets="1,2;2,3")


def test_run_config_requires_preset() -> None:
    """betti / verify / closed-form ではpresetが必須"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="presetが必須"):
        RunConfig(command="verify")


def test_run_config_closed_form_rejects_custom() -> None:
    """closed-formはcustomに対応しない"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="closed-form"):
        RunConfig(command="closed-form", preset="custom", custom_path="x.skew", remove=(1,))


def test_run_config_custom_requires_path() -> None:
    """customにはcustom_pathとremoveが必須"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="custom_path"):
        RunConfig(command="betti", preset="custom", remove=(1,))
    with pytest.raises(ValidationError, match="remove"):
        RunConfig(command="betti", preset="custom", custom_path="x.skew")


def test_run_config_fvector_shape() -> None:
    """fvectorにはrowsとcolsが必須"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="rowsとcols"):
        RunConfig(command="fvector", rows=2)
    with pytest.raises(ValidationError, match="rows <= cols"):
        RunConfig(command="fvector", rows=3, cols=2)


def test_run_config_field() -> None:
    """verifyの係数体の既定はgf:32003、不正な指定はValidationError"""
    from trimcx.config.models import RunConfig

    config = RunConfig(command="verify", preset="pfaffian", size=5)
    assert config.coefficient_field.label == "gf:32003"
    assert RunConfig(command="verify", preset="pfaffian", size=5, field="QQ").coefficient_field.label == "QQ"
    with pytest.raises(ValidationError, match="素数"):
        RunConfig(command="betti", preset="pfaffian", size=5, field="gf:9")


def test_run_config_log_level() -> None:
    """log_levelは大文字に正規化し、不正な値はValidationError"""
    from trimcx.config.models import RunConfig

    assert RunConfig(command="demo", log_level="info").log_level == "INFO"
    with pytest.raises(ValidationError, match="log_level"):
        RunConfig(command="demo", log_level="TRACE")


# from_toml tests
def test_from_toml_valid() -> None:
    """正常なTOMLファイルを読み込める"""
    from trimcx.config.models import RunConfig

    config = RunConfig.from_toml(FIXTURES / "valid_config.toml")
    assert config.command == "verify"
    assert config.seed == 3
    assert config.guards.max_oracle_vars == 8
    assert config.guards.max_oracle_degree == 12
    assert config.verify.seeds == [5, 11]
    assert not config.verify.run_oracle
    assert [s.indices for s in config.sigmas] == [(1, 2)]


def test_from_toml_overrides() -> None:
    """overridesはファイルの値を上書きし、Noneは無視する"""
    from trimcx.config.models import RunConfig

    config = RunConfig.from_toml(FIXTURES / "valid_config.toml", {"seed": 9, "cols": None})
    assert config.seed == 9
    assert config.cols == 4


def test_from_toml_invalid() -> None:
    """不正な設定でValidationError"""
    from trimcx.config.models import RunConfig

    with pytest.raises(ValidationError, match="互いに素"):
        RunConfig.from_toml(FIXTURES / "invalid_config.toml")


def test_from_toml_missing_file(tmp_path: Path) -> None:
    """存在しないファイルでFileNotFoundError"""
    from trimcx.config.models import RunConfig

    with pytest.raises(FileNotFoundError):
        RunConfig.from_toml(tmp_path / "missing.toml")


def test_from_toml_workspace_default(workspace: Path) -> None:
    """パス省略時はワークスペース/configs/trimcx.toml"""
    from trimcx.config.models import RunConfig

    (workspace / "configs").mkdir()
    (workspace / "configs" / "trimcx.toml").write_text('command = "demo"\n', encoding="utf-8")
    assert RunConfig.from_toml().command == "demo"
