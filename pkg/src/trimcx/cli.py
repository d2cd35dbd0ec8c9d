"""コマンドラインエントリポイント

    trimcx betti --preset pfaffian --size 5 --remove 1
    trimcx closed-form --preset minors --rows 2 --cols 4 --remove-sets "1,2;3,4"
    trimcx verify --preset minors --rows 2 --cols 4
    trimcx fvector --rows 2 --cols 4 --remove-sets 1,2
    trimcx demo

多項式の式では、0でない定数での割り算(例: x/2)を有理数の係数として書ける。
変数を含む式での割り算は構文エラー。

終了コード: 0 正常、2 設定・入力の誤り、3 計算規模の上限超過、4 検証の失敗・前提の破れ。
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from trimcx.chain.serialization import dumps_json
from trimcx.config import RunConfig
from trimcx.core import PipelineError, StepName, TrimPipeline
from trimcx.io import BaseIO
from trimcx.utils.guards import SizeGuardError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_FAILURE = 4

# 入力の誤りとみなすステップ(ここでのValueError・OSErrorは終了コード2)
_INPUT_STEPS = (StepName.BUILD_RESOLUTION, StepName.BUILD_SETUP)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"カンマ区切りの整数である必要があります: {text!r}") from e


def _str_list(text: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in text.split(",") if part.strip())


def build_parser() -> argparse.ArgumentParser:
    """サブコマンドと共通フラグを持つパーサを作る"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="RunConfigのTOMLファイル")
    common.add_argument("--preset", choices=["pfaffian", "minors", "custom"], default=None)
    common.add_argument("--size", type=int, default=None, help="交代行列のサイズ n")
    common.add_argument("--rows", type=int, default=None, help="行数 n")
    common.add_argument("--cols", type=int, default=None, help="列数 m")
    common.add_argument("--remove", type=_int_list, default=None, help="取り除く生成元(1始まり、例: 1,2)")
    common.add_argument("--remove-sets", default=None, help="取り除く σ(例: '1,2;3,4')")
    common.add_argument(
        "--a-ideal",
        type=_str_list,
        default=None,
        help="𝔞 の生成元(例: x,y,z)。0でない定数での割り算(例: x/2)も書ける",
    )
    common.add_argument("--custom", default=None, help="交代行列ファイル(--preset customを含意)")
    common.add_argument("--field", default=None, help="係数体(QQ または gf:<p>)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--dmax", type=int, default=None, help="検証の打ち切り次数")
    common.add_argument("--json", dest="json_path", default=None, help="JSON出力先")
    common.add_argument("--csv", dest="csv_path", default=None, help="CSV出力先")
    common.add_argument("--log-level", default=None, help="DEBUG / INFO / WARNING / ERROR")
    common.add_argument("--corrupt-differential", action="store_true", default=None, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="trimcx", description="トリミング複体とBetti表")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("betti", parents=[common], help="パイプラインでBetti表を求める")
    sub.add_parser("closed-form", parents=[common], help="閉じた式のBetti表")
    sub.add_parser("verify", parents=[common], help="パイプラインと検証一式")
    sub.add_parser("fvector", parents=[common], help="クリーク複体の f 列")
    sub.add_parser("demo", parents=[common], help="5 x 5 交代行列の計算例")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """引数からRunConfigを組み立てる(--configがあればその値をフラグで上書き)

    Raises:
        ValidationError: 設定が不正な場合
        FileNotFoundError: 設定ファイルが存在しない場合
    """
    overrides: dict[str, Any] = {
        "command": args.command,
        "preset": args.preset,
        "size": args.size,
        "rows": args.rows,
        "cols": args.cols,
        "remove": args.remove,
        "remove_sets": args.remove_sets,
        "a_ideal": args.a_ideal,
        "custom_path": args.custom,
        "field": args.field,
        "seed": args.seed,
        "dmax": args.dmax,
        "json_path": args.json_path,
        "csv_path": args.csv_path,
        "log_level": args.log_level,
        "corrupt_differential": args.corrupt_differential,
    }
    if args.custom is not None and args.preset is None:
        overrides["preset"] = "custom"
    if args.config is not None:
        return RunConfig.from_toml(args.config, overrides)
    return RunConfig(**{k: v for k, v in overrides.items() if v is not None})


def _print(document: Any) -> None:
    sys.stdout.write(dumps_json(document))


def cmd_betti(pipeline: TrimPipeline) -> int:
    """betti / demo: パイプラインでBetti表を求める"""
    table = pipeline.run_betti()
    assert pipeline.context.resolution is not None
    document = pipeline.betti_output(table, pipeline.context.resolution.ring.ngens)
    pipeline.export(document, pipeline.betti_frame(table))
    if pipeline.config.command == "demo":
        sys.stdout.write(table.pretty() + "\n")
    else:
        _print(document)
    return EXIT_OK


def cmd_closed_form(pipeline: TrimPipeline) -> int:
    """closed-form: 閉じた式のBetti表"""
    table = pipeline.closed_form_table()
    assert table is not None
    document = pipeline.betti_output(table, pipeline.closed_form_nvars())
    pipeline.export(document, pipeline.betti_frame(table))
    _print(document)
    return EXIT_OK


def cmd_verify(pipeline: TrimPipeline) -> int:
    """verify: パイプラインと検証一式。失敗した検査が1つでもあれば終了コード4"""
    report = pipeline.run_verify()
    assert pipeline.context.cone is not None
    ring = pipeline.context.cone.ring
    document = report.to_document()
    document["ring"] = {"field": ring.field.label, "vars": ring.ngens}
    pipeline.export(document, report.to_frame())
    _print(document)
    for c in report.checks:
        if c.status == "fail":
            logger.error("検証に失敗しました: %s %s", c.check, c.detail)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_fvector(pipeline: TrimPipeline) -> int:
    """fvector: クリーク複体の f 列と二つの式の比較"""
    document, frame = pipeline.fvector()
    pipeline.export(document, frame)
    _print(document)
    return EXIT_OK


_COMMANDS = {
    "betti": cmd_betti,
    "demo": cmd_betti,
    "closed-form": cmd_closed_form,
    "verify": cmd_verify,
    "fvector": cmd_fvector,
}


def execute(config: RunConfig, io: BaseIO | None = None) -> int:
    """設定に従ってサブコマンドを実行し、終了コードを返す

    Raises:
        PipelineError: パイプラインのステップが失敗した場合
        SizeGuardError: 計算規模が上限を超えた場合
    """
    return _COMMANDS[config.command](TrimPipeline(config, io))


def main(argv: Sequence[str] | None = None) -> int:
    """CLIのエントリポイント

    Args:
        argv: 引数(Noneの場合はsys.argv[1:])

    Returns:
        終了コード
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = config_from_args(args)
    except (ValidationError, ValueError, FileNotFoundError) as e:
        sys.stderr.write(f"設定が不正です: {e}\n")
        return EXIT_USAGE

    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        return execute(config)
    except SizeGuardError as e:
        logger.error("%s", e)
        return EXIT_GUARD
    except PipelineError as e:
        logger.error("%s", e)
        if isinstance(e.original_error, SizeGuardError):
            return EXIT_GUARD
        if e.step_name in _INPUT_STEPS and isinstance(e.original_error, (ValueError, OSError)):
            return EXIT_USAGE
        return EXIT_FAILURE
    except ValueError as e:
        logger.error("%s", e)
        return EXIT_USAGE
