"""TrimPipeline実装

入力の分解の構成からトリミング・Betti数・検証までをステップ単位で実行するエンジンを提供する。
"""

from __future__ import annotations

import logging
from enum import Enum
from typing import TYPE_CHECKING, Any

import polars as pl

from trimcx.builders.eagon_northcott import eagon_northcott, en_basis
from trimcx.builders.matrices import GenericMatrixSpec, SkewMatrix
from trimcx.builders.pfaffian import pfaffian_resolution
from trimcx.builders.skew_file import load_skew_text
from trimcx.chain.betti import BettiTable
from trimcx.chain.complex import GradedFreeComplex, GradedMap, is_minimal, rank_acyclicity_evidence, verify_complex
from trimcx.chain.serialization import betti_document
from trimcx.detfacet.clutter import ClutterSpec, clique_fvector_enumerate, fvector_frame
from trimcx.detfacet.explicit_q import complement_pairs
from trimcx.detfacet.formulas import betti_multi_minor, betti_pfaffian_trim, betti_single_minor
from trimcx.examples import WORKED_A_IDEAL, WORKED_REMOVE, worked_matrix
from trimcx.io import BaseIO
from trimcx.linalg.matrices import from_entries, nonzero_entries
from trimcx.models import PipelineContext, VerifyReport
from trimcx.oracle.koszul_betti import koszul_betti
from trimcx.oracle.slices import IdealBasis
from trimcx.schemas import BettiSchema, FVectorSchema
from trimcx.trim.betti import trimmed_betti
from trimcx.trim.checks import colon_containment, default_dmax, h0_generators, h0_matches
from trimcx.trim.complex import trimming_complex
from trimcx.trim.lifts import lift_q, verify_lifts
from trimcx.trim.setup import build_setup
from trimcx.utils.guards import SizeGuardError

if TYPE_CHECKING:
    from trimcx.config import RunConfig

logger = logging.getLogger(__name__)


class StepName(Enum):
    """TrimPipelineで使用するステップ名

    各ステップは前のステップの結果をPipelineContextから受け取る。
    """

    BUILD_RESOLUTION = "build_resolution"
    BUILD_SETUP = "build_setup"
    LIFT = "lift"
    TRIM = "trim"
    BETTI = "betti"
    VERIFY = "verify"


BETTI_STEPS = [StepName.BUILD_RESOLUTION, StepName.BUILD_SETUP, StepName.LIFT, StepName.BETTI]
VERIFY_STEPS = [
    StepName.BUILD_RESOLUTION,
    StepName.BUILD_SETUP,
    StepName.LIFT,
    StepName.TRIM,
    StepName.BETTI,
    StepName.VERIFY,
]


class PipelineError(Exception):
    """TrimPipelineの実行エラー

    ステップ実行中に発生したエラーをラップし、デバッグ情報を提供する。

    Attributes:
        message: エラーメッセージ
        step_name: エラーが発生したステップ名
        original_error: 元の例外(オプション)
    """

    def __init__(
        self,
        message: str,
        step_name: StepName,
        original_error: Exception | None = None,
    ) -> None:
        self.message = message
        self.step_name = step_name
        self.original_error = original_error
        super().__init__(self._format_message())

    def _format_message(self) -> str:
        """エラーメッセージをフォーマットする"""
        msg = f"[{self.step_name.value}] {self.message}"
        if self.original_error:
            msg += f"\n  原因: {self.original_error}"
        return msg


def corrupt_differential(c: GradedFreeComplex) -> GradedFreeComplex:
    """d_1 の最初の非零列の符号を反転した複体(検証の失敗経路を試すためのフック)"""
    d1 = c.differential(1)
    entries = {(i, j): v for i, j, v in nonzero_entries(d1.matrix)}
    if not entries:
        return c
    column = min(j for _, j in entries)
    flipped = {(i, j): (-v if j == column else v) for (i, j), v in entries.items()}
    matrix = from_entries(c.ring.poly_domain, d1.shape, flipped)
    broken = GradedMap(ring=c.ring, source=d1.source, target=d1.target, matrix=matrix)
    return GradedFreeComplex(ring=c.ring, modules=c.modules, differentials=(broken, *c.differentials[1:]))


class TrimPipeline:
    """TrimPipeline(ステップ単位実行エンジン)

    betti / verify / demo は同じステップ列を共有し、closed-form と fvector は
    多項式演算を行わない評価メソッドとして提供する。

    Attributes:
        config: 実行設定
        io: 入出力レイヤー
    """

    def __init__(self, config: RunConfig, io: BaseIO | None = None) -> None:
        """TrimPipelineを初期化する

        Args:
            config: 実行設定
            io: 入出力レイヤー。Noneの場合は設定から作る
        """
        self.config = config
        self.io = io if io is not None else BaseIO.from_config(config)
        self._context = PipelineContext()

    @property
    def context(self) -> PipelineContext:
        return self._context

    # 入力の分解

    def _load_custom(self) -> SkewMatrix:
        path = self.config.custom_path
        assert path is not None
        text = self.io.load(path, "text")
        if text is None:
            raise FileNotFoundError(f"交代行列ファイルが見つかりません: {path}")
        assert isinstance(text, str)
        x = load_skew_text(text)
        if self.config.field is not None and x.ring.field != self.config.coefficient_field:
            logger.warning("係数体はファイルの宣言(%s)を使用します", x.ring.field.label)
        return x

    def _build_pfaffian_input(self, x: SkewMatrix, remove: tuple[int, ...]) -> None:
        f = pfaffian_resolution(x)
        for index in remove:
            if not 1 <= index <= x.size:
                raise ValueError(f"removeの位置が範囲外です: {index}(1..{x.size})")
        self._context.resolution = f
        self._context.summand_indices = tuple(index - 1 for index in remove)

    def _build_minors_input(self) -> None:
        config = self.config
        assert config.rows is not None and config.cols is not None
        spec = GenericMatrixSpec(rows=config.rows, cols=config.cols, field=config.coefficient_field)
        f = eagon_northcott(spec)
        first = [subset for _, subset in en_basis(spec.rows, spec.cols, 1)]
        self._context.resolution = f
        self._context.summand_indices = tuple(first.index(sigma.zero_based) for sigma in config.sigmas)
        self._context.a_ideals = tuple(
            tuple(spec.entry(i - 1, j - 1) for i, j in complement_pairs(spec.rows, spec.cols, sigma))
            for sigma in config.sigmas
        )

    def _run_build_resolution(self) -> None:
        """入力の分解 F と取り除く生成元を決めるステップ"""
        config = self.config
        try:
            a_ideal = config.a_ideal
            if config.command == "demo":
                x = worked_matrix()
                self._build_pfaffian_input(x, WORKED_REMOVE)
                a_ideal = WORKED_A_IDEAL
            elif config.preset == "pfaffian":
                assert config.size is not None
                x = SkewMatrix.generic(config.size, config.coefficient_field)
                self._build_pfaffian_input(x, config.removal_indices)
            elif config.preset == "minors":
                self._build_minors_input()
            elif config.preset == "custom":
                self._build_pfaffian_input(self._load_custom(), config.removal_indices)
            else:
                raise ValueError(f"presetが指定されていません: {config.command}")

            if a_ideal is not None:
                f = self._context.resolution
                assert f is not None
                gens = tuple(f.ring.parse(text) for text in a_ideal)
                self._context.a_ideals = tuple(gens for _ in self._context.summand_indices)
            assert self._context.resolution is not None
            logger.info(
                "入力の分解: 階数 %s、取り除く位置 %s",
                self._context.resolution.ranks(),
                [k + 1 for k in self._context.summand_indices],
            )
        except SizeGuardError:
            raise
        except Exception as e:
            raise PipelineError(
                message="入力の分解の構成でエラーが発生しました",
                step_name=StepName.BUILD_RESOLUTION,
                original_error=e,
            ) from e

    def _run_build_setup(self) -> None:
        """トリミングの入力を組み立てるステップ"""
        if self._context.resolution is None:
            raise PipelineError(
                message="resolutionが設定されていません。build_resolutionステップを先に実行してください",
                step_name=StepName.BUILD_SETUP,
            )
        try:
            self._context.setup = build_setup(
                self._context.resolution, self._context.summand_indices, self._context.a_ideals
            )
        except Exception as e:
            raise PipelineError(
                message="トリミングの入力の組み立てでエラーが発生しました",
                step_name=StepName.BUILD_SETUP,
                original_error=e,
            ) from e

    def _run_lift(self) -> None:
        """q の族を解くステップ"""
        if self._context.setup is None:
            raise PipelineError(
                message="setupが設定されていません。build_setupステップを先に実行してください",
                step_name=StepName.LIFT,
            )
        try:
            self._context.lifts = lift_q(
                self._context.setup,
                seed=self.config.seed,
                max_unknowns=self.config.guards.max_lift_unknowns,
            )
        except SizeGuardError:
            raise
        except Exception as e:
            raise PipelineError(
                message="持ち上げの計算でエラーが発生しました",
                step_name=StepName.LIFT,
                original_error=e,
            ) from e

    def _run_trim(self) -> None:
        """トリミング複体(写像錐)を組み立てるステップ"""
        if self._context.setup is None or self._context.lifts is None:
            raise PipelineError(
                message="liftsが設定されていません。liftステップを先に実行してください",
                step_name=StepName.TRIM,
            )
        try:
            cone = trimming_complex(self._context.setup, self._context.lifts)
            if self.config.corrupt_differential:
                logger.warning("テスト用フックにより d_1 を壊します")
                cone = corrupt_differential(cone)
            self._context.cone = cone
        except Exception as e:
            raise PipelineError(
                message="トリミング複体の構成でエラーが発生しました",
                step_name=StepName.TRIM,
                original_error=e,
            ) from e

    def _run_betti(self) -> None:
        """Betti表を求めるステップ"""
        if self._context.setup is None or self._context.lifts is None:
            raise PipelineError(
                message="liftsが設定されていません。liftステップを先に実行してください",
                step_name=StepName.BETTI,
            )
        try:
            self._context.betti = trimmed_betti(self._context.setup, self._context.lifts)
        except Exception as e:
            raise PipelineError(
                message="Betti数の計算でエラーが発生しました",
                step_name=StepName.BETTI,
                original_error=e,
            ) from e

    def _run_verify(self) -> None:
        """検証ステップ(失敗した項目はレポートに記録し、例外にはしない)"""
        ctx = self._context
        if ctx.setup is None or ctx.lifts is None or ctx.cone is None or ctx.betti is None:
            raise PipelineError(
                message="cone・bettiが設定されていません。trim・bettiステップを先に実行してください",
                step_name=StepName.VERIFY,
            )
        try:
            ctx.report = self._verify_report()
        except SizeGuardError:
            raise
        except Exception as e:
            raise PipelineError(
                message="検証でエラーが発生しました",
                step_name=StepName.VERIFY,
                original_error=e,
            ) from e

    # 検証

    def _verify_report(self) -> VerifyReport:
        ctx = self._context
        assert ctx.setup is not None and ctx.lifts is not None and ctx.cone is not None and ctx.betti is not None
        setup, cone, betti = ctx.setup, ctx.cone, ctx.betti
        verify = self.config.verify
        report = VerifyReport(betti=betti)

        report.add("d_squared_zero", verify_complex(cone))
        report.add("lifts_commute", verify_lifts(ctx.lifts))
        inputs = [setup.f_complex, *setup.g_complexes]
        report.add("inputs_minimal", all(is_minimal(c) for c in inputs))
        for seed in verify.seeds:
            report.add(f"rank_evidence_seed_{seed}", rank_acyclicity_evidence(cone, seed))

        dmax = self.config.dmax if self.config.dmax is not None else default_dmax(setup, verify.dmax_slack)
        report.add("h0_ideal", h0_matches(setup, cone, dmax), f"dmax={dmax}")
        try:
            report.add(
                "colon_containment",
                colon_containment(setup, dmax, max_monomials=self.config.guards.max_colon_monomials),
                f"bound={dmax}",
            )
        except SizeGuardError as e:
            logger.warning("コロンの包含の検証をスキップします: %s", e)
            report.skip("colon_containment", str(e))

        expected = self.closed_form_table(strict=False)
        if expected is None:
            report.skip("closed_form", "閉じた式のない入力です")
        else:
            report.expected = expected
            report.add("closed_form", expected == betti, "" if expected == betti else f"期待: {expected.totals()}")

        self._oracle_check(report, cone, betti)
        logger.info("検証結果: %s", "pass" if report.passed else "fail")
        return report

    def _oracle_check(self, report: VerifyReport, cone: GradedFreeComplex, betti: BettiTable) -> None:
        guards = self.config.guards
        if not self.config.verify.run_oracle:
            report.skip("oracle", "run_oracle=false")
            return
        ring = cone.ring
        if ring.ngens > guards.max_oracle_vars:
            report.skip("oracle", f"変数の数 {ring.ngens} が上限 {guards.max_oracle_vars} を超えています")
            return
        max_j = max(j for _, j in betti.entries)
        dmax = max_j + 1
        if dmax > guards.max_oracle_degree:
            report.skip("oracle", f"次数 {dmax} が上限 {guards.max_oracle_degree} を超えています")
            return
        max_row = max(j - i for i, j in betti.entries)
        imax = betti.projective_dimension + 1
        gens = IdealBasis.from_polynomials(ring, h0_generators(cone))
        oracle = koszul_betti(
            gens,
            imax,
            dmax,
            max_row=max_row,
            max_vars=guards.max_oracle_vars,
            max_degree=guards.max_oracle_degree,
        )
        window = BettiTable.from_counts(
            {(i, j): v for (i, j), v in betti.entries.items() if i <= imax and j <= dmax and j - i <= max_row}
        )
        report.add("oracle", oracle == window, f"i<={imax}, j<={dmax}, j-i<={max_row}")

    # パブリックメソッド

    def run_step(self, step_name: StepName) -> None:
        """指定ステップを実行する

        Args:
            step_name: 実行するステップ名

        Raises:
            ValueError: 不正なステップ名の場合
            PipelineError: ステップの実行に失敗した場合
            SizeGuardError: 計算規模が上限を超えた場合
        """
        if not isinstance(step_name, StepName):
            raise ValueError(f"不正なステップ名です: {step_name}")

        step_handlers = {
            StepName.BUILD_RESOLUTION: self._run_build_resolution,
            StepName.BUILD_SETUP: self._run_build_setup,
            StepName.LIFT: self._run_lift,
            StepName.TRIM: self._run_trim,
            StepName.BETTI: self._run_betti,
            StepName.VERIFY: self._run_verify,
        }

        handler = step_handlers.get(step_name)
        if handler is None:
            raise ValueError(f"ハンドラが登録されていないステップです: {step_name}")
        logger.info("ステップ開始: %s", step_name.value)
        handler()

    def run_steps(self, step_names: list[StepName]) -> None:
        """複数ステップを順番に実行する"""
        for step_name in step_names:
            self.run_step(step_name)

    def run_betti(self) -> BettiTable:
        """betti / demo のステップ列を実行してBetti表を返す"""
        self.run_steps(BETTI_STEPS)
        assert self._context.betti is not None
        return self._context.betti

    def run_verify(self) -> VerifyReport:
        """verify のステップ列を実行して検証結果を返す"""
        self.run_steps(VERIFY_STEPS)
        assert self._context.report is not None
        return self._context.report

    def closed_form_table(self, *, strict: bool = True) -> BettiTable | None:
        """設定に対応する閉じた式のBetti表(多項式演算なし)

        Args:
            strict: Trueなら閉じた式のない入力でValueErrorを送出する。Falseなら None を返す

        Raises:
            ValueError: strict=True で閉じた式のない入力の場合
        """
        config = self.config
        if config.command != "demo" and config.preset == "pfaffian" and len(config.removal_indices) == 1:
            assert config.size is not None
            return betti_pfaffian_trim(config.size)
        if config.command != "demo" and config.preset == "minors":
            assert config.rows is not None and config.cols is not None
            if len(config.sigmas) == 1:
                return betti_single_minor(config.rows, config.cols)
            return betti_multi_minor(config.rows, config.cols, config.sigmas)
        if strict:
            raise ValueError("閉じた式はpfaffian(1つの生成元)とminorsにのみあります")
        return None

    def closed_form_nvars(self) -> int:
        """閉じた式の入力の変数の数"""
        config = self.config
        if config.preset == "pfaffian":
            assert config.size is not None
            return config.size * (config.size - 1) // 2
        assert config.rows is not None and config.cols is not None
        return config.rows * config.cols

    def fvector(self) -> tuple[dict[str, Any], pl.DataFrame]:
        """f 列の比較表とJSON出力用の辞書

        辞書は clutter(指定文字列)、fvector(全列挙の f_0, ..., f_{m-1})と比較表の各列を持つ。

        Raises:
            SizeGuardError: m が max_fvector_ground を超える場合
        """
        config = self.config
        assert config.rows is not None and config.cols is not None
        limit = config.guards.max_fvector_ground
        spec = ClutterSpec(n=config.rows, m=config.cols, remove=config.remove_sets)
        frame = FVectorSchema.validate(fvector_frame(spec, max_ground=limit))
        document: dict[str, Any] = {
            "clutter": spec.to_string(),
            "fvector": clique_fvector_enumerate(spec.clutter(), max_ground=limit),
            **frame.to_dict(as_series=False),
        }
        return document, frame

    # 出力

    def betti_output(self, table: BettiTable, nvars: int) -> dict[str, Any]:
        return betti_document(table, nvars, self.config.coefficient_field.label)

    def export(self, document: dict[str, Any], frame: pl.DataFrame | None = None) -> None:
        """json_path / csv_path が設定されていればIOレイヤーに書き出す"""
        if self.config.json_path is not None:
            self.io.save(self.config.json_path, document, "json")
            logger.info("JSONを書き出しました: %s", self.config.json_path)
        if self.config.csv_path is not None and frame is not None:
            self.io.save(self.config.csv_path, frame, "csv")
            logger.info("CSVを書き出しました: %s", self.config.csv_path)

    @staticmethod
    def betti_frame(table: BettiTable) -> pl.DataFrame:
        return BettiSchema.validate(table.to_frame())
