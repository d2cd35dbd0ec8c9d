"""trimcx - トリミング複体と反復トリミング複体

多項式環上の自由分解から生成元を取り除いた(トリミングした)イデアルの
自由分解と次数付きBetti表を、厳密な計算と閉じた式の両方で求める。
"""

from trimcx.chain.betti import BettiTable
from trimcx.chain.complex import GradedFreeComplex, GradedFreeModule, GradedMap
from trimcx.config.models import RunConfig
from trimcx.core.pipeline import PipelineError, StepName, TrimPipeline
from trimcx.io.base import BaseIO
from trimcx.io.in_memory import InMemoryIO
from trimcx.io.local import LocalIO
from trimcx.ring.field import CoefficientField
from trimcx.ring.polynomial import PolyRing
from trimcx.trim.lifts import LiftError, LiftFamily, lift_q
from trimcx.trim.setup import TrimSetup, build_setup
from trimcx.utils.workspace import get_workspace

__version__ = "0.1.0"

__all__ = [
    "BaseIO",
    "BettiTable",
    "CoefficientField",
    "GradedFreeComplex",
    "GradedFreeModule",
    "GradedMap",
    "InMemoryIO",
    "LiftError",
    "LiftFamily",
    "LocalIO",
    "PipelineError",
    "PolyRing",
    "RunConfig",
    "StepName",
    "TrimPipeline",
    "TrimSetup",
    "build_setup",
    "get_workspace",
    "lift_q",
]
