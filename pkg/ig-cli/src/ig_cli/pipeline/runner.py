# src/ig_cli/pipeline/runner.py

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Protocol, Sequence

from ig_core.logging import log_step

from ig_cli.errors import StageError

if TYPE_CHECKING:
    from .stages import PipelineContext


class StageProtocol(Protocol):
    """
    Anything with a ``name`` and a ``run(context)`` method can be a stage.
    """

    name: str

    def run(self, context: "PipelineContext") -> None: ...


class StageRunner(ABC):
    """
    Abstract Base Class for all stage runners.
    """

    @abstractmethod
    def run(self, stages: Sequence[StageProtocol], context: "PipelineContext") -> None:
        """
        Executes a list of stages against a shared context.

        Args:
            stages: Stages in execution order.
            context: The mutable context each stage reads and extends.
        """
        raise NotImplementedError


class SerialStageRunner(StageRunner):
    """
    Runs stages one after another. Every stage consumes the artifacts of
    the previous ones, so the first failure stops the run.
    """

    def run(self, stages: Sequence[StageProtocol], context: "PipelineContext") -> None:
        """
        Raises:
            StageError: wrapping the first exception any stage raises.
        """
        log_step(f"Running {len(stages)} stages serially")
        for stage in stages:
            log_step(f"Stage {stage.name}")
            try:
                stage.run(context)
            except StageError:
                raise
            except Exception as e:
                raise StageError(stage.name, e) from e
            context.completed.append(stage.name)
