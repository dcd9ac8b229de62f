# src/ig_persist/store.py

import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, Type, TypeVar, Union

from ig_core.logging import log_step
from pydantic import ValidationError

from .models import Document, PipelineReport

D = TypeVar("D", bound=Document)


class ReportStore(ABC, Generic[D]):
    """
    Abstract Base Class defining the interface for a report persistence store.
    """

    @abstractmethod
    def save(self, document: D) -> None:
        raise NotImplementedError

    @abstractmethod
    def load(self) -> D:
        raise NotImplementedError


def dump_document(document: Document) -> str:
    """The canonical JSON text of a document (aliases on, two-space indent, final newline)."""
    return document.model_dump_json(indent=2, by_alias=True) + "\n"


class FileReportStore(ReportStore[D]):
    """
    Saves and loads one JSON document (a pipeline report by default) at a
    local path.
    """

    def __init__(self, file_path: Union[str, Path], model: Type[D] = PipelineReport):  # type: ignore[assignment]
        self.file_path = Path(file_path)
        self.model = model

    def save(self, document: D) -> None:
        """
        Writes the document, creating the parent directory if needed.

        Raises:
            IOError: If there is an issue writing the file to disk.
        """
        self.file_path.parent.mkdir(parents=True, exist_ok=True)
        self.file_path.write_text(dump_document(document), encoding="utf-8")
        log_step(f"Saved {type(document).__name__} to {self.file_path}")

    def load(self) -> D:
        """
        Loads and validates the document.

        Raises:
            FileNotFoundError: If the file does not exist.
            ValueError: If the file contains invalid JSON or does not match
                        the model's schema.
        """
        if not self.file_path.is_file():
            raise FileNotFoundError(f"Report file not found at: {self.file_path}")
        json_text = self.file_path.read_text(encoding="utf-8")
        try:
            json.loads(json_text)
        except json.JSONDecodeError as e:
            raise ValueError(f"Error decoding JSON from {self.file_path}: {e}") from e
        try:
            return self.model.model_validate_json(json_text)
        except ValidationError as e:
            raise ValueError(
                f"Data validation error when loading {self.model.__name__} from {self.file_path}: {e}"
            ) from e
