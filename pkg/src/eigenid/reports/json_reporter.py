"""JSON report writing."""

import json
import logging
from pathlib import Path
from typing import Union

from pydantic import BaseModel

from ..exceptions import DataFileError

logger = logging.getLogger(__name__)


class JSONReporter:
    """Writes pydantic report models as indented JSON."""

    def write(self, report: BaseModel, path: Union[str, Path]) -> Path:
        path = Path(path)
        try:
            if path.parent != Path("."):
                path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as f:
                json.dump(report.model_dump(mode="json"), f, indent=2, ensure_ascii=False)
        except OSError as exc:
            raise DataFileError(f"cannot write report: {exc.strerror or exc}", path=str(path)) from exc
        logger.debug("wrote %s to %s", type(report).__name__, path)
        return path

    def read(self, model: type, path: Union[str, Path]) -> BaseModel:
        """Load a report written by :meth:`write` back into ``model``."""
        path = Path(path)
        try:
            with open(path, encoding="utf-8") as f:
                return model.model_validate(json.load(f))
        except OSError as exc:
            raise DataFileError(f"cannot read report: {exc.strerror or exc}", path=str(path)) from exc
        except ValueError as exc:
            raise DataFileError(f"invalid report: {exc}", path=str(path)) from exc
