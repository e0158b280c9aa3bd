"""Atomic JSON writer for Pydantic report models."""

import logging
import tempfile
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)


def write_json_atomic(model: BaseModel, output_path: Path) -> None:
    """Write ``model`` as indented JSON via a temp file renamed into place.

    Raises:
        OSError: If the file cannot be written; the temp file is removed
    """
    content = model.model_dump_json(indent=2)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with tempfile.NamedTemporaryFile(
        mode="w",
        dir=output_path.parent,
        suffix=".tmp",
        delete=False,
        encoding="utf-8",
    ) as temp_file:
        temp_path = Path(temp_file.name)
        try:
            temp_file.write(content)
        except OSError:
            temp_file.close()
            temp_path.unlink(missing_ok=True)
            raise
    temp_path.replace(output_path)
    logger.debug(f"Wrote {output_path}")


def read_json_model(model_type: type[ModelT], path: Path) -> ModelT:
    return model_type.model_validate_json(path.read_text(encoding="utf-8"))
