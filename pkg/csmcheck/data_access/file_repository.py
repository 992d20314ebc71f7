import json
from pathlib import Path
from typing import Any, Type, TypeVar, Union

from loguru import logger
from pydantic import BaseModel, ValidationError

from ..core.exceptions import InputValidationError
from ..models.files import ArrangementFile, PosetFile, TableFile

ModelT = TypeVar("ModelT", bound=BaseModel)


def _format_validation_error(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "<root>"
    return f"{location}: {first.get('msg')}"


def parse_document(document: Any, model: Type[ModelT], source: str) -> ModelT:
    """Validate a decoded JSON document against a file schema."""
    try:
        return model.model_validate(document)
    except ValidationError as e:
        message = _format_validation_error(e)
        logger.error(f"Invalid {model.__name__} in {source}: {message}")
        raise InputValidationError(f"{source}: {message}")


class FileRepository:
    """Reads user-supplied JSON input files"""

    def read_json(self, path: Union[str, Path]) -> Any:
        """Read and decode a JSON file"""
        path = Path(path)
        try:
            with path.open("r", encoding="utf-8") as handle:
                return json.load(handle)
        except FileNotFoundError:
            raise InputValidationError(f"{path}: no such file")
        except json.JSONDecodeError as e:
            logger.error(f"Malformed JSON in {path}: {e}")
            raise InputValidationError(f"{path}: malformed JSON ({e.msg} at line {e.lineno})")
        except OSError as e:
            raise InputValidationError(f"{path}: {e.strerror}")

    def load(self, path: Union[str, Path], model: Type[ModelT]) -> ModelT:
        document = self.read_json(path)
        parsed = parse_document(document, model, str(path))
        logger.debug(f"Loaded {model.__name__} from {path}")
        return parsed

    def load_arrangement(self, path: Union[str, Path]) -> ArrangementFile:
        return self.load(path, ArrangementFile)

    def load_poset(self, path: Union[str, Path]) -> PosetFile:
        return self.load(path, PosetFile)

    def load_table(self, path: Union[str, Path]) -> TableFile:
        return self.load(path, TableFile)
