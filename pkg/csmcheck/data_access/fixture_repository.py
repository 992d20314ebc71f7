import json
from functools import lru_cache
from importlib import resources
from typing import Dict, List, Optional

from loguru import logger

from ..core.config import settings
from ..core.exceptions import FixtureError, InputValidationError
from ..models.files import ArrangementFile, FixtureFile, PosetFile
from .file_repository import parse_document


@lru_cache(maxsize=None)
def _read_package_json(package: str, filename: str) -> str:
    try:
        return resources.files(package).joinpath(filename).read_text(encoding="utf-8")
    except (FileNotFoundError, ModuleNotFoundError) as e:
        raise FixtureError(f"embedded data {package}/{filename} is missing: {e}")


def _package_listing(package: str) -> List[str]:
    try:
        entries = list(resources.files(package).iterdir())
    except (FileNotFoundError, ModuleNotFoundError) as e:
        raise FixtureError(f"embedded data package {package} is missing: {e}")
    return sorted(entry.name for entry in entries if entry.name.endswith(".json"))


class FixtureRepository:
    """Read-only access to the embedded fixtures and sample inputs"""

    def __init__(self, fixture_package: Optional[str] = None, sample_package: Optional[str] = None):
        self.fixture_package = fixture_package or settings.FIXTURE_PACKAGE
        self.sample_package = sample_package or settings.SAMPLE_PACKAGE

    def _document(self, package: str, filename: str):
        try:
            return json.loads(_read_package_json(package, filename))
        except json.JSONDecodeError as e:
            logger.error(f"Embedded file {filename} is not valid JSON: {e}")
            raise FixtureError(f"embedded file {filename} is not valid JSON")

    def fixtures(self) -> Dict[str, FixtureFile]:
        """All embedded table fixtures keyed by name"""
        found = {}
        for filename in _package_listing(self.fixture_package):
            try:
                fixture = parse_document(self._document(self.fixture_package, filename), FixtureFile, filename)
            except InputValidationError as e:
                raise FixtureError(str(e))
            if fixture.name in found:
                raise FixtureError(f"fixture name {fixture.name} is used twice")
            found[fixture.name] = fixture
        return found

    def get_fixture(self, name: str) -> FixtureFile:
        fixtures = self.fixtures()
        if name not in fixtures:
            raise InputValidationError(f"unknown fixture {name!r}; available: {', '.join(sorted(fixtures))}")
        logger.debug(f"Using fixture {name}")
        return fixtures[name]

    def sample_names(self) -> List[str]:
        return [filename[: -len(".json")] for filename in _package_listing(self.sample_package)]

    def _sample_document(self, name: str):
        if name not in self.sample_names():
            raise InputValidationError(f"unknown sample {name!r}; available: {', '.join(self.sample_names())}")
        return self._document(self.sample_package, f"{name}.json")

    def get_sample_poset(self, name: str) -> PosetFile:
        return parse_document(self._sample_document(name), PosetFile, f"sample {name}")

    def get_sample_arrangement(self, name: str) -> ArrangementFile:
        return parse_document(self._sample_document(name), ArrangementFile, f"sample {name}")
