"""
Shipped manifest of positivity facts whose oracle check takes hours.

Entries are exact (alpha, beta) pairs or (alpha, "*") wildcards covering every beta of
size |alpha|. Default runs trust covered leaves; extended runs recompute them.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.partitions import Partition, format_partition, parse_partition
from src.utils.config import config
from src.utils.errors import CertificateError

logger = logging.getLogger(__name__)

WILDCARD = "*"


class ManifestEntry(BaseModel):
    """One asserted leaf that the extended mode can re-derive."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    alpha: str = Field(..., description="Partition in canonical text form")
    beta: str = Field(..., description="Partition in canonical text form, or '*' for every beta")
    n: int = Field(..., ge=1, description="Common size of alpha and beta")
    citation: str = Field(..., min_length=1)

    @field_validator("alpha")
    @classmethod
    def validate_alpha(cls, v: str) -> str:
        return format_partition(parse_partition(v))

    @field_validator("beta")
    @classmethod
    def validate_beta(cls, v: str) -> str:
        if v.strip() == WILDCARD:
            return WILDCARD
        return format_partition(parse_partition(v))


class ManifestDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    v: int = Field(1, ge=1, le=1)
    description: str = ""
    entries: List[ManifestEntry] = Field(default_factory=list)


class Manifest:
    """Lookup structure over manifest entries."""

    def __init__(self, entries: List[ManifestEntry], path: Optional[Path] = None):
        self.path = path
        self.entries = list(entries)
        self._exact: Dict[Tuple[Partition, Partition], ManifestEntry] = {}
        self._wildcards: Dict[Partition, ManifestEntry] = {}
        for entry in self.entries:
            alpha = parse_partition(entry.alpha)
            if alpha.size != entry.n:
                raise CertificateError(f"manifest entry {entry.alpha} has size {alpha.size} != n={entry.n}")
            if entry.beta == WILDCARD:
                self._wildcards[alpha] = entry
            else:
                beta = parse_partition(entry.beta)
                if beta.size != entry.n:
                    raise CertificateError(f"manifest entry {entry.beta} has size {beta.size} != n={entry.n}")
                self._exact[(alpha, beta)] = entry

    def lookup(self, alpha: Partition, beta: Partition) -> Optional[ManifestEntry]:
        if alpha.size != beta.size:
            return None
        return self._exact.get((alpha, beta)) or self._wildcards.get(alpha)

    def covers(self, alpha: Partition, beta: Partition) -> bool:
        return self.lookup(alpha, beta) is not None

    def __len__(self) -> int:
        return len(self.entries)


def _resolve(path: Union[str, Path, None]) -> Path:
    path = Path(path) if path is not None else config.MANIFEST_PATH
    if not path.is_absolute():
        path = config.PROJECT_ROOT / path
    return path


@lru_cache(maxsize=8)
def _load(path: Path) -> Manifest:
    if not path.exists():
        logger.warning("manifest %s not found; manifest leaves will be rejected", path)
        return Manifest([], path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = ManifestDocument.model_validate(json.load(fh))
    except (json.JSONDecodeError, ValidationError) as exc:
        raise CertificateError(f"invalid manifest {path}: {exc}") from exc
    logger.debug("loaded %d manifest entries from %s", len(document.entries), path)
    return Manifest(document.entries, path)


def load_manifest(path: Union[str, Path, None] = None) -> Manifest:
    """Load (and cache) the manifest; relative paths resolve against the project root."""
    return _load(_resolve(path))
