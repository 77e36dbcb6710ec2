"""
Certificate JSON documents (`.kcert.json`, schema version 1).

Field order is fixed: v, alpha, beta, rule, value, source, citation, children. The
version field appears on the root only. Documents are validated with pydantic on load.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from src.certificates.model import Certificate, Rule
from src.partitions import format_partition, parse_partition
from src.utils.errors import CertificateError

SCHEMA_VERSION = 1
CERT_SUFFIX = ".kcert.json"


class CertificateNode(BaseModel):
    """One node of a certificate document."""

    model_config = ConfigDict(extra="forbid")

    v: Optional[int] = None
    alpha: str
    beta: str
    rule: Rule
    value: Optional[int] = Field(None, ge=0)
    source: Optional[Literal["oracle", "manifest"]] = None
    citation: Optional[str] = None
    children: List["CertificateNode"] = Field(default_factory=list, max_length=2)

    @field_validator("alpha", "beta")
    @classmethod
    def validate_partition(cls, v: str) -> str:
        return format_partition(parse_partition(v))


CertificateNode.model_rebuild()


def _to_dict(cert: Certificate, root: bool, shared: Dict[int, Dict[str, Any]]) -> Dict[str, Any]:
    cached = shared.get(id(cert))
    if cached is not None and not root:
        return cached
    doc: Dict[str, Any] = {}
    if root:
        doc["v"] = SCHEMA_VERSION
    doc["alpha"] = format_partition(cert.alpha)
    doc["beta"] = format_partition(cert.beta)
    doc["rule"] = cert.rule.value
    doc["value"] = cert.value
    doc["source"] = cert.source
    doc["citation"] = cert.citation
    doc["children"] = [_to_dict(child, False, shared) for child in cert.children]
    if not root:
        shared[id(cert)] = doc
    return doc


def certificate_to_dict(cert: Certificate) -> Dict[str, Any]:
    return _to_dict(cert, True, {})


def emit_certificate(cert: Certificate) -> str:
    """Serialize to JSON text with a trailing newline."""
    return json.dumps(certificate_to_dict(cert), indent=1) + "\n"


def _from_node(node: CertificateNode, cache: Dict[str, Certificate]) -> Certificate:
    children = tuple(_from_node(child, cache) for child in node.children)
    cert = Certificate(
        alpha=parse_partition(node.alpha),
        beta=parse_partition(node.beta),
        rule=node.rule,
        children=children,
        value=node.value,
        source=node.source,
        citation=node.citation,
    )
    # Share identical subtrees so the checker sees them once
    return cache.setdefault(cert.fingerprint, cert)


def certificate_from_dict(doc: Dict[str, Any]) -> Certificate:
    """
    Build a certificate from a parsed JSON document.

    Raises:
        CertificateError: schema violations, unknown rules or unsupported versions
    """
    try:
        node = CertificateNode.model_validate(doc)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = "/".join(str(p) for p in first.get("loc", ()))
        raise CertificateError(f"malformed certificate at {where or 'root'}: {first.get('msg')}") from exc
    if node.v != SCHEMA_VERSION:
        raise CertificateError(f"unsupported certificate schema version {node.v!r}")
    return _from_node(node, {})


def parse_certificate(text: str) -> Certificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"certificate is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CertificateError("certificate document must be a JSON object")
    return certificate_from_dict(doc)


def save_certificate(cert: Certificate, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_certificate(cert), encoding="utf-8")
    return path


def load_certificate(path: Union[str, Path]) -> Certificate:
    """
    Read a certificate file.

    Raises:
        FileNotFoundError: path does not exist
        CertificateError: the document is malformed
    """
    text = Path(path).read_text(encoding="utf-8")
    return parse_certificate(text)
