# Certificates Module - Rule System, Constructors, Checker, JSON Schema, Manifest
# The axiom audit lives in src.certificates.audit (it reports through src.saxl.report).
from src.certificates.checker import (
    CertificateChecker,
    CheckResult,
    check_certificate,
    verify_certificate,
)
from src.certificates.manifest import Manifest, ManifestEntry, load_manifest
from src.certificates.model import (
    AXIOM_CITATIONS,
    LEAF_RULES,
    SOURCE_MANIFEST,
    SOURCE_ORACLE,
    Certificate,
    Rule,
    RulePolicy,
    axiom_leaf,
    derive_scalar_multiple,
    derive_vertical_multiple,
    dominance_applies,
    leaf_from_oracle,
    manifest_leaf,
    semigroup,
    sigma_two_applies,
    transpose,
    vertical_sum,
)
from src.certificates.schema import (
    CERT_SUFFIX,
    certificate_from_dict,
    certificate_to_dict,
    emit_certificate,
    load_certificate,
    parse_certificate,
    save_certificate,
)

__all__ = [
    "CertificateChecker", "CheckResult", "check_certificate", "verify_certificate",
    "Manifest", "ManifestEntry", "load_manifest",
    "AXIOM_CITATIONS", "LEAF_RULES", "SOURCE_MANIFEST", "SOURCE_ORACLE", "Certificate", "Rule",
    "RulePolicy", "axiom_leaf", "derive_scalar_multiple", "derive_vertical_multiple",
    "dominance_applies", "leaf_from_oracle", "manifest_leaf", "semigroup", "sigma_two_applies",
    "transpose", "vertical_sum",
    "CERT_SUFFIX", "certificate_from_dict", "certificate_to_dict", "emit_certificate",
    "load_certificate", "parse_certificate", "save_certificate",
]
