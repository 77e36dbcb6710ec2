"""
Configuration Management for saxlkit.

Centralizes environment variables, YAML defaults and computation limits.
Precedence: command-line flag > environment > config/saxlkit_config.yaml > built-in default.
"""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = Path(__file__).parent.parent.parent
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "saxlkit_config.yaml"


def load_yaml_defaults(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Read the YAML defaults file and flatten it to ``section_key`` names.

    Args:
        path: Config file; defaults to config/saxlkit_config.yaml

    Returns:
        Flat dictionary, e.g. {"cache_entries": 4194304, "policy_brute_force_size_cap": 36}
    """
    path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not path.exists():
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        raw = yaml.safe_load(fh) or {}

    flat: Dict[str, Any] = {}
    for section, values in raw.items():
        if isinstance(values, dict):
            for key, value in values.items():
                flat[f"{section}_{key}"] = value
        else:
            flat[section] = values
    return flat


_YAML = load_yaml_defaults()


def _setting(env_name: str, yaml_key: str, default: Any, cast=str) -> Any:
    """Resolve one setting from the environment, then YAML, then the default."""
    raw = os.getenv(env_name)
    if raw is not None and raw != "":
        if cast is bool:
            return raw.strip().lower() in ("1", "true", "yes", "on")
        return cast(raw)
    if yaml_key in _YAML and _YAML[yaml_key] is not None:
        return cast(_YAML[yaml_key]) if cast is not bool else bool(_YAML[yaml_key])
    return default


class Config:
    """Application configuration loaded from environment variables and YAML defaults."""

    # ==========================================
    # Character Cache
    # ==========================================
    CACHE_ENTRIES = _setting("SAXLKIT_CACHE_ENTRIES", "cache_entries", 2 ** 22, int)

    # ==========================================
    # Certificate Policy
    # ==========================================
    BRUTE_FORCE_SIZE_CAP = _setting("SAXLKIT_BRUTE_FORCE_SIZE_CAP", "policy_brute_force_size_cap", 36, int)
    AUDIT_CAP = _setting("SAXLKIT_AUDIT_CAP", "policy_audit_cap", 11, int)
    LEAF_SIZE = _setting("SAXLKIT_LEAF_SIZE", "policy_leaf_size", 21, int)
    EXTENDED = _setting("SAXLKIT_EXTENDED", "policy_extended", False, bool)
    AXIOM_ALLOWLIST = ("Dominance", "SigmaTwo")

    # ==========================================
    # Oracle Limits
    # ==========================================
    MAX_N = _setting("SAXLKIT_MAX_N", "oracle_max_n", 30, int)

    # ==========================================
    # Worker Pool
    # ==========================================
    THREADS = _setting("SAXLKIT_THREADS", "workers_threads", 0, int)  # 0 = logical cores
    BACKEND = _setting("SAXLKIT_BACKEND", "workers_backend", "loky", str)

    # ==========================================
    # Reports & Logging
    # ==========================================
    REPORT_TIMINGS = _setting("SAXLKIT_REPORT_TIMINGS", "reports_timings", True, bool)
    LOG_LEVEL = _setting("SAXLKIT_LOG_LEVEL", "logging_level", "INFO", str)
    LOG_TO_FILE = _setting("SAXLKIT_LOG_TO_FILE", "logging_to_file", False, bool)

    # ==========================================
    # Data Paths
    # ==========================================
    PROJECT_ROOT = PROJECT_ROOT
    OUTPUT_DIR = Path(_setting("SAXLKIT_OUTPUT_DIR", "paths_output_dir", "results", str))
    CERTS_DIR = Path(_setting("SAXLKIT_CERTS_DIR", "paths_certs_dir", "certs", str))
    MANIFEST_PATH = Path(
        _setting(
            "SAXLKIT_MANIFEST",
            "paths_manifest",
            str(PROJECT_ROOT / "data" / "manifest" / "asserted_leaves.json"),
            str,
        )
    )
    LOG_DIR = PROJECT_ROOT / "logs"

    @classmethod
    def resolved_threads(cls, threads: Optional[int] = None) -> int:
        """Worker count; 0 or None means one worker per logical core."""
        value = cls.THREADS if threads is None else threads
        if value and value > 0:
            return value
        return os.cpu_count() or 1

    @classmethod
    def as_dict(cls) -> Dict[str, Any]:
        """Return all config as dictionary."""
        return {
            key: getattr(cls, key)
            for key in dir(cls)
            if not key.startswith('_') and key.isupper()
        }


# Singleton instance
config = Config()
