# CLI Module - Click Command Group and Run Configuration
from src.cli.main import cli, main
from src.cli.schemas import RunConfig

__all__ = ["cli", "main", "RunConfig"]
