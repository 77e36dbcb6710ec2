"""python -m src.cli"""

from src.cli.main import cli

if __name__ == "__main__":
    cli(prog_name="saxlkit")
