"""The compalg-kit command line."""

from compalg_kit.cli.app import build_parser, main

__all__ = ["build_parser", "main"]
