"""Command line interface: expression parsing, reports and the ``conchoidal`` entry point."""

from .main import main
from .parser import parse_constant, parse_expr, parse_ratfn

__all__ = ["main", "parse_constant", "parse_expr", "parse_ratfn"]
