"""Command-line interface and species-expression language."""

from .parser import ParseError, parse_expr, print_expr

__all__ = ["ParseError", "parse_expr", "print_expr"]
