#!/usr/bin/env python3
"""
Pre-commit hook for exception handling in the analyzer.

Flags bare ``except:`` clauses and handlers for ``Exception`` or
``BaseException``. Outside the command line module it also flags handlers
for ``CubicBrauerError`` itself: library code catches specific errors and
lets every other analysis failure reach the CLI.
"""

import argparse
import ast
import sys
from pathlib import Path

GENERIC = {"Exception", "BaseException"}
BASE_ERROR = "CubicBrauerError"
CLI_MODULES = {"cli.py"}


def _handler_names(node: ast.ExceptHandler) -> list[str]:
    if node.type is None:
        return []
    elts = node.type.elts if isinstance(node.type, ast.Tuple) else [node.type]
    names = []
    for elt in elts:
        if isinstance(elt, ast.Name):
            names.append(elt.id)
        elif isinstance(elt, ast.Attribute):
            names.append(elt.attr)
    return names


class ExceptionHandlerVisitor(ast.NodeVisitor):
    """Collect (line, message) for every handler that breaks the rules."""

    def __init__(self, allow_base_error: bool) -> None:
        self.allow_base_error = allow_base_error
        self.issues: list[tuple[int, str]] = []

    def visit_ExceptHandler(self, node: ast.ExceptHandler) -> None:
        names = _handler_names(node)
        if node.type is None:
            self.issues.append((node.lineno, "bare except clause; name the errors handled"))
        elif GENERIC & set(names):
            self.issues.append(
                (node.lineno, f"handler catches {', '.join(sorted(GENERIC & set(names)))}")
            )
        elif BASE_ERROR in names and not self.allow_base_error:
            self.issues.append(
                (node.lineno, f"{BASE_ERROR} is only handled by the command line")
            )
        self.generic_visit(node)


def check_source(source: str, filename: str = "<string>") -> list[tuple[int, str]]:
    """Issues in one module's source text."""
    try:
        tree = ast.parse(source, filename)
    except SyntaxError as e:
        return [(e.lineno or 0, f"SyntaxError: {e}")]
    visitor = ExceptionHandlerVisitor(Path(filename).name in CLI_MODULES)
    visitor.visit(tree)
    return visitor.issues


def check_file(filename: str) -> list[tuple[int, str]]:
    return check_source(Path(filename).read_text(encoding="utf-8"), filename)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("filenames", nargs="*", help="files to check")
    args = parser.parse_args(argv)

    exit_code = 0
    for filename in args.filenames:
        if not filename.endswith(".py"):
            continue
        for line, message in check_file(filename):
            print(f"{filename}:{line}: {message}")
            exit_code = 1
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
