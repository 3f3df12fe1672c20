"""Reading and writing the plain-text group file format.

Two block kinds are supported.  A table block::

    %table 3
    0 1 2
    1 2 0
    2 0 1

and a permutation-generator block::

    %perm 5
    (1 2 3 4 5)
    (1 2 3)

Lines starting with '#' are comments; blank lines are ignored.  Permutation
groups are closed into a full table on load; see `from_permutations`.
"""

from __future__ import annotations

import os

from .group import (
    DEFAULT_CLOSURE_CAP,
    GroupError,
    GroupTable,
    from_permutations,
)

__all__ = ["GroupFileError", "parse_group_text", "load_group_file", "format_table"]


class GroupFileError(GroupError):
    """A malformed group file; carries the offending line number."""

    def __init__(self, source: str, line: int, message: str):
        super().__init__(f"{source}:{line}: {message}")
        self.source = source
        self.line = line


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((i, line))
    return out


def parse_group_text(
    text: str,
    source: str = "<string>",
    cap: int = DEFAULT_CLOSURE_CAP,
) -> GroupTable:
    """Parse one group from text in the %table/%perm format."""
    lines = _significant_lines(text)
    if not lines:
        raise GroupFileError(source, 1, "empty group file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in ("%table", "%perm"):
        raise GroupFileError(
            source, lineno, f"expected '%table n' or '%perm d', got {header!r}"
        )
    try:
        size = int(parts[1])
    except ValueError:
        raise GroupFileError(source, lineno, f"bad size {parts[1]!r}") from None
    if size < 1:
        raise GroupFileError(source, lineno, f"size must be positive, got {size}")

    body = lines[1:]
    if parts[0] == "%table":
        if len(body) != size:
            raise GroupFileError(
                source, lineno, f"expected {size} table rows, found {len(body)}"
            )
        rows = []
        for row_line, row_text in body:
            try:
                row = [int(tok) for tok in row_text.split()]
            except ValueError:
                raise GroupFileError(source, row_line, f"bad table row {row_text!r}") from None
            if len(row) != size:
                raise GroupFileError(
                    source, row_line, f"expected {size} entries, found {len(row)}"
                )
            rows.append(row)
        try:
            return GroupTable(rows)
        except GroupError as exc:
            raise GroupFileError(source, lineno, f"not a group table: {exc}") from exc

    for gen_line, gen_text in body:
        if not gen_text.startswith("("):
            raise GroupFileError(
                source, gen_line, f"expected a cycle-notation generator, got {gen_text!r}"
            )
    try:
        return from_permutations(size, [text for _, text in body], cap=cap)
    except GroupError as exc:
        raise GroupFileError(source, body[0][0] if body else lineno, str(exc)) from exc


def load_group_file(path: str | os.PathLike, cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    return parse_group_text(text, source=os.fspath(path), cap=cap)


def format_table(g: GroupTable) -> str:
    """Serialize a group as a %table block."""
    rows = "\n".join(" ".join(str(int(v)) for v in row) for row in g.mul)
    return f"%table {g.n}\n{rows}\n"
