"""Plain-text formats for trees and codes.

Tree files carry a ``root R`` header and one line per hyperedge with its
vertices in ascending order; code files carry ``root``, ``variant``,
``partition`` and ``word`` lines.  ``#`` starts a comment (whole line or
trailing), blank lines are skipped, and emission is canonical, so
parse(emit(x)) == x byte for byte on emitted files.
"""

from __future__ import annotations

from .classic import CLASSIC, STAR, PruferCode
from .core import RootedHypertree, mark, partition_from_parts, validate
from .errors import ParseError


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line))
    return out


def _parse_int(token: str, no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", no) from None


def emit_tree(tree: RootedHypertree) -> str:
    """Canonical tree file: hyperedges by smallest unmarked vertex, each
    annotated with its marked form for human readers."""
    lines = [f"root {tree.root}"]
    for m in mark(tree):
        ids = " ".join(map(str, m.full()))
        lines.append(f"{ids}  # {m}")
    return "\n".join(lines) + "\n"


def parse_tree(text: str) -> RootedHypertree:
    """Parse and validate a tree file."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty tree file", 1)
    no, head = lines[0]
    fields = head.split()
    if len(fields) != 2 or fields[0] != "root":
        raise ParseError("expected header 'root R'", no)
    root = _parse_int(fields[1], no)
    edges = []
    for no, line in lines[1:]:
        edges.append(tuple(_parse_int(t, no) for t in line.split()))
    return validate(root, edges)


def emit_code(code: PruferCode) -> str:
    """Canonical code file with partition parts separated by ';'."""
    parts = ";".join(",".join(map(str, p)) for p in code.partition.parts)
    word = " ".join(map(str, code.word))
    lines = [
        f"root {code.root}",
        f"variant {code.variant}",
        f"partition {parts}".rstrip(),
        f"word {word}".rstrip(),
    ]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> PruferCode:
    """Parse a code file; the tree itself is not reconstructed here."""
    fields: dict[str, tuple[int, str]] = {}
    for no, line in _content_lines(text):
        key, _, rest = line.partition(" ")
        if key not in ("root", "variant", "partition", "word"):
            raise ParseError(f"unknown line {key!r}", no)
        if key in fields:
            raise ParseError(f"duplicate line {key!r}", no)
        fields[key] = (no, rest.strip())
    for key in ("root", "variant", "partition", "word"):
        if key not in fields:
            raise ParseError(f"missing line {key!r}", len(text.splitlines()) or 1)

    no, rest = fields["root"]
    root = _parse_int(rest, no)
    no, variant = fields["variant"]
    if variant not in (CLASSIC, STAR):
        raise ParseError(f"variant must be classic or star, got {variant!r}", no)
    no, rest = fields["partition"]
    parts = []
    if rest:
        for chunk in rest.split(";"):
            parts.append(tuple(_parse_int(t, no) for t in chunk.split(",") if t))
    partition = partition_from_parts(parts, root)
    no, rest = fields["word"]
    word = tuple(_parse_int(t, no) for t in rest.split())
    return PruferCode(partition, word, variant)
