"""
Loading of SET arguments given as `@path`.

The file is UTF-8 text with one set item per line; anything after '#'
is a comment and blank lines are skipped.
"""
from pathlib import Path


def read_set_argument(argument: str) -> str:
    """Return set notation for an inline SET argument or an @file reference."""
    if not argument.startswith("@"):
        return argument
    path = Path(argument[1:])
    items = []
    for line in path.read_text(encoding="utf-8").splitlines():
        item = line.split("#", 1)[0].strip()
        if item:
            items.append(item)
    return "{" + ", ".join(items) + "}"
