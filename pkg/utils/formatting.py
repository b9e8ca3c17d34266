"""
Rendering helpers for command output.

Machine-readable output is one ``key=value`` record per line; keys may repeat
(one ``root=`` line per root). The text format aligns the same records for
reading.
"""

from typing import Iterable, Sequence

from braids.garside import GarsideNormalForm, SimpleFactor

Record = tuple[str, str]


def format_factors(form: GarsideNormalForm) -> str:
    """Factors joined by '.', letters by ','; Delta is 'D', inverse factors carry '~'."""
    parts = ["~" + str(x) for x in form.negative] + [str(x) for x in form.positive]
    return ".".join(parts) or "e"


def format_perms(factors: Iterable[SimpleFactor], negative: Iterable[SimpleFactor] = ()) -> str:
    parts = ["~" + x.oneline() for x in negative] + [x.oneline() for x in factors]
    return ".".join(parts) or "e"


def format_simple_list(factors: Sequence[SimpleFactor]) -> str:
    return ".".join(str(x) for x in factors) or "e"


def format_letters(letters: Sequence) -> str:
    """Space separated letters, or 'e' for the empty word."""
    return " ".join(str(x) for x in letters) or "e"


def format_matrix_rows(name: str, rows) -> list[Record]:
    return [(f"{name}.{i + 1}", ",".join(str(v) for v in row)) for i, row in enumerate(rows)]


def render_lines(records: Iterable[Record]) -> str:
    return "".join(f"{key}={value}\n" for key, value in records)


def render_text(records: Sequence[Record]) -> str:
    width = max((len(key) for key, _ in records), default=0)
    return "".join(f"{key.ljust(width)} : {value}\n" for key, value in records)


def render(records: Sequence[Record], output_format: str = "lines") -> str:
    if output_format == "text":
        return render_text(records)
    return render_lines(records)
