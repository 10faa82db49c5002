"""Plain-text tableau format.

    line 1   "n k"  (length and number of rows)
    line 2   row lengths, comma-separated (zeros allowed)
    k lines  one string of 0/1 per row (an empty line for an empty row)

Arrow forms use the characters U, L and . in the same grid.
"""
import logging
from pathlib import Path

from permtab.errors import InvalidTableauError
from permtab.tableaux.models import AltTableau, PermutationTableau

logger = logging.getLogger(__name__)


def parse_tableau(text: str) -> PermutationTableau:
    lines = text.splitlines()
    if len(lines) < 2:
        raise InvalidTableauError("malformed", detail="expected a header line and a row-length line")
    header = lines[0].split()
    if len(header) != 2 or not all(token.isdigit() for token in header):
        raise InvalidTableauError("malformed", detail=f"bad header '{lines[0]}'")
    n, k = int(header[0]), int(header[1])

    try:
        row_lengths = tuple(int(token) for token in lines[1].split(",") if token.strip())
    except ValueError:
        raise InvalidTableauError("malformed", detail=f"bad row lengths '{lines[1]}'")
    if len(row_lengths) != k:
        raise InvalidTableauError("malformed", detail=f"header says {k} rows, found {len(row_lengths)} lengths")

    extra = [line for line in lines[2 + k:] if line.strip()]
    if extra:
        raise InvalidTableauError("malformed", detail=f"{len(extra)} line(s) after the {k} rows, first '{extra[0]}'")

    rows = [line.strip() for line in lines[2:2 + k]]
    # trailing empty rows may have been stripped from the file
    rows += [""] * (k - len(rows))
    fill = []
    for r, row in enumerate(rows, start=1):
        if any(ch not in "01" for ch in row):
            raise InvalidTableauError("malformed", detail=f"row {r} '{row}' is not a 0/1 string")
        fill.append(tuple(int(ch) for ch in row))

    tableau = PermutationTableau(row_lengths, tuple(fill))
    if tableau.length != n:
        raise InvalidTableauError(
            "malformed", detail=f"header length {n} but shape has length {tableau.length}"
        )
    return tableau


def read_tableau(path: Path) -> PermutationTableau:
    logger.debug(f"Reading tableau from {path}")
    return parse_tableau(Path(path).read_text())


def format_tableau(t: PermutationTableau) -> str:
    lines = [f"{t.length} {t.num_rows}", ",".join(str(length) for length in t.row_lengths)]
    lines += ["".join(str(bit) for bit in row) for row in t.fill]
    return "\n".join(lines) + "\n"


def format_alternative(a: AltTableau) -> str:
    lines = [
        f"{a.num_rows + a.num_columns} {a.num_rows}",
        ",".join(str(length) for length in a.row_lengths),
    ]
    lines += ["".join(mark.value for mark in row) for row in a.marks]
    return "\n".join(lines) + "\n"
