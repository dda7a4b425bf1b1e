"""Reader for the hand-written table transcription in golden/."""

from fractions import Fraction
from pathlib import Path

TRANSCRIPTION = Path(__file__).parent / "golden" / "table_transcription.txt"


def parse_cell(cell, alg):
    sign = -1 if cell.startswith("-") else 1
    cell = cell.lstrip("-")
    if "." in cell:
        mono, unit = cell.split(".")
    elif cell.startswith("e"):
        mono, unit = "", cell
    else:
        mono, unit = cell, "e0"
    value = {"a": alg.alpha, "b": alg.beta, "g": alg.gamma}
    coeff = Fraction(sign)
    for ch in mono:
        coeff *= value[ch]
    return coeff, int(unit[1:])


def literal_products(alg):
    """{(i, j): (coefficient, k)} for all 64 basis products."""
    lines = [ln for ln in TRANSCRIPTION.read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    out = {}
    for k in range(8):
        out[0, k] = out[k, 0] = (Fraction(1), k)
    for i, line in enumerate(lines, start=1):
        for j, cell in enumerate(line.split(), start=1):
            out[i, j] = parse_cell(cell, alg)
    return out
