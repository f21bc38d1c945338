"""The bundled example relators."""

from __future__ import annotations

from importlib import resources

TREFOIL = "XyXYxY"
TREFOIL_B = "xYXyXY"
TREFOIL_B_L1 = "xYX^2Y"
KNOT_5_2 = "XYxYXyxyXYxYX"
KNOT_10_161 = "XyXyxYxyXy^2XyxYxyXyXYxYXYxY"
D_PLUS = "Xyx^3YX^3Yx^3yX^2yx^3YX^3Yx^3yX^4"
D_PLUS_PSEUDO = "X^4yx^3YX^4Yx^3yXyx^3YX^4Yx^3y"
T27_PSEUDO = "YX^2YxYX^2Yx^2"
TREFOIL_STALL = "YX^3Yxyx"
# quasi-geometric, but the relative Alexander grading has no symmetric normalization
NO_NORMALIZATION = "YX^2yXYx^2"


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def corpus_lines() -> list[str]:
    text = resources.files("hfkword").joinpath("data/corpus.txt").read_text(encoding="utf-8")
    return text.splitlines()


def corpus_relators() -> list[str]:
    return [s for s in map(strip_comment, corpus_lines()) if s]
