"""Signed basepoint counts P(D) = (n_z, n_w) of primitive bigons.

Elementary words are read from a fixed table.  A longer primitive word is
first carried to upward-positive form by inverting X- and/or Y-letters;
there it splits into a square domain plus its height-one primitive pieces,
and P is the square's contribution plus the pieces' counts.  The result is
then mapped back through the symmetry that was applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .bigon import (
    Orientation,
    Symmetry,
    decompose_word,
    is_elementary_word,
    normalize_word,
    word_orientation,
)
from .errors import InternalError, NotQuasiGeometricError
from .word import CyclicRelator, DiskSpan, DiskWord, span_word


@dataclass(frozen=True)
class BasepointPair:
    n_z: int
    n_w: int

    def __add__(self, other: "BasepointPair") -> "BasepointPair":
        return BasepointPair(self.n_z + other.n_z, self.n_w + other.n_w)

    def __neg__(self) -> "BasepointPair":
        return BasepointPair(-self.n_z, -self.n_w)

    def swapped(self) -> "BasepointPair":
        return BasepointPair(self.n_w, self.n_z)

    def __iter__(self):
        return iter((self.n_z, self.n_w))

    def __str__(self) -> str:
        return f"({self.n_z}, {self.n_w})"


ZERO = BasepointPair(0, 0)


class SquareCase(Enum):
    DIFF_TABLE = "DiffTable"
    SINGLE_CHILD_ZERO = "SingleChildZero"
    SAME_ORIENTATION_ONE_ONE = "SameOrientationOneOne"
    ZERO_ZERO = "ZeroZero"


@dataclass(frozen=True)
class SquareContribution:
    value: BasepointPair
    case_tag: SquareCase


# keyed by (sign of first X-letter, Y-exponent between the two X-letters)
_ELEMENTARY = {
    (1, 1): BasepointPair(0, -1),  # X Y X^-1
    (1, -1): BasepointPair(0, 1),  # X Y^-1 X^-1
    (-1, 1): BasepointPair(1, 0),  # X^-1 Y X
    (-1, -1): BasepointPair(-1, 0),  # X^-1 Y^-1 X
}


def elementary_P(pattern: DiskWord | str) -> BasepointPair:
    """P of an elementary word, including thickened forms X^k Y^e X^-k.

    >>> elementary_P("XYx"), elementary_P("xyX"), elementary_P("X^2Yx^2")
    (BasepointPair(n_z=0, n_w=-1), BasepointPair(n_z=-1, n_w=0), BasepointPair(n_z=0, n_w=-1))
    """
    word = DiskWord.from_text(pattern) if isinstance(pattern, str) else pattern
    if not is_elementary_word(word):
        raise ValueError(f"{word} is not an elementary word")
    k = word.n // 2
    return _ELEMENTARY[(word.signs[0], word.runs[k - 1])]


def square_contribution(
    l: int,
    l_prime: int,
    d: int,
    first_child_positive: bool,
    last_child_positive: bool,
) -> SquareContribution:
    """Basepoints in the square cut off by X Y^l X ... X^-1 Y^-l' X^-1.

    For ``|l - l'| = 1`` the four boundary shapes collapse to the sign of
    ``l - l'``: +1 gives (1, 0), -1 gives (0, 1), whatever the signs of the
    Y-runs.  For ``l = l'`` the square holds one z and one w exactly when
    there are at least two height-one pieces and the first and last are
    positive (the orientation of the upward-positive ambient word).
    """
    diff = l - l_prime
    if abs(diff) > 1:
        raise NotQuasiGeometricError(
            f"boundary runs l = {l} and l' = {l_prime} differ by {abs(diff)}",
            rule="square-run",
            stage="basepoint",
            witness=(l, l_prime),
        )
    if diff == 1:
        return SquareContribution(BasepointPair(1, 0), SquareCase.DIFF_TABLE)
    if diff == -1:
        return SquareContribution(BasepointPair(0, 1), SquareCase.DIFF_TABLE)
    if d < 2:
        return SquareContribution(ZERO, SquareCase.SINGLE_CHILD_ZERO)
    if first_child_positive and last_child_positive:
        return SquareContribution(BasepointPair(1, 1), SquareCase.SAME_ORIENTATION_ONE_ONE)
    return SquareContribution(ZERO, SquareCase.ZERO_ZERO)


def from_normal_form(symmetry: Symmetry, p: BasepointPair) -> BasepointPair:
    """Map P of the upward-positive form back to the original word."""
    if symmetry is Symmetry.IDENTITY:
        return p
    if symmetry is Symmetry.INVERT_Y:
        return -p
    if symmetry is Symmetry.INVERT_X:
        return -p.swapped()
    return p.swapped()


@dataclass(frozen=True)
class BasepointDerivation:
    """One recursion step, kept for traces and consistency checks."""

    word: DiskWord
    symmetry: Symmetry
    normal: DiskWord
    square: SquareContribution | None
    children: tuple[DiskWord, ...]
    value: BasepointPair


@lru_cache(maxsize=None)
def derive_basepoints(word: DiskWord) -> BasepointDerivation:
    if not word.is_primitive():
        raise ValueError(f"{word} is not a primitive disk word")
    if is_elementary_word(word):
        # orientation check also rejects |Y-run| != 1 between the halves
        word_orientation(word)
        return BasepointDerivation(word, Symmetry.IDENTITY, word, None, (), elementary_P(word))
    symmetry, normal = normalize_word(word)
    l, l_prime, pieces = decompose_word(normal)
    children = tuple(normal.sub(i, j) for i, j in pieces)
    for child in children:
        if child.n >= word.n:
            raise InternalError(f"height-one piece {child} is not shorter than {normal}", stage="basepoint")
    square = square_contribution(
        l,
        l_prime,
        len(children),
        word_orientation(children[0]) is Orientation.POSITIVE,
        word_orientation(children[-1]) is Orientation.POSITIVE,
    )
    total = square.value
    for child in children:
        total = total + derive_basepoints(child).value
    return BasepointDerivation(word, symmetry, normal, square, children, from_normal_form(symmetry, total))


def word_basepoints(word: DiskWord) -> BasepointPair:
    return derive_basepoints(word).value


def count_basepoints(relator: CyclicRelator, span: DiskSpan) -> BasepointPair:
    return word_basepoints(span_word(relator, span))
