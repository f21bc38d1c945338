"""Primitive disk words (primitive bigons) of a relator.

A disk word runs forward along the relator between two opposite-sign
X-letters with signed X-count 0; it is primitive when no proper prefix
already has signed count 0.  Walking forward from a given X-letter, the
first return of the running count to 0 is therefore the only primitive disk
word that can start there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import NotQuasiGeometricError
from .word import CyclicRelator, DiskSpan, DiskWord, span_word


class Direction(Enum):
    UPWARD = "upward"
    DOWNWARD = "downward"


class Orientation(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    @property
    def sign(self) -> int:
        return 1 if self is Orientation.POSITIVE else -1


class Symmetry(Enum):
    """How a primitive word is carried to upward-positive form."""

    IDENTITY = "upward-positive"
    INVERT_Y = "upward-negative"
    INVERT_X = "downward-negative"
    INVERT_XY = "downward-positive"


@dataclass(frozen=True)
class PrimitiveBigon:
    span: DiskSpan
    word: DiskWord
    direction: Direction
    orientation: Orientation
    elementary: bool
    # l, l_prime and children describe the upward-positive normalization;
    # all three are None/empty for elementary words.
    l: int | None = None
    l_prime: int | None = None
    children: tuple["PrimitiveBigon", ...] = field(default=())

    def __str__(self) -> str:
        return f"{self.span} {self.word} [{self.direction.value}, {self.orientation.value}]"


# ---------------------------------------------------------------- word level


def elementary_tally(word: DiskWord) -> int:
    """(#positive) - (#negative) elementary subwords of ``word``.

    An elementary subword is a pair of neighbouring opposite-sign X-letters;
    X Y^-1 X^-1 and X^-1 Y X are positive, X Y X^-1 and X^-1 Y^-1 X negative.
    """
    tally = 0
    for i in range(word.n - 1):
        s, e = word.signs[i], word.runs[i]
        if s == word.signs[i + 1]:
            continue
        if abs(e) != 1:
            raise NotQuasiGeometricError(
                f"opposite-sign X-letters separated by Y^{e} in {word}",
                rule="opposite-run",
                stage="bigon",
                witness=str(word.sub(i, i + 1)),
            )
        tally += -s * e
    return tally


def word_orientation(word: DiskWord) -> Orientation:
    tally = elementary_tally(word)
    if tally == 1:
        return Orientation.POSITIVE
    if tally == -1:
        return Orientation.NEGATIVE
    raise NotQuasiGeometricError(
        f"elementary tally of {word} is {tally}, not +-1",
        rule="orientation",
        stage="bigon",
        witness=str(word),
    )


def is_elementary_word(word: DiskWord) -> bool:
    """True for X^k Y^{+-1} X^-k and X^-k Y^{+-1} X^k (k >= 1)."""
    n = word.n
    if n % 2 or n < 2:
        return False
    k = n // 2
    s = word.signs[0]
    if word.signs != (s,) * k + (-s,) * k:
        return False
    middle = word.runs[k - 1]
    return abs(middle) == 1 and all(e == 0 for i, e in enumerate(word.runs) if i != k - 1)


def normalize_word(word: DiskWord) -> tuple[Symmetry, DiskWord]:
    """Return the symmetry case and the upward-positive word it maps to."""
    up = word.upward
    positive = word_orientation(word) is Orientation.POSITIVE
    if up and positive:
        return Symmetry.IDENTITY, word
    if up:
        return Symmetry.INVERT_Y, word.invert_y()
    if not positive:
        return Symmetry.INVERT_X, word.invert_x()
    return Symmetry.INVERT_XY, word.invert_x().invert_y()


def decompose_word(word: DiskWord) -> tuple[int, int, list[tuple[int, int]]]:
    """Cut an upward-positive primitive word at its height-one X-letters.

    Returns ``(l, l_prime, children)`` where the first two X-letters read
    X Y^l X, the last two read X^-1 Y^-l_prime X^-1, and ``children`` are the
    0-based index pairs of consecutive height-one letters.
    """
    if not word.is_primitive():
        raise ValueError(f"{word} is not a primitive disk word")
    if word.n == 2 or is_elementary_word(word):
        raise ValueError(f"{word} is elementary; it has no height-one decomposition")
    if not word.upward or word_orientation(word) is not Orientation.POSITIVE:
        raise ValueError(f"{word} is not upward-positive")
    heights = word.heights()
    ones = [i for i, h in enumerate(heights) if h == 1]
    n = word.n
    if not ones or ones[0] != 1 or ones[-1] != n - 2:
        raise NotQuasiGeometricError(
            f"height-one letters of {word} do not start at the 2nd and end at the next-to-last X-letter",
            rule="orientation",
            stage="bigon",
            witness=str(word),
        )
    children = list(zip(ones, ones[1:]))
    for i, j in children:
        if not word.sub(i, j).is_primitive():
            raise NotQuasiGeometricError(
                f"height-one piece {word.sub(i, j)} of {word} is not primitive",
                rule="orientation",
                stage="bigon",
                witness=str(word.sub(i, j)),
            )
    return word.runs[0], -word.runs[-1], children


# ------------------------------------------------------------ relator level


def is_disk_word(relator: CyclicRelator, span: DiskSpan) -> bool:
    return span_word(relator, span).is_disk()


def is_primitive(relator: CyclicRelator, span: DiskSpan) -> bool:
    return span_word(relator, span).is_primitive()


def orientation_of(relator: CyclicRelator, span: DiskSpan) -> Orientation:
    return word_orientation(span_word(relator, span))


def decompose(relator: CyclicRelator, span: DiskSpan) -> tuple[int, int, list[DiskSpan]]:
    """Height-one decomposition of a non-elementary primitive span.

    The span is first carried to upward-positive form; child spans are given
    in the relator's own labels (symmetries do not move X-letters).
    """
    word = span_word(relator, span)
    if not word.is_primitive():
        raise ValueError(f"{span} is not a primitive disk word")
    _, normal = normalize_word(word)
    l, l_prime, pieces = decompose_word(normal)
    n = relator.x_letter_count
    a, _ = span.bounds(n)
    return l, l_prime, [DiskSpan.from_occurrences(a + i, a + j, n) for i, j in pieces]


def default_wrap_bound(relator: CyclicRelator) -> int:
    return relator.x_letter_count + 1


def primitive_span_from(relator: CyclicRelator, start: int, wrap_bound: int) -> tuple[DiskSpan | None, bool]:
    """Primitive span starting at 0-based X-letter ``start``.

    Returns ``(span, resolved)``; ``resolved`` is False when the walk hit
    ``wrap_bound`` seam crossings without deciding.
    """
    n = relator.x_letter_count
    p = relator.signed_x_count
    s = relator.x_sign(start)
    total = s
    g = start + 1
    while g // n <= wrap_bound:
        total += relator.x_sign(g)
        if total == 0:
            return DiskSpan.from_occurrences(start, g, n), True
        # one full period without returning: the drift p never brings it back
        if g - start >= n and s * p >= 0:
            return None, True
        g += 1
    return None, False


def find_primitive_spans(relator: CyclicRelator, wrap_bound: int | None = None) -> tuple[list[DiskSpan], list[int]]:
    """All primitive spans with at most ``wrap_bound`` seam crossings.

    Returns the spans (ordered by start label) and the labels whose walk was
    cut off by the bound.
    """
    if wrap_bound is None:
        wrap_bound = default_wrap_bound(relator)
    spans, unresolved = [], []
    for start in range(relator.x_letter_count):
        span, resolved = primitive_span_from(relator, start, wrap_bound)
        if span is not None:
            spans.append(span)
        elif not resolved:
            unresolved.append(start + 1)
    return spans, unresolved


def classify_word(word: DiskWord, span: DiskSpan, relator: CyclicRelator | None = None) -> PrimitiveBigon:
    direction = Direction.UPWARD if word.upward else Direction.DOWNWARD
    orientation = word_orientation(word)
    if is_elementary_word(word):
        return PrimitiveBigon(span, word, direction, orientation, True)
    _, normal = normalize_word(word)
    l, l_prime, pieces = decompose_word(normal)
    children = []
    for i, j in pieces:
        sub = word.sub(i, j)
        child_span = span
        if relator is not None:
            n = relator.x_letter_count
            a, _ = span.bounds(n)
            child_span = DiskSpan.from_occurrences(a + i, a + j, n)
        children.append(classify_word(sub, child_span, relator))
    return PrimitiveBigon(span, word, direction, orientation, False, l, l_prime, tuple(children))


def classify_span(relator: CyclicRelator, span: DiskSpan) -> PrimitiveBigon:
    word = span_word(relator, span)
    if not word.is_primitive():
        raise ValueError(f"{span} is not a primitive disk word")
    return classify_word(word, span, relator)


def enumerate_primitive_bigons(relator: CyclicRelator, wrap_bound: int | None = None) -> list[PrimitiveBigon]:
    spans, _ = find_primitive_spans(relator, wrap_bound)
    return [classify_span(relator, span) for span in spans]
