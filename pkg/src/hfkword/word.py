"""Cyclic relator words over the alphabet {X, X^-1, Y, Y^-1}.

A relator records, in order, the intersections of the beta curve with alpha
(X-letters) and with the arc t_alpha (Y-letters).  X-letters carry stable
1-based labels in textual order; everything downstream refers to generators
by these labels.

Text grammar: ``X``, ``x`` (= X^-1), ``Y``, ``y`` (= Y^-1), each optionally
followed by ``^n`` with n a positive integer.  ASCII whitespace is ignored.

>>> r = parse_relator("Xy^2XyxYx")
>>> format_relator(r)
'XyyXyxYx'
>>> r.signed_x_count, r.x_letter_count, r.y_runs
(0, 4, (-2, -1, 1, 0))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate

from .errors import RelatorParseError, TrivialRelatorError

_TOKENS = {"X": ("X", 1), "x": ("X", -1), "Y": ("Y", 1), "y": ("Y", -1)}
_WHITESPACE = " \t\n\r\f\v"


@dataclass(frozen=True)
class Letter:
    axis: str
    sign: int

    def __post_init__(self):
        if self.axis not in ("X", "Y"):
            raise ValueError(f"axis must be 'X' or 'Y', got {self.axis!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    @property
    def is_x(self) -> bool:
        return self.axis == "X"

    def inverse(self) -> "Letter":
        return Letter(self.axis, -self.sign)

    def __str__(self) -> str:
        return self.axis if self.sign > 0 else self.axis.lower()

    def __repr__(self) -> str:
        return f"Letter({str(self)})"


X = Letter("X", 1)
XBAR = Letter("X", -1)
Y = Letter("Y", 1)
YBAR = Letter("Y", -1)


def _power(symbol: str, k: int) -> str:
    return symbol if k == 1 else f"{symbol}^{k}"


def _compact(letters) -> str:
    out = []
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        out.append(_power(str(letters[i]), j - i))
        i = j
    return "".join(out)


@dataclass(frozen=True)
class CyclicRelator:
    """A cyclic word, stored in the rotation the user supplied.

    Indices are cyclic: letter ``i`` and letter ``i + period`` coincide.  The
    same holds for X-letter *occurrences*: occurrence ``g`` is the X-letter
    with label ``g % x_letter_count + 1`` in period ``g // x_letter_count``.
    """

    letters: tuple[Letter, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    @property
    def period(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i: int) -> Letter:
        return self.letters[i % len(self.letters)]

    def __str__(self) -> str:
        return format_relator(self)

    @cached_property
    def x_positions(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.letters) if a.is_x)

    @cached_property
    def x_signs(self) -> tuple[int, ...]:
        return tuple(self.letters[i].sign for i in self.x_positions)

    @property
    def x_letter_count(self) -> int:
        return len(self.x_positions)

    @property
    def signed_x_count(self) -> int:
        return sum(self.x_signs)

    @property
    def y_exponent(self) -> int:
        return sum(a.sign for a in self.letters if not a.is_x)

    @cached_property
    def y_runs(self) -> tuple[int, ...]:
        """Net Y-exponent between each X-letter and the next one (cyclically)."""
        pos = self.x_positions
        m = self.period
        runs = []
        for k, i in enumerate(pos):
            j = pos[(k + 1) % len(pos)]
            stop = j if j > i else j + m
            runs.append(sum(self[t].sign for t in range(i + 1, stop)))
        return tuple(runs)

    @property
    def is_cyclically_reduced(self) -> bool:
        m = self.period
        return m > 0 and all(self.letters[i].inverse() != self.letters[(i + 1) % m] for i in range(m))

    def x_sign(self, occurrence: int) -> int:
        return self.x_signs[occurrence % self.x_letter_count]

    def y_run(self, occurrence: int) -> int:
        return self.y_runs[occurrence % self.x_letter_count]

    def label(self, occurrence: int) -> int:
        return occurrence % self.x_letter_count + 1

    def rotate(self, k: int) -> "CyclicRelator":
        """Cyclic rotation by ``k`` letters (new word starts at old index ``k``)."""
        k %= self.period
        return CyclicRelator(self.letters[k:] + self.letters[:k])

    def pretty(self, labels: bool = False) -> str:
        """Unicode rendering, e.g. ``X₁ Ȳ X₂ Y X̄₃ Y`` with labels."""
        out = []
        n = 0
        for a in self.letters:
            s = a.axis if a.sign > 0 else a.axis + "̄"
            if a.is_x:
                n += 1
                if labels:
                    s += _subscript(n)
            out.append(s)
        return " ".join(out)


def _subscript(n: int) -> str:
    return str(n).translate(str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉"))


@dataclass(frozen=True)
class ValidationReport:
    signed_x_count: int
    x_letter_count: int
    reduced: bool
    expected_p: int
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def parse_relator(text: str) -> CyclicRelator:
    """Parse the relator grammar.  No reduction is performed.

    >>> format_relator(parse_relator("X^3"))
    'XXX'
    >>> parse_relator("XZ")
    Traceback (most recent call last):
    ...
    hfkword.errors.RelatorParseError: [parse] unknown symbol 'Z' at offset 1
    """
    letters: list[Letter] = []
    i = 0
    n = len(text)
    while i < n:
        c = text[i]
        if c in _WHITESPACE:
            i += 1
            continue
        if c == "^":
            raise RelatorParseError(f"exponent with no preceding symbol at offset {i}", stage="parse")
        if c not in _TOKENS:
            raise RelatorParseError(f"unknown symbol {c!r} at offset {i}", stage="parse")
        letter = Letter(*_TOKENS[c])
        i += 1
        while i < n and text[i] in _WHITESPACE:
            i += 1
        count = 1
        if i < n and text[i] == "^":
            j = i + 1
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            digits = text[i + 1 : j]
            if not digits or int(digits) == 0:
                raise RelatorParseError(f"malformed exponent at offset {i}", stage="parse")
            count = int(digits)
            i = j
        letters.extend([letter] * count)
    if not letters:
        raise RelatorParseError("empty word", stage="parse")
    return CyclicRelator(tuple(letters))


def format_relator(relator, compact: bool = False) -> str:
    """Serialize letters in the parse grammar; ``compact`` folds repeats into ``^n``."""
    letters = tuple(relator)
    if compact:
        return _compact(letters)
    return "".join(str(a) for a in letters)


def free_reduce(letters) -> list[Letter]:
    stack: list[Letter] = []
    for a in letters:
        if stack and stack[-1] == a.inverse():
            stack.pop()
        else:
            stack.append(a)
    return stack


def cyclically_reduce(relator) -> CyclicRelator:
    """Cancel adjacent inverse pairs, including across the seam, to the fixed point.

    The surviving letters keep their relative order; letters cancelled at the
    seam are removed from both ends, so an already reduced word is returned
    unchanged.
    """
    stack = free_reduce(relator)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == stack[hi - 1].inverse():
        lo += 1
        hi -= 1
    if hi == lo:
        raise TrivialRelatorError("relator is trivial after cyclic reduction", stage="reduce-word")
    return CyclicRelator(tuple(stack[lo:hi]))


def validate(relator: CyclicRelator, expected_p: int = 1) -> ValidationReport:
    violations = []
    reduced = relator.is_cyclically_reduced
    if not reduced:
        violations.append("relator is not cyclically reduced")
    if relator.x_letter_count == 0:
        violations.append("relator has no X-letters")
    p = relator.signed_x_count
    if p != expected_p:
        violations.append(f"signed X-count is {p}, expected {expected_p}")
    # knottedness is an S^3 condition: #X >= 2 (equivalently >= 2 X-letters when p = 1)
    if expected_p == 1 and relator.x_letter_count < 2:
        violations.append(f"only {relator.x_letter_count} X-letter(s); the knot is trivial")
    return ValidationReport(
        signed_x_count=p,
        x_letter_count=relator.x_letter_count,
        reduced=reduced,
        expected_p=expected_p,
        violations=tuple(violations),
    )


@dataclass(frozen=True, order=True)
class DiskSpan:
    """The subword from one X-letter occurrence forward to a later one.

    ``wrap_count`` is how many times the span crosses the seam between the
    last and the first X-letter of the relator.
    """

    start_x: int
    end_x: int
    wrap_count: int = 0

    def __post_init__(self):
        if self.start_x < 1 or self.end_x < 1 or self.wrap_count < 0:
            raise ValueError("labels are 1-based and wrap_count is non-negative")
        if self.wrap_count == 0 and self.end_x <= self.start_x:
            raise ValueError(f"span x{self.start_x}..x{self.end_x} does not move forward")

    @classmethod
    def from_occurrences(cls, start: int, end: int, n: int) -> "DiskSpan":
        start_period, s = divmod(start, n)
        end -= start_period * n
        return cls(s + 1, end % n + 1, end // n)

    def bounds(self, n: int) -> tuple[int, int]:
        """(start, end) occurrence indices, start in the first period."""
        return self.start_x - 1, self.wrap_count * n + self.end_x - 1

    def length(self, n: int) -> int:
        a, b = self.bounds(n)
        return b - a + 1

    def __str__(self) -> str:
        wrap = f" (wrap {self.wrap_count})" if self.wrap_count else ""
        return f"x{self.start_x}..x{self.end_x}{wrap}"


@dataclass(frozen=True)
class DiskWord:
    """X-letter signs of a subword plus the net Y-exponent between neighbours.

    ``runs[i]`` is the exponent between X-letter ``i`` and ``i + 1``, so a
    word with ``n`` X-letters has ``n - 1`` runs.  Basepoint counts depend
    only on this data, which makes it the memoization key.
    """

    signs: tuple[int, ...]
    runs: tuple[int, ...]

    def __post_init__(self):
        if len(self.runs) != len(self.signs) - 1:
            raise ValueError("need exactly one Y-run between consecutive X-letters")

    @property
    def n(self) -> int:
        return len(self.signs)

    def prefix_phi(self) -> list[int]:
        return list(accumulate(self.signs))

    def phi(self) -> int:
        return sum(self.signs)

    def is_disk(self) -> bool:
        return self.n >= 2 and self.signs[0] == -self.signs[-1] and self.phi() == 0

    def is_primitive(self) -> bool:
        if not self.is_disk():
            return False
        return all(v != 0 for v in self.prefix_phi()[1:-1])

    def heights(self) -> list[int]:
        """Height of each X-letter relative to the endpoints.

        The offset subtracted from the running signed count is the first
        letter's sign for letters of that sign and 0 otherwise, so both ends
        sit at height 0 for upward and downward words alike.
        """
        if not self.is_disk():
            raise ValueError(f"{self} is not a disk word")
        s1 = self.signs[0]
        return [v - (s1 if s == s1 else 0) for v, s in zip(self.prefix_phi(), self.signs)]

    @property
    def upward(self) -> bool:
        return self.signs[0] > 0

    def sub(self, i: int, j: int) -> "DiskWord":
        """X-letters ``i..j`` inclusive (0-based)."""
        return DiskWord(self.signs[i : j + 1], self.runs[i:j])

    def invert_x(self) -> "DiskWord":
        return DiskWord(tuple(-s for s in self.signs), self.runs)

    def invert_y(self) -> "DiskWord":
        return DiskWord(self.signs, tuple(-e for e in self.runs))

    def letters(self) -> list[Letter]:
        out = []
        for k, s in enumerate(self.signs):
            out.append(X if s > 0 else XBAR)
            if k < len(self.runs):
                e = self.runs[k]
                out.extend([Y if e > 0 else YBAR] * abs(e))
        return out

    @classmethod
    def from_text(cls, text: str) -> "DiskWord":
        """Linear (non-cyclic) word starting and ending with X-letters."""
        return word_of_letters(parse_relator(text).letters)

    def __str__(self) -> str:
        return _compact(self.letters())


def word_of_letters(letters) -> DiskWord:
    letters = list(letters)
    if not letters or not letters[0].is_x or not letters[-1].is_x:
        raise ValueError("a disk word starts and ends with an X-letter")
    signs = []
    runs = []
    acc = 0
    for a in letters:
        if a.is_x:
            if signs:
                runs.append(acc)
            signs.append(a.sign)
            acc = 0
        else:
            acc += a.sign
    return DiskWord(tuple(signs), tuple(runs))


def span_word(relator: CyclicRelator, span: DiskSpan) -> DiskWord:
    n = relator.x_letter_count
    a, b = span.bounds(n)
    return DiskWord(
        tuple(relator.x_sign(g) for g in range(a, b + 1)),
        tuple(relator.y_run(g) for g in range(a, b)),
    )


def phi(relator: CyclicRelator, span: DiskSpan) -> int:
    """Signed X-count of the span, both endpoints included."""
    n = relator.x_letter_count
    a, b = span.bounds(n)
    return sum(relator.x_sign(g) for g in range(a, b + 1))


def height_profile(relator: CyclicRelator, span: DiskSpan) -> list[int]:
    return span_word(relator, span).heights()
