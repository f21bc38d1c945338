"""Bigraded output of the pipeline and the independent Alexander polynomial check."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import HFKWordError, NormalizationError, ReductionStallError, ValidationError
from .grading import AbsoluteGradings, GradingTable, RelativeGradings, absolute_gradings, relative_gradings
from .laurent import BivariateLaurent, LaurentPolynomial, laurent_equiv
from .word import CyclicRelator, validate


@dataclass(frozen=True)
class BigradedRank:
    """Rank of the homology in each bigrading ``(s, m)``; zero ranks are not stored."""

    ranks: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_pairs(cls, pairs) -> "BigradedRank":
        counts = Counter(pairs)
        return cls(tuple(sorted(counts.items())))

    @property
    def total(self) -> int:
        return sum(r for _, r in self.ranks)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.ranks)

    def mirrored(self) -> "BigradedRank":
        return BigradedRank.from_pairs((-s, -m) for (s, m), r in self.ranks for _ in range(r))


@dataclass
class KnotAnalysis:
    """Everything the pipeline learned about one relator."""

    relator: CyclicRelator
    relative: RelativeGradings
    absolute: AbsoluteGradings | None = None
    per_class: list[BigradedRank] = field(default_factory=list)

    @property
    def table(self) -> GradingTable:
        return self.absolute.table if self.absolute else self.relative.table

    @property
    def warnings(self) -> list[str]:
        return self.relative.warnings


def _check(relator: CyclicRelator, p: int) -> None:
    report = validate(relator, expected_p=p)
    if not report.ok:
        raise ValidationError("; ".join(report.violations), stage="validate", witness=report.violations)


def _ranks_by_class(table: GradingTable) -> list[BigradedRank]:
    return [
        BigradedRank.from_pairs((table.F[k - 1], table.M[k - 1]) for k in table.members(c))
        for c in range(table.component_count)
    ]


def analyze(relator: CyclicRelator, p: int = 1, wrap_bound: int | None = None) -> KnotAnalysis:
    """Validate, enumerate, count, solve and normalize.  Errors carry the failing stage."""
    _check(relator, p)
    rel = relative_gradings(relator, expected_p=p, wrap_bound=wrap_bound)
    analysis = KnotAnalysis(relator, rel)
    analysis.absolute = absolute_gradings(rel)
    analysis.per_class = _ranks_by_class(analysis.absolute.table)
    return analysis


def compute_hfk(relator: CyclicRelator, wrap_bound: int | None = None) -> BigradedRank:
    return analyze(relator, 1, wrap_bound).per_class[0]


def poincare_polynomial(rank: BigradedRank) -> BivariateLaurent:
    return BivariateLaurent(rank.as_dict())


def euler_characteristic(rank: BigradedRank) -> LaurentPolynomial:
    """P(t, -1)."""
    return poincare_polynomial(rank).at_q(-1)


def alexander_via_abelianization(relator: CyclicRelator) -> LaurentPolynomial:
    """Alexander polynomial read off the relator through the substitution X = Y^-k a.

    Here k is the total Y-exponent, so that ``a`` dies in the abelianization.
    Scanning left to right with running Y-exponent E, each a^s adds s t^-E.

    >>> from hfkword.word import parse_relator
    >>> str(alexander_via_abelianization(parse_relator("XyXYxY")))
    't - t^2 + t^3'
    """
    if relator.x_letter_count == 0:
        raise ValidationError("relator has no X-letters", stage="alexander")
    if relator.signed_x_count != 1:
        raise ValidationError(
            f"abelianization needs signed X-count 1, got {relator.signed_x_count}", stage="alexander"
        )
    k = relator.y_exponent
    E = 0
    terms = []
    for a in relator.letters:
        if not a.is_x:
            E += a.sign
        elif a.sign > 0:
            E -= k
            terms.append((1, -E))
        else:
            terms.append((-1, -E))
            E += k
    if E != 0:
        raise HFKWordError(f"net Y-exponent {E} after substitution", stage="alexander")
    return LaurentPolynomial.from_exponents(terms)


def display_form(f: LaurentPolynomial) -> LaurentPolynomial:
    """Centre the support on 0 and make the value at t = 1 non-negative."""
    g = f.symmetrized()
    return -g if g(1) < 0 else g


@dataclass
class EulerReport:
    match: bool
    euler: LaurentPolynomial
    alexander: LaurentPolynomial
    source: str  # "absolute" or "relative"
    detail: str = ""

    def __str__(self) -> str:
        verdict = "match" if self.match else "MISMATCH"
        s = f"{verdict}: chi = {display_form(self.euler)}, Delta = {display_form(self.alexander)} ({self.source} gradings)"
        return s + (f"; {self.detail}" if self.detail else "")


def relative_euler(relator: CyclicRelator, wrap_bound: int | None = None) -> LaurentPolynomial:
    rel = relative_gradings(relator, 1, wrap_bound)
    t = rel.table
    return LaurentPolynomial.from_exponents(((-1) ** (t.M[k] % 2), t.F[k]) for k in range(t.size))


def verify_euler_matches_alexander(relator: CyclicRelator, wrap_bound: int | None = None) -> EulerReport:
    """Compare chi with the abelianization polynomial up to +-t^c.

    When normalization or reduction fails the relative gradings are used;
    the comparison is insensitive to the missing shifts anyway.
    """
    delta = alexander_via_abelianization(relator)
    try:
        chi = euler_characteristic(compute_hfk(relator, wrap_bound))
        source, detail = "absolute", ""
    except (NormalizationError, ReductionStallError) as err:
        chi = relative_euler(relator, wrap_bound)
        source, detail = "relative", f"absolute step failed: {err.message}"
    return EulerReport(laurent_equiv(chi, delta), chi, delta, source, detail)
