"""Presentation-level tools: the quasi/pseudo-geometric classifier and the
substitutions l_k, r_k and tau.

The classifier only certifies that the algorithm's steps can be executed on
the word.  It does not decide whether a presentation comes from a genus-one
doubly pointed diagram; a pseudo-geometric word can still produce a table
that is not the knot Floer homology of the knot.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .basepoint import word_basepoints
from .bigon import classify_span, find_primitive_spans
from .errors import (
    DisconnectedGradingError,
    HFKWordError,
    InconsistentGradingError,
    NormalizationError,
    NotQuasiGeometricError,
    ReductionStallError,
    ValidationError,
)
from .grading import absolute_gradings, relative_gradings
from .invariant import compute_hfk, poincare_polynomial
from .word import CyclicRelator, Letter, X, XBAR, Y, YBAR, cyclically_reduce, format_relator, span_word


class Tier(Enum):
    NOT_QUASI_GEOMETRIC = "NotQuasiGeometric"
    QUASI_GEOMETRIC = "QuasiGeometric"
    PSEUDO_GEOMETRIC = "PseudoGeometric"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Failure:
    rule: str
    witness: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.witness}"


@dataclass(frozen=True)
class Classification:
    tier: Tier
    failures: tuple[Failure, ...] = ()

    @property
    def quasi_geometric(self) -> bool:
        return self.tier is not Tier.NOT_QUASI_GEOMETRIC

    @property
    def pseudo_geometric(self) -> bool:
        return self.tier is Tier.PSEUDO_GEOMETRIC


def _word_checks(relator: CyclicRelator) -> list[Failure]:
    failures = []
    if not relator.is_cyclically_reduced:
        failures.append(Failure("reduced", format_relator(relator)))
    p = relator.signed_x_count
    if p != 1:
        failures.append(Failure("signed-count", f"#X - #X^-1 = {p}"))
    n = relator.x_letter_count
    for g in range(n):
        if relator.x_sign(g) != relator.x_sign(g + 1) and abs(relator.y_run(g)) != 1:
            a, b = relator.label(g), relator.label(g + 1)
            failures.append(Failure("opposite-run", f"x{a}..x{b} has Y-exponent {relator.y_run(g)}"))
    return failures


def _span_checks(relator: CyclicRelator, wrap_bound: int | None) -> list[Failure]:
    """Run the bigon calculus on every primitive span, collecting instead of aborting."""
    failures = []
    spans, _ = find_primitive_spans(relator, wrap_bound)
    for span in spans:
        try:
            classify_span(relator, span)
            word_basepoints(span_word(relator, span))
        except NotQuasiGeometricError as err:
            if err.rule != "opposite-run":  # already reported by the word check
                failures.append(Failure(err.rule, f"{span} {span_word(relator, span)}: {err.message}"))
    return failures


def classify(relator: CyclicRelator, wrap_bound: int | None = None) -> Classification:
    """Tier of a relator plus one witness per failed condition.

    >>> from hfkword.word import parse_relator
    >>> classify(parse_relator("YX^2YxYX^2Yx^2")).tier
    <Tier.PSEUDO_GEOMETRIC: 'PseudoGeometric'>
    """
    if relator.x_letter_count == 0:
        return Classification(Tier.NOT_QUASI_GEOMETRIC, (Failure("signed-count", "no X-letters"),))
    failures = _word_checks(relator)
    failures += _span_checks(relator, wrap_bound)
    if failures:
        return Classification(Tier.NOT_QUASI_GEOMETRIC, tuple(failures))
    try:
        absolute_gradings(relative_gradings(relator, 1, wrap_bound))
    except NormalizationError as err:
        failures.append(Failure("normalization", err.message))
    except ReductionStallError as err:
        failures.append(Failure("reduction", f"survivors {{{', '.join('x%d' % s for s in err.survivors)}}} in {err.word}"))
    except (InconsistentGradingError, DisconnectedGradingError) as err:
        failures.append(Failure("grading", err.message))
    if failures:
        return Classification(Tier.QUASI_GEOMETRIC, tuple(failures))
    return Classification(Tier.PSEUDO_GEOMETRIC)


# ------------------------------------------------------------ transformations

_OP = re.compile(r"^(?:(tau)|([lr])(-?\d+))$")


def parse_transform(text: str) -> tuple[str, int]:
    """``"l2"`` -> ``("l", 2)``, ``"r-1"`` -> ``("r", -1)``, ``"tau"`` -> ``("tau", 0)``."""
    m = _OP.match(text.strip())
    if not m:
        raise ValueError(f"unknown transformation {text!r}; expected l<k>, r<k> or tau")
    if m.group(1):
        return "tau", 0
    return m.group(2), int(m.group(3))


def _y_power(k: int) -> list[Letter]:
    return [Y] * k if k >= 0 else [YBAR] * (-k)


def transform(relator: CyclicRelator, op: str, k: int = 0) -> CyclicRelator:
    """Apply l_k (X -> Y^k X), r_k (X -> X Y^k) or tau (Y -> Y^-1), then cyclically reduce.

    >>> from hfkword.word import parse_relator
    >>> format_relator(transform(parse_relator("xYXyXY"), "l", 1))
    'xYXXY'
    """
    if op == "tau":
        images = {X: [X], XBAR: [XBAR], Y: [YBAR], YBAR: [Y]}
    elif op == "l":
        images = {X: _y_power(k) + [X], XBAR: [XBAR] + _y_power(-k), Y: [Y], YBAR: [YBAR]}
    elif op == "r":
        images = {X: [X] + _y_power(k), XBAR: _y_power(-k) + [XBAR], Y: [Y], YBAR: [YBAR]}
    else:
        raise ValueError(f"unknown transformation {op!r}")
    out = [b for a in relator.letters for b in images[a]]
    return cyclically_reduce(out)


def cyclic_equal(a: CyclicRelator, b: CyclicRelator) -> bool:
    """Equality up to rotation."""
    if len(a) != len(b):
        return False
    doubled = a.letters + a.letters
    return any(doubled[i : i + len(b)] == b.letters for i in range(len(a)))


@dataclass
class CovarianceReport:
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def __str__(self) -> str:
        return "\n".join(f"{name}: {'pass' if ok else 'FAIL'} {detail}".rstrip() for name, ok, detail in self.checks)


def verify_transformation_covariance(
    relator: CyclicRelator, ks=(1, -1), wrap_bound: int | None = None
) -> CovarianceReport:
    """P is unchanged by l_k and r_k and goes to P(t^-1, q^-1) under tau."""
    base = poincare_polynomial(compute_hfk(relator, wrap_bound))
    report = CovarianceReport()
    ops = [(f"l{k}", "l", k) for k in ks] + [(f"r{k}", "r", k) for k in ks] + [("tau", "tau", 0)]
    for name, op, k in ops:
        expected = base.invert() if op == "tau" else base
        try:
            got = poincare_polynomial(compute_hfk(transform(relator, op, k), wrap_bound))
        except (HFKWordError, ValidationError) as err:
            report.checks.append((name, False, f"pipeline failed on image: {err}"))
            continue
        ok = got == expected
        report.checks.append((name, ok, "" if ok else f"got {got}, expected {expected}"))
    return report
