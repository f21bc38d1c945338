"""Command-line front end.

Every command builds a ``ResultDocument``; the text format is rendered from
the document's dictionary form, so machine output (one JSON object per line)
re-renders to exactly the same text.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields

from . import errors
from .corpus import strip_comment
from .errors import HFKWordError
from .invariant import (
    alexander_via_abelianization,
    analyze,
    display_form,
    poincare_polynomial,
    verify_euler_matches_alexander,
)
from .laurent import BivariateLaurent, LaurentPolynomial
from .prestool import classify, parse_transform, transform, verify_transformation_covariance
from .word import format_relator, parse_relator

SCHEMA = "hfkword.result/1"
MODES = ("hfk", "classify", "alexander", "transform", "lens", "verify")
EXIT_PARTIAL = 8  # batch finished but some lines failed

MIRROR_WARNING = "output is determined only up to the mirror image (s, m) -> (-s, -m)"
PROVENANCE_WARNING = (
    "provenance: the table is knot Floer homology only if the relator comes from a "
    "genus-one doubly pointed diagram; pseudo-geometric words can give other answers"
)


@dataclass
class JobSpec:
    relator: str
    mode: str = "hfk"
    p: int | None = None
    transform: str | None = None
    wrap_bound: int | None = None
    verify: bool = False

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "lens" and (self.p is None or self.p < 1):
            raise ValueError("lens mode needs p >= 1")
        if self.mode == "transform" and not self.transform:
            raise ValueError("transform mode needs an operation")


@dataclass
class ResultDocument:
    input: str
    mode: str
    schema: str = SCHEMA
    ok: bool = True
    exit_code: int = errors.EXIT_OK
    relator: str | None = None
    transformed_from: str | None = None
    x_letters: int | None = None
    p: int | None = None
    tier: str | None = None
    failures: list[str] = field(default_factory=list)
    generators: list[dict] = field(default_factory=list)
    classes: list[dict] = field(default_factory=list)
    poincare: list[list[int]] | None = None
    euler: list[list[int]] | None = None
    alexander: list[list[int]] | None = None
    bigons: list[dict] = field(default_factory=list)
    reduction: list[str] = field(default_factory=list)
    verification: dict = field(default_factory=dict)
    error: dict | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "ResultDocument":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)


# ------------------------------------------------------------------ running


def _fill_tables(doc: ResultDocument, analysis) -> None:
    table = analysis.table
    doc.generators = [
        {"label": k, "F": F, "M": M, "w": w, "class": c} for k, F, M, w, c in table.rows()
    ]
    for b, pb in zip(analysis.relative.bigons, analysis.relative.basepoints):
        doc.bigons.append(
            {
                "span": str(b.span),
                "word": str(b.word),
                "orientation": b.orientation.value,
                "P": [pb.n_z, pb.n_w],
            }
        )
    reduced = analysis.absolute.reduced
    doc.reduction = reduced.trace()
    survivors = {table.component[s - 1]: s for s in reduced.survivors}
    polys = [poincare_polynomial(r) for r in analysis.per_class]
    if len(polys) == 1:
        doc.poincare = polys[0].to_list()
        doc.euler = polys[0].at_q(-1).to_list()
    else:
        doc.classes = [
            {"id": c, "members": table.members(c), "survivor": survivors[c], "poincare": polys[c].to_list()}
            for c in range(len(polys))
        ]
    doc.warnings.extend(analysis.warnings)


def _partial_bigons(doc: ResultDocument, relator, wrap_bound) -> None:
    # best effort: show the enumerated bigons even when a later step failed
    from .grading import relative_gradings

    try:
        rel = relative_gradings(relator, 1, wrap_bound)
    except HFKWordError:
        return
    for b, pb in zip(rel.bigons, rel.basepoints):
        doc.bigons.append(
            {"span": str(b.span), "word": str(b.word), "orientation": b.orientation.value, "P": [pb.n_z, pb.n_w]}
        )
    doc.generators = [{"label": k, "F": F, "M": M, "w": w, "class": c} for k, F, M, w, c in rel.table.rows()]


def _record_error(doc: ResultDocument, err: HFKWordError) -> None:
    doc.ok = False
    doc.exit_code = err.exit_code
    doc.error = {"kind": type(err).__name__, "stage": err.stage, "message": err.message}
    if isinstance(err, errors.NotQuasiGeometricError):
        doc.tier = doc.tier or "NotQuasiGeometric"
    elif isinstance(err, errors.NotPseudoGeometricError):
        doc.tier = doc.tier or "QuasiGeometric"


def run(job: JobSpec) -> ResultDocument:
    doc = ResultDocument(input=job.relator, mode=job.mode)
    try:
        relator = parse_relator(job.relator)
        if job.transform and job.mode != "transform":
            op, k = parse_transform(job.transform)
            doc.transformed_from = format_relator(relator, compact=True)
            relator = transform(relator, op, k)
        doc.relator = format_relator(relator, compact=True)
        doc.x_letters = relator.x_letter_count
        doc.p = relator.signed_x_count
        _dispatch(job, doc, relator)
    except HFKWordError as err:
        _record_error(doc, err)
        if job.mode in ("hfk", "verify") and isinstance(err, errors.NotPseudoGeometricError):
            _partial_bigons(doc, relator, job.wrap_bound)
    except ValueError as err:
        doc.ok = False
        doc.exit_code = errors.EXIT_PARSE
        doc.error = {"kind": "UsageError", "stage": "parse", "message": str(err)}
    except Exception as err:  # noqa: BLE001 - reported, not swallowed
        doc.ok = False
        doc.exit_code = errors.EXIT_INTERNAL
        doc.error = {"kind": type(err).__name__, "stage": None, "message": str(err)}
    if job.mode in ("hfk", "lens", "verify"):
        doc.warnings.append(MIRROR_WARNING)
        if doc.ok:
            doc.warnings.append(PROVENANCE_WARNING)
    return doc


def _dispatch(job: JobSpec, doc: ResultDocument, relator) -> None:
    mode = job.mode
    if mode == "classify":
        c = classify(relator, job.wrap_bound)
        doc.tier = c.tier.value
        doc.failures = [str(f) for f in c.failures]
        return
    if mode == "alexander":
        doc.alexander = alexander_via_abelianization(relator).to_list()
        return
    if mode == "transform":
        op, k = parse_transform(job.transform)
        doc.transformed_from = doc.relator
        image = transform(relator, op, k)
        doc.relator = format_relator(image, compact=True)
        doc.x_letters = image.x_letter_count
        doc.p = image.signed_x_count
        return
    p = job.p if job.p is not None else 1
    checking = mode == "verify" or job.verify
    if checking and p != 1:
        doc.warnings.append("verification checks apply to knots in S^3 only; skipped")
        checking = False
    if checking:
        # runs on relative gradings if the absolute step fails, so do it first
        rep = verify_euler_matches_alexander(relator, job.wrap_bound)
        doc.verification["euler_alexander"] = {"match": rep.match, "source": rep.source, "detail": rep.detail}
    if mode == "lens" or job.p is not None:
        analysis = analyze(relator, p, job.wrap_bound)
    else:
        analysis = analyze(relator, 1, job.wrap_bound)
        doc.tier = "PseudoGeometric"
        doc.alexander = alexander_via_abelianization(relator).to_list()
    _fill_tables(doc, analysis)
    if checking:
        cov = verify_transformation_covariance(relator, wrap_bound=job.wrap_bound)
        doc.verification["covariance"] = [{"op": name, "pass": ok, "detail": d} for name, ok, d in cov.checks]
        if not cov.passed:
            doc.warnings.append("transformation covariance failed; expected only for non-diagram presentations")
        if not rep.match:
            doc.ok = False
            doc.exit_code = errors.EXIT_INTERNAL
            doc.error = {"kind": "VerificationFailure", "stage": "verify", "message": str(rep)}


# ---------------------------------------------------------------- rendering


def _poly2(terms) -> str:
    return str(BivariateLaurent.from_list(terms))


def _poly1(terms) -> str:
    return str(LaurentPolynomial.from_list(terms))


def render_text(data: dict) -> str:
    """Human-readable report built only from the document dictionary."""
    out = []
    head = data.get("relator") or data["input"]
    out.append(f"relator      {head}")
    if data.get("transformed_from"):
        out.append(f"from         {data['transformed_from']}")
    if data.get("x_letters") is not None:
        out.append(f"X-letters    {data['x_letters']}   p = {data['p']}")
    if data.get("tier"):
        out.append(f"tier         {data['tier']}")
    for f in data.get("failures", []):
        out.append(f"  failure    {f}")
    if data.get("bigons"):
        out.append("primitive bigons")
        for b in data["bigons"]:
            out.append(f"  {b['span']:<18} {b['word']:<24} {b['orientation']:<9} P = ({b['P'][0]}, {b['P'][1]})")
    if data.get("generators"):
        out.append(f"{'gen':>5} {'F':>4} {'M':>4} {'w':>4} {'class':>6}")
        for g in data["generators"]:
            out.append(f"{'x%d' % g['label']:>5} {g['F']:>4} {g['M']:>4} {g['w']:>4} {g['class']:>6}")
    for step in data.get("reduction", []):
        out.append(f"  reduce ->  {step}")
    if data.get("poincare") is not None:
        out.append(f"Poincare     {_poly2(data['poincare'])}")
    for c in data.get("classes", []):
        members = ",".join(f"x{m}" for m in c["members"])
        out.append(f"class {c['id']}      {{{members}}} survivor x{c['survivor']}: {_poly2(c['poincare'])}")
    if data.get("euler") is not None:
        out.append(f"Euler        {_poly1(data['euler'])}")
    if data.get("alexander") is not None:
        delta = LaurentPolynomial.from_list(data["alexander"])
        out.append(f"Alexander    {delta}   (symmetrized {display_form(delta)})")
    v = data.get("verification") or {}
    if "euler_alexander" in v:
        e = v["euler_alexander"]
        line = f"verify       Euler vs Alexander: {'match' if e['match'] else 'MISMATCH'} ({e['source']} gradings)"
        out.append(line + (f"; {e['detail']}" if e["detail"] else ""))
    for c in v.get("covariance", []):
        out.append(f"verify       {c['op']}: {'pass' if c['pass'] else 'FAIL'} {c['detail']}".rstrip())
    if data.get("error"):
        e = data["error"]
        stage = f"[{e['stage']}] " if e.get("stage") else ""
        out.append(f"error        {e['kind']}: {stage}{e['message']}")
    for w in data.get("warnings", []):
        out.append(f"warning      {w}")
    return "\n".join(out)


def emit(doc: ResultDocument, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "machine":
        print(doc.to_json(), file=stream)
    else:
        print(render_text(doc.to_dict()), file=stream)


# -------------------------------------------------------------------- batch


def run_batch(lines, mode: str = "hfk", jobs: int = 1, **options):
    """Yield ``(line number, ResultDocument)`` in input order."""
    specs = []
    for number, raw in enumerate(lines, 1):
        text = strip_comment(raw)
        if text:
            specs.append((number, JobSpec(text, mode, **options)))
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            docs = pool.map(run, [s for _, s in specs])
            yield from zip([n for n, _ in specs], docs)
    else:
        for number, spec in specs:
            yield number, run(spec)


def _batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as err:
        print(f"error: cannot read {args.file}: {err.strerror}", file=sys.stderr)
        return errors.EXIT_IO
    passed = failed = 0
    opts = dict(p=args.lens, transform=args.transform, wrap_bound=args.wrap_bound, verify=args.verify)
    for number, doc in run_batch(lines, args.mode, args.jobs, **opts):
        if doc.ok:
            passed += 1
        else:
            failed += 1
        if args.format == "machine":
            emit(doc, "machine")
        else:
            print(f"--- line {number}")
            emit(doc, "text")
    if args.format == "machine":
        print(json.dumps({"schema": SCHEMA, "summary": {"passed": passed, "failed": failed}}, sort_keys=True))
    else:
        print(f"summary: {passed + failed} processed, {passed} passed, {failed} failed")
    return errors.EXIT_OK if failed == 0 else EXIT_PARTIAL


# ------------------------------------------------------------------- parser


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--wrap-bound", type=_positive, default=None, help="starting number of seam crossings for bigon walks")
    common.add_argument("--lens", type=_positive, default=None, metavar="P", help="treat the relator as a knot in L(P, q)")
    common.add_argument("--transform", default=None, metavar="OP", help="apply l<k>, r<k> or tau before the run")
    common.add_argument("--verify", action="store_true", help="also run the Euler/Alexander and covariance checks")

    parser = argparse.ArgumentParser(
        prog="hfkword",
        description="Knot Floer homology of (1,1) knots from a two-generator relator.",
        epilog="exit codes: 0 ok, 1 I/O, 2 usage, 3 parse, 4 validation, 5 not quasi-geometric, "
        "6 not pseudo-geometric, 7 internal or verification failure, 8 batch with failing lines",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [
        ("hfk", "bigraded homology table and Poincare polynomial"),
        ("classify", "quasi/pseudo-geometric tier with witnesses"),
        ("alexander", "Alexander polynomial by abelianization"),
        ("verify", "hfk plus the Euler/Alexander and covariance checks"),
    ]:
        sp = sub.add_parser(name, parents=[common], help=text)
        sp.add_argument("relator")
    sp = sub.add_parser("transform", parents=[common], help="apply l<k>, r<k> or tau and reduce")
    sp.add_argument("relator")
    sp.add_argument("op", nargs="?", default=None)
    sp = sub.add_parser("lens", parents=[common], help="per Spin^c class tables for a knot in L(p, q)")
    sp.add_argument("relator")
    sp.add_argument("p", type=_positive)
    sp = sub.add_parser("batch", parents=[common], help="one relator per line; '#' starts a comment")
    sp.add_argument("file")
    sp.add_argument("--mode", choices=MODES, default="hfk")
    sp.add_argument("--jobs", type=_positive, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "batch":
        return _batch(args)
    p = args.p if args.command == "lens" else args.lens
    op = args.transform
    if args.command == "transform":
        op = args.op or args.transform
        if not op:
            parser.error("transform needs an operation (l<k>, r<k> or tau)")
    mode = "lens" if args.command == "hfk" and args.lens else args.command
    try:
        job = JobSpec(args.relator, mode, p=p, transform=op, wrap_bound=args.wrap_bound, verify=args.verify)
    except ValueError as err:
        parser.error(str(err))
    doc = run(job)
    emit(doc, args.format)
    return doc.exit_code


if __name__ == "__main__":
    sys.exit(main())
