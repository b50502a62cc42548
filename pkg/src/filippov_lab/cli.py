"""Command-line driver: verify definition files, run constructions, report.

Exit codes: 0 when every selected check passes, 1 when a verification
fails, 2 for parse or shape errors.  Machine-readable reports are
deterministic byte-for-byte (fixed seed, no wall-clock fields); timings
appear only in the human-readable output.
"""

import argparse
import json
import sys
import time

from .cohomology import delta_squared_zero, is_cocycle
from .correspondences import (
    build_skeletal, build_strict_from_crossed_module,
    build_strict_from_symplectic, check_symplectic, extract_crossed_module,
    extract_quadruple, induced_pre_lie, theta_triple_skew_report,
    verify_crossed_module, verify_pre_lie,
)
from .errors import FilippovError, ParseError, PreconditionFailed
from .fileformat import parse_definition, serialize_definition
from .fundobj import verify_lod_relations
from .homotopy import verify_homomorphism, verify_two_homomorphism, \
    verify_two_term
from .report import VerificationReport
from .trilie import check_fundamental_identity, check_leibniz_fundamental, \
    check_representation

SCHEMA = "filippov-lab/1"
SUITES = ("all", "axioms", "lod", "cocycle")


def _guarded(thunk, title):
    """Run a verifier; a violated precondition becomes a failing report."""
    try:
        return thunk()
    except PreconditionFailed as exc:
        rpt = VerificationReport(title)
        inner = getattr(exc, "report", None)
        if inner is not None:
            rpt.absorb(inner, prefix="precondition")
        else:
            rpt.expect("precondition", (), False, lhs=str(exc), rhs="")
        return rpt


def _checks_for(defn, trials, seed):
    """(name, suite tag, thunk) triples appropriate to the file kind."""
    kind, payload = defn.kind, defn.payload
    checks = []
    if kind == "three_lie":
        A = payload
        checks.append(("fundamental_identity", "axioms",
                       lambda: check_fundamental_identity(A)))
        checks.append(("leibniz_fundamental", "axioms",
                       lambda: _guarded(lambda: check_leibniz_fundamental(A),
                                        "leibniz_fundamental")))
    elif kind == "representation":
        A, R = payload
        checks.append(("fundamental_identity", "axioms",
                       lambda: check_fundamental_identity(A)))
        checks.append(("representation", "axioms",
                       lambda: check_representation(A, R)))
        for degree in (1, 2):
            checks.append((
                "delta_squared_p%d" % degree, "cocycle",
                lambda d=degree: _guarded(
                    lambda: delta_squared_zero(A, R, d, trials, seed),
                    "delta_squared_p%d" % d)))
    elif kind == "two_term":
        L = payload
        checks.append(("two_term", "axioms", lambda: verify_two_term(L)))
        checks.append(("lod_relations", "lod",
                       lambda: verify_lod_relations(L, 3)))
    elif kind == "homomorphism":
        phi = payload
        checks.append(("source_two_term", "axioms",
                       lambda: verify_two_term(phi.source)))
        checks.append(("target_two_term", "axioms",
                       lambda: verify_two_term(phi.target)))
        checks.append(("homomorphism", "axioms",
                       lambda: verify_homomorphism(phi)))
    elif kind == "two_homomorphism":
        t = payload
        checks.append(("source_homomorphism", "axioms",
                       lambda: verify_homomorphism(t.source)))
        checks.append(("target_homomorphism", "axioms",
                       lambda: verify_homomorphism(t.target)))
        checks.append(("two_homomorphism", "axioms",
                       lambda: verify_two_homomorphism(t)))
    elif kind == "crossed_module":
        cm = payload
        checks.append(("crossed_module", "axioms",
                       lambda: verify_crossed_module(cm)))
    elif kind == "symplectic":
        s = payload
        checks.append(("fundamental_identity", "axioms",
                       lambda: check_fundamental_identity(s.algebra)))
        checks.append(("symplectic", "axioms",
                       lambda: _guarded(lambda: check_symplectic(s),
                                        "symplectic")))
    elif kind == "quadruple":
        q = payload
        checks.append(("fundamental_identity", "axioms",
                       lambda: check_fundamental_identity(q.algebra)))
        checks.append(("representation", "axioms",
                       lambda: check_representation(q.algebra, q.rho)))
        checks.append(("theta_triple_skew", "cocycle",
                       lambda: theta_triple_skew_report(q.theta)))
        checks.append(("theta_cocycle", "cocycle",
                       lambda: _guarded(
                           lambda: is_cocycle(q.algebra, q.rho, q.theta),
                           "theta_cocycle")))
        for degree in (1, 2):
            checks.append((
                "delta_squared_p%d" % degree, "cocycle",
                lambda d=degree: _guarded(
                    lambda: delta_squared_zero(q.algebra, q.rho, d,
                                               trials, seed),
                    "delta_squared_p%d" % d)))
    elif kind == "pre_lie":
        p = payload
        checks.append(("pre_lie", "axioms", lambda: verify_pre_lie(p)))
    return checks


class SuiteResult:
    """Per-check outcomes plus an overall pass flag.

    Wall-clock durations are kept for the text rendering only; the JSON
    form must be byte-identical across runs of the same input.
    """

    def __init__(self, name, kind, suite, seed, trials):
        self.name = name
        self.kind = kind
        self.suite = suite
        self.seed = seed
        self.trials = trials
        self.checks = []  # (check name, report, seconds)

    @property
    def passed(self):
        return all(rpt.passed for _, rpt, _ in self.checks)

    def to_doc(self):
        return {
            "schema": SCHEMA,
            "name": self.name,
            "kind": self.kind,
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "pass": self.passed,
            "checks": [
                {
                    "name": name,
                    "pass": rpt.passed,
                    "checked": rpt.checked,
                    "failures": [
                        {"condition": f.condition,
                         "inputs": _jsonable(f.inputs),
                         "lhs": str(f.lhs),
                         "rhs": str(f.rhs)}
                        for f in rpt.failures],
                }
                for name, rpt, _ in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_doc(), indent=2) + "\n"

    def to_text(self):
        lines = ["%s (%s), suite=%s" % (self.name or "<unnamed>",
                                        self.kind, self.suite)]
        for name, rpt, seconds in self.checks:
            status = "pass" if rpt.passed else "FAIL"
            lines.append("  %-24s %s  (%d checks, %.3fs)"
                         % (name, status, rpt.checked, seconds))
            for f in rpt.failures[:5]:
                lines.append("    %s" % f)
            if len(rpt.failures) > 5:
                lines.append("    ... %d more failures" % (len(rpt.failures) - 5))
        lines.append("overall: %s" % ("pass" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)


def run_suite(defn, suite="all", trials=50, seed=0) -> SuiteResult:
    """Dispatch the named check set for a parsed definition file."""
    if suite not in SUITES:
        raise ParseError("unknown suite %r" % (suite,))
    result = SuiteResult(defn.name, defn.kind, suite, seed, trials)
    selected = [(name, thunk) for name, tag, thunk
                in _checks_for(defn, trials, seed)
                if suite == "all" or tag == suite]
    if not selected:
        raise ParseError("suite %r has no checks for kind %r"
                         % (suite, defn.kind))
    for name, thunk in selected:
        start = time.perf_counter()
        rpt = thunk()
        result.checks.append((name, rpt, time.perf_counter() - start))
    return result


def parse_report(text):
    """Load a machine-readable report; schema-checked round-trip partner."""
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ParseError("unsupported report schema %r" % (doc.get("schema"),))
    return doc


def render_report(doc):
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

CONSTRUCTIONS = {
    "skeletal": ("quadruple", "two_term",
                 lambda q: build_skeletal(q)),
    "strict-from-crossed": ("crossed_module", "two_term",
                            lambda cm: build_strict_from_crossed_module(cm)),
    "crossed-from-strict": ("two_term", "crossed_module",
                            lambda L: extract_crossed_module(L)),
    "quadruple-from-skeletal": ("two_term", "quadruple",
                                lambda L: extract_quadruple(L)),
    "pre-lie-from-symplectic": ("symplectic", "pre_lie",
                                lambda s: induced_pre_lie(s)),
    "strict-from-symplectic": ("symplectic", "two_term",
                               lambda s: build_strict_from_symplectic(s)),
}


def _construct(kind, defn, name):
    entry = CONSTRUCTIONS.get(kind)
    if entry is None:
        raise ParseError("unknown construction %r" % (kind,))
    in_kind, out_kind, build = entry
    if defn.kind != in_kind:
        raise ParseError("construction %r expects a %r file, got %r"
                         % (kind, in_kind, defn.kind))
    return out_kind, build(defn.payload)


# ---------------------------------------------------------------------------
# entry points
# ---------------------------------------------------------------------------

def _read(path):
    with open(path, "rb") as handle:
        return handle.read()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="filippov-lab",
        description="Exact verification of 3-Lie structures and their "
                    "2-term homotopy versions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run checks, human output")
    p_verify.add_argument("file")
    p_verify.add_argument("--suite", choices=SUITES, default="all")
    p_verify.add_argument("--trials", type=int, default=50)
    p_verify.add_argument("--seed", type=int, default=0)

    p_construct = sub.add_parser("construct", help="apply a construction")
    p_construct.add_argument("construction", choices=sorted(CONSTRUCTIONS))
    p_construct.add_argument("file")
    p_construct.add_argument("-o", "--output", required=True)
    p_construct.add_argument("--name", default=None)

    p_report = sub.add_parser("report", help="run checks, machine output")
    p_report.add_argument("file")
    p_report.add_argument("--suite", choices=SUITES, default="all")
    p_report.add_argument("--format", choices=("text", "json"),
                          default="json")
    p_report.add_argument("--trials", type=int, default=50)
    p_report.add_argument("--seed", type=int, default=0)

    args = parser.parse_args(argv)

    try:
        if args.command == "verify":
            defn = parse_definition(_read(args.file))
            result = run_suite(defn, args.suite, args.trials, args.seed)
            sys.stdout.write(result.to_text())
            return 0 if result.passed else 1
        if args.command == "report":
            defn = parse_definition(_read(args.file))
            result = run_suite(defn, args.suite, args.trials, args.seed)
            if args.format == "json":
                sys.stdout.write(result.to_json())
            else:
                sys.stdout.write(result.to_text())
            return 0 if result.passed else 1
        if args.command == "construct":
            defn = parse_definition(_read(args.file))
            name = args.name if args.name is not None else \
                "%s(%s)" % (args.construction, defn.name)
            out_kind, payload = _construct(args.construction, defn, name)
            text = serialize_definition(out_kind, name, payload)
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
            sys.stdout.write("wrote %s (%s)\n" % (args.output, out_kind))
            return 0
    except ParseError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except PreconditionFailed as exc:
        sys.stderr.write("verification failed: %s\n" % exc)
        rpt = getattr(exc, "report", None)
        if rpt is not None:
            sys.stderr.write(rpt.summary() + "\n")
        return 1
    except FilippovError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
