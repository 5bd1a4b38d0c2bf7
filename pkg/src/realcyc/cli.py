"""``realcyc`` command line.

Every command prints a JSON job report on stdout and exits with the code of
the error kind it hit (0 on success):

    2 ParseError   3 ClosureCapExceeded   4 QuaternionicType
    5 NotRealValued   6 NotIrreducible   7 NormEquationNotSolved
    8 VerificationFailed   9 ConductorMismatch   10 UnknownFixture
"""
from __future__ import annotations

import argparse
import sys
import time

from . import serialize
from .cyclolinalg import inverse
from .errors import ParseError, RealcycError, Singular, VerificationFailed
from .normeq import DEFAULT_BOUND, DEFAULT_MAX_CANDIDATES
from .realify import realify
from .repcore import char_inner, character, fixtures, frobenius_schur

SUMS_NOTE = "group sums run over the distinct matrices of the image rho(G)"


class _Job:
    def __init__(self, command):
        self.report = {
            "command": command,
            "input_digest": None,
            "outcome": "success",
            "payload": None,
            "timing": {},
        }
        self._t = time.perf_counter()

    def stage(self, name):
        now = time.perf_counter()
        self.report["timing"][name] = round(now - self._t, 6)
        self._t = now


def _load_rep(path, job, closure_cap=None):
    obj = serialize.load_json(path)
    job.report["input_digest"] = serialize.digest(obj)
    rep = serialize.representation_from_json(obj, closure_cap=closure_cap)
    job.stage("parse")
    return rep


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_analyze(args, job):
    rep = _load_rep(args.file, job, args.closure_cap)
    closure = rep.closure()
    job.stage("closure")
    chi = character(rep, closure)
    norm = char_inner(chi, chi, closure.order)
    payload = {
        "conductor": rep.conductor,
        "degree": rep.degree,
        "group_order": closure.order,
        "char_norm": serialize.cyclotomic_to_json(norm),
        "irreducible": norm == 1,
        "nu2": frobenius_schur(rep, closure) if norm == 1 else None,
        "note": SUMS_NOTE,
    }
    job.stage("analysis")
    job.report["payload"] = payload


def cmd_realize(args, job):
    rep = _load_rep(args.file, job, args.closure_cap)
    result = realify(
        rep, bound=args.bound, max_candidates=args.max_candidates, seed=args.seed
    )
    job.report["timing"].update(
        {f"realify.{k}": round(v, 6) for k, v in result.diagnostics.timings.items()}
    )
    job.stage("realify")
    doc = serialize.result_to_json(result, rep, approx=args.approx)
    if args.out:
        _write(args.out, serialize.dumps(doc))
        job.report["payload"] = {"written": args.out, "digest": serialize.digest(doc)}
    else:
        job.report["payload"] = doc
    job.stage("write")


def verify_result(rep, Q, claimed) -> list[dict]:
    """Per-generator checks of a claimed realization; raises VerificationFailed."""
    if Q.shape != (rep.degree, rep.degree):
        raise VerificationFailed(f"Q has shape {Q.shape}, expected degree {rep.degree}")
    if len(claimed) != len(rep.generators):
        raise VerificationFailed(
            f"{len(claimed)} real generators claimed for {len(rep.generators)} inputs"
        )
    try:
        Qi = inverse(Q)
    except Singular:
        raise VerificationFailed("Singular: Q is not invertible") from None
    rows = []
    failure = None
    for k, (g, h) in enumerate(zip(rep.generators, claimed)):
        got = Qi @ g @ Q
        cells = [(i, j) for i in range(got.rows) for j in range(got.cols)]
        reason = None
        where = next((c for c in cells if not got[c].is_real()), None)
        if where is not None:
            reason = "entry not real"
        elif h.shape != got.shape:
            reason = "claimed generator has wrong shape"
        else:
            where = next((c for c in cells if got[c] != h[c]), None)
            if where is not None:
                reason = "differs from Q^-1 g Q"
            elif got.trace() != g.trace():
                reason = "trace not preserved"
        entry = {
            "generator": k,
            "pass": reason is None,
            "offending_entry": None if where is None else list(where),
            "reason": reason,
        }
        rows.append(entry)
        if reason is not None and failure is None:
            failure = entry
    if failure is not None:
        where = failure["offending_entry"]
        msg = f"generator {failure['generator']}: {failure['reason']}"
        if where is not None:
            msg += f" at entry {tuple(where)}"
        err = VerificationFailed(msg)
        err.details = rows
        raise err
    return rows


def cmd_verify(args, job):
    rep = _load_rep(args.rep, job)
    obj = serialize.load_json(args.result)
    n, Q, claimed = serialize.result_from_json(obj)
    if n != rep.conductor:
        raise ParseError(f"result conductor {n} differs from representation {rep.conductor}")
    job.stage("parse_result")
    job.report["payload"] = {"generators": verify_result(rep, Q, claimed)}
    job.stage("verify")


def cmd_examples(args, job):
    try:
        params = [int(p) for p in args.params]
    except ValueError:
        raise ParseError(f"fixture parameters must be integers: {args.params}") from None
    try:
        rep = fixtures(args.name, *params)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad parameters for {args.name}: {exc}") from None
    doc = serialize.representation_to_json(rep)
    job.stage("build")
    if args.out:
        _write(args.out, serialize.dumps(doc))
        job.report["payload"] = {"written": args.out, "digest": serialize.digest(doc)}
    else:
        job.report["payload"] = doc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="realcyc",
        description="Rewrite real-type representations over the real cyclotomic subfield.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="group order, [chi,chi] and the indicator")
    a.add_argument("file")
    a.add_argument("--closure-cap", type=int, default=None)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("realize", help="compute Q and the real generators")
    r.add_argument("file")
    r.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    r.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
    r.add_argument("--closure-cap", type=int, default=None)
    r.add_argument("--seed", type=int, default=None, help="use a random Y instead of the xi search")
    r.add_argument("--approx", action="store_true", help="add decimal renderings")
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_realize)

    v = sub.add_parser("verify", help="re-check a realization result")
    v.add_argument("rep")
    v.add_argument("result")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("examples", help="write a built-in representation")
    e.add_argument("name")
    e.add_argument("params", nargs="*")
    e.add_argument("--out", default=None)
    e.set_defaults(func=cmd_examples)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    job = _Job(args.command)
    code = 0
    try:
        args.func(args, job)
    except RealcycError as exc:
        job.report["outcome"] = exc.kind
        job.report["error"] = str(exc)
        if getattr(exc, "details", None) is not None:
            job.report["payload"] = {"generators": exc.details}
        code = exc.exit_code
    sys.stdout.write(serialize.dumps(job.report))
    return code


if __name__ == "__main__":
    sys.exit(main())
