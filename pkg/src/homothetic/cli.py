"""Command line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the report carries the witness), 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import bridge, catalog, dsl
from .algebra import identity_map, zero_map
from .checks import CheckFailed, CheckResult, UsageError, failed, passed
from .homext import ExtAlgebra, as_algebra, check_exactness
from .multiplier import datum_checks
from .ore import ore_mul
from .scalars import ScalarRing
from .skewderiv import (
    Indeterminate,
    Quintuple,
    check_deriv_ext,
    check_endo_ext,
    extend_deriv,
    extend_endo,
    is_skew_derivation,
    solve_deriv_ext,
    solve_endo_ext,
)

SCHEMA = 1


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    outputs: dict = field(default_factory=dict)
    text: list = field(default_factory=list)
    error: str | None = None
    error_kind: str | None = None

    @property
    def status(self) -> int:
        if self.error_kind == "usage":
            return 2
        if self.error_kind == "check":
            return 1
        return 0 if all(self.checks) else 1

    def add(self, *results: CheckResult):
        self.checks.extend(results)

    def render_text(self) -> str:
        lines = [f"$ homothetic {self.command}"]
        lines += [c.describe() for c in self.checks]
        lines += self.text
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"status: {self.status}")
        return "\n".join(lines) + "\n"

    def render_json(self) -> str:
        obj = {
            "schema": SCHEMA,
            "command": self.command,
            "checks": [c.to_dict() for c in self.checks],
            "outputs": self.outputs,
            "status": self.status,
        }
        if self.error:
            obj["error"] = self.error
        return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read(path: str) -> dsl.Document:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return dsl.parse(text)


def _datum_name(doc, args) -> str:
    return args.datum or doc.first(dsl.DatumDef).name


def _quintuple_name(doc, args) -> str:
    return args.quintuple or doc.first(dsl.QuintupleDef).name


def _named_map(doc, datum, name: str):
    A = datum.algebra
    if name == "zero":
        return zero_map(A)
    if name == "id":
        return identity_map(A)
    return doc.linmap(name)


def _elements(ws) -> list[str]:
    return [str(w) for w in ws]


def _quintuple(doc, args) -> Quintuple:
    parts = doc.quintuple_parts(_quintuple_name(doc, args))
    return Quintuple(**parts)


# ---------------------------------------------------------------- commands


def cmd_check(args, rep: Report):
    doc = _read(args.file)
    if args.what == "datum":
        name = _datum_name(doc, args)
        sigma, s = doc.datum_parts(name)
        results = datum_checks(sigma, s)
        rep.add(*results)
        if all(results):
            rep.add(*check_exactness(ExtAlgebra(doc.datum(name))))
    elif args.what == "skew":
        if not (args.alpha and args.delta):
            raise UsageError("check skew needs --alpha and --delta")
        rep.add(is_skew_derivation(doc.linmap(args.alpha), doc.linmap(args.delta)))
    else:
        parts = doc.quintuple_parts(_quintuple_name(doc, args))
        if args.what == "endo":
            rep.add(check_endo_ext(parts["datum"], parts["alpha"], parts["w"], parts["varsigma"]))
        else:
            rep.add(check_deriv_ext(parts["datum"], parts["alpha"], parts["w"], parts["varsigma"],
                                    parts["delta"], parts["e"], parts["mu"]))


def _solutions(rep: Report, sols, label: str):
    if isinstance(sols, Indeterminate):
        rep.outputs[label] = {"indeterminate": sols.describe()}
        rep.text.append(sols.describe())
        return
    rep.outputs[label] = _elements(sols)
    rep.outputs["count"] = len(sols)
    rep.text.append(f"{len(sols)} solution(s) for {label}")
    rep.text += [f"  {w}" for w in sols]


def cmd_solve_w(args, rep: Report):
    doc = _read(args.file)
    datum = doc.datum(_datum_name(doc, args))
    alpha = _named_map(doc, datum, args.alpha)
    sols = solve_endo_ext(datum, alpha, args.varsigma, enum_cap=args.enum_cap)
    _solutions(rep, sols, "w")


def cmd_solve_e(args, rep: Report):
    doc = _read(args.file)
    parts = doc.quintuple_parts(_quintuple_name(doc, args))
    sols = solve_deriv_ext(parts["datum"], parts["alpha"], parts["w"], parts["varsigma"], parts["delta"],
                           parts["mu"], enum_cap=args.enum_cap)
    _solutions(rep, sols, "e")


def _matrix_lines(f, A) -> list[str]:
    return [f"  {lab} ↦ {A.element(f.column(i))}" for i, lab in enumerate(A.labels)]


def cmd_extend(args, rep: Report):
    doc = _read(args.file)
    q = _quintuple(doc, args)
    S = ExtAlgebra(q.datum)
    A = as_algebra(S)
    alpha_s = extend_endo(S, q.alpha, q.w, q.varsigma)
    delta_s = extend_deriv(S, q)
    rep.add(passed("α_S is an endomorphism of S"), passed("δ_S is an α_S-skew derivation of S"))
    rep.outputs["alpha_S"] = [str(A.element(alpha_s.column(i))) for i in range(A.dim)]
    rep.outputs["delta_S"] = [str(A.element(delta_s.column(i))) for i in range(A.dim)]
    rep.text += ["α_S:"] + _matrix_lines(alpha_s, A) + ["δ_S:"] + _matrix_lines(delta_s, A)


def cmd_ore_mul(args, rep: Report):
    doc = _read(args.file)
    p, q = doc.orepoly(args.left), doc.orepoly(args.right)
    if p.ring is not q.ring:
        raise UsageError("both polynomials must use the same alpha and delta")
    prod = ore_mul(p, q)
    rep.outputs["product"] = str(prod)
    rep.outputs["coeffs"] = [[p.ring.algebra.scalars.format(c) for c in a.coords] for a in prod.coeffs]
    rep.text.append(f"({p}) * ({q}) = {prod}")


def cmd_bridge_verify(args, rep: Report):
    doc = _read(args.file)
    q = _quintuple(doc, args)
    ctx = bridge.BridgeContext(q, degree_cap=args.degree_cap)
    rep.add(*bridge.verify_diagram(ctx))
    audit = bridge.audit_gamma_bar(ctx, nmax=min(5, args.degree_cap))
    rep.add(*audit.checks)
    rep.add(bridge.commutation_rule(ctx, nmax=min(5, args.degree_cap)))
    rep.outputs["gamma_bar_top_conventions"] = audit.top_range_matches
    rep.text += [f"Γ̄^n_n = {k}: holds for n in {v}" for k, v in audit.top_range_matches.items()]


def cmd_probe_type0(args, rep: Report):
    doc = _read(args.file)
    q = _quintuple(doc, args)
    report = bridge.probe_type0(q, degree=args.degree_cap)
    rep.add(*report.checks)
    rep.outputs["image"] = report.image
    rep.outputs["kernel_witness"] = str(report.kernel_witness) if report.kernel_witness is not None else None
    rep.text += report.describe()[len(report.checks):]


def example_document(kind: str, n: int = 3, k: int = 2, dims=(1, 1, 1, 1),
                     scalars: ScalarRing | None = None) -> dsl.Document:
    """A document for the ℸ_n family-1 pipeline or a zero-multiplication pipeline (type 1 or 0)."""
    b = dsl.DocumentBuilder()
    if kind == "daleth":
        q = catalog.daleth_family1_quintuple(n, k, scalars or ScalarRing.from_name("F2"))
        name = f"daleth{n}"
    elif kind == "zeromult":
        q = catalog.zero_mult_type1_quintuple(tuple(dims), scalars or ScalarRing.from_name("Q"))
        name = "zeromult"
    elif kind == "zeromult0":
        q = catalog.zero_mult_type0_quintuple(tuple(dims), scalars or ScalarRing.from_name("Q"))
        name = "zeromult"
    else:
        raise UsageError(f"unknown example {kind!r}")
    A = q.algebra
    alg = b.algebra(A, name)
    dop = b.dop(q.datum.sigma, alg, "sigma")
    dat = b.datum(dop, q.datum.s, "D")
    alpha = b.linmap(q.alpha, alg, "alpha")
    delta = b.linmap(q.delta, alg, "delta")
    b.quintuple(q, dat, alpha, delta, "Q")
    from .ore import OreRing

    ring = OreRing(q.alpha, q.delta, check=False)
    b.orepoly(ring.poly([A.basis(0), A.basis(A.dim - 1)]), alg, alpha, delta, "P")
    b.orepoly(ring.poly([A.basis(A.dim - 1)] * 2), alg, alpha, delta, "P2")
    return b.document()


def cmd_example(args, rep: Report):
    scalars = ScalarRing.from_name(args.field) if args.field else None
    doc = example_document(args.kind, n=args.n, k=args.k, dims=args.dims, scalars=scalars)
    rep.outputs["document"] = dsl.serialize(doc)
    rep.text.append(dsl.serialize(doc).rstrip("\n"))


def cmd_audit(args, rep: Report):
    if not args.target.startswith("family="):
        raise UsageError("audit target must be family=0|1|2|3|4")
    fam = args.target.split("=", 1)[1]
    if fam not in catalog.FAMILIES:
        raise UsageError(f"unknown family {fam!r}")
    scalars = ScalarRing.from_name(args.field or "F2")
    audit = catalog.audit_family(args.n, args.k, fam, scalars)
    rows = [r.to_dict(scalars) for r in audit.rows]
    rep.outputs["rows"] = rows
    bad = audit.disagreements
    name = f"family {fam}: closed form agrees with solver on {len(audit.rows)} points"
    rep.add(passed(name) if not bad else
            failed(name, disagreements=len(bad), first=_row_text(bad[0].to_dict(scalars))))
    rep.add(passed("solutions unique when they exist") if audit.unique_when_nonempty()
            else failed("solutions unique when they exist"))
    rep.text.append("params | gammas | mu | closed form | solver | agrees")
    rep.text += [_row_text(r) for r in rows]
    if fam in ("1", "2", "3", "4"):
        endo = catalog.audit_endo(args.n, args.k, 1, scalars)
        rep.outputs["solutions_outside_families"] = _elements(endo.uncovered())
        rep.text.append(f"w solutions at ς=1 not produced by any family: {len(endo.uncovered())}")
    else:
        endo = catalog.audit_endo(args.n, args.k, 0, scalars)
        rep.outputs["idempotents_outside_pq"] = _elements(endo.uncovered())
        rep.text.append(f"idempotents other than p e11 + q enn: {len(endo.uncovered())}")


def _row_text(r: dict) -> str:
    params = ",".join(f"{k}={v}" for k, v in r["params"].items())
    return (f"{params} | {' '.join(r['gammas'])} | {r['mu']} | {r['predicted']} | "
            f"{'; '.join(r['solver']) or 'none'} | {'yes' if r['agrees'] else 'NO'}")


# ---------------------------------------------------------------- argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homothetic", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="print a structured report")
    p.add_argument("--degree-cap", type=int, default=6, help="degree bound for Ore checks (default 6)")
    p.add_argument("--enum-cap", type=int, default=2**20, help="enumeration budget for solvers (default 2^20)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify a datum, extension conditions or a skew derivation")
    c.add_argument("what", choices=["datum", "endo", "deriv", "skew"])
    c.add_argument("file")
    c.add_argument("--datum")
    c.add_argument("--quintuple")
    c.add_argument("--alpha")
    c.add_argument("--delta")
    c.set_defaults(run=cmd_check)

    c = sub.add_parser("solve-w", help="all w extending alpha at type varsigma")
    c.add_argument("file")
    c.add_argument("--datum")
    c.add_argument("--alpha", default="zero", help="map name, or zero / id")
    c.add_argument("--varsigma", type=int, choices=[0, 1], required=True)
    c.set_defaults(run=cmd_solve_w)

    c = sub.add_parser("solve-e", help="all e extending delta (alpha, w, varsigma, mu from a quintuple)")
    c.add_argument("file")
    c.add_argument("--quintuple")
    c.set_defaults(run=cmd_solve_e)

    c = sub.add_parser("extend", help="print the extended maps alpha_S and delta_S")
    c.add_argument("file")
    c.add_argument("--quintuple")
    c.set_defaults(run=cmd_extend)

    c = sub.add_parser("ore-mul", help="multiply two Ore polynomials")
    c.add_argument("file")
    c.add_argument("left")
    c.add_argument("right")
    c.set_defaults(run=cmd_ore_mul)

    c = sub.add_parser("bridge-verify", help="verify the extended datum on R[x] and the embedding")
    c.add_argument("file")
    c.add_argument("--quintuple")
    c.set_defaults(run=cmd_bridge_verify)

    c = sub.add_parser("probe-type0", help="diagnostics for a type-0 quintuple")
    c.add_argument("file")
    c.add_argument("--quintuple")
    c.set_defaults(run=cmd_probe_type0)

    c = sub.add_parser("example", help="emit a catalog document")
    c.add_argument("kind", choices=["daleth", "zeromult", "zeromult0"])
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--dims", type=int, nargs=4, default=[1, 1, 1, 1])
    c.add_argument("--field")
    c.set_defaults(run=cmd_example)

    c = sub.add_parser("audit", help="compare closed forms with the solvers over a prime field")
    c.add_argument("target", help="family=0|1|2|3|4")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--field")
    c.set_defaults(run=cmd_audit)
    return p


def _echo(argv) -> str:
    return " ".join(argv)


def run(argv) -> tuple[int, str]:
    """Run a command; returns the exit status and the rendered report."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), ""
    rep = Report(_echo(argv))
    try:
        if args.degree_cap < 1 or args.enum_cap < 1:
            raise UsageError("--degree-cap and --enum-cap must be positive")
        args.run(args, rep)
    except CheckFailed as exc:
        rep.add(exc.result)
        rep.error, rep.error_kind = str(exc), "check"
    except (UsageError, ValueError) as exc:
        rep.error, rep.error_kind = str(exc), "usage"
    out = rep.render_json() if args.json else rep.render_text()
    if args.command == "example" and not args.json and rep.error is None:
        out = rep.outputs["document"]
    return rep.status, out


def main(argv=None) -> int:
    status, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
