"""Command-line front end.

Every command writes a report ``{schema, config, checks}``; JSON output is
key-sorted so identical arguments give byte-identical files.  Exit status
is 0 when every check passes (check-module and check-gamma: when a verdict
was computed), 1 when a check fails and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass
from itertools import product

from . import reports
from .fields import get_field
from .group_algebra import ConfigError, GroupConfig
from .massey import LambdaMatrix, enumerate_scalar_triples, random_minimal_presentation, realizable_summand
from .secondary import KINDS, SecondaryProduct, gamma_certificate
from .tate_ring import NAMES, BasisMonomial, variant_of

SCHEMA = 1

COMMANDS = (
    "verify-group", "verify-resolution", "verify-homotopies", "verify-f2", "dump-m",
    "check-gamma", "check-module", "enumerate-massey", "reproduce-paper",
)


@dataclass
class RunConfig:
    command: str
    t: int = 2
    field: str = "GF2"
    kind: str = "m"
    window: int | None = None
    seed: int = reports.DEFAULT_SEED
    samples: int = reports.DEFAULT_SAMPLES
    format: str = "text"
    out: str | None = None
    matrix: str | None = None
    max_t: int = 16

    def group(self) -> GroupConfig:
        return GroupConfig(self.t, self.field, max_t=self.max_t)


# -- commands -------------------------------------------------------------------


def _verify_group(cfg: RunConfig):
    return [reports.group_identities([cfg.group().t])]


def _verify_resolution(cfg: RunConfig):
    return [reports.resolution_exactness([cfg.group().t])]


def _verify_homotopies(cfg: RunConfig):
    t = cfg.group().t
    out = [reports.product_classes([t]), reports.homotopies([t])]
    if t == 2:
        out.append(reports.four_periodic_obstruction())
    return out


def _verify_f2(cfg: RunConfig):
    return [reports.f2_tables([cfg.group().t])]


def _dump_m(cfg: RunConfig):
    group = cfg.group()
    sp = SecondaryProduct(group, cfg.kind)
    s_max = 1 if cfg.window is None else cfg.window
    table = {}
    for i in range(s_max + 1):
        for a, b, c in product(NAMES, NAMES, NAMES):
            val = sp.on_basis(BasisMonomial(i, a), BasisMonomial(0, b), BasisMonomial(0, c))
            table[f"{BasisMonomial(i, a)},{b},{c}"] = str(val)
    return [reports._check("m_table", f"{cfg.kind} on basis triples", True,
                           {"kind": cfg.kind, "variant": variant_of(group.t), "values": table})]


def _check_gamma(cfg: RunConfig):
    cert = gamma_certificate(cfg.group(), cfg.kind, 5 if cfg.window is None else cfg.window)
    data = {"kind": cert.kind, "verdict": cert.verdict, "system": list(cert.matrix.shape)}
    if cert.infeasible:
        data["certificate_support"] = [",".join(tri) for tri in cert.support()]
    return [reports._check("gamma", "class of the secondary product", True, data)]


def _load_matrix(cfg: RunConfig, variant: str) -> LambdaMatrix:
    if cfg.matrix is None:
        return random_minimal_presentation(variant, random.Random(cfg.seed))
    with open(cfg.matrix) as fh:
        data = json.load(fh)
    return LambdaMatrix.from_json(data, variant)


def _check_module(cfg: RunConfig):
    group = cfg.group()
    A = _load_matrix(cfg, variant_of(group.t))
    if cfg.kind == "m~" and group.t == 2:
        raise ConfigError("m~ is only defined for t >= 4")
    rep = realizable_summand(A, group, cfg.kind, fld=cfg.field)
    return [reports._check("module", "summand of a realizable module", True, rep.to_json())]


def _enumerate(cfg: RunConfig):
    hi = 7 if cfg.window is None else cfg.window
    rep = enumerate_scalar_triples(cfg.group(), get_field(cfg.field), range(-4, hi + 1), cfg.kind)
    ok = not rep["counterexamples"]
    return [reports._check("enumerate_massey", "1x1 Massey products in the indeterminacy", ok, rep)]


def _reproduce(cfg: RunConfig):
    return reports.reproduce(cfg.seed, cfg.samples)


HANDLERS = {
    "verify-group": _verify_group,
    "verify-resolution": _verify_resolution,
    "verify-homotopies": _verify_homotopies,
    "verify-f2": _verify_f2,
    "dump-m": _dump_m,
    "check-gamma": _check_gamma,
    "check-module": _check_module,
    "enumerate-massey": _enumerate,
    "reproduce-paper": _reproduce,
}


# -- output -----------------------------------------------------------------------


def build_report(cfg: RunConfig) -> dict:
    checks = HANDLERS[cfg.command](cfg)
    config = {k: v for k, v in asdict(cfg).items() if k not in ("out", "format")}
    return {"schema": SCHEMA, "config": config, "checks": checks}


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []
    for chk in report["checks"]:
        data = chk["data"]
        if chk["name"] == "gamma":
            lines.append(f"gamma: {data['verdict']}" + (" (certificate)" if data["verdict"] == "nontrivial" else ""))
        elif chk["name"] == "module":
            lines.append(f"summand_of_realizable: {str(data['summand_of_realizable']).lower()}")
        elif chk["name"] == "m_table":
            lines.extend(f"m({k}) = {v}" for k, v in data["values"].items() if v != "0")
        else:
            lines.append(f"{chk['name']}: {chk['status']}")
    return "\n".join(lines) + "\n"


def parse_args(argv=None) -> RunConfig:
    p = argparse.ArgumentParser(prog="tatemassey", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--t", type=int, default=2, help="Q_4t parameter (power of 2)")
    p.add_argument("--max-t", type=int, default=16, help="largest t accepted")
    p.add_argument("--field", default="GF2", choices=["GF2", "GF4"])
    p.add_argument("--kind", default="m", choices=list(KINDS) + ["mprime", "mdblprime", "mtilde"])
    p.add_argument("--window", type=int, default=None,
                   help="dump-m: largest s-exponent; check-gamma: max degree; enumerate-massey: max degree")
    p.add_argument("--seed", type=int, default=reports.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=reports.DEFAULT_SAMPLES)
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--matrix", default=None, help="JSON file {rows, cols, entries} for check-module")
    ns = p.parse_args(argv)
    kind = {"mprime": "m'", "mdblprime": "m''", "mtilde": "m~"}.get(ns.kind, ns.kind)
    return RunConfig(ns.command, ns.t, ns.field, kind, ns.window, ns.seed, ns.samples, ns.format,
                     ns.out, ns.matrix, ns.max_t)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    try:
        report = build_report(cfg)
    except (ConfigError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(report, cfg.format)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if all(c["status"] == "PASS" for c in report["checks"]) else 1


if __name__ == "__main__":
    sys.exit(main())
