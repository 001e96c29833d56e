"""Command-line front end: ``skein4 <command> ...``.

Every randomised command draws from ``random.Random(--seed)`` only, so equal
arguments give byte-identical output.  The exit status is 0 exactly when all
checks pass; otherwise a one-line JSON report naming the first failure goes
to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Iterable, Sequence

from .invariantring import (
    H3, build_gr, eval_inv_poly, leading_monomial, monomial_name, s3, trace_word, xi,
)
from .normalform import (
    NormalElement, Normalizer, as_free, enumerate_basis, mul_normal,
)
from .parse import ParseError, parse_element
from .relations import CENTRAL_KIND, default_table
from .skeinfree import GENERATORS, SkeinElement, mirror
from .traceoracle import (
    eval_skein_classical, random_matrix_tuple, random_sl2_tuple, rank_check,
)


class Report:
    """Collects named checks and prints them as text lines or one JSON document."""

    def __init__(self, command: str, as_json: bool, out=None):
        self.command = command
        self.as_json = as_json
        self.out = out or sys.stdout
        self.checks: list[dict] = []
        self.info: dict = {}

    def check(self, name: str, ok: bool, **detail) -> bool:
        self.checks.append(dict(name=name, ok=bool(ok), **detail))
        if not self.as_json:
            extra = "".join(f" {k}={v}" for k, v in detail.items())
            print(f"{'PASS' if ok else 'FAIL'} {name}{extra}", file=self.out)
        return ok

    def note(self, key: str, value) -> None:
        self.info[key] = value
        if not self.as_json:
            print(f"{key}: {value}", file=self.out)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)

    def finish(self) -> int:
        failed = [c for c in self.checks if not c["ok"]]
        if self.as_json:
            doc = dict(command=self.command, ok=not failed, **self.info,
                       passed=len(self.checks) - len(failed), failed=len(failed),
                       checks=self.checks)
            json.dump(doc, self.out, indent=2, sort_keys=True)
            print(file=self.out)
        else:
            print(f"{len(self.checks) - len(failed)}/{len(self.checks)} checks passed", file=self.out)
        if failed:
            report = dict(command=self.command, ok=False, first_failure=failed[0])
            print(json.dumps(report, sort_keys=True), file=sys.stderr)
            return 1
        return 0


# -- commands ----------------------------------------------------------------------

def _print_normal(n: NormalElement, as_json: bool) -> None:
    if as_json:
        print(json.dumps(n.to_json(), indent=2, sort_keys=True))
    else:
        print(n.render())


def cmd_normalize(args) -> int:
    e = parse_element(args.expr)
    _print_normal(Normalizer(strategy=args.strategy).normalize(e), args.json)
    return 0


def cmd_mul(args) -> int:
    _print_normal(mul_normal(parse_element(args.left), parse_element(args.right)), args.json)
    return 0


def _instance_name(inst) -> str:
    return f"{inst.base}@sigma^{inst.rotation}"


def cmd_verify_relations(args) -> int:
    table = default_table()
    classical = args.classical or not args.rewrite
    rewrite = args.rewrite or not args.classical
    rep = Report("verify relations", args.json)
    rng = random.Random(args.seed)
    tuples = [random_sl2_tuple(rng) for _ in range(args.samples)] if classical else []
    norm = Normalizer(table)
    rep.note("instances", len(table.instances))
    for inst in table.instances:
        r = inst.residue
        if classical:
            bad = next((i for i, tup in enumerate(tuples) if eval_skein_classical(r, tup) != 0), None)
            detail = {} if bad is None else {"sample": bad}
            rep.check(f"{_instance_name(inst)} classical", bad is None, **detail)
        if rewrite:
            rep.check(f"{_instance_name(inst)} rewrite", not norm.normalize(r))
            rep.check(f"{_instance_name(inst)} mirror", not norm.normalize(mirror(r)))
    return rep.finish()


def random_word(rng: random.Random, maxlen: int) -> tuple:
    return tuple(rng.choice(GENERATORS) for _ in range(rng.randint(1, maxlen)))


def cmd_fuzz_confluence(args) -> int:
    rng = random.Random(args.seed)
    left, right = Normalizer(strategy="leftmost"), Normalizer(strategy="rightmost")
    rep = Report("fuzz confluence", args.json)
    for _ in range(args.words):
        w = random_word(rng, args.maxlen)
        e = SkeinElement.word(w)
        a = left.normalize(e)
        name = "*".join(g.name for g in w)
        ok = a == right.normalize(e) and left.normalize(as_free(a)) == a
        rep.check(name, ok, terms=len(a))
    return rep.finish()


def cmd_rank(args) -> int:
    basis = enumerate_basis(args.max_factors)
    samples = args.samples if args.samples is not None else len(basis) + 20
    rep = Report("rank", args.json)
    rep.note("columns", len(basis))
    rep.note("samples", samples)
    r = rank_check(basis, samples, args.seed)
    rep.note("rank", r)
    rep.check("full column rank", r == len(basis))
    return rep.finish()


_GR_NAMES = ("Gr0", "Gr1", "Gr2", "Gr3", "Gr4")


def cmd_charvar_groebner(args) -> int:
    gr = build_gr()
    rep = Report(f"charvar groebner {args.check}", args.json)
    rep.note("sizes", [len(g) for g in gr])
    if args.check == "vanish":
        rng = random.Random(args.seed)
        tuples = [random_matrix_tuple(rng) for _ in range(args.samples)]
        for name, family in zip(_GR_NAMES, gr):
            for i, p in enumerate(family):
                bad = next((j for j, tup in enumerate(tuples) if eval_inv_poly(p, tup) != 0), None)
                rep.check(f"{name}[{i}] vanishes", bad is None,
                          **({} if bad is None else {"sample": bad}))
    else:
        s123 = leading_monomial(s3(1, 2, 3))
        k = s123.index(1)
        for a in H3:
            for b in H3:
                lead = leading_monomial(xi(a, b))
                rep.check(f"L(xi{a}{b}) = s_a*s_b", lead == leading_monomial(s3(*a) * s3(*b)),
                          lead=monomial_name(lead))
        for name, family in zip(_GR_NAMES, gr):
            if name == "Gr1":
                continue
            for i, p in enumerate(family):
                lead = leading_monomial(p)
                rep.check(f"s123 does not divide L({name}[{i}])", lead[k] == 0,
                          lead=monomial_name(lead))
    return rep.finish()


def parse_index_word(text: str) -> tuple[int, ...]:
    digits = [c for c in text if not c.isspace() and c not in ",*x"]
    if not digits or any(c not in "1234" for c in digits):
        raise ParseError(f"trace word must be letters from 1..4, got {text!r}", 0)
    return tuple(int(c) for c in digits)


def cmd_charvar_trace(args) -> int:
    p = trace_word(parse_index_word(args.word))
    if args.json:
        print(json.dumps({monomial_name(e): str(c) for e, c in sorted(p.terms.items())},
                         indent=2, sort_keys=True))
    else:
        print(p.render())
    return 0


def _write_json(path: str, data) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def structure_constant_records(max_factors: int) -> Iterable[dict]:
    basis = enumerate_basis(max_factors)
    for a in basis:
        for b in basis:
            yield {"left": a.to_json(), "right": b.to_json(), "terms": mul_normal(a, b).to_json()}


def relation_records() -> list[dict]:
    table = default_table()
    sources = {id(r.source): r for r in table.rules.values()}
    out = []
    for inst in table.instances:
        rule = sources.get(id(inst))
        if inst.family == CENTRAL_KIND:
            role = "central"
        elif rule is None:
            role = "duplicate"
        else:
            role = "rule-inverted" if rule.inverted else "rule"
        out.append({"family": inst.family, "base": inst.base, "rotation": inst.rotation,
                    "lhs": inst.lhs.render(), "rhs": inst.rhs.render(), "role": role})
    return out


def cmd_export(args) -> int:
    if args.what == "sc":
        records = list(structure_constant_records(args.max_factors))
    else:
        records = relation_records()
    _write_json(args.out, records)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


# -- argument parsing ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    p = argparse.ArgumentParser(prog="skein4", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    n = sub.add_parser("normalize", parents=[common], help="normal form of an expression")
    n.add_argument("expr")
    n.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    n.set_defaults(func=cmd_normalize)

    m = sub.add_parser("mul", parents=[common], help="normal form of a product")
    m.add_argument("left")
    m.add_argument("right")
    m.set_defaults(func=cmd_mul)

    v = sub.add_parser("verify", help="check the relation set")
    vs = v.add_subparsers(dest="target", required=True)
    vr = vs.add_parser("relations", parents=[common])
    vr.add_argument("--classical", action="store_true", help="evaluate residues on SL(2) tuples")
    vr.add_argument("--rewrite", action="store_true", help="normalize residues and their mirrors")
    vr.add_argument("--samples", type=int, default=200)
    vr.add_argument("--seed", type=int, default=0)
    vr.set_defaults(func=cmd_verify_relations)

    f = sub.add_parser("fuzz", help="randomised consistency checks")
    fs = f.add_subparsers(dest="target", required=True)
    fc = fs.add_parser("confluence", parents=[common])
    fc.add_argument("--words", type=int, default=1000)
    fc.add_argument("--maxlen", type=int, default=6)
    fc.add_argument("--seed", type=int, default=0)
    fc.set_defaults(func=cmd_fuzz_confluence)

    r = sub.add_parser("rank", parents=[common], help="classical independence of the basis")
    r.add_argument("--max-factors", type=int, default=3)
    r.add_argument("--samples", type=int, default=None, help="default: columns + 20")
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_rank)

    c = sub.add_parser("charvar", help="invariant-ring checks")
    cs = c.add_subparsers(dest="target", required=True)
    cg = cs.add_parser("groebner", parents=[common])
    cg.add_argument("--check", choices=("vanish", "leading"), default="vanish")
    cg.add_argument("--samples", type=int, default=200)
    cg.add_argument("--seed", type=int, default=0)
    cg.set_defaults(func=cmd_charvar_groebner)
    ct = cs.add_parser("trace", parents=[common])
    ct.add_argument("word", help="hole indices, e.g. 1234 or '1,2,1'")
    ct.set_defaults(func=cmd_charvar_trace)

    e = sub.add_parser("export", help="write JSON data files")
    e.add_argument("what", choices=("sc", "relations"))
    e.add_argument("--out", required=True)
    e.add_argument("--max-factors", type=int, default=1)
    e.set_defaults(func=cmd_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        detail = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            detail["position"] = exc.pos
        print(json.dumps(dict(command=args.command, ok=False, first_failure=detail),
                         sort_keys=True), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
