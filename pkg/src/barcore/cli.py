"""Command-line calculator for bar partitions.

Exit status: 0 success, 1 usage error, 2 domain error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import abacus, bars, coxeter, cpq, upsilon, verify
from .partitions import (
    BarCoreError,
    format_parts,
    parse_bar_partition,
    parse_parts,
)

EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3

# positional arguments holding bar partitions; parsed after argparse so a bad
# partition is a domain error rather than a usage error
PARTITION_ARGS = ("partition", "core", "mu", "sigma", "alpha", "beta")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _quotient_text(quot: bars.BarQuotient) -> str:
    return " | ".join(format_parts(c) for c in quot)


def _parse_quotient(text: str) -> bars.BarQuotient:
    return bars.make_quotient([parse_parts(c) for c in text.split("|")])


def _params(args) -> coxeter.ActionParams:
    if args.q is None:
        raise UsageError(f"{args.command} needs --q")
    return coxeter.ActionParams(args.p, args.q)


def _emit(args, text: str, data) -> None:
    print(json.dumps(data) if args.json else text)


def cmd_core(args):
    lam = bars.p_bar_core(args.partition, args.p)
    _emit(args, format_parts(lam), list(lam))


def cmd_weight(args):
    w = bars.p_bar_weight(args.partition, args.p)
    _emit(args, str(w), w)


def cmd_pset(args):
    delta = bars.p_set(args.partition, args.p)
    _emit(args, format_parts(delta), list(delta))


def cmd_quotient(args):
    quot = bars.p_quotient(args.partition, args.p)
    _emit(args, _quotient_text(quot), quot.to_json())


def cmd_reconstruct(args):
    lam = bars.reconstruct(args.core, _parse_quotient(args.quotient), args.p)
    _emit(args, format_parts(lam), list(lam))


def cmd_delta(args):
    params = _params(args)
    gen = coxeter.parse_generator(args.generator)
    if args.integer is not None:
        y = coxeter.generator_apply_int(params, gen.side, gen.index, args.integer)
        _emit(args, str(y), y)
        return
    if args.partition is None:
        raise UsageError("delta needs a partition or --integer")
    lam = coxeter.generator_apply(params, gen.side, gen.index, args.partition)
    _emit(args, format_parts(lam), list(lam))


def cmd_word(args):
    lam = coxeter.word_apply(_params(args), coxeter.parse_word(args.word), args.partition)
    _emit(args, format_parts(lam), list(lam))


def cmd_orbit(args):
    found = coxeter.orbit_bfs(_params(args), args.partition, args.groups, args.max_size,
                              measure=args.measure)
    for lam, word in found.items():
        via = [str(g) for g in word]
        if args.json:
            print(json.dumps({"partition": list(lam), "via": via}))
        else:
            print(f"{format_parts(lam)}\t{' '.join(via)}")


def cmd_in_cpq(args):
    ok = cpq.in_cpq(args.partition, _params(args))
    _emit(args, "true" if ok else "false", ok)


def cmd_bad_triple(args):
    triple = cpq.find_bad_triple(args.partition, _params(args), args.window)
    if triple is None:
        _emit(args, "none", None)
    else:
        _emit(args, format_parts(triple), list(triple))


def cmd_boxplus(args):
    lam = cpq.boxplus(args.mu, args.sigma, _params(args))
    _emit(args, format_parts(lam), list(lam))


def cmd_upsilon(args):
    params = _params(args)
    if args.candidates is not None:
        mus = upsilon.mu_candidates(parse_bar_partition(args.candidates), params)
        _emit(args, "\n".join(format_parts(m) for m in mus), [list(m) for m in mus])
    elif args.sigma_beta is not None:
        sigma = upsilon.sigma_from_beta(parse_bar_partition(args.sigma_beta), params)
        _emit(args, format_parts(sigma), list(sigma))
    else:
        ups = upsilon.yin_yang(params.p, params.q)
        _emit(args, format_parts(ups), list(ups))


def cmd_phi(args):
    params = _params(args)
    t = upsilon.phi(args.partition, params)
    tests = upsilon.test_integers(t.alpha, params)
    text = (f"X={format_parts(sorted(t.X))} alpha={format_parts(t.alpha)} "
            f"beta={format_parts(t.beta)} tests={format_parts(tests)}")
    _emit(args, text, dict(t.to_json(), tests=tests))


def cmd_psi(args):
    t = upsilon.UpsilonTriple(frozenset(parse_parts(args.X)), args.alpha, args.beta)
    lam = upsilon.psi(t, _params(args))
    _emit(args, format_parts(lam), list(lam))


def cmd_render(args):
    pic = abacus.render_abacus(args.partition, args.p, args.above, args.below)
    _emit(args, pic.text, {"first_row": pic.first_row, "rows": list(pic.rows)})


def cmd_verify(args):
    checks = args.checks.split(",") if args.checks else None
    reports = verify.verify_corpus(_params(args), args.max_n, checks)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(reports, fh, indent=2)
    if args.json:
        print(json.dumps(reports))
    else:
        for r in reports:
            status = "ok" if r["failure_count"] == 0 else f"FAIL ({r['failure_count']})"
            print(f"{r['property']}: {status} over {r['corpus_size']} partitions")
            for f in r["failures"][:1]:
                print(f"  first counterexample {format_parts(f['lambda'])}: {f['detail']}")
    return 0 if verify.all_passed(reports) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd bar length >= 3")
    common.add_argument("--q", type=int, help="second odd bar length, coprime to p")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="barcore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text, *positionals):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        for pos in positionals:
            sp.add_argument(pos)
        sp.set_defaults(func=fn)
        return sp

    add("core", cmd_core, "p-bar-core", "partition")
    add("weight", cmd_weight, "p-bar-weight", "partition")
    add("pset", cmd_pset, "p-set, indexed by residue", "partition")
    add("quotient", cmd_quotient, "p-quotient, components separated by |", "partition")
    sp = add("reconstruct", cmd_reconstruct, "rebuild from core and quotient", "core")
    sp.add_argument("quotient", help="components separated by |, e.g. '1|1|3|1,1,1|1'")
    sp = add("delta", cmd_delta, "apply one generator such as P0 or Q1")
    sp.add_argument("generator")
    sp.add_argument("partition", nargs="?")
    sp.add_argument("--integer", type=int, help="act on this integer instead")
    sp = add("word", cmd_word, "apply a word left to right")
    sp.add_argument("word", help="e.g. P2,P0")
    sp.add_argument("partition")
    sp = add("orbit", cmd_orbit, "bounded orbit slice with witness words", "partition")
    sp.add_argument("--groups", choices=["P", "Q", "Both"], default="Both")
    sp.add_argument("--max-size", type=int, default=None)
    sp.add_argument("--measure", choices=["largest", "size"], default="largest")
    add("in-cpq", cmd_in_cpq, "membership of C_{p,q}", "partition")
    sp = add("bad-triple", cmd_bad_triple, "search for a bad triple", "partition")
    sp.add_argument("--window", type=int, default=None)
    add("boxplus", cmd_boxplus, "mu (+) sigma", "mu", "sigma")
    sp = add("upsilon", cmd_upsilon, "Yin/Yang partition and related constructions")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--candidates", metavar="ALPHA", help="list the p-bar-cores over ALPHA")
    group.add_argument("--sigma", metavar="BETA", dest="sigma_beta", help="the q-bar-core built from BETA")
    add("phi", cmd_phi, "orbit member to (X, alpha, beta)", "partition")
    sp = add("psi", cmd_psi, "(X, alpha, beta) to orbit member")
    sp.add_argument("X", help="comma-separated indices, '' for the empty set")
    sp.add_argument("alpha")
    sp.add_argument("beta")
    sp = add("render", cmd_render, "p-runner abacus", "partition")
    sp.add_argument("--above", type=int, default=None)
    sp.add_argument("--below", type=int, default=None)
    sp = add("verify", cmd_verify, "run corpus property checks")
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--checks", help=f"comma-separated subset of {','.join(verify.CHECKS)}")
    sp.add_argument("--report", help="write the JSON report here")
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name in PARTITION_ARGS:
            if isinstance(getattr(args, name, None), str):
                setattr(args, name, parse_bar_partition(getattr(args, name)))
        return args.func(args) or 0
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except BarCoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
