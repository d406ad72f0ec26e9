"""Command-line interface.

Exit codes: 0 all checks pass; 1 a law or round-trip check failed (report
emitted); 2 parse/validation/typability error; 3 enumeration cap exceeded.

Global flags: ``--format json|text``, ``--jobs N`` (parallelizes
enumeration only), ``--seed`` (affects sampled checks only, never
enumeration order). JSON reports are byte-stable across runs and worker
counts; the wall-clock duration appears only in text output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import jsonio
from .adjunction import induced_comonad, induced_monad
from .construct import em_category, em_coalgebra_category, kleisli_category
from .distlaw import (
    check_dist_law,
    check_mixed_law,
    enumerate_dist_laws,
    enumerate_mixed_laws,
)
from .errors import (
    CategoryValidationError,
    EnumerationCapExceeded,
    FinMonadError,
)
from .fincat import DEFAULT_CAP
from .monad import enumerate_comonads, enumerate_monads
from .report import VerificationReport, entry, entry_from_violations
from .selftest import run_selftest
from .twofunctors import (
    check_joint_compatibility,
    enumerate_liftings,
    extend_monad,
    extract_dist_law,
    extract_from_extension,
    hom_iso_roundtrip,
    lift_monad,
)


class _ValidationFailure(Exception):
    """Internal: a report that must be emitted with exit code 2."""

    def __init__(self, report):
        self.report = report
        super().__init__("validation failed")


def _report(args, name, positional) -> VerificationReport:
    return VerificationReport(name, [str(p) for p in positional], args.seed, [])


def _cmd_validate(args) -> VerificationReport:
    rep = _report(args, "validate", [args.file])
    try:
        cat = jsonio.load_category(args.file, seed=args.seed)
    except CategoryValidationError as exc:
        for v in exc.violations:
            rep.add(entry(f"validate/{v.kind}", v.tag, False,
                          witness=v.as_witness()))
        raise _ValidationFailure(rep)
    rep.add(entry("validate/category", "chk-validation", True,
                  witness={"objects": len(cat.objects),
                           "morphisms": len(cat.morphisms)}))
    return rep


def _cmd_monads(args) -> VerificationReport:
    rep = _report(args, "monads", [args.file])
    cat = jsonio.load_category(args.file, seed=args.seed)
    found = enumerate_monads(cat, cap=args.cap, jobs=args.jobs)
    rep.add(entry("monads/enumerate", "chk-enumeration", True,
                  witness={"count": len(found),
                           "object_maps": [dict(sorted(m.S.object_map.items()))
                                           for m in found]}))
    return rep


def _cmd_comonads(args) -> VerificationReport:
    rep = _report(args, "comonads", [args.file])
    cat = jsonio.load_category(args.file, seed=args.seed)
    found = enumerate_comonads(cat, cap=args.cap, jobs=args.jobs)
    rep.add(entry("comonads/enumerate", "chk-enumeration", True,
                  witness={"count": len(found),
                           "object_maps": [dict(sorted(c.G.object_map.items()))
                                           for c in found]}))
    return rep


def _cmd_em(args) -> VerificationReport:
    rep = _report(args, "em", [args.file])
    m = jsonio.load_monad(args.file, seed=args.seed)
    em = em_category(m, cap=args.cap)
    rep.add(entry("em/construction", "chk-construction", True,
                  witness={"algebras": len(em.category.objects),
                           "morphisms": len(em.category.morphisms)}))
    rep.add(entry("em/induced-monad-recovers-input", "Eq-1510131206",
                  induced_monad(em.adj) == m))
    counit_ok = all(em.underlying(em.adj.counit.at(a)) == em.structure(a)
                    for a in em.category.objects)
    rep.add(entry("em/counit-components-are-structure-maps",
                  "chk-construction", counit_ok))
    if args.dump:
        jsonio.dump_category(em.category, args.dump)
    return rep


def _cmd_coem(args) -> VerificationReport:
    rep = _report(args, "coem", [args.file])
    c = jsonio.load_comonad(args.file, seed=args.seed)
    co = em_coalgebra_category(c, cap=args.cap)
    rep.add(entry("coem/construction", "chk-construction", True,
                  witness={"coalgebras": len(co.category.objects),
                           "morphisms": len(co.category.morphisms)}))
    rep.add(entry("coem/induced-comonad-recovers-input", "Eq-1510131206",
                  induced_comonad(co.adj) == c))
    if args.dump:
        jsonio.dump_category(co.category, args.dump)
    return rep


def _cmd_kleisli(args) -> VerificationReport:
    rep = _report(args, "kleisli", [args.file])
    m = jsonio.load_monad(args.file, seed=args.seed)
    kl = kleisli_category(m)
    rep.add(entry("kleisli/construction", "chk-construction", True,
                  witness={"objects": len(kl.category.objects),
                           "morphisms": len(kl.category.morphisms)}))
    rep.add(entry("kleisli/induced-monad-recovers-input",
                  "chk-kleisli-counit-identity", induced_monad(kl.adj) == m))
    if args.dump:
        jsonio.dump_category(kl.category, args.dump)
    return rep


def _cmd_distlaw(args) -> VerificationReport:
    if args.law_command == "check":
        rep = _report(args, "distlaw check", [args.file])
        dl = jsonio.load_dist_law(args.file, seed=args.seed)
        violations = check_dist_law(dl.S, dl.T, dl.phi)
        by_tag = {}
        for v in violations:
            by_tag.setdefault(v.tag, []).append(v)
        for tag in ("law-naturality", "Eq-1510071248-i", "Eq-1510071248-ii",
                    "Eq-1510071249-i", "Eq-1510071249-ii"):
            rep.add(entry_from_violations(f"distlaw/{tag}", tag,
                                          by_tag.get(tag, [])))
        return rep
    rep = _report(args, "distlaw enumerate", [args.s_file, args.t_file])
    S = jsonio.load_monad(args.s_file, seed=args.seed)
    T = jsonio.load_monad(args.t_file, seed=args.seed)
    laws = enumerate_dist_laws(S, T, cap=args.cap, jobs=args.jobs)
    rep.add(entry("distlaw/enumerate", "chk-enumeration", True,
                  witness={"count": len(laws),
                           "laws": [dict(sorted(dl.phi.components.items()))
                                    for dl in laws]}))
    return rep


def _cmd_mixedlaw(args) -> VerificationReport:
    if args.law_command == "check":
        rep = _report(args, "mixedlaw check", [args.file])
        ml = jsonio.load_mixed_law(args.file, seed=args.seed)
        violations = check_mixed_law(ml.S, ml.G, ml.psi)
        by_tag = {}
        for v in violations:
            by_tag.setdefault(v.tag, []).append(v)
        for tag in ("law-naturality", "Eq-1510081240-i", "Eq-1510081240-ii",
                    "Eq-1510081242-i", "Eq-1510081242-ii"):
            rep.add(entry_from_violations(f"mixedlaw/{tag}", tag,
                                          by_tag.get(tag, [])))
        return rep
    rep = _report(args, "mixedlaw enumerate", [args.s_file, args.g_file])
    S = jsonio.load_monad(args.s_file, seed=args.seed)
    G = jsonio.load_comonad(args.g_file, seed=args.seed)
    laws = enumerate_mixed_laws(S, G, cap=args.cap, jobs=args.jobs)
    rep.add(entry("mixedlaw/enumerate", "chk-enumeration", True,
                  witness={"count": len(laws),
                           "laws": [dict(sorted(ml.psi.components.items()))
                                    for ml in laws]}))
    return rep


def _load_valid_law(args):
    dl = jsonio.load_dist_law(args.file, seed=args.seed)
    violations = dl.check()
    return dl, violations


def _cmd_lift(args) -> VerificationReport:
    rep = _report(args, "lift", [args.file])
    dl, violations = _load_valid_law(args)
    rep.add(entry_from_violations("lift/law-axioms", "Eq-1510071248-i",
                                  violations))
    if violations:
        return rep
    lm = lift_monad(dl)
    rep.add(entry("lift/lifted-monad-valid", "Thm-1705201918", True,
                  witness={"functor": dict(sorted(lm.that.object_map.items()))}))
    rep.add(entry("lift/recovery-equality", "Eq-1510081202",
                  extract_dist_law(lm) == dl))
    return rep


def _cmd_extend(args) -> VerificationReport:
    rep = _report(args, "extend", [args.file])
    dl, violations = _load_valid_law(args)
    rep.add(entry_from_violations("extend/law-axioms", "Eq-1510071249-i",
                                  violations))
    if violations:
        return rep
    ke = extend_monad(dl)
    rep.add(entry("extend/extension-valid", "Eq-1510081116", True,
                  witness={"functor": dict(sorted(ke.stilde.object_map.items()))}))
    rep.add(entry("extend/recovery-equality", "Thm-1501131518",
                  extract_from_extension(ke) == dl))
    return rep


def _cmd_extract_em(args) -> VerificationReport:
    rep = _report(args, "extract-em", [args.file])
    dl, violations = _load_valid_law(args)
    rep.add(entry_from_violations("extract-em/law-axioms", "Eq-1510071248-i",
                                  violations))
    if violations:
        return rep
    lm = lift_monad(dl)
    recovered = extract_dist_law(lm)
    rep.add(entry("extract-em/extracted-law", "Eq-1510081202", True,
                  witness={"phi": dict(sorted(recovered.phi.components.items()))}))
    rep.add(entry("extract-em/round-trip", "chk-round-trip", recovered == dl))
    return rep


def _cmd_extract_kleisli(args) -> VerificationReport:
    rep = _report(args, "extract-kleisli", [args.file])
    dl, violations = _load_valid_law(args)
    rep.add(entry_from_violations("extract-kleisli/law-axioms",
                                  "Eq-1510071249-i", violations))
    if violations:
        return rep
    ke = extend_monad(dl)
    recovered = extract_from_extension(ke)
    rep.add(entry("extract-kleisli/extracted-law", "Eq-1510081116", True,
                  witness={"phi": dict(sorted(recovered.phi.components.items()))}))
    rep.add(entry("extract-kleisli/round-trip", "chk-round-trip",
                  recovered == dl))
    return rep


def _cmd_roundtrip(args) -> VerificationReport:
    rep = _report(args, "roundtrip", [args.s_file, args.t_file])
    S = jsonio.load_monad(args.s_file, seed=args.seed)
    T = jsonio.load_monad(args.t_file, seed=args.seed)
    laws = enumerate_dist_laws(S, T, cap=args.cap, jobs=args.jobs)
    lifts = enumerate_liftings(S, T, cap=args.cap, jobs=args.jobs)
    rep.add(entry("roundtrip/count-equality", "Thm-1705201918",
                  len(laws) == len(lifts),
                  witness={"laws": len(laws), "liftings": len(lifts)}))
    em = em_category(S, cap=args.cap)
    kl = kleisli_category(T)
    ok_a = all(extract_dist_law(lift_monad(dl, em)) == dl for dl in laws)
    rep.add(entry("roundtrip/extract-after-lift", "chk-round-trip", ok_a,
                  witness={"laws": len(laws)}))
    ok_b = all(lift_monad(extract_dist_law(lm), em) == lm for lm in lifts)
    rep.add(entry("roundtrip/lift-after-extract", "chk-round-trip", ok_b,
                  witness={"liftings": len(lifts)}))
    ok_ext = all(extract_from_extension(extend_monad(dl, kl)) == dl
                 for dl in laws)
    rep.add(entry("roundtrip/extension-roundtrip", "Thm-1501131518", ok_ext))
    ok_joint = all(check_joint_compatibility(lift_monad(dl, em),
                                             extend_monad(dl, kl))
                   for dl in laws)
    rep.add(entry("roundtrip/joint-compatibility", "chk-joint-compatibility",
                  ok_joint))
    if S.base.is_thin():
        pointwise = all(S.base.le(S.S.ob(T.S.ob(x)), T.S.ob(S.S.ob(x)))
                        for x in S.base.objects)
        rep.add(entry("roundtrip/pointwise-criterion", "chk-pointwise-criterion",
                      (len(laws) > 0) == pointwise,
                      witness={"predicted": pointwise}))
    return rep


def _cmd_roundtrip_mixed(args) -> VerificationReport:
    from .twofunctors import (
        check_mixed_compatibility,
        colift_monad,
        enumerate_comonad_liftings,
        extract_mixed_from_colifting,
        extract_mixed_from_lifting,
        lift_comonad,
    )

    rep = _report(args, "roundtrip-mixed", [args.s_file, args.g_file])
    S = jsonio.load_monad(args.s_file, seed=args.seed)
    G = jsonio.load_comonad(args.g_file, seed=args.seed)
    laws = enumerate_mixed_laws(S, G, cap=args.cap, jobs=args.jobs)
    lifts = enumerate_comonad_liftings(S, G, cap=args.cap, jobs=args.jobs)
    rep.add(entry("roundtrip-mixed/count-equality", "Thm-1705222141",
                  len(laws) == len(lifts),
                  witness={"laws": len(laws), "liftings": len(lifts)}))
    ok_round = ok_compat = True
    for ml in laws:
        lc = lift_comonad(ml)
        cl = colift_monad(ml)
        if extract_mixed_from_lifting(lc) != ml:
            ok_round = False
        if extract_mixed_from_colifting(cl) != ml:
            ok_round = False
        if not check_mixed_compatibility(lc, cl):
            ok_compat = False
    rep.add(entry("roundtrip-mixed/mixed-roundtrips", "Thm-1501140312",
                  ok_round, witness={"laws": len(laws)}))
    rep.add(entry("roundtrip-mixed/compatibility", "Eq-1510081654", ok_compat))
    return rep


def _cmd_homiso(args) -> VerificationReport:
    rep = _report(args, "homiso", [args.file])
    m = jsonio.load_monad(args.file, seed=args.seed)
    rep.add(*hom_iso_roundtrip(m, cap=args.cap, jobs=args.jobs))
    return rep


def _cmd_selftest(args) -> VerificationReport:
    rep = run_selftest(jobs=args.jobs, seed=args.seed)
    return rep


def build_parser() -> argparse.ArgumentParser:
    # Global flags are accepted both before and after the subcommand; the
    # SUPPRESS defaults keep a trailing occurrence from clobbering a
    # leading one with the default value.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"),
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker threads for enumerations")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for sampled checks (never affects "
                             "enumeration order)")

    parser = argparse.ArgumentParser(
        prog="finmonad",
        parents=[common],
        description="Monads, distributive laws, and their liftings over "
                    "finite categories, verified exhaustively.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="validate a category file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    for name, fn in (("monads", _cmd_monads), ("comonads", _cmd_comonads)):
        p = sub.add_parser(name, parents=[common],
                           help=f"enumerate {name} on a category")
        p.add_argument("file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.set_defaults(func=fn)

    for name, fn, what in (("em", _cmd_em, "monad"),
                           ("coem", _cmd_coem, "comonad"),
                           ("kleisli", _cmd_kleisli, "monad")):
        p = sub.add_parser(name, parents=[common],
                           help=f"construct from a {what} file")
        p.add_argument("file")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP)
        p.add_argument("--dump", metavar="OUT.json",
                       help="write the constructed category as JSON")
        p.set_defaults(func=fn)

    p = sub.add_parser("distlaw", help="check or enumerate distributive laws")
    lsub = p.add_subparsers(dest="law_command", required=True)
    pc = lsub.add_parser("check", parents=[common])
    pc.add_argument("file")
    pc.set_defaults(func=_cmd_distlaw)
    pe = lsub.add_parser("enumerate", parents=[common])
    pe.add_argument("s_file")
    pe.add_argument("t_file")
    pe.add_argument("--cap", type=int, default=DEFAULT_CAP)
    pe.set_defaults(func=_cmd_distlaw)

    p = sub.add_parser("mixedlaw", help="check or enumerate mixed laws")
    lsub = p.add_subparsers(dest="law_command", required=True)
    pc = lsub.add_parser("check", parents=[common])
    pc.add_argument("file")
    pc.set_defaults(func=_cmd_mixedlaw)
    pe = lsub.add_parser("enumerate", parents=[common])
    pe.add_argument("s_file")
    pe.add_argument("g_file")
    pe.add_argument("--cap", type=int, default=DEFAULT_CAP)
    pe.set_defaults(func=_cmd_mixedlaw)

    for name, fn in (("lift", _cmd_lift), ("extend", _cmd_extend),
                     ("extract-em", _cmd_extract_em),
                     ("extract-kleisli", _cmd_extract_kleisli)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file", help="distributive law file")
        p.set_defaults(func=fn)

    p = sub.add_parser("roundtrip", parents=[common],
                       help="enumerations, round trips, count equality, "
                            "joint compatibility")
    p.add_argument("s_file")
    p.add_argument("t_file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_roundtrip)

    p = sub.add_parser("roundtrip-mixed", parents=[common])
    p.add_argument("s_file")
    p.add_argument("g_file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_roundtrip_mixed)

    p = sub.add_parser("homiso", parents=[common],
                       help="verify the hom-category isomorphism")
    p.add_argument("file", help="monad file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=_cmd_homiso)

    p = sub.add_parser("selftest", parents=[common],
                       help="run the fixture-corpus acceptance suite")
    p.set_defaults(func=_cmd_selftest)

    return parser


def _emit(report: VerificationReport, fmt: str, duration: float) -> None:
    if fmt == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_text(duration))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name, default in (("format", "text"), ("jobs", 1), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    started = time.perf_counter()
    try:
        report = args.func(args)
    except _ValidationFailure as exc:
        _emit(exc.report, args.format, time.perf_counter() - started)
        return 2
    except EnumerationCapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3
    except (FinMonadError, OSError, KeyError, json.JSONDecodeError) as exc:
        rep = VerificationReport(args.command, [], args.seed, [
            entry("error", "chk-validation", False,
                  witness={"kind": type(exc).__name__, "message": str(exc)})])
        _emit(rep, args.format, time.perf_counter() - started)
        return 2
    _emit(report, args.format, time.perf_counter() - started)
    return 0 if report.ok() else 1


if __name__ == "__main__":
    sys.exit(main())
