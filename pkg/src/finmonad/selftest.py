"""The fixture-corpus acceptance suite behind the ``selftest`` command.

Each criterion function returns report entries; ``run_selftest`` strings
them together and additionally re-runs the suite under two worker counts
and byte-compares the serialized results, so a nondeterministic
enumeration fails loudly.
"""

from __future__ import annotations

import json

from .adjunction import (
    CommutingSquareL,
    CommutingSquareR,
    identity_adjunction,
    induced_comonad,
    induced_monad,
    mate_left,
    mate_right,
)
from .construct import em_category, em_coalgebra_category, kleisli_category
from .distlaw import enumerate_dist_laws, enumerate_mixed_laws, untypable_objects
from .errors import FinMonadError
from .fincat import (
    FinCategory,
    identity_functor,
    identity_nat,
    vcomp,
    whisker_left,
    whisker_right,
)
from .fixtures import FixtureCorpus, corpus
from .monad import enumerate_comonads, enumerate_monads, identity_monad
from .report import CheckEntry, VerificationReport, entry
from .twofunctors import (
    adjr_two_cell_agreement,
    check_joint_compatibility,
    check_mixed_compatibility,
    colift_monad,
    enumerate_adjr_endocells,
    enumerate_comonad_liftings,
    enumerate_liftings,
    extend_monad,
    extract_dist_law,
    extract_from_extension,
    extract_mixed_from_lifting,
    extract_mixed_from_colifting,
    hom_iso_roundtrip,
    lift_comonad,
    lift_monad,
)

_C3_MONAD_NAMES = ("id", "c1", "c2", "c3")


def _closure_operator_count(cat: FinCategory) -> int:
    """Count monotone, inflationary, idempotent self-maps by raw table scan."""
    from itertools import product as _product

    objs = cat.objects
    count = 0
    for combo in _product(objs, repeat=len(objs)):
        f = dict(zip(objs, combo))
        if not all(cat.le(x, f[x]) for x in objs):
            continue
        if not all(f[f[x]] == f[x] for x in objs):
            continue
        if not all(not cat.le(x, y) or cat.le(f[x], f[y])
                   for x in objs for y in objs):
            continue
        count += 1
    return count


def _interior_operator_count(cat: FinCategory) -> int:
    from itertools import product as _product

    objs = cat.objects
    count = 0
    for combo in _product(objs, repeat=len(objs)):
        f = dict(zip(objs, combo))
        if not all(cat.le(f[x], x) for x in objs):
            continue
        if not all(f[f[x]] == f[x] for x in objs):
            continue
        if not all(not cat.le(x, y) or cat.le(f[x], f[y])
                   for x in objs for y in objs):
            continue
        count += 1
    return count


def criterion_1_fixture_enumeration(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    monads = enumerate_monads(cor.c3, jobs=jobs)
    entries.append(entry("criterion-1/monads-on-C3", "chk-enumeration",
                         len(monads) == 4, witness={"count": len(monads)}))
    oracle = _closure_operator_count(cor.c3)
    entries.append(entry("criterion-1/closure-operator-oracle",
                         "chk-enumeration", oracle == len(monads),
                         witness={"oracle": oracle}))
    comonads = enumerate_comonads(cor.c3, jobs=jobs)
    entries.append(entry("criterion-1/comonads-on-C3", "chk-enumeration",
                         len(comonads) == 4, witness={"count": len(comonads)}))
    oracle = _interior_operator_count(cor.c3)
    entries.append(entry("criterion-1/interior-operator-oracle",
                         "chk-enumeration", oracle == len(comonads),
                         witness={"oracle": oracle}))
    return entries


def _c3_pairs(cor: FixtureCorpus):
    for sn in _C3_MONAD_NAMES:
        for tn in _C3_MONAD_NAMES:
            yield sn, tn, cor.monads_c3[sn], cor.monads_c3[tn]


def criterion_2_bijection_counts(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    for sn, tn, S, T in _c3_pairs(cor):
        laws = enumerate_dist_laws(S, T, jobs=jobs)
        lifts = enumerate_liftings(S, T, jobs=jobs)
        entries.append(entry(
            f"criterion-2/{sn}-to-{tn}/count-equality", "Thm-1705201918",
            len(laws) == len(lifts),
            witness={"laws": len(laws), "liftings": len(lifts)}))
        pointwise = all(S.base.le(S.S.ob(T.S.ob(x)), T.S.ob(S.S.ob(x)))
                        for x in S.base.objects)
        entries.append(entry(
            f"criterion-2/{sn}-to-{tn}/pointwise-criterion",
            "chk-pointwise-criterion", (len(laws) > 0) == pointwise,
            witness={"predicted": pointwise, "found": len(laws)}))
    return entries


def criterion_3_round_trips(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    for sn, tn, S, T in _c3_pairs(cor):
        em = em_category(S)
        laws = enumerate_dist_laws(S, T, jobs=jobs)
        ok = all(extract_dist_law(lift_monad(dl, em)) == dl for dl in laws)
        entries.append(entry(
            f"criterion-3/{sn}-to-{tn}/extract-after-lift", "chk-round-trip",
            ok, witness={"laws": len(laws)}))
        lifts = enumerate_liftings(S, T, jobs=jobs, em=em)
        ok = all(lift_monad(extract_dist_law(lm), em) == lm for lm in lifts)
        entries.append(entry(
            f"criterion-3/{sn}-to-{tn}/lift-after-extract", "chk-round-trip",
            ok, witness={"liftings": len(lifts)}))
    return entries


def criterion_4_joint_characterization(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    for sn, tn, S, T in _c3_pairs(cor):
        laws = enumerate_dist_laws(S, T, jobs=jobs)
        if not laws:
            continue
        em = em_category(S)
        kl = kleisli_category(T)
        ok_extend = ok_extract = ok_joint = True
        for dl in laws:
            try:
                ke = extend_monad(dl, kl)
            except FinMonadError:
                ok_extend = ok_extract = ok_joint = False
                continue
            if extract_from_extension(ke) != dl:
                ok_extract = False
            lm = lift_monad(dl, em)
            if not check_joint_compatibility(lm, ke):
                ok_joint = False
        entries.append(entry(
            f"criterion-4/{sn}-to-{tn}/extension-roundtrip", "Thm-1501131518",
            ok_extend and ok_extract, witness={"laws": len(laws)}))
        entries.append(entry(
            f"criterion-4/{sn}-to-{tn}/joint-compatibility",
            "chk-joint-compatibility", ok_joint))
    return entries


def criterion_5_mixed(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    cases = [("C2", cor.monads_c2, cor.comonads_c2),
             ("C3", cor.monads_c3, cor.comonads_c3)]
    for cat_name, monads, comonads in cases:
        for sn, S in sorted(monads.items()):
            for gn, G in sorted(comonads.items()):
                name = f"criterion-5/{cat_name}/{sn}-to-{gn}"
                unt = untypable_objects(S, G)
                laws = enumerate_mixed_laws(S, G, jobs=jobs)
                if unt:
                    entries.append(entry(f"{name}/untypable-yields-zero",
                                         "chk-pointwise-criterion",
                                         len(laws) == 0,
                                         witness={"untypable_at": unt[0]}))
                    continue
                lifts = enumerate_comonad_liftings(S, G, jobs=jobs)
                entries.append(entry(f"{name}/count-equality", "Thm-1705222141",
                                     len(laws) == len(lifts),
                                     witness={"laws": len(laws),
                                              "liftings": len(lifts)}))
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
                entries.append(entry(f"{name}/mixed-roundtrips",
                                     "Thm-1501140312", ok_round))
                entries.append(entry(f"{name}/mixed-compatibility",
                                     "Eq-1510081654", ok_compat))
    return entries


def criterion_6_two_adjunction_sanity(cor: FixtureCorpus) -> list:
    entries = []
    ok_em = ok_kl = ok_mates = ok_triangles = True
    for cat_name, name, m in cor.all_monads():
        em = em_category(m)
        if induced_monad(em.adj) != m:
            ok_em = False
        kl = kleisli_category(m)
        if induced_monad(kl.adj) != m:
            ok_kl = False
        for adj in (em.adj, kl.adj, identity_adjunction(m.base)):
            left = vcomp(whisker_left(adj.L, adj.unit),
                         whisker_right(adj.counit, adj.L))
            right = vcomp(whisker_right(adj.unit, adj.R),
                          whisker_left(adj.R, adj.counit))
            if (left.components != identity_nat(adj.L).components
                    or right.components != identity_nat(adj.R).components):
                ok_triangles = False
            sq_r = CommutingSquareR(adj, adj, identity_functor(adj.base),
                                    identity_functor(adj.upper))
            if mate_right(sq_r).components != identity_nat(adj.L).components:
                ok_mates = False
            sq_l = CommutingSquareL(adj, adj, identity_functor(adj.base),
                                    identity_functor(adj.upper))
            if mate_left(sq_l).components != identity_nat(adj.R).components:
                ok_mates = False
    entries.append(entry("criterion-6/induced-monad-of-algebra-adjunction",
                         "Eq-1510131206", ok_em))
    entries.append(entry("criterion-6/induced-monad-of-kleisli-adjunction",
                         "chk-kleisli-counit-identity", ok_kl))
    entries.append(entry("criterion-6/triangle-identities",
                         "law-triangle-left", ok_triangles))
    entries.append(entry("criterion-6/identity-square-mates", "chk-mate",
                         ok_mates))
    ok_co = True
    for cat_name, name, c in cor.all_comonads():
        co = em_coalgebra_category(c)
        if induced_comonad(co.adj) != c:
            ok_co = False
    entries.append(entry("criterion-6/induced-comonad-of-coalgebra-adjunction",
                         "Eq-1510131206", ok_co))
    return entries


def criterion_7_hom_isomorphism(cor: FixtureCorpus, jobs: int = 1) -> list:
    entries = []
    for label, m in (("C2-id", identity_monad(cor.c2)),
                     ("C3-c1", cor.monads_c3["c1"])):
        for e in hom_iso_roundtrip(m, jobs=jobs):
            entries.append(CheckEntry(f"criterion-7/{label}/{e.check}", e.tag,
                                      e.status, e.witness, e.detail))
    return entries


def criterion_8_two_cell_equivalence(cor: FixtureCorpus, jobs: int = 1) -> list:
    em = em_category(cor.monads_c3["c2"])
    cells = enumerate_adjr_endocells(em, jobs=jobs)
    stats = adjr_two_cell_agreement(cells)
    return [entry("criterion-8/adjr-two-cell-conditions-agree",
                  "chk-two-cell-agreement",
                  stats["checked"] > 0 and stats["agree"] == stats["checked"],
                  witness={"checked": stats["checked"],
                           "agree": stats["agree"]})]


def criteria_entries(jobs: int = 1) -> list:
    cor = corpus()
    entries = []
    entries.extend(criterion_1_fixture_enumeration(cor, jobs))
    entries.extend(criterion_2_bijection_counts(cor, jobs))
    entries.extend(criterion_3_round_trips(cor, jobs))
    entries.extend(criterion_4_joint_characterization(cor, jobs))
    entries.extend(criterion_5_mixed(cor, jobs))
    entries.extend(criterion_6_two_adjunction_sanity(cor))
    entries.extend(criterion_7_hom_isomorphism(cor, jobs))
    entries.extend(criterion_8_two_cell_equivalence(cor, jobs))
    return entries


def _serialize_entries(entries) -> str:
    return json.dumps(
        [{"check": e.check, "tag": e.tag, "status": e.status,
          "witness": e.witness, "detail": e.detail} for e in entries],
        sort_keys=True, ensure_ascii=False)


def run_selftest(jobs: int = 1, seed: int = 0) -> VerificationReport:
    entries = criteria_entries(jobs=jobs)
    solo = _serialize_entries(criteria_entries(jobs=1))
    fanned = _serialize_entries(criteria_entries(jobs=8))
    entries.append(entry("criterion-9/worker-count-determinism",
                         "chk-determinism", solo == fanned))
    return VerificationReport("selftest", [], seed, entries)
