"""Category/functor/transformation layer: validation, composition algebra,
whiskering, and the interchange law."""

import pytest

from finmonad.errors import (
    CategoryValidationError,
    ComponentMistyped,
    CompositionTypeMismatch,
    TypeMismatch,
)
from finmonad.fincat import (
    Functor,
    NatTrans,
    check_functor,
    check_naturality,
    compose_functors,
    enumerate_functors,
    enumerate_nat_trans,
    equal,
    hcomp,
    identity_functor,
    identity_nat,
    opposite,
    validate_category,
    vcomp,
    whisker_left,
    whisker_right,
)
from finmonad.fixtures import thin_nat
from finmonad.jsonio import category_to_raw


def _kinds(excinfo):
    return {v.kind for v in excinfo.value.violations}


# -- validate_category --------------------------------------------------------


def test_two_chain_with_explicit_identities_is_valid():
    cat = validate_category({
        "objects": ["a", "b"],
        "morphisms": [
            {"id": "id_a", "src": "a", "tgt": "a"},
            {"id": "id_b", "src": "b", "tgt": "b"},
            {"id": "f", "src": "a", "tgt": "b"},
        ],
        "identities": {"a": "id_a", "b": "id_b"},
        "composition": [
            {"first": "id_a", "then": "f", "equals": "f"},
            {"first": "f", "then": "id_b", "equals": "f"},
        ],
    })
    assert cat.objects == ("a", "b")
    assert cat.compose("id_a", "f") == "f"


def test_unit_law_violation_is_reported():
    # composition entry claims f∘id_a = id_a
    with pytest.raises(CategoryValidationError) as excinfo:
        validate_category({
            "objects": ["a", "b"],
            "morphisms": [
                {"id": "id_a", "src": "a", "tgt": "a"},
                {"id": "id_b", "src": "b", "tgt": "b"},
                {"id": "f", "src": "a", "tgt": "b"},
            ],
            "identities": {"a": "id_a", "b": "id_b"},
            "composition": [
                {"first": "id_a", "then": "f", "equals": "id_a"},
                {"first": "f", "then": "id_b", "equals": "f"},
            ],
        })
    assert "UnitLawViolation" in _kinds(excinfo)


def test_three_chain_is_valid(cor):
    assert cor.c3.compose("f01", "f12") == "f02"
    assert cor.c3.identity("1") == "id_1"
    assert cor.c3.is_thin()


def test_missing_composite_is_reported():
    with pytest.raises(CategoryValidationError) as excinfo:
        validate_category({
            "objects": ["0", "1", "2"],
            "morphisms": [
                {"id": "f01", "src": "0", "tgt": "1"},
                {"id": "f12", "src": "1", "tgt": "2"},
                {"id": "f02", "src": "0", "tgt": "2"},
            ],
            "composition": [],
        })
    assert "MissingComposite" in _kinds(excinfo)


def test_non_associative_table_is_reported():
    # one object, three distinct endomorphisms with a deliberately skewed table
    raw = {
        "objects": ["x"],
        "morphisms": [
            {"id": "e", "src": "x", "tgt": "x"},
            {"id": "p", "src": "x", "tgt": "x"},
            {"id": "q", "src": "x", "tgt": "x"},
        ],
        "identities": {"x": "e"},
        "composition": [
            {"first": "p", "then": "p", "equals": "q"},
            {"first": "p", "then": "q", "equals": "p"},
            {"first": "q", "then": "p", "equals": "q"},
            {"first": "q", "then": "q", "equals": "q"},
        ],
    }
    with pytest.raises(CategoryValidationError) as excinfo:
        validate_category(raw)
    assert "NonAssociative" in _kinds(excinfo)


def test_dangling_ids_are_reported():
    with pytest.raises(CategoryValidationError) as excinfo:
        validate_category({
            "objects": ["a"],
            "morphisms": [{"id": "f", "src": "a", "tgt": "zzz"}],
        })
    assert "DanglingId" in _kinds(excinfo)


def test_validate_is_idempotent(cor):
    for cat in (cor.c2, cor.c3, cor.m_z2, cor.one, cor.empty):
        again = validate_category(category_to_raw(cat))
        assert again == cat


def test_empty_category_is_valid(cor):
    assert cor.empty.objects == ()
    assert cor.empty.morphisms == ()


def test_composition_of_non_composable_pair_raises(cor):
    with pytest.raises(CompositionTypeMismatch):
        cor.c3.compose("f12", "f01")  # wrong order: f12 first needs tgt 2 = src


def test_opposite_involution(cor):
    for cat in (cor.c2, cor.c3, cor.m_z2):
        assert opposite(opposite(cat)) == cat
    assert opposite(cor.c3).hom("2", "0") == ("f02",)


# -- functors ------------------------------------------------------------------


def test_identity_functor_is_lawful(cor):
    assert check_functor(identity_functor(cor.c3)) == []


def test_non_monotone_object_map_reports_mismatch(cor):
    # a↦b, b↦a cannot send f anywhere type-correct
    F = Functor(cor.c2, cor.c2, {"a": "b", "b": "a"},
                {"f": "id_a", "id_a": "id_b", "id_b": "id_a"})
    kinds = {v.kind for v in check_functor(F)}
    assert "SourceTargetMismatch" in kinds


def test_functor_with_dangling_image_raises(cor):
    with pytest.raises(ComponentMistyped):
        Functor(cor.c2, cor.c2, {"a": "a", "b": "b"}, {"f": "nope",
                                                       "id_a": "id_a",
                                                       "id_b": "id_b"})


def test_compose_functors_object_map_matches_pointwise_oracle(cor):
    c1 = cor.monads_c3["c1"].S
    c2 = cor.monads_c3["c2"].S
    composed = compose_functors(c2, c1)
    oracle = {x: c2.object_map[c1.object_map[x]] for x in cor.c3.objects}
    assert composed.object_map == oracle
    assert composed.object_map == {"0": "1", "1": "2", "2": "2"}


def test_functor_equality_is_extensional(cor):
    Id = identity_functor(cor.c3)
    assert compose_functors(Id, Id) == Id
    assert equal(compose_functors(Id, Id), Id)
    c1 = cor.monads_c3["c1"].S
    assert Id != c1  # object maps differ at 1
    assert not equal(Id, c1)


def test_equal_raises_on_type_mismatch(cor):
    Id2 = identity_functor(cor.c2)
    Id3 = identity_functor(cor.c3)
    with pytest.raises(TypeMismatch):
        equal(Id2, Id3)


# -- natural transformations ----------------------------------------------------


def test_identity_components_between_equal_functors_are_natural(cor):
    c1 = cor.monads_c3["c1"].S
    alpha = identity_nat(c1)
    assert check_naturality(alpha) == []


def test_component_outside_hom_raises(cor):
    Id = identity_functor(cor.c3)
    with pytest.raises(ComponentMistyped):
        NatTrans(Id, Id, {"0": "f01", "1": "id_1", "2": "id_2"})


def test_extensional_equality_of_transformations_built_differently(cor):
    c1 = cor.monads_c3["c1"].S
    alpha = identity_nat(c1)
    again = vcomp(alpha, alpha)
    assert equal(alpha, again)


def test_vcomp_unit_laws(cor):
    c1 = cor.monads_c3["c1"].S
    c3f = cor.monads_c3["c3"].S
    alpha = thin_nat(c1, c3f)
    assert vcomp(identity_nat(c1), alpha) == alpha
    assert vcomp(alpha, identity_nat(c3f)) == alpha


def test_whisker_by_identity_functor_is_identity(cor):
    c1 = cor.monads_c3["c1"].S
    c3f = cor.monads_c3["c3"].S
    alpha = thin_nat(c1, c3f)
    Id = identity_functor(cor.c3)
    assert whisker_left(Id, alpha).components == alpha.components
    assert whisker_right(alpha, Id).components == alpha.components


def test_interchange_law_exhaustive(cor):
    # alpha: c1 -> c3 and beta: c2 -> c3 (pointwise below, both typable)
    c1 = cor.monads_c3["c1"].S
    c2 = cor.monads_c3["c2"].S
    c3f = cor.monads_c3["c3"].S
    for F, G in [(c1, c3f), (c2, c3f), (c1, c1)]:
        alpha = thin_nat(F, G)
        for H, K in [(c2, c3f), (c1, c3f), (c3f, c3f)]:
            beta = thin_nat(H, K)
            one = vcomp(whisker_right(beta, F), whisker_left(K, alpha))
            other = vcomp(whisker_left(H, alpha), whisker_right(beta, G))
            assert one.components == other.components
            assert hcomp(alpha, beta).components == one.components


def test_whiskering_against_z2_twist(cor):
    # non-thin sanity: whiskering along the identity functor of M(Z2)
    Id = identity_functor(cor.m_z2)
    twist = NatTrans(Id, Id, {"g": "s"})
    assert check_naturality(twist) == []
    assert vcomp(twist, twist).components == {"g": "e"}


# -- enumeration -----------------------------------------------------------------


def test_enumerate_functors_counts(cor):
    # monotone self-maps of a chain: C(2n-1, n) of them
    assert len(enumerate_functors(cor.c2, cor.c2)) == 3
    assert len(enumerate_functors(cor.c3, cor.c3)) == 10
    # monoid endomorphisms of Z2: identity and collapse
    assert len(enumerate_functors(cor.m_z2, cor.m_z2)) == 2
    # empty cases
    assert len(enumerate_functors(cor.empty, cor.c3)) == 1
    assert len(enumerate_functors(cor.c3, cor.empty)) == 0


def test_enumerate_functors_matches_monotone_oracle(cor):
    found = {tuple(sorted(F.object_map.items()))
             for F in enumerate_functors(cor.c3, cor.c3)}
    objs = cor.c3.objects
    oracle = set()
    from itertools import product
    for combo in product(objs, repeat=3):
        f = dict(zip(objs, combo))
        if all(not cor.c3.le(x, y) or cor.c3.le(f[x], f[y])
               for x in objs for y in objs):
            oracle.add(tuple(sorted(f.items())))
    assert found == oracle


def test_enumerate_nat_trans_thin(cor):
    c1 = cor.monads_c3["c1"].S
    c3f = cor.monads_c3["c3"].S
    assert len(enumerate_nat_trans(c1, c3f)) == 1
    assert len(enumerate_nat_trans(c3f, c1)) == 0


def test_enumerate_functors_deterministic_across_jobs(cor):
    one = enumerate_functors(cor.c3, cor.c3, jobs=1)
    many = enumerate_functors(cor.c3, cor.c3, jobs=8)
    assert [F.canonical_key() for F in one] == [F.canonical_key() for F in many]


def _cyclic_monoid_raw(n):
    ids = [f"r{i:02d}" for i in range(n)]
    comp = [{"first": ids[i], "then": ids[j], "equals": ids[(i + j) % n]}
            for i in range(n) for j in range(n)]
    return {"objects": ["x"],
            "morphisms": [{"id": m, "src": "x", "tgt": "x"} for m in ids],
            "identities": {"x": ids[0]},
            "composition": comp}


def test_large_monoid_takes_the_sampled_associativity_path():
    # 60 endomorphisms produce 216000 composable triples, above the
    # exhaustive limit, so validation samples associativity
    from finmonad.fincat import ASSOC_EXHAUSTIVE_LIMIT

    n = 60
    assert n ** 3 > ASSOC_EXHAUSTIVE_LIMIT
    cat = validate_category(_cyclic_monoid_raw(n), seed=7)
    assert len(cat.morphisms) == n
    assert cat.compose("r01", "r59") == "r00"
