"""Property tests over randomly generated finite posets.

A poset is generated as the reflexive-transitive closure of a random
relation on up to four elements, then realized as a thin category. These
exercise validation, duality, and the closure-operator characterization
away from the handpicked fixtures.
"""

from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from finmonad.fincat import opposite, validate_category
from finmonad.jsonio import category_to_raw
from finmonad.monad import enumerate_comonads, enumerate_monads


@st.composite
def posets(draw):
    n = draw(st.integers(min_value=0, max_value=4))
    labels = [f"x{i}" for i in range(n)]
    below = {(labels[i], labels[j]): draw(st.booleans())
             for i in range(n) for j in range(i + 1, n)}
    # transitive closure over the index order keeps the relation a partial
    # order (antisymmetry is free: edges only point up the index order)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    a, b, c = labels[i], labels[j], labels[k]
                    if below.get((a, b)) and below.get((b, c)) \
                            and not below.get((a, c)):
                        below[(a, c)] = True
                        changed = True
    le = {(a, b) for (a, b), v in below.items() if v}
    morphisms = [{"id": f"le_{a}_{b}", "src": a, "tgt": b} for a, b in sorted(le)]
    comp = []
    for a, b in sorted(le):
        for b2, c in sorted(le):
            if b2 == b:
                comp.append({"first": f"le_{a}_{b}", "then": f"le_{b}_{c}",
                             "equals": f"le_{a}_{c}"})
    return validate_category({"objects": labels, "morphisms": morphisms,
                              "composition": comp})


def closure_count(cat):
    objs = cat.objects
    count = 0
    for combo in product(objs, repeat=len(objs)):
        f = dict(zip(objs, combo))
        if (all(cat.le(x, f[x]) for x in objs)
                and all(f[f[x]] == f[x] for x in objs)
                and all(not cat.le(x, y) or cat.le(f[x], f[y])
                        for x in objs for y in objs)):
            count += 1
    return count


@settings(max_examples=60, deadline=None)
@given(posets())
def test_generated_posets_validate_and_revalidate(cat):
    again = validate_category(category_to_raw(cat))
    assert again == cat


@settings(max_examples=60, deadline=None)
@given(posets())
def test_opposite_is_an_involution(cat):
    assert opposite(opposite(cat)) == cat


@settings(max_examples=25, deadline=None)
@given(posets())
def test_monad_count_equals_closure_operator_count(cat):
    monads = enumerate_monads(cat)
    assert len(monads) == closure_count(cat)
    for m in monads:
        f = m.S.object_map
        assert all(cat.le(x, f[x]) for x in cat.objects)
        assert all(f[f[x]] == f[x] for x in cat.objects)


@settings(max_examples=25, deadline=None)
@given(posets())
def test_comonad_count_matches_opposite_monad_count(cat):
    assert len(enumerate_comonads(cat)) == len(enumerate_monads(opposite(cat)))
