"""Finitely presented categories, functors, and natural transformations.

Objects and morphisms are string ids. A category carries a dense, validated
composition table; every later structure (monads, adjunctions, algebra
categories) reduces its laws to lookups in such tables, which is what makes
all the theorem checks in this package decidable.

Conventions used throughout:

* ``compose(f, g)`` is diagrammatic: ``f`` first, then ``g``, i.e. g∘f.
* ``compose_functors(F, G)`` is the usual mathematical order F∘G
  (``G`` is applied first).
* ``vcomp(a, b)`` is diagrammatic like ``compose``.
* Equality of functors and transformations is pointwise, on the nose.
  Values built by different routes compare equal whenever all maps agree.

Identity morphisms may be omitted from raw descriptions; they are then
synthesized as ``id_<object>``. Composites forced by the unit laws (any
pair involving an identity) are filled in at validation time; all other
absent composites are a validation error.

All values are immutable after validation and safe to share between
threads. Construction of a single value is single-threaded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .errors import (
    CategoryValidationError,
    ComponentMistyped,
    CompositionTypeMismatch,
    EnumerationCapExceeded,
    TypeMismatch,
)
from .parallel import pmap
from .report import Violation

DEFAULT_CAP = 10_000_000

# Beyond this many composable triples, validation samples associativity
# instead of checking every triple. Fixture-sized categories stay exhaustive.
ASSOC_EXHAUSTIVE_LIMIT = 200_000
ASSOC_SAMPLE_SIZE = 1_000


@dataclass(frozen=True, order=True)
class Morphism:
    id: str
    src: str
    tgt: str


class FinCategory:
    """A finite category with an explicit, total composition table.

    Instances are built through :func:`validate_category` (or
    :func:`assemble_category` for programmatic construction); the raw
    constructor trusts already-canonical data.
    """

    __slots__ = ("objects", "morphisms", "identities",
                 "_index", "_by_id", "_hom", "_by_src", "_table", "_key")

    def __init__(self, objects, morphisms, identities, composition):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.identities = dict(identities)
        self._index = {m.id: i for i, m in enumerate(self.morphisms)}
        self._by_id = {m.id: m for m in self.morphisms}
        hom = {}
        by_src = {}
        for m in self.morphisms:
            hom.setdefault((m.src, m.tgt), []).append(m.id)
            by_src.setdefault(m.src, []).append(m.id)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._by_src = {k: tuple(v) for k, v in by_src.items()}
        n = len(self.morphisms)
        table = [[-1] * n for _ in range(n)]
        for (f, g), h in composition.items():
            table[self._index[f]][self._index[g]] = self._index[h]
        self._table = table
        self._key = None

    # -- lookups -----------------------------------------------------------

    def has_object(self, x: str) -> bool:
        return x in self.identities

    def has_morphism(self, m: str) -> bool:
        return m in self._by_id

    def morphism(self, m: str) -> Morphism:
        return self._by_id[m]

    def src(self, m: str) -> str:
        return self._by_id[m].src

    def tgt(self, m: str) -> str:
        return self._by_id[m].tgt

    def identity(self, x: str) -> str:
        return self.identities[x]

    def is_identity(self, m: str) -> bool:
        mm = self._by_id[m]
        return self.identities.get(mm.src) == m

    def hom(self, a: str, b: str) -> tuple:
        return self._hom.get((a, b), ())

    def out_of(self, a: str) -> tuple:
        return self._by_src.get(a, ())

    def composable(self, first: str, then: str) -> bool:
        return self._by_id[first].tgt == self._by_id[then].src

    def compose(self, first: str, then: str) -> str:
        """Return then ∘ first (diagrammatic order)."""
        i = self._index.get(first)
        j = self._index.get(then)
        if i is None or j is None:
            raise CompositionTypeMismatch(f"unknown morphism in ({first}, {then})")
        k = self._table[i][j]
        if k < 0:
            raise CompositionTypeMismatch(f"{then}∘{first} is not defined")
        return self.morphisms[k].id

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self._by_src.get(f.tgt, ()):
                yield f.id, g

    def composition_items(self):
        """Yield (first, then, equals) triples in canonical order."""
        for f, g in self.composable_pairs():
            yield f, g, self.compose(f, g)

    def is_thin(self) -> bool:
        return all(len(v) <= 1 for v in self._hom.values())

    def le(self, a: str, b: str) -> bool:
        """hom(a, b) is inhabited; the order relation of a thin category."""
        return bool(self.hom(a, b))

    # -- equality ----------------------------------------------------------

    def canonical_key(self):
        if self._key is None:
            comp = tuple(sorted(self.composition_items()))
            self._key = (self.objects, self.morphisms,
                         tuple(sorted(self.identities.items())), comp)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return (f"FinCategory({len(self.objects)} objects, "
                f"{len(self.morphisms)} morphisms)")


def validate_category(raw: dict, *, seed: int = 0) -> FinCategory:
    """Validate a raw category description and return the canonical value.

    ``raw`` follows the JSON file format: ``objects``, ``morphisms``,
    optional ``identities``, and a ``composition`` list of entries
    ``{"first", "then", "equals"}`` meaning equals = then ∘ first.
    Raises :class:`CategoryValidationError` listing every violated axiom
    instance otherwise. Validating the raw form of a validated category
    yields an equal value.
    """
    violations = []

    objects = list(raw.get("objects", ()))
    seen_obj = set()
    for x in objects:
        if not isinstance(x, str):
            violations.append(Violation("DanglingId", "law-category-structure",
                                        where=repr(x),
                                        detail="object ids must be strings"))
        elif x in seen_obj:
            violations.append(Violation("DuplicateId", "law-category-structure",
                                        where=x, detail="duplicate object id"))
        else:
            seen_obj.add(x)

    morphs = []
    by_id = {}
    for item in raw.get("morphisms", ()):
        if isinstance(item, Morphism):
            m = item
        else:
            try:
                m = Morphism(str(item["id"]), str(item["src"]), str(item["tgt"]))
            except (KeyError, TypeError):
                violations.append(Violation("DanglingId", "law-category-structure",
                                            where=repr(item),
                                            detail="morphism needs id/src/tgt"))
                continue
        if m.id in by_id:
            violations.append(Violation("DuplicateId", "law-category-structure",
                                        where=m.id,
                                        detail="duplicate morphism id"))
            continue
        if m.src not in seen_obj or m.tgt not in seen_obj:
            violations.append(Violation("DanglingId", "law-category-structure",
                                        where=m.id,
                                        detail="src or tgt is not a declared object"))
            continue
        by_id[m.id] = m
        morphs.append(m)

    if violations:
        raise CategoryValidationError(violations)

    identities = {}
    raw_ids = raw.get("identities")
    if raw_ids is None:
        for x in objects:
            name = f"id_{x}"
            m = by_id.get(name)
            if m is not None and (m.src, m.tgt) == (x, x):
                identities[x] = name
            elif m is not None:
                violations.append(Violation(
                    "DanglingId", "law-category-structure", where=name,
                    detail="cannot synthesize identity: id taken by a non-endomorphism"))
            else:
                m = Morphism(name, x, x)
                by_id[name] = m
                morphs.append(m)
                identities[x] = name
    else:
        for x in objects:
            name = raw_ids.get(x)
            if name is None:
                violations.append(Violation("MissingIdentity", "law-category-unit",
                                            where=x))
            elif name not in by_id:
                violations.append(Violation("DanglingId", "law-category-structure",
                                            where=name,
                                            detail=f"identity of {x} not declared"))
            elif (by_id[name].src, by_id[name].tgt) != (x, x):
                violations.append(Violation("MistypedIdentity", "law-category-unit",
                                            where=x, lhs=name,
                                            rhs=f"hom({x},{x})"))
            else:
                identities[x] = name
        for key in raw_ids:
            if key not in seen_obj:
                violations.append(Violation("DanglingId", "law-category-structure",
                                            where=str(key),
                                            detail="identity key is not an object"))

    if violations:
        raise CategoryValidationError(violations)

    comp = {}
    for item in raw.get("composition", ()):
        try:
            f, g, h = str(item["first"]), str(item["then"]), str(item["equals"])
        except (KeyError, TypeError):
            violations.append(Violation("MalformedEntry", "law-category-composition",
                                        where=repr(item)))
            continue
        if f not in by_id or g not in by_id or h not in by_id:
            violations.append(Violation("DanglingId", "law-category-composition",
                                        where=f"{g}∘{f}"))
            continue
        if by_id[f].tgt != by_id[g].src:
            violations.append(Violation("NotComposable", "law-category-composition",
                                        where=f"{g}∘{f}"))
            continue
        if (f, g) in comp and comp[(f, g)] != h:
            violations.append(Violation("ConflictingComposite",
                                        "law-category-composition",
                                        where=f"{g}∘{f}", lhs=comp[(f, g)], rhs=h))
            continue
        comp[(f, g)] = h
        want = (by_id[f].src, by_id[g].tgt)
        if (by_id[h].src, by_id[h].tgt) != want:
            violations.append(Violation("CompositeTypeMismatch",
                                        "law-category-composition",
                                        where=f"{g}∘{f}", lhs=h,
                                        rhs=f"hom{want}"))

    # Unit-law-forced composites may be omitted in input files.
    for m in morphs:
        comp.setdefault((identities[m.src], m.id), m.id)
        comp.setdefault((m.id, identities[m.tgt]), m.id)

    by_src = {}
    for m in morphs:
        by_src.setdefault(m.src, []).append(m)

    for f in morphs:
        for g in by_src.get(f.tgt, ()):
            if (f.id, g.id) not in comp:
                violations.append(Violation("MissingComposite",
                                            "law-category-composition",
                                            where=f"{g.id}∘{f.id}"))

    for m in morphs:
        left = comp.get((identities[m.src], m.id))
        if left is not None and left != m.id:
            violations.append(Violation("UnitLawViolation", "law-category-unit",
                                        where=m.id, lhs=left, rhs=m.id))
        right = comp.get((m.id, identities[m.tgt]))
        if right is not None and right != m.id:
            violations.append(Violation("UnitLawViolation", "law-category-unit",
                                        where=m.id, lhs=right, rhs=m.id))

    def assoc_instance(f, g, h):
        fg = comp.get((f.id, g.id))
        gh = comp.get((g.id, h.id))
        if fg is None or gh is None:
            return None
        left = comp.get((fg, h.id))
        right = comp.get((f.id, gh))
        if left is None or right is None:
            return None
        if left != right:
            violations.append(Violation("NonAssociative", "law-category-assoc",
                                        where=f"({f.id},{g.id},{h.id})",
                                        lhs=left, rhs=right))
        return True

    total_triples = 0
    for f in morphs:
        for g in by_src.get(f.tgt, ()):
            total_triples += len(by_src.get(g.tgt, ()))

    if total_triples <= ASSOC_EXHAUSTIVE_LIMIT:
        for f in morphs:
            for g in by_src.get(f.tgt, ()):
                for h in by_src.get(g.tgt, ()):
                    assoc_instance(f, g, h)
    else:
        rng = random.Random(seed)
        checked = attempts = 0
        while checked < ASSOC_SAMPLE_SIZE and attempts < 50 * ASSOC_SAMPLE_SIZE:
            attempts += 1
            f = rng.choice(morphs)
            gs = by_src.get(f.tgt, ())
            if not gs:
                continue
            g = rng.choice(gs)
            hs = by_src.get(g.tgt, ())
            if not hs:
                continue
            if assoc_instance(f, g, rng.choice(hs)):
                checked += 1

    if violations:
        raise CategoryValidationError(violations)

    objects_sorted = tuple(sorted(objects))
    morphs_sorted = tuple(sorted(morphs, key=lambda m: m.id))
    return FinCategory(objects_sorted, morphs_sorted, identities, comp)


def assemble_category(objects, morphisms, identities, compose_fn, *,
                      seed: int = 0) -> FinCategory:
    """Build and fully validate a category from a composition rule.

    ``compose_fn(f, g)`` must return the id of g∘f for every composable
    pair of :class:`Morphism` values. Constructed categories go through the
    same validation as file input, so construction bugs fail loudly.
    """
    by_src = {}
    for m in morphisms:
        by_src.setdefault(m.src, []).append(m)
    entries = []
    for f in morphisms:
        for g in by_src.get(f.tgt, ()):
            entries.append({"first": f.id, "then": g.id,
                            "equals": compose_fn(f, g)})
    raw = {
        "objects": list(objects),
        "morphisms": list(morphisms),
        "identities": dict(identities),
        "composition": entries,
    }
    return validate_category(raw, seed=seed)


def opposite(cat: FinCategory) -> FinCategory:
    """The category with the same cells and all arrows reversed."""
    morphs = [Morphism(m.id, m.tgt, m.src) for m in cat.morphisms]
    by_id = {m.id: m for m in morphs}

    def comp(f, g):
        # g∘f in the opposite is f∘g in the original
        return cat.compose(g.id, f.id)

    del by_id
    return assemble_category(cat.objects, morphs, cat.identities, comp)


# ---------------------------------------------------------------------------
# Functors


class Functor:
    """A functor between finite categories, as explicit total maps."""

    __slots__ = ("source", "target", "object_map", "morphism_map", "_key")

    def __init__(self, source: FinCategory, target: FinCategory,
                 object_map: dict, morphism_map: dict):
        for x in source.objects:
            y = object_map.get(x)
            if y is None or not target.has_object(y):
                raise ComponentMistyped(f"object {x!r} has no valid image")
        for m in source.morphisms:
            n = morphism_map.get(m.id)
            if n is None or not target.has_morphism(n):
                raise ComponentMistyped(f"morphism {m.id!r} has no valid image")
        self.source = source
        self.target = target
        self.object_map = {x: object_map[x] for x in source.objects}
        self.morphism_map = {m.id: morphism_map[m.id] for m in source.morphisms}
        self._key = None

    def ob(self, x: str) -> str:
        return self.object_map[x]

    def mor(self, m: str) -> str:
        return self.morphism_map[m]

    def canonical_key(self):
        if self._key is None:
            self._key = (tuple(sorted(self.object_map.items())),
                         tuple(sorted(self.morphism_map.items())))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.canonical_key() == other.canonical_key())

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"Functor({self.object_map})"


def check_functor(F: Functor) -> list:
    """Report every functor-law violation; empty report means lawful."""
    out = []
    src, tgt = F.source, F.target
    for m in src.morphisms:
        n = tgt.morphism(F.mor(m.id))
        if (n.src, n.tgt) != (F.ob(m.src), F.ob(m.tgt)):
            out.append(Violation("SourceTargetMismatch", "law-functor",
                                 where=m.id, lhs=n.id,
                                 rhs=f"hom({F.ob(m.src)},{F.ob(m.tgt)})"))
    for x in src.objects:
        if F.mor(src.identity(x)) != tgt.identity(F.ob(x)):
            out.append(Violation("IdentityNotPreserved", "law-functor",
                                 where=x, lhs=F.mor(src.identity(x)),
                                 rhs=tgt.identity(F.ob(x))))
    for f, g in src.composable_pairs():
        fi, gi = F.mor(f), F.mor(g)
        if tgt.morphism(fi).tgt != tgt.morphism(gi).src:
            continue  # already reported as a source/target mismatch
        if F.mor(src.compose(f, g)) != tgt.compose(fi, gi):
            out.append(Violation("CompositionNotPreserved", "law-functor",
                                 where=f"({f},{g})",
                                 lhs=F.mor(src.compose(f, g)),
                                 rhs=tgt.compose(fi, gi)))
    return out


def identity_functor(cat: FinCategory) -> Functor:
    return Functor(cat, cat, {x: x for x in cat.objects},
                   {m.id: m.id for m in cat.morphisms})


def compose_functors(F: Functor, G: Functor) -> Functor:
    """F∘G: apply G first, then F."""
    if G.target != F.source:
        raise CompositionTypeMismatch("functor composition: target/source differ")
    return Functor(G.source, F.target,
                   {x: F.ob(G.ob(x)) for x in G.source.objects},
                   {m.id: F.mor(G.mor(m.id)) for m in G.source.morphisms})


# ---------------------------------------------------------------------------
# Natural transformations


class NatTrans:
    """A transformation between parallel functors, one component per object."""

    __slots__ = ("source", "target", "components", "_key")

    def __init__(self, source: Functor, target: Functor, components: dict):
        if source.source != target.source or source.target != target.target:
            raise TypeMismatch("transformation between non-parallel functors")
        cod = source.target
        for x in source.source.objects:
            c = components.get(x)
            if c is None or not cod.has_morphism(c):
                raise ComponentMistyped(f"component at {x!r} missing")
            m = cod.morphism(c)
            if (m.src, m.tgt) != (source.ob(x), target.ob(x)):
                raise ComponentMistyped(
                    f"component at {x!r} must lie in "
                    f"hom({source.ob(x)},{target.ob(x)}), got {c!r}")
        self.source = source
        self.target = target
        self.components = {x: components[x] for x in source.source.objects}
        self._key = None

    def at(self, x: str) -> str:
        return self.components[x]

    @property
    def base(self) -> FinCategory:
        return self.source.source

    @property
    def cod(self) -> FinCategory:
        return self.source.target

    def canonical_key(self):
        if self._key is None:
            self._key = tuple(sorted(self.components.items()))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        return f"NatTrans({self.components})"


def check_naturality(alpha: NatTrans) -> list:
    """Report every failing naturality square of the transformation."""
    out = []
    F, G = alpha.source, alpha.target
    D = alpha.cod
    for m in alpha.base.morphisms:
        lhs = D.compose(alpha.at(m.src), G.mor(m.id))
        rhs = D.compose(F.mor(m.id), alpha.at(m.tgt))
        if lhs != rhs:
            out.append(Violation("NaturalityViolation", "law-naturality",
                                 where=m.id, lhs=lhs, rhs=rhs))
    return out


def identity_nat(F: Functor) -> NatTrans:
    return NatTrans(F, F, {x: F.target.identity(F.ob(x))
                           for x in F.source.objects})


def vcomp(a: NatTrans, b: NatTrans) -> NatTrans:
    """Vertical composite, diagrammatic: ``a`` first, then ``b``."""
    if a.target != b.source:
        raise TypeMismatch("vertical composition: middle functors differ")
    D = a.cod
    return NatTrans(a.source, b.target,
                    {x: D.compose(a.at(x), b.at(x))
                     for x in a.base.objects})


def whisker_left(F: Functor, alpha: NatTrans) -> NatTrans:
    """F α, the functor applied after: components F(α_X)."""
    if F.source != alpha.cod:
        raise TypeMismatch("left whiskering: categories differ")
    return NatTrans(compose_functors(F, alpha.source),
                    compose_functors(F, alpha.target),
                    {x: F.mor(alpha.at(x)) for x in alpha.base.objects})


def whisker_right(alpha: NatTrans, F: Functor) -> NatTrans:
    """α F, the functor applied before: components α_{F X}."""
    if F.target != alpha.base:
        raise TypeMismatch("right whiskering: categories differ")
    return NatTrans(compose_functors(alpha.source, F),
                    compose_functors(alpha.target, F),
                    {x: alpha.at(F.ob(x)) for x in F.source.objects})


def hcomp(alpha: NatTrans, beta: NatTrans) -> NatTrans:
    """Horizontal composite of α: F→G over A→B and β: H→K over B→C.

    Returns H∘F → K∘G; by the interchange law the two whiskering orders
    agree, and tests check this exhaustively.
    """
    return vcomp(whisker_right(beta, alpha.source),
                 whisker_left(beta.target, alpha))


def equal(x, y) -> bool:
    """Pointwise equality of functors or transformations.

    This is the notion of "the same" used by every round-trip theorem
    check. Raises :class:`TypeMismatch` when declared sources/targets
    disagree, so accidental comparisons across worlds fail loudly.
    """
    if isinstance(x, Functor) and isinstance(y, Functor):
        if x.source != y.source or x.target != y.target:
            raise TypeMismatch("functors with different source/target")
        return x.canonical_key() == y.canonical_key()
    if isinstance(x, NatTrans) and isinstance(y, NatTrans):
        if (x.source.source != y.source.source
                or x.source.target != y.source.target):
            raise TypeMismatch("transformations over different categories")
        if x.source != y.source or x.target != y.target:
            raise TypeMismatch("transformations between different functors")
        return x.components == y.components
    raise TypeMismatch(f"cannot compare {type(x).__name__} with {type(y).__name__}")


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_nat_trans(F: Functor, G: Functor, cap: int = DEFAULT_CAP) -> list:
    """All natural transformations F → G, canonically ordered."""
    if F.source != G.source or F.target != G.target:
        raise TypeMismatch("transformation between non-parallel functors")
    objs = F.source.objects
    cod = F.target
    choices = [cod.hom(F.ob(x), G.ob(x)) for x in objs]
    estimate = 1
    for c in choices:
        estimate *= len(c)
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)
    out = []
    for combo in product(*choices):
        alpha = NatTrans(F, G, dict(zip(objs, combo)))
        if not check_naturality(alpha):
            out.append(alpha)
    return out


def enumerate_functors(source: FinCategory, target: FinCategory,
                       cap: int = DEFAULT_CAP, jobs: int = 1) -> list:
    """All functors source → target, canonically ordered."""
    objs = source.objects
    tobjs = target.objects
    if not tobjs and objs:
        return []

    n_objmaps = max(1, len(tobjs)) ** len(objs) if tobjs else 1
    if n_objmaps > cap:
        raise EnumerationCapExceeded(n_objmaps, cap)

    obj_maps = [dict(zip(objs, combo))
                for combo in product(tobjs, repeat=len(objs))]

    estimate = 0
    per_map_choices = []
    for omap in obj_maps:
        size = 1
        choices = []
        for m in source.morphisms:
            h = target.hom(omap[m.src], omap[m.tgt])
            choices.append((m.id, h))
            size *= len(h)
            if size == 0:
                break
        per_map_choices.append((omap, choices, size))
        estimate += size
        if estimate > cap:
            raise EnumerationCapExceeded(estimate, cap)

    def expand(item):
        omap, choices, size = item
        if size == 0:
            return []
        found = []
        ids = [c[0] for c in choices]
        for combo in product(*(c[1] for c in choices)):
            F = Functor(source, target, omap, dict(zip(ids, combo)))
            if not check_functor(F):
                found.append(F)
        return found

    groups = pmap(expand, per_map_choices, jobs=jobs)
    out = [F for group in groups for F in group]
    out.sort(key=lambda F: F.canonical_key())
    return out
